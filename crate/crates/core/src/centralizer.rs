//! Tameness evidence for the centralizer of a subgroup `H₀ ≤ H` when `H`
//! permutes a basis of `Q` regularly, shared by both example families.
//!
//! The restricted set is the image of `Σ^c` under restriction to
//! `Q₀ = C_Q(H₀)`. It is contained in the complement for the centralizer
//! module, so it is reported as a lower-bound set.

use serde::Serialize;

use crate::bounds::centralizer_fp_bound;
use crate::charsphere::{
    certify_tame_degree, restrict_raw, sigma_restrict, SigmaSet, TameCertificate, TameDegree, ZeroSumWitness,
};
use crate::error::{Error, Result};
use crate::lattice::{fixed_sublattice, LatticeAction};

/// Whether a verdict is proved by the artifact's own checks or rests on a
/// conjecture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Theorem,
    Conjectural,
}

/// A finiteness verdict with the checked fact it reduces to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub claim: String,
    pub status: Status,
    pub evidence: String,
    pub citation: String,
}

impl Verdict {
    pub fn theorem(claim: String, evidence: String, citation: &str) -> Self {
        Verdict { claim, status: Status::Theorem, evidence, citation: citation.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralizerReport {
    /// `[H : H₀]`, which is also the rank of `Q₀`.
    pub d: usize,
    pub subgroup_order: usize,
    /// Basis vectors of `Q₀` in the coordinates of `Q`.
    pub q0_basis: Vec<Vec<i64>>,
    /// Values of each character of `Σ^c` on the `Q₀` basis.
    pub raw_restricted: Vec<Vec<i64>>,
    pub restricted_sigma: SigmaSet,
    /// The restricted set is a subset of the centralizer complement.
    pub restricted_is_lower_bound: bool,
    pub restricted_tame_degree: TameDegree,
    /// `⌊n / |H₀|⌋`.
    pub fp_lower_bound: usize,
    pub lower_certificate: TameCertificate,
    pub upper_witness: ZeroSumWitness,
    pub verdicts: Vec<Verdict>,
}

impl CentralizerReport {
    /// Independent re-check of every witness and count in the report.
    pub fn verify(&self) -> bool {
        let d = self.d;
        self.q0_basis.len() == d
            && self.restricted_sigma.rank() == d
            && self.restricted_sigma.len() == d + 1
            && self.restricted_tame_degree == TameDegree::Finite(d)
            && self.fp_lower_bound == d
            && self.lower_certificate.m == d
            && self.lower_certificate.verify(&self.restricted_sigma)
            && self.upper_witness.len() == d + 1
            && self.upper_witness.verify()
            && self.upper_witness.rays().all(|r| self.restricted_sigma.contains(r))
    }
}

/// Verdicts for a group whose complement has `n + 1` rays and tame degree
/// `n`. The passage from tameness to finiteness is the instance of the
/// FP_m-Conjecture established in `citation`.
pub fn group_verdicts(n: usize, citation: &str) -> Vec<Verdict> {
    vec![
        Verdict::theorem(
            format!("G is of type FP_{n}"),
            format!(
                "Σ^c has {} rays and is {n}-tame (certificate); \
                 tameness implies FP_{n} by the FP_m-Conjecture instance",
                n + 1
            ),
            citation,
        ),
        Verdict::theorem(
            format!("G is not of type FP_{}", n + 1),
            format!(
                "all {} rays have a vanishing positive combination (witness); \
                 not {}-tame implies not FP_{} by the same instance",
                n + 1,
                n + 1,
                n + 1
            ),
            citation,
        ),
    ]
}

/// Builds the report for `H₀` acting on `Q = ℤ^n` where `sigma` is the
/// complement for `Q`. `citation` names the instance of the
/// FP_m-Conjecture that turns tameness into finiteness.
pub fn centralizer_report(
    n: usize,
    subgroup: &LatticeAction,
    sigma: &SigmaSet,
    citation: &str,
) -> Result<CentralizerReport> {
    if subgroup.rank() != n || sigma.rank() != n {
        return Err(Error::invalid("subgroup, Σ-set and Q must share the same rank"));
    }
    let q0_basis = fixed_sublattice(subgroup)?;
    let d = q0_basis.len();
    let h0 = subgroup.order();
    if d * h0 != n {
        return Err(Error::violation(format!(
            "rank(Q0) · |H0| = {d} · {h0} ≠ {n}; the action is not a regular permutation action"
        )));
    }
    let raw_restricted = restrict_raw(sigma, &q0_basis);
    let restricted_sigma = sigma_restrict(sigma, &q0_basis)?;
    let (verdict, lower_certificate) = certify_tame_degree(&restricted_sigma, d)
        .ok_or_else(|| Error::violation(format!("restricted set does not have tame degree {d}")))?;
    let upper_witness = verdict.witness.clone().expect("certified degree carries a witness");
    let fp_lower_bound = centralizer_fp_bound(n, h0)?;
    let verdicts = vec![
        Verdict::theorem(
            format!("C_G(H0) is of type FP_{d}"),
            format!(
                "G is FP_{n} and |H0| = {h0}, so the centralizer bound gives FP_{fp_lower_bound}; \
                 the restricted characters are {d}-tame (certificate)"
            ),
            citation,
        ),
        Verdict::theorem(
            format!("C_G(H0) is not of type FP_{}", d + 1),
            format!(
                "{} restricted characters with a vanishing positive combination (witness); \
                 restriction to Q0 maps Σ^c into the complement for C_G(H0), \
                 so the witness rules out FP_{} by the FP_m-Conjecture instance",
                d + 1,
                d + 1
            ),
            citation,
        ),
    ];
    let report = CentralizerReport {
        d,
        subgroup_order: h0,
        q0_basis,
        raw_restricted,
        restricted_sigma,
        restricted_is_lower_bound: true,
        restricted_tame_degree: verdict.degree,
        fp_lower_bound,
        lower_certificate,
        upper_witness,
        verdicts,
    };
    if !report.verify() {
        return Err(Error::violation(format!(
            "centralizer report for d = {d} failed its re-check (tame degree {})",
            report.restricted_tame_degree
        )));
    }
    Ok(report)
}
