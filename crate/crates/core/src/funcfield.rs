//! The metabelian family over `k = F_{p^m}`: `A` is the localisation of
//! `k[x₁]` at the linear polynomials `x₁ + a_j`, `Q = ℤ^{pm}` acts by
//! multiplication by those polynomials, and the cyclic group `H = ⟨μ⟩` of
//! order `pm` acts by `μ|_k = σ` (Frobenius), `μ(x₁) = x₁ + a`.

use serde::Serialize;

use crate::arith::fq::prime_field_rank;
use crate::arith::{fq_make, FqElem, FqField, FqPoly};
use crate::centralizer::{centralizer_report, CentralizerReport, Verdict};
use crate::charsphere::{Ray, SigmaSet};
use crate::error::{Error, Result};
use crate::lattice::{LatticeAction, DEFAULT_GROUP_ORDER_CAP};

pub const CITATION: &str = "[Koch, Cor. C]";

/// The smallest element (by coefficient vector) whose Galois conjugates
/// are linearly independent over `F_p`, rescaled in `F_p` to trace 1.
pub fn find_normal_trace_one(field: &FqField) -> FqElem {
    let m = field.degree();
    let mut elements: Vec<FqElem> = field.elements().collect();
    elements.sort();
    let normal =
        elements.into_iter().find(|e| prime_field_rank(&e.conjugates()) == m).expect("normal elements exist");
    // Conjugates of a normal element are independent, so the trace is a
    // nonzero element of F_p.
    let tr = normal.trace();
    let inv = tr.inv().expect("trace of a normal element is nonzero");
    normal.mul(&inv)
}

/// `a₁ = a`, `a_{i+1} = σ(a_i) + a` for `i < pm`. Fails unless the
/// sequence has `pm` distinct terms, `a_m = 1` and `a_{pm} = 0`.
pub fn mobius_sequence(a: &FqElem) -> Result<Vec<FqElem>> {
    let field = a.field();
    let p = field.characteristic() as usize;
    let m = field.degree();
    let mut seq = vec![a.clone()];
    while seq.len() < p * m {
        let next = seq.last().unwrap().frobenius().add(a);
        seq.push(next);
    }
    if seq[m - 1] != field.one() {
        return Err(Error::violation(format!("a_m = {} ≠ 1", seq[m - 1])));
    }
    if !seq[p * m - 1].is_zero() {
        return Err(Error::violation(format!("a_pm = {} ≠ 0", seq[p * m - 1])));
    }
    let mut sorted = seq.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != p * m {
        return Err(Error::violation(format!("only {} distinct terms among a_1..a_{}", sorted.len(), p * m)));
    }
    Ok(seq)
}

#[derive(Debug, Clone)]
pub struct PrimeCharInstance {
    pub field: FqField,
    pub a: FqElem,
    /// `a₁, …, a_{pm}`.
    pub sequence: Vec<FqElem>,
    /// `μ` acting on `Q` by the cyclic shift `q_i ↦ q_{i+1}`.
    pub action: LatticeAction,
}

impl PrimeCharInstance {
    pub fn p(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn m(&self) -> usize {
        self.field.degree()
    }

    /// Rank of `Q` and order of `H`.
    pub fn rank(&self) -> usize {
        self.sequence.len()
    }

    /// The basis `Y = {x₁ + a_j}` of `Q` inside `A`.
    pub fn basis_polys(&self) -> Vec<FqPoly> {
        self.sequence.iter().map(FqPoly::linear).collect()
    }
}

/// `μ` on a polynomial in `x₁`: Frobenius on coefficients, then
/// substitute `x₁ ↦ x₁ + a`.
fn apply_mu(poly: &FqPoly, a: &FqElem) -> FqPoly {
    let field = poly.field();
    let shift = FqPoly::linear(a);
    poly.coeffs().iter().rev().fold(FqPoly::new(field, vec![]), |acc, c| {
        acc.mul(&shift).add(&FqPoly::new(field, vec![c.frobenius()]))
    })
}

/// Builds the instance for `(p, m)` and checks that `μ` sends
/// `x₁ + a_i` to `x₁ + a_{i+1}` cyclically, so it matches the shift on `Q`.
pub fn prime_char_instance(p: u64, m: usize) -> Result<PrimeCharInstance> {
    let field = fq_make(p, m)?;
    let n = (p as usize)
        .checked_mul(m)
        .filter(|&n| n <= 64)
        .ok_or_else(|| Error::invalid(format!("p·m = {p}·{m} is too large (limit 64)")))?;
    let a = find_normal_trace_one(&field);
    let sequence = mobius_sequence(&a)?;
    for i in 0..n {
        let image = apply_mu(&FqPoly::linear(&sequence[i]), &a);
        if image != FqPoly::linear(&sequence[(i + 1) % n]) {
            return Err(Error::violation(format!("μ(x1 + a_{}) ≠ x1 + a_{}", i + 1, (i + 1) % n + 1)));
        }
    }
    let shift: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let action = LatticeAction::from_permutations(n, &[shift], DEFAULT_GROUP_ORDER_CAP)?;
    Ok(PrimeCharInstance { field, a, sequence, action })
}

/// A place of `k(x₁)` with its values on the basis `x₁ + a_1, …`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValuationProfile {
    pub place: String,
    pub values: Vec<i64>,
}

/// Values of every place of `k(x₁)` that is nonzero on some basis
/// polynomial. Finite places of degree one are `x₁ - c` for `c ∈ k` and
/// are enumerated; places of degree at least two are coprime to every
/// linear polynomial and contribute the zero character.
pub fn valuation_profiles(inst: &PrimeCharInstance) -> Vec<ValuationProfile> {
    let basis = inst.basis_polys();
    let mut out = Vec::new();
    let mut points: Vec<FqElem> = inst.field.elements().collect();
    points.sort();
    for c in points {
        let values: Vec<i64> = basis
            .iter()
            .map(|y| i64::from(y.valuation_at(&c).expect("basis polynomials are nonzero")))
            .collect();
        if values.iter().any(|&v| v != 0) {
            out.push(ValuationProfile { place: format!("x1 - ({c})"), values });
        }
    }
    let at_infinity =
        basis.iter().map(|y| y.valuation_at_infinity().expect("basis polynomials are nonzero")).collect();
    out.push(ValuationProfile { place: "infinity".to_string(), values: at_infinity });
    out
}

/// `Σ^c` for the instance: the unit rays and the all-negative ray.
pub fn sigma_complement_funcfield(inst: &PrimeCharInstance) -> Result<SigmaSet> {
    let n = inst.rank();
    let mut set = SigmaSet::empty(n);
    for profile in valuation_profiles(inst) {
        set.insert(Ray::canonicalize(&profile.values)?)?;
    }
    if set.len() != n + 1 {
        return Err(Error::violation(format!("found {} rays, expected {}", set.len(), n + 1)));
    }
    Ok(set)
}

/// Report for `H₀ = ⟨μ^d⟩`, `d | m`.
pub fn centralizer_report_funcfield(inst: &PrimeCharInstance, d: usize) -> Result<CentralizerReport> {
    let m = inst.m();
    if d == 0 || !m.is_multiple_of(d) {
        return Err(Error::invalid(format!("d = {d} does not divide m = {m}")));
    }
    let n = inst.rank();
    let shift: Vec<usize> = (0..n).map(|i| (i + d) % n).collect();
    let subgroup = LatticeAction::from_permutations(n, &[shift], DEFAULT_GROUP_ORDER_CAP)?;
    let sigma = sigma_complement_funcfield(inst)?;
    let report = centralizer_report(n, &subgroup, &sigma, CITATION)?;
    let orbit_sums: Vec<Vec<i64>> = (0..d).map(|i| (0..n).map(|j| i64::from(j % d == i)).collect()).collect();
    if report.q0_basis != orbit_sums {
        return Err(Error::violation("Q0 basis differs from the orbit sums"));
    }
    Ok(report)
}

pub fn group_verdicts(inst: &PrimeCharInstance) -> Vec<Verdict> {
    crate::centralizer::group_verdicts(inst.rank(), CITATION)
}
