//! The finite-Prüfer-rank family over a quadratic field `K` with Galois
//! group `H`: a split prime `q = ∏_{t∈H} I^t`, the class number `r`, a
//! generator `α` of `I^r`, an auxiliary prime `p ≠ q`, and `Q = ℤ^H`
//! acting on `A = O_K[α^t/p, p/α^t]` by `q_t ↦ α^t/p`.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::fp_poly::FpPoly;
use crate::arith::primes::{is_prime, primes_from};
use crate::arith::BigRat;
use crate::centralizer::{centralizer_report, CentralizerReport, Verdict};
use crate::charsphere::{Ray, SigmaSet};
use crate::error::{Error, Result};
use crate::lattice::{LatticeAction, DEFAULT_GROUP_ORDER_CAP};
use crate::numfield::{
    class_number, element_valuation, factor_rational_prime, primes_above, principal_generator, Caps, NfElem,
    NfIdeal, NumberField, PrimeIdeal, Valuation,
};

pub const CITATION: &str = "[Aberg]";

/// `f` reduced modulo `q`.
pub fn reduce_poly(k: &NumberField, q: u64) -> FpPoly {
    let qi = BigInt::from(q);
    let coeffs = k.poly().iter().map(|c| c.mod_floor(&qi).try_into().expect("residue fits in u64")).collect();
    FpPoly::new(q, coeffs)
}

fn divides(q: u64, n: &BigInt) -> bool {
    (n % BigInt::from(q)).is_zero()
}

/// Smallest prime `q ≥ start` with a root of `f` mod `q`, `q ∤ [O_K : ℤ[ζ]]`
/// and `q ∤ d_K`, together with its smallest root in `[0, q)`.
pub fn select_prime(k: &NumberField, start: u64, caps: &Caps) -> Result<(u64, u64)> {
    for q in primes_from(start.max(2)) {
        if q > caps.prime_search {
            break;
        }
        if divides(q, k.index()) || divides(q, k.discriminant()) {
            continue;
        }
        if let Some(&root) = reduce_poly(k, q).roots().first() {
            return Ok((q, root));
        }
    }
    Err(Error::cap(format!("no suitable prime q up to {}", caps.prime_search)))
}

/// Smallest prime different from `q` and unramified in `K`.
pub fn default_p(k: &NumberField, q: u64) -> u64 {
    primes_from(2).find(|&p| p != q && !divides(p, k.discriminant())).expect("infinitely many primes")
}

#[derive(Debug, Clone, Serialize)]
pub struct NumberFieldInstance {
    pub field: NumberField,
    pub q: u64,
    pub k_q: u64,
    /// The factors of `qO_K`; `I` is the first.
    pub q_factors: Vec<PrimeIdeal>,
    pub i: PrimeIdeal,
    pub r: usize,
    pub alpha: NfElem,
    pub alpha_text: String,
    pub p: u64,
    pub p_factors: Vec<PrimeIdeal>,
    /// `H` acting on `Q` by `e_t ↦ e_{t·t₁}`.
    #[serde(skip)]
    pub action: LatticeAction,
}

impl NumberFieldInstance {
    /// `n = |H|`, the rank of `Q`.
    pub fn rank(&self) -> usize {
        self.field.automorphisms().len()
    }

    fn mul(&self, t: usize, t1: usize) -> usize {
        self.field.compose(t, t1)
    }

    /// The factor of `qO_K` equal to `I^h`.
    pub fn conjugate_factor(&self, h: usize) -> Result<&PrimeIdeal> {
        let image = self.i.ideal.apply(&self.field, h);
        self.q_factors
            .iter()
            .find(|f| f.ideal == image)
            .ok_or_else(|| Error::violation("I^h is not a factor of qO_K"))
    }

    /// `α^x / p`.
    pub fn character_element(&self, x: usize) -> NfElem {
        let p = BigRat::from_integer(BigInt::from(self.p));
        self.field.apply(x, &self.alpha).scale(&p.recip())
    }
}

fn regular_action(k: &NumberField, gens: &[usize]) -> Result<LatticeAction> {
    let n = k.automorphisms().len();
    let perms: Vec<Vec<usize>> = gens.iter().map(|&g| (0..n).map(|t| k.compose(t, g)).collect()).collect();
    LatticeAction::from_permutations(n, &perms, DEFAULT_GROUP_ORDER_CAP)
}

/// Builds and verifies the instance: `q | f(k_q)`, complete splitting of
/// `q` into a single `H`-orbit, `I^r = αO_K` by Hermite equality.
pub fn build_instance(
    k: &NumberField,
    q: u64,
    k_q: u64,
    p: Option<u64>,
    caps: &Caps,
) -> Result<NumberFieldInstance> {
    if !is_prime(q) {
        return Err(Error::invalid(format!("q = {q} is not prime")));
    }
    if reduce_poly(k, q).eval(k_q % q) != 0 {
        return Err(Error::invalid(format!("{q} does not divide f({k_q})")));
    }
    if divides(q, k.discriminant()) {
        return Err(Error::invalid(format!("q = {q} divides d_K")));
    }
    let q_factors = factor_rational_prime(k, q)?;
    let n = k.automorphisms().len();
    if q_factors.len() != n || q_factors.iter().any(|f| f.e != 1 || f.f != 1) {
        return Err(Error::invalid(format!("q = {q} does not split completely")));
    }
    let i = q_factors[0].clone();
    let orbit: BTreeSet<String> = (0..n).map(|h| i.ideal.apply(k, h).to_string()).collect();
    let factors: BTreeSet<String> = q_factors.iter().map(|f| f.ideal.to_string()).collect();
    if orbit != factors {
        return Err(Error::violation("the factors of qO_K are not one H-orbit"));
    }
    let r = class_number(k, caps)?;
    let power = i.ideal.pow(k, r as u32);
    let alpha = principal_generator(k, &power, caps)?
        .ok_or_else(|| Error::violation("I^r is not principal although r is the class number"))?;
    if NfIdeal::principal(k, &alpha)? != power {
        return Err(Error::violation("I^r ≠ αO_K"));
    }
    let p = p.unwrap_or_else(|| default_p(k, q));
    if !is_prime(p) || p == q {
        return Err(Error::invalid(format!("p = {p} must be a prime different from q = {q}")));
    }
    let p_factors = primes_above(k, p)?;
    let action = regular_action(k, &(0..n).collect::<Vec<_>>())?;
    Ok(NumberFieldInstance {
        alpha_text: k.format_elem(&alpha),
        field: k.clone(),
        q,
        k_q,
        q_factors,
        i,
        r,
        alpha,
        p,
        p_factors,
        action,
    })
}

/// One character of `Q` from a prime ideal `P`: `q_x ↦ υ_P(α^x/p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterProfile {
    pub place: String,
    pub raw: Vec<i64>,
    pub ray: Ray,
}

fn valuations(inst: &NumberFieldInstance, p: &PrimeIdeal) -> Result<Vec<i64>> {
    (0..inst.rank())
        .map(|x| match element_valuation(&inst.field, &inst.character_element(x), p) {
            Valuation::Finite(v) => Ok(v),
            Valuation::Infinite => Err(Error::violation("α^x/p is zero")),
        })
        .collect()
}

/// The characters from the primes over `q` and over `p`, after checking
/// `υ_{I^h}(α^x/p) = r·[x = h]` and `υ_J(α^x/p) = -e(J/p)`. Every other
/// prime has valuation zero because `(α^x/p)O_K = (I^x)^r (pO_K)^{-1}`,
/// which is checked too.
pub fn character_profiles(inst: &NumberFieldInstance) -> Result<Vec<CharacterProfile>> {
    let k = &inst.field;
    let n = inst.rank();
    let r = inst.r as i64;
    let p_ideal = NfIdeal::principal(k, &k.from_int(&BigInt::from(inst.p)))?;
    for x in 0..n {
        let lhs = NfIdeal::principal(k, &k.apply(x, &inst.alpha))?;
        if lhs != inst.conjugate_factor(x)?.ideal.pow(k, inst.r as u32) {
            return Err(Error::violation(format!("α^{x} O_K ≠ (I^{x})^r")));
        }
        let quotient = NfIdeal::principal(k, &inst.character_element(x))?;
        if quotient.mul(k, &p_ideal) != lhs {
            return Err(Error::violation("(α^x/p)·p ≠ α^x as ideals"));
        }
    }
    let mut out = Vec::new();
    for h in 0..n {
        let prime = inst.conjugate_factor(h)?;
        let raw = valuations(inst, prime)?;
        let expected: Vec<i64> = (0..n).map(|x| if x == h { r } else { 0 }).collect();
        if raw != expected {
            return Err(Error::violation(format!("υ_(I^{h})(α^x/p) = {raw:?}, expected {expected:?}")));
        }
        out.push(CharacterProfile {
            place: format!("I^h, h = {h}: {}", prime.ideal),
            ray: Ray::canonicalize(&raw)?,
            raw,
        });
    }
    for j in &inst.p_factors {
        let raw = valuations(inst, j)?;
        let s0 = i64::from(j.e);
        if raw.iter().any(|&v| v != -s0) {
            return Err(Error::violation(format!("υ_J(α^x/p) = {raw:?}, expected all -{s0}")));
        }
        out.push(CharacterProfile {
            place: format!("J | {}: {} (s0 = {s0})", inst.p, j.ideal),
            ray: Ray::canonicalize(&raw)?,
            raw,
        });
    }
    Ok(out)
}

/// `Σ^c` for the instance: `n` unit rays and the all-negative ray.
pub fn sigma_complement_numfield(inst: &NumberFieldInstance) -> Result<SigmaSet> {
    let n = inst.rank();
    let set = SigmaSet::new(n, character_profiles(inst)?.into_iter().map(|c| c.ray))?;
    if set.len() != n + 1 {
        return Err(Error::violation(format!("found {} rays, expected {}", set.len(), n + 1)));
    }
    Ok(set)
}

/// Parses generator words such as `"1"` or `"1*1,0"`: automorphism indices
/// joined by `*`, generators separated by commas.
pub fn parse_subgroup(inst: &NumberFieldInstance, words: &str) -> Result<Vec<usize>> {
    let n = inst.rank();
    words
        .split(',')
        .map(|word| {
            word.split('*').try_fold(0usize, |acc, letter| {
                let idx: usize = letter
                    .trim()
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad subgroup word {word:?}")))?;
                if idx >= n {
                    return Err(Error::invalid(format!("automorphism {idx} does not exist (|H| = {n})")));
                }
                Ok(inst.mul(acc, idx))
            })
        })
        .collect()
}

/// All elements of the subgroup generated by `gens`, identity first.
pub fn subgroup_closure(inst: &NumberFieldInstance, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![0usize];
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = inst.mul(x, g);
            if !seen.contains(&y) {
                seen.push(y);
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Report for `H₀ = ⟨gens⟩`. `Q₀` is cross-checked against the orbit sums
/// `s_x = Σ_{t∈H₀} e_{xt}`.
pub fn centralizer_report_numfield(inst: &NumberFieldInstance, gens: &[usize]) -> Result<CentralizerReport> {
    let n = inst.rank();
    let h0 = subgroup_closure(inst, gens);
    let action = regular_action(&inst.field, gens)?;
    if action.order() != h0.len() {
        return Err(Error::violation("subgroup order differs from the order of its action"));
    }
    let sigma = sigma_complement_numfield(inst)?;
    let report = centralizer_report(n, &action, &sigma, CITATION)?;
    let mut orbit_sums: Vec<Vec<i64>> = (0..n)
        .map(|x| {
            let mut s = vec![0i64; n];
            for &t in &h0 {
                s[inst.mul(x, t)] = 1;
            }
            s
        })
        .collect();
    orbit_sums.sort();
    orbit_sums.dedup();
    let mut basis = report.q0_basis.clone();
    basis.sort();
    if basis != orbit_sums {
        return Err(Error::violation("Q0 basis differs from the orbit sums"));
    }
    Ok(report)
}

pub fn group_verdicts(inst: &NumberFieldInstance) -> Vec<Verdict> {
    crate::centralizer::group_verdicts(inst.rank(), CITATION)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charsphere::{tame_degree, TameDegree};
    use crate::numfield::nf_make;

    #[test]
    fn prime_selection() {
        let caps = Caps::default();
        assert_eq!(select_prime(&nf_make(&[1, 0, 1]).unwrap(), 2, &caps).unwrap(), (5, 2));
        assert_eq!(select_prime(&nf_make(&[-2, 0, 1]).unwrap(), 2, &caps).unwrap(), (7, 3));
        assert_eq!(select_prime(&nf_make(&[5, 0, 1]).unwrap(), 2, &caps).unwrap(), (3, 1));
    }

    #[test]
    fn gaussian_instance() {
        let caps = Caps::default();
        let k = nf_make(&[1, 0, 1]).unwrap();
        let inst = build_instance(&k, 5, 2, Some(3), &caps).unwrap();
        assert_eq!(inst.r, 1);
        assert_eq!(inst.alpha, k.elem(2, 1));
        let s = sigma_complement_numfield(&inst).unwrap();
        assert_eq!(s.to_string(), "{(-1,-1), (0,1), (1,0)}");
        assert_eq!(tame_degree(&s).degree, TameDegree::Finite(2));
    }

    #[test]
    fn class_number_two_instance() {
        let caps = Caps::default();
        let k = nf_make(&[5, 0, 1]).unwrap();
        let inst = build_instance(&k, 3, 1, Some(7), &caps).unwrap();
        assert_eq!(inst.r, 2);
        assert_eq!(k.norm(&inst.alpha), BigRat::from_integer(BigInt::from(9)));
        let profiles = character_profiles(&inst).unwrap();
        assert_eq!(profiles[0].raw, vec![2, 0]);
        assert_eq!(profiles[1].raw, vec![0, 2]);
        assert_eq!(profiles[2].raw, vec![-1, -1]);
    }

    #[test]
    fn real_instance_and_ramified_p() {
        let caps = Caps::default();
        let k = nf_make(&[-2, 0, 1]).unwrap();
        let inst = build_instance(&k, 7, 3, Some(5), &caps).unwrap();
        assert_eq!(inst.alpha, k.elem(3, 1));
        // p = 2 ramifies: s0 = 2.
        let ram = build_instance(&k, 7, 3, Some(2), &caps).unwrap();
        let profiles = character_profiles(&ram).unwrap();
        assert_eq!(profiles.last().unwrap().raw, vec![-2, -2]);
        assert_eq!(sigma_complement_numfield(&ram).unwrap().len(), 3);
    }

    #[test]
    fn contract_violations() {
        let caps = Caps::default();
        let k = nf_make(&[1, 0, 1]).unwrap();
        assert!(build_instance(&k, 3, 1, None, &caps).is_err());
        assert!(build_instance(&k, 5, 2, Some(5), &caps).is_err());
        assert!(build_instance(&k, 2, 1, None, &caps).is_err());
    }

    #[test]
    fn centralizers() {
        let caps = Caps::default();
        let k = nf_make(&[1, 0, 1]).unwrap();
        let inst = build_instance(&k, 5, 2, Some(3), &caps).unwrap();
        let whole = parse_subgroup(&inst, "1").unwrap();
        let r = centralizer_report_numfield(&inst, &whole).unwrap();
        assert_eq!(r.q0_basis, vec![vec![1, 1]]);
        assert_eq!(r.restricted_sigma.to_string(), "{(-1), (1)}");
        assert_eq!(r.upper_witness.len(), 2);

        let trivial = parse_subgroup(&inst, "1*1").unwrap();
        assert_eq!(trivial, vec![0]);
        let r = centralizer_report_numfield(&inst, &trivial).unwrap();
        assert_eq!(r.d, 2);
        assert_eq!(r.upper_witness.len(), 3);

        assert!(parse_subgroup(&inst, "2").is_err());
        assert!(parse_subgroup(&inst, "x").is_err());
    }
}
