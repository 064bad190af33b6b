//! Rays on the character sphere `S(Q)` of a free abelian group `Q ≅ ℤ^n`,
//! finite ray sets standing for invariant complements `Σ^c`, and the exact
//! tameness calculus on them.
//!
//! A character `χ : Q → ℝ` is stored by its values on the standard basis.
//! Only rational characters are representable; every set produced by the
//! example families is rational after scaling.

mod ray;
mod tame;

pub use ray::{Ray, SigmaSet};
pub use tame::{
    certify_tame_degree, cone_membership, positive_combination_feasible, separating_functional, tame_degree,
    tameness_certificate, ConeWitness, SeparatedSubset, TameCertificate, TameDegree, TameVerdict, Term,
    ZeroSumWitness,
};

use crate::error::{Error, Result};

/// Restricts every character to the sublattice spanned by `basis` (each
/// entry one basis vector of length `set.rank()`), expressing the result in
/// that basis. Characters vanishing on the sublattice are dropped.
pub fn sigma_restrict(set: &SigmaSet, basis: &[Vec<i64>]) -> Result<SigmaSet> {
    if basis.is_empty() {
        return Err(Error::invalid("sublattice basis is empty"));
    }
    if let Some(bad) = basis.iter().find(|b| b.len() != set.rank()) {
        return Err(Error::invalid(format!("basis vector of length {} in rank {}", bad.len(), set.rank())));
    }
    let mut out = SigmaSet::empty(basis.len());
    for v in restrict_raw(set, basis) {
        if v.iter().any(|&x| x != 0) {
            out.insert(Ray::canonicalize(&v)?)?;
        }
    }
    Ok(out)
}

/// Values of each ray on the sublattice basis, before canonicalisation.
pub fn restrict_raw(set: &SigmaSet, basis: &[Vec<i64>]) -> Vec<Vec<i64>> {
    set.rays().map(|r| basis.iter().map(|b| r.dot(b)).collect()).collect()
}
