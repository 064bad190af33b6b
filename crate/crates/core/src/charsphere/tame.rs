//! Exact m-tameness: vanishing positive combinations of at most `m` rays,
//! cone membership, and separating-functional certificates.
//!
//! Subsets are scanned smallest size first and, within a size, in
//! lexicographic order of the sorted ray list. When every smaller subset is
//! infeasible, a subset admits a strictly positive vanishing combination
//! exactly when the null space of its column matrix is one-dimensional and
//! spanned by a vector with all entries of one strict sign. The same holds
//! for cone membership with the target appended as a negated column. So a
//! null-space computation plus a sign check decides each subset.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{Ray, SigmaSet};
use crate::arith::matrix::rational_kernel;
use crate::arith::simplex::positive_functional;
use crate::arith::{primitive_integer_direction, rat_to_string, BigRat};

/// Largest `m` for which a set is m-tame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TameDegree {
    Finite(usize),
    Infinite,
}

impl TameDegree {
    pub fn finite(self) -> Option<usize> {
        match self {
            TameDegree::Finite(d) => Some(d),
            TameDegree::Infinite => None,
        }
    }

    /// True when the set is `m`-tame.
    pub fn is_tame(self, m: usize) -> bool {
        match self {
            TameDegree::Finite(d) => m <= d,
            TameDegree::Infinite => true,
        }
    }
}

impl fmt::Display for TameDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TameDegree::Finite(d) => write!(f, "{d}"),
            TameDegree::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for TameDegree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            TameDegree::Finite(d) => s.serialize_u64(*d as u64),
            TameDegree::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// One term `coeff · ray` of a positive combination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub ray: Ray,
    pub coeff: BigRat,
}

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 2)?;
        st.serialize_field("ray", &self.ray)?;
        st.serialize_field("coeff", &rat_to_string(&self.coeff))?;
        st.end()
    }
}

fn combination(terms: &[Term], rank: usize) -> Vec<BigRat> {
    let mut acc = vec![BigRat::zero(); rank];
    for t in terms {
        for (a, &c) in acc.iter_mut().zip(t.ray.coords()) {
            *a += &t.coeff * BigRat::from_integer(BigInt::from(c));
        }
    }
    acc
}

/// Strictly positive coefficients on distinct rays summing to zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroSumWitness {
    pub terms: Vec<Term>,
}

impl ZeroSumWitness {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn rays(&self) -> impl Iterator<Item = &Ray> {
        self.terms.iter().map(|t| &t.ray)
    }

    /// Re-evaluates the combination exactly.
    pub fn verify(&self) -> bool {
        let Some(first) = self.terms.first() else {
            return false;
        };
        let distinct = self.terms.iter().map(|t| &t.ray).all_unique();
        distinct
            && self.terms.iter().all(|t| t.coeff.is_positive())
            && combination(&self.terms, first.ray.rank()).iter().all(|x| x.is_zero())
    }
}

/// Positive coefficients on rays whose sum is `multiple · target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeWitness {
    pub terms: Vec<Term>,
    pub multiple: BigRat,
}

impl Serialize for ConeWitness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ConeWitness", 2)?;
        st.serialize_field("terms", &self.terms)?;
        st.serialize_field("multiple", &rat_to_string(&self.multiple))?;
        st.end()
    }
}

impl ConeWitness {
    pub fn verify(&self, target: &Ray) -> bool {
        if !self.multiple.is_positive() || self.terms.iter().any(|t| !t.coeff.is_positive()) {
            return false;
        }
        let sum = combination(&self.terms, target.rank());
        sum.iter()
            .zip(target.coords())
            .all(|(s, &c)| *s == &self.multiple * BigRat::from_integer(BigInt::from(c)))
    }
}

/// Result of [`tame_degree`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TameVerdict {
    pub degree: TameDegree,
    /// A vanishing combination on `degree + 1` rays; absent when infinite.
    pub witness: Option<ZeroSumWitness>,
}

/// A subset of rays with an integer functional positive on each of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatedSubset {
    pub rays: Vec<Ray>,
    #[serde(serialize_with = "crate::arith::ser::big_ints")]
    pub functional: Vec<BigInt>,
}

/// Dual evidence that a set is `m`-tame: every subset of
/// `min(m, |S|)` rays lies in an open half-space, exhibited by a
/// functional positive on it. Subsets of those subsets inherit it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TameCertificate {
    pub m: usize,
    pub subsets: Vec<SeparatedSubset>,
}

impl TameCertificate {
    /// Checks the dot products and that every required subset is present.
    pub fn verify(&self, set: &SigmaSet) -> bool {
        let rays = set.to_vec();
        let k = self.m.min(rays.len());
        let expected = rays.iter().combinations(k).count();
        if self.subsets.len() != expected {
            return false;
        }
        rays.iter().combinations(k).all(|subset| {
            self.subsets.iter().any(|s| {
                s.rays.len() == subset.len()
                    && s.rays.iter().zip(&subset).all(|(a, b)| a == *b)
                    && s.rays.iter().all(|r| {
                        let dot: BigInt =
                            r.coords().iter().zip(&s.functional).map(|(&c, u)| BigInt::from(c) * u).sum();
                        dot.is_positive()
                    })
            })
        })
    }
}

fn ray_rationals(r: &Ray) -> Vec<BigRat> {
    r.coords().iter().map(|&c| BigRat::from_integer(BigInt::from(c))).collect()
}

/// Null-space generator with all entries strictly positive, provided the
/// null space of the matrix with the given columns is one-dimensional.
fn strict_kernel_generator(columns: &[Vec<BigRat>], rank: usize) -> Option<Vec<BigInt>> {
    let k = columns.len();
    let rows: Vec<Vec<BigRat>> = (0..rank).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    let kernel = rational_kernel(&rows, k);
    if kernel.len() != 1 {
        return None;
    }
    let g = &kernel[0];
    let oriented: Vec<BigRat> = if g.iter().all(|x| x.is_positive()) {
        g.clone()
    } else if g.iter().all(|x| x.is_negative()) {
        g.iter().map(|x| -x.clone()).collect()
    } else {
        return None;
    };
    primitive_integer_direction(&oriented)
}

/// A witness of at most `m` distinct rays with strictly positive rational
/// coefficients summing to zero, if one exists.
pub fn positive_combination_feasible(set: &SigmaSet, m: usize) -> Option<ZeroSumWitness> {
    let rays = set.to_vec();
    // A minimal vanishing combination of k rays spans a space of dimension
    // k - 1, so k ≤ rank + 1.
    let limit = m.min(rays.len()).min(set.rank() + 1);
    for size in 1..=limit {
        for subset in rays.iter().combinations(size) {
            let cols: Vec<Vec<BigRat>> = subset.iter().map(|r| ray_rationals(r)).collect();
            if let Some(coeffs) = strict_kernel_generator(&cols, set.rank()) {
                let terms = subset
                    .into_iter()
                    .zip(coeffs)
                    .map(|(r, c)| Term { ray: r.clone(), coeff: BigRat::from_integer(c) })
                    .collect();
                return Some(ZeroSumWitness { terms });
            }
        }
    }
    None
}

/// The tame degree of a set together with a minimal vanishing combination.
pub fn tame_degree(set: &SigmaSet) -> TameVerdict {
    match positive_combination_feasible(set, set.len()) {
        Some(w) => TameVerdict { degree: TameDegree::Finite(w.len() - 1), witness: Some(w) },
        None => TameVerdict { degree: TameDegree::Infinite, witness: None },
    }
}

/// Certifies `tame_degree(set) = d` without enumerating smaller subsets:
/// a `d`-tameness certificate rules out vanishing combinations on at most
/// `d` rays, and only subsets of size `d + 1` are searched for a witness.
pub fn certify_tame_degree(set: &SigmaSet, d: usize) -> Option<(TameVerdict, TameCertificate)> {
    let cert = tameness_certificate(set, d)?;
    let rays = set.to_vec();
    let witness = rays.iter().combinations(d + 1).find_map(|subset| {
        let cols: Vec<Vec<BigRat>> = subset.iter().map(|r| ray_rationals(r)).collect();
        let coeffs = strict_kernel_generator(&cols, set.rank())?;
        let terms = subset
            .into_iter()
            .zip(coeffs)
            .map(|(r, c)| Term { ray: r.clone(), coeff: BigRat::from_integer(c) })
            .collect();
        Some(ZeroSumWitness { terms })
    })?;
    Some((TameVerdict { degree: TameDegree::Finite(d), witness: Some(witness) }, cert))
}

/// Positive coefficients over at most `t` rays of `set` whose sum is a
/// positive multiple of `target`, if such exist.
pub fn cone_membership(target: &Ray, set: &SigmaSet, t: usize) -> Option<ConeWitness> {
    if target.rank() != set.rank() {
        return None;
    }
    let rays = set.to_vec();
    let neg_target: Vec<BigRat> = ray_rationals(&target.neg());
    for size in 1..=t.min(rays.len()) {
        for subset in rays.iter().combinations(size) {
            let mut cols: Vec<Vec<BigRat>> = subset.iter().map(|r| ray_rationals(r)).collect();
            cols.push(neg_target.clone());
            if let Some(mut coeffs) = strict_kernel_generator(&cols, set.rank()) {
                let multiple = BigRat::from_integer(coeffs.pop().unwrap());
                let terms = subset
                    .into_iter()
                    .zip(coeffs)
                    .map(|(r, c)| Term { ray: r.clone(), coeff: BigRat::from_integer(c) })
                    .collect();
                return Some(ConeWitness { terms, multiple });
            }
        }
    }
    None
}

/// Primitive integer functional strictly positive on every given ray.
pub fn separating_functional(rays: &[&Ray], rank: usize) -> Option<Vec<BigInt>> {
    let vs: Vec<Vec<BigRat>> = rays.iter().map(|r| ray_rationals(r)).collect();
    let u = positive_functional(&vs, rank)?;
    primitive_integer_direction(&u).or_else(|| {
        // Only reachable for an empty ray list in rank ≥ 1.
        let mut e = vec![BigInt::zero(); rank];
        e[0] = BigInt::one();
        Some(e)
    })
}

/// Separating functionals for every subset of `min(m, |S|)` rays, or
/// `None` when some subset contains zero in its positive hull.
pub fn tameness_certificate(set: &SigmaSet, m: usize) -> Option<TameCertificate> {
    let rays = set.to_vec();
    let k = m.min(rays.len());
    let mut subsets = Vec::new();
    for subset in rays.iter().combinations(k) {
        let functional = separating_functional(&subset, set.rank())?;
        subsets.push(SeparatedSubset { rays: subset.into_iter().cloned().collect(), functional });
    }
    Some(TameCertificate { m, subsets })
}
