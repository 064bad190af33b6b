//! The finite field `F_{p^m}` as `F_p[t]/(g)` for a fixed monic irreducible
//! `g`, together with its Frobenius `e ↦ e^p`, the absolute trace, and
//! polynomials over the field.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::fp_poly::{inv_mod, monic_polys, mul_mod, FpPoly};
use super::primes::is_prime;
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq)]
struct FieldData {
    p: u64,
    m: usize,
    modulus: FpPoly,
}

/// A finite field of order `p^m`. Cheap to clone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqField(Arc<FieldData>);

/// Builds `F_{p^m}` using the lexicographically smallest monic irreducible
/// modulus of degree `m` (ascending coefficient vector order).
pub fn fq_make(p: u64, m: usize) -> Result<FqField> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if m == 0 {
        return Err(Error::invalid("extension degree must be at least 1"));
    }
    let modulus = monic_polys(p, m)
        .find(|g| g.is_irreducible())
        .expect("irreducible polynomials exist in every degree");
    Ok(FqField(Arc::new(FieldData { p, m, modulus })))
}

impl FqField {
    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.m
    }

    pub fn order(&self) -> u64 {
        self.0.p.pow(self.0.m as u32)
    }

    /// Ascending coefficients of the defining polynomial, leading 1 included.
    pub fn modulus(&self) -> &[u64] {
        self.0.modulus.coeffs()
    }

    pub fn zero(&self) -> FqElem {
        self.from_prime(0)
    }

    pub fn one(&self) -> FqElem {
        self.from_prime(1)
    }

    pub fn from_prime(&self, c: u64) -> FqElem {
        let mut coeffs = vec![0; self.0.m];
        coeffs[0] = c % self.0.p;
        FqElem { field: self.clone(), coeffs }
    }

    /// Element with the given residue coefficients `(c_0, …, c_{m-1})`.
    pub fn elem(&self, coeffs: &[u64]) -> FqElem {
        assert_eq!(coeffs.len(), self.0.m, "coefficient vector has wrong length");
        FqElem { field: self.clone(), coeffs: coeffs.iter().map(|c| c % self.0.p).collect() }
    }

    /// The class of `t`, a root of the modulus.
    pub fn generator(&self) -> FqElem {
        if self.0.m == 1 {
            // t ≡ -c_0 when the modulus is linear
            let c0 = self.0.modulus.coeffs()[0];
            return self.from_prime((self.0.p - c0) % self.0.p);
        }
        let mut coeffs = vec![0; self.0.m];
        coeffs[1] = 1;
        FqElem { field: self.clone(), coeffs }
    }

    /// Every element, in lexicographic order of the coefficient vector.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        let p = self.0.p;
        let m = self.0.m;
        (0..self.order()).map(move |mut idx| {
            let mut coeffs = vec![0u64; m];
            for slot in coeffs.iter_mut().rev() {
                *slot = idx % p;
                idx /= p;
            }
            FqElem { field: self.clone(), coeffs }
        })
    }

    fn reduce(&self, mut raw: Vec<u64>) -> Vec<u64> {
        let p = self.0.p;
        let m = self.0.m;
        let g = self.0.modulus.coeffs();
        while raw.len() > m {
            let top = raw.pop().unwrap();
            if top != 0 {
                let shift = raw.len() - m;
                for k in 0..m {
                    raw[shift + k] = (raw[shift + k] + p - mul_mod(top, g[k], p)) % p;
                }
            }
        }
        raw.resize(m, 0);
        raw
    }
}

/// An element of `F_{p^m}`, stored as its residue coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct FqElem {
    field: FqField,
    coeffs: Vec<u64>,
}

impl FqElem {
    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// True when the element lies in the prime subfield `F_p`.
    pub fn is_prime_field(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// The constant coefficient, meaningful for prime-field elements.
    pub fn prime_value(&self) -> u64 {
        self.coeffs[0]
    }

    pub fn add(&self, other: &FqElem) -> FqElem {
        let p = self.field.0.p;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a + b) % p).collect();
        FqElem { field: self.field.clone(), coeffs }
    }

    pub fn neg(&self) -> FqElem {
        let p = self.field.0.p;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FqElem { field: self.field.clone(), coeffs }
    }

    pub fn sub(&self, other: &FqElem) -> FqElem {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FqElem) -> FqElem {
        let p = self.field.0.p;
        let m = self.field.0.m;
        let mut raw = vec![0u64; 2 * m - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                raw[i + j] = (raw[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        FqElem { field: self.field.clone(), coeffs: self.field.reduce(raw) }
    }

    pub fn scale(&self, c: u64) -> FqElem {
        let p = self.field.0.p;
        let coeffs = self.coeffs.iter().map(|&a| mul_mod(a, c % p, p)).collect();
        FqElem { field: self.field.clone(), coeffs }
    }

    pub fn pow(&self, mut exp: u64) -> FqElem {
        let mut acc = self.field.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<FqElem> {
        (!self.is_zero()).then(|| self.pow(self.field.order() - 2))
    }

    /// The Frobenius automorphism `e ↦ e^p`.
    pub fn frobenius(&self) -> FqElem {
        self.pow(self.field.0.p)
    }

    /// Absolute trace `Σ_{0≤j<m} σ^j(e)`; always in the prime field.
    pub fn trace(&self) -> FqElem {
        let mut acc = self.field.zero();
        let mut conj = self.clone();
        for _ in 0..self.field.0.m {
            acc = acc.add(&conj);
            conj = conj.frobenius();
        }
        acc
    }

    /// The Galois conjugates `e, σ(e), …, σ^{m-1}(e)`.
    pub fn conjugates(&self) -> Vec<FqElem> {
        let mut out = Vec::with_capacity(self.field.0.m);
        let mut conj = self.clone();
        for _ in 0..self.field.0.m {
            out.push(conj.clone());
            conj = conj.frobenius();
        }
        out
    }
}

impl PartialOrd for FqElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FqElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Rank over `F_p` of a list of field elements viewed as vectors in `F_p^m`.
pub fn prime_field_rank(elems: &[FqElem]) -> usize {
    let Some(first) = elems.first() else {
        return 0;
    };
    let p = first.field.0.p;
    let m = first.field.0.m;
    let mut rows: Vec<Vec<u64>> = elems.iter().map(|e| e.coeffs.clone()).collect();
    let mut rank = 0;
    for col in 0..m {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][col], p);
        let pivot_row: Vec<u64> = rows[rank].iter().map(|&x| mul_mod(x, inv, p)).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - mul_mod(factor, y, p)) % p;
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Polynomial over `F_q` in the variable `x₁`, coefficients ascending.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FqPoly {
    field: FqField,
    coeffs: Vec<FqElem>,
}

impl FqPoly {
    pub fn new(field: &FqField, coeffs: Vec<FqElem>) -> Self {
        let mut poly = FqPoly { field: field.clone(), coeffs };
        while poly.coeffs.last().is_some_and(|c| c.is_zero()) {
            poly.coeffs.pop();
        }
        poly
    }

    /// The monic linear polynomial `x₁ + c`.
    pub fn linear(c: &FqElem) -> Self {
        FqPoly::new(c.field(), vec![c.clone(), c.field().one()])
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &FqPoly) -> FqPoly {
        let zero = self.field.zero();
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                a.add(other.coeffs.get(i).unwrap_or(&zero))
            })
            .collect();
        FqPoly::new(&self.field, coeffs)
    }

    pub fn mul(&self, other: &FqPoly) -> FqPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return FqPoly::new(&self.field, vec![]);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        FqPoly::new(&self.field, coeffs)
    }

    pub fn eval(&self, x: &FqElem) -> FqElem {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| acc.mul(x).add(c))
    }

    /// Synthetic division by `x₁ - root`: returns `(quotient, remainder)`.
    fn divide_linear(&self, root: &FqElem) -> (FqPoly, FqElem) {
        let mut quot = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut carry = self.field.zero();
        for c in self.coeffs.iter().rev() {
            carry = carry.mul(root).add(c);
            quot.push(carry.clone());
        }
        let rem = quot.pop().unwrap_or_else(|| self.field.zero());
        quot.reverse();
        (FqPoly::new(&self.field, quot), rem)
    }

    /// Order of vanishing at `x₁ = root`, i.e. the valuation attached to
    /// the place `x₁ - root`. `None` for the zero polynomial.
    pub fn valuation_at(&self, root: &FqElem) -> Option<u32> {
        self.degree()?;
        let mut e = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.divide_linear(root);
            if !r.is_zero() {
                return Some(e);
            }
            cur = q;
            e += 1;
        }
    }

    /// The valuation at the infinite place, `-deg`.
    pub fn valuation_at_infinity(&self) -> Option<i64> {
        self.degree().map(|d| -(d as i64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli() {
        assert_eq!(fq_make(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(fq_make(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(fq_make(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert!(fq_make(4, 1).is_err());
        assert!(fq_make(2, 0).is_err());
    }

    #[test]
    fn f4_frobenius_and_trace() {
        let f4 = fq_make(2, 2).unwrap();
        let w = f4.generator();
        let w1 = w.add(&f4.one());
        assert_eq!(w.frobenius(), w1);
        assert_eq!(f4.one().frobenius(), f4.one());
        assert_eq!(f4.one().trace(), f4.zero());
        assert_eq!(w.trace(), f4.one());
    }

    #[test]
    fn prime_field_is_fixed() {
        let f = fq_make(5, 1).unwrap();
        for e in f.elements() {
            assert_eq!(e.frobenius(), e);
            assert_eq!(e.trace(), e);
        }
    }

    #[test]
    fn inverses() {
        let f = fq_make(3, 2).unwrap();
        for e in f.elements().filter(|e| !e.is_zero()) {
            assert_eq!(e.mul(&e.inv().unwrap()), f.one());
        }
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn polynomial_valuations() {
        let f = fq_make(2, 2).unwrap();
        let w = f.generator();
        let lin = FqPoly::linear(&w);
        assert_eq!(lin.valuation_at(&w.neg()), Some(1));
        assert_eq!(lin.valuation_at(&f.zero()), Some(0));
        assert_eq!(lin.valuation_at_infinity(), Some(-1));
        let sq = FqPoly::new(&f, vec![w.mul(&w), f.zero(), f.one()]); // (x + w)^2 in char 2
        assert_eq!(sq.valuation_at(&w), Some(2));
    }
}
