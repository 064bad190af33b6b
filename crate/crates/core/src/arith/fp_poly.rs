//! Dense polynomials over a prime field `F_p`, coefficients ascending.
//!
//! Only what the finite-field and Dedekind-factorisation code needs:
//! division with remainder, root scanning, an exhaustive irreducibility test
//! and factorisation of small-degree polynomials by trial division.

use std::cmp::Ordering;

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut poly = FpPoly { p, coeffs: coeffs.into_iter().map(|c| c % p).collect() };
        poly.trim();
        poly
    }

    /// Reduces integer coefficients (possibly negative) modulo `p`.
    pub fn from_i64(p: u64, coeffs: &[i64]) -> Self {
        let pi = p as i64;
        FpPoly::new(p, coeffs.iter().map(|c| c.rem_euclid(pi) as u64).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::new(self.p, vec![]);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        FpPoly::new(self.p, out)
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        let p = self.p;
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = inv_mod(divisor.coeffs[dd], p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = mul_mod(rem[top], lead_inv, p);
            if c != 0 {
                let shift = top - dd;
                quot[shift] = c;
                for (k, &dc) in divisor.coeffs.iter().enumerate() {
                    rem[shift + k] = (rem[shift + k] + p - mul_mod(c, dc, p)) % p;
                }
            }
            rem.pop();
        }
        (FpPoly::new(p, quot), FpPoly::new(p, rem))
    }

    pub fn rem(&self, divisor: &FpPoly) -> FpPoly {
        self.div_rem(divisor).1
    }

    pub fn roots(&self) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(x) == 0).collect()
    }

    /// Exhaustive test: no roots, and no monic factor of degree
    /// `2..=deg/2` found by trial division.
    pub fn is_irreducible(&self) -> bool {
        let Some(deg) = self.degree() else {
            return false;
        };
        if deg == 0 {
            return false;
        }
        if deg == 1 {
            return true;
        }
        if (0..self.p).any(|x| self.eval(x) == 0) {
            return false;
        }
        (2..=deg / 2).all(|d| monic_polys(self.p, d).all(|g| !self.rem(&g).is_zero()))
    }

    /// Factorisation into monic irreducibles with multiplicity, sorted by
    /// `(degree, ascending coefficient vector)`. The leading coefficient is
    /// dropped. Intended for degree at most four.
    pub fn factor(&self) -> Vec<(FpPoly, u32)> {
        let p = self.p;
        let mut rest = self.monic();
        let mut out: Vec<(FpPoly, u32)> = Vec::new();
        let mut strip = |rest: &mut FpPoly, g: FpPoly| {
            let mut e = 0;
            loop {
                let (q, r) = rest.div_rem(&g);
                if !r.is_zero() {
                    break;
                }
                *rest = q;
                e += 1;
            }
            if e > 0 {
                out.push((g, e));
            }
        };
        for root in rest.roots() {
            strip(&mut rest, FpPoly::new(p, vec![(p - root) % p, 1]));
        }
        let mut d = 2;
        while rest.degree().is_some_and(|deg| deg >= 2 * d) {
            for g in monic_polys(p, d).filter(|g| g.is_irreducible()) {
                strip(&mut rest, g);
            }
            d += 1;
        }
        if rest.degree().is_some_and(|deg| deg > 0) {
            out.push((rest, 1));
        }
        out.sort_by(|a, b| cmp_poly(&a.0, &b.0));
        out
    }

    pub fn monic(&self) -> FpPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => {
                let inv = inv_mod(lead, self.p);
                FpPoly::new(self.p, self.coeffs.iter().map(|&c| mul_mod(c, inv, self.p)).collect())
            }
        }
    }
}

/// Degree first, then ascending coefficient vector.
pub fn cmp_poly(a: &FpPoly, b: &FpPoly) -> Ordering {
    a.coeffs.len().cmp(&b.coeffs.len()).then_with(|| a.coeffs.cmp(&b.coeffs))
}

/// All monic polynomials of degree `d` over `F_p`, in lexicographic order
/// of the ascending coefficient vector `(c_0, …, c_{d-1})`.
pub fn monic_polys(p: u64, d: usize) -> impl Iterator<Item = FpPoly> {
    let total = (p as u128).pow(d as u32);
    (0..total).map(move |mut idx| {
        // c_0 is the most significant digit so the scan is lexicographic.
        let mut digits = vec![0u64; d];
        for slot in digits.iter_mut().rev() {
            *slot = (idx % p as u128) as u64;
            idx /= p as u128;
        }
        digits.push(1);
        FpPoly::new(p, digits)
    })
}
