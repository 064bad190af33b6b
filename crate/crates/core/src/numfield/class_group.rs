use std::cmp::Ordering;
use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::field::{NfElem, NumberField, OmegaKind};
use super::ideal::{primes_above, NfIdeal, PrimeIdeal};
use super::Caps;
use crate::arith::primes::{exact_sqrt, isqrt, primes_from};
use crate::arith::BigRat;
use crate::error::{Error, Result};

/// `(X + Y√D)/2` in coordinates over `(1, ω)`, when it is integral.
fn half_form(k: &NumberField, x: &BigInt, y: &BigInt) -> Option<NfElem> {
    let two = BigInt::from(2);
    match k.omega_kind() {
        OmegaKind::Sqrt => {
            if x.is_odd() || y.is_odd() {
                return None;
            }
            Some(NfElem::from_ints(&[x / &two, y / &two]))
        }
        OmegaKind::HalfSqrt => {
            // √D = 2ω - 1.
            if (x - y).is_odd() {
                return None;
            }
            Some(NfElem::from_ints(&[(x - y) / &two, y.clone()]))
        }
    }
}

/// The fundamental unit `ε = (X + Y√D)/2 > 1` of a real quadratic field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FundamentalUnit {
    pub unit: NfElem,
    #[serde(serialize_with = "crate::arith::ser::big_int")]
    pub x: BigInt,
    #[serde(serialize_with = "crate::arith::ser::big_int")]
    pub y: BigInt,
    pub norm: i64,
}

impl FundamentalUnit {
    /// An integer `E ≥ ε`: since `ε + ε' = X` and `|ε'| < 1`.
    pub fn upper_bound(&self) -> BigInt {
        &self.x + 1
    }
}

/// Smallest unit greater than 1, found among the convergents of `√D`
/// (solutions of `X² - DY² = ±4` for `D ≡ 1 mod 4`, `±1` otherwise).
/// `None` for imaginary fields.
pub fn fundamental_unit(k: &NumberField, caps: &Caps) -> Result<Option<FundamentalUnit>> {
    if k.is_imaginary() {
        return Ok(None);
    }
    let d = k.squarefree().clone();
    let half = k.omega_kind() == OmegaKind::HalfSqrt;
    let a0 = isqrt(&d);
    let (mut m, mut den, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
    let (mut p_prev, mut p) = (BigInt::one(), a0.clone());
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    // Candidates in the (X, Y) normalisation with ε = (X + Y√D)/2.
    let mut best: Option<(BigInt, BigInt)> = None;
    for _ in 0..caps.unit_search {
        let val = &p * &p - &d * &q * &q;
        let candidate = if val.abs() == BigInt::one() {
            Some((BigInt::from(2) * &p, BigInt::from(2) * &q))
        } else if half && val.abs() == BigInt::from(4) {
            Some((p.clone(), q.clone()))
        } else {
            None
        };
        if let Some(c) = candidate {
            if best.as_ref().is_none_or(|b| c.1 < b.1) {
                best = Some(c);
            }
            if val.abs().is_one() {
                break;
            }
        }
        m = &den * &a - &m;
        den = (&d - &m * &m) / &den;
        a = (&a0 + &m) / &den;
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
    let Some((mut x, mut y)) = best else {
        return Err(Error::cap("continued fraction of sqrt(D) did not reach a unit"));
    };
    // For D < 17 a solution of X² - DY² = ±4 need not be a convergent. At
    // fixed Y the smaller X gives the smaller unit, so -4 is tried first.
    if half && d < BigInt::from(17) {
        let mut yy = BigInt::one();
        while yy < y {
            let base = &d * &yy * &yy;
            let found: Option<BigInt> = [&base - 4i32, &base + 4i32].into_iter().find_map(|t: BigInt| {
                if t.is_positive() {
                    exact_sqrt(&t)
                } else {
                    None
                }
            });
            if let Some(xx) = found {
                x = xx;
                y = yy;
                break;
            }
            yy += 1;
        }
    }
    let unit = half_form(k, &x, &y).ok_or_else(|| Error::violation("unit is not integral"))?;
    let norm = k.norm(&unit);
    if norm.abs() != BigRat::one() {
        return Err(Error::violation("fundamental unit candidate has norm ≠ ±1"));
    }
    let norm = norm.to_integer().to_i64().expect("±1");
    Ok(Some(FundamentalUnit { unit, x, y, norm }))
}

/// Ordering that picks one generator among associates: smallest `|v|`,
/// then `v ≥ 0`, then smallest `|u|`, then `u ≥ 0`, for `u + vω`.
fn canonical_order(a: &NfElem, b: &NfElem) -> Ordering {
    let key = |e: &NfElem| {
        let (u, v) = (&e.coords[0], &e.coords[1]);
        (v.abs(), v.is_negative(), u.abs(), u.is_negative())
    };
    key(a).cmp(&key(b))
}

/// A generator of the integral ideal `I` if it is principal, `None` if it
/// is proven non-principal, and `CapExceeded` if the search box is larger
/// than `caps.principal_search`.
///
/// Generators are written `β = (X + Y√D)/2` with `X² - DY² = ±4N(I)`. For
/// imaginary fields `Y² ≤ 4N/|D|`. For real fields some generator
/// satisfies `√N/ε < |β'| ≤ √N ≤ |β| < √N·ε`, so `Y√D < √N(ε + 1)`.
pub fn principal_generator(k: &NumberField, ideal: &NfIdeal, caps: &Caps) -> Result<Option<NfElem>> {
    if !ideal.is_integral() {
        return Err(Error::invalid("principality is tested on integral ideals"));
    }
    let n = ideal.norm().to_integer();
    let d = k.squarefree().clone();
    let four_n = BigInt::from(4) * &n;
    let (y_max, signs): (BigInt, Vec<i32>) = if k.is_imaginary() {
        (isqrt(&(&four_n / d.abs())), vec![1])
    } else {
        let unit = fundamental_unit(k, caps)?.expect("real field has a unit");
        let reach = (unit.upper_bound() + 1) * (isqrt(&n) + 1);
        (isqrt(&(&reach * &reach / &d)), vec![1, -1])
    };
    if y_max >= BigInt::from(caps.principal_search) {
        return Err(Error::cap(format!(
            "principality search needs {y_max} steps, above the cap {}",
            caps.principal_search
        )));
    }
    let mut found: Vec<NfElem> = Vec::new();
    let mut y = BigInt::zero();
    while y <= y_max {
        for &s in &signs {
            // X² = DY² + 4N (norm +N) or DY² - 4N (norm -N).
            let t = &d * &y * &y + BigInt::from(s) * &four_n;
            if t.is_negative() {
                continue;
            }
            let Some(x) = exact_sqrt(&t) else { continue };
            for (sx, sy) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let cand = half_form(k, &(BigInt::from(sx) * &x), &(BigInt::from(sy) * &y));
                if let Some(beta) = cand {
                    if ideal.contains(&beta) && !found.contains(&beta) {
                        found.push(beta);
                    }
                }
            }
        }
        y += 1;
    }
    found.sort_by(canonical_order);
    let Some(beta) = found.into_iter().next() else {
        return Ok(None);
    };
    if NfIdeal::principal(k, &beta)? != *ideal {
        return Err(Error::violation("element of full norm does not generate the ideal"));
    }
    Ok(Some(beta))
}

/// The ideal class group, found by closing the classes of the primes below
/// the Minkowski bound under multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassGroup {
    pub order: usize,
    pub minkowski_primes: Vec<u64>,
    /// One integral ideal per class, `O_K` first.
    pub representatives: Vec<NfIdeal>,
}

/// Rational primes up to the Minkowski bound, without floating point. For
/// imaginary fields the bound is `(2/π)√|d|`; using `π > 333/106` can only
/// admit extra primes. For real fields it is `√d / 2`.
pub fn minkowski_primes(k: &NumberField) -> Vec<u64> {
    let d = k.discriminant().abs();
    let within = |l: u64| {
        let l = BigInt::from(l);
        if k.is_imaginary() {
            &l * &l * BigInt::from(333 * 333) <= BigInt::from(4 * 106 * 106) * &d
        } else {
            BigInt::from(4) * &l * &l <= d
        }
    };
    primes_from(2).take_while(|&l| within(l)).collect()
}

/// `X ~ R` exactly when `X · σ(R)` is principal, since `R · σ(R) = N(R)O_K`.
fn same_class(k: &NumberField, x: &NfIdeal, r: &NfIdeal, caps: &Caps) -> Result<bool> {
    let prod = x.mul(k, &r.apply(k, 1));
    Ok(principal_generator(k, &prod, caps)?.is_some())
}

pub fn class_group(k: &NumberField, caps: &Caps) -> Result<ClassGroup> {
    let minkowski_primes = minkowski_primes(k);
    let mut gens: Vec<PrimeIdeal> = Vec::new();
    for &l in &minkowski_primes {
        gens.extend(primes_above(k, l)?);
    }
    let mut reps = vec![NfIdeal::unit(k)];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for p in &gens {
            let next = reps[i].mul(k, &p.ideal);
            let mut known = false;
            for r in &reps {
                if same_class(k, &next, r, caps)? {
                    known = true;
                    break;
                }
            }
            if !known {
                if reps.len() >= caps.class_group_order {
                    return Err(Error::cap(format!(
                        "class group larger than the cap {}",
                        caps.class_group_order
                    )));
                }
                reps.push(next);
                queue.push_back(reps.len() - 1);
            }
        }
    }
    Ok(ClassGroup { order: reps.len(), minkowski_primes, representatives: reps })
}

pub fn class_number(k: &NumberField, caps: &Caps) -> Result<usize> {
    Ok(class_group(k, caps)?.order)
}
