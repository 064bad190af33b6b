//! Exact arithmetic: integers and rationals, polynomials over prime fields,
//! finite fields `F_{p^m}` with Frobenius and trace, integer matrices in
//! Hermite form and a small exact simplex routine.
//!
//! Nothing in this crate uses floating point.

pub mod fp_poly;
pub mod fq;
pub mod matrix;
pub mod primes;
pub mod simplex;

pub use num_bigint::BigInt;
pub use num_rational::BigRational as BigRat;

pub use fq::{fq_make, FqElem, FqField, FqPoly};

use num_integer::Integer;
use num_traits::{One, Zero};

/// Renders a rational as `a` or `a/b`.
pub fn rat_to_string(r: &BigRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn int_rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Scales a rational vector by the least common denominator and divides out
/// the content, returning the primitive integer vector with the same
/// direction (positive multiples only). Returns `None` for the zero vector.
pub fn primitive_integer_direction(v: &[BigRat]) -> Option<Vec<BigInt>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRat::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Some(ints.into_iter().map(|x| x / &g).collect())
}

/// Serde helpers writing integers as JSON numbers when they fit in `i64`
/// and as decimal strings otherwise.
pub mod ser {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn big_int<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match x.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&x.to_string()),
        }
    }

    pub fn big_ints<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&Wrap(x))?;
        }
        seq.end()
    }

    pub fn big_int_rows<S: Serializer>(rows: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(rows.len()))?;
        for r in rows {
            seq.serialize_element(&Row(r))?;
        }
        seq.end()
    }

    pub fn rat<S: Serializer>(x: &super::BigRat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::rat_to_string(x))
    }

    pub fn rats<S: Serializer>(xs: &[super::BigRat], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&super::rat_to_string(x))?;
        }
        seq.end()
    }

    struct Wrap<'a>(&'a BigInt);

    impl serde::Serialize for Wrap<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            big_int(self.0, s)
        }
    }

    struct Row<'a>(&'a [BigInt]);

    impl serde::Serialize for Row<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            big_ints(self.0, s)
        }
    }
}
