use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::matrix::det;
use crate::arith::primes::{exact_sqrt, squarefree_decomposition};
use crate::arith::{rat_to_string, BigRat};
use crate::error::{Error, Result};

/// An element of `K` by its rational coordinates `(x₀, x₁)` over the
/// integral basis `(1, ω)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NfElem {
    pub coords: Vec<BigRat>,
}

impl NfElem {
    pub fn new(coords: Vec<BigRat>) -> Self {
        NfElem { coords }
    }

    pub fn from_ints(coords: &[BigInt]) -> Self {
        NfElem { coords: coords.iter().map(|c| BigRat::from_integer(c.clone())).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Integer coordinates, if integral.
    pub fn int_coords(&self) -> Option<Vec<BigInt>> {
        self.is_integral().then(|| self.coords.iter().map(|c| c.to_integer()).collect())
    }

    /// Least common denominator of the coordinates.
    pub fn denominator(&self) -> BigInt {
        self.coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn add(&self, other: &NfElem) -> NfElem {
        NfElem::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &NfElem) -> NfElem {
        NfElem::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> NfElem {
        NfElem::new(self.coords.iter().map(|a| -a.clone()).collect())
    }

    pub fn scale(&self, c: &BigRat) -> NfElem {
        NfElem::new(self.coords.iter().map(|a| a * c).collect())
    }
}

impl Serialize for NfElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coords.iter().map(rat_to_string).collect();
        strings.serialize(s)
    }
}

/// Which integral basis the field uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaKind {
    /// `ω = √D`, for `D ≡ 2, 3 (mod 4)`.
    Sqrt,
    /// `ω = (1 + √D)/2`, for `D ≡ 1 (mod 4)`.
    HalfSqrt,
}

/// A quadratic field `ℚ(ζ)` where `ζ` is a root of `f = x² + c₁x + c₀`,
/// presented over the integral basis `(1, ω)` of `O_K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberField {
    poly: Vec<BigInt>,
    squarefree: BigInt,
    omega: OmegaKind,
    /// `ω² = a + bω`.
    omega_sq: (BigInt, BigInt),
    disc: BigInt,
    zeta: NfElem,
    index: BigInt,
    /// Row `j` of each matrix holds the coordinates of `σ(ω_j)`. The
    /// identity comes first.
    automorphisms: Vec<Vec<Vec<BigInt>>>,
}

/// Builds the field defined by a monic integer polynomial, coefficients
/// ascending `c₀, c₁, …, 1`. Only degree 2 is supported.
pub fn nf_make(poly: &[i64]) -> Result<NumberField> {
    let deg = poly.len().checked_sub(1).ok_or_else(|| Error::invalid("empty polynomial"))?;
    if poly[deg] != 1 {
        return Err(Error::invalid("the defining polynomial must be monic"));
    }
    match deg {
        2 => {}
        3 | 4 => {
            return Err(Error::Unsupported(format!(
                "degree {deg} fields are not supported; only quadratic fields are implemented"
            )))
        }
        _ => return Err(Error::invalid(format!("degree {deg} is outside 2..=4"))),
    }
    let c0 = BigInt::from(poly[0]);
    let c1 = BigInt::from(poly[1]);
    let delta = &c1 * &c1 - BigInt::from(4) * &c0;
    if delta.is_zero() || exact_sqrt(&delta).is_some() {
        return Err(Error::invalid(format!("x^2 + {c1}x + {c0} is reducible over ℚ")));
    }
    let (d, k) = squarefree_decomposition(&delta);
    let omega =
        if d.mod_floor(&BigInt::from(4)) == BigInt::one() { OmegaKind::HalfSqrt } else { OmegaKind::Sqrt };
    let (omega_sq, disc) = match omega {
        OmegaKind::Sqrt => ((d.clone(), BigInt::zero()), BigInt::from(4) * &d),
        OmegaKind::HalfSqrt => (((&d - 1) / 4, BigInt::one()), d.clone()),
    };
    // ζ = (-c₁ + k√D)/2.
    let two = BigRat::from_integer(BigInt::from(2));
    let zeta = match omega {
        OmegaKind::Sqrt => NfElem::new(vec![
            BigRat::from_integer(-c1.clone()) / &two,
            BigRat::from_integer(k.clone()) / &two,
        ]),
        OmegaKind::HalfSqrt => {
            NfElem::new(vec![BigRat::from_integer(-&c1 - &k) / &two, BigRat::from_integer(k.clone())])
        }
    };
    let b = omega_sq.1.clone();
    let conj = vec![vec![BigInt::one(), BigInt::zero()], vec![b, -BigInt::one()]];
    let id = vec![vec![BigInt::one(), BigInt::zero()], vec![BigInt::zero(), BigInt::one()]];
    let mut field = NumberField {
        poly: vec![c0, c1, BigInt::one()],
        squarefree: d,
        omega,
        omega_sq,
        disc,
        zeta,
        index: BigInt::zero(),
        automorphisms: vec![id, conj],
    };
    field.index = field.compute_index()?;
    field.check()?;
    Ok(field)
}

/// `ℚ(√D)` defined by `x² - D`.
pub fn nf_from_disc(d: i64) -> Result<NumberField> {
    nf_make(&[d.checked_neg().ok_or_else(|| Error::invalid("D out of range"))?, 0, 1])
}

impl NumberField {
    pub fn degree(&self) -> usize {
        2
    }

    /// Coefficients of `f`, ascending.
    pub fn poly(&self) -> &[BigInt] {
        &self.poly
    }

    /// The squarefree `D` with `K = ℚ(√D)`.
    pub fn squarefree(&self) -> &BigInt {
        &self.squarefree
    }

    pub fn omega_kind(&self) -> OmegaKind {
        self.omega
    }

    pub fn is_imaginary(&self) -> bool {
        self.squarefree.is_negative()
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.disc
    }

    pub fn zeta(&self) -> &NfElem {
        &self.zeta
    }

    /// `[O_K : ℤ[ζ]]`.
    pub fn index(&self) -> &BigInt {
        &self.index
    }

    pub fn automorphisms(&self) -> &[Vec<Vec<BigInt>>] {
        &self.automorphisms
    }

    pub fn zero(&self) -> NfElem {
        NfElem::new(vec![BigRat::zero(), BigRat::zero()])
    }

    pub fn one(&self) -> NfElem {
        self.from_int(&BigInt::one())
    }

    pub fn from_int(&self, n: &BigInt) -> NfElem {
        NfElem::new(vec![BigRat::from_integer(n.clone()), BigRat::zero()])
    }

    pub fn omega(&self) -> NfElem {
        NfElem::new(vec![BigRat::zero(), BigRat::one()])
    }

    /// The integral basis `(1, ω)`.
    pub fn integral_basis(&self) -> Vec<NfElem> {
        vec![self.one(), self.omega()]
    }

    /// Element `u + vω`.
    pub fn elem(&self, u: i64, v: i64) -> NfElem {
        NfElem::from_ints(&[BigInt::from(u), BigInt::from(v)])
    }

    pub fn mul(&self, x: &NfElem, y: &NfElem) -> NfElem {
        let (a, b) = (&self.omega_sq.0, &self.omega_sq.1);
        let (a, b) = (BigRat::from_integer(a.clone()), BigRat::from_integer(b.clone()));
        let (x0, x1) = (&x.coords[0], &x.coords[1]);
        let (y0, y1) = (&y.coords[0], &y.coords[1]);
        let hi = x1 * y1;
        NfElem::new(vec![x0 * y0 + &a * &hi, x0 * y1 + x1 * y0 + &b * &hi])
    }

    pub fn pow(&self, x: &NfElem, e: u32) -> NfElem {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    pub fn norm(&self, x: &NfElem) -> BigRat {
        let a = BigRat::from_integer(self.omega_sq.0.clone());
        let b = BigRat::from_integer(self.omega_sq.1.clone());
        let (x0, x1) = (&x.coords[0], &x.coords[1]);
        x0 * x0 + b * x0 * x1 - a * x1 * x1
    }

    pub fn trace(&self, x: &NfElem) -> BigRat {
        let b = BigRat::from_integer(self.omega_sq.1.clone());
        BigRat::from_integer(BigInt::from(2)) * &x.coords[0] + b * &x.coords[1]
    }

    pub fn inverse(&self, x: &NfElem) -> Option<NfElem> {
        let n = self.norm(x);
        if n.is_zero() {
            return None;
        }
        Some(self.conjugate(x).scale(&n.recip()))
    }

    /// Applies the automorphism with the given index in
    /// [`automorphisms`](Self::automorphisms).
    pub fn apply(&self, aut: usize, x: &NfElem) -> NfElem {
        let m = &self.automorphisms[aut];
        let coords = (0..2)
            .map(|j| (0..2).map(|i| &x.coords[i] * BigRat::from_integer(m[i][j].clone())).sum())
            .collect();
        NfElem::new(coords)
    }

    /// The nontrivial automorphism.
    pub fn conjugate(&self, x: &NfElem) -> NfElem {
        self.apply(1, x)
    }

    /// Index of the automorphism `x ↦ then(first(x))`.
    pub fn compose(&self, first: usize, then: usize) -> usize {
        let image = self.apply(then, &self.apply(first, &self.omega()));
        (0..self.automorphisms.len())
            .find(|&k| self.apply(k, &self.omega()) == image)
            .expect("automorphisms form a group")
    }

    /// `g(x)` for an integer polynomial `g`, coefficients ascending.
    pub fn eval_poly(&self, g: &[BigInt], x: &NfElem) -> NfElem {
        g.iter().rev().fold(self.zero(), |acc, c| self.mul(&acc, x).add(&self.from_int(c)))
    }

    /// Minimal polynomial of `ω`, ascending: `x² - bx - a`.
    pub fn omega_min_poly(&self) -> Vec<BigInt> {
        vec![-self.omega_sq.0.clone(), -self.omega_sq.1.clone(), BigInt::one()]
    }

    /// Rows give `1` and `ω` in the power basis `(1, ζ)`.
    pub fn integral_basis_over_power_basis(&self) -> Vec<Vec<BigRat>> {
        let (z0, z1) = (&self.zeta.coords[0], &self.zeta.coords[1]);
        vec![vec![BigRat::one(), BigRat::zero()], vec![-z0 / z1, z1.recip()]]
    }

    fn compute_index(&self) -> Result<BigInt> {
        let z = self
            .zeta
            .int_coords()
            .ok_or_else(|| Error::violation("ζ is not integral over the computed basis"))?;
        let m = vec![vec![BigInt::one(), BigInt::zero()], z];
        Ok(det(&m).abs())
    }

    /// Discriminant from the trace form, `disc(f) = index² · d_K`, and the
    /// roots of `f` under every automorphism.
    fn check(&self) -> Result<()> {
        let basis = self.integral_basis();
        let gram: Vec<Vec<BigInt>> = basis
            .iter()
            .map(|x| basis.iter().map(|y| self.trace(&self.mul(x, y)).to_integer()).collect())
            .collect();
        if det(&gram) != self.disc {
            return Err(Error::violation("trace-form discriminant mismatch"));
        }
        let disc_f = &self.poly[1] * &self.poly[1] - BigInt::from(4) * &self.poly[0];
        if disc_f != &self.index * &self.index * &self.disc {
            return Err(Error::violation("disc(f) ≠ index² · d_K"));
        }
        for k in 0..self.automorphisms.len() {
            if !self.eval_poly(&self.poly, &self.apply(k, &self.zeta)).is_zero() {
                return Err(Error::violation("an automorphism does not permute the roots of f"));
            }
        }
        Ok(())
    }

    /// Human-readable description of `ω`.
    pub fn omega_description(&self) -> String {
        match self.omega {
            OmegaKind::Sqrt => format!("sqrt({})", self.squarefree),
            OmegaKind::HalfSqrt => format!("(1+sqrt({}))/2", self.squarefree),
        }
    }

    pub fn format_elem(&self, x: &NfElem) -> String {
        let (u, v) = (&x.coords[0], &x.coords[1]);
        let w = match self.omega {
            OmegaKind::Sqrt => format!("sqrt({})", self.squarefree),
            OmegaKind::HalfSqrt => "w".to_string(),
        };
        let term = |c: &BigRat| {
            if c.is_one() {
                w.clone()
            } else if (-c).is_one() {
                format!("-{w}")
            } else {
                format!("{}*{w}", rat_to_string(c))
            }
        };
        match (u.is_zero(), v.is_zero()) {
            (_, true) => rat_to_string(u),
            (true, false) => term(v),
            (false, false) => {
                let sign = if v.is_negative() { "-" } else { "+" };
                format!("{} {sign} {}", rat_to_string(u), term(&v.abs()))
            }
        }
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.squarefree)
    }
}

impl Serialize for NumberField {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let ints = |v: &[BigInt]| -> Vec<serde_json::Value> {
            v.iter()
                .map(|x| match x.to_i64() {
                    Some(i) => serde_json::Value::from(i),
                    None => serde_json::Value::from(x.to_string()),
                })
                .collect()
        };
        let mut st = s.serialize_struct("NumberField", 7)?;
        st.serialize_field("poly", &ints(&self.poly))?;
        st.serialize_field("squarefree", &ints(std::slice::from_ref(&self.squarefree))[0])?;
        st.serialize_field("omega", &self.omega_description())?;
        st.serialize_field("discriminant", &ints(std::slice::from_ref(&self.disc))[0])?;
        st.serialize_field("zeta", &self.zeta)?;
        st.serialize_field("index", &ints(std::slice::from_ref(&self.index))[0])?;
        let auts: Vec<Vec<Vec<serde_json::Value>>> =
            self.automorphisms.iter().map(|m| m.iter().map(|r| ints(r)).collect()).collect();
        st.serialize_field("automorphisms", &auts)?;
        st.end()
    }
}
