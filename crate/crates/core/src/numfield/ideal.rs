use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::field::{NfElem, NumberField};
use crate::arith::fp_poly::FpPoly;
use crate::arith::matrix::{det, hnf, in_hnf_lattice};
use crate::arith::primes::{int_valuation, is_prime};
use crate::arith::BigRat;
use crate::error::{Error, Result};

/// A nonzero fractional ideal `(1/den) · L` where `L ⊆ O_K` is the lattice
/// spanned by the rows of `basis` (Hermite form, coordinates over the
/// integral basis) and `gcd(content(L), den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct NfIdeal {
    #[serde(serialize_with = "crate::arith::ser::big_int_rows")]
    basis: Vec<Vec<BigInt>>,
    #[serde(serialize_with = "crate::arith::ser::big_int")]
    den: BigInt,
}

impl NfIdeal {
    /// The `ℤ`-span of the given elements, which must already be closed
    /// under multiplication by `O_K`.
    fn from_z_span(k: &NumberField, elems: &[NfElem]) -> Result<NfIdeal> {
        let n = k.degree();
        let den = elems.iter().fold(BigInt::one(), |acc, e| acc.lcm(&e.denominator()));
        let scale = BigRat::from_integer(den.clone());
        let rows: Vec<Vec<BigInt>> =
            elems.iter().map(|e| e.coords.iter().map(|c| (c * &scale).to_integer()).collect()).collect();
        let basis = hnf(&rows);
        if basis.len() != n {
            return Err(Error::invalid("the zero ideal is not a fractional ideal"));
        }
        Ok(NfIdeal { basis, den }.normalized())
    }

    fn normalized(mut self) -> NfIdeal {
        let content = self.basis.iter().flatten().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let g = content.gcd(&self.den);
        if !g.is_one() {
            for x in self.basis.iter_mut().flatten() {
                *x /= &g;
            }
            self.den /= &g;
        }
        self
    }

    /// The ideal generated by the given elements over `O_K`.
    pub fn from_generators(k: &NumberField, gens: &[NfElem]) -> Result<NfIdeal> {
        let basis = k.integral_basis();
        let products: Vec<NfElem> =
            gens.iter().flat_map(|g| basis.iter().map(move |w| k.mul(g, w))).collect();
        NfIdeal::from_z_span(k, &products)
    }

    pub fn principal(k: &NumberField, x: &NfElem) -> Result<NfIdeal> {
        NfIdeal::from_generators(k, std::slice::from_ref(x))
    }

    pub fn unit(k: &NumberField) -> NfIdeal {
        NfIdeal::principal(k, &k.one()).expect("O_K is an ideal")
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// The `ℤ`-basis as field elements.
    pub fn basis_elems(&self) -> Vec<NfElem> {
        let d = BigRat::from_integer(self.den.clone());
        self.basis
            .iter()
            .map(|r| NfElem::new(r.iter().map(|x| BigRat::from_integer(x.clone()) / &d).collect()))
            .collect()
    }

    /// Lattice part `L` as an integral ideal.
    pub fn numerator(&self) -> NfIdeal {
        NfIdeal { basis: self.basis.clone(), den: BigInt::one() }
    }

    pub fn mul(&self, k: &NumberField, other: &NfIdeal) -> NfIdeal {
        let xs = self.basis_elems();
        let ys = other.basis_elems();
        let products: Vec<NfElem> = xs.iter().flat_map(|x| ys.iter().map(move |y| k.mul(x, y))).collect();
        NfIdeal::from_z_span(k, &products).expect("product of nonzero ideals is nonzero")
    }

    pub fn pow(&self, k: &NumberField, e: u32) -> NfIdeal {
        (0..e).fold(NfIdeal::unit(k), |acc, _| acc.mul(k, self))
    }

    /// `x · I` for nonzero `x`.
    pub fn scale(&self, k: &NumberField, x: &NfElem) -> Result<NfIdeal> {
        let products: Vec<NfElem> = self.basis_elems().iter().map(|b| k.mul(x, b)).collect();
        NfIdeal::from_z_span(k, &products)
    }

    /// Absolute norm `[O_K : L] / den^n`.
    pub fn norm(&self) -> BigRat {
        let n = self.basis.len() as u32;
        BigRat::new(det(&self.basis).abs(), self.den.pow(n))
    }

    pub fn contains(&self, x: &NfElem) -> bool {
        let scaled = x.scale(&BigRat::from_integer(self.den.clone()));
        match scaled.int_coords() {
            Some(v) => in_hnf_lattice(&self.basis, &v),
            None => false,
        }
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &NfIdeal) -> bool {
        other.basis_elems().iter().all(|x| self.contains(x))
    }

    pub fn apply(&self, k: &NumberField, aut: usize) -> NfIdeal {
        let images: Vec<NfElem> = self.basis_elems().iter().map(|x| k.apply(aut, x)).collect();
        NfIdeal::from_z_span(k, &images).expect("automorphisms preserve nonzero ideals")
    }

    /// Multiplying by each basis element of `O_K` stays inside the ideal.
    pub fn is_closed(&self, k: &NumberField) -> bool {
        self.basis_elems().iter().all(|b| k.integral_basis().iter().all(|w| self.contains(&k.mul(b, w))))
    }
}

impl fmt::Display for NfIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        if self.den.is_one() {
            write!(f, "<{}>", rows.join(" "))
        } else {
            write!(f, "<{}>/{}", rows.join(" "), self.den)
        }
    }
}

/// A prime ideal `P` over the rational prime `q`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PrimeIdeal {
    pub ideal: NfIdeal,
    pub q: u64,
    /// Ramification index.
    pub e: u32,
    /// Residue degree.
    pub f: u32,
    /// The factor `g` of the defining polynomial mod `q`, ascending, with
    /// `P = (q, g(θ))`.
    pub residue_poly: Vec<u64>,
}

/// A valuation value, `∞` at zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinite => s.serialize_str("infinite"),
        }
    }
}

fn check_prime(q: u64) -> Result<()> {
    if is_prime(q) {
        Ok(())
    } else {
        Err(Error::invalid(format!("{q} is not prime")))
    }
}

/// Kummer–Dedekind factorisation of `qO_K` using a generator `theta` of an
/// order whose index is prime to `q`, with minimal polynomial `poly`.
fn dedekind(k: &NumberField, q: u64, poly: &[BigInt], theta: &NfElem) -> Result<Vec<PrimeIdeal>> {
    let qi = BigInt::from(q);
    let reduced: Vec<u64> =
        poly.iter().map(|c| c.mod_floor(&qi).try_into().expect("residue fits in u64")).collect();
    let factors = FpPoly::new(q, reduced).factor();
    let mut out = Vec::new();
    for (g, e) in factors {
        let lifted: Vec<BigInt> = g.coeffs().iter().map(|&c| BigInt::from(c)).collect();
        let ideal = NfIdeal::from_generators(k, &[k.from_int(&qi), k.eval_poly(&lifted, theta)])?;
        let f = g.degree().expect("factors are nonconstant") as u32;
        out.push(PrimeIdeal { ideal, q, e, f, residue_poly: g.coeffs().to_vec() });
    }
    let total: u32 = out.iter().map(|p| p.e * p.f).sum();
    if total as usize != k.degree() {
        return Err(Error::violation(format!("Σ e·f = {total} for q = {q}")));
    }
    let product = out.iter().fold(NfIdeal::unit(k), |acc, p| acc.mul(k, &p.ideal.pow(k, p.e)));
    if product != NfIdeal::principal(k, &k.from_int(&qi))? {
        return Err(Error::violation(format!("factors of {q} do not multiply back to qO_K")));
    }
    for p in &out {
        if p.ideal.norm() != BigRat::from_integer(qi.pow(p.f)) {
            return Err(Error::violation("prime ideal norm is not q^f"));
        }
    }
    Ok(out)
}

/// Factors `qO_K` by factoring the defining polynomial `f` modulo `q`.
/// Requires `q ∤ [O_K : ℤ[ζ]]`. Factors are ordered by the degree and then
/// the coefficient vector of the corresponding factor of `f mod q`.
pub fn factor_rational_prime(k: &NumberField, q: u64) -> Result<Vec<PrimeIdeal>> {
    check_prime(q)?;
    if (k.index() % BigInt::from(q)).is_zero() {
        return Err(Error::invalid(format!(
            "{q} divides the index [O_K : Z[zeta]] = {}; choose another prime",
            k.index()
        )));
    }
    dedekind(k, q, k.poly(), k.zeta())
}

/// Factors `qO_K` for any prime `q`, using `ω`, which generates `O_K`.
pub fn primes_above(k: &NumberField, q: u64) -> Result<Vec<PrimeIdeal>> {
    check_prime(q)?;
    dedekind(k, q, &k.omega_min_poly(), &k.omega())
}

/// `υ_P(M)` for a fractional ideal `M`.
pub fn ideal_valuation(k: &NumberField, m: &NfIdeal, p: &PrimeIdeal) -> i64 {
    let lattice = m.numerator();
    let mut power = p.ideal.clone();
    let mut v: i64 = 0;
    while power.contains_ideal(&lattice) {
        v += 1;
        power = power.mul(k, &p.ideal);
    }
    let den_part = i64::from(int_valuation(m.denominator(), &BigInt::from(p.q)));
    v - i64::from(p.e) * den_part
}

/// `υ_P(x)`, infinite at zero.
pub fn element_valuation(k: &NumberField, x: &NfElem, p: &PrimeIdeal) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let ideal = NfIdeal::principal(k, x).expect("nonzero element");
    Valuation::Finite(ideal_valuation(k, &ideal, p))
}
