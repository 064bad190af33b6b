//! Floor bounds on finiteness degrees and the `conv_{≤t}` inclusion
//! calculus between character sets.

use serde::Serialize;

use crate::centralizer::Status;
use crate::charsphere::{
    cone_membership, positive_combination_feasible, tame_degree, ConeWitness, Ray, SigmaSet, TameDegree,
};
use crate::error::{Error, Result};

fn positive(name: &str, x: usize) -> Result<()> {
    if x == 0 {
        Err(Error::invalid(format!("{name} must be a positive integer")))
    } else {
        Ok(())
    }
}

/// `⌊n/h⌋`: the finiteness degree inherited by the centralizer of a finite
/// group of order `h` acting on a group of type FP_n.
pub fn centralizer_fp_bound(n: usize, h: usize) -> Result<usize> {
    positive("n", n)?;
    positive("h", h)?;
    Ok(n / h)
}

/// `⌊n/s⌋` for orders of finite subgroups bounded by `s`.
pub fn bredon_bound(n: usize, s: usize) -> Result<usize> {
    positive("n", n)?;
    positive("s", s)?;
    Ok(n / s)
}

/// `⌊n/(sc)⌋` for nilpotency class `c`. Only conjectural.
pub fn conjecture_bound(n: usize, s: usize, c: usize) -> Result<usize> {
    positive("n", n)?;
    positive("s", s)?;
    positive("c", c)?;
    Ok(n / (s * c))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundValue {
    pub name: &'static str,
    pub formula: String,
    pub value: usize,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub s: usize,
    pub c: Option<usize>,
    pub values: Vec<BoundValue>,
}

/// All applicable bounds for the given parameters.
pub fn bounds_report(n: usize, s: usize, c: Option<usize>) -> Result<BoundsReport> {
    let mut values = vec![
        BoundValue {
            name: "centralizer",
            formula: format!("floor({n}/{s})"),
            value: centralizer_fp_bound(n, s)?,
            status: Status::Theorem,
        },
        BoundValue {
            name: "bredon",
            formula: format!("floor({n}/{s})"),
            value: bredon_bound(n, s)?,
            status: Status::Theorem,
        },
    ];
    if let Some(c) = c {
        values.push(BoundValue {
            name: "nilpotent_conjecture",
            formula: format!("floor({n}/({s}*{c}))"),
            value: conjecture_bound(n, s, c)?,
            status: Status::Conjectural,
        });
    }
    Ok(BoundsReport { n, s, c, values })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RayWitness {
    pub ray: Ray,
    pub witness: ConeWitness,
}

/// Tameness transported through a certified inclusion: if every ray of
/// `S_sub` lies in `conv_{≤t}(S)` and `S` has tame degree `n`, then
/// `S_sub` has tame degree at least `⌊n/t⌋`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedBound {
    pub set_tame_degree: TameDegree,
    pub bound: TameDegree,
    pub sub_tame_degree: TameDegree,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvInclusion {
    pub t: usize,
    pub included: bool,
    pub witnesses: Vec<RayWitness>,
    /// First ray of `S_sub`, in lexicographic order, with no witness.
    pub counterexample: Option<Ray>,
    /// Present only when the inclusion is certified.
    pub derived: Option<DerivedBound>,
}

impl ConvInclusion {
    pub fn verify(&self, sub: &SigmaSet, set: &SigmaSet) -> bool {
        let witnesses_ok = self.witnesses.iter().all(|w| {
            w.witness.verify(&w.ray)
                && w.witness.terms.len() <= self.t
                && w.witness.terms.iter().all(|term| set.contains(&term.ray))
        });
        let coverage_ok = if self.included {
            self.counterexample.is_none()
                && self.witnesses.len() == sub.len()
                && self.witnesses.iter().zip(sub.rays()).all(|(w, r)| w.ray == *r)
        } else {
            self.counterexample
                .as_ref()
                .is_some_and(|c| sub.contains(c) && cone_membership(c, set, self.t).is_none())
        };
        witnesses_ok && coverage_ok && self.derived.as_ref().is_none_or(|d| d.holds)
    }
}

/// Certifies `S_sub ⊆ conv_{≤t}(S)` ray by ray, stopping at the first ray
/// without a witness.
pub fn conv_inclusion_certificate(sub: &SigmaSet, set: &SigmaSet, t: usize) -> Result<ConvInclusion> {
    if sub.rank() != set.rank() {
        return Err(Error::invalid(format!("rank mismatch: {} versus {}", sub.rank(), set.rank())));
    }
    positive("t", t)?;
    let mut witnesses = Vec::new();
    for ray in sub.rays() {
        match cone_membership(ray, set, t) {
            Some(witness) => witnesses.push(RayWitness { ray: ray.clone(), witness }),
            None => {
                return Ok(ConvInclusion {
                    t,
                    included: false,
                    witnesses,
                    counterexample: Some(ray.clone()),
                    derived: None,
                })
            }
        }
    }
    let set_degree = tame_degree(set).degree;
    let sub_degree = tame_degree(sub).degree;
    let bound = match set_degree {
        TameDegree::Finite(n) => TameDegree::Finite(n / t),
        TameDegree::Infinite => TameDegree::Infinite,
    };
    let holds = match bound {
        TameDegree::Finite(b) => positive_combination_feasible(sub, b).is_none(),
        TameDegree::Infinite => sub_degree == TameDegree::Infinite,
    };
    if !holds {
        return Err(Error::violation("derived tameness bound fails on a certified inclusion"));
    }
    Ok(ConvInclusion {
        t,
        included: true,
        witnesses,
        counterexample: None,
        derived: Some(DerivedBound {
            set_tame_degree: set_degree,
            bound,
            sub_tame_degree: sub_degree,
            holds,
        }),
    })
}
