use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point `[χ]` of the character sphere: a nonzero primitive integer
/// vector. `[χ]` and `[-χ]` are different rays.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Ray(Vec<i64>);

impl Ray {
    /// Divides out the gcd of the absolute values; the sign is kept.
    pub fn canonicalize(v: &[i64]) -> Result<Ray> {
        let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g == 0 {
            return Err(Error::invalid("the zero vector is not a character class"));
        }
        Ok(Ray(v.iter().map(|&x| x / g).collect()))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn neg(&self) -> Ray {
        Ray(self.0.iter().map(|x| -x).collect())
    }

    pub fn dot(&self, v: &[i64]) -> i64 {
        self.0.iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

impl TryFrom<Vec<i64>> for Ray {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Ray> {
        Ray::canonicalize(&v)
    }
}

impl From<Ray> for Vec<i64> {
    fn from(r: Ray) -> Vec<i64> {
        r.0
    }
}

impl fmt::Debug for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A finite set of rays of a common rank, kept in lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SigmaSet {
    rank: usize,
    rays: BTreeSet<Ray>,
}

#[derive(Serialize, Deserialize)]
struct SigmaSetFile {
    rank: usize,
    rays: Vec<Vec<i64>>,
}

impl SigmaSet {
    pub fn empty(rank: usize) -> Self {
        SigmaSet { rank, rays: BTreeSet::new() }
    }

    pub fn new(rank: usize, rays: impl IntoIterator<Item = Ray>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::invalid("rank must be positive"));
        }
        let mut set = SigmaSet::empty(rank);
        for r in rays {
            set.insert(r)?;
        }
        Ok(set)
    }

    /// Canonicalises each vector; duplicates collapse.
    pub fn from_vectors(rank: usize, vectors: &[Vec<i64>]) -> Result<Self> {
        let rays = vectors.iter().map(|v| Ray::canonicalize(v)).collect::<Result<Vec<_>>>()?;
        SigmaSet::new(rank, rays)
    }

    pub fn insert(&mut self, ray: Ray) -> Result<bool> {
        if ray.rank() != self.rank {
            return Err(Error::invalid(format!(
                "ray {ray} has length {} but the set has rank {}",
                ray.rank(),
                self.rank
            )));
        }
        Ok(self.rays.insert(ray))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn contains(&self, r: &Ray) -> bool {
        self.rays.contains(r)
    }

    /// Rays in lexicographic order.
    pub fn rays(&self) -> impl Iterator<Item = &Ray> {
        self.rays.iter()
    }

    pub fn to_vec(&self) -> Vec<Ray> {
        self.rays.iter().cloned().collect()
    }

    pub fn is_subset(&self, other: &SigmaSet) -> bool {
        self.rank == other.rank && self.rays.is_subset(&other.rays)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SigmaSetFile =
            serde_json::from_str(text).map_err(|e| Error::invalid(format!("malformed Σ-set JSON: {e}")))?;
        SigmaSet::from_vectors(file.rank, &file.rays)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("Σ-set serialises")
    }
}

impl Serialize for SigmaSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SigmaSetFile { rank: self.rank, rays: self.rays.iter().map(|r| r.0.clone()).collect() }.serialize(s)
    }
}

impl fmt::Display for SigmaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rays.iter().map(|r| r.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
