//! Finite groups acting on `ℤ^n` by integer matrices: the fixed sublattice
//! `Q₀`, the complement `Q₁ = ker(Σ_{t∈H} t)`, and the finite index of
//! `Q₀ ⊕ Q₁` in `ℤ^n`.
//!
//! Matrices act on column vectors, `q ↦ M q`. Characters are row vectors
//! and the induced action is `χ^h = χ ∘ h⁻¹`.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::matrix::{det, integer_kernel, to_big};
use crate::charsphere::Ray;
use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<i64>>;

/// Default bound on the order of the generated group.
pub const DEFAULT_GROUP_ORDER_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeAction {
    rank: usize,
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ActionFile {
    Matrices { rank: usize, generators: Vec<Matrix> },
    Permutations { rank: usize, perm_generators: Vec<Vec<usize>> },
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc: i64 = 0;
            for k in 0..n {
                acc = a[i][k]
                    .checked_mul(b[k][j])
                    .and_then(|x| acc.checked_add(x))
                    .ok_or_else(|| Error::invalid("matrix entries overflow: group is not finite"))?;
            }
            out[i][j] = acc;
        }
    }
    Ok(out)
}

/// Permutation matrix sending `e_i` to `e_{images[i]}` (0-based images).
pub fn permutation_matrix(images: &[usize]) -> Result<Matrix> {
    let n = images.len();
    let distinct: BTreeSet<usize> = images.iter().copied().collect();
    if distinct.len() != n || images.iter().any(|&i| i >= n) {
        return Err(Error::invalid(format!("{images:?} is not a permutation")));
    }
    let mut m = vec![vec![0i64; n]; n];
    for (i, &img) in images.iter().enumerate() {
        m[img][i] = 1;
    }
    Ok(m)
}

impl LatticeAction {
    /// Closes the generators under multiplication. Generators must be
    /// square of size `rank` with determinant ±1, and the group they
    /// generate must have order at most `cap`.
    pub fn new(rank: usize, generators: Vec<Matrix>, cap: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::invalid("rank must be positive"));
        }
        for g in &generators {
            if g.len() != rank || g.iter().any(|r| r.len() != rank) {
                return Err(Error::invalid(format!("generator is not {rank}×{rank}")));
            }
            if !det(&to_big(g)).abs().is_one() {
                return Err(Error::invalid("generator is not invertible over ℤ"));
            }
        }
        let id = identity(rank);
        let mut seen: BTreeSet<Matrix> = BTreeSet::from([id.clone()]);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = mat_mul(&x, g)?;
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(Error::invalid(format!("generated group has order above the cap {cap}")));
                    }
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(LatticeAction { rank, generators, elements })
    }

    /// Group generated by permutations of the basis, images 0-based.
    pub fn from_permutations(rank: usize, perms: &[Vec<usize>], cap: usize) -> Result<Self> {
        let gens = perms
            .iter()
            .map(|p| {
                if p.len() != rank {
                    return Err(Error::invalid(format!("permutation {p:?} has length ≠ {rank}")));
                }
                permutation_matrix(p)
            })
            .collect::<Result<Vec<_>>>()?;
        LatticeAction::new(rank, gens, cap)
    }

    /// Parses either `{ "rank", "generators" }` or the permutation
    /// shorthand `{ "rank", "perm_generators" }` with 1-based images.
    pub fn from_json(text: &str, cap: usize) -> Result<Self> {
        let file: ActionFile =
            serde_json::from_str(text).map_err(|e| Error::invalid(format!("malformed action JSON: {e}")))?;
        match file {
            ActionFile::Matrices { rank, generators } => LatticeAction::new(rank, generators, cap),
            ActionFile::Permutations { rank, perm_generators } => {
                let zero_based = perm_generators
                    .iter()
                    .map(|p| {
                        p.iter()
                            .map(|&i| {
                                i.checked_sub(1)
                                    .ok_or_else(|| Error::invalid("permutation images are 1-based"))
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                LatticeAction::from_permutations(rank, &zero_based, cap)
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// All group elements, identity first, in breadth-first order.
    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The norm map `N = Σ_{t∈H} t`.
    pub fn norm_matrix(&self) -> Matrix {
        let mut n = vec![vec![0i64; self.rank]; self.rank];
        for e in &self.elements {
            for i in 0..self.rank {
                for j in 0..self.rank {
                    n[i][j] += e[i][j];
                }
            }
        }
        n
    }

    fn inverse_of(&self, m: &Matrix) -> &Matrix {
        let id = identity(self.rank);
        self.elements
            .iter()
            .find(|x| mat_mul(m, x).map(|p| p == id).unwrap_or(false))
            .expect("finite group is closed under inverses")
    }
}

/// `Q₀ ⊕ Q₁` with `Q₀` fixed by `H`, `Q₁` killed by the norm map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// Basis vectors of `Q₀` (columns of the `n × d` basis matrix).
    pub q0_basis: Vec<Vec<i64>>,
    /// Basis vectors of `Q₁`.
    pub q1_basis: Vec<Vec<i64>>,
    /// `[ℤ^n : Q₀ ⊕ Q₁]`.
    pub index: u64,
}

fn to_i64_rows(rows: &[Vec<BigInt>]) -> Result<Vec<Vec<i64>>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i64().ok_or_else(|| Error::violation("basis entry overflows i64")))
                .collect()
        })
        .collect()
}

/// Hermite-reduced basis of `{v : M v = v for all M ∈ H}`. The lattice is
/// pure in `ℤ^n`.
pub fn fixed_sublattice(action: &LatticeAction) -> Result<Vec<Vec<i64>>> {
    let n = action.rank;
    let mut stacked: Matrix = Vec::new();
    for g in action.generators() {
        for (i, row) in g.iter().enumerate() {
            stacked.push(row.iter().enumerate().map(|(j, &x)| x - i64::from(i == j)).collect());
        }
    }
    to_i64_rows(&integer_kernel(&to_big(&stacked), n))
}

/// Takes `Q₁ = ker N` for the norm map `N` and certifies that `Q₀ ⊕ Q₁`
/// has finite index.
pub fn trace_complement(action: &LatticeAction, q0_basis: &[Vec<i64>]) -> Result<Decomposition> {
    let n = action.rank;
    let norm = action.norm_matrix();
    let q1 = to_i64_rows(&integer_kernel(&to_big(&norm), n))?;
    if q0_basis.len() + q1.len() != n {
        return Err(Error::violation(format!(
            "rank(Q0) + rank(ker N) = {} + {} ≠ {n}",
            q0_basis.len(),
            q1.len()
        )));
    }
    let combined: Vec<Vec<i64>> = q0_basis.iter().chain(&q1).cloned().collect();
    let index = det(&to_big(&combined)).abs();
    if index.is_zero() {
        return Err(Error::violation("Q0 and Q1 are not independent"));
    }
    let index = index.to_u64().ok_or_else(|| Error::violation("index overflows u64"))?;
    Ok(Decomposition { q0_basis: q0_basis.to_vec(), q1_basis: q1, index })
}

/// The orbit `{χ ∘ h⁻¹ : h ∈ H}` as canonical rays.
pub fn orbit_characters(action: &LatticeAction, chi: &Ray) -> Result<BTreeSet<Ray>> {
    if chi.rank() != action.rank {
        return Err(Error::invalid("character rank differs from lattice rank"));
    }
    action
        .elements()
        .iter()
        .map(|h| {
            let inv = action.inverse_of(h);
            let image: Vec<i64> = (0..action.rank)
                .map(|j| (0..action.rank).map(|i| chi.coords()[i] * inv[i][j]).sum())
                .collect();
            Ray::canonicalize(&image)
        })
        .collect()
}

/// Checks the decomposition directly: generators fix `Q₀`, the norm map
/// kills `Q₁`, and the index is the absolute determinant.
pub fn verify_decomposition(action: &LatticeAction, dec: &Decomposition) -> bool {
    let apply = |m: &Matrix, v: &[i64]| -> Vec<i64> {
        m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    };
    let fixes = action.generators().iter().all(|g| dec.q0_basis.iter().all(|v| apply(g, v) == *v));
    let norm = action.norm_matrix();
    let kills = dec.q1_basis.iter().all(|v| apply(&norm, v).iter().all(|&x| x == 0));
    let combined: Vec<Vec<i64>> = dec.q0_basis.iter().chain(&dec.q1_basis).cloned().collect();
    let index_ok = combined.len() == action.rank
        && det(&to_big(&combined)).abs() == BigInt::from(dec.index)
        && dec.index > 0;
    fixes && kills && index_ok
}
