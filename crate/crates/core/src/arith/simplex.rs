//! Exact phase-one simplex over ℚ with Bland's anti-cycling rule.
//!
//! Used to produce separating functionals (dual certificates) for finite
//! ray sets; problem sizes are a handful of rows and columns.

use num_traits::{One, Signed, Zero};

use super::BigRat;

/// Finds `x ≥ 0` with `A x = b`, or `None` when the system is infeasible.
pub fn nonnegative_solution(a: &[Vec<BigRat>], b: &[BigRat]) -> Option<Vec<BigRat>> {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    // Tableau columns: n structural, m artificial, then the right-hand side.
    let width = n + m + 1;
    let mut t: Vec<Vec<BigRat>> = Vec::with_capacity(m + 1);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut r: Vec<BigRat> = row.iter().map(|x| if flip { -x.clone() } else { x.clone() }).collect();
        r.extend((0..m).map(|j| if i == j { BigRat::one() } else { BigRat::zero() }));
        r.push(if flip { -rhs.clone() } else { rhs.clone() });
        t.push(r);
    }
    // Objective row: minimise the sum of artificials, expressed in the
    // non-basic variables (reduced costs).
    let mut obj = vec![BigRat::zero(); width];
    for row in &t {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Bland: lowest-index column with negative reduced cost.
    while let Some(enter) = (0..n + m).find(|&j| t[m][j].is_negative()) {
        let mut leave: Option<(usize, BigRat)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            // Unbounded below cannot happen for a phase-one objective.
            unreachable!("phase-one objective is bounded below by zero");
        };
        pivot(&mut t, pr, enter);
        basis[pr] = enter;
    }

    if !t[m][width - 1].is_zero() {
        return None;
    }
    let mut x = vec![BigRat::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<BigRat>], pr: usize, pc: usize) {
    let inv = t[pr][pc].recip();
    for x in t[pr].iter_mut() {
        *x *= &inv;
    }
    let prow = t[pr].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i != pr && !row[pc].is_zero() {
            let f = row[pc].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                *x -= &f * y;
            }
        }
    }
}

/// Finds a rational `u` with `u · v ≥ 1` for every given vector, i.e. a
/// functional that is strictly positive on all of them. `None` when no such
/// functional exists (the vectors do not lie in an open half-space).
pub fn positive_functional(vectors: &[Vec<BigRat>], dim: usize) -> Option<Vec<BigRat>> {
    if vectors.is_empty() {
        let mut u = vec![BigRat::zero(); dim];
        if let Some(first) = u.first_mut() {
            *first = BigRat::one();
        }
        return Some(u);
    }
    // Variables: u⁺ (dim), u⁻ (dim), slack s (k). Rows: v·u⁺ − v·u⁻ − s = 1.
    let k = vectors.len();
    let a: Vec<Vec<BigRat>> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut row: Vec<BigRat> = v.to_vec();
            row.extend(v.iter().map(|x| -x.clone()));
            row.extend((0..k).map(|j| if i == j { -BigRat::one() } else { BigRat::zero() }));
            row
        })
        .collect();
    let b = vec![BigRat::one(); k];
    let x = nonnegative_solution(&a, &b)?;
    Some((0..dim).map(|j| &x[j] - &x[dim + j]).collect())
}
