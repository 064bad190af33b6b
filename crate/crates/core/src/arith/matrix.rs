//! Integer and rational matrix routines: row Hermite normal form with a
//! unimodular transform, saturated integer kernels, Bareiss determinants
//! and rational null spaces.
//!
//! Matrices are `Vec<Vec<_>>` in row-major order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::BigRat;

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn to_big(m: &[Vec<i64>]) -> IntMatrix {
    m.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> IntMatrix {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).fold(BigInt::zero(), |acc, (x, brow)| acc + x * &brow[j]))
                .collect()
        })
        .collect()
}

/// Row Hermite normal form of `rows` together with a unimodular `U` such
/// that `U · rows = H`. `H` keeps all rows; the zero rows come last.
///
/// Conventions: pivots strictly increase left to right, are positive, and
/// every entry above a pivot lies in `[0, pivot)`.
pub fn hnf_with_transform(rows: &[Vec<BigInt>]) -> (IntMatrix, IntMatrix) {
    let m = rows.len();
    let n = rows.first().map_or(0, |r| r.len());
    let mut h: IntMatrix = rows.to_vec();
    let mut u = identity(m);
    let mut pivot_row = 0;
    let mut pivots: Vec<(usize, usize)> = Vec::new();

    for col in 0..n {
        if pivot_row == m {
            break;
        }
        // Euclid on the column below pivot_row until one nonzero remains.
        loop {
            let nonzero: Vec<usize> = (pivot_row..m).filter(|&r| !h[r][col].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let best = *nonzero.iter().min_by(|&&a, &&b| h[a][col].abs().cmp(&h[b][col].abs())).unwrap();
            h.swap(pivot_row, best);
            u.swap(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..m {
                if h[r][col].is_zero() {
                    continue;
                }
                let q = h[r][col].div_floor(&h[pivot_row][col]);
                sub_row_multiple(&mut h, r, pivot_row, &q);
                sub_row_multiple(&mut u, r, pivot_row, &q);
                if !h[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[pivot_row][col].is_zero() {
            continue;
        }
        if h[pivot_row][col].is_negative() {
            negate_row(&mut h, pivot_row);
            negate_row(&mut u, pivot_row);
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
    }

    for &(r, c) in &pivots {
        for above in 0..r {
            let q = h[above][c].div_floor(&h[r][c]);
            if !q.is_zero() {
                sub_row_multiple(&mut h, above, r, &q);
                sub_row_multiple(&mut u, above, r, &q);
            }
        }
    }
    (h, u)
}

fn sub_row_multiple(m: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    let src = m[source].clone();
    for (x, s) in m[target].iter_mut().zip(&src) {
        *x -= q * s;
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for x in m[r].iter_mut() {
        *x = -x.clone();
    }
}

/// Nonzero rows of the row Hermite normal form.
pub fn hnf(rows: &[Vec<BigInt>]) -> IntMatrix {
    let (h, _) = hnf_with_transform(rows);
    h.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
}

/// A basis of the integer kernel `{x ∈ ℤ^n : A x = 0}` of the `k × n`
/// matrix `a`, returned as Hermite-reduced row vectors. The kernel lattice
/// is saturated: `ℤ^n / ker` is torsion-free.
pub fn integer_kernel(a: &[Vec<BigInt>], n: usize) -> IntMatrix {
    if a.is_empty() {
        return identity(n);
    }
    let at = transpose(a);
    let (h, u) = hnf_with_transform(&at);
    let basis: IntMatrix =
        h.iter().zip(u).filter(|(row, _)| row.iter().all(|x| x.is_zero())).map(|(_, urow)| urow).collect();
    hnf(&basis)
}

/// Determinant by fraction-free Bareiss elimination.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: IntMatrix = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Reduced row echelon form over ℚ; returns the matrix and pivot columns.
pub fn rref(rows: &[Vec<BigRat>]) -> (Vec<Vec<BigRat>>, Vec<usize>) {
    let mut a: Vec<Vec<BigRat>> = rows.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(rows: &[Vec<BigRat>]) -> usize {
    rref(rows).1.len()
}

/// Basis of the rational null space `{x : A x = 0}` for `A` with `n` columns.
pub fn rational_kernel(a: &[Vec<BigRat>], n: usize) -> Vec<Vec<BigRat>> {
    let (r, pivots) = rref(a);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRat::zero(); n];
            v[f] = BigRat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[row][f].clone();
            }
            v
        })
        .collect()
}

/// Solves `x · M = target` for a square nonsingular rational matrix `M`
/// (row-vector convention). Returns `None` if `M` is singular.
pub fn solve_row(m: &[Vec<BigRat>], target: &[BigRat]) -> Option<Vec<BigRat>> {
    let n = m.len();
    // x M = t  <=>  M^T x^T = t^T
    let mt = transpose(m);
    let aug: Vec<Vec<BigRat>> = mt
        .into_iter()
        .zip(target)
        .map(|(mut row, t)| {
            row.push(t.clone());
            row
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    Some((0..n).map(|i| r[i][n].clone()).collect())
}

/// Inverse of a square rational matrix.
pub fn inverse(m: &[Vec<BigRat>]) -> Option<Vec<Vec<BigRat>>> {
    let n = m.len();
    let aug: Vec<Vec<BigRat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRat::one() } else { BigRat::zero() }));
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Membership of an integer vector in the lattice spanned by the rows of a
/// full-column-pivot Hermite basis.
pub fn in_hnf_lattice(basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut v = v.to_vec();
    for row in basis {
        let Some(c) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let (q, r) = v[c].div_rem(&row[c]);
        if !r.is_zero() {
            return false;
        }
        for (x, y) in v.iter_mut().zip(row) {
            *x -= &q * y;
        }
    }
    v.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(m: &[&[i64]]) -> IntMatrix {
        m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn hnf_shape_and_transform() {
        let a = big(&[&[4, 6, 2], &[2, 3, 7], &[6, 9, 9]]);
        let (h, u) = hnf_with_transform(&a);
        assert_eq!(mat_mul(&u, &a), h);
        assert!(det(&u).abs().is_one());
        assert_eq!(h[2], vec![BigInt::zero(); 3]);
        assert!(h[0][0] > BigInt::zero());
    }

    #[test]
    fn kernel_of_swap_norm() {
        // N = I + swap
        let n = big(&[&[1, 1], &[1, 1]]);
        assert_eq!(integer_kernel(&n, 2), big(&[&[1, -1]]));
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x + 4y = 0 has kernel generated by (2, -1), not a multiple of it
        let a = big(&[&[2, 4]]);
        assert_eq!(integer_kernel(&a, 2), big(&[&[2, -1]]));
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&big(&[&[2, 1], &[1, 3]])), BigInt::from(5));
        assert_eq!(det(&big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            det(&big(&[&[1, 0, 1, 0], &[0, 1, 0, 1], &[1, 0, -1, 0], &[0, 1, 0, -1]])),
            BigInt::from(4)
        );
        assert_eq!(det(&big(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn lattice_membership() {
        let b = hnf(&big(&[&[2, 0], &[1, 3]]));
        assert!(in_hnf_lattice(&b, &[BigInt::from(3), BigInt::from(3)]));
        assert!(!in_hnf_lattice(&b, &[BigInt::from(1), BigInt::from(0)]));
    }

    #[test]
    fn rational_null_space() {
        let r = |x: i64| BigRat::from_integer(BigInt::from(x));
        let a = vec![vec![r(1), r(0), r(-1)], vec![r(0), r(1), r(-1)]];
        let k = rational_kernel(&a, 3);
        assert_eq!(k, vec![vec![r(1), r(1), r(1)]]);
    }
}
