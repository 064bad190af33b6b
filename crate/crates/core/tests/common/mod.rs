//! Independent oracles shared by the integration tests. None of them call
//! into the algorithms they check.

#![allow(dead_code)]

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::Rng;
use sigmatame::charsphere::{Ray, SigmaSet};

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Scales a row so its first nonzero coefficient is ±1, keeping the sense
/// of the inequality.
fn normalize((a, b): (Vec<Q>, Q)) -> (Vec<Q>, Q) {
    match a.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let s = lead.abs();
            (a.iter().map(|x| x / &s).collect(), b / s)
        }
        None => (a, b),
    }
}

/// Feasibility of `{x : e·x = f for (e, f) in eqs, a·x ≤ b for (a, b) in
/// ineqs}`. Equalities are used to substitute variables away; the
/// remaining inequalities go through Fourier–Motzkin elimination.
pub fn fm_feasible(mut eqs: Vec<(Vec<Q>, Q)>, mut ineqs: Vec<(Vec<Q>, Q)>, vars: usize) -> bool {
    for v in 0..vars {
        if let Some(i) = eqs.iter().position(|(e, _)| !e[v].is_zero()) {
            let (e, f) = eqs.swap_remove(i);
            let sub = |(a, b): (Vec<Q>, Q)| -> (Vec<Q>, Q) {
                let t = &a[v] / &e[v];
                let a = a.iter().zip(&e).map(|(x, y)| x - y * &t).collect();
                (a, b - &f * &t)
            };
            eqs = eqs.into_iter().map(sub).collect();
            ineqs = ineqs.into_iter().map(sub).collect();
            continue;
        }
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for (a, b) in ineqs {
            if a[v].is_positive() {
                pos.push((a, b));
            } else if a[v].is_negative() {
                neg.push((a, b));
            } else {
                rest.push((a, b));
            }
        }
        for ((ap, bp), (an, bn)) in pos.iter().cartesian_product(neg.iter()) {
            let (sp, sn) = (-an[v].clone(), ap[v].clone());
            let a: Vec<Q> = ap.iter().zip(an).map(|(x, y)| x * &sp + y * &sn).collect();
            rest.push((a, bp * &sp + bn * &sn));
        }
        ineqs = rest.into_iter().map(normalize).collect();
        ineqs.sort();
        ineqs.dedup();
    }
    eqs.iter().all(|(_, f)| f.is_zero()) && ineqs.iter().all(|(_, b)| !b.is_negative())
}

/// Whether some nonnegative combination of `cols`, with weights summing to
/// one, vanishes.
fn nonneg_zero_combination(cols: &[&Ray]) -> bool {
    let k = cols.len();
    let rank = cols[0].rank();
    let mut eqs: Vec<(Vec<Q>, Q)> =
        (0..rank).map(|i| (cols.iter().map(|r| q(r.coords()[i])).collect(), Q::zero())).collect();
    eqs.push((vec![Q::one(); k], Q::one()));
    let ineqs = (0..k)
        .map(|j| {
            let mut a = vec![Q::zero(); k];
            a[j] = -Q::one();
            (a, Q::zero())
        })
        .collect();
    fm_feasible(eqs, ineqs, k)
}

/// Brute-force answer to "is 0 a positive combination of at most `m`
/// rays of `set`".
pub fn fm_zero_in_conv(set: &SigmaSet, m: usize) -> bool {
    let rays = set.to_vec();
    (1..=m.min(rays.len())).any(|s| rays.iter().combinations(s).any(|c| nonneg_zero_combination(&c)))
}

/// A random nonempty set of at most `max_rays` rays in rank `rank`, coordinates in
/// `[-2, 2]`.
pub fn random_set(rng: &mut StdRng, rank: usize, max_rays: usize) -> SigmaSet {
    let mut set = SigmaSet::empty(rank);
    let target = rng.gen_range(1..=max_rays);
    // Rank 1 has only two rays, so the number of draws is bounded.
    for _ in 0..64 {
        if set.len() == target {
            break;
        }
        let v: Vec<i64> = (0..rank).map(|_| rng.gen_range(-2..=2)).collect();
        if let Ok(r) = Ray::canonicalize(&v) {
            set.insert(r).unwrap();
        }
    }
    set
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Class number of the imaginary quadratic order of discriminant `d < 0`
/// by counting reduced primitive forms.
fn imaginary_class_number(d: i64) -> usize {
    let mut h = 0;
    let mut a = 1;
    while 3 * a * a <= -d {
        for b in -a + 1..=a {
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (c == a && b < 0) {
                continue;
            }
            if gcd(gcd(a, b), c) == 1 {
                h += 1;
            }
        }
        a += 1;
    }
    h
}

/// Narrow and wide class numbers of the real quadratic order of
/// discriminant `d > 0` by cycles of reduced indefinite forms.
fn real_class_number(d: i64) -> usize {
    let s = (d as f64).sqrt();
    let reduced = |a: i64, b: i64| {
        b > 0
            && (b as f64) < s
            && s - (b as f64) < (2 * a.abs()) as f64
            && ((2 * a.abs()) as f64) < s + b as f64
    };
    let mut forms = Vec::new();
    for b in 1..=(s as i64) {
        if (b * b - d) % 4 != 0 {
            continue;
        }
        let ac = (b * b - d) / 4;
        for a in 1..=ac.abs() {
            if ac % a != 0 {
                continue;
            }
            for a in [a, -a] {
                let c = ac / a;
                if reduced(a, b) && gcd(gcd(a, b), c) == 1 {
                    forms.push((a, b, c));
                }
            }
        }
    }
    let rho = |(_, b, c): (i64, i64, i64)| -> (i64, i64, i64) {
        let m = 2 * c.abs();
        // r ≡ -b (mod 2|c|) in (s - 2|c|, s).
        let mut r = (-b).rem_euclid(m);
        while (r as f64) < s - m as f64 {
            r += m;
        }
        while (r as f64) > s {
            r -= m;
        }
        (c, r, (r * r - d) / (4 * c))
    };
    let mut seen = std::collections::HashSet::new();
    let mut cycles = Vec::new();
    for &f in &forms {
        if seen.contains(&f) {
            continue;
        }
        let mut cycle = Vec::new();
        let mut g = f;
        loop {
            seen.insert(g);
            cycle.push(g);
            g = rho(g);
            if g == f {
                break;
            }
        }
        cycles.push(cycle);
    }
    let narrow = cycles.len();
    let principal = cycles.iter().find(|c| c.iter().any(|f| f.0 == 1)).expect("principal cycle");
    if principal.iter().any(|f| f.0 == -1) {
        narrow
    } else {
        narrow / 2
    }
}

/// Class number of the maximal order with fundamental discriminant `d`.
pub fn forms_class_number(d: i64) -> usize {
    if d < 0 {
        imaginary_class_number(d)
    } else {
        real_class_number(d)
    }
}

fn squarefree(n: i64) -> bool {
    let n = n.abs();
    (2..).take_while(|p| p * p <= n).all(|p| n % (p * p) != 0)
}

/// Squarefree `D ≠ 1` together with `d_K`, for every field with
/// `|d_K| ≤ bound`.
pub fn fields_up_to(bound: i64) -> Vec<(i64, i64)> {
    (-bound..=bound)
        .filter(|&d| d != 0 && d != 1 && squarefree(d))
        .map(|d| (d, if d.rem_euclid(4) == 1 { d } else { 4 * d }))
        .filter(|(_, dk)| dk.abs() <= bound)
        .collect()
}

/// Orbits of a permutation group on `0..n`, given generators as images.
pub fn orbit_count(n: usize, gens: &[Vec<usize>]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for g in gens {
        for (i, &gi) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, gi));
            parent[a] = b;
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

/// Determinant by fraction-free Gaussian elimination over the rationals.
pub fn det(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut m: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let mut acc = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        acc *= m[c][c].clone();
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            let pivot_row = m[c].clone();
            for (x, y) in m[r].iter_mut().zip(&pivot_row).skip(c) {
                *x -= y * &f;
            }
        }
    }
    assert!(acc.is_integer());
    acc.to_integer()
}
