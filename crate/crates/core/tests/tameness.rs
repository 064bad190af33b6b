//! Tameness invariants under random ray sets.

mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use sigmatame::charsphere::{
    cone_membership, positive_combination_feasible, separating_functional, tame_degree, tameness_certificate,
    Ray, SigmaSet, TameDegree,
};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Whether some functional is at least one on every ray, decided by
/// Fourier–Motzkin elimination.
fn half_space_oracle(set: &SigmaSet) -> bool {
    let rank = set.rank();
    let ineqs =
        set.rays().map(|r| (r.coords().iter().map(|&c| -q(c)).collect(), -BigRational::one())).collect();
    common::fm_feasible(Vec::new(), ineqs, rank)
}

fn vectors(max_rank: usize, max_rays: usize) -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1..=max_rank).prop_flat_map(move |rank| {
        let v = prop::collection::vec(-2i64..=2, rank).prop_filter("nonzero", |v| v.iter().any(|&c| c != 0));
        (Just(rank), prop::collection::vec(v, 1..=max_rays))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn degree_is_at_least_one((rank, vs) in vectors(4, 6)) {
        let set = SigmaSet::from_vectors(rank, &vs).unwrap();
        prop_assert!(tame_degree(&set).degree >= TameDegree::Finite(1));
    }

    #[test]
    fn infinite_iff_half_space((rank, vs) in vectors(4, 6)) {
        let set = SigmaSet::from_vectors(rank, &vs).unwrap();
        let infinite = tame_degree(&set).degree == TameDegree::Infinite;
        prop_assert_eq!(infinite, half_space_oracle(&set));
        let rays = set.to_vec();
        let refs: Vec<&Ray> = rays.iter().collect();
        let functional = separating_functional(&refs, rank);
        prop_assert_eq!(infinite, functional.is_some());
        if let Some(u) = functional {
            for r in &rays {
                let dot: BigInt = r.coords().iter().zip(&u).map(|(&c, x)| BigInt::from(c) * x).sum();
                prop_assert!(dot > BigInt::from(0));
            }
        }
    }

    #[test]
    fn scaling_does_not_change_the_degree((rank, vs) in vectors(4, 5), k in prop::collection::vec(1i64..=7, 5)) {
        let set = SigmaSet::from_vectors(rank, &vs).unwrap();
        let scaled: Vec<Vec<i64>> = vs.iter().zip(k.iter().cycle()).map(|(v, &c)| v.iter().map(|x| x * c).collect()).collect();
        let scaled = SigmaSet::from_vectors(rank, &scaled).unwrap();
        prop_assert_eq!(tame_degree(&set).degree, tame_degree(&scaled).degree);
    }

    #[test]
    fn adding_a_ray_never_raises_the_degree((rank, vs) in vectors(4, 5), extra in prop::collection::vec(-2i64..=2, 4)) {
        let set = SigmaSet::from_vectors(rank, &vs).unwrap();
        let mut bigger = set.clone();
        if let Ok(r) = Ray::canonicalize(&extra[..rank]) {
            bigger.insert(r).unwrap();
        }
        prop_assert!(tame_degree(&bigger).degree <= tame_degree(&set).degree);
    }

    #[test]
    fn witnesses_and_certificates_check((rank, vs) in vectors(4, 6)) {
        let set = SigmaSet::from_vectors(rank, &vs).unwrap();
        let verdict = tame_degree(&set);
        if let Some(w) = &verdict.witness {
            prop_assert!(w.verify());
            prop_assert_eq!(TameDegree::Finite(w.len() - 1), verdict.degree);
        }
        for m in 1..=set.len() {
            let cert = tameness_certificate(&set, m);
            prop_assert_eq!(cert.is_some(), verdict.degree.is_tame(m));
            if let Some(c) = cert {
                prop_assert!(c.verify(&set));
            }
        }
    }

    #[test]
    fn cone_witnesses_check((rank, vs) in vectors(3, 5), target in prop::collection::vec(-2i64..=2, 3)) {
        let set = SigmaSet::from_vectors(rank, &vs).unwrap();
        if let Ok(t) = Ray::canonicalize(&target[..rank]) {
            for size in 1..=set.len() {
                if let Some(w) = cone_membership(&t, &set, size) {
                    prop_assert!(w.verify(&t));
                    prop_assert!(w.terms.len() <= size);
                }
            }
            if set.contains(&t) {
                prop_assert!(cone_membership(&t, &set, 1).is_some());
            }
        }
    }
}

#[test]
fn kernel_test_matches_fourier_motzkin_on_seeded_sets() {
    let mut rng = StdRng::seed_from_u64(2024);
    for rank in 1..=4 {
        for _ in 0..150 {
            let set = common::random_set(&mut rng, rank, 6);
            for m in 1..=set.len() {
                assert_eq!(
                    positive_combination_feasible(&set, m).is_some(),
                    common::fm_zero_in_conv(&set, m),
                    "{set} m = {m}"
                );
            }
        }
    }
}
