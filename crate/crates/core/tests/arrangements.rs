use proptest::prelude::*;

use coinvariant::arrangement::lattice::{count_points_brute_force, count_points_by_pattern};
use coinvariant::arrangement::{build_aj, staircase, subsets, Arrangement, CharPoly};
use coinvariant::verify::{brute_force_southwest_count, enumerate_southwest};

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// A random subset of the hyperplanes `x_i = x_j`, `0 <= i < j <= n`.
fn arrangement(n: usize) -> impl Strategy<Value = Arrangement> {
    let all = Arrangement::augmented_braid(n).edges();
    prop::sample::subsequence(all.clone(), 0..=all.len()).prop_map(move |e| Arrangement::new(n, e).unwrap())
}

#[test]
fn southwest_counts_match_brute_force() {
    for n in 1..=4 {
        let all = enumerate_southwest(n, false).unwrap();
        assert_eq!(all.len() as u64, factorial(n as u64 + 1));
        assert_eq!(all.len() as u64, brute_force_southwest_count(n, false));
        let essential = enumerate_southwest(n, true).unwrap();
        assert_eq!(essential.len() as u64, brute_force_southwest_count(n, true));
    }
    let essential: Vec<usize> = (1..=4).map(|n| enumerate_southwest(n, true).unwrap().len()).collect();
    assert_eq!(essential, [1, 3, 13, 71]);
}

#[test]
fn char_poly_matches_literal_point_counts() {
    for n in 1..=3 {
        for a in enumerate_southwest(n, false).unwrap() {
            let chi = a.characteristic_polynomial().unwrap();
            for p in [5u64, 7, 11] {
                assert_eq!(chi.eval(p as i128) as u128, count_points_brute_force(n, &a.edges(), p), "{a} at {p}");
            }
        }
    }
}

#[test]
fn aj_char_poly_factors_over_the_staircase() {
    for n in 1..=5 {
        for j in subsets(n) {
            let a = build_aj(&j, n);
            let roots: Vec<i64> = staircase(&j, n).iter().map(|&s| s as i64).collect();
            assert_eq!(a.characteristic_polynomial().unwrap(), CharPoly::from_roots(&roots), "J = {j:?}");
        }
    }
}

#[test]
fn running_example() {
    let a: Arrangement = "n=5; H:0-1,0-2,1-2,1-3,2-3,1-4,2-4,3-4,2-5".parse().unwrap();
    assert!(a.is_southwest());
    assert_eq!(a.h_sequence(), [1, 2, 2, 3, 1]);
    assert_eq!(a.characteristic_polynomial().unwrap(), CharPoly::from_roots(&[1, 2, 2, 3, 1]));
    assert_eq!(a.to_string().parse::<Arrangement>().unwrap(), a);
}

#[test]
fn rejects_malformed_specs() {
    for s in ["n=2; H:0-3", "n=2; H:1-1", "H:0-1", "n=x; H:0-1"] {
        assert!(s.parse::<Arrangement>().is_err(), "{s}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn char_poly_matches_pattern_count(a in (1usize..=4).prop_flat_map(arrangement)) {
        let chi = a.characteristic_polynomial().unwrap();
        let p = a.check_prime();
        prop_assert_eq!(chi.eval(p as i128) as u128, count_points_by_pattern(a.n(), &a.edges(), p));
        prop_assert_eq!(chi.degree(), a.n());
    }

    #[test]
    fn deletion_restriction(a in (2usize..=4).prop_flat_map(arrangement)) {
        let Some(p) = a.max_coordinate() else { return Ok(()) };
        let whole = a.characteristic_polynomial().unwrap();
        let deleted = a.delete(0, p).unwrap().characteristic_polynomial().unwrap();
        let restricted = a.restrict_coord(p).unwrap().characteristic_polynomial().unwrap();
        for t in 0..6i128 {
            prop_assert_eq!(whole.eval(t), deleted.eval(t) - restricted.eval(t));
        }
    }

    #[test]
    fn southwest_h_sequence_gives_char_poly(a in (1usize..=4).prop_flat_map(arrangement)) {
        prop_assume!(a.is_southwest());
        let roots: Vec<i64> = a.h_sequence().iter().map(|&h| h as i64).collect();
        prop_assert_eq!(a.characteristic_polynomial().unwrap(), CharPoly::from_roots(&roots));
        prop_assert!(a.is_chordal());
    }
}
