mod common;

use proptest::prelude::*;

use coinvariant::poly::{rat, Polynomial};
use coinvariant::symmetric::{coinvariant_generators, elementary, power_sum, steinberg_member};
use common::{permutation, poly};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(3, 5), b in poly(3, 5), c in poly(3, 5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(3), a.clone());
    }

    #[test]
    fn text_round_trip(a in poly(4, 6)) {
        let back = Polynomial::parse(&a.to_string(), 4).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn leibniz(a in poly(3, 4), b in poly(3, 4), i in 1usize..=3) {
        let lhs = (&a * &b).partial(i).unwrap();
        let rhs = &(&a.partial(i).unwrap() * &b) + &(&a * &b.partial(i).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn permutation_is_ring_map(a in poly(3, 4), b in poly(3, 4), w in permutation(3)) {
        let lhs = (&a * &b).permute(&w).unwrap();
        prop_assert_eq!(lhs, &a.permute(&w).unwrap() * &b.permute(&w).unwrap());
    }

    #[test]
    fn homogeneous_components_reassemble(a in poly(3, 6)) {
        prop_assert_eq!(a.homogeneous_components().reassemble(3), a);
    }

    #[test]
    fn symmetric_functions_are_invariant(w in permutation(4), d in 0i64..=4, k in 1u32..=4) {
        let all = [1, 2, 3, 4];
        let e = elementary(d, &all, 4);
        let p = power_sum(k, &all, 4);
        prop_assert_eq!(e.permute(&w).unwrap(), e);
        prop_assert_eq!(p.permute(&w).unwrap(), p);
    }

    #[test]
    fn steinberg_membership_of_combinations(cs in prop::collection::vec(poly(3, 3), 3)) {
        let gens = coinvariant_generators(3);
        let mut f = Polynomial::zero(3);
        for (c, g) in cs.iter().zip(&gens) {
            f = &f + &(c * g);
        }
        prop_assert!(steinberg_member(&f));
    }
}

#[test]
fn vandermonde_is_alternating() {
    let v = Polynomial::vandermonde(3);
    assert_eq!(v.permute(&[2, 1, 3]).unwrap(), v.scale(&rat(-1)));
    assert_eq!(v.permute(&[2, 3, 1]).unwrap(), v);
}

#[test]
fn parse_rejects_garbage() {
    for s in ["x0", "x1^", "2**x1", "x1+", ""] {
        assert!(Polynomial::parse(s, 2).is_err(), "{s}");
    }
}
