mod common;

use proptest::prelude::*;

use coinvariant::groebner::{ideal_equal, HilbertSeries, Ideal, MonomialOrder};
use coinvariant::poly::Polynomial;
use coinvariant::symmetric::{coinvariant_ideal, power_sum_generators, steinberg_member};
use common::poly;

fn top_component(g: &Polynomial) -> Polynomial {
    let d = g.total_degree().unwrap();
    Polynomial::from_terms(g.n(), g.terms().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn colon_routes_agree(g in poly(3, 4)) {
        prop_assume!(!g.is_zero());
        let f = top_component(&g);
        let i = coinvariant_ideal(3);
        let by_elimination = i.colon(&f).unwrap();
        let degreewise = i.colon_degreewise(&f).unwrap();
        prop_assert!(ideal_equal(&by_elimination, &degreewise).unwrap());
    }

    #[test]
    fn membership_agrees_with_steinberg(f in poly(3, 5)) {
        let i = coinvariant_ideal(3);
        prop_assert_eq!(i.contains(&f).unwrap(), steinberg_member(&f));
    }

    #[test]
    fn normal_form_is_idempotent(f in poly(3, 5)) {
        let i = coinvariant_ideal(3);
        let nf = i.normal_form(&f, MonomialOrder::Grevlex).unwrap();
        prop_assert_eq!(i.normal_form(&nf, MonomialOrder::Grevlex).unwrap(), nf.clone());
        prop_assert!(i.contains(&(&f - &nf)).unwrap());
    }
}

#[test]
fn coinvariant_hilbert_series_is_q_factorial() {
    for n in 1..=4 {
        let h = coinvariant_ideal(n).hilbert_series(n * n).unwrap();
        assert_eq!(h, HilbertSeries::q_factorial(n), "n = {n}");
        assert_eq!(h.dimension(), Some((1..=n as u64).product()));
        assert!(h.is_palindromic());
    }
}

#[test]
fn power_sums_and_elementary_generate_the_same_ideal() {
    for n in 1..=4 {
        let p = Ideal::new(n, power_sum_generators(n)).unwrap();
        assert!(ideal_equal(&p, &coinvariant_ideal(n)).unwrap(), "n = {n}");
    }
}

#[test]
fn lex_and_grevlex_agree_on_ideal_equality() {
    let i = coinvariant_ideal(3);
    let p = Ideal::new(3, power_sum_generators(3)).unwrap();
    assert!(i.equals_under(&p, MonomialOrder::Lex).unwrap());
    assert!(i.equals_under(&p, MonomialOrder::Grevlex).unwrap());
}

#[test]
fn colon_by_vandermonde_is_maximal() {
    let i = coinvariant_ideal(3);
    let c = i.colon(&Polynomial::vandermonde(3)).unwrap();
    let max = Ideal::new(3, (1..=3).map(|k| Polynomial::var(3, k)).collect()).unwrap();
    assert!(ideal_equal(&c, &max).unwrap());
}
