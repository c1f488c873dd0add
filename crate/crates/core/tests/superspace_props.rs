mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;

use coinvariant::poly::rat;
use coinvariant::superspace::{
    artin_monomials, fubini, omega_dimension, solomon_generators, sr_bigraded_hilbert, SuperElement, SuperMonomial,
};
use common::{permutation, super_element};

fn sign(k: usize) -> i64 {
    if k % 2 == 0 { 1 } else { -1 }
}

/// Split into pieces of fixed fermionic degree so the super-Leibniz sign is well defined.
fn by_fermionic_degree(a: &SuperElement) -> BTreeMap<usize, SuperElement> {
    let mut out: BTreeMap<usize, SuperElement> = BTreeMap::new();
    for (m, c) in a.terms() {
        let piece = SuperElement::from_monomial(m.clone()).scale(c);
        let e = out.entry(m.bidegree().1).or_insert_with(|| SuperElement::zero(a.n()));
        *e = e.checked_add(&piece).unwrap();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn d_squared_is_zero(w in (1usize..=4).prop_flat_map(|n| super_element(n, 5))) {
        prop_assert!(w.euler_d().euler_d().is_zero());
    }

    #[test]
    fn super_leibniz(a in super_element(3, 4), b in super_element(3, 4)) {
        for (k, ak) in by_fermionic_degree(&a) {
            let lhs = ak.multiply(&b).unwrap().euler_d();
            let rhs = ak.euler_d().multiply(&b).unwrap()
                .checked_add(&ak.multiply(&b.euler_d()).unwrap().scale(&rat(sign(k)))).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn d_is_equivariant(a in super_element(4, 5), w in permutation(4)) {
        prop_assert_eq!(a.sn_act(&w).unwrap().euler_d(), a.euler_d().sn_act(&w).unwrap());
    }

    #[test]
    fn action_is_multiplicative(a in super_element(3, 3), b in super_element(3, 3), w in permutation(3)) {
        let lhs = a.multiply(&b).unwrap().sn_act(&w).unwrap();
        let rhs = a.sn_act(&w).unwrap().multiply(&b.sn_act(&w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_round_trip(a in super_element(4, 5)) {
        prop_assert_eq!(SuperElement::parse(&a.to_string(), 4).unwrap(), a);
    }

    #[test]
    fn thetas_anticommute(i in 1usize..=4, j in 1usize..=4) {
        let ti = SuperElement::theta(4, i).unwrap();
        let tj = SuperElement::theta(4, j).unwrap();
        let sum = ti.multiply(&tj).unwrap().checked_add(&tj.multiply(&ti).unwrap()).unwrap();
        prop_assert!(sum.is_zero());
    }
}

#[test]
fn generators_are_invariant() {
    for n in 1..=3 {
        for g in solomon_generators(n) {
            for w in permutations(n) {
                assert_eq!(g.sn_act(&w).unwrap(), g, "n = {n}, w = {w:?}");
            }
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

#[test]
fn omega_dimension_counts_monomials() {
    for n in 1..=3 {
        for i in 0..=3 {
            for j in 0..=n {
                assert_eq!(omega_dimension(n, i, j), SuperMonomial::all_of_bidegree(n, i, j).len() as u64);
            }
        }
    }
}

#[test]
fn artin_bidegrees_match_hilbert_table() {
    for n in 1..=3 {
        let table = sr_bigraded_hilbert(n, n * (n - 1) / 2).unwrap();
        assert!(table.complete);
        let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for m in artin_monomials(n) {
            *counts.entry(m.bidegree()).or_default() += 1;
        }
        let table: BTreeMap<(usize, usize), u64> = table.entries().into_iter().filter(|&(_, v)| v > 0).collect();
        assert_eq!(counts, table, "n = {n}");
    }
}

#[test]
fn artin_count_for_four() {
    assert_eq!(artin_monomials(4).len(), 75);
    assert_eq!((0..=5).map(fubini).collect::<Vec<_>>(), [1, 1, 3, 13, 75, 541]);
}
