#![allow(dead_code)]

use proptest::prelude::*;

use coinvariant::poly::{rat, Monomial, Polynomial};
use coinvariant::superspace::{SuperElement, SuperMonomial};

/// Polynomials in `n` variables with small integer coefficients and exponents below 3.
pub fn poly(n: usize, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u16..3, n), -4i64..=4), 0..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(n, terms.into_iter().map(|(e, c)| (Monomial::new(&e), rat(c))))
    })
}

/// Superspace elements: small bosonic part times an arbitrary subset of the thetas.
pub fn super_element(n: usize, max_terms: usize) -> impl Strategy<Value = SuperElement> {
    let term = (prop::collection::vec(0u16..3, n), 0u64..(1 << n), -3i64..=3);
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        let mut out = SuperElement::zero(n);
        for (e, mask, c) in terms {
            let thetas: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let m = SuperMonomial::new(Monomial::new(&e), &thetas).unwrap();
            out = out.checked_add(&SuperElement::from_monomial(m).scale(&rat(c))).unwrap();
        }
        out
    })
}

/// A permutation of `1..=n` in one-line notation.
pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}
