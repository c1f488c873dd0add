//! Symmetric polynomials in subsets of the variables, the coinvariant ideal,
//! and the Steinberg membership test for it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::poly_det;
use crate::poly::{Monomial, Polynomial};

/// An integer partition with strictly positive, weakly decreasing parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is an error.
    pub fn new(parts: &[usize]) -> Result<Partition> {
        let mut v = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        if v.windows(2).any(|w| w[0] < w[1]) || v.contains(&0) {
            return Err(Error::Precondition(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(v))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All partitions of `m`, in reverse lexicographic order.
    pub fn all_of(m: usize) -> Vec<Partition> {
        fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=left.min(max)).rev() {
                cur.push(p);
                rec(left - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

fn check_subset(a: &[usize], n: usize) {
    assert!(a.iter().all(|&i| (1..=n).contains(&i)), "variable subset {a:?} outside 1..={n}");
}

/// `e_d` in the variables indexed by `a`.
pub fn elementary(d: i64, a: &[usize], n: usize) -> Polynomial {
    check_subset(a, n);
    if d < 0 || d as usize > a.len() {
        return Polynomial::zero(n);
    }
    let mut out = Polynomial::zero(n);
    fn rec(a: &[usize], start: usize, left: usize, cur: &mut Vec<u16>, out: &mut Polynomial) {
        if left == 0 {
            *out += &Polynomial::from_monomial(Monomial::new(cur));
            return;
        }
        for k in start..a.len() {
            if a.len() - k < left {
                break;
            }
            cur[a[k] - 1] += 1;
            rec(a, k + 1, left - 1, cur, out);
            cur[a[k] - 1] -= 1;
        }
    }
    let mut a = a.to_vec();
    a.sort_unstable();
    a.dedup();
    rec(&a, 0, d as usize, &mut vec![0; n], &mut out);
    out
}

/// `h_d` in the variables indexed by `a`.
pub fn complete(d: i64, a: &[usize], n: usize) -> Polynomial {
    check_subset(a, n);
    if d < 0 {
        return Polynomial::zero(n);
    }
    if d == 0 {
        return Polynomial::one(n);
    }
    let mut a = a.to_vec();
    a.sort_unstable();
    a.dedup();
    let mut out = Polynomial::zero(n);
    fn rec(a: &[usize], start: usize, left: usize, cur: &mut Vec<u16>, out: &mut Polynomial) {
        if left == 0 {
            *out += &Polynomial::from_monomial(Monomial::new(cur));
            return;
        }
        for k in start..a.len() {
            cur[a[k] - 1] += 1;
            rec(a, k, left - 1, cur, out);
            cur[a[k] - 1] -= 1;
        }
    }
    rec(&a, 0, d as usize, &mut vec![0; n], &mut out);
    out
}

/// Power sum `p_k = Σ_{a ∈ A} x_a^k`.
pub fn power_sum(k: u32, a: &[usize], n: usize) -> Polynomial {
    check_subset(a, n);
    let mut out = Polynomial::zero(n);
    for &i in a {
        out += &Polynomial::var(n, i).pow(k);
    }
    out
}

/// Schur polynomial by the Jacobi-Trudi determinant `det(h_{λ_i - i + j})`.
pub fn schur(lambda: &Partition, a: &[usize], n: usize) -> Polynomial {
    let l = lambda.len();
    let m: Vec<Vec<Polynomial>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| complete(lambda.0[i] as i64 - i as i64 + j as i64, a, n))
                .collect()
        })
        .collect();
    poly_det(&m, n)
}

/// `e_1, ..., e_n` in all variables.
pub fn coinvariant_generators(n: usize) -> Vec<Polynomial> {
    let all: Vec<usize> = (1..=n).collect();
    (1..=n as i64).map(|d| elementary(d, &all, n)).collect()
}

/// `p_1, ..., p_n` in all variables; generates the same ideal over the rationals.
pub fn power_sum_generators(n: usize) -> Vec<Polynomial> {
    let all: Vec<usize> = (1..=n).collect();
    (1..=n as u32).map(|k| power_sum(k, &all, n)).collect()
}

/// The coinvariant ideal `(S_+^{S_n})`.
pub fn coinvariant_ideal(n: usize) -> Ideal {
    Ideal::new(n, coinvariant_generators(n)).expect("generators share n")
}

/// Steinberg's test: `f` lies in the coinvariant ideal iff `f ⊙ δ_n = 0`.
pub fn steinberg_member(f: &Polynomial) -> bool {
    let delta = Polynomial::vandermonde(f.n());
    f.odot(&delta).expect("same ambient n").is_zero()
}

/// Checks `h_d(A) ≡ (-1)^d e_d(B)` modulo the coinvariant ideal, for `[n] = A ⊔ B`.
pub fn eh_duality_check(d: i64, a: &[usize], b: &[usize], n: usize) -> Result<bool> {
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    if all != (1..=n).collect::<Vec<_>>() {
        return Err(Error::NotAPartition(n));
    }
    let mut rhs = elementary(d, b, n);
    if d.rem_euclid(2) == 1 {
        rhs = -rhs;
    }
    Ok(steinberg_member(&(&complete(d, a, n) - &rhs)))
}
