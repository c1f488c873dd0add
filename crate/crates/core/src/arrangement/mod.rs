//! Subarrangements of the augmented braid arrangement `{x_j = 0} ∪ {x_i = x_j}`.
//!
//! The hyperplane `H_{i,j}` (`0 <= i < j <= n`) is `x_j = 0` when `i = 0` and
//! `x_i = x_j` otherwise. Equivalently it is the edge `i - j` of a graph on
//! `{0, ..., n}`, which is how flats, chordality and restriction are computed.

pub mod chordal;
pub mod lattice;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::poly::{Monomial, Polynomial};
pub use lattice::{CharPoly, Flat, IntersectionLattice};

/// The hyperplane `H_{i,j}`. Ordered by `j`, then `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hyperplane {
    pub i: usize,
    pub j: usize,
}

impl Ord for Hyperplane {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.j, self.i).cmp(&(other.j, other.i))
    }
}

impl PartialOrd for Hyperplane {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Hyperplane {
    pub fn new(i: usize, j: usize) -> Hyperplane {
        Hyperplane { i, j }
    }

    pub fn is_coordinate(&self) -> bool {
        self.i == 0
    }

    /// `α_{0,j} = x_j`, `α_{i,j} = x_i - x_j`.
    pub fn linear_form(&self, n: usize) -> Polynomial {
        alpha(self.i, self.j, n)
    }
}

/// The linear form `α_{i,j}` for `0 <= i < j <= n` (also used with `i > j`, giving `x_i - x_j`).
pub fn alpha(i: usize, j: usize, n: usize) -> Polynomial {
    if i == 0 {
        Polynomial::var(n, j)
    } else {
        &Polynomial::var(n, i) - &Polynomial::var(n, j)
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.i, self.j)
    }
}

/// Anything that is a finite set of linear hyperplanes through the origin.
pub trait HyperplaneSet {
    fn ambient(&self) -> usize;

    fn linear_forms(&self) -> Vec<Polynomial>;

    fn size(&self) -> usize {
        self.linear_forms().len()
    }

    /// `Q = ∏ α`, scaled so the lex-leading coefficient is `+1`.
    fn defining_polynomial(&self) -> Polynomial {
        let n = self.ambient();
        Polynomial::product(n, &self.linear_forms()).lex_normalized()
    }

    /// The hyperplanes meet only in the origin.
    fn is_essential(&self) -> bool {
        let rows = self.linear_forms().iter().map(crate::linalg::poly_row).collect::<Vec<_>>();
        rank(rows) == self.ambient()
    }
}

/// An arrangement of arbitrary linear forms, for examples outside the augmented braid family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearArrangement {
    n: usize,
    forms: Vec<Polynomial>,
}

impl LinearArrangement {
    /// Every form must be nonzero, linear and homogeneous.
    pub fn new(n: usize, forms: Vec<Polynomial>) -> Result<LinearArrangement> {
        for f in &forms {
            if f.n() != n {
                return Err(Error::DimensionMismatch { left: n, right: f.n() });
            }
            if f.is_zero() || f.homogeneous_degree() != Some(1) {
                return Err(Error::Precondition(format!("`{f}` is not a nonzero linear form")));
            }
        }
        Ok(LinearArrangement { n, forms })
    }
}

impl HyperplaneSet for LinearArrangement {
    fn ambient(&self) -> usize {
        self.n
    }

    fn linear_forms(&self) -> Vec<Polynomial> {
        self.forms.clone()
    }
}

/// A subarrangement of the augmented braid arrangement in `K^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrangement {
    n: usize,
    hyperplanes: BTreeSet<Hyperplane>,
}

impl HyperplaneSet for Arrangement {
    fn ambient(&self) -> usize {
        self.n
    }

    fn linear_forms(&self) -> Vec<Polynomial> {
        self.hyperplanes.iter().map(|h| h.linear_form(self.n)).collect()
    }

    fn size(&self) -> usize {
        self.hyperplanes.len()
    }

    /// The graph on `{0, ..., n}` is connected.
    fn is_essential(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = 1u64;
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for u in 0..=self.n {
                if adj[v] & (1 << u) != 0 && seen & (1 << u) == 0 {
                    seen |= 1 << u;
                    stack.push(u);
                }
            }
        }
        seen.count_ones() as usize == self.n + 1
    }
}

impl Arrangement {
    pub fn new<I>(n: usize, pairs: I) -> Result<Arrangement>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > 62 {
            return Err(Error::TooLarge(format!("ambient dimension {n}")));
        }
        let mut hyperplanes = BTreeSet::new();
        for (i, j) in pairs {
            if i >= j || j > n {
                return Err(Error::InvalidHyperplane { i, j, n });
            }
            hyperplanes.insert(Hyperplane::new(i, j));
        }
        Ok(Arrangement { n, hyperplanes })
    }

    pub fn empty(n: usize) -> Arrangement {
        Arrangement::new(n, []).unwrap()
    }

    /// All `H_{i,j}`, `0 <= i < j <= n`.
    pub fn augmented_braid(n: usize) -> Arrangement {
        Arrangement::new(n, (1..=n).flat_map(|j| (0..j).map(move |i| (i, j)))).unwrap()
    }

    /// The braid arrangement `x_i = x_j`, `1 <= i < j <= n`.
    pub fn braid(n: usize) -> Arrangement {
        Arrangement::new(n, (1..=n).flat_map(|j| (1..j).map(move |i| (i, j)))).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.hyperplanes.contains(&Hyperplane::new(i, j))
    }

    pub fn hyperplanes(&self) -> impl Iterator<Item = &Hyperplane> {
        self.hyperplanes.iter()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.hyperplanes.iter().map(|h| (h.i, h.j)).collect()
    }

    pub(crate) fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n + 1];
        for h in &self.hyperplanes {
            adj[h.i] |= 1 << h.j;
            adj[h.j] |= 1 << h.i;
        }
        adj
    }

    /// `H_{i,j} ∈ A` and `j > i + 1` imply `H_{i,j-1} ∈ A`.
    pub fn is_southwest(&self) -> bool {
        self.hyperplanes
            .iter()
            .all(|h| h.j <= h.i + 1 || self.contains(h.i, h.j - 1))
    }

    /// `h_j = |A ∩ {H_{0,j}, H_{1,j}, ..., H_{j-1,j}}|`.
    pub fn h_sequence(&self) -> Vec<usize> {
        let mut h = vec![0; self.n];
        for hp in &self.hyperplanes {
            h[hp.j - 1] += 1;
        }
        h
    }

    /// Largest `p` with `H_{0,p} ∈ A`.
    pub fn max_coordinate(&self) -> Option<usize> {
        self.hyperplanes.iter().filter(|h| h.i == 0).map(|h| h.j).max()
    }

    pub fn delete(&self, i: usize, j: usize) -> Result<Arrangement> {
        let mut out = self.clone();
        if !out.hyperplanes.remove(&Hyperplane::new(i, j)) {
            return Err(Error::MissingHyperplane { i, j });
        }
        Ok(out)
    }

    /// Restriction to `H_{0,p}`: set `x_p = 0`, drop to `n - 1` coordinates and merge duplicates.
    pub fn restrict_coord(&self, p: usize) -> Result<Arrangement> {
        if !self.contains(0, p) {
            return Err(Error::MissingHyperplane { i: 0, j: p });
        }
        let relabel = |v: usize| -> usize {
            if v == p {
                0
            } else if v > p {
                v - 1
            } else {
                v
            }
        };
        let pairs = self.hyperplanes.iter().filter_map(|h| {
            let (a, b) = (relabel(h.i), relabel(h.j));
            (a != b).then(|| (a.min(b), a.max(b)))
        });
        Arrangement::new(self.n - 1, pairs.collect::<Vec<_>>())
    }

    /// `β_A = ∏_{H_{i,j} ∉ A} α_{i,j}`.
    pub fn beta(&self) -> Polynomial {
        let missing: Vec<Polynomial> = Arrangement::augmented_braid(self.n)
            .hyperplanes
            .iter()
            .filter(|h| !self.hyperplanes.contains(h))
            .map(|h| h.linear_form(self.n))
            .collect();
        Polynomial::product(self.n, &missing)
    }

    /// Product of the `α_{i,j}` in hyperplane order, without sign normalization.
    pub fn alpha_product(&self) -> Polynomial {
        Polynomial::product(self.n, &self.linear_forms())
    }

    pub fn is_chordal(&self) -> bool {
        chordal::is_chordal(&self.adjacency())
    }

    /// Flats and Möbius values; refuses `n > 7`.
    pub fn intersection_lattice(&self) -> Result<IntersectionLattice> {
        if self.n > 7 {
            return Err(Error::TooLarge(format!("intersection lattice for n = {}", self.n)));
        }
        Ok(IntersectionLattice::build(self.n, &self.edges()))
    }

    pub fn characteristic_polynomial(&self) -> Result<CharPoly> {
        Ok(self.intersection_lattice()?.characteristic_polynomial())
    }

    /// The prime used for the finite field check: smallest prime above `n |A|`.
    pub fn check_prime(&self) -> u64 {
        lattice::next_prime_above((self.n * self.len()) as u64)
    }

    /// Points of `F_p^n` off every hyperplane.
    pub fn count_points_mod(&self, p: u64) -> u128 {
        lattice::count_points_by_pattern(self.n, &self.edges(), p)
    }

    /// Picture of the positive roots with filled dots for hyperplanes in `A`,
    /// the top row being the longest roots.
    pub fn diagram(&self) -> String {
        let n = self.n;
        let width = 2 * n.max(1) - 1;
        let mut lines = Vec::new();
        for h in (0..n).rev() {
            let mut row = vec![' '; width];
            for i in 0..(n - h) {
                let j = i + h + 1;
                row[2 * i + h] = if self.contains(i, j) { '●' } else { '○' };
            }
            let s: String = row.into_iter().collect();
            lines.push(s.trim_end().to_string());
        }
        lines.join("\n")
    }
}

/// Writes `n=5; H:0-1,0-2,1-2` with hyperplanes ordered by `j` then `i`.
impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hs: Vec<String> = self.hyperplanes.iter().map(|h| h.to_string()).collect();
        write!(f, "n={}; H:{}", self.n, hs.join(","))
    }
}

impl FromStr for Arrangement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Arrangement> {
        let bad = || Error::Parse(format!("expected `n=<k>; H:<i>-<j>,...`, got `{s}`"));
        let (head, tail) = s.split_once(';').ok_or_else(bad)?;
        let n: usize = head
            .trim()
            .strip_prefix("n=")
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        let list = tail.trim().strip_prefix("H:").ok_or_else(bad)?.trim();
        let mut pairs = Vec::new();
        if !list.is_empty() {
            for item in list.split(',') {
                let (a, b) = item.trim().split_once('-').ok_or_else(bad)?;
                let a: usize = a.trim().parse().map_err(|_| bad())?;
                let b: usize = b.trim().parse().map_err(|_| bad())?;
                pairs.push((a, b));
            }
        }
        Arrangement::new(n, pairs)
    }
}

/// `st(J)`: `st_1 = [1 ∉ J]`, then `st_i = st_{i-1} + [i ∉ J]`.
pub fn staircase(j: &[usize], n: usize) -> Vec<usize> {
    let mut st = Vec::with_capacity(n);
    let mut cur = 0;
    for i in 1..=n {
        if !j.contains(&i) {
            cur += 1;
        }
        st.push(cur);
    }
    st
}

/// All `x^a` with `a_i < st(J)_i`, in descending lex order.
pub fn staircase_monomials(j: &[usize], n: usize) -> Vec<Monomial> {
    box_monomials(&staircase(j, n))
}

/// All `x^a` with `a_i < bounds_i`, in descending lex order.
pub fn box_monomials(bounds: &[usize]) -> Vec<Monomial> {
    let n = bounds.len();
    if bounds.iter().any(|&b| b == 0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    fn rec(pos: usize, bounds: &[usize], cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if pos == bounds.len() {
            out.push(Monomial::new(cur));
            return;
        }
        for a in (0..bounds[pos]).rev() {
            cur[pos] = a as u16;
            rec(pos + 1, bounds, cur, out);
        }
        cur[pos] = 0;
    }
    rec(0, bounds, &mut cur, &mut out);
    out
}

/// `A_J = {H_{j,i} : j ∉ J, 1 <= j < i} ∪ {H_{0,j} : j ∉ J}`.
pub fn build_aj(j: &[usize], n: usize) -> Arrangement {
    let mut pairs = Vec::new();
    for a in 1..=n {
        if j.contains(&a) {
            continue;
        }
        pairs.push((0, a));
        for b in (a + 1)..=n {
            pairs.push((a, b));
        }
    }
    Arrangement::new(n, pairs).expect("valid pairs")
}

/// `f_J = ∏_{j ∈ J} x_j ∏_{i > j} (x_j - x_i)`.
pub fn f_poly(j: &[usize], n: usize) -> Polynomial {
    let mut out = Polynomial::one(n);
    for &a in j {
        out = &(&out * &Polynomial::var(n, a)) * &ftilde_factor(a, n);
    }
    out
}

fn ftilde_factor(a: usize, n: usize) -> Polynomial {
    let mut out = Polynomial::one(n);
    for b in (a + 1)..=n {
        out = &out * &alpha(a, b, n);
    }
    out
}

/// `f_J` without the `x_j` factors.
pub fn ftilde_poly(j: &[usize], n: usize) -> Polynomial {
    let mut out = Polynomial::one(n);
    for &a in j {
        out = &out * &ftilde_factor(a, n);
    }
    out
}

/// All subsets of `{1, ..., n}` in bitmask order (bit `i - 1` for `i`).
pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u64..(1 << n))
        .map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}

/// All southwest subarrangements of the augmented braid arrangement.
pub fn enumerate_southwest(n: usize) -> Result<Vec<Arrangement>> {
    if n > 5 {
        return Err(Error::TooLarge(format!("southwest enumeration for n = {n}")));
    }
    // For fixed i the set {j : H_{i,j} ∈ A} is an interval starting at i + 1,
    // so A is determined by one length per i.
    let mut out = Vec::new();
    let mut lens = vec![0usize; n];
    fn rec(i: usize, n: usize, lens: &mut Vec<usize>, out: &mut Vec<Arrangement>) {
        if i == n {
            let pairs = (0..n).flat_map(|i| (1..=lens[i]).map(move |k| (i, i + k)));
            out.push(Arrangement::new(n, pairs.collect::<Vec<_>>()).unwrap());
            return;
        }
        for l in 0..=(n - i) {
            lens[i] = l;
            rec(i + 1, n, lens, out);
        }
    }
    rec(0, n, &mut lens, &mut out);
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running_example() -> Arrangement {
        "n=5; H:0-1,0-2,1-2,1-3,2-3,1-4,2-4,3-4,2-5".parse().unwrap()
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase(&[2, 4], 5), vec![1, 1, 2, 2, 3]);
        assert_eq!(staircase(&[], 4), vec![1, 2, 3, 4]);
        assert_eq!(staircase(&[1], 3)[0], 0);
        assert!(staircase_monomials(&[1, 3], 3).is_empty());
        assert_eq!(staircase_monomials(&[2, 4], 5).len(), 12);
    }

    #[test]
    fn running_example_data() {
        let a = running_example();
        assert!(a.is_southwest());
        assert_eq!(a.h_sequence(), vec![1, 2, 2, 3, 1]);
        assert_eq!(a.max_coordinate(), Some(2));
        assert_eq!(a.delete(0, 2).unwrap().h_sequence(), vec![1, 1, 2, 3, 1]);
        assert_eq!(a.restrict_coord(2).unwrap().h_sequence(), vec![1, 2, 3, 1]);
        assert_eq!(a.to_string(), "n=5; H:0-1,0-2,1-2,1-3,2-3,1-4,2-4,3-4,2-5");
        assert!(a.restrict_coord(3).is_err());
    }

    #[test]
    fn aj_family() {
        let a = build_aj(&[2, 4], 5);
        assert_eq!(a.len(), 9);
        assert!(!a.is_southwest());
        assert!(build_aj(&[1, 2, 3], 3).is_empty());
        assert_eq!(build_aj(&[], 3), Arrangement::augmented_braid(3));
        assert_eq!(build_aj(&[2], 3).beta(), f_poly(&[2], 3));
    }

    #[test]
    fn polynomials_of_arrangements() {
        assert_eq!(Arrangement::new(1, [(0, 1)]).unwrap().defining_polynomial(), Polynomial::var(1, 1));
        let q = Arrangement::braid(2).defining_polynomial();
        assert_eq!(q, Polynomial::parse("x1-x2", 2).unwrap());
        let full = Arrangement::augmented_braid(3).defining_polynomial();
        let aj = build_aj(&[2], 3).defining_polynomial();
        let quotient = full.div_exact(&aj).unwrap();
        assert_eq!(quotient.lex_normalized(), f_poly(&[2], 3).lex_normalized());
        assert_eq!(f_poly(&[2], 2), Polynomial::var(2, 2));
        assert_eq!(ftilde_poly(&[2], 3), Polynomial::parse("x2-x3", 3).unwrap());
    }

    #[test]
    fn essential_and_chordal() {
        assert!(Arrangement::augmented_braid(3).is_essential());
        assert!(!Arrangement::braid(3).is_essential());
        assert!(!Arrangement::new(2, [(0, 1)]).unwrap().is_essential());
        let cycle = Arrangement::new(3, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(!cycle.is_chordal());
        assert!(Arrangement::augmented_braid(4).is_chordal());
    }

    #[test]
    fn text_format() {
        let e: Arrangement = "n=3; H:".parse().unwrap();
        assert!(e.is_empty());
        assert_eq!(e.to_string(), "n=3; H:");
        assert!("n=2; H:1-3".parse::<Arrangement>().is_err());
        assert!("H:1-2".parse::<Arrangement>().is_err());
    }

    #[test]
    fn southwest_enumeration_small() {
        assert_eq!(enumerate_southwest(1).unwrap().len(), 2);
        let all = enumerate_southwest(2).unwrap();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(Arrangement::is_southwest));
    }

    #[test]
    fn diagram_shape() {
        let d = running_example().diagram();
        let lines: Vec<&str> = d.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[4], "● ● ● ● ○");
    }
}
