//! The superspace ring `Ω = K[x_1..x_n] ⊗ ∧(θ_1..θ_n)`, its total derivative,
//! the diagonal `S_n` action, and the bigraded quotient `SR = Ω / I` where `I`
//! is generated by `p_k` and `d p_k`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrangement::{staircase_monomials, subsets};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::poly::text::{parse_terms, write_term};
use crate::poly::{check_permutation, raw_monomial, Monomial, Polynomial, Rational};
use crate::symmetric::power_sum;

/// Largest bidegree piece (`dim Ω_{i,j}`) the linear algebra will accept.
pub const PIECE_LIMIT: u64 = 250_000;

/// `x^a θ_J`, with `J` stored as a bitmask (bit `i - 1` for `θ_i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperMonomial {
    bosonic: Monomial,
    fermionic: u64,
}

impl SuperMonomial {
    pub fn new(bosonic: Monomial, fermionic: &[usize]) -> Result<SuperMonomial> {
        let n = bosonic.n();
        let mut mask = 0u64;
        for &i in fermionic {
            if i == 0 || i > n {
                return Err(Error::VariableOutOfRange { index: i, n });
            }
            mask |= 1 << (i - 1);
        }
        Ok(SuperMonomial { bosonic, fermionic: mask })
    }

    pub fn one(n: usize) -> SuperMonomial {
        SuperMonomial { bosonic: Monomial::one(n), fermionic: 0 }
    }

    pub fn n(&self) -> usize {
        self.bosonic.n()
    }

    pub fn bosonic(&self) -> &Monomial {
        &self.bosonic
    }

    /// Fermionic indices, ascending.
    pub fn fermionic(&self) -> Vec<usize> {
        (1..=self.n()).filter(|i| self.fermionic & (1 << (i - 1)) != 0).collect()
    }

    pub fn fermionic_mask(&self) -> u64 {
        self.fermionic
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.bosonic.degree(), self.fermionic.count_ones() as usize)
    }

    /// Product with sign, `None` when a θ repeats.
    pub fn mul(&self, other: &SuperMonomial) -> Option<(SuperMonomial, bool)> {
        if self.fermionic & other.fermionic != 0 {
            return None;
        }
        Some((
            SuperMonomial {
                bosonic: self.bosonic.mul(&other.bosonic),
                fermionic: self.fermionic | other.fermionic,
            },
            shuffle_negative(self.fermionic, other.fermionic),
        ))
    }

    /// All super monomials of bidegree `(i, j)`.
    pub fn all_of_bidegree(n: usize, i: usize, j: usize) -> Vec<SuperMonomial> {
        let xs = Monomial::all_of_degree(n, i);
        let mut out = Vec::new();
        for mask in 0u64..(1 << n) {
            if mask.count_ones() as usize != j {
                continue;
            }
            out.extend(xs.iter().map(|m| SuperMonomial { bosonic: m.clone(), fermionic: mask }));
        }
        out
    }
}

/// Sign of `θ_J θ_K → θ_{J ∪ K}`: the number of pairs `j ∈ J`, `k ∈ K`, `j > k` is odd.
fn shuffle_negative(j: u64, k: u64) -> bool {
    let mut count = 0;
    let mut rest = k;
    while rest != 0 {
        let b = rest.trailing_zeros();
        count += (j >> (b + 1)).count_ones();
        rest &= rest - 1;
    }
    count % 2 == 1
}

/// Ordered by total degree, then fermionic degree, fermionic set, bosonic part.
impl Ord for SuperMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let (a, b) = (self.bidegree(), other.bidegree());
        (a.0 + a.1, a.1)
            .cmp(&(b.0 + b.1, b.1))
            .then_with(|| other.fermionic.cmp(&self.fermionic))
            .then_with(|| self.bosonic.cmp(&other.bosonic))
    }
}

impl PartialOrd for SuperMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn monomial_body(m: &SuperMonomial) -> String {
    let mut parts = Vec::new();
    if !m.bosonic.is_one() {
        parts.push(m.bosonic.to_string());
    }
    parts.extend(m.fermionic().iter().map(|i| format!("t{i}")));
    parts.join("*")
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = monomial_body(self);
        f.write_str(if body.is_empty() { "1" } else { &body })
    }
}

/// An element of `Ω`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperElement {
    n: usize,
    terms: BTreeMap<SuperMonomial, Rational>,
}

impl SuperElement {
    pub fn zero(n: usize) -> SuperElement {
        SuperElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> SuperElement {
        SuperElement::from_monomial(SuperMonomial::one(n))
    }

    pub fn from_monomial(m: SuperMonomial) -> SuperElement {
        let n = m.n();
        let mut terms = BTreeMap::new();
        terms.insert(m, Rational::one());
        SuperElement { n, terms }
    }

    pub fn theta(n: usize, i: usize) -> Result<SuperElement> {
        Ok(SuperElement::from_monomial(SuperMonomial::new(Monomial::one(n), &[i])?))
    }

    /// `f · 1` for a polynomial `f`.
    pub fn from_polynomial(f: &Polynomial) -> SuperElement {
        let mut out = SuperElement::zero(f.n());
        for (m, c) in f.terms() {
            out.add_term(SuperMonomial { bosonic: m.clone(), fermionic: 0 }, c.clone());
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&SuperMonomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &SuperMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: SuperMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `Some((i, j))` when every term has bidegree `(i, j)`; zero has none.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(SuperMonomial::bidegree);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// `Some(j)` when all terms have fermionic degree `j`.
    pub fn fermionic_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.bidegree().1);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn scale(&self, c: &Rational) -> SuperElement {
        if c.is_zero() {
            return SuperElement::zero(self.n);
        }
        SuperElement { n: self.n, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn checked_add(&self, other: &SuperElement) -> Result<SuperElement> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SuperElement) -> Result<SuperElement> {
        self.checked_add(&other.scale(&-Rational::one()))
    }

    /// Supercommutative product.
    pub fn multiply(&self, other: &SuperElement) -> Result<SuperElement> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let mut out = SuperElement::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((m, neg)) = a.mul(b) {
                    let c = ca * cb;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Total derivative `d(f θ_J) = Σ_i ∂_i(f) θ_i θ_J`.
    pub fn euler_d(&self) -> SuperElement {
        let mut out = SuperElement::zero(self.n);
        for (m, c) in &self.terms {
            for i in 1..=self.n {
                let a = m.bosonic.exponent(i);
                let bit = 1u64 << (i - 1);
                if a == 0 || m.fermionic & bit != 0 {
                    continue;
                }
                let mut e = m.bosonic.exponents().to_vec();
                e[i - 1] -= 1;
                let neg = (m.fermionic & (bit - 1)).count_ones() % 2 == 1;
                let v = c * Rational::from_integer(a.into());
                out.add_term(
                    SuperMonomial { bosonic: Monomial::new(&e), fermionic: m.fermionic | bit },
                    if neg { -v } else { v },
                );
            }
        }
        out
    }

    /// `w · x_i = x_{w(i)}`, `w · θ_i = θ_{w(i)}`, with `w` in one-line notation.
    pub fn sn_act(&self, w: &[usize]) -> Result<SuperElement> {
        check_permutation(w, self.n)?;
        let mut out = SuperElement::zero(self.n);
        for (m, c) in &self.terms {
            let mut e = vec![0u16; self.n];
            for (i, &a) in m.bosonic.exponents().iter().enumerate() {
                e[w[i] - 1] = a;
            }
            let images: Vec<usize> = m.fermionic().iter().map(|&i| w[i - 1]).collect();
            let mut inversions = 0;
            for a in 0..images.len() {
                for b in a + 1..images.len() {
                    if images[a] > images[b] {
                        inversions += 1;
                    }
                }
            }
            let mask = images.iter().fold(0u64, |acc, &i| acc | 1 << (i - 1));
            let sm = SuperMonomial { bosonic: Monomial::new(&e), fermionic: mask };
            out.add_term(sm, if inversions % 2 == 1 { -c.clone() } else { c.clone() });
        }
        Ok(out)
    }

    /// Coordinates as a sparse row, columns in descending monomial order.
    pub fn row(&self) -> SparseRow<std::cmp::Reverse<SuperMonomial>> {
        self.terms.iter().rev().map(|(m, c)| (std::cmp::Reverse(m.clone()), c.clone())).collect()
    }

    pub fn parse(s: &str, n: usize) -> Result<SuperElement> {
        let mut out = SuperElement::zero(n);
        for t in parse_terms(s)? {
            if t.ts.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse(format!("θ factors must be strictly ascending in `{s}`")));
            }
            let m = SuperMonomial::new(raw_monomial(&t.xs, n)?, &t.ts)?;
            out.add_term(m, t.coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for SuperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            write_term(&mut out, c, &monomial_body(m), k == 0);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for SuperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperElement(n={}, {})", self.n, self)
    }
}

/// Parses with `n` the largest index that occurs.
impl FromStr for SuperElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<SuperElement> {
        let terms = parse_terms(s)?;
        let n = terms
            .iter()
            .flat_map(|t| t.xs.iter().map(|&(i, _)| i).chain(t.ts.iter().copied()))
            .max()
            .unwrap_or(0);
        SuperElement::parse(s, n)
    }
}

pub fn super_multiply(a: &SuperElement, b: &SuperElement) -> Result<SuperElement> {
    a.multiply(b)
}

pub fn euler_d(w: &SuperElement) -> SuperElement {
    w.euler_d()
}

pub fn sn_act(w: &[usize], omega: &SuperElement) -> Result<SuperElement> {
    omega.sn_act(w)
}

/// `dim Ω_{i,j} = C(i + n - 1, n - 1) C(n, j)`.
pub fn omega_dimension(n: usize, i: usize, j: usize) -> u64 {
    if j > n {
        return 0;
    }
    if n == 0 {
        return u64::from(i == 0 && j == 0);
    }
    binomial((i + n - 1) as u64, (n - 1) as u64) * binomial(n as u64, j as u64)
}

fn binomial(a: u64, b: u64) -> u64 {
    (0..b).fold(1u64, |acc, k| acc * (a - k) / (k + 1))
}

/// The generators `p_1, ..., p_n, d p_1, ..., d p_n` of `I`.
pub fn solomon_generators(n: usize) -> Vec<SuperElement> {
    let all: Vec<usize> = (1..=n).collect();
    let ps: Vec<SuperElement> =
        (1..=n as u32).map(|k| SuperElement::from_polynomial(&power_sum(k, &all, n))).collect();
    let dps: Vec<SuperElement> = ps.iter().map(SuperElement::euler_d).collect();
    ps.into_iter().chain(dps).collect()
}

/// Spanning set `{g m}` of `I_{i,j}` for `g` among the given generators.
pub fn pieces_from(generators: &[SuperElement], n: usize, i: usize, j: usize) -> Result<Vec<SuperElement>> {
    let dim = omega_dimension(n, i, j);
    if dim > PIECE_LIMIT {
        return Err(Error::TooLarge(format!("Ω_({i},{j}) has dimension {dim}")));
    }
    let mut out = Vec::new();
    for g in generators {
        let Some((gi, gj)) = g.bidegree() else { continue };
        if gi > i || gj > j {
            continue;
        }
        for m in SuperMonomial::all_of_bidegree(n, i - gi, j - gj) {
            let prod = g.multiply(&SuperElement::from_monomial(m))?;
            if !prod.is_zero() {
                out.push(prod);
            }
        }
    }
    Ok(out)
}

/// Spanning set of the bidegree `(i, j)` piece of `I`.
pub fn invariant_ideal_pieces(n: usize, i: usize, j: usize) -> Result<Vec<SuperElement>> {
    pieces_from(&solomon_generators(n), n, i, j)
}

fn piece_echelon(rows: &[SuperElement]) -> Echelon<std::cmp::Reverse<SuperMonomial>> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r.row());
    }
    e
}

/// Bigraded dimensions `dim SR_{i,j}`, indexed `dims[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigradedTable {
    pub n: usize,
    pub dims: Vec<Vec<u64>>,
    /// The row of bosonic degree one past the cap vanished, so nothing was cut off.
    pub complete: bool,
}

impl BigradedTable {
    pub fn total(&self) -> u64 {
        self.dims.iter().flatten().sum()
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.dims.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `((i, j), dim)`.
    pub fn entries(&self) -> Vec<((usize, usize), u64)> {
        let mut out = Vec::new();
        for (i, row) in self.dims.iter().enumerate() {
            for (j, &d) in row.iter().enumerate() {
                if d > 0 {
                    out.push(((i, j), d));
                }
            }
        }
        out
    }
}

impl fmt::Display for BigradedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let header: Vec<String> = (0..=self.n).map(|j| format!("{j:>5}")).collect();
        writeln!(f, "  i\\j{}", header.join(""))?;
        for (i, row) in self.dims.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|d| format!("{d:>5}")).collect();
            writeln!(f, "{i:>5}{}", cells.join(""))?;
        }
        write!(f, "total {}", self.total())
    }
}

/// Default bosonic cap `n(n-1)/2`.
pub fn default_cap(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `dim SR_{i,j}` for `i <= bosonic_cap`, all `j`, with generators given explicitly.
pub fn bigraded_hilbert_with(generators: &[SuperElement], n: usize, bosonic_cap: usize) -> Result<BigradedTable> {
    let grid: Vec<(usize, usize)> =
        (0..=bosonic_cap + 1).flat_map(|i| (0..=n).map(move |j| (i, j))).collect();
    let results = grid
        .par_iter()
        .map(|&(i, j)| {
            let rows = pieces_from(generators, n, i, j)?;
            Ok(omega_dimension(n, i, j) - piece_echelon(&rows).rank() as u64)
        })
        .collect::<Result<Vec<u64>>>()?;
    let mut dims = vec![vec![0u64; n + 1]; bosonic_cap + 1];
    let mut complete = true;
    for (&(i, j), d) in grid.iter().zip(results) {
        if i <= bosonic_cap {
            dims[i][j] = d;
        } else if d != 0 {
            complete = false;
        }
    }
    Ok(BigradedTable { n, dims, complete })
}

/// `dim SR_{i,j}` computed by row reduction in each bidegree.
pub fn sr_bigraded_hilbert(n: usize, bosonic_cap: usize) -> Result<BigradedTable> {
    bigraded_hilbert_with(&solomon_generators(n), n, bosonic_cap)
}

/// `ℳ = ⊔_J ℳ(J) θ_J`, blocks ordered by the indicator vector of `J`
/// (lexicographic, `∅` first), each block in descending lex order.
pub fn artin_monomials(n: usize) -> Vec<SuperMonomial> {
    let mut js = subsets(n);
    let key = |j: &Vec<usize>| -> u64 { j.iter().map(|&i| 1u64 << (n - i)).sum() };
    js.sort_by_key(key);
    let mut out = Vec::new();
    for j in js {
        for m in staircase_monomials(&j, n) {
            out.push(SuperMonomial::new(m, &j).expect("indices in range"));
        }
    }
    out
}

/// Outcome of checking `ℳ` against `SR`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrBasisReport {
    pub n: usize,
    pub artin_count: u64,
    pub sr_dimension: u64,
    /// Bidegrees where some element of `ℳ` fell into the span of `I` and earlier elements.
    pub dependent_bidegrees: Vec<(usize, usize)>,
    pub complete: bool,
    pub passed: bool,
}

/// `ℳ` is linearly independent modulo `I` in every bidegree and has `dim SR` elements.
pub fn sr_basis_report(n: usize) -> Result<SrBasisReport> {
    sr_basis_report_with(&solomon_generators(n), n)
}

/// [`sr_basis_report`] with the generators of `I` given explicitly.
pub fn sr_basis_report_with(gens: &[SuperElement], n: usize) -> Result<SrBasisReport> {
    let cap = default_cap(n);
    let artin = artin_monomials(n);
    let mut by_bidegree: BTreeMap<(usize, usize), Vec<SuperMonomial>> = BTreeMap::new();
    for m in &artin {
        by_bidegree.entry(m.bidegree()).or_default().push(m.clone());
    }
    let table = bigraded_hilbert_with(gens, n, cap)?;
    let checks = by_bidegree
        .par_iter()
        .map(|(&(i, j), ms)| {
            let mut e = piece_echelon(&pieces_from(gens, n, i, j)?);
            let independent =
                ms.iter().all(|m| e.insert(SuperElement::from_monomial(m.clone()).row()));
            Ok(((i, j), independent))
        })
        .collect::<Result<Vec<_>>>()?;
    let dependent_bidegrees: Vec<(usize, usize)> =
        checks.into_iter().filter(|(_, ok)| !ok).map(|(b, _)| b).collect();
    let artin_count = artin.len() as u64;
    let sr_dimension = table.total();
    let passed = dependent_bidegrees.is_empty() && table.complete && artin_count == sr_dimension;
    Ok(SrBasisReport { n, artin_count, sr_dimension, dependent_bidegrees, complete: table.complete, passed })
}

/// Refuses `n` above `max_n`.
pub fn verify_sr_basis_up_to(n: usize, max_n: usize) -> Result<bool> {
    if n > max_n {
        return Err(Error::TooLarge(format!("superspace basis check for n = {n} (limit {max_n})")));
    }
    Ok(sr_basis_report(n)?.passed)
}

/// [`verify_sr_basis_up_to`] with the default limit `n <= 4`.
pub fn verify_sr_basis(n: usize) -> Result<bool> {
    verify_sr_basis_up_to(n, 4)
}

/// Number of ordered set partitions of `{1, ..., n}`.
pub fn fubini(n: usize) -> u64 {
    // a(n) = Σ_k C(n, k) a(n - k)
    let mut a = vec![1u64];
    for m in 1..=n {
        let v = (1..=m).map(|k| binomial(m as u64, k as u64) * a[m - k]).sum();
        a.push(v);
    }
    a[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str, n: usize) -> SuperElement {
        SuperElement::parse(text, n).unwrap()
    }

    #[test]
    fn anticommutation() {
        let t1 = SuperElement::theta(2, 1).unwrap();
        let t2 = SuperElement::theta(2, 2).unwrap();
        assert_eq!(t2.multiply(&t1).unwrap(), s("-t1*t2", 2));
        assert!(t1.multiply(&t1).unwrap().is_zero());
        assert_eq!(s("x1*t1", 2).multiply(&s("x2*t2", 2)).unwrap(), s("x1*x2*t1*t2", 2));
    }

    #[test]
    fn total_derivative() {
        assert_eq!(s("x1", 1).euler_d(), s("t1", 1));
        assert!(s("x1*t1", 1).euler_d().is_zero());
        assert_eq!(s("x1^2+x2^2+x3^2", 3).euler_d(), s("2*x1*t1+2*x2*t2+2*x3*t3", 3));
        // d(x1 θ2) = θ1 θ2, d(x2 θ1) = θ2 θ1 = -θ1 θ2
        assert_eq!(s("x1*t2", 2).euler_d(), s("t1*t2", 2));
        assert_eq!(s("x2*t1", 2).euler_d(), s("-t1*t2", 2));
    }

    #[test]
    fn action_signs() {
        assert_eq!(s("t1*t2", 2).sn_act(&[2, 1]).unwrap(), s("-t1*t2", 2));
        assert_eq!(s("x1*t2", 2).sn_act(&[1, 2]).unwrap(), s("x1*t2", 2));
        assert!(s("t1", 2).sn_act(&[1, 1]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let e = s("3*x1^2*t1*t3-x2*t2+1/2", 3);
        assert_eq!(e.to_string(), "3*x1^2*t1*t3-x2*t2+1/2");
        assert_eq!(e.to_string().parse::<SuperElement>().unwrap(), e);
        assert!(SuperElement::parse("t3*t1", 3).is_err());
        assert_eq!(SuperElement::zero(2).to_string(), "0");
    }

    #[test]
    fn small_pieces() {
        let rank = |n, i, j| piece_echelon(&invariant_ideal_pieces(n, i, j).unwrap()).rank() as u64;
        assert_eq!(rank(1, 1, 0), 1);
        assert_eq!(omega_dimension(2, 0, 1) - rank(2, 0, 1), 1);
        assert_eq!(omega_dimension(3, 0, 2) - rank(3, 0, 2), 1);
    }

    #[test]
    fn fubini_numbers() {
        assert_eq!((0..=5).map(fubini).collect::<Vec<_>>(), vec![1, 1, 3, 13, 75, 541]);
    }

    #[test]
    fn small_tables() {
        let t = sr_bigraded_hilbert(2, default_cap(2)).unwrap();
        assert_eq!(t.entries(), vec![((0, 0), 1), ((0, 1), 1), ((1, 0), 1)]);
        assert!(t.complete);
        assert_eq!(sr_bigraded_hilbert(1, 0).unwrap().total(), 1);
        assert!(verify_sr_basis(2).unwrap());
        assert!(verify_sr_basis(5).is_err());
    }
}
