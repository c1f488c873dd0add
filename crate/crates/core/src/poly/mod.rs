//! Exact multivariate polynomials over the rationals.

mod monomial;
pub(crate) mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
#[cfg(test)]
use num_traits::Signed;

pub use monomial::Monomial;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// A polynomial in `x_1, ..., x_n` with rational coefficients.
///
/// Terms live in a map ordered by grevlex, so the last entry is the leading
/// term. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

/// What a variable is replaced by in [`Polynomial::specialize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Zero,
    Var(usize),
}

/// A polynomial split by total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousDecomposition {
    pub pieces: BTreeMap<usize, Polynomial>,
}

impl HomogeneousDecomposition {
    pub fn reassemble(&self, n: usize) -> Polynomial {
        let mut out = Polynomial::zero(n);
        for p in self.pieces.values() {
            out += p;
        }
        out
    }
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Polynomial::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Polynomial::term(n, Monomial::one(n), c)
    }

    pub fn term(n: usize, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.n(), n, "monomial length does not match ambient n");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { n, terms }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let n = m.n();
        Polynomial::term(n, m, Rational::one())
    }

    /// The variable `x_i`; panics when `i` is not in `1..=n`.
    pub fn var(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "variable x{i} out of range for n = {n}");
        Polynomial::from_monomial(Monomial::var(n, i))
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.n(), self.n, "monomial length does not match ambient n");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
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

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term under grevlex.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// The constant value when the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(d)` when every term has degree `d`; zero counts as homogeneous of degree 0.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => Some(0),
            Some(d) => degs.all(|e| e == d).then_some(d),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    pub fn homogeneous_components(&self) -> HomogeneousDecomposition {
        let mut pieces: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            pieces
                .entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.n))
                .terms
                .insert(m.clone(), c.clone());
        }
        HomogeneousDecomposition { pieces }
    }

    fn check_same_n(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    fn check_var(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::VariableOutOfRange { index: i, n: self.n });
        }
        Ok(())
    }

    /// Product of two polynomials, failing on differing ambient dimension.
    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_n(other)?;
        let mut out = Polynomial::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_n(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_n(other)?;
        Ok(self - other)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.n);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Product of a list of polynomials (`1` for an empty list).
    pub fn product<'a, I>(n: usize, factors: I) -> Polynomial
    where
        I: IntoIterator<Item = &'a Polynomial>,
    {
        factors.into_iter().fold(Polynomial::one(n), |acc, f| &acc * f)
    }

    /// Formal partial derivative with respect to `x_i`.
    pub fn partial(&self, i: usize) -> Result<Polynomial> {
        self.check_var(i)?;
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let a = m.exponent(i);
            if a == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[i - 1] -= 1;
            out.add_term(Monomial(e), c * rat(a as i64));
        }
        Ok(out)
    }

    /// `self ⊙ g`: apply `self(∂_1, ..., ∂_n)` to `g`.
    pub fn odot(&self, g: &Polynomial) -> Result<Polynomial> {
        self.check_same_n(g)?;
        let mut out = Polynomial::zero(self.n);
        for (a, c) in &self.terms {
            for (b, d) in &g.terms {
                if !a.divides(b) {
                    continue;
                }
                // ∂^a x^b = ∏ b!/(b-a)! x^{b-a}
                let mut factor = BigInt::one();
                for (&ai, &bi) in a.exponents().iter().zip(b.exponents()) {
                    for t in (bi - ai + 1)..=bi {
                        factor *= t;
                    }
                }
                let q = a.quotient_of(b).unwrap();
                out.add_term(q, c * d * Rational::from_integer(factor));
            }
        }
        Ok(out)
    }

    /// The Vandermonde product `∏_{i<j} (x_i - x_j)`.
    pub fn vandermonde(n: usize) -> Polynomial {
        let mut out = Polynomial::one(n);
        for i in 1..=n {
            for j in (i + 1)..=n {
                out = &out * &(&Polynomial::var(n, i) - &Polynomial::var(n, j));
            }
        }
        out
    }

    /// Substitutes `x_i -> 0` or `x_i -> x_j`.
    pub fn specialize(&self, i: usize, target: Target) -> Result<Polynomial> {
        self.check_var(i)?;
        if let Target::Var(j) = target {
            self.check_var(j)?;
        }
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let a = m.exponent(i);
            match target {
                Target::Zero => {
                    if a == 0 {
                        out.add_term(m.clone(), c.clone());
                    }
                }
                Target::Var(j) => {
                    let mut e = m.0.clone();
                    e[i - 1] = 0;
                    e[j - 1] += a;
                    out.add_term(Monomial(e), c.clone());
                }
            }
        }
        Ok(out)
    }

    /// Drops `x_p` (which must not occur) and shifts the higher variables down.
    pub fn remove_variable(&self, p: usize) -> Result<Polynomial> {
        self.check_var(p)?;
        let mut out = Polynomial::zero(self.n - 1);
        for (m, c) in &self.terms {
            if m.exponent(p) != 0 {
                return Err(Error::VariableOccurs(p));
            }
            let mut e = m.0.clone();
            e.remove(p - 1);
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Embeds into `n + 1` variables with a fresh `x_p`; old `x_k`, `k >= p`, become `x_{k+1}`.
    pub fn insert_variable(&self, p: usize) -> Result<Polynomial> {
        if p == 0 || p > self.n + 1 {
            return Err(Error::VariableOutOfRange { index: p, n: self.n + 1 });
        }
        let mut out = Polynomial::zero(self.n + 1);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.insert(p - 1, 0);
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Renames `x_i -> x_{w(i)}` where `w` is given in one-line notation (1-based).
    pub fn permute(&self, w: &[usize]) -> Result<Polynomial> {
        check_permutation(w, self.n)?;
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let mut e = smallvec::smallvec![0u16; self.n];
            for (i, &a) in m.exponents().iter().enumerate() {
                e[w[i] - 1] = a;
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial> {
        self.check_same_n(d)?;
        let (lm, lc) = d.leading_term().ok_or(Error::ZeroDivisor)?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.n);
        while let Some((m, c)) = rem.leading_term() {
            let q = lm.quotient_of(m).ok_or(Error::NotDivisible)?;
            let coef = c / lc;
            rem -= &d.mul_monomial(&q).scale(&coef);
            quot.add_term(q, coef);
        }
        Ok(quot)
    }

    pub fn divides(&self, f: &Polynomial) -> bool {
        !self.is_zero() && f.div_exact(self).is_ok()
    }

    /// Rescales so the lex-largest monomial has coefficient `+1`.
    pub fn lex_normalized(&self) -> Polynomial {
        match self.terms.iter().max_by(|a, b| a.0.cmp_lex(b.0)) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Rescales so the grevlex leading coefficient is `+1`.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Sum of the coefficients times the given monomial pieces; used for linear maps
    /// that send `x_i` to fixed polynomials.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.n {
            return Err(Error::WrongCount { expected: self.n, got: images.len() });
        }
        let target_n = images.first().map(Polynomial::n).unwrap_or(0);
        let mut out = Polynomial::zero(target_n);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target_n, c.clone());
            for (i, &a) in m.exponents().iter().enumerate() {
                if a > 0 {
                    t = t.multiply(&images[i].pow(a as u32))?;
                }
            }
            out += &t;
        }
        Ok(out)
    }
}

pub(crate) fn check_permutation(w: &[usize], n: usize) -> Result<()> {
    if w.len() != n {
        return Err(Error::NotAPermutation(n));
    }
    let mut seen = vec![false; n];
    for &v in w {
        if v == 0 || v > n || seen[v - 1] {
            return Err(Error::NotAPermutation(n));
        }
        seen[v - 1] = true;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let body = if m.is_one() { String::new() } else { m.to_string() };
            text::write_term(&mut out, c, &body, k == 0);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (n={})", self.n)
    }
}

impl Polynomial {
    /// Parses the canonical text form in `n` variables.
    pub fn parse(s: &str, n: usize) -> Result<Polynomial> {
        let mut out = Polynomial::zero(n);
        for t in text::parse_terms(s)? {
            if !t.ts.is_empty() {
                return Err(Error::Parse("fermionic factor in a polynomial".into()));
            }
            out.add_term(raw_monomial(&t.xs, n)?, t.coeff);
        }
        Ok(out)
    }
}

pub(crate) fn raw_monomial(xs: &[(usize, u32)], n: usize) -> Result<Monomial> {
    let mut e = Monomial::one(n).0;
    for &(i, a) in xs {
        if i == 0 || i > n {
            return Err(Error::VariableOutOfRange { index: i, n });
        }
        let a: u16 = a.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
        e[i - 1] += a;
    }
    Ok(Monomial(e))
}

/// Parses with `n` set to the largest variable index that appears (at least 1).
impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let terms = text::parse_terms(s)?;
        let n = terms
            .iter()
            .flat_map(|t| t.xs.iter().map(|&(i, _)| i))
            .max()
            .unwrap_or(1)
            .max(1);
        Polynomial::parse(s, n)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.multiply(rhs).expect("ambient dimension mismatch in polynomial product")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.n, rhs.n, "ambient dimension mismatch in polynomial sum");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.n, rhs.n, "ambient dimension mismatch in polynomial difference");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = p("x1+x2", 2);
        let b = p("x1-x2", 2);
        assert_eq!((&a * &b).to_string(), "x1^2-x2^2");
        assert_eq!(&a * &Polynomial::one(2), a);
    }

    #[test]
    fn mismatched_n_is_an_error() {
        let a = Polynomial::var(2, 1);
        let b = Polynomial::var(3, 1);
        assert!(matches!(a.multiply(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn partials() {
        assert_eq!(p("x1^2*x2", 2).partial(1).unwrap(), p("2*x1*x2", 2));
        assert!(p("x1", 2).partial(2).unwrap().is_zero());
        assert_eq!(p("x1-x2", 2).partial(1).unwrap(), Polynomial::one(2));
        assert!(p("x1", 2).partial(3).is_err());
    }

    #[test]
    fn odot_examples() {
        assert_eq!(p("x1", 1).odot(&p("x1^2", 1)).unwrap(), p("2*x1", 1));
        assert!(p("x1+x2", 2).odot(&p("x1-x2", 2)).unwrap().is_zero());
        let op = p("x1^2*x2-x1*x2^2", 2);
        assert!(op.odot(&Polynomial::vandermonde(2)).unwrap().is_zero());
    }

    #[test]
    fn vandermonde_small() {
        assert_eq!(Polynomial::vandermonde(1), Polynomial::one(1));
        assert_eq!(Polynomial::vandermonde(2), p("x1-x2", 2));
        let d3 = Polynomial::vandermonde(3);
        assert_eq!(d3.len(), 6);
        assert!(d3.terms().all(|(_, c)| c.abs().is_one()));
    }

    #[test]
    fn specialize_examples() {
        assert_eq!(p("x1-x2", 2).specialize(2, Target::Zero).unwrap(), p("x1", 2));
        assert!(p("x1-x2", 2).specialize(1, Target::Var(2)).unwrap().is_zero());
        let d3 = Polynomial::vandermonde(3).specialize(3, Target::Zero).unwrap();
        assert_eq!(d3, p("x1^2*x2-x1*x2^2", 3));
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "1", "-1", "x1^2-x2^2", "3/2*x1*x2+1", "-x3+x1*x2^3-7/3"] {
            let q = p(s, 3);
            let again = p(&q.to_string(), 3);
            assert_eq!(q, again);
        }
        assert_eq!(p("1+3/2*x1*x2", 2).to_string(), "3/2*x1*x2+1");
        assert_eq!(p("x2+x1", 2).to_string(), "x1+x2");
        assert!(Polynomial::parse("x1+", 2).is_err());
        assert!(Polynomial::parse("x3", 2).is_err());
        assert!(Polynomial::parse("1/0", 2).is_err());
    }

    #[test]
    fn exact_division() {
        let a = p("x1^3-x2^3", 2);
        let b = p("x1-x2", 2);
        assert_eq!(a.div_exact(&b).unwrap(), p("x1^2+x1*x2+x2^2", 2));
        assert_eq!(p("x1", 2).div_exact(&b), Err(Error::NotDivisible));
        assert_eq!(a.div_exact(&Polynomial::zero(2)), Err(Error::ZeroDivisor));
    }

    #[test]
    fn variable_insertion_and_removal() {
        let a = p("x1*x2^2+x2", 2);
        let b = a.insert_variable(2).unwrap();
        assert_eq!(b, p("x1*x3^2+x3", 3));
        assert_eq!(b.remove_variable(2).unwrap(), a);
        assert_eq!(b.remove_variable(3), Err(Error::VariableOccurs(3)));
    }

    #[test]
    fn lex_normalization() {
        assert_eq!(p("x2-x1", 2).lex_normalized(), p("x1-x2", 2));
        assert_eq!(p("-2*x1*x2", 2).lex_normalized(), p("x1*x2", 2));
    }
}
