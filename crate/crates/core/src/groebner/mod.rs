//! Ideals of the polynomial ring, Groebner bases, normal forms, standard
//! monomials, Hilbert series and colon ideals.

mod buchberger;
mod hilbert;
mod order;

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use buchberger::OPoly;
pub use hilbert::HilbertSeries;
pub use order::MonomialOrder;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::poly::{Monomial, Polynomial};

/// A reduced Groebner basis for a fixed order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    n: usize,
    order: MonomialOrder,
    polys: Vec<OPoly>,
}

/// Standard monomials up to a degree cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardMonomials {
    /// In ascending grevlex order.
    pub monomials: Vec<Monomial>,
    /// `true` when the quotient is finite dimensional and the list is exhaustive.
    pub complete: bool,
}

impl GroebnerBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Basis elements, monic, by descending leading monomial.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.polys.iter().map(|p| p.to_poly(self.n)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.lm().clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(OPoly::is_constant)
    }

    fn check_n(&self, f: &Polynomial) -> Result<()> {
        if f.n() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: f.n() });
        }
        Ok(())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_n(f)?;
        let basis: Vec<&OPoly> = self.polys.iter().collect();
        let r = buchberger::reduce(&OPoly::from_poly(f, self.order), &basis, self.order);
        Ok(r.to_poly(self.n))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    fn is_standard(&self, m: &Monomial) -> bool {
        !self.polys.iter().any(|p| p.lm().divides(m))
    }

    /// Finite dimensional quotient: every variable has a pure power among the leading monomials.
    pub fn is_artinian(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        (1..=self.n).all(|i| {
            self.polys.iter().any(|p| {
                let m = p.lm();
                m.exponent(i) > 0 && m.degree() == m.exponent(i) as usize
            })
        })
    }

    /// Standard monomials; exhaustive when the quotient is finite dimensional,
    /// otherwise cut at total degree `cap`.
    pub fn standard_monomials(&self, cap: usize) -> StandardMonomials {
        if self.is_unit() {
            return StandardMonomials { monomials: vec![], complete: true };
        }
        let artinian = self.is_artinian();
        let mut out = Vec::new();
        let mut layer = vec![Monomial::one(self.n)];
        let mut d = 0;
        loop {
            out.extend(layer.iter().cloned());
            if layer.is_empty() {
                return StandardMonomials { monomials: out, complete: true };
            }
            if !artinian && d >= cap {
                out.sort();
                return StandardMonomials { monomials: out, complete: false };
            }
            let mut next = BTreeSet::new();
            for m in &layer {
                for i in 1..=self.n {
                    let c = m.mul(&Monomial::var(self.n, i));
                    if self.is_standard(&c) {
                        next.insert(c);
                    }
                }
            }
            layer = next.into_iter().collect();
            d += 1;
        }
    }
}

/// An ideal given by generators, with lazily computed Groebner bases.
#[derive(Debug)]
pub struct Ideal {
    n: usize,
    generators: Vec<Polynomial>,
    grevlex: OnceLock<Arc<GroebnerBasis>>,
    lex: OnceLock<Arc<GroebnerBasis>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            n: self.n,
            generators: self.generators.clone(),
            grevlex: self.grevlex.clone(),
            lex: self.lex.clone(),
        }
    }
}

impl Ideal {
    /// Ideal generated by `generators` in `n` variables. Zero generators are dropped.
    pub fn new(n: usize, generators: Vec<Polynomial>) -> Result<Ideal> {
        for g in &generators {
            if g.n() != n {
                return Err(Error::DimensionMismatch { left: n, right: g.n() });
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { n, generators, grevlex: OnceLock::new(), lex: OnceLock::new() })
    }

    pub fn zero(n: usize) -> Ideal {
        Ideal::new(n, vec![]).unwrap()
    }

    pub fn unit(n: usize) -> Ideal {
        Ideal::new(n, vec![Polynomial::one(n)]).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn groebner_basis(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        let cell = match order {
            MonomialOrder::Grevlex => Some(&self.grevlex),
            MonomialOrder::Lex => Some(&self.lex),
            MonomialOrder::Elimination { .. } => None,
        };
        if let Some(gb) = cell.and_then(|c| c.get()) {
            return Ok(gb.clone());
        }
        let polys = if self.generators.is_empty() {
            vec![]
        } else {
            buchberger::groebner(&self.generators, order)?
        };
        let gb = Arc::new(GroebnerBasis { n: self.n, order, polys });
        if let Some(c) = cell {
            let _ = c.set(gb.clone());
        }
        Ok(gb)
    }

    pub fn gb(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner_basis(MonomialOrder::Grevlex)
    }

    pub fn normal_form(&self, f: &Polynomial, order: MonomialOrder) -> Result<Polynomial> {
        self.groebner_basis(order)?.normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.gb()?.contains(f)
    }

    /// `true` if every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        let gb = self.gb()?;
        for g in other.generators() {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    pub fn is_artinian(&self) -> Result<bool> {
        Ok(self.gb()?.is_artinian())
    }

    /// Equality via reduced Groebner bases under `order`.
    pub fn equals_under(&self, other: &Ideal, order: MonomialOrder) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let a = self.groebner_basis(order)?.polynomials();
        let b = other.groebner_basis(order)?.polynomials();
        Ok(a == b)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(self.n, gens)
    }

    pub fn standard_monomials(&self, cap: usize, order: MonomialOrder) -> Result<StandardMonomials> {
        Ok(self.groebner_basis(order)?.standard_monomials(cap))
    }

    /// Hilbert series of `S / I`; requires homogeneous generators.
    pub fn hilbert_series(&self, cap: usize) -> Result<HilbertSeries> {
        if !self.is_homogeneous() {
            return Err(Error::Inhomogeneous);
        }
        let sm = self.standard_monomials(cap, MonomialOrder::Grevlex)?;
        let top = sm.monomials.iter().map(Monomial::degree).max();
        let len = match (sm.complete, top) {
            (true, None) => 0,
            (true, Some(t)) => t + 1,
            (false, _) => cap + 1,
        };
        let mut coeffs = vec![0u64; len];
        for m in &sm.monomials {
            coeffs[m.degree()] += 1;
        }
        Ok(if sm.complete {
            HilbertSeries::finite(coeffs)
        } else {
            HilbertSeries { coeffs, complete: false }
        })
    }

    /// `I ∩ (f)` by eliminating an auxiliary variable.
    fn intersect_principal(&self, f: &Polynomial) -> Result<Vec<Polynomial>> {
        let n = self.n;
        let t = Polynomial::var(n + 1, 1);
        let one_minus_t = &Polynomial::one(n + 1) - &t;
        let mut gens = Vec::with_capacity(self.generators.len() + 1);
        for g in &self.generators {
            gens.push(&t * &g.insert_variable(1)?);
        }
        gens.push(&one_minus_t * &f.insert_variable(1)?);
        let gb = buchberger::groebner(&gens, MonomialOrder::Elimination { block: 1 })?;
        gb.iter()
            .map(|p| p.to_poly(n + 1))
            .filter(|p| p.terms().all(|(m, _)| m.exponent(1) == 0))
            .map(|p| p.remove_variable(1))
            .collect()
    }

    /// `I : f = { g : f g ∈ I }`, by elimination.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        if f.n() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: f.n() });
        }
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if self.generators.is_empty() || f.as_constant().is_some() {
            return Ok(self.clone());
        }
        if self.contains(f)? {
            return Ok(Ideal::unit(self.n));
        }
        let quotients = self
            .intersect_principal(f)?
            .iter()
            .map(|g| g.div_exact(f))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.n, quotients)
    }

    /// `I : (f_1 f_2 ... f_k)` as the iterated colon `(((I : f_1) : f_2) ...)`.
    pub fn colon_by_factors(&self, factors: &[Polynomial]) -> Result<Ideal> {
        let mut cur = self.clone();
        for f in factors {
            cur = cur.colon(f)?;
            if cur.is_unit()? {
                return Ok(Ideal::unit(self.n));
            }
        }
        Ok(cur)
    }

    /// `I : f` for homogeneous `I` with finite dimensional quotient and homogeneous `f`,
    /// by solving `f g ≡ 0` degree by degree in the standard-monomial basis.
    pub fn colon_degreewise(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let e = f.homogeneous_degree().ok_or(Error::Inhomogeneous)?;
        if !self.is_homogeneous() {
            return Err(Error::Inhomogeneous);
        }
        let gb = self.gb()?;
        if !gb.is_artinian() {
            return Err(Error::Precondition("quotient is not finite dimensional".into()));
        }
        if gb.is_unit() || gb.contains(f)? {
            return Ok(Ideal::unit(self.n));
        }
        let std = gb.standard_monomials(0).monomials;
        let top = std.iter().map(Monomial::degree).max().unwrap_or(0);
        let mut gens = self.generators.clone();
        for d in 0..=top {
            let basis: Vec<&Monomial> = std.iter().filter(|m| m.degree() == d).collect();
            if d + e > top {
                gens.extend(basis.iter().map(|m| Polynomial::from_monomial((*m).clone())));
                break;
            }
            gens.extend(kernel_of_multiplication(&gb, f, &basis)?);
        }
        Ideal::new(self.n, gens)
    }

    /// `I ∩ J` by elimination.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        if self.generators.is_empty() || other.generators.is_empty() {
            return Ok(Ideal::zero(self.n));
        }
        let n = self.n;
        let t = Polynomial::var(n + 1, 1);
        let one_minus_t = &Polynomial::one(n + 1) - &t;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(&t * &g.insert_variable(1)?);
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.insert_variable(1)?);
        }
        let gb = buchberger::groebner(&gens, MonomialOrder::Elimination { block: 1 })?;
        let keep = gb
            .iter()
            .map(|p| p.to_poly(n + 1))
            .filter(|p| p.terms().all(|(m, _)| m.exponent(1) == 0))
            .map(|p| p.remove_variable(1))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(n, keep)
    }
}

/// Kernel of `g ↦ NF(f g)` on the span of `basis`, returned as polynomials.
fn kernel_of_multiplication(
    gb: &GroebnerBasis,
    f: &Polynomial,
    basis: &[&Monomial],
) -> Result<Vec<Polynomial>> {
    // Columns for the image come first, so a stored row led by a source
    // column has vanishing image: those rows span the kernel.
    #[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
    enum Col {
        Image(std::cmp::Reverse<Monomial>),
        Source(usize),
    }
    let n = gb.n();
    let mut ech: Echelon<Col> = Echelon::new();
    for (k, m) in basis.iter().enumerate() {
        let image = gb.normal_form(&f.mul_monomial(m))?;
        let mut row: SparseRow<Col> = image
            .terms()
            .rev()
            .map(|(mm, c)| (Col::Image(std::cmp::Reverse(mm.clone())), c.clone()))
            .collect();
        row.push((Col::Source(k), num_traits::One::one()));
        ech.insert(row);
    }
    let mut out = Vec::new();
    for row in ech.rows() {
        if !matches!(row[0].0, Col::Source(_)) {
            continue;
        }
        let mut p = Polynomial::zero(n);
        for (c, v) in row {
            if let Col::Source(k) = c {
                p += &Polynomial::term(n, basis[*k].clone(), v.clone());
            }
        }
        out.push(p);
    }
    Ok(out)
}

/// Equality of ideals via reduced grevlex Groebner bases.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.equals_under(b, MonomialOrder::Grevlex)
}

/// `true` iff the `n` homogeneous positive-degree polynomials cut out a
/// finite dimensional quotient, which for such input means they form a
/// regular sequence.
pub fn is_regular_sequence(fs: &[Polynomial]) -> Result<bool> {
    let n = fs.first().map(Polynomial::n).unwrap_or(0);
    if fs.len() != n || n == 0 {
        return Err(Error::WrongCount { expected: n.max(1), got: fs.len() });
    }
    for f in fs {
        match f.homogeneous_degree() {
            Some(d) if d > 0 && !f.is_zero() => {}
            Some(_) => return Err(Error::Precondition("generator of degree zero".into())),
            None => return Err(Error::Inhomogeneous),
        }
    }
    let ideal = Ideal::new(n, fs.to_vec())?;
    Ideal::is_artinian(&ideal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    fn ideal(n: usize, gens: &[&str]) -> Ideal {
        Ideal::new(n, gens.iter().map(|g| p(g, n)).collect()).unwrap()
    }

    #[test]
    fn small_bases() {
        let i = ideal(2, &["x1+x2", "x1*x2"]);
        let gb = i.groebner_basis(MonomialOrder::Lex).unwrap().polynomials();
        assert_eq!(gb, vec![p("x1+x2", 2), p("x2^2", 2)]);
        assert_eq!(ideal(2, &["x1"]).gb().unwrap().polynomials(), vec![p("x1", 2)]);
        assert!(ideal(2, &["1"]).is_unit().unwrap());
        assert!(ideal(2, &["x1", "x1-1"]).is_unit().unwrap());
    }

    #[test]
    fn normal_forms() {
        let i = ideal(2, &["x1+x2", "x1*x2"]);
        assert!(i.normal_form(&p("x1*x2", 2), MonomialOrder::Lex).unwrap().is_zero());
        assert_eq!(i.normal_form(&p("x1", 2), MonomialOrder::Lex).unwrap(), p("-x2", 2));
        let m = ideal(3, &["x1", "x2", "x3"]);
        assert_eq!(m.normal_form(&Polynomial::one(3), MonomialOrder::Grevlex).unwrap(), Polynomial::one(3));
    }

    #[test]
    fn standard_monomials_and_series() {
        let i = ideal(2, &["x1+x2", "x1*x2"]);
        let sm = i.standard_monomials(10, MonomialOrder::Lex).unwrap();
        assert!(sm.complete);
        assert_eq!(sm.monomials, vec![Monomial::one(2), Monomial::var(2, 2)]);
        let sq = ideal(1, &["x1^2"]).standard_monomials(10, MonomialOrder::Grevlex).unwrap();
        assert_eq!(sq.monomials.len(), 2);
        let line = ideal(2, &["x2-x1"]).standard_monomials(5, MonomialOrder::Grevlex).unwrap();
        assert!(!line.complete);
        assert_eq!(line.monomials.len(), 6);

        let ci = ideal(2, &["x1^2", "x2^3"]).hilbert_series(20).unwrap();
        assert_eq!(ci, HilbertSeries::from_degrees(&[2, 3]));
        let e = ideal(3, &["x1+x2+x3", "x1*x2+x1*x3+x2*x3", "x1*x2*x3"]).hilbert_series(20).unwrap();
        assert_eq!(e.coeffs, vec![1, 2, 2, 1]);
        assert!(ideal(2, &["1"]).hilbert_series(5).unwrap().is_zero());
        assert_eq!(ideal(2, &["x1+1"]).hilbert_series(5), Err(Error::Inhomogeneous));
    }

    #[test]
    fn colon_examples() {
        let a = ideal(1, &["x1^2"]);
        let c = a.colon(&p("x1", 1)).unwrap();
        assert!(ideal_equal(&c, &ideal(1, &["x1"])).unwrap());
        let e = ideal(2, &["x1+x2", "x1*x2"]);
        let c = e.colon(&p("x2", 2)).unwrap();
        assert!(ideal_equal(&c, &ideal(2, &["x1", "x2"])).unwrap());
        let c2 = e.colon_degreewise(&p("x2", 2)).unwrap();
        assert!(ideal_equal(&c, &c2).unwrap());
        assert!(ideal(2, &["x1"]).colon(&p("x1", 2)).unwrap().is_unit().unwrap());
        assert_eq!(e.colon(&Polynomial::zero(2)).err(), Some(Error::ZeroDivisor));
    }

    #[test]
    fn equality_and_regularity() {
        assert!(ideal_equal(&ideal(2, &["x1+x2", "x1-x2"]), &ideal(2, &["x1", "x2"])).unwrap());
        assert!(!ideal_equal(&ideal(2, &["x1"]), &ideal(2, &["x1^2"])).unwrap());
        assert!(is_regular_sequence(&[p("x1", 2), p("x2", 2)]).unwrap());
        assert!(!is_regular_sequence(&[p("x1", 2), p("x1^2", 2)]).unwrap());
        assert!(is_regular_sequence(&[p("x1", 2)]).is_err());
        assert_eq!(is_regular_sequence(&[p("x1", 2), p("x2+1", 2)]), Err(Error::Inhomogeneous));
    }

    #[test]
    fn intersection() {
        let a = ideal(2, &["x1"]);
        let b = ideal(2, &["x2"]);
        assert!(ideal_equal(&a.intersect(&b).unwrap(), &ideal(2, &["x1*x2"])).unwrap());
    }
}
