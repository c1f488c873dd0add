//! Derivations of the polynomial ring, Saito's criterion, the explicit free
//! bases of southwest arrangements and of `A_J`, and Solomon-Terao ideals.

use std::fmt;

use num_traits::Zero;

use crate::arrangement::{alpha, build_aj, Arrangement, HyperplaneSet};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::poly_det;
use crate::poly::{Polynomial, Rational, Target};

/// `Σ coeffs[k-1] ∂_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    n: usize,
    coeffs: Vec<Polynomial>,
}

impl Derivation {
    pub fn new(coeffs: Vec<Polynomial>) -> Result<Derivation> {
        let n = coeffs.len();
        for c in &coeffs {
            if c.n() != n {
                return Err(Error::DimensionMismatch { left: n, right: c.n() });
            }
        }
        Ok(Derivation { n, coeffs })
    }

    pub fn zero(n: usize) -> Derivation {
        Derivation { n, coeffs: vec![Polynomial::zero(n); n] }
    }

    /// The Euler field `Σ x_k ∂_k`.
    pub fn euler(n: usize) -> Derivation {
        Derivation { n, coeffs: (1..=n).map(|k| Polynomial::var(n, k)).collect() }
    }

    /// `c ∂_k`.
    pub fn single(n: usize, k: usize, c: Polynomial) -> Derivation {
        let mut d = Derivation::zero(n);
        d.coeffs[k - 1] = c;
        d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    /// Coefficient of `∂_k` (1-based).
    pub fn coeff(&self, k: usize) -> &Polynomial {
        &self.coeffs[k - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    /// Common degree of the nonzero coefficients; `None` if they disagree or all vanish.
    pub fn degree(&self) -> Option<usize> {
        let mut deg = None;
        for c in self.coeffs.iter().filter(|c| !c.is_zero()) {
            let d = c.homogeneous_degree()?;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// `θ(f) = Σ c_k ∂_k f`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.n() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: f.n() });
        }
        let mut out = Polynomial::zero(self.n);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out += &(c * &f.partial(k + 1)?);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, f: &Polynomial) -> Derivation {
        Derivation { n: self.n, coeffs: self.coeffs.iter().map(|c| c * f).collect() }
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        Derivation {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    /// `α | θ(α)` for every hyperplane of `A`.
    pub fn is_derivation_of(&self, a: &impl HyperplaneSet) -> bool {
        a.linear_forms().iter().all(|alpha| match self.apply(alpha) {
            Ok(v) => v.is_zero() || alpha.divides(&v),
            Err(_) => false,
        })
    }

    /// The single-polynomial form `Q(A) | θ(Q(A))`.
    pub fn preserves_defining_polynomial(&self, a: &impl HyperplaneSet) -> bool {
        let q = a.defining_polynomial();
        match self.apply(&q) {
            Ok(v) => v.is_zero() || q.divides(&v),
            Err(_) => false,
        }
    }

    /// Restriction to `x_p = 0`: specialize every coefficient, drop `∂_p`, reindex.
    /// Requires `x_p` to divide the coefficient of `∂_p`.
    pub fn restrict(&self, p: usize) -> Result<Derivation> {
        if p == 0 || p > self.n {
            return Err(Error::VariableOutOfRange { index: p, n: self.n });
        }
        let cp = &self.coeffs[p - 1];
        if !cp.is_zero() && !Polynomial::var(self.n, p).divides(cp) {
            return Err(Error::Precondition(format!("x{p} does not divide the coefficient of d{p}")));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|&(k, _)| k + 1 != p)
            .map(|(_, c)| c.specialize(p, Target::Zero)?.remove_variable(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Derivation { n: self.n - 1, coeffs })
    }
}

/// Writes `(c1)*d1+(c2)*d2`, skipping zero coefficients.
impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c})*d{}", k + 1))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// Outcome of Saito's criterion for a candidate basis.
#[derive(Clone, Debug)]
pub struct SaitoReport {
    pub membership: Vec<bool>,
    pub degrees: Vec<Option<usize>>,
    pub degree_sum: usize,
    pub size: usize,
    /// Determinant of the coefficient matrix.
    pub determinant: Polynomial,
    /// `det / Q(A)` when it is a constant.
    pub quotient: Option<Rational>,
    pub passed: bool,
}

/// Saito's criterion: membership, degree sum `= |A|`, and `det = c · Q(A)` with `c ≠ 0`.
pub fn saito_check(basis: &[Derivation], a: &impl HyperplaneSet) -> Result<SaitoReport> {
    let n = a.ambient();
    if basis.len() != n {
        return Err(Error::WrongCount { expected: n, got: basis.len() });
    }
    for b in basis {
        if b.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: b.n() });
        }
        if !b.is_homogeneous() {
            return Err(Error::Inhomogeneous);
        }
    }
    let membership: Vec<bool> = basis.iter().map(|b| b.is_derivation_of(a)).collect();
    let degrees: Vec<Option<usize>> = basis.iter().map(Derivation::degree).collect();
    let degree_sum = degrees.iter().map(|d| d.unwrap_or(0)).sum();
    let matrix: Vec<Vec<Polynomial>> = basis.iter().map(|b| b.coeffs.clone()).collect();
    let determinant = poly_det(&matrix, n);
    let q = a.defining_polynomial();
    let quotient = if determinant.is_zero() {
        None
    } else {
        determinant.div_exact(&q).ok().and_then(|c| c.as_constant())
    };
    let passed = membership.iter().all(|&m| m)
        && degrees.iter().all(Option::is_some)
        && degree_sum == a.size()
        && quotient.as_ref().is_some_and(|c| !c.is_zero());
    Ok(SaitoReport { membership, degrees, degree_sum, size: a.size(), determinant, quotient, passed })
}

/// `ρ_j = Σ_{k=j}^n (∏_{H_{i,j} ∈ A} α_{i,k}) ∂_k` for a southwest arrangement.
pub fn southwest_basis(a: &Arrangement) -> Result<Vec<Derivation>> {
    if !a.is_southwest() {
        return Err(Error::NotSouthwest);
    }
    let n = a.n();
    let mut out = Vec::with_capacity(n);
    for j in 1..=n {
        let rows: Vec<usize> = (0..j).filter(|&i| a.contains(i, j)).collect();
        let coeffs = (1..=n)
            .map(|k| {
                if k < j {
                    return Polynomial::zero(n);
                }
                let factors: Vec<Polynomial> = rows.iter().map(|&i| alpha(i, k, n)).collect();
                Polynomial::product(n, &factors)
            })
            .collect();
        out.push(Derivation { n, coeffs });
    }
    Ok(out)
}

fn prefix_product(j: &[usize], i: usize, k: usize, n: usize) -> Polynomial {
    // ∏_{l ∉ J, l < i} (x_l - x_k)
    let factors: Vec<Polynomial> =
        (1..i).filter(|l| !j.contains(l)).map(|l| alpha(l, k, n)).collect();
    Polynomial::product(n, &factors)
}

/// The free basis `ρ^J_1, ..., ρ^J_n` of `Der(A_J)`.
pub fn aj_basis(j: &[usize], n: usize) -> Vec<Derivation> {
    (1..=n)
        .map(|i| {
            if j.contains(&i) {
                Derivation::single(n, i, prefix_product(j, i, i, n))
            } else {
                let coeffs = (1..=n)
                    .map(|k| {
                        if k < i {
                            Polynomial::zero(n)
                        } else {
                            &prefix_product(j, i, k, n) * &Polynomial::var(n, k)
                        }
                    })
                    .collect();
                Derivation { n, coeffs }
            }
        })
        .collect()
}

/// `g_{J,i}`: `Σ_{k >= i} x_k ∏_{l ∉ J, l < i} (x_l - x_k)` for `i ∉ J`,
/// `∏_{l ∉ J, l < i} (x_l - x_i)` for `i ∈ J`.
pub fn g_generators(j: &[usize], n: usize) -> Vec<Polynomial> {
    (1..=n)
        .map(|i| {
            if j.contains(&i) {
                prefix_product(j, i, i, n)
            } else {
                let mut s = Polynomial::zero(n);
                for k in i..=n {
                    s += &(&Polynomial::var(n, k) * &prefix_product(j, i, k, n));
                }
                s
            }
        })
        .collect()
}

/// The `S`-module map `Der(S) → S` sending `∂_i ↦ images[i-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMap {
    images: Vec<Polynomial>,
    degree: usize,
}

impl CMap {
    /// All images must be homogeneous of one common degree.
    pub fn new(images: Vec<Polynomial>) -> Result<CMap> {
        let n = images.len();
        let mut degree = None;
        for c in &images {
            if c.n() != n {
                return Err(Error::DimensionMismatch { left: n, right: c.n() });
            }
            if c.is_zero() {
                continue;
            }
            let d = c.homogeneous_degree().ok_or(Error::Inhomogeneous)?;
            if degree.is_some_and(|e| e != d) {
                return Err(Error::Inhomogeneous);
            }
            degree = Some(d);
        }
        Ok(CMap { images, degree: degree.unwrap_or(0) })
    }

    /// `𝔦 : ∂_i ↦ 1`.
    pub fn iota(n: usize) -> CMap {
        CMap { images: vec![Polynomial::one(n); n], degree: 0 }
    }

    /// `𝔞 : ∂_i ↦ x_i`.
    pub fn a_map(n: usize) -> CMap {
        CMap { images: (1..=n).map(|i| Polynomial::var(n, i)).collect(), degree: 1 }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn apply(&self, theta: &Derivation) -> Result<Polynomial> {
        if theta.n() != self.n() {
            return Err(Error::DimensionMismatch { left: self.n(), right: theta.n() });
        }
        let mut out = Polynomial::zero(self.n());
        for (c, img) in theta.coeffs.iter().zip(&self.images) {
            out += &(c * img);
        }
        Ok(out)
    }
}

/// `𝔠_A = (c(θ_1), ..., c(θ_n))` for a Saito-certified basis of `Der(A)`.
pub fn st_ideal(a: &impl HyperplaneSet, c: &CMap, basis: &[Derivation]) -> Result<Ideal> {
    if !saito_check(basis, a)?.passed {
        return Err(Error::NotCertified);
    }
    let gens = basis.iter().map(|b| c.apply(b)).collect::<Result<Vec<_>>>()?;
    Ideal::new(a.ambient(), gens)
}

/// A certified basis from the southwest family or the `A_J` family.
pub fn certified_basis(a: &Arrangement) -> Result<Vec<Derivation>> {
    if a.is_southwest() {
        return southwest_basis(a);
    }
    let j: Vec<usize> = (1..=a.n()).filter(|&k| !a.contains(0, k)).collect();
    if build_aj(&j, a.n()) == *a {
        return Ok(aj_basis(&j, a.n()));
    }
    Err(Error::NoCertifiedBasis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::LinearArrangement;
    use crate::groebner::ideal_equal;
    use crate::symmetric::coinvariant_ideal;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    fn plane_x1_plus_x2() -> LinearArrangement {
        LinearArrangement::new(2, vec![p("x1+x2", 2)]).unwrap()
    }

    fn plane_basis() -> Vec<Derivation> {
        vec![
            Derivation::new(vec![p("1", 2), p("-1", 2)]).unwrap(),
            Derivation::new(vec![p("x2", 2), p("x1", 2)]).unwrap(),
        ]
    }

    #[test]
    fn applying_derivations() {
        let f = p("x1^2*x2+3*x3^3", 3);
        assert_eq!(Derivation::euler(3).apply(&f).unwrap(), f.scale(&crate::poly::rat(3)));
        let d = Derivation::new(vec![p("1", 2), p("-1", 2)]).unwrap();
        assert!(d.apply(&p("x1+x2", 2)).unwrap().is_zero());
        let r = Derivation::new(vec![p("x2", 2), p("-x1", 2)]).unwrap();
        assert_eq!(r.apply(&p("x1+x2", 2)).unwrap(), p("x2-x1", 2));
    }

    #[test]
    fn membership() {
        let braid = Arrangement::braid(3);
        for m in 0..3u32 {
            let d = Derivation::new((1..=3).map(|i| Polynomial::var(3, i).pow(m)).collect()).unwrap();
            assert!(d.is_derivation_of(&braid));
        }
        let x1 = Arrangement::new(1, [(0, 1)]).unwrap();
        assert!(!Derivation::single(1, 1, Polynomial::one(1)).is_derivation_of(&x1));
        let d = Derivation::new(vec![p("1", 2), p("-1", 2)]).unwrap();
        assert!(d.is_derivation_of(&plane_x1_plus_x2()));
    }

    #[test]
    fn saito_examples() {
        let basis: Vec<Derivation> = (0..3u32)
            .map(|m| Derivation::new((1..=3).map(|i| Polynomial::var(3, i).pow(m)).collect()).unwrap())
            .collect();
        assert!(saito_check(&basis, &Arrangement::braid(3)).unwrap().passed);
        // x2*d1 - x1*d2 sends x1 + x2 to x2 - x1, so it is not tangent to the plane
        let claimed = vec![
            Derivation::new(vec![p("1", 2), p("-1", 2)]).unwrap(),
            Derivation::new(vec![p("x2", 2), p("-x1", 2)]).unwrap(),
        ];
        let r = saito_check(&claimed, &plane_x1_plus_x2()).unwrap();
        assert_eq!(r.membership, vec![true, false]);
        assert!(!r.passed);
        let b2 = plane_basis();
        let r = saito_check(&b2, &plane_x1_plus_x2()).unwrap();
        assert!(r.passed);
        assert_eq!(r.determinant, p("x1+x2", 2));
        let mut broken = basis.clone();
        broken[1] = Derivation::zero(3);
        assert!(!saito_check(&broken, &Arrangement::braid(3)).unwrap().passed);
        assert!(saito_check(&basis[..2], &Arrangement::braid(3)).is_err());
    }

    #[test]
    fn explicit_bases() {
        let full = Arrangement::augmented_braid(2);
        let b = southwest_basis(&full).unwrap();
        assert_eq!(b[0], Derivation::euler(2));
        assert_eq!(b[1], Derivation::single(2, 2, p("x1*x2-x2^2", 2)));
        let aj = aj_basis(&[2], 2);
        assert_eq!(aj[0], Derivation::euler(2));
        assert_eq!(aj[1], Derivation::single(2, 2, p("x1-x2", 2)));
        assert_eq!(g_generators(&[2], 2), vec![p("x1+x2", 2), p("x1-x2", 2)]);
        assert_eq!(g_generators(&[], 3)[0], p("x1+x2+x3", 3));
        assert!(southwest_basis(&build_aj(&[2, 4], 5)).is_err());
    }

    #[test]
    fn restriction() {
        let r = Derivation::euler(3).restrict(3).unwrap();
        assert_eq!(r, Derivation::euler(2));
        let d = Derivation::single(2, 2, p("x1*x2-x2^2", 2));
        assert!(d.restrict(2).unwrap().is_zero());
        assert!(Derivation::single(2, 2, p("x1", 2)).restrict(2).is_err());
    }

    #[test]
    fn solomon_terao_ideals() {
        let full = Arrangement::augmented_braid(3);
        let i = st_ideal(&full, &CMap::iota(3), &southwest_basis(&full).unwrap()).unwrap();
        assert!(ideal_equal(&i, &coinvariant_ideal(3)).unwrap());
        let line = st_ideal(&plane_x1_plus_x2(), &CMap::iota(2), &plane_basis()).unwrap();
        assert!(ideal_equal(&line, &Ideal::new(2, vec![p("x1+x2", 2)]).unwrap()).unwrap());
        assert!(!line.is_artinian().unwrap());
        // any other certified basis gives the same ideal
        let euler = vec![Derivation::new(vec![p("1", 2), p("-1", 2)]).unwrap(), Derivation::euler(2)];
        let again = st_ideal(&plane_x1_plus_x2(), &CMap::iota(2), &euler).unwrap();
        assert!(ideal_equal(&line, &again).unwrap());
        let x1 = Arrangement::new(2, [(0, 1)]).unwrap();
        let u = st_ideal(&x1, &CMap::iota(2), &certified_basis(&x1).unwrap()).unwrap();
        assert!(u.is_unit().unwrap());
        assert!(CMap::new(vec![p("1", 2), p("x1", 2)]).is_err());
    }
}
