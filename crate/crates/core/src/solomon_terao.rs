//! Solomon-Terao algebras `S / 𝔠_A`: the zero / infinite / Poincaré duality
//! trichotomy, deletion-restriction sequences for southwest arrangements,
//! and the monomial bases of `S / 𝔦_A` and `S / ((S_+^{S_n}) : f_J)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arrangement::{
    box_monomials, build_aj, f_poly, staircase, staircase_monomials, Arrangement, HyperplaneSet,
};
use crate::derivation::{
    certified_basis, g_generators, saito_check, st_ideal, CMap, Derivation,
};
use crate::error::{Error, Result};
use crate::groebner::HilbertSeries;
use crate::groebner::{ideal_equal, is_regular_sequence, GroebnerBasis, Ideal};
use crate::linalg::{poly_row, rank, Echelon};
use crate::poly::{Monomial, Polynomial};
use crate::symmetric::{coinvariant_ideal, steinberg_member};

/// Which branch of the trichotomy an algebra falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Zero,
    Infinite,
    PoincareDuality,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Zero => "zero",
            Classification::Infinite => "infinite",
            Classification::PoincareDuality => "poincare-duality",
        })
    }
}

/// A Solomon-Terao algebra with the data used to classify it.
#[derive(Clone, Debug)]
pub struct STInstance {
    pub n: usize,
    pub size: usize,
    pub cmap_degree: usize,
    pub basis: Vec<Derivation>,
    /// Degrees of the basis elements.
    pub exponents: Vec<usize>,
    pub ideal: Ideal,
    /// Exact for the zero and Poincaré duality branches, truncated otherwise.
    pub hilbert: HilbertSeries,
    pub tag: Classification,
    /// `∏ (1 - q^{e_i + d}) / (1 - q)` when the tag is Poincaré duality.
    pub predicted: Option<HilbertSeries>,
}

impl STInstance {
    /// The Poincaré duality branch has the predicted, palindromic series with
    /// socle degree `Σ e_i + n (d - 1)`.
    pub fn consistent(&self) -> bool {
        match self.tag {
            Classification::Zero => self.hilbert.is_zero(),
            Classification::Infinite => !self.hilbert.complete,
            Classification::PoincareDuality => {
                let socle = (self.exponents.iter().sum::<usize>() + self.n * self.cmap_degree)
                    .checked_sub(self.n);
                self.predicted.as_ref() == Some(&self.hilbert)
                    && self.hilbert.is_palindromic()
                    && self.hilbert.top_degree() == socle
            }
        }
    }

    pub fn dimension(&self) -> Option<u64> {
        self.hilbert.dimension()
    }
}

/// Bound on the truncated Hilbert series reported for infinite algebras.
const INFINITE_CAP: usize = 6;

/// Classifies `S / 𝔠_A` from an explicit certified basis of `Der(A)`.
pub fn classify_with_basis(a: &impl HyperplaneSet, c: &CMap, basis: Vec<Derivation>) -> Result<STInstance> {
    let ideal = st_ideal(a, c, &basis)?;
    let exponents: Vec<usize> = basis.iter().map(|b| b.degree().unwrap_or(0)).collect();
    let (tag, hilbert) = if ideal.is_unit()? {
        (Classification::Zero, HilbertSeries::zero())
    } else if !ideal.is_artinian()? {
        (Classification::Infinite, ideal.hilbert_series(INFINITE_CAP)?)
    } else {
        (Classification::PoincareDuality, ideal.hilbert_series(0)?)
    };
    let predicted = (tag == Classification::PoincareDuality).then(|| {
        let degrees: Vec<usize> = exponents.iter().map(|e| e + c.degree()).collect();
        HilbertSeries::from_degrees(&degrees)
    });
    Ok(STInstance {
        n: a.ambient(),
        size: a.size(),
        cmap_degree: c.degree(),
        basis,
        exponents,
        ideal,
        hilbert,
        tag,
        predicted,
    })
}

/// Classifies `S / 𝔠_A` for a southwest or `A_J` arrangement.
pub fn classify(a: &Arrangement, c: &CMap) -> Result<STInstance> {
    classify_with_basis(a, c, certified_basis(a)?)
}

/// `𝔦_A` from the certified basis.
pub fn iota_ideal(a: &Arrangement) -> Result<Ideal> {
    st_ideal(a, &CMap::iota(a.n()), &certified_basis(a)?)
}

/// Outcome of the deletion-restriction check at `H_{0,p}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactSequenceReport {
    pub p: usize,
    pub whole: String,
    pub deletion: String,
    pub restriction: String,
    pub deletion_essential: bool,
    /// `Hilb(A) = q Hilb(A \ H) + Hilb(A^H)`.
    pub additive: bool,
    /// `𝔦_{A^H}` lifted to `S`, plus `(x_p)`, equals `𝔦_A + (x_p)`.
    pub restriction_ideal: bool,
    pub passed: bool,
}

/// Deletion and restriction at `H_{0,p}` with `p` the largest coordinate hyperplane.
pub fn exact_sequence_check(a: &Arrangement) -> Result<ExactSequenceReport> {
    if !a.is_southwest() {
        return Err(Error::NotSouthwest);
    }
    if !a.is_essential() {
        return Err(Error::NotEssential);
    }
    let n = a.n();
    let p = a
        .max_coordinate()
        .ok_or_else(|| Error::Precondition("no coordinate hyperplane".into()))?;
    let del = a.delete(0, p)?;
    let res = a.restrict_coord(p)?;
    let whole = iota_ideal(a)?;
    let h_whole = whole.hilbert_series(0)?;
    let h_del = iota_ideal(&del)?.hilbert_series(0)?;
    let xp = Polynomial::var(n, p);
    let whole_plus = Ideal::new(n, whole.generators().iter().cloned().chain([xp.clone()]).collect())?;
    let (h_res, restriction_ideal) = if n == 1 {
        // S' is the field itself, so ST(A^H) = K and 𝔦_{A^H} lifts to (x_1)
        (HilbertSeries::one(), ideal_equal(&whole_plus, &Ideal::new(1, vec![xp])?)?)
    } else {
        let r = iota_ideal(&res)?;
        let mut lifted = r
            .generators()
            .iter()
            .map(|g| g.insert_variable(p))
            .collect::<Result<Vec<_>>>()?;
        lifted.push(xp);
        (r.hilbert_series(0)?, ideal_equal(&Ideal::new(n, lifted)?, &whole_plus)?)
    };
    let additive = h_whole == h_del.shift(1).add(&h_res);
    Ok(ExactSequenceReport {
        p,
        whole: a.to_string(),
        deletion: del.to_string(),
        restriction: res.to_string(),
        deletion_essential: del.is_essential(),
        additive,
        restriction_ideal,
        passed: additive && restriction_ideal,
    })
}

/// Rank of the normal forms of `monomials` modulo a Groebner basis.
fn independent_mod(gb: &GroebnerBasis, monomials: &[Monomial]) -> Result<bool> {
    let mut e = Echelon::new();
    for m in monomials {
        let nf = gb.normal_form(&Polynomial::from_monomial(m.clone()))?;
        if !e.insert(poly_row(&nf)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Candidate monomial basis checked against a quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub candidates: usize,
    pub dimension: Option<u64>,
    pub independent: bool,
    pub passed: bool,
}

fn basis_report(ideal: &Ideal, candidates: &[Monomial]) -> Result<BasisReport> {
    let gb = ideal.gb()?;
    let dimension = gb.is_artinian().then(|| gb.standard_monomials(0).monomials.len() as u64);
    let independent = independent_mod(&gb, candidates)?;
    let passed = independent && dimension == Some(candidates.len() as u64);
    Ok(BasisReport { candidates: candidates.len(), dimension, independent, passed })
}

/// `{x^a : a_i < h_i}` against `S / 𝔦_A` for an essential southwest arrangement.
pub fn sw_monomial_basis_report(a: &Arrangement) -> Result<BasisReport> {
    if !a.is_southwest() {
        return Err(Error::NotSouthwest);
    }
    if !a.is_essential() {
        return Err(Error::NotEssential);
    }
    basis_report(&iota_ideal(a)?, &box_monomials(&a.h_sequence()))
}

pub fn verify_sw_monomial_basis(a: &Arrangement) -> Result<bool> {
    Ok(sw_monomial_basis_report(a)?.passed)
}

/// `(S_+^{S_n}) : f_J`, by elimination.
pub fn coinvariant_colon(j: &[usize], n: usize) -> Result<Ideal> {
    coinvariant_ideal(n).colon(&f_poly(j, n))
}

/// How a subset `J` was checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SsJBranch {
    UnitIdeal,
    Basis,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SsJReport {
    pub j: Vec<usize>,
    pub n: usize,
    pub branch: SsJBranch,
    /// `∏ st(J)_i`.
    pub expected_dimension: u64,
    pub basis: Option<BasisReport>,
    pub passed: bool,
}

/// `ℳ(J)` against `S / ((S_+^{S_n}) : f_J)`; the colon is the unit ideal when `1 ∈ J`.
pub fn ss_j_report(j: &[usize], n: usize) -> Result<SsJReport> {
    let colon = coinvariant_colon(j, n)?;
    let expected_dimension: u64 = staircase(j, n).iter().map(|&s| s as u64).product();
    if j.contains(&1) {
        let unit = colon.is_unit()?;
        return Ok(SsJReport {
            j: j.to_vec(),
            n,
            branch: SsJBranch::UnitIdeal,
            expected_dimension,
            basis: None,
            passed: unit && expected_dimension == 0,
        });
    }
    let basis = basis_report(&colon, &staircase_monomials(j, n))?;
    let passed = basis.passed && basis.dimension == Some(expected_dimension);
    Ok(SsJReport { j: j.to_vec(), n, branch: SsJBranch::Basis, expected_dimension, basis: Some(basis), passed })
}

pub fn verify_ss_j(j: &[usize], n: usize) -> Result<bool> {
    Ok(ss_j_report(j, n)?.passed)
}

/// Both sides of the cospan criterion for `∏_{α ∈ T} α`, `T ⊆ Φ̃⁺`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CospanReport {
    pub in_ideal: bool,
    /// Membership by normal form, as a second route.
    pub in_ideal_groebner: bool,
    pub complement_spans: bool,
    /// `in_ideal` iff the complement does not span, and both membership routes agree.
    pub holds: bool,
}

/// `T` is given as a set of hyperplanes `H_{i,j}` (an arrangement in `K^n`).
pub fn cospan_check(t: &Arrangement, coinvariants: &Ideal) -> Result<CospanReport> {
    let n = t.n();
    let product = t.alpha_product();
    let in_ideal = steinberg_member(&product);
    let in_ideal_groebner = coinvariants.contains(&product)?;
    let complement: Vec<Polynomial> = Arrangement::augmented_braid(n)
        .hyperplanes()
        .filter(|h| !t.contains(h.i, h.j))
        .map(|h| h.linear_form(n))
        .collect();
    let complement_spans = rank(complement.iter().map(poly_row)) == n;
    let holds = in_ideal == !complement_spans && in_ideal == in_ideal_groebner;
    Ok(CospanReport { in_ideal, in_ideal_groebner, complement_spans, holds })
}

/// The three statements about `𝔦_A` for `A ⊆ A_{Φ̃⁺}` with a certified basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StGeneralReport {
    pub contains_coinvariants: bool,
    pub essential: bool,
    /// Unit ideal when not essential; vacuous otherwise.
    pub nonessential_unit: bool,
    /// `𝔦_A = (S_+^{S_n}) : β_A`.
    pub colon_identity: bool,
    pub passed: bool,
}

pub fn st_general_check(a: &Arrangement) -> Result<StGeneralReport> {
    let n = a.n();
    let ideal = iota_ideal(a)?;
    let coinv = coinvariant_ideal(n);
    let contains_coinvariants = ideal.contains_ideal(&coinv)?;
    let essential = a.is_essential();
    let nonessential_unit = essential || ideal.is_unit()?;
    let colon_identity = ideal_equal(&ideal, &coinv.colon(&a.beta())?)?;
    let passed = contains_coinvariants && nonessential_unit && colon_identity;
    Ok(StGeneralReport { contains_coinvariants, essential, nonessential_unit, colon_identity, passed })
}

/// The colon-ideal description of a smaller Solomon-Terao ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColonOutcome {
    Holds,
    Fails,
    /// A hypothesis failed, so nothing is claimed.
    SkippedHypothesis(String),
}

/// For free `B ⊆ A`: if `S / 𝔠_A` is finite dimensional and `Q(A)/Q(B) ∉ 𝔠_A`,
/// then `𝔠_B = 𝔠_A : (Q(A)/Q(B))`.
pub fn derivation_colon_check(a: &Arrangement, b: &Arrangement, c: &CMap) -> Result<ColonOutcome> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch { left: a.n(), right: b.n() });
    }
    if b.hyperplanes().any(|h| !a.contains(h.i, h.j)) {
        return Err(Error::Precondition("B is not a subarrangement of A".into()));
    }
    let ca = st_ideal(a, c, &certified_basis(a)?)?;
    let cb = st_ideal(b, c, &certified_basis(b)?)?;
    if !ca.is_artinian()? {
        return Ok(ColonOutcome::SkippedHypothesis("ST(A) is not finite dimensional".into()));
    }
    let quotient = a.defining_polynomial().div_exact(&b.defining_polynomial())?;
    if ca.contains(&quotient)? {
        return Ok(ColonOutcome::SkippedHypothesis("Q(A)/Q(B) lies in the ideal".into()));
    }
    Ok(if ideal_equal(&cb, &ca.colon(&quotient)?)? { ColonOutcome::Holds } else { ColonOutcome::Fails })
}

/// `g_{J,1}, ..., g_{J,n}` is a regular sequence generating `(S_+^{S_n}) : f_J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratingSetReport {
    pub regular: bool,
    pub generates: bool,
    /// The generators agree with `𝔦_{A_J}` computed from the derivation basis.
    pub matches_iota: bool,
    pub passed: bool,
}

pub fn generating_set_check(j: &[usize], n: usize) -> Result<GeneratingSetReport> {
    if j.contains(&1) {
        return Err(Error::Precondition("1 ∈ J gives the unit ideal".into()));
    }
    let g = g_generators(j, n);
    let regular = is_regular_sequence(&g)?;
    let gen_ideal = Ideal::new(n, g)?;
    let generates = ideal_equal(&gen_ideal, &coinvariant_colon(j, n)?)?;
    let matches_iota = ideal_equal(&gen_ideal, &iota_ideal(&build_aj(j, n))?)?;
    let passed = regular && generates && matches_iota;
    Ok(GeneratingSetReport { regular, generates, matches_iota, passed })
}

/// `A_J ∪ {H_{0,k} : k ∈ J}` and its `h`-sequence against `st(J)_k + [k ∈ J]`.
pub fn augmented_aj(j: &[usize], n: usize) -> Arrangement {
    let aj = build_aj(j, n);
    let pairs = aj.edges().into_iter().chain(j.iter().map(|&k| (0, k)));
    Arrangement::new(n, pairs.collect::<Vec<_>>()).expect("valid pairs")
}

pub fn augmented_aj_h_check(j: &[usize], n: usize) -> bool {
    let st = staircase(j, n);
    let expected: Vec<usize> =
        (1..=n).map(|k| st[k - 1] + usize::from(j.contains(&k))).collect();
    augmented_aj(j, n).h_sequence() == expected
}

/// Saito's criterion for the certified basis of `A`, with the determinant
/// quotient a nonzero constant.
pub fn saito_certified(a: &Arrangement) -> Result<bool> {
    Ok(saito_check(&certified_basis(a)?, a)?.passed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{enumerate_southwest, LinearArrangement};

    fn arr(s: &str) -> Arrangement {
        s.parse().unwrap()
    }

    #[test]
    fn trichotomy_fixtures() {
        let zero = classify(&Arrangement::empty(3), &CMap::iota(3)).unwrap();
        assert_eq!(zero.tag, Classification::Zero);
        assert!(zero.consistent());

        let x = |s: &str| Polynomial::parse(s, 2).unwrap();
        let plane = LinearArrangement::new(2, vec![x("x1+x2")]).unwrap();
        let basis = vec![
            Derivation::new(vec![x("1"), x("-1")]).unwrap(),
            Derivation::new(vec![x("x2"), x("x1")]).unwrap(),
        ];
        let inf = classify_with_basis(&plane, &CMap::iota(2), basis).unwrap();
        assert_eq!(inf.tag, Classification::Infinite);
        assert!(inf.consistent());

        let running = arr("n=5; H:0-1,0-2,1-2,1-3,2-3,1-4,2-4,3-4,2-5");
        let st = classify(&running, &CMap::iota(5)).unwrap();
        assert_eq!(st.tag, Classification::PoincareDuality);
        assert_eq!(st.hilbert, HilbertSeries::finite(vec![1, 3, 4, 3, 1]));
        assert!(st.consistent());
    }

    #[test]
    fn sequences_small() {
        let r = exact_sequence_check(&Arrangement::augmented_braid(2)).unwrap();
        assert_eq!(r.p, 2);
        assert!(r.passed);
        let one = exact_sequence_check(&arr("n=1; H:0-1")).unwrap();
        assert!(one.passed && !one.deletion_essential);
        for a in enumerate_southwest(3).unwrap().into_iter().filter(|a| a.is_essential()) {
            assert!(exact_sequence_check(&a).unwrap().passed, "{a}");
            assert!(verify_sw_monomial_basis(&a).unwrap(), "{a}");
        }
    }

    #[test]
    fn colon_bases_small() {
        assert!(verify_ss_j(&[2], 2).unwrap());
        assert_eq!(ss_j_report(&[1], 2).unwrap().branch, SsJBranch::UnitIdeal);
        assert!(verify_ss_j(&[1], 2).unwrap());
        assert!(verify_ss_j(&[], 3).unwrap());
        assert!(generating_set_check(&[2], 3).unwrap().passed);
    }

    #[test]
    fn cospan_small() {
        let coinv = coinvariant_ideal(2);
        let all = Arrangement::augmented_braid(2);
        let r = cospan_check(&all, &coinv).unwrap();
        assert!(r.in_ideal && !r.complement_spans && r.holds);
        let r = cospan_check(&arr("n=2; H:0-1"), &coinv).unwrap();
        assert!(!r.in_ideal && r.complement_spans && r.holds);
        assert!(cospan_check(&Arrangement::empty(2), &coinv).unwrap().holds);
    }

    #[test]
    fn colon_lemma() {
        let a = Arrangement::augmented_braid(3);
        let b = arr("n=3; H:0-1,0-2,1-2,0-3,1-3");
        assert!(b.is_southwest());
        let out = derivation_colon_check(&a, &b, &CMap::iota(3)).unwrap();
        assert_eq!(out, ColonOutcome::Holds);
        // a nonessential B makes the quotient lie in the ideal
        let empty = Arrangement::empty(3);
        assert!(matches!(
            derivation_colon_check(&a, &empty, &CMap::iota(3)).unwrap(),
            ColonOutcome::SkippedHypothesis(_)
        ));
    }

    #[test]
    fn general_statements() {
        assert!(st_general_check(&arr("n=3; H:0-1,1-2")).unwrap().passed);
        assert!(st_general_check(&Arrangement::augmented_braid(3)).unwrap().passed);
        assert!(augmented_aj_h_check(&[2, 4], 5));
    }
}
