//! Instance enumeration for each suite.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{enumerate_southwest, Fault, RunConfig, Task};
use crate::arrangement::{build_aj, staircase, staircase_monomials, subsets, Arrangement, CharPoly, HyperplaneSet};
use crate::derivation::{aj_basis, g_generators, saito_check, southwest_basis};
use crate::error::{Error, Result};
use crate::groebner::{is_regular_sequence, Ideal};
use crate::solomon_terao::{
    coinvariant_colon, cospan_check, exact_sequence_check, ss_j_report, st_general_check,
    sw_monomial_basis_report, SsJBranch,
};
use crate::superspace::{fubini, solomon_generators, sr_basis_report_with};
use crate::symmetric::coinvariant_ideal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Staircase,
    HSequence,
    CharPolyAj,
    SwMonomialBasis,
    ExactSequence,
    SsJ,
    SaganSwanson,
    GeneratingSet,
    Cospan,
    SaitoSouthwest,
    SaitoAj,
    StGeneral,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Staircase,
        Suite::HSequence,
        Suite::CharPolyAj,
        Suite::SwMonomialBasis,
        Suite::ExactSequence,
        Suite::SsJ,
        Suite::SaganSwanson,
        Suite::GeneratingSet,
        Suite::Cospan,
        Suite::SaitoSouthwest,
        Suite::SaitoAj,
        Suite::StGeneral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Staircase => "staircase",
            Suite::HSequence => "h-sequence",
            Suite::CharPolyAj => "char-poly-AJ",
            Suite::SwMonomialBasis => "sw-monomial-basis",
            Suite::ExactSequence => "exact-sequence",
            Suite::SsJ => "ss-J",
            Suite::SaganSwanson => "sagan-swanson",
            Suite::GeneratingSet => "generating-set",
            Suite::Cospan => "cospan",
            Suite::SaitoSouthwest => "saito-southwest",
            Suite::SaitoAj => "saito-AJ",
            Suite::StGeneral => "st-general",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Staircase => "|M(J)| = prod st(J)_i and the total is the Fubini number",
            Suite::HSequence => "southwest basis degrees equal the h-sequence",
            Suite::CharPolyAj => "chi(A_J) = prod (t - st(J)_i), with a finite field count",
            Suite::SwMonomialBasis => "box monomials under h(A) are a basis of S/i_A",
            Suite::ExactSequence => "deletion-restriction additivity and the restriction ideal",
            Suite::SsJ => "M(J) is a basis of S/((S_+^Sn) : f_J)",
            Suite::SaganSwanson => "superspace Artin monomials are a basis of SR",
            Suite::GeneratingSet => "g_J is a regular sequence generating the colon ideal",
            Suite::Cospan => "prod T in the coinvariant ideal iff the complement does not span",
            Suite::SaitoSouthwest => "Saito's criterion for every southwest arrangement",
            Suite::SaitoAj => "Saito's criterion for every A_J",
            Suite::StGeneral => "i_A contains the coinvariants and equals (S_+^Sn) : beta_A",
        }
    }

    pub fn default_n(self) -> usize {
        match self {
            Suite::Staircase | Suite::HSequence | Suite::CharPolyAj => 5,
            _ => 4,
        }
    }

    pub(crate) fn tasks(self, cfg: &RunConfig) -> Result<Vec<Task>> {
        let n = cfg.max_n.unwrap_or(self.default_n());
        let mut out = Vec::new();
        for k in 1..=n {
            match self {
                Suite::Staircase => staircase_tasks(k, &mut out),
                Suite::HSequence => h_sequence_tasks(k, &mut out)?,
                Suite::CharPolyAj => char_poly_tasks(k, cfg, &mut out)?,
                Suite::SwMonomialBasis => sw_basis_tasks(k, &mut out)?,
                Suite::ExactSequence => exact_sequence_tasks(k, &mut out)?,
                Suite::SsJ => ss_j_tasks(k, cfg, &mut out),
                Suite::SaganSwanson => sagan_swanson_tasks(k, cfg, &mut out)?,
                Suite::GeneratingSet => generating_set_tasks(k, cfg, &mut out),
                Suite::Cospan => cospan_tasks(k, cfg, &mut out)?,
                Suite::SaitoSouthwest => saito_southwest_tasks(k, &mut out)?,
                Suite::SaitoAj => saito_aj_tasks(k, &mut out),
                Suite::StGeneral => st_general_tasks(k, &mut out)?,
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

fn set_label(j: &[usize]) -> String {
    let items: Vec<String> = j.iter().map(|v| v.to_string()).collect();
    format!("J={{{}}}", items.join(","))
}

fn flag(ok: bool, yes: &str, no: &str) -> String {
    (if ok { yes } else { no }).to_string()
}

fn task(check: &'static str, n: usize, instance: String, run: impl Fn() -> Result<(String, String)> + Send + Sync + 'static) -> Task {
    Task { check, n, instance, run: Box::new(run) }
}

fn coverage(check: &'static str, n: usize, what: &str, expected: u64, actual: usize) -> Task {
    task(check, n, format!("coverage: {what}"), move || Ok((expected.to_string(), actual.to_string())))
}

/// Southwest subsets of the augmented braid arrangement, counted by testing
/// the southwest predicate on every subset.
pub fn brute_force_southwest_count(n: usize, essential_only: bool) -> u64 {
    let all: Vec<(usize, usize)> = Arrangement::augmented_braid(n).edges();
    let mut count = 0;
    for mask in 0u64..(1 << all.len()) {
        let pairs = all.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &p)| p);
        let a = Arrangement::new(n, pairs.collect::<Vec<_>>()).unwrap();
        if a.is_southwest() && (!essential_only || a.is_essential()) {
            count += 1;
        }
    }
    count
}

fn southwest_with_coverage(check: &'static str, k: usize, essential: bool, out: &mut Vec<Task>) -> Result<Vec<Arrangement>> {
    let list = enumerate_southwest(k, essential)?;
    let what = if essential { "essential southwest arrangements" } else { "southwest arrangements" };
    out.push(coverage(check, k, what, brute_force_southwest_count(k, essential), list.len()));
    Ok(list)
}

fn staircase_tasks(k: usize, out: &mut Vec<Task>) {
    let js = subsets(k);
    out.push(coverage("staircase", k, "subsets J", 1 << k, js.len()));
    let total: usize = js.iter().map(|j| staircase_monomials(j, k).len()).sum();
    out.push(task("staircase", k, "sum over J".into(), move || Ok((fubini(k).to_string(), total.to_string()))));
    for j in js {
        out.push(task("staircase", k, set_label(&j), move || {
            let product: usize = staircase(&j, k).iter().product();
            let st = staircase(&j, k);
            let ms = staircase_monomials(&j, k);
            let inside = ms.iter().all(|m| (1..=k).all(|i| (m.exponent(i) as usize) < st[i - 1]));
            let distinct = ms.windows(2).all(|w| w[0] != w[1]);
            let actual = if inside && distinct { ms.len().to_string() } else { "malformed".into() };
            Ok((product.to_string(), actual))
        }));
    }
}

fn tuple(v: &[usize]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", s.join(","))
}

fn h_sequence_tasks(k: usize, out: &mut Vec<Task>) -> Result<()> {
    for a in southwest_with_coverage("h-sequence", k, false, out)? {
        out.push(task("h-sequence", k, a.to_string(), move || {
            let degrees: Vec<usize> =
                southwest_basis(&a)?.iter().map(|b| b.degree().unwrap_or(0)).collect();
            Ok((tuple(&a.h_sequence()), tuple(&degrees)))
        }));
    }
    Ok(())
}

fn char_poly_tasks(k: usize, cfg: &RunConfig, out: &mut Vec<Task>) -> Result<()> {
    let js = subsets(k);
    out.push(coverage("char-poly-AJ", k, "subsets J", 1 << k, js.len()));
    let prime = cfg.prime;
    for j in js {
        out.push(task("char-poly-AJ", k, set_label(&j), move || {
            let a = build_aj(&j, k);
            let roots: Vec<i64> = staircase(&j, k).iter().map(|&s| s as i64).collect();
            let predicted = CharPoly::from_roots(&roots);
            let p = prime.unwrap_or_else(|| a.check_prime());
            let chi = a.characteristic_polynomial()?;
            let expected = format!("{predicted}; #F_{p}={}", predicted.eval(p as i128));
            let actual = format!("{chi}; #F_{p}={}", a.count_points_mod(p));
            Ok((expected, actual))
        }));
    }
    Ok(())
}

fn sw_basis_tasks(k: usize, out: &mut Vec<Task>) -> Result<()> {
    for a in southwest_with_coverage("sw-monomial-basis", k, true, out)? {
        out.push(task("sw-monomial-basis", k, a.to_string(), move || {
            let r = sw_monomial_basis_report(&a)?;
            let expected: usize = a.h_sequence().iter().product();
            let dim = r.dimension.map_or("infinite".into(), |d| d.to_string());
            Ok((
                format!("dim={expected}; independent"),
                format!("dim={dim}; {}", flag(r.independent, "independent", "dependent")),
            ))
        }));
    }
    Ok(())
}

fn exact_sequence_tasks(k: usize, out: &mut Vec<Task>) -> Result<()> {
    for a in southwest_with_coverage("exact-sequence", k, true, out)? {
        out.push(task("exact-sequence", k, a.to_string(), move || {
            let r = exact_sequence_check(&a)?;
            Ok((
                "additive; restriction-ideal".into(),
                format!(
                    "{}; {}",
                    flag(r.additive, "additive", "not-additive"),
                    flag(r.restriction_ideal, "restriction-ideal", "restriction-ideal-differs")
                ),
            ))
        }));
    }
    Ok(())
}

/// Subsets checked at `n`: all of them up to `n = 4` or with `--exhaustive`;
/// otherwise `{2,4}`, the terminal sets `{r, ..., n}`, and random extras when seeded.
fn ss_j_instances(k: usize, cfg: &RunConfig) -> Vec<Vec<usize>> {
    if k <= 4 || cfg.exhaustive {
        return subsets(k);
    }
    let mut js: Vec<Vec<usize>> = vec![vec![2, 4]];
    for r in 1..=k + 1 {
        js.push((r..=k).collect());
    }
    if let Some(seed) = cfg.sample {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..4 {
            let mask: u64 = rng.gen_range(0..(1u64 << k));
            js.push((1..=k).filter(|i| mask & (1 << (i - 1)) != 0).collect());
        }
    }
    js.sort();
    js.dedup();
    js
}

fn ss_j_tasks(k: usize, cfg: &RunConfig, out: &mut Vec<Task>) {
    let js = ss_j_instances(k, cfg);
    if k <= 4 || cfg.exhaustive {
        out.push(coverage("ss-J", k, "subsets J", 1 << k, js.len()));
    }
    for j in js {
        out.push(task("ss-J", k, set_label(&j), move || {
            let r = ss_j_report(&j, k)?;
            let expected = if j.contains(&1) {
                "unit".to_string()
            } else {
                format!("dim={}; independent", r.expected_dimension)
            };
            let actual = match (r.branch, &r.basis) {
                (SsJBranch::UnitIdeal, _) => flag(r.passed, "unit", "not-unit"),
                (SsJBranch::Basis, Some(b)) => format!(
                    "dim={}; {}",
                    b.dimension.map_or("infinite".into(), |d| d.to_string()),
                    flag(b.independent && b.candidates as u64 == r.expected_dimension, "independent", "dependent")
                ),
                (SsJBranch::Basis, None) => "missing".into(),
            };
            Ok((expected, actual))
        }));
    }
}

fn sagan_swanson_tasks(k: usize, cfg: &RunConfig, out: &mut Vec<Task>) -> Result<()> {
    let limit = if cfg.exhaustive { 5 } else { 4 };
    if k > limit {
        return Err(Error::TooLarge(format!("sagan-swanson at n = {k}; pass --exhaustive for n = 5")));
    }
    let fault = cfg.fault;
    out.push(task("sagan-swanson", k, "M".into(), move || {
        let mut gens = solomon_generators(k);
        if fault == Some(Fault::DropGenerator) {
            gens.pop();
        }
        let r = sr_basis_report_with(&gens, k)?;
        let expected = format!("|M|={0}; dim SR={0}; independent; complete", fubini(k));
        let actual = format!(
            "|M|={}; dim SR={}; {}; {}",
            r.artin_count,
            r.sr_dimension,
            flag(r.dependent_bidegrees.is_empty(), "independent", "dependent"),
            flag(r.complete, "complete", "truncated")
        );
        Ok((expected, actual))
    }));
    Ok(())
}

fn generating_set_tasks(k: usize, cfg: &RunConfig, out: &mut Vec<Task>) {
    let js: Vec<Vec<usize>> = subsets(k).into_iter().filter(|j| !j.contains(&1)).collect();
    out.push(coverage("generating-set", k, "subsets J without 1", 1 << (k - 1), js.len()));
    let (fault, order) = (cfg.fault, cfg.order);
    for j in js {
        out.push(task("generating-set", k, set_label(&j), move || {
            let mut g = g_generators(&j, k);
            if fault == Some(Fault::DropGenerator) {
                g.pop();
            }
            let regular = g.len() == k && is_regular_sequence(&g)?;
            let generated = Ideal::new(k, g)?;
            let equal = generated.equals_under(&coinvariant_colon(&j, k)?, order)?;
            Ok((
                "regular; generates".into(),
                format!("{}; {}", flag(regular, "regular", "not-regular"), flag(equal, "generates", "differs")),
            ))
        }));
    }
}

fn cospan_tasks(k: usize, cfg: &RunConfig, out: &mut Vec<Task>) -> Result<()> {
    if k > 4 && !cfg.exhaustive {
        return Err(Error::TooLarge(format!("cospan at n = {k}; pass --exhaustive")));
    }
    let all = Arrangement::augmented_braid(k).edges();
    let count = 1usize << all.len();
    out.push(coverage("cospan", k, "subsets T", 1 << (k * (k + 1) / 2), count));
    let coinv = Arc::new(coinvariant_ideal(k));
    coinv.gb()?;
    for mask in 0..count {
        let pairs: Vec<(usize, usize)> =
            all.iter().enumerate().filter(|(b, _)| mask & (1 << b) != 0).map(|(_, &p)| p).collect();
        let t = Arrangement::new(k, pairs)?;
        let coinv = Arc::clone(&coinv);
        let label = format!("T={{{}}}", t.to_string().split_once("H:").map_or("", |x| x.1));
        out.push(task("cospan", k, label, move || {
            let r = cospan_check(&t, &coinv)?;
            let expected = flag(!r.complement_spans, "member", "non-member");
            let actual = if r.in_ideal != r.in_ideal_groebner {
                "membership routes disagree".into()
            } else {
                flag(r.in_ideal, "member", "non-member")
            };
            Ok((expected, actual))
        }));
    }
    Ok(())
}

fn saito_summary(r: &crate::derivation::SaitoReport) -> String {
    let constant = match &r.quotient {
        Some(c) if !num_traits::Zero::is_zero(c) => "nonzero-constant",
        _ => "not-constant",
    };
    format!(
        "members={}; degree-sum={}; det/Q={constant}",
        flag(r.membership.iter().all(|&m| m), "all", "missing"),
        r.degree_sum
    )
}

fn saito_expected(size: usize) -> String {
    format!("members=all; degree-sum={size}; det/Q=nonzero-constant")
}

fn saito_southwest_tasks(k: usize, out: &mut Vec<Task>) -> Result<()> {
    for a in southwest_with_coverage("saito-southwest", k, false, out)? {
        out.push(task("saito-southwest", k, a.to_string(), move || {
            let r = saito_check(&southwest_basis(&a)?, &a)?;
            Ok((saito_expected(a.size()), saito_summary(&r)))
        }));
    }
    Ok(())
}

fn saito_aj_tasks(k: usize, out: &mut Vec<Task>) {
    let js = subsets(k);
    out.push(coverage("saito-AJ", k, "subsets J", 1 << k, js.len()));
    for j in js {
        out.push(task("saito-AJ", k, set_label(&j), move || {
            let a = build_aj(&j, k);
            let r = saito_check(&aj_basis(&j, k), &a)?;
            Ok((saito_expected(a.size()), saito_summary(&r)))
        }));
    }
}

fn st_general_tasks(k: usize, out: &mut Vec<Task>) -> Result<()> {
    for a in southwest_with_coverage("st-general", k, false, out)? {
        out.push(task("st-general", k, a.to_string(), move || {
            let r = st_general_check(&a)?;
            Ok((
                "contains-coinvariants; nonessential-unit; colon-identity".into(),
                format!(
                    "{}; {}; {}",
                    flag(r.contains_coinvariants, "contains-coinvariants", "misses-coinvariants"),
                    flag(r.nonessential_unit, "nonessential-unit", "nonessential-proper"),
                    flag(r.colon_identity, "colon-identity", "colon-differs")
                ),
            ))
        }));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
    }

    #[test]
    fn southwest_counts() {
        assert_eq!(brute_force_southwest_count(1, false), 2);
        assert_eq!(brute_force_southwest_count(2, false), 6);
        assert_eq!(enumerate_southwest(3, false).unwrap().len() as u64, brute_force_southwest_count(3, false));
    }

    #[test]
    fn ss_j_sampling() {
        let cfg = RunConfig::with_n(5);
        let js = ss_j_instances(5, &cfg);
        assert!(js.contains(&vec![2, 4]) && js.contains(&vec![]) && js.contains(&vec![3, 4, 5]));
        let seeded = RunConfig { sample: Some(7), ..cfg };
        assert_eq!(ss_j_instances(5, &seeded), ss_j_instances(5, &seeded));
    }
}
