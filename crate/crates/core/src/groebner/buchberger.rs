//! Buchberger's algorithm with sugar pair selection and the Gebauer-Moller
//! update (product and chain criteria).

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use super::order::{MonomialOrder, OrderKey};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational};

/// Polynomial with terms in descending order for a fixed monomial order.
#[derive(Clone, Debug)]
pub(crate) struct OPoly {
    pub terms: Vec<(OrderKey, Monomial, Rational)>,
}

impl OPoly {
    pub fn from_poly(p: &Polynomial, order: MonomialOrder) -> OPoly {
        let mut terms: Vec<_> = p
            .terms()
            .map(|(m, c)| (order.key(m), m.clone(), c.clone()))
            .collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        OPoly { terms }
    }

    pub fn to_poly(&self, n: usize) -> Polynomial {
        Polynomial::from_terms(n, self.terms.iter().map(|(_, m, c)| (m.clone(), c.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].1
    }

    pub fn is_constant(&self) -> bool {
        !self.terms.is_empty() && self.lm().is_one()
    }

    fn make_monic(&mut self) {
        if let Some((_, _, c)) = self.terms.first() {
            if !c.is_one() {
                let inv = c.recip();
                for t in &mut self.terms {
                    t.2 *= &inv;
                }
            }
        }
    }
}

/// Upper bound on the number of stored terms, from `COINV_GB_TERM_LIMIT`.
fn term_limit() -> Option<usize> {
    static LIMIT: OnceLock<Option<usize>> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var("COINV_GB_TERM_LIMIT").ok().and_then(|v| v.trim().parse().ok())
    })
}

/// Full reduction of `f` by the monic polynomials in `basis`.
pub(crate) fn reduce(f: &OPoly, basis: &[&OPoly], order: MonomialOrder) -> OPoly {
    let mut work: BTreeMap<OrderKey, (Monomial, Rational)> = f
        .terms
        .iter()
        .map(|(k, m, c)| (k.clone(), (m.clone(), c.clone())))
        .collect();
    let mut rem = Vec::new();
    while let Some((key, (m, c))) = work.pop_last() {
        let divisor = basis.iter().find(|g| g.lm().divides(&m));
        match divisor {
            None => rem.push((key, m, c)),
            Some(g) => {
                let q = g.lm().quotient_of(&m).unwrap();
                for (_, gm, gc) in &g.terms[1..] {
                    let tm = gm.mul(&q);
                    let tk = order.key(&tm);
                    let delta = &c * gc;
                    match work.entry(tk) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert((tm, -delta));
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            e.get_mut().1 -= delta;
                            if e.get().1.is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
            }
        }
    }
    OPoly { terms: rem }
}

fn spoly(f: &OPoly, g: &OPoly, order: MonomialOrder) -> OPoly {
    let l = f.lm().lcm(g.lm());
    let qf = f.lm().quotient_of(&l).unwrap();
    let qg = g.lm().quotient_of(&l).unwrap();
    let mut acc: BTreeMap<OrderKey, (Monomial, Rational)> = BTreeMap::new();
    let mut push = |m: Monomial, c: Rational| {
        let k = order.key(&m);
        let e = acc.entry(k).or_insert_with(|| (m, Rational::zero()));
        e.1 += c;
    };
    for (_, m, c) in &f.terms[1..] {
        push(m.mul(&qf), c.clone());
    }
    for (_, m, c) in &g.terms[1..] {
        push(m.mul(&qg), -c.clone());
    }
    let mut terms: Vec<_> = acc
        .into_iter()
        .filter(|(_, (_, c))| !c.is_zero())
        .map(|(k, (m, c))| (k, m, c))
        .collect();
    terms.reverse();
    OPoly { terms }
}

struct Entry {
    poly: OPoly,
    sugar: usize,
    redundant: bool,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: usize,
}

fn pair(g: &[Entry], i: usize, j: usize) -> Pair {
    let (a, b) = (&g[i], &g[j]);
    let lcm = a.poly.lm().lcm(b.poly.lm());
    let d = lcm.degree();
    let sugar = (a.sugar + d - a.poly.lm().degree()).max(b.sugar + d - b.poly.lm().degree());
    Pair { i, j, lcm, sugar }
}

fn update(g: &mut [Entry], pairs: &mut Vec<Pair>, h: usize) {
    let hm = g[h].poly.lm().clone();
    let mut c: Vec<Pair> = (0..h).filter(|&k| !g[k].redundant).map(|k| pair(g, k, h)).collect();
    let mut d: Vec<Pair> = Vec::new();
    while let Some(p) = c.pop() {
        let coprime = g[p.i].poly.lm().is_coprime(&hm);
        let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            d.push(p);
        }
    }
    let e = d.into_iter().filter(|p| !g[p.i].poly.lm().is_coprime(&hm));
    pairs.retain(|p| {
        !(hm.divides(&p.lcm)
            && g[p.i].poly.lm().lcm(&hm) != p.lcm
            && g[p.j].poly.lm().lcm(&hm) != p.lcm)
    });
    pairs.extend(e);
    for k in 0..h {
        if !g[k].redundant && hm.divides(g[k].poly.lm()) {
            g[k].redundant = true;
        }
    }
}

/// Reduced, monic Groebner basis sorted by descending leading monomial.
/// Returns `[1]` for the unit ideal and `[]` for the zero ideal.
pub(crate) fn groebner(gens: &[Polynomial], order: MonomialOrder) -> Result<Vec<OPoly>> {
    let limit = term_limit();
    let mut g: Vec<Entry> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut stored_terms = 0usize;

    let mut input: Vec<OPoly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| OPoly::from_poly(p, order))
        .collect();
    input.sort_by(|a, b| a.terms[0].0.cmp(&b.terms[0].0));

    let unit = || {
        let n = gens[0].n();
        Ok(vec![OPoly::from_poly(&Polynomial::one(n), order)])
    };

    let mut add = |g: &mut Vec<Entry>, pairs: &mut Vec<Pair>, mut h: OPoly, sugar: usize| -> Result<bool> {
        h.make_monic();
        if h.is_constant() {
            return Ok(true);
        }
        stored_terms += h.terms.len();
        if let Some(l) = limit {
            if stored_terms > l {
                return Err(Error::ResourceLimit(l));
            }
        }
        g.push(Entry { poly: h, sugar, redundant: false });
        let idx = g.len() - 1;
        update(g, pairs, idx);
        Ok(false)
    };

    for f in input {
        let basis: Vec<&OPoly> = g.iter().filter(|e| !e.redundant).map(|e| &e.poly).collect();
        let h = reduce(&f, &basis, order);
        if h.is_zero() {
            continue;
        }
        let sugar = f.terms.iter().map(|t| t.1.degree()).max().unwrap_or(0);
        if add(&mut g, &mut pairs, h, sugar)? {
            return unit();
        }
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.sugar.cmp(&q.sugar).then_with(|| order.cmp(&p.lcm, &q.lcm))
            })
            .unwrap();
        let p = pairs.swap_remove(best);
        let s = spoly(&g[p.i].poly, &g[p.j].poly, order);
        if s.is_zero() {
            continue;
        }
        let basis: Vec<&OPoly> = g.iter().filter(|e| !e.redundant).map(|e| &e.poly).collect();
        let h = reduce(&s, &basis, order);
        if h.is_zero() {
            continue;
        }
        if add(&mut g, &mut pairs, h, p.sugar)? {
            return unit();
        }
    }

    // interreduce the minimal basis
    let minimal: Vec<OPoly> = g.into_iter().filter(|e| !e.redundant).map(|e| e.poly).collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (k, f) in minimal.iter().enumerate() {
        let others: Vec<&OPoly> =
            minimal.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, p)| p).collect();
        let head = OPoly { terms: vec![f.terms[0].clone()] };
        let tail = OPoly { terms: f.terms[1..].to_vec() };
        let mut r = reduce(&tail, &others, order);
        r.terms.insert(0, head.terms[0].clone());
        r.make_monic();
        reduced.push(r);
    }
    reduced.sort_by(|a, b| b.terms[0].0.cmp(&a.terms[0].0));
    Ok(reduced)
}
