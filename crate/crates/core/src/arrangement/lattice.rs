//! Intersection lattices of graphic arrangements as lattices of set partitions.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

/// A flat, stored as a set partition of `{0, ..., n}`.
///
/// `labels[v]` is the smallest vertex in the block of `v`. The block of `0`
/// collects coordinates forced to vanish; other blocks are equal coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    labels: Vec<u8>,
}

impl Flat {
    pub fn discrete(n: usize) -> Flat {
        Flat { labels: (0..=n as u8).collect() }
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().enumerate().filter(|&(v, &l)| v == l as usize).count()
    }

    /// Dimension of the subspace: number of blocks minus one.
    pub fn dim(&self) -> usize {
        self.block_count() - 1
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut map: BTreeMap<u8, Vec<usize>> = BTreeMap::new();
        for (v, &l) in self.labels.iter().enumerate() {
            map.entry(l).or_default().push(v);
        }
        map.into_values().collect()
    }

    /// Merges the blocks of `a` and `b`.
    pub fn merge(&self, a: usize, b: usize) -> Flat {
        let (la, lb) = (self.labels[a], self.labels[b]);
        let (keep, drop) = (la.min(lb), la.max(lb));
        Flat { labels: self.labels.iter().map(|&l| if l == drop { keep } else { l }).collect() }
    }

    /// `true` if every block of `self` lies in a block of `other`, i.e. the
    /// subspace of `self` contains that of `other`.
    pub fn refines(&self, other: &Flat) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(v, &l)| other.labels[v] == other.labels[l as usize])
    }
}

impl fmt::Display for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{{{}}}", blocks.join("|"))
    }
}

/// The flats of an arrangement with their Möbius values `μ(V, X)`.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    pub n: usize,
    /// Flats sorted by codimension, then by labels.
    pub flats: Vec<Flat>,
    pub mobius: Vec<i64>,
}

/// Integer polynomial in `t`, coefficients in ascending powers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPoly(pub Vec<i64>);

impl CharPoly {
    /// `∏ (t - r_i)`.
    pub fn from_roots(roots: &[i64]) -> CharPoly {
        let mut c = vec![1i64];
        for &r in roots {
            let mut next = vec![0i64; c.len() + 1];
            for (k, &a) in c.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= r * a;
            }
            c = next;
        }
        CharPoly(c)
    }

    pub fn eval(&self, t: i128) -> i128 {
        self.0.iter().rev().fold(0i128, |acc, &a| acc * t + a as i128)
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, &a) in self.0.iter().enumerate().rev() {
            if a == 0 {
                continue;
            }
            let sign = if a < 0 { "-" } else if out.is_empty() { "" } else { "+" };
            let mag = a.unsigned_abs();
            let body = match (k, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "t".into(),
                (1, m) => format!("{m}*t"),
                (k, 1) => format!("t^{k}"),
                (k, m) => format!("{m}*t^{k}"),
            };
            out.push_str(sign);
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl IntersectionLattice {
    /// Flats of the graphic arrangement with the given edges on `{0, ..., n}`.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> IntersectionLattice {
        let bottom = Flat::discrete(n);
        let mut seen: BTreeSet<Flat> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(bottom.clone());
        queue.push_back(bottom);
        while let Some(x) = queue.pop_front() {
            for &(a, b) in edges {
                if x.same_block(a, b) {
                    continue;
                }
                let y = x.merge(a, b);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut flats: Vec<Flat> = seen.into_iter().collect();
        flats.sort_by(|a, b| b.block_count().cmp(&a.block_count()).then_with(|| a.cmp(b)));
        let mut mobius = vec![0i64; flats.len()];
        for k in 0..flats.len() {
            if k == 0 {
                mobius[k] = 1;
                continue;
            }
            let s: i64 = (0..k)
                .filter(|&j| flats[j].refines(&flats[k]))
                .map(|j| mobius[j])
                .sum();
            mobius[k] = -s;
        }
        IntersectionLattice { n, flats, mobius }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// `χ(t) = Σ_X μ(X) t^{dim X}`.
    pub fn characteristic_polynomial(&self) -> CharPoly {
        let mut c = vec![0i64; self.n + 1];
        for (x, &m) in self.flats.iter().zip(&self.mobius) {
            c[x.dim()] += m;
        }
        while c.len() > 1 && c.last() == Some(&0) {
            c.pop();
        }
        CharPoly(c)
    }
}

/// Points of `F_p^n` off the graphic arrangement, counted by equality pattern:
/// each point determines the set partition of `{0, ..., n}` by equal values
/// (with `x_0 = 0`), which must have no edge inside a block; a partition with
/// `b` blocks is realized by `(p-1)(p-2)...(p-b+1)` points.
pub fn count_points_by_pattern(n: usize, edges: &[(usize, usize)], p: u64) -> u128 {
    let mut adj = vec![0u64; n + 1];
    for &(a, b) in edges {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    // blocks as vertex bitmasks, filled vertex by vertex
    fn rec(v: usize, n: usize, adj: &[u64], blocks: &mut Vec<u64>, p: u64) -> u128 {
        if v > n {
            let b = blocks.len() as u64;
            if b > p {
                return 0;
            }
            return (1..b).map(|k| (p - k) as u128).product();
        }
        let mut total = 0;
        for k in 0..blocks.len() {
            if blocks[k] & adj[v] == 0 {
                blocks[k] |= 1 << v;
                total += rec(v + 1, n, adj, blocks, p);
                blocks[k] &= !(1 << v);
            }
        }
        blocks.push(1 << v);
        total += rec(v + 1, n, adj, blocks, p);
        blocks.pop();
        total
    }
    rec(1, n, &adj, &mut vec![1], p)
}

/// Literal enumeration of `F_p^n`; only for tiny `p^n`.
pub fn count_points_brute_force(n: usize, edges: &[(usize, usize)], p: u64) -> u128 {
    let mut x = vec![0u64; n + 1];
    let mut count = 0u128;
    let total = (p as u128).pow(n as u32);
    for idx in 0..total {
        let mut r = idx;
        for v in 1..=n {
            x[v] = (r % p as u128) as u64;
            r /= p as u128;
        }
        if edges.iter().all(|&(a, b)| x[a] != x[b]) {
            count += 1;
        }
    }
    count
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Smallest prime strictly greater than `bound`.
pub fn next_prime_above(bound: u64) -> u64 {
    (bound + 1..).find(|&p| is_prime(p)).unwrap()
}
