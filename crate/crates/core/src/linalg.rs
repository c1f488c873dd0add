//! Exact linear algebra over the rationals: incremental row echelon form on
//! sparse rows, and determinants of small polynomial matrices.

use num_traits::{One, Zero};

use crate::poly::{Polynomial, Rational};

/// A sparse row: `(column, value)` pairs sorted by column, no zero values.
pub type SparseRow<K> = Vec<(K, Rational)>;

/// Row echelon form built one row at a time.
///
/// Each stored row is scaled so its first entry is `1`, and no two stored rows
/// share a first column. Only leading entries are cleared on insertion, which
/// is enough for rank and membership questions.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: std::collections::BTreeMap<K, SparseRow<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Default::default() }
    }
}

fn axpy<K: Ord + Clone>(row: &SparseRow<K>, c: &Rational, piv: &SparseRow<K>) -> SparseRow<K> {
    // row - c * piv
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < piv.len() {
        let ord = match (row.get(a), piv.get(b)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => std::cmp::Ordering::Less,
            _ => std::cmp::Ordering::Greater,
        };
        match ord {
            std::cmp::Ordering::Less => {
                out.push(row[a].clone());
                a += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((piv[b].0.clone(), -(c * &piv[b].1)));
                b += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = &row[a].1 - c * &piv[b].1;
                if !v.is_zero() {
                    out.push((row[a].0.clone(), v));
                }
                a += 1;
                b += 1;
            }
        }
    }
    out
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored pivots until its leading column is new.
    fn reduce_leading(&self, mut row: SparseRow<K>) -> SparseRow<K> {
        while let Some((col, lead)) = row.first() {
            match self.rows.get(col) {
                Some(piv) => {
                    let c = lead.clone();
                    row = axpy(&row, &c, piv);
                }
                None => break,
            }
        }
        row
    }

    /// Inserts a row; returns `true` when it increased the rank.
    pub fn insert(&mut self, row: SparseRow<K>) -> bool {
        let row = self.reduce_leading(row);
        let Some((col, lead)) = row.first() else {
            return false;
        };
        let inv = lead.recip();
        let col = col.clone();
        let row = if inv.is_one() {
            row
        } else {
            row.into_iter().map(|(k, v)| (k, v * &inv)).collect()
        };
        self.rows.insert(col, row);
        true
    }

    /// `true` if the row lies in the span of the inserted rows.
    pub fn contains(&self, row: SparseRow<K>) -> bool {
        self.reduce_leading(row).is_empty()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Stored rows by ascending leading column.
    pub fn rows(&self) -> impl Iterator<Item = &SparseRow<K>> {
        self.rows.values()
    }
}

/// Rank of a list of sparse rows.
pub fn rank<K: Ord + Clone>(rows: impl IntoIterator<Item = SparseRow<K>>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Sparse row of a polynomial keyed by monomial.
pub fn poly_row(p: &Polynomial) -> SparseRow<crate::poly::Monomial> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// Determinant of a square matrix of polynomials by expansion along columns,
/// memoised over the set of rows already used (exact, fine for n <= 8).
pub fn poly_det(m: &[Vec<Polynomial>], n_vars: usize) -> Polynomial {
    let k = m.len();
    assert!(m.iter().all(|r| r.len() == k), "matrix is not square");
    if k == 0 {
        return Polynomial::one(n_vars);
    }
    // dp[mask] = determinant of the minor on rows `mask` and the first |mask| columns
    let mut dp: Vec<Option<Polynomial>> = vec![None; 1 << k];
    dp[0] = Some(Polynomial::one(n_vars));
    for mask in 1usize..(1 << k) {
        let col = mask.count_ones() as usize - 1;
        let mut acc = Polynomial::zero(n_vars);
        for r in 0..k {
            if mask & (1 << r) == 0 {
                continue;
            }
            let rest = mask & !(1 << r);
            let entry = &m[r][col];
            if !entry.is_zero() {
                if let Some(sub) = &dp[rest] {
                    if !sub.is_zero() {
                        // sign of moving row r past the rows below it that remain in `mask`
                        let below = (rest >> r).count_ones() as usize;
                        let term = entry * sub;
                        if below % 2 == 0 {
                            acc += &term;
                        } else {
                            acc -= &term;
                        }
                    }
                }
            }
        }
        dp[mask] = Some(acc);
    }
    dp[(1 << k) - 1].take().unwrap()
}

/// Determinant of a rational matrix by Gaussian elimination.
pub fn rational_det(mut m: Vec<Vec<Rational>>) -> Rational {
    let k = m.len();
    let mut det = Rational::one();
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for r in (c + 1)..k {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            for cc in c..k {
                let v = &f * &m[c][cc];
                m[r][cc] -= v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn echelon_rank() {
        let rows: Vec<SparseRow<usize>> = vec![
            vec![(0, rat(1)), (1, rat(2))],
            vec![(0, rat(2)), (1, rat(4))],
            vec![(1, rat(1)), (2, rat(1))],
        ];
        assert_eq!(rank(rows), 2);
        let mut e = Echelon::new();
        assert!(e.insert(vec![(3usize, rat(5))]));
        assert!(e.contains(vec![(3, rat(-1))]));
        assert!(!e.contains(vec![(2, rat(1))]));
    }

    #[test]
    fn polynomial_determinants_match_leibniz() {
        let n = 3;
        let x = |i| Polynomial::var(n, i);
        let one = Polynomial::one(n);
        // Vandermonde matrix rows (1, x_i, x_i^2)
        let m: Vec<Vec<Polynomial>> =
            (1..=3).map(|i| vec![one.clone(), x(i), x(i).pow(2)]).collect();
        let d = poly_det(&m, n);
        // det = ∏_{i<j} (x_j - x_i) = -δ_3
        assert_eq!(d, -Polynomial::vandermonde(3));
    }

    #[test]
    fn rational_det_small() {
        let m = vec![vec![rat(2), rat(1)], vec![rat(1), rat(3)]];
        assert_eq!(rational_det(m), rat(5));
        let m = vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]];
        assert_eq!(rational_det(m), rat(-1));
    }
}
