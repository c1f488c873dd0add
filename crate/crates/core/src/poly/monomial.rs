use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub(crate) type Exponents = SmallVec<[u16; 8]>;

/// A monomial `x_1^{a_1} ... x_n^{a_n}`, stored as its exponent vector.
///
/// Variables are numbered `1..=n`; the exponent of `x_i` sits at slot `i - 1`.
/// The `Ord` impl is graded reverse lexicographic with `x_1 > ... > x_n`,
/// which is the canonical storage order for [`Polynomial`](super::Polynomial).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub(crate) Exponents);

impl Monomial {
    pub fn new(exponents: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exponents))
    }

    pub fn one(n: usize) -> Self {
        Monomial(smallvec::smallvec![0; n])
    }

    /// The variable `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Monomial::one(n);
        m.0[i - 1] = 1;
        m
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    /// Exponent of `x_i` (1-based).
    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i - 1]
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Lexicographic comparison with `x_1 > x_2 > ... > x_n`.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }

    /// Graded reverse lexicographic comparison.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
                if a != b {
                    // smaller exponent in the last differing variable wins
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }

    /// All monomials of total degree `d` in `n` variables, in ascending grevlex order.
    pub fn all_of_degree(n: usize, d: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; n];
        fn rec(pos: usize, left: usize, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            let n = cur.len();
            if pos + 1 == n {
                cur[pos] = left as u16;
                out.push(Monomial::new(cur));
                cur[pos] = 0;
                return;
            }
            for a in 0..=left {
                cur[pos] = a as u16;
                rec(pos + 1, left - a, cur, out);
            }
            cur[pos] = 0;
        }
        if n == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_grevlex(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Writes `x1^2*x3`, or `1` for the unit monomial.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if a == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, a)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_basics() {
        // x1 > x2 > x3 in degree one
        let x1 = Monomial::var(3, 1);
        let x2 = Monomial::var(3, 2);
        let x3 = Monomial::var(3, 3);
        assert!(x1 > x2 && x2 > x3);
        // x2^2 > x1*x3 under grevlex, but lex says otherwise
        let a = Monomial::new(&[0, 2, 0]);
        let b = Monomial::new(&[1, 0, 1]);
        assert!(a > b);
        assert_eq!(a.cmp_lex(&b), Ordering::Less);
        assert!(Monomial::new(&[0, 0, 2]) > x1);
    }

    #[test]
    fn degree_enumeration_counts() {
        // C(d + n - 1, n - 1)
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(4, 3).len(), 20);
        assert_eq!(Monomial::all_of_degree(2, 0), vec![Monomial::one(2)]);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::new(&[1, 2]);
        let b = Monomial::new(&[2, 2]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(Monomial::new(&[1, 0])));
        assert_eq!(b.quotient_of(&a), None);
        assert_eq!(a.lcm(&Monomial::new(&[0, 3])), Monomial::new(&[1, 3]));
        assert!(Monomial::new(&[1, 0]).is_coprime(&Monomial::new(&[0, 4])));
    }
}
