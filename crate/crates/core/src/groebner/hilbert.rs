use std::fmt;

use serde::{Deserialize, Serialize};

/// Hilbert series of a graded quotient, as coefficients by degree.
///
/// When `complete` is false the quotient is infinite dimensional and the
/// coefficients stop at the requested degree cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub coeffs: Vec<u64>,
    pub complete: bool,
}

impl HilbertSeries {
    /// A finite series, trailing zeros trimmed.
    pub fn finite(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HilbertSeries { coeffs, complete: true }
    }

    pub fn zero() -> Self {
        HilbertSeries::finite(Vec::new())
    }

    pub fn one() -> Self {
        HilbertSeries::finite(vec![1])
    }

    /// `∏ (1 - q^{d_i}) / (1 - q)`, i.e. the product of the q-integers `[d_i]_q`.
    pub fn from_degrees(degrees: &[usize]) -> Self {
        let mut out = HilbertSeries::one();
        for &d in degrees {
            out = out.mul(&HilbertSeries::finite(vec![1; d]));
        }
        out
    }

    /// `[n]_q! = [1]_q [2]_q ... [n]_q`.
    pub fn q_factorial(n: usize) -> Self {
        HilbertSeries::from_degrees(&(1..=n).collect::<Vec<_>>())
    }

    pub fn is_zero(&self) -> bool {
        self.complete && self.coeffs.is_empty()
    }

    /// Total dimension, when finite.
    pub fn dimension(&self) -> Option<u64> {
        self.complete.then(|| self.coeffs.iter().sum())
    }

    /// Top nonzero degree of a finite nonzero series.
    pub fn top_degree(&self) -> Option<usize> {
        if !self.complete || self.coeffs.is_empty() {
            return None;
        }
        Some(self.coeffs.len() - 1)
    }

    pub fn is_palindromic(&self) -> bool {
        self.complete && self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn mul(&self, other: &HilbertSeries) -> HilbertSeries {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return HilbertSeries::zero();
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        let mut out = HilbertSeries::finite(c);
        out.complete = self.complete && other.complete;
        out
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len)
            .map(|i| self.coeffs.get(i).unwrap_or(&0) + other.coeffs.get(i).unwrap_or(&0))
            .collect();
        let mut out = HilbertSeries::finite(c);
        out.complete = self.complete && other.complete;
        out
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> HilbertSeries {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.coeffs);
        HilbertSeries { coeffs: c, complete: self.complete }
    }

    /// Coefficientwise `self <= other`.
    pub fn dominated_by(&self, other: &HilbertSeries) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, a)| a <= other.coeffs.get(i).unwrap_or(&0))
    }
}

/// Writes e.g. `1+2q+2q^2+q^3`, with a trailing `+...` when truncated.
impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && d > 0 { String::new() } else { c.to_string() };
            parts.push(match d {
                0 => coef,
                1 => format!("{coef}q"),
                _ => format!("{coef}q^{d}"),
            });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        if !self.complete {
            parts.push("...".into());
        }
        f.write_str(&parts.join("+"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_factorial_three() {
        let h = HilbertSeries::q_factorial(3);
        assert_eq!(h.coeffs, vec![1, 2, 2, 1]);
        assert_eq!(h.dimension(), Some(6));
        assert!(h.is_palindromic());
        assert_eq!(h.to_string(), "1+2q+2q^2+q^3");
    }

    #[test]
    fn arithmetic() {
        let a = HilbertSeries::from_degrees(&[2, 3]);
        assert_eq!(a.coeffs, vec![1, 2, 2, 1]);
        let b = HilbertSeries::one().shift(1).add(&HilbertSeries::one());
        assert_eq!(b.coeffs, vec![1, 1]);
        assert!(HilbertSeries::zero().is_zero());
        assert!(b.dominated_by(&a));
    }
}
