//! Canonical text form shared by polynomials and superspace elements.
//!
//! A term is `c*x1^a1*x3*t2*t5`: coefficient first (omitted when it is `1`,
//! written as a bare `-` when it is `-1`), then `x` factors with exponents
//! (`^1` omitted), then `t` factors for fermionic variables. Terms are joined
//! with `+`/`-`, there are no spaces, and the zero element is `0`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// One parsed term: coefficient, bosonic factors `(var, exp)`, fermionic factors in written order.
pub(crate) struct RawTerm {
    pub coeff: Rational,
    pub xs: Vec<(usize, u32)>,
    pub ts: Vec<usize>,
}

pub(crate) fn parse_terms(s: &str) -> Result<Vec<RawTerm>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    if s == "0" {
        return Ok(Vec::new());
    }
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut out = Vec::new();
    while pos < bytes.len() {
        let mut negative = false;
        match bytes[pos] {
            b'+' if !out.is_empty() => pos += 1,
            b'-' => {
                negative = true;
                pos += 1;
            }
            _ if out.is_empty() => {}
            c => return Err(Error::Parse(format!("expected sign, found `{}`", c as char))),
        }
        let (term, next) = parse_term(s, pos)?;
        pos = next;
        let mut term = term;
        if negative {
            term.coeff = -term.coeff;
        }
        out.push(term);
    }
    Ok(out)
}

fn parse_number(s: &str, pos: usize) -> Option<(BigInt, usize)> {
    let bytes = s.as_bytes();
    let mut end = pos;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end == pos {
        return None;
    }
    Some((s[pos..end].parse().ok()?, end))
}

fn parse_term(s: &str, mut pos: usize) -> Result<(RawTerm, usize)> {
    let bytes = s.as_bytes();
    let mut coeff = Rational::one();
    let mut have_factor = false;
    if let Some((num, next)) = parse_number(s, pos) {
        pos = next;
        let mut den = BigInt::one();
        if pos < bytes.len() && bytes[pos] == b'/' {
            let (d, next) = parse_number(s, pos + 1)
                .ok_or_else(|| Error::Parse("missing denominator".into()))?;
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            den = d;
            pos = next;
        }
        coeff = Rational::new(num, den);
        have_factor = true;
        if pos < bytes.len() && bytes[pos] == b'*' {
            pos += 1;
        } else {
            return Ok((RawTerm { coeff, xs: vec![], ts: vec![] }, pos));
        }
    }
    let mut xs = Vec::new();
    let mut ts = Vec::new();
    loop {
        if pos >= bytes.len() {
            break;
        }
        let kind = bytes[pos];
        if kind != b'x' && kind != b't' {
            break;
        }
        let (idx, next) = parse_number(s, pos + 1)
            .ok_or_else(|| Error::Parse(format!("missing index after `{}`", kind as char)))?;
        let idx: usize = idx
            .try_into()
            .map_err(|_| Error::Parse("index too large".into()))?;
        pos = next;
        have_factor = true;
        if kind == b'x' {
            let mut exp = 1u32;
            if pos < bytes.len() && bytes[pos] == b'^' {
                let (e, next) = parse_number(s, pos + 1)
                    .ok_or_else(|| Error::Parse("missing exponent".into()))?;
                exp = e.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                pos = next;
            }
            xs.push((idx, exp));
        } else {
            ts.push(idx);
        }
        if pos < bytes.len() && bytes[pos] == b'*' {
            pos += 1;
        } else {
            break;
        }
    }
    if !have_factor {
        return Err(Error::Parse(format!("unexpected input at byte {pos}")));
    }
    Ok((RawTerm { coeff, xs, ts }, pos))
}

/// Appends one term. `body` is the monomial text (`""` for the unit monomial).
pub(crate) fn write_term(out: &mut String, coeff: &Rational, body: &str, first: bool) {
    let negative = coeff.is_negative();
    if negative {
        out.push('-');
    } else if !first {
        out.push('+');
    }
    let abs = coeff.abs();
    if body.is_empty() {
        out.push_str(&format_rational(&abs));
    } else if abs.is_one() {
        out.push_str(body);
    } else {
        out.push_str(&format_rational(&abs));
        out.push('*');
        out.push_str(body);
    }
}

pub(crate) fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
