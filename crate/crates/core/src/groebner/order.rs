use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::poly::Monomial;

/// Monomial orders with `x_1 > x_2 > ... > x_n`.
///
/// `Elimination { block }` compares the first `block` variables by grevlex
/// before looking at the rest (also grevlex), so any monomial involving the
/// block beats every monomial free of it. Only the colon and intersection
/// routines use it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    #[serde(skip)]
    Elimination { block: usize },
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::Grevlex
    }
}

pub(crate) type OrderKey = SmallVec<[i32; 12]>;

fn push_grevlex(key: &mut OrderKey, e: &[u16]) {
    key.push(e.iter().map(|&a| a as i32).sum());
    key.extend(e.iter().rev().map(|&a| -(a as i32)));
}

impl MonomialOrder {
    /// A vector whose lexicographic order agrees with this monomial order.
    pub(crate) fn key(&self, m: &Monomial) -> OrderKey {
        let e = m.exponents();
        let mut key = OrderKey::new();
        match *self {
            MonomialOrder::Lex => key.extend(e.iter().map(|&a| a as i32)),
            MonomialOrder::Grevlex => push_grevlex(&mut key, e),
            MonomialOrder::Elimination { block } => {
                let b = block.min(e.len());
                push_grevlex(&mut key, &e[..b]);
                push_grevlex(&mut key, &e[b..]);
            }
        }
        key
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp_lex(b),
            MonomialOrder::Grevlex => a.cmp_grevlex(b),
            MonomialOrder::Elimination { .. } => self.key(a).cmp(&self.key(b)),
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elimination { block } => format!("elim{block}"),
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => Err(crate::Error::Parse(format!("unknown monomial order `{s}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_agree_with_comparisons() {
        let ms = Monomial::all_of_degree(3, 2)
            .into_iter()
            .chain(Monomial::all_of_degree(3, 3))
            .collect::<Vec<_>>();
        for o in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            for a in &ms {
                for b in &ms {
                    assert_eq!(o.cmp(a, b), o.key(a).cmp(&o.key(b)));
                }
            }
        }
    }

    #[test]
    fn elimination_puts_block_first() {
        let o = MonomialOrder::Elimination { block: 1 };
        let t = Monomial::new(&[1, 0, 0]);
        let big = Monomial::new(&[0, 5, 5]);
        assert_eq!(o.cmp(&t, &big), Ordering::Greater);
    }
}
