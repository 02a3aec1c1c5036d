//! Generator symbols `t_ij`, the formal inverses `t_ii^-1`, and the PBW order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::superspace::{parity, SuperSpace};

/// Comparison key realizing `≺`: `(-|i|, -|j|, i < 0, j < 0)`, ascending.
pub type PbwOrderKey = (i32, i32, bool, bool);

/// A nonzero generator `t_ij`, with diagonal symbols stored as `t_ii`, `i > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSymbol {
    i: i32,
    j: i32,
}

impl GeneratorSymbol {
    /// Canonical symbol for the raw pair `(i, j)`; `None` for zero-kind pairs.
    pub fn canonical(i: i32, j: i32) -> Option<Self> {
        if i == 0 || j == 0 || i.abs() > j.abs() || (i == -j && i < 0) {
            return None;
        }
        if i == j && i < 0 {
            return Some(GeneratorSymbol { i: -i, j: -j });
        }
        Some(GeneratorSymbol { i, j })
    }

    /// Validated canonical symbol; `Ok(None)` when `t_ij` is zero in the algebra.
    pub fn new(n: usize, i: i32, j: i32) -> Result<Option<Self>> {
        let sp = SuperSpace::new(n);
        sp.check(i)?;
        sp.check(j)?;
        Ok(Self::canonical(i, j))
    }

    /// `true` when the raw pair names a generator set to zero.
    pub fn is_zero_kind(i: i32, j: i32) -> bool {
        Self::canonical(i, j).is_none()
    }

    pub fn i(self) -> i32 {
        self.i
    }

    pub fn j(self) -> i32 {
        self.j
    }

    pub fn parity(self) -> u8 {
        parity(self.i) ^ parity(self.j)
    }

    pub fn is_diagonal(self) -> bool {
        self.i == self.j
    }

    pub fn pbw_key(self) -> PbwOrderKey {
        (-self.i.abs(), -self.j.abs(), self.i < 0, self.j < 0)
    }
}

impl Ord for GeneratorSymbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.pbw_key().cmp(&other.pbw_key())
    }
}

impl PartialOrd for GeneratorSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t({},{})", self.i, self.j)
    }
}

/// `t_ij ≺ t_kl` as an ordering.
pub fn pbw_compare(a: GeneratorSymbol, b: GeneratorSymbol) -> Ordering {
    a.cmp(&b)
}

/// All nonzero generators for `n`, ascending in `≺`.
pub fn generators(n: usize) -> Vec<GeneratorSymbol> {
    let sp = SuperSpace::new(n);
    let mut out: Vec<GeneratorSymbol> = Vec::new();
    for i in sp.indices() {
        for j in sp.indices() {
            if let Some(g) = GeneratorSymbol::canonical(i, j) {
                if !out.contains(&g) {
                    out.push(g);
                }
            }
        }
    }
    out.sort();
    out
}

/// A letter of a word: a generator or the formal inverse of a diagonal one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    T(GeneratorSymbol),
    Inv(GeneratorSymbol),
}

impl Letter {
    pub fn inverse_of(g: GeneratorSymbol) -> Result<Letter> {
        if !g.is_diagonal() {
            return Err(Error::Parse(format!("{g} is not diagonal")));
        }
        Ok(Letter::Inv(g))
    }

    pub fn symbol(self) -> GeneratorSymbol {
        match self {
            Letter::T(g) | Letter::Inv(g) => g,
        }
    }

    pub fn parity(self) -> u8 {
        self.symbol().parity()
    }

    pub fn is_inverse(self) -> bool {
        matches!(self, Letter::Inv(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T(g) => write!(f, "{g}"),
            Letter::Inv(g) => write!(f, "tinv({},{})", g.i, g.j),
        }
    }
}

pub type Word = Vec<Letter>;

pub fn word_parity(w: &[Letter]) -> u8 {
    w.iter().fold(0, |acc, l| acc ^ l.parity())
}

pub fn format_word(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

fn parse_pair(body: &str) -> Result<(i32, i32)> {
    let (a, b) = body.split_once(',').ok_or_else(|| Error::Parse(format!("expected (i,j), got ({body})")))?;
    let p = |s: &str| s.trim().parse::<i32>().map_err(|_| Error::Parse(format!("bad index {s:?}")));
    Ok((p(a)?, p(b)?))
}

/// Parses whitespace-separated `t(i,j)` / `tinv(i,i)` tokens.
///
/// Returns `Ok(None)` when some token names a zero-kind generator, so the
/// word is zero in the algebra.
pub fn parse_word(n: usize, s: &str) -> Result<Option<Word>> {
    let mut out = Word::new();
    let mut zero = false;
    let compact: String = s.split_whitespace().collect::<Vec<_>>().join(" ");
    let mut rest = compact.as_str().trim();
    while !rest.is_empty() {
        let (inv, tail) = if let Some(t) = rest.strip_prefix("tinv(") {
            (true, t)
        } else if let Some(t) = rest.strip_prefix("t(") {
            (false, t)
        } else {
            return Err(Error::Parse(format!("unexpected token at {rest:?}")));
        };
        let close = tail.find(')').ok_or_else(|| Error::Parse("missing ')'".into()))?;
        let (i, j) = parse_pair(&tail[..close])?;
        rest = tail[close + 1..].trim_start();
        let g = GeneratorSymbol::new(n, i, j)?;
        if inv {
            if i.abs() != j.abs() || i != j {
                return Err(Error::Parse(format!("tinv({i},{j}) needs a diagonal index")));
            }
            out.push(Letter::Inv(g.expect("diagonal symbols are nonzero")));
        } else {
            match g {
                Some(g) => out.push(Letter::T(g)),
                None => zero = true,
            }
        }
    }
    Ok(if zero { None } else { Some(out) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: i32, j: i32) -> GeneratorSymbol {
        GeneratorSymbol::canonical(i, j).unwrap()
    }

    #[test]
    fn zero_kinds() {
        assert!(GeneratorSymbol::is_zero_kind(-1, 1));
        assert!(!GeneratorSymbol::is_zero_kind(1, -1));
        assert!(GeneratorSymbol::is_zero_kind(2, 1));
        assert_eq!(g(-2, -2), g(2, 2));
        assert_eq!(generators(1).len(), 2);
        assert_eq!(generators(2).len(), 8);
        for n in 1..=3 {
            assert_eq!(generators(n).len(), 2 * n * n);
        }
    }

    #[test]
    fn pbw_clauses() {
        assert_eq!(pbw_compare(g(2, 2), g(1, 2)), Ordering::Less);
        assert_eq!(pbw_compare(g(1, 2), g(1, 1)), Ordering::Less);
        assert_eq!(pbw_compare(g(1, 2), g(1, -2)), Ordering::Less);
        assert_eq!(pbw_compare(g(1, 2), g(-1, 2)), Ordering::Less);
        assert_eq!(pbw_compare(g(1, -2), g(-1, 2)), Ordering::Less);
    }

    #[test]
    fn total_order_exhaustive() {
        for n in 1..=3 {
            let gs = generators(n);
            for a in &gs {
                for b in &gs {
                    assert_eq!(pbw_compare(*a, *b) == Ordering::Equal, a == b);
                    assert_eq!(pbw_compare(*a, *b), pbw_compare(*b, *a).reverse());
                    for c in &gs {
                        if a < b && b < c {
                            assert!(a < c);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse() {
        let w = parse_word(2, "t(1,2) t(-2,-2)  tinv(1,1)").unwrap().unwrap();
        assert_eq!(format_word(&w), "t(1,2) t(2,2) tinv(1,1)");
        assert_eq!(parse_word(2, "t(-1,1)").unwrap(), None);
        assert!(parse_word(2, "t(3,3)").is_err());
        assert!(parse_word(2, "x(1,1)").is_err());
        assert!(parse_word(2, "tinv(1,2)").is_err());
        assert_eq!(parse_word(1, "").unwrap(), Some(vec![]));
    }
}
