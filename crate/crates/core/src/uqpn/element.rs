//! Elements of the free associative superalgebra on the generators, with
//! coefficients in `Q(q)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{Frac, Rational, Scalar};
use crate::superspace::sign;
use crate::uqpn::symbol::{format_word, word_parity, GeneratorSymbol, Letter, Word};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Word, Frac>,
}

fn acc<K: Ord>(m: &mut BTreeMap<K, Frac>, k: K, c: Frac) {
    if c.is_zero() {
        return;
    }
    match m.get_mut(&k) {
        Some(slot) => {
            *slot = &*slot + &c;
            if slot.is_zero() {
                m.remove(&k);
            }
        }
        None => {
            m.insert(k, c);
        }
    }
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::new(), Frac::one())
    }

    pub fn from_word(w: Word, c: Frac) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn generator(g: GeneratorSymbol) -> Self {
        Self::from_word(vec![Letter::T(g)], Frac::one())
    }

    /// `t_ij` for a raw index pair, zero for zero-kind pairs.
    pub fn t(i: i32, j: i32) -> Self {
        match GeneratorSymbol::canonical(i, j) {
            Some(g) => Self::generator(g),
            None => Self::zero(),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Frac)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, w: Word, c: Frac) {
        acc(&mut self.terms, w, c);
    }

    pub fn terms(&self) -> &BTreeMap<Word, Frac> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, Frac> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[Letter]) -> Frac {
        self.terms.get(w).cloned().unwrap_or_else(Frac::zero)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Parity of a homogeneous element, `None` if mixed or zero.
    pub fn parity(&self) -> Option<u8> {
        let mut ps = self.terms.keys().map(|w| word_parity(w));
        let first = ps.next()?;
        ps.all(|p| p == first).then_some(first)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &Frac) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    pub fn scale_scalar(&self, c: &Scalar) -> Self {
        self.scale(&Frac::from(c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y);
            }
        }
        out
    }

    /// `[a, b] = ab - (-1)^{p(a)p(b)} ba` for homogeneous elements.
    pub fn supercommutator(&self, rhs: &Self) -> Self {
        let s = match (self.parity(), rhs.parity()) {
            (Some(a), Some(b)) => sign(u32::from(a & b)),
            _ => 1,
        };
        self.mul(rhs).sub(&rhs.mul(self).scale(&Frac::from(Scalar::from_int(s))))
    }

    /// Applies `f` to each coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Frac) -> Frac) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Specializes every coefficient at a rational `q`.
    pub fn specialize(&self, q: &Rational) -> crate::Result<BTreeMap<Word, Rational>> {
        let mut out = BTreeMap::new();
        for (w, c) in &self.terms {
            let v = c.eval(q)?;
            if !num_traits::Zero::is_zero(&v) {
                out.insert(w.clone(), v);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c}) {}", format_word(w))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Element of the tensor square of the free algebra, in the basis `w1 ⊗ w2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(Word, Word), Frac>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, w1: Word, w2: Word, c: Frac) {
        acc(&mut self.terms, (w1, w2), c);
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word), Frac> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.add_term(a.clone(), b.clone(), -c);
        }
        out
    }

    /// The signed flip `(a ⊗ b)° = (-1)^{p(a)p(b)} b ⊗ a`.
    pub fn flip(&self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            let s = sign(u32::from(word_parity(a) & word_parity(b)));
            out.add_term(b.clone(), a.clone(), &Frac::from(Scalar::from_int(s)) * c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = AlgebraElement::t(1, 2);
        let b = AlgebraElement::t(2, 2);
        assert!(AlgebraElement::t(-1, 1).is_zero());
        let ab = a.mul(&b);
        assert_eq!(ab.len(), 1);
        assert_eq!(ab.max_degree(), 2);
        assert!(a.sub(&a).is_zero());
        // t(1,-1) is odd: [x, x] = 2 x x
        let x = AlgebraElement::t(1, -1);
        assert_eq!(x.supercommutator(&x), x.mul(&x).scale(&Frac::from(Scalar::from_int(2))));
        assert_eq!(AlgebraElement::one().mul(&a), a);
    }
}
