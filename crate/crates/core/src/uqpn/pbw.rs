//! Reduced monomials and straightening by quadratic rewriting.
//!
//! The rewriting table is the reduced row echelon form of the quadratic
//! relations over `Q(q)`, with the non-reduced words as pivot columns. Each
//! non-reduced pair then has a unique expression as a combination of reduced
//! pairs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::scalar::{Frac, Scalar};
use crate::uqpn::element::AlgebraElement;
use crate::uqpn::relations::{extract_relations, RelationSet};
use crate::uqpn::symbol::{generators, GeneratorSymbol, Letter, Word};

pub const DEFAULT_STEP_CAP: usize = 1_000_000;

/// Whether the adjacent pair `x y` may appear in a reduced monomial.
pub fn is_reduced_pair(x: Letter, y: Letter) -> bool {
    let (a, b) = (x.symbol(), y.symbol());
    if a != b {
        return a < b;
    }
    match (x, y) {
        (Letter::T(_), Letter::T(_)) => a.parity() == 0,
        (Letter::Inv(_), Letter::Inv(_)) => true,
        _ => false,
    }
}

/// `true` when the word is an ordered product with no cancelling pairs.
pub fn is_reduced(w: &[Letter]) -> bool {
    w.windows(2).all(|p| is_reduced_pair(p[0], p[1]))
}

pub fn is_reduced_element(e: &AlgebraElement) -> bool {
    e.terms().keys().all(|w| is_reduced(w))
}

#[derive(Clone, Debug)]
pub struct Straightener {
    n: usize,
    rules: BTreeMap<(Letter, Letter), AlgebraElement>,
    cap: usize,
    relation_rank: usize,
}

impl Straightener {
    pub fn new(n: usize) -> Result<Self> {
        Self::from_relations(&extract_relations(n))
    }

    pub fn from_relations(rels: &RelationSet) -> Result<Self> {
        let gens = generators(rels.n);
        let mut words: Vec<(Letter, Letter)> = Vec::new();
        for &a in &gens {
            for &b in &gens {
                words.push((Letter::T(a), Letter::T(b)));
            }
        }
        // non-reduced words first so that they become the pivots
        words.sort_by_key(|&(x, y)| is_reduced_pair(x, y));
        let col: BTreeMap<Word, usize> = words.iter().enumerate().map(|(k, &(x, y))| (vec![x, y], k)).collect();
        let n_nonreduced = words.iter().filter(|&&(x, y)| !is_reduced_pair(x, y)).count();
        let mut ech: Echelon<Frac> = Echelon::new();
        for r in &rels.relations {
            let mut v: SparseVec<Frac> = Vec::new();
            for (w, c) in r.element.terms() {
                let k = *col.get(w).ok_or_else(|| Error::Unsupported(format!("relation {:?} is not quadratic", r.index)))?;
                v.push((k, c.clone()));
            }
            v.sort_by_key(|t| t.0);
            ech.insert(&v);
        }
        ech.back_substitute();
        let mut rules = BTreeMap::new();
        for (k, &(x, y)) in words.iter().enumerate().take(n_nonreduced) {
            let row = ech.row(k).ok_or_else(|| Error::Unsupported(format!("no rewriting rule for {x} {y}")))?;
            let mut rhs = AlgebraElement::zero();
            for (j, c) in &row[1..] {
                let (a, b) = words[*j];
                rhs.add_term(vec![a, b], -c);
            }
            rules.insert((x, y), rhs);
        }
        let relation_rank = ech.rank();
        let mut s = Straightener { n: rels.n, rules, cap: DEFAULT_STEP_CAP, relation_rank };
        s.add_inverse_rules(&gens);
        Ok(s)
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the quadratic relation span over `Q(q)`.
    pub fn relation_rank(&self) -> usize {
        self.relation_rank
    }

    pub fn rules(&self) -> &BTreeMap<(Letter, Letter), AlgebraElement> {
        &self.rules
    }

    pub fn rule(&self, x: Letter, y: Letter) -> Option<&AlgebraElement> {
        self.rules.get(&(x, y))
    }

    // q-commutation `a b = c b a` for a non-reduced generator pair.
    fn pure_coefficient(&self, a: GeneratorSymbol, b: GeneratorSymbol) -> Option<Frac> {
        let rhs = self.rules.get(&(Letter::T(a), Letter::T(b)))?;
        let mut it = rhs.terms().iter();
        let (w, c) = it.next()?;
        (it.next().is_none() && *w == vec![Letter::T(b), Letter::T(a)]).then(|| c.clone())
    }

    fn add_inverse_rules(&mut self, gens: &[GeneratorSymbol]) {
        let one = AlgebraElement::one();
        for &g in gens.iter().filter(|g| g.is_diagonal()) {
            self.rules.insert((Letter::T(g), Letter::Inv(g)), one.clone());
            self.rules.insert((Letter::Inv(g), Letter::T(g)), one.clone());
        }
        for &a in gens {
            for &b in gens {
                if a <= b || !(a.is_diagonal() || b.is_diagonal()) {
                    continue;
                }
                let Some(c) = self.pure_coefficient(a, b) else { continue };
                let ci = c.inv().expect("q-commutation coefficient is nonzero");
                if a.is_diagonal() {
                    // a^-1 b = c^-1 b a^-1
                    self.rules.insert((Letter::Inv(a), Letter::T(b)), AlgebraElement::from_word(vec![Letter::T(b), Letter::Inv(a)], ci.clone()));
                }
                if b.is_diagonal() {
                    // a b^-1 = c^-1 b^-1 a
                    self.rules.insert((Letter::T(a), Letter::Inv(b)), AlgebraElement::from_word(vec![Letter::Inv(b), Letter::T(a)], ci.clone()));
                }
                if a.is_diagonal() && b.is_diagonal() {
                    self.rules.insert((Letter::Inv(a), Letter::Inv(b)), AlgebraElement::from_word(vec![Letter::Inv(b), Letter::Inv(a)], c));
                }
            }
        }
    }

    /// Rewrites to reduced monomials; returns the result and the number of rewrite steps.
    pub fn straighten_counted(&self, e: &AlgebraElement) -> Result<(AlgebraElement, usize)> {
        let mut cur = e.clone();
        let mut steps = 0usize;
        loop {
            let mut next = AlgebraElement::zero();
            let mut changed = false;
            for (w, c) in cur.terms() {
                match w.windows(2).position(|p| !is_reduced_pair(p[0], p[1])) {
                    None => next.add_term(w.clone(), c.clone()),
                    Some(k) => {
                        let rhs = self
                            .rules
                            .get(&(w[k], w[k + 1]))
                            .ok_or_else(|| Error::Unsupported(format!("no rewriting rule for {} {}", w[k], w[k + 1])))?;
                        for (mid, d) in rhs.terms() {
                            let mut nw: Word = w[..k].to_vec();
                            nw.extend_from_slice(mid);
                            nw.extend_from_slice(&w[k + 2..]);
                            next.add_term(nw, c * d);
                        }
                        changed = true;
                        steps += 1;
                        if steps > self.cap {
                            return Err(Error::StraightenDiverged(self.cap));
                        }
                    }
                }
            }
            cur = next;
            if !changed {
                return Ok((cur, steps));
            }
        }
    }

    pub fn straighten(&self, e: &AlgebraElement) -> Result<AlgebraElement> {
        Ok(self.straighten_counted(e)?.0)
    }
}

/// The coefficient of a single word as an element.
pub fn word_element(w: Word) -> AlgebraElement {
    AlgebraElement::from_word(w, Frac::from(Scalar::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uqpn::representation::Representation;

    fn g(i: i32, j: i32) -> GeneratorSymbol {
        GeneratorSymbol::canonical(i, j).unwrap()
    }

    #[test]
    fn table_covers_all_nonreduced_pairs() {
        assert_eq!(Straightener::new(1).unwrap().relation_rank(), 2);
        assert_eq!(Straightener::new(2).unwrap().relation_rank(), 32);
    }

    #[test]
    fn odd_squares_vanish() {
        for n in 1..=2 {
            let s = Straightener::new(n).unwrap();
            for x in generators(n).into_iter().filter(|x| x.parity() == 1) {
                let e = word_element(vec![Letter::T(x), Letter::T(x)]);
                assert!(s.straighten(&e).unwrap().is_zero(), "{x}");
            }
        }
    }

    #[test]
    fn reduced_input_is_fixed() {
        let s = Straightener::new(2).unwrap();
        let e = word_element(vec![Letter::T(g(2, 2)), Letter::T(g(1, 2))]);
        assert_eq!(s.straighten(&e).unwrap(), e);
    }

    #[test]
    fn quadratic_words_preserve_rho() {
        let s = Straightener::new(2).unwrap();
        let rep = Representation::new(2, 2).unwrap();
        for a in generators(2) {
            for b in generators(2) {
                let e = word_element(vec![Letter::T(a), Letter::T(b)]);
                let r = s.straighten(&e).unwrap();
                assert!(is_reduced_element(&r));
                assert!(rep.agree(&e, &r).unwrap(), "{a} {b}");
            }
        }
    }

    #[test]
    fn every_nonreduced_letter_pair_has_a_rule() {
        for n in 1..=3 {
            let s = Straightener::new(n).unwrap();
            let gs = generators(n);
            let mut letters: Vec<Letter> = gs.iter().map(|g| Letter::T(*g)).collect();
            letters.extend(gs.iter().filter(|g| g.is_diagonal()).map(|g| Letter::Inv(*g)));
            for &x in &letters {
                for &y in &letters {
                    assert!(is_reduced_pair(x, y) || s.rule(x, y).is_some(), "{x} {y}");
                }
            }
        }
    }

    #[test]
    fn inverse_rules() {
        let s = Straightener::new(2).unwrap();
        let rep = Representation::new(2, 2).unwrap();
        let d = g(1, 1);
        let x = g(1, 2);
        let e = word_element(vec![Letter::Inv(d), Letter::T(x), Letter::T(d)]);
        let r = s.straighten(&e).unwrap();
        assert!(is_reduced_element(&r));
        assert!(rep.agree(&e, &r).unwrap());
        let c = word_element(vec![Letter::T(d), Letter::Inv(d)]);
        assert_eq!(s.straighten(&c).unwrap(), AlgebraElement::one());
    }
}
