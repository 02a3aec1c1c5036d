//! Quadratic relations from the RTT relation `T12 T13 S23 = S23 T13 T12`, their
//! closed form, and the coproduct on generators.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bialgebra::Unit;
use crate::scalar::{Frac, Rational, Scalar};
use crate::smatrix::build_s;
use crate::superspace::{parity, sign, SuperSpace};
use crate::uqpn::element::{AlgebraElement, TensorElement};
use crate::uqpn::symbol::{generators, GeneratorSymbol, Letter, Word};

pub type Quadruple = (i32, i32, i32, i32);

/// One relation, labelled by the coefficient `E_ij ⊗ E_kl` it was read from.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub index: Quadruple,
    pub element: AlgebraElement,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationSet {
    pub n: usize,
    pub relations: Vec<Relation>,
}

impl RelationSet {
    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn get(&self, index: Quadruple) -> Option<&AlgebraElement> {
        self.relations.iter().find(|r| r.index == index).map(|r| &r.element)
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Row {
            index: Quadruple,
            terms: Vec<(String, String)>,
        }
        let rows: Vec<Row> = self
            .relations
            .iter()
            .map(|r| Row {
                index: r.index,
                terms: r.element.terms().iter().map(|(w, c)| (crate::uqpn::symbol::format_word(w), c.to_string())).collect(),
            })
            .collect();
        serde_json::json!({ "n": self.n, "relations": rows })
    }
}

impl RelationSet {
    /// Inverse of [`RelationSet::to_json`].
    pub fn from_json(v: &serde_json::Value) -> crate::Result<Self> {
        #[derive(Deserialize)]
        struct Row {
            index: Quadruple,
            terms: Vec<(String, String)>,
        }
        #[derive(Deserialize)]
        struct Doc {
            n: usize,
            relations: Vec<Row>,
        }
        let doc: Doc = serde_json::from_value(v.clone())?;
        let mut relations = Vec::with_capacity(doc.relations.len());
        for row in doc.relations {
            let mut element = AlgebraElement::zero();
            for (w, c) in row.terms {
                let word = if w == "1" { Some(Word::new()) } else { crate::uqpn::symbol::parse_word(doc.n, &w)? };
                let word = word.ok_or_else(|| crate::Error::Parse(format!("zero-kind word {w:?} in a stored relation")))?;
                element.add_term(word, c.parse::<Frac>()?);
            }
            relations.push(Relation { index: row.index, element });
        }
        Ok(RelationSet { n: doc.n, relations })
    }
}

type SymWord = Vec<GeneratorSymbol>;
type RttMap = BTreeMap<(SymWord, Unit, Unit), Scalar>;

fn add_rtt(m: &mut RttMap, k: (SymWord, Unit, Unit), v: Scalar) {
    if v.is_zero() {
        return;
    }
    let slot = m.entry(k.clone()).or_insert_with(Scalar::zero);
    *slot += &v;
    if slot.is_zero() {
        m.remove(&k);
    }
}

fn sym_word_parity(w: &[GeneratorSymbol]) -> u8 {
    w.iter().fold(0, |a, g| a ^ g.parity())
}

fn unit_parity(u: Unit) -> u8 {
    parity(u.0) ^ parity(u.1)
}

// Product in U ⊗ End ⊗ End: moving x past w2, and y past w2 and x2.
fn mul3(a: &RttMap, b: &RttMap) -> RttMap {
    let mut out = RttMap::new();
    for ((w, x, y), u) in a {
        for ((w2, x2, y2), v) in b {
            if x.1 != x2.0 || y.1 != y2.0 {
                continue;
            }
            let pw2 = sym_word_parity(w2);
            let s = (unit_parity(*x) & pw2) ^ (unit_parity(*y) & (pw2 ^ unit_parity(*x2)));
            let mut nw = w.clone();
            nw.extend_from_slice(w2);
            let c = u * v;
            add_rtt(&mut out, (nw, (x.0, x2.1), (y.0, y2.1)), if s == 1 { -c } else { c });
        }
    }
    out
}

fn to_word(w: &[GeneratorSymbol]) -> Word {
    w.iter().map(|g| Letter::T(*g)).collect()
}

/// Reads the coefficient of every `E_ij ⊗ E_kl` in `T12 T13 S23 - S23 T13 T12`.
pub fn extract_relations(n: usize) -> RelationSet {
    let sp = SuperSpace::new(n);
    let idx = sp.indices();
    let mut t12 = RttMap::new();
    let mut t13 = RttMap::new();
    for &i in &idx {
        for &j in &idx {
            let Some(g) = GeneratorSymbol::canonical(i, j) else { continue };
            for &e in &idx {
                add_rtt(&mut t12, (vec![g], (i, j), (e, e)), Scalar::one());
                add_rtt(&mut t13, (vec![g], (e, e), (i, j)), Scalar::one());
            }
        }
    }
    let mut s23 = RttMap::new();
    for (units, c) in build_s(n).op.to_units() {
        add_rtt(&mut s23, (vec![], units[0], units[1]), c);
    }
    let lhs = mul3(&mul3(&t12, &t13), &s23);
    let rhs = mul3(&mul3(&s23, &t13), &t12);
    let mut grouped: BTreeMap<Quadruple, AlgebraElement> = BTreeMap::new();
    for ((w, x, y), c) in lhs {
        grouped.entry((x.0, x.1, y.0, y.1)).or_default().add_term(to_word(&w), Frac::from(c));
    }
    for ((w, x, y), c) in rhs {
        grouped.entry((x.0, x.1, y.0, y.1)).or_default().add_term(to_word(&w), Frac::from(-c));
    }
    let relations = grouped
        .into_iter()
        .filter(|(_, e)| !e.is_zero())
        .map(|(index, element)| Relation { index, element })
        .collect();
    RelationSet { n, relations }
}

/// `θ(i,j,k) = sgn(sgn(i) + sgn(j) + sgn(k))`.
pub fn theta(i: i32, j: i32, k: i32) -> i64 {
    i64::from((i.signum() + j.signum() + k.signum()).signum())
}

/// The closed-form left-hand side of the relation at `(i, j, k, l)`.
pub fn closed_form_relation(n: usize, i: i32, j: i32, k: i32, l: i32) -> AlgebraElement {
    let sp = SuperSpace::new(n);
    let p = |x: i32| u32::from(parity(x));
    let d = |b: bool| i64::from(b);
    let eps = Scalar::epsilon();
    let qm = Scalar::q_minus_one();
    let qim = &Scalar::q_pow(-1) - &Scalar::one();
    let mut r = AlgebraElement::zero();
    let mut term = |a: i32, b: i32, c: i32, e: i32, v: Scalar| {
        if v.is_zero() {
            return;
        }
        if let (Some(g), Some(h)) = (GeneratorSymbol::canonical(a, b), GeneratorSymbol::canonical(c, e)) {
            r.add_term(vec![Letter::T(g), Letter::T(h)], Frac::from(v));
        }
    };
    let s0 = sign((p(i) + p(j)) * (p(k) + p(l)));
    let th = theta(i, j, k);
    term(i, j, k, l, Scalar::from_int(s0));
    term(k, l, i, j, Scalar::from_int(-1));
    term(i, l, k, j, eps.scale(&Rational::from_integer((th * (d(j.abs() < l.abs()) - d(k.abs() < i.abs()))).into())));
    let jpart = &qm.scale(&int(d(j > 0))) + &qim.scale(&int(d(j < 0)));
    term(i, j, k, l, jpart.scale(&int(s0 * (d(j == l) + d(j == -l)))));
    let ipart = &qm.scale(&int(d(i > 0))) + &qim.scale(&int(d(i < 0)));
    term(k, l, i, j, ipart.scale(&int(-(d(i == k) + d(i == -k)))));
    term(i, -j, k, -l, eps.scale(&int(th * d(j > 0) * d(j == -l))));
    term(-k, l, -i, j, eps.scale(&int(-sign(p(j)) * d(i < 0) * d(i == -k))));
    let pre = sign(p(j) * (p(i) + 1));
    for a in sp.indices() {
        term(i, -a, k, a, eps.scale(&int(pre * sign(p(i) * p(a)) * th * d(j == -l) * d(a.abs() < l.abs()))));
        term(a, l, -a, j, eps.scale(&int(pre * sign(p(-j) * p(a)) * d(i == -k) * d(k.abs() < a.abs()))));
    }
    r
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `Δ(t_ij) = Σ_k (-1)^{(p(i)+p(k))(p(k)+p(j))} t_ik ⊗ t_kj` for a raw pair.
pub fn coproduct_raw(n: usize, i: i32, j: i32) -> TensorElement {
    let mut out = TensorElement::zero();
    for k in SuperSpace::new(n).indices() {
        let (Some(a), Some(b)) = (GeneratorSymbol::canonical(i, k), GeneratorSymbol::canonical(k, j)) else { continue };
        let s = sign(((u32::from(parity(i)) + u32::from(parity(k))) * (u32::from(parity(k)) + u32::from(parity(j)))) % 2);
        out.add_term(vec![Letter::T(a)], vec![Letter::T(b)], Frac::from(Scalar::from_int(s)));
    }
    out
}

pub fn coproduct(n: usize, g: GeneratorSymbol) -> TensorElement {
    coproduct_raw(n, g.i(), g.j())
}

type Triple = BTreeMap<(GeneratorSymbol, GeneratorSymbol, GeneratorSymbol), i64>;

fn signed_terms(n: usize, i: i32, j: i32) -> Vec<(i32, i64)> {
    SuperSpace::new(n)
        .indices()
        .into_iter()
        .filter(|&k| !GeneratorSymbol::is_zero_kind(i, k) && !GeneratorSymbol::is_zero_kind(k, j))
        .map(|k| (k, sign(((u32::from(parity(i)) + u32::from(parity(k))) * (u32::from(parity(k)) + u32::from(parity(j)))) % 2)))
        .collect()
}

fn add_triple(m: &mut Triple, a: (i32, i32), b: (i32, i32), c: (i32, i32), v: i64) {
    let g = |x: (i32, i32)| GeneratorSymbol::canonical(x.0, x.1).unwrap();
    let key = (g(a), g(b), g(c));
    *m.entry(key).or_insert(0) += v;
    m.retain(|_, x| *x != 0);
}

/// `(Δ ⊗ 1)Δ(t_ij) = (1 ⊗ Δ)Δ(t_ij)` in the free algebra.
pub fn is_coassociative_on(n: usize, g: GeneratorSymbol) -> bool {
    let (i, j) = (g.i(), g.j());
    let mut left = Triple::new();
    let mut right = Triple::new();
    for (k, s) in signed_terms(n, i, j) {
        for (m, t) in signed_terms(n, i, k) {
            add_triple(&mut left, (i, m), (m, k), (k, j), s * t);
        }
    }
    for (m, s) in signed_terms(n, i, j) {
        for (k, t) in signed_terms(n, m, j) {
            add_triple(&mut right, (i, m), (m, k), (k, j), s * t);
        }
    }
    left == right
}

/// Candidate counit `ε(t_ij) = δ_ij`: checks `(ε⊗1)Δ = id = (1⊗ε)Δ` on `g`.
pub fn counit_candidate_holds(n: usize, g: GeneratorSymbol) -> bool {
    let eps = |w: &Word| -> i64 {
        match w.as_slice() {
            [Letter::T(h)] if h.is_diagonal() => 1,
            _ => 0,
        }
    };
    let d = coproduct(n, g);
    let mut left = AlgebraElement::zero();
    let mut right = AlgebraElement::zero();
    for ((a, b), c) in d.terms() {
        left.add_term(b.clone(), c * &Frac::from(Scalar::from_int(eps(a))));
        right.add_term(a.clone(), c * &Frac::from(Scalar::from_int(eps(b))));
    }
    let want = AlgebraElement::generator(g);
    left == want && right == want
}

pub fn all_generators_coassociative(n: usize) -> bool {
    generators(n).into_iter().all(|g| is_coassociative_on(n, g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extraction_matches_closed_form() {
        for n in 1..=2 {
            let rels = extract_relations(n);
            let idx = SuperSpace::new(n).indices();
            for &i in &idx {
                for &j in &idx {
                    for &k in &idx {
                        for &l in &idx {
                            let c = closed_form_relation(n, i, j, k, l);
                            let e = rels.get((i, j, k, l)).cloned().unwrap_or_default();
                            assert_eq!(e, c, "({i},{j},{k},{l})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn n1_trivial_relation_dropped() {
        let rels = extract_relations(1);
        assert!(rels.get((1, 1, 1, 1)).is_none());
        assert!(closed_form_relation(1, 1, 1, 1, 1).is_zero());
    }

    #[test]
    fn coproduct_of_t11_keeps_only_diagonal() {
        let g = GeneratorSymbol::canonical(1, 1).unwrap();
        let d = coproduct(1, g);
        assert_eq!(d.terms().len(), 1);
        for n in 1..=3 {
            assert!(all_generators_coassociative(n));
            for g in generators(n) {
                assert!(counit_candidate_holds(n, g));
            }
        }
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta(1, -1, 1), 1);
        assert_eq!(theta(-1, -1, 1), -1);
        assert_eq!(theta(1, -1, 2), 1);
    }
}
