//! The classical limit `q → 1` of the relations and of the coproduct.
//!
//! In this module a letter `T(g)` of a word stands for the rescaled generator
//! `τ_g`, where `t_ij = (q - q^-1) τ_ij` for `i ≠ j` and `t_ii = 1 + (q - 1) τ_ii`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::bialgebra::cobracket;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::periplectic::{pn_basis, pn_tags, superbracket_pn, BasisTag};
use crate::report::{ReportBuilder, VerificationReport};
use crate::scalar::{rat, rat_int, Frac, Rational, Scalar};
use crate::superspace::{elementary, parity, sign, GradedOperator};
use crate::uqpn::element::{AlgebraElement, TensorElement};
use crate::uqpn::relations::{coproduct, extract_relations, RelationSet};
use crate::uqpn::representation::rho1_raw;
use crate::uqpn::symbol::{generators, GeneratorSymbol, Letter, Word};

type RatWord = BTreeMap<Word, Rational>;

// t_g as a combination of τ-words.
fn t_in_tau(g: GeneratorSymbol) -> Vec<(Word, Scalar)> {
    if g.is_diagonal() {
        vec![(vec![], Scalar::one()), (vec![Letter::T(g)], Scalar::q_minus_one())]
    } else {
        vec![(vec![Letter::T(g)], Scalar::epsilon())]
    }
}

/// Rewrites an element with Laurent coefficients in the rescaled generators.
pub fn tau_substitute(e: &AlgebraElement) -> Result<BTreeMap<Word, Scalar>> {
    let mut out: BTreeMap<Word, Scalar> = BTreeMap::new();
    for (w, c) in e.terms() {
        let c = c.as_scalar().ok_or_else(|| Error::NotInLocalization(format!("coefficient {c} is not Laurent")))?;
        let mut partial: Vec<(Word, Scalar)> = vec![(vec![], c.clone())];
        for l in w {
            let Letter::T(g) = l else { return Err(Error::Unsupported("inverse letters in a relation".into())) };
            let mut next = Vec::new();
            for (pw, pc) in &partial {
                for (tw, tc) in t_in_tau(*g) {
                    let mut nw = pw.clone();
                    nw.extend(tw);
                    next.push((nw, pc * &tc));
                }
            }
            partial = next;
        }
        for (w, c) in partial {
            let slot = out.entry(w).or_insert_with(Scalar::zero);
            *slot += &c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Each rescaled relation divided by the largest power of `(q - 1)` and set to `q = 1`.
pub fn specialized_relations(rels: &RelationSet) -> Result<Vec<RatWord>> {
    let mut out = Vec::new();
    for r in &rels.relations {
        let sub = tau_substitute(&r.element)?;
        if sub.is_empty() {
            continue;
        }
        let v = sub.values().map(|c| c.valuation_at_one()).min().unwrap();
        let mut row = RatWord::new();
        for (w, c) in sub {
            let x = c.quotient_by_qminus1(v)?.eval_at_one();
            if !x.is_zero() {
                row.insert(w, x);
            }
        }
        out.push(row);
    }
    Ok(out)
}

/// Linear span of rational word vectors, indexing words on first sight.
#[derive(Default)]
pub struct WordSpan {
    index: BTreeMap<Word, usize>,
    ech: Echelon<Rational>,
}

impl WordSpan {
    fn vector(&mut self, v: &RatWord) -> SparseVec<Rational> {
        let mut out: SparseVec<Rational> = v
            .iter()
            .map(|(w, c)| {
                let next = self.index.len();
                (*self.index.entry(w.clone()).or_insert(next), c.clone())
            })
            .collect();
        out.sort_by_key(|t| t.0);
        out
    }

    pub fn insert(&mut self, v: &RatWord) {
        let x = self.vector(v);
        self.ech.insert(&x);
    }

    pub fn contains(&mut self, v: &RatWord) -> bool {
        let x = self.vector(v);
        self.ech.contains(&x)
    }

    pub fn rank(&self) -> usize {
        self.ech.rank()
    }
}

/// `ψ(𝖤_ab)` as `(coefficient, τ symbol)`.
pub fn psi(t: BasisTag) -> (Rational, GeneratorSymbol) {
    let (a, b) = (t.i, t.j);
    if b.abs() < a.abs() {
        (rat_int(sign(parity(a).into())), GeneratorSymbol::canonical(b, a).unwrap())
    } else if a == b {
        (rat_int(1), GeneratorSymbol::canonical(a, a).unwrap())
    } else {
        (rat_int(-2), GeneratorSymbol::canonical(b, a).unwrap())
    }
}

fn add_rat(m: &mut RatWord, w: Word, c: Rational) {
    let slot = m.entry(w.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        m.remove(&w);
    }
}

/// `[ψ(a), ψ(b)] - ψ([a, b])` in the free algebra on the `τ`'s.
pub fn bracket_defect(a: BasisTag, b: BasisTag) -> RatWord {
    let (ca, ga) = psi(a);
    let (cb, gb) = psi(b);
    let s = rat_int(sign(u32::from(a.parity() & b.parity())));
    let mut out = RatWord::new();
    add_rat(&mut out, vec![Letter::T(ga), Letter::T(gb)], &ca * &cb);
    add_rat(&mut out, vec![Letter::T(gb), Letter::T(ga)], -(&ca * &cb) * s);
    for (t, c) in superbracket_pn(a, b) {
        let (cp, gp) = psi(t);
        add_rat(&mut out, vec![Letter::T(gp)], -(c * cp));
    }
    out
}

/// `ρ_1(τ_g)` from `ρ_1(t_g)`, requiring exact division.
pub fn rho1_tau(n: usize, g: GeneratorSymbol) -> Result<GradedOperator> {
    let t = rho1_raw(n).remove(&(g.i(), g.j())).unwrap();
    if g.is_diagonal() {
        let shifted = t.sub(&GradedOperator::identity(n, 1))?;
        let mut entries = Vec::new();
        for (&k, v) in shifted.entries() {
            entries.push((k, v.quotient_by_qminus1(1)?));
        }
        GradedOperator::new(n, 1, 0, entries)
    } else {
        let mut entries = Vec::new();
        for (&k, v) in t.entries() {
            entries.push((k, v.div_exact(&Scalar::epsilon())?));
        }
        GradedOperator::new(n, 1, t.parity(), entries)
    }
}

/// The explicit images of the rescaled generators in the vector representation.
pub fn expected_rho1_tau(n: usize, g: GeneratorSymbol) -> GradedOperator {
    let (i, j) = (g.i(), g.j());
    if i == j {
        let qinv = Scalar::q_pow(-1);
        elementary(n, i, i).unwrap().sub(&elementary(n, -i, -i).unwrap().scale(&qinv)).unwrap()
    } else if i == -j {
        elementary(n, -i, i).unwrap()
    } else {
        crate::periplectic::sf(n, j, i).unwrap().scale(&Scalar::from_int(sign(parity(i).into())))
    }
}

pub fn verify_classical_limit(n: usize) -> VerificationReport {
    let mut rb = ReportBuilder::new("classical-limit", "the q=1 limit of the rescaled algebra is U(p_n)").param("n", n);
    let rels = extract_relations(n);
    let spec = match specialized_relations(&rels) {
        Ok(s) => {
            rb.detail("coefficients in localization", true, format!("{} rescaled relations regular at q=1", s.len()));
            s
        }
        Err(e) => {
            rb.detail("coefficients in localization", false, e.to_string());
            return rb.finish();
        }
    };
    let mut span = WordSpan::default();
    for r in &spec {
        span.insert(r);
    }
    let generic = crate::uqpn::pbw::Straightener::from_relations(&rels).map(|s| s.relation_rank());
    rb.detail_result("specialized rank", generic, |g| {
        (*g == span.rank(), format!("rank at q=1 is {}, generic rank is {g}", span.rank()))
    });
    let tags = pn_tags(n);
    let mut bad = Vec::new();
    for a in &tags {
        for b in &tags {
            if !span.contains(&bracket_defect(*a, *b)) {
                bad.push(format!("({a},{b})"));
            }
        }
    }
    rb.detail(
        "bracket compatibility",
        bad.is_empty(),
        if bad.is_empty() { format!("[psi a, psi b] = psi [a,b] modulo relations for all {} pairs", tags.len() * tags.len()) } else { format!("fails on {}", bad.join(" ")) },
    );

    let mut explicit = true;
    for g in generators(n) {
        match rho1_tau(n, g) {
            Ok(op) if op == expected_rho1_tau(n, g) => {}
            _ => explicit = false,
        }
    }
    rb.detail("explicit images", explicit, "rho_1 of the rescaled generators matches the listed operators");

    let mut twisted = true;
    for (t, x) in pn_basis(n) {
        let (c, g) = psi(t);
        let Ok(img) = rho1_tau(n, g) else {
            twisted = false;
            continue;
        };
        let lhs = img.eval_at_one().scale(&Scalar::constant(c));
        let rhs = x.op().scale(&Scalar::from_int(sign(t.parity().into())));
        if lhs != rhs {
            twisted = false;
        }
    }
    rb.detail("twisted representation", twisted, "rho_1 psi(X) at q=1 equals (-1)^{p(X)} X");
    rb.finish()
}

fn tensor_in_tau(n: usize, g: GeneratorSymbol) -> TensorElement {
    let mut out = TensorElement::zero();
    let inv_eps = Frac::new(Scalar::one(), Scalar::epsilon()).unwrap();
    let inv_qm = Frac::new(Scalar::one(), Scalar::q_minus_one()).unwrap();
    let d = coproduct(n, g);
    for ((w1, w2), c) in d.terms() {
        let (Letter::T(a), Letter::T(b)) = (w1[0], w2[0]) else { unreachable!() };
        for (x, cx) in t_in_tau(a) {
            for (y, cy) in t_in_tau(b) {
                out.add_term(x.clone(), y, c * &Frac::from(&cx * &cy));
            }
        }
    }
    if g.is_diagonal() {
        out.add_term(vec![], vec![], Frac::from(Scalar::from_int(-1)));
    }
    let scale = if g.is_diagonal() { inv_qm } else { inv_eps };
    let mut scaled = TensorElement::zero();
    for ((a, b), c) in out.terms() {
        scaled.add_term(a.clone(), b.clone(), c * &scale);
    }
    scaled
}

/// `Δ(τ_g) - Δ(τ_g)°`, coefficients in `Q(q)`.
pub fn antisymmetrized_coproduct(n: usize, g: GeneratorSymbol) -> TensorElement {
    let d = tensor_in_tau(n, g);
    d.sub(&d.flip())
}

type WordPair = BTreeMap<(Word, Word), Rational>;

/// `(1/2) (c / (q - 1))|_{q=1}` for every coefficient.
pub fn cobracket_limit(n: usize, g: GeneratorSymbol) -> Result<WordPair> {
    let qm = Frac::from(Scalar::q_minus_one());
    let mut out = WordPair::new();
    for ((a, b), c) in antisymmetrized_coproduct(n, g).terms() {
        let v = c.div(&qm)?.eval_at_one()? * rat(1, 2);
        if !v.is_zero() {
            out.insert((a.clone(), b.clone()), v);
        }
    }
    Ok(out)
}

/// `δ(τ̄_g)` pushed through `ψ ⊗ ψ`.
pub fn cobracket_reference(g: GeneratorSymbol) -> WordPair {
    let (i, j) = (g.i(), g.j());
    let (pre, tag) = if i.abs() < j.abs() {
        (rat_int(sign(parity(j).into())), BasisTag { i: j, j: i })
    } else {
        (rat(-1, 2), BasisTag { i: -i, j: i })
    };
    let mut out = WordPair::new();
    for ((t1, t2), c) in cobracket(tag) {
        let (c1, g1) = psi(t1);
        let (c2, g2) = psi(t2);
        let key = (vec![Letter::T(g1)], vec![Letter::T(g2)]);
        let slot = out.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += &pre * c * c1 * c2;
        if slot.is_zero() {
            out.remove(&key);
        }
    }
    out
}

pub fn verify_cobracket_limit(n: usize) -> VerificationReport {
    let mut rb = ReportBuilder::new("cobracket-limit", "the q=1 limit of the coproduct induces the cobracket").param("n", n);
    let mut diag_ok = true;
    let mut matched = 0usize;
    let mut off = 0usize;
    let mut bad = Vec::new();
    for g in generators(n) {
        if g.is_diagonal() {
            if !antisymmetrized_coproduct(n, g).is_zero() {
                diag_ok = false;
            }
            continue;
        }
        off += 1;
        match cobracket_limit(n, g) {
            Ok(l) if l == cobracket_reference(g) => matched += 1,
            Ok(_) => bad.push(g.to_string()),
            Err(e) => bad.push(format!("{g}: {e}")),
        }
    }
    rb.detail("diagonal generators", diag_ok, "both sides vanish for i = j");
    rb.detail(
        "off-diagonal generators",
        matched == off,
        if bad.is_empty() { format!("{matched} of {off} generators match") } else { format!("mismatch: {}", bad.join(", ")) },
    );
    rb.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits_small() {
        for n in 1..=2 {
            let r = verify_classical_limit(n);
            assert!(r.pass, "{}", r.text_line());
            let r = verify_cobracket_limit(n);
            assert!(r.pass, "{}", r.text_line());
        }
    }

    #[test]
    fn explicit_list_n1() {
        let g = GeneratorSymbol::canonical(1, -1).unwrap();
        assert_eq!(rho1_tau(1, g).unwrap(), elementary(1, -1, 1).unwrap());
        let d = GeneratorSymbol::canonical(1, 1).unwrap();
        let want = elementary(1, 1, 1).unwrap().sub(&elementary(1, -1, -1).unwrap().scale(&Scalar::q_pow(-1))).unwrap();
        assert_eq!(rho1_tau(1, d).unwrap(), want);
    }
}
