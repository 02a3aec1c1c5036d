//! The periplectic q-Brauer algebra and its action on tensor space.
//!
//! The abstract algebra is handled only through its presentation: words in
//! the tokens `t_i`, `c_i` are evaluated on `C(n|n)^{⊗l}` with `t_i ↦ P_i S_{i,i+1}`
//! and `c_i ↦ 𝔠_i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{flatten_constant, flatten_frac, operator_span, OperatorSpan};
use crate::report::{residual_summary, ReportBuilder, VerificationReport};
use crate::scalar::Scalar;
use crate::smatrix::build_s;
use crate::superspace::{parity, sign, super_permutation, GradedOperator, SuperSpace};
use crate::uqpn::representation::{invert_diagonal, Representation};
use crate::uqpn::symbol::generators;

/// A generator of the q-Brauer algebra. Tokens sort with every `t` before every `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Token {
    T(usize),
    C(usize),
}

impl Token {
    pub fn position(self) -> usize {
        match self {
            Token::T(i) | Token::C(i) => i,
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::T(i) => write!(f, "t{i}"),
            Token::C(i) => write!(f, "c{i}"),
        }
    }
}

impl FromStr for Token {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad token {s:?}, expected tK or cK"));
        let (kind, rest) = s.split_at(s.char_indices().nth(1).map(|(i, _)| i).ok_or_else(bad)?);
        let i: usize = rest.parse().map_err(|_| bad())?;
        match kind {
            "t" => Ok(Token::T(i)),
            "c" => Ok(Token::C(i)),
            _ => Err(bad()),
        }
    }
}

/// All tokens for `l` legs, in enumeration order.
pub fn tokens(l: usize) -> Vec<Token> {
    let mut out: Vec<Token> = (1..l).map(Token::T).collect();
    out.extend((1..l).map(Token::C));
    out
}

/// Parses a whitespace-separated word such as `"t1 c2 t1"`.
pub fn parse_brauer_word(l: usize, s: &str) -> Result<Vec<Token>> {
    s.split_whitespace()
        .map(|t| {
            let tok: Token = t.parse()?;
            if tok.position() == 0 || tok.position() >= l {
                return Err(Error::IndexOutOfRange(format!("{tok} on {l} legs")));
            }
            Ok(tok)
        })
        .collect()
}

pub fn format_brauer_word(w: &[Token]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
}

/// A coefficient times a word in the tokens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerWord {
    pub tokens: Vec<Token>,
    pub coeff: Scalar,
}

impl BrauerWord {
    pub fn new(tokens: Vec<Token>, coeff: Scalar) -> Self {
        BrauerWord { tokens, coeff }
    }

    pub fn word(tokens: &[Token]) -> Self {
        BrauerWord { tokens: tokens.to_vec(), coeff: Scalar::one() }
    }
}

/// A defining relation, stated as `Σ terms = 0`.
#[derive(Clone, Debug)]
pub struct BrauerRelation {
    pub name: String,
    pub terms: Vec<BrauerWord>,
}

impl BrauerRelation {
    fn new(name: String, terms: Vec<(Scalar, Vec<Token>)>) -> Self {
        BrauerRelation { name, terms: terms.into_iter().map(|(c, w)| BrauerWord::new(w, c)).collect() }
    }

    pub fn specialize_at_one(&self) -> BrauerRelation {
        BrauerRelation {
            name: self.name.clone(),
            terms: self
                .terms
                .iter()
                .map(|w| BrauerWord::new(w.tokens.clone(), Scalar::constant(w.coeff.eval_at_one())))
                .collect(),
        }
    }
}

/// The defining relations of the algebra on `l` strands.
pub fn defining_relations(l: usize) -> Vec<BrauerRelation> {
    use Token::{C, T};
    let one = Scalar::one;
    let m1 = || Scalar::from_int(-1);
    let q = Scalar::q;
    let qi = || Scalar::q_pow(-1);
    let eps = Scalar::epsilon;
    let mut out = Vec::new();
    for i in 1..l {
        out.push(BrauerRelation::new(
            format!("(t{i}-q)(t{i}+q^-1)"),
            vec![(one(), vec![T(i), T(i)]), (&qi() - &q(), vec![T(i)]), (m1(), vec![])],
        ));
        out.push(BrauerRelation::new(format!("c{i}^2"), vec![(one(), vec![C(i), C(i)])]));
        out.push(BrauerRelation::new(format!("c{i} t{i} = -q^-1 c{i}"), vec![(one(), vec![C(i), T(i)]), (qi(), vec![C(i)])]));
        out.push(BrauerRelation::new(format!("t{i} c{i} = q c{i}"), vec![(one(), vec![T(i), C(i)]), (-q(), vec![C(i)])]));
    }
    for i in 1..l {
        for j in (i + 2)..l {
            for (a, b) in [(T(i), T(j)), (T(i), C(j)), (C(i), T(j)), (C(i), C(j))] {
                out.push(BrauerRelation::new(format!("{a} {b} = {b} {a}"), vec![(one(), vec![a, b]), (m1(), vec![b, a])]));
            }
        }
    }
    for i in 1..l.saturating_sub(1) {
        let j = i + 1;
        out.push(BrauerRelation::new(
            format!("t{i} t{j} t{i} = t{j} t{i} t{j}"),
            vec![(one(), vec![T(i), T(j), T(i)]), (m1(), vec![T(j), T(i), T(j)])],
        ));
        out.push(BrauerRelation::new(format!("c{j} c{i} c{j} = -c{j}"), vec![(one(), vec![C(j), C(i), C(j)]), (one(), vec![C(j)])]));
        out.push(BrauerRelation::new(format!("c{i} c{j} c{i} = -c{i}"), vec![(one(), vec![C(i), C(j), C(i)]), (one(), vec![C(i)])]));
        out.push(BrauerRelation::new(
            format!("t{i} c{j} c{i} = -t{j} c{i} + (q-q^-1) c{j} c{i}"),
            vec![(one(), vec![T(i), C(j), C(i)]), (one(), vec![T(j), C(i)]), (-eps(), vec![C(j), C(i)])],
        ));
        out.push(BrauerRelation::new(
            format!("c{j} c{i} t{j} = -c{j} t{i} + (q-q^-1) c{j} c{i}"),
            vec![(one(), vec![C(j), C(i), T(j)]), (one(), vec![C(j), T(i)]), (-eps(), vec![C(j), C(i)])],
        ));
    }
    out
}

/// The evaluation map `ϑ: V ⊗ V → C(q)`, `e_a ⊗ e_b ↦ δ_{a,-b} (-1)^{p(a)}`.
pub fn theta_map(n: usize) -> GradedOperator {
    let sp = SuperSpace::new(n);
    let entries = sp.indices().into_iter().map(|a| ((0, sp.encode(&[a, -a])), Scalar::from_int(sign(parity(a).into()))));
    GradedOperator::rectangular(n, 0, 2, 1, entries).expect("theta is odd")
}

/// The coevaluation map `ε: C(q) → V ⊗ V`, `1 ↦ Σ e_a ⊗ e_{-a}`.
pub fn epsilon_map(n: usize) -> GradedOperator {
    let sp = SuperSpace::new(n);
    let entries = sp.indices().into_iter().map(|a| ((sp.encode(&[a, -a]), 0), Scalar::one()));
    GradedOperator::rectangular(n, 2, 0, 1, entries).expect("epsilon is odd")
}

/// `𝔠 = Σ (-1)^{p(a)p(b)} E_ab ⊗ E_{-a,-b}`.
pub fn build_c(n: usize) -> GradedOperator {
    let sp = SuperSpace::new(n);
    let mut terms = Vec::new();
    for a in sp.indices() {
        for b in sp.indices() {
            terms.push((vec![(a, b), (-a, -b)], Scalar::from_int(sign((parity(a) & parity(b)).into()))));
        }
    }
    GradedOperator::from_units(n, 2, terms).expect("c is graded")
}

/// `P S` on two legs.
pub fn ps_operator(n: usize) -> GradedOperator {
    super_permutation(n).compose(&build_s(n).op).expect("square 2-leg operators")
}

/// The expansion of `PS` into eight families of matrix-unit tensors.
pub fn ps_formula(n: usize) -> GradedOperator {
    let sp = SuperSpace::new(n);
    let ni = n as i32;
    let qm1 = Scalar::q_minus_one();
    let qim1 = &Scalar::q_pow(-1) - &Scalar::one();
    let eps = Scalar::epsilon();
    let mut terms: Vec<(Vec<(i32, i32)>, Scalar)> = Vec::new();
    for i in sp.indices() {
        for j in sp.indices() {
            terms.push((vec![(i, j), (j, i)], Scalar::from_int(sign(parity(j).into()))));
        }
    }
    for i in 1..=ni {
        terms.push((vec![(-i, i), (i, -i)], qm1.clone()));
        terms.push((vec![(i, i), (i, i)], qm1.clone()));
        terms.push((vec![(i, -i), (-i, i)], -&qim1));
        terms.push((vec![(-i, -i), (-i, -i)], -&qim1));
    }
    for i in -ni..0 {
        terms.push((vec![(-i, -i), (i, i)], eps.clone()));
    }
    for i in sp.indices() {
        for j in sp.indices() {
            if j.abs() < i.abs() {
                terms.push((vec![(j, j), (i, i)], eps.clone()));
                let s = Scalar::from_int(sign((parity(i) & parity(j)).into()));
                terms.push((vec![(j, i), (-j, -i)], &eps * &s));
            }
        }
    }
    GradedOperator::from_units(n, 2, terms).expect("formula is graded")
}

/// Token images on `l` legs.
#[derive(Clone, Debug)]
pub struct BrauerRep {
    n: usize,
    l: usize,
    t: Vec<GradedOperator>,
    c: Vec<GradedOperator>,
}

impl BrauerRep {
    pub fn new(n: usize, l: usize) -> Result<Self> {
        if l < 2 {
            return Err(Error::ShapeMismatch("the q-Brauer action needs at least two legs".into()));
        }
        let ps = ps_operator(n);
        let c = build_c(n);
        let t = (1..l).map(|i| ps.embed_legs(i, l)).collect::<Result<Vec<_>>>()?;
        let c = (1..l).map(|i| c.embed_legs(i, l)).collect::<Result<Vec<_>>>()?;
        Ok(BrauerRep { n, l, t, c })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn legs(&self) -> usize {
        self.l
    }

    pub fn image(&self, tok: Token) -> Result<&GradedOperator> {
        let i = tok.position();
        if i == 0 || i >= self.l {
            return Err(Error::IndexOutOfRange(format!("{tok} on {} legs", self.l)));
        }
        Ok(match tok {
            Token::T(_) => &self.t[i - 1],
            Token::C(_) => &self.c[i - 1],
        })
    }

    pub fn generators(&self) -> Vec<(Token, GradedOperator)> {
        tokens(self.l).into_iter().map(|t| (t, self.image(t).unwrap().clone())).collect()
    }

    /// All token images specialized at `q = 1`.
    pub fn at_one(&self) -> BrauerRep {
        BrauerRep {
            n: self.n,
            l: self.l,
            t: self.t.iter().map(|o| o.eval_at_one()).collect(),
            c: self.c.iter().map(|o| o.eval_at_one()).collect(),
        }
    }

    pub fn evaluate_word(&self, w: &[Token]) -> Result<GradedOperator> {
        let mut acc = GradedOperator::identity(self.n, self.l);
        for &tok in w {
            acc = acc.compose(self.image(tok)?)?;
        }
        Ok(acc)
    }

    pub fn evaluate(&self, w: &BrauerWord) -> Result<GradedOperator> {
        Ok(self.evaluate_word(&w.tokens)?.scale(&w.coeff))
    }

    pub fn evaluate_sum(&self, terms: &[BrauerWord]) -> Result<GradedOperator> {
        let mut acc = GradedOperator::zero(self.n, self.l);
        for w in terms {
            acc = acc.add(&self.evaluate(w)?)?;
        }
        Ok(acc)
    }

    /// Residual of each defining relation.
    pub fn relation_residuals(&self, rels: &[BrauerRelation]) -> Result<Vec<(String, GradedOperator)>> {
        rels.iter().map(|r| Ok((r.name.clone(), self.evaluate_sum(&r.terms)?))).collect()
    }

    /// Checks every defining relation on the images.
    pub fn certify(&self) -> VerificationReport {
        let mut rb = ReportBuilder::new("brauer-relations", "token images satisfy the defining relations")
            .param("n", self.n)
            .param("l", self.l);
        push_relation_details(&mut rb, self.relation_residuals(&defining_relations(self.l)));
        rb.finish()
    }
}

fn push_relation_details(rb: &mut ReportBuilder, res: Result<Vec<(String, GradedOperator)>>) {
    match res {
        Ok(list) => {
            for (name, r) in list {
                rb.detail(name, r.is_zero(), residual_summary(&r));
            }
        }
        Err(e) => rb.detail("evaluation", false, format!("error: {e}")),
    }
}

/// Basis of the image algebra, over `Q(q)`.
pub fn image_span(rep: &BrauerRep) -> Result<OperatorSpan<Token>> {
    operator_span(GradedOperator::identity(rep.n, rep.l), &rep.generators(), flatten_frac, usize::MAX)
}

/// Basis of the image algebra of a `q`-free representation, over `Q`.
pub fn image_span_constant(rep: &BrauerRep) -> Result<OperatorSpan<Token>> {
    operator_span(GradedOperator::identity(rep.n, rep.l), &rep.generators(), flatten_constant, usize::MAX)
}

fn zero_check(rb: &mut ReportBuilder, name: &str, r: Result<GradedOperator>) {
    rb.detail_result(name, r, |r| (r.is_zero(), residual_summary(r)));
}

/// The two-leg identities used on the way to the relations.
fn two_leg_identities(rb: &mut ReportBuilder, n: usize) {
    let c = build_c(n);
    let s = build_s(n).op;
    let p = super_permutation(n);
    let id = GradedOperator::identity(n, 2);
    let qi = Scalar::q_pow(-1);
    let comp = epsilon_map(n).compose(&theta_map(n));
    zero_check(rb, "c = eps theta", comp.and_then(|x| x.sub(&c)));
    zero_check(rb, "c S = q^-1 c", c.compose(&s).and_then(|x| x.sub(&c.scale(&qi))));
    zero_check(
        rb,
        "(S-1) c = (q-1) c",
        s.sub(&id).and_then(|x| x.compose(&c)).and_then(|x| x.sub(&c.scale(&Scalar::q_minus_one()))),
    );
    zero_check(rb, "c P = -c", c.compose(&p).and_then(|x| x.add(&c)));
    zero_check(rb, "P c = c", p.compose(&c).and_then(|x| x.sub(&c)));
    zero_check(rb, "P^2 = 1", p.compose(&p).and_then(|x| x.sub(&id)));
}

/// Relations of the q-Brauer action on `l` legs plus the two-leg identities,
/// and for `n ≤ 2` the commutation with the quantum group action.
pub fn verify_brauer(n: usize, l: usize) -> VerificationReport {
    let mut rb = ReportBuilder::new("brauer", "t_i -> P_i S_{i,i+1}, c_i -> c_i define a q-Brauer module").param("n", n).param("l", l);
    two_leg_identities(&mut rb, n);
    zero_check(&mut rb, "PS formula", ps_formula(n).sub(&ps_operator(n)));
    match BrauerRep::new(n, l) {
        Ok(rep) => {
            push_relation_details(&mut rb, rep.relation_residuals(&defining_relations(l)));
            if n <= 2 {
                commutes_with_quantum_group(&mut rb, &rep);
            }
        }
        Err(e) => rb.detail("construction", false, format!("error: {e}")),
    }
    rb.finish()
}

fn commutes_with_quantum_group(rb: &mut ReportBuilder, rep: &BrauerRep) {
    let rho = match Representation::new(rep.n, rep.l) {
        Ok(r) => r,
        Err(e) => return rb.detail("commutes with quantum group", false, format!("error: {e}")),
    };
    let mut bad = Vec::new();
    let mut checked = 0usize;
    for g in generators(rep.n) {
        for (tok, op) in rep.generators() {
            checked += 1;
            match op.supercommutator(rho.image(g)) {
                Ok(r) if r.is_zero() => {}
                _ => bad.push(format!("{tok}/{g}")),
            }
        }
    }
    rb.detail(
        "commutes with quantum group",
        bad.is_empty(),
        if bad.is_empty() { format!("{checked} token/generator pairs commute") } else { format!("fail at {}", bad.join(" ")) },
    );
}

/// `ϑ` and `ε` intertwine the action on `V ⊗ V` with the trivial action.
pub fn verify_module_homs(n: usize) -> VerificationReport {
    let mut rb = ReportBuilder::new("module-homs", "theta and eps are module maps to and from the trivial module").param("n", n);
    let rho = match Representation::new(n, 2) {
        Ok(r) => r,
        Err(e) => {
            rb.detail("representation", false, format!("error: {e}"));
            return rb.finish();
        }
    };
    let th = theta_map(n);
    let ep = epsilon_map(n);
    let trivial = |scale: i64| GradedOperator::rectangular(n, 0, 0, 0, [((0, 0), Scalar::from_int(scale))]).unwrap();
    let mut cases: Vec<(String, GradedOperator, i64)> = Vec::new();
    for g in generators(n) {
        cases.push((g.to_string(), rho.image(g).clone(), i64::from(g.is_diagonal())));
        if g.is_diagonal() {
            match invert_diagonal(rho.image(g)) {
                Ok(inv) => cases.push((format!("{g}^-1"), inv, 1)),
                Err(e) => rb.detail(format!("{g}^-1"), false, format!("error: {e}")),
            }
        }
    }
    let sp = SuperSpace::new(n);
    for i in sp.indices() {
        if i > 0 {
            cases.push((format!("t({i},{})", -i), rho.raw_image(i, -i).clone(), 0));
        }
    }
    let mut bad_theta = Vec::new();
    let mut bad_eps = Vec::new();
    for (name, op, delta) in &cases {
        let t0 = trivial(*delta);
        let ok_theta = th.compose(op).and_then(|a| t0.compose(&th).and_then(|b| a.sub(&b))).map(|r| r.is_zero());
        let ok_eps = op.compose(&ep).and_then(|a| ep.compose(&t0).and_then(|b| a.sub(&b))).map(|r| r.is_zero());
        if !matches!(ok_theta, Ok(true)) {
            bad_theta.push(name.clone());
        }
        if !matches!(ok_eps, Ok(true)) {
            bad_eps.push(name.clone());
        }
    }
    let summary = |bad: &Vec<String>| {
        if bad.is_empty() {
            format!("{} generators intertwine", cases.len())
        } else {
            format!("fail at {}", bad.join(" "))
        }
    };
    rb.detail("theta", bad_theta.is_empty(), summary(&bad_theta));
    rb.detail("eps", bad_eps.is_empty(), summary(&bad_eps));
    let tr = th.compose(&ep);
    rb.detail_result("theta eps = 0", tr, |r| (r.is_zero(), residual_summary(r)));
    rb.finish()
}

/// The eight-family expansion of `PS` against the product.
pub fn verify_ps_formula(n: usize) -> VerificationReport {
    let mut rb = ReportBuilder::new("ps-formula", "eight-family expansion of PS").param("n", n);
    let ps = ps_operator(n);
    zero_check(&mut rb, "expansion", ps_formula(n).sub(&ps));
    zero_check(&mut rb, "PS at q=1 is P", Ok(ps.eval_at_one()).and_then(|x| x.sub(&super_permutation(n))));
    rb.finish()
}

/// The token images at `q = 1` satisfy the relations at `q = 1`; the image
/// dimension is compared with the generic one.
pub fn verify_q1_degeneration(n: usize, l: usize) -> VerificationReport {
    let mut rb = ReportBuilder::new("brauer-q1", "q = 1 images satisfy the q = 1 relations").param("n", n).param("l", l);
    let rep = match BrauerRep::new(n, l) {
        Ok(r) => r,
        Err(e) => {
            rb.detail("construction", false, format!("error: {e}"));
            return rb.finish();
        }
    };
    let at1 = rep.at_one();
    let rels: Vec<BrauerRelation> = defining_relations(l).iter().map(|r| r.specialize_at_one()).collect();
    push_relation_details(&mut rb, at1.relation_residuals(&rels));
    let t_sq = (1..l).all(|i| {
        let t = at1.image(Token::T(i)).unwrap();
        t.compose(t).map(|x| x == GradedOperator::identity(n, l)).unwrap_or(false)
    });
    rb.detail("t_i^2 = 1 at q=1", t_sq, "the braid generators become involutions");
    if SuperSpace::new(n).dim_legs(l) <= 216 {
        let generic = image_span(&rep).map(|s| s.dim());
        let special = image_span_constant(&at1).map(|s| s.dim());
        match (generic, special) {
            (Ok(g), Ok(s)) => {
                rb.set_param("image_dim", g);
                rb.set_param("image_dim_q1", s);
                rb.detail("image dimension at q=1", g == s, format!("generic {g}, at q=1 {s}"));
            }
            (Err(e), _) | (_, Err(e)) => rb.detail("image dimension at q=1", false, format!("error: {e}")),
        }
    }
    rb.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_values() {
        let n = 1;
        let th = theta_map(n);
        let sp = SuperSpace::new(n);
        assert_eq!(th.entry(0, sp.encode(&[1, -1])), Scalar::one());
        assert_eq!(th.entry(0, sp.encode(&[-1, 1])), Scalar::from_int(-1));
        assert!(th.entry(0, sp.encode(&[1, 1])).is_zero());
        for n in 1..=3 {
            assert!(theta_map(n).compose(&epsilon_map(n)).unwrap().is_zero());
        }
    }

    #[test]
    fn c_on_basis_vectors() {
        let n = 2;
        let c = build_c(n);
        let sp = SuperSpace::new(n);
        assert!(c.apply_basis(&[1, 1]).is_empty());
        let v = c.apply_basis(&[1, -1]);
        assert_eq!(v.len(), 4);
        for x in sp.indices() {
            assert_eq!(v[&sp.encode(&[x, -x])], Scalar::one());
        }
        assert!(c.compose(&c).unwrap().is_zero());
        assert_eq!(epsilon_map(n).compose(&theta_map(n)).unwrap(), c);
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_brauer_word(3, "t1 c2 t1").unwrap(), vec![Token::T(1), Token::C(2), Token::T(1)]);
        assert!(parse_brauer_word(3, "t3").is_err());
        assert!(parse_brauer_word(3, "x1").is_err());
        assert!(parse_brauer_word(3, "").unwrap().is_empty());
        assert_eq!(format_brauer_word(&[Token::C(1), Token::T(2)]), "c1 t2");
    }

    #[test]
    fn evaluation_basics() {
        let rep = BrauerRep::new(1, 2).unwrap();
        assert_eq!(rep.evaluate_word(&[]).unwrap(), GradedOperator::identity(1, 2));
        assert!(rep.evaluate_word(&[Token::C(1), Token::C(1)]).unwrap().is_zero());
    }

    #[test]
    fn relations_hold_small() {
        for (n, l) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
            let r = verify_brauer(n, l);
            assert!(r.pass, "{}", r.text_line());
        }
    }

    #[test]
    fn relation_count() {
        assert_eq!(defining_relations(2).len(), 4);
        assert_eq!(defining_relations(3).len(), 8 + 5);
        assert_eq!(defining_relations(4).len(), 12 + 4 + 10);
    }

    #[test]
    fn ps_formula_and_module_maps() {
        for n in 1..=2 {
            assert!(verify_ps_formula(n).pass);
            let r = verify_module_homs(n);
            assert!(r.pass, "{}", r.text_line());
        }
    }

    #[test]
    fn image_dimension_two_legs() {
        let rep = BrauerRep::new(2, 2).unwrap();
        assert_eq!(image_span(&rep).unwrap().dim(), 3);
        let r = verify_q1_degeneration(2, 2);
        assert!(r.pass, "{}", r.text_line());
    }
}
