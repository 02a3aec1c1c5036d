//! The fake Casimir element `s`, the classical Yang-Baxter equation and the
//! supercobracket `δ` of `p_n`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::periplectic::{
    assemble, butterfly_basis, coordinates, normalize_tag, pn_basis, pn_tags, sf_units, superbracket_pn,
    supertrace_form, BasisTag, PnCoords,
};
use crate::report::{residual_summary, ReportBuilder, VerificationReport};
use crate::scalar::{rat, rat_int, Rational, Scalar};
use crate::superspace::{parity, sign, GradedOperator};

/// A matrix unit `E_ab`, as the pair `(a, b)`.
pub type Unit = (i32, i32);

/// Abstract element of `gl ⊗ gl` in the basis `E_u ⊗ E_v`.
pub type UnitTensor = BTreeMap<(Unit, Unit), Rational>;

/// Element of `p_n ⊗ p_n` in the basis `𝖤_t ⊗ 𝖤_t'`.
pub type PnTensor = BTreeMap<(BasisTag, BasisTag), Rational>;

fn tag_parity(t: BasisTag) -> u8 {
    t.parity()
}

fn accumulate<K: Ord>(m: &mut BTreeMap<K, Rational>, k: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = m.entry(k).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        m.retain(|_, v| !v.is_zero());
    }
}

/// A 2-leg operator with rational entries, optionally remembering an
/// expansion `Σ c E_u ⊗ E_v`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoTensor {
    pub value: GradedOperator,
    pub expansion: Option<UnitTensor>,
}

impl TwoTensor {
    pub fn from_expansion(n: usize, expansion: UnitTensor) -> Result<Self> {
        let value = unit_tensor_operator(n, &expansion)?;
        Ok(TwoTensor { value, expansion: Some(expansion) })
    }

    /// Checks that the stored expansion assembles to `value`.
    pub fn is_consistent(&self) -> bool {
        match &self.expansion {
            None => true,
            Some(e) => unit_tensor_operator(self.value.n(), e).map(|v| v == self.value).unwrap_or(false),
        }
    }
}

/// The 2-leg operator of an abstract tensor, with Koszul signs.
pub fn unit_tensor_operator(n: usize, t: &UnitTensor) -> Result<GradedOperator> {
    GradedOperator::from_units(n, 2, t.iter().map(|((u, v), c)| (vec![*u, *v], Scalar::constant(c.clone()))))
}

/// Abstract tensor of a 2-leg operator.
pub fn operator_unit_tensor(op: &GradedOperator) -> Result<UnitTensor> {
    let mut out = UnitTensor::new();
    for (units, c) in op.to_units() {
        let c = c.as_constant().ok_or_else(|| Error::NotGraded("q-dependent entry".into()))?;
        accumulate(&mut out, (units[0], units[1]), c);
    }
    Ok(out)
}

fn add_product(out: &mut UnitTensor, a: &[(Unit, Rational)], b: &[(Unit, Rational)], c: &Rational) {
    for (u, x) in a {
        for (v, y) in b {
            accumulate(out, (*u, *v), c * x * y);
        }
    }
}

fn ebar(i: i32) -> Vec<(Unit, Rational)> {
    vec![((i, i), rat_int(1)), ((-i, -i), rat_int(1))]
}

/// The fake Casimir element `s`, first factors in `p_n`, second in `b_n`.
pub fn fake_casimir(n: usize) -> TwoTensor {
    let mut t = UnitTensor::new();
    let ni = n as i32;
    let idx: Vec<i32> = (-ni..0).chain(1..=ni).collect();
    for &i in &idx {
        for &j in &idx {
            if j.abs() < i.abs() {
                add_product(&mut t, &sf_units(i, j), &[((j, i), rat_int(1))], &rat_int(sign(parity(j).into())));
            }
        }
    }
    for i in 1..=ni {
        add_product(&mut t, &sf_units(i, i), &ebar(i), &rat(1, 2));
        add_product(&mut t, &sf_units(-i, i), &[((i, -i), rat_int(1))], &rat(1, 2));
    }
    TwoTensor::from_expansion(n, t).expect("valid indices")
}

/// `s` as a list of `(X_a, Y_a)` with `X_a ∈ p_n` and `Y_a ∈ b_n`.
pub fn fake_casimir_factors(n: usize) -> Vec<(GradedOperator, GradedOperator)> {
    let ni = n as i32;
    let idx: Vec<i32> = (-ni..0).chain(1..=ni).collect();
    let one = |units: Vec<(Unit, Rational)>| {
        GradedOperator::from_units(n, 1, units.into_iter().map(|(u, c)| (vec![u], Scalar::constant(c)))).unwrap()
    };
    let mut out = Vec::new();
    for &i in &idx {
        for &j in &idx {
            if j.abs() < i.abs() {
                let c = Scalar::from_int(sign(parity(j).into()));
                out.push((one(sf_units(i, j)).scale(&c), one(vec![((j, i), rat_int(1))])));
            }
        }
    }
    for i in 1..=ni {
        let h = Scalar::constant(rat(1, 2));
        out.push((one(sf_units(i, i)).scale(&h), one(ebar(i))));
        out.push((one(sf_units(-i, i)).scale(&h), one(vec![((i, -i), rat_int(1))])));
    }
    out
}

/// `C = Σ (E_ii + E_{-i,-i}) ⊗ (E_ii + E_{-i,-i})`.
pub fn build_c(n: usize) -> TwoTensor {
    let mut t = UnitTensor::new();
    for i in 1..=n as i32 {
        add_product(&mut t, &ebar(i), &ebar(i), &rat_int(1));
    }
    TwoTensor::from_expansion(n, t).expect("valid indices")
}

/// `[r12, r13] + [r12, r23] + [r13, r23]` for an even 2-leg operator.
pub fn cybe_residual(r: &GradedOperator) -> Result<GradedOperator> {
    let r12 = r.embed_pair(1, 2, 3)?;
    let r13 = r.embed_pair(1, 3, 3)?;
    let r23 = r.embed_pair(2, 3, 3)?;
    r12.supercommutator(&r13)?.add(&r12.supercommutator(&r23)?)?.add(&r13.supercommutator(&r23)?)
}

pub fn verify_cybe(n: usize) -> VerificationReport {
    let mut rb = ReportBuilder::new("cybe", "s solves the classical Yang-Baxter equation").param("n", n);
    let s = fake_casimir(n);
    rb.detail("s consistent", s.is_consistent(), "expansion assembles to the stored operator");
    rb.detail("s even", s.value.parity() == 0, "s is an even operator");
    rb.detail_result("cybe residual", cybe_residual(&s.value), |res| (res.is_zero(), residual_summary(res)));
    rb.finish()
}

/// Closed-form supercobracket of `𝖤_ij` in the `𝖤 ⊗ 𝖤` basis.
pub fn cobracket(a: BasisTag) -> PnTensor {
    let (i, j) = (a.i, a.j);
    let n = i.abs().max(j.abs());
    let p = |x: i32| u32::from(parity(x));
    let sg = |k: u32| rat_int(sign(k));
    let mut o = PnTensor::new();
    let mut term = |a: i32, b: i32, c: i32, d: i32, coef: Rational| {
        if coef.is_zero() {
            return;
        }
        if let (Some((x, tx)), Some((y, ty))) = (normalize_tag(a, b), normalize_tag(c, d)) {
            accumulate(&mut o, (tx, ty), coef * rat_int(x * y));
        }
    };
    let half = rat(1, 2);
    for k in (-n..0).chain(1..=n) {
        if j.abs() < k.abs() && k.abs() < i.abs() {
            term(i, k, k, j, sg(p(k) + 1));
            term(k, j, i, k, -sg(p(k) + 1) * sg((p(i) + p(k)) * (p(j) + p(k))));
        }
    }
    for (x, cf) in [(i, sg(p(i))), (j, -sg(p(j)))] {
        term(x, x, i, j, -&half * &cf);
        term(i, j, x, x, &half * &cf);
    }
    if i < 0 {
        term(i, -i, -i, j, -half.clone());
        term(-i, j, i, -i, &half * sg(p(j)));
    }
    if j > 0 {
        term(-j, j, i, -j, &half * sg(p(i)));
        term(i, -j, -j, j, half.clone());
    }
    o
}

/// `𝖤 ⊗ 𝖤` coordinates of an abstract tensor; errors unless it lies in `p_n ⊗ p_n`.
pub fn pn_tensor_coordinates(n: usize, t: &UnitTensor) -> Result<PnTensor> {
    let mut by_second: BTreeMap<Unit, Vec<(Unit, Rational)>> = BTreeMap::new();
    for ((u, v), c) in t {
        by_second.entry(*v).or_default().push((*u, c.clone()));
    }
    let one = |terms: Vec<(Unit, Rational)>| {
        GradedOperator::from_units(n, 1, terms.into_iter().map(|(u, c)| (vec![u], Scalar::constant(c))))
    };
    let mut by_first: BTreeMap<BasisTag, Vec<(Unit, Rational)>> = BTreeMap::new();
    for (v, firsts) in by_second {
        for (tag, c) in coordinates(&one(firsts)?)? {
            by_first.entry(tag).or_default().push((v, c));
        }
    }
    let mut out = PnTensor::new();
    for (t1, seconds) in by_first {
        for (t2, c) in coordinates(&one(seconds)?)? {
            accumulate(&mut out, (t1, t2), c);
        }
    }
    if pn_tensor_units(&out) != *t {
        return Err(Error::NotGraded("tensor is not in p_n ⊗ p_n".into()));
    }
    Ok(out)
}

/// Expands `Σ c 𝖤_t ⊗ 𝖤_t'` in matrix units.
pub fn pn_tensor_units(t: &PnTensor) -> UnitTensor {
    let mut out = UnitTensor::new();
    for ((a, b), c) in t {
        add_product(&mut out, &sf_units(a.i, a.j), &sf_units(b.i, b.j), c);
    }
    out
}

/// `[X ⊗ 1 + 1 ⊗ X, s]` on 2-leg operators.
pub fn cobracket_via_s(n: usize, x: &GradedOperator) -> Result<GradedOperator> {
    let s = fake_casimir(n).value;
    let id = GradedOperator::identity(n, 1);
    let lifted = x.koszul_tensor(&id)?.add(&id.koszul_tensor(x)?)?;
    lifted.supercommutator(&s)
}

/// The signed flip `(a ⊗ b)° = (-1)^{p(a)p(b)} b ⊗ a`.
pub fn signed_flip(t: &PnTensor) -> PnTensor {
    let mut out = PnTensor::new();
    for ((a, b), c) in t {
        let s = sign(u32::from(tag_parity(*a) & tag_parity(*b)));
        accumulate(&mut out, (*b, *a), c * rat_int(s));
    }
    out
}

/// `δ` extended linearly to coordinates.
pub fn cobracket_linear(x: &PnCoords) -> PnTensor {
    let mut out = PnTensor::new();
    for (t, c) in x {
        for (k, v) in cobracket(*t) {
            accumulate(&mut out, k, c * v);
        }
    }
    out
}

/// `(1 + σ + σ²)(δ ⊗ 1)δ(X)` with `σ(a⊗b⊗c) = (-1)^{p(a)(p(b)+p(c))} b⊗c⊗a`.
pub fn co_jacobi_residual(a: BasisTag) -> BTreeMap<(BasisTag, BasisTag, BasisTag), Rational> {
    let mut triple: BTreeMap<(BasisTag, BasisTag, BasisTag), Rational> = BTreeMap::new();
    for ((t1, t2), c) in cobracket(a) {
        for ((u1, u2), d) in cobracket(t1) {
            accumulate(&mut triple, (u1, u2, t2), &c * &d);
        }
    }
    let rotate = |m: &BTreeMap<(BasisTag, BasisTag, BasisTag), Rational>| {
        let mut out = BTreeMap::new();
        for ((x, y, z), c) in m {
            let s = sign(u32::from(tag_parity(*x) & (tag_parity(*y) ^ tag_parity(*z))));
            accumulate(&mut out, (*y, *z, *x), c * rat_int(s));
        }
        out
    };
    let once = rotate(&triple);
    let twice = rotate(&once);
    let mut total = triple;
    for m in [once, twice] {
        for (k, v) in m {
            accumulate(&mut total, k, v);
        }
    }
    total
}

/// Adjoint action `X · (a ⊗ b) = [X,a] ⊗ b + (-1)^{p(X)p(a)} a ⊗ [X,b]` on basis tags.
pub fn adjoint_on_tensor(x: BasisTag, t: &PnTensor) -> PnTensor {
    let mut out = PnTensor::new();
    for ((a, b), c) in t {
        for (k, v) in superbracket_pn(x, *a) {
            accumulate(&mut out, (k, *b), c * v);
        }
        let s = rat_int(sign(u32::from(tag_parity(x) & tag_parity(*a))));
        for (k, v) in superbracket_pn(x, *b) {
            accumulate(&mut out, (*a, k), c * &s * v);
        }
    }
    out
}

/// `δ([X,Y]) - X·δ(Y) + (-1)^{p(X)p(Y)} Y·δ(X)`.
pub fn cocycle_residual(x: BasisTag, y: BasisTag) -> PnTensor {
    let mut out = cobracket_linear(&superbracket_pn(x, y));
    for (k, v) in adjoint_on_tensor(x, &cobracket(y)) {
        accumulate(&mut out, k, -v);
    }
    let s = rat_int(sign(u32::from(tag_parity(x) & tag_parity(y))));
    for (k, v) in adjoint_on_tensor(y, &cobracket(x)) {
        accumulate(&mut out, k, &s * v);
    }
    out
}

/// Checks `Σ X_a 𝖡(Y_a, Z) = Z` for `Z ∈ p_n` and `= 0` for `Z ∈ b_n`.
pub fn verify_casimir_duality(n: usize) -> Result<bool> {
    let factors = fake_casimir_factors(n);
    let contract = |z: &GradedOperator| -> Result<GradedOperator> {
        let mut acc = GradedOperator::zero(n, 1);
        for (x, y) in &factors {
            let b = supertrace_form(y, z)?;
            if !b.is_zero() {
                acc = acc.add(&x.scale(&b))?;
            }
        }
        Ok(acc)
    };
    for (_, z) in pn_basis(n) {
        if contract(z.op())? != *z.op() {
            return Ok(false);
        }
    }
    for z in butterfly_basis(n) {
        if !contract(&z)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compares the closed-form cobracket with `[X⊗1 + 1⊗X, s]` on every basis element.
pub fn verify_cobracket_via_s(n: usize) -> VerificationReport {
    let mut rb = ReportBuilder::new("cobracket", "closed-form cobracket equals [X⊗1+1⊗X, s]").param("n", n);
    let tags = pn_tags(n);
    let mut matched = 0usize;
    let mut outside = Vec::new();
    let mut mismatched = Vec::new();
    for t in &tags {
        let op = assemble(n, &[(*t, rat_int(1))].into_iter().collect()).expect("basis element");
        let routed = cobracket_via_s(n, &op).and_then(|d| operator_unit_tensor(&d)).and_then(|u| pn_tensor_coordinates(n, &u));
        match routed {
            Ok(c) if c == cobracket(*t) => matched += 1,
            Ok(_) => mismatched.push(t.to_string()),
            Err(_) => outside.push(t.to_string()),
        }
    }
    rb.detail(
        "lands in p_n ⊗ p_n",
        outside.is_empty(),
        if outside.is_empty() { "every bracket has p_n ⊗ p_n coordinates".to_string() } else { format!("outside: {}", outside.join(", ")) },
    );
    rb.detail(
        "closed form matches",
        matched == tags.len(),
        format!("{matched} of {} basis elements agree{}", tags.len(), if mismatched.is_empty() { String::new() } else { format!("; differ: {}", mismatched.join(", ")) }),
    );
    let anti = tags.iter().all(|t| {
        let d = cobracket(*t);
        let mut sum = signed_flip(&d);
        for (k, v) in d {
            accumulate(&mut sum, k, v);
        }
        sum.is_empty()
    });
    rb.detail("antisupersymmetric", anti, "δ(X)° = -δ(X) for every basis element");
    if n <= 2 {
        let jac = tags.iter().all(|t| co_jacobi_residual(*t).is_empty());
        rb.detail("co-Jacobi", jac, "(1+σ+σ²)(δ⊗1)δ = 0 on every basis element");
        let cocycle = tags.iter().all(|x| tags.iter().all(|y| cocycle_residual(*x, *y).is_empty()));
        rb.detail("1-cocycle", cocycle, format!("δ([X,Y]) = X·δ(Y) - (-1)^{{p(X)p(Y)}} Y·δ(X) on {} pairs", tags.len() * tags.len()));
        rb.detail_result("s dual to the pairing", verify_casimir_duality(n), |ok| (*ok, "Σ X_a B(Y_a, Z) projects onto p_n".to_string()));
    }
    rb.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superspace::elementary;

    #[test]
    fn casimir_n1() {
        let s = fake_casimir(1);
        assert!(s.is_consistent());
        let e = |i, j| elementary(1, i, j).unwrap();
        let half = Scalar::constant(rat(1, 2));
        let sf11 = e(1, 1).sub(&e(-1, -1)).unwrap();
        let bar = e(1, 1).add(&e(-1, -1)).unwrap();
        let want = sf11
            .koszul_tensor(&bar)
            .unwrap()
            .scale(&half)
            .add(&e(-1, 1).koszul_tensor(&e(1, -1)).unwrap())
            .unwrap();
        assert_eq!(s.value, want);
    }

    #[test]
    fn c_n1_is_identity() {
        assert_eq!(build_c(1).value, GradedOperator::identity(1, 2));
        assert_eq!(build_c(2).value.parity(), 0);
    }

    #[test]
    fn cybe_small() {
        for n in 1..=2 {
            assert!(verify_cybe(n).pass);
        }
    }

    #[test]
    fn cobracket_small() {
        for n in 1..=2 {
            let r = verify_cobracket_via_s(n);
            assert!(r.pass, "{}", r.text_line());
        }
    }

    #[test]
    fn cobracket_of_e11_n1() {
        let t11 = BasisTag { i: 1, j: 1 };
        let d = cobracket(t11);
        let op = elementary(1, 1, 1).unwrap().sub(&elementary(1, -1, -1).unwrap()).unwrap();
        let via = pn_tensor_coordinates(1, &operator_unit_tensor(&cobracket_via_s(1, &op).unwrap()).unwrap()).unwrap();
        assert_eq!(d, via);
    }

    #[test]
    fn zero_element() {
        let z = GradedOperator::zero(2, 1);
        assert!(cobracket_via_s(2, &z).unwrap().is_zero());
        assert!(cobracket_linear(&PnCoords::new()).is_empty());
    }
}
