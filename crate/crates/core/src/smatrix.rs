//! The quantum S-matrix and the identities behind the quantum Yang-Baxter equation.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bialgebra::{build_c, fake_casimir, Unit};
use crate::error::{Error, Result};
use crate::linalg::bareiss_inverse;
use crate::periplectic::sf_units;
use crate::report::{residual_summary, ReportBuilder, VerificationReport};
use crate::scalar::{rat, rat_int, Rational, Scalar};
use crate::superspace::{parity, sign, GradedOperator, SuperSpace};

/// Symbolic or sampled evaluation of a residual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Sampled,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SMatrix {
    pub n: usize,
    pub op: GradedOperator,
}

fn push(m: &mut BTreeMap<(Unit, Unit), Scalar>, a: &[(Unit, Rational)], b: &[(Unit, Rational)], c: &Scalar) {
    for (u, x) in a {
        for (v, y) in b {
            let slot = m.entry((*u, *v)).or_insert_with(Scalar::zero);
            *slot += &c.scale(&(x * y));
        }
    }
}

/// `S` assembled term by term from its four families of summands.
pub fn build_s(n: usize) -> SMatrix {
    let sp = SuperSpace::new(n);
    let ni = n as i32;
    let mut m: BTreeMap<(Unit, Unit), Scalar> = BTreeMap::new();
    let one = rat_int(1);
    let unit = |a: i32, b: i32| vec![((a, b), one.clone())];
    let ebar = |i: i32| vec![((i, i), one.clone()), ((-i, -i), one.clone())];
    for a in sp.indices() {
        for b in sp.indices() {
            push(&mut m, &unit(a, a), &unit(b, b), &Scalar::one());
        }
    }
    let eps = Scalar::epsilon();
    for i in 1..=ni {
        push(&mut m, &unit(i, i), &ebar(i), &Scalar::q_minus_one());
        push(&mut m, &unit(-i, -i), &ebar(i), &(&Scalar::q_pow(-1) - &Scalar::one()));
    }
    for i in -ni..0 {
        push(&mut m, &sf_units(i, -i), &unit(-i, i), &eps.scale(&rat(1, 2)));
    }
    for i in sp.indices() {
        for j in sp.indices() {
            if j.abs() < i.abs() {
                push(&mut m, &sf_units(i, j), &unit(j, i), &eps.scale(&rat_int(sign(parity(j).into()))));
            }
        }
    }
    let op = GradedOperator::from_units(n, 2, m.into_iter().map(|((u, v), c)| (vec![u, v], c))).expect("valid units");
    SMatrix { n, op }
}

impl SMatrix {
    pub fn is_identity_at_one(&self) -> bool {
        self.op.eval_at_one() == GradedOperator::identity(self.n, 2)
    }

    /// `S12 S13 S23 - S23 S13 S12`.
    pub fn qybe_residual(&self) -> Result<GradedOperator> {
        qybe_residual(&self.op)
    }

    /// Fraction-free inverse: returns `(det, adj)` with `S · adj = det`.
    pub fn inverse_parts(&self) -> Result<(Scalar, Vec<Vec<Scalar>>)> {
        let d = self.op.space().dim_legs(2);
        if d > 64 {
            return Err(Error::TooLarge(format!("dense inverse of a {d}x{d} matrix")));
        }
        let mut a = vec![vec![Scalar::zero(); d]; d];
        for (&(r, c), v) in self.op.entries() {
            a[r][c] = v.clone();
        }
        bareiss_inverse(&a)
    }

    /// `S^{-1}` when every entry is a Laurent polynomial.
    pub fn inverse(&self) -> Result<GradedOperator> {
        let (det, adj) = self.inverse_parts()?;
        let mut entries = Vec::new();
        for (r, row) in adj.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    entries.push(((r, c), v.div_exact(&det)?));
                }
            }
        }
        GradedOperator::new(self.n, 2, 0, entries)
    }
}

pub fn qybe_residual(s: &GradedOperator) -> Result<GradedOperator> {
    let s12 = s.embed_pair(1, 2, 3)?;
    let s13 = s.embed_pair(1, 3, 3)?;
    let s23 = s.embed_pair(2, 3, 3)?;
    s12.compose(&s13)?.compose(&s23)?.sub(&s23.compose(&s13)?.compose(&s12)?)
}

fn triple(a: &GradedOperator, b: &GradedOperator, c: &GradedOperator) -> GradedOperator {
    a.compose(b).and_then(|x| x.compose(c)).expect("3-leg operators")
}

fn sum(ops: &[(i64, GradedOperator)]) -> GradedOperator {
    let mut acc = GradedOperator::zero(ops[0].1.n(), ops[0].1.legs());
    for (c, op) in ops {
        acc = acc.add(&op.scale(&Scalar::from_int(*c))).expect("same shape");
    }
    acc
}

/// Leg embeddings of `s` and `C` and the aggregates of the QYBE proof.
pub struct ProofAggregates {
    pub s: [GradedOperator; 3],
    pub c: [GradedOperator; 3],
}

impl ProofAggregates {
    pub fn new(n: usize) -> Self {
        let s = fake_casimir(n).value;
        let c = build_c(n).value;
        let emb = |x: &GradedOperator| {
            [
                x.embed_pair(1, 2, 3).unwrap(),
                x.embed_pair(1, 3, 3).unwrap(),
                x.embed_pair(2, 3, 3).unwrap(),
            ]
        };
        ProofAggregates { s: emb(&s), c: emb(&c) }
    }

    fn prod(&self, a: &GradedOperator, b: &GradedOperator) -> GradedOperator {
        a.compose(b).expect("3-leg operators")
    }

    /// The twelve-term aggregate `[sC]`.
    pub fn s_c(&self) -> GradedOperator {
        let [s12, s13, s23] = &self.s;
        let [c12, c13, c23] = &self.c;
        let p = |a, b| self.prod(a, b);
        sum(&[
            (1, p(s12, c13)),
            (1, p(s12, c23)),
            (1, p(s13, c23)),
            (1, p(c12, s13)),
            (1, p(c12, s23)),
            (1, p(c13, s23)),
            (-1, p(s23, c13)),
            (-1, p(s23, c12)),
            (-1, p(s13, c12)),
            (-1, p(c23, s13)),
            (-1, p(c23, s12)),
            (-1, p(c13, s12)),
        ])
    }

    /// The six-term aggregate `[sCC]`.
    pub fn s_cc(&self) -> GradedOperator {
        let [s12, s13, s23] = &self.s;
        let [c12, c13, c23] = &self.c;
        sum(&[
            (1, triple(s12, c13, c23)),
            (1, triple(c12, s13, c23)),
            (1, triple(c12, c13, s23)),
            (-1, triple(s23, c13, c12)),
            (-1, triple(c23, s13, c12)),
            (-1, triple(c23, c13, s12)),
        ])
    }

    /// The six-term aggregate `[ssC]`.
    pub fn ss_c(&self) -> GradedOperator {
        let [s12, s13, s23] = &self.s;
        let [c12, c13, c23] = &self.c;
        sum(&[
            (1, triple(s12, s13, c23)),
            (1, triple(c12, s13, s23)),
            (1, triple(s12, c13, s23)),
            (-1, triple(s23, s13, c12)),
            (-1, triple(c23, s13, s12)),
            (-1, triple(s23, c13, s12)),
        ])
    }

    pub fn sss(&self) -> GradedOperator {
        let [s12, s13, s23] = &self.s;
        triple(s12, s13, s23).sub(&triple(s23, s13, s12)).unwrap()
    }

    pub fn ccc(&self) -> GradedOperator {
        let [c12, c13, c23] = &self.c;
        triple(c12, c13, c23).sub(&triple(c23, c13, c12)).unwrap()
    }

    /// `sss + ¼[sCC] + ½[ssC] + ⅛ CCC`, the `q³` coefficient of the QYBE residual.
    pub fn top_coefficient(&self) -> GradedOperator {
        let h = |x: GradedOperator, a: i64, b: i64| x.scale(&Scalar::constant(rat(a, b)));
        self.sss()
            .add(&h(self.s_cc(), 1, 4))
            .and_then(|x| x.add(&h(self.ss_c(), 1, 2)))
            .and_then(|x| x.add(&h(self.ccc(), 1, 8)))
            .unwrap()
    }
}

/// `S = 1 + (q - q^{-1}) s + ((q + q^{-1})/2 - 1) C`.
pub fn decomposition(n: usize) -> GradedOperator {
    let s = fake_casimir(n).value;
    let c = build_c(n).value;
    let kappa = Scalar::from_terms([(1, rat(1, 2)), (0, rat_int(-1)), (-1, rat(1, 2))]);
    GradedOperator::identity(n, 2)
        .add(&s.scale(&Scalar::epsilon()))
        .and_then(|x| x.add(&c.scale(&kappa)))
        .unwrap()
}

pub fn verify_decomposition(n: usize) -> VerificationReport {
    let mut rb = ReportBuilder::new("decomposition", "S = 1 + (q - q^-1) s + ((q + q^-1)/2 - 1) C").param("n", n);
    let s = build_s(n);
    let d = decomposition(n);
    let diff = s.op.sub(&d).unwrap();
    rb.detail("decomposition", diff.is_zero(), residual_summary(&diff));
    let rem = s.op.sub(&GradedOperator::identity(n, 2)).and_then(|x| x.sub(&fake_casimir(n).value.scale(&Scalar::epsilon()))).unwrap();
    let v = rem.valuation_at_one();
    rb.detail("second-order remainder", v >= 2, format!("S - 1 - (q - q^-1) s has (q-1)-valuation {}", if v == u32::MAX { "inf".to_string() } else { v.to_string() }));
    rb.detail("identity at q=1", s.is_identity_at_one(), "S specializes to the identity");
    rb.detail("even", s.op.parity() == 0, "S is even");
    rb.finish()
}

fn sample_points(seed: u64, count: usize) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let num: i64 = rng.gen_range(-97..=97);
        let den: i64 = rng.gen_range(1..=89);
        let x = rat(num, den);
        if num != 0 && x.abs() != Rational::one() && !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// Distinct rational sample points avoiding `0` and `±1`.
pub fn sample_q_values(seed: u64, count: usize) -> Vec<Rational> {
    sample_points(seed, count)
}

pub fn verify_qybe(n: usize, mode: Mode, seed: u64) -> VerificationReport {
    let mut rb = ReportBuilder::new("qybe", "S12 S13 S23 = S23 S13 S12").param("n", n).param("mode", serde_json::to_value(mode).unwrap());
    let s = build_s(n);
    match mode {
        Mode::Symbolic => {
            rb.detail_result("qybe residual", s.qybe_residual(), |r| (r.is_zero(), residual_summary(r)));
        }
        Mode::Sampled => {
            rb.set_param("seed", seed);
            let pts = sample_q_values(seed, 5);
            for x in pts {
                let r = qybe_residual(&s.op.specialize(&x));
                rb.detail_result(format!("qybe residual at q={x}"), r, |r| (r.is_zero(), residual_summary(r)));
            }
        }
    }
    rb.finish()
}

fn in_z_half(c: &Rational) -> bool {
    let mut d = c.denom().clone();
    let two = num_bigint::BigInt::from(2);
    while d.is_even() {
        d /= &two;
    }
    d.to_i64() == Some(1)
}

pub fn verify_proof_lemmas(n: usize) -> VerificationReport {
    let mut rb = ReportBuilder::new("lemmas", "aggregate identities of the QYBE proof").param("n", n);
    let agg = ProofAggregates::new(n);
    let sc = agg.s_c();
    let scc = agg.s_cc();
    let ssc = agg.ss_c();
    let l1 = sc.sub(&scc.scale(&Scalar::from_int(2))).unwrap();
    rb.detail("[sC] = 2[sCC]", l1.is_zero(), residual_summary(&l1));
    rb.detail("[ssC] = 0", ssc.is_zero(), residual_summary(&ssc));
    let eq9 = agg.sss().add(&scc.scale(&Scalar::constant(rat(1, 4)))).unwrap();
    rb.detail("sss + [sCC]/4 = 0", eq9.is_zero(), residual_summary(&eq9));
    let ccc = agg.ccc();
    rb.detail("C12 C13 C23 = C23 C13 C12", ccc.is_zero(), residual_summary(&ccc));

    // the q³ coefficient read off the symbolic products matches the aggregate formula
    let s = build_s(n);
    let top = s.op.map_entries(|x| Scalar::constant(x.coeff(1)));
    let want_top = fake_casimir(n).value.add(&build_c(n).value.scale(&Scalar::constant(rat(1, 2)))).unwrap();
    rb.detail("q-coefficient of S", top == want_top, "coefficient of q in S equals s + C/2");
    let s12 = s.op.embed_pair(1, 2, 3).unwrap();
    let s13 = s.op.embed_pair(1, 3, 3).unwrap();
    let s23 = s.op.embed_pair(2, 3, 3).unwrap();
    let forward = triple(&s12, &s13, &s23);
    let t12 = want_top.embed_pair(1, 2, 3).unwrap();
    let t13 = want_top.embed_pair(1, 3, 3).unwrap();
    let t23 = want_top.embed_pair(2, 3, 3).unwrap();
    let lead = forward.map_entries(|x| Scalar::constant(x.coeff(3)));
    rb.detail("q³ coefficient of S12S13S23", lead == triple(&t12, &t13, &t23), "equals the triple product of the q-coefficients");
    let f = forward.sub(&triple(&s23, &s13, &s12)).unwrap();
    let all_zero = (-3..=3).all(|k| f.entries().values().all(|x| Zero::is_zero(&x.coeff(k))));
    rb.detail("residual coefficients", all_zero, "every q-power coefficient of S12S13S23 - S23S13S12 vanishes");
    let f3 = agg.top_coefficient();
    rb.detail("q³ coefficient", f3.is_zero(), format!("sss + [sCC]/4 + [ssC]/2 + CCC/8: {}", residual_summary(&f3)));

    let zhalf = s.op.entries().values().all(|x| x.terms().iter().all(|(_, c)| in_z_half(c)));
    rb.detail("entries in Z[1/2][q, q^-1]", zhalf, "all coefficients have 2-power denominators");
    if n <= 2 {
        let inv = s.inverse_parts();
        rb.detail_result("unit determinant", inv.as_ref().map(|x| x.0.clone()).map_err(|e| Error::Parse(e.to_string())), |det| {
            (det.as_monomial().is_some(), format!("det S = {det}"))
        });
        rb.detail_result("Laurent inverse", s.inverse().and_then(|i| s.op.compose(&i)), |p| {
            (*p == GradedOperator::identity(n, 2), "S · S^-1 = 1 with Laurent entries".to_string())
        });
    }
    rb.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superspace::elementary;

    #[test]
    fn s_n1_closed_form() {
        let e = |i, j| elementary(1, i, j).unwrap();
        let bar = e(1, 1).add(&e(-1, -1)).unwrap();
        let qm1 = Scalar::q_minus_one();
        let qi = &Scalar::q_pow(-1) - &Scalar::one();
        let want = GradedOperator::identity(1, 2)
            .add(&e(1, 1).koszul_tensor(&bar).unwrap().scale(&qm1))
            .unwrap()
            .add(&e(-1, -1).koszul_tensor(&bar).unwrap().scale(&qi))
            .unwrap()
            .add(&e(-1, 1).koszul_tensor(&e(1, -1)).unwrap().scale(&Scalar::epsilon()))
            .unwrap();
        assert_eq!(build_s(1).op, want);
    }

    #[test]
    fn s_basic_properties() {
        for n in 1..=3 {
            let s = build_s(n);
            assert!(s.is_identity_at_one());
            assert_eq!(s.op.parity(), 0);
        }
    }

    #[test]
    fn small_reports() {
        for n in 1..=2 {
            for r in [verify_decomposition(n), verify_qybe(n, Mode::Symbolic, 0), verify_qybe(n, Mode::Sampled, 7), verify_proof_lemmas(n)] {
                assert!(r.pass, "{}", r.text_line());
            }
        }
    }

    #[test]
    fn sampled_points_avoid_special_values() {
        let pts = sample_q_values(3, 20);
        assert_eq!(pts.len(), 20);
        assert!(pts.iter().all(|x| x.abs() != Rational::one() && *x != Rational::from_integer(0.into())));
        assert_eq!(pts, sample_q_values(3, 20));
    }

    #[test]
    fn z_half() {
        assert!(in_z_half(&rat(3, 8)));
        assert!(!in_z_half(&rat(1, 6)));
    }
}
