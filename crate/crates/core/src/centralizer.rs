//! Exact supercommutants on tensor space: the centralizer of the quantum group
//! action, of the q-Brauer action, and of the classical `p_n` action.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{flatten_constant, flatten_frac, operator_span, Echelon, Field, SparseVec};
use crate::periplectic::pn_basis;
use crate::qbrauer::{image_span, image_span_constant, BrauerRep};
use crate::report::{ReportBuilder, VerificationReport};
use crate::scalar::{common_denominator, Frac, Rational, Scalar};
use crate::smatrix::sample_q_values;
use crate::superspace::{GradedOperator, SuperSpace};
use crate::uqpn::representation::{invert_diagonal, Representation};
use crate::uqpn::symbol::generators;

/// Default cap on the number of unknowns solved symbolically.
pub const DEFAULT_BUDGET: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Uqpn,
    Brauer,
    Classical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveMode {
    /// Kernel computed over `Q(q)` (or `Q` for `q`-free generators).
    Symbolic,
    /// Upper bound from one rational specialization, met by an exactly verified candidate set.
    EvaluationVerified,
}

#[derive(Clone, Debug)]
pub struct CommutantProblem {
    pub n: usize,
    pub legs: usize,
    pub generators: Vec<GradedOperator>,
    pub side: Side,
}

/// A basis of the supercommutant, split by parity.
#[derive(Clone, Debug)]
pub struct CommutantBasis {
    pub even: Vec<GradedOperator>,
    pub odd: Vec<GradedOperator>,
    pub mode: SolveMode,
}

impl CommutantBasis {
    pub fn dimension(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    pub fn dims(&self) -> [usize; 2] {
        [self.even.len(), self.odd.len()]
    }

    pub fn elements(&self) -> impl Iterator<Item = &GradedOperator> {
        self.even.iter().chain(self.odd.iter())
    }
}

impl CommutantProblem {
    pub fn new(n: usize, legs: usize, generators: Vec<GradedOperator>, side: Side) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::ShapeMismatch("commutant of an empty generator set".into()));
        }
        for g in &generators {
            if g.n() != n || !g.is_square() || g.legs() != legs {
                return Err(Error::ShapeMismatch(format!("generator {g:?} does not act on {legs} legs for n={n}")));
            }
        }
        Ok(CommutantProblem { n, legs, generators, side })
    }

    /// `ρ_l(t_ij)` for every nonzero generator.
    pub fn uqpn(n: usize, legs: usize) -> Result<Self> {
        let rho = Representation::new(n, legs)?;
        let gens = generators(n).into_iter().map(|g| rho.image(g).clone()).filter(|o| !o.is_zero()).collect();
        Self::new(n, legs, gens, Side::Uqpn)
    }

    /// The token images `P_i S_{i,i+1}` and `𝔠_i`.
    pub fn brauer(n: usize, legs: usize) -> Result<Self> {
        let rep = BrauerRep::new(n, legs)?;
        Self::new(n, legs, rep.generators().into_iter().map(|(_, o)| o).collect(), Side::Brauer)
    }

    /// The basis of `p_n` acting on `legs` tensor factors.
    pub fn classical(n: usize, legs: usize) -> Result<Self> {
        let mut gens = Vec::new();
        for (_, x) in pn_basis(n) {
            let mut acc = GradedOperator::zero(n, legs);
            for k in 1..=legs {
                acc = acc.add(&x.op().embed_single(k, legs)?)?;
            }
            gens.push(acc);
        }
        Self::new(n, legs, gens, Side::Classical)
    }

    pub fn is_q_free(&self) -> bool {
        self.generators.iter().all(|g| g.is_q_free())
    }

    fn dim(&self) -> usize {
        SuperSpace::new(self.n).dim_legs(self.legs)
    }

    /// Entries `(r, c)` of parity `want` allowed by the diagonal generators.
    fn unknowns(&self, want: u8) -> Vec<(usize, usize)> {
        let d = self.dim();
        let sp = SuperSpace::new(self.n);
        let diag: Vec<&GradedOperator> = self.generators.iter().filter(|g| is_diagonal(g)).collect();
        let weight = |r: usize| -> Vec<Scalar> { diag.iter().map(|g| g.entry(r, r)).collect() };
        let weights: Vec<Vec<Scalar>> = (0..d).map(weight).collect();
        let mut out = Vec::new();
        for r in 0..d {
            for c in 0..d {
                if (sp.code_parity(r, self.legs) ^ sp.code_parity(c, self.legs)) == want && weights[r] == weights[c] {
                    out.push((r, c));
                }
            }
        }
        out
    }

    /// Unknown counts per parity after weight reduction.
    pub fn unknown_counts(&self) -> [usize; 2] {
        [self.unknowns(0).len(), self.unknowns(1).len()]
    }

    fn specialized(&self, q: &Rational) -> CommutantProblem {
        CommutantProblem {
            n: self.n,
            legs: self.legs,
            generators: self.generators.iter().map(|g| g.specialize(q)).collect(),
            side: self.side,
        }
    }
}

fn is_diagonal(g: &GradedOperator) -> bool {
    g.entries().keys().all(|(r, c)| r == c)
}

/// `X g - (-1)^{p(X)p(g)} g X = 0` for every generator.
pub fn supercommutes(x: &GradedOperator, gens: &[GradedOperator]) -> bool {
    gens.iter().all(|g| x.supercommutator(g).map(|r| r.is_zero()).unwrap_or(false))
}

fn kernel_of<F: Field>(p: &CommutantProblem, want: u8, conv: &impl Fn(&Scalar) -> F) -> (Vec<(usize, usize)>, Vec<SparseVec<F>>) {
    let unknowns = p.unknowns(want);
    let pos: BTreeMap<(usize, usize), usize> = unknowns.iter().enumerate().map(|(k, rc)| (*rc, k)).collect();
    let mut ech: Echelon<F> = Echelon::new();
    for g in p.generators.iter().filter(|g| !is_diagonal(g)) {
        let sg = if want & g.parity() == 1 { F::one().neg() } else { F::one() };
        let mut by_row: BTreeMap<usize, Vec<(usize, F)>> = BTreeMap::new();
        let mut by_col: BTreeMap<usize, Vec<(usize, F)>> = BTreeMap::new();
        for (&(r, c), v) in g.entries() {
            let x = conv(v);
            by_row.entry(r).or_default().push((c, x.clone()));
            by_col.entry(c).or_default().push((r, x));
        }
        let mut rows: BTreeMap<(usize, usize), BTreeMap<usize, F>> = BTreeMap::new();
        for (&(r, k), &u) in &pos {
            // X[r,k] g[k,c] feeds entry (r,c); g[r',r] X[r,k] feeds entry (r',k)
            for (c, x) in by_row.get(&k).into_iter().flatten() {
                let slot = rows.entry((r, *c)).or_default().entry(u).or_insert_with(F::zero);
                *slot = slot.add(x);
            }
            for (rr, x) in by_col.get(&r).into_iter().flatten() {
                let slot = rows.entry((*rr, k)).or_default().entry(u).or_insert_with(F::zero);
                *slot = slot.sub(&sg.mul(x));
            }
        }
        for row in rows.into_values() {
            let v: SparseVec<F> = row.into_iter().filter(|(_, x)| !x.is_zero()).collect();
            if !v.is_empty() {
                ech.insert(&v);
            }
        }
    }
    let ker = ech.kernel(unknowns.len());
    (unknowns, ker)
}

fn assemble(p: &CommutantProblem, want: u8, unknowns: &[(usize, usize)], v: &[(usize, Scalar)]) -> GradedOperator {
    GradedOperator::new(p.n, p.legs, want, v.iter().map(|(k, s)| (unknowns[*k], s.clone()))).expect("entries have the requested parity")
}

/// Exact basis of the supercommutant; at most `budget` unknowns.
pub fn solve_commutant_with(p: &CommutantProblem, budget: usize) -> Result<CommutantBasis> {
    let counts = p.unknown_counts();
    if counts[0] + counts[1] > budget {
        return Err(Error::TooLarge(format!("{} unknowns exceed the budget of {budget}", counts[0] + counts[1])));
    }
    let mut parts: [Vec<GradedOperator>; 2] = [Vec::new(), Vec::new()];
    for want in 0..2u8 {
        let ops = if p.is_q_free() {
            let (unk, ker) = kernel_of(p, want, &|s: &Scalar| s.as_constant().expect("q-free generator"));
            ker.into_iter()
                .map(|v| {
                    let sv: Vec<(usize, Scalar)> = v.into_iter().map(|(k, x)| (k, Scalar::constant(x))).collect();
                    assemble(p, want, &unk, &sv)
                })
                .collect()
        } else {
            let (unk, ker) = kernel_of(p, want, &|s: &Scalar| Frac::from(s.clone()));
            ker.into_iter()
                .map(|v| {
                    let d = Frac::from(common_denominator(v.iter().map(|(_, x)| x)));
                    let sv: Vec<(usize, Scalar)> =
                        v.iter().map(|(k, x)| (*k, (x * &d).as_scalar().cloned().expect("cleared denominator"))).collect();
                    assemble(p, want, &unk, &sv)
                })
                .collect()
        };
        parts[want as usize] = ops;
    }
    let [even, odd] = parts;
    Ok(CommutantBasis { even, odd, mode: SolveMode::Symbolic })
}

pub fn solve_commutant(p: &CommutantProblem) -> Result<CommutantBasis> {
    solve_commutant_with(p, DEFAULT_BUDGET)
}

/// Commutant dimensions per parity after substituting a rational `q`.
///
/// The generic dimension over `Q(q)` never exceeds these.
pub fn commutant_dims_at(p: &CommutantProblem, q: &Rational) -> [usize; 2] {
    let sp = p.specialized(q);
    let mut out = [0usize; 2];
    for want in 0..2u8 {
        out[want as usize] = kernel_of(&sp, want, &|s: &Scalar| s.as_constant().expect("specialized")).1.len();
    }
    out
}

fn exact_rank(ops: &[&GradedOperator]) -> usize {
    let mut e: Echelon<Frac> = Echelon::new();
    for o in ops {
        e.insert(&flatten_frac(o));
    }
    e.rank()
}

/// Certifies `candidates` as a basis of the commutant without a symbolic solve.
///
/// Each candidate is checked to supercommute exactly; their exact rank per
/// parity is a lower bound, and the specialized kernel dimension at a sample
/// `q` an upper bound. The two must meet.
pub fn solve_commutant_sandwich(p: &CommutantProblem, candidates: &[GradedOperator], seed: u64) -> Result<CommutantBasis> {
    for c in candidates {
        if !supercommutes(c, &p.generators) {
            return Err(Error::Unsupported("a candidate does not supercommute with the generators".into()));
        }
    }
    let q0 = sample_q_values(seed, 1).remove(0);
    let upper = commutant_dims_at(p, &q0);
    let mut parts: [Vec<GradedOperator>; 2] = [Vec::new(), Vec::new()];
    for want in 0..2u8 {
        let of: Vec<&GradedOperator> = candidates.iter().filter(|c| c.parity() == want && !c.is_zero()).collect();
        let lower = exact_rank(&of);
        if lower != upper[want as usize] {
            return Err(Error::Unsupported(format!(
                "parity {want}: candidates have rank {lower}, specialized commutant has dimension {}",
                upper[want as usize]
            )));
        }
        parts[want as usize] = independent(&of);
    }
    let [even, odd] = parts;
    Ok(CommutantBasis { even, odd, mode: SolveMode::EvaluationVerified })
}

fn independent(ops: &[&GradedOperator]) -> Vec<GradedOperator> {
    let mut e: Echelon<Frac> = Echelon::new();
    ops.iter().filter(|o| e.insert(&flatten_frac(o)).is_some()).map(|o| (*o).clone()).collect()
}

fn basis_summary(b: &CommutantBasis) -> String {
    format!("dimension {} (even {}, odd {}, {:?})", b.dimension(), b.even.len(), b.odd.len(), b.mode)
}

fn uqpn_commutant(n: usize, l: usize, mode: SolveMode, image: &[GradedOperator], seed: u64) -> Result<CommutantBasis> {
    let p = CommutantProblem::uqpn(n, l)?;
    match mode {
        SolveMode::Symbolic => solve_commutant(&p),
        SolveMode::EvaluationVerified => solve_commutant_sandwich(&p, image, seed),
    }
}

/// Commutant of the quantum group action against the image of the q-Brauer algebra.
pub fn verify_brauer_centralizer(n: usize, l: usize, mode: SolveMode, seed: u64) -> VerificationReport {
    let mut rb = ReportBuilder::new("brauer-centralizer", "the q-Brauer algebra maps onto the commutant of the quantum group")
        .param("n", n)
        .param("l", l)
        .param("mode", serde_json::to_value(mode).unwrap());
    if mode == SolveMode::EvaluationVerified {
        rb.set_param("seed", seed);
    }
    let rep = match BrauerRep::new(n, l) {
        Ok(r) => r,
        Err(e) => {
            rb.detail("construction", false, format!("error: {e}"));
            return rb.finish();
        }
    };
    let image = match image_span(&rep) {
        Ok(s) => s,
        Err(e) => {
            rb.detail("image", false, format!("error: {e}"));
            return rb.finish();
        }
    };
    rb.set_param("image_dim", image.dim());
    let comm = uqpn_commutant(n, l, mode, &image.ops, seed);
    match &comm {
        Ok(b) => {
            rb.set_param("commutant_dim", b.dimension());
            rb.set_param("commutant_dim_odd", b.odd.len());
            rb.detail("commutant", true, basis_summary(b));
            let residual_ok = b.elements().all(|x| supercommutes(x, &CommutantProblem::uqpn(n, l).unwrap().generators));
            rb.detail("commutant supercommutes", residual_ok, "every basis element has zero residual");
            rb.detail(
                "dimensions agree",
                b.dimension() == image.dim(),
                format!("commutant {}, image {}", b.dimension(), image.dim()),
            );
        }
        Err(e) => rb.detail("commutant", false, format!("error: {e}")),
    }
    let gens = CommutantProblem::uqpn(n, l).map(|p| p.generators).unwrap_or_default();
    let contained = rep.generators().iter().all(|(_, t)| supercommutes(t, &gens));
    rb.detail("image in commutant", contained, "token images commute with every generator");

    let q1 = image_span_constant(&rep.at_one()).map(|s| s.dim());
    let classical = CommutantProblem::classical(n, l).and_then(|p| solve_commutant(&p));
    match (q1, classical) {
        (Ok(d1), Ok(c)) => {
            rb.set_param("image_dim_q1", d1);
            rb.set_param("classical_commutant_dim", c.dimension());
            let ok = d1 == c.dimension() && comm.as_ref().map(|b| b.dimension() == d1).unwrap_or(false);
            rb.detail("q=1 cross-check", ok, format!("image at q=1 {d1}, classical commutant {}", basis_summary(&c)));
        }
        (Err(e), _) | (_, Err(e)) => rb.detail("q=1 cross-check", false, format!("error: {e}")),
    }
    rb.finish()
}

/// Dimensions of one commutant, with the exact residual check of the basis.
pub fn commutant_report(p: &CommutantProblem) -> VerificationReport {
    let side = serde_json::to_value(p.side).unwrap();
    let mut rb = ReportBuilder::new("commutant", "supercommutant of the generators on tensor space")
        .param("n", p.n)
        .param("l", p.legs)
        .param("side", side);
    let counts = p.unknown_counts();
    rb.set_param("unknowns", counts[0] + counts[1]);
    match solve_commutant(p) {
        Ok(b) => {
            rb.set_param("dim", b.dimension());
            rb.set_param("dim_even", b.even.len());
            rb.set_param("dim_odd", b.odd.len());
            let ok = b.elements().all(|x| supercommutes(x, &p.generators));
            rb.detail("basis supercommutes", ok, basis_summary(&b));
        }
        Err(e) => rb.detail("solve", false, format!("error: {e}")),
    }
    rb.finish()
}

/// `S_q(p_n, l)`: the commutant of the q-Brauer action.
pub fn schur_algebra(n: usize, l: usize) -> Result<CommutantBasis> {
    solve_commutant(&CommutantProblem::brauer(n, l)?)
}

/// Span of the quantum group image: words in `ρ_l(t_ij)` and the inverse diagonal images.
pub fn quantum_group_image(n: usize, l: usize, max_dim: usize) -> Result<crate::linalg::OperatorSpan<String>> {
    let rho = Representation::new(n, l)?;
    let mut gens = Vec::new();
    for g in generators(n) {
        let op = rho.image(g).clone();
        if op.is_zero() {
            continue;
        }
        if g.is_diagonal() {
            gens.push((format!("{g}^-1"), invert_diagonal(&op)?));
        }
        gens.push((g.to_string(), op));
    }
    operator_span(GradedOperator::identity(n, l), &gens, flatten_frac, max_dim)
}

/// Measurements around the double centralizer: `dim S_q`, the dimension of the
/// quantum group image, containment, and the commutant of `S_q`.
pub fn verify_double_centralizer(n: usize, l: usize) -> VerificationReport {
    let mut rb = ReportBuilder::new("double-centralizer", "measurements of the q-Schur superalgebra against the quantum group image")
        .param("n", n)
        .param("l", l);
    let bp = match CommutantProblem::brauer(n, l) {
        Ok(p) => p,
        Err(e) => {
            rb.detail("construction", false, format!("error: {e}"));
            return rb.finish();
        }
    };
    let schur = match solve_commutant(&bp) {
        Ok(s) => s,
        Err(e) => {
            rb.detail("schur algebra", false, format!("error: {e}"));
            return rb.finish();
        }
    };
    rb.set_param("schur_dim", schur.dimension());
    rb.set_param("schur_dim_odd", schur.odd.len());
    rb.detail("schur algebra", schur.elements().all(|x| supercommutes(x, &bp.generators)), basis_summary(&schur));

    let gens = CommutantProblem::uqpn(n, l).map(|p| p.generators).unwrap_or_default();
    let contained = gens.iter().all(|g| supercommutes(g, &bp.generators));
    rb.detail("quantum group image in schur algebra", contained, "every rho_l(t_ij) commutes with the tokens");
    match quantum_group_image(n, l, schur.dimension()) {
        Ok(img) => {
            rb.set_param("quantum_group_image_dim", img.dim());
            rb.detail(
                "image dimension",
                true,
                format!("measured {} against dim S_q = {} (surjectivity is open)", img.dim(), schur.dimension()),
            );
        }
        Err(e) => rb.detail("image dimension", false, format!("error: {e}")),
    }

    let brauer_dim = BrauerRep::new(n, l).and_then(|r| image_span(&r)).map(|s| s.dim());
    let sq = CommutantProblem::new(n, l, schur.elements().cloned().collect(), Side::Uqpn).and_then(|p| solve_commutant(&p));
    match (brauer_dim, sq) {
        (Ok(bd), Ok(bc)) => {
            rb.set_param("bicommutant_dim", bc.dimension());
            rb.detail(
                "bicommutant contains brauer image",
                bc.dimension() >= bd && bp.generators.iter().all(|t| supercommutes(t, &schur.elements().cloned().collect::<Vec<_>>())),
                format!("commutant of S_q has dimension {}, brauer image {bd}", bc.dimension()),
            );
        }
        (Err(e), _) | (_, Err(e)) => rb.detail("bicommutant contains brauer image", false, format!("error: {e}")),
    }
    classical_double(&mut rb, n, l);
    rb.finish()
}

/// The same two dimensions for `p_n` and the `q = 1` token images, over `Q`.
fn classical_double(rb: &mut ReportBuilder, n: usize, l: usize) {
    let image = CommutantProblem::classical(n, l).and_then(|cl| {
        let gens: Vec<(usize, GradedOperator)> = cl.generators.into_iter().enumerate().collect();
        operator_span(GradedOperator::identity(n, l), &gens, flatten_constant, usize::MAX)
    });
    let schur = BrauerRep::new(n, l).and_then(|r| {
        let gens = r.at_one().generators().into_iter().map(|(_, o)| o).collect();
        solve_commutant(&CommutantProblem::new(n, l, gens, Side::Brauer)?)
    });
    match (image, schur) {
        (Ok(i), Ok(s)) => {
            rb.set_param("classical_image_dim", i.dim());
            rb.set_param("classical_schur_dim", s.dimension());
            rb.detail("classical comparison", true, format!("U(p_n) image {}, commutant of the q=1 tokens {}", i.dim(), s.dimension()));
        }
        (Err(e), _) | (_, Err(e)) => rb.detail("classical comparison", false, format!("error: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_generator_gives_everything() {
        let p = CommutantProblem::new(1, 2, vec![GradedOperator::identity(1, 2)], Side::Classical).unwrap();
        let b = solve_commutant(&p).unwrap();
        assert_eq!(b.dimension(), 16);
        assert_eq!(b.dims(), [8, 8]);
    }

    #[test]
    fn two_leg_centralizers() {
        for n in 1..=2 {
            let r = verify_brauer_centralizer(n, 2, SolveMode::Symbolic, 0);
            assert!(r.pass, "{}", r.text_line());
            assert_eq!(r.params["commutant_dim"], 3);
            let r = verify_brauer_centralizer(n, 2, SolveMode::EvaluationVerified, 5);
            assert!(r.pass, "{}", r.text_line());
        }
    }

    #[test]
    fn pairwise_products_do_not_change_commutant() {
        let p = CommutantProblem::uqpn(2, 2).unwrap();
        let mut gens = p.generators.clone();
        for a in &p.generators {
            for b in &p.generators {
                gens.push(a.compose(b).unwrap());
            }
        }
        let big = CommutantProblem::new(2, 2, gens, Side::Uqpn).unwrap();
        assert_eq!(solve_commutant(&big).unwrap().dims(), solve_commutant(&p).unwrap().dims());
    }

    #[test]
    fn double_centralizer_small() {
        let r = verify_double_centralizer(1, 2);
        assert!(r.pass, "{}", r.text_line());
    }
}
