//! `gl(n|n)`, the involution `ι`, the periplectic subalgebra `p_n`, the
//! butterfly subalgebra `b_n` and the supertrace form.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::report::{ReportBuilder, VerificationReport};
use crate::scalar::{rat_int, Rational, Scalar};
use crate::superspace::{elementary, parity, sign, GradedOperator, SuperSpace};

/// Label `(i, j)` of the basis element `𝖤_ij` of `p_n`.
///
/// Valid labels satisfy `|j| < |i|`, or `i = j > 0`, or `i = -j < 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisTag {
    pub i: i32,
    pub j: i32,
}

impl BasisTag {
    pub fn new(n: usize, i: i32, j: i32) -> Result<Self> {
        let sp = SuperSpace::new(n);
        sp.check(i)?;
        sp.check(j)?;
        if Self::is_valid(i, j) {
            Ok(BasisTag { i, j })
        } else {
            Err(Error::IndexOutOfRange(format!("({i},{j}) is not a basis label")))
        }
    }

    pub fn is_valid(i: i32, j: i32) -> bool {
        j.abs() < i.abs() || (i == j && i > 0) || (i == -j && i < 0)
    }

    pub fn parity(self) -> u8 {
        parity(self.i) ^ parity(self.j)
    }

    fn key(self) -> (i32, bool, i32, bool) {
        (self.i.abs(), self.i > 0, self.j.abs(), self.j > 0)
    }
}

impl Ord for BasisTag {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for BasisTag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({},{})", self.i, self.j)
    }
}

/// Coordinates of an element of `p_n` in the `𝖤` basis.
pub type PnCoords = BTreeMap<BasisTag, Rational>;

/// `(-1)^{p(i)(p(j)+1)}`, the supertranspose sign.
pub fn st_sign(i: i32, j: i32) -> i64 {
    sign(u32::from(parity(i) & (parity(j) ^ 1)))
}

/// `ι(X) = -π(X^st)`, on matrix units `ι(E_ij) = -(-1)^{p(i)(p(j)+1)} E_{-j,-i}`.
pub fn iota(x: &GradedOperator) -> Result<GradedOperator> {
    if !x.is_square() || x.legs() != 1 {
        return Err(Error::ShapeMismatch("iota acts on 1-leg operators".into()));
    }
    let terms = x.to_units().into_iter().map(|(u, c)| {
        let (i, j) = u[0];
        (vec![(-j, -i)], c.scale(&rat_int(-st_sign(i, j))))
    });
    GradedOperator::from_units(x.n(), 1, terms)
}

/// The element `𝖤_ij = E_ij - (-1)^{p(i)(p(j)+1)} E_{-j,-i}`.
pub fn sf(n: usize, i: i32, j: i32) -> Result<GradedOperator> {
    GradedOperator::from_units(
        n,
        1,
        [
            (vec![(i, j)], Scalar::one()),
            (vec![(-j, -i)], Scalar::from_int(-st_sign(i, j))),
        ],
    )
}

/// Matrix-unit expansion of `𝖤_ij`, used when building tensors.
pub fn sf_units(i: i32, j: i32) -> Vec<((i32, i32), Rational)> {
    let mut m: BTreeMap<(i32, i32), Rational> = BTreeMap::new();
    *m.entry((i, j)).or_insert_with(Rational::zero) += rat_int(1);
    *m.entry((-j, -i)).or_insert_with(Rational::zero) += rat_int(-st_sign(i, j));
    m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// An element of `gl(n|n)` known to be fixed by `ι`.
#[derive(Clone, Debug, PartialEq)]
pub struct PnElement {
    op: GradedOperator,
}

impl PnElement {
    pub fn new(op: GradedOperator) -> Result<Self> {
        if !op.is_q_free() {
            return Err(Error::NotGraded("elements of p_n have rational entries".into()));
        }
        if iota(&op)? != op {
            return Err(Error::NotGraded("operator is not fixed by iota".into()));
        }
        Ok(PnElement { op })
    }

    pub fn op(&self) -> &GradedOperator {
        &self.op
    }

    /// Checks the block shape `D = -A^t, B = B^t, C = -C^t` with the transpose
    /// taken about the anti-diagonal, `(A^t)_{ij} = A_{-j,-i}`.
    pub fn has_block_shape(&self) -> bool {
        let n = self.op.n() as i32;
        let e = |a: i32, b: i32| self.op.entry_at(&[a], &[b]);
        let pos: Vec<i32> = (1..=n).collect();
        let neg: Vec<i32> = (-n..0).collect();
        // A: odd-odd block (rows/cols negative), D: even-even block
        for &a in &neg {
            for &b in &neg {
                if e(-b, -a) != -e(a, b) {
                    return false;
                }
            }
        }
        for &a in &neg {
            for &b in &pos {
                if e(-b, -a) != e(a, b) {
                    return false;
                }
            }
        }
        for &a in &pos {
            for &b in &neg {
                if e(-b, -a) != -e(a, b) {
                    return false;
                }
            }
        }
        true
    }
}

/// All basis labels of `p_n` in canonical order.
pub fn pn_tags(n: usize) -> Vec<BasisTag> {
    let sp = SuperSpace::new(n);
    let mut tags: Vec<BasisTag> = Vec::new();
    for i in sp.indices() {
        for j in sp.indices() {
            if BasisTag::is_valid(i, j) {
                tags.push(BasisTag { i, j });
            }
        }
    }
    tags.sort();
    tags
}

pub fn pn_basis(n: usize) -> Vec<(BasisTag, PnElement)> {
    pn_tags(n)
        .into_iter()
        .map(|t| {
            let op = sf(n, t.i, t.j).expect("valid indices");
            (t, PnElement { op })
        })
        .collect()
}

/// Rewrites `𝖤_ab` as `coef · 𝖤_tag`; `None` when `𝖤_ab = 0`.
pub fn normalize_tag(a: i32, b: i32) -> Option<(i64, BasisTag)> {
    if BasisTag::is_valid(a, b) {
        return Some((1, BasisTag { i: a, j: b }));
    }
    if BasisTag::is_valid(-b, -a) {
        return Some((-st_sign(a, b), BasisTag { i: -b, j: -a }));
    }
    None
}

/// Coordinates of a 1-leg operator in the `𝖤` basis; errors if it is not in `p_n`.
pub fn coordinates(x: &GradedOperator) -> Result<PnCoords> {
    let n = x.n();
    let mut out = PnCoords::new();
    for t in pn_tags(n) {
        let mut c = x.entry_at(&[t.i], &[t.j]).as_constant().ok_or_else(|| Error::NotGraded("q-dependent entry".into()))?;
        if t.i == -t.j {
            c /= rat_int(2);
        }
        if !c.is_zero() {
            out.insert(t, c);
        }
    }
    if assemble(n, &out)? != *x {
        return Err(Error::NotGraded("element is not in p_n".into()));
    }
    Ok(out)
}

/// `Σ c_t 𝖤_t` as an operator.
pub fn assemble(n: usize, coords: &PnCoords) -> Result<GradedOperator> {
    let mut terms = Vec::new();
    for (t, c) in coords {
        for ((a, b), u) in sf_units(t.i, t.j) {
            terms.push((vec![(a, b)], Scalar::constant(c * u)));
        }
    }
    GradedOperator::from_units(n, 1, terms)
}

fn add_tag(out: &mut PnCoords, a: i32, b: i32, c: Rational) {
    if c.is_zero() {
        return;
    }
    if let Some((s, t)) = normalize_tag(a, b) {
        let slot = out.entry(t).or_insert_with(Rational::zero);
        *slot += c * rat_int(s);
        if slot.is_zero() {
            out.remove(&t);
        }
    }
}

/// Structure constants of `p_n` from the closed-form superbracket of `𝖤_ji` and `𝖤_lk`.
pub fn superbracket_pn(a: BasisTag, b: BasisTag) -> PnCoords {
    let (j, i) = (a.i, a.j);
    let (l, k) = (b.i, b.j);
    let d = |x: bool| if x { Rational::one() } else { Rational::zero() };
    let (pi, pj, pk, pl) = (parity(i) as u32, parity(j) as u32, parity(k) as u32, parity(l) as u32);
    let mut out = PnCoords::new();
    add_tag(&mut out, j, k, d(i == l));
    add_tag(&mut out, l, i, d(j == k) * rat_int(-sign(((pi + pj) % 2) * ((pk + pl) % 2))));
    add_tag(&mut out, j, -l, d(i == -k) * rat_int(-sign(pl * ((pk + 1) % 2))));
    add_tag(&mut out, -i, k, d(-j == l) * rat_int(-sign(pj * ((pi + 1) % 2))));
    out
}

/// Basis of `b_n`: `E_ij` with `|i| < |j|`, and `E_ii + E_{-i,-i}`, `E_{i,-i}`.
pub fn butterfly_basis(n: usize) -> Vec<GradedOperator> {
    let sp = SuperSpace::new(n);
    let mut out = Vec::new();
    for i in sp.indices() {
        for j in sp.indices() {
            if i.abs() < j.abs() {
                out.push(elementary(n, i, j).unwrap());
            }
        }
    }
    for i in 1..=n as i32 {
        out.push(elementary(n, i, i).unwrap().add(&elementary(n, -i, -i).unwrap()).unwrap());
        out.push(elementary(n, i, -i).unwrap());
    }
    out
}

/// `Str(X) = Σ (-1)^{p(i)} X_ii`.
pub fn supertrace(x: &GradedOperator) -> Scalar {
    let sp = x.space();
    let mut acc = Scalar::zero();
    for a in sp.indices() {
        let e = x.entry_at(&[a], &[a]);
        if parity(a) == 1 {
            acc -= &e;
        } else {
            acc += &e;
        }
    }
    acc
}

/// The invariant form `𝖡(A, B) = Str(AB)`.
pub fn supertrace_form(a: &GradedOperator, b: &GradedOperator) -> Result<Scalar> {
    Ok(supertrace(&a.compose(b)?))
}

/// Flattens a `q`-free 1-leg operator to a rational vector.
pub fn flatten_rational(x: &GradedOperator) -> SparseVec<Rational> {
    let d = x.space().dim_legs(x.in_legs());
    x.entries()
        .iter()
        .map(|(&(r, c), v)| (r * d + c, v.as_constant().expect("q-free operator")))
        .collect()
}

fn span_rank(ops: &[GradedOperator]) -> usize {
    let mut e: Echelon<Rational> = Echelon::new();
    for o in ops {
        e.insert(&flatten_rational(o));
    }
    e.rank()
}

fn all_units(n: usize) -> Vec<GradedOperator> {
    let sp = SuperSpace::new(n);
    let mut out = Vec::new();
    for a in sp.indices() {
        for b in sp.indices() {
            out.push(elementary(n, a, b).unwrap());
        }
    }
    out
}

/// Checks that `(gl(n|n), p_n, b_n)` is a Manin supertriple.
pub fn verify_manin_triple(n: usize) -> VerificationReport {
    let mut rb = ReportBuilder::new("manin", "(gl(n|n), p_n, b_n) is a Manin supertriple").param("n", n);
    let pn: Vec<GradedOperator> = pn_basis(n).into_iter().map(|(_, e)| e.op).collect();
    let tags = pn_tags(n);
    let bn = butterfly_basis(n);
    let dim = 2 * n * n;
    rb.detail("dimensions", pn.len() == dim && bn.len() == dim, format!("dim p_n = {}, dim b_n = {}, expected {dim}", pn.len(), bn.len()));

    let fixed = pn.iter().all(|x| iota(x).map(|y| y == *x).unwrap_or(false));
    rb.detail("p_n fixed by iota", fixed, "every basis element satisfies iota(X) = X");

    // p_n closed, and the closed-form constants agree with matrix brackets
    let mut closed = true;
    let mut constants = true;
    for (a, x) in tags.iter().zip(&pn) {
        for (b, y) in tags.iter().zip(&pn) {
            let br = x.supercommutator(y).unwrap();
            match coordinates(&br) {
                Ok(c) => {
                    if c != superbracket_pn(*a, *b) {
                        constants = false;
                    }
                }
                Err(_) => closed = false,
            }
        }
    }
    rb.detail("p_n subalgebra", closed, "all brackets of basis pairs lie in p_n");
    rb.detail("p_n structure constants", constants, "closed-form bracket equals matrix supercommutator");

    let mut bspan: Echelon<Rational> = Echelon::new();
    for y in &bn {
        bspan.insert(&flatten_rational(y));
    }
    let bclosed = bn.iter().all(|x| bn.iter().all(|y| bspan.contains(&flatten_rational(&x.supercommutator(y).unwrap()))));
    rb.detail("b_n subalgebra", bclosed, "all brackets of basis pairs lie in b_n");

    let iso_p = pn.iter().all(|x| pn.iter().all(|y| supertrace_form(x, y).unwrap().is_zero()));
    let iso_b = bn.iter().all(|x| bn.iter().all(|y| supertrace_form(x, y).unwrap().is_zero()));
    rb.detail("p_n isotropic", iso_p, "B vanishes on p_n x p_n");
    rb.detail("b_n isotropic", iso_b, "B vanishes on b_n x b_n");

    let mut union = pn.clone();
    union.extend(bn.iter().cloned());
    let r = span_rank(&union);
    rb.detail("transversal", r == 4 * n * n, format!("rank of p_n + b_n = {r}, dim gl = {}", 4 * n * n));

    let pairing: Vec<SparseVec<Rational>> = pn
        .iter()
        .map(|x| {
            bn.iter()
                .enumerate()
                .filter_map(|(k, y)| {
                    let v = supertrace_form(x, y).unwrap().as_constant().unwrap();
                    (!v.is_zero()).then_some((k, v))
                })
                .collect()
        })
        .collect();
    let pr = crate::linalg::rank(&pairing);
    rb.detail("pairing non-degenerate", pr == dim, format!("rank of the p_n x b_n pairing = {pr}"));

    let units = all_units(n);
    let form_rows: Vec<SparseVec<Rational>> = units
        .iter()
        .map(|x| {
            units
                .iter()
                .enumerate()
                .filter_map(|(k, y)| {
                    let v = supertrace_form(x, y).unwrap().as_constant().unwrap();
                    (!v.is_zero()).then_some((k, v))
                })
                .collect()
        })
        .collect();
    let fr = crate::linalg::rank(&form_rows);
    rb.detail("form non-degenerate", fr == units.len(), format!("rank of the Gram matrix = {fr}"));

    let mut supersym = true;
    for x in &units {
        for y in &units {
            let l = supertrace_form(x, y).unwrap();
            let r = supertrace_form(y, x).unwrap().scale(&rat_int(sign(u32::from(x.parity() & y.parity()))));
            if l != r {
                supersym = false;
            }
        }
    }
    rb.detail("form supersymmetric", supersym, "B(X,Y) = (-1)^{p(X)p(Y)} B(Y,X) on matrix units");

    let triples: Vec<(usize, usize, usize)> = if n <= 2 {
        let m = units.len();
        (0..m).flat_map(|a| (0..m).flat_map(move |b| (0..m).map(move |c| (a, b, c)))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + n as u64);
        let m = units.len();
        (0..400).map(|_| (rng.gen_range(0..m), rng.gen_range(0..m), rng.gen_range(0..m))).collect()
    };
    let invariant = triples.iter().all(|&(a, b, c)| {
        let (x, y, z) = (&units[a], &units[b], &units[c]);
        let l = supertrace_form(&x.supercommutator(y).unwrap(), z).unwrap();
        let r = supertrace_form(x, &y.supercommutator(z).unwrap()).unwrap();
        l == r
    });
    rb.detail(
        "form ad-invariant",
        invariant,
        format!("B([X,Y],Z) = B(X,[Y,Z]) on {} matrix-unit triples", triples.len()),
    );
    rb.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iota_examples() {
        let e12 = elementary(2, 1, 2).unwrap();
        assert_eq!(iota(&iota(&e12).unwrap()).unwrap(), e12);
        for n in 1..=3 {
            let sp = SuperSpace::new(n);
            for i in sp.indices() {
                for j in sp.indices() {
                    let e = elementary(n, i, j).unwrap();
                    assert_eq!(iota(&iota(&e).unwrap()).unwrap(), e);
                    let want = elementary(n, -j, -i).unwrap().scale(&Scalar::from_int(-st_sign(i, j)));
                    assert_eq!(iota(&e).unwrap(), want);
                    // E_ij + iota(E_ij) = 𝖤_ij
                    assert_eq!(e.add(&iota(&e).unwrap()).unwrap(), sf(n, i, j).unwrap());
                }
            }
        }
    }

    #[test]
    fn sf_examples() {
        assert!(sf(1, 1, -1).unwrap().is_zero());
        assert_eq!(sf(1, -1, 1).unwrap(), elementary(1, -1, 1).unwrap().scale(&Scalar::from_int(2)));
        let want = elementary(1, 1, 1).unwrap().sub(&elementary(1, -1, -1).unwrap()).unwrap();
        assert_eq!(sf(1, 1, 1).unwrap(), want);
        // 𝖤_ij = -(-1)^{p(i)(p(j)+1)} 𝖤_{-j,-i}
        for i in [-2, -1, 1, 2] {
            for j in [-2, -1, 1, 2] {
                let l = sf(2, i, j).unwrap();
                let r = sf(2, -j, -i).unwrap().scale(&Scalar::from_int(-st_sign(i, j)));
                assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn basis_counts() {
        assert_eq!(pn_tags(1), vec![BasisTag { i: -1, j: 1 }, BasisTag { i: 1, j: 1 }]);
        for n in 1..=3 {
            assert_eq!(pn_basis(n).len(), 2 * n * n);
            // independent enumeration: 2n(n-1) off-diagonal labels plus 2n
            let off = (2 * n) * (2 * n) - (2 * n) * 2;
            assert_eq!(off / 2 + 2 * n, 2 * n * n);
            assert_eq!(butterfly_basis(n).len(), 2 * n * n);
            for (_, e) in pn_basis(n) {
                assert!(PnElement::new(e.op().clone()).is_ok());
                assert!(e.has_block_shape());
            }
        }
    }

    #[test]
    fn bracket_matches_matrix_oracle() {
        for n in 1..=3 {
            let basis = pn_basis(n);
            for (a, x) in &basis {
                for (b, y) in &basis {
                    let m = x.op().supercommutator(y.op()).unwrap();
                    assert_eq!(coordinates(&m).unwrap(), superbracket_pn(*a, *b), "{a} {b}");
                }
            }
        }
        let t11 = BasisTag { i: 1, j: 1 };
        assert!(superbracket_pn(t11, t11).is_empty());
    }

    #[test]
    fn supertrace_values() {
        let e = elementary(2, -1, -1).unwrap();
        assert_eq!(supertrace(&e), Scalar::from_int(-1));
        assert_eq!(supertrace(&GradedOperator::identity(2, 1)), Scalar::zero());
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_tag(1, -1), None);
        assert_eq!(normalize_tag(-1, -1), Some((-1, BasisTag { i: 1, j: 1 })));
        assert_eq!(normalize_tag(1, 2), Some((-1, BasisTag { i: -2, j: -1 })));
    }

    #[test]
    fn manin_triple_small() {
        for n in 1..=2 {
            let r = verify_manin_triple(n);
            assert!(r.pass, "{}", r.text_line());
        }
    }
}
