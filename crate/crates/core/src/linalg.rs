//! Exact sparse linear algebra over `Q` and `Q(q)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Frac, Rational, Scalar};
use crate::superspace::GradedOperator;

/// The fields the solvers run over.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; callers never pass zero.
    fn inv(&self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl Field for Frac {
    fn zero() -> Self {
        Frac::zero()
    }
    fn one() -> Self {
        Frac::one()
    }
    fn is_zero(&self) -> bool {
        Frac::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        Frac::inv(self).expect("inverse of zero")
    }
}

/// Sparse vector as a column-sorted list of nonzero entries.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn sparse_from_map<F: Field>(m: BTreeMap<usize, F>) -> SparseVec<F> {
    m.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// An echelon basis of a row space, built incrementally.
///
/// Each stored row has leading entry 1 at its pivot column and is zero at all
/// other pivot columns once [`Echelon::back_substitute`] has run.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    rows: BTreeMap<usize, SparseVec<F>>,
    reduced: bool,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new(), reduced: true }
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec<F>> {
        self.rows.get(&pivot)
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseVec<F>)> {
        self.rows.iter().map(|(p, r)| (*p, r))
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[(usize, F)]) -> SparseVec<F> {
        let mut w: BTreeMap<usize, F> = v.iter().cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = w.range(cursor..).find(|(c, _)| self.rows.contains_key(c)).map(|(c, x)| (*c, x.clone()));
            let Some((c, f)) = next else { break };
            for (j, x) in &self.rows[&c] {
                let cur = w.remove(j).unwrap_or_else(F::zero);
                let nv = cur.sub(&f.mul(x));
                if !nv.is_zero() {
                    w.insert(*j, nv);
                }
            }
            cursor = c + 1;
        }
        sparse_from_map(w)
    }

    /// Adds `v` to the row space; returns the new pivot if `v` was independent.
    pub fn insert(&mut self, v: &[(usize, F)]) -> Option<usize> {
        let r = self.reduce(v);
        let (p, lead) = r.first().cloned()?;
        let inv = lead.inv();
        let row: SparseVec<F> = r.into_iter().map(|(j, x)| (j, x.mul(&inv))).collect();
        if !self.rows.is_empty() {
            self.reduced = false;
        }
        self.rows.insert(p, row);
        Some(p)
    }

    pub fn contains(&self, v: &[(usize, F)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Brings the rows to fully reduced form.
    pub fn back_substitute(&mut self) {
        if self.reduced {
            return;
        }
        let pivots: Vec<usize> = self.rows.keys().rev().copied().collect();
        for &p in &pivots {
            let row = self.rows.remove(&p).unwrap();
            // reduce the tail against the other (already reduced, larger) pivots
            let head = vec![row[0].clone()];
            let tail = self.reduce(&row[1..]);
            let mut full = head;
            full.extend(tail);
            self.rows.insert(p, full);
        }
        self.reduced = true;
    }

    /// Basis of the null space of the stored rows, one vector per free column.
    pub fn kernel(&mut self, ncols: usize) -> Vec<SparseVec<F>> {
        self.back_substitute();
        let mut by_free: BTreeMap<usize, Vec<(usize, F)>> = BTreeMap::new();
        for (p, row) in &self.rows {
            for (j, x) in &row[1..] {
                by_free.entry(*j).or_default().push((*p, x.neg()));
            }
        }
        let mut out = Vec::new();
        for f in 0..ncols {
            if self.rows.contains_key(&f) {
                continue;
            }
            let mut v = by_free.remove(&f).unwrap_or_default();
            v.push((f, F::one()));
            v.sort_by_key(|t| t.0);
            out.push(v);
        }
        out
    }
}

/// Flattens an operator to a vector indexed by `row * cols + col`.
pub fn flatten_with<F: Field>(op: &GradedOperator, f: impl Fn(&Scalar) -> F) -> SparseVec<F> {
    let d = op.space().dim_legs(op.in_legs());
    op.entries().iter().map(|(&(r, c), v)| (r * d + c, f(v))).filter(|(_, x)| !x.is_zero()).collect()
}

pub fn flatten_frac(op: &GradedOperator) -> SparseVec<Frac> {
    flatten_with(op, |s| Frac::from(s.clone()))
}

/// Flattens a `q`-free operator; panics on a `q`-dependent entry.
pub fn flatten_constant(op: &GradedOperator) -> SparseVec<Rational> {
    flatten_with(op, |s| s.as_constant().expect("q-free operator"))
}

/// A linearly independent set of words in some generators, with their images.
#[derive(Clone, Debug)]
pub struct OperatorSpan<L> {
    pub words: Vec<Vec<L>>,
    pub ops: Vec<GradedOperator>,
    /// Number of new basis elements found at each word length.
    pub growth: Vec<usize>,
}

impl<L> OperatorSpan<L> {
    pub fn dim(&self) -> usize {
        self.ops.len()
    }
}

/// Span of the unital algebra generated by `gens`, found level by level.
///
/// Level `k + 1` consists of the independent words of length `k` extended on
/// the right by every generator, in the order given; the search stops at the
/// first level that adds nothing, after which no longer word can add rank.
pub fn operator_span<L: Clone, F: Field>(
    identity: GradedOperator,
    gens: &[(L, GradedOperator)],
    flatten: impl Fn(&GradedOperator) -> SparseVec<F>,
    max_dim: usize,
) -> Result<OperatorSpan<L>> {
    let mut ech: Echelon<F> = Echelon::new();
    ech.insert(&flatten(&identity));
    let mut words = vec![Vec::new()];
    let mut ops = vec![identity];
    let mut growth = vec![1];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &b in &frontier {
            for (g, gop) in gens {
                let op = ops[b].compose(gop)?;
                if ech.insert(&flatten(&op)).is_some() {
                    let mut w = words[b].clone();
                    w.push(g.clone());
                    words.push(w);
                    ops.push(op);
                    next.push(ops.len() - 1);
                    if ops.len() > max_dim {
                        return Err(Error::TooLarge(format!("algebra span exceeds {max_dim}")));
                    }
                }
            }
        }
        if !next.is_empty() {
            growth.push(next.len());
        }
        frontier = next;
    }
    Ok(OperatorSpan { words, ops, growth })
}

pub fn rank<F: Field>(rows: &[SparseVec<F>]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Null space of the system `rows · x = 0` in `ncols` unknowns.
pub fn kernel<F: Field>(rows: &[SparseVec<F>], ncols: usize) -> Vec<SparseVec<F>> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.kernel(ncols)
}

/// Fraction-free Gauss-Jordan inversion of a square matrix over `Q[q, q^-1]`.
///
/// Returns `(det, adj)` with `A · adj = det · 1`. Every division is exact in
/// the Laurent ring.
pub fn bareiss_inverse(a: &[Vec<Scalar>]) -> Result<(Scalar, Vec<Vec<Scalar>>)> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::ShapeMismatch("matrix is not square".into()));
    }
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    let mut prev = Scalar::one();
    for k in 0..n {
        let piv = (k..n).find(|&r| !m[r][k].is_zero()).ok_or(Error::ZeroDenominator)?;
        if piv != k {
            m.swap(piv, k);
        }
        let pk = m[k][k].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = m[i][k].clone();
            for j in 0..2 * n {
                if j == k {
                    continue;
                }
                let v = &(&pk * &m[i][j]) - &(&f * &m[k][j]);
                m[i][j] = v.div_exact(&prev)?;
            }
            m[i][k] = Scalar::zero();
        }
        prev = pk;
    }
    let det = prev;
    let adj = m.into_iter().map(|r| r[n..].to_vec()).collect();
    Ok((det, adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn r(v: i64) -> Rational {
        rat_int(v)
    }

    #[test]
    fn rank_and_kernel_small() {
        let rows = vec![
            vec![(0, r(1)), (1, r(2)), (2, r(3))],
            vec![(0, r(2)), (1, r(4)), (2, r(6))],
            vec![(1, r(1)), (2, r(1))],
        ];
        assert_eq!(rank(&rows), 2);
        let k = kernel(&rows, 3);
        assert_eq!(k.len(), 1);
        // x = (-1, -1, 1) up to scale
        for row in &rows {
            let dot: Rational = row
                .iter()
                .map(|(j, a)| a * k[0].iter().find(|t| t.0 == *j).map(|t| t.1.clone()).unwrap_or_default())
                .sum();
            assert!(Zero::is_zero(&dot));
        }
    }

    #[test]
    fn echelon_reduce_and_contains() {
        let mut e: Echelon<Rational> = Echelon::new();
        e.insert(&[(1, r(1)), (3, r(1))]);
        e.insert(&[(0, r(2)), (1, r(2))]);
        assert!(e.contains(&[(0, r(1)), (3, r(-1))]));
        assert!(!e.contains(&[(2, r(1))]));
        e.back_substitute();
        assert_eq!(e.row(0).unwrap(), &vec![(0, r(1)), (3, r(-1))]);
    }

    #[test]
    fn kernel_over_function_field() {
        let q = Frac::from(Scalar::q());
        let one = Frac::one();

        // q x0 - x1 = 0
        let rows = vec![vec![(0, q.clone()), (1, one.neg())]];
        let k = kernel(&rows, 2);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![(0, Field::inv(&q)), (1, Frac::one())]);
    }

    #[test]
    fn bareiss_inverts_laurent_matrix() {
        let q = Scalar::q();
        let qi = Scalar::q_pow(-1);
        let a = vec![
            vec![q.clone(), Scalar::epsilon(), Scalar::zero()],
            vec![Scalar::zero(), qi.clone(), Scalar::one()],
            vec![Scalar::one(), Scalar::zero(), Scalar::from_int(2)],
        ];
        let (det, adj) = bareiss_inverse(&a).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Scalar::zero();
                for k in 0..3 {
                    acc += &(&a[i][k] * &adj[k][j]);
                }
                let want = if i == j { det.clone() } else { Scalar::zero() };
                assert_eq!(acc, want);
            }
        }
        let _ = rat(1, 2);
    }

    #[test]
    fn bareiss_with_row_swap() {
        let a = vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![Scalar::q(), Scalar::zero()],
        ];
        let (det, adj) = bareiss_inverse(&a).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let acc = &(&a[i][0] * &adj[0][j]) + &(&a[i][1] * &adj[1][j]);
                assert_eq!(acc, if i == j { det.clone() } else { Scalar::zero() });
            }
        }
    }
}
