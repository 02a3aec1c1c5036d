//! The graded space `C(n|n)`, sparse graded operators on its tensor powers and
//! the Koszul sign calculus.
//!
//! Basis vectors are ordered `e_-n, ..., e_-1, e_1, ..., e_n`. A basis vector of
//! the `l`-fold tensor power is encoded row-major, first leg most significant.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Parity of a basis index: odd exactly for negative indices.
pub fn parity(i: i32) -> u8 {
    u8::from(i < 0)
}

/// `(-1)^k`.
pub fn sign(k: u32) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A validated index in `{±1, ..., ±n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SuperIndex(i32);

impl SuperIndex {
    pub fn new(n: usize, value: i32) -> Result<Self> {
        if value == 0 || value.unsigned_abs() as usize > n {
            return Err(Error::IndexOutOfRange(format!("{value} not in ±1..±{n}")));
        }
        Ok(SuperIndex(value))
    }

    pub fn value(self) -> i32 {
        self.0
    }

    pub fn parity(self) -> u8 {
        parity(self.0)
    }
}

/// The space `C(n|n)` and its tensor powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    pub n: usize,
}

impl SuperSpace {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "n must be positive");
        SuperSpace { n }
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn dim_legs(&self, legs: usize) -> usize {
        self.dim().pow(legs as u32)
    }

    /// Basis indices in the fixed order.
    pub fn indices(&self) -> Vec<i32> {
        let n = self.n as i32;
        (-n..0).chain(1..=n).collect()
    }

    pub fn check(&self, a: i32) -> Result<()> {
        SuperIndex::new(self.n, a).map(|_| ())
    }

    /// Position of `e_a` in the basis order.
    pub fn pos(&self, a: i32) -> usize {
        let n = self.n as i32;
        debug_assert!(a != 0 && a.abs() <= n);
        if a < 0 {
            (a + n) as usize
        } else {
            (a + n - 1) as usize
        }
    }

    pub fn index_at(&self, pos: usize) -> i32 {
        let n = self.n as i32;
        let p = pos as i32;
        if p < n {
            p - n
        } else {
            p - n + 1
        }
    }

    pub fn encode(&self, idx: &[i32]) -> usize {
        idx.iter().fold(0, |acc, &a| acc * self.dim() + self.pos(a))
    }

    pub fn decode(&self, mut code: usize, legs: usize) -> Vec<i32> {
        let d = self.dim();
        let mut out = vec![0; legs];
        for k in (0..legs).rev() {
            out[k] = self.index_at(code % d);
            code /= d;
        }
        out
    }

    /// Total parity of an encoded tensor basis vector.
    pub fn code_parity(&self, mut code: usize, legs: usize) -> u8 {
        let d = self.dim();
        let mut p = 0;
        for _ in 0..legs {
            if code % d < self.n {
                p ^= 1;
            }
            code /= d;
        }
        p
    }
}

/// A sparse vector in a tensor power, keyed by encoded basis vector.
pub type Vector = BTreeMap<usize, Scalar>;

/// A homogeneous sparse linear map `C(n|n)^{in_legs} -> C(n|n)^{out_legs}`.
///
/// Square operators (the common case) have `in_legs == out_legs`; the
/// evaluation and coevaluation maps are rectangular.
/// Equality ignores the declared parity of zero operators.
#[derive(Clone)]
pub struct GradedOperator {
    space: SuperSpace,
    out_legs: usize,
    in_legs: usize,
    parity: u8,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl PartialEq for GradedOperator {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space
            && self.out_legs == other.out_legs
            && self.in_legs == other.in_legs
            && (self.parity == other.parity || self.entries.is_empty())
            && self.entries == other.entries
    }
}

impl Eq for GradedOperator {}

impl fmt::Debug for GradedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GradedOperator(n={}, legs={}->{}, parity={}, nnz={})",
            self.space.n,
            self.in_legs,
            self.out_legs,
            self.parity,
            self.entries.len()
        )
    }
}

impl GradedOperator {
    /// Builds an operator, checking that every entry respects `parity`.
    pub fn new(
        n: usize,
        legs: usize,
        parity: u8,
        entries: impl IntoIterator<Item = ((usize, usize), Scalar)>,
    ) -> Result<Self> {
        Self::rectangular(n, legs, legs, parity, entries)
    }

    pub fn rectangular(
        n: usize,
        out_legs: usize,
        in_legs: usize,
        parity: u8,
        entries: impl IntoIterator<Item = ((usize, usize), Scalar)>,
    ) -> Result<Self> {
        let space = SuperSpace::new(n);
        let (dr, dc) = (space.dim_legs(out_legs), space.dim_legs(in_legs));
        let mut map: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for ((r, c), v) in entries {
            if r >= dr || c >= dc {
                return Err(Error::IndexOutOfRange(format!("entry ({r},{c})")));
            }
            if v.is_zero() {
                continue;
            }
            let p = space.code_parity(r, out_legs) ^ space.code_parity(c, in_legs);
            if p != parity {
                return Err(Error::NotGraded(format!("entry ({r},{c}) has parity {p}, expected {parity}")));
            }
            let slot = map.entry((r, c)).or_insert_with(Scalar::zero);
            *slot += &v;
            if slot.is_zero() {
                map.remove(&(r, c));
            }
        }
        Ok(GradedOperator { space, out_legs, in_legs, parity: parity % 2, entries: map })
    }

    // trusted constructor for internal results already known to be graded
    fn raw(space: SuperSpace, out_legs: usize, in_legs: usize, parity: u8, entries: BTreeMap<(usize, usize), Scalar>) -> Self {
        GradedOperator { space, out_legs, in_legs, parity, entries }
    }

    pub fn zero(n: usize, legs: usize) -> Self {
        Self::raw(SuperSpace::new(n), legs, legs, 0, BTreeMap::new())
    }

    pub fn identity(n: usize, legs: usize) -> Self {
        let space = SuperSpace::new(n);
        let entries = (0..space.dim_legs(legs)).map(|k| ((k, k), Scalar::one())).collect();
        Self::raw(space, legs, legs, 0, entries)
    }

    /// Sum of Koszul-signed tensor products of matrix units.
    ///
    /// Each term is a list of `(a, b)` pairs, one per leg, standing for
    /// `E_{a1 b1} ⊗ ... ⊗ E_{al bl}`; applied to `e_{b1} ⊗ ... ⊗ e_{bl}` a term
    /// picks up the sign of moving each factor past the earlier inputs.
    pub fn from_units(n: usize, legs: usize, terms: impl IntoIterator<Item = (Vec<(i32, i32)>, Scalar)>) -> Result<Self> {
        let space = SuperSpace::new(n);
        let mut entries: Vec<((usize, usize), Scalar)> = Vec::new();
        let mut par: Option<u8> = None;
        for (units, c) in terms {
            if units.len() != legs {
                return Err(Error::ShapeMismatch(format!("term with {} factors on {legs} legs", units.len())));
            }
            for &(a, b) in &units {
                space.check(a)?;
                space.check(b)?;
            }
            if c.is_zero() {
                continue;
            }
            let mut s = 0u32;
            let mut before = 0u8;
            let mut tp = 0u8;
            for &(a, b) in &units {
                let pe = parity(a) ^ parity(b);
                s += u32::from(pe & before);
                before ^= parity(b);
                tp ^= pe;
            }
            match par {
                None => par = Some(tp),
                Some(p) if p != tp => return Err(Error::NotGraded("mixed parity terms".into())),
                _ => {}
            }
            let rows: Vec<i32> = units.iter().map(|u| u.0).collect();
            let cols: Vec<i32> = units.iter().map(|u| u.1).collect();
            let v = if s % 2 == 1 { -c } else { c };
            entries.push(((space.encode(&rows), space.encode(&cols)), v));
        }
        Self::new(n, legs, par.unwrap_or(0), entries)
    }

    /// Inverse of [`GradedOperator::from_units`]: coefficients of the matrix-unit tensors.
    pub fn to_units(&self) -> Vec<(Vec<(i32, i32)>, Scalar)> {
        assert!(self.is_square());
        let legs = self.in_legs;
        self.entries
            .iter()
            .map(|(&(r, c), v)| {
                let rows = self.space.decode(r, legs);
                let cols = self.space.decode(c, legs);
                let mut s = 0u32;
                let mut before = 0u8;
                for k in 0..legs {
                    let pe = parity(rows[k]) ^ parity(cols[k]);
                    s += u32::from(pe & before);
                    before ^= parity(cols[k]);
                }
                let units = rows.into_iter().zip(cols).collect();
                (units, if s % 2 == 1 { -v } else { v.clone() })
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.space.n
    }

    pub fn space(&self) -> SuperSpace {
        self.space
    }

    /// Leg count of a square operator.
    pub fn legs(&self) -> usize {
        debug_assert!(self.is_square());
        self.in_legs
    }

    pub fn in_legs(&self) -> usize {
        self.in_legs
    }

    pub fn out_legs(&self) -> usize {
        self.out_legs
    }

    pub fn is_square(&self) -> bool {
        self.in_legs == self.out_legs
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), Scalar> {
        &self.entries
    }

    pub fn entry(&self, r: usize, c: usize) -> Scalar {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    /// Entry addressed by index tuples.
    pub fn entry_at(&self, rows: &[i32], cols: &[i32]) -> Scalar {
        self.entry(self.space.encode(rows), self.space.encode(cols))
    }

    fn same_shape(&self, rhs: &Self) -> Result<()> {
        if self.space != rhs.space || self.out_legs != rhs.out_legs || self.in_legs != rhs.in_legs {
            return Err(Error::ShapeMismatch(format!("{self:?} vs {rhs:?}")));
        }
        Ok(())
    }

    // parity of a sum; zero operators adopt the other side's parity
    fn sum_parity(&self, rhs: &Self) -> Result<u8> {
        if self.is_zero() {
            return Ok(rhs.parity);
        }
        if rhs.is_zero() || self.parity == rhs.parity {
            return Ok(self.parity);
        }
        Err(Error::NotGraded("sum of operators of different parity".into()))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        let parity = self.sum_parity(rhs)?;
        let mut entries = self.entries.clone();
        for (k, v) in &rhs.entries {
            let slot = entries.entry(*k).or_insert_with(Scalar::zero);
            *slot += v;
            if slot.is_zero() {
                entries.remove(k);
            }
        }
        Ok(Self::raw(self.space, self.out_legs, self.in_legs, parity, entries))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::raw(self.space, self.out_legs, self.in_legs, self.parity, BTreeMap::new());
        }
        let entries = self.entries.iter().map(|(k, v)| (*k, v * c)).collect();
        Self::raw(self.space, self.out_legs, self.in_legs, self.parity, entries)
    }

    /// Operator product `self ∘ rhs`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if self.space != rhs.space || self.in_legs != rhs.out_legs {
            return Err(Error::ShapeMismatch(format!("cannot compose {self:?} with {rhs:?}")));
        }
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (&(r, k), x) in &self.entries {
            for (&(_, c), y) in rhs.entries.range((k, 0)..=(k, usize::MAX)) {
                let slot = acc.entry((r, c)).or_insert_with(Scalar::zero);
                *slot += &(x * y);
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(Self::raw(self.space, self.out_legs, rhs.in_legs, (self.parity + rhs.parity) % 2, acc))
    }

    /// `[A, B] = AB - (-1)^{p(A)p(B)} BA`.
    pub fn supercommutator(&self, rhs: &Self) -> Result<Self> {
        let ab = self.compose(rhs)?;
        let ba = rhs.compose(self)?;
        if self.parity & rhs.parity == 1 {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }

    /// Koszul tensor product: `(A⊗B)(v⊗w) = (-1)^{p(B)p(v)} Av ⊗ Bw`.
    pub fn koszul_tensor(&self, rhs: &Self) -> Result<Self> {
        if self.space != rhs.space {
            return Err(Error::ShapeMismatch("tensor factors over different n".into()));
        }
        let sp = self.space;
        let (dr, dc) = (sp.dim_legs(rhs.out_legs), sp.dim_legs(rhs.in_legs));
        let mut entries = BTreeMap::new();
        for (&(r1, c1), x) in &self.entries {
            let neg = rhs.parity & sp.code_parity(c1, self.in_legs) == 1;
            for (&(r2, c2), y) in &rhs.entries {
                let v = x * y;
                entries.insert((r1 * dr + r2, c1 * dc + c2), if neg { -v } else { v });
            }
        }
        Ok(Self::raw(
            sp,
            self.out_legs + rhs.out_legs,
            self.in_legs + rhs.in_legs,
            (self.parity + rhs.parity) % 2,
            entries,
        ))
    }

    /// Places a 1-leg operator at leg `k` (1-based) of `legs`, identity elsewhere.
    pub fn embed_single(&self, k: usize, legs: usize) -> Result<Self> {
        if !self.is_square() || self.in_legs != 1 || k == 0 || k > legs {
            return Err(Error::ShapeMismatch(format!("embed 1-leg operator at {k} of {legs}")));
        }
        let n = self.n();
        let left = Self::identity(n, k - 1).koszul_tensor(self)?;
        left.koszul_tensor(&Self::identity(n, legs - k))
    }

    /// Acts as the even 2-leg operator `self` on legs `(k, k+1)` (1-based).
    pub fn embed_legs(&self, k: usize, legs: usize) -> Result<Self> {
        self.embed_pair(k, k + 1, legs)
    }

    /// Acts as the even 2-leg operator `self` on legs `k < m` (1-based), identity
    /// elsewhere. For non-adjacent legs the second factor passes the middle legs,
    /// contributing `(-1)^{p(second factor) · p(middle)}`.
    pub fn embed_pair(&self, k: usize, m: usize, legs: usize) -> Result<Self> {
        if !self.is_square() || self.in_legs != 2 {
            return Err(Error::ShapeMismatch("leg embedding needs a 2-leg operator".into()));
        }
        if !(1 <= k && k < m && m <= legs) {
            return Err(Error::IndexOutOfRange(format!("legs ({k},{m}) of {legs}")));
        }
        if self.parity == 1 && !self.is_zero() {
            return Err(Error::OddEmbedding);
        }
        let sp = self.space;
        let d = sp.dim();
        let (pre, mid, post) = (k - 1, m - k - 1, legs - m);
        let (dpre, dmid, dpost) = (sp.dim_legs(pre), sp.dim_legs(mid), sp.dim_legs(post));
        let mut entries = BTreeMap::new();
        for (&(r, c), v) in &self.entries {
            let (ra, rb) = (r / d, r % d);
            let (ca, cb) = (c / d, c % d);
            let second_odd = (u8::from(rb < sp.n) ^ u8::from(cb < sp.n)) == 1;
            for x in 0..dpre {
                for y in 0..dmid {
                    let neg = second_odd && sp.code_parity(y, mid) == 1;
                    let val = if neg { -v } else { v.clone() };
                    for z in 0..dpost {
                        let enc = |a: usize, b: usize| ((((x * d + a) * dmid + y) * d + b) * dpost) + z;
                        entries.insert((enc(ra, rb), enc(ca, cb)), val.clone());
                    }
                }
            }
        }
        Ok(Self::raw(sp, legs, legs, 0, entries))
    }

    /// Applies the operator to a sparse vector.
    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out: Vector = BTreeMap::new();
        for (&(r, c), x) in &self.entries {
            if let Some(y) = v.get(&c) {
                let slot = out.entry(r).or_insert_with(Scalar::zero);
                *slot += &(x * y);
            }
        }
        out.retain(|_, s| !s.is_zero());
        out
    }

    /// Applies the operator to a tensor of basis vectors.
    pub fn apply_basis(&self, idx: &[i32]) -> Vector {
        let mut v = BTreeMap::new();
        v.insert(self.space.encode(idx), Scalar::one());
        self.apply(&v)
    }

    pub fn map_entries(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        let mut entries: BTreeMap<(usize, usize), Scalar> = self.entries.iter().map(|(k, v)| (*k, f(v))).collect();
        entries.retain(|_, v| !v.is_zero());
        Self::raw(self.space, self.out_legs, self.in_legs, self.parity, entries)
    }

    /// Entrywise substitution of a nonzero rational `q`; the result is `q`-free.
    pub fn specialize(&self, q: &Rational) -> Self {
        self.map_entries(|s| Scalar::constant(s.eval(q)))
    }

    pub fn eval_at_one(&self) -> Self {
        self.map_entries(|s| Scalar::constant(s.eval_at_one()))
    }

    /// Smallest `(q-1)`-valuation among the entries (`u32::MAX` for zero).
    pub fn valuation_at_one(&self) -> u32 {
        self.entries.values().map(|s| s.valuation_at_one()).min().unwrap_or(u32::MAX)
    }

    pub fn is_q_free(&self) -> bool {
        self.entries.values().all(|s| s.is_constant())
    }

    /// Canonical JSON form, entries sorted by (row, col).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(OperatorJson::from(self)).expect("operator serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: OperatorJson = serde_json::from_value(v.clone())?;
        j.try_into()
    }
}

/// The canonical JSON form `{n, legs, parity, entries: [[row, col, "scalar"], ...]}`.
#[derive(Serialize, Deserialize)]
struct OperatorJson {
    n: usize,
    legs: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    out_legs: Option<usize>,
    parity: u8,
    entries: Vec<(usize, usize, String)>,
}

impl From<&GradedOperator> for OperatorJson {
    fn from(op: &GradedOperator) -> Self {
        OperatorJson {
            n: op.n(),
            legs: op.in_legs,
            out_legs: (!op.is_square()).then_some(op.out_legs),
            parity: op.parity,
            entries: op.entries.iter().map(|(&(r, c), v)| (r, c, v.to_string())).collect(),
        }
    }
}

impl TryFrom<OperatorJson> for GradedOperator {
    type Error = Error;
    fn try_from(j: OperatorJson) -> Result<Self> {
        let mut entries = Vec::with_capacity(j.entries.len());
        for (r, c, s) in j.entries {
            entries.push(((r, c), s.parse::<Scalar>()?));
        }
        if j.n == 0 {
            return Err(Error::Parse("n must be positive".into()));
        }
        GradedOperator::rectangular(j.n, j.out_legs.unwrap_or(j.legs), j.legs, j.parity, entries)
    }
}

/// The matrix unit `E_ij` on `C(n|n)`.
pub fn elementary(n: usize, i: i32, j: i32) -> Result<GradedOperator> {
    GradedOperator::from_units(n, 1, [(vec![(i, j)], Scalar::one())])
}

/// The super permutation `P = Σ (-1)^{p(b)} E_ab ⊗ E_ba`.
pub fn super_permutation(n: usize) -> GradedOperator {
    let sp = SuperSpace::new(n);
    let mut terms = Vec::new();
    for a in sp.indices() {
        for b in sp.indices() {
            terms.push((vec![(a, b), (b, a)], Scalar::from_int(sign(parity(b) as u32))));
        }
    }
    GradedOperator::from_units(n, 2, terms).expect("P is graded")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn unit_vec(sp: SuperSpace, idx: &[i32], c: i64) -> Vector {
        let mut v = BTreeMap::new();
        v.insert(sp.encode(idx), Scalar::from_int(c));
        v
    }

    #[test]
    fn index_bookkeeping() {
        let sp = SuperSpace::new(2);
        assert_eq!(sp.indices(), vec![-2, -1, 1, 2]);
        assert_eq!(sp.pos(-2), 0);
        assert_eq!(sp.pos(1), 2);
        for p in 0..4 {
            assert_eq!(sp.pos(sp.index_at(p)), p);
        }
        assert_eq!(sp.decode(sp.encode(&[1, -2, 2]), 3), vec![1, -2, 2]);
        assert_eq!(sp.code_parity(sp.encode(&[-1, -2, 2]), 3), 0);
        assert_eq!(sp.code_parity(sp.encode(&[-1, 1]), 2), 1);
        assert!(SuperIndex::new(2, 0).is_err());
        assert!(SuperIndex::new(2, -3).is_err());
        assert_eq!(SuperIndex::new(2, -1).unwrap().parity(), 1);
    }

    #[test]
    fn elementary_matrices() {
        let sp = SuperSpace::new(2);
        let e11 = elementary(2, 1, 1).unwrap();
        assert_eq!(e11.apply_basis(&[1]), unit_vec(sp, &[1], 1));
        assert_eq!(elementary(2, -1, 2).unwrap().parity(), 1);
        assert!(elementary(2, 1, 2).unwrap().apply_basis(&[1]).is_empty());
        assert!(elementary(2, 3, 1).is_err());
    }

    #[test]
    fn koszul_signs() {
        let sp = SuperSpace::new(1);
        let a = elementary(1, -1, -1).unwrap();
        let t = a.koszul_tensor(&a).unwrap();
        // E_-1-1 is even, so no sign arises
        assert_eq!(t.apply_basis(&[-1, -1]), unit_vec(sp, &[-1, -1], 1));
        let x = elementary(1, 1, -1).unwrap();
        let y = elementary(1, -1, 1).unwrap();
        // (x⊗y)(e_-1 ⊗ e_1) = (-1)^{p(y) p(e_-1)} e_1 ⊗ e_-1
        let t = x.koszul_tensor(&y).unwrap();
        assert_eq!(t.apply_basis(&[-1, 1]), unit_vec(sp, &[1, -1], -1));
        let e = elementary(1, 1, 1).unwrap();
        assert_eq!(e.koszul_tensor(&e).unwrap().apply_basis(&[1, 1]), unit_vec(sp, &[1, 1], 1));
    }

    #[test]
    fn identity_tensor_even_is_block() {
        let b = elementary(2, 1, 2).unwrap();
        let t = GradedOperator::identity(2, 1).koszul_tensor(&b).unwrap();
        let sp = SuperSpace::new(2);
        for a in sp.indices() {
            assert_eq!(t.apply_basis(&[a, 2]), unit_vec(sp, &[a, 1], 1));
        }
    }

    #[test]
    fn super_permutation_action() {
        let sp = SuperSpace::new(2);
        let p = super_permutation(2);
        assert_eq!(p.apply_basis(&[1, -1]), unit_vec(sp, &[-1, 1], 1));
        assert_eq!(p.apply_basis(&[-1, -2]), unit_vec(sp, &[-2, -1], -1));
        assert_eq!(p.compose(&p).unwrap(), GradedOperator::identity(2, 2));
        assert_eq!(p.embed_legs(1, 2).unwrap(), p);
    }

    #[test]
    fn supercommutator_examples() {
        let c = elementary(2, 1, 2).unwrap().supercommutator(&elementary(2, 2, 1).unwrap()).unwrap();
        let want = elementary(2, 1, 1).unwrap().sub(&elementary(2, 2, 2).unwrap()).unwrap();
        assert_eq!(c, want);
        let c = elementary(1, 1, -1).unwrap().supercommutator(&elementary(1, -1, 1).unwrap()).unwrap();
        let want = elementary(1, 1, 1).unwrap().add(&elementary(1, -1, -1).unwrap()).unwrap();
        assert_eq!(c, want);
        let a = elementary(2, -2, 1).unwrap();
        assert_eq!(a.compose(&GradedOperator::identity(2, 1)).unwrap(), a);
    }

    #[test]
    fn gradedness_is_checked() {
        let sp = SuperSpace::new(1);
        let bad = GradedOperator::new(1, 1, 0, [((sp.pos(1), sp.pos(-1)), Scalar::one())]);
        assert!(matches!(bad, Err(Error::NotGraded(_))));
        let odd = elementary(1, 1, -1).unwrap().koszul_tensor(&GradedOperator::identity(1, 1)).unwrap();
        assert!(matches!(odd.embed_legs(1, 3), Err(Error::OddEmbedding)));
    }

    #[test]
    fn pair_embedding_matches_conjugation() {
        // A_13 = P_23 A_12 P_23 for even A
        let n = 2;
        let a = elementary(n, -1, 2)
            .unwrap()
            .koszul_tensor(&elementary(n, 1, -2).unwrap())
            .unwrap()
            .add(&elementary(n, -2, -1).unwrap().koszul_tensor(&elementary(n, 1, 2).unwrap()).unwrap())
            .unwrap();
        let p23 = super_permutation(n).embed_legs(2, 3).unwrap();
        let a12 = a.embed_legs(1, 3).unwrap();
        let a13 = a.embed_pair(1, 3, 3).unwrap();
        assert_eq!(p23.compose(&a12).unwrap().compose(&p23).unwrap(), a13);
        assert_eq!(GradedOperator::identity(n, 2).embed_legs(2, 4).unwrap(), GradedOperator::identity(n, 4));
    }

    #[test]
    fn units_roundtrip_and_json() {
        let p = super_permutation(2);
        let back = GradedOperator::from_units(2, 2, p.to_units()).unwrap();
        assert_eq!(back, p);
        let j = p.to_json();
        assert_eq!(GradedOperator::from_json(&j).unwrap(), p);
        assert_eq!(j["legs"], 2);
        assert_eq!(j["parity"], 0);
    }

    fn arb_unit(n: i32) -> impl Strategy<Value = (i32, i32, i64)> {
        let idx = prop_oneof![(-n..0), (1..=n)];
        (idx.clone(), idx, -3i64..4)
    }

    fn arb_homogeneous(n: usize) -> impl Strategy<Value = GradedOperator> {
        (any::<bool>(), prop::collection::vec(arb_unit(n as i32), 1..5)).prop_map(move |(odd, units)| {
            let terms: Vec<_> = units
                .into_iter()
                .filter(|(a, b, _)| (parity(*a) ^ parity(*b)) == u8::from(odd))
                .map(|(a, b, c)| (vec![(a, b)], Scalar::from_int(c)))
                .collect();
            if terms.is_empty() {
                GradedOperator::zero(n, 1)
            } else {
                GradedOperator::from_units(n, 1, terms).unwrap()
            }
        })
    }

    proptest! {
        #[test]
        fn tensor_associative(a in arb_homogeneous(2), b in arb_homogeneous(2), c in arb_homogeneous(2)) {
            let l = a.koszul_tensor(&b).unwrap().koszul_tensor(&c).unwrap();
            let r = a.koszul_tensor(&b.koszul_tensor(&c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn permutation_conjugation(a in arb_homogeneous(2), b in arb_homogeneous(2)) {
            let p = super_permutation(2);
            let lhs = p.compose(&a.koszul_tensor(&b).unwrap()).unwrap().compose(&p).unwrap();
            let rhs = b.koszul_tensor(&a).unwrap();
            let rhs = if a.parity() & b.parity() == 1 { rhs.neg() } else { rhs };
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn distant_embeddings_commute(a in arb_homogeneous(1), b in arb_homogeneous(1)) {
            let x = a.koszul_tensor(&a).unwrap();
            let y = b.koszul_tensor(&b).unwrap();
            let x1 = x.embed_legs(1, 4).unwrap();
            let y3 = y.embed_legs(3, 4).unwrap();
            prop_assert_eq!(x1.compose(&y3).unwrap(), y3.compose(&x1).unwrap());
        }

        #[test]
        fn composition_adds_parity(a in arb_homogeneous(2), b in arb_homogeneous(2)) {
            let c = a.compose(&b).unwrap();
            if !c.is_zero() {
                prop_assert_eq!(c.parity(), (a.parity() + b.parity()) % 2);
            }
        }
    }
}
