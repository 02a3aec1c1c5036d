//! The vector representation `T ↦ S` and its tensor powers.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{common_denominator, Scalar};
use crate::smatrix::build_s;
use crate::superspace::{parity, sign, GradedOperator, SuperSpace};
use crate::uqpn::element::AlgebraElement;
use crate::uqpn::relations::RelationSet;
use crate::uqpn::symbol::{GeneratorSymbol, Letter};

/// `ρ_l` on all raw index pairs; zero-kind pairs map to zero.
#[derive(Clone, Debug)]
pub struct Representation {
    n: usize,
    legs: usize,
    raw: BTreeMap<(i32, i32), GradedOperator>,
}

/// `ρ_1(t_ij)`: the first-slot coefficient of `E_ij` in the second slot of `S`.
pub fn rho1_raw(n: usize) -> BTreeMap<(i32, i32), GradedOperator> {
    let mut parts: BTreeMap<(i32, i32), Vec<(Vec<(i32, i32)>, Scalar)>> = BTreeMap::new();
    for (units, c) in build_s(n).op.to_units() {
        parts.entry(units[1]).or_default().push((vec![units[0]], c));
    }
    let sp = SuperSpace::new(n);
    let mut out = BTreeMap::new();
    for i in sp.indices() {
        for j in sp.indices() {
            let terms = parts.remove(&(i, j)).unwrap_or_default();
            out.insert((i, j), GradedOperator::from_units(n, 1, terms).expect("homogeneous coefficient"));
        }
    }
    out
}

impl Representation {
    pub fn new(n: usize, legs: usize) -> Result<Self> {
        if legs == 0 {
            return Err(Error::ShapeMismatch("representation needs at least one leg".into()));
        }
        let sp = SuperSpace::new(n);
        let one = rho1_raw(n);
        let mut cur = one.clone();
        for _ in 1..legs {
            let mut next = BTreeMap::new();
            for i in sp.indices() {
                for j in sp.indices() {
                    let mut acc: Option<GradedOperator> = None;
                    for k in sp.indices() {
                        let a = &one[&(i, k)];
                        let b = &cur[&(k, j)];
                        if a.is_zero() || b.is_zero() {
                            continue;
                        }
                        let s = sign(((u32::from(parity(i)) + u32::from(parity(k))) * (u32::from(parity(k)) + u32::from(parity(j)))) % 2);
                        let t = a.koszul_tensor(b)?.scale(&Scalar::from_int(s));
                        acc = Some(match acc {
                            None => t,
                            Some(x) => x.add(&t)?,
                        });
                    }
                    let legs_now = cur[&(i, j)].legs() + 1;
                    next.insert((i, j), acc.unwrap_or_else(|| GradedOperator::zero(n, legs_now)));
                }
            }
            cur = next;
        }
        Ok(Representation { n, legs, raw: cur })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn raw_image(&self, i: i32, j: i32) -> &GradedOperator {
        &self.raw[&(i, j)]
    }

    pub fn image(&self, g: GeneratorSymbol) -> &GradedOperator {
        &self.raw[&(g.i(), g.j())]
    }

    pub fn letter_image(&self, l: Letter) -> Result<GradedOperator> {
        match l {
            Letter::T(g) => Ok(self.image(g).clone()),
            Letter::Inv(g) => invert_diagonal(self.image(g)),
        }
    }

    pub fn evaluate_word(&self, w: &[Letter]) -> Result<GradedOperator> {
        let mut acc = GradedOperator::identity(self.n, self.legs);
        for l in w {
            acc = acc.compose(&self.letter_image(*l)?)?;
        }
        Ok(acc)
    }

    /// Returns `(D, D·ρ(e))` with `D` the common denominator of the coefficients.
    pub fn evaluate(&self, e: &AlgebraElement) -> Result<(Scalar, GradedOperator)> {
        let d = common_denominator(e.terms().values());
        let mut acc = GradedOperator::zero(self.n, self.legs);
        for (w, c) in e.terms() {
            let coef = (&(c * &crate::scalar::Frac::from(d.clone()))).as_scalar().cloned().ok_or(Error::NotDivisible)?;
            acc = acc.add(&self.evaluate_word(w)?.scale(&coef))?;
        }
        Ok((d, acc))
    }

    pub fn annihilates(&self, e: &AlgebraElement) -> Result<bool> {
        Ok(self.evaluate(e)?.1.is_zero())
    }

    /// `ρ(a) = ρ(b)`, compared after clearing denominators.
    pub fn agree(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<bool> {
        let (da, ra) = self.evaluate(a)?;
        let (db, rb) = self.evaluate(b)?;
        Ok(ra.scale(&db) == rb.scale(&da))
    }

    /// Relations whose image is nonzero.
    pub fn failing_relations(&self, rels: &RelationSet) -> Result<Vec<(i32, i32, i32, i32)>> {
        let mut out = Vec::new();
        for r in &rels.relations {
            if !self.annihilates(&r.element)? {
                out.push(r.index);
            }
        }
        Ok(out)
    }
}

/// Inverse of a diagonal operator whose entries are monomials in `q`.
pub fn invert_diagonal(op: &GradedOperator) -> Result<GradedOperator> {
    let d = op.space().dim_legs(op.legs());
    let mut entries = Vec::new();
    for k in 0..d {
        let v = op.entry(k, k);
        let (e, c) = v.as_monomial().ok_or_else(|| Error::NotInLocalization(format!("diagonal entry {v} is not a unit")))?;
        entries.push(((k, k), Scalar::monomial(c.recip(), -e)));
    }
    if op.nnz() != d {
        return Err(Error::NotInLocalization("operator is not diagonal".into()));
    }
    GradedOperator::new(op.n(), op.legs(), 0, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superspace::elementary;
    use crate::uqpn::relations::extract_relations;

    #[test]
    fn zero_kind_images_vanish() {
        for n in 1..=2 {
            let r = rho1_raw(n);
            for ((i, j), op) in &r {
                if GeneratorSymbol::is_zero_kind(*i, *j) {
                    assert!(op.is_zero(), "({i},{j})");
                }
            }
            for i in 1..=n as i32 {
                assert_eq!(r[&(i, i)], r[&(-i, -i)]);
            }
        }
    }

    #[test]
    fn explicit_images() {
        let r = rho1_raw(1);
        // ρ(t_{1,-1}) = (q - q^-1) E_{-1,1}
        assert_eq!(r[&(1, -1)], elementary(1, -1, 1).unwrap().scale(&Scalar::epsilon()));
        let want = GradedOperator::from_units(1, 1, [(vec![(1, 1)], Scalar::q()), (vec![(-1, -1)], Scalar::q_pow(-1))]).unwrap();
        assert_eq!(r[&(1, 1)], want);
    }

    #[test]
    fn relations_annihilated_small() {
        let rels = extract_relations(1);
        for l in 1..=3 {
            let rep = Representation::new(1, l).unwrap();
            assert!(rep.failing_relations(&rels).unwrap().is_empty());
        }
    }

    #[test]
    fn diagonal_inverse() {
        let rep = Representation::new(2, 2).unwrap();
        let g = GeneratorSymbol::canonical(2, 2).unwrap();
        let w = vec![Letter::T(g), Letter::Inv(g)];
        assert_eq!(rep.evaluate_word(&w).unwrap(), GradedOperator::identity(2, 2));
    }
}
