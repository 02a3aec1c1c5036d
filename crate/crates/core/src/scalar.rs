//! Exact Laurent polynomials in `q` over the rationals, and their fraction field.
//!
//! [`Scalar`] is an element of `Q[q, q^-1]`, stored as a sorted list of
//! `(exponent, coefficient)` pairs with no zero coefficients. [`Frac`] is an
//! element of `Q(q)` kept in a canonical reduced form so that structural
//! equality is mathematical equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// A Laurent polynomial `sum c_k q^k` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: Vec<(i32, Rational)>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(rat_int(v))
    }

    pub fn monomial(c: Rational, exp: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Scalar { terms: vec![(exp, c)] }
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// `q - q^-1`.
    pub fn epsilon() -> Self {
        Self::q() - Self::q_pow(-1)
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        Self::q() - Self::one()
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> Self {
        let mut v: Vec<(i32, Rational)> = terms.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, Rational)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Scalar { terms: out }
    }

    pub fn terms(&self) -> &[(i32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// True when the value does not depend on `q`.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0 == 0)
    }

    /// The constant coefficient if the scalar is `q`-free.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// A single term `c q^k`, i.e. a unit of the Laurent ring (when nonzero).
    pub fn as_monomial(&self) -> Option<(i32, &Rational)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((*e, c)),
            _ => None,
        }
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        self.terms
            .binary_search_by_key(&exp, |t| t.0)
            .map(|k| self.terms[k].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Scalar {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Value at a nonzero rational `q`.
    pub fn eval(&self, q: &Rational) -> Rational {
        assert!(!q.is_zero(), "Laurent polynomial evaluated at q = 0");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(q.clone(), *e as usize)
            } else {
                num_traits::pow(q.recip(), (-*e) as usize)
            };
            acc += c * p;
        }
        acc
    }

    /// Value at `q = 1`: the sum of the coefficients.
    pub fn eval_at_one(&self) -> Rational {
        self.terms.iter().map(|t| t.1.clone()).sum()
    }

    /// Multiplicity of the root `q = 1`. The zero scalar has infinite
    /// multiplicity and is reported as `u32::MAX`.
    pub fn valuation_at_one(&self) -> u32 {
        if self.is_zero() {
            return u32::MAX;
        }
        let mut v = 0;
        let mut cur = self.clone();
        while cur.eval_at_one().is_zero() {
            cur = cur.div_q_minus_one_once();
            v += 1;
        }
        v
    }

    /// Exact quotient by `(q - 1)^k`.
    pub fn quotient_by_qminus1(&self, k: u32) -> Result<Scalar> {
        let mut cur = self.clone();
        for _ in 0..k {
            if !cur.eval_at_one().is_zero() {
                return Err(Error::NotDivisible);
            }
            cur = cur.div_q_minus_one_once();
        }
        Ok(cur)
    }

    // Synthetic division by (q - 1); caller guarantees divisibility.
    fn div_q_minus_one_once(&self) -> Scalar {
        if self.is_zero() {
            return Self::zero();
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        // coefficients of q^lo .. q^hi, divide from the top
        let mut out = Vec::new();
        let mut carry = Rational::zero();
        for e in (lo + 1..=hi).rev() {
            carry += self.coeff(e);
            if !carry.is_zero() {
                out.push((e - 1, carry.clone()));
            }
        }
        out.reverse();
        Scalar { terms: out }
    }

    /// Exact division in the Laurent ring.
    pub fn div_exact(&self, d: &Scalar) -> Result<Scalar> {
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (a, sa) = self.to_poly();
        let (b, sb) = d.to_poly();
        let (quo, rem) = poly_divrem(&a, &b);
        if !rem.is_zero() {
            return Err(Error::NotDivisible);
        }
        Ok(quo.shift(sa - sb))
    }

    // Splits into (polynomial with nonzero constant term, shift).
    fn to_poly(&self) -> (Scalar, i32) {
        match self.min_exp() {
            Some(lo) => (self.shift(-lo), lo),
            None => (Self::zero(), 0),
        }
    }

    fn leading(&self) -> Option<&Rational> {
        self.terms.last().map(|t| &t.1)
    }

    /// Substitutes `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (-e, c.clone())))
    }
}

// Polynomial helpers: operands have min exponent >= 0.
fn poly_degree(p: &Scalar) -> i32 {
    p.max_exp().unwrap_or(-1)
}

fn poly_divrem(a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
    let db = poly_degree(b);
    let lb = b.leading().expect("division by zero polynomial").clone();
    let mut rem = a.clone();
    let mut quo = Vec::new();
    while !rem.is_zero() && poly_degree(&rem) >= db {
        let e = poly_degree(&rem) - db;
        let c = rem.leading().unwrap() / &lb;
        rem = &rem - &b.shift(e).scale(&c);
        quo.push((e, c));
    }
    (Scalar::from_terms(quo), rem)
}

fn poly_monic(p: &Scalar) -> Scalar {
    match p.leading() {
        Some(l) => p.scale(&l.recip()),
        None => Scalar::zero(),
    }
}

fn poly_gcd(a: &Scalar, b: &Scalar) -> Scalar {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = poly_divrem(&x, &y);
        // keep remainders small
        x = y;
        y = poly_monic(&r);
    }
    poly_monic(&x)
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Renders as `3*q^-2 - 1/2 + q^3` with ascending exponents.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let qpart = match e {
                0 => String::new(),
                1 => "q".to_string(),
                e => format!("q^{e}"),
            };
            if qpart.is_empty() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{qpart}")?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), qpart)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses the rendering grammar: a signed sum of terms, each of the form
    /// `c`, `q`, `q^e`, `c*q` or `c*q^e`, where `c` is an integer or `a/b`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |m: &str| Error::Parse(format!("bad scalar {s:?}: {m}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty"));
        }
        // split into signed chunks; a '-' directly after '^' belongs to an exponent
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
                chunks.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && cur.is_empty() {
                if ch == '-' {
                    neg = !neg;
                }
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(err("trailing sign"));
        }
        chunks.push((neg, cur));

        let parse_rat = |t: &str| -> Result<Rational> {
            let mut it = t.splitn(2, '/');
            let a: BigInt = it.next().unwrap().parse().map_err(|_| err("coefficient"))?;
            let b: BigInt = match it.next() {
                Some(d) => d.parse().map_err(|_| err("denominator"))?,
                None => BigInt::one(),
            };
            if b.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(Rational::new(a, b))
        };

        let mut terms = Vec::new();
        for (neg, chunk) in chunks {
            let (coef, qpart) = match chunk.find('q') {
                None => (parse_rat(&chunk)?, None),
                Some(pos) => {
                    let head = &chunk[..pos];
                    let coef = if head.is_empty() {
                        Rational::one()
                    } else {
                        let head = head.strip_suffix('*').ok_or_else(|| err("missing '*'"))?;
                        parse_rat(head)?
                    };
                    (coef, Some(&chunk[pos + 1..]))
                }
            };
            let exp = match qpart {
                None => 0,
                Some("") => 1,
                Some(rest) => {
                    let e = rest.strip_prefix('^').ok_or_else(|| err("expected '^'"))?;
                    e.parse::<i32>().map_err(|_| err("exponent"))?
                }
            };
            terms.push((exp, if neg { -coef } else { coef }));
        }
        Ok(Scalar::from_terms(terms))
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < rhs.terms.len() {
            let ord = match (self.terms.get(i), rhs.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(rhs.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &rhs.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Scalar { terms: out }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if let Some((e, c)) = rhs.as_monomial() {
            return Scalar {
                terms: self.terms.iter().map(|(x, d)| (x + e, d * c)).collect(),
            };
        }
        if let Some((e, c)) = self.as_monomial() {
            return Scalar {
                terms: rhs.terms.iter().map(|(x, d)| (x + e, d * c)).collect(),
            };
        }
        let mut acc = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                acc.push((ea + eb, ca * cb));
            }
        }
        Scalar::from_terms(acc)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Self {
        Scalar::constant(c)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

/// An element of `Q(q)` in canonical form.
///
/// The denominator is a monic polynomial with nonzero constant term, and it is
/// coprime to the numerator; any power of `q` lives in the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frac {
    num: Scalar,
    den: Scalar,
}

impl Frac {
    pub fn zero() -> Self {
        Frac { num: Scalar::zero(), den: Scalar::one() }
    }

    pub fn one() -> Self {
        Frac { num: Scalar::one(), den: Scalar::one() }
    }

    pub fn new(num: Scalar, den: Scalar) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Scalar, den: Scalar) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (dp, ds) = den.to_poly();
        let (np, ns) = num.to_poly();
        let shift = ns - ds;
        if poly_degree(&dp) == 0 {
            let c = dp.leading().unwrap().recip();
            return Frac { num: np.shift(shift).scale(&c), den: Scalar::one() };
        }
        let g = poly_gcd(&np, &dp);
        let (np, dp) = if poly_degree(&g) > 0 {
            (poly_divrem(&np, &g).0, poly_divrem(&dp, &g).0)
        } else {
            (np, dp)
        };
        let lead = dp.leading().unwrap().recip();
        Frac { num: np.shift(shift).scale(&lead), den: dp.scale(&lead) }
    }

    pub fn num(&self) -> &Scalar {
        &self.num
    }

    pub fn den(&self) -> &Scalar {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this fraction equals, if any.
    pub fn as_scalar(&self) -> Option<&Scalar> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Frac::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Frac) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Frac::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn eval_at_one(&self) -> Result<Rational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval_at_one() / d)
    }

    pub fn eval(&self, q: &Rational) -> Result<Rational> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval(q) / d)
    }

    /// Order of vanishing at `q = 1` (negative for a pole).
    pub fn valuation_at_one(&self) -> i64 {
        if self.is_zero() {
            return i64::MAX;
        }
        self.num.valuation_at_one() as i64 - self.den.valuation_at_one() as i64
    }
}

/// Least common multiple of the denominators, a monic polynomial.
pub fn common_denominator<'a>(fracs: impl IntoIterator<Item = &'a Frac>) -> Scalar {
    let mut acc = Scalar::one();
    for f in fracs {
        if f.den.is_one() {
            continue;
        }
        let g = poly_gcd(&acc, &f.den);
        acc = &acc * &poly_divrem(&f.den, &g).0;
    }
    acc
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frac({self})")
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for Frac {
    type Err = Error;

    /// Parses the `Display` form: a Laurent polynomial, or `(num)/(den)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(body) = t.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            if let Some((a, b)) = body.split_once(")/(") {
                return Frac::new(a.parse()?, b.parse()?);
            }
        }
        Ok(Frac::from(t.parse::<Scalar>()?))
    }
}

impl From<Scalar> for Frac {
    fn from(s: Scalar) -> Self {
        Frac { num: s, den: Scalar::one() }
    }
}

impl From<&Scalar> for Frac {
    fn from(s: &Scalar) -> Self {
        Frac::from(s.clone())
    }
}

impl<'a> Add<&'a Frac> for &'a Frac {
    type Output = Frac;
    fn add(self, rhs: &Frac) -> Frac {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Frac::canonical(&self.num + &rhs.num, self.den.clone());
        }
        Frac::canonical(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a Frac> for &'a Frac {
    type Output = Frac;
    fn sub(self, rhs: &Frac) -> Frac {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Frac> for &'a Frac {
    type Output = Frac;
    fn mul(self, rhs: &Frac) -> Frac {
        if self.is_zero() || rhs.is_zero() {
            return Frac::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Frac { num: &self.num * &rhs.num, den: Scalar::one() };
        }
        Frac::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac { num: -&self.num, den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn expand_products() {
        let a = Scalar::epsilon();
        let b = Scalar::q() + Scalar::q_pow(-1);
        assert_eq!(&a * &b, Scalar::q_pow(2) - Scalar::q_pow(-2));
        assert!((&a + &s("q^-1 - q")).is_zero());
    }

    #[test]
    fn fraction_cancels_common_factor() {
        let f = Frac::new(s("q^2 - 1"), s("q - 1")).unwrap();
        assert_eq!(f.num(), &s("q + 1"));
        assert!(f.den().is_one());
        assert!(matches!(Frac::new(Scalar::one(), Scalar::zero()), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn canonical_denominator_is_monic_polynomial() {
        let f = Frac::new(s("2"), s("-2*q^-1 + 4*q")).unwrap();
        // 2 / (q^-1 (4q^2 - 2)) = (1/2) q / (q^2 - 1/2)
        assert_eq!(f.den(), &s("-1/2 + q^2"));
        assert_eq!(f.num(), &s("1/2*q"));
    }

    #[test]
    fn specialization_at_one() {
        assert!(Scalar::epsilon().eval_at_one().is_zero());
        let half_sum = (Scalar::q() + Scalar::q_pow(-1)).scale(&rat(1, 2)) - Scalar::one();
        assert!(half_sum.eval_at_one().is_zero());
        assert_eq!(Scalar::q_pow(3).eval_at_one(), rat_int(1));
        let pole = Frac::new(Scalar::one(), Scalar::q_minus_one()).unwrap();
        assert!(matches!(pole.eval_at_one(), Err(Error::PoleAtOne)));
    }

    #[test]
    fn valuation_and_quotient() {
        let e = Scalar::epsilon();
        assert_eq!(e.valuation_at_one(), 1);
        assert_eq!(e.quotient_by_qminus1(1).unwrap(), s("q^-1 + 1"));
        assert_eq!(Scalar::q_minus_one().pow(2).valuation_at_one(), 2);
        assert_eq!(Scalar::q().valuation_at_one(), 0);
        assert!(matches!(Scalar::q().quotient_by_qminus1(1), Err(Error::NotDivisible)));
    }

    #[test]
    fn render_and_parse() {
        let x = Scalar::from_terms([(-2, rat_int(3)), (0, rat(-1, 2)), (3, rat_int(1))]);
        assert_eq!(x.to_string(), "3*q^-2 - 1/2 + q^3");
        assert_eq!(s("3*q^-2 - 1/2 + q^3"), x);
        assert_eq!(s("-q"), -Scalar::q());
        assert_eq!(s("0"), Scalar::zero());
        assert!("3q".parse::<Scalar>().is_err());
        assert!("1 +".parse::<Scalar>().is_err());
    }

    #[test]
    fn exact_laurent_division() {
        let a = s("q^3 - q^-1");
        let b = s("q^2 + 1");
        assert_eq!(a.div_exact(&b).unwrap(), s("-q^-1 + q"));
        assert!(s("q + 2").div_exact(&s("q + 1")).is_err());
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        prop::collection::vec((-3i32..4, -5i64..6, 1i64..4), 0..5).prop_map(|v| {
            Scalar::from_terms(v.into_iter().map(|(e, a, b)| (e, rat(a, b))))
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        }

        #[test]
        fn fraction_inverse(a in arb_scalar(), b in arb_scalar()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let x = Frac::new(a.clone(), b.clone()).unwrap();
            let y = Frac::new(b, a).unwrap();
            prop_assert!((&x * &y).is_one());
        }

        #[test]
        fn quotient_roundtrip(a in arb_scalar(), k in 0u32..3) {
            let m = Scalar::q_minus_one().pow(k);
            let p = &a * &m;
            let back = p.quotient_by_qminus1(k).unwrap();
            prop_assert_eq!(&back * &m, p);
        }

        #[test]
        fn display_roundtrip(a in arb_scalar()) {
            prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
        }
    }
}
