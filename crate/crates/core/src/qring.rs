//! Exact arithmetic in the ring of Laurent polynomials ℤ[q, q⁻¹].
//!
//! Every coefficient in the library lives here. Coefficients are
//! arbitrary-precision integers and the zero coefficient is never stored,
//! so structural equality is ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("quantum integer requested for negative argument {0}")]
    NegativeArgument(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{num} is not divisible by {den} in Z[q,q^-1]")]
    InexactDivision { num: String, den: String },
    #[error("{0} has negative powers of q")]
    NotPolynomial(String),
}

/// A Laurent polynomial `Σ c_e q^e` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub(crate) fn add_term(&mut self, e: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `q^e` for any integer `e`, including negative ones.
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(1, e)
    }

    /// The bar involution `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (-k, c.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.terms.iter().all(|(&k, c)| self.terms.get(&-k) == Some(c))
    }

    /// True when every exponent is at least 1, i.e. the value lies in qℤ[q].
    pub fn in_q_zq(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 1)
    }

    /// True when every exponent is at most -1, i.e. the value lies in q⁻¹ℤ[q⁻¹].
    pub fn in_qinv_zqinv(&self) -> bool {
        self.max_exp().is_none_or(|e| e <= -1)
    }

    /// True when no negative exponent occurs.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    /// Specialization at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// The part of `self` with exponents in `range`.
    pub fn restrict(&self, range: impl std::ops::RangeBounds<i32>) -> Self {
        Self {
            terms: self
                .terms
                .range(range)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    /// Quantum integer `[m]_i = (q_i^m - q_i^-m)/(q_i - q_i^-1)` with
    /// `q_0 = q` and `q_i = q²` for `i > 0`.
    pub fn quantum_int(m: i64, node: u32) -> Result<Self, RingError> {
        if m < 0 {
            return Err(RingError::NegativeArgument(m));
        }
        let step: i64 = if node == 0 { 1 } else { 2 };
        Ok(Self::from_terms(
            (0..m).map(|k| ((step * (m - 1 - 2 * k)) as i32, 1)),
        ))
    }

    /// `[m]_i! = [m]_i [m-1]_i ⋯ [1]_i`.
    pub fn quantum_factorial(m: i64, node: u32) -> Result<Self, RingError> {
        if m < 0 {
            return Err(RingError::NegativeArgument(m));
        }
        let mut acc = Self::one();
        for k in 1..=m {
            acc = &acc * &Self::quantum_int(k, node)?;
        }
        Ok(acc)
    }

    /// Exact quotient `self / den`; fails unless `den` divides `self` in
    /// ℤ[q, q⁻¹].
    pub fn exact_div(&self, den: &Self) -> Result<Self, RingError> {
        let (Some(den_lo), Some(den_hi)) = (den.min_exp(), den.max_exp()) else {
            return Err(RingError::DivisionByZero);
        };
        let Some(num_lo) = self.min_exp() else {
            return Ok(Self::zero());
        };
        let inexact = || RingError::InexactDivision {
            num: self.to_string(),
            den: den.to_string(),
        };
        let lead = &den.terms[&den_hi];
        let lowest_allowed = num_lo - den_lo;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exp() {
            let e = top - den_hi;
            if e < lowest_allowed {
                return Err(inexact());
            }
            let c = &rem.terms[&top];
            if !(c % lead).is_zero() {
                return Err(inexact());
            }
            let qc = c / lead;
            rem -= &den.shift(e).scale(&qc);
            quot.add_term(e, qc);
        }
        Ok(quot)
    }

    /// The bar-invariant polynomial agreeing with `self` in every
    /// non-negative degree: `c_0 + Σ_{e>0} c_e (q^e + q^-e)`.
    ///
    /// Only defined on ℤ[q]. To lift a Laurent polynomial `f` along its
    /// non-positive part instead, use `bar_invariant_lift(&f.restrict(..=0).bar())`.
    pub fn bar_invariant_lift(&self) -> Result<Self, RingError> {
        if !self.is_polynomial() {
            return Err(RingError::NotPolynomial(self.to_string()));
        }
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out.add_term(e, c.clone());
            if e > 0 {
                out.add_term(-e, c.clone());
            }
        }
        Ok(out)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            m.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        let mut p = Self::zero();
        for (e, c) in raw {
            let e: i32 = e.parse().map_err(D::Error::custom)?;
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

/// Shorthand used throughout the tests and examples: `lp(&[(e, c), ...])`.
pub fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}
