//! Finite linear combinations of basis labels with Laurent polynomial
//! coefficients. Tensor vectors and wedge vectors are both instances.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::qring::LaurentPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, LaurentPoly>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// A single basis vector with coefficient 1.
    pub fn basis(k: K) -> Self {
        Self::term(k, LaurentPoly::one())
    }

    pub fn term(k: K, c: LaurentPoly) -> Self {
        let mut v = Self::zero();
        v.add_term(k, c);
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, LaurentPoly)>) -> Self {
        let mut v = Self::zero();
        for (k, c) in terms {
            v.add_term(k, c);
        }
        v
    }

    pub fn add_term(&mut self, k: K, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(old) => {
                *old += &c;
                if old.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), if c.is_one() { v.clone() } else { v * c });
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing order of label.
    pub fn terms(&self) -> impl Iterator<Item = (&K, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> + '_ {
        self.terms.keys()
    }

    pub fn coeff(&self, k: &K) -> LaurentPoly {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn get(&self, k: &K) -> Option<&LaurentPoly> {
        self.terms.get(k)
    }

    /// Applies the bar involution to every coefficient.
    pub fn bar_coeffs(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.bar())).collect(),
        }
    }

    /// Relabels every term, merging labels that collide.
    pub fn map_keys<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> J) -> LinComb<J> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Keeps the terms whose label satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Specialization at `q = 1`, dropping labels whose value vanishes.
    pub fn eval_one(&self) -> BTreeMap<K, BigInt> {
        self.terms
            .iter()
            .map(|(k, c)| (k.clone(), c.eval_one()))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }
}

impl<K: Ord + Clone + Display> LinComb<K> {
    /// Text form such as `F[0,0] + (q + q^3)·F[1,-1]`.
    pub fn render(&self, label: &str) -> String {
        render_terms(
            self.terms.iter().map(|(k, c)| (format!("{label}[{k}]"), c)),
            render_poly_coeff,
        )
    }
}

/// Joins `(basis, coefficient)` pairs into `a + b - c` style text, where
/// `coeff` returns the rendered magnitude (empty for 1) and whether to subtract.
pub(crate) fn render_terms<'a, C: 'a>(
    terms: impl Iterator<Item = (String, &'a C)>,
    coeff: impl Fn(&C) -> (String, bool),
) -> String {
    let mut out = String::new();
    for (idx, (basis, c)) in terms.enumerate() {
        let (mag, negative) = coeff(c);
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if mag.is_empty() {
            out.push_str(&basis);
        } else if basis.is_empty() {
            out.push_str(&mag);
        } else {
            out.push_str(&mag);
            out.push('·');
            out.push_str(&basis);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn render_poly_coeff(c: &LaurentPoly) -> (String, bool) {
    if c.len() == 1 {
        let (e, v) = c.terms().next().expect("one term");
        let negative = v.is_negative();
        let mag = LaurentPoly::monomial(v.abs(), e);
        if mag.is_one() {
            return (String::new(), negative);
        }
        return (mag.to_string(), negative);
    }
    (format!("({c})"), false)
}

pub(crate) fn render_int_coeff(c: &BigInt) -> (String, bool) {
    let mag = c.abs();
    if mag.is_one() {
        (String::new(), c.is_negative())
    } else {
        (mag.to_string(), c.is_negative())
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::one());
        out
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-LaurentPoly::one());
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&-LaurentPoly::one())
    }
}

impl<K: Ord + std::fmt::Debug> std::fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<K> {
    weight: K,
    coeff: LaurentPoly,
}

impl<K: Ord + Clone + Serialize> Serialize for LinComb<K> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            seq.serialize_element(&TermRepr { weight: k.clone(), coeff: c.clone() })?;
        }
        seq.end()
    }
}

impl<'de, K: Ord + Clone + Deserialize<'de>> Deserialize<'de> for LinComb<K> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<TermRepr<K>>::deserialize(d)?;
        Ok(Self::from_terms(raw.into_iter().map(|t| (t.weight, t.coeff))))
    }
}
