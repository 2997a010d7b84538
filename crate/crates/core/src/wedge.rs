//! The quantum exterior power: straightening tensor words into the basis
//! `F_λ = v_{λ_n} ∧ ⋯ ∧ v_{λ_1}` and the induced quantum group action.

use std::cell::RefCell;
use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lincomb::LinComb;
use crate::qring::{LaurentPoly, RingError};
use crate::tensor::{act_on_word, Generator};
use crate::weights::{DominantWeight, Weight};

/// A finite combination of the basis vectors `F_λ`, `λ` dominant.
pub type WedgeVector = LinComb<DominantWeight>;

/// Default budget of rewrite steps for one top-level computation.
pub const DEFAULT_FUEL: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WedgeError {
    #[error("rewrite budget of {0} steps exhausted")]
    FuelExhausted(u64),
    #[error("empty word")]
    EmptyWord,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Which violating adjacent pair to rewrite first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    /// A uniformly random violating pair, from a seeded generator.
    Random(u64),
}

/// `q^e` with sign.
fn mono(c: i64, e: i32) -> LaurentPoly {
    LaurentPoly::monomial(c, e)
}

/// True when `(x, y)` may not stand next to each other in a basis word.
fn violates(x: i32, y: i32) -> bool {
    x > y || (x == y && x != 0)
}

/// Rewrites a violating pair `(x, y)` as a combination of other pairs.
pub fn rewrite_pair(x: i32, y: i32) -> Vec<(LaurentPoly, [i32; 2])> {
    if x == y {
        return Vec::new();
    }
    if x + y != 0 {
        return vec![(mono(-1, 2), [y, x])];
    }
    if x == 1 {
        return vec![(mono(-1, 1), [0, 0]), (mono(-1, 4), [-1, 1])];
    }
    vec![
        (mono(-1, 2), [x - 1, 1 - x]),
        (mono(-1, 2), [1 - x, x - 1]),
        (mono(-1, 4), [-x, x]),
    ]
}

/// The dominant weight read off a basis word, right to left.
pub fn word_to_dominant(word: &[i32]) -> Option<DominantWeight> {
    DominantWeight::new(Weight::new(word.iter().rev().copied().collect()).ok()?).ok()
}

/// Straightens words and applies the quantum group action to wedge vectors,
/// remembering normal forms of the words it has seen.
#[derive(Debug)]
pub struct Straightener {
    strategy: Strategy,
    fuel: u64,
    budget: u64,
    cache: HashMap<Vec<i32>, WedgeVector>,
    rng: Option<StdRng>,
}

impl Default for Straightener {
    fn default() -> Self {
        Self::new(Strategy::Leftmost, DEFAULT_FUEL)
    }
}

impl Straightener {
    pub fn new(strategy: Strategy, fuel: u64) -> Self {
        let rng = match strategy {
            Strategy::Random(seed) => Some(StdRng::seed_from_u64(seed)),
            _ => None,
        };
        Self {
            strategy,
            fuel,
            budget: fuel,
            cache: HashMap::new(),
            rng,
        }
    }

    /// Restores the full rewrite budget.
    pub fn refuel(&mut self) {
        self.fuel = self.budget;
    }

    pub fn set_budget(&mut self, fuel: u64) {
        self.budget = fuel;
        self.fuel = fuel;
    }

    pub fn fuel_left(&self) -> u64 {
        self.fuel
    }

    /// The image of `v_{c_1} ⊗ ⋯ ⊗ v_{c_n}` in the `F` basis.
    pub fn straighten(&mut self, word: &[i32]) -> Result<WedgeVector, WedgeError> {
        if word.is_empty() {
            return Err(WedgeError::EmptyWord);
        }
        if let Some(v) = self.cache.get(word) {
            return Ok(v.clone());
        }
        let bad: Vec<usize> = (0..word.len() - 1)
            .filter(|&j| violates(word[j], word[j + 1]))
            .collect();
        let result = if bad.is_empty() {
            WedgeVector::basis(word_to_dominant(word).expect("basis word"))
        } else {
            if self.fuel == 0 {
                return Err(WedgeError::FuelExhausted(self.budget));
            }
            self.fuel -= 1;
            let j = match self.strategy {
                Strategy::Leftmost => bad[0],
                Strategy::Rightmost => bad[bad.len() - 1],
                Strategy::Random(_) => {
                    let rng = self.rng.as_mut().expect("seeded");
                    bad[rng.gen_range(0..bad.len())]
                }
            };
            let mut out = WedgeVector::zero();
            let mut next = word.to_vec();
            for (c, [a, b]) in rewrite_pair(word[j], word[j + 1]) {
                next[j] = a;
                next[j + 1] = b;
                let nf = self.straighten(&next)?;
                out.add_scaled(&nf, &c);
            }
            out
        };
        self.cache.insert(word.to_vec(), result.clone());
        Ok(result)
    }

    /// Straightens a combination of words.
    pub fn straighten_all(
        &mut self,
        words: impl IntoIterator<Item = (Vec<i32>, LaurentPoly)>,
    ) -> Result<WedgeVector, WedgeError> {
        let mut out = WedgeVector::zero();
        for (w, c) in words {
            let nf = self.straighten(&w)?;
            out.add_scaled(&nf, &c);
        }
        Ok(out)
    }

    /// `g·v`: act on the representative word `w₀λ` of each `F_λ`, then straighten.
    pub fn act(&mut self, g: Generator, v: &WedgeVector) -> Result<WedgeVector, WedgeError> {
        let mut out = WedgeVector::zero();
        for (lam, c) in v.terms() {
            let image = self.straighten_all(act_on_word(g, lam.w0().entries()))?;
            out.add_scaled(&image, c);
        }
        Ok(out)
    }

    /// The divided power `g^{(r)} v = g^r v / [r]_i!`.
    pub fn act_divided(&mut self, g: Generator, r: u32, v: &WedgeVector) -> Result<WedgeVector, WedgeError> {
        let mut cur = v.clone();
        for _ in 0..r {
            cur = self.act(g, &cur)?;
        }
        let fact = LaurentPoly::quantum_factorial(r as i64, g.node())?;
        let mut out = WedgeVector::zero();
        for (lam, c) in cur.terms() {
            out.add_term(lam.clone(), c.exact_div(&fact)?);
        }
        Ok(out)
    }
}

thread_local! {
    static SHARED: RefCell<Straightener> = RefCell::new(Straightener::default());
}

/// Runs `f` against this thread's shared straightener with a fresh budget.
pub fn with_shared<T>(fuel: u64, f: impl FnOnce(&mut Straightener) -> T) -> T {
    SHARED.with(|s| {
        let mut s = s.borrow_mut();
        s.set_budget(fuel);
        f(&mut s)
    })
}

/// Straightens a word using the default rewrite budget.
pub fn straighten(word: &[i32]) -> Result<WedgeVector, WedgeError> {
    with_shared(DEFAULT_FUEL, |s| s.straighten(word))
}

pub fn act_wedge(g: Generator, v: &WedgeVector) -> Result<WedgeVector, WedgeError> {
    with_shared(DEFAULT_FUEL, |s| s.act(g, v))
}

pub fn act_divided(g: Generator, r: u32, v: &WedgeVector) -> Result<WedgeVector, WedgeError> {
    with_shared(DEFAULT_FUEL, |s| s.act_divided(g, r, v))
}

/// `ω(F_λ) = F_{-w₀λ}`.
pub fn omega_map(v: &WedgeVector) -> WedgeVector {
    v.map_keys(|lam| lam.neg_w0())
}

/// `F_μ(1)` coefficients of `g F_λ(1)` at `q = 1`, read from the i-signature
/// of `λ`: every admissible slot contributes 1, except a `−+` slot which
/// contributes `1 - (-1)^{z(λ)}`.
pub fn act_q1_table(g: Generator, lambda: &DominantWeight) -> HashMap<DominantWeight, i64> {
    use crate::crystal::{i_signature, Token};
    let (i, up) = match g {
        Generator::E(i) => (i, false),
        Generator::F(i) => (i, true),
        _ => return HashMap::from([(lambda.clone(), 1)]),
    };
    let sig = i_signature(lambda, i);
    let z = lambda.z();
    let mut out = HashMap::new();
    for (k, &t) in sig.slots().iter().enumerate() {
        let allowed = if up { t.has_plus() } else { t.has_minus() };
        if !allowed {
            continue;
        }
        if let Some(mu) = lambda.shifted(k + 1, up) {
            let b = if t == Token::MinusPlus { 1 - if z.is_multiple_of(2) { 1 } else { -1 } } else { 1 };
            if b != 0 {
                *out.entry(mu).or_insert(0) += b;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::Strategy;
    use crate::qring::lp;
    use crate::weights::{bruhat_leq, dominant_weights_in_box, weights_in_box};
    use proptest::prelude::*;

    fn d(v: &[i32]) -> DominantWeight {
        DominantWeight::from_slice(v)
    }

    fn f(v: &[i32]) -> WedgeVector {
        WedgeVector::basis(d(v))
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(straighten(&[-1, 0]).unwrap(), f(&[0, -1]));
        let mut expect = WedgeVector::zero();
        expect.add_term(d(&[0, 0]), lp(&[(1, -1)]));
        expect.add_term(d(&[1, -1]), lp(&[(4, -1)]));
        assert_eq!(straighten(&[1, -1]).unwrap(), expect);
        assert!(straighten(&[2, 2]).unwrap().is_zero());
        assert_eq!(straighten(&[]), Err(WedgeError::EmptyWord));
    }

    #[test]
    fn fuel_is_enforced() {
        let mut s = Straightener::new(Strategy::Leftmost, 3);
        assert_eq!(s.straighten(&[4, -4, 3]), Err(WedgeError::FuelExhausted(3)));
    }

    #[test]
    fn action_examples() {
        let mut expect = f(&[0, 0]);
        expect.add_term(d(&[1, -1]), lp(&[(1, 1), (3, 1)]));
        assert_eq!(act_wedge(Generator::E(0), &f(&[1, 0])).unwrap(), expect);
        assert_eq!(act_wedge(Generator::E(0), &f(&[1, -1])).unwrap(), f(&[0, -1]));
    }

    #[test]
    fn divided_powers() {
        let v = f(&[1, 0]);
        assert_eq!(act_divided(Generator::E(0), 1, &v).unwrap(), act_wedge(Generator::E(0), &v).unwrap());
        assert!(act_divided(Generator::F(0), 2, &WedgeVector::zero()).unwrap().is_zero());
        for lam in dominant_weights_in_box(2, -3, 3) {
            for g in [Generator::E(0), Generator::F(0), Generator::E(1), Generator::F(2)] {
                act_divided(g, 2, &WedgeVector::basis(lam.clone())).unwrap();
            }
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_map(&f(&[1, 0])), f(&[0, -1]));
        let mut u = f(&[0, 0]);
        u.add_term(d(&[1, -1]), lp(&[(1, 1), (3, 1)]));
        assert_eq!(omega_map(&u), u);
    }

    #[test]
    fn dominant_words_are_fixed() {
        for n in 1..=4 {
            for lam in dominant_weights_in_box(n, -4, 4) {
                assert_eq!(straighten(lam.w0().entries()).unwrap(), WedgeVector::basis(lam.clone()));
            }
        }
    }

    #[test]
    fn straightening_is_triangular() {
        for lam in weights_in_box(3, -3, 3) {
            let v = straighten(lam.w0().entries()).unwrap();
            for (mu, c) in v.terms() {
                if mu.weight() == &lam {
                    assert!(c.is_one());
                } else {
                    assert!(c.in_q_zq(), "{lam:?} -> {mu:?}: {c}");
                    assert!(bruhat_leq(&lam, mu), "{lam:?} -> {mu:?}");
                }
            }
        }
    }

    #[test]
    fn q1_table_matches_action() {
        for n in 1..=3 {
            for lam in dominant_weights_in_box(n, -3, 3) {
                for i in 0..4 {
                    for g in [Generator::E(i), Generator::F(i)] {
                        let v = act_wedge(g, &WedgeVector::basis(lam.clone())).unwrap();
                        let got: HashMap<DominantWeight, i64> = v
                            .eval_one()
                            .into_iter()
                            .map(|(k, c)| (k, i64::try_from(c).unwrap()))
                            .collect();
                        assert_eq!(got, act_q1_table(g, &lam), "{g} on {lam:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn omega_intertwines_e_and_f() {
        for lam in dominant_weights_in_box(3, -3, 3) {
            let v = WedgeVector::basis(lam);
            for i in 0..4 {
                let lhs = omega_map(&act_wedge(Generator::E(i), &v).unwrap());
                let rhs = act_wedge(Generator::F(i), &omega_map(&v)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    fn arb_word() -> impl proptest::strategy::Strategy<Value = Vec<i32>> {
        prop::collection::vec(-3i32..=3, 1..=4)
    }

    proptest! {
        #[test]
        fn strategies_agree(word in arb_word(), seed in any::<u64>()) {
            let a = Straightener::new(Strategy::Leftmost, DEFAULT_FUEL).straighten(&word).unwrap();
            let b = Straightener::new(Strategy::Rightmost, DEFAULT_FUEL).straighten(&word).unwrap();
            let c = Straightener::new(Strategy::Random(seed), DEFAULT_FUEL).straighten(&word).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(&a, &c);
        }

        #[test]
        fn relations_vanish_in_context(
            left in prop::collection::vec(-3i32..=3, 0..=2),
            right in prop::collection::vec(-3i32..=3, 0..=2),
            x in -3i32..=3,
            y in -3i32..=3,
        ) {
            prop_assume!(violates(x, y));
            let mut w = left.clone();
            w.extend([x, y]);
            w.extend(&right);
            let mut total = straighten(&w).unwrap();
            for (c, [a, b]) in rewrite_pair(x, y) {
                let mut w2 = left.clone();
                w2.extend([a, b]);
                w2.extend(&right);
                total.add_scaled(&straighten(&w2).unwrap(), &-c);
            }
            prop_assert!(total.is_zero());
        }
    }
}
