//! The quantum group action on tensor space `V^{⊗n}` and, for `n = 2`, the
//! completed bar involution with its canonical basis `T_λ`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lincomb::LinComb;
use crate::qring::{lp, LaurentPoly};
use crate::weights::{alpha_eps, Weight};

/// A finite combination of the monomial basis `N_λ = v_{λ_1} ⊗ ⋯ ⊗ v_{λ_n}`.
pub type TensorVector = LinComb<Weight>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("the n = 2 formulas need a weight of length 2, got {0}")]
    NotRankTwo(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    E(u32),
    F(u32),
    K(u32),
    KInv(u32),
}

impl Generator {
    pub fn node(self) -> u32 {
        match self {
            Generator::E(i) | Generator::F(i) | Generator::K(i) | Generator::KInv(i) => i,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(i) => write!(f, "E{i}"),
            Generator::F(i) => write!(f, "F{i}"),
            Generator::K(i) => write!(f, "K{i}"),
            Generator::KInv(i) => write!(f, "K{i}^-1"),
        }
    }
}

fn q_plus_qinv() -> LaurentPoly {
    lp(&[(1, 1), (-1, 1)])
}

/// `E_i v_a` on a single factor.
fn e_letter(i: u32, a: i32) -> Option<(i32, LaurentPoly)> {
    let ii = i as i32;
    if i == 0 {
        match a {
            0 => Some((-1, q_plus_qinv())),
            1 => Some((0, LaurentPoly::one())),
            _ => None,
        }
    } else if a == ii + 1 {
        Some((ii, LaurentPoly::one()))
    } else if a == -ii {
        Some((-ii - 1, LaurentPoly::one()))
    } else {
        None
    }
}

/// `F_i v_a` on a single factor.
fn f_letter(i: u32, a: i32) -> Option<(i32, LaurentPoly)> {
    let ii = i as i32;
    if i == 0 {
        match a {
            0 => Some((1, q_plus_qinv())),
            -1 => Some((0, LaurentPoly::one())),
            _ => None,
        }
    } else if a == ii {
        Some((ii + 1, LaurentPoly::one()))
    } else if a == -ii - 1 {
        Some((-ii, LaurentPoly::one()))
    } else {
        None
    }
}

/// `g N_λ` for a single monomial, as `(word, coefficient)` pairs.
pub fn act_on_word(g: Generator, word: &[i32]) -> Vec<(Vec<i32>, LaurentPoly)> {
    let i = g.node();
    match g {
        Generator::K(_) | Generator::KInv(_) => {
            let e: i32 = word.iter().map(|&a| alpha_eps(i, a)).sum();
            let e = if matches!(g, Generator::K(_)) { e } else { -e };
            vec![(word.to_vec(), LaurentPoly::q_pow(e))]
        }
        Generator::E(_) => {
            let mut out = Vec::new();
            // K_i^{-1} acts on every factor to the right of the active one
            let mut right = 0i32;
            for r in (0..word.len()).rev() {
                if let Some((b, c)) = e_letter(i, word[r]) {
                    let mut w = word.to_vec();
                    w[r] = b;
                    out.push((w, c.shift(-right)));
                }
                right += alpha_eps(i, word[r]);
            }
            out
        }
        Generator::F(_) => {
            let mut out = Vec::new();
            let mut left = 0i32;
            for r in 0..word.len() {
                if let Some((b, c)) = f_letter(i, word[r]) {
                    let mut w = word.to_vec();
                    w[r] = b;
                    out.push((w, c.shift(left)));
                }
                left += alpha_eps(i, word[r]);
            }
            out
        }
    }
}

/// The action of a generator on tensor space.
pub fn act_tensor(g: Generator, v: &TensorVector) -> TensorVector {
    let mut out = TensorVector::zero();
    for (lam, c) in v.terms() {
        for (w, k) in act_on_word(g, lam.entries()) {
            out.add_term(Weight::new(w).expect("non-empty"), &k * c);
        }
    }
    out
}

/// The filtration key `Σ_r r·μ_r`.
pub fn key(mu: &Weight) -> i64 {
    mu.entries()
        .iter()
        .enumerate()
        .map(|(r, &a)| (r as i64 + 1) * a as i64)
        .sum()
}

/// A vector of the completion, known exactly on every `N_μ` with
/// `key(μ) < cutoff` and unknown above.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedTensorVector {
    pub terms: TensorVector,
    pub cutoff: i64,
}

impl TruncatedTensorVector {
    pub fn new(v: TensorVector, cutoff: i64) -> Self {
        Self {
            terms: v.filter(|mu| key(mu) < cutoff),
            cutoff,
        }
    }

    /// Equality below the smaller of the two cutoffs.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let c = self.cutoff.min(other.cutoff);
        self.terms.filter(|mu| key(mu) < c) == other.terms.filter(|mu| key(mu) < c)
    }
}

fn two_minus() -> LaurentPoly {
    // q² - q⁻²
    lp(&[(2, 1), (-2, -1)])
}

/// `(-q²)^k`.
fn neg_q2_pow(k: i32) -> LaurentPoly {
    LaurentPoly::monomial(if k % 2 == 0 { 1 } else { -1 }, 2 * k)
}

fn w2(a: i32, b: i32) -> Weight {
    Weight::from_slice(&[a, b])
}

/// `bar(N_λ)` for `n = 2`, truncated to keys below `cutoff`.
pub fn bar_n2(lambda: &Weight, cutoff: i64) -> Result<TruncatedTensorVector, TensorError> {
    if lambda.n() != 2 {
        return Err(TensorError::NotRankTwo(lambda.n()));
    }
    let (a, b) = (lambda.get(1), lambda.get(2));
    let mut v = TensorVector::basis(lambda.clone());
    if a + b != 0 {
        if a > b {
            v.add_term(w2(b, a), two_minus());
        }
    } else if a == 0 {
        let c = &q_plus_qinv() * &two_minus();
        let mut t = -1;
        while key(&w2(t, -t)) < cutoff {
            v.add_term(w2(t, -t), &c * &neg_q2_pow(t + 1));
            t -= 1;
        }
    } else if a < 0 {
        let a = -a;
        let mut t = a + 1;
        while key(&w2(-t, t)) < cutoff {
            v.add_term(w2(-t, t), &two_minus() * &neg_q2_pow(a + 1 - t));
            t += 1;
        }
    } else {
        let q2 = LaurentPoly::q_pow(2);
        v.add_term(w2(-a, a), &q2 * &two_minus());
        for t in 1..a {
            v.add_term(w2(t, -t), &two_minus() * &neg_q2_pow(t + 1 - a));
        }
        v.add_term(w2(0, 0), &lp(&[(1, 1), (-1, -1)]) * &neg_q2_pow(1 - a));
        let c = &q2 * &two_minus();
        let mut t = -1;
        while key(&w2(t, -t)) < cutoff {
            v.add_term(w2(t, -t), &c * &neg_q2_pow(t + 1 - a));
            t -= 1;
        }
    }
    Ok(TruncatedTensorVector::new(v, cutoff))
}

/// Antilinear extension of [`bar_n2`] to a truncated vector.
pub fn bar_vector_n2(v: &TruncatedTensorVector) -> Result<TruncatedTensorVector, TensorError> {
    let mut out = TensorVector::zero();
    for (mu, c) in v.terms.terms() {
        out.add_scaled(&bar_n2(mu, v.cutoff)?.terms, &c.bar());
    }
    Ok(TruncatedTensorVector::new(out, v.cutoff))
}

/// The canonical basis element `T_λ` of the completed tensor square.
pub fn t2_closed(lambda: &Weight) -> Result<TensorVector, TensorError> {
    if lambda.n() != 2 {
        return Err(TensorError::NotRankTwo(lambda.n()));
    }
    let (a, b) = (lambda.get(1), lambda.get(2));
    let q = LaurentPoly::q_pow;
    let mut v = TensorVector::basis(lambda.clone());
    if a + b != 0 {
        if a > b {
            v.add_term(w2(b, a), q(2));
        }
    } else if a == 0 {
        v.add_term(w2(-1, 1), lp(&[(1, 1), (3, 1)]));
    } else if a < 0 {
        v.add_term(w2(a - 1, 1 - a), q(2));
    } else if a == 1 {
        v.add_term(w2(0, 0), q(1));
        v.add_term(w2(-1, 1), q(4));
    } else {
        v.add_term(w2(a - 1, 1 - a), q(2));
        v.add_term(w2(1 - a, a - 1), q(2));
        v.add_term(w2(-a, a), q(4));
    }
    Ok(v)
}

/// `M_λ` expanded in the `L` basis: the coefficient of `L_μ` is
/// `bar` of the coefficient of `N_{-λ}` in `T_{-μ}`.
pub fn m2_in_l(lambda: &Weight) -> Result<BTreeMap<Weight, LaurentPoly>, TensorError> {
    if lambda.n() != 2 {
        return Err(TensorError::NotRankTwo(lambda.n()));
    }
    let target = -lambda;
    let m = lambda.max_abs() + 1;
    let mut out = BTreeMap::new();
    for x in -m..=m {
        for y in -m..=m {
            let nu = w2(x, y);
            let c = t2_closed(&nu)?.coeff(&target);
            if !c.is_zero() {
                out.insert(-&nu, c.bar());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{bruhat_leq, weights_in_box, wt, BWeight};
    use proptest::prelude::*;

    fn n(v: &[i32]) -> TensorVector {
        TensorVector::basis(Weight::from_slice(v))
    }

    #[test]
    fn action_examples() {
        assert_eq!(act_tensor(Generator::E(1), &n(&[2])), n(&[1]));
        assert_eq!(act_tensor(Generator::E(0), &n(&[0])), n(&[-1]).scale(&q_plus_qinv()));
        assert_eq!(
            act_tensor(Generator::F(0), &n(&[0, 0])),
            (&n(&[1, 0]) + &n(&[0, 1])).scale(&q_plus_qinv())
        );
    }

    fn gens(max_node: u32) -> Vec<Generator> {
        (0..=max_node)
            .flat_map(|i| [Generator::E(i), Generator::F(i), Generator::K(i), Generator::KInv(i)])
            .collect()
    }

    fn apply(word: &[Generator], v: &TensorVector) -> TensorVector {
        word.iter().rev().fold(v.clone(), |acc, &g| act_tensor(g, &acc))
    }

    #[test]
    fn k_scales_by_weight() {
        for lam in weights_in_box(3, -3, 3) {
            for i in 0..4 {
                let e = BWeight::alpha(i).pairing(&wt(&lam)) as i32;
                assert_eq!(
                    act_tensor(Generator::K(i), &TensorVector::basis(lam.clone())),
                    TensorVector::term(lam.clone(), LaurentPoly::q_pow(e))
                );
            }
        }
        assert!(gens(1).contains(&Generator::KInv(1)));
    }

    #[test]
    fn defining_relations() {
        for lam in weights_in_box(3, -3, 3).into_iter().step_by(3) {
            let v = TensorVector::basis(lam);
            for i in 0..4u32 {
                for j in 0..4u32 {
                    let ef = apply(&[Generator::E(i), Generator::F(j)], &v);
                    let fe = apply(&[Generator::F(j), Generator::E(i)], &v);
                    let lhs = &ef - &fe;
                    let rhs = if i == j {
                        let k = &act_tensor(Generator::K(i), &v) - &act_tensor(Generator::KInv(i), &v);
                        let s = if i == 0 { 1 } else { 2 };
                        let den = lp(&[(s, 1), (-s, -1)]);
                        LinComb::from_terms(k.terms().map(|(w, c)| (w.clone(), c.exact_div(&den).unwrap())))
                    } else {
                        TensorVector::zero()
                    };
                    assert_eq!(lhs, rhs, "E{i} F{j} on {v:?}");

                    let conj = apply(&[Generator::K(i), Generator::E(j), Generator::KInv(i)], &v);
                    let e = BWeight::alpha(i).pairing(&BWeight::alpha(j)) as i32;
                    assert_eq!(conj, act_tensor(Generator::E(j), &v).scale(&LaurentPoly::q_pow(e)));
                }
            }
        }
    }

    #[test]
    fn bar_examples() {
        let v = bar_n2(&Weight::from_slice(&[0, 1]), 20).unwrap();
        assert_eq!(v.terms, n(&[0, 1]));
        let v = bar_n2(&Weight::from_slice(&[2, 0]), 20).unwrap();
        assert_eq!(v.terms, &n(&[2, 0]) + &n(&[0, 2]).scale(&two_minus()));
        let v = bar_n2(&Weight::from_slice(&[1, -1]), 4).unwrap();
        let mut expect = n(&[1, -1]);
        expect.add_term(w2(-1, 1), lp(&[(4, 1), (0, -1)]));
        expect.add_term(w2(0, 0), lp(&[(1, 1), (-1, -1)]));
        // b = -1, -2, -3: q²(q² - q⁻²)(-q²)^b
        for t in 1..=3 {
            expect.add_term(w2(-t, t), &lp(&[(4, 1), (0, -1)]) * &neg_q2_pow(-t));
        }
        assert_eq!(v.terms, expect);
        assert!(bar_n2(&Weight::from_slice(&[1]), 4).is_err());
    }

    #[test]
    fn bar_is_involution() {
        for lam in weights_in_box(2, -5, 5) {
            let once = bar_n2(&lam, 30).unwrap();
            let twice = bar_vector_n2(&once).unwrap();
            assert_eq!(twice.terms, TensorVector::basis(lam.clone()), "{lam:?}");
        }
    }

    #[test]
    fn t2_examples() {
        let t = t2_closed(&w2(0, 0)).unwrap();
        assert_eq!(t, &n(&[0, 0]) + &n(&[-1, 1]).scale(&lp(&[(1, 1), (3, 1)])));
        let t = t2_closed(&w2(1, -1)).unwrap();
        let mut expect = n(&[1, -1]);
        expect.add_term(w2(0, 0), lp(&[(1, 1)]));
        expect.add_term(w2(-1, 1), lp(&[(4, 1)]));
        assert_eq!(t, expect);
        assert_eq!(t2_closed(&w2(0, 3)).unwrap(), n(&[0, 3]));
    }

    #[test]
    fn t2_is_bar_invariant_and_triangular() {
        for lam in weights_in_box(2, -4, 4) {
            let t = t2_closed(&lam).unwrap();
            let tt = TruncatedTensorVector::new(t.clone(), 30);
            assert_eq!(bar_vector_n2(&tt).unwrap(), tt, "{lam:?}");
            for (mu, c) in t.terms() {
                if mu != &lam {
                    assert!(c.in_q_zq());
                    assert!(bruhat_leq(mu, &lam) && mu != &lam);
                }
            }
        }
    }

    #[test]
    fn m2_examples() {
        let m = m2_in_l(&w2(1, -1)).unwrap();
        let expect = BTreeMap::from([
            (w2(1, -1), LaurentPoly::one()),
            (w2(0, 0), lp(&[(-1, 1), (-3, 1)])),
            (w2(-2, 2), lp(&[(-2, 1)])),
            (w2(-1, 1), lp(&[(-4, 1)])),
        ]);
        assert_eq!(m, expect);
        let m = m2_in_l(&w2(0, 0)).unwrap();
        assert_eq!(m, BTreeMap::from([(w2(0, 0), LaurentPoly::one()), (w2(-1, 1), lp(&[(-1, 1)]))]));
        assert_eq!(m2_in_l(&w2(0, 3)).unwrap(), BTreeMap::from([(w2(0, 3), LaurentPoly::one())]));
    }

    proptest! {
        #[test]
        fn bar_commutes_with_e(a in -5i32..=5, b in -5i32..=5, i in 0u32..5) {
            let lam = w2(a, b);
            let cutoff = 24;
            // E_i lowers keys by at most 2, so compare below cutoff - 2
            let lhs = act_tensor(Generator::E(i), &bar_n2(&lam, cutoff + 2).unwrap().terms);
            let lhs = TruncatedTensorVector::new(lhs, cutoff - 2);
            let ev = TruncatedTensorVector::new(act_tensor(Generator::E(i), &TensorVector::basis(lam)), cutoff);
            let rhs = bar_vector_n2(&ev).unwrap();
            prop_assert!(lhs.agrees_with(&rhs));
        }
    }
}
