//! The canonical basis `U_λ` of the completed wedge space, its closed form
//! at `q = 1`, and the dual `E`/`L` transition matrices.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crystal::{i_signature, Token};
use crate::lincomb::LinComb;
use crate::qring::LaurentPoly;
use crate::tensor::Generator;
use crate::wedge::{with_shared, Straightener, WedgeError, WedgeVector, DEFAULT_FUEL};
use crate::weights::{alpha_eps, atypicality, lower_block_set, sort_to_dominant, wt, DominantWeight, Weight};

/// A finite combination of the dual basis vectors `E_λ` (or `L_λ`).
pub type DualVector = LinComb<DominantWeight>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonicalError {
    #[error("weight {0} is typical")]
    Typical(DominantWeight),
    #[error("typicalization made no progress at {0}")]
    Stuck(DominantWeight),
    #[error("matrix is not unitriangular at ({0}, {1})")]
    NotUnitriangular(DominantWeight, DominantWeight),
    #[error(transparent)]
    Wedge(#[from] WedgeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OperatorKind {
    E,
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Operator {
    pub kind: OperatorKind,
    pub node: u32,
}

impl Operator {
    pub fn generator(self) -> Generator {
        match self.kind {
            OperatorKind::E => Generator::E(self.node),
            OperatorKind::F => Generator::F(self.node),
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.generator(), f)
    }
}

/// One move of the typicalization procedure: `U_source = operator · U_target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypicalizationStep {
    pub source: DominantWeight,
    pub target: DominantWeight,
    pub operator: Operator,
}

/// Finds `μ` and `X_i` with `U_λ = X_i U_μ` for an atypical `λ`.
pub fn typicalization_step(lambda: &DominantWeight) -> Result<TypicalizationStep, CanonicalError> {
    if atypicality(lambda) < 2 {
        return Err(CanonicalError::Typical(lambda.clone()));
    }
    let l = lambda.entries();
    let n = l.len();
    let stuck = || CanonicalError::Stuck(lambda.clone());
    let mut r = (0..n)
        .find(|&r| (r + 1..n).any(|s| l[r] + l[s] == 0))
        .ok_or_else(stuck)?;
    for _ in 0..4 * n + 4 {
        while r > 0 && l[r] == l[r - 1] - 1 {
            r -= 1;
        }
        let Some(mut s) = (0..n).find(|&s| l[r] + l[s] + 1 == 0) else {
            let target = lambda.shifted(r + 1, true).ok_or_else(stuck)?;
            let node = u32::try_from(l[r]).map_err(|_| stuck())?;
            return Ok(TypicalizationStep {
                source: lambda.clone(),
                target,
                operator: Operator { kind: OperatorKind::E, node },
            });
        };
        while s + 1 < n && l[s] == l[s + 1] + 1 {
            s += 1;
        }
        match (0..n).find(|&t| l[t] + l[s] - 1 == 0) {
            Some(t) => r = t,
            None => {
                let target = lambda.shifted(s + 1, false).ok_or_else(stuck)?;
                let node = u32::try_from(-l[s]).map_err(|_| stuck())?;
                return Ok(TypicalizationStep {
                    source: lambda.clone(),
                    target,
                    operator: Operator { kind: OperatorKind::F, node },
                });
            }
        }
    }
    Err(stuck())
}

/// The chain of steps from `λ` down to a typical weight.
pub fn typicalization_chain(lambda: &DominantWeight) -> Result<Vec<TypicalizationStep>, CanonicalError> {
    let mut out = Vec::new();
    let mut cur = lambda.clone();
    while atypicality(&cur) >= 2 {
        let step = typicalization_step(&cur)?;
        cur = step.target.clone();
        out.push(step);
    }
    Ok(out)
}

thread_local! {
    static UCB_MEMO: RefCell<HashMap<DominantWeight, WedgeVector>> = RefCell::new(HashMap::new());
}

fn ucb_in(s: &mut Straightener, lambda: &DominantWeight) -> Result<WedgeVector, CanonicalError> {
    let mut pending = Vec::new();
    let mut cur = lambda.clone();
    let mut v = loop {
        if let Some(v) = UCB_MEMO.with(|m| m.borrow().get(&cur).cloned()) {
            break v;
        }
        if atypicality(&cur) < 2 {
            break WedgeVector::basis(cur.clone());
        }
        let step = typicalization_step(&cur)?;
        cur = step.target.clone();
        pending.push(step);
    };
    while let Some(step) = pending.pop() {
        v = s.act(step.operator.generator(), &v)?;
        UCB_MEMO.with(|m| m.borrow_mut().insert(step.source.clone(), v.clone()));
    }
    Ok(v)
}

/// The canonical basis element `U_λ` as a finite combination of `F_μ`.
pub fn ucb(lambda: &DominantWeight) -> Result<WedgeVector, CanonicalError> {
    ucb_with_fuel(lambda, DEFAULT_FUEL)
}

/// [`ucb`] with an explicit budget of rewrite steps.
pub fn ucb_with_fuel(lambda: &DominantWeight, fuel: u64) -> Result<WedgeVector, CanonicalError> {
    with_shared(fuel, |s| ucb_in(s, lambda))
}

/// The index pairs `r_1 < ⋯ < r_p < s_p < ⋯ < s_1` (0-based) with
/// `λ_r + λ_s = 0`: positive pairs by decreasing value, then zero pairs
/// nested innermost.
fn cancelling_pairs(l: &[i32]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (r, &a) in l.iter().enumerate() {
        if a > 0 {
            if let Some(s) = l.iter().position(|&b| b == -a) {
                out.push((r, s));
            }
        }
    }
    if let Some(first) = l.iter().position(|&a| a == 0) {
        let z = l.iter().filter(|&&a| a == 0).count();
        for j in 0..z / 2 {
            out.push((first + j, first + z - 1 - j));
        }
    }
    out
}

/// `U_λ(1)` from the closed formula: every `θ ∈ {0,1}^p` raises the chosen
/// pairs by `k_q` and contributes `2^{(z(λ) - z(R_θ(λ)))/2} F_{R_θ(λ)}(1)`.
pub fn ucb_q1_closed(lambda: &DominantWeight) -> BTreeMap<DominantWeight, BigInt> {
    let l = lambda.entries();
    let z = lambda.z();
    let pairs = cancelling_pairs(l);
    let mut used: BTreeSet<i32> = l.iter().map(|a| a.abs()).collect();
    let mut ks = Vec::with_capacity(pairs.len());
    for &(r, _) in &pairs {
        if l[r] > 0 {
            let k = (1..).find(|k| !used.contains(&(l[r] + k))).expect("unbounded");
            used.insert(l[r] + k);
            ks.push(k);
        } else {
            let mut free = (1..).filter(|k| !used.contains(k));
            let (a, b) = (free.next().expect("unbounded"), free.next().expect("unbounded"));
            used.insert(a);
            used.insert(b);
            ks.push(if z.is_multiple_of(2) { a } else { b });
        }
    }
    let mut out = BTreeMap::new();
    for theta in 0u64..(1u64 << pairs.len()) {
        let mut w = l.to_vec();
        for (q, (&(r, s), &k)) in pairs.iter().zip(&ks).enumerate() {
            if theta >> q & 1 == 1 {
                w[r] += k;
                w[s] -= k;
            }
        }
        let mu = sort_to_dominant(&Weight::from_slice(&w)).expect("raised weight is dominant up to order");
        let c = BigInt::one() << ((z - mu.z()) / 2);
        *out.entry(mu).or_insert_with(BigInt::zero) += c;
    }
    out
}

/// `Σ_μ u_{μ,λ}(1) = 2^{(#λ - z(λ))/2} 3^{⌊z(λ)/2⌋}`.
pub fn q1_coefficient_sum(lambda: &DominantWeight) -> BigInt {
    let z = lambda.z();
    (BigInt::one() << ((atypicality(lambda) - z) / 2)) * BigInt::from(3).pow((z / 2) as u32)
}

/// A square matrix over `ℤ[q, q⁻¹]` indexed by an ordered set of dominant weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisMatrix {
    index: Vec<DominantWeight>,
    entries: BTreeMap<(usize, usize), LaurentPoly>,
}

impl BasisMatrix {
    /// An empty matrix on `index`, which is sorted and deduplicated.
    pub fn new(index: impl IntoIterator<Item = DominantWeight>) -> Self {
        let set: BTreeSet<DominantWeight> = index.into_iter().collect();
        Self { index: set.into_iter().collect(), entries: BTreeMap::new() }
    }

    pub fn index(&self) -> &[DominantWeight] {
        &self.index
    }

    pub fn position(&self, w: &DominantWeight) -> Option<usize> {
        self.index.binary_search(w).ok()
    }

    pub fn set(&mut self, row: &DominantWeight, col: &DominantWeight, v: LaurentPoly) {
        let (Some(i), Some(j)) = (self.position(row), self.position(col)) else {
            panic!("weight outside the index set");
        };
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn entry(&self, row: &DominantWeight, col: &DominantWeight) -> LaurentPoly {
        match (self.position(row), self.position(col)) {
            (Some(i), Some(j)) => self.entries.get(&(i, j)).cloned().unwrap_or_default(),
            _ => LaurentPoly::zero(),
        }
    }

    /// Non-zero entries of one column, keyed by row.
    pub fn column(&self, col: &DominantWeight) -> BTreeMap<DominantWeight, LaurentPoly> {
        let Some(j) = self.position(col) else { return BTreeMap::new() };
        self.entries
            .iter()
            .filter(|((_, c), _)| *c == j)
            .map(|((r, _), v)| (self.index[*r].clone(), v.clone()))
            .collect()
    }

    /// Non-zero entries of one row, keyed by column.
    pub fn row(&self, row: &DominantWeight) -> BTreeMap<DominantWeight, LaurentPoly> {
        let Some(i) = self.position(row) else { return BTreeMap::new() };
        self.entries
            .range((i, 0)..(i + 1, 0))
            .map(|((_, c), v)| (self.index[*c].clone(), v.clone()))
            .collect()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (&DominantWeight, &DominantWeight, &LaurentPoly)> + '_ {
        self.entries.iter().map(|((i, j), v)| (&self.index[*i], &self.index[*j], v))
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut out = Self { index: self.index.clone(), entries: BTreeMap::new() };
        for (&k, v) in &self.entries {
            let w = f(v);
            if !w.is_zero() {
                out.entries.insert(k, w);
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self {
            index: self.index.clone(),
            entries: self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.index, other.index, "index sets differ");
        let mut out = Self { index: self.index.clone(), entries: BTreeMap::new() };
        for (&(i, k), a) in &self.entries {
            for (&(_, j), b) in other.entries.range((k, 0)..(k + 1, 0)) {
                let e = out.entries.entry((i, j)).or_default();
                *e += &(a * b);
            }
        }
        out.entries.retain(|_, v| !v.is_zero());
        out
    }

    pub fn is_identity(&self) -> bool {
        self.entries.len() == self.index.len() && self.entries.iter().all(|(&(i, j), v)| i == j && v.is_one())
    }

    fn is_upper_unitriangular(&self) -> Result<(), CanonicalError> {
        for (i, _) in self.index.iter().enumerate() {
            if !self.entries.get(&(i, i)).is_some_and(LaurentPoly::is_one) {
                return Err(CanonicalError::NotUnitriangular(self.index[i].clone(), self.index[i].clone()));
            }
        }
        match self.entries.keys().find(|(i, j)| i > j) {
            Some(&(i, j)) => Err(CanonicalError::NotUnitriangular(self.index[i].clone(), self.index[j].clone())),
            None => Ok(()),
        }
    }

    /// Inverse of a unitriangular matrix (upper or lower in the index order),
    /// by substitution without division.
    pub fn unitriangular_inverse(&self) -> Result<Self, CanonicalError> {
        if self.entries.keys().any(|(i, j)| i > j) {
            return Ok(self.transpose().unitriangular_inverse()?.transpose());
        }
        self.is_upper_unitriangular()?;
        let n = self.index.len();
        let mut cols: Vec<BTreeMap<usize, LaurentPoly>> = vec![BTreeMap::new(); n];
        for j in 0..n {
            let mut col = BTreeMap::from([(j, LaurentPoly::one())]);
            for i in (0..j).rev() {
                let mut acc = LaurentPoly::zero();
                for (&(_, k), a) in self.entries.range((i, i + 1)..(i, j + 1)) {
                    if let Some(b) = col.get(&k) {
                        acc -= &(a * b);
                    }
                }
                if !acc.is_zero() {
                    col.insert(i, acc);
                }
            }
            cols[j] = col;
        }
        let mut out = Self { index: self.index.clone(), entries: BTreeMap::new() };
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col {
                out.entries.insert((i, j), v);
            }
        }
        Ok(out)
    }
}

/// The matrix of coefficients `u_{μ,λ}(q)`, with columns `U_λ` for `λ ∈ set`
/// and rows extended by every weight that occurs.
pub fn u_matrix(set: &[DominantWeight]) -> Result<BasisMatrix, CanonicalError> {
    let cols: Vec<(DominantWeight, WedgeVector)> = set
        .iter()
        .map(|l| ucb(l).map(|u| (l.clone(), u)))
        .collect::<Result<_, _>>()?;
    let index = cols.iter().flat_map(|(l, u)| std::iter::once(l.clone()).chain(u.keys().cloned()));
    let mut m = BasisMatrix::new(index.collect::<Vec<_>>());
    for (l, u) in &cols {
        for (mu, c) in u.terms() {
            m.set(mu, l, c.clone());
        }
    }
    Ok(m)
}

/// `E_in_L` (column `λ` lists `E_λ = Σ u_{−w₀λ,−w₀μ}(q⁻¹) L_μ`) and its
/// inverse `L_in_E` (column `λ` lists `L_λ = Σ l_{μ,λ}(q) E_μ`), both over
/// the lower block set of `λ0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ELMatrices {
    pub e_in_l: BasisMatrix,
    pub l_in_e: BasisMatrix,
}

pub fn e_l_matrices(lambda0: &DominantWeight) -> Result<ELMatrices, CanonicalError> {
    let set = lower_block_set(lambda0);
    let mut e_in_l = BasisMatrix::new(set.clone());
    for mu in &set {
        let u = ucb(&mu.neg_w0())?;
        for lam in &set {
            if let Some(c) = u.get(&lam.neg_w0()) {
                e_in_l.set(mu, lam, c.bar());
            }
        }
    }
    let l_in_e = e_in_l.unitriangular_inverse()?;
    Ok(ELMatrices { e_in_l, l_in_e })
}

/// `c_{λ,r}(q)`: `(q + q⁻¹) Σ_{s=0}^{z} (−q⁻²)^s` for doubled tokens, else 1.
fn c_coefficient(t: Token, z: usize) -> LaurentPoly {
    if matches!(t, Token::MinusMinus | Token::PlusPlus) {
        let mut sum = LaurentPoly::zero();
        for s in 0..=z as i32 {
            sum += &LaurentPoly::monomial(if s % 2 == 0 { 1 } else { -1 }, -2 * s);
        }
        &LaurentPoly::from_terms([(1, 1), (-1, 1)]) * &sum
    } else {
        LaurentPoly::one()
    }
}

/// `E_i E_λ` or `F_i E_λ` in the `E` basis. `K_i^{±1}` act diagonally.
pub fn act_on_e(g: Generator, lambda: &DominantWeight) -> DualVector {
    let (i, lower) = match g {
        Generator::E(i) => (i, true),
        Generator::F(i) => (i, false),
        Generator::K(i) | Generator::KInv(i) => {
            let pair = wt(lambda).pairing(&crate::weights::BWeight::alpha(i)) as i32;
            let e = if matches!(g, Generator::K(_)) { pair } else { -pair };
            return DualVector::term(lambda.clone(), LaurentPoly::q_pow(e));
        }
    };
    let l = lambda.entries();
    let sig = i_signature(lambda, i);
    let z = lambda.z();
    let mut out = DualVector::zero();
    for (r, &t) in sig.slots().iter().enumerate() {
        let admissible = if lower {
            matches!(t, Token::Minus | Token::MinusPlus | Token::MinusMinus)
        } else {
            matches!(t, Token::Plus | Token::MinusPlus | Token::PlusPlus)
        };
        if !admissible {
            continue;
        }
        let Some(mu) = lambda.shifted(r + 1, !lower) else { continue };
        let twist: i32 = if lower {
            -l[r + 1..].iter().map(|&a| alpha_eps(i, a)).sum::<i32>()
        } else {
            l[..r].iter().map(|&a| alpha_eps(i, a)).sum()
        };
        out.add_term(mu, c_coefficient(t, z).shift(twist));
    }
    out
}

/// Coefficients `a_{−w₀λ,−w₀μ}(q⁻¹)` of `E_λ = Σ_μ a_{−w₀λ,−w₀μ}(q⁻¹) M_μ`
/// for every `μ ∈ ℤⁿ` with `|μ_r| ≤ bound`.
pub fn e_in_m_truncated(lambda: &DominantWeight, bound: i32) -> Result<BTreeMap<Weight, LaurentPoly>, CanonicalError> {
    let target = lambda.neg_w0();
    let block = wt(lambda);
    let mut out = BTreeMap::new();
    with_shared(DEFAULT_FUEL, |s| -> Result<(), CanonicalError> {
        for mu in crate::weights::weights_in_box(lambda.n(), -bound, bound) {
            if wt(&mu) != block {
                continue;
            }
            let word: Vec<i32> = mu.entries().iter().map(|a| -a).collect();
            let v = s.straighten(&word)?;
            if let Some(c) = v.get(&target) {
                out.insert(mu, c.bar());
            }
        }
        Ok(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::crystal_dominant;
    use crate::qring::lp;
    use crate::wedge::act_wedge;
    use crate::weights::{bruhat_leq, dominant_weights_in_box};

    fn dw(v: &[i32]) -> DominantWeight {
        DominantWeight::from_slice(v)
    }

    fn q1(v: &WedgeVector) -> BTreeMap<DominantWeight, BigInt> {
        v.eval_one()
    }

    #[test]
    fn procedure_examples() {
        let s = typicalization_step(&dw(&[0, 0])).unwrap();
        assert_eq!(s.target, dw(&[1, 0]));
        assert_eq!(s.operator, Operator { kind: OperatorKind::E, node: 0 });

        let chain = typicalization_chain(&dw(&[5, 3, 2, 1, 0, 0, -1, -4, -6])).unwrap();
        let targets: Vec<Vec<i32>> = chain.iter().map(|s| s.target.entries().to_vec()).collect();
        assert_eq!(targets[0], vec![5, 3, 2, 1, 0, 0, -1, -4, -7]);
        assert_eq!(targets.last().unwrap(), &vec![7, 5, 4, 3, 1, 0, -2, -6, -8]);
        assert_eq!(targets.len(), 14);
        for printed in [
            [6, 3, 2, 1, 0, 0, -1, -4, -7],
            [6, 3, 2, 1, 0, 0, -1, -5, -7],
            [6, 4, 3, 2, 0, 0, -1, -5, -8],
            [7, 5, 4, 3, 0, 0, -1, -6, -8],
            [7, 5, 4, 3, 0, 0, -2, -6, -8],
        ] {
            assert!(targets.contains(&printed.to_vec()), "{printed:?}");
        }
        let word: Vec<String> = chain.iter().map(|s| s.operator.to_string()).collect();
        assert_eq!(word.join(""), "F6E5F4E3E2E1F7E6F5E4E3E2F1E0");

        assert!(matches!(typicalization_step(&dw(&[3, 1, 0])), Err(CanonicalError::Typical(_))));
        for lam in dominant_weights_in_box(3, -3, 3) {
            if let Ok(step) = typicalization_step(&lam) {
                assert!(atypicality(&step.target) <= atypicality(&lam));
            }
        }
    }

    #[test]
    fn small_expansions() {
        let u = ucb(&dw(&[0, 0])).unwrap();
        assert_eq!(u.render("F"), "F[0,0] + (q + q^3)·F[1,-1]");
        assert_eq!(ucb(&dw(&[3, 1, 0])).unwrap(), WedgeVector::basis(dw(&[3, 1, 0])));
        let u = ucb(&dw(&[0, 0, 0])).unwrap();
        let mut want = WedgeVector::basis(dw(&[0, 0, 0]));
        want.add_term(dw(&[1, 0, -1]), lp(&[(1, 1), (5, -1)]));
        want.add_term(dw(&[2, 0, -2]), lp(&[(1, 1), (3, 1)]));
        assert_eq!(u, want);
    }

    #[test]
    fn closed_form_examples() {
        let c = ucb_q1_closed(&dw(&[0, 0, 0]));
        let want: BTreeMap<_, _> = [(dw(&[0, 0, 0]), 1.into()), (dw(&[2, 0, -2]), 2.into())].into();
        assert_eq!(c, want);
        let c = ucb_q1_closed(&dw(&[5, 3, 2, 1, 0, 0, 0, -1, -4, -6]));
        let want: BTreeMap<_, BigInt> = [
            (dw(&[5, 3, 2, 1, 0, 0, 0, -1, -4, -6]), 1.into()),
            (dw(&[7, 5, 3, 2, 0, 0, 0, -4, -6, -7]), 1.into()),
            (dw(&[9, 5, 3, 2, 1, 0, -1, -4, -6, -9]), 2.into()),
            (dw(&[9, 7, 5, 3, 2, 0, -4, -6, -7, -9]), 2.into()),
        ]
        .into();
        assert_eq!(c, want);
        assert_eq!(ucb_q1_closed(&dw(&[4, 1, -2])), [(dw(&[4, 1, -2]), BigInt::one())].into());
    }

    #[test]
    fn algorithm_matches_closed_form_and_sum() {
        for n in 1..=3 {
            for lam in dominant_weights_in_box(n, -3, 3) {
                let u = ucb(&lam).unwrap();
                assert_eq!(q1(&u), ucb_q1_closed(&lam), "{lam:?}");
                let total: BigInt = u.terms().map(|(_, c)| c.eval_one()).sum();
                assert_eq!(total, q1_coefficient_sum(&lam), "{lam:?}");
            }
        }
    }

    #[test]
    fn shape_of_expansions() {
        for lam in dominant_weights_in_box(3, -3, 3) {
            let u = ucb(&lam).unwrap();
            assert!(u.coeff(&lam).is_one());
            for (mu, c) in u.terms() {
                if mu != &lam {
                    assert!(c.in_q_zq() && c.is_polynomial(), "{lam:?} {mu:?}");
                    assert!(bruhat_leq(&lam, mu), "{lam:?} {mu:?}");
                }
            }
            let om = ucb(&lam.neg_w0()).unwrap();
            assert_eq!(crate::wedge::omega_map(&u), om, "{lam:?}");
        }
    }

    #[test]
    fn leading_coefficient_law() {
        for lam in dominant_weights_in_box(3, -3, 3) {
            let Ok(step) = typicalization_step(&lam) else { continue };
            let v = act_wedge(step.operator.generator(), &ucb(&step.target).unwrap()).unwrap();
            assert_eq!(v, ucb(&lam).unwrap());
        }
    }

    #[test]
    fn raising_operator_on_canonical_basis() {
        for lam in dominant_weights_in_box(3, -3, 3) {
            for i in 0..4 {
                let cd = crystal_dominant(&lam, i);
                let Some(e) = cd.e else { continue };
                let lhs = act_wedge(Generator::E(i), &ucb(&lam).unwrap()).unwrap();
                let k = LaurentPoly::quantum_int(cd.phi as i64 + 1, i).unwrap();
                assert_eq!(lhs, ucb(&e).unwrap().scale(&k), "{lam:?} i={i}");
            }
        }
    }

    #[test]
    fn dual_matrices() {
        let m = e_l_matrices(&dw(&[1, -1])).unwrap();
        assert_eq!(m.e_in_l.entry(&dw(&[0, 0]), &dw(&[1, -1])), lp(&[(-1, 1), (-3, 1)]));
        assert_eq!(m.e_in_l.column(&dw(&[0, 0])), [(dw(&[0, 0]), LaurentPoly::one())].into());
        assert!(m.e_in_l.mul(&m.l_in_e).is_identity());
        for lam0 in [dw(&[2, 0, -2]), dw(&[2, 0, 0, -2]), dw(&[3, -3])] {
            let m = e_l_matrices(&lam0).unwrap();
            assert!(m.e_in_l.mul(&m.l_in_e).is_identity());
            assert!(m.l_in_e.mul(&m.e_in_l).is_identity());
            for (r, c, v) in m.l_in_e.nonzero() {
                if r != c {
                    assert!(v.in_qinv_zqinv(), "{r:?} {c:?} {v}");
                }
            }
        }
        let m = e_l_matrices(&dw(&[3, -3])).unwrap();
        assert_eq!(m.e_in_l.entry(&dw(&[2, -2]), &dw(&[3, -3])), lp(&[(-2, 1)]));
    }

    #[test]
    fn action_on_dual_basis() {
        let v = act_on_e(Generator::E(0), &dw(&[1, -1]));
        assert_eq!(v, DualVector::term(dw(&[0, -1]), lp(&[(-1, 1), (-3, 1)])));
        assert!(act_on_e(Generator::E(5), &dw(&[1, -1])).is_zero());
    }

    #[test]
    fn adjointness_at_one() {
        for n in 1..=3 {
            let ws = dominant_weights_in_box(n, -2, 2);
            for mu in &ws {
                for i in 0..3 {
                    for g in [Generator::E(i), Generator::F(i)] {
                        let fv = q1(&act_wedge(g, &WedgeVector::basis(mu.clone())).unwrap());
                        for lam in &ws {
                            let ev = act_on_e(g, &lam.neg_w0()).coeff(&mu.neg_w0()).eval_one();
                            let want = fv.get(lam).cloned().unwrap_or_default();
                            assert_eq!(ev, want, "{g} {lam:?} {mu:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dual_in_verma_basis() {
        let lam = dw(&[0, 0]);
        let e = e_in_m_truncated(&lam, 4).unwrap();
        assert!(e[lam.weight()].is_one());
        assert_eq!(e.get(&Weight::from_slice(&[1, 0])), None);
        assert_eq!(e.get(&Weight::from_slice(&[1, -1])), None);
        assert_eq!(e[&Weight::from_slice(&[-1, 1])], lp(&[(-1, -1)]));
    }

    proptest::proptest! {
        #[test]
        fn unitriangular_and_specializes(mut v in proptest::collection::vec(-3i32..=3, 1..=4)) {
            v.sort_unstable_by(|a, b| b.cmp(a));
            let Ok(lam) = DominantWeight::new(Weight::from_slice(&v)) else { return Ok(()) };
            let u = ucb(&lam).unwrap();
            proptest::prop_assert!(u.coeff(&lam).is_one());
            for (mu, c) in u.terms().filter(|(mu, _)| **mu != lam) {
                proptest::prop_assert!(c.in_q_zq(), "{:?}: {}", mu, c);
                proptest::prop_assert!(bruhat_leq(&lam, mu));
            }
            proptest::prop_assert_eq!(u.eval_one(), ucb_q1_closed(&lam));
        }
    }
}
