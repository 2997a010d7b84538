//! Integer weights, the lattice `P` spanned by `ε_1, ε_2, …`, and the orders
//! and block data built on top of them.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Deref, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("a weight needs at least one entry")]
    Empty,
    #[error("cannot parse weight {0:?}")]
    Parse(String),
    #[error("({0}) is not dominant")]
    NotDominant(String),
    #[error("({0}) has a repeated nonzero entry and no dominant conjugate")]
    NoDominantConjugate(String),
    #[error("weights of different lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
}

/// An element of `ℤⁿ`. Accessors are 1-indexed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct Weight(Vec<i32>);

impl Weight {
    pub fn new(entries: Vec<i32>) -> Result<Self, WeightError> {
        if entries.is_empty() {
            return Err(WeightError::Empty);
        }
        Ok(Self(entries))
    }

    /// Panics on an empty slice; meant for literals.
    pub fn from_slice(entries: &[i32]) -> Self {
        Self::new(entries.to_vec()).expect("non-empty weight")
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i32> {
        self.0
    }

    /// `λ_r`, 1-indexed.
    pub fn get(&self, r: usize) -> i32 {
        self.0[r - 1]
    }

    fn check_index(&self, r: usize) -> Result<(), WeightError> {
        if r == 0 || r > self.n() {
            return Err(WeightError::IndexOutOfRange { index: r, n: self.n() });
        }
        Ok(())
    }

    /// `w₀λ = (λ_n, …, λ_1)`.
    pub fn w0(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// `-w₀λ`.
    pub fn neg_w0(&self) -> Self {
        Self(self.0.iter().rev().map(|a| -a).collect())
    }

    /// `λ + δ_r` for `δ_r` the r-th unit vector (1-indexed).
    pub fn plus_delta(&self, r: usize) -> Self {
        let mut v = self.0.clone();
        v[r - 1] += 1;
        Self(v)
    }

    /// `λ - δ_r`.
    pub fn minus_delta(&self, r: usize) -> Self {
        let mut v = self.0.clone();
        v[r - 1] -= 1;
        Self(v)
    }

    /// Number of zero entries.
    pub fn z(&self) -> usize {
        self.0.iter().filter(|&&a| a == 0).count()
    }

    pub fn is_dominant(&self) -> bool {
        self.0
            .windows(2)
            .all(|w| w[0] > w[1] || (w[0] == 0 && w[1] == 0))
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// True when no two entries sum to zero, i.e. `#λ ≤ 1`.
    pub fn is_typical(&self) -> bool {
        atypicality(self) <= 1
    }

    pub fn max_abs(&self) -> i32 {
        self.0.iter().map(|a| a.abs()).max().unwrap_or(0)
    }

    pub fn stats(&self) -> WeightStats {
        let z = self.z();
        let at = atypicality(self);
        WeightStats {
            z,
            h: self.n() - z,
            atypicality: at,
            is_typical: at <= 1,
            is_dominant: self.is_dominant(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Weight {
    type Err = WeightError;

    /// Comma-separated integers; whitespace around entries is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries = s
            .split(',')
            .map(|t| t.trim().parse::<i32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| WeightError::Parse(s.to_string()))?;
        Self::new(entries)
    }
}

impl TryFrom<Vec<i32>> for Weight {
    type Error = WeightError;
    fn try_from(v: Vec<i32>) -> Result<Self, Self::Error> {
        Self::new(v)
    }
}

impl From<Weight> for Vec<i32> {
    fn from(w: Weight) -> Self {
        w.0
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// The statistics `z`, `h = n - z`, `#λ` of a weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightStats {
    pub z: usize,
    pub h: usize,
    pub atypicality: usize,
    pub is_typical: bool,
    pub is_dominant: bool,
}

/// An element of `ℤⁿ₊`: strictly decreasing except for repeated zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Weight", into = "Weight")]
pub struct DominantWeight(Weight);

impl DominantWeight {
    pub fn new(w: Weight) -> Result<Self, WeightError> {
        if w.is_dominant() {
            Ok(Self(w))
        } else {
            Err(WeightError::NotDominant(w.to_string()))
        }
    }

    /// Panics unless `entries` is dominant; meant for literals.
    pub fn from_slice(entries: &[i32]) -> Self {
        Self::new(Weight::from_slice(entries)).expect("dominant weight")
    }

    pub(crate) fn new_unchecked(w: Weight) -> Self {
        debug_assert!(w.is_dominant(), "{w:?}");
        Self(w)
    }

    pub fn weight(&self) -> &Weight {
        &self.0
    }

    pub fn into_weight(self) -> Weight {
        self.0
    }

    /// `-w₀λ`, which is again dominant.
    pub fn neg_w0(&self) -> Self {
        Self(self.0.neg_w0())
    }

    /// `λ ± δ_r` when the result is still dominant.
    pub fn shifted(&self, r: usize, up: bool) -> Option<Self> {
        let w = if up { self.0.plus_delta(r) } else { self.0.minus_delta(r) };
        Self::new(w).ok()
    }
}

impl Deref for DominantWeight {
    type Target = Weight;
    fn deref(&self) -> &Weight {
        &self.0
    }
}

impl TryFrom<Weight> for DominantWeight {
    type Error = WeightError;
    fn try_from(w: Weight) -> Result<Self, Self::Error> {
        Self::new(w)
    }
}

impl From<DominantWeight> for Weight {
    fn from(d: DominantWeight) -> Self {
        d.0
    }
}

impl FromStr for DominantWeight {
    type Err = WeightError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(s.parse()?)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A finitely supported integer combination of `ε_1, ε_2, …`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BWeight {
    coords: BTreeMap<u32, i64>,
}

impl BWeight {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `ε_a` with `ε_0 = 0` and `ε_{-i} = -ε_i`.
    pub fn eps(a: i32) -> Self {
        let mut b = Self::zero();
        b.add_coord(a.unsigned_abs(), a.signum() as i64);
        b
    }

    /// The simple root `α_0 = -ε_1` or `α_i = ε_i - ε_{i+1}`.
    pub fn alpha(i: u32) -> Self {
        let mut b = Self::zero();
        if i == 0 {
            b.add_coord(1, -1);
        } else {
            b.add_coord(i, 1);
            b.add_coord(i + 1, -1);
        }
        b
    }

    fn add_coord(&mut self, i: u32, c: i64) {
        if i == 0 || c == 0 {
            return;
        }
        let e = self.coords.entry(i).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coords.remove(&i);
        }
    }

    /// Coefficient of `ε_i`.
    pub fn coeff(&self, i: u32) -> i64 {
        self.coords.get(&i).copied().unwrap_or(0)
    }

    pub fn coords(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coords.iter().map(|(&i, &c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// The form with `(ε_i, ε_j) = 2δ_{ij}`.
    pub fn pairing(&self, other: &Self) -> i64 {
        self.coords
            .iter()
            .map(|(i, c)| 2 * c * other.coeff(*i))
            .sum()
    }

    /// `Σ_i |(β, ε_i)| / 2`.
    pub fn half_l1(&self) -> i64 {
        self.coords.values().map(|c| c.abs()).sum()
    }
}

impl Add for &BWeight {
    type Output = BWeight;
    fn add(self, rhs: &BWeight) -> BWeight {
        let mut out = self.clone();
        for (&i, &c) in &rhs.coords {
            out.add_coord(i, c);
        }
        out
    }
}

impl Sub for &BWeight {
    type Output = BWeight;
    fn sub(self, rhs: &BWeight) -> BWeight {
        let mut out = self.clone();
        for (&i, &c) in &rhs.coords {
            out.add_coord(i, -c);
        }
        out
    }
}

impl Neg for &BWeight {
    type Output = BWeight;
    fn neg(self) -> BWeight {
        BWeight {
            coords: self.coords.iter().map(|(&i, &c)| (i, -c)).collect(),
        }
    }
}

impl fmt::Debug for BWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coords.iter().map(|(i, c)| format!("{c}e{i}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `(α_i, ε_a)`.
pub fn alpha_eps(i: u32, a: i32) -> i32 {
    BWeight::alpha(i).pairing(&BWeight::eps(a)) as i32
}

/// `wt(λ) = ε_{λ_1} + ⋯ + ε_{λ_n}`.
pub fn wt(lambda: &Weight) -> BWeight {
    wt_r(lambda, 1)
}

/// `wt_r(λ) = ε_{λ_r} + ⋯ + ε_{λ_n}`; `r = n + 1` gives zero.
pub fn wt_r(lambda: &Weight, r: usize) -> BWeight {
    let mut b = BWeight::zero();
    for &a in &lambda.entries()[(r - 1).min(lambda.n())..] {
        b.add_coord(a.unsigned_abs(), a.signum() as i64);
    }
    b
}

/// Checked variant of [`wt_r`].
pub fn try_wt_r(lambda: &Weight, r: usize) -> Result<BWeight, WeightError> {
    lambda.check_index(r)?;
    Ok(wt_r(lambda, r))
}

/// `#λ = n - ½ Σ_i |(wt(λ), ε_i)|`.
pub fn atypicality(lambda: &Weight) -> usize {
    lambda.n() - wt(lambda).half_l1() as usize
}

/// `β ≤ γ` in `P`, meaning `γ - β` is a non-negative combination of simple
/// roots. Writing `γ - β = Σ a_j α_j` forces `a_j = -Σ_{i>j} (γ-β)_i`, so the
/// test is that every tail sum of `γ - β` is non-positive.
pub fn dominance_leq_p(beta: &BWeight, gamma: &BWeight) -> bool {
    let d = gamma - beta;
    let mut tail = 0i64;
    for (_, c) in d.coords.iter().rev() {
        tail += c;
        if tail > 0 {
            return false;
        }
    }
    true
}

/// The Bruhat order `λ ≼ μ`. Weights of different lengths are incomparable.
pub fn bruhat_leq(lambda: &Weight, mu: &Weight) -> bool {
    if lambda.n() != mu.n() || wt(lambda) != wt(mu) {
        return false;
    }
    (2..=lambda.n()).all(|r| dominance_leq_p(&wt_r(lambda, r), &wt_r(mu, r)))
}

/// Dominance for `gl_n`: `μ - λ` is a sum of `δ_r - δ_s` with `r < s`.
pub fn gl_dominance_leq(lambda: &Weight, mu: &Weight) -> bool {
    if lambda.n() != mu.n() {
        return false;
    }
    let mut prefix = 0i64;
    for (a, b) in lambda.entries().iter().zip(mu.entries()) {
        prefix += (*b - *a) as i64;
        if prefix < 0 {
            return false;
        }
    }
    prefix == 0
}

/// Same central character, i.e. `wt(λ) = wt(μ)`.
pub fn same_block(lambda: &Weight, mu: &Weight) -> bool {
    lambda.n() == mu.n() && wt(lambda) == wt(mu)
}

/// Sorts the entries into decreasing order.
pub fn sort_to_dominant(lambda: &Weight) -> Result<DominantWeight, WeightError> {
    let mut v = lambda.entries().to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    DominantWeight::new(Weight(v))
        .map_err(|_| WeightError::NoDominantConjugate(lambda.to_string()))
}

/// Outcome of a bounded search for a `↓`-chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reachability {
    Reachable,
    /// Every weight in the search window was explored without meeting the target.
    Unreachable,
    FuelExhausted,
}

/// Weights one `↓` move below `λ`.
pub fn downarrow_moves(lambda: &Weight) -> Vec<Weight> {
    let v = lambda.entries();
    let mut out = Vec::new();
    for r in 0..v.len() {
        for s in r + 1..v.len() {
            if v[r] > v[s] {
                let mut w = v.to_vec();
                w.swap(r, s);
                out.push(Weight(w));
            }
            if v[r] + v[s] == 0 {
                let mut w = v.to_vec();
                w[r] -= 1;
                w[s] += 1;
                out.push(Weight(w));
            }
        }
    }
    out
}

/// Breadth-first search for `λ = ν_1 ↓ ν_2 ↓ ⋯ ↓ ν_k = μ`. The search is confined
/// to weights whose entries are bounded by one more than the largest entry of
/// `λ` and `μ`, and expands at most `fuel` weights.
pub fn downarrow_reachable(lambda: &Weight, mu: &Weight, fuel: u64) -> Result<Reachability, WeightError> {
    if lambda.n() != mu.n() {
        return Err(WeightError::LengthMismatch(lambda.n(), mu.n()));
    }
    let bound = lambda.max_abs().max(mu.max_abs()) + 1;
    let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    let mut spent = 0u64;
    while let Some(nu) = queue.pop_front() {
        if &nu == mu {
            return Ok(Reachability::Reachable);
        }
        if spent == fuel {
            return Ok(Reachability::FuelExhausted);
        }
        spent += 1;
        for next in downarrow_moves(&nu) {
            if next.max_abs() <= bound && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(Reachability::Unreachable)
}

/// All dominant `μ` with `wt(μ) = wt(λ)` and `μ ≤ λ`, in increasing
/// lexicographic order (a linear extension of dominance).
pub fn lower_block_set(lambda: &DominantWeight) -> Vec<DominantWeight> {
    let n = lambda.n();
    let lam = lambda.entries();
    let (lo, hi) = (lam[n - 1], lam[0]);
    let mut prefix_bound = Vec::with_capacity(n);
    let mut acc = 0i64;
    for &a in lam {
        acc += a as i64;
        prefix_bound.push(acc);
    }
    let target = wt(lambda);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);

    fn rec(
        cur: &mut Vec<i32>,
        sum: i64,
        n: usize,
        lo: i32,
        hi: i32,
        bound: &[i64],
        target: &BWeight,
        out: &mut Vec<DominantWeight>,
    ) {
        let k = cur.len();
        if k == n {
            if sum == bound[n - 1] {
                let w = Weight(cur.clone());
                if wt(&w) == *target {
                    out.push(DominantWeight(w));
                }
            }
            return;
        }
        let top = match cur.last() {
            None => hi,
            Some(&0) => 0,
            Some(&p) => p - 1,
        };
        let remaining = (n - k - 1) as i64;
        let mut a = top;
        while a >= lo {
            let s = sum + a as i64;
            if s <= bound[k] && s + remaining * hi.min(a) as i64 >= bound[n - 1] {
                cur.push(a);
                rec(cur, s, n, lo, hi, bound, target, out);
                cur.pop();
            }
            a -= 1;
        }
    }

    rec(&mut cur, 0, n, lo, hi, &prefix_bound, &target, &mut out);
    out.sort();
    out
}

/// Every dominant weight of length `n` with entries in `[lo, hi]`, in
/// increasing lexicographic order.
pub fn dominant_weights_in_box(n: usize, lo: i32, hi: i32) -> Vec<DominantWeight> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(cur: &mut Vec<i32>, n: usize, lo: i32, hi: i32, out: &mut Vec<DominantWeight>) {
        if cur.len() == n {
            out.push(DominantWeight(Weight(cur.clone())));
            return;
        }
        let top = match cur.last() {
            None => hi,
            Some(&0) => 0,
            Some(&p) => p - 1,
        };
        for a in lo..=top {
            cur.push(a);
            rec(cur, n, lo, hi, out);
            cur.pop();
        }
    }
    if n > 0 {
        rec(&mut cur, n, lo, hi, &mut out);
    }
    out.sort();
    out
}

/// Every weight of length `n` with entries in `[lo, hi]`.
pub fn weights_in_box(n: usize, lo: i32, hi: i32) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i32>| {
                (lo..=hi).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Weight).collect()
}
