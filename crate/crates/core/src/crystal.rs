//! i-signatures and the crystal operators they determine, on `ℤⁿ` and on
//! the dominant weights.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::weights::{DominantWeight, Weight};

/// One slot of an i-signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Token {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "++")]
    PlusPlus,
    #[serde(rename = "-+")]
    MinusPlus,
    #[serde(rename = "--")]
    MinusMinus,
    #[serde(rename = "0")]
    Zero,
}

impl Token {
    /// The letters this slot contributes to the flattened word; `true` is `+`.
    pub fn letters(self) -> &'static [bool] {
        match self {
            Token::Plus => &[true],
            Token::Minus => &[false],
            Token::PlusPlus => &[true, true],
            Token::MinusPlus => &[false, true],
            Token::MinusMinus => &[false, false],
            Token::Zero => &[],
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Token::Plus => "+",
            Token::Minus => "-",
            Token::PlusPlus => "++",
            Token::MinusPlus => "-+",
            Token::MinusMinus => "--",
            Token::Zero => "0",
        }
    }

    /// Slots at which a raising operator may remove `δ_r`.
    pub fn has_minus(self) -> bool {
        matches!(self, Token::Minus | Token::MinusPlus | Token::MinusMinus)
    }

    /// Slots at which a lowering operator may add `δ_r`.
    pub fn has_plus(self) -> bool {
        matches!(self, Token::Plus | Token::MinusPlus | Token::PlusPlus)
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Signature(pub Vec<Token>);

impl Signature {
    pub fn slots(&self) -> &[Token] {
        &self.0
    }

    /// Flattened word of `(position, is_plus)` letters, positions 1-indexed.
    pub fn word(&self) -> Vec<(usize, bool)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, t)| t.letters().iter().map(move |&p| (r + 1, p)))
            .collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.0.iter().map(|t| t.as_str()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The slot token of a single entry `a` for node `i`.
pub fn token(a: i32, i: u32) -> Token {
    let i = i as i32;
    if i == 0 {
        return match a {
            -1 => Token::PlusPlus,
            0 => Token::MinusPlus,
            1 => Token::MinusMinus,
            _ => Token::Zero,
        };
    }
    if a == i || a == -i - 1 {
        Token::Plus
    } else if a == i + 1 || a == -i {
        Token::Minus
    } else {
        Token::Zero
    }
}

pub fn i_signature(lambda: &Weight, i: u32) -> Signature {
    Signature(lambda.entries().iter().map(|&a| token(a, i)).collect())
}

/// Operators and string lengths at one node. Absent operators are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalData<W> {
    pub e: Option<W>,
    pub f: Option<W>,
    pub epsilon: usize,
    pub phi: usize,
}

/// Positions of the letters left after cancelling every `+−` pair (a `+`
/// to the left of a `−`, zeros in between ignored): `(minuses, pluses)`.
fn reduce_plus_minus(word: &[(usize, bool)]) -> (Vec<usize>, Vec<usize>) {
    let mut minuses = Vec::new();
    let mut pluses: Vec<usize> = Vec::new();
    for &(r, plus) in word {
        if plus {
            pluses.push(r);
        } else if pluses.pop().is_none() {
            minuses.push(r);
        }
    }
    (minuses, pluses)
}

/// Positions left after cancelling every `−+` pair: `(pluses, minuses)`.
fn reduce_minus_plus(word: &[(usize, bool)]) -> (Vec<usize>, Vec<usize>) {
    let mut pluses = Vec::new();
    let mut minuses: Vec<usize> = Vec::new();
    for &(r, plus) in word {
        if !plus {
            minuses.push(r);
        } else if minuses.pop().is_none() {
            pluses.push(r);
        }
    }
    (pluses, minuses)
}

/// The operators `Ẽ′_i`, `F̃′_i` on `ℤⁿ` and the counts `ε′_i`, `φ′_i`.
pub fn crystal_primed(lambda: &Weight, i: u32) -> CrystalData<Weight> {
    let word = i_signature(lambda, i).word();
    let (minuses, pluses) = reduce_plus_minus(&word);
    CrystalData {
        e: minuses.last().map(|&r| lambda.minus_delta(r)),
        f: pluses.first().map(|&r| lambda.plus_delta(r)),
        epsilon: minuses.len(),
        phi: pluses.len(),
    }
}

/// The dual operators `Ẽ*_i`, `F̃*_i` computed from the signature: swap every
/// `−+` slot to `+−`, cancel `−+` pairs, then act at the leftmost `−` and
/// the rightmost `+`.
pub fn crystal_dual(lambda: &Weight, i: u32) -> CrystalData<Weight> {
    let sig = i_signature(lambda, i);
    let word: Vec<(usize, bool)> = sig
        .0
        .iter()
        .enumerate()
        .flat_map(|(r, &t)| {
            let letters: &[bool] = if t == Token::MinusPlus { &[true, false] } else { t.letters() };
            letters.iter().map(move |&p| (r + 1, p))
        })
        .collect();
    let (pluses, minuses) = reduce_minus_plus(&word);
    CrystalData {
        e: minuses.first().map(|&r| lambda.minus_delta(r)),
        f: pluses.last().map(|&r| lambda.plus_delta(r)),
        epsilon: minuses.len(),
        phi: pluses.len(),
    }
}

/// The dual operators through `Ẽ*_i(λ) = -F̃′_i(-λ)` and `F̃*_i(λ) = -Ẽ′_i(-λ)`.
pub fn crystal_dual_by_negation(lambda: &Weight, i: u32) -> CrystalData<Weight> {
    let p = crystal_primed(&-lambda, i);
    CrystalData {
        e: p.f.map(|w| -&w),
        f: p.e.map(|w| -&w),
        epsilon: p.phi,
        phi: p.epsilon,
    }
}

/// The crystal on dominant weights: `Ẽ_i(λ) = w₀ Ẽ′_i(w₀λ)` and so on.
pub fn crystal_dominant(lambda: &DominantWeight, i: u32) -> CrystalData<DominantWeight> {
    let p = crystal_primed(&lambda.w0(), i);
    let back = |w: Weight| DominantWeight::new_unchecked(w.w0());
    CrystalData {
        e: p.e.map(back),
        f: p.f.map(back),
        epsilon: p.epsilon,
        phi: p.phi,
    }
}

/// The full `i`-string through `λ`, from its top (`Ẽ_i` exhausted) down.
pub fn i_string(lambda: &DominantWeight, i: u32) -> Vec<DominantWeight> {
    let mut up = Vec::new();
    let mut cur = lambda.clone();
    while let Some(next) = crystal_dominant(&cur, i).e {
        up.push(next.clone());
        cur = next;
    }
    up.reverse();
    up.push(lambda.clone());
    let mut cur = lambda.clone();
    while let Some(next) = crystal_dominant(&cur, i).f {
        up.push(next.clone());
        cur = next;
    }
    up
}
