//! Braid words in Artin generators and the elementary operations on them.
//!
//! A letter `g > 0` stands for `σ_g` and `g < 0` for `σ_{|g|}^{-1}`; indices
//! are 1-based. Group relations are never applied here except where a
//! function says so (free cancellation, Garside rewriting); deciding braid
//! equality is the job of [`crate::dehornoy`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dehornoy::{self, OrderSign};
use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Letter = i32;

/// Sign of a crossing or syllable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn of(letter: Letter) -> Sign {
        if letter > 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// A word in the Artin generators of `B_n`. Serializes as
/// `{"n": strands, "word": [letters]}`; deserialization validates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWord", into = "RawWord")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

#[derive(Serialize, Deserialize)]
struct RawWord {
    n: usize,
    word: Vec<Letter>,
}

impl TryFrom<RawWord> for BraidWord {
    type Error = Error;

    fn try_from(raw: RawWord) -> Result<Self> {
        BraidWord::new(raw.n, raw.word)
    }
}

impl From<BraidWord> for RawWord {
    fn from(w: BraidWord) -> Self {
        RawWord {
            n: w.strands,
            word: w.letters,
        }
    }
}

fn check_strands(strands: usize) -> Result<()> {
    if strands < 2 {
        Err(Error::TooFewStrands(strands))
    } else {
        Ok(())
    }
}

fn check_letter(letter: i64, strands: usize) -> Result<Letter> {
    if letter == 0 {
        return Err(Error::ZeroLetter);
    }
    if letter.unsigned_abs() as usize >= strands {
        return Err(Error::LetterOutOfRange {
            index: letter,
            strands,
        });
    }
    Ok(letter as Letter)
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        check_strands(strands)?;
        for &g in &letters {
            check_letter(g as i64, strands)?;
        }
        Ok(BraidWord { strands, letters })
    }

    /// Construct without validation. Callers guarantee the invariants.
    pub(crate) fn from_raw(strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(strands >= 2);
        debug_assert!(letters
            .iter()
            .all(|&g| g != 0 && (g.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Parses whitespace- or comma-separated letters. Tokens are signed
    /// integers (`-2`, `−2`) or generator aliases (`s2`, `s2^-1`, `σ2^{-1}`,
    /// `s1^3`).
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        check_strands(strands)?;
        let mut letters = Vec::new();
        for token in text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            let (index, exponent) = parse_token(token)?;
            let g = check_letter(index, strands)?;
            let g = if exponent < 0 { -g } else { g };
            letters.extend(std::iter::repeat_n(g, exponent.unsigned_abs() as usize));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&g| g > 0)
    }

    fn check_same_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            })
        } else {
            Ok(())
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same_strands(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord::from_raw(self.strands, letters))
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord::from_raw(
            self.strands,
            self.letters.iter().rev().map(|g| -g).collect(),
        )
    }

    /// `self^k` for any integer `k`, as a literal repetition.
    pub fn power(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord::from_raw(self.strands, letters)
    }

    /// `by · self · by⁻¹`.
    pub fn conjugate(&self, by: &BraidWord) -> Result<BraidWord> {
        by.concat(self)?.concat(&by.inverse())
    }

    /// Image under the automorphism `σ_i ↦ σ_i^{-1}`, which reverses the
    /// Dehornoy order.
    pub fn flip(&self) -> BraidWord {
        BraidWord::from_raw(self.strands, self.letters.iter().map(|g| -g).collect())
    }

    /// Cancels adjacent `g, -g` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        BraidWord::from_raw(self.strands, free_reduce_letters(&self.letters))
    }

    /// Free reduction followed by cancelling matching first/last letters.
    pub fn cyclic_reduce(&self) -> BraidWord {
        let reduced = free_reduce_letters(&self.letters);
        let (mut lo, mut hi) = (0, reduced.len());
        while hi - lo >= 2 && reduced[lo] == -reduced[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        BraidWord::from_raw(self.strands, reduced[lo..hi].to_vec())
    }

    pub fn exponent_counts(&self) -> ExponentCounts {
        let positive = self.letters.iter().filter(|&&g| g > 0).count();
        let negative = self.len() - positive;
        ExponentCounts {
            positive,
            negative,
            sum: positive as i64 - negative as i64,
        }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.exponent_counts().sum
    }

    /// The permutation induced on strand positions.
    pub fn permutation(&self) -> Permutation {
        let mut perm = Permutation::identity(self.strands);
        for &g in &self.letters {
            perm.apply_transposition(g.unsigned_abs() as usize);
        }
        perm
    }

    /// Number of link components of the closure.
    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }
}

pub(crate) fn free_reduce_letters(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &g in letters {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

fn parse_token(token: &str) -> Result<(i64, i64)> {
    let malformed = || Error::MalformedToken(token.to_string());
    let normalized = token.replace('\u{2212}', "-");
    let t = normalized.as_str();
    let alias = t
        .strip_prefix('s')
        .or_else(|| t.strip_prefix('S'))
        .or_else(|| t.strip_prefix('σ'));
    match alias {
        None => {
            let v: i64 = t.parse().map_err(|_| malformed())?;
            Ok((v.abs(), v.signum()))
        }
        Some(rest) => {
            let (index, exponent) = match rest.split_once('^') {
                None => (rest, "1"),
                Some((i, e)) => (i, e.trim_start_matches('{').trim_end_matches('}')),
            };
            let index: i64 = index.parse().map_err(|_| malformed())?;
            let exponent: i64 = exponent.parse().map_err(|_| malformed())?;
            if index <= 0 || exponent == 0 {
                return Err(if index == 0 {
                    Error::ZeroLetter
                } else {
                    malformed()
                });
            }
            Ok((index, exponent))
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}

/// `k` positive letters, `l` negative letters and the exponent sum `k - l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentCounts {
    pub positive: usize,
    pub negative: usize,
    pub sum: i64,
}

/// A permutation of `{1..n}`, stored 0-based: `images[p]` is where the strand
/// starting at position `p` ends up.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::InvalidParameter(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[img - 1] = true;
            out.push(img - 1);
        }
        Ok(Permutation { images: out })
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    fn apply_transposition(&mut self, generator: usize) {
        let (a, b) = (generator - 1, generator);
        for img in &mut self.images {
            if *img == a {
                *img = b;
            } else if *img == b {
                *img = a;
            }
        }
    }

    /// `self` followed by `other`: the permutation of a concatenated word.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut cycles = 0;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
            }
        }
        cycles
    }
}

/// The Garside element `Δ = (σ_1…σ_{n-1})(σ_1…σ_{n-2})…(σ_1)`.
pub fn garside_delta(n: usize) -> Result<BraidWord> {
    check_strands(n)?;
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for top in (1..n).rev() {
        letters.extend(1..=top as Letter);
    }
    Ok(BraidWord::from_raw(n, letters))
}

/// The full twist `Δ² = Δ·Δ`.
pub fn full_twist(n: usize) -> Result<BraidWord> {
    let delta = garside_delta(n)?;
    delta.concat(&delta)
}

/// A positive word `r` of length `n(n-1)/2 - 1` with `r·σ_i = Δ`.
///
/// Any reduced expression of the half-turn permutation is a word for `Δ`,
/// and that permutation has a reduced expression ending in every generator.
fn delta_without_last(n: usize, generator: usize) -> Vec<Letter> {
    // arrangement before the final σ_i: reversal with slots i-1, i swapped
    let mut arrangement: Vec<usize> = (0..n).rev().collect();
    arrangement.swap(generator - 1, generator);
    let mut swaps = Vec::new();
    while let Some(j) = (0..n - 1).find(|&j| arrangement[j] > arrangement[j + 1]) {
        arrangement.swap(j, j + 1);
        swaps.push(j as Letter + 1);
    }
    swaps.reverse();
    debug_assert_eq!(swaps.len(), n * (n - 1) / 2 - 1);
    swaps
}

/// `(ℓ(w) - n + 1) / 2`: the Seifert genus, slice genus and τ of the knot
/// closing a positive braid word.
pub fn positive_braid_genus(w: &BraidWord) -> Result<Rational> {
    if let Some(&g) = w.letters().iter().find(|&&g| g < 0) {
        return Err(Error::NotPositive(g));
    }
    let components = w.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    Rational::new(w.len() as i64 - w.strands() as i64 + 1, 2)
}

/// Rewrites `w·Δ^{2t}` as a positive word by absorbing every negative letter
/// into one full twist (`Δ²σ_i^{-1}` is positive). The result is certified
/// equal to `w·Δ^{2t}` with the Dehornoy comparison.
pub fn make_positive(w: &BraidWord, t: i64) -> Result<BraidWord> {
    let n = w.strands();
    let needed = w.exponent_counts().negative;
    if t < needed as i64 {
        return Err(Error::TooFewTwists { needed, given: t });
    }
    let delta = garside_delta(n)?;
    let mut letters = Vec::with_capacity(w.len() + t as usize * n * (n - 1));
    for &g in w.letters() {
        if g > 0 {
            letters.push(g);
        } else {
            letters.extend_from_slice(delta.letters());
            letters.extend(delta_without_last(n, g.unsigned_abs() as usize));
        }
    }
    let twist = full_twist(n)?;
    for _ in needed as i64..t {
        letters.extend_from_slice(twist.letters());
    }
    let positive = BraidWord::from_raw(n, letters);

    let target = w.concat(&twist.power(t))?;
    match dehornoy::compare(&positive, &target)? {
        OrderSign::Equal => Ok(positive),
        other => Err(Error::CertificationFailed(format!(
            "positive rewrite compares {other} to w·Δ^{{2t}}"
        ))),
    }
}

/// Syntactic destabilization screen: after free and cyclic reduction, some
/// rotation of the word is `v·σ_{n-1}^{±1}` with `v` free of `σ_{n-1}`.
/// Rotations do not change letter counts, so this amounts to counting.
pub fn detect_destabilizable(w: &BraidWord) -> Option<Sign> {
    let top = w.strands() as Letter - 1;
    let reduced = w.cyclic_reduce();
    let mut found = reduced.letters().iter().filter(|g| g.abs() == top);
    match (found.next(), found.next()) {
        (Some(&g), None) => Some(Sign::of(g)),
        _ => None,
    }
}
