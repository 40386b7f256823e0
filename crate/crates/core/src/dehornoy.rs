//! The Dehornoy order on `B_n`, decided by handle reduction.
//!
//! A `σ_i`-handle is a subword `σ_i^e · v · σ_i^{-e}` whose interior `v`
//! only uses generators `σ_j` with `j > i`. Reducing it deletes the two
//! outer letters and rewrites every `σ_{i+1}^d` in `v` as
//! `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`. A word without handles is empty,
//! `σ`-positive or `σ`-negative, which decides its sign.
//!
//! The engine keeps a handle-free prefix and a stack of pending letters.
//! Each incoming letter either closes a handle with the prefix (the handle
//! whose right end is leftmost, so its interior holds no handle and the
//! reduction is permitted) or is appended. A reduction rolls the prefix
//! back to the handle start and pushes the rewritten interior onto the
//! pending stack, so every step costs time proportional to the handle.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};

pub const DEFAULT_STEP_CAP: u64 = 10_000_000;
pub const DEFAULT_BRACKET_CAP: i64 = 1 << 40;
pub const STEP_CAP_ENV: &str = "BRAIDTWIST_STEP_CAP";

/// Safety caps distinguishing engine bugs from long computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Handle reductions allowed per `handle_reduce` call.
    pub step_cap: u64,
    /// Largest `|t|` tried while bracketing a Dehornoy floor.
    pub bracket_cap: i64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            step_cap: DEFAULT_STEP_CAP,
            bracket_cap: DEFAULT_BRACKET_CAP,
        }
    }
}

impl Limits {
    /// Defaults, with the step cap taken from `BRAIDTWIST_STEP_CAP` if set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(STEP_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.step_cap = cap;
        }
        limits
    }

    pub fn with_step_cap(mut self, step_cap: u64) -> Self {
        self.step_cap = step_cap;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderSign {
    Less,
    Equal,
    Greater,
}

impl OrderSign {
    pub fn token(self) -> &'static str {
        match self {
            OrderSign::Less => "LT",
            OrderSign::Equal => "EQ",
            OrderSign::Greater => "GT",
        }
    }

    pub fn reverse(self) -> OrderSign {
        match self {
            OrderSign::Less => OrderSign::Greater,
            OrderSign::Equal => OrderSign::Equal,
            OrderSign::Greater => OrderSign::Less,
        }
    }
}

impl From<OrderSign> for std::cmp::Ordering {
    fn from(s: OrderSign) -> Self {
        match s {
            OrderSign::Less => std::cmp::Ordering::Less,
            OrderSign::Equal => std::cmp::Ordering::Equal,
            OrderSign::Greater => std::cmp::Ordering::Greater,
        }
    }
}

impl fmt::Display for OrderSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Minimal generator index of `w` and its sign if that generator occurs
/// with one sign only; `None` for mixed or empty words.
pub fn syntactic_sigma_class(w: &BraidWord) -> Option<(usize, i32)> {
    sigma_class_of(w.letters())
}

fn sigma_class_of(letters: &[Letter]) -> Option<(usize, i32)> {
    let index = letters.iter().map(|g| g.unsigned_abs()).min()? as usize;
    let mut signs = letters
        .iter()
        .filter(|g| g.unsigned_abs() as usize == index)
        .map(|g| g.signum());
    let first = signs.next()?;
    signs.all(|s| s == first).then_some((index, first))
}

const NONE: usize = usize::MAX;

/// Reduces every handle. The output represents the same braid and is
/// empty, `σ`-positive or `σ`-negative.
pub fn handle_reduce(w: &BraidWord) -> Result<BraidWord> {
    handle_reduce_with(w, &Limits::from_env())
}

pub fn handle_reduce_with(w: &BraidWord, limits: &Limits) -> Result<BraidWord> {
    let n = w.strands();
    let letters = reduce_letters(n, w.letters(), limits.step_cap)?;
    let out = BraidWord::from_raw(n, letters);
    debug_assert_eq!(out.exponent_sum(), w.exponent_sum());
    debug_assert_eq!(out.permutation(), w.permutation());
    debug_assert!(out.is_empty() || syntactic_sigma_class(&out).is_some());
    Ok(out)
}

fn reduce_letters(n: usize, input: &[Letter], step_cap: u64) -> Result<Vec<Letter>> {
    // prefix is handle-free; undo[k] is the previous `last` entry for the
    // generator of prefix[k], restored when the prefix is rolled back
    let mut prefix: Vec<Letter> = Vec::with_capacity(input.len());
    let mut undo: Vec<usize> = Vec::with_capacity(input.len());
    let mut last = vec![NONE; n];
    let mut pending: Vec<Letter> = input.iter().rev().copied().collect();
    let mut interior: Vec<Letter> = Vec::new();
    let mut steps: u64 = 0;

    while let Some(x) = pending.pop() {
        let i = x.unsigned_abs() as usize;
        let start = last[i];
        let closes = start != NONE
            && prefix[start] == -x
            && last[1..i].iter().all(|&p| p == NONE || p < start);
        if !closes {
            undo.push(last[i]);
            last[i] = prefix.len();
            prefix.push(x);
            continue;
        }

        steps += 1;
        if steps > step_cap {
            return Err(Error::StepCapExceeded(step_cap));
        }
        // roll back to the handle start, keeping the interior
        interior.clear();
        while prefix.len() > start {
            let g = prefix.pop().expect("prefix longer than start");
            last[g.unsigned_abs() as usize] = undo.pop().expect("undo tracks prefix");
            interior.push(g);
        }
        // `interior` is reversed and its last element is the opening letter
        let opening = interior.pop().expect("handle has an opening letter");
        let e = opening.signum();
        let (lo, hi) = (i as Letter, i as Letter + 1);
        // pushed in reverse so the rewritten interior is read left to right
        for &g in &interior {
            if g.abs() == hi {
                let d = g.signum();
                pending.push(hi * e);
                pending.push(lo * d);
                pending.push(-hi * e);
            } else {
                pending.push(g);
            }
        }
    }
    Ok(prefix)
}

/// Sign of `w` relative to the identity.
pub fn order_sign(w: &BraidWord) -> Result<OrderSign> {
    order_sign_with(w, &Limits::from_env())
}

pub fn order_sign_with(w: &BraidWord, limits: &Limits) -> Result<OrderSign> {
    let reduced = handle_reduce_with(w, limits)?;
    Ok(match sigma_class_of(reduced.letters()) {
        None => OrderSign::Equal,
        Some((_, s)) if s > 0 => OrderSign::Greater,
        Some(_) => OrderSign::Less,
    })
}

/// Compares `a` against `b` via the sign of `b⁻¹a`.
pub fn compare(a: &BraidWord, b: &BraidWord) -> Result<OrderSign> {
    compare_with(a, b, &Limits::from_env())
}

pub fn compare_with(a: &BraidWord, b: &BraidWord, limits: &Limits) -> Result<OrderSign> {
    order_sign_with(&b.inverse().concat(a)?, limits)
}
