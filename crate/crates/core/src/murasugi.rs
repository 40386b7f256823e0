//! Murasugi normal forms of 3-braids, their FDTC in closed form, and
//! Baldwin's quasi-alternating criterion.

use serde::{Deserialize, Serialize};

use crate::braid::{full_twist, BraidWord, Letter};
use crate::dehornoy::Limits;
use crate::error::{Error, Result};
use crate::fdtc::fdtc_exact_with;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class")]
pub enum Murasugi3Form {
    /// `Δ^{2d} σ_1 σ_2^{-a_1} ⋯ σ_1 σ_2^{-a_k}`, all `a_i ≥ 0`, some `a_i > 0`.
    Class1 { d: i64, a: Vec<i64> },
    /// `Δ^{2d} σ_2^m`.
    Class2 { d: i64, m: i64 },
    /// `Δ^{2d} σ_1^m σ_2^{-1}`, `m ∈ {-1, -2, -3}`.
    Class3 { d: i64, m: i64 },
}

impl Murasugi3Form {
    pub fn d(&self) -> i64 {
        match self {
            Murasugi3Form::Class1 { d, .. }
            | Murasugi3Form::Class2 { d, .. }
            | Murasugi3Form::Class3 { d, .. } => *d,
        }
    }

    pub fn class(&self) -> u8 {
        match self {
            Murasugi3Form::Class1 { .. } => 1,
            Murasugi3Form::Class2 { .. } => 2,
            Murasugi3Form::Class3 { .. } => 3,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Murasugi3Form::Class1 { a, .. } => {
                if a.is_empty() || a.iter().any(|&x| x < 0) || a.iter().all(|&x| x == 0) {
                    return Err(Error::InvalidParameter(format!(
                        "class 1 needs a nonempty list of a_i >= 0 with some a_i > 0, got {a:?}"
                    )));
                }
            }
            Murasugi3Form::Class2 { .. } => {}
            Murasugi3Form::Class3 { m, .. } => {
                if !(-3..=-1).contains(m) {
                    return Err(Error::InvalidParameter(format!(
                        "class 3 needs m in {{-1, -2, -3}}, got {m}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn repeat(letter: Letter, count: i64) -> impl Iterator<Item = Letter> {
    let g = if count < 0 { -letter } else { letter };
    std::iter::repeat_n(g, count.unsigned_abs() as usize)
}

/// `Δ^{2d}` followed by the class-specific tail, freely reduced.
pub fn to_word(f: &Murasugi3Form) -> Result<BraidWord> {
    f.validate()?;
    let mut tail: Vec<Letter> = Vec::new();
    match f {
        Murasugi3Form::Class1 { a, .. } => {
            for &ai in a {
                tail.push(1);
                tail.extend(repeat(-2, ai));
            }
        }
        Murasugi3Form::Class2 { m, .. } => tail.extend(repeat(2, *m)),
        Murasugi3Form::Class3 { m, .. } => {
            tail.extend(repeat(1, *m));
            tail.push(-2);
        }
    }
    let twist = full_twist(3)?.power(f.d());
    Ok(twist.concat(&BraidWord::new(3, tail)?)?.free_reduce())
}

pub fn fdtc_3braid(f: &Murasugi3Form) -> Result<Rational> {
    f.validate()?;
    let d = Rational::integer(f.d());
    Ok(match f {
        Murasugi3Form::Class1 { .. } | Murasugi3Form::Class2 { .. } => d,
        Murasugi3Form::Class3 { m, .. } => {
            let shift = match m {
                -1 => Rational::new(1, 3)?,
                -2 => Rational::new(1, 2)?,
                _ => Rational::new(2, 3)?,
            };
            d - shift
        }
    })
}

pub fn is_quasi_alternating(f: &Murasugi3Form) -> Result<bool> {
    f.validate()?;
    Ok(match *f {
        Murasugi3Form::Class1 { d, .. } => (-1..=1).contains(&d),
        Murasugi3Form::Class2 { d, m } => {
            (d == 1 && (-3..=-1).contains(&m)) || (d == -1 && (1..=3).contains(&m))
        }
        Murasugi3Form::Class3 { d, .. } => d == 0 || d == 1,
    })
}

/// The general engine agrees with the closed form.
pub fn cross_check(f: &Murasugi3Form) -> Result<bool> {
    cross_check_with(f, &Limits::from_env())
}

pub fn cross_check_with(f: &Murasugi3Form, limits: &Limits) -> Result<bool> {
    let engine = fdtc_exact_with(&to_word(f)?, limits)?.value;
    Ok(engine == fdtc_3braid(f)?)
}
