//! Dehornoy floors and exact fractional Dehn twist coefficients.
//!
//! Floor convention: `[β]_D = max{t : Δ^{2t} ⪯ β}`, so `[Δ^{2m}]_D = m` and
//! `[β]_D ≤ FDTC(β) ≤ [β]_D + 1` holds for every braid.
//!
//! The FDTC of an `n`-braid is a fraction with denominator at most `n`.
//! Two such fractions differ by at least `1/n²`, so the interval
//! `[[β^N]_D / N, ([β^N]_D + 1) / N]` with `N = n² + 1` contains exactly one
//! of them, and that one is the FDTC.

use serde::{Deserialize, Serialize};

use crate::braid::{full_twist, BraidWord};
use crate::dehornoy::{order_sign_with, Limits, OrderSign};
use crate::error::{Error, Result};
use crate::rational::Rational;

pub const FLOOR_CONVENTION: &str = "max-t-with-Δ^{2t}⪯β";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FloorResult {
    pub floor: i64,
    pub convention: String,
}

/// Exact FDTC together with the interval that pins it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FdtcResult {
    pub value: Rational,
    #[serde(rename = "N")]
    pub power_used: i64,
    #[serde(rename = "floor")]
    pub floor_of_power: i64,
    pub lo: Rational,
    pub hi: Rational,
}

/// `Δ^{2t} ⪯ β`, i.e. `Δ^{-2t}β` is not negative.
fn at_or_above_twist(w: &BraidWord, t: i64, limits: &Limits) -> Result<bool> {
    let shifted = full_twist(w.strands())?.power(-t).concat(w)?.free_reduce();
    Ok(order_sign_with(&shifted, limits)? != OrderSign::Less)
}

pub fn dehornoy_floor(w: &BraidWord) -> Result<FloorResult> {
    dehornoy_floor_with(w, &Limits::from_env())
}

pub fn dehornoy_floor_with(w: &BraidWord, limits: &Limits) -> Result<FloorResult> {
    let w = w.free_reduce();
    let holds = |t: i64| at_or_above_twist(&w, t, limits);

    // bracket: holds(lo) and !holds(hi)
    let (mut lo, mut hi);
    if holds(0)? {
        lo = 0;
        hi = 1;
        while holds(hi)? {
            lo = hi;
            hi = hi
                .checked_mul(2)
                .filter(|h| *h <= limits.bracket_cap)
                .ok_or(Error::BracketCapExceeded(limits.bracket_cap))?;
        }
    } else {
        hi = 0;
        lo = -1;
        while !holds(lo)? {
            hi = lo;
            lo = lo
                .checked_mul(2)
                .filter(|l| -*l <= limits.bracket_cap)
                .ok_or(Error::BracketCapExceeded(limits.bracket_cap))?;
        }
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if holds(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(FloorResult {
        floor: lo,
        convention: FLOOR_CONVENTION.to_string(),
    })
}

/// `([β^N]_D / N, ([β^N]_D + 1) / N)`, which contains the FDTC of `β`.
pub fn fdtc_interval(w: &BraidWord, power: i64) -> Result<(Rational, Rational)> {
    fdtc_interval_with(w, power, &Limits::from_env()).map(|(lo, hi, _)| (lo, hi))
}

fn fdtc_interval_with(
    w: &BraidWord,
    power: i64,
    limits: &Limits,
) -> Result<(Rational, Rational, i64)> {
    if power < 1 {
        return Err(Error::InvalidParameter(format!(
            "power must be >= 1, got {power}"
        )));
    }
    let floor = dehornoy_floor_with(&w.free_reduce().power(power), limits)?.floor;
    Ok((
        Rational::new(floor, power)?,
        Rational::new(floor + 1, power)?,
        floor,
    ))
}

/// Fractions `p/q` with `1 <= q <= max_denom` inside the closed interval.
pub fn admissible_rationals(lo: Rational, hi: Rational, max_denom: usize) -> Vec<Rational> {
    let mut found: Vec<Rational> = Vec::new();
    for q in 1..=max_denom as i64 {
        let q_r = Rational::integer(q);
        for p in (lo * q_r).ceil()..=(hi * q_r).floor() {
            let r = Rational::new(p, q).expect("q >= 1");
            if !found.contains(&r) {
                found.push(r);
            }
        }
    }
    found.sort();
    found
}

pub fn fdtc_exact(w: &BraidWord) -> Result<FdtcResult> {
    fdtc_exact_with(w, &Limits::from_env())
}

pub fn fdtc_exact_with(w: &BraidWord, limits: &Limits) -> Result<FdtcResult> {
    let n = w.strands();
    let power = (n * n + 1) as i64;
    let (lo, hi, floor) = fdtc_interval_with(w, power, limits)?;
    let candidates = admissible_rationals(lo, hi, n);
    match candidates.as_slice() {
        [value] => Ok(FdtcResult {
            value: *value,
            power_used: power,
            floor_of_power: floor,
            lo,
            hi,
        }),
        _ => Err(Error::NoAdmissibleRational {
            strands: n,
            lo: lo.to_string(),
            hi: hi.to_string(),
        }),
    }
}

/// Sign certificates read off the word: `lower_zero` means FDTC ≥ 0 is
/// certified (some generator occurs only positively), `upper_zero` means
/// FDTC ≤ 0 is certified (some generator occurs only negatively).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignBounds {
    pub lower_zero: bool,
    pub upper_zero: bool,
}

pub fn word_sign_bounds(w: &BraidWord) -> SignBounds {
    let n = w.strands();
    let mut pos = vec![false; n];
    let mut neg = vec![false; n];
    for &g in w.letters() {
        let i = g.unsigned_abs() as usize;
        if g > 0 {
            pos[i] = true;
        } else {
            neg[i] = true;
        }
    }
    SignBounds {
        lower_zero: (1..n).any(|i| pos[i] && !neg[i]),
        upper_zero: (1..n).any(|i| neg[i] && !pos[i]),
    }
}

/// `[0, 1]` or `[-1, 0]` when the syntactic destabilization screen fires.
pub fn destab_bounds(w: &BraidWord) -> Option<(Rational, Rational)> {
    use crate::braid::{detect_destabilizable, Sign};
    detect_destabilizable(w).map(|sign| match sign {
        Sign::Positive => (Rational::ZERO, Rational::ONE),
        Sign::Negative => (-Rational::ONE, Rational::ZERO),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::Letter;

    fn word(n: usize, letters: &[Letter]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    fn ktd(m: i64, k: i64) -> BraidWord {
        word(3, &[2, 1])
            .power(3 * m + 1)
            .concat(&word(3, &[-2]).power(2 * k))
            .unwrap()
    }

    #[test]
    fn floor_of_small_family_members() {
        for m in 0..=2 {
            for k in 1..=3 {
                assert_eq!(dehornoy_floor(&ktd(m, k)).unwrap().floor, m, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn floor_examples() {
        assert_eq!(dehornoy_floor(&word(3, &[1])).unwrap().floor, 0);
        assert_eq!(dehornoy_floor(&word(3, &[])).unwrap().floor, 0);
        assert_eq!(dehornoy_floor(&word(3, &[-1])).unwrap().floor, -1);
        let twist = full_twist(3).unwrap();
        assert_eq!(dehornoy_floor(&twist.power(2)).unwrap().floor, 2);
        assert_eq!(dehornoy_floor(&twist.power(-3)).unwrap().floor, -3);
        let beta = word(3, &[1, -2, -2, 1]);
        let f = dehornoy_floor(&beta).unwrap().floor;
        assert_eq!(
            dehornoy_floor(&twist.power(4).concat(&beta).unwrap())
                .unwrap()
                .floor,
            f + 4
        );
        assert_eq!(dehornoy_floor(&beta).unwrap().convention, FLOOR_CONVENTION);
    }

    #[test]
    fn interval_examples() {
        assert_eq!(fdtc_interval(&word(3, &[]), 7).unwrap(), (r(0, 1), r(1, 7)));
        // [Δ⁴]_D = 2, so the interval is (2/2, 3/2) and contains FDTC(Δ²) = 1
        assert_eq!(
            fdtc_interval(&full_twist(3).unwrap(), 2).unwrap(),
            (r(1, 1), r(3, 2))
        );
        // (σ1σ2)³ = Δ², floor 1, so (1/3, 2/3) around FDTC(σ1σ2) = 1/3
        assert_eq!(
            fdtc_interval(&word(3, &[1, 2]), 3).unwrap(),
            (r(1, 3), r(2, 3))
        );
        assert!(fdtc_interval(&word(3, &[1]), 0).is_err());
    }

    #[test]
    fn exact_torus_and_negative_examples() {
        for (p, q) in [(3usize, 2i64), (3, 4), (4, 3)] {
            let gens: Vec<Letter> = (1..p as Letter).collect();
            let w = word(p, &gens).power(q);
            assert_eq!(fdtc_exact(&w).unwrap().value, r(q, p as i64));
        }
        assert_eq!(fdtc_exact(&word(3, &[-1, -2])).unwrap().value, r(-1, 3));
        assert_eq!(fdtc_exact(&word(3, &[-1, -1, -2])).unwrap().value, r(-1, 2));
        assert_eq!(
            fdtc_exact(&word(3, &[-1, -1, -1, -2])).unwrap().value,
            r(-2, 3)
        );
        assert_eq!(fdtc_exact(&word(3, &[])).unwrap().value, Rational::ZERO);
    }

    #[test]
    fn certificate_fields() {
        let res = fdtc_exact(&word(3, &[-1, -2])).unwrap();
        assert_eq!(res.power_used, 10);
        assert_eq!(res.floor_of_power, -4);
        assert_eq!((res.lo, res.hi), (r(-2, 5), r(-3, 10)));
        assert!(res.lo <= res.value && res.value <= res.hi);
    }

    #[test]
    fn admissible_rationals_enumeration() {
        assert_eq!(
            admissible_rationals(r(1, 3), r(1, 2), 3),
            vec![r(1, 3), r(1, 2)]
        );
        assert_eq!(admissible_rationals(r(1, 10), r(2, 10), 3), vec![]);
        assert_eq!(admissible_rationals(r(-2, 5), r(-3, 10), 3), vec![r(-1, 3)]);
    }

    #[test]
    fn sign_bound_examples() {
        let b = word_sign_bounds(&word(3, &[1, -2, 1]));
        assert!(b.lower_zero && b.upper_zero);
        let b = word_sign_bounds(&full_twist(3).unwrap());
        assert!(b.lower_zero && !b.upper_zero);
        // the rewritten tail σ1σ2σ1²σ2^{-6k+2} with k = 2
        let mut tail = vec![1, 2, 1, 1];
        tail.extend(std::iter::repeat_n(-2, 10));
        let b = word_sign_bounds(&word(3, &tail));
        assert!(b.lower_zero);
    }

    #[test]
    fn destab_bound_examples() {
        assert_eq!(
            destab_bounds(&word(3, &[1, 1, 2])),
            Some((r(0, 1), r(1, 1)))
        );
        assert_eq!(destab_bounds(&word(3, &[1, -2])), Some((r(-1, 1), r(0, 1))));
        assert_eq!(destab_bounds(&full_twist(3).unwrap()), None);
    }
}
