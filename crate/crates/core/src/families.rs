//! Explicit braid families used throughout the test corpus.

use serde::{Deserialize, Serialize};

use crate::braid::{full_twist, BraidWord, Letter};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    /// `(σ_2σ_1)^{3m+1} σ_2^{-2k}` in `B_3`; the closure `K_{m,k}` is a knot.
    Ktd { m: i64, k: i64 },
    /// `Δ^{2k} σ_1^{-1} σ_2^{-(6k-1)}` in `B_3`.
    Bttau { k: i64 },
    /// `β Δ^{2t}`.
    FullTwists { n: usize, base: Vec<Letter>, t: i64 },
    /// `(σ_1 ⋯ σ_{p-1})^q` in `B_p`.
    Torus { p: usize, q: i64 },
}

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

pub fn generate(spec: &FamilySpec) -> Result<BraidWord> {
    match spec {
        &FamilySpec::Ktd { m, k } => {
            if m < 0 || k < 1 {
                return Err(invalid(format!("ktd needs m >= 0, k >= 1, got ({m}, {k})")));
            }
            let word = BraidWord::new(3, vec![2, 1])?
                .power(3 * m + 1)
                .concat(&BraidWord::new(3, vec![-2])?.power(2 * k))?;
            debug_assert!(word.is_knot());
            Ok(word)
        }
        &FamilySpec::Bttau { k } => {
            if k < 1 {
                return Err(invalid(format!("bttau needs k >= 1, got {k}")));
            }
            full_twist(3)?
                .power(k)
                .concat(&BraidWord::new(3, vec![-1])?)?
                .concat(&BraidWord::new(3, vec![-2])?.power(6 * k - 1))
        }
        FamilySpec::FullTwists { n, base, t } => {
            let base = BraidWord::new(*n, base.clone())?;
            base.concat(&full_twist(*n)?.power(*t))
        }
        &FamilySpec::Torus { p, q } => {
            if p < 2 || q < 1 {
                return Err(invalid(format!(
                    "torus needs p >= 2, q >= 1, got ({p}, {q})"
                )));
            }
            Ok(BraidWord::new(p, (1..p as Letter).collect())?.power(q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::garside_delta;

    #[test]
    fn ktd_example() {
        let w = generate(&FamilySpec::Ktd { m: 1, k: 1 }).unwrap();
        assert_eq!(w.len(), 10);
        assert_eq!(w.strands(), 3);
        assert_eq!(w.letters(), &[2, 1, 2, 1, 2, 1, 2, 1, -2, -2]);
        assert!(w.is_knot());
        assert!(generate(&FamilySpec::Ktd { m: 0, k: 0 }).is_err());
    }

    #[test]
    fn bttau_example() {
        let w = generate(&FamilySpec::Bttau { k: 1 }).unwrap();
        let delta = garside_delta(3).unwrap();
        let mut expected = delta.concat(&delta).unwrap().into_letters();
        expected.extend([-1, -2, -2, -2, -2, -2]);
        assert_eq!(w.letters(), expected.as_slice());
        assert!(w.is_knot());
    }

    #[test]
    fn torus_example() {
        let w = generate(&FamilySpec::Torus { p: 3, q: 4 }).unwrap();
        assert_eq!(w.letters(), &[1, 2, 1, 2, 1, 2, 1, 2]);
        assert!(generate(&FamilySpec::Torus { p: 1, q: 4 }).is_err());
    }

    #[test]
    fn full_twists_append() {
        let w = generate(&FamilySpec::FullTwists {
            n: 3,
            base: vec![-1],
            t: 1,
        })
        .unwrap();
        assert_eq!(w.len(), 7);
        assert_eq!(w.letters()[0], -1);
        assert!(generate(&FamilySpec::FullTwists {
            n: 3,
            base: vec![3],
            t: 1
        })
        .is_err());
    }
}
