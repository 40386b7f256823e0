//! Products of conjugated generators `(w_j σ_{i_j} w_j⁻¹)^{ε_j}` and the FDTC
//! bounds available for them.

use serde::{Deserialize, Serialize};

use crate::braid::{free_reduce_letters, BraidWord, Letter, Sign};
use crate::dehornoy::Limits;
use crate::error::{Error, Result};
use crate::fdtc::fdtc_exact_with;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Syllable {
    pub conjugator: Vec<Letter>,
    pub generator: usize,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyllableWord {
    strands: usize,
    syllables: Vec<Syllable>,
}

impl SyllableWord {
    pub fn new(strands: usize, syllables: Vec<Syllable>) -> Result<Self> {
        for s in &syllables {
            BraidWord::new(strands, s.conjugator.clone())?;
            BraidWord::new(strands, vec![s.generator as Letter])?;
        }
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        Ok(SyllableWord { strands, syllables })
    }

    /// Parses `;`-separated syllables of the form `w | i | ±`, where `w` is
    /// in the usual word format and may be empty.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let mut syllables = Vec::new();
        for chunk in text.split(';').map(str::trim).filter(|c| !c.is_empty()) {
            let parts: Vec<&str> = chunk.split('|').map(str::trim).collect();
            let [conj, generator, sign] = parts.as_slice() else {
                return Err(Error::MalformedToken(chunk.to_string()));
            };
            let conjugator = BraidWord::parse(conj, strands)?.into_letters();
            let generator: usize = generator
                .parse()
                .map_err(|_| Error::MalformedToken(generator.to_string()))?;
            let sign = match *sign {
                "+" | "+1" | "1" => Sign::Positive,
                "-" | "-1" | "\u{2212}" | "\u{2212}1" => Sign::Negative,
                other => return Err(Error::MalformedToken(other.to_string())),
            };
            syllables.push(Syllable {
                conjugator,
                generator,
                sign,
            });
        }
        SyllableWord::new(strands, syllables)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn positive_count(&self) -> usize {
        self.syllables
            .iter()
            .filter(|s| s.sign == Sign::Positive)
            .count()
    }

    pub fn negative_count(&self) -> usize {
        self.len() - self.positive_count()
    }

    pub fn is_quasipositive(&self) -> bool {
        self.negative_count() == 0
    }

    fn require_quasipositive(&self) -> Result<()> {
        match self.syllables.iter().position(|s| s.sign == Sign::Negative) {
            Some(j) => Err(Error::MixedSigns(j)),
            None => Ok(()),
        }
    }
}

/// The product of the syllables as a freely reduced braid word.
pub fn expand(s: &SyllableWord) -> BraidWord {
    let mut letters = Vec::new();
    for syl in s.syllables() {
        let g = syl.generator as Letter * syl.sign.value();
        letters.extend_from_slice(&syl.conjugator);
        letters.push(g);
        letters.extend(syl.conjugator.iter().rev().map(|c| -c));
    }
    BraidWord::from_raw(s.strands(), free_reduce_letters(&letters))
}

/// Which hypotheses behind the reported bounds were checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QpHypotheses {
    pub all_positive: bool,
    pub closure_is_knot: bool,
    /// Passes the syntactic screen; a necessary condition only.
    pub no_syntactic_destabilization: bool,
    /// `χ₄ = n − m` for mixed words cannot be checked here.
    pub chi4_verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QpReport {
    pub qp_length: usize,
    /// `n − m`, for quasipositive input.
    pub chi4: Option<i64>,
    /// `(m − n + 1)/2`, for quasipositive input closing to a knot.
    pub g4: Option<Rational>,
    /// `m − 1`, for quasipositive input on at least 3 strands.
    pub bt_upper: Option<i64>,
    /// `(min{1 − p₋, 0}, max{p₊ − 1, 0})`, valid only under the recorded
    /// hypotheses.
    pub cor_a_bounds: (Rational, Rational),
    pub cor_a_status: String,
    pub hypotheses: QpHypotheses,
}

pub fn qp_report(s: &SyllableWord) -> QpReport {
    let n = s.strands() as i64;
    let m = s.len() as i64;
    let word = expand(s);
    let qp = s.is_quasipositive();
    let knot = word.is_knot();
    let p_plus = s.positive_count() as i64;
    let p_minus = s.negative_count() as i64;
    QpReport {
        qp_length: s.len(),
        chi4: qp.then_some(n - m),
        g4: (qp && knot).then(|| Rational::new(m - n + 1, 2).expect("nonzero denominator")),
        bt_upper: (qp && n >= 3).then_some(m - 1),
        cor_a_bounds: (
            Rational::integer((1 - p_minus).min(0)),
            Rational::integer((p_plus - 1).max(0)),
        ),
        cor_a_status: "CONDITIONAL".to_string(),
        hypotheses: QpHypotheses {
            all_positive: qp,
            closure_is_knot: knot,
            no_syntactic_destabilization: crate::braid::detect_destabilizable(&word).is_none(),
            chi4_verified: false,
        },
    }
}

/// Slice genus of the closure of a quasipositive braid.
pub fn slice_genus(s: &SyllableWord) -> Result<Rational> {
    s.require_quasipositive()?;
    let word = expand(s);
    let components = word.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    Rational::new(s.len() as i64 - s.strands() as i64 + 1, 2)
}

/// Checks `0 ≤ FDTC ≤ m − 1` for a quasipositive braid of qp-length `m`.
pub fn check_qp_bt_bound(s: &SyllableWord) -> Result<bool> {
    check_qp_bt_bound_with(s, &Limits::from_env())
}

pub fn check_qp_bt_bound_with(s: &SyllableWord, limits: &Limits) -> Result<bool> {
    s.require_quasipositive()?;
    if s.strands() < 3 {
        return Err(Error::InvalidParameter(
            "the qp-length bound needs at least 3 strands".to_string(),
        ));
    }
    let bt = fdtc_exact_with(&expand(s), limits)?.value;
    let m = s.len() as i64;
    Ok(Rational::ZERO <= bt && bt <= Rational::integer(m - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fdtc::fdtc_exact;

    fn syl(conjugator: &[Letter], generator: usize, sign: Sign) -> Syllable {
        Syllable {
            conjugator: conjugator.to_vec(),
            generator,
            sign,
        }
    }

    #[test]
    fn expand_examples() {
        let s = SyllableWord::new(3, vec![syl(&[], 1, Sign::Positive)]).unwrap();
        assert_eq!(expand(&s).letters(), &[1]);
        let s = SyllableWord::new(3, vec![syl(&[1], 2, Sign::Positive)]).unwrap();
        assert_eq!(expand(&s).letters(), &[1, 2, -1]);
        let s = SyllableWord::new(
            3,
            vec![syl(&[], 1, Sign::Positive), syl(&[1], 2, Sign::Positive)],
        )
        .unwrap();
        assert_eq!(expand(&s).letters(), &[1, 1, 2, -1]);
    }

    #[test]
    fn parse_format() {
        let s = SyllableWord::parse("1 2 | 1 | +; | 2 | -", 3).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.syllables()[0].conjugator, vec![1, 2]);
        assert_eq!(s.syllables()[1].sign, Sign::Negative);
        assert!(SyllableWord::parse("| 3 | +", 3).is_err());
        assert!(SyllableWord::parse("| 1 | x", 3).is_err());
        assert!(SyllableWord::parse("1 | 1", 3).is_err());
    }

    #[test]
    fn report_for_two_generators() {
        let s = SyllableWord::parse("|1|+; |2|+", 3).unwrap();
        let r = qp_report(&s);
        assert_eq!(r.qp_length, 2);
        assert_eq!(r.chi4, Some(1));
        assert_eq!(r.g4, Some(Rational::ZERO));
        assert_eq!(r.bt_upper, Some(1));
    }

    #[test]
    fn single_syllable_has_zero_fdtc() {
        let s = SyllableWord::parse("1 2 -1 | 1 | +", 3).unwrap();
        assert_eq!(qp_report(&s).bt_upper, Some(0));
        assert_eq!(fdtc_exact(&expand(&s)).unwrap().value, Rational::ZERO);
        assert!(check_qp_bt_bound(&s).unwrap());
    }

    #[test]
    fn mixed_signs_give_conditional_bounds() {
        let s = SyllableWord::parse("|1|+; 2|1|+; |2|-", 3).unwrap();
        let r = qp_report(&s);
        assert_eq!(r.cor_a_bounds, (Rational::ZERO, Rational::ONE));
        assert_eq!(r.cor_a_status, "CONDITIONAL");
        assert_eq!(r.chi4, None);
        assert_eq!(r.bt_upper, None);
        assert_eq!(check_qp_bt_bound(&s), Err(Error::MixedSigns(2)));
        assert_eq!(slice_genus(&s), Err(Error::MixedSigns(2)));
    }

    #[test]
    fn genus_requires_knot() {
        let s = SyllableWord::parse("|1|+", 3).unwrap();
        assert_eq!(slice_genus(&s), Err(Error::NotAKnot(2)));
        assert_eq!(qp_report(&s).g4, None);
    }

    #[test]
    fn positive_word_as_syllables() {
        let s = SyllableWord::parse("|1|+; |2|+; |1|+; |2|+", 3).unwrap();
        assert!(check_qp_bt_bound(&s).unwrap());
    }

    #[test]
    fn two_strands_rejected_for_bt_bound() {
        let s = SyllableWord::parse("|1|+", 2).unwrap();
        assert!(matches!(
            check_qp_bt_bound(&s),
            Err(Error::InvalidParameter(_))
        ));
        assert_eq!(qp_report(&s).bt_upper, None);
    }
}
