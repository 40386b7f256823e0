use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("braid group needs at least 2 strands, got {0}")]
    TooFewStrands(usize),

    #[error("generator index {index} is out of range for {strands} strands (valid: 1..={max})", max = .strands - 1)]
    LetterOutOfRange { index: i64, strands: usize },

    #[error("zero is not a braid letter")]
    ZeroLetter,

    #[error("malformed token `{0}`")]
    MalformedToken(String),

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("word is not positive (contains letter {0})")]
    NotPositive(i32),

    #[error("closure has {0} components, expected a knot")]
    NotAKnot(usize),

    #[error("{needed} full twists are needed to absorb the negative letters, got {given}")]
    TooFewTwists { needed: usize, given: i64 },

    #[error("handle reduction exceeded the step cap of {0}")]
    StepCapExceeded(u64),

    #[error("floor bracketing exceeded |t| = {0}")]
    BracketCapExceeded(i64),

    #[error("no rational with denominator <= {strands} in [{lo}, {hi}]")]
    NoAdmissibleRational {
        strands: usize,
        lo: String,
        hi: String,
    },

    #[error("invalid rational `{0}`")]
    InvalidRational(String),

    #[error("syllable {0} has negative sign; quasipositive data needs all signs positive")]
    MixedSigns(usize),

    #[error("{0}")]
    InvalidParameter(String),

    #[error("certificate check failed: {0}")]
    CertificationFailed(String),

    #[error("predicate `{predicate}` needs `{field}`")]
    MissingInput {
        predicate: &'static str,
        field: &'static str,
    },
}
