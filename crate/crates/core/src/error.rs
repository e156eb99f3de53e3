use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("rank {0} exceeds the supported maximum of {max}", max = crate::perm::MAX_RANK)]
    RankTooLarge(usize),

    #[error("enumeration of rank {rank} refused: cap is {cap}")]
    CapExceeded { rank: usize, cap: usize },

    #[error("letter `{letter}` is not valid at rank {rank}")]
    InvalidLetter { letter: String, rank: usize },

    #[error("tau is not available when evaluating into the unsigned monoid")]
    TauUnsigned,

    #[error("element is not a unit")]
    NotUnit,

    #[error("element carries a negative sign")]
    SignedInput,

    #[error("word contains an epsilon letter")]
    EpsilonInWord,

    #[error("unknown presentation `{0}`")]
    UnknownPresentation(String),

    #[error("value {value} out of range {range}")]
    OutOfRange { value: usize, range: String },

    #[error("malformed normal-form data: {0}")]
    MalformedSequence(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
