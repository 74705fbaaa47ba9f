use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected} bits, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("string set is empty")]
    EmptySet,

    #[error("zero-width strings are not accepted here")]
    ZeroWidth,

    #[error("index {index} out of range for a set of {len} strings")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("closure grew past the limit of {limit} strings")]
    LimitExceeded { limit: usize },

    #[error("CNF conversion would exceed {cap} clauses")]
    SizeExplosion { cap: usize },

    #[error("instance of size {size} exceeds the enumeration bound {bound}")]
    TooLarge { size: usize, bound: usize },

    #[error("formula contains a Not node; push negations first")]
    NotNegationNormal,

    #[error("the subsets do not cover the universe")]
    Uncoverable,

    #[error("target is not representable by the string set")]
    NotRepresentable,

    #[error("element {element} is outside the universe 1..={universe}")]
    InvalidElement { element: usize, universe: usize },

    #[error("no {family} strategy named {name:?}")]
    UnknownStrategy { family: &'static str, name: String },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

impl Error {
    /// Stable machine-readable tag for the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::EmptySet => "empty_set",
            Error::ZeroWidth => "zero_width",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::LimitExceeded { .. } => "limit_exceeded",
            Error::SizeExplosion { .. } => "size_explosion",
            Error::TooLarge { .. } => "too_large",
            Error::NotNegationNormal => "not_negation_normal",
            Error::Uncoverable => "uncoverable",
            Error::NotRepresentable => "not_representable",
            Error::InvalidElement { .. } => "invalid_element",
            Error::UnknownStrategy { .. } => "unknown_strategy",
            Error::InvalidPoset(_) => "invalid_poset",
            Error::Parse { .. } => "parse",
            Error::InternalInvariantViolation(_) => "internal_invariant_violation",
        }
    }

    /// Errors raised because an instance is too big for an exponential routine.
    pub fn is_resource_bound(&self) -> bool {
        matches!(
            self,
            Error::LimitExceeded { .. } | Error::SizeExplosion { .. } | Error::TooLarge { .. }
        )
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
