use thiserror::Error;

/// Which argument of a two-vector metric was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    First,
    Second,
}

impl std::fmt::Display for Operand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Operand::First => f.write_str("first"),
            Operand::Second => f.write_str("second"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("expected {expected} ratings, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("rating {value} at position {index} is outside [0, 5]")]
    OutOfRange { index: usize, value: f64 },

    #[error("rating at position {index} is not a finite number")]
    NotFinite { index: usize },

    #[error("invalid area schema: {0}")]
    InvalidSchema(String),

    #[error("invalid supervisor name {0:?}")]
    InvalidName(String),

    #[error("duplicate supervisor name {0:?}")]
    DuplicateName(String),

    #[error("roster has no profiles")]
    EmptyRoster,

    #[error("{0} vector is constant; correlation is undefined")]
    ConstantVector(Operand),

    #[error("unknown supervisor {name:?}")]
    UnknownName {
        name: String,
        /// Roster names that look like what the caller meant.
        candidates: Vec<String>,
    },

    #[error("k must be at least 1")]
    InvalidK,
}

impl Error {
    /// Stable machine-readable identifier, used as the `code` of API errors.
    pub fn code(&self) -> &'static str {
        match self {
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::NotFinite { .. } => "NotFinite",
            Error::InvalidSchema(_) => "InvalidSchema",
            Error::InvalidName(_) => "InvalidName",
            Error::DuplicateName(_) => "DuplicateName",
            Error::EmptyRoster => "EmptyRoster",
            Error::ConstantVector(_) => "ConstantVector",
            Error::UnknownName { .. } => "UnknownName",
            Error::InvalidK => "InvalidK",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
