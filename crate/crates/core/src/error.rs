use thiserror::Error;

/// Errors raised by the group constructions and parsers in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: String, right: String },

    #[error("label {value} at level {level}, vertex {vertex} is out of range [0, {order})")]
    LabelOutOfRange {
        level: usize,
        vertex: usize,
        value: u64,
        order: u32,
    },

    #[error("level {level} has {found} labels, expected {expected}")]
    LevelWidth {
        level: usize,
        expected: usize,
        found: usize,
    },

    #[error("leaf digit {digit} at position {position} is out of range [0, {order})")]
    DigitOutOfRange {
        position: usize,
        digit: u64,
        order: u32,
    },

    #[error("enumeration exceeded the limit of {limit} elements")]
    LimitExceeded { limit: usize },

    #[error(
        "order {order} at position {position} is not coprime to lcm {lcm} of the other orders"
    )]
    NotCoprime {
        position: usize,
        order: u64,
        lcm: u64,
    },

    #[error("invalid spine: {0}")]
    InvalidSpine(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("action of the active group is not transitive ({orbits} orbits)")]
    NonTransitive { orbits: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("rank or variant mismatch: {0}")]
    RankMismatch(String),

    #[error("parse error at byte {offset}: expected {expected}, found {found}")]
    Parse {
        offset: usize,
        expected: String,
        found: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
