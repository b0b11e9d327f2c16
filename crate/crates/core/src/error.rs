use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("invalid character {found:?} at position {position}; only '0' and '1' are allowed")]
    InvalidCharacter { found: char, position: usize },
    #[error("word length {0} exceeds the maximum of {max}", max = crate::word::MAX_LEN)]
    WordTooLong(usize),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("position {position} out of range 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("overlap parameters must be positive (got r={r}, s={s})")]
    NonPositiveShift { r: usize, s: usize },
    #[error("residue sequence needs coprime inputs (got {k1}, {k2})")]
    NotCoprime { k1: usize, k2: usize },
    #[error("malformed equation: {0}")]
    MalformedEquation(String),
    #[error("position {position} outside the equation span 0..={max}")]
    OutsideSpan { position: usize, max: usize },

    #[error("dimension {dimension} outside 1..={cap} (dimension cap)")]
    DimensionCap { dimension: usize, cap: usize },
    #[error("word {0} is not a vertex of the graph")]
    NotAVertex(String),

    #[error("malformed witness: {0}")]
    MalformedWitness(String),
    #[error("cannot lift a witness of dimension {from} down to {to}")]
    LiftBelowDimension { from: usize, to: usize },

    #[error("{what} {value} exceeds the cap of {cap}")]
    SweepCap {
        what: &'static str,
        value: usize,
        cap: usize,
    },
}
