use alloc::string::String;

/// Everything that can go wrong in this crate.
///
/// Variants split into two classes: bad input from the caller, and
/// violations of laws the underlying theory guarantees. The second class
/// means a bug (here or in a hand-built Cayley table that slipped past
/// validation) and is surfaced separately by [`Error::is_violation`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("multiplier n must be >= 1")]
    BadN,
    #[error("bad carrier parameters: {0}")]
    BadParams(String),
    #[error("subset does not belong to this carrier")]
    CarrierMismatch,
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("malformed Cayley table: {0}")]
    BadShape(String),
    #[error("operation is not commutative: {x} + {y} != {y} + {x}")]
    NotCommutative { x: String, y: String },
    #[error("operation is not associative at ({x}, {y}, {z})")]
    NotAssociative { x: String, y: String, z: String },
    #[error("{0} is not an element of this carrier")]
    InvalidElement(String),
    #[error("generator set must be nonempty")]
    EmptyGenerators,
    #[error("multiplier list must be nonempty")]
    EmptyMultipliers,
    #[error("multipliers must be >= 1")]
    ZeroMultiplier,
    #[error("subset is not closed under the operation: {0}")]
    NotClosed(String),
    #[error("unbounded all-n decision is not supported on infinite carriers; use a bounded sweep")]
    SymbolicUnsupported,
    #[error("integer overflow during carrier arithmetic")]
    Overflow,
    #[error("input sets are not disjoint for all multipliers: {0}")]
    NotDisjointInput(String),
    #[error("sets do not partition the carrier")]
    NotComplementary,
    #[error("cover set {0} is not konvex for every multiplier")]
    CoverNotKonvex(usize),
    #[error("cover set {0} does not contain the set it should cover")]
    CoverMissesSet(usize),
    #[error("extension step failed on both sides, contradicting the extension lemma: {0}")]
    LemmaViolation(String),
    #[error("quotient operation is not well defined: {0}")]
    WellDefinednessViolation(String),
}

impl Error {
    /// True when the error signals a broken guaranteed law rather than bad input.
    pub fn is_violation(&self) -> bool {
        matches!(
            self,
            Error::LemmaViolation(_) | Error::WellDefinednessViolation(_)
        )
    }
}

pub type Result<T> = core::result::Result<T, Error>;
