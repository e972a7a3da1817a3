use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no root system of type {family}{rank}; admissible ranks are {admissible}")]
    InadmissibleType {
        family: char,
        rank: usize,
        admissible: &'static str,
    },

    #[error("unknown root system family `{0}` (expected one of A, B, C, D, E, F, G)")]
    UnknownFamily(String),

    #[error("relations do not define a partial order: {0}")]
    NotPartialOrder(String),

    #[error("subset has width {found}, poset has {expected} elements")]
    WidthMismatch { expected: usize, found: usize },

    #[error("not a lower ideal: contains `{present}` but not `{missing}` below it")]
    NotIdeal { present: String, missing: String },

    #[error("not an antichain: `{0}` and `{1}` are comparable")]
    NotAntichain(String, String),

    #[error("lower-ideal enumeration exceeded the cap of {cap}")]
    EnumerationCap { cap: usize },

    #[error("orbit did not close within {cap} steps")]
    OrbitCap { cap: usize },

    #[error("malformed rank signature: {0}")]
    MalformedSignature(String),

    #[error("structure mismatch: {0}")]
    StructureMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
