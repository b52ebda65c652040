use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("repeated part {0}")]
    RepeatedPart(u64),
    #[error("parts must be positive")]
    NonPositivePart,
    #[error("cannot parse partition {0:?}")]
    Parse(String),
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),
    #[error("{bar} is not a bar of {partition}")]
    NotABar { bar: String, partition: String },
    #[error("{partition} is not a {p}-bar core")]
    NotACore { partition: String, p: u64 },
    #[error("residue class {i} of {partition} is empty")]
    EmptyClass { i: u64, partition: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An internal consistency check failed. Seeing this means a bug, not bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("block with core {core} and weight {w} (p = {p}) has no verified witness: {detail}")]
    MissingWitness {
        core: String,
        w: u64,
        p: u64,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
