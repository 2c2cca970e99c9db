use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular (rank {rank} of {size})")]
    Singular { rank: usize, size: usize },

    #[error("{what} = {value} is outside the supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("irrep index {index} out of range (s = {size})")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("degree mismatch: S_{left} vs S_{right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a virtual character: multiplicity of irrep {irrep} is {value}")]
    NotVirtualCharacter { irrep: usize, value: String },

    /// An invariant that must hold for any correct character table failed.
    #[error("internal consistency violated: {0}")]
    Consistency(String),

    #[error("gram matrix is singular; the ring is degenerate")]
    DegenerateRing,

    #[error("no published V_i numbering is available for S_{0}")]
    NoPaperOrder(usize),

    #[error("unknown {kind} '{name}' (available: {available})")]
    UnknownStrategy {
        kind: &'static str,
        name: String,
        available: String,
    },

    #[error("serialization: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
