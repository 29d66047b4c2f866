use thiserror::Error;

/// Errors shared across the crate.
///
/// All arithmetic is exact: any checked integer operation that would wrap
/// reports [`Error::Overflow`] instead of returning a wrong value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("quiver has a directed cycle")]
    Cycle,

    #[error("vertex index {index} out of range for a quiver on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("negative arrow multiplicity {value} from {src} to {dst}")]
    NegativeMultiplicity { src: usize, dst: usize, value: i64 },

    #[error("negative entry {value} at position {index} of a dimension vector")]
    NegativeEntry { index: usize, value: i64 },

    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("enumeration budget exceeded: {required} sub-dimension vectors, budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("dimension vector is not indivisible (entry gcd is {gcd})")]
    NotIndivisible { gcd: i64 },

    #[error("dimension vector is zero")]
    ZeroDimVector,

    #[error("linear form does not vanish on the dimension vector (value {value})")]
    NonVanishing { value: i64 },

    #[error("section vector does not pair to 1 with the dimension vector (value {value})")]
    InvalidSection { value: i64 },

    #[error("stabilities are attached to different dimension vectors")]
    DimVectorMismatch,

    #[error("arrow from {src} to {dst} is not strictly upper triangular")]
    NotUpperTriangular { src: usize, dst: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
