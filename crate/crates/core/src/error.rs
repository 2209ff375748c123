use thiserror::Error;

/// Errors raised by the library. Every variant is a caller-side
/// validation failure except [`Error::Invariant`], which signals a broken
/// internal invariant and should never surface in practice.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("invalid ring context G({k},{n}): need 1 <= k < n")]
    InvalidContext { k: u32, n: u32 },

    #[error("incompatible rings: G({0},{1}) vs G({2},{3})")]
    ContextMismatch(u32, u32, u32, u32),

    #[error("partition {partition:?} does not fit the {rows}x{cols} box")]
    OutsideBox {
        partition: Vec<u32>,
        rows: u32,
        cols: u32,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid variety {name}: {reason}")]
    InvalidVariety { name: String, reason: String },

    #[error("length mismatch: variety has {expected} hyperplane classes, got {found} values")]
    LengthMismatch { expected: usize, found: usize },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
