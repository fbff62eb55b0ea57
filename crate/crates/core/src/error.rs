//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("degree error: {0}")]
    Degree(String),

    #[error("degenerate plane: contraction indices must differ, got {0}")]
    DegeneratePlane(u8),

    #[error("index {index} out of range 1..={dim}")]
    IndexRange { index: u8, dim: u8 },

    #[error("search bound exceeded: {0}")]
    SearchBound(String),

    #[error("incompatible presentation: support {support} receives {first} and {second}")]
    IncompatiblePresentation {
        support: String,
        first: i64,
        second: i64,
    },

    #[error("incompatible embedding: support {support} receives {first} and {second}")]
    IncompatibleEmbedding {
        support: String,
        first: i64,
        second: i64,
    },

    #[error("unknown catalog form `{0}`")]
    Catalog(String),

    #[error("rank out of range: {0}")]
    Rank(String),

    #[error("factor does not divide the characteristic polynomial")]
    Factor,

    #[error("normalization failed: {0}")]
    Normalization(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
