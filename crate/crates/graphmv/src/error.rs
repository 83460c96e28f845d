use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got} ({context})")]
    DimensionMismatch {
        expected: usize,
        got: usize,
        context: &'static str,
    },

    #[error("edge ({src}, {dst}) out of bounds for {num_rows}x{num_cols} matrix")]
    EdgeOutOfBounds {
        src: usize,
        dst: usize,
        num_rows: usize,
        num_cols: usize,
    },

    #[error("duplicate edge ({src}, {dst}); run preprocess first")]
    DuplicateEdge { src: usize, dst: usize },

    #[error("source vertex {vertex} out of range for {num_vertices} vertices")]
    SourceOutOfRange { vertex: usize, num_vertices: usize },

    #[error("switchpoint {0} must lie in (0, 1]")]
    BadSwitchpoint(f64),

    #[error("negative edge weight {weight} on edge ({src}, {dst})")]
    NegativeWeight { src: usize, dst: usize, weight: f64 },

    #[error("forced {direction} direction but input vector cannot be coerced")]
    DispatchError { direction: &'static str },

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("unsupported matrix market format: {0}")]
    UnsupportedFormat(String),

    #[error("rmat scale {scale} exceeds the desk-scale limit of {limit}")]
    ScaleTooLarge { scale: u32, limit: u32 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
