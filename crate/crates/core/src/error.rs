use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LyaError {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimMismatch {
        context: String,
        expected: usize,
        found: usize,
    },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("linear system is inconsistent: right-hand side is outside the column space")]
    Inconsistent,

    #[error("subspaces live in different ambient spaces ({0} vs {1})")]
    AmbientMismatch(usize, usize),

    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("structure constants do not define a Lie algebra: Jacobi fails at {witness:?}")]
    NotLieAlgebra { witness: Vec<usize> },

    #[error("representation is not certified as an action")]
    NotAnAction,

    #[error("{0} is not verified")]
    Unverified(String),

    #[error("precondition failed: {hypothesis}")]
    PreconditionFailed { hypothesis: String },

    #[error("axioms failed: {0}")]
    AxiomsFailed(String),

    #[error("invalid deformation: {0}")]
    InvalidDeformation(String),

    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed input in {path}, field `{field}`: {message}")]
    Format {
        path: String,
        field: String,
        message: String,
    },
}

pub type Result<T, E = LyaError> = std::result::Result<T, E>;

pub(crate) fn dim_check(context: &str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(LyaError::DimMismatch {
            context: context.to_string(),
            expected,
            found,
        })
    }
}
