use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("guard violated: {0}")]
    Guard(String),

    #[error("integer overflow: {0}")]
    Overflow(String),

    #[error("aliasing: frequency {alias} folds onto {target} on a grid of {nodes} nodes")]
    Aliasing { alias: i64, target: i64, nodes: usize },

    #[error("{theorem} does not apply to (l1, l2) = ({ell1}, {ell2}): {reason}")]
    Hypothesis {
        theorem: &'static str,
        ell1: u32,
        ell2: u32,
        reason: &'static str,
    },

    #[error("fit needs at least 3 rows of a single (l1, l2, theta) group, got {0}")]
    InsufficientRows(usize),

    #[error("degenerate fit: {0}")]
    Degenerate(String),

    #[error("refinement did not converge: {0}")]
    NonConvergent(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("serialization: {0}")]
    Serialization(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
