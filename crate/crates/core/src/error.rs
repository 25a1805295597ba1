use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dataset has no rows")]
    EmptyDataset,

    #[error("row {row}: expected {expected} coordinates, found {found}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("row {row}: non-finite value in column {column}")]
    NonFinite { row: usize, column: usize },

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("{rows} rows but {labels} labels (first unmatched row {row})")]
    LengthMismatch {
        rows: usize,
        labels: usize,
        row: usize,
    },

    #[error("expected exactly two classes, found {found} (row {row} introduces {label:?})")]
    ClassCount {
        found: usize,
        row: usize,
        label: String,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("linear program solver failed: {0}")]
    Solver(#[from] SolverError),

    #[error("measure {measure}: {source}")]
    Measure {
        measure: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("{path}: line {line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("label column {wanted:?} not found; available columns: {available:?}")]
    MissingColumn {
        wanted: String,
        available: Vec<String>,
    },

    #[error("generator rejected {rejected} of {attempts} draws; margin {margin} is infeasible")]
    ImpossibleMargin {
        margin: f64,
        attempts: u64,
        rejected: u64,
    },

    #[error("need at least {needed} usable rows, found {found}")]
    InsufficientRows { needed: usize, found: usize },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("pivot magnitude {magnitude:e} below threshold at iteration {iteration}")]
    TinyPivot { magnitude: f64, iteration: usize },

    #[error("iteration limit {limit} reached")]
    IterationLimit { limit: usize },

    #[error("problem is infeasible")]
    Infeasible,

    #[error("problem is unbounded")]
    Unbounded,

    #[error("malformed instance: {0}")]
    Malformed(String),
}

impl Error {
    pub(crate) fn in_measure(self, measure: &'static str) -> Self {
        Error::Measure {
            measure,
            source: Box::new(self),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for failures caused by the filesystem rather than by the data.
    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io { .. })
            || matches!(self, Error::Csv(e) if e.is_io_error())
            || matches!(self, Error::Measure { source, .. } if source.is_io())
    }
}
