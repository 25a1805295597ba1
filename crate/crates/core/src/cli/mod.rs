//! File ingestion, pairwise problem extraction, batch runs and output formats
//! behind the `geocomplexity` binary.

pub mod batch;
pub mod csv_input;
pub mod encoding;
pub mod format;
pub mod pairs;

pub use batch::{run_batch, write_outputs, BatchFailure, BatchOutcome, Manifest, ManifestEntry};
pub use csv_input::{parse_csv, RawTable};
pub use encoding::{encode_categoricals, CategoricalEncoding};
pub use pairs::{all_pairs, restrict, whole};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const PARTIAL_FAILURE: i32 = 1;
    pub const INVALID_INVOCATION: i32 = 2;
    pub const IO_ERROR: i32 = 3;
}
