//! Geometrical complexity measures for two-class classification problems.
//!
//! Twelve measures describe how hard a labeled point set is to classify:
//!
//! | group | measures |
//! |-------|----------|
//! | feature overlap | F1 (max Fisher ratio), F2 (overlap volume), F3 (max feature efficiency) |
//! | linear separability | L1 (LP error distance), L2 (LP training error), L3 (LP nonlinearity) |
//! | neighborhoods | N1 (MST boundary), N2 (intra/inter NN ratio), N3 (1NN LOO error), N4 (1NN nonlinearity) |
//! | topology | T1 (retained adherence balls), T2 (points per dimension) |
//!
//! [`analysis::compute_profile`] evaluates all of them; the `synth` module
//! generates reference problem families and `analysis` also provides the
//! correlation and principal-component study over many profiles.
//!
//! ```
//! use geocomplexity::{analysis::{compute_profile, Measure}, Dataset};
//!
//! let ds = Dataset::new("toy", vec![vec![0.0], vec![1.0], vec![10.0], vec![11.0]],
//!                       vec!["a", "a", "b", "b"]).unwrap();
//! let profile = compute_profile(&ds, 7).unwrap();
//! assert_eq!(profile.get(Measure::N1), 0.5);
//! assert!(profile.get(Measure::L1) < 1e-12);
//! ```

#![allow(clippy::needless_range_loop)]

pub mod analysis;
pub mod cli;
pub mod dataset;
pub mod error;
pub mod linprog;
pub mod neighbors;
pub mod overlap;
pub mod rng;
pub mod synth;
pub mod topology;

pub use dataset::{Class, Dataset};
pub use error::{Error, Result, SolverError};
