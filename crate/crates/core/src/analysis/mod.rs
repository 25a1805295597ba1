//! Profiles of the twelve measures and the study over many problems:
//! correlation between measures and principal components of the measure space.

pub mod correlation;
pub mod jacobi;
pub mod pca;
pub mod profile;

pub use correlation::{correlation_matrix, pearson, CorrelationMatrix};
pub use jacobi::{symmetric_eigen, SymmetricEigen};
pub use pca::{pca, PcaResult};
pub use profile::{
    compute_profile, flags, format_value, parse_value, ComplexityProfile, Measure, MeasureValues,
    ProfileTable,
};
