//! Exact desk-scale spectra: Sylvester-resultant characteristic polynomials
//! for two-variable tensors, matrix diagonalization for order two, root
//! extraction with multiplicities, and eigenvector residual checks.

mod charpoly;
mod roots;
mod spectrum;
mod sylvester;

pub use charpoly::{charpoly, determinant, CharPoly};
pub use spectrum::{
    matrix_spectrum, real_spectrum, residual_check, spectral_summary, RootCluster, SpectralSummary,
    Spectrum,
};
pub use sylvester::{binary_forms, sylvester_matrix, BinaryFormPair};
