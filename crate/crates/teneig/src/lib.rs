//! Eigenvalue machinery for symmetric tensors.
//!
//! A real symmetric tensor of order m and dimension n defines a homogeneous
//! form A x^m; its H-eigenpairs solve A x^{m-1} = lambda x^{[m-1]}
//! componentwise. This crate computes exact spectra where an exact path
//! exists (n = 2 through a resultant-based characteristic polynomial, m = 2
//! through matrix diagonalization), scalar eigenvalue bounds from the trace
//! and determinant everywhere else, Gershgorin-style disk enclosures, and
//! positive definiteness certificates with a Lyapunov stability check.
//!
//! Modules:
//! - [`tensor`]: symmetric storage, multi-indices, polynomial duality.
//! - [`oracle`]: characteristic polynomial, root finding, residual checks.
//! - [`bounds`]: trace/determinant bounds and Gershgorin disks.
//! - [`certify`]: positive definiteness and gradient-flow stability.
//! - [`doc`]: the text file format used by the CLI.
//! - [`report`]: text/JSON/CSV/SVG rendering of the above.

pub mod bounds;
pub mod certify;
pub mod doc;
pub mod error;
pub mod oracle;
pub mod report;
pub mod tensor;

pub use error::{Result, TensorError};
pub use tensor::{HomogeneousPolynomial, MultiIndex, SpectralInvariants, SymmetricTensor};
