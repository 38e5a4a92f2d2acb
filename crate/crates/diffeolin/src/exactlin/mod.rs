//! Exact rational linear algebra substrate.
//!
//! Everything downstream reduces to these primitives: reduced row-echelon
//! form, kernels, column spaces, annihilators, exact linear solves, the
//! congruence-based inertia of symmetric matrices, and a floating-point
//! Jacobi eigensolver used only for reporting.

pub mod inertia;
pub mod jacobi;
pub mod matrix;
pub mod rational;
pub mod subspace;

pub use inertia::{symmetric_inertia, Inertia};
pub use jacobi::{jacobi_eigen, SymmetricEigen, DEFAULT_TOL, MAX_SWEEPS, ZERO_EIGENVALUE_EPS};
pub use matrix::{solve_any, solve_unique, MatrixQ, Rref};
pub use rational::{ParseRationalError, Rational};
pub use subspace::{column_space_basis, kernel_basis, SubspaceQ};
