//! Exact models of finite-dimensional diffeological vector spaces whose
//! diffeology is generated by finitely many non-smooth ray plots.
//!
//! All structural computations are exact over arbitrary-precision rationals:
//! the diffeological dual, the space of smooth symmetric bilinear forms,
//! pseudo-metrics (the least-degenerate smooth forms), smooth direct-sum
//! decompositions, and the true metric a pseudo-metric induces on the dual.
//! Floating point appears only in the Jacobi eigensolver used for
//! human-readable summaries.
//!
//! Every value is immutable after construction and every operation is a
//! pure function, so unsynchronized concurrent use is safe throughout;
//! randomized probes take their streams from explicit `(seed, stream)`
//! pairs and stay deterministic under any scheduling.
//!
//! Module map:
//!
//! - [`exactlin`]: rationals, matrices, subspaces, inertia, Jacobi.
//! - [`space`]: the diffeological space model and its characteristic
//!   subspaces.
//! - [`dual`]: the diffeological dual and the pairing map of a smooth form.
//! - [`forms`]: smooth forms, their solution space, pseudo-metrics.
//! - [`splitting`]: smooth direct sums, the invariant standard summand,
//!   randomized summand probes.
//! - [`dualmetric`]: pushforward and pullback between pseudo-metrics and
//!   metrics on the dual.
//! - [`sampling`]: deterministic random inputs for probes and tests.
//!
//! ```
//! use diffeolin::{DiffSpace, GeneratorPlot, MatrixQ, Rational, SymbolTag};
//!
//! // Q^3 with the single non-smooth generator x -> |x| * (0, 1, 1).
//! let direction = vec![Rational::zero(), Rational::one(), Rational::one()];
//! let space =
//!     DiffSpace::from_generators(3, vec![GeneratorPlot::new(SymbolTag::Abs, direction)])?;
//!
//! // Its dual is two-dimensional, and the canonical pseudo-metric is the
//! // coordinate sum of squares of the dual basis functionals.
//! assert_eq!(space.dual_dim(), 2);
//! let pm = diffeolin::canonical_pseudo_metric(&space);
//! assert!(diffeolin::is_pseudo_metric(&space, pm.matrix())?);
//!
//! // Pushing it forward along the pairing map gives the identity metric on
//! // the dual, exactly.
//! let dual_metric = diffeolin::induced_dual_metric(&space, &pm)?;
//! assert_eq!(*dual_metric.matrix(), MatrixQ::identity(2));
//! # Ok::<(), diffeolin::Error>(())
//! ```

pub mod dual;
pub mod dualmetric;
pub mod error;
pub mod exactlin;
pub mod forms;
pub mod sampling;
pub mod space;
pub mod splitting;

#[cfg(test)]
pub(crate) mod test_support;

pub use dual::{dual_basis, psi, psi_inverse_on_standard_part, DualBasis};
pub use dualmetric::{
    induced_dual_metric, induced_dual_metric_closed_form, induced_dual_metric_via_pairing,
    is_smooth_dual_metric, pseudo_metric_from_dual_metric, DualMetricQ,
};
pub use error::{Diagnostic, Error};
pub use exactlin::{
    column_space_basis, jacobi_eigen, kernel_basis, solve_any, solve_unique, symmetric_inertia,
    Inertia, MatrixQ, Rational, SubspaceQ, SymmetricEigen,
};
pub use forms::{
    canonical_pseudo_metric, classify_pseudo_metric, expected_pseudo_metric_inertia,
    is_pseudo_metric, is_smooth_form, signature_lemma_check, smooth_form_space, BilinearFormQ,
    PseudoMetricVerdict, SignatureBound,
};
pub use sampling::Sampler;
pub use space::{validate_space, DiffSpace, GeneratorPlot, RawGenerator, SymbolTag};
pub use splitting::{
    admits_smooth_scalar_product, check_smooth_split, decompose, invariant_standard_part,
    probe_standard_summands, SmoothSplit, SummandProbe,
};
