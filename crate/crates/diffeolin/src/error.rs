use std::fmt;

use thiserror::Error;

/// A single problem found while validating a space description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    /// Index of the offending generator in the input list.
    pub generator: usize,
    pub reason: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "generator {}: {}", self.generator, self.reason)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not symmetric")]
    NotSymmetric,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("no solution")]
    NoSolution,

    #[error("ambiguous: the system has more than one solution")]
    Ambiguous,

    #[error("no convergence after {0} sweeps")]
    NoConvergence(usize),

    #[error("form not smooth")]
    FormNotSmooth,

    #[error("not a pseudo-metric: {0}")]
    NotPseudoMetric(String),

    #[error("not positive definite")]
    NotPositiveDefinite,

    #[error("not a direct sum: {0}")]
    NotDirectSum(String),

    #[error("invalid space: {}", format_diagnostics(.0))]
    InvalidSpace(Vec<Diagnostic>),
}

fn format_diagnostics(diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(Diagnostic::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
