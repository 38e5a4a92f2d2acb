//! Shared fixtures for the unit tests.

use crate::exactlin::{MatrixQ, Rational, SubspaceQ};
use crate::space::{DiffSpace, GeneratorPlot, SymbolTag};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn qv(entries: &[i64]) -> Vec<Rational> {
    entries.iter().map(|&n| Rational::from_int(n)).collect()
}

pub fn span(rows: &[&[i64]], ambient: usize) -> SubspaceQ {
    if rows.is_empty() {
        return SubspaceQ::zero(ambient);
    }
    SubspaceQ::span_of_rows(&MatrixQ::from_i64_rows(rows))
}

/// Q^3 with the single generator |x|*(e2+e3).
pub fn e3() -> DiffSpace {
    DiffSpace::from_generators(3, vec![GeneratorPlot::new(SymbolTag::Abs, qv(&[0, 1, 1]))]).unwrap()
}

/// The fine plane: no generators.
pub fn e0() -> DiffSpace {
    DiffSpace::fine(2)
}

/// Q^2 where the characteristic subspace is everything, so the dual is zero.
pub fn e4() -> DiffSpace {
    DiffSpace::from_generators(
        2,
        vec![
            GeneratorPlot::new(SymbolTag::Abs, qv(&[1, 0])),
            GeneratorPlot::new(SymbolTag::Abs, qv(&[0, 1])),
        ],
    )
    .unwrap()
}

/// The crate-wide sample pseudo-metric on `e3`: template values a=1, b=c=2.
pub fn sample_metric_matrix() -> MatrixQ {
    MatrixQ::from_i64_rows(&[&[2, 1, -1], &[1, 2, -2], &[-1, -2, 2]])
}
