//! Finite-dimensional diffeological vector spaces with finitely generated
//! diffeologies.
//!
//! A space is `Q^n` carrying the vector space diffeology generated by the
//! fine diffeology together with finitely many ray plots `x -> g(x) * w`,
//! where `g` is one of a fixed catalog of non-smooth scalar functions and
//! `w` is a nonzero direction. For this class every smoothness question in
//! the crate reduces to exact linear algebra over the characteristic
//! subspaces below.

use std::fmt;

use crate::error::{Diagnostic, Error};
use crate::exactlin::{Rational, SubspaceQ};

/// Catalog of non-smooth scalar generator functions.
///
/// The catalog members are pairwise independent modulo smooth functions
/// under smooth reparametrization, and every nonzero multiple of a member is
/// non-smooth at 0. Both facts are assumptions of the model, documented here
/// rather than machine-checked. `relu` is deliberately absent: it equals
/// `x/2 + |x|/2`, so it is dependent on `abs` modulo smooth functions and
/// would break the independence assumption.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymbolTag {
    /// |x|
    Abs,
    /// sign(x)
    Sign,
    /// x^(1/3)
    Cbrt,
}

impl SymbolTag {
    pub const CATALOG: [SymbolTag; 3] = [SymbolTag::Abs, SymbolTag::Sign, SymbolTag::Cbrt];

    pub fn name(self) -> &'static str {
        match self {
            SymbolTag::Abs => "abs",
            SymbolTag::Sign => "sign",
            SymbolTag::Cbrt => "cbrt",
        }
    }

    pub fn parse(name: &str) -> Option<SymbolTag> {
        Self::CATALOG.into_iter().find(|s| s.name() == name)
    }
}

impl fmt::Display for SymbolTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One generator of the diffeology: the ray plot `x -> symbol(x) * vector`.
///
/// A sum of several non-smooth terms is represented as one plot per term;
/// smooth terms are absorbed by the fine diffeology and never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorPlot {
    symbol: SymbolTag,
    vector: Vec<Rational>,
}

impl GeneratorPlot {
    pub fn new(symbol: SymbolTag, vector: Vec<Rational>) -> Self {
        GeneratorPlot { symbol, vector }
    }

    pub fn symbol(&self) -> SymbolTag {
        self.symbol
    }

    pub fn vector(&self) -> &[Rational] {
        &self.vector
    }
}

/// Unvalidated generator description, as read from input files.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawGenerator {
    pub symbol: String,
    pub vector: Vec<Rational>,
}

impl RawGenerator {
    pub fn new(symbol: impl Into<String>, vector: Vec<Rational>) -> Self {
        RawGenerator {
            symbol: symbol.into(),
            vector,
        }
    }
}

/// Checks a raw space description; empty result means valid.
pub fn validate_space(dimension: usize, generators: &[RawGenerator]) -> Vec<Diagnostic> {
    let mut diagnostics = Vec::new();
    for (index, gen) in generators.iter().enumerate() {
        if SymbolTag::parse(&gen.symbol).is_none() {
            diagnostics.push(Diagnostic {
                generator: index,
                reason: format!("unknown symbol {:?}", gen.symbol),
            });
        }
        if gen.vector.len() != dimension {
            diagnostics.push(Diagnostic {
                generator: index,
                reason: format!(
                    "vector has {} entries, space dimension is {}",
                    gen.vector.len(),
                    dimension
                ),
            });
        } else if gen.vector.iter().all(Rational::is_zero) {
            diagnostics.push(Diagnostic {
                generator: index,
                reason: format!("zero generator vector at index {index}"),
            });
        }
    }
    diagnostics
}

/// A diffeological vector space of the modeled class, with its derived
/// characteristic subspaces precomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffSpace {
    dimension: usize,
    generators: Vec<GeneratorPlot>,
    /// `C_g` for each catalog symbol that actually occurs, in catalog order.
    symbol_subspaces: Vec<(SymbolTag, SubspaceQ)>,
    /// `C`, the sum of the per-symbol subspaces.
    characteristic: SubspaceQ,
}

impl DiffSpace {
    /// Validates and builds a space from a raw description.
    pub fn new(dimension: usize, generators: &[RawGenerator]) -> Result<Self, Error> {
        let diagnostics = validate_space(dimension, generators);
        if !diagnostics.is_empty() {
            return Err(Error::InvalidSpace(diagnostics));
        }
        let plots = generators
            .iter()
            .map(|g| {
                GeneratorPlot::new(
                    SymbolTag::parse(&g.symbol).expect("validated symbol"),
                    g.vector.clone(),
                )
            })
            .collect();
        Ok(Self::from_validated(dimension, plots))
    }

    /// Builds a space from already-typed generators, re-checking lengths and
    /// nonzero-ness.
    pub fn from_generators(
        dimension: usize,
        generators: Vec<GeneratorPlot>,
    ) -> Result<Self, Error> {
        let raw: Vec<RawGenerator> = generators
            .iter()
            .map(|g| RawGenerator::new(g.symbol().name(), g.vector().to_vec()))
            .collect();
        let diagnostics = validate_space(dimension, &raw);
        if !diagnostics.is_empty() {
            return Err(Error::InvalidSpace(diagnostics));
        }
        Ok(Self::from_validated(dimension, generators))
    }

    /// The fine space: no generators beyond the smooth plots.
    pub fn fine(dimension: usize) -> Self {
        Self::from_validated(dimension, Vec::new())
    }

    fn from_validated(dimension: usize, generators: Vec<GeneratorPlot>) -> Self {
        let mut symbol_subspaces = Vec::new();
        for symbol in SymbolTag::CATALOG {
            let directions: Vec<Vec<Rational>> = generators
                .iter()
                .filter(|g| g.symbol() == symbol)
                .map(|g| g.vector().to_vec())
                .collect();
            if directions.is_empty() {
                continue;
            }
            let span = SubspaceQ::span_of_vectors(dimension, &directions)
                .expect("validated generator lengths");
            symbol_subspaces.push((symbol, span));
        }
        let characteristic = symbol_subspaces
            .iter()
            .fold(SubspaceQ::zero(dimension), |acc, (_, s)| acc.sum(s));
        DiffSpace {
            dimension,
            generators,
            symbol_subspaces,
            characteristic,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> &[GeneratorPlot] {
        &self.generators
    }

    /// `C`: the span of all generator directions. A linear functional is
    /// smooth for this diffeology iff it vanishes on `C`.
    pub fn characteristic_subspace(&self) -> &SubspaceQ {
        &self.characteristic
    }

    /// The per-symbol characteristic subspaces `C_g`, catalog order, only
    /// for symbols that occur.
    pub fn symbol_subspaces(&self) -> &[(SymbolTag, SubspaceQ)] {
        &self.symbol_subspaces
    }

    pub fn symbol_subspace(&self, symbol: SymbolTag) -> Option<&SubspaceQ> {
        self.symbol_subspaces
            .iter()
            .find(|(s, _)| *s == symbol)
            .map(|(_, sub)| sub)
    }

    /// Dimension of the diffeological dual, `n - dim C`.
    pub fn dual_dim(&self) -> usize {
        self.dimension - self.characteristic.dim()
    }

    /// Whether the subset diffeology on `w` is the standard one.
    ///
    /// Criterion: `w` meets every per-symbol characteristic subspace only in
    /// zero. The check is per symbol rather than against the whole of `C`:
    /// same-symbol generators can combine inside `w` through a shared
    /// reparametrization, and any such combination lies in a single `C_g`,
    /// while terms of distinct symbols cannot cancel by the catalog
    /// independence assumption.
    pub fn is_standard_subspace(&self, w: &SubspaceQ) -> bool {
        assert_eq!(
            w.ambient_dim(),
            self.dimension,
            "subspace ambient dimension mismatch"
        );
        self.symbol_subspaces
            .iter()
            .all(|(_, c_g)| w.intersect(c_g).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::MatrixQ;
    use crate::test_support::e3;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn qv(entries: &[i64]) -> Vec<Rational> {
        entries.iter().map(|&n| q(n)).collect()
    }

    fn span(rows: &[&[i64]], ambient: usize) -> SubspaceQ {
        if rows.is_empty() {
            return SubspaceQ::zero(ambient);
        }
        SubspaceQ::span_of_rows(&MatrixQ::from_i64_rows(rows))
    }

    #[test]
    fn characteristic_of_single_generator() {
        assert_eq!(*e3().characteristic_subspace(), span(&[&[0, 1, 1]], 3));
        assert_eq!(e3().dual_dim(), 2);
    }

    #[test]
    fn characteristic_of_fine_space_is_zero() {
        let e0 = DiffSpace::fine(2);
        assert_eq!(*e0.characteristic_subspace(), SubspaceQ::zero(2));
        assert_eq!(e0.dual_dim(), 2);
    }

    #[test]
    fn characteristic_of_two_symbols() {
        let e2 = DiffSpace::from_generators(
            3,
            vec![
                GeneratorPlot::new(SymbolTag::Abs, qv(&[1, 0, 0])),
                GeneratorPlot::new(SymbolTag::Cbrt, qv(&[0, 1, 0])),
            ],
        )
        .unwrap();
        let c = e2.characteristic_subspace();
        assert_eq!(*c, span(&[&[1, 0, 0], &[0, 1, 0]], 3));
        // Independent check: the annihilator of C must kill both generator
        // directions and nothing more.
        let ann = c.annihilator();
        assert_eq!(ann.dim(), 1);
        for gen in e2.generators() {
            for r in 0..ann.dim() {
                let dot: Rational = ann
                    .basis_row(r)
                    .iter()
                    .zip(gen.vector())
                    .map(|(a, b)| a * b)
                    .sum();
                assert!(dot.is_zero());
            }
        }
        assert_eq!(e2.symbol_subspaces().len(), 2);
        assert_eq!(
            e2.symbol_subspace(SymbolTag::Abs),
            Some(&span(&[&[1, 0, 0]], 3))
        );
        assert_eq!(e2.symbol_subspace(SymbolTag::Sign), None);
    }

    #[test]
    fn standard_subspaces_of_e3() {
        let space = e3();
        assert!(space.is_standard_subspace(&span(&[&[1, 0, 0], &[0, 1, 0]], 3)));
        assert!(!space.is_standard_subspace(&span(&[&[0, 1, 0], &[0, 0, 1]], 3)));
        assert!(!space.is_standard_subspace(&SubspaceQ::full(3)));
        assert!(space.is_standard_subspace(&SubspaceQ::zero(3)));
        assert!(space.is_standard_subspace(&span(&[&[1, 0, 0], &[0, 1, -1]], 3)));
        assert!(!space.is_standard_subspace(&span(&[&[0, 1, 1], &[1, 0, 0]], 3)));
    }

    #[test]
    fn full_space_is_standard_only_without_generators() {
        assert!(DiffSpace::fine(2).is_standard_subspace(&SubspaceQ::full(2)));
        assert!(!e3().is_standard_subspace(&SubspaceQ::full(3)));
    }

    #[test]
    fn standardness_is_monotone() {
        let space = e3();
        let w = span(&[&[1, 0, 0], &[0, 1, -1]], 3);
        assert!(space.is_standard_subspace(&w));
        let smaller = span(&[&[1, 2, -2]], 3);
        assert!(w.contains(&smaller));
        assert!(space.is_standard_subspace(&smaller));
    }

    #[test]
    fn multi_symbol_standardness_uses_per_symbol_check() {
        // W meets C nontrivially but no single C_g, so it stays standard.
        let e2 = DiffSpace::from_generators(
            3,
            vec![
                GeneratorPlot::new(SymbolTag::Abs, qv(&[1, 0, 0])),
                GeneratorPlot::new(SymbolTag::Cbrt, qv(&[0, 1, 0])),
            ],
        )
        .unwrap();
        let w = span(&[&[1, 1, 0], &[0, 0, 1]], 3);
        assert!(!w.intersect(e2.characteristic_subspace()).is_zero());
        assert!(e2.is_standard_subspace(&w));
    }

    #[test]
    fn validation_diagnostics() {
        assert!(validate_space(3, &[RawGenerator::new("abs", qv(&[0, 1, 1]))]).is_empty());

        let zero = validate_space(2, &[RawGenerator::new("abs", qv(&[0, 0]))]);
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].generator, 0);
        assert!(zero[0].reason.contains("zero generator vector at index 0"));

        let unknown = validate_space(2, &[RawGenerator::new("exp", qv(&[1, 0]))]);
        assert_eq!(unknown.len(), 1);
        assert!(unknown[0].reason.contains("unknown symbol"));

        let short = validate_space(3, &[RawGenerator::new("sign", qv(&[1, 0]))]);
        assert_eq!(short.len(), 1);
        assert!(short[0].reason.contains("3"));

        let err = DiffSpace::new(2, &[RawGenerator::new("exp", qv(&[1, 0]))]).unwrap_err();
        assert!(matches!(err, Error::InvalidSpace(_)));
    }

    #[test]
    fn duplicate_generators_do_not_inflate_subspaces() {
        let space = DiffSpace::from_generators(
            2,
            vec![
                GeneratorPlot::new(SymbolTag::Abs, qv(&[1, 0])),
                GeneratorPlot::new(SymbolTag::Abs, qv(&[2, 0])),
            ],
        )
        .unwrap();
        assert_eq!(space.characteristic_subspace().dim(), 1);
        assert_eq!(space.generators().len(), 2);
    }
}
