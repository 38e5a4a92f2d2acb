//! Linear subspaces of Q^n in canonical form.
//!
//! A subspace is stored as the reduced row-echelon basis of its row span.
//! The representation is canonical: two `SubspaceQ` values describe the same
//! set of vectors iff they are `==`. The zero subspace is a 0 x n basis.

use crate::error::Error;
use crate::exactlin::matrix::{solve_any, MatrixQ};
use crate::exactlin::rational::Rational;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubspaceQ {
    ambient: usize,
    basis: MatrixQ,
}

impl SubspaceQ {
    pub fn zero(ambient: usize) -> Self {
        SubspaceQ {
            ambient,
            basis: MatrixQ::empty(ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        SubspaceQ {
            ambient,
            basis: MatrixQ::identity(ambient),
        }
    }

    /// Span of the rows of `m`, canonicalized.
    pub fn span_of_rows(m: &MatrixQ) -> Self {
        let reduced = m.rref();
        let mut rows = Vec::with_capacity(reduced.rank);
        for r in 0..reduced.rank {
            rows.push(reduced.matrix.row_vec(r));
        }
        let basis = if rows.is_empty() {
            MatrixQ::empty(m.cols())
        } else {
            MatrixQ::from_rows(rows).expect("rref rows share a length")
        };
        SubspaceQ {
            ambient: m.cols(),
            basis,
        }
    }

    /// Span of explicit vectors; `vectors` may be empty.
    pub fn span_of_vectors(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self, Error> {
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "vector {} has {} entries, ambient dimension is {}",
                    i,
                    v.len(),
                    ambient
                )));
            }
        }
        if vectors.is_empty() {
            return Ok(SubspaceQ::zero(ambient));
        }
        let m = MatrixQ::from_rows(vectors.to_vec())?;
        Ok(SubspaceQ::span_of_rows(&m))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis rows (rref, full row rank).
    pub fn basis(&self) -> &MatrixQ {
        &self.basis
    }

    pub fn basis_row(&self, i: usize) -> &[Rational] {
        self.basis.row(i)
    }

    /// {phi : phi . s = 0 for every s in self}, as row covectors in the same
    /// coordinates. dim + annihilator dim = ambient dim.
    pub fn annihilator(&self) -> SubspaceQ {
        kernel_basis(&self.basis)
    }

    pub fn sum(&self, other: &SubspaceQ) -> SubspaceQ {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for r in 0..self.dim() {
            rows.push(self.basis.row_vec(r));
        }
        for r in 0..other.dim() {
            rows.push(other.basis.row_vec(r));
        }
        if rows.is_empty() {
            return SubspaceQ::zero(self.ambient);
        }
        SubspaceQ::span_of_rows(&MatrixQ::from_rows(rows).expect("basis rows share a length"))
    }

    /// Via the annihilator lattice identity: (U + W)^0 = U^0 /\ W^0.
    pub fn intersect(&self, other: &SubspaceQ) -> SubspaceQ {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        if v.iter().all(Rational::is_zero) {
            return true;
        }
        solve_any(&self.basis.transpose(), v).is_ok()
    }

    pub fn contains(&self, other: &SubspaceQ) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        self.sum(other) == *self
    }

    /// True iff self + other is direct and spans the whole ambient space.
    pub fn is_complement_of(&self, other: &SubspaceQ) -> bool {
        self.dim() + other.dim() == self.ambient && self.sum(other).is_full()
    }
}

impl std::fmt::Debug for SubspaceQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SubspaceQ(dim {} of Q^{}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

/// Canonical basis of {x : Mx = 0}.
pub fn kernel_basis(m: &MatrixQ) -> SubspaceQ {
    let reduced = m.rref();
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &reduced.pivots {
        is_pivot[p] = true;
    }
    let mut vectors = Vec::with_capacity(n - reduced.rank);
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::one();
        for (row, &p) in reduced.pivots.iter().enumerate() {
            v[p] = -reduced.matrix.at(row, free);
        }
        vectors.push(v);
    }
    SubspaceQ::span_of_vectors(n, &vectors).expect("kernel vectors have ambient length")
}

/// Canonical basis of the column space; dim = rank.
pub fn column_space_basis(m: &MatrixQ) -> SubspaceQ {
    SubspaceQ::span_of_rows(&m.transpose())
}
