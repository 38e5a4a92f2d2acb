//! Dense matrices over `Rational` and exact Gaussian elimination.

use std::fmt;
use std::ops::{Add, Sub};

use crate::error::Error;
use crate::exactlin::rational::Rational;

/// Dense row-major matrix with exact rational entries.
///
/// Dimensions are fixed at construction. Arithmetic helpers panic on shape
/// mismatch; data-dependent failures (inconsistent systems, singular
/// matrices) are reported through `Result` / `Option`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Outcome of reduction to reduced row-echelon form.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: MatrixQ,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows, strictly increasing.
    pub pivots: Vec<usize>,
}

impl MatrixQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixQ {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = MatrixQ::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// 0 x cols matrix; the basis of a zero subspace.
    pub fn empty(cols: usize) -> Self {
        MatrixQ {
            rows: 0,
            cols,
            data: Vec::new(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    ncols
                )));
            }
            data.extend(row);
        }
        Ok(MatrixQ {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Convenience for literals in tests and bundled examples.
    /// Panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        MatrixQ::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Rational::from_int(n)).collect())
                .collect(),
        )
        .expect("ragged literal matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Rational> {
        self.row(r).to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> MatrixQ {
        let mut t = MatrixQ::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for r in 0..self.rows {
            for c in (r + 1)..self.cols {
                if self.at(r, c) != self.at(c, r) {
                    return false;
                }
            }
        }
        true
    }

    pub fn matmul(&self, rhs: &MatrixQ) -> MatrixQ {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = MatrixQ::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = out.at(r, c) + &(a * rhs.at(k, c));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "mul_vec shape mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .map(|(a, x)| a * x)
                    .sum::<Rational>()
            })
            .collect()
    }

    pub fn scale(&self, factor: &Rational) -> MatrixQ {
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    /// Unique reduced row-echelon form: pivots are 1, pivot columns are
    /// cleared above and below, pivot columns strictly increase, zero rows
    /// sink to the bottom.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pivot_row) = (rank..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pivot_row);
            let inv = m.at(rank, col).recip();
            m.scale_row(rank, &inv);
            for r in 0..m.rows {
                if r != rank && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    m.sub_scaled_row(r, rank, &factor);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        Rref {
            matrix: m,
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Gauss-Jordan inverse; `None` for singular input. Panics if not square.
    pub fn inverse(&self) -> Option<MatrixQ> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = MatrixQ::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let reduced = aug.rref();
        if reduced.rank < n || reduced.pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut inv = MatrixQ::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, reduced.matrix.at(r, n + c).clone());
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Rational) {
        for c in 0..self.cols {
            let v = self.at(r, c) * factor;
            self.set(r, c, v);
        }
    }

    /// row[r] -= factor * row[src]
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: &Rational) {
        for c in 0..self.cols {
            let v = self.at(r, c) - &(factor * self.at(src, c));
            self.set(r, c, v);
        }
    }
}

impl Add for &MatrixQ {
    type Output = MatrixQ;
    fn add(self, rhs: &MatrixQ) -> MatrixQ {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &MatrixQ {
    type Output = MatrixQ;
    fn sub(self, rhs: &MatrixQ) -> MatrixQ {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Debug for MatrixQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixQ {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let entries: Vec<String> = self.row(r).iter().map(Rational::to_string).collect();
            writeln!(f, "  [{}]", entries.join(", "))?;
        }
        write!(f, "]")
    }
}

/// One exact solution of `M x = b`, or `Error::NoSolution`.
///
/// Free variables are set to zero, so the answer is deterministic.
pub fn solve_any(m: &MatrixQ, b: &[Rational]) -> Result<Vec<Rational>, Error> {
    solve(m, b, false)
}

/// The unique exact solution of `M x = b`.
///
/// `Error::Ambiguous` when `M` does not have full column rank, even if some
/// solution exists; `Error::NoSolution` when the system is inconsistent.
pub fn solve_unique(m: &MatrixQ, b: &[Rational]) -> Result<Vec<Rational>, Error> {
    solve(m, b, true)
}

fn solve(m: &MatrixQ, b: &[Rational], require_unique: bool) -> Result<Vec<Rational>, Error> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has {} entries, matrix has {} rows",
            b.len(),
            m.rows()
        )));
    }
    let mut aug = MatrixQ::zeros(m.rows(), m.cols() + 1);
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            aug.set(r, c, m.at(r, c).clone());
        }
        aug.set(r, m.cols(), b[r].clone());
    }
    let reduced = aug.rref();
    if reduced.pivots.iter().any(|&p| p == m.cols()) {
        return Err(Error::NoSolution);
    }
    if require_unique && reduced.rank < m.cols() {
        return Err(Error::Ambiguous);
    }
    let mut x = vec![Rational::zero(); m.cols()];
    for (row, &col) in reduced.pivots.iter().enumerate() {
        x[col] = reduced.matrix.at(row, m.cols()).clone();
    }
    Ok(x)
}
