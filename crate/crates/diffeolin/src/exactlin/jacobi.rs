//! Floating-point symmetric eigensolver for reporting.
//!
//! Cyclic Jacobi rotations; exact code never depends on these values, they
//! only appear in human-readable summaries.

use crate::error::Error;
use crate::exactlin::matrix::MatrixQ;

/// Default convergence threshold for the off-diagonal Frobenius norm.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Sweep budget; symmetric input converges far earlier.
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues below this magnitude are reported as exactly zero in
/// summaries.
pub const ZERO_EIGENVALUE_EPS: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct SymmetricEigen {
    /// Sorted in descending order.
    pub values: Vec<f64>,
    /// `vectors[i]` is the unit eigenvector paired with `values[i]`; the
    /// vectors are mutually orthonormal.
    pub vectors: Vec<Vec<f64>>,
}

impl SymmetricEigen {
    /// Eigenvalues with magnitudes below [`ZERO_EIGENVALUE_EPS`] clamped to
    /// zero, for display.
    pub fn values_for_display(&self) -> Vec<f64> {
        self.values
            .iter()
            .map(|&v| {
                if v.abs() < ZERO_EIGENVALUE_EPS {
                    0.0
                } else {
                    v
                }
            })
            .collect()
    }
}

/// Eigen-decomposition of a symmetric rational matrix in f64 arithmetic.
///
/// Rotations are applied in cyclic sweeps until the off-diagonal Frobenius
/// norm drops below `tol`.
pub fn jacobi_eigen(a: &MatrixQ, tol: f64) -> Result<SymmetricEigen, Error> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    assert!(tol > 0.0, "tolerance must be positive");
    let n = a.rows();
    let mut m: Vec<Vec<f64>> = (0..n)
        .map(|r| (0..n).map(|c| a.at(r, c).to_f64()).collect())
        .collect();
    // Accumulated rotations; column j will be the eigenvector of m's j-th
    // diagonal entry.
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }

    let mut converged = off_diagonal_norm(&m) < tol;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                if m[p][q] == 0.0 {
                    continue;
                }
                rotate(&mut m, &mut v, p, q);
            }
        }
        converged = off_diagonal_norm(&m) < tol;
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[j][j].partial_cmp(&m[i][i]).expect("finite eigenvalues"));
    let values = order.iter().map(|&i| m[i][i]).collect();
    let vectors = order
        .iter()
        .map(|&j| (0..n).map(|r| v[r][j]).collect())
        .collect();
    Ok(SymmetricEigen { values, vectors })
}

fn off_diagonal_norm(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += m[i][j] * m[i][j];
            }
        }
    }
    sum.sqrt()
}

/// One Jacobi rotation annihilating m[p][q], accumulated into v.
fn rotate(m: &mut [Vec<f64>], v: &mut [Vec<f64>], p: usize, q: usize) {
    let n = m.len();
    let apq = m[p][q];
    let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
    let t = if theta >= 0.0 {
        1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        -1.0 / (-theta + (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);

    let (app, aqq) = (m[p][p], m[q][q]);
    m[p][p] = app - t * apq;
    m[q][q] = aqq + t * apq;
    m[p][q] = 0.0;
    m[q][p] = 0.0;
    for i in 0..n {
        if i == p || i == q {
            continue;
        }
        let (aip, aiq) = (m[i][p], m[i][q]);
        m[i][p] = aip - s * (aiq + tau * aip);
        m[p][i] = m[i][p];
        m[i][q] = aiq + s * (aip - tau * aiq);
        m[q][i] = m[i][q];
    }
    for row in v.iter_mut() {
        let (vip, viq) = (row[p], row[q]);
        row[p] = vip - s * (viq + tau * vip);
        row[q] = viq + s * (vip - tau * viq);
    }
}
