//! Exact inertia of symmetric rational matrices.
//!
//! The inertia (counts of positive, negative and zero eigenvalues) is
//! computed by congruence diagonalization, which stays inside the rationals;
//! by Sylvester's law of inertia the sign counts equal the eigenvalue sign
//! counts even though the eigenvalues themselves are usually irrational.

use crate::error::Error;
use crate::exactlin::matrix::MatrixQ;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Inertia {
            positive,
            negative,
            zero,
        }
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    pub fn is_positive_semidefinite(&self) -> bool {
        self.negative == 0
    }

    pub fn is_positive_definite(&self) -> bool {
        self.negative == 0 && self.zero == 0
    }
}

impl std::fmt::Display for Inertia {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.positive, self.negative, self.zero)
    }
}

/// Exact inertia of a symmetric matrix via congruence diagonalization.
///
/// Every step is a congruence E A E^t, so the sign counts of the final
/// diagonal equal those of `a`. A zero pivot with nonzero off-diagonal is
/// repaired by adding the partner row/column, which makes the new diagonal
/// entry 2*a[i][j] != 0.
pub fn symmetric_inertia(a: &MatrixQ) -> Result<Inertia, Error> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = a.rows();
    let mut w = a.clone();
    let mut inertia = Inertia::new(0, 0, 0);
    let mut k = 0;
    while k < n {
        if w.at(k, k).is_zero() {
            if let Some(j) = ((k + 1)..n).find(|&j| !w.at(j, j).is_zero()) {
                congruence_swap(&mut w, k, j);
            } else if let Some((i, j)) = first_offdiagonal(&w, k) {
                // All remaining diagonal entries vanish; e_i <- e_i + e_j
                // produces the diagonal entry 2*w[i][j].
                congruence_add(&mut w, i, j);
                congruence_swap(&mut w, k, i);
            } else {
                inertia.zero += n - k;
                break;
            }
        }
        let pivot = w.at(k, k).clone();
        if pivot.is_positive() {
            inertia.positive += 1;
        } else {
            inertia.negative += 1;
        }
        for i in (k + 1)..n {
            if w.at(i, k).is_zero() {
                continue;
            }
            let factor = w.at(i, k) / &pivot;
            for c in 0..n {
                let v = w.at(i, c) - &(&factor * w.at(k, c));
                w.set(i, c, v);
            }
            for r in 0..n {
                let v = w.at(r, i) - &(&factor * w.at(r, k));
                w.set(r, i, v);
            }
        }
        k += 1;
    }
    Ok(inertia)
}

fn first_offdiagonal(w: &MatrixQ, from: usize) -> Option<(usize, usize)> {
    let n = w.rows();
    for i in from..n {
        for j in (i + 1)..n {
            if !w.at(i, j).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

fn congruence_swap(w: &mut MatrixQ, a: usize, b: usize) {
    if a == b {
        return;
    }
    let n = w.rows();
    for c in 0..n {
        let (x, y) = (w.at(a, c).clone(), w.at(b, c).clone());
        w.set(a, c, y);
        w.set(b, c, x);
    }
    for r in 0..n {
        let (x, y) = (w.at(r, a).clone(), w.at(r, b).clone());
        w.set(r, a, y);
        w.set(r, b, x);
    }
}

/// Row and column update for the basis change e_i <- e_i + e_j.
fn congruence_add(w: &mut MatrixQ, i: usize, j: usize) {
    let n = w.rows();
    for c in 0..n {
        let v = w.at(i, c) + w.at(j, c);
        w.set(i, c, v);
    }
    for r in 0..n {
        let v = w.at(r, i) + w.at(r, j);
        w.set(r, i, v);
    }
}
