//! Smooth symmetric bilinear forms and pseudo-metrics.
//!
//! A symmetric form `<v|w> = v^t A w` is smooth for the modeled diffeology
//! iff the characteristic subspace lies in the kernel of `A`. A
//! pseudo-metric is a smooth form that is as non-degenerate as smoothness
//! allows: positive semidefinite with kernel exactly `C`, i.e. exact inertia
//! `(n - dim C, 0, dim C)`.

use std::fmt;

use crate::dual::dual_basis;
use crate::error::Error;
use crate::exactlin::{symmetric_inertia, Inertia, MatrixQ, Rational};
use crate::space::DiffSpace;

/// A symmetric bilinear form with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearFormQ {
    matrix: MatrixQ,
}

impl BilinearFormQ {
    pub fn new(matrix: MatrixQ) -> Result<Self, Error> {
        if !matrix.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(BilinearFormQ { matrix })
    }

    pub fn matrix(&self) -> &MatrixQ {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `v^t A w`.
    pub fn evaluate(&self, v: &[Rational], w: &[Rational]) -> Rational {
        let aw = self.matrix.mul_vec(w);
        v.iter().zip(&aw).map(|(a, b)| a * b).sum()
    }
}

/// Whether `v^t A w` is smooth for the space's diffeology: true iff `A`
/// kills every basis vector of the characteristic subspace.
pub fn is_smooth_form(space: &DiffSpace, a: &MatrixQ) -> Result<bool, Error> {
    check_shape(space, a)?;
    let c = space.characteristic_subspace();
    for i in 0..c.dim() {
        if a.mul_vec(c.basis_row(i)).iter().any(|x| !x.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Basis of the linear space of all smooth symmetric forms.
///
/// With `F` the canonical dual basis the space is `{F^t X F : X symmetric}`,
/// so the basis has k(k+1)/2 members, `k = dim V*`.
pub fn smooth_form_space(space: &DiffSpace) -> Vec<MatrixQ> {
    let basis = dual_basis(space);
    let k = basis.dim();
    let f = basis.matrix();
    let n = space.dimension();
    let mut out = Vec::with_capacity(k * (k + 1) / 2);
    for i in 0..k {
        for j in i..k {
            let mut m = MatrixQ::zeros(n, n);
            for r in 0..n {
                for c in 0..n {
                    // f_i (x) f_j, symmetrized for i != j.
                    let mut v = &f.row(i)[r] * &f.row(j)[c];
                    if i != j {
                        v += &f.row(j)[r] * &f.row(i)[c];
                    }
                    m.set(r, c, v);
                }
            }
            out.push(m);
        }
    }
    out
}

/// The distinguished pseudo-metric `F^t F`, the coordinate sum of squares of
/// the canonical dual basis functionals.
///
/// Positive semidefinite with kernel exactly the characteristic subspace;
/// when the dual is zero this is the zero form, the unique pseudo-metric of
/// such a space.
pub fn canonical_pseudo_metric(space: &DiffSpace) -> BilinearFormQ {
    let f = dual_basis(space);
    let m = f.matrix().transpose().matmul(f.matrix());
    BilinearFormQ::new(m).expect("F^t F is symmetric")
}

/// Exact inertia every pseudo-metric on the space must have.
pub fn expected_pseudo_metric_inertia(space: &DiffSpace) -> Inertia {
    let c = space.characteristic_subspace().dim();
    Inertia::new(space.dimension() - c, 0, c)
}

/// Outcome of the pseudo-metric test, with the first failed condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PseudoMetricVerdict {
    PseudoMetric,
    /// The form does not kill the characteristic subspace.
    NotSmooth,
    /// Smooth, but the inertia is not `(n - dim C, 0, dim C)`.
    WrongInertia {
        found: Inertia,
        expected: Inertia,
    },
}

impl PseudoMetricVerdict {
    pub fn is_pseudo_metric(&self) -> bool {
        matches!(self, PseudoMetricVerdict::PseudoMetric)
    }
}

impl fmt::Display for PseudoMetricVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PseudoMetricVerdict::PseudoMetric => write!(f, "pseudo-metric"),
            PseudoMetricVerdict::NotSmooth => write!(f, "form not smooth"),
            PseudoMetricVerdict::WrongInertia { found, expected } => {
                write!(f, "inertia {found} differs from the required {expected}")
            }
        }
    }
}

/// Full pseudo-metric test: smooth, positive semidefinite, kernel exactly
/// the characteristic subspace. The three conditions collapse to an exact
/// inertia comparison once smoothness holds.
pub fn classify_pseudo_metric(
    space: &DiffSpace,
    a: &MatrixQ,
) -> Result<PseudoMetricVerdict, Error> {
    check_shape(space, a)?;
    if !is_smooth_form(space, a)? {
        return Ok(PseudoMetricVerdict::NotSmooth);
    }
    let found = symmetric_inertia(a)?;
    let expected = expected_pseudo_metric_inertia(space);
    if found != expected {
        return Ok(PseudoMetricVerdict::WrongInertia { found, expected });
    }
    Ok(PseudoMetricVerdict::PseudoMetric)
}

pub fn is_pseudo_metric(space: &DiffSpace, a: &MatrixQ) -> Result<bool, Error> {
    Ok(classify_pseudo_metric(space, a)?.is_pseudo_metric())
}

/// Checked degeneracy bound for smooth forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureBound {
    pub inertia: Inertia,
    pub characteristic_dim: usize,
    /// `inertia.zero >= characteristic_dim`; always true for smooth forms,
    /// since their kernel contains the characteristic subspace.
    pub holds: bool,
}

/// Verifies the degeneracy lower bound for a smooth symmetric form: the
/// zero eigenvalue has multiplicity at least `n - dim V* = dim C`.
pub fn signature_lemma_check(space: &DiffSpace, a: &MatrixQ) -> Result<SignatureBound, Error> {
    check_shape(space, a)?;
    if !is_smooth_form(space, a)? {
        return Err(Error::FormNotSmooth);
    }
    let inertia = symmetric_inertia(a)?;
    let characteristic_dim = space.characteristic_subspace().dim();
    Ok(SignatureBound {
        inertia,
        characteristic_dim,
        holds: inertia.zero >= characteristic_dim,
    })
}

fn check_shape(space: &DiffSpace, a: &MatrixQ) -> Result<(), Error> {
    if !a.is_square() || a.rows() != space.dimension() {
        return Err(Error::DimensionMismatch(format!(
            "form is {}x{}, space dimension is {}",
            a.rows(),
            a.cols(),
            space.dimension()
        )));
    }
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{kernel_basis, solve_any};
    use crate::test_support::{e0, e3, e4, q, sample_metric_matrix};

    #[test]
    fn sample_metric_is_smooth() {
        assert!(is_smooth_form(&e3(), &sample_metric_matrix()).unwrap());
    }

    #[test]
    fn identity_is_not_smooth_on_e3() {
        assert!(!is_smooth_form(&e3(), &MatrixQ::identity(3)).unwrap());
    }

    #[test]
    fn zero_form_is_smooth_everywhere() {
        for space in [e3(), e0(), e4()] {
            let n = space.dimension();
            assert!(is_smooth_form(&space, &MatrixQ::zeros(n, n)).unwrap());
        }
    }

    #[test]
    fn smooth_form_rejects_nonsymmetric() {
        let m = MatrixQ::from_i64_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(is_smooth_form(&e3(), &m), Err(Error::NotSymmetric));
    }

    /// The general smooth form on e3: [[c, a, -a], [a, b, -b], [-a, -b, b]].
    fn template(a: i64, b: i64, c: i64) -> MatrixQ {
        MatrixQ::from_i64_rows(&[&[c, a, -a], &[a, b, -b], &[-a, -b, b]])
    }

    #[test]
    fn smooth_form_space_of_e3_matches_template() {
        let basis = smooth_form_space(&e3());
        assert_eq!(basis.len(), 3);
        for m in &basis {
            // Read off the template parameters and compare entrywise.
            let (a, b, c) = (m.at(0, 1), m.at(1, 1), m.at(0, 0));
            let expected = [
                [c.clone(), a.clone(), -a],
                [a.clone(), b.clone(), -b],
                [-a, -b, b.clone()],
            ];
            for r in 0..3 {
                for col in 0..3 {
                    assert_eq!(m.at(r, col), &expected[r][col], "basis member {m:?}");
                }
            }
        }
        // Conversely every template instance is a combination of the basis.
        let target = template(7, -3, 5);
        assert!(in_span(&basis, &target));
        assert!(!in_span(&basis, &MatrixQ::identity(3)));
    }

    /// Membership of a symmetric matrix in the span of a list of symmetric
    /// matrices, decided by flattening to vectors.
    fn in_span(basis: &[MatrixQ], target: &MatrixQ) -> bool {
        let n = target.rows();
        let rows: Vec<Vec<Rational>> = (0..n * n)
            .map(|idx| {
                basis
                    .iter()
                    .map(|m| m.at(idx / n, idx % n).clone())
                    .collect()
            })
            .collect();
        let coeffs = MatrixQ::from_rows(rows).unwrap();
        let flat: Vec<Rational> = (0..n * n)
            .map(|idx| target.at(idx / n, idx % n).clone())
            .collect();
        solve_any(&coeffs, &flat).is_ok()
    }

    #[test]
    fn smooth_form_space_dimensions() {
        assert_eq!(smooth_form_space(&e0()).len(), 3);
        assert_eq!(smooth_form_space(&e4()).len(), 0);
    }

    #[test]
    fn smooth_form_space_members_are_smooth() {
        for space in [e3(), e0(), e4()] {
            for m in smooth_form_space(&space) {
                assert!(m.is_symmetric());
                assert!(is_smooth_form(&space, &m).unwrap());
            }
        }
    }

    #[test]
    fn canonical_pseudo_metric_of_e3() {
        let expected = MatrixQ::from_i64_rows(&[&[1, 0, 0], &[0, 1, -1], &[0, -1, 1]]);
        let canon = canonical_pseudo_metric(&e3());
        assert_eq!(*canon.matrix(), expected);
        assert_eq!(
            kernel_basis(canon.matrix()),
            *e3().characteristic_subspace()
        );
    }

    #[test]
    fn canonical_pseudo_metric_edges() {
        assert_eq!(
            *canonical_pseudo_metric(&e0()).matrix(),
            MatrixQ::identity(2)
        );
        assert_eq!(
            *canonical_pseudo_metric(&e4()).matrix(),
            MatrixQ::zeros(2, 2)
        );
    }

    #[test]
    fn canonical_pseudo_metric_is_pseudo_metric() {
        for space in [e3(), e0(), e4()] {
            let canon = canonical_pseudo_metric(&space);
            assert!(is_pseudo_metric(&space, canon.matrix()).unwrap());
        }
    }

    #[test]
    fn sample_metric_is_pseudo_metric() {
        assert_eq!(
            classify_pseudo_metric(&e3(), &sample_metric_matrix()).unwrap(),
            PseudoMetricVerdict::PseudoMetric
        );
    }

    #[test]
    fn indefinite_template_instance_is_rejected() {
        // a=2, b=c=1: smooth but a^2 > bc, so the inertia picks up a
        // negative direction.
        let bad = template(2, 1, 1);
        let verdict = classify_pseudo_metric(&e3(), &bad).unwrap();
        assert!(matches!(
            verdict,
            PseudoMetricVerdict::WrongInertia { found, .. }
            if found == Inertia::new(1, 1, 1)
        ));
    }

    #[test]
    fn non_smooth_form_is_rejected_first() {
        let verdict = classify_pseudo_metric(&e3(), &MatrixQ::identity(3)).unwrap();
        assert_eq!(verdict, PseudoMetricVerdict::NotSmooth);
        assert_eq!(verdict.to_string(), "form not smooth");
    }

    #[test]
    fn zero_form_is_the_pseudo_metric_when_dual_is_zero() {
        assert!(is_pseudo_metric(&e4(), &MatrixQ::zeros(2, 2)).unwrap());
        assert!(!is_pseudo_metric(&e3(), &MatrixQ::zeros(3, 3)).unwrap());
    }

    #[test]
    fn signature_bound_on_smooth_forms() {
        let res = signature_lemma_check(&e3(), &sample_metric_matrix()).unwrap();
        assert!(res.holds);
        assert_eq!(res.inertia, Inertia::new(2, 0, 1));
        assert_eq!(res.characteristic_dim, 1);

        let zero = signature_lemma_check(&e3(), &MatrixQ::zeros(3, 3)).unwrap();
        assert!(zero.holds);
        assert_eq!(zero.inertia.zero, 3);

        let canon = canonical_pseudo_metric(&e3());
        let c = signature_lemma_check(&e3(), canon.matrix()).unwrap();
        assert!(c.holds);
        assert_eq!(c.inertia.zero, 1);
    }

    #[test]
    fn signature_bound_requires_smoothness() {
        assert_eq!(
            signature_lemma_check(&e3(), &MatrixQ::identity(3)),
            Err(Error::FormNotSmooth)
        );
    }

    #[test]
    fn evaluate_matches_matrix_product() {
        let form = BilinearFormQ::new(sample_metric_matrix()).unwrap();
        let v = [q(2, 3), q(-1, 6), q(1, 6)];
        let w = [q(-1, 3), q(1, 3), q(-1, 3)];
        assert_eq!(form.evaluate(&v, &w), q(-1, 3));
        assert_eq!(form.evaluate(&v, &v), q(2, 3));
    }
}
