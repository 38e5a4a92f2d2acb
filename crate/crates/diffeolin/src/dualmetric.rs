//! The true metric induced on the dual by a pseudo-metric, and its inverse
//! construction.
//!
//! Pushing a pseudo-metric forward along the pairing map gives a positive
//! definite form on `V*`; conversely every positive definite form on `V*`
//! arises this way. Both directions stay inside the rationals: with `F` the
//! canonical dual basis, the pushforward of `A = F^t G F` is `G^{-1}`, and
//! the pullback of `B` is `F^t B^{-1} F`.

use crate::dual::{dual_basis, psi_inverse_on_standard_part};
use crate::error::Error;
use crate::exactlin::{symmetric_inertia, MatrixQ, Rational};
use crate::forms::{classify_pseudo_metric, BilinearFormQ};
use crate::space::DiffSpace;

/// A symmetric form on the dual, expressed in the canonical dual basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualMetricQ {
    matrix: MatrixQ,
}

impl DualMetricQ {
    pub fn new(matrix: MatrixQ) -> Result<Self, Error> {
        if !matrix.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(DualMetricQ { matrix })
    }

    pub fn matrix(&self) -> &MatrixQ {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// Pushforward of a pseudo-metric to the dual.
///
/// Entry (i, j) is the pseudo-metric evaluated on the pairing preimages of
/// the i-th and j-th canonical dual functionals. The closed form `G^{-1}`
/// (where `A = F^t G F`) is computed alongside as a cross-check; the two
/// routes agree identically, so a mismatch is a bug, not an input error.
pub fn induced_dual_metric(space: &DiffSpace, form: &BilinearFormQ) -> Result<DualMetricQ, Error> {
    let via_pairing = induced_dual_metric_via_pairing(space, form)?;
    let closed = induced_dual_metric_closed_form(space, form)?;
    assert_eq!(
        via_pairing, closed,
        "pairing and closed-form pushforwards disagree"
    );
    Ok(via_pairing)
}

/// Pushforward computed through the pairing map alone.
pub fn induced_dual_metric_via_pairing(
    space: &DiffSpace,
    form: &BilinearFormQ,
) -> Result<DualMetricQ, Error> {
    require_pseudo_metric(space, form)?;
    let k = dual_basis(space).dim();
    let preimages: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            let mut coords = vec![Rational::zero(); k];
            coords[i] = Rational::one();
            psi_inverse_on_standard_part(space, form, &coords)
        })
        .collect::<Result<_, _>>()?;
    let mut m = MatrixQ::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let v = form.evaluate(&preimages[i], &preimages[j]);
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    DualMetricQ::new(m)
}

/// Pushforward computed by the closed form: `A = F^t G F` solved for `G`,
/// then inverted.
pub fn induced_dual_metric_closed_form(
    space: &DiffSpace,
    form: &BilinearFormQ,
) -> Result<DualMetricQ, Error> {
    require_pseudo_metric(space, form)?;
    let f = dual_basis(space);
    let g = middle_factor(form.matrix(), &f);
    let inv = g
        .inverse()
        .expect("the middle factor of a pseudo-metric is invertible");
    DualMetricQ::new(inv)
}

/// Solves `A = F^t G F` for the unique symmetric `G`: with `F` of full row
/// rank, `G = (F F^t)^{-1} F A F^t (F F^t)^{-1}`.
fn middle_factor(a: &MatrixQ, f: &crate::dual::DualBasis) -> MatrixQ {
    let fm = f.matrix();
    let gram_inv = fm
        .matmul(&fm.transpose())
        .inverse()
        .expect("dual basis rows are independent");
    let g = gram_inv
        .matmul(fm)
        .matmul(a)
        .matmul(&fm.transpose())
        .matmul(&gram_inv);
    debug_assert_eq!(fm.transpose().matmul(&g).matmul(fm), *a);
    g
}

/// Pullback of a positive definite form on the dual: `A = F^t B^{-1} F`.
///
/// This realizes the sum-of-squares construction over a `B`-orthonormal
/// basis without leaving the rationals, and `induced_dual_metric` returns
/// exactly `B` again.
pub fn pseudo_metric_from_dual_metric(
    space: &DiffSpace,
    b: &MatrixQ,
) -> Result<BilinearFormQ, Error> {
    let f = dual_basis(space);
    let k = f.dim();
    if !b.is_square() || b.rows() != k {
        return Err(Error::DimensionMismatch(format!(
            "dual metric is {}x{}, dual dimension is {}",
            b.rows(),
            b.cols(),
            k
        )));
    }
    if !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !symmetric_inertia(b)?.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let b_inv = b.inverse().expect("positive definite matrices invert");
    let a = f.matrix().transpose().matmul(&b_inv).matmul(f.matrix());
    BilinearFormQ::new(a)
}

/// A smooth metric on the dual is exactly a symmetric positive definite
/// k x k matrix, the dual carrying the standard diffeology.
pub fn is_smooth_dual_metric(space: &DiffSpace, b: &MatrixQ) -> bool {
    let k = dual_basis(space).dim();
    b.is_square()
        && b.rows() == k
        && b.is_symmetric()
        && symmetric_inertia(b)
            .map(|i| i.is_positive_definite())
            .unwrap_or(false)
}

fn require_pseudo_metric(space: &DiffSpace, form: &BilinearFormQ) -> Result<(), Error> {
    let verdict = classify_pseudo_metric(space, form.matrix())?;
    if !verdict.is_pseudo_metric() {
        return Err(Error::NotPseudoMetric(verdict.to_string()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::canonical_pseudo_metric;
    use crate::sampling::Sampler;
    use crate::test_support::{e0, e3, e4, q, sample_metric_matrix};

    fn sample_form() -> BilinearFormQ {
        BilinearFormQ::new(sample_metric_matrix()).unwrap()
    }

    fn expected_dual_metric() -> MatrixQ {
        MatrixQ::from_rows(vec![vec![q(2, 3), q(-1, 3)], vec![q(-1, 3), q(2, 3)]]).unwrap()
    }

    #[test]
    fn pushforward_of_sample_metric() {
        let space = e3();
        let m = induced_dual_metric(&space, &sample_form()).unwrap();
        assert_eq!(*m.matrix(), expected_dual_metric());
    }

    #[test]
    fn both_routes_agree_on_the_sample_metric() {
        let space = e3();
        let form = sample_form();
        let a = induced_dual_metric_via_pairing(&space, &form).unwrap();
        let b = induced_dual_metric_closed_form(&space, &form).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn pushforward_of_canonical_metric_is_identity() {
        let space = e3();
        let canon = canonical_pseudo_metric(&space);
        let m = induced_dual_metric(&space, &canon).unwrap();
        assert_eq!(*m.matrix(), MatrixQ::identity(2));
    }

    #[test]
    fn pushforward_on_fine_space() {
        let space = e0();
        let id = BilinearFormQ::new(MatrixQ::identity(2)).unwrap();
        let m = induced_dual_metric(&space, &id).unwrap();
        assert_eq!(*m.matrix(), MatrixQ::identity(2));
    }

    #[test]
    fn pushforward_rejects_non_pseudo_metrics() {
        let id = BilinearFormQ::new(MatrixQ::identity(3)).unwrap();
        assert!(matches!(
            induced_dual_metric(&e3(), &id),
            Err(Error::NotPseudoMetric(_))
        ));
    }

    #[test]
    fn pullback_of_identity_is_the_canonical_metric() {
        let space = e3();
        let a = pseudo_metric_from_dual_metric(&space, &MatrixQ::identity(2)).unwrap();
        assert_eq!(a, canonical_pseudo_metric(&space));
    }

    #[test]
    fn pullback_of_the_expected_metric_is_the_sample_form() {
        let space = e3();
        let a = pseudo_metric_from_dual_metric(&space, &expected_dual_metric()).unwrap();
        assert_eq!(*a.matrix(), sample_metric_matrix());
    }

    #[test]
    fn pullback_on_fine_space_inverts() {
        let space = e0();
        let b = MatrixQ::from_i64_rows(&[&[2, 1], &[1, 2]]);
        let a = pseudo_metric_from_dual_metric(&space, &b).unwrap();
        assert_eq!(*a.matrix(), b.inverse().unwrap());
    }

    #[test]
    fn pullback_rejects_bad_inputs() {
        let space = e3();
        assert_eq!(
            pseudo_metric_from_dual_metric(&space, &MatrixQ::from_i64_rows(&[&[1, 2], &[2, 1]])),
            Err(Error::NotPositiveDefinite)
        );
        assert!(matches!(
            pseudo_metric_from_dual_metric(&space, &MatrixQ::identity(3)),
            Err(Error::DimensionMismatch(_))
        ));
        assert_eq!(
            pseudo_metric_from_dual_metric(&space, &MatrixQ::from_i64_rows(&[&[1, 1], &[0, 1]])),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn smooth_dual_metric_predicate() {
        let space = e3();
        assert!(is_smooth_dual_metric(&space, &expected_dual_metric()));
        assert!(!is_smooth_dual_metric(
            &space,
            &MatrixQ::from_i64_rows(&[&[1, 2], &[2, 1]])
        ));
        assert!(!is_smooth_dual_metric(
            &space,
            &MatrixQ::from_i64_rows(&[&[1, 1], &[0, 1]])
        ));
        assert!(!is_smooth_dual_metric(&space, &MatrixQ::identity(3)));
    }

    #[test]
    fn zero_dual_edge_case() {
        let space = e4();
        let zero_form = BilinearFormQ::new(MatrixQ::zeros(2, 2)).unwrap();
        let m = induced_dual_metric(&space, &zero_form).unwrap();
        assert_eq!(m.dim(), 0);
        assert!(is_smooth_dual_metric(&space, m.matrix()));
        let back = pseudo_metric_from_dual_metric(&space, m.matrix()).unwrap();
        assert_eq!(back, zero_form);
    }

    #[test]
    fn round_trips_on_sampled_spaces() {
        let mut sampler = Sampler::new(17);
        for _ in 0..30 {
            let space = sampler.space(5);
            let pm = sampler.pseudo_metric(&space);
            let pushed = induced_dual_metric(&space, &pm).unwrap();
            assert!(is_smooth_dual_metric(&space, pushed.matrix()));
            let back = pseudo_metric_from_dual_metric(&space, pushed.matrix()).unwrap();
            assert_eq!(back, pm);

            let b = sampler.positive_definite(space.dual_dim());
            let pulled = pseudo_metric_from_dual_metric(&space, &b).unwrap();
            let again = induced_dual_metric(&space, &pulled).unwrap();
            assert_eq!(*again.matrix(), b);
        }
    }

    #[test]
    fn pushforward_ignores_kernel_perturbations_of_preimages() {
        // Well-definedness: moving a preimage along the kernel leaves the
        // evaluation unchanged.
        let form = sample_form();
        let u = [q(2, 3), q(-1, 6), q(1, 6)];
        let w = [q(-1, 3), q(1, 3), q(-1, 3)];
        let shift = q(5, 2);
        let u_shifted: Vec<Rational> = u
            .iter()
            .zip([q(0, 1), shift.clone(), shift].iter())
            .map(|(a, b)| a + b)
            .collect();
        assert_eq!(form.evaluate(&u_shifted, &w), form.evaluate(&u, &w));
    }
}
