//! The diffeological dual and the pairing map induced by a smooth form.
//!
//! The dual `V*` consists of the linear functionals that compose smoothly
//! with every plot; for the modeled class that is exactly the annihilator of
//! the characteristic subspace. Its functional diffeology is standard, so
//! functionals are represented by plain coordinate tuples in the canonical
//! basis below.

use crate::error::Error;
use crate::exactlin::{solve_unique, MatrixQ, Rational};
use crate::forms::{classify_pseudo_metric, is_smooth_form, BilinearFormQ};
use crate::space::DiffSpace;

/// Canonical basis of the diffeological dual.
///
/// The rows are the reduced row-echelon basis of the annihilator of `C`, as
/// row covectors; this basis depends only on the space, never on a choice of
/// pseudo-metric, and all dual coordinates in this crate refer to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasis {
    rows: MatrixQ,
}

impl DualBasis {
    /// k x n matrix; row i is the i-th basis functional.
    pub fn matrix(&self) -> &MatrixQ {
        &self.rows
    }

    /// k = dim V*.
    pub fn dim(&self) -> usize {
        self.rows.rows()
    }

    pub fn functional(&self, i: usize) -> &[Rational] {
        self.rows.row(i)
    }

    /// Applies the i-th basis functional to a vector.
    pub fn apply(&self, i: usize, v: &[Rational]) -> Rational {
        self.rows.row(i).iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

/// The canonical basis of {phi linear : phi vanishes on C} = V*.
pub fn dual_basis(space: &DiffSpace) -> DualBasis {
    let ann = space.characteristic_subspace().annihilator();
    DualBasis {
        rows: ann.basis().clone(),
    }
}

/// The pairing map of a smooth symmetric form: sends `v` to the coordinates
/// of the functional `w -> <w|v>` in the canonical dual basis.
///
/// That functional is the covector `(A v)^t`; its coordinates are the unique
/// `c` with `F^t c = A v`, which exists because every row of a smooth form
/// lies in the row span of `F`.
pub fn psi(
    space: &DiffSpace,
    form: &BilinearFormQ,
    v: &[Rational],
) -> Result<Vec<Rational>, Error> {
    if !is_smooth_form(space, form.matrix())? {
        return Err(Error::FormNotSmooth);
    }
    if v.len() != space.dimension() {
        return Err(Error::DimensionMismatch(format!(
            "vector has {} entries, space dimension is {}",
            v.len(),
            space.dimension()
        )));
    }
    let basis = dual_basis(space);
    let image = form.matrix().mul_vec(v);
    // Rows of a smooth form lie in the row span of the dual basis, and the
    // basis has full row rank, so this system is consistent with a unique
    // solution.
    Ok(solve_unique(&basis.matrix().transpose(), &image)
        .expect("smooth form image lies in the dual row span"))
}

/// Inverse of the pairing map on the standard summand.
///
/// For a pseudo-metric the pairing restricts to a bijection between the
/// column space of the form and `V*`; this returns the unique preimage of
/// the functional with canonical coordinates `coords` inside that column
/// space.
pub fn psi_inverse_on_standard_part(
    space: &DiffSpace,
    form: &BilinearFormQ,
    coords: &[Rational],
) -> Result<Vec<Rational>, Error> {
    let verdict = classify_pseudo_metric(space, form.matrix())?;
    if !verdict.is_pseudo_metric() {
        return Err(Error::NotPseudoMetric(verdict.to_string()));
    }
    let basis = dual_basis(space);
    if coords.len() != basis.dim() {
        return Err(Error::DimensionMismatch(format!(
            "dual coordinates have {} entries, dual dimension is {}",
            coords.len(),
            basis.dim()
        )));
    }
    // Solve A (B^t y) = F^t c for y; the standard-part basis B makes the
    // system uniquely solvable because the form is definite there.
    let standard_part = crate::exactlin::column_space_basis(form.matrix());
    let rhs = basis.matrix().transpose().mul_vec(coords);
    let coeff = form.matrix().matmul(&standard_part.basis().transpose());
    let y = solve_unique(&coeff, &rhs).expect("pseudo-metric pairing is bijective on V0");
    Ok(standard_part.basis().transpose().mul_vec(&y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::canonical_pseudo_metric;
    use crate::test_support::{e0, e3, e4, q, qv, sample_metric_matrix, span};

    fn sample_form() -> BilinearFormQ {
        BilinearFormQ::new(sample_metric_matrix()).unwrap()
    }

    #[test]
    fn dual_basis_of_e3() {
        let basis = dual_basis(&e3());
        assert_eq!(basis.dim(), 2);
        assert_eq!(
            *basis.matrix(),
            MatrixQ::from_i64_rows(&[&[1, 0, 0], &[0, 1, -1]])
        );
    }

    #[test]
    fn dual_basis_of_fine_space_is_identity() {
        let basis = dual_basis(&e0());
        assert_eq!(basis.dim(), 2);
        assert_eq!(*basis.matrix(), MatrixQ::identity(2));
    }

    #[test]
    fn dual_basis_can_be_empty() {
        let basis = dual_basis(&e4());
        assert_eq!(basis.dim(), 0);
        assert_eq!(basis.matrix().rows(), 0);
        assert_eq!(basis.matrix().cols(), 2);
    }

    #[test]
    fn dual_dimension_complements_characteristic() {
        for space in [e3(), e0(), e4()] {
            assert_eq!(
                dual_basis(&space).dim() + space.characteristic_subspace().dim(),
                space.dimension()
            );
        }
    }

    #[test]
    fn pairing_of_known_preimage() {
        let space = e3();
        let v = vec![q(2, 3), q(-1, 6), q(1, 6)];
        assert_eq!(psi(&space, &sample_form(), &v).unwrap(), qv(&[1, 0]));
    }

    #[test]
    fn pairing_kills_kernel_vectors() {
        let space = e3();
        assert_eq!(
            psi(&space, &sample_form(), &qv(&[0, 1, 1])).unwrap(),
            qv(&[0, 0])
        );
    }

    #[test]
    fn pairing_under_canonical_form() {
        let space = e3();
        let canon = canonical_pseudo_metric(&space);
        assert_eq!(psi(&space, &canon, &qv(&[1, 0, 0])).unwrap(), qv(&[1, 0]));
    }

    #[test]
    fn pairing_rejects_non_smooth_form() {
        let space = e3();
        let id = BilinearFormQ::new(MatrixQ::identity(3)).unwrap();
        assert_eq!(psi(&space, &id, &qv(&[1, 0, 0])), Err(Error::FormNotSmooth));
    }

    #[test]
    fn inverse_pairing_reproduces_known_values() {
        let space = e3();
        let form = sample_form();
        assert_eq!(
            psi_inverse_on_standard_part(&space, &form, &qv(&[1, 0])).unwrap(),
            vec![q(2, 3), q(-1, 6), q(1, 6)]
        );
        assert_eq!(
            psi_inverse_on_standard_part(&space, &form, &qv(&[0, 1])).unwrap(),
            vec![q(-1, 3), q(1, 3), q(-1, 3)]
        );
    }

    #[test]
    fn inverse_pairing_on_fine_space_embeds_coordinates() {
        let space = e0();
        let form = BilinearFormQ::new(MatrixQ::identity(2)).unwrap();
        let c = vec![q(3, 7), q(-2, 5)];
        assert_eq!(psi_inverse_on_standard_part(&space, &form, &c).unwrap(), c);
    }

    #[test]
    fn inverse_pairing_requires_pseudo_metric() {
        let space = e3();
        let zero = BilinearFormQ::new(MatrixQ::zeros(3, 3)).unwrap();
        assert!(matches!(
            psi_inverse_on_standard_part(&space, &zero, &qv(&[0, 0])),
            Err(Error::NotPseudoMetric(_))
        ));
    }

    #[test]
    fn round_trips() {
        let space = e3();
        let form = sample_form();
        // psi o psi^{-1} = id on dual coordinates.
        for coords in [qv(&[1, 0]), qv(&[0, 1]), vec![q(5, 3), q(-7, 2)]] {
            let v = psi_inverse_on_standard_part(&space, &form, &coords).unwrap();
            assert_eq!(psi(&space, &form, &v).unwrap(), coords);
        }
        // psi^{-1} o psi = id on the standard part.
        let v0 = span(&[&[1, 0, 0], &[0, 1, -1]], 3);
        for i in 0..v0.dim() {
            let v = v0.basis_row(i).to_vec();
            let coords = psi(&space, &form, &v).unwrap();
            assert_eq!(
                psi_inverse_on_standard_part(&space, &form, &coords).unwrap(),
                v
            );
        }
    }

    #[test]
    fn pairing_is_linear() {
        let space = e3();
        let form = sample_form();
        let u = qv(&[1, 2, 3]);
        let v = vec![q(1, 2), q(-1, 3), q(4, 1)];
        let (alpha, beta) = (q(2, 5), q(-3, 1));
        let combo: Vec<Rational> = u
            .iter()
            .zip(&v)
            .map(|(a, b)| &alpha * a + &beta * b)
            .collect();
        let lhs = psi(&space, &form, &combo).unwrap();
        let pu = psi(&space, &form, &u).unwrap();
        let pv = psi(&space, &form, &v).unwrap();
        let rhs: Vec<Rational> = pu
            .iter()
            .zip(&pv)
            .map(|(a, b)| &alpha * a + &beta * b)
            .collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn empty_dual_pairing() {
        let space = e4();
        let zero = BilinearFormQ::new(MatrixQ::zeros(2, 2)).unwrap();
        assert_eq!(
            psi(&space, &zero, &qv(&[1, 1])).unwrap(),
            Vec::<Rational>::new()
        );
        assert_eq!(
            psi_inverse_on_standard_part(&space, &zero, &[]).unwrap(),
            qv(&[0, 0])
        );
    }
}
