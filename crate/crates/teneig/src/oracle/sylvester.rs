//! Sylvester matrix of the two binary forms (A x^{m-1})_1, (A x^{m-1})_2 and
//! a scaled pivoting determinant for its desk-scale evaluations.

use crate::error::{Result, TensorError};
use crate::tensor::SymmetricTensor;
use nalgebra::DMatrix;

/// Coefficient tables of the pair of degree-(m-1) binary forms.
///
/// f1 = sum_j c[j] x1^{m-1-j} x2^j and f2 = sum_j e[j] x1^{m-1-j} x2^j.
/// The eigenvalue parameter enters as -lambda at c[0] and e[m-1], the
/// coefficients of x1^{m-1} in f1 and x2^{m-1} in f2.
#[derive(Debug, Clone)]
pub struct BinaryFormPair {
    pub degree: usize,
    pub f1: Vec<f64>,
    pub f2: Vec<f64>,
}

fn binomial(n: usize, k: usize) -> u64 {
    let mut out = 1u64;
    for j in 1..=k {
        out = out * (n - k + j) as u64 / j as u64;
    }
    out
}

/// Collect (A x^{m-1})_1 and (A x^{m-1})_2 as binary forms. n = 2 only.
pub fn binary_forms(t: &SymmetricTensor) -> Result<BinaryFormPair> {
    if t.dim() != 2 {
        return Err(TensorError::UnsupportedDimension(t.dim()));
    }
    let m = t.order();
    let mut f1 = vec![0.0; m];
    let mut f2 = vec![0.0; m];
    for j in 0..m {
        // c_j multiplies x1^{m-1-j} x2^j; the orbit has (m-j) ones, j twos
        let mut idx = vec![1usize; m - j];
        idx.extend(std::iter::repeat(2).take(j));
        f1[j] = binomial(m - 1, j) as f64 * t.value(&idx)?;
        // e_j: orbit with (m-1-j) ones, (j+1) twos
        let mut idx = vec![1usize; m - 1 - j];
        idx.extend(std::iter::repeat(2).take(j + 1));
        f2[j] = binomial(m - 1, j) as f64 * t.value(&idx)?;
    }
    Ok(BinaryFormPair {
        degree: m - 1,
        f1,
        f2,
    })
}

/// The 2(m-1) x 2(m-1) Sylvester matrix of (f1 - lambda x1^{m-1},
/// f2 - lambda x2^{m-1}): shifted copies of the two coefficient rows.
pub fn sylvester_matrix(forms: &BinaryFormPair, lambda: f64) -> DMatrix<f64> {
    let m = forms.degree + 1;
    let size = 2 * (m - 1);
    let mut c = forms.f1.clone();
    let mut e = forms.f2.clone();
    c[0] -= lambda;
    e[m - 1] -= lambda;
    let mut s = DMatrix::zeros(size, size);
    for i in 0..m - 1 {
        for j in 0..m {
            s[(i, i + j)] = c[j];
            s[(m - 1 + i, i + j)] = e[j];
        }
    }
    s
}

/// Determinant by partial-pivot elimination with full row scaling.
/// Exact zeros short-circuit to 0 so singular inputs stay clean.
pub fn lu_det(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    let mut m = a.clone();
    let mut det = 1.0;
    for i in 0..n {
        let scale = (0..n).map(|j| m[(i, j)].abs()).fold(0.0, f64::max);
        if scale == 0.0 {
            return 0.0;
        }
        for j in 0..n {
            m[(i, j)] /= scale;
        }
        det *= scale;
    }
    for k in 0..n {
        let mut p = k;
        for r in k + 1..n {
            if m[(r, k)].abs() > m[(p, k)].abs() {
                p = r;
            }
        }
        if m[(p, k)] == 0.0 {
            return 0.0;
        }
        if p != k {
            m.swap_rows(p, k);
            det = -det;
        }
        det *= m[(k, k)];
        for r in k + 1..n {
            let f = m[(r, k)] / m[(k, k)];
            for j in k + 1..n {
                m[(r, j)] -= f * m[(k, j)];
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::SymmetricTensor;

    #[test]
    fn forms_of_quartic_diag() {
        let t = SymmetricTensor::from_unique_entries(
            4,
            2,
            &[(vec![1, 1, 1, 1], 1.1), (vec![2, 2, 2, 2], 1.0)],
        )
        .unwrap();
        let f = binary_forms(&t).unwrap();
        assert_eq!(f.f1, vec![1.1, 0.0, 0.0, 0.0]);
        assert_eq!(f.f2, vec![0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn forms_of_quartic_coupled() {
        // f1 = 12 x1^3 - 6 x1 x2^2, f2 = -6 x1^2 x2 + 10 x2^3
        let t = SymmetricTensor::from_unique_entries(
            4,
            2,
            &[
                (vec![1, 1, 1, 1], 12.0),
                (vec![1, 1, 2, 2], -2.0),
                (vec![2, 2, 2, 2], 10.0),
            ],
        )
        .unwrap();
        let f = binary_forms(&t).unwrap();
        assert_eq!(f.f1, vec![12.0, 0.0, -6.0, 0.0]);
        assert_eq!(f.f2, vec![0.0, -6.0, 0.0, 10.0]);
    }

    #[test]
    fn forms_of_sextic_coupled() {
        // f1 = 10 x1^5 + 52 x1^3 x2^2 - 8 x1 x2^4, f2 = 26 x1^4 x2 - 16 x1^2 x2^3 + 8 x2^5
        let t = SymmetricTensor::from_unique_entries(
            6,
            2,
            &[
                (vec![1, 1, 1, 1, 1, 1], 10.0),
                (vec![1, 1, 1, 1, 2, 2], 5.2),
                (vec![1, 1, 2, 2, 2, 2], -1.6),
                (vec![2, 2, 2, 2, 2, 2], 8.0),
            ],
        )
        .unwrap();
        let f = binary_forms(&t).unwrap();
        assert_eq!(f.f1, vec![10.0, 0.0, 52.0, 0.0, -8.0, 0.0]);
        assert_eq!(f.f2, vec![0.0, 26.0, 0.0, -16.0, 0.0, 8.0]);
    }

    #[test]
    fn rejects_higher_dimension() {
        let t = SymmetricTensor::identity(4, 3);
        assert!(matches!(
            binary_forms(&t),
            Err(TensorError::UnsupportedDimension(3))
        ));
    }

    #[test]
    fn identity_determinant_is_one() {
        for m in 2..=8 {
            let t = SymmetricTensor::identity(m, 2);
            let f = binary_forms(&t).unwrap();
            let det = lu_det(&sylvester_matrix(&f, 0.0));
            assert!((det - 1.0).abs() < 1e-10, "m={m}: det={det}");
        }
    }

    #[test]
    fn eigenvalue_makes_matrix_singular() {
        let t = SymmetricTensor::from_unique_entries(
            4,
            2,
            &[(vec![1, 1, 1, 1], 1.1), (vec![2, 2, 2, 2], 1.0)],
        )
        .unwrap();
        let f = binary_forms(&t).unwrap();
        let det = lu_det(&sylvester_matrix(&f, 1.0));
        assert!(det.abs() < 1e-12, "det at eigenvalue: {det}");
        let det = lu_det(&sylvester_matrix(&f, 0.5));
        assert!(det.abs() > 1e-3);
    }

    #[test]
    fn matrix_layout_matches_shifted_rows() {
        let forms = BinaryFormPair {
            degree: 3,
            f1: vec![1.0, 2.0, 3.0, 4.0],
            f2: vec![5.0, 6.0, 7.0, 8.0],
        };
        let s = sylvester_matrix(&forms, 0.5);
        assert_eq!(s.nrows(), 6);
        assert_eq!(s[(0, 0)], 0.5); // c0 - lambda
        assert_eq!(s[(1, 1)], 0.5);
        assert_eq!(s[(0, 3)], 4.0);
        assert_eq!(s[(1, 0)], 0.0);
        assert_eq!(s[(3, 0)], 5.0);
        assert_eq!(s[(3, 3)], 7.5); // e3 - lambda
        assert_eq!(s[(5, 5)], 7.5);
    }

    #[test]
    fn lu_det_matches_closed_forms() {
        let m = DMatrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]);
        assert!((lu_det(&m) - 3.0).abs() < 1e-14);
        let m = DMatrix::from_row_slice(3, 3, &[4.0, 0.0, 0.0, 0.0, 3.0, 0.0, 0.0, 0.0, 0.5]);
        assert!((lu_det(&m) - 6.0).abs() < 1e-14);
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 4.0]);
        assert_eq!(lu_det(&m), 0.0);
        let m = DMatrix::zeros(3, 3);
        assert_eq!(lu_det(&m), 0.0);
    }
}
