//! Characteristic polynomial phi(lambda) = det(A - lambda I) by
//! evaluation-interpolation: Sylvester determinants at Chebyshev nodes on an
//! interval matched to the spectral scale, then a DCT back to coefficients.

use crate::bounds::{gershgorin_disks, gershgorin_interval};
use crate::error::{Result, TensorError};
use crate::oracle::sylvester::{binary_forms, lu_det, sylvester_matrix};
use crate::tensor::SymmetricTensor;
use std::f64::consts::PI;

/// phi coefficients in the monomial basis, constant term first.
///
/// The scaled representation keeps the interpolation's own variable
/// xi = (lambda - center) / half_width, where the polynomial is numerically
/// well conditioned; the root finder works there and maps back.
#[derive(Debug, Clone)]
pub struct CharPoly {
    pub coeffs: Vec<f64>,
    pub degree: usize,
    pub(crate) scaled: ScaledPoly,
}

#[derive(Debug, Clone)]
pub(crate) struct ScaledPoly {
    /// Monomial coefficients in xi, constant first; leading term h^d > 0.
    pub b: Vec<f64>,
    pub center: f64,
    pub half_width: f64,
    /// Largest sampled |phi| over the nodes; noise floor for root validation.
    pub vmax: f64,
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut out = 1.0;
    for j in 1..=k {
        out = out * (n - k + j) as f64 / j as f64;
    }
    out
}

/// Evaluate a real-coefficient polynomial (constant first) at a real point.
pub(crate) fn polyval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

impl CharPoly {
    /// Wrap externally supplied monomial coefficients (constant first).
    /// The scaled representation is rebuilt from a Cauchy root bound.
    pub fn from_coeffs(coeffs: Vec<f64>) -> Result<Self> {
        let degree = coeffs.len().saturating_sub(1);
        let lead = *coeffs.last().ok_or(TensorError::DegeneratePolynomial)?;
        let maxc = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if maxc == 0.0 || lead == 0.0 {
            return Err(TensorError::DegeneratePolynomial);
        }
        let cauchy = 1.0
            + coeffs[..degree]
                .iter()
                .fold(0.0f64, |m, c| m.max((c / lead).abs()));
        let mut b = vec![0.0; degree + 1];
        // b(xi) = phi(h * xi) with center 0
        for (j, &a) in coeffs.iter().enumerate() {
            b[j] = a * cauchy.powi(j as i32);
        }
        let n = degree + 1;
        let mut vmax = 0.0f64;
        for k in 0..n {
            let xi = (PI * (k as f64 + 0.5) / n as f64).cos();
            vmax = vmax.max(polyval(&b, xi).abs());
        }
        Ok(CharPoly {
            coeffs,
            degree,
            scaled: ScaledPoly {
                b,
                center: 0.0,
                half_width: cauchy,
                vmax,
            },
        })
    }

    pub fn eval(&self, lambda: f64) -> f64 {
        let xi = (lambda - self.scaled.center) / self.scaled.half_width;
        polyval(&self.scaled.b, xi)
    }
}

/// Characteristic polynomial of an n = 2 tensor of any order m >= 2.
pub fn charpoly(t: &SymmetricTensor) -> Result<CharPoly> {
    let forms = binary_forms(t)?;
    let m = t.order();
    let d = 2 * (m - 1);
    let n = d + 1;

    // interpolation interval from the Gershgorin disks, which contain every
    // root of phi; a floor keeps the width positive for tiny spectra
    let (glo, ghi) = gershgorin_interval(&gershgorin_disks(t));
    let center = 0.5 * (glo + ghi);
    let half_width = (0.5 * (ghi - glo)).max(1e-3 * center.abs().max(1.0));

    let theta: Vec<f64> = (0..n).map(|k| PI * (k as f64 + 0.5) / n as f64).collect();
    let vals: Vec<f64> = theta
        .iter()
        .map(|th| lu_det(&sylvester_matrix(&forms, center + half_width * th.cos())))
        .collect();
    let vmax = vals.iter().fold(0.0f64, |mx, v| mx.max(v.abs()));

    // first-kind DCT gives the Chebyshev coefficients of the sampled values
    let mut beta = vec![0.0; n];
    for (j, bj) in beta.iter_mut().enumerate() {
        *bj = 2.0 / n as f64
            * theta
                .iter()
                .zip(vals.iter())
                .map(|(th, v)| v * (j as f64 * th).cos())
                .sum::<f64>();
    }
    beta[0] /= 2.0;

    // Chebyshev basis -> monomial basis in xi via the T recurrence
    let mut tprev = vec![1.0];
    let mut tcur = vec![0.0, 1.0];
    let mut b = vec![0.0; n];
    b[0] += beta[0];
    if n > 1 {
        b[1] += beta[1];
    }
    for j in 2..n {
        let mut tnext = vec![0.0; j + 1];
        for (i, &v) in tcur.iter().enumerate() {
            tnext[i + 1] += 2.0 * v;
        }
        for (i, &v) in tprev.iter().enumerate() {
            tnext[i] -= v;
        }
        for (i, &v) in tnext.iter().enumerate() {
            b[i] += beta[j] * v;
        }
        tprev = tcur;
        tcur = tnext;
    }

    // expand b((lambda - center)/h) into monomial coefficients in lambda
    let mut coeffs = vec![0.0; n];
    for j in 0..n {
        let bj = b[j] / half_width.powi(j as i32);
        for k in 0..=j {
            coeffs[k] += bj * binomial(j, k) * (-center).powi((j - k) as i32);
        }
    }

    let scaled = ScaledPoly {
        b,
        center,
        half_width,
        vmax,
    };

    // conditioning check: the scaled polynomial must reproduce fresh
    // determinant samples within the sampling noise floor
    let check_scale = vmax.max(f64::MIN_POSITIVE);
    for frac in [-0.77, 0.13, 0.61] {
        let lambda = center + half_width * frac;
        let direct = lu_det(&sylvester_matrix(&forms, lambda));
        let interp = polyval(&scaled.b, frac);
        if (direct - interp).abs() > 1e-6 * check_scale {
            return Err(TensorError::Conditioning(format!(
                "residual {:.3e} at lambda = {:.6} exceeds 1e-6 * {:.3e}",
                (direct - interp).abs(),
                lambda,
                check_scale
            )));
        }
    }

    Ok(CharPoly {
        coeffs,
        degree: d,
        scaled,
    })
}

/// det(A) for n = 2: the Sylvester resultant at lambda = 0, evaluated
/// directly rather than through the interpolated constant term.
pub fn determinant(t: &SymmetricTensor) -> Result<f64> {
    let forms = binary_forms(t)?;
    Ok(lu_det(&sylvester_matrix(&forms, 0.0)))
}
