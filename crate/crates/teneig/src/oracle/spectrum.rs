//! Real spectra with multiplicities, and residual certification of
//! eigenvalue candidates against the defining equations.

use crate::error::{Result, TensorError};
use crate::oracle::charpoly::{charpoly, determinant, CharPoly};
use crate::oracle::roots::{plain_real_roots, polished_roots};
use crate::oracle::sylvester::binary_forms;
use crate::tensor::{SpectralInvariants, SymmetricTensor};
use serde::Serialize;

/// Real roots of a characteristic polynomial, sorted descending, plus the
/// count of roots that stayed complex.
#[derive(Debug, Clone, Serialize)]
pub struct Spectrum {
    /// (value, multiplicity) pairs, largest value first.
    pub real_roots: Vec<(f64, usize)>,
    pub complex_count: usize,
    pub d: usize,
}

impl Spectrum {
    pub fn total_real_multiplicity(&self) -> usize {
        self.real_roots.iter().map(|&(_, k)| k).sum()
    }

    pub fn lambda_max(&self) -> Option<f64> {
        self.real_roots.first().map(|&(v, _)| v)
    }

    pub fn lambda_min(&self) -> Option<f64> {
        self.real_roots.last().map(|&(v, _)| v)
    }

    pub fn all_positive(&self) -> bool {
        self.complex_count == 0 && self.real_roots.iter().all(|&(v, _)| v > 0.0)
    }
}

/// All real roots of `p` with multiplicities.
///
/// Roots closer than `cluster_tol` are merged into one value (multiplicity
/// weighted mean). Pass a non-positive tolerance to use the default
/// 1e-6 x max(1, largest |root|).
pub fn real_spectrum(p: &CharPoly, cluster_tol: f64) -> Result<Spectrum> {
    let troots = polished_roots(&p.scaled)?;
    let d = p.degree;
    let imag_tol = 1e-8;
    let mut reals: Vec<(f64, usize)> = Vec::new();
    let mut complex_count = 0;
    for (z, k) in troots {
        if z.im.abs() <= imag_tol * (1.0 + z.norm()) {
            reals.push((z.re, k));
        } else {
            complex_count += k;
        }
    }
    reals.sort_by(|a, b| a.0.total_cmp(&b.0));
    let tscale = reals.iter().fold(1.0f64, |m, &(v, _)| m.max(v.abs()));
    let tol = if cluster_tol > 0.0 {
        cluster_tol
    } else {
        1e-6 * tscale
    };
    let mut merged: Vec<(f64, usize)> = Vec::new();
    for (v, k) in reals {
        match merged.last_mut() {
            Some((v0, k0)) if (v - *v0).abs() <= tol => {
                *v0 = (*v0 * *k0 as f64 + v * k as f64) / (*k0 + k) as f64;
                *k0 += k;
            }
            _ => merged.push((v, k)),
        }
    }
    merged.sort_by(|a, b| b.0.total_cmp(&a.0));
    Ok(Spectrum {
        real_roots: merged,
        complex_count,
        d,
    })
}

/// Eigenvalues of an order-2 tensor through cyclic Jacobi rotations on the
/// underlying symmetric matrix. Equal eigenvalues are merged with the same
/// default tolerance as [`real_spectrum`].
pub fn matrix_spectrum(t: &SymmetricTensor) -> Result<Spectrum> {
    if t.order() != 2 {
        return Err(TensorError::UnsupportedOrder(t.order()));
    }
    let n = t.dim();
    let mut a = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in 0..n {
            a[i][j] = t.value(&[i + 1, j + 1])?;
        }
    }
    let scale = a
        .iter()
        .flatten()
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .max(1.0);
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p][q] * a[p][q])
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() <= 1e-300 {
                    continue;
                }
                let tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t_rot = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t_rot * t_rot).sqrt();
                let s = t_rot * c;
                for r in 0..n {
                    let arp = a[r][p];
                    let arq = a[r][q];
                    a[r][p] = c * arp - s * arq;
                    a[r][q] = s * arp + c * arq;
                }
                for r in 0..n {
                    let apr = a[p][r];
                    let aqr = a[q][r];
                    a[p][r] = c * apr - s * aqr;
                    a[q][r] = s * apr + c * aqr;
                }
            }
        }
    }
    let mut eigs: Vec<(f64, usize)> = (0..n).map(|i| (a[i][i], 1)).collect();
    eigs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let tscale = eigs.iter().fold(1.0f64, |m, &(v, _)| m.max(v.abs()));
    let tol = 1e-6 * tscale;
    let mut merged: Vec<(f64, usize)> = Vec::new();
    for (v, k) in eigs {
        match merged.last_mut() {
            Some((v0, k0)) if (v - *v0).abs() <= tol => {
                *v0 = (*v0 * *k0 as f64 + v * k as f64) / (*k0 + k) as f64;
                *k0 += k;
            }
            _ => merged.push((v, k)),
        }
    }
    merged.sort_by(|x, y| y.0.total_cmp(&x.0));
    Ok(Spectrum {
        real_roots: merged,
        complex_count: 0,
        d: n,
    })
}

/// Smallest defect of the eigenvalue equations over candidate eigenvectors
/// for `lambda`.
///
/// Candidates come from the one-variable reduction g(t) = f2(1, t) - lambda
/// t^{m-1} = 0 (vectors (1, t)) plus the axis vector (0, 1). The returned
/// value is min over candidates of |A x^{m-1} - lambda x^{[m-1]}| / |x^{[m-1]}|,
/// so a genuine H-eigenvalue scores near zero and a spurious real root of
/// the characteristic polynomial scores order one.
pub fn residual_check(t: &SymmetricTensor, lambda: f64) -> Result<f64> {
    let forms = binary_forms(t)?;
    let m = t.order();
    let mut g = forms.f2.clone();
    g[m - 1] -= lambda;
    let gmax = g.iter().fold(0.0f64, |mx, c| mx.max(c.abs()));
    let mut candidates: Vec<[f64; 2]> = Vec::new();
    if gmax == 0.0 {
        // every direction solves the second equation; probe a spread
        candidates.extend([[1.0, 0.0], [1.0, 1.0], [1.0, -1.0]]);
    } else {
        for r in plain_real_roots(&g) {
            let norm = (1.0 + r * r).sqrt();
            candidates.push([1.0 / norm, r / norm]);
        }
    }
    candidates.push([0.0, 1.0]);
    let mut best = f64::INFINITY;
    for x in candidates {
        let ax = t.apply(&x)?;
        let xp = [x[0].powi(m as i32 - 1), x[1].powi(m as i32 - 1)];
        let num = ((ax[0] - lambda * xp[0]).powi(2) + (ax[1] - lambda * xp[1]).powi(2)).sqrt();
        let den = (xp[0] * xp[0] + xp[1] * xp[1]).sqrt();
        if den > 0.0 {
            best = best.min(num / den);
        }
    }
    Ok(best)
}

/// One root cluster of the characteristic polynomial together with its
/// eigenvector residual.
#[derive(Debug, Clone, Serialize)]
pub struct RootCluster {
    pub value: f64,
    pub multiplicity: usize,
    pub residual: f64,
}

/// Full spectral picture of a tensor: invariants, all real roots, and the
/// split into residual-certified H-eigenvalues versus spurious real roots
/// (real roots of the characteristic polynomial without a real eigenvector).
#[derive(Debug, Clone, Serialize)]
pub struct SpectralSummary {
    pub invariants: SpectralInvariants,
    pub spectrum: Spectrum,
    pub h_eigenvalues: Vec<RootCluster>,
    pub spurious_real: Vec<RootCluster>,
}

impl SpectralSummary {
    /// Smallest certified H-eigenvalue, if any.
    pub fn lambda_min_h(&self) -> Option<f64> {
        self.h_eigenvalues.last().map(|c| c.value)
    }

    pub fn lambda_max_h(&self) -> Option<f64> {
        self.h_eigenvalues.first().map(|c| c.value)
    }
}

/// Compute the spectrum of `t` by whichever exact path applies: the
/// resultant-based characteristic polynomial for n = 2, or matrix
/// diagonalization for m = 2. Other shapes have no supported exact path.
pub fn spectral_summary(t: &SymmetricTensor) -> Result<SpectralSummary> {
    if t.dim() == 2 {
        let p = charpoly(t)?;
        let spectrum = real_spectrum(&p, 0.0)?;
        let det = determinant(t)?;
        let invariants = t.spectral_invariants(Some(det));
        let h_tol = 1e-6 * t.max_abs_entry();
        let mut h_eigenvalues = Vec::new();
        let mut spurious_real = Vec::new();
        for &(value, multiplicity) in &spectrum.real_roots {
            let residual = residual_check(t, value)?;
            let cluster = RootCluster {
                value,
                multiplicity,
                residual,
            };
            if residual <= h_tol {
                h_eigenvalues.push(cluster);
            } else {
                spurious_real.push(cluster);
            }
        }
        Ok(SpectralSummary {
            invariants,
            spectrum,
            h_eigenvalues,
            spurious_real,
        })
    } else if t.order() == 2 {
        let spectrum = matrix_spectrum(t)?;
        let det = spectrum
            .real_roots
            .iter()
            .map(|&(v, k)| v.powi(k as i32))
            .product();
        let invariants = t.spectral_invariants(Some(det));
        let h_eigenvalues = spectrum
            .real_roots
            .iter()
            .map(|&(value, multiplicity)| RootCluster {
                value,
                multiplicity,
                residual: 0.0,
            })
            .collect();
        Ok(SpectralSummary {
            invariants,
            spectrum,
            h_eigenvalues,
            spurious_real: Vec::new(),
        })
    } else {
        Err(TensorError::UnsupportedSpectrum)
    }
}
