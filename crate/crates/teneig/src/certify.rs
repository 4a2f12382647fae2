//! Positive-definiteness certificates and Lyapunov stability of the
//! gradient flow x' = -grad V with V(x) = A x^m.
//!
//! Certification prefers the exact route (all H-eigenvalues positive, which
//! for even order is equivalent to positive definiteness); shapes without an
//! exact spectrum fall back to Gershgorin disk arithmetic and, failing that,
//! seeded sphere sampling that can only refute, never certify.

use crate::bounds::{gershgorin_disks, GershgorinDisk};
use crate::error::{Result, TensorError};
use crate::oracle::spectral_summary;
use crate::tensor::SymmetricTensor;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::Serializer;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    CertifiedPd,
    CertifiedNotPd,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CertifiedPd => "certified_pd",
            Verdict::CertifiedNotPd => "certified_not_pd",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertMethod {
    /// All real H-eigenvalues known exactly.
    ExactSpectrum,
    /// Disk interval could not decide.
    Gershgorin,
    /// Every disk lies strictly right of zero.
    DiagonalDominance,
    /// Odd order: the form takes both signs.
    OddOrder,
    /// A sampled point witnessed f(x) <= 0.
    Sampling,
}

impl CertMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            CertMethod::ExactSpectrum => "exact_spectrum",
            CertMethod::Gershgorin => "gershgorin",
            CertMethod::DiagonalDominance => "diagonal_dominance",
            CertMethod::OddOrder => "odd_order",
            CertMethod::Sampling => "sampling",
        }
    }
}

macro_rules! impl_str_traits {
    ($($ty:ty),*) => {$(
        impl std::fmt::Display for $ty {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str(self.as_str())
            }
        }
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(self.as_str())
            }
        }
    )*};
}
impl_str_traits!(Verdict, CertMethod);

/// Supporting evidence for a verdict.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Exact smallest H-eigenvalue, or a certified lower bound on it.
    LambdaMin(f64),
    /// The disk that kept the interval from staying positive.
    Disk(GershgorinDisk),
    /// A concrete point with its (nonpositive) form value.
    Point { x: Vec<f64>, value: f64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct PdCertificate {
    pub verdict: Verdict,
    pub method: CertMethod,
    pub witness: Witness,
}

fn odd_order_certificate(t: &SymmetricTensor) -> PdCertificate {
    // f(-x) = -f(x) for odd m, so whichever sign f(e1) has, one of the two
    // axis points is a concrete nonpositive witness
    let m = t.order();
    let v1 = t.value(&vec![1; m]).expect("diagonal index is valid");
    let (x1, value) = if v1 > 0.0 { (-1.0, -v1) } else { (1.0, v1) };
    let mut x = vec![0.0; t.dim()];
    x[0] = x1;
    PdCertificate {
        verdict: Verdict::CertifiedNotPd,
        method: CertMethod::OddOrder,
        witness: Witness::Point { x, value },
    }
}

fn disk_certificate(t: &SymmetricTensor) -> (PdCertificate, bool) {
    let disks = gershgorin_disks(t);
    let worst = disks
        .iter()
        .copied()
        .min_by(|a, b| (a.center - a.radius).total_cmp(&(b.center - b.radius)))
        .expect("dimension >= 1");
    let lo = worst.center - worst.radius;
    if lo > 0.0 {
        (
            PdCertificate {
                verdict: Verdict::CertifiedPd,
                method: CertMethod::DiagonalDominance,
                witness: Witness::LambdaMin(lo),
            },
            true,
        )
    } else {
        (
            PdCertificate {
                verdict: Verdict::Inconclusive,
                method: CertMethod::Gershgorin,
                witness: Witness::Disk(worst),
            },
            false,
        )
    }
}

fn sphere_samples(n: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let x: Vec<f64> = (0..n)
            .map(|_| rng.sample::<f64, _>(rand_distr::StandardNormal))
            .collect();
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm < 1e-12 {
            continue;
        }
        out.push(x.into_iter().map(|v| v / norm).collect());
    }
    out
}

/// Decide positive definiteness of `t`.
///
/// Odd order is rejected outright. When an exact spectrum exists (n = 2 or
/// m = 2) the verdict is sharp. Otherwise all-positive Gershgorin disks
/// certify, a sampled nonpositive form value refutes, and anything else is
/// inconclusive.
pub fn certify_pd(t: &SymmetricTensor) -> PdCertificate {
    if t.order() % 2 == 1 {
        return odd_order_certificate(t);
    }
    if let Ok(summary) = spectral_summary(t) {
        if let Some(lo) = summary.lambda_min_h() {
            return PdCertificate {
                verdict: if lo > 0.0 {
                    Verdict::CertifiedPd
                } else {
                    Verdict::CertifiedNotPd
                },
                method: CertMethod::ExactSpectrum,
                witness: Witness::LambdaMin(lo),
            };
        }
    }
    let (cert, decided) = disk_certificate(t);
    if decided {
        return cert;
    }
    for x in sphere_samples(t.dim(), 10_000, 42) {
        let value = t.evaluate(&x).expect("sample has the right length");
        if value <= 0.0 {
            return PdCertificate {
                verdict: Verdict::CertifiedNotPd,
                method: CertMethod::Sampling,
                witness: Witness::Point { x, value },
            };
        }
    }
    cert
}

/// The disk-arithmetic part of [`certify_pd`] on its own, for comparing
/// what interval reasoning alone can conclude about a tensor that also has
/// an exact path.
pub fn certify_pd_gershgorin(t: &SymmetricTensor) -> PdCertificate {
    if t.order() % 2 == 1 {
        return odd_order_certificate(t);
    }
    disk_certificate(t).0
}

/// Gradient of V(x) = A x^m: exactly m * (A x^{m-1}) for symmetric A.
pub fn gradient(t: &SymmetricTensor, x: &[f64]) -> Result<Vec<f64>> {
    let m = t.order() as f64;
    Ok(t.apply(x)?.into_iter().map(|v| m * v).collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct LyapunovReport {
    pub pd_certificate: PdCertificate,
    pub sample_count: usize,
    /// Largest observed derivative along the flow; stability needs < 0.
    pub max_vdot: f64,
    pub stable: bool,
}

/// Check V(x) = A x^m as a Lyapunov function for x' = -grad V by sampling
/// `samples` unit-sphere points from a seeded generator and requiring
/// V > 0 and V' = -|grad V|^2 < 0 strictly at each. Homogeneity makes
/// sphere sampling sufficient.
pub fn lyapunov_gradient_flow_check(
    t: &SymmetricTensor,
    samples: usize,
    seed: u64,
) -> Result<LyapunovReport> {
    if samples == 0 {
        return Err(TensorError::Validation(
            "lyapunov check needs at least one sample".into(),
        ));
    }
    let pd_certificate = certify_pd(t);
    let mut max_vdot = f64::NEG_INFINITY;
    let mut all_ok = true;
    for x in sphere_samples(t.dim(), samples, seed) {
        let v = t.evaluate(&x)?;
        let g = gradient(t, &x)?;
        let vdot = -g.iter().map(|gi| gi * gi).sum::<f64>();
        max_vdot = max_vdot.max(vdot);
        if !(v > 0.0 && vdot < 0.0) {
            all_ok = false;
        }
    }
    let stable = pd_certificate.verdict == Verdict::CertifiedPd && all_ok;
    Ok(LyapunovReport {
        pd_certificate,
        sample_count: samples,
        max_vdot,
        stable,
    })
}
