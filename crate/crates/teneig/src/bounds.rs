//! Invariant-based eigenvalue bounds.
//!
//! Every bound here is a function of three numbers only: the root count d,
//! the scaled trace S (sum of all roots) and the determinant (product of all
//! roots). The underlying inequalities assume a fully positive real
//! spectrum, so each value carries a hypothesis flag telling whether that
//! assumption was verified, assumed, or observed to fail.

use crate::error::{Result, TensorError};
use crate::oracle::spectral_summary;
use crate::tensor::{SpectralInvariants, SymmetricTensor};
use serde::ser::Serializer;
use serde::Serialize;

/// Scalar invariants a bound evaluation runs on.
#[derive(Debug, Clone, Copy)]
pub struct BoundInputs {
    pub d: usize,
    pub s: f64,
    pub det: f64,
    pub hypothesis: Hypothesis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    /// An exact spectrum confirmed all d roots real and positive.
    VerifiedPositive,
    /// No spectrum available; the positivity hypothesis is taken on trust.
    Assumed,
    /// The exact spectrum contains complex or nonpositive roots, so the
    /// inequalities are not guaranteed and values are reported as-is.
    Violated,
}

impl Hypothesis {
    pub fn as_str(self) -> &'static str {
        match self {
            Hypothesis::VerifiedPositive => "verified_positive",
            Hypothesis::Assumed => "assumed",
            Hypothesis::Violated => "violated",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    T1SumUpper,
    T1TailProdLower,
    T2Chain,
    T3Bracket,
    T4ProdUpper,
    T4TailProdLower,
    T5Lower,
    T5Upper,
    T6SumUpper,
    GershgorinUpper,
    GershgorinLower,
    MinEigLowerSimple,
    MinEigUpperMean,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T1SumUpper => "T1_sum_upper",
            TheoremId::T1TailProdLower => "T1_tail_prod_lower",
            TheoremId::T2Chain => "T2_chain",
            TheoremId::T3Bracket => "T3_bracket",
            TheoremId::T4ProdUpper => "T4_prod_upper",
            TheoremId::T4TailProdLower => "T4_tail_prod_lower",
            TheoremId::T5Lower => "T5_lower",
            TheoremId::T5Upper => "T5_upper",
            TheoremId::T6SumUpper => "T6_sum_upper",
            TheoremId::GershgorinUpper => "Gershgorin_upper",
            TheoremId::GershgorinLower => "Gershgorin_lower",
            TheoremId::MinEigLowerSimple => "MinEig_lower_simple",
            TheoremId::MinEigUpperMean => "MinEig_upper_mean",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    UpperOnSum,
    LowerOnProduct,
    UpperOnProduct,
    Interval,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::UpperOnSum => "upper_on_sum",
            BoundKind::LowerOnProduct => "lower_on_product",
            BoundKind::UpperOnProduct => "upper_on_product",
            BoundKind::Interval => "interval",
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
impl_str_traits!(Hypothesis, TheoremId, BoundKind);

/// One evaluated bound: which inequality, at which (k, l), and its value.
#[derive(Debug, Clone, Serialize)]
pub struct BoundValue {
    pub theorem_id: TheoremId,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    pub value: f64,
    pub kind: BoundKind,
    pub hypothesis: Hypothesis,
}

/// One Gershgorin disk: eigenvalues lie in the union over slices i of
/// [center_i - radius_i, center_i + radius_i].
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GershgorinDisk {
    pub index: usize,
    pub center: f64,
    pub radius: f64,
}

impl BoundInputs {
    pub fn new(d: usize, s: f64, det: f64, hypothesis: Hypothesis) -> Self {
        BoundInputs {
            d,
            s,
            det,
            hypothesis,
        }
    }

    /// Invariants straight from a tensor, with the positivity hypothesis
    /// settled by the exact spectrum where one is available.
    pub fn from_tensor(t: &SymmetricTensor) -> Result<Self> {
        let summary = spectral_summary(t)?;
        Ok(BoundInputs {
            d: summary.invariants.d,
            s: summary.invariants.scaled_trace,
            det: summary
                .invariants
                .determinant
                .ok_or(TensorError::MissingDeterminant(t.dim()))?,
            hypothesis: if summary.spectrum.all_positive() {
                Hypothesis::VerifiedPositive
            } else {
                Hypothesis::Violated
            },
        })
    }

    /// Invariants supplied externally (n >= 3 tensors with a known
    /// determinant); the positivity hypothesis stays unverified.
    pub fn from_invariants(inv: &SpectralInvariants, dim: usize) -> Result<Self> {
        Ok(BoundInputs {
            d: inv.d,
            s: inv.scaled_trace,
            det: inv
                .determinant
                .ok_or(TensorError::MissingDeterminant(dim))?,
            hypothesis: Hypothesis::Assumed,
        })
    }

    fn check_positive(&self) -> Result<()> {
        if self.s > 0.0 && self.det > 0.0 {
            Ok(())
        } else {
            Err(TensorError::NonpositiveInvariants {
                s: self.s,
                det: self.det,
            })
        }
    }

    fn check_k(&self, k: usize, lo: usize, hi: usize, name: &'static str) -> Result<()> {
        if k >= lo && k <= hi {
            Ok(())
        } else {
            Err(TensorError::ParameterRange {
                name,
                value: k,
                lo,
                hi,
            })
        }
    }

    fn bound(
        &self,
        theorem_id: TheoremId,
        k: usize,
        l: Option<usize>,
        value: f64,
        kind: BoundKind,
    ) -> BoundValue {
        BoundValue {
            theorem_id,
            k,
            l,
            value,
            kind,
            hypothesis: self.hypothesis,
        }
    }
}

/// (prod of base^exp)^outer, falling back to one log-space exponentiation
/// when the direct product leaves the representable range.
fn powers(terms: &[(f64, f64)], outer: f64) -> f64 {
    let direct: f64 = terms.iter().map(|&(b, e)| b.powf(e)).product();
    if direct.is_finite() && direct != 0.0 {
        direct.powf(outer)
    } else {
        (terms.iter().map(|&(b, e)| e * b.ln()).sum::<f64>() * outer).exp()
    }
}

/// Upper bound on the sum of the k largest roots:
/// S - (d-k) [ (k/S)^k det ]^{1/(d-k)}, for 1 <= k <= d-1.
pub fn t1_sum_upper(inp: &BoundInputs, k: usize) -> Result<BoundValue> {
    inp.check_positive()?;
    inp.check_k(k, 1, inp.d.saturating_sub(1), "k")?;
    let (d, kf) = (inp.d as f64, k as f64);
    let value = inp.s - (d - kf) * powers(&[(kf / inp.s, kf), (inp.det, 1.0)], 1.0 / (d - kf));
    Ok(inp.bound(TheoremId::T1SumUpper, k, None, value, BoundKind::UpperOnSum))
}

/// Lower bound on the product of the k smallest roots:
/// ((d-k)/S)^{d-k} det, for 1 <= k <= d-1.
pub fn t1_tail_product_lower(inp: &BoundInputs, k: usize) -> Result<BoundValue> {
    inp.check_positive()?;
    inp.check_k(k, 1, inp.d.saturating_sub(1), "k")?;
    let (d, kf) = (inp.d as f64, k as f64);
    let value = powers(&[((d - kf) / inp.s, d - kf), (inp.det, 1.0)], 1.0);
    Ok(inp.bound(
        TheoremId::T1TailProdLower,
        k,
        None,
        value,
        BoundKind::LowerOnProduct,
    ))
}

/// The two chain values det^{1/d} (lower bound on the geometric mean of the
/// k largest roots) and S/d (bracketed by the bottom-k and top-k means).
pub fn t2_chain(inp: &BoundInputs, k: usize) -> Result<Vec<BoundValue>> {
    inp.check_positive()?;
    inp.check_k(k, 1, inp.d, "k")?;
    let d = inp.d as f64;
    Ok(vec![
        inp.bound(
            TheoremId::T2Chain,
            k,
            None,
            powers(&[(inp.det, 1.0 / d)], 1.0),
            BoundKind::LowerOnProduct,
        ),
        inp.bound(TheoremId::T2Chain, k, None, inp.s / d, BoundKind::Interval),
    ])
}

/// Bracket for the run lambda_k .. lambda_l:
/// lower <= (lambda_k ... lambda_l)^{1/(l-k+1)} and
/// (lambda_k + ... + lambda_l)/(l-k+1) <= upper, for 1 <= k <= l <= d-1.
pub fn t3_bracket(inp: &BoundInputs, k: usize, l: usize) -> Result<(f64, f64)> {
    inp.check_positive()?;
    inp.check_k(k, 1, inp.d.saturating_sub(1), "k")?;
    inp.check_k(l, k, inp.d.saturating_sub(1), "l")?;
    let (d, kf, lf) = (inp.d as f64, k as f64, l as f64);
    // 0^0 = 1 at k = 1 collapses the prefactor, leaving det^{1/d}
    let lower = powers(
        &[((kf - 1.0) / inp.s, kf - 1.0), (inp.det, 1.0)],
        1.0 / (d - kf + 1.0),
    );
    let upper =
        inp.s / lf - (d / lf - 1.0) * powers(&[(lf / inp.s, lf), (inp.det, 1.0)], 1.0 / (d - lf));
    Ok((lower, upper))
}

/// Upper bound on the product of the k largest roots:
/// { (1/det) [ (1/(d-k)) (S/(k+1))^{k+1} ]^{d-k} }^{1/(d-k-1)}, 1 <= k <= d-2.
pub fn t4_product_upper(inp: &BoundInputs, k: usize) -> Result<BoundValue> {
    inp.check_positive()?;
    inp.check_k(k, 1, inp.d.saturating_sub(2), "k")?;
    let (d, kf) = (inp.d as f64, k as f64);
    let value = powers(
        &[
            (inp.det, -1.0),
            (1.0 / (d - kf), d - kf),
            (inp.s / (kf + 1.0), (kf + 1.0) * (d - kf)),
        ],
        1.0 / (d - kf - 1.0),
    );
    Ok(inp.bound(
        TheoremId::T4ProdUpper,
        k,
        None,
        value,
        BoundKind::UpperOnProduct,
    ))
}

/// Lower bound on the product of the k smallest roots:
/// [ k det ((d-k+1)/S)^{d-k+1} ]^{k/(k-1)}, for 2 <= k <= d-1.
pub fn t4_tail_product_lower(inp: &BoundInputs, k: usize) -> Result<BoundValue> {
    inp.check_positive()?;
    inp.check_k(k, 2, inp.d.saturating_sub(1), "k")?;
    let (d, kf) = (inp.d as f64, k as f64);
    let value = powers(
        &[
            (kf, 1.0),
            (inp.det, 1.0),
            ((d - kf + 1.0) / inp.s, d - kf + 1.0),
        ],
        kf / (kf - 1.0),
    );
    Ok(inp.bound(
        TheoremId::T4TailProdLower,
        k,
        None,
        value,
        BoundKind::LowerOnProduct,
    ))
}

/// Bracket on the product lambda_k ... lambda_l, for 1 <= k <= l <= d-2.
pub fn t5_product_bracket(inp: &BoundInputs, k: usize, l: usize) -> Result<(f64, f64)> {
    inp.check_positive()?;
    inp.check_k(k, 1, inp.d.saturating_sub(2), "k")?;
    inp.check_k(l, k, inp.d.saturating_sub(2), "l")?;
    let (d, kf, lf) = (inp.d as f64, k as f64, l as f64);
    let lower = powers(
        &[(d - kf + 1.0, 1.0), (inp.det, 1.0), (kf / inp.s, kf)],
        (lf - kf + 1.0) / (d - kf),
    );
    let upper = powers(
        &[
            (inp.det, -1.0),
            (1.0 / (d - lf), d - lf),
            (inp.s / (lf + 1.0), (lf + 1.0) * (d - lf)),
        ],
        (lf - kf + 1.0) / (lf * (d - lf - 1.0)),
    );
    Ok((lower, upper))
}

/// Upper bound on the sum of the k largest roots:
/// ((k+1)^{k+1}/k^k) (1/det) (S/(d+1))^{d+1}, for 1 <= k <= d.
/// Strictly increasing in k for fixed invariants.
pub fn t6_sum_upper(inp: &BoundInputs, k: usize) -> Result<BoundValue> {
    inp.check_positive()?;
    inp.check_k(k, 1, inp.d, "k")?;
    let (d, kf) = (inp.d as f64, k as f64);
    let value = powers(
        &[
            (kf + 1.0, kf + 1.0),
            (kf, -kf),
            (inp.det, -1.0),
            (inp.s / (d + 1.0), d + 1.0),
        ],
        1.0,
    );
    Ok(inp.bound(TheoremId::T6SumUpper, k, None, value, BoundKind::UpperOnSum))
}

/// Gershgorin disks of any symmetric tensor: disk i is centered at the
/// diagonal entry and its radius sums |value| over every raw index tuple in
/// slice i other than the diagonal tuple. Counts are exact integers
/// (orbit size x multiplicity of i / m).
pub fn gershgorin_disks(t: &SymmetricTensor) -> Vec<GershgorinDisk> {
    let m = t.order();
    let n = t.dim();
    let mut disks: Vec<GershgorinDisk> = (1..=n)
        .map(|i| GershgorinDisk {
            index: i,
            center: 0.0,
            radius: 0.0,
        })
        .collect();
    for (idx, value, orbit) in t.unique_entries() {
        let counts = idx.counts(n);
        for i in 1..=n {
            let ki = counts[i - 1] as u64;
            if ki == 0 {
                continue;
            }
            if ki == m as u64 {
                disks[i - 1].center = value;
            } else {
                let slice_count = orbit * ki / m as u64;
                disks[i - 1].radius += slice_count as f64 * value.abs();
            }
        }
    }
    disks
}

/// Union hull of the disks; every real H-eigenvalue lies inside.
pub fn gershgorin_interval(disks: &[GershgorinDisk]) -> (f64, f64) {
    let lo = disks
        .iter()
        .map(|d| d.center - d.radius)
        .fold(f64::INFINITY, f64::min);
    let hi = disks
        .iter()
        .map(|d| d.center + d.radius)
        .fold(f64::NEG_INFINITY, f64::max);
    (lo, hi)
}

/// The smallest of the three k = 1 upper bounds on lambda_max, with its
/// source. Bounds whose parameter window is empty for this d are skipped.
pub fn lambda_max_upper_best(inp: &BoundInputs) -> Result<(f64, TheoremId)> {
    inp.check_positive()?;
    let mut best: Option<(f64, TheoremId)> = None;
    let mut consider = |v: f64, id: TheoremId| match best {
        Some((bv, _)) if bv <= v => {}
        _ => best = Some((v, id)),
    };
    if let Ok(b) = t1_sum_upper(inp, 1) {
        consider(b.value, TheoremId::T1SumUpper);
    }
    if let Ok(b) = t4_product_upper(inp, 1) {
        consider(b.value, TheoremId::T4ProdUpper);
    }
    if let Ok(b) = t6_sum_upper(inp, 1) {
        consider(b.value, TheoremId::T6SumUpper);
    }
    best.ok_or(TensorError::DegreeTooSmall(inp.d))
}

/// The three scalar bounds on the smallest root.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LambdaMinBounds {
    /// det/S. This is a printed-form shortcut, not one of the k-indexed
    /// inequalities; for spread spectra it can exceed the true minimum by
    /// orders of magnitude, so it is reported alongside, never preferred.
    pub lower_simple: f64,
    /// ((d-1)/S)^{d-1} det, the k = 1 tail-product bound.
    pub lower_t1: f64,
    /// S/d, an upper bound on the smallest root.
    pub upper_mean: f64,
}

pub fn lambda_min_bounds(inp: &BoundInputs) -> Result<LambdaMinBounds> {
    inp.check_positive()?;
    let d = inp.d as f64;
    Ok(LambdaMinBounds {
        lower_simple: inp.det / inp.s,
        lower_t1: powers(&[((d - 1.0) / inp.s, d - 1.0), (inp.det, 1.0)], 1.0),
        upper_mean: inp.s / d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quartic_diag_inputs() -> BoundInputs {
        BoundInputs::new(6, 6.3, 1.331, Hypothesis::VerifiedPositive)
    }

    fn coupled_inputs() -> BoundInputs {
        BoundInputs::new(6, 66.0, 846720.0, Hypothesis::VerifiedPositive)
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * (1.0 + b.abs())
    }

    #[test]
    fn quartic_diag_values() {
        let inp = quartic_diag_inputs();
        assert!(close(
            t1_sum_upper(&inp, 1).unwrap().value,
            2.6361515148992172
        ));
        assert!(close(
            t1_tail_product_lower(&inp, 1).unwrap().value,
            0.41910740080436548
        ));
        let chain = t2_chain(&inp, 1).unwrap();
        assert!(close(chain[0].value, 1.0488088481701516));
        assert!(close(chain[1].value, 1.05));
        assert!(close(
            t4_product_upper(&inp, 1).unwrap().value,
            2.1929027146740172
        ));
        assert!(close(
            t4_tail_product_lower(&inp, 2).unwrap().value,
            0.70260405363596419
        ));
        assert!(close(
            t6_sum_upper(&inp, 1).unwrap().value,
            1.4374061607813681
        ));
        let (lo, hi) = t3_bracket(&inp, 2, 3).unwrap();
        assert!(close(lo, 0.73276969702015670));
        assert!(close(hi, 1.5761904761904764));
        let (lo, hi) = t5_product_bracket(&inp, 1, 1).unwrap();
        assert!(close(lo, 1.0485707800067101));
        assert!(close(hi, 2.1929027146740172));
        let mins = lambda_min_bounds(&inp).unwrap();
        assert!(close(mins.lower_simple, 0.21126984126984131));
        assert!(close(mins.upper_mean, 1.05));
        let (best, src) = lambda_max_upper_best(&inp).unwrap();
        assert!(close(best, 1.4374061607813681));
        assert_eq!(src, TheoremId::T6SumUpper);
    }

    #[test]
    fn coupled_quartic_values() {
        let inp = coupled_inputs();
        assert!(close(
            t1_sum_upper(&inp, 1).unwrap().value,
            32.840407803965468
        ));
        assert!(close(
            t4_product_upper(&inp, 1).unwrap().value,
            27.582738985581813
        ));
        assert!(close(
            t6_sum_upper(&inp, 1).unwrap().value,
            31.292585091587971
        ));
        let (best, src) = lambda_max_upper_best(&inp).unwrap();
        assert!(close(best, 27.582738985581813));
        assert_eq!(src, TheoremId::T4ProdUpper);
        // the printed det/S shortcut exceeds the true minimum by three
        // orders of magnitude here; reported, never trusted
        let mins = lambda_min_bounds(&inp).unwrap();
        assert!(close(mins.lower_simple, 12829.090909090909));
        assert!(close(mins.lower_t1, 2.1128572798540697));
    }

    #[test]
    fn t3_and_t5_reduce_at_k1() {
        let inp = quartic_diag_inputs();
        let (lo, hi) = t3_bracket(&inp, 1, 1).unwrap();
        assert!(close(lo, powers(&[(1.331f64, 1.0 / 6.0)], 1.0)));
        assert!(close(hi, t1_sum_upper(&inp, 1).unwrap().value));
    }

    #[test]
    fn t6_monotone_in_k() {
        let inp = coupled_inputs();
        let mut prev = f64::NEG_INFINITY;
        for k in 1..=6 {
            let v = t6_sum_upper(&inp, k).unwrap().value;
            assert!(v > prev, "k={k}: {v} <= {prev}");
            prev = v;
        }
    }

    #[test]
    fn parameter_ranges_enforced() {
        let inp = quartic_diag_inputs();
        assert!(t1_sum_upper(&inp, 0).is_err());
        assert!(t1_sum_upper(&inp, 6).is_err());
        assert!(t4_tail_product_lower(&inp, 1).is_err());
        assert!(t4_product_upper(&inp, 5).is_err());
        assert!(t3_bracket(&inp, 3, 2).is_err());
        assert!(t5_product_bracket(&inp, 1, 5).is_err());
        assert!(t6_sum_upper(&inp, 7).is_err());
        let bad = BoundInputs::new(6, -1.0, 1.0, Hypothesis::Assumed);
        assert!(matches!(
            t1_sum_upper(&bad, 1),
            Err(TensorError::NonpositiveInvariants { .. })
        ));
    }

    #[test]
    fn homogeneity_in_scale() {
        let inp = coupled_inputs();
        let c: f64 = 3.5;
        let scaled = BoundInputs::new(
            inp.d,
            c * inp.s,
            c.powi(inp.d as i32) * inp.det,
            inp.hypothesis,
        );
        let v = t1_sum_upper(&inp, 2).unwrap().value;
        let vs = t1_sum_upper(&scaled, 2).unwrap().value;
        assert!((vs - c * v).abs() <= 1e-9 * vs.abs());
        // a product bound over k factors scales like c^k
        let p = t1_tail_product_lower(&inp, 3).unwrap().value;
        let ps = t1_tail_product_lower(&scaled, 3).unwrap().value;
        assert!((ps - c.powi(3) * p).abs() <= 1e-9 * ps.abs());
        let (lo, hi) = gershgorin_interval(&[
            GershgorinDisk {
                index: 1,
                center: 2.0,
                radius: 1.0,
            },
            GershgorinDisk {
                index: 2,
                center: -1.0,
                radius: 0.5,
            },
        ]);
        assert_eq!((lo, hi), (-1.5, 3.0));
    }

    #[test]
    fn gershgorin_exact_on_fixtures() {
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
        let disks = gershgorin_disks(&t);
        assert_eq!(disks[0].center, 12.0);
        assert_eq!(disks[0].radius, 6.0);
        assert_eq!(disks[1].center, 10.0);
        assert_eq!(disks[1].radius, 6.0);
        assert_eq!(gershgorin_interval(&disks), (4.0, 18.0));

        let t6 = SymmetricTensor::from_unique_entries(
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
        let disks = gershgorin_disks(&t6);
        assert_eq!(disks[0].radius, 60.0);
        assert_eq!(disks[1].radius, 42.0);
        assert_eq!(gershgorin_interval(&disks), (-50.0, 70.0));

        let diag = SymmetricTensor::from_unique_entries(
            4,
            2,
            &[(vec![1, 1, 1, 1], 1.1), (vec![2, 2, 2, 2], 1.0)],
        )
        .unwrap();
        let disks = gershgorin_disks(&diag);
        assert!(disks.iter().all(|d| d.radius == 0.0));
        assert_eq!(gershgorin_interval(&disks), (1.0, 1.1));
    }

    #[test]
    fn identity_inputs_consistent() {
        for d in [2usize, 6, 10, 14] {
            let inp = BoundInputs::new(d, d as f64, 1.0, Hypothesis::VerifiedPositive);
            assert!(t1_sum_upper(&inp, 1).unwrap().value >= 1.0);
            assert!(t1_tail_product_lower(&inp, 1).unwrap().value <= 1.0);
            let chain = t2_chain(&inp, 1).unwrap();
            assert!(close(chain[0].value, 1.0));
            assert!(close(chain[1].value, 1.0));
            assert!(t6_sum_upper(&inp, 1).unwrap().value >= 1.0);
        }
    }

    #[test]
    fn from_tensor_sets_hypothesis() {
        let pd = SymmetricTensor::from_unique_entries(
            4,
            2,
            &[(vec![1, 1, 1, 1], 1.1), (vec![2, 2, 2, 2], 1.0)],
        )
        .unwrap();
        let inp = BoundInputs::from_tensor(&pd).unwrap();
        assert_eq!(inp.hypothesis, Hypothesis::VerifiedPositive);
        assert!(close(inp.s, 6.3));
        assert!(close(inp.det, 1.331));

        let mixed = SymmetricTensor::from_unique_entries(
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
        let inp = BoundInputs::from_tensor(&mixed).unwrap();
        assert_eq!(inp.hypothesis, Hypothesis::Violated);
    }
}
