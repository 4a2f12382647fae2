//! C ABI over the teneig library.
//!
//! Handles are opaque pointers created by [`teneig_parse`] and released by
//! [`teneig_free`]. Every fallible call returns a [`TeneigStatus`]; on any
//! non-OK status a human-readable message is available from
//! [`teneig_last_error_message`] until the next failing call on the same
//! thread. No function ever unwinds across the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use teneig::bounds::{gershgorin_disks, gershgorin_interval, lambda_max_upper_best, BoundInputs};
use teneig::certify::{certify_pd, lyapunov_gradient_flow_check, Verdict};
use teneig::doc::parse_tensor_file;
use teneig::oracle::spectral_summary;
use teneig::{SymmetricTensor, TensorError};

/// Opaque tensor handle.
pub struct TeneigTensor(SymmetricTensor);

/// Call outcome. Values 1..=4 mirror the CLI exit codes.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TeneigStatus {
    Ok = 0,
    /// Numeric failure (ill-conditioning, nonpositive invariants, ...).
    Numeric = 1,
    /// The input text does not parse.
    Parse = 2,
    /// Parsed but invalid (bad indices, missing determinant, bad parameter).
    Validation = 3,
    /// The operation has no exact path for this tensor shape.
    Unsupported = 4,
    /// A required pointer argument was null.
    NullArgument = 5,
    /// The output buffer capacity is too small; the required size was
    /// written to the count output.
    BufferTooSmall = 6,
    /// Internal panic caught at the boundary.
    Panic = 7,
}

/// Definiteness verdict of [`teneig_certify`].
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TeneigVerdict {
    Inconclusive = 0,
    CertifiedPd = 1,
    CertifiedNotPd = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).expect("nul bytes removed");
    });
}

fn fail(err: &TensorError) -> TeneigStatus {
    set_error(&err.to_string());
    match err.exit_code() {
        2 => TeneigStatus::Parse,
        3 => TeneigStatus::Validation,
        4 => TeneigStatus::Unsupported,
        _ => TeneigStatus::Numeric,
    }
}

fn null_arg(name: &str) -> TeneigStatus {
    set_error(&format!("argument {name} is null"));
    TeneigStatus::NullArgument
}

fn guarded(f: impl FnOnce() -> TeneigStatus) -> TeneigStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        set_error("internal panic");
        TeneigStatus::Panic
    })
}

/// Last error message for this thread, NUL-terminated. The pointer stays
/// valid until the next failing call on the same thread. Never null.
#[no_mangle]
pub extern "C" fn teneig_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn teneig_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Parse the text tensor format (same as the CLI input files) and return a
/// new handle through `out`. The handle must be released with
/// [`teneig_free`].
///
/// # Safety
/// `text` must point to a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn teneig_parse(
    text: *const c_char,
    out: *mut *mut TeneigTensor,
) -> TeneigStatus {
    guarded(|| {
        if text.is_null() {
            return null_arg("text");
        }
        if out.is_null() {
            return null_arg("out");
        }
        let text = match CStr::from_ptr(text).to_str() {
            Ok(s) => s,
            Err(_) => {
                set_error("input text is not valid UTF-8");
                return TeneigStatus::Parse;
            }
        };
        match parse_tensor_file(text).and_then(|doc| doc.to_tensor()) {
            Ok(t) => {
                *out = Box::into_raw(Box::new(TeneigTensor(t)));
                TeneigStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `t` must be a pointer returned by [`teneig_parse`], released at most once.
#[no_mangle]
pub unsafe extern "C" fn teneig_free(t: *mut TeneigTensor) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Tensor order m, or 0 if the handle is null.
///
/// # Safety
/// `t` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn teneig_order(t: *const TeneigTensor) -> u32 {
    t.as_ref().map_or(0, |t| t.0.order() as u32)
}

/// Tensor dimension n, or 0 if the handle is null.
///
/// # Safety
/// `t` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn teneig_dim(t: *const TeneigTensor) -> u32 {
    t.as_ref().map_or(0, |t| t.0.dim() as u32)
}

/// Sum of diagonal entries.
///
/// # Safety
/// `t` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn teneig_trace(t: *const TeneigTensor, out: *mut f64) -> TeneigStatus {
    guarded(|| {
        let Some(t) = t.as_ref() else {
            return null_arg("t");
        };
        if out.is_null() {
            return null_arg("out");
        }
        *out = t.0.trace();
        TeneigStatus::Ok
    })
}

/// Exact determinant (product of all characteristic roots), available for
/// n = 2 or m = 2.
///
/// # Safety
/// `t` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn teneig_determinant(t: *const TeneigTensor, out: *mut f64) -> TeneigStatus {
    guarded(|| {
        let Some(t) = t.as_ref() else {
            return null_arg("t");
        };
        if out.is_null() {
            return null_arg("out");
        }
        match spectral_summary(&t.0) {
            Ok(s) => {
                *out = s.invariants.determinant.unwrap_or(f64::NAN);
                TeneigStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Distinct real characteristic roots, descending, with multiplicities.
///
/// Writes at most `capacity` clusters into `values` / `multiplicities` and
/// the total cluster count into `count`. If `capacity` is too small,
/// returns `BUFFER_TOO_SMALL` with the required size in `count`.
/// `complex_count` (optional, may be null) receives the number of
/// characteristic roots that are not real.
///
/// # Safety
/// `t` must be a live handle; `values` and `multiplicities` must hold
/// `capacity` elements (may be null when `capacity` is 0); `count` must be
/// valid.
#[no_mangle]
pub unsafe extern "C" fn teneig_spectrum(
    t: *const TeneigTensor,
    values: *mut f64,
    multiplicities: *mut u32,
    capacity: usize,
    count: *mut usize,
    complex_count: *mut usize,
) -> TeneigStatus {
    guarded(|| {
        let Some(t) = t.as_ref() else {
            return null_arg("t");
        };
        if count.is_null() {
            return null_arg("count");
        }
        let summary = match spectral_summary(&t.0) {
            Ok(s) => s,
            Err(e) => return fail(&e),
        };
        let roots = &summary.spectrum.real_roots;
        *count = roots.len();
        if !complex_count.is_null() {
            *complex_count = summary.spectrum.complex_count;
        }
        if roots.len() > capacity {
            set_error("spectrum buffer too small");
            return TeneigStatus::BufferTooSmall;
        }
        for (i, &(v, k)) in roots.iter().enumerate() {
            if !values.is_null() {
                *values.add(i) = v;
            }
            if !multiplicities.is_null() {
                *multiplicities.add(i) = k as u32;
            }
        }
        TeneigStatus::Ok
    })
}

/// Hull of the Gershgorin disk union; every real H-eigenvalue lies inside.
///
/// # Safety
/// `t` must be a live handle; `lower` and `upper` must be valid.
#[no_mangle]
pub unsafe extern "C" fn teneig_gershgorin_interval(
    t: *const TeneigTensor,
    lower: *mut f64,
    upper: *mut f64,
) -> TeneigStatus {
    guarded(|| {
        let Some(t) = t.as_ref() else {
            return null_arg("t");
        };
        if lower.is_null() {
            return null_arg("lower");
        }
        if upper.is_null() {
            return null_arg("upper");
        }
        let (lo, hi) = gershgorin_interval(&gershgorin_disks(&t.0));
        *lower = lo;
        *upper = hi;
        TeneigStatus::Ok
    })
}

/// Best invariant-based upper bound on the largest eigenvalue.
///
/// `external_determinant` supplies the determinant for shapes without an
/// exact path (n >= 3 with m >= 3); pass NAN to require the exact one.
///
/// # Safety
/// `t` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn teneig_lambda_max_upper(
    t: *const TeneigTensor,
    external_determinant: f64,
    out: *mut f64,
) -> TeneigStatus {
    guarded(|| {
        let Some(t) = t.as_ref() else {
            return null_arg("t");
        };
        if out.is_null() {
            return null_arg("out");
        }
        let t = &t.0;
        let inputs = if t.dim() == 2 || t.order() == 2 {
            BoundInputs::from_tensor(t)
        } else {
            let det = (!external_determinant.is_nan()).then_some(external_determinant);
            BoundInputs::from_invariants(&t.spectral_invariants(det), t.dim())
        };
        match inputs.and_then(|inp| lambda_max_upper_best(&inp)) {
            Ok((value, _)) => {
                *out = value;
                TeneigStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Positive definiteness verdict for the form A x^m.
///
/// # Safety
/// `t` must be a live handle; `verdict` must be valid.
#[no_mangle]
pub unsafe extern "C" fn teneig_certify(
    t: *const TeneigTensor,
    verdict: *mut TeneigVerdict,
) -> TeneigStatus {
    guarded(|| {
        let Some(t) = t.as_ref() else {
            return null_arg("t");
        };
        if verdict.is_null() {
            return null_arg("verdict");
        }
        *verdict = match certify_pd(&t.0).verdict {
            Verdict::CertifiedPd => TeneigVerdict::CertifiedPd,
            Verdict::CertifiedNotPd => TeneigVerdict::CertifiedNotPd,
            Verdict::Inconclusive => TeneigVerdict::Inconclusive,
        };
        TeneigStatus::Ok
    })
}

/// Lyapunov check of V(x) = A x^m for the gradient flow x' = -grad V over
/// `samples` seeded unit-sphere points. `stable` receives 1 or 0;
/// `max_vdot` (optional, may be null) the largest sampled derivative.
///
/// # Safety
/// `t` must be a live handle; `stable` must be valid.
#[no_mangle]
pub unsafe extern "C" fn teneig_lyapunov_stable(
    t: *const TeneigTensor,
    samples: usize,
    seed: u64,
    stable: *mut i32,
    max_vdot: *mut f64,
) -> TeneigStatus {
    guarded(|| {
        let Some(t) = t.as_ref() else {
            return null_arg("t");
        };
        if stable.is_null() {
            return null_arg("stable");
        }
        match lyapunov_gradient_flow_check(&t.0, samples, seed) {
            Ok(report) => {
                *stable = report.stable as i32;
                if !max_vdot.is_null() {
                    *max_vdot = report.max_vdot;
                }
                TeneigStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}
