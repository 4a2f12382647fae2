//! Rendering for the CLI commands: fixed-layout text reports, machine JSON,
//! and the comparison datasets (CSV and simple SVG charts).

use crate::bounds::{
    gershgorin_disks, gershgorin_interval, lambda_max_upper_best, lambda_min_bounds, t1_sum_upper,
    t1_tail_product_lower, t2_chain, t3_bracket, t4_product_upper, t4_tail_product_lower,
    t5_product_bracket, t6_sum_upper, BoundInputs, Hypothesis, TheoremId,
};
use crate::certify::{
    certify_pd_gershgorin, lyapunov_gradient_flow_check, CertMethod, Verdict, Witness,
};
use crate::doc::TensorDocument;
use crate::error::{Result, TensorError};
use crate::oracle::{spectral_summary, SpectralSummary};
use crate::tensor::SymmetricTensor;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

/// A rendered command: human text, machine JSON, and the process exit code.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub exit_code: i32,
    /// Figure datasets, present for `compare` only.
    pub compare_data: Option<CompareData>,
}

/// The three figure datasets emitted by `compare`.
#[derive(Debug, Clone)]
pub struct CompareData {
    /// (label, value, kind): actual largest eigenvalue and each upper bound.
    pub hierarchy: Vec<(String, f64, String)>,
    /// (label, value, kind): distinct real roots plus bound lines.
    pub distribution: Vec<(String, f64, String)>,
    /// (method, lower, upper): proposed / Gershgorin / actual intervals.
    pub intervals: Vec<(String, f64, f64)>,
}

fn banner() -> String {
    format!("# teneig {}", env!("CARGO_PKG_VERSION"))
}

/// Four significant digits, trailing zeros trimmed; scientific notation
/// outside [1e-4, 1e4). Full-precision output never goes through here.
pub(crate) fn fmt4(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-4..=3).contains(&exp) {
        let s = format!("{:.*}", (3 - exp).max(0) as usize, v);
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        let s = format!("{:.3e}", v);
        let (mant, e) = s.split_once('e').expect("always has an exponent");
        let mant = if mant.contains('.') {
            mant.trim_end_matches('0').trim_end_matches('.')
        } else {
            mant
        };
        format!("{mant}e{e}")
    }
}

fn header_line(doc: &TensorDocument) -> String {
    match &doc.name {
        Some(name) => format!("tensor m={} n={} ({name})", doc.order, doc.dimension),
        None => format!("tensor m={} n={}", doc.order, doc.dimension),
    }
}

fn root_rows(summary: &SpectralSummary) -> Vec<(f64, usize, f64, bool)> {
    summary
        .spectrum
        .real_roots
        .iter()
        .map(|&(value, mult)| {
            let (residual, is_h) = summary
                .h_eigenvalues
                .iter()
                .find(|c| c.value == value)
                .map(|c| (c.residual, true))
                .or_else(|| {
                    summary
                        .spurious_real
                        .iter()
                        .find(|c| c.value == value)
                        .map(|c| (c.residual, false))
                })
                .expect("every root cluster is classified");
            (value, mult, residual, is_h)
        })
        .collect()
}

pub fn cmd_spectrum(doc: &TensorDocument) -> Result<Report> {
    let t = doc.to_tensor()?;
    let summary = spectral_summary(&t)?;
    let inv = &summary.invariants;

    let mut text = String::new();
    text.push_str(&banner());
    text.push('\n');
    text.push_str(&header_line(doc));
    text.push('\n');
    text.push_str(&format!("d = {}\n", inv.d));
    text.push_str(&format!("trace = {}\n", fmt4(inv.trace)));
    text.push_str(&format!("S = {}\n", fmt4(inv.scaled_trace)));
    if let Some(det) = inv.determinant {
        text.push_str(&format!("det = {}\n", fmt4(det)));
    }
    text.push_str("real roots (descending):\n");
    let rows = root_rows(&summary);
    for &(value, mult, residual, is_h) in &rows {
        let tag = if is_h { "H-eigenvalue" } else { "spurious" };
        text.push_str(&format!(
            "  {:<12} x{:<3} {} (residual {})\n",
            fmt4(value),
            mult,
            tag,
            fmt4(residual)
        ));
    }
    text.push_str(&format!(
        "complex roots: {}\n",
        summary.spectrum.complex_count
    ));

    let json = json!({
        "command": "spectrum",
        "tensor": {"m": doc.order, "n": doc.dimension, "name": doc.name},
        "d": inv.d,
        "trace": inv.trace,
        "scaled_trace": inv.scaled_trace,
        "determinant": inv.determinant,
        "real_roots": rows.iter().map(|&(value, mult, residual, is_h)| json!({
            "value": value,
            "multiplicity": mult,
            "residual": residual,
            "h_eigenvalue": is_h,
        })).collect::<Vec<_>>(),
        "complex_count": summary.spectrum.complex_count,
    });

    Ok(Report {
        text,
        json,
        exit_code: 0,
        compare_data: None,
    })
}

/// Invariant inputs for bound evaluation, from the exact oracle when the
/// shape allows and from the supplied determinant otherwise.
fn bound_inputs(doc: &TensorDocument, t: &SymmetricTensor) -> Result<BoundInputs> {
    if t.dim() == 2 || t.order() == 2 {
        BoundInputs::from_tensor(t)
    } else {
        BoundInputs::from_invariants(&t.spectral_invariants(doc.external_determinant), t.dim())
    }
}

struct BoundTable {
    rows: Vec<(String, String, String)>,
    json_bounds: Vec<Value>,
    json_brackets: Vec<Value>,
}

fn bound_table(inp: &BoundInputs, k: usize, l: usize) -> Result<BoundTable> {
    let mut rows = Vec::new();
    let mut json_bounds = Vec::new();
    let mut json_brackets = Vec::new();
    let push = |b: crate::bounds::BoundValue,
                rows: &mut Vec<(String, String, String)>,
                json_bounds: &mut Vec<Value>| {
        rows.push((
            format!("{} k={}", b.theorem_id, b.k),
            fmt4(b.value),
            b.kind.to_string(),
        ));
        json_bounds.push(json!({
            "theorem_id": b.theorem_id,
            "k": b.k,
            "value": b.value,
            "kind": b.kind,
            "hypothesis": b.hypothesis,
        }));
    };

    // parameter errors surface to the caller; bounds whose window simply
    // excludes this k are skipped so the table shows what applies
    push(t1_sum_upper(inp, k)?, &mut rows, &mut json_bounds);
    push(t1_tail_product_lower(inp, k)?, &mut rows, &mut json_bounds);
    for b in t2_chain(inp, k)? {
        push(b, &mut rows, &mut json_bounds);
    }
    if k <= inp.d.saturating_sub(2) {
        push(t4_product_upper(inp, k)?, &mut rows, &mut json_bounds);
    }
    if k >= 2 {
        push(t4_tail_product_lower(inp, k)?, &mut rows, &mut json_bounds);
    }
    push(t6_sum_upper(inp, k)?, &mut rows, &mut json_bounds);

    let (lo, hi) = t3_bracket(inp, k, l)?;
    rows.push((
        format!("T3_bracket k={k} l={l}"),
        format!("[{}, {}]", fmt4(lo), fmt4(hi)),
        "interval".into(),
    ));
    json_brackets.push(json!({
        "theorem_id": TheoremId::T3Bracket,
        "k": k, "l": l, "lower": lo, "upper": hi,
    }));
    if l <= inp.d.saturating_sub(2) {
        let (lo, hi) = t5_product_bracket(inp, k, l)?;
        rows.push((
            format!("T5_bracket k={k} l={l}"),
            format!("[{}, {}]", fmt4(lo), fmt4(hi)),
            "interval".into(),
        ));
        json_brackets.push(json!({
            "theorem_id": "T5_bracket",
            "k": k, "l": l, "lower": lo, "upper": hi,
        }));
    }
    Ok(BoundTable {
        rows,
        json_bounds,
        json_brackets,
    })
}

pub fn cmd_bounds(doc: &TensorDocument, k: Option<usize>, l: Option<usize>) -> Result<Report> {
    let t = doc.to_tensor()?;
    let inp = bound_inputs(doc, &t)?;
    let k = k.unwrap_or(1);
    let l = l.unwrap_or(k);
    let disks = gershgorin_disks(&t);
    let (glo, ghi) = gershgorin_interval(&disks);

    let mut text = String::new();
    text.push_str(&banner());
    text.push('\n');
    text.push_str(&header_line(doc));
    text.push('\n');
    text.push_str(&format!(
        "d = {}  S = {}  det = {}\n",
        inp.d,
        fmt4(inp.s),
        fmt4(inp.det)
    ));
    text.push_str(&format!("hypothesis: {}\n", inp.hypothesis));
    if inp.hypothesis == Hypothesis::Violated {
        text.push_str(
            "warning: the spectrum is not all-positive; values below are not valid bounds\n",
        );
    }
    text.push('\n');
    text.push_str(&format!("{:<24} {:>16}  {}\n", "bound", "value", "kind"));

    let table = bound_table(&inp, k, l)?;
    for (label, value, kind) in &table.rows {
        text.push_str(&format!("{label:<24} {value:>16}  {kind}\n"));
    }
    text.push_str(&format!(
        "{:<24} {:>16}  interval\n",
        "Gershgorin_lower",
        fmt4(glo)
    ));
    text.push_str(&format!(
        "{:<24} {:>16}  interval\n",
        "Gershgorin_upper",
        fmt4(ghi)
    ));
    let mins = lambda_min_bounds(&inp)?;
    // det/S is reported for reference but is not a certified bound; the
    // valid lambda_min lower bound is the T1 tail row at k=1
    text.push_str(&format!(
        "{:<24} {:>16}  shortcut\n",
        "MinEig_lower_simple",
        fmt4(mins.lower_simple)
    ));
    text.push_str(&format!(
        "{:<24} {:>16}  interval\n",
        "MinEig_upper_mean",
        fmt4(mins.upper_mean)
    ));
    let (best, source) = lambda_max_upper_best(&inp)?;
    text.push('\n');
    text.push_str(&format!(
        "best upper bound on lambda_max: {} ({source})\n",
        fmt4(best)
    ));

    let json = json!({
        "command": "bounds",
        "tensor": {"m": doc.order, "n": doc.dimension, "name": doc.name},
        "d": inp.d,
        "scaled_trace": inp.s,
        "determinant": inp.det,
        "hypothesis": inp.hypothesis,
        "k": k,
        "l": l,
        "bounds": table.json_bounds,
        "brackets": table.json_brackets,
        "gershgorin": {
            "disks": disks,
            "interval": [glo, ghi],
        },
        "lambda_min": mins,
        "lambda_max_best": {"value": best, "source": source},
    });

    Ok(Report {
        text,
        json,
        exit_code: 0,
        compare_data: None,
    })
}

pub fn cmd_compare(doc: &TensorDocument) -> Result<Report> {
    let t = doc.to_tensor()?;
    let inp = bound_inputs(doc, &t)?;
    let summary = spectral_summary(&t).ok();
    let disks = gershgorin_disks(&t);
    let (glo, ghi) = gershgorin_interval(&disks);
    let mins = lambda_min_bounds(&inp)?;
    let (best, best_source) = lambda_max_upper_best(&inp)?;

    let actual_max = summary.as_ref().and_then(|s| s.lambda_max_h());
    let actual_min = summary.as_ref().and_then(|s| s.lambda_min_h());

    let mut hierarchy: Vec<(String, f64, String)> = Vec::new();
    if let Some(v) = actual_max {
        hierarchy.push(("actual_lambda_max".into(), v, "actual".into()));
    }
    for (id, value) in [
        (
            TheoremId::T1SumUpper,
            t1_sum_upper(&inp, 1).ok().map(|b| b.value),
        ),
        (
            TheoremId::T4ProdUpper,
            t4_product_upper(&inp, 1).ok().map(|b| b.value),
        ),
        (
            TheoremId::T6SumUpper,
            t6_sum_upper(&inp, 1).ok().map(|b| b.value),
        ),
    ] {
        if let Some(value) = value {
            hierarchy.push((format!("{id} k=1"), value, "upper_bound".into()));
        }
    }
    hierarchy.push(("Gershgorin_upper".into(), ghi, "upper_bound".into()));

    let mut distribution: Vec<(String, f64, String)> = Vec::new();
    if let Some(s) = &summary {
        for (i, &(value, mult, _, is_h)) in root_rows(s).iter().enumerate() {
            let kind = if is_h {
                "h_eigenvalue"
            } else {
                "spurious_root"
            };
            distribution.push((format!("root_{} x{}", i + 1, mult), value, kind.into()));
        }
    }
    for (label, value, _) in hierarchy
        .iter()
        .filter(|(_, _, kind)| kind == "upper_bound")
    {
        distribution.push((label.clone(), *value, "bound".into()));
    }

    let mut intervals: Vec<(String, f64, f64)> = Vec::new();
    intervals.push(("proposed".into(), mins.lower_t1, best));
    intervals.push(("gershgorin".into(), glo, ghi));
    if let (Some(lo), Some(hi)) = (actual_min, actual_max) {
        intervals.push(("actual".into(), lo, hi));
    }

    let mut text = String::new();
    text.push_str(&banner());
    text.push('\n');
    text.push_str(&header_line(doc));
    text.push('\n');
    text.push_str(&format!("hypothesis: {}\n", inp.hypothesis));
    if inp.hypothesis == Hypothesis::Violated {
        text.push_str(
            "warning: the spectrum is not all-positive; bound values are not guaranteed\n",
        );
    }
    text.push('\n');
    text.push_str(&format!(
        "{:<24} {:>16}  {}\n",
        "label", "value", "error_vs_actual"
    ));
    for (label, value, kind) in &hierarchy {
        let err = match (kind.as_str(), actual_max) {
            ("upper_bound", Some(a)) => fmt4(value - a),
            _ => "-".into(),
        };
        text.push_str(&format!("{:<24} {:>16}  {}\n", label, fmt4(*value), err));
    }
    text.push('\n');
    text.push_str("intervals (lower, upper):\n");
    for (method, lo, hi) in &intervals {
        text.push_str(&format!(
            "  {:<12} [{}, {}]\n",
            method,
            fmt4(*lo),
            fmt4(*hi)
        ));
    }
    text.push_str(&format!(
        "best upper bound on lambda_max: {} ({best_source})\n",
        fmt4(best)
    ));

    let json = json!({
        "command": "compare",
        "tensor": {"m": doc.order, "n": doc.dimension, "name": doc.name},
        "hypothesis": inp.hypothesis,
        "hierarchy": hierarchy.iter().map(|(label, value, kind)| json!({
            "label": label, "value": value, "kind": kind,
            "error_vs_actual": match (kind.as_str(), actual_max) {
                ("upper_bound", Some(a)) => Value::from(value - a),
                _ => Value::Null,
            },
        })).collect::<Vec<_>>(),
        "distribution": distribution.iter().map(|(label, value, kind)| json!({
            "label": label, "value": value, "kind": kind,
        })).collect::<Vec<_>>(),
        "intervals": intervals.iter().map(|(method, lo, hi)| json!({
            "method": method, "lower": lo, "upper": hi,
        })).collect::<Vec<_>>(),
    });

    Ok(Report {
        text,
        json,
        exit_code: 0,
        compare_data: Some(CompareData {
            hierarchy,
            distribution,
            intervals,
        }),
    })
}

pub fn cmd_certify(doc: &TensorDocument, samples: usize, seed: u64) -> Result<Report> {
    let t = doc.to_tensor()?;
    let report = lyapunov_gradient_flow_check(&t, samples, seed)?;
    let cert = &report.pd_certificate;

    let mut text = String::new();
    text.push_str(&banner());
    text.push('\n');
    text.push_str(&header_line(doc));
    text.push('\n');
    text.push_str(&format!("verdict: {}\n", cert.verdict));
    text.push_str(&format!("method: {}\n", cert.method));
    match &cert.witness {
        Witness::LambdaMin(v) => {
            let label = if cert.method == CertMethod::ExactSpectrum {
                "smallest H-eigenvalue"
            } else {
                "certified lower bound"
            };
            text.push_str(&format!("witness: {label} = {}\n", fmt4(*v)));
        }
        Witness::Disk(d) => text.push_str(&format!(
            "witness: disk {} = [{}, {}]\n",
            d.index,
            fmt4(d.center - d.radius),
            fmt4(d.center + d.radius)
        )),
        Witness::Point { x, value } => {
            let coords: Vec<String> = x.iter().map(|v| fmt4(*v)).collect();
            text.push_str(&format!(
                "witness: f(({})) = {}\n",
                coords.join(", "),
                fmt4(*value)
            ));
        }
    }
    match cert.method {
        CertMethod::OddOrder => {
            text.push_str("note: an odd-order form satisfies f(-x) = -f(x), so it cannot be positive definite\n");
        }
        CertMethod::Gershgorin if cert.verdict == Verdict::Inconclusive => {
            text.push_str(
                "note: the disk interval reaches below zero and sampling found no counterexample\n",
            );
        }
        _ => {}
    }
    // the invariant bound is only meaningful under a verified all-positive
    // spectrum; elsewhere the exact witness above is the whole story
    if let Ok(inp) = bound_inputs(doc, &t) {
        if inp.hypothesis == Hypothesis::VerifiedPositive {
            if let Ok(mins) = lambda_min_bounds(&inp) {
                text.push_str(&format!(
                    "lambda_min lower bound (det/S): {}\n",
                    fmt4(mins.lower_simple)
                ));
            }
        }
    }
    text.push_str(&format!(
        "lyapunov gradient flow: {} samples (seed {seed})\n",
        report.sample_count
    ));
    text.push_str(&format!("max Vdot: {}\n", fmt4(report.max_vdot)));
    text.push_str(&format!(
        "stable: {}\n",
        if report.stable { "yes" } else { "no" }
    ));

    let exit_code = match cert.verdict {
        Verdict::CertifiedPd if report.stable => 0,
        Verdict::Inconclusive => 5,
        _ => 1,
    };

    let json = json!({
        "command": "certify",
        "tensor": {"m": doc.order, "n": doc.dimension, "name": doc.name},
        "certificate": cert,
        "lyapunov": {
            "sample_count": report.sample_count,
            "seed": seed,
            "max_vdot": report.max_vdot,
            "stable": report.stable,
        },
    });

    Ok(Report {
        text,
        json,
        exit_code,
        compare_data: None,
    })
}

/// A Gershgorin-only certificate report for the same document, exposed so
/// the exact and interval-only verdicts can be compared side by side.
pub fn gershgorin_only_verdict(doc: &TensorDocument) -> Result<Verdict> {
    Ok(certify_pd_gershgorin(&doc.to_tensor()?).verdict)
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// The three CSV files for a `compare` run, as (path, contents) pairs.
/// Values are written at full precision.
pub fn compare_csv_files(data: &CompareData, stem: &Path) -> Vec<(PathBuf, String)> {
    let with_suffix = |suffix: &str| {
        let mut name = stem
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "compare".into());
        name.push_str(suffix);
        stem.with_file_name(name)
    };
    let mut hierarchy = String::from("label,value,kind\n");
    for (label, value, kind) in &data.hierarchy {
        hierarchy.push_str(&format!("{},{},{}\n", csv_escape(label), value, kind));
    }
    let mut distribution = String::from("label,value,kind\n");
    for (label, value, kind) in &data.distribution {
        distribution.push_str(&format!("{},{},{}\n", csv_escape(label), value, kind));
    }
    let mut intervals = String::from("method,lower,upper\n");
    for (method, lo, hi) in &data.intervals {
        intervals.push_str(&format!("{},{},{}\n", csv_escape(method), lo, hi));
    }
    vec![
        (with_suffix("_hierarchy.csv"), hierarchy),
        (with_suffix("_distribution.csv"), distribution),
        (with_suffix("_intervals.csv"), intervals),
    ]
}

fn svg_document(body: &str, width: u32, height: u32) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\" font-family=\"monospace\" font-size=\"12\">\n{body}</svg>\n"
    )
}

/// Map a value into [x0, x1] given the data range.
fn scale(v: f64, lo: f64, hi: f64, x0: f64, x1: f64) -> f64 {
    if hi > lo {
        x0 + (v - lo) / (hi - lo) * (x1 - x0)
    } else {
        0.5 * (x0 + x1)
    }
}

/// Bar/line charts of the comparison datasets, as (path, contents) pairs.
pub fn compare_svg_files(data: &CompareData, stem: &Path) -> Vec<(PathBuf, String)> {
    let with_suffix = |suffix: &str| {
        let mut name = stem
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "compare".into());
        name.push_str(suffix);
        stem.with_file_name(name)
    };
    let width = 640u32;
    let row_h = 24.0;
    let label_w = 200.0;

    let bar_chart = |rows: &[(String, f64, String)]| {
        let lo = rows.iter().map(|r| r.1).fold(0.0f64, f64::min);
        let hi = rows.iter().map(|r| r.1).fold(0.0f64, f64::max);
        let mut body = String::new();
        for (i, (label, value, kind)) in rows.iter().enumerate() {
            let y = 20.0 + i as f64 * row_h;
            let x0 = scale(0.0, lo, hi, label_w, width as f64 - 80.0);
            let x1 = scale(*value, lo, hi, label_w, width as f64 - 80.0);
            let fill = if kind == "actual" {
                "#2c7fb8"
            } else {
                "#999999"
            };
            body.push_str(&format!(
                "<text x=\"4\" y=\"{:.1}\">{label}</text>\n",
                y + 12.0
            ));
            body.push_str(&format!(
                "<rect x=\"{:.1}\" y=\"{y:.1}\" width=\"{:.1}\" height=\"16\" fill=\"{fill}\"/>\n",
                x0.min(x1),
                (x1 - x0).abs().max(1.0),
            ));
            body.push_str(&format!(
                "<text x=\"{:.1}\" y=\"{:.1}\">{}</text>\n",
                x0.max(x1) + 6.0,
                y + 12.0,
                fmt4(*value)
            ));
        }
        let height = 30 + (rows.len() as f64 * row_h) as u32;
        svg_document(&body, width, height)
    };

    let line_chart = |rows: &[(String, f64, String)]| {
        let lo = rows.iter().map(|r| r.1).fold(f64::INFINITY, f64::min);
        let hi = rows.iter().map(|r| r.1).fold(f64::NEG_INFINITY, f64::max);
        let axis_y = 60.0;
        let mut body = format!(
            "<line x1=\"40\" y1=\"{axis_y}\" x2=\"{}\" y2=\"{axis_y}\" stroke=\"#333333\"/>\n",
            width - 40
        );
        let mut text_y = 90.0;
        for (label, value, kind) in rows {
            let x = scale(*value, lo, hi, 40.0, width as f64 - 40.0);
            if kind == "bound" {
                body.push_str(&format!(
                    "<line x1=\"{x:.1}\" y1=\"20\" x2=\"{x:.1}\" y2=\"{axis_y}\" \
                     stroke=\"#d95f0e\" stroke-dasharray=\"4 3\"/>\n"
                ));
            } else {
                body.push_str(&format!(
                    "<circle cx=\"{x:.1}\" cy=\"{axis_y}\" r=\"5\" fill=\"#2c7fb8\"/>\n"
                ));
            }
            body.push_str(&format!(
                "<text x=\"40\" y=\"{text_y:.1}\">{label} = {}</text>\n",
                fmt4(*value)
            ));
            text_y += 16.0;
        }
        let height = (text_y + 10.0) as u32;
        svg_document(&body, width, height)
    };

    let interval_chart = |rows: &[(String, f64, f64)]| {
        let lo = rows.iter().map(|r| r.1).fold(f64::INFINITY, f64::min);
        let hi = rows.iter().map(|r| r.2).fold(f64::NEG_INFINITY, f64::max);
        let mut body = String::new();
        for (i, (method, a, b)) in rows.iter().enumerate() {
            let y = 30.0 + i as f64 * row_h;
            let x0 = scale(*a, lo, hi, label_w, width as f64 - 60.0);
            let x1 = scale(*b, lo, hi, label_w, width as f64 - 60.0);
            body.push_str(&format!(
                "<text x=\"4\" y=\"{:.1}\">{method} [{}, {}]</text>\n",
                y + 4.0,
                fmt4(*a),
                fmt4(*b)
            ));
            body.push_str(&format!(
                "<line x1=\"{x0:.1}\" y1=\"{y:.1}\" x2=\"{x1:.1}\" y2=\"{y:.1}\" \
                 stroke=\"#2c7fb8\" stroke-width=\"6\"/>\n"
            ));
        }
        let height = 40 + (rows.len() as f64 * row_h) as u32;
        svg_document(&body, width, height)
    };

    vec![
        (with_suffix("_hierarchy.svg"), bar_chart(&data.hierarchy)),
        (
            with_suffix("_distribution.svg"),
            line_chart(&data.distribution),
        ),
        (
            with_suffix("_intervals.svg"),
            interval_chart(&data.intervals),
        ),
    ]
}

/// Map an error to the documented process exit code.
pub fn error_exit_code(err: &TensorError) -> i32 {
    err.exit_code()
}
