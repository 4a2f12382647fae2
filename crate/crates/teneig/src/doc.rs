//! Line-oriented tensor files.
//!
//! ```text
//! # comment
//! tensor m=<int> n=<int>
//! det=<real>              # optional, dimension > 2 only
//! a <i1> <i2> ... <im> = <real>
//! ```
//!
//! Entries name unique orbits by their canonical (ascending) multi-index,
//! one per line. Parsing validates everything the tensor constructor would,
//! so a parsed document always converts.

use crate::error::{Result, TensorError};
use crate::tensor::SymmetricTensor;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct TensorDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub external_determinant: Option<f64>,
    pub entries: Vec<(Vec<usize>, f64)>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> TensorError {
    TensorError::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_keyed_int(token: &str, key: &str, line: usize) -> Result<usize> {
    token
        .strip_prefix(key)
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| parse_err(line, format!("expected {key}<integer>, got '{token}'")))
}

pub fn parse_tensor_file(text: &str) -> Result<TensorDocument> {
    let mut header: Option<(usize, usize)> = None;
    let mut external_determinant = None;
    let mut entries: Vec<(Vec<usize>, f64)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if header.is_none() {
            if tokens.len() != 3 || tokens[0] != "tensor" {
                return Err(parse_err(
                    line_no,
                    "expected header 'tensor m=<int> n=<int>'",
                ));
            }
            let m = parse_keyed_int(tokens[1], "m=", line_no)?;
            let n = parse_keyed_int(tokens[2], "n=", line_no)?;
            header = Some((m, n));
            continue;
        }
        let (m, n) = header.unwrap();
        if let Some(v) = tokens[0].strip_prefix("det=") {
            if tokens.len() != 1 {
                return Err(parse_err(line_no, "expected 'det=<real>' on its own line"));
            }
            let det: f64 = v
                .parse()
                .map_err(|_| parse_err(line_no, format!("bad determinant value '{v}'")))?;
            if n <= 2 {
                return Err(TensorError::Validation(format!(
                    "line {line_no}: det= is only accepted for dimension > 2 \
                     (the determinant is computed exactly for n = 2)"
                )));
            }
            if external_determinant.replace(det).is_some() {
                return Err(TensorError::Validation(format!(
                    "line {line_no}: det= given twice"
                )));
            }
            continue;
        }
        if tokens[0] != "a" || tokens.len() != m + 3 || tokens[m + 1] != "=" {
            return Err(parse_err(
                line_no,
                format!("expected 'a <i1> ... <i{m}> = <value>'"),
            ));
        }
        let mut idx = Vec::with_capacity(m);
        for tok in &tokens[1..=m] {
            idx.push(
                tok.parse::<usize>()
                    .map_err(|_| parse_err(line_no, format!("bad index component '{tok}'")))?,
            );
        }
        let value: f64 = tokens[m + 2]
            .parse()
            .map_err(|_| parse_err(line_no, format!("bad entry value '{}'", tokens[m + 2])))?;
        if !idx.windows(2).all(|w| w[0] <= w[1]) {
            return Err(TensorError::Validation(format!(
                "line {line_no}: index {idx:?} must be in canonical ascending order"
            )));
        }
        entries.push((idx, value));
    }
    let (order, dimension) = header.ok_or_else(|| parse_err(0, "missing 'tensor m= n=' header"))?;
    let doc = TensorDocument {
        name: None,
        order,
        dimension,
        external_determinant,
        entries,
    };
    doc.to_tensor()?; // surface range/duplicate problems at parse time
    Ok(doc)
}

impl TensorDocument {
    pub fn from_tensor(t: &SymmetricTensor, name: Option<String>) -> Self {
        TensorDocument {
            name,
            order: t.order(),
            dimension: t.dim(),
            external_determinant: None,
            entries: t
                .unique_entries()
                .map(|(idx, v, _)| (idx.indices().to_vec(), v))
                .collect(),
        }
    }

    pub fn to_tensor(&self) -> Result<SymmetricTensor> {
        SymmetricTensor::from_unique_entries(self.order, self.dimension, &self.entries)
    }

    /// Canonical text form; comments are not preserved but entry order is,
    /// so parse -> to_text -> parse is the identity.
    pub fn to_text(&self) -> String {
        let mut out = format!("tensor m={} n={}\n", self.order, self.dimension);
        if let Some(det) = self.external_determinant {
            out.push_str(&format!("det={det}\n"));
        }
        for (idx, value) in &self.entries {
            out.push_str("a");
            for i in idx {
                out.push_str(&format!(" {i}"));
            }
            out.push_str(&format!(" = {value}\n"));
        }
        out
    }
}
