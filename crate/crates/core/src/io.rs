//! Matrix and report serialization: canonical JSON, LaTeX `pmatrix` bodies
//! and plain text.
//!
//! JSON layout: `{"dim", "param", "field", "entries": [{"row", "col", "value"}]}`
//! with 1-based indices in row-major order and values in the canonical scalar
//! grammar. Emitting, parsing and emitting again is byte-identical.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::ParamMatrix;
use crate::scalar::{parse_param, Field, ParamScalar, ParseError};
use crate::ybe::{Equation, YbeReport};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("entry ({row}, {col}): {source}")]
    Value { row: usize, col: usize, source: ParseError },
    #[error("entry ({0}, {1}) is outside the {2}x{2} matrix")]
    OutOfRange(usize, usize, usize),
    #[error("entry ({0}, {1}) appears twice")]
    Duplicate(usize, usize),
    #[error("entry ({0}, {1}) uses `{2}`, which the `param` field does not declare")]
    UndeclaredParameter(usize, usize, &'static str),
    #[error("unknown field `{0}`")]
    Field(String),
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
struct EntryJson {
    row: usize,
    col: usize,
    value: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
struct MatrixJson {
    dim: usize,
    param: Option<String>,
    field: String,
    entries: Vec<EntryJson>,
}

/// Smallest field holding every coefficient.
pub fn matrix_field(m: &ParamMatrix) -> Field {
    let mut field = Field::Rational;
    for (_, _, x) in m.entries() {
        for (_, c) in x.terms() {
            field = field.join(c.field()).expect("entries of one matrix share a field");
        }
    }
    field
}

fn uses(x: &ParamScalar) -> (bool, bool) {
    x.terms().fold((false, false), |(mu, nu), (m, _)| (mu || m.mu != 0, nu || m.nu != 0))
}

fn param_tag(m: &ParamMatrix) -> Option<String> {
    let (mu, nu) = m.entries().fold((false, false), |acc, (_, _, x)| {
        let (a, b) = uses(x);
        (acc.0 || a, acc.1 || b)
    });
    match (mu, nu) {
        (_, true) => Some("mu,nu".to_string()),
        (true, false) => Some("mu".to_string()),
        _ => None,
    }
}

pub fn to_json(m: &ParamMatrix) -> String {
    let doc = MatrixJson {
        dim: m.dim(),
        param: param_tag(m),
        field: matrix_field(m).to_string(),
        entries: m.entries().map(|(r, c, x)| EntryJson { row: r + 1, col: c + 1, value: x.to_string() }).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<ParamMatrix, IoError> {
    let doc: MatrixJson = serde_json::from_str(text)?;
    let field: Field = doc.field.parse().map_err(|_| IoError::Field(doc.field.clone()))?;
    let declared = doc.param.as_deref().unwrap_or("");
    let (allow_mu, allow_nu) = (declared.contains("mu"), declared.contains("nu"));
    let mut m = ParamMatrix::zeros(doc.dim);
    let mut seen = std::collections::BTreeSet::new();
    for e in &doc.entries {
        if e.row == 0 || e.col == 0 || e.row > doc.dim || e.col > doc.dim {
            return Err(IoError::OutOfRange(e.row, e.col, doc.dim));
        }
        if !seen.insert((e.row, e.col)) {
            return Err(IoError::Duplicate(e.row, e.col));
        }
        let x = parse_param(&e.value, field).map_err(|source| IoError::Value { row: e.row, col: e.col, source })?;
        let (mu, nu) = uses(&x);
        if mu && !allow_mu {
            return Err(IoError::UndeclaredParameter(e.row, e.col, "mu"));
        }
        if nu && !allow_nu {
            return Err(IoError::UndeclaredParameter(e.row, e.col, "nu"));
        }
        m.set(e.row - 1, e.col - 1, x);
    }
    Ok(m)
}

/// Rewrites a canonical scalar string with LaTeX exponents and Greek
/// parameters.
pub fn latex_scalar(x: &ParamScalar) -> String {
    let src = x.to_string();
    let chars: Vec<char> = src.chars().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < chars.len() {
        match chars[i] {
            '^' => {
                let start = i + 1;
                let mut end = start;
                if end < chars.len() && chars[end] == '-' {
                    end += 1;
                }
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                let exp: String = chars[start..end].iter().collect();
                if exp.len() == 1 {
                    out.push('^');
                    out.push_str(&exp);
                } else {
                    out.push_str(&format!("^{{{}}}", exp));
                }
                i = end;
            }
            '*' => {
                out.push(' ');
                i += 1;
            }
            'm' | 'n' if chars.get(i + 1) == Some(&'u') => {
                out.push_str(if chars[i] == 'm' { "\\mu" } else { "\\nu" });
                i += 2;
                if chars.get(i).is_some_and(|c| c.is_alphanumeric()) {
                    out.push(' ');
                }
            }
            c => {
                out.push(c);
                i += 1;
            }
        }
    }
    out
}

/// Body of a `pmatrix` environment.
pub fn to_latex(m: &ParamMatrix) -> String {
    let mut rows = Vec::with_capacity(m.dim());
    for r in 0..m.dim() {
        let cells: Vec<String> = (0..m.dim()).map(|c| latex_scalar(&m.get(r, c))).collect();
        rows.push(cells.join(" & "));
    }
    format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}\n", rows.join(" \\\\\n"))
}

/// Column-aligned plain text.
pub fn to_text(m: &ParamMatrix) -> String {
    let cells: Vec<Vec<String>> =
        (0..m.dim()).map(|r| (0..m.dim()).map(|c| m.get(r, c).to_string()).collect()).collect();
    let widths: Vec<usize> =
        (0..m.dim()).map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(1)).collect();
    let mut out = String::new();
    for row in &cells {
        let padded: Vec<String> =
            row.iter().zip(&widths).map(|(s, w)| format!("{}{}", s, " ".repeat(w - s.chars().count()))).collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct WorstJson {
    row: usize,
    col: usize,
    value: String,
}

#[derive(Serialize)]
struct ReportJson {
    equation: Equation,
    local_dim: usize,
    dim: usize,
    passed: bool,
    residual_nonzero: usize,
    worst: Option<WorstJson>,
}

pub fn report_json(r: &YbeReport) -> String {
    let doc = ReportJson {
        equation: r.equation,
        local_dim: r.local_dim,
        dim: r.residual.dim(),
        passed: r.passed,
        residual_nonzero: r.residual.nnz(),
        worst: r.worst.as_ref().map(|(row, col, v)| WorstJson { row: *row, col: *col, value: v.to_string() }),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Monomial, Scalar};

    fn sample() -> ParamMatrix {
        let mut m = ParamMatrix::identity(4);
        let s = Scalar::s();
        m.set(1, 2, ParamScalar::term(&s - &s.inv().unwrap(), Monomial::mu(1)));
        m.set(0, 0, ParamScalar::constant(Scalar::s_pow(-3)));
        m
    }

    #[test]
    fn json_round_trip() {
        let m = sample();
        let text = to_json(&m);
        let back = from_json(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(to_json(&back), text);
        assert!(text.contains("\"param\": \"mu\""));
        assert!(text.contains("\"field\": \"Q(s)\""));
    }

    #[test]
    fn json_rejects_bad_documents() {
        let bad = r#"{"dim": 2, "param": null, "field": "Q", "entries": [{"row": 3, "col": 1, "value": "1"}]}"#;
        assert!(matches!(from_json(bad), Err(IoError::OutOfRange(3, 1, 2))));
        let undeclared = r#"{"dim": 2, "param": null, "field": "Q", "entries": [{"row": 1, "col": 1, "value": "mu"}]}"#;
        assert!(matches!(from_json(undeclared), Err(IoError::UndeclaredParameter(1, 1, "mu"))));
        assert!(from_json("{").is_err());
    }

    #[test]
    fn latex_forms() {
        let x = ParamScalar::term(Scalar::s_pow(-1) - Scalar::s_pow(3), Monomial::mu(2));
        assert_eq!(latex_scalar(&x), "(s^{-1} - s^3) \\mu^2");
        let tex = to_latex(&sample());
        assert!(tex.starts_with("\\begin{pmatrix}\ns^{-3} & 0 & 0 & 0 \\\\"));
    }
}
