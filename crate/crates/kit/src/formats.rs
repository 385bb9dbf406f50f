//! JSON file formats.
//!
//! Matrices are stored as `{"rows": r, "cols": c, "data": [[re, im], ...]}`
//! in row-major order. States, operators and vectors use the same layout;
//! a vector is a single row or a single column.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use ur_core::experiments::AuditReport;
use ur_core::gram::{GramDecomposition, OrthoOperatorSet};
use ur_core::{BoundReport, Complex64, ComplexMatrix, Component, DensityState, Operator};

use crate::error::{KitError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<[f64; 2]>,
}

impl MatrixJson {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            data: m.data().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_matrix(&self) -> ur_core::Result<ComplexMatrix> {
        let data = self.data.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        ComplexMatrix::new(self.rows, self.cols, data)
    }
}

pub fn parse_matrix(text: &str) -> std::result::Result<ComplexMatrix, String> {
    let raw: MatrixJson = serde_json::from_str(text).map_err(|e| e.to_string())?;
    raw.to_matrix().map_err(|e| e.to_string())
}

pub fn matrix_to_string(m: &ComplexMatrix) -> String {
    serde_json::to_string_pretty(&MatrixJson::from_matrix(m)).expect("plain data serializes")
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| {
        if source.kind() == std::io::ErrorKind::NotFound {
            KitError::FileNotFound(path.to_path_buf())
        } else {
            KitError::Io {
                path: path.to_path_buf(),
                source,
            }
        }
    })
}

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    parse_matrix(&read_text(path)?).map_err(|message| KitError::Parse {
        path: path.to_path_buf(),
        message,
    })
}

/// Loads and validates a density matrix; the diagnostic names the violated
/// property (Hermitian, trace, positivity).
pub fn read_state(path: &Path) -> Result<DensityState> {
    DensityState::new(read_matrix(path)?).map_err(|source| KitError::Invalid {
        path: path.to_path_buf(),
        what: "state",
        source,
    })
}

pub fn read_operator(path: &Path) -> Result<Operator> {
    Operator::new(read_matrix(path)?).map_err(|source| KitError::Invalid {
        path: path.to_path_buf(),
        what: "operator",
        source,
    })
}

pub fn read_vector(path: &Path) -> Result<Vec<Complex64>> {
    let m = read_matrix(path)?;
    if m.rows() != 1 && m.cols() != 1 {
        return Err(KitError::Parse {
            path: path.to_path_buf(),
            message: format!("expected a single row or column, found {}x{}", m.rows(), m.cols()),
        });
    }
    Ok(m.data().to_vec())
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| KitError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn complex_value(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

pub fn report_to_json(r: &BoundReport) -> Value {
    let components: Map<String, Value> = r
        .components
        .iter()
        .map(|(k, c)| {
            let v = match c {
                Component::Real(x) => json!(x),
                Component::Complex(z) => complex_value(*z),
                Component::Label(s) => json!(s),
            };
            (k.clone(), v)
        })
        .collect();
    json!({
        "lhs": r.lhs,
        "rhs": r.rhs,
        "slack": r.slack,
        "satisfied": r.satisfied,
        "tol": r.tol,
        "components": components,
    })
}

pub fn ortho_set_to_json(set: &OrthoOperatorSet) -> Value {
    json!({
        "r": set.r,
        "source": set.source,
        "drop_threshold": set.drop_threshold,
        "norms": set.norms,
        "operators": set.operators.iter().map(|o| MatrixJson::from_matrix(o.matrix())).collect::<Vec<_>>(),
    })
}

pub fn decomposition_to_json(dec: &GramDecomposition) -> Value {
    json!({
        "d_matrix": MatrixJson::from_matrix(&dec.d_matrix),
        "v_matrices": dec.v_matrices.iter().map(MatrixJson::from_matrix).collect::<Vec<_>>(),
        "closure_residual": dec.closure_residual,
    })
}

pub fn audit_to_json(dim: usize, seed: u64, reports: &[AuditReport]) -> Value {
    let entries: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "property": r.property,
                "trials": r.trials,
                "failures": r.failures,
                // non-finite marks a trial that errored out
                "worst_violation": if r.worst_violation.is_finite() { json!(r.worst_violation) } else { json!("inf") },
                "failing_seeds": r.failing_seeds,
            })
        })
        .collect();
    json!({
        "dim": dim,
        "seed": seed,
        "version": ur_core::experiments::VERSION,
        "reports": entries,
    })
}
