//! CSV output for sweeps: `.` decimal separator, LF line endings and 17
//! significant digits, so a row can be parsed back to the same `f64`.

use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use ur_core::experiments::{ScatterPoint, SweepResult};

use crate::error::{KitError, Result};
use crate::formats::write_text;

pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    let bytes = w.into_inner().expect("writing to memory cannot fail");
    String::from_utf8(bytes).expect("csv output is ascii")
}

/// Parameter column, one column per curve, then `verdict`.
pub fn sweep_csv(s: &SweepResult) -> String {
    let mut w = writer();
    let mut header = vec![s.parameter_name.clone()];
    header.extend(s.curves.iter().map(|(l, _)| l.clone()));
    header.push("verdict".into());
    w.write_record(&header).expect("in-memory write");
    for (i, x) in s.grid.iter().enumerate() {
        let mut row = vec![fmt_f64(*x)];
        row.extend(s.curves.iter().map(|(_, c)| fmt_f64(c[i])));
        row.push(if s.verdicts[i] { "pass" } else { "fail" }.into());
        w.write_record(&row).expect("in-memory write");
    }
    finish(w)
}

pub fn scatter_csv(points: &[ScatterPoint]) -> String {
    let mut w = writer();
    w.write_record(["alpha", "value", "trial", "seed"]).expect("in-memory write");
    for p in points {
        w.write_record([fmt_f64(p.alpha), fmt_f64(p.value), p.trial.to_string(), p.seed.to_string()])
            .expect("in-memory write");
    }
    finish(w)
}

pub fn metadata_json(s: &SweepResult) -> Value {
    let m = &s.metadata;
    let tolerances: serde_json::Map<String, Value> = m.tolerances.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    json!({
        "experiment": m.experiment,
        "parameter": s.parameter_name,
        "seed": m.seed,
        "steps": m.steps,
        "random_trials": m.random_trials,
        "restarts": m.restarts,
        "tolerances": tolerances,
        "version": m.version,
        "columns": s.curves.iter().map(|(l, _)| l.as_str()).collect::<Vec<_>>(),
        "all_rows_pass": s.all_rows_pass(),
    })
}

/// `dir/stem.csv` -> `dir/stem_<suffix>.<ext>`
pub fn sibling(path: &Path, suffix: &str, ext: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!("{stem}_{suffix}.{ext}"))
}

/// Writes the sweep table and a `<stem>_meta.json` next to it.
pub fn write_sweep(path: &Path, s: &SweepResult) -> Result<()> {
    write_text(path, &sweep_csv(s))?;
    let meta = serde_json::to_string_pretty(&metadata_json(s)).map_err(|e| KitError::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    write_text(&sibling(path, "meta", "json"), &(meta + "\n"))
}
