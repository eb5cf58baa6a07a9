//! CSV and JSON emission.
//!
//! CSV files are self-describing: `#`-prefixed header comments carry the full
//! parameterization (measure, order, decay, seed) so an output file can be
//! interpreted on its own. JSON outputs mirror the CSV content one-to-one.
//! Nothing here embeds timestamps; identical inputs yield identical bytes.

use std::fmt::Write as _;

use serde_json::json;

use crate::lec::ScoreVector;
use crate::spectral::Spectrum;
use crate::stats::ExperimentRow;

/// Quote a CSV field when it contains a delimiter, quote, or newline.
fn field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn fmt_value(v: f64) -> String {
    if v.is_nan() {
        String::new()
    } else {
        format!("{v}")
    }
}

fn measure_header(sv: &ScoreVector) -> String {
    let mut line = format!("# measure={}", sv.measure.name());
    for (k, v) in sv.measure.params() {
        let _ = write!(line, " {k}={v}");
    }
    line.push('\n');
    line
}

/// Per-node scores as `label,score` rows under a parameter comment.
pub fn score_csv(labels: &[String], sv: &ScoreVector) -> String {
    let mut out = measure_header(sv);
    out.push_str("label,score\n");
    for (label, score) in labels.iter().zip(&sv.scores) {
        let _ = writeln!(out, "{},{}", field(label), fmt_value(*score));
    }
    out
}

/// JSON mirror of [`score_csv`]: measure, params, and label/score pairs.
pub fn score_json(labels: &[String], sv: &ScoreVector) -> String {
    let params: serde_json::Map<String, serde_json::Value> = sv
        .measure
        .params()
        .into_iter()
        .map(|(k, v)| (k, serde_json::Value::String(v)))
        .collect();
    let scores: Vec<serde_json::Value> = labels
        .iter()
        .zip(&sv.scores)
        .map(|(l, s)| json!({ "label": l, "score": s }))
        .collect();
    let doc = json!({
        "measure": sv.measure.name(),
        "params": params,
        "scores": scores,
    });
    serde_json::to_string_pretty(&doc).expect("json serialization cannot fail")
}

/// Wide table: one row per node, one column per measure.
pub fn scores_wide_csv(labels: &[String], columns: &[(String, &ScoreVector)]) -> String {
    let mut out = String::new();
    for (name, sv) in columns {
        let mut line = format!("# column={name} measure={}", sv.measure.name());
        for (k, v) in sv.measure.params() {
            let _ = write!(line, " {k}={v}");
        }
        out.push_str(&line);
        out.push('\n');
    }
    out.push_str("label");
    for (name, _) in columns {
        let _ = write!(out, ",{}", field(name));
    }
    out.push('\n');
    for (i, label) in labels.iter().enumerate() {
        let _ = write!(out, "{}", field(label));
        for (_, sv) in columns {
            let _ = write!(out, ",{}", fmt_value(sv.scores[i]));
        }
        out.push('\n');
    }
    out
}

/// Mirror of [`scores_wide_csv`].
pub fn scores_wide_json(labels: &[String], columns: &[(String, &ScoreVector)]) -> String {
    let rows: Vec<serde_json::Value> = labels
        .iter()
        .enumerate()
        .map(|(i, label)| {
            let mut obj = serde_json::Map::new();
            obj.insert("label".into(), json!(label));
            for (name, sv) in columns {
                obj.insert(name.clone(), json!(sv.scores[i]));
            }
            serde_json::Value::Object(obj)
        })
        .collect();
    serde_json::to_string_pretty(&json!({ "scores": rows })).expect("json cannot fail")
}

/// Spectrum summary: (index, eigenvalue, cumulative_fraction) rows.
pub fn spectrum_csv(s: &Spectrum) -> String {
    let mut out = String::from("index,eigenvalue,cumulative_fraction\n");
    for (i, ev, frac) in s.summary_rows() {
        let _ = writeln!(out, "{i},{ev},{frac}");
    }
    out
}

pub fn spectrum_json(s: &Spectrum) -> String {
    let rows: Vec<serde_json::Value> = s
        .summary_rows()
        .into_iter()
        .map(|(i, ev, frac)| json!({ "index": i, "eigenvalue": ev, "cumulative_fraction": frac }))
        .collect();
    serde_json::to_string_pretty(&json!({ "spectrum": rows })).expect("json cannot fail")
}

/// Full eigenvector dump: rows are nodes, column `q{k}` pairs with the k-th
/// descending eigenvalue (layer indexing, so q0 is the constant vector).
pub fn eigenvectors_csv(labels: &[String], s: &Spectrum) -> String {
    let n = s.dim();
    let mut out = String::from("label");
    for layer in 0..n {
        let _ = write!(out, ",q{layer}");
    }
    out.push('\n');
    for (i, label) in labels.iter().enumerate() {
        let _ = write!(out, "{}", field(label));
        for layer in 0..n {
            let _ = write!(out, ",{}", s.component(layer, i));
        }
        out.push('\n');
    }
    out
}

/// Long-format experiment table.
pub fn experiment_csv(rows: &[ExperimentRow]) -> String {
    let mut out = String::from("spec_id,model,n,param,seed,measure,statistic,key,value\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.spec_id,
            field(&r.model),
            r.n,
            field(&r.param),
            r.seed,
            field(&r.measure),
            field(&r.statistic),
            field(&r.key),
            fmt_value(r.value)
        );
    }
    out
}

pub fn experiment_json(rows: &[ExperimentRow]) -> String {
    serde_json::to_string_pretty(&json!({ "rows": rows })).expect("json cannot fail")
}
