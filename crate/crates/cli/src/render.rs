//! Output helpers. JSON objects come out with sorted keys and big integers
//! as decimal strings, so a parse and re-serialize reproduces the same bytes.

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::verify::VerifyReport;
use crate::Format;

pub fn nat(v: &BigUint) -> Value {
    Value::String(v.to_string())
}

pub fn nat_list(vs: &[BigUint]) -> Value {
    Value::Array(vs.iter().map(nat).collect())
}

/// Compact single-line JSON with a trailing newline.
pub fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values are plain JSON");
    s.push('\n');
    s
}

/// One CSV record. Fields never contain commas, quotes or newlines here, so
/// no quoting is done; the assertion keeps it that way.
pub fn csv_line(fields: &[&str]) -> String {
    debug_assert!(fields.iter().all(|f| !f.contains([',', '"', '\n'])));
    let mut s = fields.join(",");
    s.push('\n');
    s
}

/// Flattens a JSON value into one CSV field; arrays become space-separated.
fn csv_field(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(csv_field).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// An ordered report where every field has a JSON form and a text form.
#[derive(Default)]
pub struct KeyValues {
    rows: Vec<(&'static str, Value, String)>,
}

impl KeyValues {
    pub fn push(&mut self, key: &'static str, json: Value, text: String) {
        self.rows.push((key, json, text));
    }

    pub fn text_rows(&self) -> impl Iterator<Item = (&'static str, &str)> {
        self.rows.iter().map(|(k, _, t)| (*k, t.as_str()))
    }

    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .rows
            .iter()
            .map(|(k, v, _)| (k.to_string(), v.clone()))
            .collect();
        Value::Object(map)
    }

    pub fn to_csv(&self) -> String {
        let mut out = csv_line(&["field", "value"]);
        for (k, v, _) in &self.rows {
            out.push_str(&csv_line(&[k, &csv_field(v)]));
        }
        out
    }
}

pub fn verify_report(report: &VerifyReport, fmt: Format) -> String {
    match fmt {
        Format::Json => json_line(&verify_json(report)),
        Format::Csv => {
            let mut out = csv_line(&["n", "k", "s0", "status", "field", "closed", "oracle"]);
            for p in &report.points {
                let (n, k, s0) = (
                    p.params.n().to_string(),
                    p.params.k().to_string(),
                    p.s0.to_string(),
                );
                if p.mismatches.is_empty() {
                    out.push_str(&csv_line(&[&n, &k, &s0, "match", "", "", ""]));
                }
                for m in &p.mismatches {
                    out.push_str(&csv_line(&[
                        &n, &k, &s0, "mismatch", &m.field, &m.closed, &m.oracle,
                    ]));
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for p in &report.points {
                if p.mismatches.is_empty() {
                    out.push_str(&format!("{} s0={} match\n", p.params, p.s0));
                }
                for m in &p.mismatches {
                    out.push_str(&format!(
                        "{} s0={} MISMATCH {}: closed={} oracle={}\n",
                        p.params, p.s0, m.field, m.closed, m.oracle
                    ));
                }
            }
            out.push_str(&format!(
                "points = {}, matched = {}, mismatched = {}\n",
                report.points.len(),
                report.matched(),
                report.mismatched()
            ));
            out
        }
    }
}

fn verify_json(report: &VerifyReport) -> Value {
    let points: Vec<Value> = report
        .points
        .iter()
        .map(|p| {
            let mismatches: Vec<Value> = p
                .mismatches
                .iter()
                .map(|m| json!({ "field": m.field, "closed": m.closed, "oracle": m.oracle }))
                .collect();
            json!({
                "n": p.params.n(),
                "k": p.params.k(),
                "s0": nat(&p.s0),
                "status": if mismatches.is_empty() { "match" } else { "mismatch" },
                "mismatches": mismatches,
            })
        })
        .collect();
    json!({
        "points": points,
        "totals": {
            "points": report.points.len(),
            "matched": report.matched(),
            "mismatched": report.mismatched(),
        },
    })
}
