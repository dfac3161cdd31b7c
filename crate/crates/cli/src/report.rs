//! Reports and their text and JSON renderings.
//!
//! The JSON form keeps keys in insertion order, so equal reports serialize to identical bytes.
//! The layout is described by `docs/report-schema.json`.

use serde::Serialize;
use serde_json::{Map, Value};

pub const TOOL: &str = "closure-lab";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    /// A property held or a reproduction matched.
    Pass,
    /// A property failed or a reproduction did not match.
    Fail,
    /// A value was computed with nothing to judge.
    Computed,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Computed => "computed",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub command: String,
    pub verdict: Outcome,
    pub results: Value,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub source: String,
    pub verdict: Outcome,
    pub entries: Vec<Entry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

impl Report {
    pub fn new(source: impl Into<String>, entries: Vec<Entry>) -> Self {
        let verdict = if entries.iter().any(|e| e.verdict == Outcome::Fail) {
            Outcome::Fail
        } else if entries.iter().any(|e| e.verdict == Outcome::Pass) {
            Outcome::Pass
        } else {
            Outcome::Computed
        };
        Report { tool: TOOL, version: VERSION, source: source.into(), verdict, entries, seconds: None }
    }

    pub fn failed(&self) -> bool {
        self.verdict == Outcome::Fail
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{TOOL} {VERSION}  source: {}\n", self.source);
        for e in &self.entries {
            out.push_str(&format!("\n[{}] {}\n", e.verdict.as_str(), e.command));
            write_value(&mut out, &e.results, 1);
            for n in &e.notes {
                out.push_str(&format!("  note: {n}\n"));
            }
        }
        if let Some(t) = self.seconds {
            out.push_str(&format!("\ntime: {t:.3} s\n"));
        }
        out.push_str(&format!("\nverdict: {}\n", self.verdict.as_str()));
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.is_empty() => Some("none".into()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            Some(items.iter().map(|i| scalar(i).unwrap()).collect::<Vec<_>>().join(", "))
        }
        _ => None,
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => write_object(out, map, depth),
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        write_value(out, item, depth + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap())),
    }
}

fn write_object(out: &mut String, map: &Map<String, Value>, depth: usize) {
    let pad = "  ".repeat(depth);
    let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
    for (k, v) in map {
        match scalar(v) {
            Some(s) => out.push_str(&format!("{pad}{k:<width$}  {s}\n")),
            None => {
                out.push_str(&format!("{pad}{k}:\n"));
                write_value(out, v, depth + 1);
            }
        }
    }
}
