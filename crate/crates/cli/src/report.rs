use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Fail,
}

/// One JSON object per invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts: Option<BTreeMap<String, u64>>,
    pub status: Status,
}

impl Report {
    pub fn ok(command: impl Into<String>, inputs: Value, result: Value) -> Self {
        Self {
            command: command.into(),
            inputs,
            result,
            counts: None,
            status: Status::Ok,
        }
    }

    pub fn with_counts<K: Into<String>>(mut self, counts: impl IntoIterator<Item = (K, u64)>) -> Self {
        self.counts = Some(counts.into_iter().map(|(k, v)| (k.into(), v)).collect());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            ok,
            detail: detail.into(),
        }
    }

    pub fn eq<T: PartialEq + std::fmt::Debug>(name: &str, got: T, want: T) -> Self {
        let ok = got == want;
        let detail = if ok {
            format!("{got:?}")
        } else {
            format!("got {got:?}, expected {want:?}")
        };
        Self::new(name, ok, detail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Text => render_text(report),
    }
}

fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let status = match r.status {
        Status::Ok => "ok",
        Status::Fail => "FAIL",
    };
    let _ = writeln!(out, "{} [{status}]", r.command);
    if let Some(checks) = r.result.get("checks").and_then(Value::as_array) {
        for c in checks {
            let mark = if c["ok"].as_bool() == Some(true) { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  {mark} {}: {}", c["name"].as_str().unwrap_or("?"), c["detail"].as_str().unwrap_or(""));
        }
    } else {
        text_value(&mut out, &r.result, 1);
    }
    if let Some(counts) = &r.counts {
        for (k, v) in counts {
            let _ = writeln!(out, "  {k} = {v}");
        }
    }
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = xs.iter().map(scalar).collect();
            format!("[{}]", parts.join(","))
        }
        other => other.to_string(),
    }
}

fn text_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        text_value(out, x, depth + 1);
                    }
                    Value::Array(xs) if xs.iter().any(|y| y.is_object() || y.is_array()) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        for y in xs {
                            let _ = writeln!(out, "{pad}  {}", compact(y));
                        }
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar(x));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other));
        }
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, x)| format!("{k}={}", compact(x)))
            .collect::<Vec<_>>()
            .join(" "),
        Value::Array(xs) => format!("[{}]", xs.iter().map(compact).collect::<Vec<_>>().join(",")),
        other => scalar(other),
    }
}
