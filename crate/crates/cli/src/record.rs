//! The output envelope shared by every command, and its three renderings.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        }
    }

    pub fn from_pass(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Value,
    pub payload: Value,
    pub status: Status,
}

impl OutputRecord {
    pub fn new(command: &str, inputs: Value, payload: Value, status: Status) -> Self {
        OutputRecord {
            command: command.to_string(),
            inputs,
            payload,
            status,
        }
    }

    /// The record as a JSON value; `serde_json` maps keep keys sorted.
    pub fn to_value(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "payload": self.payload,
            "status": self.status.as_str(),
        })
    }

    pub fn render(&self, format: Format) -> String {
        let value = self.to_value();
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Csv => render_csv(&value),
            Format::Text => {
                let mut out = String::new();
                render_text(&mut out, &value, 0);
                out
            }
        }
    }
}

/// Leaf fields of `value` as dotted paths, array elements by index.
/// Empty containers are kept as `[]` and `{}` so every JSON field has a row.
pub fn flatten(value: &Value) -> Vec<(String, String)> {
    let mut rows = Vec::new();
    flatten_into(&mut rows, String::new(), value);
    rows
}

fn flatten_into(rows: &mut Vec<(String, String)>, prefix: String, value: &Value) {
    let join = |key: &str| {
        if prefix.is_empty() {
            key.to_string()
        } else {
            format!("{prefix}.{key}")
        }
    };
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                flatten_into(rows, join(k), v);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (k, v) in items.iter().enumerate() {
                flatten_into(rows, join(&k.to_string()), v);
            }
        }
        _ => rows.push((prefix, scalar_text(value))),
    }
}

fn scalar_text(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(_) => "[]".to_string(),
        Value::Object(_) => "{}".to_string(),
        other => other.to_string(),
    }
}

fn render_csv(value: &Value) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["field", "value"])
        .expect("write to memory");
    for (field, v) in flatten(value) {
        writer.write_record([field, v]).expect("write to memory");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("CSV is UTF-8")
}

fn is_scalar(value: &Value) -> bool {
    !matches!(value, Value::Object(_) | Value::Array(_))
}

fn render_text(out: &mut String, value: &Value, indent: usize) {
    match value {
        Value::Object(map) => render_map(out, map, indent),
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(map) if !map.is_empty() => {
                        let _ = writeln!(out, "{:indent$}-", "");
                        render_map(out, map, indent + 2);
                    }
                    other => {
                        let _ = writeln!(out, "{:indent$}- {}", "", inline(other));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{:indent$}{}", "", inline(other));
        }
    }
}

fn render_map(out: &mut String, map: &Map<String, Value>, indent: usize) {
    for (k, v) in map {
        if is_scalar(v) || is_flat_array(v) {
            let _ = writeln!(out, "{:indent$}{k}: {}", "", inline(v));
        } else {
            let _ = writeln!(out, "{:indent$}{k}:", "");
            render_text(out, v, indent + 2);
        }
    }
}

fn is_flat_array(value: &Value) -> bool {
    match value {
        Value::Array(items) => items.iter().all(is_scalar),
        Value::Object(map) => map.is_empty(),
        _ => false,
    }
}

fn inline(value: &Value) -> String {
    match value {
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            format!("[{}]", parts.join(" "))
        }
        other => scalar_text(other),
    }
}
