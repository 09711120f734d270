//! Reports: a JSON object rendered either as pretty JSON or as flat
//! `path: value` lines.

use std::fmt::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// A finished command: the document to print and the process exit code.
#[derive(Debug)]
pub struct Report {
    pub body: Map<String, Value>,
    pub exit: i32,
}

impl Report {
    pub fn new() -> Self {
        Report { body: Map::new(), exit: 0 }
    }

    pub fn field(mut self, key: &str, value: impl Serialize) -> Self {
        self.set(key, value);
        self
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report values serialize to JSON");
        self.body.insert(key.to_string(), v);
    }

    pub fn negative(mut self) -> Self {
        self.exit = 1;
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.body).expect("JSON values render");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = String::new();
                for (k, v) in &self.body {
                    flatten(&mut out, k, v);
                }
                out
            }
        }
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(out: &mut String, path: &str, v: &Value) {
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, sub) in m {
                flatten(out, &format!("{path}.{k}"), sub);
            }
        }
        Value::Array(items) if !items.iter().all(is_scalar) => {
            for (i, sub) in items.iter().enumerate() {
                flatten(out, &format!("{path}[{i}]"), sub);
            }
        }
        Value::Array(_) | Value::Object(_) => writeln!(out, "{path}: {v}").unwrap(),
        scalar => writeln!(out, "{path}: {}", scalar_text(scalar)).unwrap(),
    }
}
