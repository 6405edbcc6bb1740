//! Report documents and their JSON/CSV encodings.
//!
//! One invocation produces one document. JSON keys are emitted in sorted
//! order and every float is rounded to 12 significant digits before
//! insertion, so identical invocations produce byte-identical output. CSV
//! flattens nested results into dotted keys, one `key,value,units` row per
//! scalar.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub results: Map<String, Value>,
    /// Unit label for every numeric result, keyed by its (dotted) name.
    pub units: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub temperature_kelvin: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub tool_version: String,
}

impl ReportDocument {
    pub fn new(command: &str) -> Self {
        ReportDocument {
            command: command.to_string(),
            parameters: Map::new(),
            results: Map::new(),
            units: BTreeMap::new(),
            temperature_kelvin: None,
            seed: None,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    /// Numeric result with its unit; the value is rounded to 12 significant
    /// digits.
    pub fn result_num(&mut self, key: &str, value: f64, unit: &str) -> &mut Self {
        self.results.insert(key.to_string(), json_num(value));
        self.units.insert(key.to_string(), unit.to_string());
        self
    }

    pub fn result_int(&mut self, key: &str, value: u64, unit: &str) -> &mut Self {
        self.results.insert(key.to_string(), Value::from(value));
        self.units.insert(key.to_string(), unit.to_string());
        self
    }

    /// Unit-less result (booleans, names, nulls).
    pub fn result_value(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_string(), value.into());
        self
    }

    /// Nested numeric results under `key.<field>`, sharing one unit.
    pub fn result_group(&mut self, key: &str, fields: &[(&str, f64)], unit: &str) -> &mut Self {
        let mut object = Map::new();
        for &(field, value) in fields {
            object.insert(field.to_string(), json_num(value));
            self.units.insert(format!("{key}.{field}"), unit.to_string());
        }
        self.results.insert(key.to_string(), Value::Object(object));
        self
    }

    pub fn write(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut out = serde_json::to_string_pretty(self).expect("report serializes");
                out.push('\n');
                out
            }
            Format::Csv => {
                let mut out = String::from("key,value,units\n");
                let mut rows = Vec::new();
                flatten("", &self.results, &mut rows);
                for (key, value) in rows {
                    let units = self.units.get(&key).map(String::as_str).unwrap_or("");
                    out.push_str(&format!(
                        "{},{},{}\n",
                        csv_field(&key),
                        csv_field(&scalar_to_string(&value)),
                        csv_field(units)
                    ));
                }
                out
            }
        }
    }
}

/// Round to 12 significant digits so output is stable across platforms and
/// reruns; done by a decimal round-trip.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("decimal round-trip")
}

fn json_num(x: f64) -> Value {
    let rounded = round_sig12(x);
    serde_json::Number::from_f64(rounded).map(Value::Number).unwrap_or(Value::Null)
}

fn flatten(prefix: &str, object: &Map<String, Value>, out: &mut Vec<(String, Value)>) {
    for (key, value) in object {
        let name = if prefix.is_empty() { key.clone() } else { format!("{prefix}.{key}") };
        match value {
            Value::Object(inner) => flatten(&name, inner, out),
            other => out.push((name, other.clone())),
        }
    }
}

fn scalar_to_string(value: &Value) -> String {
    match value {
        Value::Number(n) => {
            if let Some(i) = n.as_u64() {
                i.to_string()
            } else if let Some(i) = n.as_i64() {
                i.to_string()
            } else {
                display_float(n.as_f64().unwrap_or(f64::NAN))
            }
        }
        Value::Bool(b) => b.to_string(),
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Plain decimal for ordinary magnitudes, scientific for the extremes
/// (avoids 20-zero joule figures in CSV).
fn display_float(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs();
    if (1e-4..1e15).contains(&magnitude) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
