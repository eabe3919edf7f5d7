//! The run report every subcommand emits: one structure, rendered
//! either as indented text or as JSON with identical content.

use serde::Serialize;
use serde_json::Value;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USER: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub outcome: Value,
    /// The library guarantees this run exercised.
    pub properties: Vec<String>,
    pub exit_code: i32,
}

fn render(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) if !is_flat(v) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(v, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", flat(v))),
                }
            }
        }
        Value::Array(items) => {
            for v in items {
                if is_flat(v) {
                    out.push_str(&format!("{pad}- {}\n", flat(v)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render(v, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", flat(other))),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_object() && !i.is_array()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn flat(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(flat).collect();
            format!("[{}]", inner.join(", "))
        }
        other => other.to_string(),
    }
}

impl RunReport {
    pub fn print(&self, json: bool) {
        if json {
            println!("{}", serde_json::to_string_pretty(self).expect("report serializes"));
            return;
        }
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str("inputs:\n");
        render(&self.inputs, 1, &mut out);
        out.push_str("outcome:\n");
        render(&self.outcome, 1, &mut out);
        if !self.properties.is_empty() {
            out.push_str("properties:\n");
            for p in &self.properties {
                out.push_str(&format!("  - {p}\n"));
            }
        }
        out.push_str(&format!("exit_code: {}\n", self.exit_code));
        print!("{out}");
    }
}
