//! Markdown rendering of a JSON report: objects become headed sections,
//! arrays of flat objects become tables.

use serde_json::Value;

pub fn render(report: &Value) -> String {
    let mut out = String::new();
    let suite = report.get("suite").and_then(Value::as_str).unwrap_or("report");
    let passed = report.get("passed").and_then(Value::as_bool).unwrap_or(false);
    out.push_str(&format!("# btkit {suite}: {}\n\n", if passed { "PASS" } else { "FAIL" }));
    if let Value::Object(map) = report {
        for (k, v) in map {
            if k != "suite" && k != "passed" {
                section(&mut out, k, v, 2);
            }
        }
    }
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.replace('|', "\\|"),
        Value::Null => String::new(),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            items.iter().map(scalar).collect::<Vec<_>>().join(", ")
        }
        other => other.to_string().replace('|', "\\|"),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(m) => m.values().all(|x| !x.is_object() && !matches!(x, Value::Array(a) if a.iter().any(|y| y.is_object() || y.is_array()))),
        _ => false,
    }
}

fn section(out: &mut String, title: &str, v: &Value, depth: usize) {
    let hashes = "#".repeat(depth.min(6));
    match v {
        Value::Object(map) => {
            out.push_str(&format!("{hashes} {title}\n\n"));
            let (simple, nested): (Vec<_>, Vec<_>) = map
                .iter()
                .partition(|(_, x)| !x.is_object() && !matches!(x, Value::Array(a) if a.iter().any(|y| y.is_object() || y.is_array())));
            for (k, x) in &simple {
                out.push_str(&format!("- **{k}**: {}\n", scalar(x)));
            }
            if !simple.is_empty() {
                out.push('\n');
            }
            for (k, x) in nested {
                section(out, k, x, depth + 1);
            }
        }
        Value::Array(items) if !items.is_empty() && items.iter().all(is_flat) => {
            out.push_str(&format!("{hashes} {title}\n\n"));
            let mut cols: Vec<String> = Vec::new();
            for it in items {
                for k in it.as_object().expect("flat object").keys() {
                    if !cols.contains(k) {
                        cols.push(k.clone());
                    }
                }
            }
            out.push_str(&format!("| {} |\n", cols.join(" | ")));
            out.push_str(&format!("|{}\n", " --- |".repeat(cols.len())));
            for it in items {
                let row: Vec<String> = cols.iter().map(|c| it.get(c).map(scalar).unwrap_or_default()).collect();
                out.push_str(&format!("| {} |\n", row.join(" | ")));
            }
            out.push('\n');
        }
        Value::Array(items) => {
            out.push_str(&format!("{hashes} {title}\n\n"));
            if items.is_empty() {
                out.push_str("(none)\n\n");
            }
            for (i, x) in items.iter().enumerate() {
                if x.is_object() || x.is_array() {
                    section(out, &format!("{title} [{}]", i + 1), x, depth + 1);
                } else {
                    out.push_str(&format!("- {}\n", scalar(x)));
                }
            }
            if items.iter().any(|x| !x.is_object() && !x.is_array()) {
                out.push('\n');
            }
        }
        other => out.push_str(&format!("- **{title}**: {}\n\n", scalar(other))),
    }
}
