//! Report assembly and rendering.
//!
//! Every command builds one `serde_json::Value`; `--json` pretty-prints it
//! and `--text` flattens the same value to `path = value` lines.  Both views
//! therefore carry identical numerical content, and both are deterministic
//! (objects are backed by `BTreeMap`, so keys come out sorted).

use osalg::io::canonical_description;
use osalg::matroid::Matroid;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub fn digest(m: &Matroid, base: Option<usize>) -> String {
    let mut hasher = Sha256::new();
    hasher.update(canonical_description(m, base).as_bytes());
    let out = hasher.finalize();
    let hex: String = out.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

pub fn matroid_meta(m: &Matroid, base: Option<usize>) -> Value {
    let mut meta = json!({
        "n": m.n(),
        "rank": m.rank(),
        "digest": digest(m, base),
    });
    if let Some(b) = base {
        meta["base"] = json!(b);
    }
    meta
}

pub fn envelope(command: &str, input: &str, meta: Value, payload: Value) -> Value {
    let mut doc = json!({
        "command": command,
        "input": input,
        "matroid": meta,
    });
    let obj = doc.as_object_mut().expect("object literal");
    for (k, v) in payload.as_object().expect("payload object") {
        obj.insert(k.clone(), v.clone());
    }
    doc
}

pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable value");
    s.push('\n');
    s
}

/// True when the array nests no objects or arrays, so it can sit on one line.
fn is_flat_array(items: &[Value]) -> bool {
    items
        .iter()
        .all(|v| !(v.is_object() || v.is_array()) || is_flat_array_value(v))
}

fn is_flat_array_value(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(is_flat_array_value),
        Value::Object(_) => false,
        _ => true,
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn walk(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str(&format!("{prefix} = {{}}\n"));
            }
            for (k, val) in map {
                let path = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                walk(&path, val, out);
            }
        }
        Value::Array(items) if is_flat_array(items) => {
            out.push_str(&format!(
                "{prefix} = {}\n",
                serde_json::to_string(v).expect("serializable value")
            ));
        }
        Value::Array(items) => {
            for (i, val) in items.iter().enumerate() {
                walk(&format!("{prefix}.{i}"), val, out);
            }
        }
        scalar => {
            out.push_str(&format!("{prefix} = {}\n", scalar_text(scalar)));
        }
    }
}

pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    walk("", v, &mut out);
    out
}
