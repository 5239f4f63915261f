//! Output plumbing shared by the commands: value serialization helpers,
//! CSV escaping, and the stdout/file sink.

use std::fs;
use std::io::Write;

use serde_json::{json, Value};

use mubell_core::cyclotomic::{ScaledMatrix, ScaledVector};
use mubell_core::galois::{Field, FieldBasis, FieldElement};

use crate::config::CliError;

/// Writes rendered output to the configured sink. File writes go through a
/// temp-free single write so identical configs give byte-identical files.
pub fn emit(output: &Option<String>, rendered: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, rendered.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write {}: {}", path, e))),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(rendered.as_bytes())
                .map_err(|e| CliError::Io(format!("cannot write stdout: {}", e)))
        }
    }
}

/// RFC-4180-style field escaping: quote when the value contains a comma,
/// quote, or newline.
pub fn csv_field(v: &str) -> String {
    if v.contains(',') || v.contains('"') || v.contains('\n') {
        format!("\"{}\"", v.replace('"', "\"\""))
    } else {
        v.to_string()
    }
}

pub fn csv_row(fields: &[String]) -> String {
    let escaped: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
    escaped.join(",")
}

pub fn element_json(e: &FieldElement) -> Value {
    Value::Array(e.coeffs().iter().map(|&c| json!(c)).collect())
}

pub fn basis_json(field: &Field, basis: &FieldBasis) -> Value {
    json!({
        "kind": format!("{:?}", basis.kind()),
        "elements": basis.elements().iter().map(element_json).collect::<Vec<_>>(),
        "gram": field.gram(basis),
    })
}

pub fn vector_json(v: &ScaledVector) -> Value {
    json!({
        "scale": v.scale(),
        "entries": v.entries().iter().map(|e| e.to_string()).collect::<Vec<_>>(),
    })
}

pub fn matrix_json(m: &ScaledMatrix) -> Value {
    json!({
        "base": m.base(),
        "scale": m.scale(),
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.entries().iter().map(|e| e.to_string()).collect::<Vec<_>>(),
    })
}

/// Pretty JSON with a trailing newline; serde_json's map is ordered, so the
/// bytes are reproducible.
pub fn json_document(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
