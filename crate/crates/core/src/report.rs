//! Report emission (JSON summaries, CSV curves) and numeric data ingestion.
//!
//! All floating-point output uses a fixed 17-significant-digit scientific
//! rendering so doubles round-trip exactly and repeated runs diff clean.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

/// Renders a double with 17 significant digits (exact round-trip).
pub fn render_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn io_err(path: &Path, source: std::io::Error) -> Error {
    Error::Io { path: path.display().to_string(), source }
}

/// Writes a CSV table with a header line; every cell rendered by
/// [`render_f64`], `\n` line endings.
pub fn write_csv(path: &Path, header: &str, rows: &[Vec<f64>]) -> Result<()> {
    let mut out = String::with_capacity(rows.len() * 32 + header.len() + 1);
    out.push_str(header);
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|&x| render_f64(x)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    fs::write(path, out).map_err(|e| io_err(path, e))
}

/// Wraps a flat report body with the artifact version and the resolved
/// configuration, as every emitted JSON document carries both.
pub fn with_meta(config: Value, body: Value) -> Value {
    let mut doc = Map::new();
    doc.insert("version".to_string(), json!(env!("CARGO_PKG_VERSION")));
    doc.insert("config".to_string(), config);
    if let Value::Object(fields) = body {
        for (k, v) in fields {
            doc.insert(k, v);
        }
    }
    Value::Object(doc)
}

/// Writes a JSON document with stable field order and a trailing newline.
pub fn write_json(path: &Path, doc: &Value) -> Result<()> {
    let mut file = fs::File::create(path).map_err(|e| io_err(path, e))?;
    let text = serde_json::to_string_pretty(doc)
        .map_err(|e| Error::Input(format!("serialization failed: {e}")))?;
    file.write_all(text.as_bytes()).map_err(|e| io_err(path, e))?;
    file.write_all(b"\n").map_err(|e| io_err(path, e))
}

/// Reads numbers from a data file. `.json` files must hold a flat array of
/// numbers; anything else is treated as CSV with one value per line or
/// comma-separated values. Tokens that fail to parse are skipped, not
/// fatal; the second return value counts them.
pub fn read_values(path: &Path) -> Result<(Vec<f64>, usize)> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
        let parsed: Value = serde_json::from_str(&text)
            .map_err(|e| Error::Input(format!("{}: invalid JSON: {e}", path.display())))?;
        let Value::Array(items) = parsed else {
            return Err(Error::Input(format!("{}: expected a JSON array of numbers", path.display())));
        };
        let mut values = Vec::with_capacity(items.len());
        let mut skipped = 0usize;
        for item in items {
            match item.as_f64() {
                Some(x) => values.push(x),
                None => skipped += 1,
            }
        }
        return Ok((values, skipped));
    }
    let mut values = Vec::new();
    let mut skipped = 0usize;
    for line in text.lines() {
        for token in line.split(',') {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            match token.parse::<f64>() {
                Ok(x) => values.push(x),
                Err(_) => skipped += 1,
            }
        }
    }
    Ok((values, skipped))
}
