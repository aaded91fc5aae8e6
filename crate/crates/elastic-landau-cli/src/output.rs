//! Machine-readable output: CSV (header + rows) or JSON (array of
//! objects), written to stdout or a file. Float formatting uses Rust's
//! shortest-roundtrip representation, so identical configs produce
//! byte-identical output.

use std::io::Write;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn parse(name: &str) -> Result<Self, String> {
        match name {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown output format {other:?} (csv|json)")),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Str(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => normalize(*v).to_string(),
            Cell::Str(v) => v.clone(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Int(v) => serde_json::Value::from(*v),
            Cell::Float(v) => serde_json::Value::from(normalize(*v)),
            Cell::Str(v) => serde_json::Value::from(v.as_str()),
        }
    }
}

/// Fold −0.0 into 0.0 so sign noise never leaks into the output.
fn normalize(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

/// Column-labelled result table.
#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = self.columns.join(",");
                out.push('\n');
                for row in &self.rows {
                    let line: Vec<String> = row.iter().map(Cell::csv).collect();
                    out.push_str(&line.join(","));
                    out.push('\n');
                }
                out
            }
            Format::Json => {
                let array: Vec<serde_json::Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: serde_json::Map<String, serde_json::Value> = self
                            .columns
                            .iter()
                            .zip(row)
                            .map(|(c, cell)| (c.to_string(), cell.json()))
                            .collect();
                        serde_json::Value::Object(obj)
                    })
                    .collect();
                let mut out = serde_json::to_string_pretty(&array).expect("table is serializable");
                out.push('\n');
                out
            }
        }
    }
}

/// Write `content` to the file or stdout.
pub fn emit(content: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| format!("cannot write to stdout: {e}"))
        }
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
    }
}
