//! Machine-readable output documents and their JSON / CSV / table renderings.
//!
//! Every command result is a set of scalar fields plus one array of row objects. JSON carries
//! both (and optionally extra nested data); CSV and the table carry the rows, with any column
//! missing from a row taken from the scalars.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// JSON number when the integer fits in `i64`, decimal string otherwise.
pub fn int(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    }
}

#[derive(Debug, Clone)]
pub struct Document {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub scalars: Map<String, Value>,
    pub rows_key: String,
    pub columns: Vec<String>,
    pub rows: Vec<Map<String, Value>>,
    /// JSON-only payload.
    pub extra: Map<String, Value>,
    pub provenance: Vec<String>,
    /// Column used to split the table rendering into blocks.
    pub group_by: Option<String>,
}

impl Document {
    pub fn new(command: &str, rows_key: &str, columns: &[&str]) -> Self {
        Document {
            command: command.to_string(),
            inputs: Map::new(),
            scalars: Map::new(),
            rows_key: rows_key.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            extra: Map::new(),
            provenance: Vec::new(),
            group_by: None,
        }
    }

    pub fn input(mut self, key: &str, value: Value) -> Self {
        self.inputs.insert(key.to_string(), value);
        self
    }

    pub fn scalar(&mut self, key: &str, value: Value) {
        self.scalars.insert(key.to_string(), value);
    }

    pub fn push_row(&mut self, row: Value) {
        match row {
            Value::Object(map) => self.rows.push(map),
            other => panic!("row must be an object, got {other}"),
        }
    }

    fn cell(&self, row: &Map<String, Value>, column: &str) -> Value {
        row.get(column)
            .or_else(|| self.scalars.get(column))
            .cloned()
            .unwrap_or(Value::Null)
    }

    pub fn to_value(&self) -> Value {
        let mut results = self.scalars.clone();
        results.insert(
            self.rows_key.clone(),
            Value::Array(self.rows.iter().cloned().map(Value::Object).collect()),
        );
        for (k, v) in &self.extra {
            results.insert(k.clone(), v.clone());
        }
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "results": results,
            "provenance": self.provenance,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_value()).expect("json");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Table => self.render_table(),
        }
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("csv header");
        for row in &self.rows {
            let rec: Vec<String> = self.columns.iter().map(|c| plain(&self.cell(row, c))).collect();
            w.write_record(&rec).expect("csv row");
        }
        String::from_utf8(w.into_inner().expect("csv flush")).expect("utf-8")
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        for (k, v) in &self.scalars {
            let _ = writeln!(out, "  {k}: {}", plain(v));
        }
        let grid: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| self.columns.iter().map(|c| plain(&self.cell(row, c))).collect())
            .collect();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for line in &grid {
            for (w, cell) in widths.iter_mut().zip(line) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let fmt_line = |cells: &[String]| {
            let mut s = String::from(" ");
            for (cell, w) in cells.iter().zip(&widths) {
                let _ = write!(s, " {cell:<w$}");
            }
            s.trim_end().to_string()
        };
        let group_idx = self
            .group_by
            .as_ref()
            .and_then(|g| self.columns.iter().position(|c| c == g));
        let mut current: Option<&String> = None;
        let header = fmt_line(&self.columns);
        if group_idx.is_none() {
            let _ = writeln!(out, "{header}");
        }
        for line in &grid {
            if let Some(i) = group_idx {
                if current != Some(&line[i]) {
                    current = Some(&line[i]);
                    let label = if line[i].is_empty() { "all" } else { line[i].as_str() };
                    let _ = writeln!(out, "== {} = {label} ==", self.columns[i]);
                    let _ = writeln!(out, "{header}");
                }
            }
            let _ = writeln!(out, "{}", fmt_line(line));
        }
        out
    }
}

/// Flat text for a CSV / table cell.
pub fn plain(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
