//! Tabular results and their CSV/JSON serialization.

use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
}

impl Cell {
    fn is_finite(&self) -> bool {
        match self {
            Cell::Num(x) => x.is_finite(),
            Cell::Text(_) => true,
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Cell::Num(x) => format!("{x:e}"),
            Cell::Text(s) => s.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Num(x) => Value::from(*x),
            Cell::Text(s) => Value::from(s.as_str()),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

/// A header, ordered rows and run metadata.
#[derive(Debug, Clone)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
    meta: Vec<(String, Value)>,
    omitted: usize,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
            meta: Vec::new(),
            omitted: 0,
        }
    }

    /// Appends a row; rows with a non-finite number are dropped and counted.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width must match the header"
        );
        if row.iter().all(Cell::is_finite) {
            self.rows.push(row);
        } else {
            self.omitted += 1;
        }
    }

    pub fn omit(&mut self) {
        self.omitted += 1;
    }

    pub fn meta(&mut self, key: &str, value: impl Into<Value>) {
        self.meta.push((key.to_owned(), value.into()));
    }

    #[cfg(test)]
    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    fn all_meta(&self) -> Vec<(String, Value)> {
        let mut meta = self.meta.clone();
        meta.push(("omitted_rows".to_owned(), Value::from(self.omitted)));
        meta
    }

    pub fn write(&self, format: OutputFormat, out: &mut dyn Write) -> Result<()> {
        match format {
            OutputFormat::Csv => self.write_csv(out),
            OutputFormat::Json => self.write_json(out),
        }
    }

    fn write_csv(&self, out: &mut dyn Write) -> Result<()> {
        let mut header = csv::Writer::from_writer(Vec::new());
        header.write_record(&self.columns)?;
        out.write_all(&header.into_inner().map_err(|e| e.into_error())?)?;
        for (key, value) in self.all_meta() {
            let text = match value {
                Value::String(s) => s,
                other => other.to_string(),
            };
            writeln!(out, "# {key}: {text}")?;
        }
        let mut body = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            body.write_record(row.iter().map(Cell::to_csv))?;
        }
        out.write_all(&body.into_inner().map_err(|e| e.into_error())?)?;
        Ok(())
    }

    fn write_json(&self, out: &mut dyn Write) -> Result<()> {
        let meta: Map<String, Value> = self.all_meta().into_iter().collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, cell)| ((*c).to_owned(), cell.to_json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let doc = serde_json::json!({ "meta": meta, "rows": rows });
        serde_json::to_writer_pretty(&mut *out, &doc)?;
        writeln!(out)?;
        Ok(())
    }
}
