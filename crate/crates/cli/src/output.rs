use std::io::Write;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A result in all three renderings. Without an explicit table, CSV falls
/// back to the flat scalar fields of the JSON value.
pub struct Output {
    pub value: Value,
    pub text: String,
    table: Option<(Vec<String>, Vec<Vec<String>>)>,
}

impl Output {
    pub fn new(value: Value, text: String) -> Self {
        Output { value, text, table: None }
    }

    pub fn with_table(mut self, header: Vec<String>, rows: Vec<Vec<String>>) -> Self {
        self.table = Some((header, rows));
        self
    }

    fn scalar_table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let mut header = Vec::new();
        let mut row = Vec::new();
        if let Value::Object(map) = &self.value {
            for (k, v) in map {
                let cell = match v {
                    Value::String(s) => s.clone(),
                    Value::Number(_) | Value::Bool(_) => v.to_string(),
                    Value::Null => String::new(),
                    _ => serde_json::to_string(v).expect("value serializes"),
                };
                header.push(k.clone());
                row.push(cell);
            }
        }
        (header, vec![row])
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.value).expect("value serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let (header, rows) = self.table.clone().unwrap_or_else(|| self.scalar_table());
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&header).expect("in-memory write");
                for r in &rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
            }
        }
    }

    pub fn emit(&self, format: Format) {
        let mut stdout = std::io::stdout().lock();
        let _ = stdout.write_all(self.render(format).as_bytes());
    }
}
