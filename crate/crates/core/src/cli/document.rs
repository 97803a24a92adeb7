//! Tabular output documents and their CSV / JSON encodings.

use std::io::Write;

/// One table cell or parameter value.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Float(f64),
    Int(i64),
    Bool(bool),
    Text(String),
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Float(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<u32> for Value {
    fn from(v: u32) -> Self {
        Value::Int(v as i64)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

/// 17 significant digits, so every `f64` round-trips.
pub fn format_float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "NaN".to_string()
    } else if v > 0.0 {
        "Infinity".to_string()
    } else {
        "-Infinity".to_string()
    }
}

impl Value {
    fn plain(&self) -> String {
        match self {
            Value::Float(v) => format_float(*v),
            Value::Int(v) => v.to_string(),
            Value::Bool(v) => v.to_string(),
            Value::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> String {
        match self {
            Value::Float(v) if v.is_finite() => format_float(*v),
            Value::Float(v) => serde_json::to_string(&format_float(*v)).unwrap(),
            Value::Int(v) => v.to_string(),
            Value::Bool(v) => v.to_string(),
            Value::Text(s) => serde_json::to_string(s).unwrap(),
        }
    }
}

/// Output format selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Parameters, column names and rows of one result.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Document {
    pub params: Vec<(String, Value)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Document {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            params: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.push((key.to_string(), value.into()));
        self
    }

    pub fn row(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    fn write_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        for (k, v) in &self.params {
            writeln!(out, "# {k}={}", v.plain())?;
        }
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Value::plain))?;
        }
        w.flush()
    }

    fn write_json(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{}:{}", serde_json::to_string(k).unwrap(), v.json()))
            .collect();
        let columns: Vec<String> = self
            .columns
            .iter()
            .map(|c| serde_json::to_string(c).unwrap())
            .collect();
        writeln!(out, "{{")?;
        writeln!(out, "  \"params\": {{{}}},", params.join(", "))?;
        writeln!(out, "  \"columns\": [{}],", columns.join(", "))?;
        write!(out, "  \"rows\": [")?;
        for (i, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(Value::json).collect();
            let sep = if i == 0 { "\n" } else { ",\n" };
            write!(out, "{sep}    [{}]", cells.join(", "))?;
        }
        if !self.rows.is_empty() {
            write!(out, "\n  ")?;
        }
        writeln!(out, "]")?;
        writeln!(out, "}}")
    }
}
