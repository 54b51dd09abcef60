use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA: &str = "spinlow.report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub anchor: String,
    pub detail: String,
}

/// Everything a subcommand prints. Contains no timing or thread count, so
/// the rendered bytes depend only on the parameters.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub parameters: Map<String, Value>,
    pub passed: bool,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub rows: Vec<Map<String, Value>>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            parameters: Map::new(),
            passed: true,
            failures: Vec::new(),
            notes: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.to_string(), to_value(value));
        self
    }

    pub fn fail(&mut self, anchor: impl Into<String>, detail: impl Into<String>) {
        self.passed = false;
        self.failures.push(Failure { anchor: anchor.into(), detail: detail.into() });
    }

    /// Appends a serializable struct as a row; it must serialize to a map.
    pub fn push(&mut self, row: impl Serialize) {
        match to_value(row) {
            Value::Object(m) => self.rows.push(m),
            other => panic!("row is not a map: {other}"),
        }
    }

    pub fn render(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            Format::Csv => self.render_csv(out),
            Format::Md => self.render_md(out),
        }
    }

    fn columns(&self) -> Vec<&str> {
        let mut cols: Vec<&str> = Vec::new();
        for row in &self.rows {
            for k in row.keys() {
                if !cols.contains(&k.as_str()) {
                    cols.push(k);
                }
            }
        }
        cols
    }

    /// Rows only; the pass flag and failures go to the diagnostic stream.
    fn render_csv(&self, out: &mut impl Write) -> io::Result<()> {
        let cols = self.columns();
        if !cols.is_empty() {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&cols)?;
            for row in &self.rows {
                w.write_record(cols.iter().map(|c| cell(row.get(*c))))?;
            }
            w.flush()?;
        }
        if !self.passed {
            for f in &self.failures {
                eprintln!("FAIL {}: {}", f.anchor, f.detail);
            }
        }
        Ok(())
    }

    fn render_md(&self, out: &mut impl Write) -> io::Result<()> {
        writeln!(out, "## {}", self.command)?;
        writeln!(out)?;
        for (k, v) in &self.parameters {
            writeln!(out, "- {k}: {}", cell(Some(v)))?;
        }
        writeln!(out, "- passed: {}", self.passed)?;
        writeln!(out)?;
        let cols = self.columns();
        if !cols.is_empty() {
            writeln!(out, "| {} |", cols.join(" | "))?;
            writeln!(out, "|{}", "---|".repeat(cols.len()))?;
            for row in &self.rows {
                let cells: Vec<String> = cols.iter().map(|c| cell(row.get(*c)).replace('|', "\\|")).collect();
                writeln!(out, "| {} |", cells.join(" | "))?;
            }
            writeln!(out)?;
        }
        if !self.failures.is_empty() {
            writeln!(out, "### Failures")?;
            writeln!(out)?;
            for f in &self.failures {
                writeln!(out, "- {}: {}", f.anchor, f.detail)?;
            }
            writeln!(out)?;
        }
        if !self.notes.is_empty() {
            writeln!(out, "### Notes")?;
            writeln!(out)?;
            for n in &self.notes {
                writeln!(out, "- {n}")?;
            }
            writeln!(out)?;
        }
        Ok(())
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(Value::Array(items)) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            items.iter().map(|x| cell(Some(x))).collect::<Vec<_>>().join(" ")
        }
        Some(other) => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        let mut r = Report::new("geom orbits").param("q", 3);
        r.push(json!({"singular": 80, "plus": 90, "minus": 72}));
        r.push(json!({"singular": 1, "extra": ["a", "b"]}));
        r
    }

    fn rendered(r: &Report, f: Format) -> String {
        let mut buf = Vec::new();
        r.render(f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn csv_uses_union_of_columns_in_first_seen_order() {
        assert_eq!(rendered(&sample(), Format::Csv), "singular,plus,minus,extra\n80,90,72,\n1,,,a b\n");
    }

    #[test]
    fn json_keeps_field_order() {
        let s = rendered(&sample(), Format::Json);
        let order: Vec<usize> = ["\"singular\"", "\"plus\"", "\"minus\""].iter().map(|k| s.find(k).unwrap()).collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]));
        assert!(s.starts_with("{\n  \"schema\": \"spinlow.report/1\""));
    }

    #[test]
    fn markdown_table() {
        let s = rendered(&sample(), Format::Md);
        assert!(s.contains("| singular | plus | minus | extra |\n|---|---|---|---|\n| 80 | 90 | 72 |  |"));
    }
}
