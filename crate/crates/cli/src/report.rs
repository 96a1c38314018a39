use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// Everything a subcommand produces, renderable in each output format.
pub struct Report {
    pub command: &'static str,
    pub ok: bool,
    pub result: Map<String, Value>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub lines: Vec<String>,
    pub diagrams: Vec<String>,
    /// Printed instead of the wrapped object in JSON mode.
    pub bare_json: Option<Value>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            ok: true,
            result: Map::new(),
            header: Vec::new(),
            rows: Vec::new(),
            lines: Vec::new(),
            diagrams: Vec::new(),
            bare_json: None,
        }
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) {
        self.result.insert(key.to_string(), v.into());
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn columns(&mut self, cols: &[&str]) {
        self.header = cols.iter().map(|c| c.to_string()).collect();
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn render(&self, format: Format, seed: u64) -> String {
        match format {
            Format::Json => self.render_json(seed),
            Format::Csv => self.render_csv(seed),
            Format::Pretty => self.render_pretty(seed),
        }
    }

    fn render_json(&self, seed: u64) -> String {
        if let Some(v) = &self.bare_json {
            return format!("{v}\n");
        }
        let mut top = json!({
            "command": self.command,
            "seed": seed,
            "version": env!("CARGO_PKG_VERSION"),
            "ok": self.ok,
            "result": Value::Object(self.result.clone()),
        });
        if !self.diagrams.is_empty() {
            top["diagrams"] = json!(self.diagrams);
        }
        format!("{top}\n")
    }

    fn render_csv(&self, seed: u64) -> String {
        let mut out = format!("# vertexlab {} seed={seed}\n", self.command);
        if !self.header.is_empty() {
            out.push_str(&csv_line(&self.header));
        }
        for r in &self.rows {
            out.push_str(&csv_line(r));
        }
        out
    }

    fn render_pretty(&self, seed: u64) -> String {
        let mut out = format!(
            "vertexlab {} {} (seed {seed})\n",
            env!("CARGO_PKG_VERSION"),
            self.command
        );
        for l in &self.lines {
            let _ = writeln!(out, "{l}");
        }
        for d in &self.diagrams {
            out.push('\n');
            out.push_str(d);
            if !d.ends_with('\n') {
                out.push('\n');
            }
        }
        out
    }
}

fn csv_line(cells: &[String]) -> String {
    let quoted: Vec<String> = cells
        .iter()
        .map(|c| {
            if c.contains([',', '"', '\n']) {
                format!("\"{}\"", c.replace('"', "\"\""))
            } else {
                c.clone()
            }
        })
        .collect();
    format!("{}\n", quoted.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(csv_line(&["2,1".into(), "3".into()]), "\"2,1\",3\n");
        assert_eq!(csv_line(&["a\"b".into()]), "\"a\"\"b\"\n");
    }

    #[test]
    fn seed_in_every_header() {
        let mut r = Report::new("count");
        r.set("n", 3);
        r.columns(&["n"]);
        r.row(vec!["3".into()]);
        r.line("n = 3");
        for f in [Format::Json, Format::Csv, Format::Pretty] {
            assert!(r.render(f, 77).contains("77"), "{f:?}");
        }
        let v: Value = serde_json::from_str(&r.render(Format::Json, 77)).unwrap();
        assert_eq!(v["seed"], 77);
        assert_eq!(v["result"]["n"], 3);
    }
}
