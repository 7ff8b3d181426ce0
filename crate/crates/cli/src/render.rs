use serde_json::Value;

use crate::args::Format;

/// A command result in every output format.
#[derive(Debug, Clone)]
pub struct Output {
    pub json: Value,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Hand-laid-out text; an aligned table of `rows` otherwise.
    pub ascii: Option<String>,
}

impl Output {
    pub fn new(json: Value, headers: &[&str], rows: Vec<Vec<String>>) -> Self {
        Output { json, headers: headers.iter().map(|s| s.to_string()).collect(), rows, ascii: None }
    }

    pub fn with_ascii(mut self, text: String) -> Self {
        self.ascii = Some(text);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
            }
            Format::Ascii => self.ascii.clone().unwrap_or_else(|| aligned(&self.headers, &self.rows)),
        }
    }
}

pub fn aligned(headers: &[String], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut width: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate().take(cols) {
            width[i] = width[i].max(c.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let parts: Vec<String> = cells.iter().enumerate().map(|(i, c)| format!("{c:<w$}", w = width[i])).collect();
        parts.join("  ").trim_end().to_string()
    };
    let mut out = line(headers);
    out.push('\n');
    out.push_str(&width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  "));
    out.push('\n');
    for r in rows {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let o = Output::new(serde_json::json!({"a": 1}), &["x", "value"], vec![vec!["1".into(), "a,b".into()]]);
        assert_eq!(o.render(Format::Csv), "x,value\n1,\"a,b\"\n");
        assert_eq!(o.render(Format::Ascii), "x  value\n-  -----\n1  a,b\n");
        assert!(o.render(Format::Json).contains("\"a\": 1"));
    }
}
