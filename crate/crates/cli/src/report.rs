//! Output assembly: every command builds a JSON document plus a flat table;
//! the chosen format decides which one is written.

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use rexspec::exactpoly::rational::fmt_rational;
use rexspec::exactpoly::Rational;
use serde_json::{json, Value};

use crate::args::{Format, OutputArgs};

pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&'static str]) -> Self {
        Self { headers: headers.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }
}

pub struct Report {
    pub title: String,
    pub json: Value,
    pub table: Table,
}

pub fn rat(r: &Rational) -> Value {
    Value::String(fmt_rational(r))
}

pub fn rats<'a>(v: impl IntoIterator<Item = &'a Rational>) -> Value {
    Value::Array(v.into_iter().map(rat).collect())
}

/// Rounds to 12 significant digits; non-finite values become null.
pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    json!(rounded)
}

pub fn float_str(x: f64) -> String {
    float(x).to_string()
}

pub fn join<T: ToString>(v: impl IntoIterator<Item = T>) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Canonical JSON text: sorted keys, two-space indent, trailing newline.
pub fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn render_pretty(r: &Report) -> String {
    let mut widths: Vec<usize> = r.table.headers.iter().map(|h| h.chars().count()).collect();
    for row in &r.table.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = format!("{}\n", r.title);
    out += &line(r.table.headers.clone());
    out.push('\n');
    for row in &r.table.rows {
        out += &line(row.iter().map(String::as_str).collect());
        out.push('\n');
    }
    out
}

fn render_csv(r: &Report) -> io::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&r.table.headers)?;
    for row in &r.table.rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("CSV cells are UTF-8"))
}

pub fn emit(r: &Report, out: &OutputArgs) -> io::Result<()> {
    let text = match out.format {
        Format::Json => to_json_text(&r.json),
        Format::Csv => render_csv(r)?,
        Format::Pretty => render_pretty(r),
    };
    match &out.output {
        Some(path) => write_file(path, &text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn write_file(path: &Path, text: &str) -> io::Result<()> {
    File::create(path)?.write_all(text.as_bytes())
}
