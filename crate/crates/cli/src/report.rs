//! Structured results, their JSON form and plain-text tables.

use std::fmt::{Display, Write as _};

use serde_json::{json, Value};
use zelisko_core::{Error, Matrix};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_mathematical() => 1,
            _ => 2,
        }
    }

    fn kind(&self) -> String {
        match self {
            CliError::Core(e) => {
                let debug = format!("{e:?}");
                debug
                    .split(|c: char| !c.is_alphanumeric())
                    .next()
                    .unwrap_or_default()
                    .to_string()
            }
            CliError::Usage(_) => "Usage".into(),
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Usage(s) => s.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub ok: bool,
    pub data: Value,
    pub diagnostics: Vec<String>,
    pub human: String,
}

impl Report {
    pub fn ok(data: Value, human: String) -> Self {
        Report {
            ok: true,
            data,
            diagnostics: Vec::new(),
            human,
        }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.diagnostics.push(note.into());
        self
    }

    pub fn from_error(e: &CliError) -> Self {
        Report {
            ok: false,
            data: json!({"error": e.kind(), "message": e.message()}),
            diagnostics: Vec::new(),
            human: format!("error: {}\n", e.message()),
        }
    }

    pub fn to_json(&self) -> String {
        let status = if self.ok { "ok" } else { "error" };
        let out = json!({
            "status": status,
            "data": self.data,
            "diagnostics": self.diagnostics,
        });
        serde_json::to_string_pretty(&out).expect("serializable")
    }
}

pub fn elem<T: Display>(x: &T) -> Value {
    Value::String(x.to_string())
}

pub fn elems<'a, T: Display + 'a>(xs: impl IntoIterator<Item = &'a T>) -> Value {
    Value::Array(xs.into_iter().map(elem).collect())
}

pub fn matrix_json<T: Display + Clone>(m: &Matrix<T>) -> Value {
    Value::Array((0..m.rows()).map(|i| elems(m.row(i))).collect())
}

/// Compact nested-array form, accepted back by `--matrix`.
pub fn matrix_text<T: Display + Clone>(m: &Matrix<T>) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| format!("[{}]", join(m.row(i))))
        .collect();
    format!("[{}]", rows.join(","))
}

pub fn join<'a, T: Display + 'a>(xs: impl IntoIterator<Item = &'a T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// A boxed text table with a header row.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let rule: String = {
        let mut s = String::from("+");
        for w in &widths {
            s.push_str(&"-".repeat(w + 2));
            s.push('+');
        }
        s
    };
    let line = |cells: Vec<&str>| {
        let mut s = String::from("|");
        for (c, w) in cells.iter().zip(&widths) {
            let _ = write!(s, " {c:<w$} |");
        }
        s
    };
    let mut out = String::new();
    let _ = writeln!(out, "{rule}");
    let _ = writeln!(out, "{}", line(header.to_vec()));
    let _ = writeln!(out, "{rule}");
    for row in rows {
        let cells: Vec<&str> = (0..cols).map(|k| row.get(k).map_or("", String::as_str)).collect();
        let _ = writeln!(out, "{}", line(cells));
        let _ = writeln!(out, "{rule}");
    }
    out
}
