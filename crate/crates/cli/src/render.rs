//! Plain-text tables, CSV and command results.

use serde::Serialize;

pub struct Output {
    pub body: String,
    /// False when a checked identity failed.
    pub ok: bool,
}

impl Output {
    pub fn text(mut body: String) -> Self {
        if !body.ends_with('\n') {
            body.push('\n');
        }
        Output { body, ok: true }
    }

    pub fn json<T: Serialize>(value: &T) -> Self {
        Output::text(serde_json::to_string_pretty(value).expect("serializable value"))
    }

    pub fn with_status(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }
}

/// A cone or face by its indices, e.g. `[0, 2]`.
pub fn cone(ids: &[usize]) -> String {
    let parts: Vec<String> = ids.iter().map(|i| i.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = headers.join(",") + "\n";
    for row in rows {
        let fields: Vec<String> = row.iter().map(|c| csv_field(c)).collect();
        out += &(fields.join(",") + "\n");
    }
    out
}
