//! Report structure shared by `report` and `probe`, plus text formatting
//! helpers for exact values.

use diffeolin::{MatrixQ, Rational, SubspaceQ};

/// Ordered sections of titled key/value tables, plus documented
/// discrepancy notes. Exact values are rendered as rational strings so they
/// round-trip bit-exactly.
#[derive(Debug, Clone)]
pub struct Report {
    pub sections: Vec<Section>,
    pub discrepancies: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Section {
    pub title: String,
    pub entries: Vec<(String, String)>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section {
            title: title.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.entries.push((key.into(), value.into()));
    }
}

impl Report {
    pub fn new() -> Self {
        Report {
            sections: Vec::new(),
            discrepancies: Vec::new(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for section in &self.sections {
            out.push_str(&format!("== {} ==\n", section.title));
            for (key, value) in &section.entries {
                out.push_str(&format!("{key}: {value}\n"));
            }
            out.push('\n');
        }
        if !self.discrepancies.is_empty() {
            out.push_str("discrepancies:\n");
            for note in &self.discrepancies {
                out.push_str(&format!("- {note}\n"));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "sections": self.sections.iter().map(|s| {
                serde_json::json!({
                    "title": s.title,
                    "entries": s.entries.iter()
                        .map(|(k, v)| serde_json::json!([k, v]))
                        .collect::<Vec<_>>(),
                })
            }).collect::<Vec<_>>(),
            "discrepancies": self.discrepancies,
        })
    }
}

impl Default for Report {
    fn default() -> Self {
        Report::new()
    }
}

pub fn vector_text(v: &[Rational]) -> String {
    let entries: Vec<String> = v.iter().map(Rational::to_string).collect();
    format!("[{}]", entries.join(", "))
}

/// Single-line nested-list form, e.g. `[[2, 1], [1, 2]]`.
pub fn matrix_text(m: &MatrixQ) -> String {
    let rows: Vec<String> = (0..m.rows()).map(|r| vector_text(m.row(r))).collect();
    format!("[{}]", rows.join(", "))
}

/// Multi-line block with two-space indent, one row per line.
pub fn matrix_block(m: &MatrixQ) -> String {
    if m.rows() == 0 {
        return "  (no rows)\n".to_owned();
    }
    (0..m.rows())
        .map(|r| format!("  {}\n", vector_text(m.row(r))))
        .collect()
}

pub fn subspace_text(s: &SubspaceQ) -> String {
    if s.is_zero() {
        return format!("zero subspace of Q^{}", s.ambient_dim());
    }
    let rows: Vec<String> = (0..s.dim()).map(|r| vector_text(s.basis_row(r))).collect();
    format!("span{{{}}}", rows.join(", "))
}

/// Floats appear only in eigenvalue summaries and always carry nine decimal
/// digits.
pub fn float_text(x: f64) -> String {
    format!("{x:.9}")
}
