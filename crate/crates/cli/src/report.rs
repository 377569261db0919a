//! Command output: one structure, rendered as canonical text or JSON.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

/// Which variables an entry's polynomials are written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    /// The problem variables.
    X,
    /// The ambient basis names `f1, f2, ...`.
    F,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub label: String,
    pub space: Space,
    /// One polynomial, or the coordinates of a vector.
    pub values: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub vector: bool,
}

impl Entry {
    pub fn poly(label: impl Into<String>, space: Space, value: String) -> Self {
        Entry {
            label: label.into(),
            space,
            values: vec![value],
            note: None,
            vector: false,
        }
    }

    pub fn vector(label: impl Into<String>, space: Space, values: Vec<String>) -> Self {
        Entry {
            label: label.into(),
            space,
            values,
            note: None,
            vector: true,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub title: String,
    pub entries: Vec<Entry>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section {
            title: title.into(),
            entries: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub ring: String,
    pub vars: Vec<String>,
    pub order: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub passes: Option<usize>,
    /// Ambient basis elements, named `f1, f2, ...`.
    pub legend: Vec<Entry>,
    pub sections: Vec<Section>,
    pub checks: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(
            out,
            "ring: {}  vars: {}  order: {}",
            self.ring,
            self.vars.join(", "),
            self.order
        );
        match self.passes {
            Some(1) => {
                let _ = writeln!(out, "status: {} (1 pass)", self.status);
            }
            Some(n) => {
                let _ = writeln!(out, "status: {} ({n} passes)", self.status);
            }
            None => {
                let _ = writeln!(out, "status: {}", self.status);
            }
        }
        if !self.legend.is_empty() {
            out.push_str("\nambient basis:\n");
            for e in &self.legend {
                render_entry(&mut out, e);
            }
        }
        for s in &self.sections {
            let _ = writeln!(out, "\n{}:", s.title);
            if s.entries.is_empty() {
                out.push_str("  (none)\n");
            }
            for e in &s.entries {
                render_entry(&mut out, e);
            }
        }
        if !self.checks.is_empty() {
            out.push_str("\nchecks:\n");
            for c in &self.checks {
                let _ = writeln!(out, "  {c}");
            }
        }
        out
    }
}

fn render_entry(out: &mut String, e: &Entry) {
    let body = if e.vector {
        format!("({})", e.values.join(", "))
    } else {
        e.values.join(", ")
    };
    let _ = write!(out, "  {} = {}", e.label, body);
    if let Some(n) = &e.note {
        let _ = write!(out, "  [{n}]");
    }
    out.push('\n');
}
