//! Verification reports: named checks with computed value, asserted bound,
//! margin and status, serializable to byte-stable JSON and a text table.

use crate::scalar::Real;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Significant digits written for every reported value.
pub const REPORT_DIGITS: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
}

impl Orientation {
    pub fn symbol(self) -> &'static str {
        match self {
            Orientation::AtMost => "<=",
            Orientation::AtLeast => ">=",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "computed")]
    Computed,
    #[serde(rename = "sampled certificate")]
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub computed: String,
    pub bound: String,
    pub orientation: Orientation,
    pub margin: String,
    pub tolerance: String,
    pub status: Status,
    pub kind: Kind,
    /// The inequality being certified, in plain notation.
    pub statement: String,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub note: String,
    #[serde(skip)]
    margin_f64: f64,
}

fn fmt<T: Real>(x: &T) -> String {
    x.to_decimal(REPORT_DIGITS.min(T::digits() as usize + 1))
}

impl Entry {
    /// Compares `computed` against `bound`; passes when the signed margin is
    /// at least `-tolerance`.
    pub fn check<T: Real>(
        name: impl Into<String>,
        statement: impl Into<String>,
        computed: &T,
        orientation: Orientation,
        bound: &T,
        tolerance: &T,
    ) -> Entry {
        let margin = match orientation {
            Orientation::AtMost => bound.clone() - computed.clone(),
            Orientation::AtLeast => computed.clone() - bound.clone(),
        };
        let ok = margin.is_finite() && margin >= -tolerance.clone();
        Entry {
            name: name.into(),
            computed: fmt(computed),
            bound: fmt(bound),
            orientation,
            margin: fmt(&margin),
            tolerance: fmt(tolerance),
            status: if ok { Status::Pass } else { Status::Fail },
            kind: Kind::Computed,
            statement: statement.into(),
            note: String::new(),
            margin_f64: margin.to_f64(),
        }
    }

    /// Zero-tolerance comparison.
    pub fn exact<T: Real>(
        name: impl Into<String>,
        statement: impl Into<String>,
        computed: &T,
        orientation: Orientation,
        bound: &T,
    ) -> Entry {
        Entry::check(name, statement, computed, orientation, bound, &T::zero())
    }

    /// `|computed - expected| <= tolerance`, reported as the deviation against
    /// the tolerance.
    pub fn agrees<T: Real>(name: impl Into<String>, statement: impl Into<String>, computed: &T, expected: &T, tolerance: &T) -> Entry {
        let dev = (computed.clone() - expected.clone()).abs();
        let mut e = Entry::check(name, statement, &dev, Orientation::AtMost, tolerance, &T::zero());
        e.note = format!("value {} vs {}", fmt(computed), fmt(expected));
        e
    }

    pub fn skipped(name: impl Into<String>, statement: impl Into<String>, note: impl Into<String>) -> Entry {
        Entry {
            name: name.into(),
            computed: String::new(),
            bound: String::new(),
            orientation: Orientation::AtMost,
            margin: String::new(),
            tolerance: String::new(),
            status: Status::Skipped,
            kind: Kind::Computed,
            statement: statement.into(),
            note: note.into(),
            margin_f64: f64::NAN,
        }
    }

    pub fn sampled(mut self) -> Entry {
        self.kind = Kind::Sampled;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Entry {
        self.note = note.into();
        self
    }

    /// Overrides the verdict, for checks whose success criterion is a
    /// failure of the underlying comparison.
    pub fn expect_failure(mut self) -> Entry {
        self.status = match self.status {
            Status::Fail => Status::Pass,
            Status::Pass => Status::Fail,
            Status::Skipped => Status::Skipped,
        };
        self.note = if self.note.is_empty() {
            "comparison is expected to fail".into()
        } else {
            format!("{}; comparison is expected to fail", self.note)
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn margin(&self) -> f64 {
        self.margin_f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub digits: u32,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(digits: u32) -> Self {
        Report { digits, entries: Vec::new() }
    }

    pub fn push(&mut self, e: Entry) {
        self.entries.push(e);
    }

    pub fn extend(&mut self, es: impl IntoIterator<Item = Entry>) {
        self.entries.extend(es);
    }

    /// Sorts by name and rejects duplicates, which would make the document
    /// ambiguous.
    pub fn finish(mut self) -> Self {
        self.entries.sort_by(|a, b| a.name.cmp(&b.name));
        for pair in self.entries.windows(2) {
            assert_ne!(pair[0].name, pair[1].name, "duplicate report entry");
        }
        self
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let name_w = self.entries.iter().map(|e| e.name.len()).max().unwrap_or(4).max(4);
        let mut out = String::new();
        let _ = writeln!(out, "{:<name_w$}  {:<7}  {:>16}  {:2}  {:>16}  {:>12}", "name", "status", "computed", "", "bound", "margin");
        for e in &self.entries {
            let status = match (e.status, e.kind) {
                (Status::Pass, Kind::Sampled) => "pass*",
                (Status::Pass, _) => "pass",
                (Status::Fail, _) => "FAIL",
                (Status::Skipped, _) => "skipped",
            };
            let _ = writeln!(
                out,
                "{:<name_w$}  {:<7}  {:>16}  {:2}  {:>16}  {:>12}",
                e.name,
                status,
                short(&e.computed, 16),
                if e.status == Status::Skipped { "" } else { e.orientation.symbol() },
                short(&e.bound, 16),
                short(&e.margin, 12)
            );
        }
        let sampled = self.entries.iter().any(|e| e.kind == Kind::Sampled);
        if sampled {
            out.push_str("* sampled certificate: dense numerical check, not a proof\n");
        }
        out
    }
}

fn short(s: &str, width: usize) -> String {
    let Ok(x) = s.parse::<f64>() else {
        return s.to_string();
    };
    let prec = width.saturating_sub(7).max(1);
    format!("{x:.prec$e}")
}
