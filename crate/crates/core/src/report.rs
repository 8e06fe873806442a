//! Report entries and the JSON document the command-line tool emits.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub detail: String,
}

impl ReportEntry {
    /// Pass iff `expected == actual`.
    pub fn compare(id: impl Into<String>, expected: String, actual: String, detail: impl Into<String>) -> ReportEntry {
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        ReportEntry {
            id: id.into(),
            status,
            expected,
            actual,
            detail: detail.into(),
        }
    }

    /// A check that could not be carried out.
    pub fn error(id: impl Into<String>, expected: String, err: impl std::fmt::Display) -> ReportEntry {
        ReportEntry {
            id: id.into(),
            status: Status::Fail,
            expected,
            actual: String::new(),
            detail: format!("error: {err}"),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub timestamp: String,
    pub entries: Vec<ReportEntry>,
}

impl ReportDocument {
    pub fn new(entries: Vec<ReportEntry>) -> ReportDocument {
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            entries,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(ReportEntry::passed)
    }

    /// Process exit status: 0 when every entry passes, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    /// Pretty JSON, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<ReportDocument> {
        serde_json::from_str(s)
    }

    /// One line per entry, failures followed by both sides.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let tag = if e.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag}  {}", e.id));
            if !e.detail.is_empty() {
                out.push_str(&format!("  ({})", e.detail));
            }
            out.push('\n');
            if !e.passed() {
                out.push_str(&format!("      expected: {}\n      actual:   {}\n", e.expected, e.actual));
            }
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{} entries, {} passed, {} failed\n",
            self.entries.len(),
            self.entries.len() - failed,
            failed
        ));
        out
    }
}
