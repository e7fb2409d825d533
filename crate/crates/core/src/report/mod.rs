//! Machine-readable run reports and the operations behind each command.

mod commands;

use serde::Serialize;
use serde_json::Value;

pub use commands::*;

use crate::enriched::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// One comparison: what was checked, where, and both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub location: Vec<String>,
    pub expected: String,
    pub got: String,
    pub ok: bool,
}

impl Check {
    pub fn new(name: &str, location: Vec<String>, expected: impl ToString, got: impl ToString) -> Self {
        let (expected, got) = (expected.to_string(), got.to_string());
        Check {
            name: name.to_string(),
            location,
            ok: expected == got,
            expected,
            got,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Input {
    pub path: String,
    pub sha256: String,
}

/// A run report. Field order is fixed and timing is kept out, so equal inputs give
/// byte-identical JSON.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub status: Status,
    pub inputs: Vec<Input>,
    pub checks: Vec<Check>,
    pub data: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            status: Status::Pass,
            inputs: Vec::new(),
            checks: Vec::new(),
            data: Value::Null,
            error: None,
        }
    }

    pub fn error(command: &str, message: String) -> Self {
        RunReport {
            status: Status::Error,
            error: Some(message),
            ..RunReport::new(command)
        }
    }

    pub fn push(&mut self, c: Check) {
        if !c.ok && self.status == Status::Pass {
            self.status = Status::Fail;
        }
        self.checks.push(c);
    }

    /// Adds a summary check for an axiom report, followed by one check per violation.
    pub fn push_report(&mut self, name: &str, location: Vec<String>, r: &Report) {
        self.push(Check::new(name, location.clone(), format!("{} of {} hold", r.checks, r.checks), format!(
            "{} of {} hold",
            r.checks - r.failures.len(),
            r.checks
        )));
        for f in &r.failures {
            let mut loc = location.clone();
            loc.push(f.clone());
            self.push(Check::new(name, loc, "holds", "violated"));
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    /// Human-readable summary: one line per failed check, then the status.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in &self.inputs {
            out += &format!("input {} sha256:{}\n", i.path, i.sha256);
        }
        let failed: Vec<&Check> = self.checks.iter().filter(|c| !c.ok).collect();
        for c in &failed {
            out += &format!(
                "FAIL {} [{}]: expected {}, got {}\n",
                c.name,
                c.location.join(", "),
                c.expected,
                c.got
            );
        }
        if let Some(e) = &self.error {
            out += &format!("error: {e}\n");
        }
        if !self.data.is_null() {
            out += &serde_json::to_string_pretty(&self.data).expect("values serialize");
            out += "\n";
        }
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        };
        out += &format!(
            "{}: {status} ({} checks, {} failed)\n",
            self.command,
            self.checks.len(),
            failed.len()
        );
        out
    }
}
