//! Structured pass/fail reports shared by every checker.

use std::fmt::Write as _;

/// Witnesses kept per check; the violation counter keeps counting past this.
pub const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The check's precondition does not hold, so nothing was asserted.
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub summary: String,
    pub violations: usize,
    pub witnesses: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            summary: String::new(),
            violations: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn skipped(name: impl Into<String>, why: impl Into<String>) -> Self {
        Check {
            status: Status::Skipped,
            summary: why.into(),
            ..Check::new(name)
        }
    }

    /// Records one violation and flips the check to `Fail`.
    pub fn violation(&mut self, witness: impl FnOnce() -> String) {
        self.status = Status::Fail;
        self.violations += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness());
        }
    }

    pub fn with_summary(mut self, summary: impl Into<String>) -> Self {
        self.summary = summary.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    /// True when no check failed. Skipped checks do not count as failures.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn violations(&self) -> usize {
        self.checks.iter().map(|c| c.violations).sum()
    }

    /// Human-readable rendering. Field order and spelling are stable.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "report: {}", self.subject);
        for c in &self.checks {
            let _ = write!(out, "  [{}] {}", c.status.as_str(), c.name);
            if !c.summary.is_empty() {
                let _ = write!(out, ": {}", c.summary);
            }
            out.push('\n');
            if c.violations > 0 {
                let _ = writeln!(out, "    violations: {}", c.violations);
            }
            for w in &c.witnesses {
                let _ = writeln!(out, "    witness: {w}");
            }
        }
        let _ = writeln!(
            out,
            "result: {}",
            if self.passed() { "pass" } else { "fail" }
        );
        out
    }

    /// One `key=value` record per line for machine consumption.
    pub fn render_records(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "report subject={}", quote(&self.subject));
        for c in &self.checks {
            let _ = writeln!(
                out,
                "check name={} status={} violations={} summary={}",
                quote(&c.name),
                c.status.as_str(),
                c.violations,
                quote(&c.summary)
            );
            for w in &c.witnesses {
                let _ = writeln!(out, "witness check={} value={}", quote(&c.name), quote(w));
            }
        }
        let _ = writeln!(
            out,
            "result status={}",
            if self.passed() { "pass" } else { "fail" }
        );
        out
    }
}

pub(crate) fn quote(s: &str) -> String {
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for ch in s.chars() {
        match ch {
            '"' => q.push_str("\\\""),
            '\\' => q.push_str("\\\\"),
            '\n' => q.push_str("\\n"),
            _ => q.push(ch),
        }
    }
    q.push('"');
    q
}
