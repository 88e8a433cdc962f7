use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub version: String,
    pub fixture_sha256: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub artifacts: Option<serde_json::Value>,
}

impl ReportDocument {
    pub fn new(fixture_sha256: String, checks: Vec<CheckResult>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        ReportDocument { version: env!("CARGO_PKG_VERSION").to_string(), fixture_sha256, checks, summary, artifacts: None }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{}  {:width$}  {}\n", c.status.label(), c.id, c.description));
            if c.status == Status::Fail {
                out.push_str(&format!("      expected: {}\n      actual:   {}\n", c.expected, c.actual));
            }
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped\n",
            self.summary.pass, self.summary.fail, self.summary.skipped
        ));
        out
    }
}

/// Collects check results in order.
pub struct Recorder {
    timings: bool,
    checks: Vec<CheckResult>,
}

impl Recorder {
    /// With `timings` off every `ms` is 0, so reports are reproducible byte for byte.
    pub fn new(timings: bool) -> Self {
        Recorder { timings, checks: Vec::new() }
    }

    /// Runs `f`, which returns `(expected, actual)`; an error counts as a failure.
    pub fn check<F>(&mut self, id: &str, description: &str, f: F)
    where
        F: FnOnce() -> Result<(String, String), String>,
    {
        let start = Instant::now();
        let outcome = f();
        let ms = if self.timings { start.elapsed().as_millis() as u64 } else { 0 };
        let (status, expected, actual) = match outcome {
            Ok((e, a)) => (if e == a { Status::Pass } else { Status::Fail }, e, a),
            Err(msg) => (Status::Fail, String::new(), format!("error: {msg}")),
        };
        self.checks.push(CheckResult { id: id.into(), description: description.into(), status, expected, actual, ms });
    }

    pub fn skip(&mut self, id: &str, description: &str, reason: &str) {
        self.checks.push(CheckResult {
            id: id.into(),
            description: description.into(),
            status: Status::Skipped,
            expected: String::new(),
            actual: reason.into(),
            ms: 0,
        });
    }

    pub fn finish(self) -> Vec<CheckResult> {
        self.checks
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_counts() {
        let mut r = Recorder::new(false);
        r.check("a", "ok", || Ok(("1".into(), "1".into())));
        r.check("b", "mismatch", || Ok(("1".into(), "2".into())));
        r.check("c", "error", || Err("boom".into()));
        r.skip("d", "later", "flag not set");
        let doc = ReportDocument::new("00".into(), r.finish());
        assert_eq!(doc.summary, Summary { pass: 1, fail: 2, skipped: 1 });
        assert!(!doc.all_pass());
        assert!(doc.to_json().contains("\"status\": \"skipped\""));
        assert!(doc.to_table().contains("1 passed, 2 failed, 1 skipped"));
    }
}
