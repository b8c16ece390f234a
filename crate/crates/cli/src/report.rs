//! Run reports: one JSON line per check plus a summary line.

use serde::Serialize;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Not applicable to this input; does not affect the exit status.
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub verdict: Verdict,
    pub counterexample: Option<String>,
    /// Extra information that is not a verdict (dimensions, factors, notes).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub results: Vec<CheckResult>,
}

#[derive(Serialize)]
struct Summary {
    summary: SummaryBody,
}

#[derive(Serialize)]
struct SummaryBody {
    passed: usize,
    failed: usize,
    skipped: usize,
    exit: i32,
}

impl RunReport {
    /// Runs `f` and records its verdict; `Err` carries the counterexample.
    pub fn run(&mut self, check: &str, f: impl FnOnce() -> Result<Option<String>, String>) {
        let t = Instant::now();
        let out = f();
        let millis = t.elapsed().as_millis();
        let (verdict, counterexample, detail) = match out {
            Ok(detail) => (Verdict::Pass, None, detail),
            Err(c) => (Verdict::Fail, Some(c), None),
        };
        self.results.push(CheckResult { check: check.to_string(), verdict, counterexample, detail, millis });
    }

    pub fn skip(&mut self, check: &str, why: &str) {
        self.results.push(CheckResult {
            check: check.to_string(),
            verdict: Verdict::Skip,
            counterexample: None,
            detail: Some(why.to_string()),
            millis: 0,
        });
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.results.iter().filter(|r| r.verdict == v).count()
    }

    pub fn all_pass(&self) -> bool {
        self.count(Verdict::Fail) == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn verdict(&self, check: &str) -> Option<Verdict> {
        self.results.iter().find(|r| r.check == check).map(|r| r.verdict)
    }

    /// JSON lines: every check, then the summary.
    pub fn json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&serde_json::to_string(r).expect("report serializes"));
            out.push('\n');
        }
        let s = Summary {
            summary: SummaryBody {
                passed: self.count(Verdict::Pass),
                failed: self.count(Verdict::Fail),
                skipped: self.count(Verdict::Skip),
                exit: self.exit_code(),
            },
        };
        out.push_str(&serde_json::to_string(&s).expect("summary serializes"));
        out.push('\n');
        out
    }

    /// Short human-readable summary.
    pub fn human(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let tag = match r.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Skip => "skip",
            };
            out.push_str(&format!("{tag:4}  {}", r.check));
            if let Some(c) = &r.counterexample {
                out.push_str(&format!(": {c}"));
            } else if let Some(d) = &r.detail {
                out.push_str(&format!(" ({d})"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped\n",
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Skip)
        ));
        out
    }
}
