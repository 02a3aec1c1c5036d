//! Machine-readable verification reports.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One sub-check inside a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Detail {
    pub name: String,
    pub pass: bool,
    pub summary: String,
}

/// Outcome of one `verify_*` operation.
///
/// `elapsed_ms` is only filled when timings are requested, so that reports of
/// symbolic runs stay byte-identical across runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub anchor: String,
    pub params: BTreeMap<String, Value>,
    pub pass: bool,
    pub details: Vec<Detail>,
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn failed_details(&self) -> impl Iterator<Item = &Detail> {
        self.details.iter().filter(|d| !d.pass)
    }

    pub fn detail(&self, name: &str) -> Option<&Detail> {
        self.details.iter().find(|d| d.name == name)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per report, as printed by the CLI in text mode.
    pub fn text_line(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut s = format!(
            "{} {} [{}] ({} sub-checks)",
            if self.pass { "PASS" } else { "FAIL" },
            self.check,
            params.join(" "),
            self.details.len()
        );
        for d in self.failed_details() {
            s.push_str(&format!("\n    failed: {}: {}", d.name, d.summary));
        }
        s
    }
}

pub struct ReportBuilder {
    check: String,
    anchor: String,
    params: BTreeMap<String, Value>,
    details: Vec<Detail>,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(check: &str, anchor: &str) -> Self {
        ReportBuilder {
            check: check.to_string(),
            anchor: anchor.to_string(),
            params: BTreeMap::new(),
            details: Vec::new(),
            start: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), v.into());
        self
    }

    pub fn set_param(&mut self, key: &str, v: impl Into<Value>) {
        self.params.insert(key.to_string(), v.into());
    }

    pub fn detail(&mut self, name: impl Into<String>, pass: bool, summary: impl Into<String>) {
        self.details.push(Detail { name: name.into(), pass, summary: summary.into() });
    }

    /// Records a sub-check whose failure is an error value.
    pub fn detail_result<T>(&mut self, name: impl Into<String>, r: crate::Result<T>, ok: impl FnOnce(&T) -> (bool, String)) {
        match r {
            Ok(v) => {
                let (pass, s) = ok(&v);
                self.detail(name, pass, s);
            }
            Err(e) => self.detail(name, false, format!("error: {e}")),
        }
    }

    pub fn finish(self) -> VerificationReport {
        let pass = self.details.iter().all(|d| d.pass);
        VerificationReport {
            check: self.check,
            anchor: self.anchor,
            params: self.params,
            pass,
            details: self.details,
            elapsed_ms: None,
        }
    }

    pub fn finish_timed(self) -> VerificationReport {
        let ms = self.start.elapsed().as_millis() as u64;
        let mut r = self.finish();
        r.elapsed_ms = Some(ms);
        r
    }
}

/// Summary string for a residual operator.
pub fn residual_summary(op: &crate::superspace::GradedOperator) -> String {
    if op.is_zero() {
        "residual zero".to_string()
    } else {
        format!("residual has {} nonzero entries", op.nnz())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_is_conjunction() {
        let mut b = ReportBuilder::new("demo", "demo identity").param("n", 2);
        b.detail("a", true, "ok");
        b.detail("b", false, "bad");
        let r = b.finish();
        assert!(!r.pass);
        assert_eq!(r.failed_details().count(), 1);
        assert!(r.elapsed_ms.is_none());
        let back: VerificationReport = serde_json::from_str(&r.to_json_string()).unwrap();
        assert_eq!(back, r);
        assert!(r.text_line().starts_with("FAIL demo [n=2]"));
    }
}
