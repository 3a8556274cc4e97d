//! JSON reports. Everything except `timings_ms` is a function of the input.

use std::collections::BTreeMap;
use std::time::Instant;

use limitcyc::cycles::{CycleEntry, ZeroCycle};
use limitcyc::limits::Certificate;
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Mismatch,
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleJson {
    pub text: String,
    pub degree: i64,
    pub points: Vec<CycleEntry>,
}

impl From<&ZeroCycle> for CycleJson {
    fn from(c: &ZeroCycle) -> Self {
        CycleJson {
            text: c.to_string(),
            degree: c.degree(),
            points: c.entries(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateJson {
    pub component: usize,
    pub a: String,
    pub p: u32,
    pub b0: Option<String>,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        CertificateJson {
            component: c.component,
            a: c.a.to_string(),
            p: c.p,
            b0: c.b.as_ref().map(|b| b.t_coefficient(0).to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IssueJson {
    pub code: String,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    pub limit_cycle: Option<CycleJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_cycle: Option<CycleJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_cycle: Option<CycleJson>,
    pub degree: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplier: Option<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<CertificateJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub issues: Vec<IssueJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub transcript: Vec<String>,
    pub timings_ms: BTreeMap<String, u64>,
    #[serde(skip)]
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.into(),
            status: Status::Ok,
            verdict: None,
            limit_cycle: None,
            oracle_cycle: None,
            expected_cycle: None,
            degree: None,
            multiplier: None,
            certificates: Vec::new(),
            issues: Vec::new(),
            notes: Vec::new(),
            error: None,
            transcript: Vec::new(),
            timings_ms: BTreeMap::new(),
            exit_code: 0,
        }
    }

    pub fn fail(&mut self, e: &CliError) {
        self.status = Status::Invalid;
        self.error = Some(e.message().to_string());
        self.exit_code = e.exit_code();
    }

    pub fn mismatch(&mut self, why: impl Into<String>) {
        self.status = Status::Mismatch;
        self.verdict = Some("MISMATCH".into());
        self.notes.push(why.into());
        self.exit_code = 1;
    }

    /// Runs `f`, recording its wall time under `phase`.
    pub fn timed<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings_ms.insert(phase.into(), start.elapsed().as_millis() as u64);
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The report without timings; identical across runs on the same input.
    pub fn canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.timings_ms.clear();
        copy.to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_drops_timings() {
        let mut r = Report::new("limit");
        let v = r.timed("phase", || 7);
        assert_eq!(v, 7);
        assert!(r.timings_ms.contains_key("phase"));
        let canonical = r.canonical_json();
        assert!(!canonical.contains("phase"));
        r.mismatch("differs");
        assert_eq!((r.status, r.exit_code, r.verdict.as_deref()), (Status::Mismatch, 1, Some("MISMATCH")));
        r.fail(&CliError::Input("bad".into()));
        assert_eq!(r.exit_code, 2);
        assert!(r.to_json().contains("\"status\": \"invalid\""));
    }
}
