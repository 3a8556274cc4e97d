//! Subcommand bodies. Each returns a report; the exit code travels with it.

use std::collections::BTreeMap;
use std::path::Path;

use limitcyc::cycles::ZeroCycle;
use limitcyc::flex::{flex_limit_report, FlexReport};
use limitcyc::intersect::plane_intersection_cycle;
use limitcyc::limits::{oracle_limit_cycle, theorem_path, verify_certificates, verify_family, FamilyJob, Transcript};
use serde::Serialize;

use crate::jobfile::{expected_cycle, poly, JobFile};
use crate::report::{CertificateJson, CycleJson, IssueJson, Report, Status};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JobCommand {
    Verify,
    Limit,
    Oracle,
    Compare,
}

impl JobCommand {
    fn name(self) -> &'static str {
        match self {
            JobCommand::Verify => "verify",
            JobCommand::Limit => "limit",
            JobCommand::Oracle => "oracle",
            JobCommand::Compare => "compare",
        }
    }
}

pub fn read_job_file(path: &Path) -> Result<JobFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    JobFile::from_json(&text)
}

/// Runs a job subcommand on a file path.
pub fn run_job_path(cmd: JobCommand, path: &Path) -> Report {
    match read_job_file(path) {
        Ok(jf) => run_job(cmd, &jf),
        Err(e) => {
            let mut r = Report::new(cmd.name());
            r.fail(&e);
            r
        }
    }
}

pub fn run_job(cmd: JobCommand, jf: &JobFile) -> Report {
    let mut report = Report::new(cmd.name());
    if let Err(e) = run_job_inner(cmd, jf, &mut report) {
        report.fail(&e);
    }
    report
}

fn run_job_inner(cmd: JobCommand, jf: &JobFile, report: &mut Report) -> Result<(), CliError> {
    let job = jf.to_job()?;
    if cmd == JobCommand::Verify {
        return verify(&job, report);
    }
    let expected = match &jf.expected {
        Some(terms) => Some(report.timed("expected", || expected_cycle(terms))?),
        None => None,
    };
    let mut log = Transcript::default();
    let theorem = if matches!(cmd, JobCommand::Limit | JobCommand::Compare) {
        jf.check_theorem_inputs()?;
        let (mu, certs, cycle) = report.timed("theorem", || theorem_path(&job, &mut log))?;
        report.multiplier = Some(mu);
        report.certificates = certs.iter().map(CertificateJson::from).collect();
        report.limit_cycle = Some(CycleJson::from(&cycle));
        report.degree = Some(cycle.degree());
        Some(cycle)
    } else {
        None
    };
    let run_oracle = cmd == JobCommand::Oracle || (cmd == JobCommand::Compare && job.options.run_oracle);
    let oracle = if run_oracle {
        let cycle = report.timed("oracle", || oracle_limit_cycle(&job))?;
        log.note(format!("oracle: [lim D] = {cycle}, degree {}", cycle.degree()));
        report.oracle_cycle = Some(CycleJson::from(&cycle));
        report.degree.get_or_insert(cycle.degree());
        Some(cycle)
    } else {
        None
    };
    report.transcript = log.lines().to_vec();
    if let (Some(t), Some(o)) = (&theorem, &oracle) {
        if t == o {
            report.verdict = Some("EQUAL".into());
        } else {
            report.mismatch(format!("theorem - oracle = {}", t.sub(o)));
        }
    }
    if let Some(e) = &expected {
        report.expected_cycle = Some(CycleJson::from(e));
        for (label, c) in [("theorem", &theorem), ("oracle", &oracle)] {
            if let Some(c) = c {
                if c != e {
                    report.mismatch(format!("{label} - expected = {}", c.sub(e)));
                }
            }
        }
    }
    Ok(())
}

fn verify(job: &FamilyJob, report: &mut Report) -> Result<(), CliError> {
    let validation = verify_family(job);
    report.issues = validation
        .issues
        .iter()
        .map(|i| IssueJson {
            code: i.code.to_string(),
            witness: i.witness.clone(),
        })
        .collect();
    report.notes = validation.notes.clone();
    if !validation.is_valid() {
        report.status = Status::Invalid;
        report.error = Some("family validation failed".into());
        report.exit_code = 1;
        return Ok(());
    }
    if !job.certificates.is_empty() {
        let mut log = Transcript::default();
        let certs = verify_certificates(job, &job.certificates, &mut log).map_err(|e| CliError::Failed(e.to_string()))?;
        report.certificates = certs.iter().map(CertificateJson::from).collect();
        report.transcript = log.lines().to_vec();
    }
    report.degree = Some(job.expected_degree());
    Ok(())
}

/// `[p . q]` for two forms given as text.
pub fn run_intersect(p: &str, q: &str) -> Report {
    let mut report = Report::new("intersect");
    let result = (|| -> Result<ZeroCycle, CliError> {
        let (p, q) = (poly(p, "p")?, poly(q, "q")?);
        Ok(plane_intersection_cycle(&p, &q)?)
    })();
    match report.timed("intersect", || result) {
        Ok(c) => {
            report.degree = Some(c.degree());
            report.limit_cycle = Some(CycleJson::from(&c));
        }
        Err(e) => report.fail(&e),
    }
    report
}

#[derive(Clone, Debug, Serialize)]
pub struct FlexJson {
    pub status: crate::report::Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lim_e: Option<CycleJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hyperplane: Option<CycleJson>,
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    pub r: Option<CycleJson>,
    #[serde(rename = "R_G", skip_serializing_if = "Option::is_none")]
    pub r_g: Option<CycleJson>,
    #[serde(rename = "R_x", skip_serializing_if = "Option::is_none")]
    pub r_x: Option<CycleJson>,
    #[serde(rename = "three_G_x", skip_serializing_if = "Option::is_none")]
    pub g_x: Option<CycleJson>,
    pub identities: BTreeMap<String, bool>,
    pub verified: bool,
    pub transcript: Vec<String>,
    pub timings_ms: BTreeMap<String, u64>,
    #[serde(skip)]
    pub exit_code: i32,
}

impl FlexJson {
    fn from_report(r: &FlexReport) -> FlexJson {
        let ok = r.verified && r.identities_hold();
        FlexJson {
            status: if ok { Status::Ok } else { Status::Mismatch },
            error: None,
            family: Some(r.family.to_string()),
            w: Some(r.w.to_string()),
            h: Some(r.h.to_string()),
            lim_e: Some((&r.lim_e).into()),
            hyperplane: Some((&r.hyperplane).into()),
            r: Some((&r.r).into()),
            r_g: Some((&r.r_g).into()),
            r_x: Some((&r.r_x).into()),
            g_x: Some((&r.g_x).into()),
            identities: r.identities.iter().map(|c| (c.name.to_string(), c.holds)).collect(),
            verified: r.verified,
            transcript: r.transcript.lines().to_vec(),
            timings_ms: BTreeMap::new(),
            exit_code: if ok { 0 } else { 1 },
        }
    }

    fn failed(e: &CliError) -> FlexJson {
        FlexJson {
            status: Status::Invalid,
            error: Some(e.message().to_string()),
            family: None,
            w: None,
            h: None,
            lim_e: None,
            hyperplane: None,
            r: None,
            r_g: None,
            r_x: None,
            g_x: None,
            identities: BTreeMap::new(),
            verified: false,
            transcript: Vec::new(),
            timings_ms: BTreeMap::new(),
            exit_code: e.exit_code(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.timings_ms.clear();
        copy.to_json()
    }
}

/// The flex pipeline for `G` and `F1` given as text.
pub fn run_flex(g: &str, f1: &str) -> FlexJson {
    let start = std::time::Instant::now();
    let result = (|| -> Result<FlexReport, CliError> { Ok(flex_limit_report(&poly(g, "g")?, &poly(f1, "f1")?)?) })();
    let mut out = match result {
        Ok(r) => FlexJson::from_report(&r),
        Err(e) => FlexJson::failed(&e),
    };
    out.timings_ms.insert("flex".into(), start.elapsed().as_millis() as u64);
    out
}
