//! Limit cycles of divisors cut on a degenerating family of plane curves.
//!
//! A job is a family `F(t; x, y, z)` whose fiber at `t = 0` factors into
//! components `g_i^m_i`, and a divisor form `d`. The limit cycle is computed
//! twice: from twisting certificates, and from the `t`-saturation of
//! `(F, d^mu)`.

mod certificate;
mod family;
mod oracle;
mod random;
mod transcript;
mod twister;

pub use certificate::{
    search_certificates, search_certificates_logged, search_with_multipliers, tadic_cofactor_lift,
    theorem_limit_cycle, verify_certificate, verify_certificate_logged, verify_certificates,
};
pub use family::{verify_family, Certificate, Component, FamilyJob, FamilyValidation, Issue, JobOptions};
pub use oracle::oracle_limit_cycle;
pub use random::{random_jobs, JobGenerator};
pub use transcript::Transcript;
pub use twister::{full_fiber_modify, twister_modify};

use crate::cycles::ZeroCycle;
use crate::error::Result;

/// Outcome of running both paths on a job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub multiplier: u32,
    pub certificates: Vec<Certificate>,
    pub theorem: ZeroCycle,
    pub oracle: ZeroCycle,
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        self.theorem == self.oracle
    }

    /// `theorem - oracle`.
    pub fn difference(&self) -> ZeroCycle {
        self.theorem.sub(&self.oracle)
    }
}

/// The certificates the job supplies, or searched ones; returns the
/// multiplier they belong to.
pub fn resolve_certificates(job: &FamilyJob, log: &mut Transcript) -> Result<(u32, Vec<Certificate>)> {
    verify_family(job).into_result()?;
    if job.options.search_certificates && job.certificates.is_empty() {
        search_with_multipliers(job, log)
    } else {
        Ok((job.multiplier, verify_certificates(job, &job.certificates, log)?))
    }
}

/// Theorem path with its transcript.
pub fn theorem_path(job: &FamilyJob, log: &mut Transcript) -> Result<(u32, Vec<Certificate>, ZeroCycle)> {
    let (mu, certs) = resolve_certificates(job, log)?;
    let scaled = job.clone().with_multiplier(mu);
    let cycle = theorem_limit_cycle(&scaled, &certs)?;
    log.note(format!("theorem: [lim D] = {cycle}, degree {}", cycle.degree()));
    Ok((mu, certs, cycle))
}

/// Theorem path against the saturation oracle.
pub fn compare(job: &FamilyJob, log: &mut Transcript) -> Result<Comparison> {
    let (multiplier, certificates, theorem) = theorem_path(job, log)?;
    let oracle = oracle_limit_cycle(job)?;
    log.note(format!("oracle: [lim D] = {oracle}, degree {}", oracle.degree()));
    Ok(Comparison {
        multiplier,
        certificates,
        theorem,
        oracle,
    })
}
