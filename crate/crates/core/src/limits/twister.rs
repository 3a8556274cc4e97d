use crate::error::{Error, Result};
use crate::groebner::{ideal_intersect, IdealRep};
use crate::poly::{MultiPoly, Var};

use super::family::FamilyJob;

/// `J(-C_i)` applied `k` times: intersection with `(g_i^m_i, t, F)`.
pub fn twister_modify(job: &FamilyJob, ideal: &IdealRep, i: usize, k: u32) -> Result<IdealRep> {
    let comp = job
        .components
        .get(i)
        .ok_or_else(|| Error::Precondition(format!("component index {i} out of range")))?;
    if !ideal.contains(&job.family) {
        return Err(Error::Precondition(format!("F = {} is not in the ideal", job.family)));
    }
    let cut = IdealRep::new(
        vec![comp.g.pow(comp.m), MultiPoly::var(Var::T), job.family.clone()],
        ideal.order().clone(),
    )?;
    let mut out = ideal.clone();
    for _ in 0..k {
        out = ideal_intersect(&out, &cut)?;
    }
    Ok(out)
}

/// Modification once along every component, i.e. by the whole special fiber.
pub fn full_fiber_modify(job: &FamilyJob, ideal: &IdealRep) -> Result<IdealRep> {
    (0..job.components.len()).try_fold(ideal.clone(), |acc, i| twister_modify(job, &acc, i, 1))
}
