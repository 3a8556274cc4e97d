use crate::cycles::ZeroCycle;
use crate::error::{Error, Result};
use crate::groebner::{saturate_t, IdealRep};
use crate::intersect::projective_zero_dim_cycle;
use crate::poly::{rat, MultiPoly, Var};

use super::family::{verify_family, FamilyJob};

/// `[lim D]` from the flat closure: saturate `(F, d^mu)` by `t`, restrict to
/// `t = 0`, take the cycle and divide by `mu`.
pub fn oracle_limit_cycle(job: &FamilyJob) -> Result<ZeroCycle> {
    verify_family(job).into_result()?;
    let closure = saturate_t(&IdealRep::grevlex(vec![job.family.clone(), job.divisor_power()])?)?;
    let mut special: Vec<MultiPoly> = closure
        .basis()
        .iter()
        .map(|g| g.substitute(Var::T, &rat(0)))
        .filter(|g| !g.is_zero())
        .collect();
    special.push(job.special_fiber());
    let limit = IdealRep::grevlex(special)?;
    let cycle = projective_zero_dim_cycle(&limit)
        .map_err(|e| match e {
            Error::NotZeroDimensional(m) => Error::NotZeroDimensional(format!(
                "limit scheme is not finite, d may not be Cartier on the generic fiber: {m}"
            )),
            other => other,
        })?
        .div(job.multiplier as i64)?;
    if cycle.degree() != job.expected_degree() {
        return Err(Error::HypothesisViolated(format!(
            "oracle cycle has degree {} instead of {}",
            cycle.degree(),
            job.expected_degree()
        )));
    }
    Ok(cycle)
}
