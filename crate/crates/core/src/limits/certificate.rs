use crate::cycles::ZeroCycle;
use crate::error::{Error, Result};
use crate::groebner::{saturate_by, IdealRep};
use crate::intersect::plane_intersection_cycle;
use crate::poly::{Monomial, MultiPoly, Var};

use super::family::{Certificate, FamilyJob};
use super::transcript::Transcript;

fn t_power(p: u32) -> MultiPoly {
    MultiPoly::monomial(crate::poly::rat(1), Monomial::var(Var::T, p as u16))
}

/// `b` with `a - t^p * b` a multiple of `F`, built one `t`-adic digit at a
/// time.
pub fn tadic_cofactor_lift(a: &MultiPoly, f: &MultiPoly, p: u32) -> Result<MultiPoly> {
    let f0 = f.t_coefficient(0);
    if f0.is_zero() {
        return Err(Error::Precondition("F(t=0) = 0".into()));
    }
    let mut rem = a.clone();
    for k in 0..p {
        let ck = rem.t_coefficient(k as u16);
        if ck.is_zero() {
            continue;
        }
        let qk = ck.exact_div(&f0).map_err(|_| Error::NotLiftable {
            stage: k,
            message: format!("F(t=0) = {f0} does not divide the t^{k} coefficient {ck}"),
        })?;
        rem = rem - &(&qk * &t_power(k)) * f;
    }
    // Digits below t^p vanish, so every term carries t^p.
    let mut b = MultiPoly::zero();
    for (m, c) in rem.terms() {
        if m.exp(Var::T) < p as u16 {
            return Err(Error::Internal(format!("lift remainder {rem} keeps a low t-digit")));
        }
        let mut e = *m;
        e.0[Var::T.index()] -= p as u16;
        b.add_term(e, c.clone());
    }
    let residue = IdealRep::grevlex(vec![f.clone()])?.normal_form(&(a - &(&t_power(p) * &b)));
    if !residue.is_zero() {
        return Err(Error::Internal(format!("lift residue {residue} is not zero")));
    }
    Ok(b)
}

/// Lifts `d^mu * a`, checks that the component's generic point avoids both
/// `a` and `b` at `t = 0`, and records `b`.
pub fn verify_certificate(job: &FamilyJob, cert: &Certificate) -> Result<Certificate> {
    verify_certificate_logged(job, cert, &mut Transcript::default())
}

pub fn verify_certificate_logged(
    job: &FamilyJob,
    cert: &Certificate,
    log: &mut Transcript,
) -> Result<Certificate> {
    let i = cert.component;
    let comp = job
        .components
        .get(i)
        .ok_or_else(|| Error::InvalidCertificate(format!("component index {i} out of range")))?;
    let a = &cert.a;
    if a.is_zero() || !a.is_homogeneous_xyz() {
        return Err(Error::InvalidCertificate(format!(
            "component {i}: a = {a} is not a nonzero form"
        )));
    }
    let lhs = &job.divisor_power() * a;
    let b = tadic_cofactor_lift(&lhs, &job.family, cert.p)?;
    let g = &comp.g;
    let a0 = a.t_coefficient(0);
    let b0 = b.t_coefficient(0);
    if a0.is_zero() || g.divides(&a0) {
        return Err(Error::InvalidCertificate(format!(
            "component {i}: {g} divides a(t=0) = {a0}"
        )));
    }
    if b0.is_zero() || g.divides(&b0) {
        return Err(Error::InvalidCertificate(format!(
            "component {i}: {g} divides b(t=0) = {b0}"
        )));
    }
    let expected = job.divisor_power().degree_xyz() + a.degree_xyz();
    if !b.is_homogeneous_xyz() || b.degree_xyz() != expected {
        return Err(Error::InvalidCertificate(format!(
            "component {i}: b = {b} is not a form of degree {expected}"
        )));
    }
    log.record(
        &format!("certificate[{i}]"),
        &format!(
            "d^{} * ({a}) - t^{} * ({b}) in (F)",
            job.multiplier, cert.p
        ),
        &MultiPoly::zero(),
    );
    Ok(Certificate {
        b: Some(b),
        ..cert.clone()
    })
}

/// Verifies a full certificate set: exactly one per component.
pub fn verify_certificates(job: &FamilyJob, certs: &[Certificate], log: &mut Transcript) -> Result<Vec<Certificate>> {
    let mut seen = vec![false; job.components.len()];
    let mut out = Vec::with_capacity(certs.len());
    for c in certs {
        if c.component >= seen.len() {
            return Err(Error::InvalidCertificate(format!(
                "component index {} out of range",
                c.component
            )));
        }
        if std::mem::replace(&mut seen[c.component], true) {
            return Err(Error::InvalidCertificate(format!(
                "two certificates for component {}",
                c.component
            )));
        }
        out.push(verify_certificate_logged(job, c, log)?);
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(Error::InvalidCertificate(format!("no certificate for component {i}")));
    }
    out.sort_by_key(|c| c.component);
    Ok(out)
}

/// `(1/mu) * sum m_i * ([b_i(0) . g_i] - [a_i(0) . g_i])` over verified
/// certificates.
pub fn theorem_limit_cycle(job: &FamilyJob, certs: &[Certificate]) -> Result<ZeroCycle> {
    let mut total = ZeroCycle::new();
    for c in certs {
        let b = c.b.as_ref().ok_or_else(|| {
            Error::InvalidCertificate(format!("certificate for component {} is unverified", c.component))
        })?;
        let comp = job
            .components
            .get(c.component)
            .ok_or_else(|| Error::InvalidCertificate(format!("component index {} out of range", c.component)))?;
        let m = comp.m as i64;
        let b0 = b.t_coefficient(0);
        total = total.add(&plane_intersection_cycle(&b0, &comp.g)?.scale(m));
        let a0 = c.a.t_coefficient(0);
        if !a0.is_constant() {
            total = total.sub(&plane_intersection_cycle(&a0, &comp.g)?.scale(m));
        }
    }
    let cycle = total.div(job.multiplier as i64)?;
    if !cycle.is_effective() {
        return Err(Error::HypothesisViolated(format!(
            "limit cycle {cycle} is not effective; theorem hypotheses violated upstream"
        )));
    }
    if cycle.degree() != job.expected_degree() {
        return Err(Error::HypothesisViolated(format!(
            "limit cycle has degree {} instead of {}",
            cycle.degree(),
            job.expected_degree()
        )));
    }
    Ok(cycle)
}

/// Largest `p <= p_max` with `d^mu` in `((t^p, F) : h^inf)`.
fn valuation(job: &FamilyJob, h: &MultiPoly, p_max: u32) -> Result<u32> {
    let dmu = job.divisor_power();
    let mut best = 0;
    for p in 1..=p_max {
        let base = IdealRep::grevlex(vec![t_power(p), job.family.clone()])?;
        let local = if h.is_constant() { base } else { saturate_by(&base, h)? };
        if !local.contains(&dmu) {
            return Ok(best);
        }
        best = p;
    }
    Err(Error::SearchFailed(format!(
        "valuation search reached the bound p_max = {p_max}"
    )))
}

/// Certificates `a_i = prod_{p_j < p_i} g_j^(p_i - p_j)` from the `t`-adic
/// valuations `p_i` of `d^mu` along each component. Reduced fibers only.
pub fn search_certificates(job: &FamilyJob) -> Result<Vec<Certificate>> {
    search_certificates_logged(job, &mut Transcript::default())
}

pub fn search_certificates_logged(job: &FamilyJob, log: &mut Transcript) -> Result<Vec<Certificate>> {
    if let Some((i, c)) = job.components.iter().enumerate().find(|(_, c)| c.m != 1) {
        return Err(Error::Precondition(format!(
            "nonreduced fiber: component {i} has multiplicity {}; search refused",
            c.m
        )));
    }
    let p_max = job.multiplier
        * (job.family.degree_in(Var::T) + job.divisor.degree_in(Var::T) + 1);
    let n = job.components.len();
    let mut ps = Vec::with_capacity(n);
    for i in 0..n {
        let h = (0..n)
            .filter(|&j| j != i)
            .fold(MultiPoly::one(), |acc, j| &acc * &job.components[j].g);
        ps.push(valuation(job, &h, p_max)?);
    }
    let mut certs = Vec::with_capacity(n);
    for i in 0..n {
        let a = (0..n)
            .filter(|&j| ps[j] < ps[i])
            .fold(MultiPoly::one(), |acc, j| &acc * &job.components[j].g.pow(ps[i] - ps[j]));
        let cert = Certificate::new(i, a, ps[i]);
        let checked = verify_certificate_logged(job, &cert, log).map_err(|e| {
            Error::SearchFailed(format!(
                "search incomplete, supply certificates manually (auxiliary divisors taken as the components themselves): {e}"
            ))
        })?;
        certs.push(checked);
    }
    Ok(certs)
}

/// Searches with the job's multiplier, then larger ones up to 3.
pub fn search_with_multipliers(job: &FamilyJob, log: &mut Transcript) -> Result<(u32, Vec<Certificate>)> {
    let mut last = None;
    for mu in job.multiplier..=job.multiplier.max(3) {
        let trial = job.clone().with_multiplier(mu);
        let mut attempt = Transcript::default();
        match search_certificates_logged(&trial, &mut attempt) {
            Ok(certs) => {
                log.extend(attempt);
                return Ok((mu, certs));
            }
            Err(e @ Error::Precondition(_)) => return Err(e),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one multiplier tried"))
}
