use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{multivar_gcd, MultiPoly, Var, VarSet};

/// One component of the special fiber: the reduced form `g` and the
/// multiplicity `m` of `g` in `F(t = 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub g: MultiPoly,
    pub m: u32,
}

/// Twisting data for one component: `d^mu * a = t^p * b (mod F)`.
/// `b` is filled in by verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub component: usize,
    pub a: MultiPoly,
    pub p: u32,
    pub b: Option<MultiPoly>,
}

impl Certificate {
    pub fn new(component: usize, a: MultiPoly, p: u32) -> Certificate {
        Certificate {
            component,
            a,
            p,
            b: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobOptions {
    pub run_oracle: bool,
    pub assume_irreducible: bool,
    pub search_certificates: bool,
}

impl Default for JobOptions {
    fn default() -> Self {
        JobOptions {
            run_oracle: true,
            assume_irreducible: false,
            search_certificates: false,
        }
    }
}

/// The family `F = 0` over the `t`-disk and the divisor it cuts with `d = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyJob {
    pub family: MultiPoly,
    pub divisor: MultiPoly,
    pub components: Vec<Component>,
    pub multiplier: u32,
    pub certificates: Vec<Certificate>,
    pub options: JobOptions,
}

impl FamilyJob {
    pub fn new(family: MultiPoly, divisor: MultiPoly, components: Vec<Component>) -> FamilyJob {
        FamilyJob {
            family,
            divisor,
            components,
            multiplier: 1,
            certificates: Vec::new(),
            options: JobOptions::default(),
        }
    }

    pub fn with_multiplier(mut self, mu: u32) -> FamilyJob {
        self.multiplier = mu;
        self
    }

    pub fn with_certificates(mut self, certificates: Vec<Certificate>) -> FamilyJob {
        self.certificates = certificates;
        self
    }

    /// `F(t = 0)`.
    pub fn special_fiber(&self) -> MultiPoly {
        self.family.t_coefficient(0)
    }

    /// `d^mu`.
    pub fn divisor_power(&self) -> MultiPoly {
        self.divisor.pow(self.multiplier)
    }

    /// `deg F0 * deg d`, the degree of every limit cycle.
    pub fn expected_degree(&self) -> i64 {
        (self.family.degree_xyz() * self.divisor.degree_xyz()) as i64
    }
}

/// A failed family check with the polynomial that witnesses it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Issue {
    pub code: &'static str,
    pub witness: String,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.witness)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyValidation {
    pub issues: Vec<Issue>,
    pub notes: Vec<String>,
}

impl FamilyValidation {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn into_result(self) -> Result<FamilyValidation> {
        if self.is_valid() {
            Ok(self)
        } else {
            let text: Vec<String> = self.issues.iter().map(|i| i.to_string()).collect();
            Err(Error::InvalidFamily(text.join("; ")))
        }
    }

    fn fail(&mut self, code: &'static str, witness: impl fmt::Display) {
        self.issues.push(Issue {
            code,
            witness: witness.to_string(),
        });
    }
}

fn family_vars() -> VarSet {
    VarSet::of(&[Var::T, Var::X, Var::Y, Var::Z])
}

/// Positive `x, y, z`-degree of a gcd means a common factor over `Q(t)`.
fn shares_factor_over_qt(a: &MultiPoly, b: &MultiPoly) -> Option<MultiPoly> {
    let g = multivar_gcd(a, b);
    (g.degree_xyz() > 0 && !g.is_zero()).then_some(g)
}

/// Structural checks on a job; never fails outright, every problem is an
/// issue.
pub fn verify_family(job: &FamilyJob) -> FamilyValidation {
    let mut v = FamilyValidation::default();
    let f = &job.family;
    let d = &job.divisor;
    for (name, p) in [("family", f), ("divisor", d)] {
        if !p.vars().minus(family_vars()).is_empty() {
            v.fail("variables", format!("{name} = {p}"));
        }
        if p.is_zero() {
            v.fail("zero-form", name);
        } else if !p.is_homogeneous_xyz() {
            v.fail("not-homogeneous", format!("{name} = {p}"));
        }
    }
    if job.multiplier == 0 {
        v.fail("multiplier", "0");
    }
    let f0 = job.special_fiber();
    if f0.is_zero() {
        v.fail("special-fiber", format!("F(t=0) = 0 for F = {f}"));
    }
    if job.components.is_empty() {
        v.fail("components", "empty component list");
    }
    for (i, c) in job.components.iter().enumerate() {
        let g = &c.g;
        if c.m == 0 {
            v.fail("multiplicity", format!("component {i}: m = 0"));
        }
        if g.contains_var(Var::T)
            || !g.vars().minus(family_vars()).is_empty()
            || !g.is_homogeneous_xyz()
            || g.degree_xyz() == 0
        {
            v.fail("component-form", format!("component {i}: {g}"));
            continue;
        }
        if *g != g.primitive() {
            v.fail("component-primitive", format!("component {i}: {g}"));
        }
        if g.degree_xyz() > 1 && !job.options.assume_irreducible {
            v.notes
                .push(format!("component {i}: irreducibility asserted by user for {g}"));
        }
    }
    if !v.is_valid() {
        return v;
    }

    let product = job
        .components
        .iter()
        .fold(MultiPoly::one(), |acc, c| &acc * &c.g.pow(c.m));
    let ratio = f0.exact_div(&product);
    if !matches!(&ratio, Ok(q) if q.is_constant() && !q.is_zero()) {
        v.fail("product", format!("F(t=0) = {f0} but the components multiply to {product}"));
    }
    for i in 0..job.components.len() {
        for j in i + 1..job.components.len() {
            let g = multivar_gcd(&job.components[i].g, &job.components[j].g);
            if !g.is_constant() {
                v.fail("coprime-components", format!("gcd of components {i} and {j} is {g}"));
            }
        }
    }
    if let Some(g) = shares_factor_over_qt(f, d) {
        v.fail("common-factor", format!("gcd(F, d) = {g}"));
    }
    let derivs = [Var::X, Var::Y, Var::Z].map(|x| f.partial_derivative(x));
    let square = derivs.iter().fold(f.clone(), |acc, p| multivar_gcd(&acc, p));
    if square.degree_xyz() > 0 {
        v.fail("family-squarefree", format!("F has the repeated factor {square} over Q(t)"));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, USER_VARS};

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, USER_VARS).unwrap()
    }

    fn comp(g: &str, m: u32) -> Component {
        Component { g: p(g), m }
    }

    fn codes(v: &FamilyValidation) -> Vec<&'static str> {
        v.issues.iter().map(|i| i.code).collect()
    }

    #[test]
    fn nodal_family_checks() {
        let job = FamilyJob::new(p("x^2*y - t*z^3"), p("x - t^2*y"), vec![comp("x", 2), comp("y", 1)]);
        let v = verify_family(&job);
        assert!(v.is_valid(), "{:?}", v.issues);
        assert!(v.notes.is_empty());

        let wrong = FamilyJob::new(p("x^2*y - t*z^3"), p("x - t^2*y"), vec![comp("x", 1), comp("y", 1)]);
        assert_eq!(codes(&verify_family(&wrong)), vec!["product"]);

        let shared = FamilyJob::new(p("x^2*y - t*x*z^2"), p("x"), vec![comp("x", 2), comp("y", 1)]);
        let c = codes(&verify_family(&shared));
        assert!(c.contains(&"common-factor"), "{c:?}");
    }

    #[test]
    fn form_checks() {
        let job = FamilyJob::new(p("x*y + t*z"), p("x"), vec![comp("x", 1), comp("y", 1)]);
        assert!(codes(&verify_family(&job)).contains(&"not-homogeneous"));
        let job = FamilyJob::new(p("x*y + t*z^2"), p("x"), vec![comp("2*x", 1), comp("y", 1)]);
        assert_eq!(codes(&verify_family(&job)), vec!["component-primitive"]);
        let job = FamilyJob::new(p("x*y + t*z^2"), p("x"), vec![comp("x", 1), comp("y", 1)]);
        assert!(verify_family(&job).is_valid());
        let job = FamilyJob::new(p("x^2*y + t*x^2*z"), p("y"), vec![comp("x", 2), comp("y", 1)]);
        assert!(codes(&verify_family(&job)).contains(&"family-squarefree"));
        let quad = FamilyJob::new(p("y*(x^2 + y*z) + t*z^3"), p("x"), vec![comp("y", 1), comp("x^2 + y*z", 1)]);
        let v = verify_family(&quad);
        assert!(v.is_valid());
        assert_eq!(v.notes.len(), 1);
    }
}
