//! Flexes on a degenerating plane curve `x*G - t*F1`.
//!
//! Polar derivations, Hessian and Wronskian determinants, and the limit of
//! the divisor of flexes, split as `R = R_G + R_x + 3(G.x)`.

use crate::cycles::ZeroCycle;
use crate::error::{Error, Result};
use crate::groebner::IdealRep;
use crate::intersect::plane_intersection_cycle;
use crate::limits::{theorem_path, Certificate, Component, FamilyJob, Transcript};
use crate::poly::{rat, MultiPoly, Var};

/// The derivation `D_P = P_y * d/dx - P_x * d/dy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationOp {
    base: MultiPoly,
    px: MultiPoly,
    py: MultiPoly,
}

impl DerivationOp {
    pub fn new(base: MultiPoly) -> DerivationOp {
        let px = base.partial_derivative(Var::X);
        let py = base.partial_derivative(Var::Y);
        DerivationOp { base, px, py }
    }

    pub fn base(&self) -> &MultiPoly {
        &self.base
    }

    pub fn apply(&self, q: &MultiPoly) -> MultiPoly {
        &self.py * &q.partial_derivative(Var::X) - &self.px * &q.partial_derivative(Var::Y)
    }
}

pub fn apply_derivation(d: &DerivationOp, q: &MultiPoly) -> MultiPoly {
    d.apply(q)
}

fn det3(m: &[[MultiPoly; 3]; 3]) -> MultiPoly {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| &m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1];
    &m[0][0] * &minor(1, 2, 1, 2) - &m[0][1] * &minor(1, 2, 0, 2) + &m[0][2] * &minor(1, 2, 0, 1)
}

fn require_form(p: &MultiPoly, name: &str) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial(name.into()));
    }
    if !p.is_homogeneous_xyz() {
        return Err(Error::NotHomogeneous(format!("{name} = {p}")));
    }
    Ok(())
}

/// Determinant of the second partials in x, y, z; `t` is a constant.
pub fn hessian(p: &MultiPoly) -> Result<MultiPoly> {
    require_form(p, "P")?;
    let v = [Var::X, Var::Y, Var::Z];
    let m = v.map(|a| v.map(|b| p.partial_derivative(a).partial_derivative(b)));
    Ok(det3(&m))
}

/// Wronskian of `q` under the derivation `D`.
fn wronskian_of(d: &DerivationOp, q: [MultiPoly; 3]) -> MultiPoly {
    let d1 = q.clone().map(|e| d.apply(&e));
    let d2 = d1.clone().map(|e| d.apply(&e));
    det3(&[q, d1, d2])
}

/// Determinant with rows `(x, y, z)`, `D_P` of it, `D_P^2` of it.
pub fn wronskian(p: &MultiPoly) -> MultiPoly {
    wronskian_of(&DerivationOp::new(p.clone()), [Var::X, Var::Y, Var::Z].map(MultiPoly::var))
}

/// `z^3 H(P) - (p-1)^2 W(P)` reduced modulo `P`; zero for every form `P`.
pub fn zh_residue(p: &MultiPoly) -> Result<MultiPoly> {
    require_form(p, "P")?;
    let deg = p.degree_xyz() as i64;
    let z3 = MultiPoly::var(Var::Z).pow(3);
    let diff = &z3 * &hessian(p)? - wronskian(p).scale(&rat((deg - 1) * (deg - 1)));
    Ok(IdealRep::grevlex(vec![p.clone()])?.normal_form(&diff))
}

/// The determinants `w` and `h` in y, z built from `f' = F1(0,y,z)`,
/// `g' = y*G(0,y,z)` and `g'' = z*G(0,y,z)`.
pub fn w_and_h(g: &MultiPoly, f1: &MultiPoly) -> (MultiPoly, MultiPoly) {
    let zero = rat(0);
    let g0 = g.substitute(Var::X, &zero);
    let cols = [
        f1.substitute(Var::X, &zero),
        &g0 * &MultiPoly::var(Var::Y),
        &g0 * &MultiPoly::var(Var::Z),
    ];
    let d = |p: &MultiPoly, a: Var| p.partial_derivative(a);
    let w = det3(&[
        cols.clone(),
        cols.clone().map(|c| d(&c, Var::Y)),
        cols.clone().map(|c| d(&d(&c, Var::Y), Var::Y)),
    ]);
    let h = det3(&[
        cols.clone().map(|c| d(&d(&c, Var::Z), Var::Z)),
        cols.clone().map(|c| d(&d(&c, Var::Y), Var::Z)),
        cols.map(|c| d(&d(&c, Var::Y), Var::Y)),
    ]);
    (w, h)
}

/// One of the polynomial identities the pipeline relies on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// Limit of the flexes of `x*G - t*F1` and its decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlexReport {
    pub family: MultiPoly,
    pub wronskian: MultiPoly,
    pub w: MultiPoly,
    pub h: MultiPoly,
    /// `[lim E]` for `E = V(W(F))`.
    pub lim_e: ZeroCycle,
    /// `3[z . xG]`.
    pub hyperplane: ZeroCycle,
    pub r: ZeroCycle,
    pub r_g: ZeroCycle,
    pub r_x: ZeroCycle,
    /// `3[G . x]`.
    pub g_x: ZeroCycle,
    pub identities: Vec<IdentityCheck>,
    pub verified: bool,
    pub transcript: Transcript,
}

impl FlexReport {
    pub fn identities_hold(&self) -> bool {
        self.identities.iter().all(|c| c.holds)
    }
}

/// The theorem job for `E = V(W(F))` on `F = x*G - t*F1`.
pub fn flex_job(g: &MultiPoly, f1: &MultiPoly) -> FamilyJob {
    let x = MultiPoly::var(Var::X);
    let family = &x * g - &MultiPoly::var(Var::T) * f1;
    let divisor = wronskian(&family);
    let mut job = FamilyJob::new(
        family,
        divisor,
        vec![Component { g: g.clone(), m: 1 }, Component { g: x, m: 1 }],
    )
    .with_certificates(vec![
        Certificate::new(0, MultiPoly::one(), 0),
        Certificate::new(1, g.pow(3), 1),
    ]);
    job.options.assume_irreducible = true;
    job
}

/// `(deg G - 1)^2 W(F) = (xz)^3 H(G)` modulo `(G, t)`.
fn zhp_holds(g: &MultiPoly, wf: &MultiPoly) -> Result<bool> {
    let p = g.degree_xyz() as i64;
    let xz = &MultiPoly::var(Var::X) * &MultiPoly::var(Var::Z);
    let diff = wf.scale(&rat((p - 1) * (p - 1))) - &xz.pow(3) * &hessian(g)?;
    Ok(IdealRep::grevlex(vec![g.clone(), MultiPoly::var(Var::T)])?.contains(&diff))
}

fn check_inputs(g: &MultiPoly, f1: &MultiPoly) -> Result<()> {
    for (name, p) in [("G", g), ("F1", f1)] {
        require_form(p, name)?;
        if p.contains_var(Var::T) || !p.vars().minus(crate::poly::VarSet::of(&[Var::X, Var::Y, Var::Z])).is_empty() {
            return Err(Error::Precondition(format!("{name} must be a form in x, y, z")));
        }
    }
    if g.degree_xyz() < 2 {
        return Err(Error::Precondition(format!("deg G = {} < 2", g.degree_xyz())));
    }
    if f1.degree_xyz() != g.degree_xyz() + 1 {
        return Err(Error::Precondition(format!(
            "deg F1 = {} but deg G + 1 = {}",
            f1.degree_xyz(),
            g.degree_xyz() + 1
        )));
    }
    for v in [Var::X, Var::Z] {
        if MultiPoly::var(v).divides(g) {
            return Err(Error::Precondition(format!("{} divides G", v.name())));
        }
    }
    if IdealRep::grevlex(vec![MultiPoly::var(Var::X), g.clone()])?.contains(f1) {
        return Err(Error::Precondition("F1 lies in (x, G)".into()));
    }
    Ok(())
}

/// Runs the pipeline for forms `G` of degree `d - 1 >= 2` and `F1` of
/// degree `d`. `G` is assumed irreducible.
pub fn flex_limit_report(g: &MultiPoly, f1: &MultiPoly) -> Result<FlexReport> {
    check_inputs(g, f1)?;
    let deg = f1.degree_xyz() as i64;
    let (x, t, z) = (MultiPoly::var(Var::X), MultiPoly::var(Var::T), MultiPoly::var(Var::Z));
    let job = flex_job(g, f1);
    let family = job.family.clone();
    let wf = job.divisor.clone();

    let df = DerivationOp::new(family.clone());
    let w_prime = wronskian_of(&df, [f1.clone(), g * &MultiPoly::var(Var::Y), g * &z]);
    let (w, h) = w_and_h(g, f1);
    if w.is_zero() {
        return Err(Error::HypothesisViolated("w vanishes identically".into()));
    }
    let zero = rat(0);
    let g0 = g.substitute(Var::X, &zero);
    let identities = vec![
        IdentityCheck {
            name: "zH(F)",
            holds: zh_residue(&family)?.is_zero(),
        },
        IdentityCheck {
            name: "zHP",
            holds: zhp_holds(g, &wf)?,
        },
        IdentityCheck {
            name: "GWt",
            holds: family.divides(&(&g.pow(3) * &wf - &t * &w_prime)),
        },
        IdentityCheck {
            name: "WLg",
            holds: (&w_prime + &(&g0.pow(3) * &w))
                .substitute(Var::X, &zero)
                .substitute(Var::T, &zero)
                .is_zero(),
        },
        IdentityCheck {
            name: "dwzh",
            holds: w.scale(&rat((deg - 1) * (deg - 1) * deg)) == &z.pow(3) * &h,
        },
    ];

    let mut transcript = Transcript::default();
    let (_, _, lim_e) = theorem_path(&job, &mut transcript)?;
    let hyperplane = plane_intersection_cycle(&z, &(&x * g))?.scale(3);
    let r = lim_e.sub(&hyperplane);
    let r_g = plane_intersection_cycle(&hessian(g)?, g)?;
    let r_x = plane_intersection_cycle(&h, &x)?;
    let g_x = plane_intersection_cycle(g, &x)?.scale(3);
    let verified = r == r_g.add(&r_x).add(&g_x);
    transcript.note(format!("R = {r}"));
    Ok(FlexReport {
        family,
        wronskian: wf,
        w,
        h,
        lim_e,
        hyperplane,
        r,
        r_g,
        r_x,
        g_x,
        identities,
        verified,
        transcript,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::{oracle_limit_cycle, JobGenerator};
    use crate::poly::{parse_poly, USER_VARS};
    use proptest::prelude::*;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, USER_VARS).unwrap()
    }

    /// Permutation expansion, independent of the cofactor code.
    fn leibniz_det(m: &[[MultiPoly; 3]; 3]) -> MultiPoly {
        let perms = [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 0, 2], -1)];
        perms.iter().fold(MultiPoly::zero(), |acc, (s, sign)| {
            let term = &(&m[0][s[0]] * &m[1][s[1]]) * &m[2][s[2]];
            acc + term.scale(&rat(*sign))
        })
    }

    #[test]
    fn derivation_examples() {
        let d = DerivationOp::new(p("x^2*y"));
        assert_eq!(apply_derivation(&d, &p("x")), p("x^2"));
        assert_eq!(d.apply(&p("x^2*y")), MultiPoly::zero());
        let f = p("x*(x^2 + y*z) - t*(x^3 + y^3 + z^3)");
        assert!(DerivationOp::new(f.clone()).apply(&f).is_zero());
    }

    #[test]
    fn hessian_examples() {
        assert_eq!(hessian(&p("x^3 + y^3 + z^3")).unwrap(), p("216*x*y*z"));
        assert!(hessian(&p("x + 2*y - z")).unwrap().is_zero());
        let xyz = p("x*y*z");
        let v = [Var::X, Var::Y, Var::Z];
        let m = v.map(|a| v.map(|b| xyz.partial_derivative(a).partial_derivative(b)));
        assert_eq!(hessian(&xyz).unwrap(), leibniz_det(&m));
        assert_eq!(hessian(&xyz).unwrap(), p("2*x*y*z"));
        assert!(matches!(hessian(&p("x^2 + y")), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn wronskian_examples() {
        assert!(zh_residue(&p("x^3 + y^3 + z^3")).unwrap().is_zero());
        // D_P vanishes for P free of x and y.
        assert!(wronskian(&p("z^4")).is_zero());
        // P = x*y: D_P = x*d/dx - y*d/dy, rows (x, y, z), (x, -y, 0), (x, y, 0).
        assert_eq!(wronskian(&p("x*y")), p("2*x*y*z"));
    }

    #[test]
    fn corpus_instance() {
        let (g, f1) = (p("x^2 + y*z"), p("x^3 + y^3 + z^3 + x*y*z"));
        let r = flex_limit_report(&g, &f1).unwrap();
        assert!(r.verified);
        assert!(r.identities_hold(), "{:?}", r.identities);
        assert_eq!(r.lim_e.degree(), 18);
        assert_eq!(r.r.degree(), 9);
        assert!(r.r_g.is_empty());
        assert_eq!(r.r_x.degree(), 3);
        assert_eq!(r.g_x.degree(), 6);
        assert_eq!(r.r.degree(), r.r_g.degree() + r.r_x.degree() + 3 * g.degree_xyz() as i64);
        assert!(r.r.is_effective());
        assert_eq!(oracle_limit_cycle(&flex_job(&g, &f1)).unwrap(), r.lim_e);
    }

    #[test]
    fn input_gates() {
        let g = p("x^2 + y*z");
        // x*(x^2) + y*G lies in (x, G).
        let inside = p("x^3 + y*(x^2 + y*z)");
        assert!(matches!(flex_limit_report(&g, &inside), Err(Error::Precondition(_))));
        assert!(matches!(flex_limit_report(&g, &p("x^2 + y^2")), Err(Error::Precondition(_))));
        assert!(matches!(flex_limit_report(&p("x*y + x*z"), &p("y^3 + z^3")), Err(Error::Precondition(_))));
        assert!(matches!(flex_limit_report(&p("y*z + z^2"), &p("x^3 + y^3")), Err(Error::Precondition(_))));
        assert!(matches!(flex_limit_report(&p("x + y"), &p("y^2 + z^2")), Err(Error::Precondition(_))));
        assert!(matches!(flex_limit_report(&p("x^2 + y"), &p("y^3 + z^3")), Err(Error::NotHomogeneous(_))));
    }

    fn form(deg: u16) -> impl Strategy<Value = MultiPoly> {
        any::<u64>().prop_map(move |seed| JobGenerator::new(seed).form(deg, 0.6))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]
        #[test]
        fn zh_holds_for_random_forms(deg in 3u16..=5, seed in any::<u64>()) {
            let q = JobGenerator::new(seed).form(deg, 0.6);
            prop_assert!(zh_residue(&q).unwrap().is_zero());
        }

        #[test]
        fn leibniz_rule(a in form(2), b in form(3), q in form(3)) {
            let d = DerivationOp::new(q);
            let lhs = d.apply(&(&a * &b));
            prop_assert_eq!(lhs, &a * &d.apply(&b) + &b * &d.apply(&a));
        }

        #[test]
        fn zhp_holds_for_random_forms(g in form(3), f1 in form(4)) {
            let x = MultiPoly::var(Var::X);
            let family = &x * &g - &MultiPoly::var(Var::T) * &f1;
            prop_assert!(zhp_holds(&g, &wronskian(&family)).unwrap());
        }

        #[test]
        fn dwzh_is_exact(g in form(3), f1 in form(4)) {
            let (w, h) = w_and_h(&g, &f1);
            prop_assert_eq!(w.scale(&rat(9 * 4)), &MultiPoly::var(Var::Z).pow(3) * &h);
        }
    }
}
