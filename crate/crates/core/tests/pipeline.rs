use limitcyc::cycles::{ClosedPoint, ZeroCycle};
use limitcyc::factor::UniPoly;
use limitcyc::groebner::{saturate_by, saturate_t, IdealRep};
use limitcyc::intersect::plane_intersection_cycle;
use limitcyc::limits::{
    compare, oracle_limit_cycle, theorem_path, Certificate, Component, FamilyJob, JobGenerator, Transcript,
};
use limitcyc::poly::{multivar_gcd, parse_poly, rat, MultiPoly, Var, USER_VARS};
use limitcyc::Error;

fn p(s: &str) -> MultiPoly {
    parse_poly(s, USER_VARS).unwrap()
}

fn pt(x: i64, y: i64, z: i64) -> ClosedPoint {
    ClosedPoint::rational(rat(x), rat(y), rat(z)).unwrap()
}

fn nodal(d: &str) -> FamilyJob {
    FamilyJob::new(
        p("x^2*y - t*z^3"),
        p(d),
        vec![Component { g: p("x"), m: 2 }, Component { g: p("y"), m: 1 }],
    )
}

#[test]
fn cuspidal_divisor_from_certificates() {
    let job = nodal("x - t^2*y")
        .with_multiplier(2)
        .with_certificates(vec![Certificate::new(0, p("y"), 1), Certificate::new(1, p("1"), 0)]);
    let (mu, _, cycle) = theorem_path(&job, &mut Transcript::default()).unwrap();
    assert_eq!(mu, 2);
    assert_eq!(cycle, ZeroCycle::point(pt(0, 1, 0), 3));
    assert_eq!(oracle_limit_cycle(&job).unwrap(), cycle);
}

#[test]
fn supplied_certificates_agree_with_oracle() {
    for d in ["y + t*x", "y - t*x"] {
        let job = nodal(d).with_certificates(vec![Certificate::new(0, p("1"), 0), Certificate::new(1, p("x^2"), 1)]);
        let cmp = compare(&job, &mut Transcript::default()).unwrap();
        assert!(cmp.is_equal(), "{d}: {}", cmp.difference());
        assert_eq!(cmp.theorem.degree(), 3);
        // Limit points lie on z^3 = x^3 sign-twisted by the divisor, and on y = 0.
        let cubic = if d.contains('+') { p("z^3 + x^3") } else { p("z^3 - x^3") };
        assert!(cmp.theorem.iter().all(|(q, _)| q.vanishes(&cubic) && q.vanishes(&p("y"))));
    }
}

#[test]
fn intersection_splits_into_galois_orbits() {
    let c = plane_intersection_cycle(&p("z^3 + x^3"), &p("y")).unwrap();
    assert_eq!(c.degree(), 3);
    assert_eq!(c.multiplicity(&pt(1, 0, -1)), 1);
    let moduli: Vec<UniPoly> = c.iter().map(|(q, _)| q.modulus().clone()).collect();
    assert!(moduli.contains(&UniPoly::from_ints(&[1, -1, 1])));
}

/// A divisor meeting the special fiber properly specializes to its own cut.
#[test]
fn flat_divisor_limit_is_its_special_cut() {
    let mut gen = JobGenerator::new(11);
    let mut checked = 0;
    while checked < 5 {
        let mut job = gen.job();
        let f0 = job.special_fiber();
        let d0 = gen.form(2, 0.6);
        if !multivar_gcd(&d0, &f0).is_constant() {
            continue;
        }
        job.divisor = &d0 + &(&MultiPoly::var(Var::T) * &gen.form(2, 0.5));
        let limit = oracle_limit_cycle(&job).unwrap();
        assert_eq!(limit, plane_intersection_cycle(&d0, &f0).unwrap());
        checked += 1;
    }
}

#[test]
fn saturation_routes_agree() {
    for gens in [
        vec!["x^2*y - t*z^3", "x - t^2*y"],
        vec!["t*x - y^2", "t^2*z - x*y"],
        vec!["t*(x + y)", "t^2*z^2 - x^2"],
    ] {
        let i = IdealRep::grevlex(gens.iter().map(|g| p(g)).collect()).unwrap();
        let a = saturate_t(&i).unwrap();
        let b = saturate_by(&i, &MultiPoly::var(Var::T)).unwrap();
        assert!(a.same_ideal(&b), "{gens:?}");
    }
}

#[test]
fn invalid_jobs_are_rejected() {
    // F = x*(y - t*z) shares the factor x with d.
    let job = FamilyJob::new(
        p("x*y - t*x*z"),
        p("x"),
        vec![Component { g: p("x"), m: 1 }, Component { g: p("y"), m: 1 }],
    );
    let err = theorem_path(&job, &mut Transcript::default()).unwrap_err();
    assert!(matches!(err, Error::InvalidFamily(_)), "{err:?}");
    let mut search = nodal("y + t*x");
    search.options.search_certificates = true;
    assert!(matches!(theorem_path(&search, &mut Transcript::default()), Err(Error::Precondition(_))));
    assert!(plane_intersection_cycle(&p("x*y"), &p("x*z")).is_err());
}
