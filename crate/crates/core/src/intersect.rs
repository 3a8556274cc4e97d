//! Fundamental cycles of zero-dimensional schemes in the projective plane.
//!
//! Each affine chart is solved through its finite quotient ring: a linear
//! form that separates the points has a characteristic polynomial whose
//! irreducible factors are the Galois orbits and whose exponents are the
//! local lengths. Coordinates come from evaluation functionals, which are
//! the eigenvectors of the transposed multiplication matrix on the radical.

use std::sync::Arc;

use crate::cycles::{ClosedPoint, NfElem, ZeroCycle};
use crate::error::{Error, Result};
use crate::factor::{factor_rationals, squarefree_part, UniPoly};
use crate::groebner::{charpoly, mult_matrix, quotient_basis, IdealRep, QuotientBasis};
use crate::linalg::solve;
use crate::poly::{multivar_gcd, MultiPoly, Rational, Var, VarSet};

/// Which projective coordinate is set to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    X,
    Y,
    Z,
}

impl Chart {
    pub const ALL: [Chart; 3] = [Chart::Z, Chart::Y, Chart::X];

    pub fn var(self) -> Var {
        match self {
            Chart::X => Var::X,
            Chart::Y => Var::Y,
            Chart::Z => Var::Z,
        }
    }

    fn position(self) -> usize {
        match self {
            Chart::X => 0,
            Chart::Y => 1,
            Chart::Z => 2,
        }
    }

    /// The two affine variables, in x, y, z order.
    pub fn affine_vars(self) -> (Var, Var) {
        match self {
            Chart::X => (Var::Y, Var::Z),
            Chart::Y => (Var::X, Var::Z),
            Chart::Z => (Var::X, Var::Y),
        }
    }

    /// Whether a point belongs to this chart's share of the triage: chart
    /// z keeps everything it sees, chart y only `z = 0`, chart x only
    /// `y = z = 0`.
    fn keeps(self, p: &ClosedPoint) -> bool {
        let c = p.coords();
        match self {
            Chart::Z => true,
            Chart::Y => c[2].is_zero(),
            Chart::X => c[1].is_zero() && c[2].is_zero(),
        }
    }
}

/// A zero-dimensional ideal in the two affine variables of a chart.
#[derive(Clone, Debug)]
pub struct AffineZeroScheme {
    pub ideal: IdealRep,
    pub chart: Chart,
}

impl AffineZeroScheme {
    /// Dehomogenizes the generators of `ideal` at the chart variable.
    pub fn dehomogenize(gens: &[MultiPoly], chart: Chart) -> Result<AffineZeroScheme> {
        let one = Rational::from_integer(1.into());
        let g: Vec<MultiPoly> = gens.iter().map(|f| f.substitute(chart.var(), &one)).collect();
        Ok(AffineZeroScheme {
            ideal: IdealRep::grevlex(g)?,
            chart,
        })
    }
}

/// The fundamental cycle of an affine zero-dimensional scheme, embedded in
/// the projective plane.
pub fn zero_dim_cycle(s: &AffineZeroScheme) -> Result<ZeroCycle> {
    let (v1, v2) = s.chart.affine_vars();
    let vars = VarSet::of(&[v1, v2]);
    let ideal = &s.ideal;
    let basis = quotient_basis(ideal, vars)?;
    let dim = basis.dim();
    let mut out = ZeroCycle::new();
    if dim == 0 {
        return Ok(out);
    }

    // Seidenberg: adjoining squarefree eliminants gives the radical.
    let mut extra = Vec::new();
    for v in [v1, v2] {
        let chi = charpoly(&mult_matrix(ideal, &basis, &MultiPoly::var(v))?)?;
        extra.push(squarefree_part(&chi).to_multi(v));
    }
    let radical = ideal.plus(&extra)?;
    let rbasis = quotient_basis(&radical, vars)?;
    let npoints = rbasis.dim();

    let max_k = (dim * (dim - 1) / 2 + 1) as i64;
    let (ell, chi) = (0..=max_k)
        .find_map(|k| {
            let ell = &MultiPoly::var(v1) + &MultiPoly::var(v2).scale(&Rational::from_integer(k.into()));
            let chi = mult_matrix(ideal, &basis, &ell).and_then(|m| charpoly(&m));
            match chi {
                Ok(c) if squarefree_part(&c).deg() == npoints => Some(Ok((ell, c))),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            }
        })
        .ok_or_else(|| Error::Internal("no separating linear form found".into()))??;

    let shape = [v1, v2]
        .map(|v| shape_polynomial(&radical, &rbasis, &ell, &MultiPoly::var(v)))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    for (factor, mult) in factor_rationals(&chi)?.factors {
        let k = Arc::new(factor.monic());
        let mut xyz: Vec<NfElem> = shape.iter().map(|p| NfElem::new(p.clone(), k.clone())).collect();
        xyz.insert(s.chart.position(), NfElem::one(k.clone()));
        let point = ClosedPoint::from_elems(xyz.try_into().expect("three coordinates"))?;
        out.add_point(point, mult as i64);
    }
    Ok(out)
}

/// The `p` with `f = p(ell)` in the reduced quotient, where the powers of the
/// separating form `ell` are a basis.
fn shape_polynomial(
    radical: &IdealRep,
    basis: &QuotientBasis,
    ell: &MultiPoly,
    f: &MultiPoly,
) -> Result<UniPoly> {
    let n = basis.dim();
    let m = mult_matrix(radical, basis, ell)?;
    let mut cols = Vec::with_capacity(n);
    let mut cur = basis.coordinates(&radical.normal_form(&MultiPoly::one()))?;
    for _ in 0..n {
        let next = (0..n)
            .map(|i| (0..n).map(|j| &m[i][j] * &cur[j]).sum())
            .collect();
        cols.push(std::mem::replace(&mut cur, next));
    }
    let a: Vec<Vec<Rational>> = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let b = basis.coordinates(&radical.normal_form(f))?;
    let sol = solve(&a, &b).ok_or_else(|| Error::Internal("separating form does not generate".into()))?;
    Ok(UniPoly::new(sol))
}

fn check_form(p: &MultiPoly, name: &str) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial(name.into()));
    }
    if !p.vars().minus(VarSet::of(&[Var::X, Var::Y, Var::Z])).is_empty() || !p.is_homogeneous_xyz() {
        return Err(Error::NotHomogeneous(format!("{name} = {p}")));
    }
    Ok(())
}

/// Chart-triaged extraction over the three standard charts.
fn triaged_cycle(gens: &[MultiPoly]) -> Result<ZeroCycle> {
    let mut total = ZeroCycle::new();
    for chart in Chart::ALL {
        let s = AffineZeroScheme::dehomogenize(gens, chart)?;
        if s.ideal.is_unit() {
            continue;
        }
        for (p, m) in zero_dim_cycle(&s)?.iter() {
            if chart.keeps(p) {
                total.add_point(p.clone(), m);
            }
        }
    }
    Ok(total)
}

/// The intersection cycle of two coprime plane curves.
pub fn plane_intersection_cycle(p: &MultiPoly, q: &MultiPoly) -> Result<ZeroCycle> {
    check_form(p, "P")?;
    check_form(q, "Q")?;
    let g = multivar_gcd(p, q);
    if !g.is_constant() {
        return Err(Error::CommonFactor(g.to_string()));
    }
    let cycle = triaged_cycle(&[p.clone(), q.clone()])?;
    let expected = (p.degree_xyz() * q.degree_xyz()) as i64;
    if cycle.degree() != expected {
        return Err(Error::Internal(format!(
            "intersection degree {} differs from {expected}",
            cycle.degree()
        )));
    }
    Ok(cycle)
}

/// The fundamental cycle of a homogeneous ideal in x, y, z whose
/// projective scheme is finite.
pub fn projective_zero_dim_cycle(ideal: &IdealRep) -> Result<ZeroCycle> {
    for g in ideal.basis() {
        check_form(g, "generator")?;
    }
    if ideal.is_zero() {
        return Err(Error::NotZeroDimensional("zero ideal".into()));
    }
    triaged_cycle(ideal.basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::is_irreducible;
    use crate::poly::{parse_poly, rat, Monomial, USER_VARS};
    use proptest::prelude::*;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, USER_VARS).unwrap()
    }

    fn pt(x: i64, y: i64, z: i64) -> ClosedPoint {
        ClosedPoint::rational(rat(x), rat(y), rat(z)).unwrap()
    }

    fn affine(gens: &[&str]) -> AffineZeroScheme {
        AffineZeroScheme {
            ideal: IdealRep::grevlex(gens.iter().map(|g| p(g)).collect()).unwrap(),
            chart: Chart::Z,
        }
    }

    #[test]
    fn affine_examples() {
        assert_eq!(zero_dim_cycle(&affine(&["x^2", "y"])).unwrap(), ZeroCycle::point(pt(0, 0, 1), 2));
        assert_eq!(zero_dim_cycle(&affine(&["x - 1", "y - 2"])).unwrap(), ZeroCycle::point(pt(1, 2, 1), 1));
        let c = zero_dim_cycle(&affine(&["y", "x^3 + 1"])).unwrap();
        assert_eq!(c.degree(), 3);
        assert_eq!(c.multiplicity(&pt(-1, 0, 1)), 1);
        // Brute-force oracle: the remaining points are the roots of
        // x^2 - x + 1 with y = 0, each a zero of x^3 + 1.
        let quad: Vec<_> = c.iter().filter(|(q, _)| q.degree() == 2).collect();
        assert_eq!(quad.len(), 1);
        assert!(is_irreducible(quad[0].0.modulus()));
        assert!(quad[0].0.vanishes(&p("x^3 + z^3")));
        assert!(quad[0].0.vanishes(&p("y")));
        assert!(matches!(
            zero_dim_cycle(&affine(&["x^2"])),
            Err(Error::NotZeroDimensional(_))
        ));
    }

    #[test]
    fn plane_examples() {
        assert_eq!(
            plane_intersection_cycle(&p("z^3"), &p("x^2")).unwrap(),
            ZeroCycle::point(pt(0, 1, 0), 6)
        );
        assert_eq!(
            plane_intersection_cycle(&p("x"), &p("y")).unwrap(),
            ZeroCycle::point(pt(0, 0, 1), 1)
        );
        let c = plane_intersection_cycle(&p("z^3 + x^3"), &p("y")).unwrap();
        assert_eq!(c.degree(), 3);
        assert_eq!(c.multiplicity(&pt(1, 0, -1)), 1);
        let quad: Vec<_> = c.iter().filter(|(q, _)| q.degree() == 2).collect();
        assert_eq!(quad.len(), 1);
        assert!(quad[0].0.vanishes(&p("z^3 + x^3")));
        assert!(matches!(
            plane_intersection_cycle(&p("x*y"), &p("x*z")),
            Err(Error::CommonFactor(_))
        ));
        assert!(matches!(
            plane_intersection_cycle(&p("x + 1"), &p("y")),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn projective_examples() {
        let i = IdealRep::grevlex(vec![p("x"), p("y")]).unwrap();
        assert_eq!(projective_zero_dim_cycle(&i).unwrap(), ZeroCycle::point(pt(0, 0, 1), 1));
        let line = IdealRep::grevlex(vec![p("x^2")]).unwrap();
        assert!(matches!(
            projective_zero_dim_cycle(&line),
            Err(Error::NotZeroDimensional(_))
        ));
        let two = IdealRep::grevlex(vec![p("x^2"), p("z*y^2")]).unwrap();
        let c = projective_zero_dim_cycle(&two).unwrap();
        assert_eq!(c, ZeroCycle::point(pt(0, 0, 1), 4).add(&ZeroCycle::point(pt(0, 1, 0), 2)));
        // A point on the line at infinity in chart x only.
        let far = IdealRep::grevlex(vec![p("y"), p("z^2")]).unwrap();
        assert_eq!(projective_zero_dim_cycle(&far).unwrap(), ZeroCycle::point(pt(1, 0, 0), 2));
    }

    fn form(deg: u16) -> impl Strategy<Value = MultiPoly> {
        let monos: Vec<Monomial> = (0..=deg)
            .flat_map(|a| (0..=deg - a).map(move |b| Monomial([0, a, b, deg - a - b, 0, 0, 0, 0, 0])))
            .collect();
        let n = monos.len();
        prop::collection::vec(-3i64..4, n).prop_map(move |cs| {
            MultiPoly::from_terms(monos.iter().zip(cs).map(|(m, c)| (*m, rat(c))))
        })
    }

    fn pair() -> impl Strategy<Value = (MultiPoly, MultiPoly)> {
        (1u16..=3, 1u16..=3).prop_flat_map(|(a, b)| (form(a), form(b)))
    }

    fn coprime(a: &MultiPoly, b: &MultiPoly) -> bool {
        !a.is_zero() && !b.is_zero() && multivar_gcd(a, b).is_constant()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn bezout((a, b) in pair()) {
            prop_assume!(coprime(&a, &b));
            let c = plane_intersection_cycle(&a, &b).unwrap();
            prop_assert_eq!(c.degree(), (a.degree_xyz() * b.degree_xyz()) as i64);
            prop_assert!(c.is_effective());
        }

        #[test]
        fn additive_in_products(a in form(1), b in form(1), c in form(2)) {
            prop_assume!(coprime(&a, &b) && coprime(&a, &c) && coprime(&b, &c));
            let lhs = plane_intersection_cycle(&a, &(&b * &c)).unwrap();
            let rhs = plane_intersection_cycle(&a, &b).unwrap().add(&plane_intersection_cycle(&a, &c).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn chart_consistency((a, b) in pair()) {
            prop_assume!(coprime(&a, &b));
            let swap = [(Var::Y, Var::Z), (Var::Z, Var::Y)];
            let c = plane_intersection_cycle(&a, &b).unwrap();
            let d = plane_intersection_cycle(&a.rename(&swap), &b.rename(&swap)).unwrap();
            let mut relabeled = ZeroCycle::new();
            for (q, m) in c.iter() {
                relabeled.add_point(q.permuted([0, 2, 1]).unwrap(), m);
            }
            prop_assert_eq!(d, relabeled);
        }

        #[test]
        fn chart_multiplicities_fill_quotient((a, b) in pair()) {
            prop_assume!(coprime(&a, &b));
            let s = AffineZeroScheme::dehomogenize(&[a.clone(), b.clone()], Chart::Z).unwrap();
            let dim = quotient_basis(&s.ideal, VarSet::of(&[Var::X, Var::Y])).unwrap().dim();
            prop_assert_eq!(zero_dim_cycle(&s).unwrap().degree(), dim as i64);
        }
    }
}
