use super::*;
use crate::poly::{
    determinant, parse_poly, rat, BaseOrder, Monomial, MonomialOrder, MultiPoly, Var,
    VarSet, USER_VARS,
};
use proptest::prelude::*;

fn p(s: &str) -> MultiPoly {
    parse_poly(s, USER_VARS).unwrap()
}

fn ideal(gens: &[&str]) -> IdealRep {
    IdealRep::grevlex(gens.iter().map(|g| p(g)).collect()).unwrap()
}

fn xy() -> VarSet {
    VarSet::of(&[Var::X, Var::Y])
}

#[test]
fn basic_bases() {
    assert_eq!(ideal(&["x", "y"]).basis(), &[p("x"), p("y")]);
    let lex = IdealRep::new(vec![p("x^2 - y"), p("y^2 - x")], MonomialOrder::Lex).unwrap();
    assert!(lex.basis().contains(&p("y^4 - y")));
    let f = p("3*x^2*y - t*z^3");
    assert_eq!(ideal(&["3*x^2*y - t*z^3"]).basis(), &[f.monic_in(&MonomialOrder::Grevlex)]);
    assert!(IdealRep::grevlex(vec![]).unwrap().is_zero());
    assert!(ideal(&["x", "x - 1"]).is_unit());
}

#[test]
fn normal_forms() {
    let i = ideal(&["x^2 - y", "x*y - 1"]);
    assert!(i.normal_form(&p("x^2 - y")).is_zero());
    assert_eq!(i.normal_form(&MultiPoly::one()), MultiPoly::one());
    // A certificate identity: y*(x - t^2*y)^2 - t*b lies in (F).
    let f = ideal(&["x^2*y - t*z^3"]);
    let lhs = p("y*(x - t^2*y)^2 - t*(z^3 - 2*t*x*y^2 + t^3*y^3)");
    assert!(f.contains(&lhs));
    assert!(!f.contains(&p("y*(x - t^2*y)^2")));
}

#[test]
fn elimination() {
    let par = ideal(&["x - t", "y - t^2"]);
    let e = eliminate(&par, VarSet::single(Var::T)).unwrap();
    assert_eq!(e.basis(), &[p("x^2 - y")]);
    assert!(eliminate(&par, VarSet::empty()).unwrap().same_ideal(&par));
    let w = MultiPoly::var(Var::W);
    let bad = IdealRep::grevlex(vec![&w * &p("t") - MultiPoly::one(), p("t")]).unwrap();
    assert!(eliminate(&bad, VarSet::single(Var::W)).unwrap().is_unit());
}

#[test]
fn saturation() {
    assert_eq!(saturate_t(&ideal(&["t*x"])).unwrap().basis(), &[p("x")]);
    assert_eq!(saturate_t(&ideal(&["x"])).unwrap().basis(), &[p("x")]);
    let d = saturate_t(&ideal(&["x^2*y - t*z^3", "x - t^2*y"])).unwrap();
    // The special fiber of the closure is supported at (0:1:0): x and z vanish.
    let special: Vec<MultiPoly> = d.basis().iter().map(|g| g.t_coefficient(0)).collect();
    let fiber = IdealRep::grevlex(special).unwrap();
    assert!(fiber.contains(&p("x")));
    assert!(fiber.contains(&p("z^3")));
    assert!(!fiber.contains(&p("z^2")));
    let w = MultiPoly::var(Var::W);
    assert!(matches!(
        saturate_t(&IdealRep::grevlex(vec![w]).unwrap()),
        Err(crate::Error::ReservedVariable(_))
    ));
}

#[test]
fn intersections() {
    assert_eq!(ideal_intersect(&ideal(&["x"]), &ideal(&["y"])).unwrap().basis(), &[p("x*y")]);
    let i = ideal(&["x^2 - y*z", "t"]);
    assert_eq!(ideal_intersect(&i, &i).unwrap(), i);
    let k = ideal_intersect(&ideal(&["x^2", "t"]), &ideal(&["y", "t"])).unwrap();
    assert!(k.same_ideal(&ideal(&["t", "x^2*y"])));
}

#[test]
fn quotient_bases() {
    assert_eq!(quotient_basis(&ideal(&["x", "y"]), xy()).unwrap().dim(), 1);
    let b = quotient_basis(&ideal(&["x^2", "y"]), xy()).unwrap();
    assert_eq!(b.monomials, vec![Monomial::one(), Monomial::var(Var::X, 1)]);
    assert_eq!(quotient_basis(&ideal(&["x^2", "y^3"]), xy()).unwrap().dim(), 6);
    assert!(matches!(
        quotient_basis(&ideal(&["x^2"]), xy()),
        Err(crate::Error::NotZeroDimensional(_))
    ));
    assert_eq!(quotient_basis(&ideal(&["1"]), xy()).unwrap().dim(), 0);
}

#[test]
fn multiplication_matrices() {
    let i = ideal(&["x^2", "y"]);
    let b = quotient_basis(&i, xy()).unwrap();
    let zero = mult_matrix(&i, &b, &MultiPoly::zero()).unwrap();
    assert!(zero.iter().flatten().all(|c| *c == rat(0)));
    let id = mult_matrix(&i, &b, &MultiPoly::one()).unwrap();
    assert_eq!(id, vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]]);
    let mx = mult_matrix(&i, &b, &p("x")).unwrap();
    assert_eq!(mx, vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]]);
}

/// `det(u*I - M)` by cofactor expansion over polynomials in `u`.
fn charpoly_oracle(m: &RatMatrix) -> crate::factor::UniPoly {
    let u = MultiPoly::var(Var::U);
    let mat: Vec<Vec<MultiPoly>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, c)| {
                    let e = MultiPoly::constant(-c.clone());
                    if i == j {
                        &e + &u
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    let det = laplace(&mat);
    crate::factor::UniPoly::from_multi(&det, Var::U).unwrap()
}

fn laplace(m: &[Vec<MultiPoly>]) -> MultiPoly {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, c)| c.clone()).collect())
            .collect();
        let term = &m[0][j] * &laplace(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

#[test]
fn charpoly_examples() {
    let z2 = vec![vec![rat(0); 2]; 2];
    assert_eq!(charpoly(&z2).unwrap(), crate::factor::UniPoly::from_ints(&[0, 0, 1]));
    let id3: RatMatrix = (0..3)
        .map(|i| (0..3).map(|j| rat((i == j) as i64)).collect())
        .collect();
    assert_eq!(charpoly(&id3).unwrap(), crate::factor::UniPoly::from_ints(&[-1, 1]).pow(3));
    assert!(charpoly(&vec![vec![rat(1), rat(2)]]).is_err());
    // Cross-check the polynomial determinant path too.
    let m = [vec![rat(2), rat(1)], vec![rat(7), rat(-3)]];
    let mp: Vec<Vec<MultiPoly>> = m
        .iter()
        .map(|r| r.iter().map(|c| MultiPoly::constant(c.clone())).collect())
        .collect();
    assert_eq!(determinant(&mp).unwrap().constant_term(), rat(-13));
}

fn small_ideal() -> impl Strategy<Value = Vec<MultiPoly>> {
    let term = (-3i64..4, 0u16..3, 0u16..3, 0u16..2);
    let poly = prop::collection::vec(term, 1..4).prop_map(|ts| {
        MultiPoly::from_terms(
            ts.into_iter()
                .map(|(c, x, y, z)| (Monomial([0, x, y, z, 0, 0, 0, 0, 0]), rat(c))),
        )
    });
    prop::collection::vec(poly, 1..4)
}

fn spoly(f: &MultiPoly, g: &MultiPoly, order: &MonomialOrder) -> MultiPoly {
    let (mf, cf) = f.leading_term_in(order).unwrap();
    let (mg, cg) = g.leading_term_in(order).unwrap();
    let l = mf.lcm(&mg);
    f.mul_term(&cf.recip(), &mf.quotient_of(&l)) - g.mul_term(&cg.recip(), &mg.quotient_of(&l))
}

/// `I : h` as `(I ∩ (h)) / h`.
fn quotient(i: &IdealRep, h: &MultiPoly) -> IdealRep {
    let k = ideal_intersect(i, &IdealRep::grevlex(vec![h.clone()]).unwrap()).unwrap();
    IdealRep::grevlex(k.basis().iter().map(|g| g.exact_div(h).unwrap()).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn spolys_reduce_to_zero(gens in small_ideal(), lex in any::<bool>()) {
        let order = if lex { MonomialOrder::Lex } else { MonomialOrder::Grevlex };
        let i = IdealRep::new(gens.clone(), order.clone()).unwrap();
        let b = i.basis();
        for a in 0..b.len() {
            for c in a + 1..b.len() {
                prop_assert!(i.normal_form(&spoly(&b[a], &b[c], &order)).is_zero());
            }
        }
        for g in &gens {
            prop_assert!(i.contains(g));
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order(gens in small_ideal()) {
        let a = IdealRep::grevlex(gens.clone()).unwrap();
        let mut rev = gens.clone();
        rev.reverse();
        let b = IdealRep::grevlex(rev).unwrap();
        prop_assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn saturation_is_idempotent(gens in small_ideal()) {
        let gens: Vec<MultiPoly> = gens.iter().map(|g| g * &p("t") + g.substitute(Var::X, &rat(1))).collect();
        let s = saturate_t(&IdealRep::grevlex(gens).unwrap()).unwrap();
        prop_assert_eq!(saturate_t(&s).unwrap(), s);
    }

    #[test]
    fn saturation_matches_iterated_quotients(gens in small_ideal(), hs in small_ideal()) {
        let h = hs[0].clone();
        prop_assume!(!h.is_constant());
        let i = IdealRep::grevlex(gens).unwrap();
        let mut s = i.clone();
        loop {
            let next = quotient(&s, &h);
            if next.same_ideal(&s) {
                break;
            }
            s = next;
        }
        prop_assert!(saturate_by(&i, &h).unwrap().same_ideal(&s));
    }

    #[test]
    fn intersection_membership(a in small_ideal(), b in small_ideal(), probe in small_ideal()) {
        let i = IdealRep::grevlex(a.clone()).unwrap();
        let j = IdealRep::grevlex(b.clone()).unwrap();
        let k = ideal_intersect(&i, &j).unwrap();
        // Products and probes: membership in I ∩ J iff in both.
        let mut candidates: Vec<MultiPoly> = probe;
        candidates.push(&a[0] * &b[0]);
        for f in candidates {
            prop_assert_eq!(k.contains(&f), i.contains(&f) && j.contains(&f));
        }
        for g in k.basis() {
            prop_assert!(i.contains(g) && j.contains(g));
        }
    }

    #[test]
    fn quotient_dimension_is_order_free(a in -3i64..4, b in -3i64..4, c in 1i64..3) {
        let gens = vec![
            p(&format!("x^2 + {a}*y + {b}")),
            p(&format!("y^2 - {c}*x*y + x")),
        ];
        let g = IdealRep::grevlex(gens.clone()).unwrap();
        let l = IdealRep::new(gens, MonomialOrder::Lex).unwrap();
        let dg = quotient_basis(&g, xy()).unwrap().dim();
        let dl = quotient_basis(&l, xy()).unwrap().dim();
        prop_assert_eq!(dg, dl);
        prop_assert_eq!(dg, 4);
        let blocked = IdealRep::new(
            g.basis().to_vec(),
            MonomialOrder::Block { first: VarSet::single(Var::X), inner_first: BaseOrder::Lex, inner_rest: BaseOrder::Grevlex },
        ).unwrap();
        prop_assert_eq!(quotient_basis(&blocked, xy()).unwrap().dim(), 4);
    }

    #[test]
    fn charpoly_matches_cofactor_oracle(entries in prop::collection::vec(-9i64..10, 16)) {
        let m: RatMatrix = entries.chunks(4).map(|r| r.iter().map(|&c| rat(c)).collect()).collect();
        prop_assert_eq!(charpoly(&m).unwrap(), charpoly_oracle(&m));
    }

    #[test]
    fn mult_matrices_commute(a in -3i64..4, b in -3i64..4) {
        let i = ideal(&[&format!("x^2 + {a}*y + 1"), &format!("y^2 + {b}*x - 2")]);
        let q = quotient_basis(&i, xy()).unwrap();
        let mx = mult_matrix(&i, &q, &p("x")).unwrap();
        let my = mult_matrix(&i, &q, &p("y")).unwrap();
        prop_assert_eq!(mat_mul(&mx, &my), mat_mul(&my, &mx));
        let mxy = mult_matrix(&i, &q, &p("x*y")).unwrap();
        prop_assert_eq!(mat_mul(&mx, &my), mxy);
    }
}

#[test]
fn step_limit_is_enforced() {
    let gens = vec![p("x^3 - y*z"), p("y^3 - x*z"), p("z^3 - x*y")];
    assert_eq!(
        reduced_basis_capped(&gens, &MonomialOrder::Lex, 1),
        Err(crate::Error::StepLimit(1))
    );
    assert!(reduced_basis_capped(&gens, &MonomialOrder::Lex, 1_000).is_ok());
}
