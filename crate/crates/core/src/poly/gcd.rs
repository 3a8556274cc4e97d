//! Multivariate gcd by primitive polynomial remainder sequences, recursing
//! on coefficients.

use super::{Monomial, MultiPoly, Var};

/// Gcd normalized to a primitive integer polynomial with positive leading
/// coefficient. `gcd(a, 0)` is the normalized `a`; `gcd(0, 0) = 0`.
pub fn multivar_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    gcd_rec(a, b).primitive()
}

fn gcd_rec(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    let v = a
        .vars()
        .union(b.vars())
        .iter()
        .next()
        .expect("non-constant polynomial has a variable");
    match (a.contains_var(v), b.contains_var(v)) {
        (true, false) => coefficients_gcd(a, v, b.clone()),
        (false, true) => coefficients_gcd(b, v, a.clone()),
        _ => {
            let ca = content_in(a, v);
            let cb = content_in(b, v);
            let c = gcd_rec(&ca, &cb);
            let pa = a.exact_div(&ca).expect("content divides");
            let pb = b.exact_div(&cb).expect("content divides");
            &c * &prs(pa, pb, v)
        }
    }
}

/// Gcd of `start` with every coefficient of `p` in `v`.
fn coefficients_gcd(p: &MultiPoly, v: Var, start: MultiPoly) -> MultiPoly {
    let mut g = start;
    for c in p.coefficients_in(v).values() {
        if g.is_constant() {
            return MultiPoly::one();
        }
        g = gcd_rec(&g, c);
    }
    g
}

fn content_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let coeffs = p.coefficients_in(v);
    let mut it = coeffs.values();
    let first = it.next().expect("nonzero polynomial").primitive();
    let mut g = first;
    for c in it {
        if g.is_constant() {
            return MultiPoly::one();
        }
        g = gcd_rec(&g, c);
    }
    g
}

fn primitive_part_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let c = content_in(p, v);
    p.exact_div(&c).expect("content divides").primitive()
}

/// `lc(b)^(deg a - deg b + 1) * a mod b` in `v`.
fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, v: Var) -> MultiPoly {
    let db = b.degree_in(v) as u16;
    let lcb = b.coefficient_of(v, db);
    let mut r = a.clone();
    let mut steps = a.degree_in(v) as i64 - db as i64 + 1;
    while !r.is_zero() && r.contains_var(v) && r.degree_in(v) as u16 >= db {
        let dr = r.degree_in(v) as u16;
        let lcr = r.coefficient_of(v, dr);
        let shift = b.mul_monomial(&Monomial::var(v, dr - db));
        r = &lcb * &r - &lcr * &shift;
        steps -= 1;
    }
    if steps > 0 {
        r = &lcb.pow(steps as u32) * &r;
    }
    r
}

/// Subresultant remainder sequence; `a`, `b` primitive in `v`.
fn prs(a: MultiPoly, b: MultiPoly, v: Var) -> MultiPoly {
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) {
        (a, b)
    } else {
        (b, a)
    };
    let mut g = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        let delta = a.degree_in(v) - b.degree_in(v);
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            return primitive_part_in(&b, v);
        }
        if !r.contains_var(v) {
            return MultiPoly::one();
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = r.exact_div(&divisor).expect("subresultant division is exact");
        g = a.coefficient_of(v, a.degree_in(v) as u16);
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).exact_div(&h.pow(delta - 1)).expect("subresultant division is exact")
        };
    }
}
