use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::Zero;

use super::numfield::NfElem;
use crate::error::{Error, Result};
use crate::factor::{is_irreducible, squarefree_part, UniPoly};
use crate::groebner::charpoly;
use crate::linalg::{rank, solve_full_rank};
use crate::poly::{MultiPoly, Monomial, Rational, Var};

/// A Galois orbit of points of the projective plane over the rationals.
///
/// Identity is the Chow form. The stored coordinates are a canonical
/// witness: the first nonzero coordinate is 1, the residue field is
/// generated by `theta = c1 + k*c2` (the two remaining coordinates, smallest
/// `k >= 0` that generates), the modulus is the minimal polynomial of
/// `theta`, and coordinates are polynomials in it. Rational points use
/// modulus `u`.
#[derive(Clone)]
pub struct ClosedPoint {
    modulus: Arc<UniPoly>,
    coords: [NfElem; 3],
    chow: MultiPoly,
}

impl PartialEq for ClosedPoint {
    fn eq(&self, other: &Self) -> bool {
        self.chow == other.chow
    }
}

impl Eq for ClosedPoint {}

impl Hash for ClosedPoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.chow.to_string().hash(state);
    }
}

/// Builds a point from coordinates over `Q[u]/(modulus)`.
pub fn make_closed_point(modulus: &UniPoly, coords: [UniPoly; 3]) -> Result<ClosedPoint> {
    if modulus.deg() == 0 {
        return Err(Error::InvalidPoint("constant modulus".into()));
    }
    if !is_irreducible(modulus) {
        return Err(Error::InvalidPoint(format!("modulus {modulus} is reducible")));
    }
    let k = Arc::new(modulus.monic());
    let [x, y, z] = coords;
    ClosedPoint::from_elems([
        NfElem::new(x, k.clone()),
        NfElem::new(y, k.clone()),
        NfElem::new(z, k),
    ])
}

impl ClosedPoint {
    /// The rational point `(x : y : z)`.
    pub fn rational(x: Rational, y: Rational, z: Rational) -> Result<ClosedPoint> {
        let k = Arc::new(UniPoly::x());
        ClosedPoint::from_elems([
            NfElem::from_rational(x, k.clone()),
            NfElem::from_rational(y, k.clone()),
            NfElem::from_rational(z, k),
        ])
    }

    /// Canonicalizes coordinates given over some number field.
    pub fn from_elems(coords: [NfElem; 3]) -> Result<ClosedPoint> {
        let i0 = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::InvalidPoint("all coordinates vanish".into()))?;
        let lead_inv = coords[i0].inv()?;
        let normalized: Vec<NfElem> = coords.iter().map(|c| c * &lead_inv).collect();
        let rest: Vec<&NfElem> = (0..3).filter(|&i| i != i0).map(|i| &normalized[i]).collect();
        let (c1, c2) = (rest[0], rest[1]);

        let n = c1.modulus().deg();
        let chi = charpoly(&c1.mult_matrix())?;
        let (d, (modulus, theta)) = if n > 1 && squarefree_part(&chi).deg() == n {
            (n, (squarefree_part(&chi), c1.clone()))
        } else {
            let d = generated_degree(c1, c2);
            (d, primitive_element(c1, c2, d)?)
        };
        let k = Arc::new(modulus);
        let express = |c: &NfElem| -> Result<NfElem> {
            if d == 1 {
                return Ok(NfElem::new(c.rep().clone(), k.clone()));
            }
            express_in_powers(c, &theta, d).map(|p| NfElem::new(p, k.clone()))
        };
        let mut out = Vec::with_capacity(3);
        for (i, c) in normalized.iter().enumerate() {
            out.push(if i == i0 { NfElem::one(k.clone()) } else { express(c)? });
        }
        let canonical: [NfElem; 3] = out.try_into().expect("three coordinates");
        // Over a proper extension the norm is a power of the Chow form.
        let chow = chow_form(if d == n { &coords } else { &canonical })?;
        Ok(ClosedPoint {
            modulus: k,
            coords: canonical,
            chow,
        })
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn coords(&self) -> &[NfElem; 3] {
        &self.coords
    }

    /// Primitive integer Chow form in `w0, w1, w2`.
    pub fn chow(&self) -> &MultiPoly {
        &self.chow
    }

    pub fn chow_text(&self) -> String {
        self.chow.to_string()
    }

    /// Index of the first nonzero coordinate.
    pub fn chart(&self) -> usize {
        self.coords.iter().position(|c| !c.is_zero()).expect("nonzero point")
    }

    /// The same orbit with coordinates permuted: output `i` is input `perm[i]`.
    pub fn permuted(&self, perm: [usize; 3]) -> Result<ClosedPoint> {
        ClosedPoint::from_elems(perm.map(|i| self.coords[i].clone()))
    }

    /// Whether `form` (in x, y, z) vanishes on this orbit.
    pub fn vanishes(&self, form: &MultiPoly) -> bool {
        let k = self.modulus.clone();
        let mut acc = NfElem::zero(k.clone());
        for (m, c) in form.terms() {
            let mut term = NfElem::from_rational(c.clone(), k.clone());
            for (i, v) in [Var::X, Var::Y, Var::Z].iter().enumerate() {
                term = &term * &self.coords[i].pow(m.exp(*v) as u32);
            }
            acc = &acc + &term;
        }
        acc.is_zero()
    }
}

/// Dimension of the algebra `Q[c1, c2]` inside the ambient field.
fn generated_degree(c1: &NfElem, c2: &NfElem) -> usize {
    let n = c1.modulus().deg();
    let mut span: Vec<NfElem> = vec![NfElem::one(c1.modulus().clone())];
    let mut frontier = span.clone();
    let mut r = 1;
    while !frontier.is_empty() && r < n {
        let mut next = Vec::new();
        for f in &frontier {
            for g in [c1, c2] {
                let cand = f * g;
                let mut rows: Vec<Vec<Rational>> = span.iter().map(|e| e.coordinates()).collect();
                rows.push(cand.coordinates());
                let nr = rank(&rows);
                if nr > r {
                    r = nr;
                    span.push(cand.clone());
                    next.push(cand);
                }
            }
        }
        frontier = next;
    }
    r
}

/// Smallest `k` with `c1 + k*c2` of degree `d`; its minimal polynomial.
fn primitive_element(c1: &NfElem, c2: &NfElem, d: usize) -> Result<(UniPoly, NfElem)> {
    if d == 1 {
        return Ok((UniPoly::x(), c1.clone()));
    }
    let n = c1.modulus().deg();
    for k in 0..=(n * n) as i64 {
        let theta = c1 + &c2.scale(&Rational::from_integer(k.into()));
        let chi = charpoly(&theta.mult_matrix())?;
        let minpoly = squarefree_part(&chi);
        if minpoly.deg() == d {
            return Ok((minpoly, theta));
        }
    }
    Err(Error::Internal("no primitive element among c1 + k*c2".into()))
}

/// `p` with `p(theta) = c` and `deg p < d`.
fn express_in_powers(c: &NfElem, theta: &NfElem, d: usize) -> Result<UniPoly> {
    let n = theta.modulus().deg();
    let mut powers = Vec::with_capacity(d);
    let mut cur = NfElem::one(theta.modulus().clone());
    for _ in 0..d {
        powers.push(cur.coordinates());
        cur = &cur * theta;
    }
    let m: Vec<Vec<Rational>> = (0..n).map(|i| (0..d).map(|j| powers[j][i].clone()).collect()).collect();
    let sol = solve_full_rank(&m, &c.coordinates())
        .ok_or_else(|| Error::Internal("coordinate outside the generated field".into()))?;
    Ok(UniPoly::new(sol))
}

/// Norm of `w0*X + w1*Y + w2*Z`, made primitive with positive leading
/// coefficient; independent of the representation of the residue field.
///
/// With a coordinate equal to 1, `det(w*I + A + l*B)` is a
/// characteristic polynomial for each rational `l`; the coefficient of
/// `w^k` has degree at most `n - k` in `l` and is interpolated from `n + 1`
/// samples.
fn chow_form(coords: &[NfElem; 3]) -> Result<MultiPoly> {
    let ws = [Var::W0, Var::W1, Var::W2];
    let unit;
    let coords = match coords.iter().position(|c| c.is_one()) {
        Some(_) => coords,
        None => {
            let i = coords.iter().position(|c| !c.is_zero()).expect("nonzero point");
            let inv = coords[i].inv()?;
            unit = coords.clone().map(|c| &c * &inv);
            &unit
        }
    };
    let i0 = coords.iter().position(|c| c.is_one()).expect("unit coordinate");
    let (ia, ib) = match i0 {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let a = coords[ia].mult_matrix();
    let b = coords[ib].mult_matrix();
    let n = a.len();
    let samples: Vec<UniPoly> = (0..=n)
        .map(|l| {
            let lam = Rational::from_integer(l.into());
            let neg: Vec<Vec<Rational>> = (0..n)
                .map(|i| (0..n).map(|j| -(&a[i][j] + &lam * &b[i][j])).collect())
                .collect();
            charpoly(&neg)
        })
        .collect::<Result<_>>()?;
    let mut out = MultiPoly::zero();
    for k in 0..=n {
        let values: Vec<Rational> = samples.iter().map(|p| p.coeff(k)).collect();
        let ck = interpolate(&values);
        for (j, c) in ck.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut m = Monomial::one();
            m.0[ws[i0] as usize] = k as u16;
            m.0[ws[ia] as usize] = (n - k - j) as u16;
            m.0[ws[ib] as usize] = j as u16;
            out.add_term(m, c.clone());
        }
    }
    if out.is_zero() {
        return Err(Error::Internal("vanishing Chow form".into()));
    }
    Ok(out.primitive())
}

/// The polynomial of degree below `values.len()` taking `values[i]` at `i`.
fn interpolate(values: &[Rational]) -> UniPoly {
    let n = values.len();
    let mut out = UniPoly::zero();
    for (i, v) in values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let mut basis = UniPoly::constant(v.clone());
        for j in (0..n).filter(|&j| j != i) {
            let denom = Rational::from_integer((i as i64 - j as i64).into());
            let lin = UniPoly::new(vec![Rational::from_integer((-(j as i64)).into()), Rational::from_integer(1.into())]);
            basis = (&basis * &lin).scale(&denom.recip());
        }
        out = &out + &basis;
    }
    out
}

impl fmt::Display for ClosedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() > 1 {
            write!(f, "[{}]", self.modulus)?;
        }
        write!(
            f,
            "({}:{}:{})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

impl fmt::Debug for ClosedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
