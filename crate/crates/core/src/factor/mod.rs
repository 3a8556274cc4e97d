//! Univariate factorization over the rationals.
//!
//! Closed points of a zero-dimensional scheme are read off from the
//! irreducible factors of characteristic polynomials, so this module is the
//! place where point splitting actually happens.

mod modp;
mod unipoly;
mod zassenhaus;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::poly::Rational;

pub use unipoly::UniPoly;

/// `unit * prod(f^m)` over the listed factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    /// Primitive integer irreducible factors, positive leading coefficient,
    /// sorted by degree then coefficients (low degree first).
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (f, m)| &acc * &f.pow(*m))
    }
}

/// Yun's algorithm: squarefree, pairwise coprime, monic parts with strictly
/// increasing multiplicities. The leading coefficient is dropped.
pub fn squarefree_decompose(p: &UniPoly) -> Result<Vec<(UniPoly, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree decomposition".into()));
    }
    let mut out = Vec::new();
    if p.deg() == 0 {
        return Ok(out);
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.divrem(&a0).0;
    let mut c = dp.divrem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    loop {
        let a = b.gcd(&d);
        if a.deg() > 0 {
            out.push((a.monic(), i));
        }
        b = b.divrem(&a).0;
        if b.deg() == 0 {
            break;
        }
        c = d.divrem(&a).0;
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

fn sort_key(f: &UniPoly) -> (usize, Vec<Rational>) {
    (f.deg(), f.coeffs().iter().rev().cloned().collect())
}

/// Complete factorization over the rationals into primitive integer
/// irreducibles.
pub fn factor_rationals(p: &UniPoly) -> Result<Factorization> {
    let parts = squarefree_decompose(p)?;
    let mut factors = Vec::new();
    for (q, m) in parts {
        let (_, ints) = q.primitive_integer();
        for g in zassenhaus::factor_squarefree(&ints) {
            factors.push((UniPoly::from_bigints(&g), m));
        }
    }
    factors.sort_by_key(|(f, _)| sort_key(f));
    let expanded = factors
        .iter()
        .fold(UniPoly::one(), |acc, (f, m)| &acc * &f.pow(*m));
    let unit = p.leading_coeff() / expanded.leading_coeff();
    let fz = Factorization { unit, factors };
    debug_assert_eq!(&fz.expand(), p);
    Ok(fz)
}

/// True when `p` has no repeated factor over the rationals.
pub fn is_squarefree(p: &UniPoly) -> bool {
    p.gcd(&p.derivative()).deg() == 0
}

/// Integer coefficient vector with positive leading coefficient.
pub fn primitive_ints(p: &UniPoly) -> Vec<BigInt> {
    let (_, mut v) = p.primitive_integer();
    if v.last().is_some_and(|c| c.is_negative()) {
        v.iter_mut().for_each(|c| *c = -c.clone());
    }
    v
}

/// Squarefree part, monic.
pub fn squarefree_part(p: &UniPoly) -> UniPoly {
    if p.deg() == 0 {
        return UniPoly::one();
    }
    p.divrem(&p.gcd(&p.derivative())).0.monic()
}

/// Whether `p` is irreducible over the rationals (degree at least one).
pub fn is_irreducible(p: &UniPoly) -> bool {
    p.deg() >= 1
        && factor_rationals(p)
            .map(|f| f.factors.len() == 1 && f.factors[0].1.is_one())
            .unwrap_or(false)
}
