//! Finite-dimensional quotient rings.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factor::UniPoly;
use crate::poly::{Monomial, MultiPoly, Rational, VarSet};

use super::ideal::IdealRep;

/// Standard monomials of a zero-dimensional ideal, sorted ascending in
/// grevlex. Position `k` is basis vector `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl QuotientBasis {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a normal form in this basis.
    pub fn coordinates(&self, nf: &MultiPoly) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (m, c) in nf.terms() {
            let k = self.position(m).ok_or_else(|| {
                Error::DimensionMismatch(format!("monomial {m} is not standard"))
            })?;
            v[k] = c.clone();
        }
        Ok(v)
    }
}

/// Monomials in `vars` outside the leading-term ideal.
pub fn quotient_basis(ideal: &IdealRep, vars: VarSet) -> Result<QuotientBasis> {
    let lms = ideal.leading_monomials();
    if let Some(extra) = lms.iter().map(|m| m.vars().minus(vars)).find(|s| !s.is_empty()) {
        return Err(Error::DimensionMismatch(format!(
            "ideal involves variables {extra:?} outside the quotient ring"
        )));
    }
    for v in vars.iter() {
        let pure = lms.iter().any(|m| m.vars() == VarSet::single(v));
        if !pure && !ideal.is_unit() {
            return Err(Error::NotZeroDimensional(format!(
                "no leading monomial is a pure power of {v}"
            )));
        }
    }
    let standard = |m: &Monomial| !lms.iter().any(|l| l.divides(m));
    let mut seen = BTreeSet::new();
    let mut frontier = vec![Monomial::one()];
    while let Some(m) = frontier.pop() {
        if !standard(&m) || !seen.insert(m) {
            continue;
        }
        for v in vars.iter() {
            frontier.push(m.mul(&Monomial::var(v, 1)));
        }
    }
    let monomials: Vec<Monomial> = seen.into_iter().collect();
    let index = monomials.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    Ok(QuotientBasis { monomials, index })
}

pub type RatMatrix = Vec<Vec<Rational>>;

/// Matrix of multiplication by `f`; column `j` holds the coordinates of
/// `NF(f * b_j)`.
pub fn mult_matrix(ideal: &IdealRep, basis: &QuotientBasis, f: &MultiPoly) -> Result<RatMatrix> {
    let n = basis.dim();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (j, b) in basis.monomials.iter().enumerate() {
        let nf = ideal.normal_form(&f.mul_monomial(b));
        for (i, c) in basis.coordinates(&nf)?.into_iter().enumerate() {
            m[i][j] = c;
        }
    }
    Ok(m)
}

/// `det(u*I - M)` by Berkowitz's division-free recursion.
pub fn charpoly(m: &RatMatrix) -> Result<UniPoly> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: m.first().map_or(0, |r| r.len()),
        });
    }
    if n == 0 {
        return Ok(UniPoly::one());
    }
    // Integer matrix d*M; the coefficient of u^(n-i) of det(u*I - M) is
    // the one of det(u*I - d*M) divided by d^i.
    let d = m
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|c| c.numer() * (&d / c.denom())).collect())
        .collect();
    // Descending coefficients, leading 1.
    let mut v = vec![BigInt::one(), -a[0][0].clone()];
    for r in 1..n {
        let row: Vec<&BigInt> = (0..r).map(|j| &a[r][j]).collect();
        let mut q = vec![BigInt::one(), -a[r][r].clone()];
        let mut w: Vec<BigInt> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let dot: BigInt = row.iter().zip(w.iter()).map(|(x, y)| *x * y).sum();
            q.push(-dot);
            w = (0..r)
                .map(|i| (0..r).map(|j| &a[i][j] * &w[j]).sum())
                .collect();
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate().take(i + 1) {
                *slot += &q[i - j] * vj;
            }
        }
        v = next;
    }
    let mut scale = BigInt::one();
    let mut coeffs = Vec::with_capacity(n + 1);
    for c in v {
        coeffs.push(Rational::new(c, scale.clone()));
        scale *= &d;
    }
    coeffs.reverse();
    Ok(UniPoly::new(coeffs))
}

/// Matrix product.
pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let n = a.len();
    let k = b.len();
    let p = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| (0..k).map(|l| &a[i][l] * &b[l][j]).sum())
                .collect()
        })
        .collect()
}
