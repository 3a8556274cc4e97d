//! Polynomials stored as term vectors sorted descending in a fixed order.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{Monomial, MonomialOrder, MultiPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct OPoly<C> {
    pub terms: Vec<(Monomial, C)>,
}

pub(crate) type IPoly = OPoly<BigInt>;
pub(crate) type QPoly = OPoly<Rational>;

impl<C: Clone + Zero> OPoly<C> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &C {
        &self.terms[0].1
    }
}

impl<C> OPoly<C>
where
    C: Clone + Zero + std::ops::Mul<Output = C> + std::ops::Sub<Output = C>,
    for<'a> &'a C: std::ops::Mul<&'a C, Output = C>,
{
    /// `a * self - c * m * g`.
    pub fn axpy(&self, a: &C, c: &C, m: &Monomial, g: &OPoly<C>, order: &MonomialOrder) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        let shifted = |j: usize| g.terms[j].0.mul(m);
        while i < self.terms.len() || j < g.terms.len() {
            let ord = if i == self.terms.len() {
                Ordering::Less
            } else if j == g.terms.len() {
                Ordering::Greater
            } else {
                order.cmp(&self.terms[i].0, &shifted(j))
            };
            match ord {
                Ordering::Greater => {
                    out.push((self.terms[i].0, a * &self.terms[i].1));
                    i += 1;
                }
                Ordering::Less => {
                    let v = C::zero() - c * &g.terms[j].1;
                    out.push((shifted(j), v));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = a * &self.terms[i].1 - c * &g.terms[j].1;
                    if !v.is_zero() {
                        out.push((self.terms[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        OPoly { terms: out }
    }
}

impl IPoly {
    /// Integer primitive form with positive leading coefficient.
    pub fn from_multi(p: &MultiPoly, order: &MonomialOrder) -> IPoly {
        let den = p
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut terms: Vec<(Monomial, BigInt)> = p
            .terms()
            .map(|(m, c)| (*m, (c * Rational::from_integer(den.clone())).to_integer()))
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out = OPoly { terms };
        out.make_primitive();
        out
    }

    pub fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    pub fn to_monic_q(&self) -> QPoly {
        let inv = Rational::from_integer(self.lc().clone()).recip();
        OPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, Rational::from_integer(c.clone()) * &inv))
                .collect(),
        }
    }
}

impl QPoly {
    pub fn from_multi(p: &MultiPoly, order: &MonomialOrder) -> QPoly {
        let mut terms: Vec<(Monomial, Rational)> =
            p.terms().map(|(m, c)| (*m, c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        OPoly { terms }
    }

    pub fn to_multi(&self) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().cloned())
    }
}

/// Index of the first basis element whose leading monomial divides `m`.
pub(crate) fn find_divisor<C: Clone + Zero>(basis: &[&OPoly<C>], m: &Monomial) -> Option<usize> {
    basis.iter().position(|g| g.lm().divides(m))
}

/// Fraction-free reduction of the leading term until it is irreducible.
/// The result is a nonzero integer multiple of a remainder.
pub(crate) fn top_reduce(mut p: IPoly, basis: &[&IPoly], order: &MonomialOrder) -> IPoly {
    let mut steps = 0usize;
    while !p.is_zero() {
        let Some(k) = find_divisor(basis, p.lm()) else {
            break;
        };
        let g = basis[k];
        let m = g.lm().quotient_of(p.lm());
        let gg = g.lc().gcd(p.lc());
        let a = g.lc() / &gg;
        let c = p.lc() / &gg;
        p = p.axpy(&a, &c, &m, g, order);
        steps += 1;
        if steps.is_multiple_of(8) {
            p.make_primitive();
        }
    }
    p.make_primitive();
    p
}

/// Full fraction-free reduction: no term of the result is divisible by a
/// leading monomial of `basis`.
pub(crate) fn full_reduce(p: IPoly, basis: &[&IPoly], order: &MonomialOrder) -> IPoly {
    let mut rest = p;
    let mut done: Vec<(Monomial, BigInt)> = Vec::new();
    let mut steps = 0usize;
    while !rest.is_zero() {
        match find_divisor(basis, rest.lm()) {
            Some(k) => {
                let g = basis[k];
                let m = g.lm().quotient_of(rest.lm());
                let gg = g.lc().gcd(rest.lc());
                let a = g.lc() / &gg;
                let c = rest.lc() / &gg;
                rest = rest.axpy(&a, &c, &m, g, order);
                if !a.is_one() {
                    for (_, d) in done.iter_mut() {
                        *d = &*d * &a;
                    }
                }
                steps += 1;
                if steps.is_multiple_of(8) {
                    shrink(&mut done, &mut rest);
                }
            }
            None => {
                let t = rest.terms.remove(0);
                done.push(t);
            }
        }
    }
    let mut out = OPoly { terms: done };
    out.make_primitive();
    out
}

fn shrink(done: &mut [(Monomial, BigInt)], rest: &mut IPoly) {
    let mut g = BigInt::zero();
    for (_, c) in done.iter().chain(rest.terms.iter()) {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for (_, c) in done.iter_mut().chain(rest.terms.iter_mut()) {
        *c = &*c / &g;
    }
}

/// Remainder of full reduction by a monic basis over the rationals.
pub(crate) fn reduce_q(p: QPoly, basis: &[QPoly], order: &MonomialOrder) -> QPoly {
    let refs: Vec<&QPoly> = basis.iter().collect();
    let mut rest = p;
    let mut done = Vec::new();
    while !rest.is_zero() {
        match find_divisor(&refs, rest.lm()) {
            Some(k) => {
                let g = refs[k];
                let m = g.lm().quotient_of(rest.lm());
                let c = rest.lc().clone();
                rest = rest.axpy(&Rational::one(), &c, &m, g, order);
            }
            None => {
                let t = rest.terms.remove(0);
                done.push(t);
            }
        }
    }
    OPoly { terms: done }
}
