//! Exact sparse multivariate polynomials over the rationals.
//!
//! Every polynomial lives in the single global ring
//! `Q[t, x, y, z, u, w0, w1, w2, w]`. The variable order `t < x < y < z < ...`
//! is the id order used for canonical normalization; as a monomial-order
//! precedence the lower id is the *larger* variable.

mod gcd;
mod matrix;
mod order;
mod parse;

pub use gcd::multivar_gcd;
pub use matrix::{determinant, Matrix};
pub use order::{BaseOrder, MonomialOrder, VarSet};
pub use parse::{parse_poly, USER_VARS};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;

/// Number of variables in the global ring.
pub const NVARS: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    T = 0,
    X = 1,
    Y = 2,
    Z = 3,
    U = 4,
    W0 = 5,
    W1 = 6,
    W2 = 7,
    W = 8,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::T,
        Var::X,
        Var::Y,
        Var::Z,
        Var::U,
        Var::W0,
        Var::W1,
        Var::W2,
        Var::W,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::U => "u",
            Var::W0 => "w0",
            Var::W1 => "w1",
            Var::W2 => "w2",
            Var::W => "w",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over the global variables.
///
/// `Ord` is graded reverse lexicographic with `t > x > y > ... > w`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, e: u16) -> Self {
        let mut m = Monomial::one();
        m.0[v.index()] = e;
        m
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Degree in the projective coordinates x, y, z.
    pub fn degree_xyz(&self) -> u32 {
        (self.0[1] + self.0[2] + self.0[3]) as u32
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut r = [0u16; NVARS];
        for (i, r) in r.iter_mut().enumerate() {
            *r = self.0[i] + other.0[i];
        }
        Monomial(r)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut r = [0u16; NVARS];
        for (i, r) in r.iter_mut().enumerate() {
            *r = other.0[i] - self.0[i];
        }
        Monomial(r)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = [0u16; NVARS];
        for (i, r) in r.iter_mut().enumerate() {
            *r = self.0[i].max(other.0[i]);
        }
        Monomial(r)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn vars(&self) -> VarSet {
        let mut s = VarSet::empty();
        for v in Var::ALL {
            if self.exp(v) > 0 {
                s = s.with(v);
            }
        }
        s
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for i in (0..NVARS).rev() {
                if self.0[i] != other.0[i] {
                    return other.0[i].cmp(&self.0[i]);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Sparse polynomial: a map from monomials to nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MultiPoly::monomial(c, Monomial::one())
    }

    pub fn from_int(c: i64) -> Self {
        MultiPoly::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::monomial(Rational::one(), Monomial::var(v, 1))
    }

    pub fn monomial(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term under the global grevlex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_term_in(&self, order: &MonomialOrder) -> Option<(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (*m, c.clone()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v) as u32).max().unwrap_or(0)
    }

    /// Maximal degree in x, y, z.
    pub fn degree_xyz(&self) -> u32 {
        self.terms.keys().map(|m| m.degree_xyz()).max().unwrap_or(0)
    }

    pub fn vars(&self) -> VarSet {
        self.terms
            .keys()
            .fold(VarSet::empty(), |s, m| s.union(m.vars()))
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Homogeneous in x, y, z with every other variable treated as a coefficient.
    pub fn is_homogeneous_xyz(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree_xyz());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(n, a)| (n.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, v: Var, k: u16) -> MultiPoly {
        let mut r = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(v) == k {
                let mut n = *m;
                n.0[v.index()] = 0;
                r.terms.insert(n, c.clone());
            }
        }
        r
    }

    /// All coefficients with respect to `v`, keyed by power.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<u16, MultiPoly> {
        let mut out: BTreeMap<u16, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut n = *m;
            let e = n.0[v.index()];
            n.0[v.index()] = 0;
            out.entry(e).or_default().terms.insert(n, c.clone());
        }
        out
    }

    /// Coefficient of `t^k`; `t_coefficient(0)` is the specialization `t = 0`.
    pub fn t_coefficient(&self, k: u16) -> MultiPoly {
        self.coefficient_of(Var::T, k)
    }

    /// Substitutes a rational constant for `v`.
    pub fn substitute(&self, v: Var, value: &Rational) -> MultiPoly {
        let mut r = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let mut n = *m;
            n.0[v.index()] = 0;
            let f = if e == 0 {
                c.clone()
            } else {
                c * num_traits::pow(value.clone(), e as usize)
            };
            r.add_term(n, f);
        }
        r
    }

    /// Substitutes a polynomial for `v`.
    pub fn substitute_poly(&self, v: Var, value: &MultiPoly) -> MultiPoly {
        let mut r = MultiPoly::zero();
        let mut powers: Vec<MultiPoly> = vec![MultiPoly::one()];
        for (e, coeff) in self.coefficients_in(v) {
            while powers.len() <= e as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            r = r + &coeff * &powers[e as usize];
        }
        r
    }

    /// Renames variables by a permutation-like map.
    pub fn rename(&self, map: &[(Var, Var)]) -> MultiPoly {
        let mut r = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut n = *m;
            for (from, _) in map {
                n.0[from.index()] = 0;
            }
            for (from, to) in map {
                n.0[to.index()] += m.exp(*from);
            }
            r.add_term(n, c.clone());
        }
        r
    }

    pub fn partial_derivative(&self, v: Var) -> MultiPoly {
        let mut r = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let mut n = *m;
            n.0[v.index()] = e - 1;
            r.add_term(n, c * Rational::from_integer(BigInt::from(e)));
        }
        r
    }

    pub fn evaluate(&self, values: &[(Var, Rational)]) -> MultiPoly {
        let mut p = self.clone();
        for (v, a) in values {
            p = p.substitute(*v, a);
        }
        p
    }

    /// Gcd of numerators over lcm of denominators, with the sign of the
    /// leading coefficient; dividing by it leaves a primitive integer
    /// polynomial with positive leading coefficient.
    pub fn content(&self) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::one();
        }
        let mut content = Rational::new(num, den);
        if let Some((_, lc)) = self.leading_term() {
            if lc.is_negative() {
                content = -content;
            }
        }
        content
    }

    /// Primitive integer form with positive leading coefficient.
    pub fn primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Scales so the leading coefficient (under `order`) is one.
    pub fn monic_in(&self, order: &MonomialOrder) -> MultiPoly {
        match self.leading_term_in(order) {
            None => MultiPoly::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Division by a single polynomial: `a = q*f + r` with no term of `r`
    /// divisible by the leading monomial of `f` under `order`.
    pub fn divrem_single(&self, f: &MultiPoly, order: &MonomialOrder) -> Result<(MultiPoly, MultiPoly)> {
        let (lm, lc) = f.leading_term_in(order).ok_or(Error::ZeroDivisor)?;
        let lc_inv = lc.recip();
        let mut q = MultiPoly::zero();
        let mut r = MultiPoly::zero();
        let mut p = self.clone();
        // Reduce the largest remaining term at each step; terms not divisible
        // by `lm` move to the remainder.
        while let Some((m, c)) = p.leading_term_in(order) {
            if lm.divides(&m) {
                let qm = lm.quotient_of(&m);
                let qc = &c * &lc_inv;
                p = p - f.mul_term(&qc, &qm);
                q.add_term(qm, qc);
            } else {
                p.terms.remove(&m);
                r.add_term(m, c);
            }
        }
        Ok((q, r))
    }

    /// Exact quotient `self / f`; fails if `f` does not divide `self`.
    pub fn exact_div(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if f.is_constant() {
            return Ok(self.scale(&f.constant_term().recip()));
        }
        let (q, r) = self.divrem_single(f, &MonomialOrder::Grevlex)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!("{f} does not divide {self}")))
        }
    }

    pub fn divides(&self, a: &MultiPoly) -> bool {
        match a.divrem_single(self, &MonomialOrder::Grevlex) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => a.is_zero(),
        }
    }

    /// Dense coefficient vector when the polynomial only involves `v`.
    pub fn to_univariate(&self, v: Var) -> Option<Vec<Rational>> {
        if !self.vars().minus(VarSet::single(v)).is_empty() {
            return None;
        }
        let deg = self.degree_in(v) as usize;
        let mut out = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize] = c.clone();
        }
        Some(out)
    }

    pub fn from_univariate(coeffs: &[Rational], v: Var) -> MultiPoly {
        MultiPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(v, i as u16), c.clone())),
        )
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut r = self.clone();
        for (m, c) in &rhs.terms {
            r.add_term(*m, c.clone());
        }
        r
    }
}

impl Add<MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Add<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: &MultiPoly) -> MultiPoly {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
        self
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut r = self.clone();
        for (m, c) in &rhs.terms {
            r.add_term(*m, -c);
        }
        r
    }
}

impl Sub<MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Sub<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: &MultiPoly) -> MultiPoly {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
        self
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut r = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }
}

impl Mul<MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Mul<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        &self * rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -(self.clone())
    }
}

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
