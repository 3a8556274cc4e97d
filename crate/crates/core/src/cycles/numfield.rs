use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factor::UniPoly;
use crate::linalg::Field;
use crate::poly::Rational;

/// Element of `Q[u]/(m)` for a monic irreducible `m`.
#[derive(Clone, PartialEq, Eq)]
pub struct NfElem {
    rep: UniPoly,
    modulus: Arc<UniPoly>,
}

impl NfElem {
    /// `modulus` must be monic and irreducible.
    pub fn new(rep: UniPoly, modulus: Arc<UniPoly>) -> NfElem {
        let rep = if rep.deg() >= modulus.deg() {
            rep.rem(&modulus)
        } else {
            rep
        };
        NfElem { rep, modulus }
    }

    pub fn from_rational(c: Rational, modulus: Arc<UniPoly>) -> NfElem {
        NfElem::new(UniPoly::constant(c), modulus)
    }

    pub fn zero(modulus: Arc<UniPoly>) -> NfElem {
        NfElem::from_rational(Rational::zero(), modulus)
    }

    pub fn one(modulus: Arc<UniPoly>) -> NfElem {
        NfElem::from_rational(Rational::one(), modulus)
    }

    /// The class of `u`.
    pub fn generator(modulus: Arc<UniPoly>) -> NfElem {
        NfElem::new(UniPoly::x(), modulus)
    }

    pub fn rep(&self) -> &UniPoly {
        &self.rep
    }

    pub fn modulus(&self) -> &Arc<UniPoly> {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep == UniPoly::one()
    }

    /// The rational value, when the element lies in the prime field.
    pub fn as_rational(&self) -> Option<Rational> {
        (self.rep.deg() == 0).then(|| self.rep.coeff(0))
    }

    fn check(&self, o: &NfElem) -> Result<()> {
        if self.modulus == o.modulus || *self.modulus == *o.modulus {
            Ok(())
        } else {
            Err(Error::NumberField(format!(
                "modulus mismatch: {} vs {}",
                self.modulus, o.modulus
            )))
        }
    }

    pub fn try_add(&self, o: &NfElem) -> Result<NfElem> {
        self.check(o)?;
        Ok(NfElem::new(&self.rep + &o.rep, self.modulus.clone()))
    }

    pub fn try_sub(&self, o: &NfElem) -> Result<NfElem> {
        self.check(o)?;
        Ok(NfElem::new(&self.rep - &o.rep, self.modulus.clone()))
    }

    pub fn try_mul(&self, o: &NfElem) -> Result<NfElem> {
        self.check(o)?;
        Ok(NfElem::new(&self.rep * &o.rep, self.modulus.clone()))
    }

    pub fn inv(&self) -> Result<NfElem> {
        if self.is_zero() {
            return Err(Error::NumberField("inverse of zero".into()));
        }
        let (g, s, _) = self.rep.ext_gcd(&self.modulus);
        if g != UniPoly::one() {
            return Err(Error::NumberField(format!(
                "modulus {} is reducible",
                self.modulus
            )));
        }
        Ok(NfElem::new(s, self.modulus.clone()))
    }

    pub fn scale(&self, c: &Rational) -> NfElem {
        NfElem::new(self.rep.scale(c), self.modulus.clone())
    }

    pub fn pow(&self, e: u32) -> NfElem {
        (0..e).fold(NfElem::one(self.modulus.clone()), |acc, _| &acc * self)
    }

    /// Matrix of multiplication by `self` in the basis `1, u, ..., u^(n-1)`.
    pub fn mult_matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.modulus.deg();
        let mut m = vec![vec![Rational::zero(); n]; n];
        let mut basis = UniPoly::one();
        for j in 0..n {
            let col = (&self.rep * &basis).rem(&self.modulus);
            for (i, row) in m.iter_mut().enumerate() {
                row[j] = col.coeff(i);
            }
            basis = &basis * &UniPoly::x();
        }
        m
    }

    /// Coordinates in the basis `1, u, ..., u^(n-1)`.
    pub fn coordinates(&self) -> Vec<Rational> {
        (0..self.modulus.deg()).map(|i| self.rep.coeff(i)).collect()
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.rep, f)
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.rep, self.modulus)
    }
}

impl Add for &NfElem {
    type Output = NfElem;
    fn add(self, o: &NfElem) -> NfElem {
        self.try_add(o).expect("same number field")
    }
}

impl Sub for &NfElem {
    type Output = NfElem;
    fn sub(self, o: &NfElem) -> NfElem {
        self.try_sub(o).expect("same number field")
    }
}

impl Mul for &NfElem {
    type Output = NfElem;
    fn mul(self, o: &NfElem) -> NfElem {
        self.try_mul(o).expect("same number field")
    }
}

impl Neg for &NfElem {
    type Output = NfElem;
    fn neg(self) -> NfElem {
        NfElem::new(-&self.rep, self.modulus.clone())
    }
}

impl Field for NfElem {
    fn is_zero_el(&self) -> bool {
        self.is_zero()
    }
    fn sub_el(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_el(&self, o: &Self) -> Self {
        self * o
    }
    fn inv_el(&self) -> Self {
        self.inv().expect("nonzero element of a field")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn field() -> Arc<UniPoly> {
        Arc::new(UniPoly::from_ints(&[1, -1, 1]))
    }

    #[test]
    fn cube_root_arithmetic() {
        let k = field();
        let u = NfElem::generator(k.clone());
        let u_minus_1 = &u - &NfElem::one(k.clone());
        assert_eq!((&u * &u_minus_1).as_rational(), Some(rat(-1)));
        let inv = u.inv().unwrap();
        assert_eq!(inv.rep(), &UniPoly::from_ints(&[1, -1]));
        assert!((&u * &inv).is_one());
        assert_eq!(&u + &NfElem::zero(k.clone()), u);
        assert!(u.pow(3).as_rational() == Some(rat(-1)));
    }

    #[test]
    fn errors() {
        let u = NfElem::generator(field());
        let other = NfElem::generator(Arc::new(UniPoly::from_ints(&[-2, 0, 1])));
        assert!(matches!(u.try_mul(&other), Err(Error::NumberField(_))));
        assert!(NfElem::zero(field()).inv().is_err());
    }
}
