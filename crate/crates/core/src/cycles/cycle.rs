use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::point::ClosedPoint;
use crate::error::{Error, Result};
use crate::poly::MultiPoly;

/// Finite integer combination of closed points, keyed by Chow form text.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct ZeroCycle {
    entries: BTreeMap<String, (ClosedPoint, i64)>,
}

/// One line of the serialized form of a cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleEntry {
    pub minpoly: String,
    pub coords: [String; 3],
    pub multiplicity: i64,
    pub chow: String,
}

impl ZeroCycle {
    pub fn new() -> ZeroCycle {
        ZeroCycle::default()
    }

    pub fn point(p: ClosedPoint, multiplicity: i64) -> ZeroCycle {
        let mut z = ZeroCycle::new();
        z.add_point(p, multiplicity);
        z
    }

    pub fn add_point(&mut self, p: ClosedPoint, multiplicity: i64) {
        if multiplicity == 0 {
            return;
        }
        let key = p.chow_text();
        let slot = self.entries.entry(key.clone()).or_insert((p, 0));
        slot.1 += multiplicity;
        if slot.1 == 0 {
            self.entries.remove(&key);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Points with multiplicities, sorted by Chow form text.
    pub fn iter(&self) -> impl Iterator<Item = (&ClosedPoint, i64)> {
        self.entries.values().map(|(p, m)| (p, *m))
    }

    pub fn multiplicity(&self, p: &ClosedPoint) -> i64 {
        self.entries.get(&p.chow_text()).map_or(0, |e| e.1)
    }

    /// `sum multiplicity * residue degree`.
    pub fn degree(&self) -> i64 {
        self.iter().map(|(p, m)| m * p.degree() as i64).sum()
    }

    pub fn is_effective(&self) -> bool {
        self.iter().all(|(_, m)| m > 0)
    }

    pub fn add(&self, other: &ZeroCycle) -> ZeroCycle {
        let mut out = self.clone();
        for (p, m) in other.iter() {
            out.add_point(p.clone(), m);
        }
        out
    }

    pub fn sub(&self, other: &ZeroCycle) -> ZeroCycle {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> ZeroCycle {
        let mut out = ZeroCycle::new();
        for (p, m) in self.iter() {
            out.add_point(p.clone(), k * m);
        }
        out
    }

    /// Divides every multiplicity by `m`, which must divide them all.
    pub fn div(&self, m: i64) -> Result<ZeroCycle> {
        if m <= 0 {
            return Err(Error::Precondition(format!("divisor {m} is not positive")));
        }
        let mut out = ZeroCycle::new();
        for (p, k) in self.iter() {
            if k % m != 0 {
                return Err(Error::NotDivisible {
                    point: format!("{k}*{p}"),
                    divisor: m,
                });
            }
            out.add_point(p.clone(), k / m);
        }
        Ok(out)
    }

    /// Product of Chow forms raised to the multiplicities; effective cycles only.
    pub fn chow_product(&self) -> Result<MultiPoly> {
        if !self.is_effective() {
            return Err(Error::Precondition("Chow form of a non-effective cycle".into()));
        }
        Ok(self
            .iter()
            .fold(MultiPoly::one(), |acc, (p, m)| &acc * &p.chow().pow(m as u32))
            .primitive())
    }

    pub fn entries(&self) -> Vec<CycleEntry> {
        self.iter()
            .map(|(p, m)| CycleEntry {
                minpoly: p.modulus().to_string(),
                coords: [0, 1, 2].map(|i| p.coords()[i].to_string()),
                multiplicity: m,
                chow: p.chow_text(),
            })
            .collect()
    }
}

impl fmt::Display for ZeroCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, m)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(if m < 0 { " - " } else { " + " })?;
            } else if m < 0 {
                f.write_str("-")?;
            }
            write!(f, "{}*{}", m.abs(), p)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ZeroCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::make_closed_point;
    use crate::factor::UniPoly;
    use crate::poly::rat;
    use proptest::prelude::*;

    fn pt(x: i64, y: i64, z: i64) -> ClosedPoint {
        ClosedPoint::rational(rat(x), rat(y), rat(z)).unwrap()
    }

    #[test]
    fn group_laws() {
        let a = ZeroCycle::point(pt(0, 0, 1), 2).add(&ZeroCycle::point(pt(0, 1, 0), 6));
        assert!(a.sub(&a).is_empty());
        let b = a.sub(&ZeroCycle::point(pt(0, 0, 1), 2));
        assert_eq!(b, ZeroCycle::point(pt(0, 1, 0), 6));
        assert_eq!(a.scale(1), a);
        assert_eq!(b.div(2).unwrap(), ZeroCycle::point(pt(0, 1, 0), 3));
        assert!(ZeroCycle::new().div(5).unwrap().is_empty());
        assert!(matches!(
            ZeroCycle::point(pt(1, 0, 0), 3).div(2),
            Err(Error::NotDivisible { divisor: 2, .. })
        ));
        assert_eq!(b.to_string(), "6*(0:1:0)");
    }

    #[test]
    fn serialization_is_sorted_by_chow() {
        let quad = make_closed_point(
            &UniPoly::from_ints(&[1, -1, 1]),
            [UniPoly::one(), UniPoly::zero(), UniPoly::from_ints(&[0, -1])],
        )
        .unwrap();
        let c = ZeroCycle::point(quad, 1).add(&ZeroCycle::point(pt(1, 0, -1), 1));
        let e = c.entries();
        assert_eq!(e.len(), 2);
        assert!(e[0].chow <= e[1].chow);
        assert_eq!(c.degree(), 3);
    }

    fn arb_cycle() -> impl Strategy<Value = ZeroCycle> {
        prop::collection::vec((-2i64..3, -2i64..3, 0i64..2, 1i64..4), 0..4).prop_map(|v| {
            let mut z = ZeroCycle::new();
            for (x, y, w, m) in v {
                if let Ok(p) = ClosedPoint::rational(rat(x), rat(y), rat(w)) {
                    z.add_point(p, m);
                }
            }
            z
        })
    }

    proptest! {
        #[test]
        fn degree_and_chow_are_additive(a in arb_cycle(), b in arb_cycle()) {
            let s = a.add(&b);
            prop_assert_eq!(s.degree(), a.degree() + b.degree());
            let lhs = s.chow_product().unwrap();
            let rhs = (&a.chow_product().unwrap() * &b.chow_product().unwrap()).primitive();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(s.sub(&b), a.clone());
            prop_assert_eq!(a.add(&b), b.add(&a));
        }
    }
}
