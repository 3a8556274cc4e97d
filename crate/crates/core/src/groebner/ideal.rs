use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, MultiPoly, Var, VarSet};

use super::buchberger::reduced_basis;
use super::opoly::{reduce_q, QPoly};

/// An ideal with its reduced Groebner basis, computed at construction.
#[derive(Clone, Debug)]
pub struct IdealRep {
    generators: Vec<MultiPoly>,
    order: MonomialOrder,
    basis: Vec<MultiPoly>,
    sorted: Vec<QPoly>,
}

impl PartialEq for IdealRep {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.basis == other.basis
    }
}

impl IdealRep {
    pub fn new(generators: Vec<MultiPoly>, order: MonomialOrder) -> Result<IdealRep> {
        let basis = reduced_basis(&generators, &order)?;
        Ok(IdealRep::from_basis(generators, order, basis))
    }

    pub fn grevlex(generators: Vec<MultiPoly>) -> Result<IdealRep> {
        IdealRep::new(generators, MonomialOrder::Grevlex)
    }

    /// Trusts that `basis` is already the reduced basis under `order`.
    fn from_basis(generators: Vec<MultiPoly>, order: MonomialOrder, basis: Vec<MultiPoly>) -> Self {
        let sorted = basis.iter().map(|g| QPoly::from_multi(g, &order)).collect();
        IdealRep {
            generators,
            order,
            basis,
            sorted,
        }
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// The reduced Groebner basis, monic, by decreasing leading monomial.
    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Leading monomials of the basis under the ideal's order.
    pub fn leading_monomials(&self) -> Vec<crate::poly::Monomial> {
        self.sorted.iter().map(|g| *g.lm()).collect()
    }

    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        reduce_q(QPoly::from_multi(p, &self.order), &self.sorted, &self.order).to_multi()
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn contains_ideal(&self, other: &IdealRep) -> bool {
        other.basis.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals, independent of the stored orders.
    pub fn same_ideal(&self, other: &IdealRep) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn vars(&self) -> VarSet {
        self.basis
            .iter()
            .fold(VarSet::empty(), |acc, g| acc.union(g.vars()))
    }

    /// The same ideal under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<IdealRep> {
        if order == self.order {
            return Ok(self.clone());
        }
        IdealRep::new(self.basis.clone(), order)
    }

    /// Sum of ideals, under this ideal's order.
    pub fn plus(&self, extra: &[MultiPoly]) -> Result<IdealRep> {
        let mut gens = self.basis.clone();
        gens.extend(extra.iter().cloned());
        IdealRep::new(gens, self.order.clone())
    }
}

/// `I` intersected with the ring without `drop`, as a grevlex ideal.
pub fn eliminate(ideal: &IdealRep, drop: VarSet) -> Result<IdealRep> {
    if drop.is_empty() {
        return ideal.with_order(MonomialOrder::Grevlex);
    }
    let blocked = ideal.with_order(MonomialOrder::eliminate(drop))?;
    let kept: Vec<MultiPoly> = blocked
        .basis()
        .iter()
        .filter(|g| drop_free(g, drop))
        .cloned()
        .collect();
    // The survivors form the reduced basis under grevlex on the remaining
    // variables, which is the global grevlex restricted to them.
    let mut basis = kept.clone();
    basis.sort_by(|a, b| {
        let la = a.leading_term().map(|t| *t.0).unwrap_or_default();
        let lb = b.leading_term().map(|t| *t.0).unwrap_or_default();
        lb.cmp(&la)
    });
    Ok(IdealRep::from_basis(kept, MonomialOrder::Grevlex, basis))
}

fn drop_free(g: &MultiPoly, drop: VarSet) -> bool {
    drop.iter().all(|v| !g.contains_var(v))
}

fn reject_w(gens: &[MultiPoly], what: &str) -> Result<()> {
    if gens.iter().any(|g| g.contains_var(Var::W)) {
        return Err(Error::ReservedVariable(format!(
            "{what}: generators already use the tag variable w"
        )));
    }
    Ok(())
}

/// `(I : h^inf)` through the tag `w*h - 1`.
///
/// Without `u` in the input, a grevlex basis of `I` and `h` are homogenized
/// by `u` and the tag becomes `w*h^h - u^(deg h + 1)`; setting `u = 1` in the
/// `w`-free part of that homogeneous ideal gives the saturation.
pub fn saturate_by(ideal: &IdealRep, h: &MultiPoly) -> Result<IdealRep> {
    reject_w(ideal.basis(), "saturation")?;
    if h.contains_var(Var::W) {
        return Err(Error::ReservedVariable("saturation: h uses w".into()));
    }
    let w = MultiPoly::var(Var::W);
    let order = MonomialOrder::eliminate(VarSet::single(Var::W));
    if ideal.vars().contains(Var::U) || h.contains_var(Var::U) {
        let mut gens = ideal.basis().to_vec();
        gens.push(&w * h - MultiPoly::one());
        let tagged = IdealRep::new(gens, order)?;
        return eliminate(&tagged, VarSet::single(Var::W));
    }
    let mut gens: Vec<MultiPoly> = graded_basis(ideal)?.iter().map(homogenize_u).collect();
    let top = h.total_degree().unwrap_or(0);
    gens.push(&w * &homogenize_u(h) - MultiPoly::var(Var::U).pow(top + 1));
    dehomogenized_w_free(&gens, &order, ideal.order().clone())
}

/// A grevlex basis of `k`.
fn graded_basis(k: &IdealRep) -> Result<Vec<MultiPoly>> {
    if k.order().is_graded() {
        Ok(k.basis().to_vec())
    } else {
        reduced_basis(k.basis(), &MonomialOrder::Grevlex)
    }
}

/// `u = 1` in the `w`-free part of a basis of homogeneous `gens`.
fn dehomogenized_w_free(gens: &[MultiPoly], order: &MonomialOrder, out: MonomialOrder) -> Result<IdealRep> {
    let basis = reduced_basis(gens, order)?;
    let one = crate::poly::rat(1);
    let kept = basis
        .iter()
        .filter(|g| !g.contains_var(Var::W))
        .map(|g| g.substitute(Var::U, &one))
        .collect();
    IdealRep::new(kept, out)
}

/// `(I : t^inf)`.
///
/// With `t` renamed to `w`, the revlex-last variable, and the generators
/// homogenized by `u`, a homogeneous basis saturates by stripping powers of
/// `w`; setting `u = 1` gives generators of the saturation.
pub fn saturate_t(ideal: &IdealRep) -> Result<IdealRep> {
    let gens = ideal.basis();
    if gens.iter().any(|g| g.contains_var(Var::U) || g.contains_var(Var::W)) {
        return saturate_by(ideal, &MultiPoly::var(Var::T));
    }
    let homogeneous: Vec<MultiPoly> = gens
        .iter()
        .map(|g| homogenize_u(&g.rename(&[(Var::T, Var::W)])))
        .collect();
    let basis = reduced_basis(&homogeneous, &MonomialOrder::Grevlex)?;
    let saturated = basis
        .iter()
        .map(|g| {
            let low = g.terms().map(|(m, _)| m.exp(Var::W)).min().unwrap_or(0);
            let strip = crate::poly::Monomial::var(Var::W, low);
            let terms = g.terms().map(|(m, c)| (strip.quotient_of(m), c.clone()));
            MultiPoly::from_terms(terms)
                .substitute(Var::U, &crate::poly::rat(1))
                .rename(&[(Var::W, Var::T)])
        })
        .collect();
    IdealRep::new(saturated, ideal.order().clone())
}

/// Multiplies each term by the power of `u` reaching the top total degree.
fn homogenize_u(g: &MultiPoly) -> MultiPoly {
    let top = g.total_degree().unwrap_or(0);
    MultiPoly::from_terms(
        g.terms()
            .map(|(m, c)| (m.mul(&crate::poly::Monomial::var(Var::U, (top - m.degree()) as u16)), c.clone())),
    )
}

/// `I ∩ J` through `w*I + (1 - w)*J`.
///
/// Grevlex bases of `I` and `J` are homogenized by `u`, so the tagged ideal
/// `w*I^h + (u - w)*J^h` is homogeneous and every reduction stays in one
/// degree. Setting `u = 1` in its `w`-free part gives `I ∩ J`.
pub fn ideal_intersect(i: &IdealRep, j: &IdealRep) -> Result<IdealRep> {
    reject_w(i.basis(), "intersection")?;
    reject_w(j.basis(), "intersection")?;
    let w = MultiPoly::var(Var::W);
    if i.vars().contains(Var::U) || j.vars().contains(Var::U) {
        let one_minus_w = MultiPoly::one() - &w;
        let mut gens: Vec<MultiPoly> = i.basis().iter().map(|g| &w * g).collect();
        gens.extend(j.basis().iter().map(|g| &one_minus_w * g));
        let tagged = IdealRep::new(gens, MonomialOrder::eliminate(VarSet::single(Var::W)))?;
        return eliminate(&tagged, VarSet::single(Var::W));
    }
    let u_minus_w = MultiPoly::var(Var::U) - &w;
    let mut gens: Vec<MultiPoly> = graded_basis(i)?.iter().map(|g| &w * &homogenize_u(g)).collect();
    gens.extend(graded_basis(j)?.iter().map(|g| &u_minus_w * &homogenize_u(g)));
    dehomogenized_w_free(&gens, &MonomialOrder::eliminate(VarSet::single(Var::W)), MonomialOrder::Grevlex)
}
