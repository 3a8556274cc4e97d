//! Buchberger's algorithm with the Gebauer-Moeller criteria.

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, MultiPoly};

use super::opoly::{full_reduce, top_reduce, IPoly};

/// Environment variable capping the number of processed pairs.
pub const STEP_LIMIT_VAR: &str = "LIMITCYC_MAX_GB_STEPS";
const DEFAULT_STEP_LIMIT: usize = 1_000_000;

pub fn step_limit() -> usize {
    std::env::var(STEP_LIMIT_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_STEP_LIMIT)
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State<'o> {
    order: &'o MonomialOrder,
    polys: Vec<IPoly>,
    /// Total degree the element would have in the homogenized computation.
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].lm()
    }

    fn push(&mut self, p: IPoly, sugar: u32) {
        self.polys.push(p);
        self.sugar.push(sugar);
        self.update(self.polys.len() - 1);
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let d = lcm.degree();
        (self.sugar[i] + d - self.lm(i).degree()).max(self.sugar[j] + d - self.lm(j).degree())
    }

    /// Gebauer-Moeller update for the new element `h`.
    fn update(&mut self, h: usize) {
        let lh = *self.lm(h);
        let mut fresh: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| {
                let lcm = self.lm(g).lcm(&lh);
                Pair {
                    i: g,
                    j: h,
                    lcm,
                    sugar: self.pair_sugar(g, h, &lcm),
                }
            })
            .collect();

        // Chain criterion among the new pairs, keeping coprime ones for now.
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = fresh.pop() {
            let coprime = self.lm(p.i).is_coprime(&lh);
            let dominated = fresh
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        // Product criterion.
        kept.retain(|p| !self.lm(p.i).is_coprime(&lh));

        // Old pairs whose lcm is strictly divisible through h.
        let order_lm = |k: usize| *self.polys[k].lm();
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && order_lm(p.i).lcm(&lh) != p.lcm
                && order_lm(p.j).lcm(&lh) != p.lcm)
        });
        self.pairs.extend(kept);

        let polys = &self.polys;
        self.active.retain(|&g| !lh.divides(polys[g].lm()));
        self.active.push(h);
    }

    /// Sugar strategy: the smallest sugar, ties broken by the smallest lcm.
    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (p, q) = (&self.pairs[k], &self.pairs[best]);
            if p.sugar < q.sugar
                || (p.sugar == q.sugar && self.order.cmp(&p.lcm, &q.lcm).is_lt())
            {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: Pair) -> IPoly {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let mf = f.lm().quotient_of(&p.lcm);
        let mg = g.lm().quotient_of(&p.lcm);
        // lc(g) * mf * f - lc(f) * mg * g
        let scaled = IPoly {
            terms: f
                .terms
                .iter()
                .map(|(m, c)| (m.mul(&mf), c * g.lc()))
                .collect(),
        };
        let mut s = scaled.axpy(&1.into(), f.lc(), &mg, g, self.order);
        s.make_primitive();
        s
    }
}

/// Reduced Groebner basis: monic, sorted by decreasing leading monomial.
/// The zero ideal has an empty basis; the unit ideal has basis `{1}`.
pub fn reduced_basis(gens: &[MultiPoly], order: &MonomialOrder) -> Result<Vec<MultiPoly>> {
    reduced_basis_capped(gens, order, step_limit())
}

/// As [`reduced_basis`], failing after `limit` processed pairs.
pub fn reduced_basis_capped(
    gens: &[MultiPoly],
    order: &MonomialOrder,
    limit: usize,
) -> Result<Vec<MultiPoly>> {
    let mut st = State {
        order,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut input: Vec<IPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| IPoly::from_multi(g, order))
        .collect();
    input.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for p in input {
        let refs: Vec<&IPoly> = st.active.iter().map(|&k| &st.polys[k]).collect();
        let r = top_reduce(p, &refs, order);
        if r.is_zero() {
            continue;
        }
        if r.lm().is_one() {
            return Ok(vec![MultiPoly::one()]);
        }
        let sugar = r.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        st.push(r, sugar);
    }

    let mut steps = 0usize;
    while let Some(pair) = st.select() {
        steps += 1;
        if steps > limit {
            return Err(Error::StepLimit(limit));
        }
        let s = st.spoly(pair);
        let refs: Vec<&IPoly> = st.active.iter().map(|&k| &st.polys[k]).collect();
        let r = top_reduce(s, &refs, order);
        if r.is_zero() {
            continue;
        }
        if r.lm().is_one() {
            return Ok(vec![MultiPoly::one()]);
        }
        st.push(r, pair.sugar);
    }

    // Minimal basis, then inter-reduction.
    let mut minimal: Vec<IPoly> = Vec::new();
    let mut active = st.active.clone();
    active.sort_by(|&a, &b| order.cmp(st.polys[a].lm(), st.polys[b].lm()));
    for &k in &active {
        let lm = st.polys[k].lm();
        if !minimal.iter().any(|g| g.lm().divides(lm)) {
            minimal.push(st.polys[k].clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&IPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, g)| g)
            .collect();
        reduced.push(full_reduce(minimal[k].clone(), &others, order));
    }
    reduced.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    Ok(reduced.iter().map(|g| g.to_monic_q().to_multi()).collect())
}
