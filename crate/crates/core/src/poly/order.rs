use std::cmp::Ordering;
use std::fmt;

use super::{Monomial, Var, NVARS};

/// A set of global variables, as a bit mask over variable ids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u16);

impl VarSet {
    pub const fn empty() -> Self {
        VarSet(0)
    }

    pub fn all() -> Self {
        VarSet((1 << NVARS) - 1)
    }

    pub fn single(v: Var) -> Self {
        VarSet(1 << v.index())
    }

    pub fn of(vars: &[Var]) -> Self {
        vars.iter().fold(VarSet::empty(), |s, v| s.with(*v))
    }

    pub fn with(self, v: Var) -> Self {
        VarSet(self.0 | (1 << v.index()))
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v.index()) != 0
    }

    pub fn union(self, other: VarSet) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn minus(self, other: VarSet) -> Self {
        VarSet(self.0 & !other.0)
    }

    pub fn complement(self) -> Self {
        VarSet::all().minus(self)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |v| self.contains(*v))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.name())).finish()
    }
}

/// Orders used inside a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseOrder {
    Grevlex,
    Lex,
}

impl BaseOrder {
    fn cmp_on(self, mask: VarSet, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            BaseOrder::Grevlex => {
                let da: u32 = mask.iter().map(|v| a.exp(v) as u32).sum();
                let db: u32 = mask.iter().map(|v| b.exp(v) as u32).sum();
                da.cmp(&db).then_with(|| {
                    for i in (0..NVARS).rev() {
                        if mask.contains(Var::from_index(i)) && a.0[i] != b.0[i] {
                            return b.0[i].cmp(&a.0[i]);
                        }
                    }
                    Ordering::Equal
                })
            }
            BaseOrder::Lex => {
                for i in 0..NVARS {
                    if mask.contains(Var::from_index(i)) && a.0[i] != b.0[i] {
                        return a.0[i].cmp(&b.0[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Monomial orders. Variable precedence follows the ids: `t > x > y > z > u > w0 > w1 > w2 > w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Compares the `first` variables with `inner_first`, breaking ties on
    /// the remaining variables with `inner_rest`. Eliminates `first`.
    Block {
        first: VarSet,
        inner_first: BaseOrder,
        inner_rest: BaseOrder,
    },
}

impl MonomialOrder {
    /// Elimination order for `vars` with grevlex inside both blocks.
    pub fn eliminate(vars: VarSet) -> Self {
        MonomialOrder::Block {
            first: vars,
            inner_first: BaseOrder::Grevlex,
            inner_rest: BaseOrder::Grevlex,
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a.cmp(b),
            MonomialOrder::Lex => BaseOrder::Lex.cmp_on(VarSet::all(), a, b),
            MonomialOrder::Block {
                first,
                inner_first,
                inner_rest,
            } => inner_first
                .cmp_on(*first, a, b)
                .then_with(|| inner_rest.cmp_on(first.complement(), a, b)),
        }
    }

    /// True when the order is compatible with total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_prefers_x_over_y() {
        let a = Monomial::var(Var::X, 1);
        let b = Monomial::var(Var::Y, 5);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn block_eliminates_first_group() {
        let order = MonomialOrder::eliminate(VarSet::single(Var::W));
        let a = Monomial::var(Var::W, 1);
        let b = Monomial::var(Var::X, 9);
        assert_eq!(order.cmp(&a, &b), Ordering::Greater);
    }
}
