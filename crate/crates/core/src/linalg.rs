//! Gaussian elimination over an exact field.

use num_traits::Zero;

use crate::poly::Rational;

pub(crate) trait Field: Clone + PartialEq {
    fn is_zero_el(&self) -> bool;
    fn sub_el(&self, o: &Self) -> Self;
    fn mul_el(&self, o: &Self) -> Self;
    /// Inverse of a nonzero element.
    fn inv_el(&self) -> Self;
}

impl Field for Rational {
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
        self.recip()
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero_el()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv_el();
        for j in c..cols {
            m[r][j] = m[r][j].mul_el(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero_el() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let v = m[i][j].sub_el(&f.mul_el(&m[r][j]));
                    m[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// The unique solution of `m x = b` for square invertible `m`.
pub(crate) fn solve<F: Field>(m: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let n = m.len();
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .zip(b.iter())
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n].clone()).collect())
}

/// The solution of a consistent system `m x = b` whose matrix has full
/// column rank.
pub(crate) fn solve_full_rank<F: Field>(m: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .zip(b.iter())
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != cols || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().take(cols).map(|r| r[cols].clone()).collect())
}

/// Rank of a matrix.
pub(crate) fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn rank_and_solve() {
        let m = vec![vec![rat(1), rat(2), rat(3)], vec![rat(2), rat(4), rat(6)]];
        assert_eq!(rank(&m), 1);
        let a = vec![vec![rat(2), rat(1)], vec![rat(1), rat(3)]];
        let fifth = |n: i64| Rational::new(n.into(), 5.into());
        assert_eq!(solve(&a, &[rat(3), rat(5)]), Some(vec![fifth(4), fifth(7)]));
        let singular = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert_eq!(solve(&singular, &[rat(1), rat(1)]), None);
    }
}
