use super::MultiPoly;
use crate::error::{Error, Result};

/// Row-major square matrix of polynomials.
pub type Matrix = Vec<Vec<MultiPoly>>;

fn check_square(m: &Matrix) -> Result<usize> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    Ok(n)
}

fn cofactor(m: &Matrix) -> MultiPoly {
    match m.len() {
        0 => MultiPoly::one(),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        3 => {
            let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
                &m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1]
            };
            &m[0][0] * &minor(1, 2, 1, 2) - &m[0][1] * &minor(1, 2, 0, 2)
                + &m[0][2] * &minor(1, 2, 0, 1)
        }
        _ => unreachable!("cofactor expansion only used up to 3x3"),
    }
}

/// Fraction-free (Bareiss) elimination; every division is exact.
fn bareiss(mut a: Matrix) -> Result<MultiPoly> {
    let n = a.len();
    let mut sign = false;
    let mut prev = MultiPoly::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return Ok(MultiPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign { -det } else { det })
}

/// Exact determinant: cofactor expansion up to 3x3, Bareiss beyond.
pub fn determinant(m: &Matrix) -> Result<MultiPoly> {
    let n = check_square(m)?;
    if n <= 3 {
        Ok(cofactor(m))
    } else {
        bareiss(m.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, rat, Var, USER_VARS};

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, USER_VARS).unwrap()
    }

    fn mat(rows: &[&[&str]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect()
    }

    #[test]
    fn identity_and_alternating() {
        let id = mat(&[&["1", "0", "0"], &["0", "1", "0"], &["0", "0", "1"]]);
        assert_eq!(determinant(&id).unwrap(), MultiPoly::one());
        let rep = mat(&[&["x", "y", "1"], &["x", "y", "1"], &["t", "z", "x"]]);
        assert!(determinant(&rep).unwrap().is_zero());
    }

    #[test]
    fn fermat_hessian() {
        let f = p("x^3 + y^3 + z^3");
        let vars = [Var::X, Var::Y, Var::Z];
        let h: Matrix = vars
            .iter()
            .map(|a| {
                vars.iter()
                    .map(|b| f.partial_derivative(*a).partial_derivative(*b))
                    .collect()
            })
            .collect();
        assert_eq!(determinant(&h).unwrap(), p("216*x*y*z"));
    }

    #[test]
    fn non_square_rejected() {
        let m = vec![vec![p("1"), p("2")]];
        assert!(matches!(determinant(&m), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn bareiss_matches_laplace_on_4x4() {
        let m = mat(&[
            &["x", "y", "0", "1"],
            &["t", "x+y", "z", "2"],
            &["1", "0", "y", "x"],
            &["z", "1", "t", "0"],
        ]);
        // Laplace expansion along the first row as the reference.
        let minor = |skip: usize| -> Matrix {
            m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != skip)
                        .map(|(_, e)| e.clone())
                        .collect()
                })
                .collect()
        };
        let mut expected = MultiPoly::zero();
        for j in 0..4 {
            let term = &m[0][j] * &determinant(&minor(j)).unwrap();
            expected = if j % 2 == 0 { expected + term } else { expected - term };
        }
        assert_eq!(determinant(&m).unwrap(), expected);
        let scaled: Matrix = m
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if i == 2 {
                    r.iter().map(|e| e.scale(&rat(5))).collect()
                } else {
                    r.clone()
                }
            })
            .collect();
        assert_eq!(determinant(&scaled).unwrap(), expected.scale(&rat(5)));
    }
}
