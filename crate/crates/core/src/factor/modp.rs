//! Polynomials over a small prime field. Internal to factorization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub(crate) type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn from_bigints(f: &[BigInt], p: u64) -> Fp {
    let pb = BigInt::from(p);
    trim(
        f.iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("reduced mod p"))
            .collect(),
    )
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub(crate) fn deg(a: &Fp) -> Option<usize> {
    a.len().checked_sub(1)
}

pub(crate) fn monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => vec![],
        Some(&lc) => {
            let li = inv(lc, p);
            a.iter().map(|c| c * li % p).collect()
        }
    }
}

#[cfg(test)]
pub(crate) fn add(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub(crate) fn sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub(crate) fn mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub(crate) fn divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let db = deg(b).expect("division by zero polynomial");
    let li = inv(*b.last().unwrap(), p);
    let mut r = a.clone();
    if r.len() <= db {
        return (vec![], trim(r));
    }
    let mut q = vec![0u64; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i] * li % p;
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            let idx = i - db + j;
            r[idx] = (r[idx] + p - c * bj % p) % p;
        }
        q[i - db] = c;
    }
    (trim(q), trim(r))
}

pub(crate) fn rem(a: &Fp, b: &Fp, p: u64) -> Fp {
    divrem(a, b, p).1
}

pub(crate) fn gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `(s, t)` with `s*a + t*b = 1`, `deg s < deg b`, `deg t < deg a`, for coprime `a`, `b`.
pub(crate) fn bezout(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Fp, Fp) = (vec![1], vec![]);
    let (mut t0, mut t1): (Fp, Fp) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    assert_eq!(r0.len(), 1, "bezout called on non-coprime polynomials");
    let li = inv(r0[0], p);
    let s: Fp = s0.iter().map(|c| c * li % p).collect();
    let t: Fp = t0.iter().map(|c| c * li % p).collect();
    (trim(s), trim(t))
}

pub(crate) fn derivative(a: &Fp, p: u64) -> Fp {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

pub(crate) fn is_squarefree(a: &Fp, p: u64) -> bool {
    let g = gcd(a, &derivative(a, p), p);
    g.len() == 1
}

fn mulmod(a: &Fp, b: &Fp, f: &Fp, p: u64) -> Fp {
    rem(&mul(a, b, p), f, p)
}

/// Berlekamp factorization of a monic squarefree polynomial.
pub(crate) fn berlekamp(f: &Fp, p: u64) -> Vec<Fp> {
    let n = deg(f).expect("nonzero");
    if n <= 1 {
        return vec![f.clone()];
    }
    // Rows of Q: u^(p*i) mod f.
    let mut xp: Fp = vec![1];
    let base = {
        let mut r: Fp = vec![1];
        let mut b: Fp = vec![0, 1];
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(&r, &b, f, p);
            }
            b = mulmod(&b, &b, f, p);
            e >>= 1;
        }
        r
    };
    let mut q = vec![vec![0u64; n]; n];
    for row in q.iter_mut() {
        for (j, &c) in xp.iter().enumerate() {
            row[j] = c;
        }
        xp = mulmod(&xp, &base, f, p);
    }
    // Null space of (Q - I)^T.
    let mut m = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = if i == j { (q[i][j] + p - 1) % p } else { q[i][j] };
            m[j][i] = v;
        }
    }
    let basis = null_space(m, p);
    let k = basis.len();
    let mut factors = vec![f.clone()];
    for v in basis.iter() {
        if factors.len() == k {
            break;
        }
        let v = trim(v.clone());
        if deg(&v).unwrap_or(0) == 0 {
            continue;
        }
        for s in 0..p {
            if factors.len() == k {
                break;
            }
            let vs = sub(&v, &vec![s], p);
            let mut next = Vec::with_capacity(factors.len() + 1);
            for g in factors.drain(..) {
                if deg(&g) == Some(1) {
                    next.push(g);
                    continue;
                }
                let h = gcd(&g, &vs, p);
                let dh = deg(&h).unwrap_or(0);
                if dh > 0 && dh < deg(&g).unwrap() {
                    let (other, _) = divrem(&g, &h, p);
                    next.push(h);
                    next.push(monic(&other, p));
                } else {
                    next.push(g);
                }
            }
            factors = next;
        }
    }
    factors.sort();
    factors
}

fn null_space(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let cols = m[0].len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let li = inv(m[r][c], p);
        for j in 0..cols {
            m[r][j] = m[r][j] * li % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + p - f * m[r][j] % p) % p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (ri, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - m[ri][fc]) % p;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn berlekamp_splits_cyclotomic() {
        // u^3 + 1 = (u + 1)(u^2 - u + 1); mod 13, -1 has cube roots so it splits fully.
        let f: Fp = vec![1, 0, 0, 1];
        let fs = berlekamp(&f, 13);
        assert_eq!(fs.len(), 3);
        let prod = fs.iter().fold(vec![1u64], |acc, g| mul(&acc, g, 13));
        assert_eq!(prod, f);
    }

    #[test]
    fn berlekamp_irreducible() {
        // u^2 + 1 is irreducible mod 19 (19 = 3 mod 4).
        let fs = berlekamp(&vec![1, 0, 1], 19);
        assert_eq!(fs.len(), 1);
    }

    #[test]
    fn bezout_identity() {
        let p = 17;
        let a: Fp = vec![1, 2, 1];
        let b: Fp = vec![3, 1];
        let (s, t) = bezout(&a, &b, p);
        assert_eq!(add(&mul(&s, &a, p), &mul(&t, &b, p), p), vec![1]);
    }
}
