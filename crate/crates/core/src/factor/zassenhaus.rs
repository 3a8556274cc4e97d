//! Zassenhaus factorization of squarefree primitive integer polynomials:
//! Berlekamp modulo a small prime, quadratic Hensel lifting along a factor
//! tree, then recombination by subset enumeration with trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp::{self, Fp};

/// Integer polynomial, lowest degree first, no trailing zeros.
pub(crate) type ZPoly = Vec<BigInt>;

fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn reduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m >> 1;
    trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn zadd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default()
            })
            .collect(),
    )
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default()
            })
            .collect(),
    )
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    reduce(&zmul(a, b), m)
}

/// Division by a monic polynomial modulo `m`.
fn divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    let mut r = reduce(a, m);
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let idx = i - db + j;
            r[idx] = (&r[idx] - &c * bj).mod_floor(m);
        }
        q[i - db] = c;
    }
    (trim(q), reduce(&r, m))
}

fn lift_fp(a: &Fp) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// One quadratic Hensel step: from `f = g*h`, `s*g + t*h = 1` modulo `m`
/// to the same identities modulo `m2` (which divides `m^2`).
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m2: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let e = reduce(&zsub(f, &zmul(g, h)), m2);
    let (q, r) = divrem_monic(&mul_mod(s, &e, m2), h, m2);
    let g2 = reduce(&zadd(&zadd(g, &zmul(t, &e)), &zmul(&q, g)), m2);
    let h2 = reduce(&zadd(h, &r), m2);
    let b = reduce(
        &zsub(&zadd(&zmul(s, &g2), &zmul(t, &h2)), &[BigInt::one()]),
        m2,
    );
    let (c, d) = divrem_monic(&mul_mod(s, &b, m2), &h2, m2);
    let s2 = reduce(&zsub(s, &d), m2);
    let t2 = reduce(&zsub(&zsub(t, &zmul(t, &b)), &zmul(&c, &g2)), m2);
    (g2, h2, s2, t2)
}

/// Lifts monic factors of `f mod p` to monic factors of `f mod modulus`.
fn multifactor_lift(f: &[BigInt], factors: &[Fp], p: u64, modulus: &BigInt) -> Vec<ZPoly> {
    let lc = f.last().expect("nonzero").clone();
    if factors.len() == 1 {
        let inv = mod_inverse(&lc, modulus);
        return vec![reduce(&f.iter().map(|c| c * &inv).collect::<Vec<_>>(), modulus)];
    }
    let k = factors.len() / 2;
    let pb = BigInt::from(p);
    let lc_p = lc.mod_floor(&pb).to_u64().expect("small");
    let g0 = factors[..k]
        .iter()
        .fold(vec![lc_p], |acc, x| modp::mul(&acc, x, p));
    let h0 = factors[k..]
        .iter()
        .fold(vec![1u64], |acc, x| modp::mul(&acc, x, p));
    let (s0, t0) = modp::bezout(&g0, &h0, p);
    let (mut g, mut h, mut s, mut t) = (lift_fp(&g0), lift_fp(&h0), lift_fp(&s0), lift_fp(&t0));
    let mut m = pb.clone();
    while &m < modulus {
        let m2 = (&m * &m).min(modulus.clone());
        let next = hensel_step(f, &g, &h, &s, &t, &m2);
        g = next.0;
        h = next.1;
        s = next.2;
        t = next.3;
        m = m2;
    }
    let mut out = multifactor_lift(&g, &factors[..k], p, modulus);
    out.extend(multifactor_lift(&h, &factors[k..], p, modulus));
    out
}

/// Exact division over the integers, or `None`.
fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return None;
    }
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (db..r.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let (c, rem) = r[i].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i - db + j] -= &c * bj;
        }
        q[i - db] = c;
    }
    if r.iter().all(|c| c.is_zero()) {
        Some(trim(q))
    } else {
        None
    }
}

fn primitive(a: ZPoly) -> ZPoly {
    let mut g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if a.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    if g.is_zero() {
        return a;
    }
    a.iter().map(|c| c / &g).collect()
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Smallest prime at least 13 that keeps the degree and squarefreeness.
pub(crate) fn choose_prime(f: &[BigInt]) -> u64 {
    let lc = f.last().expect("nonzero");
    (13u64..)
        .filter(|&p| is_prime(p))
        .find(|&p| {
            !(lc % BigInt::from(p)).is_zero() && modp::is_squarefree(&modp::from_bigints(f, p), p)
        })
        .expect("some prime works for a squarefree polynomial")
}

/// Coefficient bound for `lc(f) * g` with `g` any integer factor of `f`.
fn factor_coefficient_bound(f: &[BigInt]) -> BigInt {
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + 1u32;
    let n = f.len() - 1;
    (BigInt::one() << n) * norm * f.last().unwrap().abs()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Irreducible factors of a squarefree primitive polynomial with positive
/// leading coefficient and degree at least one.
pub(crate) fn factor_squarefree(f: &[BigInt]) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let p = choose_prime(f);
    let fp = modp::monic(&modp::from_bigints(f, p), p);
    let modular = modp::berlekamp(&fp, p);
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }
    let bound = factor_coefficient_bound(f) * 2u32;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
    }
    let mut lifted = multifactor_lift(f, &modular, p, &modulus);

    let mut result = Vec::new();
    let mut rest = f.to_vec();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = None;
        for subset in combinations(lifted.len(), size) {
            let lc = rest.last().unwrap().clone();
            let prod = subset
                .iter()
                .fold(vec![lc], |acc, &i| mul_mod(&acc, &lifted[i], &modulus));
            let candidate = primitive(symmetric(&prod, &modulus));
            // Cheap constant-term screen before the full division.
            if !candidate[0].is_zero() && !(&rest[0] % &candidate[0]).is_zero() {
                continue;
            }
            if let Some(q) = zdiv_exact(&rest, &candidate) {
                found = Some((subset, candidate, q));
                break;
            }
        }
        match found {
            Some((subset, candidate, q)) => {
                result.push(candidate);
                rest = q;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    result.push(primitive(rest));
    result
}
