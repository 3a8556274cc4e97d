use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{determinant, rat, Monomial, MultiPoly, Var};

use super::family::{verify_family, Component, FamilyJob, JobOptions};

/// Seeded source of valid jobs with reduced special fibers: linear and
/// smooth-conic components, total degree 2 to 4, `t`-degree at most 2,
/// divisors of degree at most 3 that often vanish on a component at `t = 0`.
/// Each component avoids the `t`-linear part of the family, so the total
/// space is regular along it.
pub struct JobGenerator {
    rng: ChaCha8Rng,
}

impl JobGenerator {
    pub fn new(seed: u64) -> JobGenerator {
        JobGenerator {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn coeff(&mut self) -> i64 {
        self.rng.gen_range(-3..=3)
    }

    /// Random form of degree `deg` in x, y, z; each monomial present with
    /// probability `density`.
    pub fn form(&mut self, deg: u16, density: f64) -> MultiPoly {
        loop {
            let mut f = MultiPoly::zero();
            for a in 0..=deg {
                for b in 0..=deg - a {
                    if self.rng.gen_bool(density) {
                        let mut m = Monomial::one();
                        m.0[Var::X.index()] = a;
                        m.0[Var::Y.index()] = b;
                        m.0[Var::Z.index()] = deg - a - b;
                        let c = self.coeff();
                        f.add_term(m, rat(c));
                    }
                }
            }
            if !f.is_zero() {
                return f;
            }
        }
    }

    fn component(&mut self, deg: u16) -> MultiPoly {
        loop {
            let g = self.form(deg, 0.7).primitive();
            if deg == 1 || smooth_conic(&g) {
                return g;
            }
        }
    }

    fn components(&mut self) -> Vec<MultiPoly> {
        let total = self.rng.gen_range(2..=4u16);
        let mut degs = Vec::new();
        let mut left = total;
        while left > 0 {
            let d = if left >= 2 && self.rng.gen_bool(0.4) { 2 } else { 1 };
            degs.push(d);
            left -= d;
        }
        loop {
            let gs: Vec<MultiPoly> = degs.iter().map(|&d| self.component(d)).collect();
            let coprime = (0..gs.len())
                .all(|i| (i + 1..gs.len()).all(|j| crate::poly::multivar_gcd(&gs[i], &gs[j]).is_constant()));
            if coprime {
                return gs;
            }
        }
    }

    /// A divisor of degree at most 3 whose `t = 0` part is, half of the time,
    /// a multiple of one of `gs`.
    pub fn divisor(&mut self, gs: &[MultiPoly]) -> MultiPoly {
        let e = self.rng.gen_range(1..=3u16);
        let fits: Vec<&MultiPoly> = gs.iter().filter(|g| g.degree_xyz() as u16 <= e).collect();
        let d0 = match fits.choose(&mut self.rng) {
            Some(g) if self.rng.gen_bool(0.5) => {
                let rest = e - g.degree_xyz() as u16;
                let s = if rest == 0 { MultiPoly::one() } else { self.form(rest, 0.6) };
                &s * *g
            }
            _ => self.form(e, 0.6),
        };
        let t = MultiPoly::var(Var::T);
        let mut d = d0 + &t * &self.form(e, 0.5);
        if self.rng.gen_bool(0.3) {
            d = d + &(&t * &t) * &self.form(e, 0.4);
        }
        d
    }

    /// A job that passes `verify_family`, with certificates left to search.
    pub fn job(&mut self) -> FamilyJob {
        loop {
            let gs = self.components();
            let f0 = gs.iter().fold(MultiPoly::one(), |acc, g| &acc * g);
            let n = f0.degree_xyz() as u16;
            let f1 = self.form(n, 0.6);
            if gs.iter().any(|g| g.divides(&f1)) {
                continue;
            }
            let t = MultiPoly::var(Var::T);
            let mut f = &f0 + &(&t * &f1);
            if self.rng.gen_bool(0.4) {
                f = f + &(&t * &t) * &self.form(n, 0.4);
            }
            let d = self.divisor(&gs);
            let comps = gs.into_iter().map(|g| Component { g, m: 1 }).collect();
            let mut job = FamilyJob::new(f, d, comps);
            job.options = JobOptions {
                run_oracle: true,
                assume_irreducible: true,
                search_certificates: true,
            };
            if verify_family(&job).is_valid() {
                return job;
            }
        }
    }

    /// A second divisor for `job` such that `d * d2` is still admissible.
    pub fn coprime_divisor(&mut self, job: &FamilyJob) -> MultiPoly {
        let gs: Vec<MultiPoly> = job.components.iter().map(|c| c.g.clone()).collect();
        loop {
            let d2 = self.divisor(&gs);
            let mut trial = job.clone();
            trial.divisor = &job.divisor * &d2;
            if verify_family(&trial).is_valid() {
                return d2;
            }
        }
    }
}

/// Nonsingular symmetric matrix, hence irreducible over the algebraic closure.
fn smooth_conic(g: &MultiPoly) -> bool {
    let vars = [Var::X, Var::Y, Var::Z];
    let m: Vec<Vec<MultiPoly>> = vars
        .iter()
        .map(|&a| vars.iter().map(|&b| g.partial_derivative(a).partial_derivative(b)).collect())
        .collect();
    determinant(&m).map(|d| !d.is_zero()).unwrap_or(false)
}

/// `count` jobs from `seed`.
pub fn random_jobs(seed: u64, count: usize) -> Vec<FamilyJob> {
    let mut generator = JobGenerator::new(seed);
    (0..count).map(|_| generator.job()).collect()
}
