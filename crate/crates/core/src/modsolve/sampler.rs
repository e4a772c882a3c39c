use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Which parameterization produced a sampler.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SamplerOrigin {
    UnitPivot,
    Smith,
    PrimeField,
}

/// A solution-group generator: every multiple `c * vector`, `0 <= c < order`,
/// is a distinct solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub vector: Vec<u64>,
    pub order: u64,
}

/// Parameterization of `{v : A v = 0 (mod n)}` as the direct sum
/// `{ sum_k c_k g_k : 0 <= c_k < ord_k }` of independent cyclic generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSampler {
    modulus: u64,
    n_vars: usize,
    generators: Vec<Generator>,
    origin: SamplerOrigin,
}

impl SolutionSampler {
    pub(crate) fn new(modulus: u64, n_vars: usize, generators: Vec<Generator>, origin: SamplerOrigin) -> Self {
        let generators = generators.into_iter().filter(|g| g.order > 1).collect();
        SolutionSampler { modulus, n_vars, generators, origin }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn origin(&self) -> SamplerOrigin {
        self.origin
    }

    /// Number of solutions, `prod_k ord_k`.
    pub fn solution_count(&self) -> BigUint {
        self.generators.iter().fold(BigUint::one(), |acc, g| acc * g.order)
    }

    pub fn combine(&self, coeffs: &[u64]) -> Vec<u64> {
        let n = self.modulus as u128;
        let mut v = vec![0u128; self.n_vars];
        for (g, &c) in self.generators.iter().zip(coeffs) {
            for (acc, &x) in v.iter_mut().zip(&g.vector) {
                *acc = (*acc + c as u128 * x as u128) % n;
            }
        }
        v.into_iter().map(|x| x as u64).collect()
    }

    /// Uniform draw from the solution set.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u64> {
        let coeffs: Vec<u64> = self.generators.iter().map(|g| rng.gen_range(0..g.order)).collect();
        self.combine(&coeffs)
    }

    /// Every solution, or `None` when there are more than `limit`.
    pub fn enumerate(&self, limit: usize) -> Option<BTreeSet<Vec<u64>>> {
        if self.solution_count() > BigUint::from(limit) {
            return None;
        }
        let mut out = BTreeSet::new();
        let mut coeffs = vec![0u64; self.generators.len()];
        loop {
            out.insert(self.combine(&coeffs));
            // odometer increment
            let mut k = 0;
            loop {
                if k == coeffs.len() {
                    return Some(out);
                }
                coeffs[k] += 1;
                if coeffs[k] < self.generators[k].order {
                    break;
                }
                coeffs[k] = 0;
                k += 1;
            }
        }
    }
}

/// Deterministic draw under `seed`.
pub fn sample_solution(sampler: &SolutionSampler, seed: u64) -> Vec<u64> {
    sampler.sample(&mut ChaCha8Rng::seed_from_u64(seed))
}
