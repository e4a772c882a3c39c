//! Nullspace over the prime field `Z/pZ` by ordinary Gauss-Jordan
//! elimination. Applies when `q - 1` is a Mersenne prime (q = 4, 8, 32, 128,
//! 8192, ...).

use super::sampler::{Generator, SamplerOrigin, SolutionSampler};
use super::SolveError;
use crate::congruence::CongruenceSystem;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

pub fn prime_field_nullspace(sys: &CongruenceSystem) -> Result<SolutionSampler, SolveError> {
    prime_field_nullspace_dense(&sys.to_dense(), sys.n_vars(), sys.modulus())
}

pub fn prime_field_nullspace_dense(a: &[Vec<i64>], n_cols: usize, p: u64) -> Result<SolutionSampler, SolveError> {
    if !is_prime(p) {
        return Err(SolveError::NotPrime(p));
    }
    let mut rows: Vec<Vec<u64>> =
        a.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()).collect();
    let mut pivots: Vec<usize> = Vec::new();
    for c in 0..n_cols {
        let r = pivots.len();
        let Some(pi) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pi);
        let inv = pow_mod(rows[r][c], p - 2, p);
        for x in rows[r].iter_mut() {
            *x = (*x as u128 * inv as u128 % p as u128) as u64;
        }
        for i in 0..rows.len() {
            let f = rows[i][c];
            if i == r || f == 0 {
                continue;
            }
            let pivot_row = rows[r].clone();
            for (x, &y) in rows[i].iter_mut().zip(&pivot_row) {
                let s = f as u128 * y as u128 % p as u128;
                *x = ((*x as u128 + p as u128 - s) % p as u128) as u64;
            }
        }
        pivots.push(c);
    }
    let mut is_pivot = vec![false; n_cols];
    pivots.iter().for_each(|&c| is_pivot[c] = true);
    let basis = (0..n_cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut vector = vec![0u64; n_cols];
            vector[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                vector[pc] = (p - rows[r][f]) % p;
            }
            Generator { vector, order: p }
        })
        .collect();
    Ok(SolutionSampler::new(p, n_cols, basis, SamplerOrigin::PrimeField))
}
