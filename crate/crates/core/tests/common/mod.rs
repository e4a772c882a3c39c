//! Reference implementations used as oracles by the integration tests.
//! Deliberately naive and independent of the library internals.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub type Dense = Vec<Vec<u8>>;

pub fn small_hgp_seeds() -> (Dense, Dense) {
    (vec![vec![1, 1, 1], vec![0, 1, 0]], vec![vec![1, 0, 0], vec![1, 1, 1]])
}

/// Hypergraph product by explicit index formulas.
/// Rows of H_X are (a, b) in r1 x n2, rows of H_Z are (j, c) in n1 x r2.
/// Columns are (j, b) in n1 x n2 followed by (a, c) in r1 x r2.
pub fn hgp_by_index(h1: &Dense, n1: usize, h2: &Dense, n2: usize) -> (Dense, Dense) {
    let (r1, r2) = (h1.len(), h2.len());
    let n = n1 * n2 + r1 * r2;
    let mut hx = vec![vec![0u8; n]; r1 * n2];
    for a in 0..r1 {
        for b in 0..n2 {
            let row = &mut hx[a * n2 + b];
            for j in 0..n1 {
                row[j * n2 + b] = h1[a][j];
            }
            for c in 0..r2 {
                row[n1 * n2 + a * r2 + c] = h2[c][b];
            }
        }
    }
    let mut hz = vec![vec![0u8; n]; n1 * r2];
    for j in 0..n1 {
        for c in 0..r2 {
            let row = &mut hz[j * r2 + c];
            for b in 0..n2 {
                row[j * n2 + b] = h2[c][b];
            }
            for a in 0..r1 {
                row[n1 * n2 + a * r2 + c] = h1[a][j];
            }
        }
    }
    (hx, hz)
}

/// `A B^T` over the integers (before reduction).
pub fn overlap_counts(a: &Dense, b: &Dense) -> Vec<Vec<usize>> {
    a.iter()
        .map(|ra| b.iter().map(|rb| ra.iter().zip(rb).filter(|(&x, &y)| x == 1 && y == 1).count()).collect())
        .collect()
}

pub fn orthogonal_f2(a: &Dense, b: &Dense) -> bool {
    overlap_counts(a, b).iter().flatten().all(|c| c % 2 == 0)
}

/// Columns where row `i` of `a` and row `k` of `b` are both one.
pub fn overlap(a: &Dense, b: &Dense, i: usize, k: usize) -> Vec<usize> {
    (0..a[i].len()).filter(|&j| a[i][j] == 1 && b[k][j] == 1).collect()
}

pub fn random_dense<R: Rng>(rng: &mut R, rows: usize, cols: usize, density: f64) -> Dense {
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_bool(density) as u8).collect()).collect()
}

pub fn mul_f2(a: &Dense, x: &[u8]) -> Vec<u8> {
    a.iter().map(|r| r.iter().zip(x).fold(0, |acc, (&p, &q)| acc ^ (p & q))).collect()
}

pub fn rank_f2(a: &Dense) -> usize {
    let mut rows = a.clone();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        if let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] == 1) {
            rows.swap(rank, p);
            let pr = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && row[c] == 1 {
                    row.iter_mut().zip(&pr).for_each(|(x, y)| *x ^= y);
                }
            }
            rank += 1;
        }
    }
    rank
}

/// Shift-and-add multiplication modulo the polynomial bitmask `poly` of degree `m`.
pub fn gf_mul(mut a: u32, mut b: u32, poly: u32, m: u32) -> u32 {
    let mut acc = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> m & 1 == 1 {
            a ^= poly;
        }
    }
    acc
}

/// `x^k` by repeated multiplication.
pub fn gf_xpow(k: u64, poly: u32, m: u32) -> u32 {
    let order = (1u64 << m) - 1;
    (0..k % order).fold(1, |acc, _| gf_mul(acc, 2, poly, m))
}

/// Dense field matrix as raw polynomial-basis values.
pub fn gf_inner(a: &[u32], b: &[u32], poly: u32, m: u32) -> u32 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| acc ^ gf_mul(x, y, poly, m))
}

pub fn gf_orthogonal(a: &[Vec<u32>], b: &[Vec<u32>], poly: u32, m: u32) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for (i, ra) in a.iter().enumerate() {
        for (k, rb) in b.iter().enumerate() {
            if gf_inner(ra, rb, poly, m) != 0 {
                bad.push((i, k));
            }
        }
    }
    bad
}

pub fn same_support(f: &[Vec<u32>], b: &Dense) -> bool {
    f.len() == b.len()
        && f.iter()
            .zip(b)
            .all(|(rf, rb)| rf.len() == rb.len() && rf.iter().zip(rb).all(|(&x, &y)| (x != 0) == (y == 1)))
}

pub fn big_matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|ra| (0..cols).map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &ra[k] * &b[k][j])).collect())
        .collect()
}

/// Fraction-free (Bareiss) determinant.
pub fn bareiss_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn abs_is_one(x: &BigInt) -> bool {
    x.abs().is_one()
}

/// Rank over Z/pZ, `p` prime.
pub fn rank_mod_p(a: &[Vec<i64>], p: i64) -> usize {
    let mut rows: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = rows.first().map_or(0, |r| r.len());
    let inv = |x: i64| (1..p).find(|y| x * y % p == 1).unwrap();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let s = inv(rows[rank][c]);
        rows[rank].iter_mut().for_each(|x| *x = *x * s % p);
        let pr = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let f = row[c];
                row.iter_mut().zip(&pr).for_each(|(x, y)| *x = (*x - f * y).rem_euclid(p));
            }
        }
        rank += 1;
    }
    rank
}
