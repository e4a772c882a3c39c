//! Fraction-free elimination over `Z/nZ` with unit pivots.
//!
//! Only two operations are ever applied: swapping rows, and adding a signed
//! number of copies of the pivot row to another row. Because every pivot is
//! `+1` or `-1`, the number of copies needed to clear an entry is read off
//! directly and no residue is ever inverted.

use std::fmt;

use super::sampler::{Generator, SamplerOrigin, SolutionSampler};
use super::SolveError;
use crate::congruence::CongruenceSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowOp {
    Swap {
        a: usize,
        b: usize,
    },
    /// `row[target] += times * row[source]` (repeated addition when
    /// `times > 0`, repeated subtraction when `times < 0`).
    AddMultiple {
        target: usize,
        source: usize,
        times: i64,
    },
}

impl fmt::Display for RowOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RowOp::Swap { a, b } => write!(f, "swap r{a} r{b}"),
            RowOp::AddMultiple { target, source, times } if times < 0 => {
                write!(f, "r{target} -= {}*r{source}", -times)
            }
            RowOp::AddMultiple { target, source, times } => write!(f, "r{target} += {times}*r{source}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pivot {
    pub row: usize,
    pub col: usize,
    /// `+1` or `-1`.
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedSystem {
    rows: Vec<Vec<u64>>,
    pivots: Vec<Pivot>,
    free_cols: Vec<usize>,
    modulus: u64,
    ops: Vec<RowOp>,
}

impl ReducedSystem {
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[Pivot] {
        &self.pivots
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.pivots.iter().map(|p| p.col).collect()
    }

    pub fn free_cols(&self) -> &[usize] {
        &self.free_cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Every row operation in the order applied.
    pub fn ops(&self) -> &[RowOp] {
        &self.ops
    }

    pub fn trace(&self) -> String {
        self.ops.iter().map(|op| format!("{op}\n")).collect()
    }

    /// Back-substitution: each free column is an order-`n` generator, with
    /// pivot variables `v_p = -sign * sum_f a_{p,f} v_f`.
    pub fn sampler(&self) -> SolutionSampler {
        let n = self.modulus;
        let n_vars = self.free_cols.len() + self.pivots.len();
        let generators = self
            .free_cols
            .iter()
            .map(|&f| {
                let mut vector = vec![0u64; n_vars];
                vector[f] = 1;
                for p in &self.pivots {
                    let a = self.rows[p.row][f];
                    vector[p.col] = if p.sign > 0 { (n - a) % n } else { a };
                }
                Generator { vector, order: n }
            })
            .collect();
        SolutionSampler::new(n, n_vars, generators, SamplerOrigin::UnitPivot)
    }
}

pub fn unit_pivot_eliminate(sys: &CongruenceSystem) -> Result<ReducedSystem, SolveError> {
    unit_pivot_eliminate_dense(&sys.to_dense(), sys.n_vars(), sys.modulus())
}

/// Elimination on a dense integer matrix with `n_cols` columns, modulo `n`.
pub fn unit_pivot_eliminate_dense(a: &[Vec<i64>], n_cols: usize, n: u64) -> Result<ReducedSystem, SolveError> {
    if n < 2 {
        return Err(SolveError::BadModulus(n));
    }
    let mut rows: Vec<Vec<u64>> = a
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n_cols, "ragged coefficient matrix");
            r.iter().map(|&x| x.rem_euclid(n as i64) as u64).collect()
        })
        .collect();
    let is_unit = |x: u64| x == 1 || x == n - 1;
    let mut ops = Vec::new();
    let mut pivots: Vec<Pivot> = Vec::new();
    let mut is_pivot = vec![false; n_cols];

    // (1)-(2): pick a +-1 pivot, swap it up, clear below
    loop {
        let r = pivots.len();
        let found = (0..n_cols)
            .filter(|&c| !is_pivot[c])
            .find_map(|c| (r..rows.len()).find(|&i| is_unit(rows[i][c])).map(|i| (i, c)));
        let Some((pi, c)) = found else {
            let stuck: Vec<usize> =
                (0..n_cols).filter(|&c| !is_pivot[c] && rows[r..].iter().any(|row| row[c] != 0)).collect();
            if stuck.is_empty() {
                break;
            }
            return Err(SolveError::NoUnitPivot { cols: stuck });
        };
        if pi != r {
            rows.swap(pi, r);
            ops.push(RowOp::Swap { a: r, b: pi });
        }
        let sign = if rows[r][c] == 1 { 1 } else { -1 };
        for i in r + 1..rows.len() {
            clear_entry(&mut rows, &mut ops, i, r, c, sign, n);
        }
        is_pivot[c] = true;
        pivots.push(Pivot { row: r, col: c, sign });
    }

    // (3): clear above each pivot, last pivot first
    for p in pivots.iter().rev() {
        for i in 0..p.row {
            clear_entry(&mut rows, &mut ops, i, p.row, p.col, p.sign, n);
        }
    }

    // (4)
    let free_cols = (0..n_cols).filter(|&c| !is_pivot[c]).collect();
    rows.truncate(pivots.len());
    Ok(ReducedSystem { rows, pivots, free_cols, modulus: n, ops })
}

fn clear_entry(
    rows: &mut [Vec<u64>],
    ops: &mut Vec<RowOp>,
    target: usize,
    source: usize,
    col: usize,
    sign: i8,
    n: u64,
) {
    let a = rows[target][col];
    if a == 0 {
        return;
    }
    // want a + t * sign = 0 (mod n), i.e. t = -a * sign
    let t = if sign > 0 { n - a } else { a };
    let times = if t > n / 2 { t as i64 - n as i64 } else { t as i64 };
    let mult = times.rem_euclid(n as i64) as u128;
    let (src, dst) = if source < target {
        let (lo, hi) = rows.split_at_mut(target);
        (&lo[source], &mut hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(source);
        (&hi[0], &mut lo[target])
    };
    for (d, &s) in dst.iter_mut().zip(src.iter()) {
        *d = ((*d as u128 + mult * s as u128) % n as u128) as u64;
    }
    debug_assert_eq!(dst[col], 0);
    ops.push(RowOp::AddMultiple { target, source, times });
}
