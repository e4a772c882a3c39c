//! Randomized local repair for sparse congruence systems.
//!
//! Exponents start uniformly random. Each update picks an unsatisfied row
//! uniformly, then one of its variables uniformly, and sets that variable to
//! the unique value satisfying the row. Other rows sharing the variable may
//! break in the process. There is no convergence guarantee.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SolveError;
use crate::congruence::CongruenceSystem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeuristicSolution {
    pub exponents: Vec<u64>,
    /// Single-variable repairs performed.
    pub updates: usize,
}

/// Unsatisfied-row set with O(1) insert, remove and uniform pick.
struct RowSet {
    items: Vec<usize>,
    pos: Vec<Option<usize>>,
}

impl RowSet {
    fn new(n: usize) -> Self {
        RowSet { items: Vec::new(), pos: vec![None; n] }
    }

    fn set(&mut self, row: usize, member: bool) {
        match (member, self.pos[row]) {
            (true, None) => {
                self.pos[row] = Some(self.items.len());
                self.items.push(row);
            }
            (false, Some(p)) => {
                self.items.swap_remove(p);
                if let Some(&moved) = self.items.get(p) {
                    self.pos[moved] = Some(p);
                }
                self.pos[row] = None;
            }
            _ => {}
        }
    }
}

/// Gives up after `max_sweeps` sweeps of `max(rows, 1)` updates each.
pub fn heuristic_solve(sys: &CongruenceSystem, seed: u64, max_sweeps: usize) -> Result<HeuristicSolution, SolveError> {
    let n = sys.modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<u64> = (0..sys.n_vars()).map(|_| rng.gen_range(0..n)).collect();

    // merged per-row coefficients, and the rows each variable touches
    let rows: Vec<Vec<(usize, u64)>> = sys
        .rows()
        .iter()
        .map(|r| {
            let mut terms: Vec<(usize, u64)> = Vec::new();
            for &(k, c) in &r.terms {
                let c = (c as i64).rem_euclid(n as i64) as u64;
                match terms.iter_mut().find(|(j, _)| *j == k) {
                    Some(t) => t.1 = (t.1 + c) % n,
                    None => terms.push((k, c)),
                }
            }
            terms.retain(|&(_, c)| c != 0);
            terms
        })
        .collect();
    let mut var_rows: Vec<Vec<(usize, u64)>> = vec![Vec::new(); sys.n_vars()];
    for (r, terms) in rows.iter().enumerate() {
        for &(k, c) in terms {
            var_rows[k].push((r, c));
        }
    }
    let residual = |terms: &[(usize, u64)], v: &[u64]| -> u64 {
        terms.iter().fold(0u128, |acc, &(k, c)| (acc + c as u128 * v[k] as u128) % n as u128) as u64
    };
    let mut res: Vec<u64> = rows.iter().map(|t| residual(t, &v)).collect();
    let mut unsat = RowSet::new(rows.len());
    for (r, &x) in res.iter().enumerate() {
        unsat.set(r, x != 0);
    }

    let budget = max_sweeps.saturating_mul(rows.len().max(1));
    let mut updates = 0;
    while let Some(&r) = unsat.items.choose(&mut rng) {
        if updates == budget {
            return Err(SolveError::Timeout { sweeps: max_sweeps });
        }
        // only unit coefficients can be solved for without division
        let candidates: Vec<(usize, u64)> = rows[r].iter().copied().filter(|&(_, c)| c == 1 || c == n - 1).collect();
        let Some(&(k, c)) = candidates.choose(&mut rng) else {
            return Err(SolveError::NoUnitPivot { cols: rows[r].iter().map(|t| t.0).collect() });
        };
        // c*v_k + rest = 0  =>  v_k = -c * rest  (c = c^{-1} for c = +-1)
        let rest = (res[r] + n - (c as u128 * v[k] as u128 % n as u128) as u64) % n;
        let new = if c == 1 { (n - rest) % n } else { rest };
        let delta = (new + n - v[k]) % n;
        v[k] = new;
        for &(row, cr) in &var_rows[k] {
            res[row] = ((res[row] as u128 + cr as u128 * delta as u128) % n as u128) as u64;
            unsat.set(row, res[row] != 0);
        }
        updates += 1;
    }
    Ok(HeuristicSolution { exponents: v, updates })
}
