//! Solvers for `A v = 0 (mod n)`.
//!
//! Four routes are available: unit-pivot elimination, Smith normal form,
//! prime-field elimination (only for prime `n`), and a randomized repair
//! heuristic. The first three yield a [`SolutionSampler`] over the full
//! solution set; the heuristic yields a single solution.

mod eliminate;
mod heuristic;
mod prime;
mod sampler;
mod snf;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use eliminate::{unit_pivot_eliminate, unit_pivot_eliminate_dense, Pivot, ReducedSystem, RowOp};
pub use heuristic::{heuristic_solve, HeuristicSolution};
pub use prime::{is_prime, prime_field_nullspace, prime_field_nullspace_dense};
pub use sampler::{sample_solution, Generator, SamplerOrigin, SolutionSampler};
pub use snf::{snf, snf_nullspace_mod, IntMatrix, SnfResult};

use crate::congruence::CongruenceSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("no +-1 pivot left among columns {cols:?}")]
    NoUnitPivot { cols: Vec<usize> },
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("heuristic did not converge within {sweeps} sweeps")]
    Timeout { sweeps: usize },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Eliminate,
    Snf,
    Heuristic,
    PrimeField,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [Strategy::Eliminate, Strategy::Snf, Strategy::Heuristic, Strategy::PrimeField];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Eliminate => "eliminate",
            Strategy::Snf => "snf",
            Strategy::Heuristic => "heuristic",
            Strategy::PrimeField => "prime-field",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Strategy::ALL.into_iter().find(|st| st.name() == s).ok_or_else(|| format!("unknown solver '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub strategy: Strategy,
    /// Retry with SNF when elimination runs out of unit pivots.
    pub snf_fallback: bool,
    pub max_sweeps: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { strategy: Strategy::Eliminate, snf_fallback: true, max_sweeps: 1000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solved {
    pub exponents: Vec<u64>,
    /// The route that produced the solution (differs from the requested one
    /// after an SNF fallback).
    pub used: Strategy,
    /// Elimination trace, when elimination ran to completion.
    pub trace: Option<String>,
}

/// Draws one solution under `seed` with the requested strategy.
pub fn solve(sys: &CongruenceSystem, opts: &SolveOptions, seed: u64) -> Result<Solved, SolveError> {
    let via_snf = || -> Result<Solved, SolveError> {
        let a = IntMatrix::from_rows(sys.n_vars(), &sys.to_dense());
        let sampler = snf_nullspace_mod(&snf(&a), sys.modulus())?;
        Ok(Solved { exponents: sample_solution(&sampler, seed), used: Strategy::Snf, trace: None })
    };
    match opts.strategy {
        Strategy::Eliminate => match unit_pivot_eliminate(sys) {
            Ok(red) => Ok(Solved {
                exponents: sample_solution(&red.sampler(), seed),
                used: Strategy::Eliminate,
                trace: Some(red.trace()),
            }),
            Err(SolveError::NoUnitPivot { .. }) if opts.snf_fallback => via_snf(),
            Err(e) => Err(e),
        },
        Strategy::Snf => via_snf(),
        Strategy::PrimeField => {
            let sampler = prime_field_nullspace(sys)?;
            Ok(Solved { exponents: sample_solution(&sampler, seed), used: Strategy::PrimeField, trace: None })
        }
        Strategy::Heuristic => {
            let sol = heuristic_solve(sys, seed, opts.max_sweeps)?;
            Ok(Solved { exponents: sol.exponents, used: Strategy::Heuristic, trace: None })
        }
    }
}
