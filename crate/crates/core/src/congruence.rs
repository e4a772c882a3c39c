//! Exponent congruences from 0/2-overlap orthogonality.
//!
//! With `gamma_{i,j} = alpha^{e_{i,j}}` and `delta_{i',j} = alpha^{f_{i',j}}`,
//! a row pair sharing exactly the columns `j < j'` is orthogonal iff
//! `e_{i,j} - e_{i,j'} + f_{i',j} - f_{i',j'} = 0 (mod q-1)`. Each such pair
//! contributes one row to `A v = 0 (mod q-1)`.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::binmat::{CssPair, OverlapTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("rows ({i}, {i_prime}) overlap in {size} columns; only 0 or 2 linearize (try CSA)")]
    OverlapTooLarge { i: usize, i_prime: usize, size: usize },
    #[error("rows ({i}, {i_prime}) overlap in an odd number ({size}) of columns")]
    OddOverlap { i: usize, i_prime: usize, size: usize },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("assignment has {got} entries, system has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// Entry of `H_C`, exponent `e_{i,j}`.
    Gamma,
    /// Entry of `H_D`, exponent `f_{i',j}`.
    Delta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub side: Side,
    pub row: usize,
    pub col: usize,
}

impl std::fmt::Display for Var {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self.side {
            Side::Gamma => 'e',
            Side::Delta => 'f',
        };
        write!(f, "{name}[{},{}]", self.row, self.col)
    }
}

/// One variable per nonzero: all of `H_C` in (row, col) order, then `H_D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarIndex {
    vars: Vec<Var>,
    lookup: HashMap<Var, usize>,
}

impl VarIndex {
    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn var(&self, idx: usize) -> Var {
        self.vars[idx]
    }

    pub fn index_of(&self, var: Var) -> Option<usize> {
        self.lookup.get(&var).copied()
    }

    pub fn gamma(&self, row: usize, col: usize) -> Option<usize> {
        self.index_of(Var { side: Side::Gamma, row, col })
    }

    pub fn delta(&self, row: usize, col: usize) -> Option<usize> {
        self.index_of(Var { side: Side::Delta, row, col })
    }
}

pub fn build_var_index(pair: &CssPair) -> VarIndex {
    let mut vars = Vec::with_capacity(pair.hc().nnz() + pair.hd().nnz());
    for (side, mat) in [(Side::Gamma, pair.hc()), (Side::Delta, pair.hd())] {
        for (row, support) in mat.row_supports().iter().enumerate() {
            vars.extend(support.iter().map(|&col| Var { side, row, col }));
        }
    }
    let lookup = vars.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    VarIndex { vars, lookup }
}

/// Originating row pair and shared columns `j < j'` of a congruence row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowLabel {
    pub i: usize,
    pub i_prime: usize,
    pub j: usize,
    pub j_prime: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceRow {
    pub label: RowLabel,
    /// `(variable, coefficient)` with coefficients `+1, -1, +1, -1`.
    pub terms: [(usize, i8); 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSystem {
    rows: Vec<CongruenceRow>,
    n_vars: usize,
    modulus: u64,
}

impl CongruenceSystem {
    /// A system from arbitrary sparse rows; used for synthetic instances.
    pub fn from_rows(rows: Vec<CongruenceRow>, n_vars: usize, modulus: u64) -> Result<Self, CongruenceError> {
        if modulus < 2 {
            return Err(CongruenceError::BadModulus(modulus));
        }
        debug_assert!(rows.iter().all(|r| r.terms.iter().all(|&(v, _)| v < n_vars)));
        Ok(CongruenceSystem { rows, n_vars, modulus })
    }

    pub fn rows(&self) -> &[CongruenceRow] {
        &self.rows
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn labels(&self) -> impl Iterator<Item = RowLabel> + '_ {
        self.rows.iter().map(|r| r.label)
    }

    /// Dense integer coefficient matrix `A`.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.n_vars];
                for &(v, c) in &r.terms {
                    row[v] += c as i64;
                }
                row
            })
            .collect()
    }

    /// `A v mod n`, one residue per row.
    pub fn residual(&self, v: &[u64]) -> Result<Vec<u64>, CongruenceError> {
        if v.len() != self.n_vars {
            return Err(CongruenceError::LengthMismatch { expected: self.n_vars, got: v.len() });
        }
        let n = self.modulus as i128;
        Ok(self
            .rows
            .iter()
            .map(|r| {
                let s: i128 = r.terms.iter().map(|&(k, c)| c as i128 * v[k] as i128).sum();
                s.rem_euclid(n) as u64
            })
            .collect())
    }

    pub fn is_satisfied(&self, v: &[u64]) -> bool {
        self.residual(v).map(|r| r.iter().all(|&x| x == 0)).unwrap_or(false)
    }

    /// One line per row:
    /// `(i,i',j,j') : +e[i,j] -e[i,j'] +f[i',j] -f[i',j'] (mod n)`.
    pub fn dump(&self, index: &VarIndex) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let l = r.label;
            let _ = write!(out, "({},{},{},{}) :", l.i, l.i_prime, l.j, l.j_prime);
            for &(v, c) in &r.terms {
                let sign = if c > 0 { '+' } else { '-' };
                let _ = write!(out, " {sign}{}", index.var(v));
            }
            let _ = writeln!(out, " (mod {})", self.modulus);
        }
        out
    }
}

pub fn build_system(pair: &CssPair, table: &OverlapTable, modulus: u64) -> Result<CongruenceSystem, CongruenceError> {
    if modulus < 2 {
        return Err(CongruenceError::BadModulus(modulus));
    }
    let index = build_var_index(pair);
    let mut rows = Vec::new();
    // BTreeMap iteration is already (i, i')-sorted
    for (&(i, i_prime), s) in table {
        match s.len() {
            0 => {}
            2 => {
                let (j, j_prime) = (s[0], s[1]);
                let var = |side, row, col| {
                    index.index_of(Var { side, row, col }).expect("overlap columns lie in both row supports")
                };
                rows.push(CongruenceRow {
                    label: RowLabel { i, i_prime, j, j_prime },
                    terms: [
                        (var(Side::Gamma, i, j), 1),
                        (var(Side::Gamma, i, j_prime), -1),
                        (var(Side::Delta, i_prime, j), 1),
                        (var(Side::Delta, i_prime, j_prime), -1),
                    ],
                });
            }
            size if size % 2 == 1 => return Err(CongruenceError::OddOverlap { i, i_prime, size }),
            size => return Err(CongruenceError::OverlapTooLarge { i, i_prime, size }),
        }
    }
    Ok(CongruenceSystem { rows, n_vars: index.len(), modulus })
}
