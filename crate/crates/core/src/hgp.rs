//! Hypergraph-product CSS pairs from two classical seeds.
//!
//! ```text
//! H_X = ( H_1 ⊗ I_{n2} | I_{r1} ⊗ H_2^T )      (r1*n2) x N
//! H_Z = ( I_{n1} ⊗ H_2 | H_1^T ⊗ I_{r2} )      (n1*r2) x N
//! N   = n1*n2 + r1*r2
//! ```
//!
//! Left-block column `(j1, k)` is `j1*n2 + k`, right-block column `(i1, i2)`
//! is `n1*n2 + i1*r2 + i2`, `H_X` row `(i1, k)` is `i1*n2 + k` and `H_Z` row
//! `(j1, i2)` is `j1*r2 + i2`.

use thiserror::Error;

use crate::binmat::{BinaryMatrix, CssPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HgpError {
    #[error("seed matrix {which} is empty ({rows}x{cols})")]
    EmptySeed { which: &'static str, rows: usize, cols: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HgpShape {
    pub r1: usize,
    pub n1: usize,
    pub r2: usize,
    pub n2: usize,
}

impl HgpShape {
    pub fn of(h1: &BinaryMatrix, h2: &BinaryMatrix) -> Self {
        HgpShape { r1: h1.rows(), n1: h1.cols(), r2: h2.rows(), n2: h2.cols() }
    }

    pub fn n(&self) -> usize {
        self.n1 * self.n2 + self.r1 * self.r2
    }

    pub fn rows_x(&self) -> usize {
        self.r1 * self.n2
    }

    pub fn rows_z(&self) -> usize {
        self.n1 * self.r2
    }
}

pub fn hgp(h1: &BinaryMatrix, h2: &BinaryMatrix) -> Result<CssPair, HgpError> {
    for (which, h) in [("H_1", h1), ("H_2", h2)] {
        if h.rows() == 0 || h.cols() == 0 {
            return Err(HgpError::EmptySeed { which, rows: h.rows(), cols: h.cols() });
        }
    }
    let shape = HgpShape::of(h1, h2);
    let ident = BinaryMatrix::identity;

    let hx =
        h1.kron(&ident(shape.n2)).hstack(&ident(shape.r1).kron(&h2.transpose())).expect("both blocks have r1*n2 rows");
    let hz =
        ident(shape.n1).kron(h2).hstack(&h1.transpose().kron(&ident(shape.r2))).expect("both blocks have n1*r2 rows");
    Ok(CssPair::new(hx, hz).expect("both sides have N columns"))
}
