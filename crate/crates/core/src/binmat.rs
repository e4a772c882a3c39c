//! Sparse binary matrices, CSS pairs, row-overlap sets and F_2 kernels.

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("column index {col} out of range for {cols} columns (row {row})")]
    ColumnOutOfRange { row: usize, col: usize, cols: usize },
    #[error("row {row} support is not strictly increasing")]
    UnsortedRow { row: usize },
    #[error("expected {expected} rows of support, got {got}")]
    RowCount { expected: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Binary matrix stored as the sorted column support of each row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    row_support: Vec<Vec<usize>>,
}

impl BinaryMatrix {
    pub fn new(rows: usize, cols: usize, row_support: Vec<Vec<usize>>) -> Result<Self, MatrixError> {
        if row_support.len() != rows {
            return Err(MatrixError::RowCount { expected: rows, got: row_support.len() });
        }
        for (row, support) in row_support.iter().enumerate() {
            if support.windows(2).any(|w| w[0] >= w[1]) {
                return Err(MatrixError::UnsortedRow { row });
            }
            if let Some(&col) = support.last().filter(|&&c| c >= cols) {
                return Err(MatrixError::ColumnOutOfRange { row, col, cols });
            }
        }
        Ok(BinaryMatrix { rows, cols, row_support })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix { rows, cols, row_support: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        BinaryMatrix { rows: n, cols: n, row_support: (0..n).map(|i| vec![i]).collect() }
    }

    /// Builds from dense rows; any nonzero byte counts as 1.
    pub fn from_dense<R: AsRef<[u8]>>(cols: usize, dense: &[R]) -> Result<Self, MatrixError> {
        let mut support = Vec::with_capacity(dense.len());
        for (i, row) in dense.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(MatrixError::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            support.push(row.iter().enumerate().filter(|(_, &b)| b != 0).map(|(j, _)| j).collect());
        }
        BinaryMatrix::new(dense.len(), cols, support)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.row_support[i]
    }

    pub fn row_supports(&self) -> &[Vec<usize>] {
        &self.row_support
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.row_support[i].binary_search(&j).is_ok()
    }

    pub fn nnz(&self) -> usize {
        self.row_support.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        self.row_support
            .iter()
            .map(|s| {
                let mut row = vec![0u8; self.cols];
                s.iter().for_each(|&j| row[j] = 1);
                row
            })
            .collect()
    }

    pub fn col_supports(&self) -> Vec<Vec<usize>> {
        let mut cols = vec![Vec::new(); self.cols];
        for (i, s) in self.row_support.iter().enumerate() {
            for &j in s {
                cols[j].push(i);
            }
        }
        cols
    }

    pub fn transpose(&self) -> BinaryMatrix {
        BinaryMatrix { rows: self.cols, cols: self.rows, row_support: self.col_supports() }
    }

    /// Kronecker product: row `(i, k)` maps to `i * other.rows + k`, column
    /// `(j, l)` to `j * other.cols + l`.
    pub fn kron(&self, other: &BinaryMatrix) -> BinaryMatrix {
        let mut support = Vec::with_capacity(self.rows * other.rows);
        for a in &self.row_support {
            for b in &other.row_support {
                support.push(a.iter().flat_map(|&j| b.iter().map(move |&l| j * other.cols + l)).collect());
            }
        }
        BinaryMatrix { rows: self.rows * other.rows, cols: self.cols * other.cols, row_support: support }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &BinaryMatrix) -> Result<BinaryMatrix, MatrixError> {
        if self.rows != other.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "hstack of {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        let support = self
            .row_support
            .iter()
            .zip(&other.row_support)
            .map(|(a, b)| a.iter().copied().chain(b.iter().map(|&j| j + self.cols)).collect())
            .collect();
        Ok(BinaryMatrix { rows: self.rows, cols: self.cols + other.cols, row_support: support })
    }

    /// `M x` over F_2.
    pub fn mul_vec_f2(&self, x: &[u8]) -> Result<Vec<u8>, MatrixError> {
        if x.len() != self.cols {
            return Err(MatrixError::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok(self.row_support.iter().map(|s| s.iter().fold(0u8, |acc, &j| acc ^ (x[j] & 1))).collect())
    }

    pub fn rank_f2(&self) -> usize {
        self.cols - nullspace_f2(self).len()
    }
}

/// Sorted-merge intersection of two strictly increasing lists.
fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut k) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && k < b.len() {
        match a[i].cmp(&b[k]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => k += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                k += 1;
            }
        }
    }
    out
}

/// A pair `(H_C, H_D)` sharing the column count `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CssPair {
    hc: BinaryMatrix,
    hd: BinaryMatrix,
}

impl CssPair {
    pub fn new(hc: BinaryMatrix, hd: BinaryMatrix) -> Result<Self, MatrixError> {
        if hc.cols != hd.cols {
            return Err(MatrixError::DimensionMismatch(format!("H_C has {} columns, H_D has {}", hc.cols, hd.cols)));
        }
        Ok(CssPair { hc, hd })
    }

    pub fn hc(&self) -> &BinaryMatrix {
        &self.hc
    }

    pub fn hd(&self) -> &BinaryMatrix {
        &self.hd
    }

    pub fn n(&self) -> usize {
        self.hc.cols
    }

    /// The same pair with the roles of the two matrices exchanged.
    pub fn swapped(&self) -> CssPair {
        CssPair { hc: self.hd.clone(), hd: self.hc.clone() }
    }

    pub fn into_parts(self) -> (BinaryMatrix, BinaryMatrix) {
        (self.hc, self.hd)
    }
}

/// Nonempty intersections `S_{i,i'}` of row `i` of `H_C` with row `i'` of
/// `H_D`, keyed by `(i, i')`.
pub type OverlapTable = BTreeMap<(usize, usize), Vec<usize>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddOverlap {
    pub i: usize,
    pub i_prime: usize,
    pub size: usize,
}

/// Every odd row-pair overlap; empty means `H_C H_D^T = 0` over F_2.
pub fn check_orthogonal_f2(pair: &CssPair) -> Vec<OddOverlap> {
    overlap_sets(pair)
        .into_iter()
        .filter(|(_, s)| s.len() % 2 == 1)
        .map(|((i, i_prime), s)| OddOverlap { i, i_prime, size: s.len() })
        .collect()
}

pub fn overlap_sets(pair: &CssPair) -> OverlapTable {
    let mut table = OverlapTable::new();
    for (i, a) in pair.hc.row_support.iter().enumerate() {
        for (k, b) in pair.hd.row_support.iter().enumerate() {
            let s = intersect(a, b);
            if !s.is_empty() {
                table.insert((i, k), s);
            }
        }
    }
    table
}

/// Overlap size -> number of stored row pairs with that size.
pub fn overlap_histogram(table: &OverlapTable) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for s in table.values() {
        *hist.entry(s.len()).or_insert(0) += 1;
    }
    hist
}

/// Basis of `{x : M x = 0}` over F_2, one vector per non-pivot column.
pub fn nullspace_f2(mat: &BinaryMatrix) -> Vec<Vec<u8>> {
    let cols = mat.cols;
    let mut rows: Vec<Vec<u8>> = mat.to_dense();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] == 1) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] == 1 {
                let pivot_row = rows[r].clone();
                rows[i].iter_mut().zip(&pivot_row).for_each(|(x, &y)| *x ^= y);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut is_pivot = vec![false; cols];
    pivots.iter().for_each(|&c| is_pivot[c] = true);
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0u8; cols];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = rows[row][f];
            }
            v
        })
        .collect()
}
