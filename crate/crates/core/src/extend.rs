//! Non-binary matrices from exponents, verification over GF(2^m), and the
//! canonical separable assignment (CSA).
//!
//! CSA sets `gamma_{i,j} = alpha^{A_i + C_j}` and
//! `delta_{i',j} = alpha^{B_{i'} - C_j}`. Every product
//! `gamma_{i,j} delta_{i',j} = alpha^{A_i + B_{i'}}` is the same across the
//! shared columns, so an even number of them cancels in characteristic 2.
//! The same separability means every binary codeword `x` of `H_C` lifts to
//! `xi_j = alpha^{-C_j} x_j` in the kernel of `H_Gamma`.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::binmat::{check_orthogonal_f2, BinaryMatrix, CssPair};
use crate::congruence::{Side, VarIndex};
use crate::field::{FieldElement, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendError {
    #[error("exponent assignment does not match the support: {0}")]
    DomainMismatch(String),
    #[error("matrices are over different fields ({0:?} vs {1:?})")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("exponent modulus {got} does not match q - 1 = {expected}")]
    ModulusMismatch { expected: u64, got: u64 },
    #[error("rows ({i}, {i_prime}) overlap in an odd number of columns")]
    OddOverlap { i: usize, i_prime: usize },
    #[error("vector is not in the binary kernel (syndrome nonzero at row {row})")]
    NotACodeword { row: usize },
    #[error("CSA parameters do not cover the pair: {0}")]
    ParamShape(String),
}

/// Exponents `e_{i,j}` (for `H_C`) and `f_{i',j}` (for `H_D`) modulo `q - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentAssignment {
    pub modulus: u64,
    pub e: BTreeMap<(usize, usize), u64>,
    pub f: BTreeMap<(usize, usize), u64>,
}

impl ExponentAssignment {
    pub fn from_vector(index: &VarIndex, v: &[u64], modulus: u64) -> Result<Self, ExtendError> {
        if v.len() != index.len() {
            return Err(ExtendError::DomainMismatch(format!("{} exponents for {} variables", v.len(), index.len())));
        }
        let mut asg = ExponentAssignment { modulus, e: BTreeMap::new(), f: BTreeMap::new() };
        for (var, &x) in index.vars().iter().zip(v) {
            let map = match var.side {
                Side::Gamma => &mut asg.e,
                Side::Delta => &mut asg.f,
            };
            map.insert((var.row, var.col), x % modulus);
        }
        Ok(asg)
    }

    pub fn to_vector(&self, index: &VarIndex) -> Result<Vec<u64>, ExtendError> {
        index
            .vars()
            .iter()
            .map(|var| {
                let map = match var.side {
                    Side::Gamma => &self.e,
                    Side::Delta => &self.f,
                };
                map.get(&(var.row, var.col))
                    .copied()
                    .ok_or_else(|| ExtendError::DomainMismatch(format!("no exponent for {var}")))
            })
            .collect()
    }

    /// All exponents zero on the pair's support.
    pub fn zeros(pair: &CssPair, modulus: u64) -> Self {
        let support = |m: &BinaryMatrix| {
            m.row_supports().iter().enumerate().flat_map(|(i, s)| s.iter().map(move |&j| ((i, j), 0))).collect()
        };
        ExponentAssignment { modulus, e: support(pair.hc()), f: support(pair.hd()) }
    }
}

/// Matrix over GF(2^m), sparse by row; only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: Arc<FieldSpec>,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, FieldElement)>>,
}

impl FieldMatrix {
    /// Zero entries are dropped; column order within a row is normalized.
    pub fn new(
        field: Arc<FieldSpec>,
        rows: usize,
        cols: usize,
        entries: Vec<Vec<(usize, FieldElement)>>,
    ) -> Result<Self, ExtendError> {
        if entries.len() != rows {
            return Err(ExtendError::DimensionMismatch(format!("{} rows given, {rows} declared", entries.len())));
        }
        let mut clean = Vec::with_capacity(rows);
        for (i, mut row) in entries.into_iter().enumerate() {
            row.retain(|&(_, x)| !x.is_zero());
            row.sort_by_key(|&(j, _)| j);
            if row.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(ExtendError::DimensionMismatch(format!("duplicate column in row {i}")));
            }
            if let Some(&(j, x)) = row.iter().find(|&&(j, x)| j >= cols || x.value() as u32 >= field.order()) {
                return Err(ExtendError::DimensionMismatch(format!(
                    "entry {x} at ({i}, {j}) outside {rows}x{cols} over GF(2^{})",
                    field.degree()
                )));
            }
            clean.push(row);
        }
        Ok(FieldMatrix { field, rows, cols, entries: clean })
    }

    pub fn from_dense(field: Arc<FieldSpec>, cols: usize, dense: &[Vec<FieldElement>]) -> Result<Self, ExtendError> {
        let entries = dense
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if r.len() != cols {
                    return Err(ExtendError::DimensionMismatch(format!("row {i} has {} entries", r.len())));
                }
                Ok(r.iter().copied().enumerate().collect())
            })
            .collect::<Result<Vec<_>, _>>()?;
        FieldMatrix::new(field, dense.len(), cols, entries)
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, FieldElement)] {
        &self.entries[i]
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i]
            .binary_search_by_key(&j, |&(c, _)| c)
            .map(|k| self.entries[i][k].1)
            .unwrap_or(FieldElement::ZERO)
    }

    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        let row = &mut self.entries[i];
        match row.binary_search_by_key(&j, |&(c, _)| c) {
            Ok(k) if x.is_zero() => {
                row.remove(k);
            }
            Ok(k) => row[k].1 = x,
            Err(k) if !x.is_zero() => row.insert(k, (j, x)),
            Err(_) => {}
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j)).collect()).collect()
    }

    /// Binary matrix of the nonzero pattern.
    pub fn support(&self) -> BinaryMatrix {
        let s = self.entries.iter().map(|r| r.iter().map(|&(j, _)| j).collect()).collect();
        BinaryMatrix::new(self.rows, self.cols, s).expect("entries are sorted and in range")
    }

    /// `M x` over the field.
    pub fn mul_vec(&self, x: &[FieldElement]) -> Result<Vec<FieldElement>, ExtendError> {
        if x.len() != self.cols {
            return Err(ExtendError::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok(self.entries.iter().map(|r| self.field.dot(r.iter().map(|&(j, a)| (a, x[j])))).collect())
    }
}

fn check_modulus(field: &FieldSpec, modulus: u64) -> Result<(), ExtendError> {
    let expected = field.group_order() as u64;
    if modulus != expected {
        return Err(ExtendError::ModulusMismatch { expected, got: modulus });
    }
    Ok(())
}

/// `gamma_{i,j} = alpha^{e_{i,j}}` on the support of `H_C`, likewise for `H_D`.
pub fn assemble(
    pair: &CssPair,
    asg: &ExponentAssignment,
    field: &Arc<FieldSpec>,
) -> Result<(FieldMatrix, FieldMatrix), ExtendError> {
    check_modulus(field, asg.modulus)?;
    let build = |mat: &BinaryMatrix, map: &BTreeMap<(usize, usize), u64>, name: &str| {
        let count = mat.nnz();
        if map.len() != count {
            return Err(ExtendError::DomainMismatch(format!("{name}: {} exponents for {count} nonzeros", map.len())));
        }
        let mut entries = Vec::with_capacity(mat.rows());
        for (i, s) in mat.row_supports().iter().enumerate() {
            let row = s
                .iter()
                .map(|&j| {
                    map.get(&(i, j))
                        .map(|&k| (j, field.alpha_pow(k as i64)))
                        .ok_or_else(|| ExtendError::DomainMismatch(format!("{name}: missing exponent at ({i}, {j})")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            entries.push(row);
        }
        FieldMatrix::new(field.clone(), mat.rows(), mat.cols(), entries)
    };
    Ok((build(pair.hc(), &asg.e, "H_C")?, build(pair.hd(), &asg.f, "H_D")?))
}

/// Row pairs `(i, i')` whose inner product over GF(2^m) is nonzero.
pub fn verify_orthogonal_fq(hg: &FieldMatrix, hd: &FieldMatrix) -> Result<Vec<(usize, usize)>, ExtendError> {
    if hg.field != hd.field {
        return Err(ExtendError::FieldMismatch((*hg.field).clone(), (*hd.field).clone()));
    }
    if hg.cols != hd.cols {
        return Err(ExtendError::DimensionMismatch(format!("{} vs {} columns", hg.cols, hd.cols)));
    }
    let field = &hg.field;
    let mut bad = Vec::new();
    for (i, a) in hg.entries.iter().enumerate() {
        for (k, b) in hd.entries.iter().enumerate() {
            // merge on column index
            let (mut x, mut y) = (0, 0);
            let mut acc = FieldElement::ZERO;
            while x < a.len() && y < b.len() {
                match a[x].0.cmp(&b[y].0) {
                    std::cmp::Ordering::Less => x += 1,
                    std::cmp::Ordering::Greater => y += 1,
                    std::cmp::Ordering::Equal => {
                        acc = acc + field.mul(a[x].1, b[y].1);
                        x += 1;
                        y += 1;
                    }
                }
            }
            if !acc.is_zero() {
                bad.push((i, k));
            }
        }
    }
    Ok(bad)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SupportReport {
    /// Positions nonzero in the binary matrix but zero in the field matrix.
    pub missing: Vec<(usize, usize)>,
    /// Positions zero in the binary matrix but nonzero in the field matrix.
    pub extra: Vec<(usize, usize)>,
}

impl SupportReport {
    pub fn is_ok(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

pub fn verify_support(hg: &FieldMatrix, hc: &BinaryMatrix) -> Result<SupportReport, ExtendError> {
    if (hg.rows, hg.cols) != (hc.rows(), hc.cols()) {
        return Err(ExtendError::DimensionMismatch(format!(
            "field matrix {}x{}, binary matrix {}x{}",
            hg.rows,
            hg.cols,
            hc.rows(),
            hc.cols()
        )));
    }
    let mut report = SupportReport::default();
    for i in 0..hg.rows {
        let got: Vec<usize> = hg.entries[i].iter().map(|&(j, _)| j).collect();
        let want = hc.row(i);
        report.missing.extend(want.iter().filter(|j| !got.contains(j)).map(|&j| (i, j)));
        report.extra.extend(got.iter().filter(|j| !want.contains(j)).map(|&j| (i, j)));
    }
    Ok(report)
}

/// Exponents of a support-preserving pair, by discrete logarithm.
pub fn extract_exponents(
    pair: &CssPair,
    hg: &FieldMatrix,
    hd: &FieldMatrix,
) -> Result<ExponentAssignment, ExtendError> {
    for (f, b) in [(hg, pair.hc()), (hd, pair.hd())] {
        let rep = verify_support(f, b)?;
        if !rep.is_ok() {
            return Err(ExtendError::DomainMismatch(format!(
                "support differs: missing {:?}, extra {:?}",
                rep.missing, rep.extra
            )));
        }
    }
    let field = hg.field();
    let logs = |m: &FieldMatrix| {
        m.entries
            .iter()
            .enumerate()
            .flat_map(|(i, r)| {
                r.iter().map(move |&(j, x)| ((i, j), field.dlog(x).expect("stored entries are nonzero") as u64))
            })
            .collect()
    };
    Ok(ExponentAssignment { modulus: field.group_order() as u64, e: logs(hg), f: logs(hd) })
}

/// Free parameters `A_i`, `B_{i'}`, `C_j` of the separable assignment.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CsaParams {
    pub modulus: u64,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

impl CsaParams {
    pub fn zeros(pair: &CssPair, modulus: u64) -> Self {
        CsaParams { modulus, a: vec![0; pair.hc().rows()], b: vec![0; pair.hd().rows()], c: vec![0; pair.n()] }
    }

    /// Uniform residues from a seeded stream.
    pub fn random(pair: &CssPair, modulus: u64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = |len: usize| (0..len).map(|_| rng.gen_range(0..modulus)).collect::<Vec<u64>>();
        let a = draw(pair.hc().rows());
        let b = draw(pair.hd().rows());
        let c = draw(pair.n());
        CsaParams { modulus, a, b, c }
    }

    fn check(&self, rows_c: usize, rows_d: usize, n: usize) -> Result<(), ExtendError> {
        if (self.a.len(), self.b.len(), self.c.len()) != (rows_c, rows_d, n) {
            return Err(ExtendError::ParamShape(format!(
                "A/B/C lengths {}/{}/{} for {rows_c} + {rows_d} rows and {n} columns",
                self.a.len(),
                self.b.len(),
                self.c.len()
            )));
        }
        Ok(())
    }

    /// The exponents the CSA places on the pair's support.
    pub fn exponents(&self, pair: &CssPair) -> ExponentAssignment {
        let n = self.modulus;
        let mut asg = ExponentAssignment::zeros(pair, n);
        for (&(i, j), x) in asg.e.iter_mut() {
            *x = (self.a[i] + self.c[j]) % n;
        }
        for (&(i, j), x) in asg.f.iter_mut() {
            *x = (self.b[i] + n - self.c[j] % n) % n;
        }
        asg
    }
}

pub fn csa(
    pair: &CssPair,
    params: &CsaParams,
    field: &Arc<FieldSpec>,
) -> Result<(FieldMatrix, FieldMatrix), ExtendError> {
    if let Some(odd) = check_orthogonal_f2(pair).first() {
        return Err(ExtendError::OddOverlap { i: odd.i, i_prime: odd.i_prime });
    }
    params.check(pair.hc().rows(), pair.hd().rows(), pair.n())?;
    check_modulus(field, params.modulus)?;
    assemble(pair, &params.exponents(pair), field)
}

/// `xi_j = alpha^{-C_j} x_j` for a binary codeword `x` of `H_C`.
pub fn csa_lift(
    hc: &BinaryMatrix,
    x: &[u8],
    params: &CsaParams,
    field: &FieldSpec,
) -> Result<Vec<FieldElement>, ExtendError> {
    if params.c.len() != hc.cols() {
        return Err(ExtendError::ParamShape(format!("{} column parameters for {} columns", params.c.len(), hc.cols())));
    }
    let syndrome = hc.mul_vec_f2(x).map_err(|e| ExtendError::DimensionMismatch(e.to_string()))?;
    if let Some(row) = syndrome.iter().position(|&s| s != 0) {
        return Err(ExtendError::NotACodeword { row });
    }
    Ok(x.iter()
        .zip(&params.c)
        .map(|(&xj, &cj)| if xj & 1 == 1 { field.alpha_pow(-(cj as i64)) } else { FieldElement::ZERO })
        .collect())
}
