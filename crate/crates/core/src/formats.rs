//! Text formats.
//!
//! * dense: one row per line, entries `0`/`1` separated by whitespace.
//! * alist: MacKay's sparse format, 1-based indices, zero padded on output.
//! * hex grid: header `GF(2^m) poly=<bitmask>`, then one row per line of
//!   polynomial-basis hex entries (`00` is zero).
//! * paper-hex: a grid of bytes where `00` is zero and a nonzero byte `h`
//!   stands for `alpha^(h-1)` in GF(256). Read-only.
//!
//! Lines starting with `#` are comments. A zero-row matrix cannot carry its
//! column count in the grid itself, so the dense and hex writers emit a
//! `# cols=N` directive for it and the readers honor that directive.

use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::binmat::{BinaryMatrix, MatrixError};
use crate::extend::{ExponentAssignment, FieldMatrix};
use crate::field::{make_field, FieldError, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

fn perr(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse { line, msg: msg.into() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MatrixFormat {
    #[default]
    Dense,
    Alist,
}

impl FromStr for MatrixFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dense" => Ok(MatrixFormat::Dense),
            "alist" => Ok(MatrixFormat::Alist),
            other => Err(format!("unknown matrix format '{other}'")),
        }
    }
}

pub fn parse_binary(text: &str, format: MatrixFormat) -> Result<BinaryMatrix, FormatError> {
    match format {
        MatrixFormat::Dense => parse_dense(text),
        MatrixFormat::Alist => parse_alist(text),
    }
}

pub fn write_binary(m: &BinaryMatrix, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Dense => write_dense(m),
        MatrixFormat::Alist => write_alist(m),
    }
}

type NumberedLines<'a> = Vec<(usize, &'a str)>;

/// Body lines with 1-based numbers, plus any `# cols=N` directive.
fn content_lines(text: &str) -> Result<(NumberedLines<'_>, Option<usize>), FormatError> {
    let mut lines = Vec::new();
    let mut cols = None;
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(v) = comment.trim().strip_prefix("cols=") {
                cols = Some(v.trim().parse().map_err(|_| perr(k + 1, "bad cols directive"))?);
            }
            continue;
        }
        if !line.is_empty() {
            lines.push((k + 1, line));
        }
    }
    Ok((lines, cols))
}

pub fn parse_dense(text: &str) -> Result<BinaryMatrix, FormatError> {
    let (lines, directive) = content_lines(text)?;
    let mut support = Vec::with_capacity(lines.len());
    let mut cols = directive;
    for (ln, line) in lines {
        let mut row = Vec::new();
        let mut width = 0;
        for (j, tok) in line.split_whitespace().enumerate() {
            match tok {
                "0" => {}
                "1" => row.push(j),
                other => return Err(perr(ln, format!("expected 0 or 1, found '{other}'"))),
            }
            width = j + 1;
        }
        match cols {
            Some(c) if c != width => return Err(perr(ln, format!("row has {width} entries, expected {c}"))),
            _ => cols = Some(width),
        }
        support.push(row);
    }
    Ok(BinaryMatrix::new(support.len(), cols.unwrap_or(0), support)?)
}

pub fn write_dense(m: &BinaryMatrix) -> String {
    let mut out = String::new();
    if m.rows() == 0 {
        let _ = writeln!(out, "# cols={}", m.cols());
    }
    for row in m.to_dense() {
        let line: Vec<&str> = row.iter().map(|&b| if b == 1 { "1" } else { "0" }).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_alist(text: &str) -> Result<BinaryMatrix, FormatError> {
    let mut tokens = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if line.trim_start().starts_with('#') {
            continue;
        }
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| perr(k + 1, format!("not an integer: '{tok}'")))?;
            tokens.push((k + 1, v));
        }
    }
    let mut it = tokens.into_iter();
    let mut next = |what: &str| it.next().ok_or_else(|| perr(0, format!("unexpected end of input reading {what}")));
    let n_cols = next("column count")?.1;
    let n_rows = next("row count")?.1;
    let max_col = next("max column weight")?.1;
    let max_row = next("max row weight")?.1;
    let col_w: Vec<usize> = (0..n_cols).map(|_| next("column weights").map(|t| t.1)).collect::<Result<_, _>>()?;
    let row_w: Vec<usize> = (0..n_rows).map(|_| next("row weights").map(|t| t.1)).collect::<Result<_, _>>()?;
    let rest: Vec<(usize, usize)> = std::iter::from_fn(|| next("").ok()).collect();

    let unpadded = col_w.iter().sum::<usize>() + row_w.iter().sum::<usize>();
    let padded = n_cols * max_col + n_rows * max_row;
    let (col_slots, row_slots): (Vec<usize>, Vec<usize>) = if rest.len() == padded {
        (vec![max_col; n_cols], vec![max_row; n_rows])
    } else if rest.len() == unpadded {
        (col_w.clone(), row_w.clone())
    } else {
        return Err(perr(0, format!("expected {padded} (padded) or {unpadded} index entries, found {}", rest.len())));
    };

    let mut pos = 0;
    let mut read_lists = |slots: &[usize], weights: &[usize], bound: usize, what: &str| {
        let mut lists = Vec::with_capacity(slots.len());
        for (k, (&slot, &w)) in slots.iter().zip(weights).enumerate() {
            let chunk = &rest[pos..pos + slot];
            pos += slot;
            let mut list: Vec<usize> = chunk.iter().filter(|t| t.1 != 0).map(|t| t.1 - 1).collect();
            let line = chunk.first().map_or(0, |t| t.0);
            if list.len() != w {
                return Err(perr(line, format!("{what} {k}: weight {w} but {} indices", list.len())));
            }
            if let Some(&bad) = list.iter().find(|&&x| x >= bound) {
                return Err(perr(line, format!("{what} {k}: index {} out of range", bad + 1)));
            }
            list.sort_unstable();
            lists.push(list);
        }
        Ok(lists)
    };
    let col_lists = read_lists(&col_slots, &col_w, n_rows, "column")?;
    let row_lists = read_lists(&row_slots, &row_w, n_cols, "row")?;

    let m = BinaryMatrix::new(n_rows, n_cols, row_lists).map_err(FormatError::from)?;
    if m.col_supports() != col_lists {
        return Err(perr(0, "column lists disagree with row lists"));
    }
    Ok(m)
}

pub fn write_alist(m: &BinaryMatrix) -> String {
    let cols = m.col_supports();
    let max_col = cols.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = m.row_supports().iter().map(Vec::len).max().unwrap_or(0);
    let join = |xs: &mut dyn Iterator<Item = usize>| xs.map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let padded = |list: &[usize], width: usize| {
        let mut it = list.iter().map(|&x| x + 1).chain(std::iter::repeat(0)).take(width);
        join(&mut it)
    };
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", m.cols(), m.rows());
    let _ = writeln!(out, "{max_col} {max_row}");
    let _ = writeln!(out, "{}", join(&mut cols.iter().map(Vec::len)));
    let _ = writeln!(out, "{}", join(&mut m.row_supports().iter().map(Vec::len)));
    for c in &cols {
        let _ = writeln!(out, "{}", padded(c, max_col));
    }
    for r in m.row_supports() {
        let _ = writeln!(out, "{}", padded(r, max_row));
    }
    out
}

fn hex_width(m: u32) -> usize {
    m.div_ceil(4) as usize
}

pub fn field_header(field: &FieldSpec) -> String {
    format!("GF(2^{}) poly={:#x}", field.degree(), field.poly())
}

fn parse_field_header(line: &str, ln: usize) -> Result<FieldSpec, FormatError> {
    let bad = || perr(ln, format!("expected 'GF(2^m) poly=<bitmask>', found '{line}'"));
    let mut parts = line.split_whitespace();
    let m: u32 = parts
        .next()
        .and_then(|t| t.strip_prefix("GF(2^"))
        .and_then(|t| t.strip_suffix(')'))
        .and_then(|t| t.parse().ok())
        .ok_or_else(bad)?;
    let poly_tok = parts.next().and_then(|t| t.strip_prefix("poly=")).ok_or_else(bad)?;
    let poly = match poly_tok.strip_prefix("0x").or_else(|| poly_tok.strip_prefix("0X")) {
        Some(h) => u32::from_str_radix(h, 16),
        None => poly_tok.parse(),
    }
    .map_err(|_| bad())?;
    Ok(make_field(m, Some(poly))?)
}

/// Header, optional comment lines, then the grid.
pub fn write_hex_grid(mat: &FieldMatrix, comments: &[String]) -> String {
    let field = mat.field();
    let w = hex_width(field.degree());
    let mut out = field_header(field);
    out.push('\n');
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    if mat.rows() == 0 {
        let _ = writeln!(out, "# cols={}", mat.cols());
    }
    for row in mat.to_dense() {
        let line: Vec<String> = row.iter().map(|x| format!("{:0w$X}", x.value())).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_hex_grid(text: &str) -> Result<FieldMatrix, FormatError> {
    let (lines, directive) = content_lines(text)?;
    let Some(((hl, header), body)) = lines.split_first() else {
        return Err(perr(0, "missing GF(2^m) header"));
    };
    let field = Arc::new(parse_field_header(header, *hl)?);
    let grid = parse_hex_tokens(body, directive)?;
    let mut entries = Vec::with_capacity(grid.rows.len());
    for (ln, row) in grid.rows {
        let mut r = Vec::new();
        for (j, v) in row.into_iter().enumerate() {
            r.push((j, field.element(v).map_err(|e| perr(ln, e.to_string()))?));
        }
        entries.push(r);
    }
    let n_rows = entries.len();
    FieldMatrix::new(field, n_rows, grid.cols, entries).map_err(|e| perr(0, e.to_string()))
}

struct HexTokens {
    rows: Vec<(usize, Vec<u32>)>,
    cols: usize,
}

/// Grid of hex tokens; `|` tokens are block separators and ignored.
fn parse_hex_tokens(lines: &[(usize, &str)], directive: Option<usize>) -> Result<HexTokens, FormatError> {
    let mut rows = Vec::with_capacity(lines.len());
    let mut cols = directive;
    for &(ln, line) in lines {
        let row = line
            .split_whitespace()
            .filter(|t| !t.chars().all(|c| c == '|'))
            .map(|t| u32::from_str_radix(t, 16).map_err(|_| perr(ln, format!("not a hex entry: '{t}'"))))
            .collect::<Result<Vec<u32>, _>>()?;
        match cols {
            Some(c) if c != row.len() => {
                return Err(perr(ln, format!("row has {} entries, expected {c}", row.len())));
            }
            _ => cols = Some(row.len()),
        }
        rows.push((ln, row));
    }
    Ok(HexTokens { rows, cols: cols.unwrap_or(0) })
}

/// Exponents read from a paper-hex grid; absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentGrid {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<(usize, u64)>>,
}

impl ExponentGrid {
    pub fn support(&self) -> BinaryMatrix {
        let s = self.entries.iter().map(|r| r.iter().map(|&(j, _)| j).collect()).collect();
        BinaryMatrix::new(self.rows, self.cols, s).expect("entries sorted and in range")
    }
}

/// Paper-hex convention for GF(256): `00` is zero, byte `h` is `alpha^(h-1)`.
pub fn parse_paper_hex(text: &str) -> Result<ExponentGrid, FormatError> {
    let (lines, directive) = content_lines(text)?;
    let grid = parse_hex_tokens(&lines, directive)?;
    let mut entries = Vec::with_capacity(grid.rows.len());
    for (ln, row) in grid.rows {
        let mut r = Vec::new();
        for (j, h) in row.into_iter().enumerate() {
            if h > 0xFF {
                return Err(perr(ln, format!("entry {h:#x} exceeds one byte")));
            }
            if h != 0 {
                r.push((j, (h - 1) as u64));
            }
        }
        entries.push(r);
    }
    Ok(ExponentGrid { rows: entries.len(), cols: grid.cols, entries })
}

/// Combines the two grids of a pair into one assignment modulo 255.
pub fn paper_hex_assignment(gamma: &ExponentGrid, delta: &ExponentGrid) -> ExponentAssignment {
    let collect = |g: &ExponentGrid| {
        g.entries.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |&(j, k)| ((i, j), k))).collect()
    };
    ExponentAssignment { modulus: 255, e: collect(gamma), f: collect(delta) }
}
