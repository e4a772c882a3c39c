//! Arithmetic in GF(2^m) for 2 <= m <= 16.
//!
//! Elements are stored in polynomial basis: bit `k` of the value is the
//! coefficient of `x^k`. The distinguished primitive element is `alpha = x`,
//! so a polynomial is only accepted when `x` generates the whole
//! multiplicative group. Multiplication goes through exp/log tables.

use std::fmt;
use std::ops::Add;

use thiserror::Error;

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 16;

/// Default primitive polynomial for each degree, as bitmasks including the
/// leading `x^m` term. Index `m - 2`.
///
/// | m  | polynomial                         | bitmask   |
/// |----|------------------------------------|-----------|
/// | 2  | x^2 + x + 1                        | `0x7`     |
/// | 3  | x^3 + x + 1                        | `0xB`     |
/// | 4  | x^4 + x + 1                        | `0x13`    |
/// | 5  | x^5 + x^2 + 1                      | `0x25`    |
/// | 6  | x^6 + x + 1                        | `0x43`    |
/// | 7  | x^7 + x^3 + 1                      | `0x89`    |
/// | 8  | x^8 + x^4 + x^3 + x^2 + 1          | `0x11D`   |
/// | 9  | x^9 + x^4 + 1                      | `0x211`   |
/// | 10 | x^10 + x^3 + 1                     | `0x409`   |
/// | 11 | x^11 + x^2 + 1                     | `0x805`   |
/// | 12 | x^12 + x^6 + x^4 + x + 1           | `0x1053`  |
/// | 13 | x^13 + x^4 + x^3 + x + 1           | `0x201B`  |
/// | 14 | x^14 + x^10 + x^6 + x + 1          | `0x4443`  |
/// | 15 | x^15 + x + 1                       | `0x8003`  |
/// | 16 | x^16 + x^12 + x^3 + x + 1          | `0x1100B` |
pub const DEFAULT_PRIMITIVE_POLYS: [u32; 15] =
    [0x7, 0xB, 0x13, 0x25, 0x43, 0x89, 0x11D, 0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443, 0x8003, 0x1100B];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("extension degree {m} outside supported range {MIN_DEGREE}..={MAX_DEGREE}")]
    BadDegree { m: u32 },
    #[error("polynomial {poly:#x} does not have degree {m}")]
    PolyDegree { m: u32, poly: u32 },
    #[error("x is not primitive modulo {poly:#x}{}", order.map(|k| format!(": its multiplicative order is {k}")).unwrap_or_default())]
    NotPrimitive { poly: u32, order: Option<u32> },
    #[error("discrete logarithm of zero")]
    LogOfZero,
    #[error("value {value:#x} is not an element of GF(2^{m})")]
    OutOfRange { m: u32, value: u32 },
}

/// An element of some GF(2^m), in polynomial basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Unchecked: the caller guarantees `value < 2^m` for the field in use.
    pub const fn from_raw(value: u16) -> Self {
        FieldElement(value)
    }

    pub const fn value(self) -> u16 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for FieldElement {
    type Output = FieldElement;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// GF(2^m) with exp/log tables relative to `alpha = x`.
#[derive(Clone)]
pub struct FieldSpec {
    m: u32,
    poly: u32,
    exp: Vec<u16>,
    log: Vec<u32>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.poly == other.poly
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) poly={:#x}", self.m, self.poly)
    }
}

pub fn default_poly(m: u32) -> Result<u32, FieldError> {
    if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
        return Err(FieldError::BadDegree { m });
    }
    Ok(DEFAULT_PRIMITIVE_POLYS[(m - MIN_DEGREE) as usize])
}

/// Builds GF(2^m) under `poly` (or the default table entry), rejecting
/// polynomials under which `x` has order below `2^m - 1`.
pub fn make_field(m: u32, poly: Option<u32>) -> Result<FieldSpec, FieldError> {
    let default = default_poly(m)?;
    let poly = poly.unwrap_or(default);
    if poly >> m != 1 {
        return Err(FieldError::PolyDegree { m, poly });
    }
    let q = 1u32 << m;
    let group = (q - 1) as usize;

    let mut exp = Vec::with_capacity(group);
    let mut log = vec![u32::MAX; q as usize];
    let mut x = 1u32;
    for k in 0..group {
        if log[x as usize] != u32::MAX {
            // x^k revisited an earlier power before covering the group
            let order = (x == 1).then_some(k as u32);
            return Err(FieldError::NotPrimitive { poly, order });
        }
        exp.push(x as u16);
        log[x as usize] = k as u32;
        x <<= 1;
        if x & q != 0 {
            x ^= poly;
        }
        if x == 0 {
            return Err(FieldError::NotPrimitive { poly, order: None });
        }
    }
    if x != 1 {
        return Err(FieldError::NotPrimitive { poly, order: None });
    }
    Ok(FieldSpec { m, poly, exp, log })
}

impl FieldSpec {
    /// GF(2^m) under the default primitive polynomial.
    pub fn new(m: u32) -> Result<Self, FieldError> {
        make_field(m, None)
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn poly(&self) -> u32 {
        self.poly
    }

    /// `q = 2^m`.
    pub fn order(&self) -> u32 {
        1 << self.m
    }

    /// `q - 1`, the modulus for exponents.
    pub fn group_order(&self) -> u32 {
        (1 << self.m) - 1
    }

    pub fn alpha(&self) -> FieldElement {
        FieldElement(self.exp[1 % self.exp.len()])
    }

    pub fn element(&self, value: u32) -> Result<FieldElement, FieldError> {
        if value >= self.order() {
            return Err(FieldError::OutOfRange { m: self.m, value });
        }
        Ok(FieldElement(value as u16))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order()).map(|v| FieldElement(v as u16))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        a + b
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let k = (self.log[a.0 as usize] + self.log[b.0 as usize]) % self.group_order();
        FieldElement(self.exp[k as usize])
    }

    /// `alpha^k` with `k` reduced modulo `q - 1`; negative exponents allowed.
    pub fn alpha_pow(&self, k: i64) -> FieldElement {
        let k = k.rem_euclid(self.group_order() as i64);
        FieldElement(self.exp[k as usize])
    }

    pub fn dlog(&self, a: FieldElement) -> Result<u32, FieldError> {
        if a.is_zero() {
            return Err(FieldError::LogOfZero);
        }
        Ok(self.log[a.0 as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        let k = self.dlog(a)?;
        Ok(self.alpha_pow(-(k as i64)))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let k = self.log[a.0 as usize] as u64 * (e % self.group_order() as u64);
        self.alpha_pow((k % self.group_order() as u64) as i64)
    }

    /// Sum of products over paired entries.
    pub fn dot<I>(&self, pairs: I) -> FieldElement
    where
        I: IntoIterator<Item = (FieldElement, FieldElement)>,
    {
        pairs.into_iter().fold(FieldElement::ZERO, |acc, (a, b)| acc + self.mul(a, b))
    }
}
