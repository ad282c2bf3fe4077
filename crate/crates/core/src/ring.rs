//! Arithmetic in the finite chain ring `R = Z4 + wZ4` with `w² = 2 + 2w`.
//!
//! `R` has 16 elements `a + bw` with `a, b ∈ Z4`. Its maximal ideal is
//! `⟨w⟩` and the ideals form the chain
//!
//! ```text
//! ⟨0⟩ ⊂ ⟨2w⟩ ⊂ ⟨2⟩ = ⟨2+2w⟩ ⊂ ⟨w⟩ ⊂ R        (sizes 1, 2, 4, 8, 16)
//! ```
//!
//! so every element is a unit times `w^v` for a unique valuation
//! `v ∈ {0, 1, 2, 3}` (with `v = 4` reserved for zero). Since `w² = 2+2w`
//! and `w³ = 2w`, the canonical ideal generators used for pivots are
//! `1, w, 2, 2w`.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element `a + bw` of `R`, stored as the integer code `a + 4b ∈ 0..16`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
#[derive(Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
#[repr(transparent)]
pub struct RingElement(u8);

/// Unit / zero-divisor split. Zero is reported as a zero divisor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementClass {
    Unit,
    ZeroDivisor,
}

impl RingElement {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);
    pub const TWO: Self = Self(2);
    pub const THREE: Self = Self(3);
    pub const W: Self = Self(4);
    pub const TWO_W: Self = Self(8);
    pub const THREE_W: Self = Self(12);
    pub const TWO_PLUS_W: Self = Self(6);
    pub const TWO_PLUS_TWO_W: Self = Self(10);
    pub const TWO_PLUS_THREE_W: Self = Self(14);

    /// All 16 elements in code order.
    pub const ALL: [Self; 16] = [
        Self(0),
        Self(1),
        Self(2),
        Self(3),
        Self(4),
        Self(5),
        Self(6),
        Self(7),
        Self(8),
        Self(9),
        Self(10),
        Self(11),
        Self(12),
        Self(13),
        Self(14),
        Self(15),
    ];

    /// The seven nonzero zero divisors, in the order the RM constructions
    /// list them: `2, w, 2+w, 2w, 2+2w, 3w, 2+3w`.
    pub const NONZERO_ZERO_DIVISORS: [Self; 7] = [
        Self::TWO,
        Self::W,
        Self::TWO_PLUS_W,
        Self::TWO_W,
        Self::TWO_PLUS_TWO_W,
        Self::THREE_W,
        Self::TWO_PLUS_THREE_W,
    ];

    /// Builds `a + bw`, reducing both coefficients mod 4.
    pub const fn new(a: u8, b: u8) -> Self {
        Self((a & 3) | ((b & 3) << 2))
    }

    /// Inverse of [`RingElement::code`].
    pub const fn from_code(code: u8) -> Option<Self> {
        if code < 16 {
            Some(Self(code))
        } else {
            None
        }
    }

    /// The integer encoding `a + 4b` used by the file formats.
    pub const fn code(self) -> u8 {
        self.0
    }

    /// Constant coefficient.
    pub const fn a(self) -> u8 {
        self.0 & 3
    }

    /// Coefficient of `w`.
    pub const fn b(self) -> u8 {
        self.0 >> 2
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn classify(self) -> ElementClass {
        if self.a() & 1 == 1 {
            ElementClass::Unit
        } else {
            ElementClass::ZeroDivisor
        }
    }

    pub fn is_unit(self) -> bool {
        self.classify() == ElementClass::Unit
    }

    /// Position in the ideal chain: 0 for units, 1 for `⟨w⟩∖⟨2⟩`,
    /// 2 for `⟨2⟩∖⟨2w⟩`, 3 for `⟨2w⟩∖{0}` and 4 for zero.
    pub fn valuation(self) -> u8 {
        if self.is_zero() {
            4
        } else if self.is_unit() {
            0
        } else if self.b() & 1 == 1 {
            1
        } else if self.0 == Self::TWO_W.0 {
            3
        } else {
            2
        }
    }

    /// Canonical generator `w^v` of the ideal of valuation `v`:
    /// `1, w, 2, 2w` for `v = 0..=3` and `0` for `v = 4`.
    pub fn chain_generator(valuation: u8) -> Self {
        match valuation {
            0 => Self::ONE,
            1 => Self::W,
            2 => Self::TWO,
            3 => Self::TWO_W,
            _ => Self::ZERO,
        }
    }

    /// Multiplicative inverse, if `self` is a unit.
    pub fn inverse(self) -> Option<Self> {
        Self::ALL.into_iter().find(|&y| self * y == Self::ONE)
    }

    /// Some `q` with `q · self = target`, if one exists.
    pub fn divides(self, target: Self) -> Option<Self> {
        Self::ALL.into_iter().find(|&q| q * self == target)
    }
}

impl Add for RingElement {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.a() + rhs.a(), self.b() + rhs.b())
    }
}

impl AddAssign for RingElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Neg for RingElement {
    type Output = Self;

    fn neg(self) -> Self {
        // 3 = -1 in Z4
        Self::new(3 * self.a(), 3 * self.b())
    }
}

impl Sub for RingElement {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RingElement {
    type Output = Self;

    /// `(a+bw)(c+dw) = (ac + 2bd) + (ad + bc + 2bd)w`.
    fn mul(self, rhs: Self) -> Self {
        let (a, b, c, d) = (self.a(), self.b(), rhs.a(), rhs.b());
        Self::new(a * c + 2 * b * d, a * d + b * c + 2 * b * d)
    }
}

impl From<RingElement> for u8 {
    fn from(x: RingElement) -> u8 {
        x.0
    }
}

impl TryFrom<u8> for RingElement {
    type Error = Error;

    fn try_from(code: u8) -> Result<Self> {
        Self::from_code(code).ok_or_else(|| Error::Parse(format!("element code {code} out of range 0..16")))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.a(), self.b());
        match (a, b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => f.write_str("w"),
            (0, b) => write!(f, "{b}w"),
            (a, 1) => write!(f, "{a}+w"),
            (a, b) => write!(f, "{a}+{b}w"),
        }
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RingElement {
    type Err = Error;

    /// Parses the tokens `0`..`3`, `w`, `2w`, `3w` and `a+w` / `a+bw` with
    /// `a, b ∈ {1, 2, 3}`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid ring element token {s:?}"));
        let t = s.trim();
        let digit = |c: &str| match c {
            "1" => Some(1u8),
            "2" => Some(2),
            "3" => Some(3),
            _ => None,
        };
        let w_term = |c: &str| -> Option<u8> {
            let coef = c.strip_suffix('w')?;
            if coef.is_empty() {
                Some(1)
            } else {
                digit(coef)
            }
        };
        if t == "0" {
            return Ok(Self::ZERO);
        }
        if let Some((lhs, rhs)) = t.split_once('+') {
            let a = digit(lhs).ok_or_else(bad)?;
            let b = w_term(rhs).ok_or_else(bad)?;
            return Ok(Self::new(a, b));
        }
        if let Some(a) = digit(t) {
            return Ok(Self::new(a, 0));
        }
        w_term(t).map(|b| Self::new(0, b)).ok_or_else(bad)
    }
}

/// All multiples `r · g`, sorted by code.
pub fn ideal_members(g: RingElement) -> Vec<RingElement> {
    let mut out: Vec<RingElement> = RingElement::ALL.iter().map(|&r| r * g).collect();
    out.sort();
    out.dedup();
    out
}

/// A vector in `Rⁿ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RingVector(Vec<RingElement>);

impl RingVector {
    pub fn new(entries: Vec<RingElement>) -> Self {
        Self(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![RingElement::ZERO; n])
    }

    /// The vector with every entry equal to `value`.
    pub fn constant(n: usize, value: RingElement) -> Self {
        Self(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, RingElement> {
        self.0.iter()
    }

    pub fn into_inner(self) -> Vec<RingElement> {
        self.0
    }

    /// Component-wise sum. Fails when the lengths differ.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_len(self.len(), other.len())?;
        Ok(self.iter().zip(other.iter()).map(|(&x, &y)| x + y).collect())
    }

    pub fn scale(&self, c: RingElement) -> Self {
        self.iter().map(|&x| c * x).collect()
    }

    /// Concatenation `(self | other)`.
    pub fn concat(&self, other: &Self) -> Self {
        self.iter().chain(other.iter()).copied().collect()
    }

    pub fn codes(&self) -> Vec<u8> {
        self.iter().map(|x| x.code()).collect()
    }

    /// Comma-separated element tokens, e.g. `0,2,2w,2+2w`.
    pub fn to_csv(&self) -> String {
        self.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }

    /// Parses a list of element tokens separated by commas and/or whitespace.
    pub fn parse_tokens(s: &str) -> Result<Self> {
        let entries = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?;
        if entries.is_empty() {
            return Err(Error::Parse(format!("no ring elements in {s:?}")));
        }
        Ok(Self(entries))
    }
}

pub(crate) fn check_len(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::Dimension { expected: left, found: right })
    }
}

impl Index<usize> for RingVector {
    type Output = RingElement;

    fn index(&self, i: usize) -> &RingElement {
        &self.0[i]
    }
}

impl FromIterator<RingElement> for RingVector {
    fn from_iter<I: IntoIterator<Item = RingElement>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl From<Vec<RingElement>> for RingVector {
    fn from(v: Vec<RingElement>) -> Self {
        Self(v)
    }
}

impl<'a> IntoIterator for &'a RingVector {
    type Item = &'a RingElement;
    type IntoIter = std::slice::Iter<'a, RingElement>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl Neg for &RingVector {
    type Output = RingVector;

    fn neg(self) -> RingVector {
        self.iter().map(|&x| -x).collect()
    }
}

impl fmt::Display for RingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for RingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RingVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        Self::parse_tokens(inner)
    }
}
