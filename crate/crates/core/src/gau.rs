//! The Gau distance on `R` and the Gau map `φ: R → {A,C,G,T}²`.
//!
//! Elements of `R` are laid out in a 4×4 matrix whose rows and columns are
//! labelled `A, G, C, T`:
//!
//! ```text
//!          A      G      C      T
//!   A      0      1    2+3w   3+3w
//!   G      3      2    1+3w    3w
//!   C     2+w    3+w    2w    1+2w
//!   T     1+w     w    3+2w   2+2w
//! ```
//!
//! `φ(m_ij)` is the dinucleotide (row label, column label), and the Gau
//! distance between two elements counts how many of the row/column indices
//! differ. `φ` is therefore an isometry onto dinucleotides under Hamming
//! distance, coordinate-wise on `Rⁿ`.
//!
//! Reversing `φ(x)` corresponds to `-x` and complementing `φ(x)`
//! corresponds to `x + (2+2w)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{check_len, RingElement, RingVector};

/// Row/column position of an element in the Gau matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GauIndex {
    pub row: u8,
    pub col: u8,
}

const fn el(a: u8, b: u8) -> RingElement {
    RingElement::new(a, b)
}

/// The arrangement matrix, rows and columns in `A, G, C, T` order.
pub const GAU_MATRIX: [[RingElement; 4]; 4] = [
    [el(0, 0), el(1, 0), el(2, 3), el(3, 3)],
    [el(3, 0), el(2, 0), el(1, 3), el(0, 3)],
    [el(2, 1), el(3, 1), el(0, 2), el(1, 2)],
    [el(1, 1), el(0, 1), el(3, 2), el(2, 2)],
];

const INDEX_BY_CODE: [GauIndex; 16] = {
    let mut out = [GauIndex { row: 0, col: 0 }; 16];
    let mut i = 0;
    while i < 4 {
        let mut j = 0;
        while j < 4 {
            out[GAU_MATRIX[i][j].code() as usize] = GauIndex { row: i as u8, col: j as u8 };
            j += 1;
        }
        i += 1;
    }
    out
};

pub fn index_of(x: RingElement) -> GauIndex {
    INDEX_BY_CODE[x.code() as usize]
}

pub fn element_at(index: GauIndex) -> RingElement {
    GAU_MATRIX[index.row as usize & 3][index.col as usize & 3]
}

/// Gau distance, read with mod-4 arithmetic inside each minimum:
/// `min{1, (i + 3i′) mod 4} + min{1, (j + 3j′) mod 4}`.
pub fn gau_dist(x: RingElement, y: RingElement) -> u32 {
    let (p, q) = (index_of(x), index_of(y));
    let row = ((p.row + 3 * q.row) % 4).min(1);
    let col = ((p.col + 3 * q.col) % 4).min(1);
    (row + col) as u32
}

/// Gau weight, the distance to zero.
pub fn gau_weight(x: RingElement) -> u32 {
    gau_dist(x, RingElement::ZERO)
}

pub fn gau_dist_vec(x: &RingVector, y: &RingVector) -> Result<u32> {
    check_len(x.len(), y.len())?;
    Ok(x.iter().zip(y.iter()).map(|(&a, &b)| gau_dist(a, b)).sum())
}

pub fn gau_weight_vec(x: &RingVector) -> u32 {
    x.iter().map(|&a| gau_weight(a)).sum()
}

/// The piecewise description of the Gau distance keyed on `x + 3y`, split
/// by unit / zero-divisor class. The listed cases cover pairs with `x` a
/// zero divisor or both arguments in the same class; for `x` a unit and
/// `y` a zero divisor the distance is symmetric, so the arguments are
/// swapped.
pub fn gau_dist_by_cases(x: RingElement, y: RingElement) -> u32 {
    if x == y {
        return 0;
    }
    let t = |s: &str| -> RingElement { s.parse().expect("static token") };
    let in_set = |v: RingElement, set: &[&str]| set.iter().any(|s| t(s) == v);
    let diff = x + RingElement::THREE * y;
    match (x.is_unit(), y.is_unit()) {
        (true, true) | (false, false) => {
            if in_set(diff, &["2+w", "2+3w"]) {
                1
            } else {
                2
            }
        }
        (false, true) => {
            if in_set(x, &["0", "2", "2w", "2+2w"]) {
                if in_set(diff, &["1", "3", "1+w", "3+3w"]) {
                    1
                } else {
                    debug_assert!(in_set(diff, &["1+3w", "3+w", "1+2w", "3+2w"]));
                    2
                }
            } else if in_set(diff, &["1", "3", "3+w", "1+3w"]) {
                1
            } else {
                debug_assert!(in_set(diff, &["3+3w", "1+w", "1+2w", "3+2w"]));
                2
            }
        }
        (true, false) => gau_dist_by_cases(y, x),
    }
}

/// A nucleotide. The discriminant is the Gau-matrix row/column index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum DnaBase {
    A = 0,
    G = 1,
    C = 2,
    T = 3,
}

impl DnaBase {
    pub const ALL: [DnaBase; 4] = [DnaBase::A, DnaBase::G, DnaBase::C, DnaBase::T];

    pub fn from_index(i: u8) -> Self {
        Self::ALL[i as usize & 3]
    }

    pub fn index(self) -> u8 {
        self as u8
    }

    /// Watson-Crick complement: A↔T, G↔C.
    pub fn complement(self) -> Self {
        Self::from_index(3 - self.index())
    }

    pub fn is_gc(self) -> bool {
        matches!(self, DnaBase::G | DnaBase::C)
    }

    pub fn to_char(self) -> char {
        match self {
            DnaBase::A => 'A',
            DnaBase::G => 'G',
            DnaBase::C => 'C',
            DnaBase::T => 'T',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c.to_ascii_uppercase() {
            'A' => Ok(DnaBase::A),
            'G' => Ok(DnaBase::G),
            'C' => Ok(DnaBase::C),
            'T' => Ok(DnaBase::T),
            _ => Err(Error::Parse(format!("invalid DNA base {c:?}"))),
        }
    }
}

/// A DNA strand over `{A, C, G, T}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DnaWord(Vec<DnaBase>);

impl DnaWord {
    pub fn new(bases: Vec<DnaBase>) -> Self {
        Self(bases)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bases(&self) -> &[DnaBase] {
        &self.0
    }

    pub fn reverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        Self(self.0.iter().map(|b| b.complement()).collect())
    }

    pub fn reverse_complement(&self) -> Self {
        Self(self.0.iter().rev().map(|b| b.complement()).collect())
    }

    /// Number of positions holding G or C.
    pub fn gc_weight(&self) -> usize {
        self.0.iter().filter(|b| b.is_gc()).count()
    }

    pub fn hamming(&self, other: &Self) -> Result<usize> {
        check_len(self.len(), other.len())?;
        Ok(self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count())
    }
}

impl fmt::Display for DnaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|b| b.to_char()).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for DnaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for DnaWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty DNA word".into()));
        }
        t.chars().map(DnaBase::from_char).collect::<Result<Vec<_>>>().map(Self)
    }
}

impl Serialize for DnaWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DnaWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn dna_reverse(d: &DnaWord) -> DnaWord {
    d.reverse()
}

pub fn dna_complement(d: &DnaWord) -> DnaWord {
    d.complement()
}

pub fn dna_reverse_complement(d: &DnaWord) -> DnaWord {
    d.reverse_complement()
}

pub fn gc_weight(d: &DnaWord) -> usize {
    d.gc_weight()
}

pub(crate) fn phi_pair(x: RingElement) -> [DnaBase; 2] {
    let i = index_of(x);
    [DnaBase::from_index(i.row), DnaBase::from_index(i.col)]
}

/// The Gau map on a single element.
pub fn phi(x: RingElement) -> DnaWord {
    DnaWord(phi_pair(x).to_vec())
}

pub fn phi_inv(d: &DnaWord) -> Result<RingElement> {
    check_len(2, d.len())?;
    Ok(element_at(GauIndex { row: d.0[0].index(), col: d.0[1].index() }))
}

/// Concatenation of the images of the entries; length `2n`.
pub fn phi_vec(x: &RingVector) -> DnaWord {
    DnaWord(x.iter().flat_map(|&e| phi_pair(e)).collect())
}

/// Inverse of [`phi_vec`]. Odd-length words are rejected.
pub fn phi_vec_inv(d: &DnaWord) -> Result<RingVector> {
    if d.len() % 2 != 0 || d.is_empty() {
        return Err(Error::Dimension { expected: d.len() + d.len() % 2, found: d.len() });
    }
    Ok(d.0
        .chunks_exact(2)
        .map(|p| element_at(GauIndex { row: p[0].index(), col: p[1].index() }))
        .collect())
}

/// `φ⁻¹(φ(x)^r)`: entries in reverse order, each negated.
pub fn ring_reverse_image(x: &RingVector) -> RingVector {
    x.iter().rev().map(|&e| -e).collect()
}

/// `φ⁻¹(φ(x)^c)`: `2+2w` added to every entry.
pub fn ring_complement_image(x: &RingVector) -> RingVector {
    x.iter().map(|&e| e + RingElement::TWO_PLUS_TWO_W).collect()
}

/// `φ⁻¹(φ(x)^{rc})`.
pub fn ring_reverse_complement_image(x: &RingVector) -> RingVector {
    x.iter().rev().map(|&e| -e + RingElement::TWO_PLUS_TWO_W).collect()
}

/// Elements `z` such that `x ↦ x + z` preserves the Gau distance. These are
/// exactly the elements `a + bw` with `a ≡ b (mod 2)`, an additive subgroup
/// of index 2.
pub fn isometric_translations() -> Vec<RingElement> {
    RingElement::ALL
        .into_iter()
        .filter(|&z| {
            RingElement::ALL
                .iter()
                .all(|&x| RingElement::ALL.iter().all(|&y| gau_dist(x + z, y + z) == gau_dist(x, y)))
        })
        .collect()
}

/// Triples `(x, y, z)` with `d(x+z, y+z) ≠ d(x, y)`.
pub fn translation_invariance_violations() -> Vec<(RingElement, RingElement, RingElement)> {
    let mut out = Vec::new();
    for x in RingElement::ALL {
        for y in RingElement::ALL {
            for z in RingElement::ALL {
                if gau_dist(x + z, y + z) != gau_dist(x, y) {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}
