//! Minimum Gau distance of linear codes.
//!
//! The Gau distance is not translation invariant on all of `R`, so the
//! minimum distance of a linear code is not simply its minimum nonzero
//! weight. It is, however, invariant under translation by the index-2
//! subgroup `H = {a + bw : a ≡ b (mod 2)}`. Writing a codeword as
//! `x = t + s` with `t ∈ Hⁿ` and `s ∈ {0, 1}ⁿ`,
//!
//! ```text
//! d(x, y) = d(s, s + (y - x))
//! ```
//!
//! where `s` depends only on the coset pattern of `x`. Over a linear code the
//! difference `c = y - x` ranges over all nonzero codewords independently of
//! `x`, and the patterns form a binary linear code `S`. Hence
//!
//! ```text
//! d_min = min over c ≠ 0 in C, s in S of d(s, s + c)
//! ```
//!
//! The [`DistanceMode::Weight`] kernel enumerates `c` once, uses
//! `Σ min_x d(x, x + c_i)` as a lower bound and `wt(c)` (the `s = 0` term) as
//! an upper bound, and only searches `S` when the two disagree.
//! [`DistanceMode::Pairwise`] compares all pairs directly.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::code::matrix::GeneratorMatrix;
use crate::code::packed::{Packed, MAX_PACKED_LEN};
use crate::code::span::LinearCode;
use crate::code::standard::{standard_form, CodeType};
use crate::error::{Error, Result};
use crate::gau::gau_dist_vec;
use crate::ring::{RingElement, RingVector};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceMode {
    /// Coset-reduced weight enumeration, one pass over the codewords.
    #[default]
    Weight,
    /// All `M(M-1)/2` pairs.
    Pairwise,
}

impl FromStr for DistanceMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "weight" => Ok(Self::Weight),
            "pairwise" => Ok(Self::Pairwise),
            other => Err(Error::Parse(format!("unknown distance mode {other:?}"))),
        }
    }
}

impl fmt::Display for DistanceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Weight => "weight",
            Self::Pairwise => "pairwise",
        })
    }
}

/// Exact minimum Gau distance over distinct codewords.
pub fn min_gau_distance(code: &LinearCode, mode: DistanceMode) -> Result<u32> {
    if code.size() < 2 {
        return Err(Error::UndefinedDistance(code.size()));
    }
    let n = code.length();
    if n > MAX_PACKED_LEN {
        return pairwise_min_distance_scalar(code.words());
    }
    let packed: Vec<Packed> = code.words().map(|w| Packed::from_vector(w).expect("length checked")).collect();
    let d = match mode {
        DistanceMode::Pairwise => pairwise_min_packed(&packed),
        DistanceMode::Weight => {
            let patterns = PatternSpace::from_patterns(n, packed.iter().map(|p| p.coset_pattern()));
            coset_min_distance(packed.iter().copied(), &patterns)
        }
    };
    Ok(d.expect("at least two codewords"))
}

/// Plain pairwise scan with the scalar Gau distance.
pub fn pairwise_min_distance_scalar<'a>(words: impl Iterator<Item = &'a RingVector>) -> Result<u32> {
    let words: Vec<&RingVector> = words.collect();
    if words.len() < 2 {
        return Err(Error::UndefinedDistance(words.len()));
    }
    let mut best = u32::MAX;
    for (i, x) in words.iter().enumerate() {
        for y in &words[i + 1..] {
            best = best.min(gau_dist_vec(x, y)?);
        }
    }
    Ok(best)
}

fn pairwise_min_packed(words: &[Packed]) -> Option<u32> {
    let mut best: Option<u32> = None;
    for (i, &x) in words.iter().enumerate() {
        for &y in &words[i + 1..] {
            let d = x.distance(y);
            if best.map_or(true, |b| d < b) {
                best = Some(d);
                if d == 1 {
                    return best;
                }
            }
        }
    }
    best
}

/// Minimum nonzero Gau weight. An upper bound on the minimum distance; it
/// coincides with it only when the minimising codeword needs no translate.
pub fn min_gau_weight(code: &LinearCode) -> Option<u32> {
    code.words().filter(|w| !w.is_zero()).map(crate::gau::gau_weight_vec).min()
}

/// The binary code of coset patterns of a linear code.
#[derive(Clone, Debug)]
pub struct PatternSpace {
    elements: Vec<u128>,
    full: bool,
}

impl PatternSpace {
    fn from_patterns(n: usize, patterns: impl Iterator<Item = u128>) -> Self {
        let set: HashSet<u128> = patterns.collect();
        let full = n < 128 && set.len() == 1usize << n;
        let mut elements: Vec<u128> = set.into_iter().collect();
        elements.sort_unstable();
        Self { elements, full }
    }

    /// Span over GF(2) of the patterns of `g` and `w·g` for every row `g`.
    fn from_generators(n: usize, rows: &[Packed]) -> Self {
        let w = RingElement::W;
        let mut basis: Vec<u128> = Vec::new();
        for p in rows {
            let times_w = Packed::from_vector(&p.to_vector(n).scale(w)).expect("same length");
            for mut v in [p.coset_pattern(), times_w.coset_pattern()] {
                for &b in &basis {
                    v = v.min(v ^ b);
                }
                if v != 0 {
                    basis.push(v);
                    basis.sort_unstable_by(|a, b| b.cmp(a));
                }
            }
        }
        let full = basis.len() == n;
        let mut elements = vec![0u128];
        if !full {
            for b in &basis {
                let extra: Vec<u128> = elements.iter().map(|e| e ^ b).collect();
                elements.extend(extra);
            }
        }
        Self { elements, full }
    }
}

/// Running minimum over difference vectors.
struct CosetScan<'a> {
    patterns: &'a PatternSpace,
    best: Option<u32>,
}

impl CosetScan<'_> {
    #[inline(always)]
    fn visit(&mut self, c: Packed) {
        if c.is_zero() {
            return;
        }
        let floor = c.translate_weight_floor();
        if self.best.is_some_and(|b| floor >= b) {
            return;
        }
        let weight = c.weight();
        let exact = if floor == weight || self.patterns.full {
            floor
        } else {
            let mut e = weight;
            for &s in &self.patterns.elements {
                let x = Packed::ones_at(s);
                e = e.min(x.distance(x + c));
                if e == floor {
                    break;
                }
            }
            e
        };
        if self.best.map_or(true, |b| exact < b) {
            self.best = Some(exact);
        }
    }

    fn done(&self) -> bool {
        self.best == Some(1)
    }
}

fn coset_min_distance(diffs: impl Iterator<Item = Packed>, patterns: &PatternSpace) -> Option<u32> {
    let mut scan = CosetScan { patterns, best: None };
    for c in diffs {
        scan.visit(c);
        if scan.done() {
            break;
        }
    }
    scan.best
}

/// Size and minimum distance of `⟨G⟩_R` measured without storing the code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanMeasure {
    pub length: usize,
    pub code_type: CodeType,
    /// `None` for the zero code.
    pub min_distance: Option<u32>,
}

impl SpanMeasure {
    pub fn size(&self) -> Option<u128> {
        self.code_type.size()
    }
}

/// Streams every codeword of `⟨G⟩_R` through the weight kernel.
///
/// Codewords are generated from the standard form, where each combination
/// of row multiples is a distinct codeword, so nothing is stored. Fails if
/// the code is longer than 128 or has more than `max_codewords` words.
pub fn measure_span(g: &GeneratorMatrix, max_codewords: u128) -> Result<SpanMeasure> {
    let n = g.ncols();
    if n > MAX_PACKED_LEN {
        return Err(Error::Capacity { what: format!("streamed code length {n}"), limit: MAX_PACKED_LEN });
    }
    let sf = standard_form(g);
    let code_type = sf.code_type();
    let size = code_type.size().filter(|&s| s <= max_codewords).ok_or_else(|| Error::Capacity {
        what: format!("streaming a code of 2^{} codewords", code_type.size_log2()),
        limit: usize::try_from(max_codewords).unwrap_or(usize::MAX),
    })?;
    if size < 2 {
        return Ok(SpanMeasure { length: n, code_type, min_distance: None });
    }
    let rows: Vec<Packed> =
        sf.rows_in_original_order().iter().map(|r| Packed::from_vector(r).expect("length checked")).collect();
    let levels: Vec<Vec<Packed>> = sf
        .rows_in_original_order()
        .iter()
        .map(|r| {
            let mut seen = HashSet::new();
            RingElement::ALL
                .iter()
                .map(|&c| Packed::from_vector(&r.scale(c)).expect("length checked"))
                .filter(|p| seen.insert(*p))
                .collect()
        })
        .collect();
    let patterns = PatternSpace::from_generators(n, &rows);
    let mut scan = CosetScan { patterns: &patterns, best: None };
    walk(&levels, Packed::ZERO, &mut scan);
    Ok(SpanMeasure { length: n, code_type, min_distance: scan.best })
}

fn walk(levels: &[Vec<Packed>], acc: Packed, scan: &mut CosetScan<'_>) {
    match levels {
        [] => scan.visit(acc),
        [last] => {
            for &m in last {
                scan.visit(acc + m);
            }
        }
        [first, rest @ ..] => {
            for &m in first {
                if scan.done() {
                    return;
                }
                walk(rest, acc + m, scan);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::span::span_enumerate;

    fn g(rows: &[&str]) -> GeneratorMatrix {
        GeneratorMatrix::parse_rows(rows).unwrap()
    }

    fn all_routes(m: &GeneratorMatrix) -> u32 {
        let code = span_enumerate(m, 1 << 16).unwrap();
        let scalar = pairwise_min_distance_scalar(code.words()).unwrap();
        assert_eq!(min_gau_distance(&code, DistanceMode::Pairwise).unwrap(), scalar, "{m}");
        assert_eq!(min_gau_distance(&code, DistanceMode::Weight).unwrap(), scalar, "{m}");
        let streamed = measure_span(m, 1 << 20).unwrap();
        assert_eq!(streamed.min_distance, Some(scalar), "{m}");
        assert_eq!(streamed.size(), Some(code.size() as u128));
        scalar
    }

    #[test]
    fn octa_and_simplex_examples() {
        assert_eq!(all_routes(&g(&["0 2 2w 2+2w", "2+2w 0 2 2w", "2w 2+2w 0 2", "2 2w 2+2w 0"])), 4);
        assert_eq!(all_routes(&g(&["1 1 1 1 0 2 2w 2+2w", "0 2 2w 2+2w 1 1 1 1"])), 8);
    }

    #[test]
    fn weight_is_only_an_upper_bound() {
        // span of (1+w): the pair (0, 3+w)... differences in {3+w, 1+3w}
        // are realised at distance 1 by a translate
        let m = g(&["1+w"]);
        let code = span_enumerate(&m, 100).unwrap();
        assert_eq!(all_routes(&m), 1);
        assert_eq!(min_gau_weight(&code), Some(1));
        let m = g(&["3+w 3+w", "2 0"]);
        let code = span_enumerate(&m, 1000).unwrap();
        let d = all_routes(&m);
        assert!(min_gau_weight(&code).unwrap() >= d);
    }

    #[test]
    fn restricted_pattern_space() {
        // patterns of (w, w) and (2w, 2w): only 00 and 11
        for rows in [&["w w"][..], &["w 0 w", "0 2 2"], &["2+w 2+w 2+w 2+w"], &["3w 1+2w 0 w"]] {
            all_routes(&g(rows));
        }
    }

    #[test]
    fn degenerate_codes() {
        let zero = span_enumerate(&g(&["0 0"]), 10).unwrap();
        assert!(matches!(min_gau_distance(&zero, DistanceMode::Weight), Err(Error::UndefinedDistance(1))));
        assert_eq!(measure_span(&g(&["0 0"]), 10).unwrap().min_distance, None);
        assert!(matches!(measure_span(&g(&["1 0", "0 1"]), 255), Err(Error::Capacity { .. })));
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("Weight".parse::<DistanceMode>().unwrap(), DistanceMode::Weight);
        assert_eq!("pairwise".parse::<DistanceMode>().unwrap(), DistanceMode::Pairwise);
        assert!("lee".parse::<DistanceMode>().is_err());
    }
}
