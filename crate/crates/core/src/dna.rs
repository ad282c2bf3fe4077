//! Explicit DNA codes: Hamming distance, closure checks, GC filtering and
//! the bound report over the registered family instances.

use std::sync::OnceLock;

use indexmap::IndexSet;
use serde::{Deserialize, Serialize};

use crate::code::{measure_span, span_enumerate, to_dna_code, Closures, DEFAULT_SPAN_LIMIT};
use crate::error::{Error, Result};
use crate::families::registered_instances;
use crate::gau::{DnaBase, DnaWord};

/// A set of equal-length DNA words. The minimum distance is computed on
/// first request and cached.
#[derive(Clone, Debug)]
pub struct DnaCode {
    n: usize,
    words: IndexSet<DnaWord>,
    min_distance: OnceLock<Option<usize>>,
}

impl DnaCode {
    /// Infers the length from the first word. Duplicates are merged.
    pub fn from_words(words: Vec<DnaWord>) -> Result<Self> {
        let n = words.first().ok_or_else(|| Error::Input("empty DNA code".into()))?.len();
        Self::with_length(n, words)
    }

    /// Like [`DnaCode::from_words`] but allows an empty word list.
    pub fn with_length(n: usize, words: Vec<DnaWord>) -> Result<Self> {
        if let Some(w) = words.iter().find(|w| w.len() != n) {
            return Err(Error::Dimension { expected: n, found: w.len() });
        }
        Ok(Self::from_words_unchecked(n, words))
    }

    pub(crate) fn from_words_unchecked(n: usize, words: Vec<DnaWord>) -> Self {
        Self { n, words: words.into_iter().collect(), min_distance: OnceLock::new() }
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &DnaWord) -> bool {
        self.words.contains(w)
    }

    pub fn words(&self) -> impl ExactSizeIterator<Item = &DnaWord> + '_ {
        self.words.iter()
    }

    /// Minimum Hamming distance over distinct pairs; `None` below two words.
    pub fn min_distance(&self) -> Option<usize> {
        *self.min_distance.get_or_init(|| pairwise_min(&self.words, self.n))
    }

    /// Same length and same set of words, ignoring order.
    pub fn same_words(&self, other: &Self) -> bool {
        self.n == other.n && self.words.len() == other.words.len() && self.words.iter().all(|w| other.contains(w))
    }

    /// Histogram of GC weights, indexed `0..=n`.
    pub fn gc_histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.n + 1];
        for w in &self.words {
            h[w.gc_weight()] += 1;
        }
        h
    }
}

pub fn hamming(x: &DnaWord, y: &DnaWord) -> Result<usize> {
    x.hamming(y)
}

/// Two bit planes per word, one bit per base.
fn pack(w: &DnaWord) -> (u128, u128) {
    w.bases().iter().enumerate().fold((0, 0), |(lo, hi), (i, b)| {
        let idx = b.index() as u128;
        (lo | (idx & 1) << i, hi | (idx >> 1) << i)
    })
}

fn pairwise_min(words: &IndexSet<DnaWord>, n: usize) -> Option<usize> {
    if words.len() < 2 {
        return None;
    }
    let mut best = n;
    if n <= 128 {
        let packed: Vec<(u128, u128)> = words.iter().map(pack).collect();
        for (i, &(xl, xh)) in packed.iter().enumerate() {
            for &(yl, yh) in &packed[i + 1..] {
                best = best.min(((xl ^ yl) | (xh ^ yh)).count_ones() as usize);
            }
            if best == 1 {
                break;
            }
        }
    } else {
        let ws: Vec<&DnaWord> = words.iter().collect();
        for (i, x) in ws.iter().enumerate() {
            for y in &ws[i + 1..] {
                best = best.min(x.bases().iter().zip(y.bases()).filter(|(a, b)| a != b).count());
            }
        }
    }
    Some(best)
}

/// Whether every word's reverse, complement and reverse complement lie in
/// the code.
pub fn check_closures(code: &DnaCode) -> Closures {
    let all = |f: fn(&DnaWord) -> DnaWord| code.words().all(|w| code.contains(&f(w)));
    Closures {
        reverse: all(DnaWord::reverse),
        complement: all(DnaWord::complement),
        reverse_complement: all(DnaWord::reverse_complement),
    }
}

/// `min_{x, y} d_H(x, y^rc)` including `x = y`. `None` for an empty code.
pub fn rc_cross_distance(code: &DnaCode) -> Option<usize> {
    let rcs: Vec<DnaWord> = code.words().map(DnaWord::reverse_complement).collect();
    code.words()
        .flat_map(|x| rcs.iter().map(move |y| x.bases().iter().zip(y.bases()).filter(|(a, b)| a != b).count()))
        .min()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcFilterSpec {
    /// Required number of G/C bases.
    pub u: usize,
    /// Also drop the all-GC and no-GC words.
    pub drop_trivial: bool,
}

/// Keeps the words whose GC weight equals `spec.u`.
pub fn gc_filter(code: &DnaCode, spec: &GcFilterSpec) -> DnaCode {
    let n = code.length();
    let keep = |w: &&DnaWord| {
        let gc = w.gc_weight();
        gc == spec.u && !(spec.drop_trivial && (gc == 0 || gc == n))
    };
    DnaCode::from_words_unchecked(n, code.words().filter(keep).cloned().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub n: usize,
    /// Measured minimum distance of the unfiltered code.
    pub d_h: usize,
    pub u: usize,
    pub label: String,
    pub size: usize,
    pub filtered_size: usize,
    pub filtered_distance: Option<usize>,
    /// Closure flags of the filtered code.
    pub closures: Closures,
}

/// Every registered family instance of DNA length `n` whose measured
/// minimum distance is at least `d`, filtered to GC weight `u`. Sorted by
/// filtered size, largest first, then by label.
pub fn bound_report(n: usize, d: usize, u: usize) -> Result<Vec<BoundRecord>> {
    let spec = GcFilterSpec { u, drop_trivial: true };
    let mut out = Vec::new();
    for family in registered_instances() {
        let g = family.build()?;
        if 2 * g.ncols() != n {
            continue;
        }
        let measured = measure_span(&g, DEFAULT_SPAN_LIMIT as u128)?;
        let d_h = measured.min_distance.map_or(0, |x| x as usize);
        if d_h < d {
            continue;
        }
        let code = to_dna_code(&span_enumerate(&g, DEFAULT_SPAN_LIMIT)?);
        let filtered = gc_filter(&code, &spec);
        out.push(BoundRecord {
            n,
            d_h,
            u,
            label: family.label(),
            size: code.size(),
            filtered_size: filtered.size(),
            filtered_distance: filtered.min_distance(),
            closures: check_closures(&filtered),
        });
    }
    out.sort_by(|a, b| b.filtered_size.cmp(&a.filtered_size).then_with(|| a.label.cmp(&b.label)));
    Ok(out)
}

/// All `4^n` words of length `n`, lexicographic in `A, G, C, T` order.
pub fn all_words(n: usize) -> impl Iterator<Item = DnaWord> {
    (0..1usize << (2 * n)).map(move |mut i| {
        let mut bases = vec![DnaBase::A; n];
        for b in bases.iter_mut().rev() {
            *b = DnaBase::from_index((i & 3) as u8);
            i >>= 2;
        }
        DnaWord::new(bases)
    })
}
