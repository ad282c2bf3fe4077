use indexmap::IndexSet;

use crate::code::matrix::GeneratorMatrix;
use crate::error::{Error, Result};
use crate::gau::{ring_complement_image, ring_reverse_complement_image, ring_reverse_image};
use crate::ring::{RingElement, RingVector};

/// Default cap on the number of codewords [`span_enumerate`] will store.
pub const DEFAULT_SPAN_LIMIT: usize = 1 << 22;

/// An explicitly enumerated linear code: a submodule of `Rⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    words: IndexSet<RingVector>,
}

impl LinearCode {
    /// Code length `n` over `R`.
    pub fn length(&self) -> usize {
        self.n
    }

    /// Number of codewords `M`.
    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn contains(&self, x: &RingVector) -> bool {
        self.words.contains(x)
    }

    pub fn words(&self) -> impl ExactSizeIterator<Item = &RingVector> + '_ {
        self.words.iter()
    }

    pub fn word(&self, i: usize) -> Option<&RingVector> {
        self.words.get_index(i)
    }

    /// Whole-code check: the reverse image of every codeword is a codeword.
    pub fn is_reverse_closed(&self) -> bool {
        self.words.iter().all(|c| self.contains(&ring_reverse_image(c)))
    }

    /// Whole-code check: the complement image of every codeword is a codeword.
    pub fn is_complement_closed(&self) -> bool {
        self.words.iter().all(|c| self.contains(&ring_complement_image(c)))
    }

    pub fn is_reverse_complement_closed(&self) -> bool {
        self.words.iter().all(|c| self.contains(&ring_reverse_complement_image(c)))
    }

    /// Closed under addition and under every scalar multiple.
    pub fn is_submodule(&self) -> bool {
        self.contains(&RingVector::zeros(self.n))
            && self.words.iter().all(|x| {
                RingElement::ALL.iter().all(|&c| self.contains(&x.scale(c)))
                    && self.words.iter().all(|y| x.try_add(y).map(|s| self.contains(&s)).unwrap_or(false))
            })
    }
}

/// Row span `⟨G⟩_R`, built by closing `{0}` under `+ c·row` for every row
/// and scalar. Fails once more than `limit` codewords would be stored.
pub fn span_enumerate(g: &GeneratorMatrix, limit: usize) -> Result<LinearCode> {
    if limit == 0 {
        return Err(Error::Input("span limit must be at least 1".into()));
    }
    let n = g.ncols();
    let mut words: IndexSet<RingVector> = IndexSet::new();
    words.insert(RingVector::zeros(n));
    for row in g.rows() {
        let mut multiples: IndexSet<RingVector> = IndexSet::new();
        for c in RingElement::ALL {
            multiples.insert(row.scale(c));
        }
        if multiples.len() == 1 {
            continue;
        }
        let mut next: IndexSet<RingVector> = IndexSet::with_capacity(words.len() * 2);
        for w in &words {
            for m in &multiples {
                next.insert(w.iter().zip(m.iter()).map(|(&a, &b)| a + b).collect());
                if next.len() > limit {
                    return Err(Error::Capacity { what: "span enumeration".into(), limit });
                }
            }
        }
        words = next;
    }
    Ok(LinearCode { n, words })
}
