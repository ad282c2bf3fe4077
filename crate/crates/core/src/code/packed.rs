//! Bitsliced vectors over `R` for the enumeration kernels.
//!
//! A vector of length `n ≤ 128` is stored as four bit planes holding bit 0
//! and bit 1 of each `a` and `b` coefficient. Addition is a two-bit ripple
//! per lane. The Gau-matrix row and column indices are GF(2)-linear in
//! those bits:
//!
//! ```text
//! row = (a1 ^ b0) + 2·(b0 ^ b1)
//! col = (a0 ^ a1 ^ b0) + 2·b1
//! ```
//!
//! so the distance between two vectors is two popcounts over the XOR of
//! their planes.

use crate::ring::{RingElement, RingVector};

pub const MAX_PACKED_LEN: usize = 128;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Packed {
    pub a0: u128,
    pub a1: u128,
    pub b0: u128,
    pub b1: u128,
}

impl Packed {
    pub const ZERO: Self = Self { a0: 0, a1: 0, b0: 0, b1: 0 };

    /// `None` when the vector is longer than [`MAX_PACKED_LEN`].
    pub fn from_vector(x: &RingVector) -> Option<Self> {
        if x.len() > MAX_PACKED_LEN {
            return None;
        }
        let mut p = Self::ZERO;
        for (i, e) in x.iter().enumerate() {
            let bit = 1u128 << i;
            let (a, b) = (e.a(), e.b());
            if a & 1 != 0 {
                p.a0 |= bit;
            }
            if a & 2 != 0 {
                p.a1 |= bit;
            }
            if b & 1 != 0 {
                p.b0 |= bit;
            }
            if b & 2 != 0 {
                p.b1 |= bit;
            }
        }
        Some(p)
    }

    pub fn to_vector(self, n: usize) -> RingVector {
        (0..n)
            .map(|i| {
                let bit = |plane: u128| ((plane >> i) & 1) as u8;
                RingElement::new(bit(self.a0) | bit(self.a1) << 1, bit(self.b0) | bit(self.b1) << 1)
            })
            .collect()
    }

    /// The vector with entry 1 where `mask` is set and 0 elsewhere.
    pub fn ones_at(mask: u128) -> Self {
        Self { a0: mask, ..Self::ZERO }
    }

    #[inline(always)]
    fn xor(self, o: Self) -> Self {
        Self { a0: self.a0 ^ o.a0, a1: self.a1 ^ o.a1, b0: self.b0 ^ o.b0, b1: self.b1 ^ o.b1 }
    }

    /// Lanes whose Gau-matrix row index differs from zero's, and likewise
    /// for the column index, given planes that are an XOR of two vectors.
    #[inline(always)]
    fn letter_differences(self) -> (u128, u128) {
        let row = (self.a1 ^ self.b0) | (self.b0 ^ self.b1);
        let col = (self.a0 ^ self.a1 ^ self.b0) | self.b1;
        (row, col)
    }

    /// Gau distance between two packed vectors.
    #[inline(always)]
    pub fn distance(self, o: Self) -> u32 {
        let (row, col) = self.xor(o).letter_differences();
        row.count_ones() + col.count_ones()
    }

    /// Gau weight (distance to zero).
    #[inline(always)]
    pub fn weight(self) -> u32 {
        let (row, col) = self.letter_differences();
        row.count_ones() + col.count_ones()
    }

    /// `Σ min_x d(x, x + c_i)`: the weight minus one for every entry equal
    /// to `3+w` or `1+3w`, the two differences that some translate realises
    /// at distance 1 instead of 2.
    #[inline(always)]
    pub fn translate_weight_floor(self) -> u32 {
        self.weight() - (self.a0 & self.b0 & (self.a1 ^ self.b1)).count_ones()
    }

    /// Lanes whose entry lies outside the isometric-translation subgroup
    /// `{a ≡ b (mod 2)}`.
    #[inline(always)]
    pub fn coset_pattern(self) -> u128 {
        self.a0 ^ self.b0
    }

    pub fn is_zero(self) -> bool {
        (self.a0 | self.a1 | self.b0 | self.b1) == 0
    }
}

impl std::ops::Add for Packed {
    type Output = Self;

    #[inline(always)]
    fn add(self, o: Self) -> Self {
        Self {
            a0: self.a0 ^ o.a0,
            a1: self.a1 ^ o.a1 ^ (self.a0 & o.a0),
            b0: self.b0 ^ o.b0,
            b1: self.b1 ^ o.b1 ^ (self.b0 & o.b0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gau::gau_dist;

    fn single(x: RingElement) -> Packed {
        Packed::from_vector(&RingVector::new(vec![x])).unwrap()
    }

    #[test]
    fn lane_arithmetic_matches_scalar() {
        for x in RingElement::ALL {
            assert_eq!(single(x).to_vector(1)[0], x);
            for y in RingElement::ALL {
                assert_eq!((single(x) + single(y)).to_vector(1)[0], x + y);
                assert_eq!(single(x).distance(single(y)), gau_dist(x, y));
            }
            assert_eq!(single(x).weight(), gau_dist(x, RingElement::ZERO));
            let floor = RingElement::ALL.iter().map(|&t| gau_dist(t, t + x)).min().unwrap();
            assert_eq!(single(x).translate_weight_floor(), floor, "{x}");
            assert_eq!(single(x).coset_pattern() == 1, x.a() % 2 != x.b() % 2);
        }
    }

    #[test]
    fn wide_vectors() {
        let v: RingVector = (0..128).map(|i| RingElement::ALL[(i * 7) % 16]).collect();
        let p = Packed::from_vector(&v).unwrap();
        assert_eq!(p.to_vector(128), v);
        assert!(Packed::from_vector(&RingVector::zeros(129)).is_none());
    }
}
