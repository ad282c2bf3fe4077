//! Row reduction over `R` to the chain-ring standard form
//!
//! ```text
//! ( I   A01  A02  A03  A04 )
//! ( 0   wI   wA   wA   wA  )
//! ( 0   0    2I   2A   2A  )
//! ( 0   0    0    2wI  2wA )
//! ```
//!
//! Pivots are taken in ideal-chain order: among the not-yet-reduced rows and
//! columns the entry of lowest valuation is chosen, ties going to the
//! leftmost column and then the lowest row. The pivot is scaled to the
//! canonical generator `1, w, 2` or `2w`, and the column is moved into pivot
//! position. Since every remaining entry has valuation at least the
//! pivot's, it is divisible by the pivot and can be cleared.

use serde::{Deserialize, Serialize};

use crate::code::matrix::GeneratorMatrix;
use crate::ring::{RingElement, RingVector};

/// `{k0, k1, k2, k3}`: the number of pivots of valuation 0..=3.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeType {
    pub k0: usize,
    pub k1: usize,
    pub k2: usize,
    pub k3: usize,
}

impl CodeType {
    pub fn new(k0: usize, k1: usize, k2: usize, k3: usize) -> Self {
        Self { k0, k1, k2, k3 }
    }

    /// `log2(16^k0 · 8^k1 · 4^k2 · 2^k3)`.
    pub fn size_log2(&self) -> u32 {
        (4 * self.k0 + 3 * self.k1 + 2 * self.k2 + self.k3) as u32
    }

    /// `16^k0 · 8^k1 · 4^k2 · 2^k3`, if it fits in a `u128`.
    pub fn size(&self) -> Option<u128> {
        1u128.checked_shl(self.size_log2()).filter(|_| self.size_log2() < 128)
    }

    pub fn rank(&self) -> usize {
        self.k0 + self.k1 + self.k2 + self.k3
    }
}

impl std::fmt::Display for CodeType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{}, {}, {}, {}}}", self.k0, self.k1, self.k2, self.k3)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    /// Nonzero reduced rows, columns in `column_order`.
    rows: Vec<RingVector>,
    /// Pivot valuation of each row.
    valuations: Vec<u8>,
    /// `column_order[j]` is the original index of reduced column `j`.
    column_order: Vec<usize>,
    code_type: CodeType,
}

impl StandardForm {
    pub fn code_type(&self) -> CodeType {
        self.code_type
    }

    pub fn column_order(&self) -> &[usize] {
        &self.column_order
    }

    /// True when no column swaps were needed.
    pub fn is_identity_permutation(&self) -> bool {
        self.column_order.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn valuations(&self) -> &[u8] {
        &self.valuations
    }

    /// The reduced matrix in permuted column order, or `None` for the zero code.
    pub fn matrix(&self) -> Option<GeneratorMatrix> {
        GeneratorMatrix::new(self.rows.clone()).ok()
    }

    /// Reduced rows with the column permutation undone; they generate the
    /// same code as the input matrix.
    pub fn rows_in_original_order(&self) -> Vec<RingVector> {
        self.rows.iter().map(|r| self.unpermute(r)).collect()
    }

    fn unpermute(&self, row: &RingVector) -> RingVector {
        let mut out = vec![RingElement::ZERO; row.len()];
        for (j, &orig) in self.column_order.iter().enumerate() {
            out[orig] = row[j];
        }
        RingVector::new(out)
    }

    /// Span membership by reduction against the pivots. `x` is in original
    /// column order.
    pub fn contains(&self, x: &RingVector) -> bool {
        if x.len() != self.column_order.len() {
            return false;
        }
        let mut rest: Vec<RingElement> = self.column_order.iter().map(|&j| x[j]).collect();
        for (t, (row, &v)) in self.rows.iter().zip(&self.valuations).enumerate() {
            let pivot = RingElement::chain_generator(v);
            let Some(q) = pivot.divides(rest[t]) else {
                return false;
            };
            if !q.is_zero() {
                for (r, &e) in rest.iter_mut().zip(row.iter()) {
                    *r = *r - q * e;
                }
            }
        }
        rest.iter().all(|e| e.is_zero())
    }
}

pub fn standard_form(g: &GeneratorMatrix) -> StandardForm {
    let n = g.ncols();
    let mut m: Vec<Vec<RingElement>> = g.rows().iter().map(|r| r.entries().to_vec()).collect();
    let mut column_order: Vec<usize> = (0..n).collect();
    let mut valuations = Vec::new();
    let mut t = 0;
    while t < m.len() && t < n {
        // (valuation, column, row) of the best remaining entry
        let mut best: Option<(u8, usize, usize)> = None;
        for j in t..n {
            for (i, row) in m.iter().enumerate().skip(t) {
                let v = row[j].valuation();
                if v < 4 && best.map_or(true, |(bv, _, _)| v < bv) {
                    best = Some((v, j, i));
                }
            }
        }
        let Some((v, col, row)) = best else {
            break;
        };
        m.swap(t, row);
        if col != t {
            for r in m.iter_mut() {
                r.swap(t, col);
            }
            column_order.swap(t, col);
        }
        let generator = RingElement::chain_generator(v);
        let unit = RingElement::ALL
            .into_iter()
            .find(|u| u.is_unit() && *u * m[t][t] == generator)
            .expect("every element is a unit times a chain generator");
        for e in m[t].iter_mut() {
            *e = unit * *e;
        }
        let pivot_row = m[t].clone();
        for r in m.iter_mut().skip(t + 1) {
            let q = generator.divides(r[t]).expect("pivot has minimal valuation");
            if !q.is_zero() {
                for (e, &p) in r.iter_mut().zip(&pivot_row) {
                    *e = *e - q * p;
                }
            }
        }
        valuations.push(v);
        t += 1;
    }
    m.truncate(valuations.len());
    let mut code_type = CodeType::default();
    for &v in &valuations {
        match v {
            0 => code_type.k0 += 1,
            1 => code_type.k1 += 1,
            2 => code_type.k2 += 1,
            _ => code_type.k3 += 1,
        }
    }
    StandardForm { rows: m.into_iter().map(RingVector::new).collect(), valuations, column_order, code_type }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::span::span_enumerate;

    fn g(rows: &[&str]) -> GeneratorMatrix {
        GeneratorMatrix::parse_rows(rows).unwrap()
    }

    fn check_size(m: &GeneratorMatrix) -> CodeType {
        let sf = standard_form(m);
        let span = span_enumerate(m, 1 << 20).unwrap();
        assert_eq!(sf.code_type().size(), Some(span.size() as u128), "{m}");
        for w in span.words() {
            assert!(sf.contains(w));
        }
        let again = span_enumerate(&GeneratorMatrix::new(sf.rows_in_original_order()).unwrap(), 1 << 20).unwrap();
        assert_eq!(again.size(), span.size());
        assert!(again.words().all(|w| span.contains(w)));
        sf.code_type()
    }

    #[test]
    fn simplex_base_type() {
        let m = g(&["1 1 1 1 0 2 2w 2+2w", "0 2 2w 2+2w 1 1 1 1"]);
        assert_eq!(check_size(&m), CodeType::new(2, 0, 0, 0));
    }

    #[test]
    fn rm_first_order_type() {
        let m = g(&["1 1 1 1", "0 2 0 2", "0 0 2 2"]);
        assert_eq!(check_size(&m), CodeType::new(1, 0, 2, 0));
    }

    #[test]
    fn zero_matrix_type() {
        let sf = standard_form(&GeneratorMatrix::zero(2, 3).unwrap());
        assert_eq!(sf.code_type(), CodeType::default());
        assert!(sf.matrix().is_none());
        assert!(sf.contains(&RingVector::zeros(3)));
        assert!(!sf.contains(&"0 1 0".parse().unwrap()));
    }

    #[test]
    fn mixed_valuations() {
        for rows in [
            &["w 2 0", "2w 0 2w"][..],
            &["2+w 3w 1", "2 2 2"],
            &["0 0 2w", "0 w 0", "2 0 0", "1 1 1"],
            &["3w 2+3w", "2+w 2w"],
            &["2 2+2w 2w", "2+2w 2 0"],
        ] {
            check_size(&g(rows));
        }
    }

    #[test]
    fn column_swap_is_logged() {
        let sf = standard_form(&g(&["0 1", "w 0"]));
        assert_eq!(sf.column_order(), &[1, 0]);
        assert_eq!(sf.code_type(), CodeType::new(1, 1, 0, 0));
        assert!(!sf.is_identity_permutation());
    }
}
