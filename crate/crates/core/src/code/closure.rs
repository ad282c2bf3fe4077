//! Generator-level closure tests.
//!
//! Because `x ↦ φ⁻¹(φ(x)^r)` is R-linear, `φ(⟨G⟩)` is closed under reverse
//! as soon as the reverse image of every row lies in `⟨G⟩`. Complementing
//! adds the all-`(2+2w)` vector, so closure under complement is the single
//! membership `(2+2w, …, 2+2w) ∈ ⟨G⟩`. Membership is decided by reduction
//! against the standard form, which needs no enumeration.

use crate::code::matrix::GeneratorMatrix;
use crate::code::span::LinearCode;
use crate::code::standard::{standard_form, StandardForm};
use crate::dna::DnaCode;
use crate::gau::{phi_vec, ring_reverse_image};
use crate::ring::{RingElement, RingVector};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Closures {
    pub reverse: bool,
    pub complement: bool,
    pub reverse_complement: bool,
}

pub fn is_reverse_closed_rows(g: &GeneratorMatrix) -> bool {
    reverse_closed_rows(g, &standard_form(g))
}

pub fn is_complement_closed(g: &GeneratorMatrix) -> bool {
    complement_closed(g, &standard_form(g))
}

fn reverse_closed_rows(g: &GeneratorMatrix, sf: &StandardForm) -> bool {
    g.rows().iter().all(|row| sf.contains(&ring_reverse_image(row)))
}

fn complement_closed(g: &GeneratorMatrix, sf: &StandardForm) -> bool {
    sf.contains(&RingVector::constant(g.ncols(), RingElement::TWO_PLUS_TWO_W))
}

/// Reverse, complement and reverse-complement closure of `φ(⟨G⟩)` decided
/// from the generator rows.
pub fn generator_closures(g: &GeneratorMatrix) -> Closures {
    let sf = standard_form(g);
    let reverse = reverse_closed_rows(g, &sf);
    let complement = complement_closed(g, &sf);
    // rc(x) = rev(x) + (2+2w, …): on a linear code it is closed iff
    // rc(0) is a codeword and rev is closed.
    let reverse_complement = reverse && complement;
    Closures { reverse, complement, reverse_complement }
}

/// Applies `φ` to every codeword.
pub fn to_dna_code(code: &LinearCode) -> DnaCode {
    DnaCode::from_words_unchecked(code.length() * 2, code.words().map(phi_vec).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::span::span_enumerate;

    fn g(rows: &[&str]) -> GeneratorMatrix {
        GeneratorMatrix::parse_rows(rows).unwrap()
    }

    #[test]
    fn reverse_examples() {
        assert!(is_reverse_closed_rows(&g(&["1 1 1 1 0 2 2w 2+2w", "0 2 2w 2+2w 1 1 1 1"])));
        assert!(!is_reverse_closed_rows(&g(&["1 0"])));
        assert!(is_reverse_closed_rows(&g(&["1 1"])));
    }

    #[test]
    fn complement_examples() {
        assert!(is_complement_closed(&g(&["1 1"])));
        assert!(!is_complement_closed(&GeneratorMatrix::zero(1, 3).unwrap()));
        assert!(is_complement_closed(&g(&["1 1 1 1 0 2 2w 2+2w", "0 2 2w 2+2w 1 1 1 1"])));
    }

    #[test]
    fn generator_tests_agree_with_whole_code() {
        for rows in [
            &["1 0"][..],
            &["1 1"],
            &["w 2"],
            &["1 2 3"],
            &["2 0 2", "0 2w 0"],
            &["1 w 3w 3", "0 2 2 0"],
            &["2+2w 2+2w", "w 3w"],
        ] {
            let m = g(rows);
            let code = span_enumerate(&m, 1 << 16).unwrap();
            let c = generator_closures(&m);
            assert_eq!(c.reverse, code.is_reverse_closed(), "{m}");
            assert_eq!(c.complement, code.is_complement_closed(), "{m}");
            assert_eq!(c.reverse_complement, code.is_reverse_complement_closed(), "{m}");
        }
    }

    #[test]
    fn dna_image() {
        let code = span_enumerate(&GeneratorMatrix::zero(1, 4).unwrap(), 1).unwrap();
        let dna = to_dna_code(&code);
        assert_eq!(dna.length(), 8);
        assert_eq!(dna.words().map(|w| w.to_string()).collect::<Vec<_>>(), vec!["AAAAAAAA"]);
    }
}
