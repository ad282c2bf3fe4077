//! DNA codes built from linear codes over `R = Z4 + wZ4`, `w² = 2 + 2w`.
//!
//! The Gau map sends each ring element to a pair of nucleotides and is an
//! isometry from the Gau distance to the Hamming distance, so a linear code
//! over `R` of length `n` becomes a DNA code of length `2n`.

pub mod cli;
pub mod code;
pub mod dna;
pub mod error;
pub mod families;
pub mod gau;
pub mod io;
pub mod ring;

pub use error::{Error, Result};
