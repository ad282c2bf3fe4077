use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{RingElement, RingVector};

/// A non-empty rectangular matrix over `R` whose rows generate a code.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<RingVector>", into = "Vec<RingVector>")]
pub struct GeneratorMatrix {
    rows: Vec<RingVector>,
}

impl GeneratorMatrix {
    pub fn new(rows: Vec<RingVector>) -> Result<Self> {
        let first = rows.first().ok_or_else(|| Error::Input("generator matrix has no rows".into()))?;
        let n = first.len();
        if n == 0 {
            return Err(Error::Input("generator matrix has no columns".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension { expected: n, found: bad.len() });
        }
        Ok(Self { rows })
    }

    /// Parses rows of element tokens, one row per string.
    pub fn parse_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.as_ref().parse()).collect::<Result<_>>()?)
    }

    pub fn zero(nrows: usize, ncols: usize) -> Result<Self> {
        Self::new(vec![RingVector::zeros(ncols); nrows])
    }

    pub fn rows(&self) -> &[RingVector] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn into_rows(self) -> Vec<RingVector> {
        self.rows
    }

    /// Horizontal block concatenation `(self | other)`.
    pub fn hconcat(&self, other: &Self) -> Result<Self> {
        if self.nrows() != other.nrows() {
            return Err(Error::Dimension { expected: self.nrows(), found: other.nrows() });
        }
        Self::new(self.rows.iter().zip(&other.rows).map(|(a, b)| a.concat(b)).collect())
    }

    /// `(row / self)`: `row` placed on top.
    pub fn with_top_row(&self, row: RingVector) -> Result<Self> {
        let mut rows = Vec::with_capacity(self.nrows() + 1);
        rows.push(row);
        rows.extend(self.rows.iter().cloned());
        Self::new(rows)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(RingVector::is_zero)
    }

    pub fn entry(&self, i: usize, j: usize) -> RingElement {
        self.rows[i][j]
    }
}

impl TryFrom<Vec<RingVector>> for GeneratorMatrix {
    type Error = Error;

    fn try_from(rows: Vec<RingVector>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<GeneratorMatrix> for Vec<RingVector> {
    fn from(g: GeneratorMatrix) -> Self {
        g.rows
    }
}

impl fmt::Display for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_ragged() {
        assert!(matches!(GeneratorMatrix::new(vec![]), Err(Error::Input(_))));
        assert!(matches!(GeneratorMatrix::parse_rows(&["0 1", "1"]), Err(Error::Dimension { .. })));
    }

    #[test]
    fn concat_and_stack() {
        let g = GeneratorMatrix::parse_rows(&["1 1"]).unwrap();
        let gg = g.hconcat(&g).unwrap();
        assert_eq!(gg, GeneratorMatrix::parse_rows(&["1 1 1 1"]).unwrap());
        let s = gg.with_top_row("0 2 2w 2+2w".parse().unwrap()).unwrap();
        assert_eq!(s.nrows(), 2);
        assert_eq!(s.entry(0, 3), RingElement::TWO_PLUS_TWO_W);
        assert!(g.with_top_row("0".parse().unwrap()).is_err());
    }
}
