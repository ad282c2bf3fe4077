//! Import and export of codes.
//!
//! | format | content |
//! |--------|---------|
//! | FASTA  | `>family=<label>;index=<i>;gc=<w>` then the word |
//! | text   | one DNA word per line |
//! | CSV    | `n=<len>` then one ring codeword per line, comma-separated tokens |
//! | JSON   | [`CodeDocument`] |

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::code::Closures;
use crate::dna::{check_closures, DnaCode};
use crate::error::{Error, Result};
use crate::gau::{phi_vec, phi_vec_inv, DnaWord};
use crate::ring::{RingElement, RingVector};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Fasta,
    Csv,
    Json,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fasta" | "fa" => Ok(Self::Fasta),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            "text" | "txt" => Ok(Self::Text),
            other => Err(Error::Input(format!("unknown format {other:?}"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Fasta => "fasta",
            Self::Csv => "csv",
            Self::Json => "json",
            Self::Text => "text",
        })
    }
}

/// JSON form of an exported code. `codewords` holds ring codewords as
/// integer element codes `a + 4b` and is absent for codes with no ring
/// preimage on record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    /// DNA length.
    pub length: usize,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_distance: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closures: Option<Closures>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codewords: Option<Vec<Vec<u8>>>,
    pub words: Vec<DnaWord>,
}

impl CodeDocument {
    /// `min_distance` is taken as given so callers holding a value measured
    /// on the ring side avoid a second pairwise scan.
    pub fn from_dna(family: Option<String>, code: &DnaCode, ring: Option<&[RingVector]>, min_distance: Option<usize>) -> Self {
        Self {
            family,
            length: code.length(),
            size: code.size(),
            min_distance,
            closures: Some(check_closures(code)),
            codewords: ring.map(|rs| rs.iter().map(RingVector::codes).collect()),
            words: code.words().cloned().collect(),
        }
    }
}

pub fn write_fasta(out: &mut impl Write, label: &str, code: &DnaCode) -> Result<()> {
    for (i, w) in code.words().enumerate() {
        writeln!(out, ">family={label};index={i};gc={}", w.gc_weight())?;
        writeln!(out, "{w}")?;
    }
    Ok(())
}

pub fn write_text(out: &mut impl Write, code: &DnaCode) -> Result<()> {
    for w in code.words() {
        writeln!(out, "{w}")?;
    }
    Ok(())
}

pub fn write_ring_csv<'a>(out: &mut impl Write, n: usize, words: impl IntoIterator<Item = &'a RingVector>) -> Result<()> {
    writeln!(out, "n={n}")?;
    for w in words {
        writeln!(out, "{}", w.to_csv())?;
    }
    Ok(())
}

pub fn write_json(out: &mut impl Write, doc: &CodeDocument) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, doc)?;
    writeln!(out)?;
    Ok(())
}

/// A code read back from a file, with its ring preimage when the file
/// carried one.
#[derive(Clone, Debug)]
pub struct ParsedCode {
    pub format: Format,
    pub dna: DnaCode,
    pub ring: Option<Vec<RingVector>>,
}

/// Reads any of the export formats, chosen from the first non-blank line.
pub fn parse_code(text: &str) -> Result<ParsedCode> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).ok_or_else(|| Error::Parse("empty input".into()))?;
    if first.starts_with('>') {
        parse_fasta(text)
    } else if first.starts_with("n=") {
        parse_ring_csv(text)
    } else if first.starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

fn words_to_code(format: Format, words: Vec<DnaWord>) -> Result<ParsedCode> {
    Ok(ParsedCode { format, dna: DnaCode::from_words(words)?, ring: None })
}

pub fn parse_fasta(text: &str) -> Result<ParsedCode> {
    let mut words = Vec::new();
    let mut current: Option<String> = None;
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if line.starts_with('>') {
            if let Some(seq) = current.take() {
                words.push(seq.parse()?);
            }
            current = Some(String::new());
        } else {
            current
                .as_mut()
                .ok_or_else(|| Error::Parse("sequence before the first FASTA header".into()))?
                .push_str(line);
        }
    }
    if let Some(seq) = current {
        words.push(seq.parse()?);
    }
    words_to_code(Format::Fasta, words)
}

pub fn parse_text(text: &str) -> Result<ParsedCode> {
    let words = text.lines().map(str::trim).filter(|l| !l.is_empty()).map(str::parse).collect::<Result<_>>()?;
    words_to_code(Format::Text, words)
}

pub fn parse_ring_csv(text: &str) -> Result<ParsedCode> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected `n=<int>`, found {header:?}")))?;
    let ring = lines
        .map(|l| {
            let v = RingVector::parse_tokens(l)?;
            crate::ring::check_len(n, v.len())?;
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    let dna = DnaCode::with_length(2 * n, ring.iter().map(phi_vec).collect())?;
    Ok(ParsedCode { format: Format::Csv, dna, ring: Some(ring) })
}

pub fn parse_json(text: &str) -> Result<ParsedCode> {
    let doc: CodeDocument = serde_json::from_str(text)?;
    let ring = doc
        .codewords
        .map(|cws| {
            cws.into_iter()
                .map(|cw| {
                    cw.into_iter()
                        .map(|c| RingElement::from_code(c).ok_or_else(|| Error::Parse(format!("element code {c} out of range"))))
                        .collect::<Result<RingVector>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    let dna = DnaCode::with_length(doc.length, doc.words)?;
    if let Some(rs) = &ring {
        for r in rs {
            if !dna.contains(&phi_vec(r)) {
                return Err(Error::Parse(format!("codeword {r} has no matching DNA word")));
            }
        }
    }
    Ok(ParsedCode { format: Format::Json, dna, ring })
}

/// Ring preimage of every word of an even-length DNA code.
pub fn ring_preimage(code: &DnaCode) -> Result<Vec<RingVector>> {
    code.words().map(phi_vec_inv).collect()
}
