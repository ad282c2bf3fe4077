//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
//! 3 capacity exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::code::{
    generator_closures, measure_span, min_gau_distance, span_enumerate, to_dna_code, Closures, DistanceMode,
    GeneratorMatrix, DEFAULT_SPAN_LIMIT,
};
use crate::dna::{bound_report, check_closures, rc_cross_distance, BoundRecord};
use crate::error::{Error, Result};
use crate::families::{octa_table, predicted_params, DistanceClaim, FamilySpec, PredictedParams};
use crate::io::{parse_code, write_fasta, write_json, write_ring_csv, write_text, CodeDocument, Format};
use crate::ring::{RingElement, RingVector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

/// Environment variable holding the default enumeration limit.
pub const LIMIT_ENV: &str = "Z4W_DNA_LIMIT";

/// Filtered size the `bounds` target must reach at `(n, d, u) = (8, 4, 4)`.
pub const BOUND_TARGET: usize = 224;

#[derive(Debug, Parser)]
#[command(name = "z4w-dna", version, about = "DNA codes from linear codes over Z4 + wZ4")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family instance and export its DNA code.
    Generate(GenerateArgs),
    /// Rebuild a reference table and compare claimed against measured values.
    Reproduce(ReproduceArgs),
    /// Report parameters and closure properties of a code file.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Octa,
    Simplex,
    Rm1,
    Rmr,
    Stack,
    Repeat,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub family: FamilyKind,
    /// Simplex order, or block count for stack and repeat.
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    /// Zero divisor token, e.g. `w` or `2+2w`.
    #[arg(long)]
    pub z: Option<String>,
    /// Seed vector for octa, e.g. `0,2w,2,2+2w`.
    #[arg(long)]
    pub first_row: Option<String>,
    /// Base matrix for stack and repeat: rows separated by `;`, or `@path`
    /// to a file with one row per line.
    #[arg(long)]
    pub base_matrix: Option<String>,
    /// Four distinct elements of {0, 2, 2w, 2+2w} for the stack row.
    #[arg(long)]
    pub assignment: Option<String>,
    /// Maximum number of codewords to enumerate.
    #[arg(long, env = LIMIT_ENV, default_value_t = DEFAULT_SPAN_LIMIT, value_parser = parse_limit)]
    pub limit: usize,
    #[arg(long, default_value = "weight", value_parser = parse_mode)]
    pub distance: DistanceMode,
    /// Shorthand for `--distance pairwise`.
    #[arg(long)]
    pub pairwise: bool,
    /// Artifact path. Without it the artifact goes to stdout and the summary
    /// to stderr.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value = "fasta", value_parser = parse_format)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Table2,
    Table3,
    Simplex,
    Rmr,
    Bounds,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    #[arg(value_enum)]
    pub target: Target,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}

fn parse_limit(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("limit must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_mode(s: &str) -> Result<DistanceMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Capacity { .. } => EXIT_CAPACITY,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Generate(a) => cmd_generate(a, out, err),
        Command::Reproduce(a) => cmd_reproduce(a, out),
        Command::Verify(a) => cmd_verify(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn require<T>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| Error::Input(format!("--{flag} is required for --family {family}")))
}

fn parse_element(s: &str) -> Result<RingElement> {
    s.trim().parse()
}

fn parse_matrix_arg(s: &str) -> Result<GeneratorMatrix> {
    let text = match s.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)?,
        None => s.to_string(),
    };
    let rows: Vec<&str> = text
        .split([';', '\n'])
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with("n="))
        .collect();
    GeneratorMatrix::new(rows.into_iter().map(RingVector::parse_tokens).collect::<Result<_>>()?)
}

pub fn family_spec(a: &GenerateArgs) -> Result<FamilySpec> {
    let z = || -> Result<RingElement> { parse_element(&require(a.z.clone(), "z", "rm1/rmr")?) };
    Ok(match a.family {
        FamilyKind::Octa => FamilySpec::Octa {
            first_row: RingVector::parse_tokens(&require(a.first_row.clone(), "first-row", "octa")?)?,
        },
        FamilyKind::Simplex => FamilySpec::Simplex { k: require(a.k, "k", "simplex")? },
        FamilyKind::Rm1 => FamilySpec::Rm1 { m: require(a.m, "m", "rm1")?, z: z()? },
        FamilyKind::Rmr => FamilySpec::Rmr { r: require(a.r, "r", "rmr")?, m: require(a.m, "m", "rmr")?, z: z()? },
        FamilyKind::Stack => {
            let v = RingVector::parse_tokens(&require(a.assignment.clone(), "assignment", "stack")?)?;
            let assignment: [RingElement; 4] = v
                .entries()
                .try_into()
                .map_err(|_| Error::Input(format!("--assignment needs 4 elements, got {}", v.len())))?;
            FamilySpec::Stack {
                base: parse_matrix_arg(&require(a.base_matrix.clone(), "base-matrix", "stack")?)?,
                assignment,
                k: require(a.k, "k", "stack")? as usize,
            }
        }
        FamilyKind::Repeat => FamilySpec::Repeat {
            base: parse_matrix_arg(&require(a.base_matrix.clone(), "base-matrix", "repeat")?)?,
            k: require(a.k, "k", "repeat")? as usize,
        },
    })
}

fn closure_flags(c: &Closures) -> String {
    format!("reverse={} complement={} reverse_complement={}", c.reverse, c.complement, c.reverse_complement)
}

fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let spec = family_spec(a)?;
    let g = spec.build()?;
    let code = span_enumerate(&g, a.limit)?;
    let mode = if a.pairwise { DistanceMode::Pairwise } else { a.distance };
    let d = match min_gau_distance(&code, mode) {
        Ok(d) => Some(d as usize),
        Err(Error::UndefinedDistance(_)) => None,
        Err(e) => return Err(e),
    };
    let dna = to_dna_code(&code);
    let closures = check_closures(&dna);
    let label = spec.label();

    let mut artifact = Vec::new();
    match a.format {
        Format::Fasta => write_fasta(&mut artifact, &label, &dna)?,
        Format::Text => write_text(&mut artifact, &dna)?,
        Format::Csv => write_ring_csv(&mut artifact, code.length(), code.words())?,
        Format::Json => {
            let ring: Vec<RingVector> = code.words().cloned().collect();
            write_json(&mut artifact, &CodeDocument::from_dna(Some(label.clone()), &dna, Some(&ring), d))?
        }
    }
    let summary: &mut dyn Write = match &a.output {
        Some(path) => {
            fs::write(path, &artifact)?;
            out
        }
        None => {
            out.write_all(&artifact)?;
            err
        }
    };
    let d_text = d.map_or("-".to_string(), |d| d.to_string());
    writeln!(summary, "family:    {label}")?;
    writeln!(summary, "measured:  ({}, {}, {d_text})", dna.length(), dna.size())?;
    match predicted_params(&spec) {
        Ok(Some(p)) => writeln!(summary, "predicted: {p}")?,
        Ok(None) => writeln!(summary, "predicted: none")?,
        Err(e) => writeln!(summary, "predicted: unavailable ({e})")?,
    }
    writeln!(summary, "closures:  {}", closure_flags(&closures))?;
    Ok(EXIT_OK)
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproRow {
    pub label: String,
    pub claimed: PredictedParams,
    pub n_dna: u64,
    pub size_log2: u32,
    pub min_distance: Option<u32>,
    pub closures: Closures,
    pub ok: bool,
}

impl ReproRow {
    fn measured_text(&self) -> String {
        let m = if self.size_log2 < 128 { (1u128 << self.size_log2).to_string() } else { format!("2^{}", self.size_log2) };
        format!("({}, {}, {})", self.n_dna, m, self.min_distance.map_or("-".into(), |d| d.to_string()))
    }
}

/// Measures a family instance against claimed parameters. Closure is
/// required in full (reverse, complement, reverse-complement).
pub fn reproduce_row(spec: &FamilySpec, claimed: PredictedParams) -> Result<ReproRow> {
    let g = spec.build()?;
    let m = measure_span(&g, u128::MAX)?;
    let closures = generator_closures(&g);
    let size_log2 = m.code_type.size_log2();
    let n_dna = 2 * m.length as u64;
    let ok = n_dna == claimed.n_dna
        && size_log2 == claimed.size_log2
        && m.min_distance.is_some_and(|d| claimed.distance.admits(d as u64))
        && closures.reverse
        && closures.reverse_complement;
    Ok(ReproRow { label: spec.label(), claimed, n_dna, size_log2, min_distance: m.min_distance, closures, ok })
}

fn exact(n: u64, size_log2: u32, d: u64) -> PredictedParams {
    PredictedParams { n_dna: n, size_log2, distance: DistanceClaim::Exact(d) }
}

/// Rows of a reproduction target with their claimed parameters.
pub fn target_rows(target: Target) -> Vec<(FamilySpec, PredictedParams)> {
    let z = |s: &str| s.parse::<RingElement>().expect("static token");
    match target {
        Target::Table2 => octa_table().into_iter().map(|(first_row, p)| (FamilySpec::Octa { first_row }, p)).collect(),
        Target::Table3 => [(1, "2", 64u128, 2), (2, "2", 256, 4), (3, "2", 1024, 8), (2, "w", 1024, 2), (3, "w", 8192, 4)]
            .into_iter()
            .map(|(m, zs, size, d): (u32, &str, u128, u64)| {
                (FamilySpec::Rm1 { m, z: z(zs) }, exact(1 << (m + 1), size.trailing_zeros(), d))
            })
            .collect(),
        Target::Simplex => vec![
            (FamilySpec::Simplex { k: 2 }, exact(16, 8, 8)),
            (FamilySpec::Simplex { k: 3 }, exact(64, 10, 32)),
        ],
        Target::Rmr => {
            let mut rows = Vec::new();
            for m in 0..=3 {
                for r in 0..=m {
                    for zs in ["2", "w", "2w"] {
                        let spec = FamilySpec::Rmr { r, m, z: z(zs) };
                        let p = predicted_params(&spec).expect("valid").expect("claimed");
                        rows.push((spec, p));
                    }
                }
            }
            rows
        }
        Target::Bounds => Vec::new(),
    }
}

#[derive(Debug, Serialize)]
struct BoundsReport<'a> {
    n: usize,
    d: usize,
    u: usize,
    target: usize,
    best: usize,
    confirmed: bool,
    records: &'a [BoundRecord],
}

fn cmd_reproduce(a: &ReproduceArgs, out: &mut dyn Write) -> Result<i32> {
    if a.target == Target::Bounds {
        let (n, d, u) = (8, 4, 4);
        let records = bound_report(n, d, u)?;
        let best = records.first().map_or(0, |r| r.filtered_size);
        let confirmed = best == BOUND_TARGET;
        match a.format {
            ReportFormat::Json => {
                serde_json::to_writer_pretty(&mut *out, &BoundsReport { n, d, u, target: BOUND_TARGET, best, confirmed, records: &records })?;
                writeln!(out)?;
            }
            ReportFormat::Text => {
                writeln!(out, "{:<28} {:>5} {:>8} {:>10} {:>6}  closures", "instance", "d_H", "M", "filtered", "d_f")?;
                for r in &records {
                    writeln!(
                        out,
                        "{:<28} {:>5} {:>8} {:>10} {:>6}  {}",
                        r.label,
                        r.d_h,
                        r.size,
                        r.filtered_size,
                        r.filtered_distance.map_or("-".into(), |x| x.to_string()),
                        closure_flags(&r.closures)
                    )?;
                }
                let verdict = if confirmed { "confirmed" } else { "failed" };
                writeln!(out, "RC+GC bound at (n, d, u) = ({n}, {d}, {u}) >= {BOUND_TARGET}: {verdict} (best {best})")?;
            }
        }
        return Ok(if confirmed { EXIT_OK } else { EXIT_MISMATCH });
    }

    let rows = target_rows(a.target).iter().map(|(s, p)| reproduce_row(s, *p)).collect::<Result<Vec<_>>>()?;
    let matched = rows.iter().filter(|r| r.ok).count();
    match a.format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
        ReportFormat::Text => {
            for r in &rows {
                let tag = if r.ok { "ok      " } else { "MISMATCH" };
                writeln!(out, "{tag} {:<34} claimed {:<22} measured {:<22} {}", r.label, r.claimed.to_string(), r.measured_text(), closure_flags(&r.closures))?;
            }
            writeln!(out, "{matched}/{} rows match", rows.len())?;
        }
    }
    Ok(if matched == rows.len() { EXIT_OK } else { EXIT_MISMATCH })
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    format: Format,
    n: usize,
    size: usize,
    min_distance: Option<usize>,
    rc_cross_distance: Option<usize>,
    closures: Closures,
    gc_histogram: Vec<usize>,
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let text = fs::read_to_string(&a.file)?;
    let parsed = parse_code(&text)?;
    let code = &parsed.dna;
    let report = VerifyReport {
        format: parsed.format,
        n: code.length(),
        size: code.size(),
        min_distance: code.min_distance(),
        rc_cross_distance: rc_cross_distance(code),
        closures: check_closures(code),
        gc_histogram: code.gc_histogram(),
    };
    match a.format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &report)?;
            writeln!(out)?;
        }
        ReportFormat::Text => {
            let dash = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
            writeln!(out, "format:   {}", report.format)?;
            writeln!(out, "n:        {}", report.n)?;
            writeln!(out, "M:        {}", report.size)?;
            writeln!(out, "d_H:      {}", dash(report.min_distance))?;
            writeln!(out, "rc-cross: {}", dash(report.rc_cross_distance))?;
            writeln!(out, "closures: {}", closure_flags(&report.closures))?;
            let hist: Vec<String> = report.gc_histogram.iter().enumerate().filter(|(_, c)| **c > 0).map(|(w, c)| format!("{w}:{c}")).collect();
            writeln!(out, "gc:       {}", hist.join(" "))?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("z4w-dna").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["generate", "--family", "rm1", "--m", "1", "--z", "0"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["generate", "--family", "rm1", "--m", "1"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["generate", "--family", "simplex", "--k", "2", "--limit", "0"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn capacity_exit() {
        let (code, _, err) = run_args(&["generate", "--family", "simplex", "--k", "2", "--limit", "100"]);
        assert_eq!(code, EXIT_CAPACITY, "{err}");
    }

    #[test]
    fn generate_to_stdout() {
        let (code, out, err) = run_args(&["generate", "--family", "rm1", "--m", "1", "--z", "2", "--format", "text"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), 64);
        assert!(err.contains("measured:  (4, 64, 2)"), "{err}");
        assert!(err.contains("predicted: (4, 64, 2)"), "{err}");
    }

    #[test]
    fn stack_and_repeat_flags() {
        let base = "1 1 1 1 0 2 2w 2+2w; 0 2 2w 2+2w 1 1 1 1";
        let (code, _, err) = run_args(&[
            "generate", "--family", "stack", "--base-matrix", base, "--assignment", "0,2,2w,2+2w", "--k", "2", "--format", "csv",
        ]);
        assert_eq!(code, EXIT_OK, "{err}");
        let (code, out, err) = run_args(&["generate", "--family", "repeat", "--base-matrix", "1 1", "--k", "2", "--format", "csv"]);
        assert_eq!(code, EXIT_OK, "{err}");
        assert!(out.starts_with("n=4\n"));
        let (code, _, _) = run_args(&["generate", "--family", "stack", "--base-matrix", base, "--assignment", "0,2", "--k", "2"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn reproduce_table2() {
        let (code, out, _) = run_args(&["reproduce", "table2"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.ends_with("4/4 rows match\n"));
        let again = run_args(&["reproduce", "table2"]).1;
        assert_eq!(out, again);
    }
}
