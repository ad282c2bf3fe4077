//! Constructors for the code families and the parameters claimed
//! for them.
//!
//! * Octacode type: the distinct right rotations of a seed vector.
//! * Simplex β type: `G_k = (0…0 | 2…2 | 2w…2w | 2+2w…2+2w ; G_{k-1} ×4)`
//!   over a fixed 2×8 base.
//! * First-order Reed–Muller type: `G_{1,m+1} = (G G ; 0…0 z…z)` from
//!   `G_{1,1} = (1 1 ; 0 z)`.
//! * r-th order Reed–Muller type: `G_{r,m} = (G_{r,m-1} G_{r,m-1} ; 0 G_{r-1,m-1})`
//!   with `G_{0,m}` all ones and `G_{m,m} = (G_{m-1,m} ; 0 … 0 z)`.
//! * Stack: a constant-block row `(z1…z1 z2…z2 z3…z3 z4…z4)` on top of `P`.
//! * Repeat: `(G1 G1 … G1)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::{measure_span, standard_form, GeneratorMatrix, DEFAULT_SPAN_LIMIT};
use crate::error::{Error, Result};
use crate::ring::{RingElement, RingVector};

/// Upper bound on `rows × columns` of any constructed matrix.
pub const MAX_MATRIX_ENTRIES: usize = 1 << 24;

/// The four elements of `⟨2⟩` used by the stack construction.
pub const STACK_ELEMENTS: [RingElement; 4] =
    [RingElement::ZERO, RingElement::TWO, RingElement::TWO_W, RingElement::TWO_PLUS_TWO_W];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    Octa { first_row: RingVector },
    Simplex { k: u32 },
    Rm1 { m: u32, z: RingElement },
    Rmr { r: u32, m: u32, z: RingElement },
    Stack { base: GeneratorMatrix, assignment: [RingElement; 4], k: usize },
    Repeat { base: GeneratorMatrix, k: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<GeneratorMatrix> {
        match self {
            Self::Octa { first_row } => build_octa(first_row),
            Self::Simplex { k } => build_simplex_beta(*k),
            Self::Rm1 { m, z } => build_rm1(*m, *z),
            Self::Rmr { r, m, z } => build_rmr(*r, *m, *z),
            Self::Stack { base, assignment, k } => build_stack(base, *assignment, *k),
            Self::Repeat { base, k } => build_repeat(base, *k),
        }
    }

    /// Short identifier, e.g. `rm1(m=3,z=w)`.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Octa { first_row } => write!(f, "octa({})", first_row.to_csv()),
            Self::Simplex { k } => write!(f, "simplex(k={k})"),
            Self::Rm1 { m, z } => write!(f, "rm1(m={m},z={z})"),
            Self::Rmr { r, m, z } => write!(f, "rmr(r={r},m={m},z={z})"),
            Self::Stack { base, assignment, k } => write!(
                f,
                "stack({}x{},z={},{},{},{},k={k})",
                base.nrows(),
                base.ncols(),
                assignment[0],
                assignment[1],
                assignment[2],
                assignment[3]
            ),
            Self::Repeat { base, k } => write!(f, "repeat({}x{},k={k})", base.nrows(), base.ncols()),
        }
    }
}

fn check_size(rows: usize, cols: usize) -> Result<()> {
    match rows.checked_mul(cols) {
        Some(e) if e <= MAX_MATRIX_ENTRIES => Ok(()),
        _ => Err(Error::Capacity { what: format!("a {rows}x{cols} generator matrix"), limit: MAX_MATRIX_ENTRIES }),
    }
}

fn check_z(z: RingElement) -> Result<()> {
    if RingElement::NONZERO_ZERO_DIVISORS.contains(&z) {
        Ok(())
    } else {
        Err(Error::Input(format!("z = {z} must be a nonzero zero divisor")))
    }
}

fn rotate_right(v: &RingVector) -> RingVector {
    let n = v.len();
    (0..n).map(|i| v[(i + n - 1) % n]).collect()
}

/// Rows are the distinct right rotations of `first_row`, in rotation order.
pub fn build_octa(first_row: &RingVector) -> Result<GeneratorMatrix> {
    if first_row.is_empty() {
        return Err(Error::Input("octa seed vector is empty".into()));
    }
    let mut rows = vec![first_row.clone()];
    loop {
        let next = rotate_right(rows.last().expect("non-empty"));
        if &next == first_row {
            break;
        }
        rows.push(next);
    }
    GeneratorMatrix::new(rows)
}

/// Simplex β-type generator matrix: `k` rows, `2^(2k-1)` columns.
pub fn build_simplex_beta(k: u32) -> Result<GeneratorMatrix> {
    if k < 2 {
        return Err(Error::Input(format!("simplex order k = {k} must be at least 2")));
    }
    let width_log2 = 2 * k as usize - 1;
    if width_log2 >= usize::BITS as usize {
        return Err(Error::Capacity { what: format!("2^{width_log2} columns"), limit: MAX_MATRIX_ENTRIES });
    }
    check_size(k as usize, 1 << width_log2)?;
    let mut g = GeneratorMatrix::parse_rows(&["1 1 1 1 0 2 2w 2+2w", "0 2 2w 2+2w 1 1 1 1"])?;
    for _ in 2..k {
        let n = g.ncols();
        let top: RingVector = STACK_ELEMENTS.iter().flat_map(|&z| std::iter::repeat(z).take(n)).collect();
        let body = build_repeat(&g, 4)?;
        g = body.with_top_row(top)?;
    }
    Ok(g)
}

/// First-order RM-type matrix `G_{1,m}`: `m + 1` rows, `2^m` columns.
///
/// The all-ones row comes first, followed by the z-pattern rows from the
/// coarsest block (`0…0 z…z`) to the finest (`0 z 0 z …`).
pub fn build_rm1(m: u32, z: RingElement) -> Result<GeneratorMatrix> {
    check_z(z)?;
    if m < 1 {
        return Err(Error::Input("m must be at least 1".into()));
    }
    if m >= usize::BITS - 1 {
        return Err(Error::Capacity { what: format!("2^{m} columns"), limit: MAX_MATRIX_ENTRIES });
    }
    check_size(m as usize + 1, 1 << m)?;
    let mut g = GeneratorMatrix::new(vec![RingVector::constant(2, RingElement::ONE), vec![RingElement::ZERO, z].into()])?;
    for _ in 1..m {
        let n = g.ncols();
        let doubled = g.hconcat(&g)?.into_rows();
        let new_row = RingVector::zeros(n).concat(&RingVector::constant(n, z));
        let mut rows = Vec::with_capacity(doubled.len() + 1);
        rows.push(doubled[0].clone());
        rows.push(new_row);
        rows.extend(doubled.into_iter().skip(1));
        g = GeneratorMatrix::new(rows)?;
    }
    Ok(g)
}

/// r-th order RM-type matrix `G_{r,m}` with `Σ_{i≤r} C(m, i)` rows.
pub fn build_rmr(r: u32, m: u32, z: RingElement) -> Result<GeneratorMatrix> {
    check_z(z)?;
    if r > m {
        return Err(Error::Input(format!("order r = {r} exceeds m = {m}")));
    }
    if m >= usize::BITS - 1 {
        return Err(Error::Capacity { what: format!("2^{m} columns"), limit: MAX_MATRIX_ENTRIES });
    }
    check_size(rm_row_count(r, m) as usize, 1 << m)?;
    GeneratorMatrix::new(rmr_rows(r, m, z))
}

fn rmr_rows(r: u32, m: u32, z: RingElement) -> Vec<RingVector> {
    let n = 1usize << m;
    if r == 0 {
        return vec![RingVector::constant(n, RingElement::ONE)];
    }
    if r == m {
        let mut rows = rmr_rows(m - 1, m, z);
        let mut last = vec![RingElement::ZERO; n];
        last[n - 1] = z;
        rows.push(last.into());
        return rows;
    }
    let half = n / 2;
    let upper = rmr_rows(r, m - 1, z);
    let lower = rmr_rows(r - 1, m - 1, z);
    upper
        .iter()
        .map(|a| a.concat(a))
        .chain(lower.iter().map(|b| RingVector::zeros(half).concat(b)))
        .collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `b = Σ_{i=0}^{r} C(m, i)`, the row count of `G_{r,m}`.
pub fn rm_row_count(r: u32, m: u32) -> u64 {
    (0..=r as u64).map(|i| binomial(m as u64, i)).sum()
}

/// `a = Σ_{i=0}^{r-1} C(m-1, i)`.
pub fn rm_a_count(r: u32, m: u32) -> u64 {
    if m == 0 {
        return 0;
    }
    (0..r as u64).map(|i| binomial(m as u64 - 1, i)).sum()
}

/// Prepends `(z1…z1 z2…z2 z3…z3 z4…z4)` (blocks of length `k`) to `P`.
pub fn build_stack(p: &GeneratorMatrix, assignment: [RingElement; 4], k: usize) -> Result<GeneratorMatrix> {
    for (i, z) in assignment.iter().enumerate() {
        if !STACK_ELEMENTS.contains(z) {
            return Err(Error::Input(format!("stack element {z} is not in {{0, 2, 2w, 2+2w}}")));
        }
        if assignment[..i].contains(z) {
            return Err(Error::Input(format!("stack element {z} repeated")));
        }
    }
    if k == 0 || p.ncols() != 4 * k {
        return Err(Error::Input(format!("P has {} columns, expected 4k = {}", p.ncols(), 4 * k)));
    }
    let all_two = RingVector::constant(p.ncols(), RingElement::TWO);
    if !standard_form(p).contains(&all_two) {
        return Err(Error::Precondition("the all-2 vector is not in the row span of P".into()));
    }
    p.with_top_row(stack_row(assignment, k))
}

pub fn stack_row(assignment: [RingElement; 4], k: usize) -> RingVector {
    assignment.iter().flat_map(|&z| std::iter::repeat(z).take(k)).collect()
}

/// `(G1 G1 … G1)`, `k` blocks.
pub fn build_repeat(g1: &GeneratorMatrix, k: usize) -> Result<GeneratorMatrix> {
    if k == 0 {
        return Err(Error::Input("repeat count must be at least 1".into()));
    }
    check_size(g1.nrows(), g1.ncols().saturating_mul(k))?;
    GeneratorMatrix::new(
        g1.rows()
            .iter()
            .map(|r| r.iter().copied().cycle().take(r.len() * k).collect())
            .collect(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum DistanceClaim {
    Exact(u64),
    AtMost(u64),
}

impl DistanceClaim {
    pub fn admits(&self, measured: u64) -> bool {
        match *self {
            Self::Exact(d) => measured == d,
            Self::AtMost(d) => measured <= d,
        }
    }
}

impl fmt::Display for DistanceClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exact(d) => write!(f, "{d}"),
            Self::AtMost(d) => write!(f, "<={d}"),
        }
    }
}

/// DNA-side parameters `(n, M, d_H)` claimed for a construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedParams {
    pub n_dna: u64,
    /// `M = 2^size_log2`.
    pub size_log2: u32,
    pub distance: DistanceClaim,
}

impl PredictedParams {
    fn exact(n_dna: u64, size_log2: u64, d: u64) -> Self {
        Self { n_dna, size_log2: size_log2 as u32, distance: DistanceClaim::Exact(d) }
    }

    pub fn size(&self) -> Option<u128> {
        (self.size_log2 < 128).then(|| 1u128 << self.size_log2)
    }
}

impl fmt::Display for PredictedParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.size() {
            Some(m) => write!(f, "({}, {}, {})", self.n_dna, m, self.distance),
            None => write!(f, "({}, 2^{}, {})", self.n_dna, self.size_log2, self.distance),
        }
    }
}

/// The printed Octacode-type table: seed vector → `(n, M, d_H)`.
pub fn octa_table() -> Vec<(RingVector, PredictedParams)> {
    [
        ("0 2 2w 2+2w", 8, 4, 4),
        ("0 2w 2 2+2w", 8, 6, 4),
        ("0 2w 2 2+2w 0 2w 2 2+2w", 16, 6, 8),
        ("0 2 2w 2+2w 0 2 2w 2+2w", 16, 4, 8),
    ]
    .into_iter()
    .map(|(row, n, m, d)| (row.parse().expect("static vector"), PredictedParams::exact(n, m, d)))
    .collect()
}

/// `z ∈ {2w}` → 0, `z ∈ {2, 2+2w}` → 1, the rest of the nonzero zero divisors → 2.
fn z_class(z: RingElement) -> u8 {
    match z {
        RingElement::TWO_W => 0,
        RingElement::TWO | RingElement::TWO_PLUS_TWO_W => 1,
        _ => 2,
    }
}

/// Claimed parameters. `None` when no claim exists (Octa seeds
/// outside the table, block repetition). The stack claim needs `P`'s type
/// and distance and so measures `P`.
pub fn predicted_params(spec: &FamilySpec) -> Result<Option<PredictedParams>> {
    Ok(match spec {
        FamilySpec::Octa { first_row } => octa_table().into_iter().find(|(row, _)| row == first_row).map(|(_, p)| p),
        FamilySpec::Simplex { k } => {
            let k = *k as u64;
            Some(PredictedParams::exact(1 << (2 * k), 2 * k + 4, 1 << (2 * k - 1)))
        }
        FamilySpec::Rm1 { m, z } => {
            check_z(*z)?;
            let m = *m as u64;
            let (size, d) = match z_class(*z) {
                0 => (m + 4, 1 << m),
                1 => (2 * m + 4, 1 << m),
                _ => (3 * m + 4, 1 << (m - 1)),
            };
            Some(PredictedParams::exact(1 << (m + 1), size, d))
        }
        FamilySpec::Rmr { r, m, z } => {
            check_z(*z)?;
            let (a, b) = (rm_a_count(*r, *m), rm_row_count(*r, *m));
            let (size, d) = match z_class(*z) {
                0 => (4 * b - 3 * a, 1u64 << (m - r + 1)),
                1 => (4 * b - 2 * a, 1 << (m - r + 1)),
                _ => (4 * b - a, 1 << (m - r)),
            };
            Some(PredictedParams::exact(1 << (m + 1), size, d))
        }
        FamilySpec::Stack { base, assignment, k } => {
            let sf = standard_form(base);
            let in_span = sf.contains(&stack_row(*assignment, *k));
            let size_log2 = sf.code_type().size_log2() + if in_span { 0 } else { 2 };
            let d_p = measure_span(base, DEFAULT_SPAN_LIMIT as u128)?.min_distance.map_or(u64::MAX, u64::from);
            Some(PredictedParams {
                n_dna: 2 * base.ncols() as u64,
                size_log2,
                distance: DistanceClaim::AtMost((4 * *k as u64).min(d_p)),
            })
        }
        FamilySpec::Repeat { .. } => None,
    })
}

/// Family instances scanned by the bound report.
pub fn registered_instances() -> Vec<FamilySpec> {
    let mut out: Vec<FamilySpec> = octa_table().into_iter().map(|(first_row, _)| FamilySpec::Octa { first_row }).collect();
    out.extend([2, 3].map(|k| FamilySpec::Simplex { k }));
    for m in 1..=3 {
        for z in RingElement::NONZERO_ZERO_DIVISORS {
            out.push(FamilySpec::Rm1 { m, z });
        }
    }
    for m in 1..=2 {
        for r in 0..=m {
            for z in RingElement::NONZERO_ZERO_DIVISORS {
                out.push(FamilySpec::Rmr { r, m, z });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> RingVector {
        s.parse().unwrap()
    }

    fn e(s: &str) -> RingElement {
        s.parse().unwrap()
    }

    fn g(rows: &[&str]) -> GeneratorMatrix {
        GeneratorMatrix::parse_rows(rows).unwrap()
    }

    #[test]
    fn octa_rotations() {
        let o = build_octa(&v("0 2w 2 2+2w 0 2w 2 2+2w")).unwrap();
        assert_eq!(
            o,
            g(&[
                "0 2w 2 2+2w 0 2w 2 2+2w",
                "2+2w 0 2w 2 2+2w 0 2w 2",
                "2 2+2w 0 2w 2 2+2w 0 2w",
                "2w 2 2+2w 0 2w 2 2+2w 0",
            ])
        );
        assert_eq!(build_octa(&v("0 2 2w 2+2w")).unwrap().nrows(), 4);
        assert_eq!(build_octa(&v("2 2 2 2")).unwrap().nrows(), 1);
        assert!(build_octa(&RingVector::default()).is_err());
    }

    #[test]
    fn simplex_shapes() {
        assert_eq!(build_simplex_beta(2).unwrap(), g(&["1 1 1 1 0 2 2w 2+2w", "0 2 2w 2+2w 1 1 1 1"]));
        let g3 = build_simplex_beta(3).unwrap();
        assert_eq!((g3.nrows(), g3.ncols()), (3, 32));
        let first: Vec<String> = g3.rows()[0].iter().map(|x| x.to_string()).collect();
        for (block, expect) in first.chunks(8).zip(["0", "2", "2w", "2+2w"]) {
            assert!(block.iter().all(|t| t == expect));
        }
        assert!(build_simplex_beta(1).is_err());
        assert!(matches!(build_simplex_beta(40), Err(Error::Capacity { .. })));
    }

    #[test]
    fn rm1_shapes() {
        let w = build_rm1(3, RingElement::W).unwrap();
        assert_eq!(w, g(&["1 1 1 1 1 1 1 1", "0 0 0 0 w w w w", "0 0 w w 0 0 w w", "0 w 0 w 0 w 0 w"]));
        assert_eq!(build_rm1(1, RingElement::TWO).unwrap(), g(&["1 1", "0 2"]));
        assert!(build_rm1(1, RingElement::ZERO).is_err());
        assert!(build_rm1(1, RingElement::ONE).is_err());
    }

    #[test]
    fn rmr_shapes() {
        assert_eq!(build_rmr(0, 3, RingElement::TWO).unwrap(), g(&["1 1 1 1 1 1 1 1"]));
        assert_eq!(build_rmr(1, 2, RingElement::TWO).unwrap(), g(&["1 1 1 1", "0 2 0 2", "0 0 1 1"]));
        assert_eq!(build_rmr(2, 2, RingElement::TWO).unwrap().nrows(), 4);
        assert_ne!(build_rmr(1, 2, RingElement::TWO).unwrap(), build_rm1(2, RingElement::TWO).unwrap());
        assert!(build_rmr(3, 2, RingElement::TWO).is_err());
        for m in 0..=5 {
            for r in 0..=m {
                assert_eq!(build_rmr(r, m, RingElement::W).unwrap().nrows() as u64, rm_row_count(r, m));
            }
        }
    }

    #[test]
    fn row_count_recursion() {
        // N(r, m) = N(r, m-1) + N(r-1, m-1)
        for m in 2..10 {
            for r in 1..m {
                assert_eq!(rm_row_count(r, m), rm_row_count(r, m - 1) + rm_row_count(r - 1, m - 1));
            }
        }
        assert_eq!(rm_row_count(1, 2), 3);
        assert_eq!(rm_a_count(1, 2), 1);
    }

    #[test]
    fn stack_and_repeat() {
        let p = build_simplex_beta(2).unwrap();
        let s = build_stack(&p, [e("0"), e("2"), e("2w"), e("2+2w")], 2).unwrap();
        assert_eq!(s.nrows(), 3);
        assert_eq!(s.rows()[0], v("0 0 2 2 2w 2w 2+2w 2+2w"));
        assert!(matches!(build_stack(&p, [e("0"), e("2"), e("2w"), e("2+2w")], 3), Err(Error::Input(_))));
        assert!(matches!(build_stack(&p, [e("0"), e("2"), e("2"), e("2+2w")], 2), Err(Error::Input(_))));
        let no_two = g(&["1 0 0 0", "0 1 0 0"]);
        assert!(matches!(build_stack(&no_two, [e("0"), e("2"), e("2w"), e("2+2w")], 1), Err(Error::Precondition(_))));

        let g1 = g(&["1 1"]);
        assert_eq!(build_repeat(&g1, 1).unwrap(), g1);
        assert_eq!(build_repeat(&g1, 2).unwrap(), g(&["1 1 1 1"]));
        assert!(build_repeat(&g1, 0).is_err());
    }

    #[test]
    fn predictions() {
        let p = |s: FamilySpec| predicted_params(&s).unwrap().unwrap();
        assert_eq!(p(FamilySpec::Simplex { k: 3 }), PredictedParams::exact(64, 10, 32));
        assert_eq!(p(FamilySpec::Rm1 { m: 3, z: RingElement::W }), PredictedParams::exact(16, 13, 4));
        assert_eq!(p(FamilySpec::Rmr { r: 1, m: 2, z: RingElement::TWO }), PredictedParams::exact(8, 10, 4));
        assert_eq!(p(FamilySpec::Octa { first_row: v("0 2w 2 2+2w") }).size(), Some(64));
        assert_eq!(predicted_params(&FamilySpec::Octa { first_row: v("0 2 2 2") }).unwrap(), None);
        assert_eq!(predicted_params(&FamilySpec::Repeat { base: g(&["1"]), k: 2 }).unwrap(), None);
        let stack = FamilySpec::Stack {
            base: build_simplex_beta(2).unwrap(),
            assignment: [e("0"), e("2"), e("2w"), e("2+2w")],
            k: 2,
        };
        let sp = p(stack);
        assert_eq!(sp.n_dna, 16);
        assert_eq!(sp.distance, DistanceClaim::AtMost(8));
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = FamilySpec::Rmr { r: 1, m: 3, z: RingElement::TWO_W };
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"family":"rmr","r":1,"m":3,"z":8}"#);
        assert_eq!(serde_json::from_str::<FamilySpec>(&json).unwrap(), spec);
        assert_eq!(spec.label(), "rmr(r=1,m=3,z=2w)");
    }
}
