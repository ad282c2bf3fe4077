//! Linear codes over `R`: generator matrices, span enumeration, standard
//! form, minimum distance and closure tests.

mod closure;
mod distance;
mod matrix;
pub mod packed;
mod span;
mod standard;

pub use closure::{generator_closures, is_complement_closed, is_reverse_closed_rows, to_dna_code, Closures};
pub use distance::{
    measure_span, min_gau_distance, min_gau_weight, pairwise_min_distance_scalar, DistanceMode, SpanMeasure,
};
pub use matrix::GeneratorMatrix;
pub use span::{span_enumerate, LinearCode, DEFAULT_SPAN_LIMIT};
pub use standard::{standard_form, CodeType, StandardForm};
