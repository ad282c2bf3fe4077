//! C ABI over `z4w-dna`.
//!
//! Ring elements cross the boundary as their integer code `a + 4b`
//! (`0..16`). Codes are opaque `Z4wCode` handles released with
//! [`z4w_code_free`]. Every fallible function returns a [`Z4wStatus`]; on
//! failure [`z4w_last_error`] describes the cause for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use z4w_dna::code::{min_gau_distance, span_enumerate, to_dna_code, DistanceMode, LinearCode, DEFAULT_SPAN_LIMIT};
use z4w_dna::dna::{check_closures, DnaCode};
use z4w_dna::families::FamilySpec;
use z4w_dna::gau::{gau_dist, phi};
use z4w_dna::ring::{RingElement, RingVector};
use z4w_dna::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Z4wStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidElement = 2,
    Dimension = 3,
    Capacity = 4,
    Input = 5,
    Precondition = 6,
    Parse = 7,
    UndefinedDistance = 8,
    OutOfRange = 9,
    BufferTooSmall = 10,
    Internal = 11,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Z4wClosures {
    pub reverse: bool,
    pub complement: bool,
    pub reverse_complement: bool,
}

/// A linear code over `R` together with its DNA image.
pub struct Z4wCode {
    label: CString,
    ring: LinearCode,
    dna: DnaCode,
    ring_words: Vec<RingVector>,
    dna_words: Vec<CString>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> Z4wStatus {
    match e {
        Error::Dimension { .. } => Z4wStatus::Dimension,
        Error::Capacity { .. } => Z4wStatus::Capacity,
        Error::Input(_) => Z4wStatus::Input,
        Error::Precondition(_) => Z4wStatus::Precondition,
        Error::UndefinedDistance(_) => Z4wStatus::UndefinedDistance,
        Error::Parse(_) | Error::Json(_) => Z4wStatus::Parse,
        _ => Z4wStatus::Internal,
    }
}

fn fail(status: Z4wStatus, msg: impl Into<String>) -> Z4wStatus {
    set_error(msg);
    status
}

/// Runs `f`, mapping library errors and panics to status codes.
fn guard(f: impl FnOnce() -> Result<(), Z4wStatus>) -> Z4wStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => Z4wStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(Z4wStatus::Internal, "internal panic"),
    }
}

fn lib_err(e: Error) -> Z4wStatus {
    fail(status_of(&e), e.to_string())
}

fn element(code: u8) -> Result<RingElement, Z4wStatus> {
    RingElement::from_code(code).ok_or_else(|| fail(Z4wStatus::InvalidElement, format!("element code {code} out of range 0..16")))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, Z4wStatus> {
    p.as_mut().ok_or_else(|| fail(Z4wStatus::NullPointer, "null output pointer"))
}

unsafe fn code_ref<'a>(h: *const Z4wCode) -> Result<&'a Z4wCode, Z4wStatus> {
    h.as_ref().ok_or_else(|| fail(Z4wStatus::NullPointer, "null code handle"))
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, Z4wStatus> {
    if s.is_null() {
        return Err(fail(Z4wStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(Z4wStatus::Parse, "string is not UTF-8"))
}

/// Message for the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn z4w_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `out` must be null or point to writable memory for one `uint8_t`.
#[no_mangle]
pub unsafe extern "C" fn z4w_ring_add(a: u8, b: u8, out: *mut u8) -> Z4wStatus {
    guard(|| {
        *out_ref(out)? = (element(a)? + element(b)?).code();
        Ok(())
    })
}

/// # Safety
/// `out` must be null or point to writable memory for one `uint8_t`.
#[no_mangle]
pub unsafe extern "C" fn z4w_ring_mul(a: u8, b: u8, out: *mut u8) -> Z4wStatus {
    guard(|| {
        *out_ref(out)? = (element(a)? * element(b)?).code();
        Ok(())
    })
}

/// # Safety
/// `out` must be null or point to writable memory for one `uint32_t`.
#[no_mangle]
pub unsafe extern "C" fn z4w_gau_dist(a: u8, b: u8, out: *mut u32) -> Z4wStatus {
    guard(|| {
        *out_ref(out)? = gau_dist(element(a)?, element(b)?);
        Ok(())
    })
}

/// Writes the two-letter image of `a` and a terminating NUL into `out`.
///
/// # Safety
/// `out` must be null or point to at least three writable bytes.
#[no_mangle]
pub unsafe extern "C" fn z4w_phi(a: u8, out: *mut c_char) -> Z4wStatus {
    guard(|| {
        let word = phi(element(a)?).to_string();
        if out.is_null() {
            return Err(fail(Z4wStatus::NullPointer, "null output buffer"));
        }
        for (i, b) in word.bytes().chain(std::iter::once(0)).enumerate() {
            *out.add(i) = b as c_char;
        }
        Ok(())
    })
}

fn build_code(spec: &FamilySpec, limit: usize) -> Result<Z4wCode, Z4wStatus> {
    let g = spec.build().map_err(lib_err)?;
    let limit = if limit == 0 { DEFAULT_SPAN_LIMIT } else { limit };
    let ring = span_enumerate(&g, limit).map_err(lib_err)?;
    let dna = to_dna_code(&ring);
    let ring_words = ring.words().cloned().collect();
    let dna_words = dna.words().map(|w| CString::new(w.to_string()).expect("ACGT only")).collect();
    let label = CString::new(spec.label()).expect("no NUL in labels");
    Ok(Z4wCode { label, ring, dna, ring_words, dna_words })
}

unsafe fn emit(spec: Result<FamilySpec, Z4wStatus>, limit: usize, out: *mut *mut Z4wCode) -> Z4wStatus {
    guard(|| {
        let slot = out_ref(out)?;
        *slot = ptr::null_mut();
        let code = build_code(&spec?, limit)?;
        *slot = Box::into_raw(Box::new(code));
        Ok(())
    })
}

/// Octacode-type code from a seed vector such as `"0 2w 2 2+2w"`.
/// `limit` caps the number of enumerated codewords; 0 selects the default.
///
/// # Safety
/// `first_row` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z4w_code_octa(first_row: *const c_char, limit: usize, out: *mut *mut Z4wCode) -> Z4wStatus {
    let spec = c_str(first_row).and_then(|s| RingVector::parse_tokens(s).map_err(lib_err)).map(|first_row| FamilySpec::Octa { first_row });
    emit(spec, limit, out)
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z4w_code_simplex(k: u32, limit: usize, out: *mut *mut Z4wCode) -> Z4wStatus {
    emit(Ok(FamilySpec::Simplex { k }), limit, out)
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z4w_code_rm1(m: u32, z: u8, limit: usize, out: *mut *mut Z4wCode) -> Z4wStatus {
    emit(element(z).map(|z| FamilySpec::Rm1 { m, z }), limit, out)
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z4w_code_rmr(r: u32, m: u32, z: u8, limit: usize, out: *mut *mut Z4wCode) -> Z4wStatus {
    emit(element(z).map(|z| FamilySpec::Rmr { r, m, z }), limit, out)
}

/// Any family, described as JSON, e.g. `{"family":"rm1","m":2,"z":2}`.
/// Ring elements and matrix rows use integer element codes.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z4w_code_from_json(json: *const c_char, limit: usize, out: *mut *mut Z4wCode) -> Z4wStatus {
    let spec = c_str(json).and_then(|s| serde_json::from_str::<FamilySpec>(s).map_err(|e| fail(Z4wStatus::Parse, e.to_string())));
    emit(spec, limit, out)
}

/// # Safety
/// `code` must be null or a handle returned by a `z4w_code_*` constructor
/// that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn z4w_code_free(code: *mut Z4wCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Length over `R`; the DNA length is twice this.
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z4w_code_length(code: *const Z4wCode, out: *mut usize) -> Z4wStatus {
    guard(|| {
        *out_ref(out)? = code_ref(code)?.ring.length();
        Ok(())
    })
}

/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z4w_code_size(code: *const Z4wCode, out: *mut usize) -> Z4wStatus {
    guard(|| {
        *out_ref(out)? = code_ref(code)?.ring.size();
        Ok(())
    })
}

/// Minimum distance. `pairwise` selects the pairwise scan instead of the
/// default weight-based route; both are exact.
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z4w_code_min_distance(code: *const Z4wCode, pairwise: bool, out: *mut u32) -> Z4wStatus {
    guard(|| {
        let mode = if pairwise { DistanceMode::Pairwise } else { DistanceMode::Weight };
        *out_ref(out)? = min_gau_distance(&code_ref(code)?.ring, mode).map_err(lib_err)?;
        Ok(())
    })
}

/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z4w_code_closures(code: *const Z4wCode, out: *mut Z4wClosures) -> Z4wStatus {
    guard(|| {
        let c = check_closures(&code_ref(code)?.dna);
        *out_ref(out)? = Z4wClosures { reverse: c.reverse, complement: c.complement, reverse_complement: c.reverse_complement };
        Ok(())
    })
}

/// DNA word `index` as a NUL-terminated string owned by the handle.
///
/// # Safety
/// `code` must be a live handle; `out` must be writable. The returned
/// pointer is valid until the handle is freed.
#[no_mangle]
pub unsafe extern "C" fn z4w_code_dna_word(code: *const Z4wCode, index: usize, out: *mut *const c_char) -> Z4wStatus {
    guard(|| {
        let c = code_ref(code)?;
        let slot = out_ref(out)?;
        let w = c.dna_words.get(index).ok_or_else(|| fail(Z4wStatus::OutOfRange, format!("index {index} >= {}", c.dna_words.len())))?;
        *slot = w.as_ptr();
        Ok(())
    })
}

/// Codeword `index` over `R` as element codes. `buf` must hold `len`
/// bytes, at least the code length.
///
/// # Safety
/// `code` must be a live handle; `buf` must point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn z4w_code_ring_word(code: *const Z4wCode, index: usize, buf: *mut u8, len: usize) -> Z4wStatus {
    guard(|| {
        let c = code_ref(code)?;
        let w = c.ring_words.get(index).ok_or_else(|| fail(Z4wStatus::OutOfRange, format!("index {index} >= {}", c.ring_words.len())))?;
        if buf.is_null() {
            return Err(fail(Z4wStatus::NullPointer, "null output buffer"));
        }
        if len < w.len() {
            return Err(fail(Z4wStatus::BufferTooSmall, format!("buffer holds {len}, need {}", w.len())));
        }
        std::slice::from_raw_parts_mut(buf, w.len()).copy_from_slice(&w.codes());
        Ok(())
    })
}

/// Family label such as `rm1(m=2,z=2)`, owned by the handle.
///
/// # Safety
/// `code` must be a live handle. The pointer is valid until it is freed.
#[no_mangle]
pub unsafe extern "C" fn z4w_code_label(code: *const Z4wCode, out: *mut *const c_char) -> Z4wStatus {
    guard(|| {
        *out_ref(out)? = code_ref(code)?.label.as_ptr();
        Ok(())
    })
}
