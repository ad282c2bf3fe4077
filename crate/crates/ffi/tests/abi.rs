use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use z4w_dna_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(z4w_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn ring_arithmetic() {
    let mut out = 0u8;
    unsafe {
        // (1+w) + (3+3w) = 0
        assert_eq!(z4w_ring_add(5, 15, &mut out), Z4wStatus::Ok);
        assert_eq!(out, 0);
        // w * w = 2 + 2w
        assert_eq!(z4w_ring_mul(4, 4, &mut out), Z4wStatus::Ok);
        assert_eq!(out, 10);
        assert_eq!(z4w_ring_add(16, 0, &mut out), Z4wStatus::InvalidElement);
        assert!(last_error().contains("16"));
        assert_eq!(z4w_ring_add(1, 1, ptr::null_mut()), Z4wStatus::NullPointer);
    }
}

#[test]
fn gau_map() {
    let mut d = 0u32;
    let mut buf = [0 as c_char; 3];
    unsafe {
        assert_eq!(z4w_gau_dist(0, 10, &mut d), Z4wStatus::Ok);
        assert_eq!(d, 2);
        assert_eq!(z4w_phi(4, buf.as_mut_ptr()), Z4wStatus::Ok);
        assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "TG");
    }
}

#[test]
fn family_handles() {
    unsafe {
        let mut code: *mut Z4wCode = ptr::null_mut();
        assert_eq!(z4w_code_rm1(2, 2, 0, &mut code), Z4wStatus::Ok);
        let (mut n, mut m, mut d) = (0usize, 0usize, 0u32);
        assert_eq!(z4w_code_length(code, &mut n), Z4wStatus::Ok);
        assert_eq!(z4w_code_size(code, &mut m), Z4wStatus::Ok);
        assert_eq!(z4w_code_min_distance(code, false, &mut d), Z4wStatus::Ok);
        assert_eq!((n, m, d), (4, 256, 4));
        assert_eq!(z4w_code_min_distance(code, true, &mut d), Z4wStatus::Ok);
        assert_eq!(d, 4);

        let mut c = Z4wClosures::default();
        assert_eq!(z4w_code_closures(code, &mut c), Z4wStatus::Ok);
        assert_eq!(c, Z4wClosures { reverse: true, complement: true, reverse_complement: true });

        let mut word: *const c_char = ptr::null();
        assert_eq!(z4w_code_dna_word(code, 0, &mut word), Z4wStatus::Ok);
        assert_eq!(CStr::from_ptr(word).to_str().unwrap(), "AAAAAAAA");
        assert_eq!(z4w_code_dna_word(code, 256, &mut word), Z4wStatus::OutOfRange);

        let mut ring = [0u8; 4];
        assert_eq!(z4w_code_ring_word(code, 0, ring.as_mut_ptr(), 4), Z4wStatus::Ok);
        assert_eq!(ring, [0; 4]);
        assert_eq!(z4w_code_ring_word(code, 0, ring.as_mut_ptr(), 3), Z4wStatus::BufferTooSmall);

        let mut label: *const c_char = ptr::null();
        assert_eq!(z4w_code_label(code, &mut label), Z4wStatus::Ok);
        assert_eq!(CStr::from_ptr(label).to_str().unwrap(), "rm1(m=2,z=2)");
        z4w_code_free(code);
        z4w_code_free(ptr::null_mut());
    }
}

#[test]
fn constructor_errors() {
    unsafe {
        let mut code: *mut Z4wCode = ptr::null_mut();
        assert_eq!(z4w_code_rm1(1, 0, 0, &mut code), Z4wStatus::Input);
        assert!(code.is_null());
        assert_eq!(z4w_code_simplex(2, 10, &mut code), Z4wStatus::Capacity);
        assert_eq!(z4w_code_rmr(3, 2, 2, 0, &mut code), Z4wStatus::Input);

        let bad = CString::new("0 2 x").unwrap();
        assert_eq!(z4w_code_octa(bad.as_ptr(), 0, &mut code), Z4wStatus::Parse);
        assert_eq!(z4w_code_octa(ptr::null(), 0, &mut code), Z4wStatus::NullPointer);

        let seed = CString::new("0 2w 2 2+2w").unwrap();
        assert_eq!(z4w_code_octa(seed.as_ptr(), 0, &mut code), Z4wStatus::Ok);
        let mut m = 0usize;
        z4w_code_size(code, &mut m);
        assert_eq!(m, 64);
        z4w_code_free(code);
    }
}

#[test]
fn json_specs() {
    unsafe {
        let mut code: *mut Z4wCode = ptr::null_mut();
        let json = CString::new(r#"{"family":"repeat","base":[[1,1]],"k":2}"#).unwrap();
        assert_eq!(z4w_code_from_json(json.as_ptr(), 0, &mut code), Z4wStatus::Ok, "{}", last_error());
        let mut n = 0usize;
        z4w_code_length(code, &mut n);
        assert_eq!(n, 4);
        z4w_code_free(code);

        let stack = CString::new(r#"{"family":"stack","base":[[1,0]],"assignment":[0,2,8,10],"k":1}"#).unwrap();
        assert_eq!(z4w_code_from_json(stack.as_ptr(), 0, &mut code), Z4wStatus::Input);
        let junk = CString::new("{").unwrap();
        assert_eq!(z4w_code_from_json(junk.as_ptr(), 0, &mut code), Z4wStatus::Parse);
    }
}

fn header() -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/z4w_dna.h")).unwrap()
}

#[test]
fn header_declares_the_api() {
    let h = header();
    for name in [
        "z4w_last_error",
        "z4w_ring_add",
        "z4w_ring_mul",
        "z4w_gau_dist",
        "z4w_phi",
        "z4w_code_octa",
        "z4w_code_simplex",
        "z4w_code_rm1",
        "z4w_code_rmr",
        "z4w_code_from_json",
        "z4w_code_free",
        "z4w_code_length",
        "z4w_code_size",
        "z4w_code_min_distance",
        "z4w_code_closures",
        "z4w_code_dna_word",
        "z4w_code_ring_word",
        "z4w_code_label",
        "typedef struct Z4wCode Z4wCode",
        "Z4W_STATUS_OK = 0",
    ] {
        assert!(h.contains(name), "header lacks {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/z4w_dna.h");
    let status = Command::new("cc").args(["-fsyntax-only", "-std=c99", "-Wall", "-Werror", "-x", "c"]).arg(&path).status();
    match status {
        Ok(s) => assert!(s.success(), "cc rejected the header"),
        Err(e) => panic!("no C compiler available: {e}"),
    }
}
