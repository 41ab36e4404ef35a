//! Exercises the C entry points from Rust the way a C caller would.

use simderiv_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    sd_string_free(p);
    s
}

#[test]
fn poly_parse_format_round_trip() {
    let mut h: *mut SdPoly = ptr::null_mut();
    let status = sd_poly_parse(cstr("x^2*y - 1/2").as_ptr(), &mut h);
    assert!(status == SdStatus::SdOk);
    assert_eq!(take_string(sd_poly_format(h)), "x^2*y - 1/2");
    sd_poly_free(h);
}

#[test]
fn poly_parse_reports_errors() {
    let mut h: *mut SdPoly = ptr::null_mut();
    assert!(sd_poly_parse(cstr("x^-1").as_ptr(), &mut h) == SdStatus::SdParseError);
    assert!(sd_poly_parse(ptr::null(), &mut h) == SdStatus::SdNullPointer);
}

#[test]
fn classify_simple_and_not_simple() {
    // dx + (y^2 + x) dy is simple
    let mut v: *mut SdVerdict = ptr::null_mut();
    let st = sd_classify(
        0,
        1,
        0,
        0,
        2,
        cstr("1").as_ptr(),
        cstr("1").as_ptr(),
        &mut v,
    );
    assert!(st == SdStatus::SdOk);
    assert_eq!(sd_verdict_is_simple(v), 1);
    assert_eq!(sd_verdict_verify(v), 1);
    sd_verdict_free(v);

    // dx + (x^2 + 1) dy is not: a Darboux curve exists
    let mut v: *mut SdVerdict = ptr::null_mut();
    let st = sd_classify(
        0,
        2,
        0,
        0,
        0,
        cstr("1").as_ptr(),
        cstr("1").as_ptr(),
        &mut v,
    );
    assert!(st == SdStatus::SdOk);
    assert_eq!(sd_verdict_is_simple(v), 0);
    assert_eq!(sd_verdict_verify(v), 1);
    let json = take_string(sd_verdict_json(v));
    assert!(json.contains("\"outcome\":\"NotSimple\""));
    let rule = take_string(sd_verdict_rule(v));
    assert!(rule.starts_with("rule:notsimple:"));
    sd_verdict_free(v);
}

#[test]
fn pfrak_entry_point() {
    let mut out: *mut std::ffi::c_char = ptr::null_mut();
    let st = sd_pfrak(cstr("x^2").as_ptr(), cstr("x + 1").as_ptr(), &mut out);
    assert!(st == SdStatus::SdOk);
    assert_eq!(take_string(out), "x + 1");

    let mut out: *mut std::ffi::c_char = ptr::null_mut();
    assert!(sd_pfrak(cstr("0").as_ptr(), cstr("x").as_ptr(), &mut out) == SdStatus::SdInvalidArgument);
    assert!(sd_pfrak(cstr("y").as_ptr(), cstr("x").as_ptr(), &mut out) == SdStatus::SdInvalidArgument);
}

#[test]
fn darboux_search_entry_point() {
    let mut dx: *mut SdPoly = ptr::null_mut();
    let mut dy: *mut SdPoly = ptr::null_mut();
    assert!(sd_poly_parse(cstr("1").as_ptr(), &mut dx) == SdStatus::SdOk);
    assert!(sd_poly_parse(cstr("x^2 + 1").as_ptr(), &mut dy) == SdStatus::SdOk);
    let mut out: *mut std::ffi::c_char = ptr::null_mut();
    let st = sd_darboux_search(dx, dy, 3, 1, &mut out);
    assert!(st == SdStatus::SdOk);
    let lines = take_string(out);
    assert!(lines.contains("lambda = 0"), "got: {lines}");
    sd_poly_free(dx);
    sd_poly_free(dy);
}

#[test]
fn header_is_generated() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/simderiv.h");
    let text = std::fs::read_to_string(header).unwrap();
    assert!(text.contains("sd_classify"));
    assert!(text.contains("sd_string_free"));
}
