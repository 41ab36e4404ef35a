//! C ABI over the simderiv library.
//!
//! All handles are opaque; every `Sd*` pointer returned by this library must
//! be released with its matching `sd_*_free` function, and every `char*`
//! with [`sd_string_free`]. Functions returning [`SdStatus`] write their
//! result through an out-pointer only on `SD_OK`.

use simderiv::decider::{
    decide, derivation_of, normalize, verify_witness, BinomialDerivationSpec, Outcome, Verdict,
};
use simderiv::deriv::Derivation;
use simderiv::exprio::{format_poly, parse_poly, parse_rat};
use simderiv::oracle::{darboux_search, SearchConfig, SearchMode};
use simderiv::pfrak::pfrak;
use simderiv::qpoly::BPoly;
use std::ffi::{c_char, c_int, c_uint, CStr, CString};
use std::ptr;

/// Status codes returned by fallible entry points.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum SdStatus {
    SdOk = 0,
    /// A required pointer argument was null.
    SdNullPointer = 1,
    /// An input string was not valid UTF-8 or failed to parse.
    SdParseError = 2,
    /// Arguments were structurally valid but violated a precondition.
    SdInvalidArgument = 3,
}

/// Opaque polynomial in Q[x, y].
pub struct SdPoly {
    inner: BPoly,
}

/// Opaque classification result: verdict plus the derivation it concerns.
pub struct SdVerdict {
    verdict: Verdict,
    derivation: Derivation,
}

fn read_str<'a>(p: *const c_char) -> Result<&'a str, SdStatus> {
    if p.is_null() {
        return Err(SdStatus::SdNullPointer);
    }
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| SdStatus::SdParseError)
}

fn give_string(s: String) -> *mut c_char {
    // interior NULs cannot occur in our canonical renderings
    CString::new(s).expect("no interior NUL").into_raw()
}

/// Parses a polynomial over x, y with rational coefficients.
/// On success stores a new handle in `out`.
#[no_mangle]
pub extern "C" fn sd_poly_parse(src: *const c_char, out: *mut *mut SdPoly) -> SdStatus {
    if out.is_null() {
        return SdStatus::SdNullPointer;
    }
    let src = match read_str(src) {
        Ok(s) => s,
        Err(e) => return e,
    };
    match parse_poly(src) {
        Ok(p) => {
            unsafe { *out = Box::into_raw(Box::new(SdPoly { inner: p })) };
            SdStatus::SdOk
        }
        Err(_) => SdStatus::SdParseError,
    }
}

/// Canonical text form of a polynomial. Free with `sd_string_free`.
/// Returns null when `p` is null.
#[no_mangle]
pub extern "C" fn sd_poly_format(p: *const SdPoly) -> *mut c_char {
    if p.is_null() {
        return ptr::null_mut();
    }
    let p = unsafe { &*p };
    give_string(format_poly(&p.inner))
}

/// Releases a polynomial handle. Null is a no-op.
#[no_mangle]
pub extern "C" fn sd_poly_free(p: *mut SdPoly) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Classifies y^r dx + (c1 x^t1 y^s1 + c2 x^t2 y^s2) dy. The coefficients
/// are rational literals such as "1", "-2", "1/2". On success stores a new
/// verdict handle in `out`.
#[no_mangle]
pub extern "C" fn sd_classify(
    r: c_uint,
    t1: c_uint,
    s1: c_uint,
    t2: c_uint,
    s2: c_uint,
    c1: *const c_char,
    c2: *const c_char,
    out: *mut *mut SdVerdict,
) -> SdStatus {
    if out.is_null() {
        return SdStatus::SdNullPointer;
    }
    let (c1, c2) = match (read_str(c1), read_str(c2)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    let (c1, c2) = match (parse_rat(c1), parse_rat(c2)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return SdStatus::SdParseError,
    };
    let raw = BinomialDerivationSpec {
        r,
        t1,
        s1,
        t2,
        s2,
        c1,
        c2,
    };
    let verdict = decide(&raw);
    let derivation = derivation_of(&normalize(&raw));
    unsafe {
        *out = Box::into_raw(Box::new(SdVerdict {
            verdict,
            derivation,
        }))
    };
    SdStatus::SdOk
}

/// 1 when the verdict is Simple, 0 when NotSimple, -1 when `v` is null.
#[no_mangle]
pub extern "C" fn sd_verdict_is_simple(v: *const SdVerdict) -> c_int {
    if v.is_null() {
        return -1;
    }
    match unsafe { &*v }.verdict.outcome {
        Outcome::Simple => 1,
        Outcome::NotSimple => 0,
    }
}

/// The decisive rule name. Free with `sd_string_free`.
#[no_mangle]
pub extern "C" fn sd_verdict_rule(v: *const SdVerdict) -> *mut c_char {
    if v.is_null() {
        return ptr::null_mut();
    }
    give_string(unsafe { &*v }.verdict.rule().to_owned())
}

/// The full verdict as a JSON document. Free with `sd_string_free`.
#[no_mangle]
pub extern "C" fn sd_verdict_json(v: *const SdVerdict) -> *mut c_char {
    if v.is_null() {
        return ptr::null_mut();
    }
    let v = unsafe { &*v };
    give_string(serde_json::to_string(&v.verdict.to_json()).expect("serializable"))
}

/// Re-checks the verdict's witness against its derivation.
/// 1 = verified (or Simple, nothing to check), 0 = failed, -1 = null input.
#[no_mangle]
pub extern "C" fn sd_verdict_verify(v: *const SdVerdict) -> c_int {
    if v.is_null() {
        return -1;
    }
    let v = unsafe { &*v };
    verify_witness(&v.derivation, &v.verdict) as c_int
}

/// Releases a verdict handle. Null is a no-op.
#[no_mangle]
pub extern "C" fn sd_verdict_free(v: *mut SdVerdict) {
    if !v.is_null() {
        drop(unsafe { Box::from_raw(v) });
    }
}

/// Computes the iterated-division polynomial for univariate a, b (text in x
/// only). On success stores its canonical text form in `out`.
/// Fails with `SD_INVALID_ARGUMENT` when a is zero or either input mentions y.
#[no_mangle]
pub extern "C" fn sd_pfrak(
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut c_char,
) -> SdStatus {
    if out.is_null() {
        return SdStatus::SdNullPointer;
    }
    let (a, b) = match (read_str(a), read_str(b)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    let (a, b) = match (parse_poly(a), parse_poly(b)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return SdStatus::SdParseError,
    };
    let (Some(a), Some(b)) = (a.to_upoly(), b.to_upoly()) else {
        return SdStatus::SdInvalidArgument;
    };
    match pfrak(&a, &b) {
        Ok((p, _)) => {
            unsafe { *out = give_string(format_poly(&p.to_bpoly())) };
            SdStatus::SdOk
        }
        Err(_) => SdStatus::SdInvalidArgument,
    }
}

/// Bounded-degree Darboux element search for the derivation (dx, dy), both
/// modes. On success stores one "f = ...; lambda = ..." line per certificate
/// (empty string when none exist) in `out`.
#[no_mangle]
pub extern "C" fn sd_darboux_search(
    dx: *const SdPoly,
    dy: *const SdPoly,
    max_deg_x: c_uint,
    max_deg_y: c_uint,
    out: *mut *mut c_char,
) -> SdStatus {
    if dx.is_null() || dy.is_null() || out.is_null() {
        return SdStatus::SdNullPointer;
    }
    let d = Derivation::new(
        unsafe { &*dx }.inner.clone(),
        unsafe { &*dy }.inner.clone(),
    );
    if d.is_zero() {
        return SdStatus::SdInvalidArgument;
    }
    let cfg = SearchConfig::new(max_deg_x, max_deg_y, SearchMode::Both);
    let lines: Vec<String> = darboux_search(&d, &cfg)
        .iter()
        .map(|c| format!("f = {}; lambda = {}", format_poly(&c.f), format_poly(&c.lambda)))
        .collect();
    unsafe { *out = give_string(lines.join("\n")) };
    SdStatus::SdOk
}

/// Releases a string returned by this library. Null is a no-op.
#[no_mangle]
pub extern "C" fn sd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
