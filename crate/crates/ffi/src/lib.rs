//! C ABI over `hypercert`.
//!
//! Conventions:
//!
//! - every fallible call returns an [`HcStatus`]; on failure a message is
//!   available from [`hc_last_error`] on the same thread;
//! - varieties are opaque [`HcVariety`] handles released with
//!   [`hc_variety_free`];
//! - strings returned through `char **` out-parameters are owned by the
//!   caller and released with [`hc_string_free`];
//! - panics never cross the boundary; they surface as
//!   `HC_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hypercert::chern_fano::{fano_class, line_count};
use hypercert::cli::parse_variety;
use hypercert::genus_bound::hyperbolicity_certificate;
use hypercert::grassmann_chow::{multiply, ChowElement, RingContext};
use hypercert::variety_catalog::{
    classify, hyperbolicity_threshold, lines_threshold, Classification, DegreeVector,
    VarietyDescriptor,
};
use hypercert::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    BufferTooSmall = 5,
    Invariant = 6,
    Panic = 7,
}

/// Outcome of [`hc_variety_classify`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcClassKind {
    Hyperbolic = 0,
    ContainsLines = 1,
    OpenGap = 2,
    LowDimension = 3,
}

/// Opaque handle to a parsed variety.
pub struct HcVariety(VarietyDescriptor);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("NULs removed"));
}

fn status_of(e: &Error) -> HcStatus {
    match e {
        Error::Parse { .. } => HcStatus::ParseError,
        Error::Invariant(_) => HcStatus::Invariant,
        _ => HcStatus::InvalidArgument,
    }
}

struct Fail(HcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            HcStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            HcStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(HcStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(HcStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn read_degrees(v: &VarietyDescriptor, p: *const u32, len: usize) -> Result<DegreeVector, Fail> {
    if p.is_null() {
        return Err(null("degrees"));
    }
    let d = DegreeVector::new(std::slice::from_raw_parts(p, len).to_vec())?;
    v.check_degrees(&d)?;
    Ok(d)
}

unsafe fn variety<'a>(p: *const HcVariety) -> Result<&'a VarietyDescriptor, Fail> {
    p.as_ref().map(|v| &v.0).ok_or_else(|| null("variety"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| Fail(HcStatus::Invariant, "output contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message for the last failed call on this thread; empty after success.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn hc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a specification such as `Gr(2,4)xP(2)` into a new handle.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_variety_parse(name: *const c_char, out: *mut *mut HcVariety) -> HcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let v = parse_variety(read_str(name, "name")?)?;
        *out = Box::into_raw(Box::new(HcVariety(v)));
        Ok(())
    })
}

/// Releases a handle from [`hc_variety_parse`]. NULL is ignored.
///
/// # Safety
/// `v` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hc_variety_free(v: *mut HcVariety) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Dimension `D`; 0 for a NULL handle.
///
/// # Safety
/// `v` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hc_variety_dimension(v: *const HcVariety) -> u32 {
    v.as_ref().map_or(0, |v| v.0.dim())
}

/// Picard rank `m`; 0 for a NULL handle.
///
/// # Safety
/// `v` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hc_variety_picard_rank(v: *const HcVariety) -> usize {
    v.as_ref().map_or(0, |v| v.0.picard_rank())
}

/// Writes the canonical coefficients, hyperbolicity thresholds and lines
/// thresholds into caller arrays of length `len >= m`. Any output pointer
/// may be NULL to skip it.
///
/// # Safety
/// `v` must be a live handle; non-NULL arrays must hold `len` elements.
#[no_mangle]
pub unsafe extern "C" fn hc_variety_thresholds(
    v: *const HcVariety,
    canonical: *mut i64,
    hyperbolic: *mut i64,
    lines: *mut i64,
    len: usize,
) -> HcStatus {
    guard(|| {
        let v = variety(v)?;
        let m = v.picard_rank();
        if len < m {
            return Err(Fail(HcStatus::BufferTooSmall, format!("need room for {m} values, got {len}")));
        }
        let fill = |dst: *mut i64, src: &[i64]| {
            if !dst.is_null() {
                ptr::copy_nonoverlapping(src.as_ptr(), dst, src.len());
            }
        };
        fill(canonical, v.canonical());
        fill(hyperbolic, &hyperbolicity_threshold(v));
        fill(lines, &lines_threshold(v));
        Ok(())
    })
}

/// Classifies a very general hypersurface of multidegree `degrees[0..len]`.
/// `index` receives the 1-based witness for `CONTAINS_LINES`, the first
/// 1-based open index for `OPEN_GAP`, and 0 otherwise; it may be NULL.
///
/// # Safety
/// `v` must be a live handle, `degrees` must hold `len` values and `kind`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_variety_classify(
    v: *const HcVariety,
    degrees: *const u32,
    len: usize,
    kind: *mut HcClassKind,
    index: *mut usize,
) -> HcStatus {
    guard(|| {
        let v = variety(v)?;
        if kind.is_null() {
            return Err(null("kind"));
        }
        let d = read_degrees(v, degrees, len)?;
        let (k, i) = match classify(v, &d)? {
            Classification::Hyperbolic => (HcClassKind::Hyperbolic, 0),
            Classification::ContainsLines { witness } => (HcClassKind::ContainsLines, witness + 1),
            Classification::OpenGap { indices } => {
                (HcClassKind::OpenGap, indices.first().map_or(0, |i| i + 1))
            }
            Classification::LowDimension => (HcClassKind::LowDimension, 0),
        };
        *kind = k;
        if !index.is_null() {
            *index = i;
        }
        Ok(())
    })
}

/// Full hyperbolicity certificate as JSON (same document as
/// `hypercert certify --json`).
///
/// # Safety
/// `v` must be a live handle, `degrees` must hold `len` values and `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_certify_json(
    v: *const HcVariety,
    degrees: *const u32,
    len: usize,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        let v = variety(v)?;
        let d = read_degrees(v, degrees, len)?;
        let report = hyperbolicity_certificate(v, &d)?;
        let json = serde_json::to_string(&report)
            .map_err(|e| Fail(HcStatus::Invariant, e.to_string()))?;
        write_string(out, json)
    })
}

/// Lines on a general hypersurface of degree `2n-3` in `P^n`, in decimal.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_line_count(n: u32, out: *mut *mut c_char) -> HcStatus {
    guard(|| write_string(out, line_count(n)?.to_string()))
}

/// Fano-scheme class report for degree `d` in `G(2,N)` as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_fano_class_json(d: u32, big_n: u32, out: *mut *mut c_char) -> HcStatus {
    guard(|| {
        let r = fano_class(d, big_n)?;
        let json = serde_json::to_string(&r).map_err(|e| Fail(HcStatus::Invariant, e.to_string()))?;
        write_string(out, json)
    })
}

/// Product of two elements of the Chow ring of `G(k,n)` written as text,
/// e.g. `"s[2,1] + 3*s[1]"`; the result uses the same syntax.
///
/// # Safety
/// `x` and `y` must be NUL-terminated strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hc_schubert_multiply(
    k: u32,
    n: u32,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        let ctx = RingContext::new(k, n)?;
        let a = ChowElement::parse(ctx, read_str(x, "x")?)?;
        let b = ChowElement::parse(ctx, read_str(y, "y")?)?;
        write_string(out, multiply(&a, &b)?.to_string())
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
