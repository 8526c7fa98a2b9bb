//! C ABI for `wronskian-appell`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free` function. Every entry point returns a
//! [`WapStatus`]; on failure a message is available from
//! [`wap_last_error_message`] on the same thread. Strings handed out by the
//! library are NUL-terminated UTF-8 and must be released with
//! [`wap_string_free`]. Panics never unwind into the caller.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wronskian_appell::plancherel;
use wronskian_appell::verify::{run_suites, Identity};
use wronskian_appell::wapoly::{Route, WapEngine};
use wronskian_appell::{parse_spec, Error, Partition, Poly};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WapStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    CheckFailed = 5,
    Panic = 6,
}

pub const WAP_ROUTE_DIRECT: i32 = 0;
pub const WAP_ROUTE_PHI: i32 = 1;
pub const WAP_ROUTE_RECURRENCE: i32 = 2;
pub const WAP_ROUTE_CROSS_CHECKED: i32 = 3;

pub const WAP_FORMAT_PLAIN: i32 = 0;
pub const WAP_FORMAT_JSON: i32 = 1;
pub const WAP_FORMAT_LATEX: i32 = 2;

/// An Appell sequence together with its memo tables.
pub struct WapSpec {
    engine: WapEngine,
}

/// A polynomial with rational coefficients.
pub struct WapPoly {
    poly: Poly,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(WapStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.exit_code() == 2 {
            WapStatus::ParseError
        } else {
            WapStatus::CheckFailed
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> WapStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => WapStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            WapStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(WapStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(WapStatus::InvalidUtf8, "argument is not valid UTF-8".into()))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(WapStatus::NullPointer, "null handle".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(WapStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(WapStatus::InvalidArgument, "NUL in output".into()))?;
    write_out(out, c.into_raw())
}

fn route_from(code: i32) -> Result<Route, Failure> {
    match code {
        WAP_ROUTE_DIRECT => Ok(Route::Direct),
        WAP_ROUTE_PHI => Ok(Route::Phi),
        WAP_ROUTE_RECURRENCE => Ok(Route::Recurrence),
        WAP_ROUTE_CROSS_CHECKED => Ok(Route::CrossChecked),
        other => Err(Failure(WapStatus::InvalidArgument, format!("unknown route code {other}"))),
    }
}

/// Parses a sequence description such as `"hermite"` or `"laguerre:1/2"`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn wap_spec_parse(text: *const c_char, out: *mut *mut WapSpec) -> WapStatus {
    guard(|| {
        let spec = parse_spec(read_str(text)?)?;
        let handle = Box::new(WapSpec {
            engine: WapEngine::with_route(spec, Route::CrossChecked),
        });
        write_out(out, Box::into_raw(handle))
    })
}

/// # Safety
/// `spec` must come from [`wap_spec_parse`] and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn wap_spec_free(spec: *mut WapSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

/// Writes the cumulant `c_k` (`k ≥ 1`) as a `p/q` string.
///
/// # Safety
/// `spec` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn wap_spec_cumulant(spec: *const WapSpec, k: usize, out: *mut *mut c_char) -> WapStatus {
    guard(|| {
        let spec = deref(spec)?;
        if k == 0 {
            return Err(Failure(WapStatus::InvalidArgument, "cumulants start at k = 1".into()));
        }
        let c = spec.engine.spec().cumulant(k)?;
        write_string(out, c.to_string())
    })
}

/// Computes `A_λ` for a partition written as `"3,2,1"`.
///
/// # Safety
/// `spec` must be a live handle, `partition` a NUL-terminated string and `out`
/// a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn wap_compute(
    spec: *const WapSpec,
    partition: *const c_char,
    route: i32,
    out: *mut *mut WapPoly,
) -> WapStatus {
    guard(|| {
        let spec = deref(spec)?;
        let lambda: Partition = read_str(partition)?.parse()?;
        let route = route_from(route)?;
        let poly = spec.engine.compute(&lambda, route)?;
        write_out(out, Box::into_raw(Box::new(WapPoly { poly })))
    })
}

/// Degree of the polynomial, or -1 for the zero polynomial or a null handle.
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wap_poly_degree(poly: *const WapPoly) -> i64 {
    match poly.as_ref().and_then(|p| p.poly.degree()) {
        Some(d) => d as i64,
        None => -1,
    }
}

/// Writes the coefficient of `x^i` as a `p/q` string; zero beyond the degree.
///
/// # Safety
/// `poly` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn wap_poly_coeff(poly: *const WapPoly, i: usize, out: *mut *mut c_char) -> WapStatus {
    guard(|| {
        let poly = deref(poly)?;
        write_string(out, poly.poly.coeff(i).to_string())
    })
}

/// Renders the polynomial in one of the `WAP_FORMAT_*` formats. The JSON form
/// is the array of coefficient strings, lowest degree first.
///
/// # Safety
/// `poly` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn wap_poly_render(poly: *const WapPoly, format: i32, out: *mut *mut c_char) -> WapStatus {
    guard(|| {
        let poly = &deref(poly)?.poly;
        let text = match format {
            WAP_FORMAT_PLAIN => poly.to_string(),
            WAP_FORMAT_JSON => serde_json::to_string(poly).expect("serialisable"),
            WAP_FORMAT_LATEX => poly.to_latex(),
            other => {
                return Err(Failure(WapStatus::InvalidArgument, format!("unknown format code {other}")))
            }
        };
        write_string(out, text)
    })
}

/// # Safety
/// `poly` must come from [`wap_compute`] and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn wap_poly_free(poly: *mut WapPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Runs a verification suite (or `"all"`) up to `max_size` and writes a JSON
/// array of suite reports. Returns `WAP_STATUS_CHECK_FAILED` when any suite
/// fails; the report is written in that case too.
///
/// # Safety
/// `spec` must be a live handle, `identity` a NUL-terminated string and
/// `out_json` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn wap_verify(
    spec: *const WapSpec,
    identity: *const c_char,
    max_size: usize,
    out_json: *mut *mut c_char,
) -> WapStatus {
    guard(|| {
        let spec = deref(spec)?;
        let ids = Identity::parse_selector(read_str(identity)?)?;
        let reports = run_suites(&spec.engine, &ids, max_size);
        write_string(out_json, serde_json::to_string(&reports).expect("serialisable"))?;
        match reports.iter().find(|r| !r.passed()) {
            None => Ok(()),
            Some(r) => Err(Failure(WapStatus::CheckFailed, format!("suite {} failed", r.identity))),
        }
    })
}

/// Writes the Plancherel report (mean, second moment, variance) for size `n`
/// as a JSON object.
///
/// # Safety
/// `spec` must be a live handle and `out_json` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn wap_stats_json(spec: *const WapSpec, n: usize, out_json: *mut *mut c_char) -> WapStatus {
    guard(|| {
        let spec = deref(spec)?;
        let report = plancherel::report(&spec.engine, n)?;
        write_string(out_json, serde_json::to_string(&report).expect("serialisable"))
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn wap_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn wap_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn wap_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
