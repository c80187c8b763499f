//! C ABI for the braid-closure invariant engine.
//!
//! Conventions:
//! - Every function returns a `TkStatus` code (0 = success) or a pointer
//!   that is null on failure; the thread-local message from
//!   `tk_last_error_message` describes the most recent failure.
//! - `TkResult` is an opaque handle; free it with `tk_result_free`.
//!   Strings returned by `tk_*_to_string` functions are owned by the
//!   caller and must be released with `tk_string_free`.
//! - The header `include/taftknot.h` mirrors these declarations.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use taftknot::braid::parse;
use taftknot::invariant::{evaluate, InvariantResult, Mode, DEFAULT_DIM_CAP};

/// Status codes shared with the C header. Values are part of the ABI.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TkStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    EvalError = 4,
    VerifyFailed = 5,
    Panic = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap());
}

/// An evaluated invariant plus the strings handed across the boundary.
pub struct TkResult {
    inner: InvariantResult,
    value_pretty: CString,
    json: CString,
}

fn guard<F: FnOnce() -> TkStatus>(f: F) -> TkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            TkStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, TkStatus> {
    if p.is_null() {
        set_error(format!("{what} is null"));
        return Err(TkStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        TkStatus::InvalidUtf8
    })
}

/// Message for the most recent error on this thread. Borrowed; valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Evaluates the closure of a braid word.
///
/// - `braid`: e.g. `"B2: s1^-3"` or `"[-1, -1, -1]"`.
/// - `n`: module index (`1` recovers the Jones normalization).
/// - `mode`: `"framed"`, `"balanced"`, or `"reduced"`.
/// - `strands`: strand count for bare index lists, or `0` to infer.
///
/// On success writes a handle to `*out` and returns `TK_OK`.
#[no_mangle]
pub unsafe extern "C" fn tk_evaluate(
    braid: *const c_char,
    n: u32,
    mode: *const c_char,
    strands: usize,
    out: *mut *mut TkResult,
) -> TkStatus {
    guard(|| {
        if out.is_null() {
            set_error("out is null");
            return TkStatus::NullArgument;
        }
        let braid = match read_str(braid, "braid") {
            Ok(s) => s,
            Err(st) => return st,
        };
        let mode = match read_str(mode, "mode") {
            Ok(s) => s,
            Err(st) => return st,
        };
        let mode: Mode = match mode.parse() {
            Ok(m) => m,
            Err(e) => {
                set_error(e.to_string());
                return TkStatus::ParseError;
            }
        };
        let strands = if strands == 0 { None } else { Some(strands) };
        let word = match parse(braid, strands) {
            Ok(w) => w,
            Err(e) => {
                set_error(e.to_string());
                return TkStatus::ParseError;
            }
        };
        let result = match evaluate(&word, n, mode, DEFAULT_DIM_CAP) {
            Ok(r) => r,
            Err(e) => {
                set_error(e.to_string());
                return TkStatus::EvalError;
            }
        };
        let value_pretty = CString::new(result.value_pretty.clone()).unwrap();
        let json = CString::new(serde_json::to_string(&result).unwrap()).unwrap();
        *out = Box::into_raw(Box::new(TkResult { inner: result, value_pretty, json }));
        TkStatus::Ok
    })
}

/// The invariant as a human-readable Laurent polynomial in `q`.
/// Borrowed from the handle; valid until `tk_result_free`.
#[no_mangle]
pub unsafe extern "C" fn tk_result_value(res: *const TkResult) -> *const c_char {
    if res.is_null() {
        set_error("result handle is null");
        return ptr::null();
    }
    (*res).value_pretty.as_ptr()
}

/// The full result (braid, writhe, components, coefficients) as one JSON
/// object. Borrowed from the handle; valid until `tk_result_free`.
#[no_mangle]
pub unsafe extern "C" fn tk_result_json(res: *const TkResult) -> *const c_char {
    if res.is_null() {
        set_error("result handle is null");
        return ptr::null();
    }
    (*res).json.as_ptr()
}

/// Writhe of the evaluated word.
#[no_mangle]
pub unsafe extern "C" fn tk_result_writhe(res: *const TkResult) -> i64 {
    if res.is_null() {
        return 0;
    }
    (*res).inner.writhe
}

/// Number of components of the closure.
#[no_mangle]
pub unsafe extern "C" fn tk_result_components(res: *const TkResult) -> usize {
    if res.is_null() {
        return 0;
    }
    (*res).inner.components
}

/// Number of braid strands used.
#[no_mangle]
pub unsafe extern "C" fn tk_result_strands(res: *const TkResult) -> usize {
    if res.is_null() {
        return 0;
    }
    (*res).inner.strands
}

/// Releases a result handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn tk_result_free(res: *mut TkResult) {
    if !res.is_null() {
        drop(Box::from_raw(res));
    }
}

/// Releases a string returned with caller ownership. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn tk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Runs a named verification suite (`"hopf"`, `"yd"`, `"braid-eq"`,
/// `"ribbon"`, `"markov"`, `"jones"`, or `"all"`) and, if `out_report` is
/// non-null, writes a caller-owned report string (release with
/// `tk_string_free`). Returns `TK_OK` when every check passes and
/// `TK_VERIFY_FAILED` when any check fails.
#[no_mangle]
pub unsafe extern "C" fn tk_verify(
    suite: *const c_char,
    m: u32,
    n: u32,
    seed: u64,
    cases: usize,
    out_report: *mut *mut c_char,
) -> TkStatus {
    guard(|| {
        let suite = match read_str(suite, "suite") {
            Ok(s) => s,
            Err(st) => return st,
        };
        let reports = match taftknot::cli::verify_suite(suite, m, n, seed, cases) {
            Ok(r) => r,
            Err(e) => {
                set_error(e.to_string());
                return TkStatus::ParseError;
            }
        };
        let all_pass = reports.iter().all(|r| r.all_pass());
        if !out_report.is_null() {
            let text: String =
                reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
            *out_report = CString::new(text.replace('\0', " ")).unwrap().into_raw();
        }
        if all_pass {
            TkStatus::Ok
        } else {
            set_error(format!("suite {suite:?} reported failures"));
            TkStatus::VerifyFailed
        }
    })
}
