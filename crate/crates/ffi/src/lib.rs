//! C ABI over the `sqmirror` engine.
//!
//! Handles are opaque pointers created by `sqm_engine_new` and released by
//! `sqm_engine_free`. Every call returns an [`SqmStatus`]; on failure the
//! message is available from `sqm_last_error` on the same thread. Strings
//! returned through out-parameters are owned by the caller and must be
//! released with `sqm_string_free`. Rationals cross the boundary as
//! `"p/q"` text, structured results as JSON.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sqmirror::cli::{run_suite, Format, RunConfig, Suite};
use sqmirror::mirror_nonequivariant::{table1, ExponentTuple, Flavor, InvariantEngine};
use sqmirror::series_kernel::CanonicalJson;
use sqmirror::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SqmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    Domain = 4,
    Frame = 5,
    Singular = 6,
    /// A verification ran and at least one check failed.
    VerificationFailed = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SqmFlavor {
    Sq = 0,
    Gw = 1,
}

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SqmSuite {
    Recursivity = 0,
    Polynomiality = 1,
    Mirror = 2,
    Hurwitz = 3,
    PsiIntegrals = 4,
    L0 = 5,
}

/// Invariant engine for one `(n, a)` up to a fixed degree.
pub struct SqmEngine {
    inner: InvariantEngine,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SqmStatus {
    match e {
        Error::Range(_) => SqmStatus::OutOfRange,
        Error::Parse(_) | Error::InvalidTuple(_) => SqmStatus::InvalidArgument,
        Error::Domain(_) | Error::TheoremDomain(_) | Error::Pole(_) | Error::NotInvertible(_) => SqmStatus::Domain,
        Error::Frame(_) | Error::Resonance(_) => SqmStatus::Frame,
        Error::SingularEquation { .. } | Error::NotReversible(_) => SqmStatus::Singular,
        _ => SqmStatus::Internal,
    }
}

/// Run `f`, recording errors and turning panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<SqmStatus, (SqmStatus, String)>) -> SqmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            SqmStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (SqmStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (SqmStatus, String) {
    (SqmStatus::NullPointer, format!("{what} is null"))
}

unsafe fn tuple_from(a: *const i64, a_len: usize) -> Result<ExponentTuple, (SqmStatus, String)> {
    if a_len == 0 {
        return Ok(ExponentTuple::empty());
    }
    if a.is_null() {
        return Err(null("a"));
    }
    let entries = std::slice::from_raw_parts(a, a_len).to_vec();
    ExponentTuple::new(entries).map_err(lib_err)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (SqmStatus, String)> {
    let c = CString::new(s).map_err(|_| (SqmStatus::Internal, "string contains nul".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Create an engine for `(n, a)` valid for degrees `1 … d_max`.
///
/// # Safety
/// `a` must point to `a_len` readable values (or be null with `a_len == 0`);
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqm_engine_new(
    n: u32,
    a: *const i64,
    a_len: usize,
    d_max: usize,
    out: *mut *mut SqmEngine,
) -> SqmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let tuple = tuple_from(a, a_len)?;
        let inner = InvariantEngine::new(n, &tuple, d_max).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(SqmEngine { inner }));
        Ok(SqmStatus::Ok)
    })
}

/// Release an engine. Null is ignored.
///
/// # Safety
/// `engine` must come from `sqm_engine_new` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sqm_engine_free(engine: *mut SqmEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// One invariant as `"p/q"` text in `*out`.
///
/// # Safety
/// `engine` must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sqm_engine_invariant(
    engine: *const SqmEngine,
    flavor: SqmFlavor,
    d: usize,
    p: usize,
    out: *mut *mut c_char,
) -> SqmStatus {
    guard(|| {
        if engine.is_null() {
            return Err(null("engine"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let flavor = match flavor {
            SqmFlavor::Sq => Flavor::Sq,
            SqmFlavor::Gw => Flavor::Gw,
        };
        let rec = (*engine).inner.invariant(flavor, d, p).map_err(lib_err)?;
        write_string(out, rec.value.to_string())?;
        Ok(SqmStatus::Ok)
    })
}

/// The quintic table for `d ≤ d_max` as JSON rows `{"d": …, "cols": […]}`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sqm_table1_json(d_max: usize, out: *mut *mut c_char) -> SqmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let rows = table1(d_max).map_err(lib_err)?;
        let doc: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| serde_json::json!({"d": r.d, "cols": r.cols.iter().map(|c| c.to_json()).collect::<Vec<_>>()}))
            .collect();
        write_string(out, serde_json::Value::Array(doc).to_string())?;
        Ok(SqmStatus::Ok)
    })
}

/// Run a verification suite at `frames` random frames drawn from `seed`.
/// The verdicts are written to `*out` as JSON whether or not they pass;
/// the status is `VerificationFailed` if any check failed. `h_order` of 0
/// selects the suite default.
///
/// # Safety
/// `a` as for `sqm_engine_new`; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sqm_verify(
    suite: SqmSuite,
    n: u32,
    a: *const i64,
    a_len: usize,
    d_max: usize,
    h_order: usize,
    seed: u64,
    frames: usize,
    out: *mut *mut c_char,
) -> SqmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if d_max == 0 || frames == 0 || n == 0 {
            return Err((SqmStatus::OutOfRange, "n, d_max and frames must be positive".into()));
        }
        let suite = match suite {
            SqmSuite::Recursivity => Suite::Recursivity,
            SqmSuite::Polynomiality => Suite::Polynomiality,
            SqmSuite::Mirror => Suite::Mirror,
            SqmSuite::Hurwitz => Suite::Hurwitz,
            SqmSuite::PsiIntegrals => Suite::PsiIntegrals,
            SqmSuite::L0 => Suite::L0,
        };
        let default_h = match suite {
            Suite::L0 => 6,
            _ => 3,
        };
        let cfg = RunConfig {
            command: format!("verify {suite}"),
            n,
            a: tuple_from(a, a_len)?,
            d_max,
            h_order: if h_order == 0 { default_h } else { h_order },
            z_max: 3,
            seed,
            frames,
            format: Format::Json,
        };
        let verdicts = run_suite(&cfg, suite).map_err(lib_err)?;
        let pass = verdicts.iter().all(|v| v.pass);
        let doc = serde_json::json!({
            "suite": suite.to_string(),
            "pass": pass,
            "verdicts": verdicts.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
        });
        write_string(out, doc.to_string())?;
        Ok(if pass { SqmStatus::Ok } else { SqmStatus::VerificationFailed })
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sqm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sqm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn sqm_status_str(status: SqmStatus) -> *const c_char {
    let s: &'static CStr = match status {
        SqmStatus::Ok => c"ok",
        SqmStatus::NullPointer => c"null pointer",
        SqmStatus::InvalidArgument => c"invalid argument",
        SqmStatus::OutOfRange => c"out of range",
        SqmStatus::Domain => c"domain error",
        SqmStatus::Frame => c"degenerate weight frame",
        SqmStatus::Singular => c"singular equation",
        SqmStatus::VerificationFailed => c"verification failed",
        SqmStatus::Internal => c"internal error",
    };
    s.as_ptr()
}
