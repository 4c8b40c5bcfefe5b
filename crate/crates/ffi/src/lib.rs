//! C ABI for the higgsy library.
//!
//! Conventions:
//! - every fallible function returns a [`HiggsyStatus`]; results come back
//!   through `out` pointers that are written only on `Ok`;
//! - polynomials are opaque [`HiggsyPoly`] handles, freed with
//!   [`higgsy_poly_free`];
//! - all returned strings are NUL-terminated, heap-allocated, and freed
//!   with [`higgsy_string_free`]; coefficients come as decimal strings
//!   because they overflow 64-bit integers quickly;
//! - on failure, [`higgsy_last_error`] returns a copy of the message for
//!   the current thread;
//! - panics never cross the boundary; they are caught and reported as
//!   `HIGGSY_STATUS_INTERNAL_ERROR`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, UnwindSafe};

use higgsy::cli::{render_poly, Format};
use higgsy::curve::{hy_sym_cxp, CurveContext};
use higgsy::error::Error;
use higgsy::exactalg::LaurentPoly;
use higgsy::genus::{euler_pgl, noncompact_ygenus, pgl_hy, pm_gl_hy, Method, PglInput};

/// Status codes; the nonzero values match the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HiggsyStatus {
    HiggsyStatusOk = 0,
    /// Invalid call: null pointer, out-of-range index, unknown enum value.
    HiggsyStatusUsageError = 1,
    /// A mathematical precondition was violated.
    HiggsyStatusDomainError = 2,
    /// An internal invariant was violated.
    HiggsyStatusInternalError = 3,
}

use HiggsyStatus::*;

/// Evaluation route for the PGL y-genus.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HiggsyMethod {
    HiggsyMethodClosed = 0,
    HiggsyMethodDirect = 1,
    HiggsyMethodRootSum = 2,
}

/// Output format for [`higgsy_poly_render`].
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HiggsyFormat {
    HiggsyFormatHuman = 0,
    HiggsyFormatJson = 1,
    HiggsyFormatCsv = 2,
}

/// Opaque handle to an integer-coefficient Laurent polynomial in `y`.
pub struct HiggsyPoly {
    inner: LaurentPoly,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_last_error(msg: &str) {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = msg.to_string());
}

fn status_of(e: &Error) -> HiggsyStatus {
    match e {
        Error::Domain(_) => HiggsyStatusDomainError,
        Error::Internal(_) => HiggsyStatusInternalError,
    }
}

fn usage(msg: &str) -> HiggsyStatus {
    set_last_error(msg);
    HiggsyStatusUsageError
}

/// Run a fallible body, catching panics and recording error messages.
fn guarded<F>(body: F) -> HiggsyStatus
where
    F: FnOnce() -> Result<(), (HiggsyStatus, String)> + UnwindSafe,
{
    match catch_unwind(body) {
        Ok(Ok(())) => HiggsyStatusOk,
        Ok(Err((status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside the library");
            HiggsyStatusInternalError
        }
    }
}

fn lib_err(e: Error) -> (HiggsyStatus, String) {
    let status = status_of(&e);
    (status, e.to_string())
}

fn to_c_string(s: String) -> *mut c_char {
    // Library strings never contain NUL bytes.
    CString::new(s).expect("no interior NUL").into_raw()
}

fn write_poly(out: *mut *mut HiggsyPoly, poly: LaurentPoly) {
    let handle = Box::new(HiggsyPoly { inner: poly });
    // SAFETY: the caller guaranteed `out` is a valid, writable pointer.
    unsafe { *out = Box::into_raw(handle) };
}

/// A copy of the last error message on this thread; free it with
/// `higgsy_string_free`. Empty string when no error has occurred.
#[no_mangle]
pub extern "C" fn higgsy_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| to_c_string(slot.borrow().clone()))
}

/// Compactly supported y-genus of the semistable PGL_n-Higgs moduli space
/// of rank `n`, degree `d`, genus `g`, by the chosen route. The closed
/// route requires `gcd(n, d) = 1`.
#[no_mangle]
pub extern "C" fn higgsy_pgl_hy(
    n: i64,
    d: i64,
    g: i64,
    method: HiggsyMethod,
    out: *mut *mut HiggsyPoly,
) -> HiggsyStatus {
    if out.is_null() {
        return usage("out pointer is null");
    }
    guarded(move || {
        let method = match method {
            HiggsyMethod::HiggsyMethodClosed => Method::Closed,
            HiggsyMethod::HiggsyMethodDirect => Method::Direct,
            HiggsyMethod::HiggsyMethodRootSum => Method::RootSum,
        };
        let input = PglInput::new(n, d, g).map_err(lib_err)?;
        let poly = pgl_hy(&input, method).map_err(lib_err)?;
        write_poly(out, poly);
        Ok(())
    })
}

/// `y^g` times the closed-route PGL y-genus: the genus of the
/// Picard-quotiented GL-side space. Requires `gcd(n, d) = 1`.
#[no_mangle]
pub extern "C" fn higgsy_pm_gl_hy(
    n: i64,
    d: i64,
    g: i64,
    out: *mut *mut HiggsyPoly,
) -> HiggsyStatus {
    if out.is_null() {
        return usage("out pointer is null");
    }
    guarded(move || {
        let input = PglInput::new(n, d, g).map_err(lib_err)?;
        let poly = pm_gl_hy(&input).map_err(lib_err)?;
        write_poly(out, poly);
        Ok(())
    })
}

/// `H_y(Sym^k(C x P^{m-1}))` for a genus-`g` curve; zero for
/// `k > 2m(g-1)`.
#[no_mangle]
pub extern "C" fn higgsy_hy_sym_cxp(
    g: i64,
    m: u32,
    k: u32,
    out: *mut *mut HiggsyPoly,
) -> HiggsyStatus {
    if out.is_null() {
        return usage("out pointer is null");
    }
    guarded(move || {
        let ctx = CurveContext::new(g).map_err(lib_err)?;
        let poly = hy_sym_cxp(&ctx, m, k).map_err(lib_err)?;
        write_poly(out, poly);
        Ok(())
    })
}

/// Convert a compactly supported y-genus of a `2N`-dimensional space
/// (`N = half_dim`) into the y-genus without supports.
#[no_mangle]
pub extern "C" fn higgsy_noncompact_ygenus(
    p: *const HiggsyPoly,
    half_dim: i64,
    out: *mut *mut HiggsyPoly,
) -> HiggsyStatus {
    if p.is_null() || out.is_null() {
        return usage("polynomial or out pointer is null");
    }
    // SAFETY: the caller guaranteed `p` is a live handle.
    let poly = unsafe { &(*p).inner };
    let converted = noncompact_ygenus(poly, half_dim);
    write_poly(out, converted);
    HiggsyStatusOk
}

/// Euler characteristic of the PGL_n-Higgs moduli space as a decimal
/// string (`mu(n) * n^{2g-3}`).
#[no_mangle]
pub extern "C" fn higgsy_euler(n: i64, g: i64, out: *mut *mut c_char) -> HiggsyStatus {
    if out.is_null() {
        return usage("out pointer is null");
    }
    guarded(move || {
        let value = euler_pgl(n, g).map_err(lib_err)?;
        // SAFETY: the caller guaranteed `out` is writable.
        unsafe { *out = to_c_string(value.to_string()) };
        Ok(())
    })
}

/// Number of nonzero terms.
#[no_mangle]
pub extern "C" fn higgsy_poly_term_count(p: *const HiggsyPoly) -> usize {
    if p.is_null() {
        return 0;
    }
    // SAFETY: the caller guaranteed `p` is a live handle.
    unsafe { &(*p).inner }.term_count()
}

/// Exponent of the `index`-th term (ascending order).
#[no_mangle]
pub extern "C" fn higgsy_poly_term_exp(
    p: *const HiggsyPoly,
    index: usize,
    out: *mut i64,
) -> HiggsyStatus {
    if p.is_null() || out.is_null() {
        return usage("polynomial or out pointer is null");
    }
    // SAFETY: the caller guaranteed `p` is a live handle.
    let poly = unsafe { &(*p).inner };
    match poly.terms().nth(index) {
        Some((e, _)) => {
            // SAFETY: `out` is writable per the contract.
            unsafe { *out = e };
            HiggsyStatusOk
        }
        None => usage("term index out of range"),
    }
}

/// Coefficient of the `index`-th term (ascending order) as a decimal
/// string.
#[no_mangle]
pub extern "C" fn higgsy_poly_term_coeff(
    p: *const HiggsyPoly,
    index: usize,
    out: *mut *mut c_char,
) -> HiggsyStatus {
    if p.is_null() || out.is_null() {
        return usage("polynomial or out pointer is null");
    }
    // SAFETY: the caller guaranteed `p` is a live handle.
    let poly = unsafe { &(*p).inner };
    match poly.terms().nth(index) {
        Some((_, c)) => {
            // SAFETY: `out` is writable per the contract.
            unsafe { *out = to_c_string(c.to_string()) };
            HiggsyStatusOk
        }
        None => usage("term index out of range"),
    }
}

/// Serialize a polynomial in the chosen format (same formats as the CLI).
#[no_mangle]
pub extern "C" fn higgsy_poly_render(
    p: *const HiggsyPoly,
    format: HiggsyFormat,
    out: *mut *mut c_char,
) -> HiggsyStatus {
    if p.is_null() || out.is_null() {
        return usage("polynomial or out pointer is null");
    }
    let format = match format {
        HiggsyFormat::HiggsyFormatHuman => Format::Human,
        HiggsyFormat::HiggsyFormatJson => Format::Json,
        HiggsyFormat::HiggsyFormatCsv => Format::Csv,
    };
    // SAFETY: the caller guaranteed `p` is a live handle.
    let poly = unsafe { &(*p).inner };
    let rendered = render_poly(poly, format);
    // SAFETY: `out` is writable per the contract.
    unsafe { *out = to_c_string(rendered) };
    HiggsyStatusOk
}

/// The value at `y = 1` (sum of coefficients) as a decimal string.
#[no_mangle]
pub extern "C" fn higgsy_poly_eval_one(
    p: *const HiggsyPoly,
    out: *mut *mut c_char,
) -> HiggsyStatus {
    if p.is_null() || out.is_null() {
        return usage("polynomial or out pointer is null");
    }
    // SAFETY: the caller guaranteed `p` is a live handle.
    let poly = unsafe { &(*p).inner };
    // SAFETY: `out` is writable per the contract.
    unsafe { *out = to_c_string(poly.eval_one().to_string()) };
    HiggsyStatusOk
}

/// Free a polynomial handle. Null is a no-op.
#[no_mangle]
pub extern "C" fn higgsy_poly_free(p: *mut HiggsyPoly) {
    if p.is_null() {
        return;
    }
    // SAFETY: the caller passes a handle previously returned by this
    // library and not yet freed.
    drop(unsafe { Box::from_raw(p) });
}

/// Free a string returned by this library. Null is a no-op.
#[no_mangle]
pub extern "C" fn higgsy_string_free(s: *mut c_char) {
    if s.is_null() {
        return;
    }
    // SAFETY: the caller passes a string previously returned by this
    // library and not yet freed.
    drop(unsafe { CString::from_raw(s) });
}
