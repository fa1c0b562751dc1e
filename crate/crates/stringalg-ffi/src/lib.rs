//! C ABI for the string-algebra toolkit.
//!
//! Conventions:
//!
//! * A presentation is held behind the opaque handle [`SaPresentation`];
//!   create one with [`sa_presentation_parse`] and release it with
//!   [`sa_presentation_free`].
//! * Every fallible call returns an [`SaStatus`] code and writes its result
//!   through an out-pointer only on `SA_OK`. On failure, a human-readable
//!   diagnostic for the calling thread is available via
//!   [`sa_last_error_message`].
//! * Strings crossing the boundary are NUL-terminated UTF-8. Strings
//!   returned by this library are owned by the caller and must be released
//!   with [`sa_string_free`].
//!
//! The matching C header is generated into `include/stringalg.h` at build
//! time.

use std::cell::RefCell;
use std::ffi::{CStr, CString, c_char, c_int};
use std::ptr;

use stringalg::error::Error;
use stringalg::exceptional::{DOrientation, exceptional_report};
use stringalg::hammock::{build_hammock_automaton, is_domestic};
use stringalg::presentation::StringAlgebra;
use stringalg::regular_orders::{format_term, normalize, parse_term};
use stringalg::strings::{StringWord, format_word};
use stringalg::word_problems::{automaton_to_word_problem, solve_all};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SaStatus {
    /// Success; out-parameters are valid.
    SaOk = 0,
    /// A document or expression failed to parse.
    SaErrSyntax = 1,
    /// The presentation violates the string-algebra conditions.
    SaErrInvalidPresentation = 2,
    /// A named vertex, arrow, or unknown does not exist.
    SaErrUnknownName = 3,
    /// The requested operation is undefined for the given operands.
    SaErrDomain = 4,
    /// An argument pointer was NULL or text was not valid UTF-8.
    SaErrArgument = 5,
    /// Internal invariant violation; indicates a bug, not a user error.
    SaErrInternal = 6,
}

/// Opaque handle to a validated presentation with fixed sign maps.
pub struct SaPresentation {
    alg: StringAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let owned = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = owned);
}

fn status_of(err: &Error) -> SaStatus {
    match err {
        Error::Syntax { .. } | Error::BadIdentifier { .. } | Error::Duplicate { .. } => {
            SaStatus::SaErrSyntax
        }
        Error::InvalidPresentation { .. }
        | Error::SignCondition { .. }
        | Error::UnsatisfiableSigns { .. }
        | Error::IncompleteSignMaps { .. } => SaStatus::SaErrInvalidPresentation,
        Error::UnknownReference { .. } => SaStatus::SaErrUnknownName,
        Error::NotAString { .. } | Error::NotComparable { .. } | Error::InvalidBand { .. } => {
            SaStatus::SaErrDomain
        }
        Error::Invariant { .. } => SaStatus::SaErrInternal,
        Error::Io(_) => SaStatus::SaErrArgument,
    }
}

fn fail(err: &Error) -> SaStatus {
    set_error(&err.to_string());
    status_of(err)
}

fn fail_argument(message: &str) -> SaStatus {
    set_error(message);
    SaStatus::SaErrArgument
}

/// Reads a required UTF-8 argument string.
///
/// # Safety
/// `text` must be NULL or point to a NUL-terminated buffer.
unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, SaStatus> {
    if text.is_null() {
        return Err(fail_argument("argument string is NULL"));
    }
    unsafe { CStr::from_ptr(text) }
        .to_str()
        .map_err(|_| fail_argument("argument string is not valid UTF-8"))
}

fn write_string(out: *mut *mut c_char, text: String) -> SaStatus {
    let owned = match CString::new(text) {
        Ok(s) => s,
        Err(_) => return fail_argument("result contained an interior NUL byte"),
    };
    unsafe { *out = owned.into_raw() };
    SaStatus::SaOk
}

/// Diagnostic for the most recent failure on the calling thread.
///
/// The pointer stays valid until the next failing call on the same thread;
/// do not free it.
#[unsafe(no_mangle)]
pub extern "C" fn sa_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `text` must be NULL or a pointer previously returned through an
/// out-parameter of this library, not yet freed.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sa_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}

/// Parses and validates a presentation document (JSON, UTF-8), inferring
/// sign maps unless the document provides them. On `SA_OK`, `*out` owns a
/// new handle; release it with [`sa_presentation_free`].
///
/// # Safety
/// `json` must point to a NUL-terminated buffer and `out` must be a valid
/// pointer.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sa_presentation_parse(
    json: *const c_char,
    out: *mut *mut SaPresentation,
) -> SaStatus {
    if out.is_null() {
        return fail_argument("out pointer is NULL");
    }
    let text = match unsafe { read_str(json) } {
        Ok(t) => t,
        Err(status) => return status,
    };
    match StringAlgebra::from_json(text) {
        Ok(alg) => {
            let handle = Box::new(SaPresentation { alg });
            unsafe { *out = Box::into_raw(handle) };
            SaStatus::SaOk
        }
        Err(e) => {
            unsafe { *out = ptr::null_mut() };
            fail(&e)
        }
    }
}

/// Releases a presentation handle. NULL is ignored.
///
/// # Safety
/// `p` must be NULL or a handle returned by [`sa_presentation_parse`], not
/// yet freed.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sa_presentation_free(p: *mut SaPresentation) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// # Safety
/// `p` must be a live handle from [`sa_presentation_parse`].
unsafe fn read_handle<'a>(p: *const SaPresentation) -> Result<&'a StringAlgebra, SaStatus> {
    if p.is_null() {
        return Err(fail_argument("presentation handle is NULL"));
    }
    Ok(unsafe { &(*p).alg })
}

fn anchor_at(alg: &StringAlgebra, vertex: &str, sign: c_int) -> Result<StringWord, SaStatus> {
    let v = alg.presentation().vertex_id(vertex).ok_or_else(|| {
        fail(&Error::UnknownReference {
            kind: "vertex",
            name: vertex.to_string(),
            context: "anchor selection".into(),
        })
    })?;
    let i = match sign {
        1 => 1i8,
        -1 => -1,
        _ => return Err(fail_argument("sign must be +1 or -1")),
    };
    Ok(StringWord::trivial(v, i))
}

/// Writes the sign maps of the presentation as a JSON document.
///
/// # Safety
/// `p` must be a live handle; `out` must be a valid pointer. The result
/// must be released with [`sa_string_free`].
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sa_sign_maps_json(
    p: *const SaPresentation,
    out: *mut *mut c_char,
) -> SaStatus {
    if out.is_null() {
        return fail_argument("out pointer is NULL");
    }
    let alg = match unsafe { read_handle(p) } {
        Ok(a) => a,
        Err(status) => return status,
    };
    write_string(out, alg.signs().to_json(alg.presentation()).to_string())
}

/// Builds the hammock automaton anchored at the trivial string of `vertex`
/// with the given sign (+1 or -1) and writes it as a JSON document.
///
/// # Safety
/// `p` must be a live handle; `vertex` must be NUL-terminated; `out` must
/// be valid. The result must be released with [`sa_string_free`].
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sa_hammock_json(
    p: *const SaPresentation,
    vertex: *const c_char,
    sign: c_int,
    out: *mut *mut c_char,
) -> SaStatus {
    if out.is_null() {
        return fail_argument("out pointer is NULL");
    }
    let alg = match unsafe { read_handle(p) } {
        Ok(a) => a,
        Err(status) => return status,
    };
    let name = match unsafe { read_str(vertex) } {
        Ok(n) => n,
        Err(status) => return status,
    };
    let anchor = match anchor_at(alg, name, sign) {
        Ok(a) => a,
        Err(status) => return status,
    };
    match build_hammock_automaton(alg, &anchor) {
        Ok(h) => write_string(out, h.dfa.to_json().to_string()),
        Err(e) => fail(&e),
    }
}

/// Solves the hammock word problem at `(vertex, sign)` and writes one
/// `name = term` line per unknown, the start component marked `[start]`.
///
/// # Safety
/// Same contract as [`sa_hammock_json`].
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sa_order_type_text(
    p: *const SaPresentation,
    vertex: *const c_char,
    sign: c_int,
    out: *mut *mut c_char,
) -> SaStatus {
    if out.is_null() {
        return fail_argument("out pointer is NULL");
    }
    let alg = match unsafe { read_handle(p) } {
        Ok(a) => a,
        Err(status) => return status,
    };
    let name = match unsafe { read_str(vertex) } {
        Ok(n) => n,
        Err(status) => return status,
    };
    let anchor = match anchor_at(alg, name, sign) {
        Ok(a) => a,
        Err(status) => return status,
    };
    let result = build_hammock_automaton(alg, &anchor)
        .and_then(|h| {
            let (problem, start) = automaton_to_word_problem(&h.dfa)?;
            Ok((solve_all(&problem)?, start))
        })
        .map(|(solved, start)| {
            let mut text = format!("# anchor {} start {start}\n", format_word(alg, &anchor));
            for (unknown, term) in &solved {
                let marker = if *unknown == start { "  [start]" } else { "" };
                text.push_str(&format!("{unknown} = {}{marker}\n", format_term(term)));
            }
            text
        });
    match result {
        Ok(text) => write_string(out, text),
        Err(e) => fail(&e),
    }
}

/// Writes 1 to `*out` when no hammock of the presentation contains a dense
/// region, 0 otherwise.
///
/// # Safety
/// `p` must be a live handle; `out` must be a valid pointer.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sa_is_domestic(p: *const SaPresentation, out: *mut c_int) -> SaStatus {
    if out.is_null() {
        return fail_argument("out pointer is NULL");
    }
    let alg = match unsafe { read_handle(p) } {
        Ok(a) => a,
        Err(status) => return status,
    };
    unsafe { *out = is_domestic(alg) as c_int };
    SaStatus::SaOk
}

/// Computes the exceptional-band report and writes it as a JSON document;
/// `*out_e` receives the error term `e`. Either out-pointer may be NULL to
/// skip that result.
///
/// # Safety
/// `p` must be a live handle; non-NULL out-pointers must be valid. A
/// written string must be released with [`sa_string_free`].
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sa_exceptional_report_json(
    p: *const SaPresentation,
    out_e: *mut usize,
    out_json: *mut *mut c_char,
) -> SaStatus {
    let alg = match unsafe { read_handle(p) } {
        Ok(a) => a,
        Err(status) => return status,
    };
    match exceptional_report(alg, DOrientation::TargetCoupled) {
        Ok(report) => {
            if !out_e.is_null() {
                unsafe { *out_e = report.e };
            }
            if !out_json.is_null() {
                return write_string(out_json, report.to_json(alg).to_string());
            }
            SaStatus::SaOk
        }
        Err(e) => fail(&e),
    }
}

/// Parses an order-term expression, normalizes it, and writes the
/// normalized rendering (e.g. `"w + sh(w* + w) + w*"`).
///
/// # Safety
/// `expr` must be NUL-terminated; `out` must be valid. The result must be
/// released with [`sa_string_free`].
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sa_term_normalize(expr: *const c_char, out: *mut *mut c_char) -> SaStatus {
    if out.is_null() {
        return fail_argument("out pointer is NULL");
    }
    let text = match unsafe { read_str(expr) } {
        Ok(t) => t,
        Err(status) => return status,
    };
    match parse_term(text) {
        Ok(term) => write_string(out, format_term(&normalize(&term))),
        Err(e) => fail(&e),
    }
}
