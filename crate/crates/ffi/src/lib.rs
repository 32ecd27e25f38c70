//! C interface to `qtmac`.
//!
//! Every function returns a [`QtmacStatus`]. On failure the message is kept
//! per thread and read with [`qtmac_last_error_message`]. Expansions are
//! opaque handles released with [`qtmac_expansion_free`]; strings returned by
//! the library are released with [`qtmac_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qtmac::macdonald::{
    hall_littlewood, integral_form_j, mn_macdonald, modified_macdonald, HlVariant,
};
use qtmac::{Composition, Error, Partition, SchurExpansion};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtmacStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    NotCoprime = 5,
    BadRearrangement = 6,
    ComputationFailed = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtmacHlVariant {
    Root = 0,
    Weight = 1,
}

/// A Schur expansion with coefficients in `Z[q^±1, t^±1]`.
pub struct QtmacExpansion(SchurExpansion);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(QtmacStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidShape(_) => QtmacStatus::ParseError,
            Error::NotCoprime { .. } => QtmacStatus::NotCoprime,
            Error::BadRearrangement { .. } => QtmacStatus::BadRearrangement,
            Error::BoxOutsideDiagram { .. }
            | Error::NotASubsetOfV(..)
            | Error::TooFewVariables { .. } => QtmacStatus::InvalidArgument,
            _ => QtmacStatus::ComputationFailed,
        };
        Failure(code, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> QtmacStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            QtmacStatus::Ok
        }
        Ok(Err(Failure(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            QtmacStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(QtmacStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        Failure(
            QtmacStatus::InvalidUtf8,
            format!("{what} is not valid UTF-8"),
        )
    })
}

unsafe fn read_partition(p: *const c_char) -> Result<Partition, Failure> {
    Ok(read_str(p, "mu")?.parse()?)
}

/// A null `beta` selects the default column order.
unsafe fn read_beta(p: *const c_char) -> Result<Option<Composition>, Failure> {
    if p.is_null() {
        return Ok(None);
    }
    Ok(Some(read_str(p, "beta")?.parse()?))
}

unsafe fn write_expansion(out: *mut *mut QtmacExpansion, f: SchurExpansion) -> Result<(), Failure> {
    *out = Box::into_raw(Box::new(QtmacExpansion(f)));
    Ok(())
}

fn check_out<T>(out: *mut *mut T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(
            QtmacStatus::NullPointer,
            "output pointer is null".into(),
        ));
    }
    Ok(())
}

/// Computes `H~_mu`. `mu` and `beta` are comma separated parts such as `"2,1"`.
///
/// # Safety
/// `mu` must be a nul-terminated string, `beta` null or nul-terminated, and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qtmac_hmu(
    mu: *const c_char,
    beta: *const c_char,
    out: *mut *mut QtmacExpansion,
) -> QtmacStatus {
    guard(|| {
        check_out(out)?;
        let f = modified_macdonald(&read_partition(mu)?, read_beta(beta)?.as_ref())?;
        write_expansion(out, f)
    })
}

/// Computes `H~^{m,n}_mu` for coprime `m, n`.
///
/// # Safety
/// As for [`qtmac_hmu`].
#[no_mangle]
pub unsafe extern "C" fn qtmac_hmn(
    mu: *const c_char,
    m: u32,
    n: u32,
    beta: *const c_char,
    out: *mut *mut QtmacExpansion,
) -> QtmacStatus {
    guard(|| {
        check_out(out)?;
        let f = mn_macdonald(
            &read_partition(mu)?,
            m as usize,
            n as usize,
            read_beta(beta)?.as_ref(),
        )?;
        write_expansion(out, f)
    })
}

/// Computes the integral form `J_mu`.
///
/// # Safety
/// As for [`qtmac_hmu`].
#[no_mangle]
pub unsafe extern "C" fn qtmac_jmu(
    mu: *const c_char,
    beta: *const c_char,
    out: *mut *mut QtmacExpansion,
) -> QtmacStatus {
    guard(|| {
        check_out(out)?;
        let f = integral_form_j(&read_partition(mu)?, read_beta(beta)?.as_ref())?;
        write_expansion(out, f)
    })
}

/// Computes the Hall-Littlewood polynomial `H_mu(X; t)`.
///
/// # Safety
/// `mu` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qtmac_hl(
    mu: *const c_char,
    variant: QtmacHlVariant,
    out: *mut *mut QtmacExpansion,
) -> QtmacStatus {
    guard(|| {
        check_out(out)?;
        let v = match variant {
            QtmacHlVariant::Root => HlVariant::Root,
            QtmacHlVariant::Weight => HlVariant::Weight,
        };
        write_expansion(out, hall_littlewood(&read_partition(mu)?, v)?)
    })
}

/// Parses an expansion from its JSON form.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qtmac_expansion_from_json(
    json: *const c_char,
    out: *mut *mut QtmacExpansion,
) -> QtmacStatus {
    guard(|| {
        check_out(out)?;
        write_expansion(out, SchurExpansion::from_json(read_str(json, "json")?)?)
    })
}

unsafe fn render(
    exp: *const QtmacExpansion,
    out: *mut *mut c_char,
    f: impl FnOnce(&SchurExpansion) -> String,
) -> QtmacStatus {
    guard(|| {
        check_out(out)?;
        let e = exp
            .as_ref()
            .ok_or_else(|| Failure(QtmacStatus::NullPointer, "expansion is null".into()))?;
        let s = CString::new(f(&e.0))
            .map_err(|_| Failure(QtmacStatus::ComputationFailed, "nul in output".into()))?;
        *out = s.into_raw();
        Ok(())
    })
}

/// Writes the JSON form of `exp` to `*out`. Release it with [`qtmac_string_free`].
///
/// # Safety
/// `exp` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qtmac_expansion_to_json(
    exp: *const QtmacExpansion,
    out: *mut *mut c_char,
) -> QtmacStatus {
    render(exp, out, SchurExpansion::to_json)
}

/// Writes the text form of `exp`, e.g. `q*s[2] + s[1,1]`.
///
/// # Safety
/// As for [`qtmac_expansion_to_json`].
#[no_mangle]
pub unsafe extern "C" fn qtmac_expansion_to_string(
    exp: *const QtmacExpansion,
    out: *mut *mut c_char,
) -> QtmacStatus {
    render(exp, out, |f| f.to_string())
}

/// Number of Schur terms, or 0 for a null handle.
///
/// # Safety
/// `exp` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qtmac_expansion_len(exp: *const QtmacExpansion) -> usize {
    exp.as_ref().map_or(0, |e| e.0.len())
}

/// Whether two expansions are equal. Null handles compare unequal.
///
/// # Safety
/// Both arguments must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn qtmac_expansion_equal(
    a: *const QtmacExpansion,
    b: *const QtmacExpansion,
) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// Applies the involution omega, returning a new handle.
///
/// # Safety
/// `exp` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qtmac_expansion_omega(
    exp: *const QtmacExpansion,
    out: *mut *mut QtmacExpansion,
) -> QtmacStatus {
    guard(|| {
        check_out(out)?;
        let e = exp
            .as_ref()
            .ok_or_else(|| Failure(QtmacStatus::NullPointer, "expansion is null".into()))?;
        write_expansion(out, e.0.omega())
    })
}

/// # Safety
/// `exp` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qtmac_expansion_free(exp: *mut QtmacExpansion) {
    if !exp.is_null() {
        drop(Box::from_raw(exp));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qtmac_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn qtmac_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
