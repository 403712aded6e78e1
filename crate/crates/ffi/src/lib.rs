//! C ABI over the wreathlab library.
//!
//! Every fallible call returns a [`WlStatus`]. On failure a description is
//! available from [`wl_last_error`] until the next failing call on the same
//! thread. Handles are opaque and must be released with their `_free`
//! function; strings returned by the library are released with
//! [`wl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use wreathlab::morse::{normalize, HElement, HWord, MorseGroup, Variant};
use wreathlab::verify::{verify_all, Scale};
use wreathlab::wreath::{Signature, TreeElement};
use wreathlab::Error;

/// Result codes shared by every function in this interface.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Mismatch = 5,
    LimitExceeded = 6,
    Hypothesis = 7,
    Internal = 8,
}

/// An element of an iterated wreath product together with its signature.
pub struct WlTree {
    elem: TreeElement,
}

/// An element of the semidirect product Z x| Z^n with a fixed rank and sign variant.
pub struct WlH {
    group: MorseGroup,
    elem: HElement,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> WlStatus {
    match err {
        Error::Parse { .. } => WlStatus::Parse,
        Error::SignatureMismatch { .. } | Error::RankMismatch(_) | Error::Shape(_) => {
            WlStatus::Mismatch
        }
        Error::LimitExceeded { .. } => WlStatus::LimitExceeded,
        Error::Hypothesis(_) | Error::NotCoprime { .. } | Error::NonTransitive { .. } => {
            WlStatus::Hypothesis
        }
        _ => WlStatus::InvalidArgument,
    }
}

struct Fail(WlStatus);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let s = status_of(&e);
        set_error(e.to_string());
        Fail(s)
    }
}

fn fail(status: WlStatus, msg: &str) -> Fail {
    set_error(msg.to_string());
    Fail(status)
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> WlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => WlStatus::Ok,
        Ok(Err(Fail(s))) => s,
        Err(_) => {
            set_error("internal panic".into());
            WlStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(fail(WlStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(WlStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| fail(WlStatus::NullPointer, "null handle"))
}

unsafe fn emit<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(fail(WlStatus::NullPointer, "null output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(fail(WlStatus::NullPointer, "null output pointer"));
    }
    let c = CString::new(s).map_err(|_| fail(WlStatus::Internal, "interior nul"))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn check_out<T>(out: *mut T) -> Result<(), Fail> {
    if out.is_null() {
        Err(fail(WlStatus::NullPointer, "null output pointer"))
    } else {
        Ok(())
    }
}

fn variant(signed: bool) -> Variant {
    if signed {
        Variant::Signed
    } else {
        Variant::Unsigned
    }
}

/// Message for the most recent failure on this thread, or null if none.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn wl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn wl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a tableau literal such as `[1; 0,2]` under a signature such as `2x3`.
///
/// # Safety
/// String arguments must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_tree_parse(
    sig: *const c_char,
    literal: *const c_char,
    out: *mut *mut WlTree,
) -> WlStatus {
    guard(|| {
        let sig = Arc::new(Signature::parse(text(sig)?)?);
        let elem = TreeElement::parse(&sig, text(literal)?)?;
        emit(out, WlTree { elem })
    })
}

/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_tree_mul(
    a: *const WlTree,
    b: *const WlTree,
    out: *mut *mut WlTree,
) -> WlStatus {
    guard(|| {
        let elem = deref(a)?.elem.mul(&deref(b)?.elem)?;
        emit(out, WlTree { elem })
    })
}

/// # Safety
/// `a` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_tree_inv(a: *const WlTree, out: *mut *mut WlTree) -> WlStatus {
    guard(|| {
        let elem = deref(a)?.elem.inv();
        emit(out, WlTree { elem })
    })
}

/// # Safety
/// `a` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_tree_order(a: *const WlTree, out: *mut u64) -> WlStatus {
    guard(|| {
        let o = deref(a)?.elem.order();
        check_out(out)?;
        *out = o;
        Ok(())
    })
}

/// Writes the literal form of `a`; release it with [`wl_string_free`].
///
/// # Safety
/// `a` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_tree_format(a: *const WlTree, out: *mut *mut c_char) -> WlStatus {
    guard(|| emit_string(out, deref(a)?.elem.to_string()))
}

/// # Safety
/// `a` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wl_tree_free(a: *mut WlTree) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Parses a pair literal such as `(1; 0,-2)` of rank `n`.
///
/// # Safety
/// `literal` must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_h_parse(
    literal: *const c_char,
    n: usize,
    signed_variant: bool,
    out: *mut *mut WlH,
) -> WlStatus {
    guard(|| {
        let group = MorseGroup::new(n, variant(signed_variant))?;
        let elem = HElement::parse(text(literal)?, n)?;
        emit(out, WlH { group, elem })
    })
}

/// Evaluates a word such as `r t1^2 r^-1` to its normal form.
///
/// # Safety
/// `word` must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_h_normalize(
    word: *const c_char,
    n: usize,
    signed_variant: bool,
    out: *mut *mut WlH,
) -> WlStatus {
    guard(|| {
        let v = variant(signed_variant);
        let group = MorseGroup::new(n, v)?;
        let w = HWord::parse(text(word)?, n)?;
        let elem = normalize(&w, n, v);
        emit(out, WlH { group, elem })
    })
}

/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_h_mul(a: *const WlH, b: *const WlH, out: *mut *mut WlH) -> WlStatus {
    guard(|| {
        let (a, b) = (deref(a)?, deref(b)?);
        if a.group.variant() != b.group.variant() {
            return Err(fail(
                WlStatus::Mismatch,
                "operands use different sign variants",
            ));
        }
        let elem = a.group.h_mul(&a.elem, &b.elem)?;
        emit(
            out,
            WlH {
                group: a.group,
                elem,
            },
        )
    })
}

/// # Safety
/// `a` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_h_is_central(a: *const WlH, out: *mut bool) -> WlStatus {
    guard(|| {
        let a = deref(a)?;
        let c = a.group.is_central(&a.elem)?;
        check_out(out)?;
        *out = c;
        Ok(())
    })
}

/// # Safety
/// `a` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_h_format(a: *const WlH, out: *mut *mut c_char) -> WlStatus {
    guard(|| emit_string(out, deref(a)?.elem.to_string()))
}

/// # Safety
/// `a` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wl_h_free(a: *mut WlH) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Runs the self-check battery and writes its report as a JSON array.
/// `passed` receives whether no check failed.
///
/// # Safety
/// Output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_verify_all_json(
    full: bool,
    out: *mut *mut c_char,
    passed: *mut bool,
) -> WlStatus {
    guard(|| {
        check_out(passed)?;
        check_out(out)?;
        let report = verify_all(if full { Scale::Full } else { Scale::Small });
        let json =
            serde_json::to_string(&report).map_err(|e| fail(WlStatus::Internal, &e.to_string()))?;
        *passed = report.all_passed();
        emit_string(out, json)
    })
}
