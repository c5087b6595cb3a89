//! C ABI over `abalg`.
//!
//! Elements cross the boundary as opaque `AbalgElement` handles owned by the
//! caller and released with [`abalg_element_free`]. Strings returned through
//! `char **` out-parameters are released with [`abalg_string_free`]. Every
//! function returns an [`AbalgStatus`]; on failure [`abalg_last_error`] holds a
//! message for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use abalg::division::{divide_linear, invert};
use abalg::json::{from_json, to_json, ElementJson, MatrixJson, PolyJson, Rat};
use abalg::module::SimplePoleModule;
use abalg::parser::parse_element;
use abalg::{AlgebraElement, AlgebraError, Coeff, Ordering};

/// Opaque handle to a truncated algebra element.
pub struct AbalgElement(AlgebraElement);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbalgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Json = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbalgOrdering {
    Left = 0,
    Right = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(AbalgStatus, String);

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        let status = if matches!(e, AlgebraError::Json(_)) { AbalgStatus::Json } else { AbalgStatus::Domain };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> AbalgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AbalgStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            AbalgStatus::Internal
        }
    }
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(AbalgStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|e| Failure(AbalgStatus::InvalidUtf8, e.to_string()))
}

unsafe fn element<'a>(x: *const AbalgElement) -> Result<&'a AlgebraElement, Failure> {
    x.as_ref().map(|h| &h.0).ok_or_else(|| Failure(AbalgStatus::NullPointer, "null element".into()))
}

unsafe fn put_element(out: *mut *mut AbalgElement, x: AlgebraElement) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(AbalgStatus::NullPointer, "null out-parameter".into()));
    }
    *out = Box::into_raw(Box::new(AbalgElement(x)));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(AbalgStatus::NullPointer, "null out-parameter".into()));
    }
    *out = CString::new(s).map_err(|e| Failure(AbalgStatus::Internal, e.to_string()))?.into_raw();
    Ok(())
}

/// `re` is required; a null `im` means zero.
unsafe fn scalar(re: *const c_char, im: *const c_char) -> Result<Coeff, Failure> {
    let re = Rat::Text(c_str(re)?.trim().to_string()).parse()?;
    let im = if im.is_null() { Rat::Int(0).parse()? } else { Rat::Text(c_str(im)?.trim().to_string()).parse()? };
    Ok(Coeff::new(re, im))
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn abalg_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `x` must be null or a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abalg_element_free(x: *mut AbalgElement) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abalg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `text` in the algebra truncated at total degree `order`; the result
/// is in left normal form.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abalg_parse(text: *const c_char, order: u32, out: *mut *mut AbalgElement) -> AbalgStatus {
    guard(|| {
        let x = parse_element(c_str(text)?, order).map_err(|e| Failure(AbalgStatus::Parse, e.to_string()))?;
        put_element(out, x)
    })
}

/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abalg_from_json(json: *const c_char, out: *mut *mut AbalgElement) -> AbalgStatus {
    guard(|| {
        let x = from_json::<ElementJson>(c_str(json)?)?.to_element()?;
        put_element(out, x)
    })
}

/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abalg_to_json(x: *const AbalgElement, out: *mut *mut c_char) -> AbalgStatus {
    guard(|| put_string(out, to_json(&ElementJson::from_element(element(x)?))))
}

/// Pretty form in the element's current ordering.
///
/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abalg_to_string(x: *const AbalgElement, out: *mut *mut c_char) -> AbalgStatus {
    guard(|| put_string(out, element(x)?.to_string()))
}

/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abalg_to_ordering(x: *const AbalgElement, ordering: AbalgOrdering, out: *mut *mut AbalgElement) -> AbalgStatus {
    guard(|| {
        let target = match ordering {
            AbalgOrdering::Left => Ordering::Left,
            AbalgOrdering::Right => Ordering::Right,
        };
        put_element(out, element(x)?.to_ordering(target))
    })
}

/// # Safety
/// `x`, `y` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abalg_add(x: *const AbalgElement, y: *const AbalgElement, out: *mut *mut AbalgElement) -> AbalgStatus {
    guard(|| put_element(out, element(x)?.to_left().try_add(&element(y)?.to_left())?))
}

/// # Safety
/// `x`, `y` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abalg_sub(x: *const AbalgElement, y: *const AbalgElement, out: *mut *mut AbalgElement) -> AbalgStatus {
    guard(|| put_element(out, element(x)?.to_left().try_sub(&element(y)?.to_left())?))
}

/// # Safety
/// `x`, `y` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abalg_mul(x: *const AbalgElement, y: *const AbalgElement, out: *mut *mut AbalgElement) -> AbalgStatus {
    guard(|| put_element(out, element(x)?.try_mul(element(y)?)?))
}

/// Writes 1 to `out` when `x` and `y` denote the same element, else 0.
///
/// # Safety
/// `x`, `y` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abalg_equal(x: *const AbalgElement, y: *const AbalgElement, out: *mut i32) -> AbalgStatus {
    guard(|| {
        let same = element(x)?.same_value(element(y)?)?;
        let out = out.as_mut().ok_or_else(|| Failure(AbalgStatus::NullPointer, "null out-parameter".into()))?;
        *out = i32::from(same);
        Ok(())
    })
}

/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abalg_invert(x: *const AbalgElement, out: *mut *mut AbalgElement) -> AbalgStatus {
    guard(|| put_element(out, invert(element(x)?)?))
}

/// Applies `a -> a + c b`, `b -> b` with `c = re + i im`. Rationals are given
/// as text such as `"-3/4"`; a null `im` means zero.
///
/// # Safety
/// `x` must be a live handle, `re` a nul-terminated string, `im` null or a
/// nul-terminated string, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abalg_tau(x: *const AbalgElement, re: *const c_char, im: *const c_char, out: *mut *mut AbalgElement) -> AbalgStatus {
    guard(|| {
        let c = scalar(re, im)?;
        put_element(out, element(x)?.tau(&c).to_left())
    })
}

/// The anti-automorphism `a -> a`, `b -> -b`.
///
/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abalg_anti_f(x: *const AbalgElement, out: *mut *mut AbalgElement) -> AbalgStatus {
    guard(|| put_element(out, element(x)?.anti_f(Ordering::Left)))
}

/// `x = q (a - λ b) + r` with `r` a series in `b`.
///
/// # Safety
/// `x` must be a live handle, `re`/`im` as in [`abalg_tau`], and `q`, `r` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn abalg_divide_linear(
    x: *const AbalgElement,
    re: *const c_char,
    im: *const c_char,
    q: *mut *mut AbalgElement,
    r: *mut *mut AbalgElement,
) -> AbalgStatus {
    guard(|| {
        if q.is_null() || r.is_null() {
            return Err(Failure(AbalgStatus::NullPointer, "null out-parameter".into()));
        }
        let lambda = scalar(re, im)?;
        let (quot, rem) = divide_linear(element(x)?, &lambda);
        put_element(q, quot)?;
        put_element(r, rem.into_element())
    })
}

/// Bernstein polynomial of the simple-pole module with matrix `Θ`, given and
/// returned as JSON (`{"k", "entries"}` in, `{"degree", "coeffs"}` out).
///
/// # Safety
/// `matrix_json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abalg_bernstein(matrix_json: *const c_char, out: *mut *mut c_char) -> AbalgStatus {
    guard(|| {
        let theta = from_json::<MatrixJson>(c_str(matrix_json)?)?.to_matrix()?;
        let beta = SimplePoleModule::new(theta, 1).bernstein();
        put_string(out, to_json(&PolyJson::from_poly(&beta)))
    })
}
