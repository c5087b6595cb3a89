use std::ffi::{c_char, CStr, CString};
use std::ptr;

use abalg_ffi::*;

fn parse(s: &str, order: u32) -> *mut AbalgElement {
    let s = CString::new(s).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { abalg_parse(s.as_ptr(), order, &mut out) }, AbalgStatus::Ok);
    out
}

fn render(x: *const AbalgElement) -> String {
    let mut s: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { abalg_to_string(x, &mut s) }, AbalgStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { abalg_string_free(s) };
    text
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(abalg_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn arithmetic_round_trip() {
    let a = parse("a", 4);
    let b = parse("b", 4);
    let mut ab = ptr::null_mut();
    let mut ba = ptr::null_mut();
    let mut diff = ptr::null_mut();
    unsafe {
        assert_eq!(abalg_mul(a, b, &mut ab), AbalgStatus::Ok);
        assert_eq!(abalg_mul(b, a, &mut ba), AbalgStatus::Ok);
        assert_eq!(abalg_sub(ab, ba, &mut diff), AbalgStatus::Ok);
    }
    assert_eq!(render(diff), "b^2");
    let mut right = ptr::null_mut();
    let x = parse("a^2*b", 4);
    unsafe { assert_eq!(abalg_to_ordering(x, AbalgOrdering::Right, &mut right), AbalgStatus::Ok) };
    assert_eq!(render(right), "b*a^2 + 2*b^2*a + 2*b^3");
    let mut eq = -1;
    unsafe { assert_eq!(abalg_equal(x, right, &mut eq), AbalgStatus::Ok) };
    assert_eq!(eq, 1);
    for h in [a, b, ab, ba, diff, x, right] {
        unsafe { abalg_element_free(h) };
    }
}

#[test]
fn inverse_and_division() {
    let x = parse("1 - a*b", 4);
    let mut y = ptr::null_mut();
    unsafe { assert_eq!(abalg_invert(x, &mut y), AbalgStatus::Ok) };
    assert_eq!(render(y), "1 + a*b + a^2*b^2 - a*b^3");

    let sq = parse("a^2", 6);
    let one = CString::new("1").unwrap();
    let (mut q, mut r) = (ptr::null_mut(), ptr::null_mut());
    unsafe { assert_eq!(abalg_divide_linear(sq, one.as_ptr(), ptr::null(), &mut q, &mut r), AbalgStatus::Ok) };
    assert_eq!(render(q), "a + b");
    assert_eq!(render(r), "2*b^2");

    let a = parse("a", 4);
    let mut bad = ptr::null_mut();
    unsafe { assert_eq!(abalg_invert(a, &mut bad), AbalgStatus::Domain) };
    assert!(bad.is_null());
    assert!(last_error().contains("not a unit"));
    for h in [x, y, sq, q, r, a] {
        unsafe { abalg_element_free(h) };
    }
}

#[test]
fn automorphisms() {
    let x = parse("a", 3);
    let half = CString::new("-1/2").unwrap();
    let mut t = ptr::null_mut();
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(abalg_tau(x, half.as_ptr(), ptr::null(), &mut t), AbalgStatus::Ok);
        assert_eq!(abalg_anti_f(t, &mut f), AbalgStatus::Ok);
    }
    assert_eq!(render(t), "a - 1/2*b");
    assert_eq!(render(f), "a + 1/2*b");
    let junk = CString::new("x/2").unwrap();
    let mut out = ptr::null_mut();
    unsafe { assert_eq!(abalg_tau(x, junk.as_ptr(), ptr::null(), &mut out), AbalgStatus::Domain) };
    for h in [x, t, f] {
        unsafe { abalg_element_free(h) };
    }
}

#[test]
fn json_interchange() {
    let x = parse("3/2*a*b - i*b^2", 5);
    let mut json: *mut c_char = ptr::null_mut();
    unsafe { assert_eq!(abalg_to_json(x, &mut json), AbalgStatus::Ok) };
    let mut back = ptr::null_mut();
    unsafe { assert_eq!(abalg_from_json(json, &mut back), AbalgStatus::Ok) };
    assert_eq!(render(back), render(x));

    let matrix = CString::new(r#"{"k":2,"entries":[[{"re":1},{"re":1}],[{"re":0},{"re":1}]]}"#).unwrap();
    let mut poly: *mut c_char = ptr::null_mut();
    unsafe { assert_eq!(abalg_bernstein(matrix.as_ptr(), &mut poly), AbalgStatus::Ok) };
    let text = unsafe { CStr::from_ptr(poly) }.to_str().unwrap().to_string();
    assert!(text.contains("\"degree\": 2"), "{text}");

    let broken = CString::new("{").unwrap();
    let mut none = ptr::null_mut();
    unsafe { assert_eq!(abalg_from_json(broken.as_ptr(), &mut none), AbalgStatus::Json) };
    unsafe {
        abalg_string_free(json);
        abalg_string_free(poly);
        abalg_element_free(x);
        abalg_element_free(back);
    }
}

#[test]
fn error_statuses() {
    let bad = CString::new("a**b").unwrap();
    let mut out = ptr::null_mut();
    unsafe { assert_eq!(abalg_parse(bad.as_ptr(), 4, &mut out), AbalgStatus::Parse) };
    assert!(last_error().contains("offset 2"));
    unsafe { assert_eq!(abalg_parse(ptr::null(), 4, &mut out), AbalgStatus::NullPointer) };
    let ok = CString::new("a").unwrap();
    unsafe { assert_eq!(abalg_parse(ok.as_ptr(), 4, ptr::null_mut()), AbalgStatus::NullPointer) };
    let (x, y) = (parse("a", 3), parse("b", 4));
    unsafe { assert_eq!(abalg_mul(x, y, &mut out), AbalgStatus::Domain) };
    unsafe {
        abalg_element_free(x);
        abalg_element_free(y);
        abalg_element_free(ptr::null_mut());
        abalg_string_free(ptr::null_mut());
    }
}
