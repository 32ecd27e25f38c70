use std::ffi::{CStr, CString};
use std::ptr;

use qtmac_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn json_of(e: *const QtmacExpansion) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(qtmac_expansion_to_json(e, &mut s), QtmacStatus::Ok);
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    qtmac_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = qtmac_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_owned()
}

#[test]
fn hmu_single_box() {
    unsafe {
        let mut e = ptr::null_mut();
        assert_eq!(
            qtmac_hmu(c("1").as_ptr(), ptr::null(), &mut e),
            QtmacStatus::Ok
        );
        assert_eq!(
            json_of(e),
            r#"{"basis":"schur","terms":[{"partition":[1],"coeff":"1"}]}"#
        );
        assert_eq!(qtmac_expansion_len(e), 1);
        assert!(qtmac_last_error_message().is_null());
        qtmac_expansion_free(e);
    }
}

#[test]
fn hmn_matches_json_round_trip_and_omega() {
    unsafe {
        let mut e = ptr::null_mut();
        assert_eq!(
            qtmac_hmn(c("2").as_ptr(), 1, 2, ptr::null(), &mut e),
            QtmacStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(qtmac_expansion_to_string(e, &mut s), QtmacStatus::Ok);
        assert_eq!(
            CStr::from_ptr(s).to_str().unwrap(),
            "q*s[2,2] + q^2*s[2,1,1] + q^3*s[1,1,1,1]"
        );
        qtmac_string_free(s);

        let mut back = ptr::null_mut();
        let j = c(&json_of(e));
        assert_eq!(
            qtmac_expansion_from_json(j.as_ptr(), &mut back),
            QtmacStatus::Ok
        );
        assert!(qtmac_expansion_equal(e, back));

        let (mut w, mut ww) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(qtmac_expansion_omega(e, &mut w), QtmacStatus::Ok);
        assert!(!qtmac_expansion_equal(e, w));
        assert_eq!(qtmac_expansion_omega(w, &mut ww), QtmacStatus::Ok);
        assert!(qtmac_expansion_equal(e, ww));
        for h in [e, back, w, ww] {
            qtmac_expansion_free(h);
        }
    }
}

#[test]
fn hl_variants_and_jmu() {
    unsafe {
        let (mut root, mut weight, mut j) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(
            qtmac_hl(c("2,1").as_ptr(), QtmacHlVariant::Root, &mut root),
            QtmacStatus::Ok
        );
        assert_eq!(
            qtmac_hl(c("2,1").as_ptr(), QtmacHlVariant::Weight, &mut weight),
            QtmacStatus::Ok
        );
        assert_eq!(
            json_of(weight),
            r#"{"basis":"schur","terms":[{"partition":[3],"coeff":"t"},{"partition":[2,1],"coeff":"1"}]}"#
        );
        assert_eq!(
            qtmac_jmu(c("1").as_ptr(), c("1").as_ptr(), &mut j),
            QtmacStatus::Ok
        );
        assert_eq!(
            json_of(j),
            r#"{"basis":"schur","terms":[{"partition":[1],"coeff":"1 - t"}]}"#
        );
        for h in [root, weight, j] {
            qtmac_expansion_free(h);
        }
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut e = ptr::null_mut();
        assert_eq!(
            qtmac_hmn(c("2").as_ptr(), 2, 2, ptr::null(), &mut e),
            QtmacStatus::NotCoprime
        );
        assert!(e.is_null());
        assert_eq!(last_error(), "2 and 2 are not coprime");
        assert_eq!(
            qtmac_hmu(c("2,1").as_ptr(), c("3").as_ptr(), &mut e),
            QtmacStatus::BadRearrangement
        );
        assert_eq!(
            qtmac_hmu(c("x").as_ptr(), ptr::null(), &mut e),
            QtmacStatus::ParseError
        );
        assert_eq!(
            qtmac_hmu(ptr::null(), ptr::null(), &mut e),
            QtmacStatus::NullPointer
        );
        assert_eq!(
            qtmac_hmu(c("1").as_ptr(), ptr::null(), ptr::null_mut()),
            QtmacStatus::NullPointer
        );
        let bad = [0xffu8, 0];
        assert_eq!(
            qtmac_hmu(bad.as_ptr().cast(), ptr::null(), &mut e),
            QtmacStatus::InvalidUtf8
        );
        assert_eq!(
            qtmac_expansion_from_json(c("{}").as_ptr(), &mut e),
            QtmacStatus::ParseError
        );
        let mut s = ptr::null_mut();
        assert_eq!(
            qtmac_expansion_to_json(ptr::null(), &mut s),
            QtmacStatus::NullPointer
        );
        assert_eq!(qtmac_expansion_len(ptr::null()), 0);
        assert!(!qtmac_expansion_equal(ptr::null(), ptr::null()));
        qtmac_expansion_free(ptr::null_mut());
        qtmac_string_free(ptr::null_mut());
        assert!(e.is_null());
    }
}
