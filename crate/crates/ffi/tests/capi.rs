use std::ffi::CStr;
use std::ptr;

use sqmirror_ffi::*;

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    sqm_string_free(s);
    out
}

#[test]
fn quintic_invariants_round_trip() {
    unsafe {
        let a = [5i64];
        let mut engine = ptr::null_mut();
        assert_eq!(sqm_engine_new(5, a.as_ptr(), 1, 3, &mut engine), SqmStatus::Ok);
        assert!(!engine.is_null());

        let mut s = ptr::null_mut();
        assert_eq!(sqm_engine_invariant(engine, SqmFlavor::Sq, 2, 0, &mut s), SqmStatus::Ok);
        assert_eq!(take(s), "3589125");
        assert_eq!(sqm_engine_invariant(engine, SqmFlavor::Gw, 3, 1, &mut s), SqmStatus::Ok);
        assert_eq!(take(s), "8564575000/9");

        sqm_engine_free(engine);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let bad = [0i64];
        let mut engine = ptr::null_mut();
        assert_eq!(sqm_engine_new(5, bad.as_ptr(), 1, 3, &mut engine), SqmStatus::InvalidArgument);
        assert!(engine.is_null());
        let msg = CStr::from_ptr(sqm_last_error()).to_str().unwrap();
        assert!(!msg.is_empty());

        let a = [5i64];
        assert_eq!(sqm_engine_new(5, a.as_ptr(), 1, 2, &mut engine), SqmStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(sqm_engine_invariant(engine, SqmFlavor::Sq, 1, 7, &mut s), SqmStatus::OutOfRange);
        assert!(s.is_null());
        assert_eq!(sqm_engine_invariant(ptr::null(), SqmFlavor::Sq, 1, 0, &mut s), SqmStatus::NullPointer);
        sqm_engine_free(engine);
        sqm_engine_free(ptr::null_mut());
        sqm_string_free(ptr::null_mut());
    }
}

#[test]
fn table_json() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(sqm_table1_json(2, &mut s), SqmStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v[0]["cols"][1], "3850");
        assert_eq!(v[1]["cols"][0], "4876875/8");
    }
}

#[test]
fn verification_suites() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(sqm_verify(SqmSuite::PsiIntegrals, 1, ptr::null(), 0, 5, 0, 1, 1, &mut s), SqmStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["pass"], true);

        let a = [2i64];
        assert_eq!(sqm_verify(SqmSuite::Mirror, 3, a.as_ptr(), 1, 3, 0, 9, 2, &mut s), SqmStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["verdicts"].as_array().unwrap().len(), 2);

        let big = [7i64];
        assert_eq!(sqm_verify(SqmSuite::Mirror, 3, big.as_ptr(), 1, 2, 0, 9, 1, &mut s), SqmStatus::Domain);
    }
}

#[test]
fn status_strings_are_static() {
    let text = unsafe { CStr::from_ptr(sqm_status_str(SqmStatus::VerificationFailed)) };
    assert_eq!(text.to_str().unwrap(), "verification failed");
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/sqmirror.h")).unwrap();
    for name in ["sqm_engine_new", "sqm_engine_free", "sqm_engine_invariant", "sqm_verify", "sqm_string_free", "typedef struct SqmEngine SqmEngine"] {
        assert!(header.contains(name), "{name}");
    }
}
