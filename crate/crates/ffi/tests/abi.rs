//! The C surface driven the way a C caller would use it.

use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use quasidet_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let v = CStr::from_ptr(s).to_str().unwrap().to_string();
    qd_string_free(s);
    v
}

unsafe fn from_json(json: &str) -> *mut QdMatrix {
    let c = CString::new(json).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(qd_matrix_from_json(c.as_ptr(), &mut m), QdStatus::Ok);
    m
}

#[test]
fn qdet_methods_and_inverse() {
    unsafe {
        let m = from_json(r#"{"rows":2,"cols":2,"entries":[["1","2"],["3","4"]]}"#);
        for method in [QdMethod::Auto, QdMethod::Recursive, QdMethod::MinorInverse] {
            let mut s = ptr::null_mut();
            assert_eq!(qd_qdet(m, 1, 1, method, &mut s), QdStatus::Ok);
            assert_eq!(take(s), "-1/2");
        }
        let mut inv = ptr::null_mut();
        assert_eq!(qd_matrix_inverse(m, &mut inv), QdStatus::Ok);
        let (mut r, mut c) = (0, 0);
        assert_eq!(qd_matrix_shape(inv, &mut r, &mut c), QdStatus::Ok);
        assert_eq!((r, c), (2, 2));
        let mut s = ptr::null_mut();
        assert_eq!(qd_matrix_get_entry(inv, 1, 1, &mut s), QdStatus::Ok);
        assert_eq!(take(s), "-2");
        qd_matrix_free(inv);
        qd_matrix_free(m);
    }
}

#[test]
fn quasi_pluecker_coordinates() {
    unsafe {
        let m = from_json(r#"{"rows":2,"cols":3,"entries":[["1","2","0"],["3","1","1"]]}"#);
        let set = [3usize];
        let mut s = ptr::null_mut();
        assert_eq!(qd_left_qpc(m, 1, 2, set.as_ptr(), 1, 0, &mut s), QdStatus::Ok);
        assert_eq!(take(s), "2");
        assert_eq!(qd_left_qpc(m, 1, 2, ptr::null(), 1, 0, &mut s), QdStatus::NullPointer);
        assert_eq!(qd_left_qpc(m, 1, 2, ptr::null(), 0, 0, &mut s), QdStatus::InvalidArgument);
        qd_matrix_free(m);

        let t = from_json(r#"{"rows":3,"cols":2,"entries":[["1","3"],["2","1"],["0","1"]]}"#);
        assert_eq!(qd_right_qpc(t, 1, 2, set.as_ptr(), 1, 0, &mut s), QdStatus::Ok);
        assert!(!take(s).is_empty());
        qd_matrix_free(t);
    }
}

#[test]
fn verify_and_list() {
    unsafe {
        let only = CString::new("SYLVESTER,NEG-COMMUTE").unwrap();
        let mut report = ptr::null_mut();
        let mut code = -1;
        assert_eq!(qd_verify(only.as_ptr(), 2, 42, &mut report, &mut code), QdStatus::Ok);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&take(report)).unwrap();
        assert_eq!(v["verdicts"].as_array().unwrap().len(), 2);

        let bad = CString::new("NO-SUCH-ID").unwrap();
        assert_eq!(qd_verify(bad.as_ptr(), 1, 0, &mut report, &mut code), QdStatus::InvalidArgument);
        assert!(!CStr::from_ptr(qd_last_error_message()).to_bytes().is_empty());

        let mut list = ptr::null_mut();
        assert_eq!(qd_list_identities(&mut list), QdStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(list)).unwrap();
        assert!(v.as_array().unwrap().iter().any(|e| e["id"] == "SYLVESTER"));
        assert!(CStr::from_ptr(qd_last_error_message()).to_bytes().is_empty());
    }
}

#[test]
fn header_declares_every_export_and_compiles() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = std::fs::read_to_string(format!("{dir}/include/quasidet.h")).unwrap();
    for f in [
        "qd_matrix_new",
        "qd_matrix_from_json",
        "qd_matrix_free",
        "qd_matrix_shape",
        "qd_matrix_set_entry",
        "qd_matrix_get_entry",
        "qd_qdet",
        "qd_matrix_inverse",
        "qd_left_qpc",
        "qd_right_qpc",
        "qd_verify",
        "qd_list_identities",
        "qd_last_error_message",
        "qd_string_free",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    let src = std::env::temp_dir().join("quasidet_header_check.c");
    std::fs::write(
        &src,
        "#include \"quasidet.h\"\nint main(void) { QdMatrix *m = 0; return qd_matrix_new(2, 2, &m) == QD_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    match Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-I"]).arg(format!("{dir}/include")).arg(&src).output() {
        Ok(o) => assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr)),
        Err(_) => eprintln!("no C compiler; header syntax not checked"),
    }
}
