use std::ffi::{CStr, CString};
use std::ptr;

use poisson3_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { p3_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(p3_last_error()) }
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn algebra_and_table_round_trip() {
    let name = CString::new("book").unwrap();
    let tau = CString::new("1/3").unwrap();
    let mut alg = ptr::null_mut();
    assert_eq!(
        unsafe { p3_algebra_new(name.as_ptr(), tau.as_ptr(), &mut alg) },
        P3Status::Ok
    );

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { p3_algebra_bivector(alg, &mut s) }, P3Status::Ok);
    assert_eq!(take(s), "x*dx^dz + 1/3*y*dy^dz");

    let mut table = ptr::null_mut();
    assert_eq!(unsafe { p3_table_compute(alg, 6, &mut table) }, P3Status::Ok);
    let mut totals = [0usize; 4];
    assert_eq!(
        unsafe { p3_table_totals(table, totals.as_mut_ptr()) },
        P3Status::Ok
    );
    assert_eq!(totals, [1, 3, 2, 0]);
    let mut dim = 0usize;
    assert_eq!(unsafe { p3_table_dim(table, 2, 3, &mut dim) }, P3Status::Ok);
    assert_eq!(dim, 1);
    assert_eq!(
        unsafe { p3_table_dim(table, 4, 0, &mut dim) },
        P3Status::OutOfRange
    );
    let mut dmax = 0u32;
    assert_eq!(unsafe { p3_table_dmax(table, &mut dmax) }, P3Status::Ok);
    assert_eq!(dmax, 6);
    assert_eq!(unsafe { p3_table_json(table, &mut s) }, P3Status::Ok);
    assert!(take(s).contains("\"tau\": \"1/3\""));

    unsafe {
        p3_table_free(table);
        p3_algebra_free(alg);
    }
}

#[test]
fn brackets_and_differential() {
    let (a, b) = (CString::new("x*dy").unwrap(), CString::new("y*dx").unwrap());
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { p3_schouten(a.as_ptr(), b.as_ptr(), &mut s) },
        P3Status::Ok
    );
    assert_eq!(take(s), "x*dx - y*dy");

    let (f, g) = (CString::new("x").unwrap(), CString::new("y").unwrap());
    assert_eq!(
        unsafe { p3_schouten(f.as_ptr(), g.as_ptr(), &mut s) },
        P3Status::Engine
    );

    let name = CString::new("heisenberg").unwrap();
    let mut alg = ptr::null_mut();
    assert_eq!(
        unsafe { p3_algebra_new(name.as_ptr(), ptr::null(), &mut alg) },
        P3Status::Ok
    );
    assert_eq!(
        unsafe { p3_poisson_differential(alg, f.as_ptr(), &mut s) },
        P3Status::Ok
    );
    assert_eq!(take(s), "-1*z*dy");
    unsafe { p3_algebra_free(alg) };
}

#[test]
fn error_codes_and_messages() {
    let mut alg = ptr::null_mut();
    let bad = CString::new("martian").unwrap();
    assert_eq!(
        unsafe { p3_algebra_new(bad.as_ptr(), ptr::null(), &mut alg) },
        P3Status::UnknownAlgebra
    );
    assert!(last_error().contains("martian"));

    let book = CString::new("book").unwrap();
    assert_eq!(
        unsafe { p3_algebra_new(book.as_ptr(), ptr::null(), &mut alg) },
        P3Status::InvalidParameter
    );
    assert_eq!(
        unsafe { p3_algebra_new(ptr::null(), ptr::null(), &mut alg) },
        P3Status::NullPointer
    );

    let expr = CString::new("x +").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { p3_schouten(expr.as_ptr(), expr.as_ptr(), &mut s) },
        P3Status::Parse
    );

    let bytes = [0xffu8, 0];
    assert_eq!(
        unsafe { p3_schouten(bytes.as_ptr().cast(), expr.as_ptr(), &mut s) },
        P3Status::InvalidUtf8
    );
    assert_eq!(
        unsafe { p3_table_dmax(ptr::null(), ptr::null_mut()) },
        P3Status::NullPointer
    );
    unsafe {
        p3_string_free(ptr::null_mut());
        p3_table_free(ptr::null_mut());
        p3_algebra_free(ptr::null_mut());
    }
}

#[test]
fn verification() {
    let id = CString::new("semi_open_book").unwrap();
    let mut passed = -1;
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { p3_verify(id.as_ptr(), 6, &mut passed, &mut report) },
        P3Status::Ok
    );
    assert_eq!(passed, 1);
    assert!(take(report).starts_with("semi_open_book (dmax 6): pass"));

    let missing = CString::new("nothing").unwrap();
    assert_eq!(
        unsafe { p3_verify(missing.as_ptr(), 0, &mut passed, ptr::null_mut()) },
        P3Status::UnknownId
    );
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(p3_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
