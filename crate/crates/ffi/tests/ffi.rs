//! Exercises the C ABI from the Rust side, including the error paths.

use std::ffi::{CStr, CString};
use std::ptr;

use tetra_ffi::{
    tetra_act, tetra_census_closed_ideals, tetra_decompose, tetra_eval, tetra_ideal_member,
    tetra_last_error, tetra_lift_table, tetra_onsager_ideal_member, tetra_session_free,
    tetra_session_new, tetra_string_free, tetra_verify, TetraContext, TetraStatus,
};

fn take_string(ptr: *mut std::ffi::c_char) -> String {
    assert!(!ptr.is_null());
    let s = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_owned();
    unsafe { tetra_string_free(ptr) };
    s
}

#[test]
fn eval_and_errors_through_the_abi() {
    let session = tetra_session_new();
    let mut out: *mut std::ffi::c_char = ptr::null_mut();

    let expr = CString::new("[u1, u2*t]").unwrap();
    let status = unsafe { tetra_eval(session, expr.as_ptr(), TetraContext::Loop, &mut out) };
    assert_eq!(status, TetraStatus::Ok);
    assert_eq!(take_string(out), "u0*(1 - t)");

    let bad = CString::new("[u0").unwrap();
    let mut out2: *mut std::ffi::c_char = ptr::null_mut();
    let status = unsafe { tetra_eval(session, bad.as_ptr(), TetraContext::Loop, &mut out2) };
    assert_eq!(status, TetraStatus::ParseError);
    assert!(out2.is_null());
    let err = unsafe { CStr::from_ptr(tetra_last_error(session)) };
    assert!(err.to_str().unwrap().contains("position"));

    let status = unsafe { tetra_eval(ptr::null_mut(), expr.as_ptr(), TetraContext::Loop, &mut out2) };
    assert_eq!(status, TetraStatus::NullPointer);

    unsafe { tetra_session_free(session) };
}

#[test]
fn extension_context_caches_the_lift_table() {
    let session = tetra_session_new();
    let mut out: *mut std::ffi::c_char = ptr::null_mut();
    let expr = CString::new("X_01 + X_10").unwrap();
    let status = unsafe { tetra_eval(session, expr.as_ptr(), TetraContext::Extension, &mut out) };
    assert_eq!(status, TetraStatus::Ok);
    assert_eq!(take_string(out), "K1*(-1)");

    let status = unsafe { tetra_lift_table(session, &mut out) };
    assert_eq!(status, TetraStatus::Ok);
    let table = take_string(out);
    assert_eq!(table.lines().count(), 15);
    assert!(table.contains("C_02\tK0*(1)"));
    unsafe { tetra_session_free(session) };
}

#[test]
fn act_and_memberships() {
    let session = tetra_session_new();
    let mut out: *mut std::ffi::c_char = ptr::null_mut();

    let perm = CString::new("(123)").unwrap();
    let expr = CString::new("u0").unwrap();
    let status = unsafe {
        tetra_act(session, perm.as_ptr(), expr.as_ptr(), TetraContext::Loop, &mut out)
    };
    assert_eq!(status, TetraStatus::Ok);
    assert_eq!(take_string(out), "u1*(1)");

    let elem = CString::new("u0*(t*(t-2))").unwrap();
    let gen = CString::new("t-2").unwrap();
    let mut member = false;
    let status =
        unsafe { tetra_ideal_member(session, elem.as_ptr(), gen.as_ptr(), &mut member) };
    assert_eq!(status, TetraStatus::Ok);
    assert!(member);

    let elem = CString::new("v2*((t^2+1)*t)").unwrap();
    let spec = CString::new("J=t^2+1; typeII eta=1").unwrap();
    let status =
        unsafe { tetra_onsager_ideal_member(session, elem.as_ptr(), spec.as_ptr(), &mut member) };
    assert_eq!(status, TetraStatus::Ok);
    assert!(!member);

    unsafe { tetra_session_free(session) };
}

#[test]
fn verify_census_and_decompose() {
    let session = tetra_session_new();
    let mut out: *mut std::ffi::c_char = ptr::null_mut();

    let suite = CString::new("tet").unwrap();
    let status = unsafe { tetra_verify(session, suite.as_ptr(), &mut out) };
    assert_eq!(status, TetraStatus::Ok);
    let report = take_string(out);
    assert_eq!(report.lines().count(), 60);
    assert!(report.lines().all(|l| l.ends_with("\tpass")));

    let unknown = CString::new("bogus").unwrap();
    let mut out2: *mut std::ffi::c_char = ptr::null_mut();
    let status = unsafe { tetra_verify(session, unknown.as_ptr(), &mut out2) };
    assert_eq!(status, TetraStatus::InvalidArgument);

    let j = CString::new("t^2+1").unwrap();
    let status = unsafe { tetra_census_closed_ideals(session, j.as_ptr(), &mut out) };
    assert_eq!(status, TetraStatus::Ok);
    let text = take_string(out);
    assert!(text.trim_end().ends_with("closed ideals: 9"));

    let e = CString::new("1/(t*(1-t))").unwrap();
    let by = CString::new("kbasis").unwrap();
    let status = unsafe { tetra_decompose(session, e.as_ptr(), by.as_ptr(), &mut out) };
    assert_eq!(status, TetraStatus::Ok);
    assert_eq!(take_string(out), "1\t1\nt'^1\t-1\nt''^1\t1\n");

    unsafe { tetra_session_free(session) };
}
