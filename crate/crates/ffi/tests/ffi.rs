use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use unicwd_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    unicwd_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = unicwd_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_string()
}

const C5: &str = "5 5\na b\nb c\nc d\nd e\ne a\n";

#[test]
fn synthesize_evaluate_round_trip() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(unicwd_graph_parse(c(C5).as_ptr(), &mut g), UnicwdStatus::Ok);
        let (mut n, mut m) = (0, 0);
        assert_eq!(unicwd_graph_counts(g, &mut n, &mut m), UnicwdStatus::Ok);
        assert_eq!((n, m), (5, 5));
        let mut uni = false;
        assert_eq!(unicwd_graph_is_unigraph(g, &mut uni), UnicwdStatus::Ok);
        assert!(uni);

        let mut e = ptr::null_mut();
        assert_eq!(unicwd_synthesize(g, &mut e), UnicwdStatus::Ok);
        let mut w = 0;
        assert_eq!(unicwd_expr_width(e, &mut w), UnicwdStatus::Ok);
        assert_eq!(w, 3);

        let mut h = ptr::null_mut();
        assert_eq!(unicwd_expr_evaluate(e, &mut h), UnicwdStatus::Ok);
        let (mut s1, mut s2) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(unicwd_graph_to_string(g, &mut s1), UnicwdStatus::Ok);
        assert_eq!(unicwd_graph_to_string(h, &mut s2), UnicwdStatus::Ok);
        assert_eq!(take(s1), take(s2));

        let mut text = ptr::null_mut();
        assert_eq!(unicwd_expr_to_string(e, &mut text), UnicwdStatus::Ok);
        let text = take(text);
        let mut e2 = ptr::null_mut();
        assert_eq!(unicwd_expr_parse(c(&text).as_ptr(), &mut e2), UnicwdStatus::Ok);

        let mut value = 0;
        let mut witness = ptr::null_mut();
        assert_eq!(
            unicwd_solve(e2, UnicwdProblem::Mis as u32, &mut value, &mut witness),
            UnicwdStatus::Ok
        );
        assert_eq!(value, 2);
        assert_eq!(take(witness).split(',').count(), 2);
        assert_eq!(unicwd_solve(e2, UnicwdProblem::Ds as u32, &mut value, ptr::null_mut()), UnicwdStatus::Ok);
        assert_eq!(value, 2);

        unicwd_expr_free(e2);
        unicwd_expr_free(e);
        unicwd_graph_free(h);
        unicwd_graph_free(g);
    }
}

#[test]
fn error_statuses() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(unicwd_graph_parse(ptr::null(), &mut g), UnicwdStatus::NullPointer);
        assert_eq!(unicwd_graph_parse(c("2 1\na\n").as_ptr(), &mut g), UnicwdStatus::Parse);
        assert!(last_error().starts_with("2:1:"));
        let bad = [0xffu8, 0];
        assert_eq!(unicwd_graph_parse(bad.as_ptr().cast(), &mut g), UnicwdStatus::InvalidUtf8);

        let mut e = ptr::null_mut();
        assert_eq!(unicwd_expr_parse(c("(j 1 1 (v a 1))").as_ptr(), &mut e), UnicwdStatus::Parse);
        assert!(last_error().contains("join labels must differ"));

        // a realization of (3,2,2,2,1) is not a unigraph
        let f = "5 5\na b\nb c\nc d\nd a\na e\n";
        assert_eq!(unicwd_graph_parse(c(f).as_ptr(), &mut g), UnicwdStatus::Ok);
        assert_eq!(unicwd_synthesize(g, &mut e), UnicwdStatus::NotUnigraph);
        assert!(!last_error().is_empty());
        unicwd_graph_free(g);

        assert_eq!(unicwd_expr_parse(c("(v a 1)").as_ptr(), &mut e), UnicwdStatus::Ok);
        let mut v = 0;
        assert_eq!(unicwd_solve(e, 9, &mut v, ptr::null_mut()), UnicwdStatus::InvalidArgument);
        assert_eq!(unicwd_solve(e, 0, &mut v, ptr::null_mut()), UnicwdStatus::Ok);
        assert!(unicwd_last_error_message().is_null());
        unicwd_expr_free(e);

        unicwd_graph_free(ptr::null_mut());
        unicwd_expr_free(ptr::null_mut());
        unicwd_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_interface() {
    let header = include_str!("../include/unicwd.h");
    for name in [
        "unicwd_graph_parse",
        "unicwd_graph_free",
        "unicwd_synthesize",
        "unicwd_expr_evaluate",
        "unicwd_solve",
        "unicwd_last_error_message",
        "UNICWD_STATUS_SIZE_GUARD",
        "typedef struct UnicwdGraph UnicwdGraph;",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/unicwd.h");
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", header])
        .status()
    else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    assert!(status.success());
}
