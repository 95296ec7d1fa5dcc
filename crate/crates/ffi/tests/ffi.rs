use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use quadpow_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn render(value: *mut QpValue) -> String {
    let mut s: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { qp_value_to_string(value, &mut s) }, QpStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe {
        qp_string_free(s);
        qp_value_free(value);
    }
    text
}

fn last_error() -> String {
    let p = qp_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn computes_through_handles() {
    let mut v = ptr::null_mut();
    let (t, d) = (c("1"), c("-1"));
    for engine in [QP_ENGINE_ITERATIVE, QP_ENGINE_BINOMIAL, QP_ENGINE_DOUBLING] {
        assert_eq!(unsafe { qp_pm(t.as_ptr(), d.as_ptr(), 10, engine, 0, &mut v) }, QpStatus::Ok);
        assert_eq!(render(v), "55");
    }
    assert!(qp_last_error_message().is_null());

    assert_eq!(unsafe { qp_xpow(t.as_ptr(), d.as_ptr(), 5, QP_ENGINE_DOUBLING, 0, &mut v) }, QpStatus::Ok);
    assert_eq!(render(v), "5,3");

    assert_eq!(unsafe { qp_pm(t.as_ptr(), d.as_ptr(), 12, QP_ENGINE_DOUBLING, 100, &mut v) }, QpStatus::Ok);
    assert_eq!(render(v), "44 mod 100");

    assert_eq!(unsafe { qp_lucas(10, 0, &mut v) }, QpStatus::Ok);
    assert_eq!(render(v), "123");

    assert_eq!(unsafe { qp_fib_nm(3, 4, &mut v) }, QpStatus::Ok);
    assert_eq!(render(v), "144");

    assert_eq!(unsafe { qp_symbolic(5, &mut v) }, QpStatus::Ok);
    assert_eq!(render(v), "T^4 - 3*T^2*D + D^2");
}

#[test]
fn matrix_entries_and_kinds() {
    let mut v = ptr::null_mut();
    let matrix = c("1,1;1,0");
    assert_eq!(unsafe { qp_matpow(matrix.as_ptr(), 10, QP_ENGINE_DOUBLING, 0, &mut v) }, QpStatus::Ok);

    let mut kind = QpKind::Scalar;
    let mut len = 0usize;
    unsafe {
        assert_eq!(qp_value_kind(v, &mut kind), QpStatus::Ok);
        assert_eq!(qp_value_len(v, &mut len), QpStatus::Ok);
    }
    assert_eq!((kind, len), (QpKind::Matrix, 4));

    let mut entries = Vec::new();
    for i in 0..4 {
        let mut e = ptr::null_mut();
        let mut n = 0i64;
        unsafe {
            assert_eq!(qp_value_entry(v, i, &mut e), QpStatus::Ok);
            assert_eq!(qp_value_to_i64(e, &mut n), QpStatus::Ok);
            qp_value_free(e);
        }
        entries.push(n);
    }
    assert_eq!(entries, [89, 55, 55, 34]);

    let mut e = ptr::null_mut();
    assert_eq!(unsafe { qp_value_entry(v, 4, &mut e) }, QpStatus::IndexOutOfRange);
    let mut n = 0i64;
    assert_eq!(unsafe { qp_value_to_i64(v, &mut n) }, QpStatus::WrongKind);
    unsafe { qp_value_free(v) };
}

#[test]
fn errors_map_to_status_codes() {
    let mut v = ptr::null_mut();
    let (one, bad) = (c("1"), c("1x"));
    unsafe {
        assert_eq!(qp_pm(bad.as_ptr(), one.as_ptr(), 3, QP_ENGINE_DOUBLING, 0, &mut v), QpStatus::Parse);
        assert!(last_error().contains("position 1"));
        assert_eq!(qp_pm(ptr::null(), one.as_ptr(), 3, QP_ENGINE_DOUBLING, 0, &mut v), QpStatus::NullPointer);
        assert_eq!(qp_pm(one.as_ptr(), one.as_ptr(), 3, 7, 0, &mut v), QpStatus::InvalidEngine);
        assert_eq!(qp_pm(one.as_ptr(), one.as_ptr(), 3, QP_ENGINE_DOUBLING, 1, &mut v), QpStatus::Domain);
        assert_eq!(qp_pm(one.as_ptr(), one.as_ptr(), 0, QP_ENGINE_BINOMIAL, 0, &mut v), QpStatus::Domain);
        assert!(last_error().contains("m >= 1"));
        assert_eq!(qp_fib_nm(0, 3, &mut v), QpStatus::Domain);
        assert_eq!(qp_fib(3, QP_ENGINE_DOUBLING, 0, ptr::null_mut()), QpStatus::NullPointer);
        let invalid = [0xffu8, 0];
        assert_eq!(
            qp_matpow(invalid.as_ptr().cast(), 2, QP_ENGINE_DOUBLING, 0, &mut v),
            QpStatus::InvalidUtf8
        );
    }
    assert!(v.is_null());

    let mut big = ptr::null_mut();
    let mut n = 0i64;
    unsafe {
        assert_eq!(qp_fib(100, QP_ENGINE_DOUBLING, 0, &mut big), QpStatus::Ok);
        assert_eq!(qp_value_to_i64(big, &mut n), QpStatus::Overflow);
        qp_value_free(big);
        qp_value_free(ptr::null_mut());
        qp_string_free(ptr::null_mut());
    }
}

fn ffi_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(ffi_dir().join("include/quadpow.h")).unwrap();
    for decl in [
        "typedef struct QpValue QpValue;",
        "QP_STATUS_OK = 0",
        "QP_KIND_MATRIX = 2",
        "#define QP_ENGINE_DOUBLING 2",
        "enum QpStatus qp_pm(",
        "enum QpStatus qp_matpow(",
        "void qp_value_free(struct QpValue *value);",
        "const char *qp_last_error_message(void);",
    ] {
        assert!(header.contains(decl), "header lacks {decl}");
    }
}

/// Directory holding the library artifacts built alongside this test binary.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_static_library() {
    let compiler = std::env::var("CC").unwrap_or_else(|_| "cc".to_string());
    if Command::new(&compiler).arg("--version").output().is_err() {
        eprintln!("no C compiler found ({compiler}); skipping the C smoke test");
        return;
    }
    let lib = artifact_dir().join("libquadpow_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let exe = std::env::temp_dir().join(format!("quadpow_smoke_{}", std::process::id()));
    let status = Command::new(&compiler)
        .arg(ffi_dir().join("tests/c/smoke.c"))
        .arg("-I")
        .arg(ffi_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(&exe);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
