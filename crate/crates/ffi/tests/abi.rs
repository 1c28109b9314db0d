use std::ffi::CStr;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use cyclosemi_ffi::*;

fn semigroup(gens: &[u64]) -> *mut CsSemigroup {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { cs_semigroup_new(gens.as_ptr(), gens.len(), &mut s) }, CsStatus::Ok);
    assert!(!s.is_null());
    s
}

#[test]
fn semigroup_queries() {
    let s = semigroup(&[5, 6, 7, 8]);
    unsafe {
        let mut f = 0i64;
        let mut g = 0u64;
        let mut e = 0u64;
        let (mut sym, mut cyc) = (false, true);
        assert_eq!(cs_semigroup_frobenius(s, &mut f), CsStatus::Ok);
        assert_eq!(cs_semigroup_genus(s, &mut g), CsStatus::Ok);
        assert_eq!(cs_semigroup_embedding_dimension(s, &mut e), CsStatus::Ok);
        assert_eq!(cs_semigroup_is_symmetric(s, &mut sym), CsStatus::Ok);
        assert_eq!(cs_semigroup_is_cyclotomic(s, &mut cyc), CsStatus::Ok);
        assert_eq!((f, g, e, sym, cyc), (9, 5, 4, true, false));
        cs_semigroup_free(s);
    }
}

#[test]
fn polynomial_buffer_protocol() {
    let s = semigroup(&[5, 6, 7, 8]);
    unsafe {
        let mut len = 0usize;
        assert_eq!(cs_semigroup_polynomial(s, ptr::null_mut(), 0, &mut len), CsStatus::BufferTooSmall);
        assert_eq!(len, 11);
        let mut short = [0i64; 4];
        assert_eq!(cs_semigroup_polynomial(s, short.as_mut_ptr(), 4, &mut len), CsStatus::BufferTooSmall);
        assert_eq!(short, [0; 4]);
        let mut buf = vec![7i64; 16];
        assert_eq!(cs_semigroup_polynomial(s, buf.as_mut_ptr(), buf.len(), &mut len), CsStatus::Ok);
        assert_eq!(&buf[..len], &[1, -1, 0, 0, 0, 1, 0, 0, 0, -1, 1]);
        assert_eq!(buf[len], 7);
        cs_semigroup_free(s);
    }
}

#[test]
fn analysis_json() {
    let s = semigroup(&[2, 3]);
    unsafe {
        let mut json = ptr::null_mut();
        assert_eq!(cs_semigroup_analysis_json(s, &mut json), CsStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        cs_string_free(json);
        cs_semigroup_free(s);
        assert_eq!(
            text,
            r#"{"generators":["2","3"],"minimal_generators":["2","3"],"embedding_dimension":"2","frobenius":"1","genus":"1","gaps":["1"],"polynomial":["1","-1","1"],"symmetric":true}"#
        );
    }
}

#[test]
fn family_handle() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(cs_family_new(8, 1, &mut s), CsStatus::Ok);
        let (mut e, mut sym, mut cyc) = (0u64, false, true);
        cs_semigroup_embedding_dimension(s, &mut e);
        cs_semigroup_is_symmetric(s, &mut sym);
        cs_semigroup_is_cyclotomic(s, &mut cyc);
        assert_eq!((e, sym, cyc), (4, true, false));
        cs_semigroup_free(s);

        let mut s = ptr::null_mut();
        assert_eq!(cs_family_new(5, 1, &mut s), CsStatus::InvalidArgument);
        assert!(s.is_null());
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(cs_semigroup_new([4u64, 6].as_ptr(), 2, &mut s), CsStatus::NotNumericalSemigroup);
        assert_eq!(cs_semigroup_new([0u64, 3].as_ptr(), 2, &mut s), CsStatus::NotNumericalSemigroup);
        assert_eq!(cs_semigroup_new(ptr::null(), 0, &mut s), CsStatus::NotNumericalSemigroup);
        assert_eq!(cs_semigroup_new(ptr::null(), 3, &mut s), CsStatus::NullPointer);
        assert_eq!(cs_semigroup_new([3u64].as_ptr(), 1, ptr::null_mut()), CsStatus::NullPointer);
        assert!(s.is_null());

        let mut f = 0i64;
        assert_eq!(cs_semigroup_frobenius(ptr::null(), &mut f), CsStatus::NullPointer);
        let live = semigroup(&[3, 5]);
        assert_eq!(cs_semigroup_frobenius(live, ptr::null_mut()), CsStatus::NullPointer);
        assert_eq!(cs_semigroup_polynomial(live, ptr::null_mut(), 0, ptr::null_mut()), CsStatus::NullPointer);
        cs_semigroup_free(live);
        cs_semigroup_free(ptr::null_mut());
        cs_string_free(ptr::null_mut());

        let mut report = CsBandReport::default();
        assert_eq!(cs_band_check(11, &mut report), CsStatus::BelowThreshold);
        let msg = CStr::from_ptr(cs_status_message(CsStatus::BufferTooSmall));
        assert_eq!(msg.to_str().unwrap(), "buffer too small");
    }
}

#[test]
fn raw_polynomials() {
    unsafe {
        let mut out = false;
        // (x^2 - x + 1)(x + 1) = x^3 + 1
        assert_eq!(cs_poly_is_cyclotomic([1i64, 0, 0, 1].as_ptr(), 4, &mut out), CsStatus::Ok);
        assert!(out);
        assert_eq!(cs_poly_is_cyclotomic([-1i64, -1, 1, 0, 0].as_ptr(), 5, &mut out), CsStatus::Ok);
        assert!(!out);
        assert_eq!(cs_poly_is_cyclotomic([2i64, 0, 1].as_ptr(), 3, &mut out), CsStatus::Ok);
        assert!(!out);
        assert_eq!(cs_poly_is_cyclotomic([0i64, 0].as_ptr(), 2, &mut out), CsStatus::InvalidArgument);
        assert_eq!(cs_poly_is_cyclotomic(ptr::null(), 0, &mut out), CsStatus::InvalidArgument);
    }
}

#[test]
fn band_report() {
    let mut r = CsBandReport::default();
    assert_eq!(unsafe { cs_band_check(50, &mut r) }, CsStatus::Ok);
    assert_eq!(r.n, 50);
    assert!(r.pass && r.off_circle_witness);
    assert!((r.half_width - 50f64.ln().powi(2) / 50.0).abs() < 1e-15);
    assert!(r.max_distance_from_circle <= r.half_width);
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "cyclosemi.h"

int main(void) {
    uint64_t gens[] = {5, 6, 7, 8};
    CsSemigroup *s = NULL;
    if (cs_semigroup_new(gens, 4, &s) != CS_STATUS_OK) return 1;
    int64_t f = 0;
    bool sym = false, cyc = true;
    cs_semigroup_frobenius(s, &f);
    cs_semigroup_is_symmetric(s, &sym);
    cs_semigroup_is_cyclotomic(s, &cyc);
    size_t len = 0;
    int64_t coeffs[16];
    if (cs_semigroup_polynomial(s, coeffs, 16, &len) != CS_STATUS_OK) return 2;
    char *json = NULL;
    cs_semigroup_analysis_json(s, &json);
    printf("%lld %d %d %zu %lld %s\n", (long long)f, sym, cyc, len, (long long)coeffs[9], json);
    cs_string_free(json);
    cs_semigroup_free(s);

    uint64_t bad[] = {4, 6};
    CsStatus st = cs_semigroup_new(bad, 2, &s);
    printf("%d %s\n", (int)st, cs_status_message(st));
    return 0;
}
"#;

#[test]
fn header_compiles_and_links_from_c() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<test binary>
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libcyclosemi_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());

    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    let exe = dir.path().join("smoke");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(manifest.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("9 1 0 11 -1 {\"generators\":[\"5\",\"6\",\"7\",\"8\"]"));
    assert_eq!(lines.next().unwrap(), "3 generators do not define a numerical semigroup");
}
