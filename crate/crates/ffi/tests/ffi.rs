use std::ffi::{CStr, CString};
use std::ptr;

use knotcomm_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    kc_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(kc_last_error_message()).to_str().unwrap().to_string()
}

unsafe fn knot(cat: *const KcCatalog, name: &str) -> *mut KcKnot {
    let mut k = ptr::null_mut();
    assert_eq!(kc_knot_get(cat, cstr(name).as_ptr(), &mut k), KcStatus::Ok);
    k
}

#[test]
fn invariants_through_handles() {
    unsafe {
        let cat = kc_catalog_builtin();
        assert_eq!(kc_catalog_len(cat), 7);
        assert_eq!(take(kc_catalog_name(cat, 3)), "9_48");
        assert!(kc_catalog_name(cat, 99).is_null());

        let k = knot(cat, "9_48");
        let mut ball = KcBall::default();
        assert_eq!(kc_knot_tau(k, &mut ball), KcStatus::Ok);
        assert!((ball.mid - 1.6306052174936092).abs() < 1e-12 && ball.radius <= 1e-12);
        assert_eq!(kc_knot_rho(k, &mut ball), KcStatus::Ok);
        assert!((ball.mid - 1.645123).abs() < 1e-5);
        let mut s = 0i64;
        assert_eq!(kc_knot_signature_sum(k, 8, &mut s), KcStatus::Ok);
        assert_eq!(s, 14);
        assert_eq!(kc_knot_signature(k, &mut s), KcStatus::Ok);
        assert_eq!(s, 2);
        let mut ok = false;
        assert_eq!(kc_knot_admissible(k, &mut ok), KcStatus::Ok);
        assert!(ok);
        assert_eq!(take(kc_knot_alexander(k)), "t^4 - 7t^3 + 11t^2 - 7t + 1");

        let m = kc_knot_mirror(k);
        assert_eq!(take(kc_knot_name(m)), "mirror:9_48");
        assert_eq!(kc_knot_rho(m, &mut ball), KcStatus::Ok);
        assert!((ball.mid + 1.645123).abs() < 1e-5);
        kc_knot_free(m);
        kc_knot_free(k);

        let t = knot(cat, "trefoil");
        assert_eq!(take(kc_knot_torsion_order(t, 2)), "3");
        assert_eq!(take(kc_knot_torsion_order(t, 6)), "0");
        let mut b1 = 0u64;
        assert_eq!(kc_knot_b1(t, 6, &mut b1), KcStatus::Ok);
        assert_eq!(b1, 3);
        assert!(kc_knot_torsion_order(t, 0).is_null());
        kc_knot_free(t);
        kc_catalog_free(cat);
    }
}

#[test]
fn comparisons() {
    unsafe {
        let cat = kc_catalog_builtin();
        let (a, b) = (knot(cat, "9_48"), knot(cat, "12n_642"));
        let mut v = KcVerdict::Inconclusive;
        assert_eq!(kc_cover_pair_test(a, 8, b, 6, -1, &mut v), KcStatus::Ok);
        assert_eq!(v, KcVerdict::Pass);
        assert_eq!(kc_cover_pair_test(a, 8, b, 6, 1, &mut v), KcStatus::Ok);
        assert_eq!(v, KcVerdict::Fail);
        assert_eq!(kc_cover_pair_test(a, 4, b, 3, 0, &mut v), KcStatus::Ok);
        assert_eq!(v, KcVerdict::Fail);
        assert_eq!(kc_multiset_power_test(a, 8, b, 6, &mut v), KcStatus::Ok);
        assert_eq!(v, KcVerdict::Pass);
        assert_eq!(kc_cover_pair_test(a, 8, b, 6, 2, &mut v), KcStatus::InvalidArgument);

        let t = knot(cat, "trefoil");
        assert_eq!(kc_cover_pair_test(t, 6, a, 1, 0, &mut v), KcStatus::B1Violation);
        assert!(last_error().contains("b1"));
        for k in [a, b, t] {
            kc_knot_free(k);
        }
        kc_catalog_free(cat);
    }
}

#[test]
fn construction_and_errors() {
    unsafe {
        let mut k = ptr::null_mut();
        let coeffs = [1i64, -3, 1];
        assert_eq!(kc_knot_from_alexander(cstr("f8").as_ptr(), coeffs.as_ptr(), 3, ptr::null(), &mut k), KcStatus::Ok);
        let mut ball = KcBall::default();
        assert_eq!(kc_knot_rho(k, &mut ball), KcStatus::Ok);
        assert_eq!((ball.mid, ball.radius), (0.0, 0.0));
        kc_knot_free(k);

        let sig = 2i64;
        let coeffs = [1i64, -7, 11, -7, 1];
        assert_eq!(kc_knot_from_alexander(cstr("k").as_ptr(), coeffs.as_ptr(), 5, &sig, &mut k), KcStatus::Ok);
        kc_knot_free(k);
        assert_eq!(kc_knot_from_alexander(cstr("k").as_ptr(), coeffs.as_ptr(), 5, ptr::null(), &mut k), KcStatus::Ok);
        assert_eq!(kc_knot_rho(k, &mut ball), KcStatus::InsufficientData);
        kc_knot_free(k);

        let bad = [1i64, 2, 1];
        assert_eq!(kc_knot_from_alexander(cstr("x").as_ptr(), bad.as_ptr(), 3, ptr::null(), &mut k), KcStatus::Error);
        assert!(last_error().contains("±1"));

        let trefoil = [-1i64, 1, 0, -1];
        assert_eq!(kc_knot_from_seifert(cstr("t").as_ptr(), trefoil.as_ptr(), 2, &mut k), KcStatus::Ok);
        let mut s = 0i64;
        assert_eq!(kc_knot_signature(k, &mut s), KcStatus::Ok);
        assert_eq!(s, -2);
        kc_knot_free(k);

        let cat = kc_catalog_builtin();
        assert_eq!(kc_knot_get(cat, cstr("nope").as_ptr(), &mut k), KcStatus::UnknownKnot);
        assert_eq!(kc_knot_get(ptr::null(), cstr("9_48").as_ptr(), &mut k), KcStatus::NullPointer);
        assert_eq!(kc_knot_tau(ptr::null(), &mut ball), KcStatus::NullPointer);
        kc_catalog_free(cat);
        kc_catalog_free(ptr::null_mut());
        kc_knot_free(ptr::null_mut());
        assert!(!CStr::from_ptr(kc_version()).to_bytes().is_empty());
    }
}

#[test]
fn catalogs_from_json() {
    unsafe {
        let mut cat = ptr::null_mut();
        let json = cstr(r#"{"version": 1, "knots": [{"name": "f", "alexander": [1, -3, 1]}]}"#);
        assert_eq!(kc_catalog_from_json(json.as_ptr(), &mut cat), KcStatus::Ok);
        assert_eq!(kc_catalog_len(cat), 1);
        let text = take(kc_catalog_export(cat));
        assert!(text.contains("\"version\": 1"));
        kc_catalog_free(cat);

        let json = cstr("{\"version\": 1,\n \"knots\": [{\"name\": \"f\", \"alexander\": [1, 1]}]}");
        assert_eq!(kc_catalog_from_json(json.as_ptr(), &mut cat), KcStatus::Error);
        assert!(last_error().contains("line 2"));

        let dir = std::env::temp_dir().join(format!("knotcomm-ffi-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cat.json");
        std::fs::write(&path, r#"{"version": 1, "knots": [{"name": "extra", "alexander": [1, -3, 1]}]}"#).unwrap();
        let p = cstr(path.to_str().unwrap());
        assert_eq!(kc_catalog_load(p.as_ptr(), &mut cat), KcStatus::Ok);
        assert_eq!(kc_catalog_len(cat), 8);
        kc_catalog_free(cat);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/knotcomm.h")).unwrap();
    for f in [
        "kc_catalog_builtin",
        "kc_knot_get",
        "kc_knot_tau",
        "kc_knot_rho",
        "kc_knot_signature_sum",
        "kc_knot_torsion_order",
        "kc_cover_pair_test",
        "kc_last_error_message",
        "typedef struct KcKnot KcKnot",
    ] {
        assert!(header.contains(f), "{f} missing from header");
    }
}
