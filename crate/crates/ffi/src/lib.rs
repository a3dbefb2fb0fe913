//! C interface to `knotcomm`.
//!
//! Catalogs and knots are opaque handles released with their `_free`
//! function. Every fallible call returns a [`KcStatus`]; on failure the
//! message is available from [`kc_last_error_message`] on the same thread.
//! Strings returned as `char *` are owned by the caller and released with
//! [`kc_string_free`].
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use knotcomm::catalog::Catalog;
use knotcomm::covers::{admissible, b1_of_cover, torsion_order};
use knotcomm::knot::{KnotRecord, KnotSpec};
use knotcomm::obstruct::{cover_pair_test, multiset_power_test, Epsilon, Verdict};
use knotcomm::Error;

/// Status codes; the nonzero values below 6 match the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KcStatus {
    Ok = 0,
    UnknownKnot = 2,
    InsufficientData = 3,
    B1Violation = 5,
    Error = 6,
    NullPointer = 7,
    InvalidArgument = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KcVerdict {
    Pass = 0,
    Fail = 1,
    Inconclusive = 2,
}

impl From<Verdict> for KcVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Pass => KcVerdict::Pass,
            Verdict::Fail => KcVerdict::Fail,
            Verdict::Inconclusive => KcVerdict::Inconclusive,
        }
    }
}

/// A certified real: the true value lies within `radius` of `mid`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct KcBall {
    pub mid: f64,
    pub radius: f64,
}

pub struct KcCatalog {
    inner: Catalog,
}

pub struct KcKnot {
    inner: KnotRecord,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> KcStatus {
    match e {
        Error::UnknownKnot(_) => KcStatus::UnknownKnot,
        Error::InsufficientData(_) => KcStatus::InsufficientData,
        Error::B1Violation { .. } => KcStatus::B1Violation,
        Error::InvalidArgument(_) => KcStatus::InvalidArgument,
        _ => KcStatus::Error,
    }
}

enum Failure {
    Lib(Error),
    Null(&'static str),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Runs `f`, recording any failure or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> KcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KcStatus::Ok,
        Ok(Err(Failure::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_error(&format!("null pointer passed as {what}"));
            KcStatus::NullPointer
        }
        Ok(Err(Failure::Invalid(msg))) => {
            set_error(&msg);
            KcStatus::InvalidArgument
        }
        Err(_) => {
            set_error("internal panic");
            KcStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

unsafe fn out<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or(Failure::Null(what))
}

unsafe fn string<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Invalid(format!("{what} is not valid UTF-8")))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn kc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn kc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn kc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// The built-in catalog. Never NULL.
#[no_mangle]
pub extern "C" fn kc_catalog_builtin() -> *mut KcCatalog {
    Box::into_raw(Box::new(KcCatalog { inner: Catalog::builtin() }))
}

/// Built-ins merged with the catalog file at `path`.
#[no_mangle]
pub unsafe extern "C" fn kc_catalog_load(path: *const c_char, result: *mut *mut KcCatalog) -> KcStatus {
    guard(|| {
        let path = string(path, "path")?;
        let result = out(result, "result")?;
        let cat = Catalog::builtin_with(Some(Path::new(path)))?;
        *result = Box::into_raw(Box::new(KcCatalog { inner: cat }));
        Ok(())
    })
}

/// Catalog holding exactly the knots of a JSON catalog document.
#[no_mangle]
pub unsafe extern "C" fn kc_catalog_from_json(json: *const c_char, result: *mut *mut KcCatalog) -> KcStatus {
    guard(|| {
        let json = string(json, "json")?;
        let result = out(result, "result")?;
        let cat = Catalog::from_json_str(json)?;
        *result = Box::into_raw(Box::new(KcCatalog { inner: cat }));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn kc_catalog_free(catalog: *mut KcCatalog) {
    if !catalog.is_null() {
        drop(Box::from_raw(catalog));
    }
}

#[no_mangle]
pub unsafe extern "C" fn kc_catalog_len(catalog: *const KcCatalog) -> usize {
    catalog.as_ref().map_or(0, |c| c.inner.len())
}

/// Name of the `index`-th knot, or NULL if out of range.
#[no_mangle]
pub unsafe extern "C" fn kc_catalog_name(catalog: *const KcCatalog, index: usize) -> *mut c_char {
    match catalog.as_ref().and_then(|c| c.inner.knots().get(index)) {
        Some(k) => owned_string(k.name().to_string()),
        None => ptr::null_mut(),
    }
}

/// Catalog document as JSON.
#[no_mangle]
pub unsafe extern "C" fn kc_catalog_export(catalog: *const KcCatalog) -> *mut c_char {
    match catalog.as_ref() {
        Some(c) => owned_string(c.inner.to_json_string()),
        None => ptr::null_mut(),
    }
}

/// Looks up `name` (a `mirror:` prefix gives the mirror image).
#[no_mangle]
pub unsafe extern "C" fn kc_knot_get(catalog: *const KcCatalog, name: *const c_char, result: *mut *mut KcKnot) -> KcStatus {
    guard(|| {
        let catalog = deref(catalog, "catalog")?;
        let name = string(name, "name")?;
        let result = out(result, "result")?;
        let k = catalog.inner.get(name)?;
        *result = Box::into_raw(Box::new(KcKnot { inner: k }));
        Ok(())
    })
}

/// Knot from Alexander coefficients (constant term first). `signature` may
/// be NULL.
#[no_mangle]
pub unsafe extern "C" fn kc_knot_from_alexander(
    name: *const c_char,
    coeffs: *const i64,
    len: usize,
    signature: *const i64,
    result: *mut *mut KcKnot,
) -> KcStatus {
    guard(|| {
        let name = string(name, "name")?;
        if coeffs.is_null() || len == 0 {
            return Err(Failure::Null("coeffs"));
        }
        let result = out(result, "result")?;
        let c = std::slice::from_raw_parts(coeffs, len);
        let k = KnotRecord::from_alexander(name, c, signature.as_ref().copied())?;
        *result = Box::into_raw(Box::new(KcKnot { inner: k }));
        Ok(())
    })
}

/// Knot from a `size x size` Seifert matrix in row-major order.
#[no_mangle]
pub unsafe extern "C" fn kc_knot_from_seifert(
    name: *const c_char,
    entries: *const i64,
    size: usize,
    result: *mut *mut KcKnot,
) -> KcStatus {
    guard(|| {
        let name = string(name, "name")?;
        let result = out(result, "result")?;
        let rows: Vec<Vec<i64>> = if size == 0 {
            Vec::new()
        } else {
            if entries.is_null() {
                return Err(Failure::Null("entries"));
            }
            std::slice::from_raw_parts(entries, size * size).chunks(size).map(<[i64]>::to_vec).collect()
        };
        let spec = KnotSpec { name: name.to_string(), seifert: Some(rows), ..Default::default() };
        *result = Box::into_raw(Box::new(KcKnot { inner: KnotRecord::new(spec)? }));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn kc_knot_free(knot: *mut KcKnot) {
    if !knot.is_null() {
        drop(Box::from_raw(knot));
    }
}

/// Mirror image, or NULL if `knot` is NULL. Shares cached invariants.
#[no_mangle]
pub unsafe extern "C" fn kc_knot_mirror(knot: *const KcKnot) -> *mut KcKnot {
    match knot.as_ref() {
        Some(k) => Box::into_raw(Box::new(KcKnot { inner: k.inner.mirror() })),
        None => ptr::null_mut(),
    }
}

#[no_mangle]
pub unsafe extern "C" fn kc_knot_name(knot: *const KcKnot) -> *mut c_char {
    knot.as_ref().map_or(ptr::null_mut(), |k| owned_string(k.inner.name().to_string()))
}

/// Alexander polynomial, for example `t^2 - 3t + 1`.
#[no_mangle]
pub unsafe extern "C" fn kc_knot_alexander(knot: *const KcKnot) -> *mut c_char {
    knot.as_ref().map_or(ptr::null_mut(), |k| owned_string(k.inner.alexander().to_string()))
}

/// τ(K), the log Mahler measure of Δ.
#[no_mangle]
pub unsafe extern "C" fn kc_knot_tau(knot: *const KcKnot, result: *mut KcBall) -> KcStatus {
    guard(|| {
        let k = deref(knot, "knot")?;
        let (mid, radius) = k.inner.tau()?.f64_ball();
        *out(result, "result")? = KcBall { mid, radius };
        Ok(())
    })
}

/// ρ(K), the integral of the signature function over the circle.
#[no_mangle]
pub unsafe extern "C" fn kc_knot_rho(knot: *const KcKnot, result: *mut KcBall) -> KcStatus {
    guard(|| {
        let k = deref(knot, "knot")?;
        let (mid, radius) = k.inner.rho()?.f64_ball();
        *out(result, "result")? = KcBall { mid, radius };
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn kc_knot_signature(knot: *const KcKnot, result: *mut i64) -> KcStatus {
    guard(|| {
        let k = deref(knot, "knot")?;
        *out(result, "result")? = k.inner.signature()?;
        Ok(())
    })
}

/// Σ σ(K, e^{2πik/n}) over k = 1..n.
#[no_mangle]
pub unsafe extern "C" fn kc_knot_signature_sum(knot: *const KcKnot, n: u64, result: *mut i64) -> KcStatus {
    guard(|| {
        let k = deref(knot, "knot")?;
        *out(result, "result")? = k.inner.signature_sum(n)?;
        Ok(())
    })
}

/// Order of the torsion of H_1 of the n-fold cyclic cover as a decimal
/// string ("0" when infinite), or NULL on error.
#[no_mangle]
pub unsafe extern "C" fn kc_knot_torsion_order(knot: *const KcKnot, n: u64) -> *mut c_char {
    let mut s = None;
    let status = guard(|| {
        let k = deref(knot, "knot")?;
        if n == 0 {
            return Err(Failure::Invalid("n must be positive".into()));
        }
        s = Some(torsion_order(&k.inner, n).to_string());
        Ok(())
    });
    match (status, s) {
        (KcStatus::Ok, Some(s)) => owned_string(s),
        _ => ptr::null_mut(),
    }
}

#[no_mangle]
pub unsafe extern "C" fn kc_knot_b1(knot: *const KcKnot, n: u64, result: *mut u64) -> KcStatus {
    guard(|| {
        let k = deref(knot, "knot")?;
        if n == 0 {
            return Err(Failure::Invalid("n must be positive".into()));
        }
        *out(result, "result")? = b1_of_cover(&k.inner, n);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn kc_knot_admissible(knot: *const KcKnot, result: *mut bool) -> KcStatus {
    guard(|| {
        let k = deref(knot, "knot")?;
        *out(result, "result")? = admissible(&k.inner);
        Ok(())
    })
}

/// Overall verdict of the τ and ρ equations for covers `n1` and `n2`.
/// `epsilon` is 1, -1, or 0 for both orientations.
#[no_mangle]
pub unsafe extern "C" fn kc_cover_pair_test(
    k1: *const KcKnot,
    n1: u64,
    k2: *const KcKnot,
    n2: u64,
    epsilon: i32,
    result: *mut KcVerdict,
) -> KcStatus {
    guard(|| {
        let (a, b) = (deref(k1, "k1")?, deref(k2, "k2")?);
        let eps = match epsilon {
            1 => Epsilon::Plus,
            -1 => Epsilon::Minus,
            0 => Epsilon::Both,
            e => return Err(Failure::Invalid(format!("epsilon must be 1, -1 or 0, got {e}"))),
        };
        let result = out(result, "result")?;
        if n1 == 0 || n2 == 0 {
            return Err(Failure::Invalid("cover degrees must be positive".into()));
        }
        *result = cover_pair_test(&a.inner, n1, &b.inner, n2, eps)?.verdict().into();
        Ok(())
    })
}

/// Exact root-power multiset test for covers `n1` and `n2`.
#[no_mangle]
pub unsafe extern "C" fn kc_multiset_power_test(
    k1: *const KcKnot,
    n1: u64,
    k2: *const KcKnot,
    n2: u64,
    result: *mut KcVerdict,
) -> KcStatus {
    guard(|| {
        let (a, b) = (deref(k1, "k1")?, deref(k2, "k2")?);
        let result = out(result, "result")?;
        if n1 == 0 || n2 == 0 {
            return Err(Failure::Invalid("cover degrees must be positive".into()));
        }
        *result = multiset_power_test(&a.inner, n1, &b.inner, n2).verdict().into();
        Ok(())
    })
}
