//! C ABI over the rational quasideterminant engine.
//!
//! Matrices are opaque [`QdMatrix`] handles with 1-based labels. Scalars
//! cross the boundary as canonical rational strings (`"p/q"`). Every function
//! returns a [`QdStatus`]; on failure [`qd_last_error_message`] describes it.
//! Strings returned through `out` pointers are owned by the caller and must be
//! released with [`qd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_rational::BigRational;
use quasidet::harness::{self, run_suite, RunConfig};
use quasidet::io::MatrixFile;
use quasidet::linalg::parse_rational;
use quasidet::pluecker::{left_qpc, right_qpc, Pivot};
use quasidet::quasidet::matrix_inverse;
use quasidet::scalar::{Codec, QRing};
use quasidet::{qdet, Error, Method, NcMatrix};

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QdStatus {
    Ok = 0,
    /// The value is undefined: a required inverse does not exist.
    Domain = 1,
    InvalidArgument = 2,
    /// A row or column label is out of range.
    Index = 3,
    Parse = 4,
    NullPointer = 5,
    /// An internal panic was caught at the boundary.
    Panic = 6,
}

/// Quasideterminant evaluation route.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QdMethod {
    Auto = 0,
    Recursive = 1,
    MinorInverse = 2,
}

impl From<QdMethod> for Method {
    fn from(m: QdMethod) -> Self {
        match m {
            QdMethod::Auto => Method::Auto,
            QdMethod::Recursive => Method::Recursive,
            QdMethod::MinorInverse => Method::MinorInverse,
        }
    }
}

/// Opaque matrix over the rationals.
pub struct QdMatrix {
    inner: NcMatrix<BigRational>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(QdStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Domain(_) | Error::UndefinedInverse(_) => QdStatus::Domain,
            Error::UnknownIndex { .. } => QdStatus::Index,
            Error::Parse { .. } => QdStatus::Parse,
            _ => QdStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Run `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> QdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            QdStatus::Ok
        }
        Ok(Err(Failure(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&format!("internal panic: {msg}"));
            QdStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(QdStatus::NullPointer, format!("`{what}` is null"))
}

unsafe fn matrix<'a>(m: *const QdMatrix) -> Result<&'a NcMatrix<BigRational>, Failure> {
    m.as_ref().map(|m| &m.inner).ok_or_else(|| null("matrix"))
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(QdStatus::InvalidArgument, format!("`{what}` is not UTF-8")))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Failure(QdStatus::InvalidArgument, "string contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_matrix(out: *mut *mut QdMatrix, m: NcMatrix<BigRational>) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(QdMatrix { inner: m }));
    Ok(())
}

fn scalar(x: &BigRational) -> String {
    match QRing.encode(x) {
        serde_json::Value::String(s) => s,
        v => v.to_string(),
    }
}

fn index(m: &NcMatrix<BigRational>, i: usize, j: usize) -> Result<(), Failure> {
    if i == 0 || j == 0 || i > m.nrows() || j > m.ncols() {
        return Err(Failure(QdStatus::Index, format!("({i}, {j}) is outside a {}x{} matrix", m.nrows(), m.ncols())));
    }
    Ok(())
}

unsafe fn labels<'a>(set: *const usize, len: usize) -> Result<&'a [usize], Failure> {
    match (set.is_null(), len) {
        (_, 0) => Ok(&[]),
        (true, _) => Err(null("set")),
        (false, _) => Ok(std::slice::from_raw_parts(set, len)),
    }
}

/// New `rows x cols` zero matrix.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn qd_matrix_new(rows: usize, cols: usize, out: *mut *mut QdMatrix) -> QdStatus {
    guard(|| {
        if rows == 0 || cols == 0 {
            return Err(Failure(QdStatus::InvalidArgument, "matrix dimensions must be positive".into()));
        }
        put_matrix(out, NcMatrix::zeros(&QRing, rows, cols))
    })
}

/// Matrix from the JSON matrix-file format with constant entries.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qd_matrix_from_json(json: *const c_char, out: *mut *mut QdMatrix) -> QdStatus {
    guard(|| {
        let file = MatrixFile::from_json(text(json, "json")?)?;
        let m = file
            .rationals()?
            .ok_or_else(|| Failure(QdStatus::InvalidArgument, "entries must be constant".into()))?;
        put_matrix(out, m)
    })
}

/// Release a matrix. Null is ignored.
///
/// # Safety
/// `m` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qd_matrix_free(m: *mut QdMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Matrix dimensions.
///
/// # Safety
/// `m` must be a live handle; `rows` and `cols` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qd_matrix_shape(m: *const QdMatrix, rows: *mut usize, cols: *mut usize) -> QdStatus {
    guard(|| {
        let a = matrix(m)?;
        if rows.is_null() || cols.is_null() {
            return Err(null("rows/cols"));
        }
        *rows = a.nrows();
        *cols = a.ncols();
        Ok(())
    })
}

/// Set entry `(i, j)` from a rational string such as `"-3/4"`.
///
/// # Safety
/// `m` must be a live handle; `value` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn qd_matrix_set_entry(m: *mut QdMatrix, i: usize, j: usize, value: *const c_char) -> QdStatus {
    guard(|| {
        let h = m.as_mut().ok_or_else(|| null("matrix"))?;
        index(&h.inner, i, j)?;
        let s = text(value, "value")?;
        let q = parse_rational(s.trim()).ok_or_else(|| Failure(QdStatus::Parse, format!("`{s}` is not a rational")))?;
        h.inner = h.inner.with_entry(i, j, q)?;
        Ok(())
    })
}

/// Entry `(i, j)` as a rational string.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qd_matrix_get_entry(m: *const QdMatrix, i: usize, j: usize, out: *mut *mut c_char) -> QdStatus {
    guard(|| {
        let a = matrix(m)?;
        index(a, i, j)?;
        put_string(out, scalar(a.e(i, j)))
    })
}

/// Quasideterminant `|A|_pq` as a rational string.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qd_qdet(
    m: *const QdMatrix,
    p: usize,
    q: usize,
    method: QdMethod,
    out: *mut *mut c_char,
) -> QdStatus {
    guard(|| {
        let a = matrix(m)?;
        index(a, p, q)?;
        put_string(out, scalar(&qdet(&QRing, a, p, q, method.into())?))
    })
}

/// Inverse matrix as a new handle.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qd_matrix_inverse(m: *const QdMatrix, out: *mut *mut QdMatrix) -> QdStatus {
    guard(|| {
        let a = matrix(m)?;
        put_matrix(out, matrix_inverse(&QRing, a)?.normalized())
    })
}

/// Left quasi-Plücker coordinate of a `k x n` matrix; `set` holds the `k - 1`
/// column labels of `I`. `pivot_row` 0 picks the first defined row.
///
/// # Safety
/// `m` must be a live handle; `set` must point to `set_len` labels; `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn qd_left_qpc(
    m: *const QdMatrix,
    i: usize,
    j: usize,
    set: *const usize,
    set_len: usize,
    pivot_row: usize,
    out: *mut *mut c_char,
) -> QdStatus {
    guard(|| {
        let a = matrix(m)?;
        let pivot = if pivot_row == 0 { Pivot::Auto } else { Pivot::Fixed(pivot_row) };
        let v = left_qpc(&QRing, a, i, j, labels(set, set_len)?, pivot, Method::Auto)?;
        put_string(out, scalar(&v))
    })
}

/// Right quasi-Plücker coordinate of an `n x k` matrix; `set` holds the
/// `k - 1` row labels of `I`. `pivot_col` 0 picks the first defined column.
///
/// # Safety
/// As for [`qd_left_qpc`].
#[no_mangle]
pub unsafe extern "C" fn qd_right_qpc(
    m: *const QdMatrix,
    i: usize,
    j: usize,
    set: *const usize,
    set_len: usize,
    pivot_col: usize,
    out: *mut *mut c_char,
) -> QdStatus {
    guard(|| {
        let a = matrix(m)?;
        let pivot = if pivot_col == 0 { Pivot::Auto } else { Pivot::Fixed(pivot_col) };
        let v = right_qpc(&QRing, a, i, j, labels(set, set_len)?, pivot, Method::Auto)?;
        put_string(out, scalar(&v))
    })
}

/// Run the identity catalog. `only` is a comma-separated ID list or null for
/// all; `samples` 0 means the default. Writes the JSON report and the exit
/// code (0 pass, 1 counterexample, 2 domain exhausted).
///
/// # Safety
/// `only` is null or NUL-terminated; `report_json` and `exit_code` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn qd_verify(
    only: *const c_char,
    samples: usize,
    seed: u64,
    report_json: *mut *mut c_char,
    exit_code: *mut i32,
) -> QdStatus {
    guard(|| {
        if exit_code.is_null() {
            return Err(null("exit_code"));
        }
        let mut config = RunConfig { seed, ..RunConfig::default() };
        if samples > 0 {
            config.samples = samples;
        }
        if !only.is_null() {
            config.only =
                text(only, "only")?.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect();
        }
        let rep = run_suite(&config)?;
        *exit_code = rep.exit_code();
        put_string(report_json, rep.to_json())
    })
}

/// JSON array of `{"id", "reference", "anchor", "module"}` objects.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qd_list_identities(out: *mut *mut c_char) -> QdStatus {
    guard(|| {
        let list: Vec<serde_json::Value> = harness::catalog()
            .iter()
            .map(|e| {
                let i = e.info();
                serde_json::json!({ "id": i.id, "reference": i.reference, "anchor": i.anchor, "module": i.module })
            })
            .collect();
        put_string(out, serde_json::Value::Array(list).to_string())
    })
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn qd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use std::ptr;

    use super::*;

    unsafe fn take(s: *mut c_char) -> String {
        let v = CStr::from_ptr(s).to_str().unwrap().to_string();
        qd_string_free(s);
        v
    }

    fn last_error() -> String {
        unsafe { CStr::from_ptr(qd_last_error_message()).to_str().unwrap().to_string() }
    }

    #[test]
    fn set_and_get_round_trip() {
        unsafe {
            let mut m = ptr::null_mut();
            assert_eq!(qd_matrix_new(2, 2, &mut m), QdStatus::Ok);
            let v = CString::new("-6/8").unwrap();
            assert_eq!(qd_matrix_set_entry(m, 2, 1, v.as_ptr()), QdStatus::Ok);
            let mut s = ptr::null_mut();
            assert_eq!(qd_matrix_get_entry(m, 2, 1, &mut s), QdStatus::Ok);
            assert_eq!(take(s), "-3/4");
            assert_eq!(qd_matrix_get_entry(m, 3, 1, &mut s), QdStatus::Index);
            let bad = CString::new("x/2").unwrap();
            assert_eq!(qd_matrix_set_entry(m, 1, 1, bad.as_ptr()), QdStatus::Parse);
            assert!(!last_error().is_empty());
            qd_matrix_free(m);
        }
    }

    #[test]
    fn null_pointers_are_reported() {
        unsafe {
            let mut s = ptr::null_mut();
            assert_eq!(qd_qdet(ptr::null(), 1, 1, QdMethod::Auto, &mut s), QdStatus::NullPointer);
            assert_eq!(qd_matrix_new(1, 1, ptr::null_mut()), QdStatus::NullPointer);
            qd_matrix_free(ptr::null_mut());
            qd_string_free(ptr::null_mut());
        }
    }

    #[test]
    fn domain_status_for_undefined_value() {
        unsafe {
            let json = CString::new(r#"{"rows":2,"cols":2,"entries":[["1","2"],["1","0"]]}"#).unwrap();
            let mut m = ptr::null_mut();
            assert_eq!(qd_matrix_from_json(json.as_ptr(), &mut m), QdStatus::Ok);
            let mut s = ptr::null_mut();
            assert_eq!(qd_qdet(m, 1, 1, QdMethod::Auto, &mut s), QdStatus::Domain);
            assert!(s.is_null());
            qd_matrix_free(m);
        }
    }
}
