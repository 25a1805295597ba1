//! C interface to the geocomplexity measures.
//!
//! Every fallible function returns a [`GcxStatus`] and writes its result
//! through an out-pointer. On failure a description is available from
//! [`gcx_last_error_message`] on the calling thread. Handles returned by
//! the library are released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use geocomplexity::analysis::{compute_profile, ComplexityProfile, Measure};
use geocomplexity::cli::{parse_csv, whole};
use geocomplexity::linprog::{l1_error_distance, l2_linear_error, l3_linear_nonlinearity};
use geocomplexity::neighbors::{n1_boundary_fraction, n2_intra_inter_ratio, n3_loo_nn_error, n4_nn_nonlinearity};
use geocomplexity::overlap::{f1_max_fisher, f2_overlap_volume, f3_max_feature_efficiency};
use geocomplexity::synth::{gen_checkerboard, gen_linear_margin, gen_random_labeling, gen_rings};
use geocomplexity::topology::{t1_adherence_fraction, t2_points_per_dimension};
use geocomplexity::{Dataset, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcxStatus {
    Ok = 0,
    NullPointer = 1,
    /// The data violates a dataset or measure precondition.
    InvalidData = 2,
    Io = 3,
    /// The linear program could not be solved.
    Solver = 4,
    InvalidArgument = 5,
    /// A Rust panic was caught at the boundary.
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcxMeasure {
    F1 = 0,
    F2,
    F3,
    L1,
    L2,
    L3,
    N1,
    N2,
    N3,
    N4,
    T1,
    T2,
}

impl From<GcxMeasure> for Measure {
    fn from(m: GcxMeasure) -> Measure {
        Measure::ALL[m as usize]
    }
}

/// A two-class point set.
pub struct GcxDataset {
    inner: Dataset,
}

/// The twelve measures of one dataset plus metadata.
pub struct GcxProfile {
    inner: ComplexityProfile,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(error: &Error) -> GcxStatus {
    match error {
        Error::Measure { source, .. } => status_of(source),
        Error::Solver(_) => GcxStatus::Solver,
        Error::InvalidArgument(_) | Error::ImpossibleMargin { .. } => GcxStatus::InvalidArgument,
        e if e.is_io() => GcxStatus::Io,
        _ => GcxStatus::InvalidData,
    }
}

/// Runs `body`, translating errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), (GcxStatus, String)>) -> GcxStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => GcxStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {message}"));
            GcxStatus::Panic
        }
    }
}

fn fail(error: Error) -> (GcxStatus, String) {
    (status_of(&error), error.to_string())
}

fn null(what: &str) -> (GcxStatus, String) {
    (GcxStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, (GcxStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (GcxStatus::InvalidArgument, format!("{what} is not valid UTF-8")))
}

unsafe fn store<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn gcx_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static name of a measure, such as `"N3"`.
#[no_mangle]
pub extern "C" fn gcx_measure_name(measure: GcxMeasure) -> *const c_char {
    const NAMES: [&CStr; 12] = [
        c"F1", c"F2", c"F3", c"L1", c"L2", c"L3", c"N1", c"N2", c"N3", c"N4", c"T1", c"T2",
    ];
    NAMES[measure as usize].as_ptr()
}

/// Builds a dataset from `rows * dim` row-major coordinates and one integer
/// label per row. Exactly two distinct labels are required; class one is the
/// label whose decimal text sorts first.
///
/// # Safety
/// `values` must point to `rows * dim` doubles and `labels` to `rows`
/// integers. `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gcx_dataset_new(
    values: *const f64,
    rows: usize,
    dim: usize,
    labels: *const i32,
    out: *mut *mut GcxDataset,
) -> GcxStatus {
    guard(|| {
        if values.is_null() || labels.is_null() || out.is_null() {
            return Err(null("values, labels or out"));
        }
        let count = rows.checked_mul(dim).ok_or((GcxStatus::InvalidArgument, "rows * dim overflows".into()))?;
        let values = std::slice::from_raw_parts(values, count).to_vec();
        let labels: Vec<String> = std::slice::from_raw_parts(labels, rows).iter().map(i32::to_string).collect();
        let inner = Dataset::from_flat("ffi", dim, values, labels).map_err(fail)?;
        store(out, GcxDataset { inner });
        Ok(())
    })
}

/// Reads a two-class CSV file. `label_column` is a header name or a
/// zero-based index; with `encode` set, non-numeric feature columns are coded
/// as integers in order of first appearance.
///
/// # Safety
/// `path` and `label_column` must be NUL-terminated strings; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn gcx_dataset_from_csv(
    path: *const c_char,
    label_column: *const c_char,
    encode: bool,
    out: *mut *mut GcxDataset,
) -> GcxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let path = text(path, "path")?;
        let label = text(label_column, "label_column")?;
        let raw = parse_csv(Path::new(path), label, encode).map_err(fail)?;
        let inner = whole(&raw).map_err(fail)?;
        store(out, GcxDataset { inner });
        Ok(())
    })
}

fn generated(out: *mut *mut GcxDataset, make: impl FnOnce() -> geocomplexity::Result<Dataset>) -> GcxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let inner = make().map_err(fail)?;
        unsafe { store(out, GcxDataset { inner }) };
        Ok(())
    })
}

/// Uniform points in the unit cube with balanced random labels.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gcx_generate_random_labeling(
    dim: usize,
    n_per_class: usize,
    seed: u64,
    out: *mut *mut GcxDataset,
) -> GcxStatus {
    generated(out, || gen_random_labeling(dim, n_per_class, seed))
}

/// Linearly separable classes with a gap of `margin` around a random
/// hyperplane through the cube center.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gcx_generate_linear_margin(
    dim: usize,
    n_per_class: usize,
    margin: f64,
    seed: u64,
    out: *mut *mut GcxDataset,
) -> GcxStatus {
    generated(out, || gen_linear_margin(dim, n_per_class, margin, seed))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gcx_generate_checkerboard(
    cells_per_side: usize,
    n_per_class: usize,
    seed: u64,
    out: *mut *mut GcxDataset,
) -> GcxStatus {
    generated(out, || gen_checkerboard(cells_per_side, n_per_class, seed))
}

/// Concentric rings around the origin in the plane.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gcx_generate_rings(
    n_per_class: usize,
    r_inner: f64,
    r_outer: f64,
    gap: f64,
    seed: u64,
    out: *mut *mut GcxDataset,
) -> GcxStatus {
    generated(out, || gen_rings(n_per_class, r_inner, r_outer, gap, seed))
}

/// Number of points, or 0 for NULL.
///
/// # Safety
/// `dataset` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gcx_dataset_len(dataset: *const GcxDataset) -> usize {
    dataset.as_ref().map_or(0, |d| d.inner.len())
}

/// Feature dimension, or 0 for NULL.
///
/// # Safety
/// `dataset` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gcx_dataset_dim(dataset: *const GcxDataset) -> usize {
    dataset.as_ref().map_or(0, |d| d.inner.dim())
}

/// # Safety
/// `dataset` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gcx_dataset_free(dataset: *mut GcxDataset) {
    if !dataset.is_null() {
        drop(Box::from_raw(dataset));
    }
}

/// Computes all twelve measures. `seed` drives the interpolated test sets
/// of L3 and N4.
///
/// # Safety
/// `dataset` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gcx_profile_compute(
    dataset: *const GcxDataset,
    seed: u64,
    out: *mut *mut GcxProfile,
) -> GcxStatus {
    guard(|| {
        let ds = dataset.as_ref().ok_or_else(|| null("dataset"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let inner = compute_profile(&ds.inner, seed).map_err(fail)?;
        store(out, GcxProfile { inner });
        Ok(())
    })
}

/// One value of a profile. F1 and N2 may be `+inf`.
///
/// # Safety
/// `profile` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gcx_profile_get(profile: *const GcxProfile, measure: GcxMeasure, out: *mut f64) -> GcxStatus {
    guard(|| {
        let p = profile.as_ref().ok_or_else(|| null("profile"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = p.inner.get(measure.into());
        Ok(())
    })
}

/// Copies all twelve values, in `GcxMeasure` order, into `out`.
///
/// # Safety
/// `profile` must be a live handle; `out` must hold 12 doubles.
#[no_mangle]
pub unsafe extern "C" fn gcx_profile_values(profile: *const GcxProfile, out: *mut f64) -> GcxStatus {
    guard(|| {
        let p = profile.as_ref().ok_or_else(|| null("profile"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        ptr::copy_nonoverlapping(p.inner.values().as_ptr(), out, 12);
        Ok(())
    })
}

/// Serializes the profile as a JSON object. Release the string with
/// [`gcx_string_free`].
///
/// # Safety
/// `profile` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gcx_profile_to_json(profile: *const GcxProfile, out: *mut *mut c_char) -> GcxStatus {
    guard(|| {
        let p = profile.as_ref().ok_or_else(|| null("profile"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let json = serde_json::to_string(&p.inner).map_err(|e| fail(e.into()))?;
        *out = CString::new(json).expect("json has no NUL").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gcx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `profile` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gcx_profile_free(profile: *mut GcxProfile) {
    if !profile.is_null() {
        drop(Box::from_raw(profile));
    }
}

/// Computes a single measure without building a full profile.
///
/// # Safety
/// `dataset` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gcx_measure(
    dataset: *const GcxDataset,
    measure: GcxMeasure,
    seed: u64,
    out: *mut f64,
) -> GcxStatus {
    guard(|| {
        let ds = &dataset.as_ref().ok_or_else(|| null("dataset"))?.inner;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = match measure {
            GcxMeasure::F1 => f1_max_fisher(ds),
            GcxMeasure::F2 => f2_overlap_volume(ds),
            GcxMeasure::F3 => f3_max_feature_efficiency(ds),
            GcxMeasure::L1 => l1_error_distance(ds).map_err(fail)?,
            GcxMeasure::L2 => l2_linear_error(ds).map_err(fail)?,
            GcxMeasure::L3 => l3_linear_nonlinearity(ds, seed).map_err(fail)?,
            GcxMeasure::N1 => n1_boundary_fraction(ds),
            GcxMeasure::N2 => n2_intra_inter_ratio(ds),
            GcxMeasure::N3 => n3_loo_nn_error(ds),
            GcxMeasure::N4 => n4_nn_nonlinearity(ds, seed),
            GcxMeasure::T1 => t1_adherence_fraction(ds),
            GcxMeasure::T2 => t2_points_per_dimension(ds),
        };
        Ok(())
    })
}
