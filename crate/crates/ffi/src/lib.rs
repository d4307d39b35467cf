//! C ABI for the `setpeaks` engine.
//!
//! Every entry point returns a [`SetpeaksStatus`]; results come back through
//! out-pointers. Big integers cross the boundary as NUL-terminated decimal
//! strings owned by the library and released with [`setpeaks_string_free`].
//! Iterators and series are opaque handles with matching `_free` functions.
//! On failure, [`setpeaks_last_error`] describes the most recent error on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use setpeaks::enumeration::aggregate;
use setpeaks::series::{peak_derivative_series, peak_series, IntSeries, XSeries};
use setpeaks::{
    compute_total, words, Method, PartitionClass, PeakKind, RgsIter, Statistic, StirlingTable,
};

/// Bumped whenever a signature or struct layout below changes.
pub const SETPEAKS_ABI_VERSION: u32 = 1;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetpeaksStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    Panic = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetpeaksStatistic {
    Symmetric = 0,
    NonSymmetric = 1,
    Peaks = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetpeaksMethod {
    Closed = 0,
    Brute = 1,
    Series = 2,
}

/// Generating function selector: symmetric (`SP`) or non-symmetric (`NSP`) peaks.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetpeaksGf {
    Sp = 0,
    Nsp = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SetpeaksStatBundle {
    pub peaks: u64,
    pub symmetric_peaks: u64,
    pub non_symmetric_peaks: u64,
    pub rises: u64,
    pub descents: u64,
    pub records: u64,
}

/// Opaque streaming generator over one partition class.
pub struct SetpeaksRgsIter {
    inner: RgsIter,
    n: usize,
}

enum SeriesData {
    Bivariate(XSeries),
    Univariate(IntSeries),
}

/// Opaque truncated generating function.
pub struct SetpeaksSeries {
    data: SeriesData,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: SetpeaksStatus, msg: impl Into<String>) -> SetpeaksStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> SetpeaksStatus) -> SetpeaksStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(SetpeaksStatus::Panic, "internal panic"),
    }
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> SetpeaksStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            SetpeaksStatus::Ok
        }
        Err(_) => fail(SetpeaksStatus::Panic, "string contained NUL"),
    }
}

unsafe fn as_letters<'a>(ptr: *const u32, len: usize) -> Option<&'a [u32]> {
    if len == 0 {
        Some(&[])
    } else if ptr.is_null() {
        None
    } else {
        Some(slice::from_raw_parts(ptr, len))
    }
}

#[no_mangle]
pub extern "C" fn setpeaks_abi_version() -> u32 {
    SETPEAKS_ABI_VERSION
}

/// Message for the last failed call on this thread. The pointer stays valid
/// until the next failing call on the same thread; never free it.
#[no_mangle]
pub extern "C" fn setpeaks_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn setpeaks_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `letters` must point to `len` readable values (or be null when `len == 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn setpeaks_word_stats(
    letters: *const u32,
    len: usize,
    out: *mut SetpeaksStatBundle,
) -> SetpeaksStatus {
    guard(|| {
        let (Some(w), false) = (as_letters(letters, len), out.is_null()) else {
            return fail(SetpeaksStatus::NullPointer, "null pointer");
        };
        let s = words::stats(w);
        *out = SetpeaksStatBundle {
            peaks: s.peaks as u64,
            symmetric_peaks: s.symmetric_peaks as u64,
            non_symmetric_peaks: s.non_symmetric_peaks as u64,
            rises: s.rises as u64,
            descents: s.descents as u64,
            records: s.records as u64,
        };
        SetpeaksStatus::Ok
    })
}

/// # Safety
/// Same pointer rules as [`setpeaks_word_stats`].
#[no_mangle]
pub unsafe extern "C" fn setpeaks_validate_rgs(
    letters: *const u32,
    len: usize,
    out: *mut bool,
) -> SetpeaksStatus {
    guard(|| {
        let (Some(w), false) = (as_letters(letters, len), out.is_null()) else {
            return fail(SetpeaksStatus::NullPointer, "null pointer");
        };
        *out = words::validate_rgs(w);
        SetpeaksStatus::Ok
    })
}

/// `S(n, k)` as a decimal string.
///
/// # Safety
/// `out` must be writable; free the result with [`setpeaks_string_free`].
#[no_mangle]
pub unsafe extern "C" fn setpeaks_stirling2(
    n: usize,
    k: usize,
    out: *mut *mut c_char,
) -> SetpeaksStatus {
    guard(|| {
        if out.is_null() {
            return fail(SetpeaksStatus::NullPointer, "null out pointer");
        }
        write_string(out, setpeaks::stirling::stirling2(n, k).to_string())
    })
}

/// A peak total over partitions of `[n]` with `k` blocks, as a decimal string.
///
/// # Safety
/// `out` must be writable; free the result with [`setpeaks_string_free`].
#[no_mangle]
pub unsafe extern "C" fn setpeaks_total(
    stat: SetpeaksStatistic,
    method: SetpeaksMethod,
    n: usize,
    k: usize,
    out: *mut *mut c_char,
) -> SetpeaksStatus {
    guard(|| {
        if out.is_null() {
            return fail(SetpeaksStatus::NullPointer, "null out pointer");
        }
        let stat = match stat {
            SetpeaksStatistic::Symmetric => Statistic::Symmetric,
            SetpeaksStatistic::NonSymmetric => Statistic::NonSymmetric,
            SetpeaksStatistic::Peaks => Statistic::Peaks,
        };
        let method = match method {
            SetpeaksMethod::Closed => Method::Closed,
            SetpeaksMethod::Brute => Method::Brute,
            SetpeaksMethod::Series => Method::Series,
        };
        match compute_total(stat, n, k, method, None) {
            Ok(v) => write_string(out, v.to_string()),
            Err(e) => fail(SetpeaksStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// The aggregate record of one class as a JSON object.
///
/// # Safety
/// `out` must be writable; free the result with [`setpeaks_string_free`].
#[no_mangle]
pub unsafe extern "C" fn setpeaks_aggregate_json(
    n: usize,
    k: usize,
    out: *mut *mut c_char,
) -> SetpeaksStatus {
    guard(|| {
        if out.is_null() {
            return fail(SetpeaksStatus::NullPointer, "null out pointer");
        }
        match PartitionClass::new(n, k) {
            Ok(class) => write_string(out, aggregate(class).to_json()),
            Err(e) => fail(SetpeaksStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Rows of the Stirling triangle, tab separated, one line per `n`.
///
/// # Safety
/// `out` must be writable; free the result with [`setpeaks_string_free`].
#[no_mangle]
pub unsafe extern "C" fn setpeaks_stirling_table_tsv(
    max_n: usize,
    out: *mut *mut c_char,
) -> SetpeaksStatus {
    guard(|| {
        if out.is_null() {
            return fail(SetpeaksStatus::NullPointer, "null out pointer");
        }
        let table = StirlingTable::new(max_n);
        let mut text = String::new();
        for n in 0..=max_n {
            let row: Vec<String> = table.row(n).iter().map(ToString::to_string).collect();
            text.push_str(&row.join("\t"));
            text.push('\n');
        }
        write_string(out, text)
    })
}

/// Creates a generator over the restricted growth strings of length `n` with `k` blocks.
///
/// # Safety
/// `out` must be writable; release the handle with [`setpeaks_rgs_iter_free`].
#[no_mangle]
pub unsafe extern "C" fn setpeaks_rgs_iter_new(
    n: usize,
    k: usize,
    out: *mut *mut SetpeaksRgsIter,
) -> SetpeaksStatus {
    guard(|| {
        if out.is_null() {
            return fail(SetpeaksStatus::NullPointer, "null out pointer");
        }
        match PartitionClass::new(n, k) {
            Ok(class) => {
                *out = Box::into_raw(Box::new(SetpeaksRgsIter {
                    inner: RgsIter::new(class),
                    n,
                }));
                SetpeaksStatus::Ok
            }
            Err(e) => fail(SetpeaksStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Copies the next word (1-based letters) into `buf`, which must hold at least
/// `n` values. Sets `*has_word` to false once the class is exhausted.
///
/// # Safety
/// `iter` must be a live handle; `buf` must be writable for `buf_len` values.
#[no_mangle]
pub unsafe extern "C" fn setpeaks_rgs_iter_next(
    iter: *mut SetpeaksRgsIter,
    buf: *mut u32,
    buf_len: usize,
    has_word: *mut bool,
) -> SetpeaksStatus {
    guard(|| {
        if iter.is_null() || has_word.is_null() || (buf.is_null() && buf_len > 0) {
            return fail(SetpeaksStatus::NullPointer, "null pointer");
        }
        let iter = &mut *iter;
        if buf_len < iter.n {
            return fail(
                SetpeaksStatus::OutOfRange,
                format!("buffer holds {buf_len} letters, words have {}", iter.n),
            );
        }
        match iter.inner.advance() {
            Some(word) => {
                if !word.is_empty() {
                    ptr::copy_nonoverlapping(word.as_ptr(), buf, word.len());
                }
                *has_word = true;
            }
            None => *has_word = false,
        }
        SetpeaksStatus::Ok
    })
}

/// # Safety
/// `iter` must come from [`setpeaks_rgs_iter_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn setpeaks_rgs_iter_free(iter: *mut SetpeaksRgsIter) {
    if !iter.is_null() {
        drop(Box::from_raw(iter));
    }
}

/// Builds the truncated series of `gf` for `k` blocks through `x^order`.
/// With `derivative`, builds the univariate `q`-derivative at `q = 1` instead.
///
/// # Safety
/// `out` must be writable; release the handle with [`setpeaks_series_free`].
#[no_mangle]
pub unsafe extern "C" fn setpeaks_series_new(
    gf: SetpeaksGf,
    k: usize,
    order: usize,
    derivative: bool,
    out: *mut *mut SetpeaksSeries,
) -> SetpeaksStatus {
    guard(|| {
        if out.is_null() {
            return fail(SetpeaksStatus::NullPointer, "null out pointer");
        }
        let kind = match gf {
            SetpeaksGf::Sp => PeakKind::Symmetric,
            SetpeaksGf::Nsp => PeakKind::NonSymmetric,
        };
        let data = if derivative {
            SeriesData::Univariate(peak_derivative_series(kind, k, order))
        } else {
            SeriesData::Bivariate(peak_series(kind, k, order))
        };
        *out = Box::into_raw(Box::new(SetpeaksSeries { data }));
        SetpeaksStatus::Ok
    })
}

/// # Safety
/// `series` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn setpeaks_series_order(
    series: *const SetpeaksSeries,
    out: *mut usize,
) -> SetpeaksStatus {
    guard(|| {
        if series.is_null() || out.is_null() {
            return fail(SetpeaksStatus::NullPointer, "null pointer");
        }
        *out = match &(*series).data {
            SeriesData::Bivariate(s) => s.order(),
            SeriesData::Univariate(s) => s.order(),
        };
        SetpeaksStatus::Ok
    })
}

/// Coefficient of `x^n` as space-separated decimal coefficients of
/// `q^0, q^1, ...` (`"0"` for zero); a single number for derivative series.
///
/// # Safety
/// `series` must be a live handle and `out` writable; free the result with
/// [`setpeaks_string_free`].
#[no_mangle]
pub unsafe extern "C" fn setpeaks_series_coeff(
    series: *const SetpeaksSeries,
    n: usize,
    out: *mut *mut c_char,
) -> SetpeaksStatus {
    guard(|| {
        if series.is_null() || out.is_null() {
            return fail(SetpeaksStatus::NullPointer, "null pointer");
        }
        let text = match &(*series).data {
            SeriesData::Bivariate(s) => s.coeff(n).map(ToString::to_string),
            SeriesData::Univariate(s) => s.coeff(n).map(ToString::to_string),
        };
        match text {
            Ok(t) => write_string(out, t),
            Err(e) => fail(SetpeaksStatus::OutOfRange, e.to_string()),
        }
    })
}

/// # Safety
/// `series` must come from [`setpeaks_series_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn setpeaks_series_free(series: *mut SetpeaksSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}
