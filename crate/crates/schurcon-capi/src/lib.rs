//! C ABI for the schurcon library.
//!
//! Conventions: every function returns a [`SchurconStatus`]; results come
//! back through out-pointers; spectra and distributions are opaque handles
//! freed by their matching `_free` calls; a thread-local message explains
//! the most recent failure.

use std::cell::RefCell;
use std::panic::{catch_unwind, AssertUnwindSafe};

use libc::{c_char, size_t};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use schurcon::proto::{concentration_yield, teleport_resources};
use schurcon::rates::{
    bh_exponent, exponent_parametric, exponent_primal, shannon_entropy, tail_probability_log2,
    Side,
};
use schurcon::young::{distribution, sample_shape, SchurWeylDistribution, Spectrum};
use schurcon::Error;

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurconStatus {
    Ok = 0,
    /// Malformed input (bad spectrum, out-of-range rate or side, ...).
    ErrInvalidArgument = 1,
    /// A size or complexity guard refused the computation.
    ErrGuard = 2,
    /// A required pointer was null.
    ErrNullPointer = 3,
    /// A caller-provided buffer is too small.
    ErrBufferTooSmall = 4,
    /// Internal panic captured at the boundary.
    ErrInternal = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(message: impl Into<String>) {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message.into());
}

fn status_of(err: &Error) -> SchurconStatus {
    match err {
        Error::Guard(_) => SchurconStatus::ErrGuard,
        _ => SchurconStatus::ErrInvalidArgument,
    }
}

fn guarded(body: impl FnOnce() -> SchurconStatus) -> SchurconStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            SchurconStatus::ErrInternal
        }
    }
}

/// An ordered probability vector (opaque).
pub struct SchurconSpectrum {
    inner: Spectrum,
}

/// A computed outcome distribution (opaque).
pub struct SchurconDistribution {
    inner: SchurWeylDistribution,
}

/// Writes the most recent error message into `buf` (NUL-terminated,
/// truncated to `cap`). Returns the full message length in bytes.
///
/// # Safety
/// `buf` must point to `cap` writable bytes, or be null (then only the
/// length is returned).
#[no_mangle]
pub unsafe extern "C" fn schurcon_last_error(buf: *mut c_char, cap: size_t) -> size_t {
    LAST_ERROR.with(|slot| {
        let message = slot.borrow();
        let bytes = message.as_bytes();
        if !buf.is_null() && cap > 0 {
            let n = bytes.len().min(cap - 1);
            unsafe {
                std::ptr::copy_nonoverlapping(bytes.as_ptr(), buf as *mut u8, n);
                *buf.add(n) = 0;
            }
        }
        bytes.len()
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn schurcon_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Builds a spectrum from `len` nonnegative entries summing to one within
/// 1e-9 (entries are sorted and rescaled internally).
///
/// # Safety
/// `probs` must point to `len` doubles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn schurcon_spectrum_new(
    probs: *const f64,
    len: size_t,
    out: *mut *mut SchurconSpectrum,
) -> SchurconStatus {
    guarded(|| {
        if probs.is_null() || out.is_null() {
            set_error("null pointer");
            return SchurconStatus::ErrNullPointer;
        }
        let slice = unsafe { std::slice::from_raw_parts(probs, len) };
        match Spectrum::with_sum_tol(slice.to_vec(), 1e-9) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(SchurconSpectrum { inner })) };
                SchurconStatus::Ok
            }
            Err(err) => {
                set_error(err.to_string());
                status_of(&err)
            }
        }
    })
}

/// Frees a spectrum handle (null is accepted).
///
/// # Safety
/// `spectrum` must be a pointer previously returned by
/// [`schurcon_spectrum_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schurcon_spectrum_free(spectrum: *mut SchurconSpectrum) {
    if !spectrum.is_null() {
        drop(unsafe { Box::from_raw(spectrum) });
    }
}

/// Number of levels in the spectrum.
///
/// # Safety
/// Valid, live handle and out-pointer.
#[no_mangle]
pub unsafe extern "C" fn schurcon_spectrum_dim(
    spectrum: *const SchurconSpectrum,
    out: *mut size_t,
) -> SchurconStatus {
    guarded(|| {
        let (Some(spectrum), false) = (unsafe { spectrum.as_ref() }, out.is_null()) else {
            set_error("null pointer");
            return SchurconStatus::ErrNullPointer;
        };
        unsafe { *out = spectrum.inner.dim() };
        SchurconStatus::Ok
    })
}

/// Shannon entropy of the spectrum in bits (also the dense-coding capacity
/// of the state it describes).
///
/// # Safety
/// Valid, live handle and out-pointer.
#[no_mangle]
pub unsafe extern "C" fn schurcon_spectrum_entropy(
    spectrum: *const SchurconSpectrum,
    out: *mut f64,
) -> SchurconStatus {
    guarded(|| {
        let (Some(spectrum), false) = (unsafe { spectrum.as_ref() }, out.is_null()) else {
            set_error("null pointer");
            return SchurconStatus::ErrNullPointer;
        };
        unsafe { *out = shannon_entropy(&spectrum.inner) };
        SchurconStatus::Ok
    })
}

/// Computes the full outcome distribution for `n` copies.
///
/// # Safety
/// Valid, live handles; `out` non-null.
#[no_mangle]
pub unsafe extern "C" fn schurcon_distribution_compute(
    n: size_t,
    spectrum: *const SchurconSpectrum,
    out: *mut *mut SchurconDistribution,
) -> SchurconStatus {
    guarded(|| {
        let (Some(spectrum), false) = (unsafe { spectrum.as_ref() }, out.is_null()) else {
            set_error("null pointer");
            return SchurconStatus::ErrNullPointer;
        };
        match distribution(n, spectrum.inner.dim(), &spectrum.inner) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(SchurconDistribution { inner })) };
                SchurconStatus::Ok
            }
            Err(err) => {
                set_error(err.to_string());
                status_of(&err)
            }
        }
    })
}

/// Frees a distribution handle (null is accepted).
///
/// # Safety
/// `dist` must come from [`schurcon_distribution_compute`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schurcon_distribution_free(dist: *mut SchurconDistribution) {
    if !dist.is_null() {
        drop(unsafe { Box::from_raw(dist) });
    }
}

/// Number of outcomes (diagrams) in the distribution.
///
/// # Safety
/// Valid, live handle and out-pointer.
#[no_mangle]
pub unsafe extern "C" fn schurcon_distribution_len(
    dist: *const SchurconDistribution,
    out: *mut size_t,
) -> SchurconStatus {
    guarded(|| {
        let (Some(dist), false) = (unsafe { dist.as_ref() }, out.is_null()) else {
            set_error("null pointer");
            return SchurconStatus::ErrNullPointer;
        };
        unsafe { *out = dist.inner.entries.len() };
        SchurconStatus::Ok
    })
}

/// Reads outcome `index`: the diagram's `d` row lengths into `parts`, plus
/// its probability and Bell yield in qubits. Any out-pointer may be null to
/// skip that field.
///
/// # Safety
/// `parts`, when non-null, must point to `parts_cap` writable entries.
#[no_mangle]
pub unsafe extern "C" fn schurcon_distribution_outcome(
    dist: *const SchurconDistribution,
    index: size_t,
    parts: *mut size_t,
    parts_cap: size_t,
    probability: *mut f64,
    ebits: *mut f64,
) -> SchurconStatus {
    guarded(|| {
        let Some(dist) = (unsafe { dist.as_ref() }) else {
            set_error("null pointer");
            return SchurconStatus::ErrNullPointer;
        };
        let Some(entry) = dist.inner.entries.get(index) else {
            set_error(format!(
                "outcome index {index} out of range (len {})",
                dist.inner.entries.len()
            ));
            return SchurconStatus::ErrInvalidArgument;
        };
        if !parts.is_null() {
            let want = entry.partition.len();
            if parts_cap < want {
                set_error(format!("parts buffer holds {parts_cap}, need {want}"));
                return SchurconStatus::ErrBufferTooSmall;
            }
            for (i, &p) in entry.partition.parts().iter().enumerate() {
                unsafe { *parts.add(i) = p };
            }
        }
        if !probability.is_null() {
            unsafe { *probability = entry.probability };
        }
        if !ebits.is_null() {
            unsafe { *ebits = entry.ebits };
        }
        SchurconStatus::Ok
    })
}

/// Expected Bell qubits per copy for `n` copies of the spectrum's state.
///
/// # Safety
/// Valid, live handle and out-pointer.
#[no_mangle]
pub unsafe extern "C" fn schurcon_mean_ebits_per_copy(
    n: size_t,
    spectrum: *const SchurconSpectrum,
    out: *mut f64,
) -> SchurconStatus {
    guarded(|| {
        let (Some(spectrum), false) = (unsafe { spectrum.as_ref() }, out.is_null()) else {
            set_error("null pointer");
            return SchurconStatus::ErrNullPointer;
        };
        match concentration_yield(n, spectrum.inner.dim(), &spectrum.inner) {
            Ok(y) => {
                unsafe { *out = y.mean_ebits_per_copy };
                SchurconStatus::Ok
            }
            Err(err) => {
                set_error(err.to_string());
                status_of(&err)
            }
        }
    })
}

fn side_of(raw: i32) -> Option<Side> {
    match raw {
        0 => Some(Side::Low),
        1 => Some(Side::High),
        _ => None,
    }
}

/// Parametric failure exponent at rate `r_bits`; `side` is 0 for the low
/// tail, 1 for the high tail.
///
/// # Safety
/// Valid, live handle and out-pointer.
#[no_mangle]
pub unsafe extern "C" fn schurcon_exponent_parametric(
    r_bits: f64,
    spectrum: *const SchurconSpectrum,
    side: i32,
    out: *mut f64,
) -> SchurconStatus {
    guarded(|| {
        let (Some(spectrum), false) = (unsafe { spectrum.as_ref() }, out.is_null()) else {
            set_error("null pointer");
            return SchurconStatus::ErrNullPointer;
        };
        let Some(side) = side_of(side) else {
            set_error("side must be 0 (low) or 1 (high)");
            return SchurconStatus::ErrInvalidArgument;
        };
        match exponent_parametric(r_bits, &spectrum.inner, side) {
            Ok(v) => {
                unsafe { *out = v };
                SchurconStatus::Ok
            }
            Err(err) => {
                set_error(err.to_string());
                status_of(&err)
            }
        }
    })
}

/// Primal (divergence-minimization) exponent at rate `r_bits`.
///
/// # Safety
/// Valid, live handle and out-pointer.
#[no_mangle]
pub unsafe extern "C" fn schurcon_exponent_primal(
    r_bits: f64,
    spectrum: *const SchurconSpectrum,
    side: i32,
    out: *mut f64,
) -> SchurconStatus {
    guarded(|| {
        let (Some(spectrum), false) = (unsafe { spectrum.as_ref() }, out.is_null()) else {
            set_error("null pointer");
            return SchurconStatus::ErrNullPointer;
        };
        let Some(side) = side_of(side) else {
            set_error("side must be 0 (low) or 1 (high)");
            return SchurconStatus::ErrInvalidArgument;
        };
        match exponent_primal(r_bits, &spectrum.inner, side) {
            Ok(v) => {
                unsafe { *out = v.value };
                SchurconStatus::Ok
            }
            Err(err) => {
                set_error(err.to_string());
                status_of(&err)
            }
        }
    })
}

/// Random-coding exponent at rate `r_bits` (needs `r <= H`).
///
/// # Safety
/// Valid, live handle and out-pointer.
#[no_mangle]
pub unsafe extern "C" fn schurcon_exponent_random_coding(
    r_bits: f64,
    spectrum: *const SchurconSpectrum,
    out: *mut f64,
) -> SchurconStatus {
    guarded(|| {
        let (Some(spectrum), false) = (unsafe { spectrum.as_ref() }, out.is_null()) else {
            set_error("null pointer");
            return SchurconStatus::ErrNullPointer;
        };
        match bh_exponent(r_bits, &spectrum.inner) {
            Ok(v) => {
                unsafe { *out = v };
                SchurconStatus::Ok
            }
            Err(err) => {
                set_error(err.to_string());
                status_of(&err)
            }
        }
    })
}

/// `log2` of the exact tail probability at `n` copies and rate `r_bits`.
///
/// # Safety
/// Valid, live handle and out-pointer.
#[no_mangle]
pub unsafe extern "C" fn schurcon_tail_log2(
    n: size_t,
    spectrum: *const SchurconSpectrum,
    r_bits: f64,
    side: i32,
    out: *mut f64,
) -> SchurconStatus {
    guarded(|| {
        let (Some(spectrum), false) = (unsafe { spectrum.as_ref() }, out.is_null()) else {
            set_error("null pointer");
            return SchurconStatus::ErrNullPointer;
        };
        let Some(side) = side_of(side) else {
            set_error("side must be 0 (low) or 1 (high)");
            return SchurconStatus::ErrInvalidArgument;
        };
        match tail_probability_log2(n, spectrum.inner.dim(), &spectrum.inner, r_bits, side) {
            Ok(v) => {
                unsafe { *out = v };
                SchurconStatus::Ok
            }
            Err(err) => {
                set_error(err.to_string());
                status_of(&err)
            }
        }
    })
}

/// Draws one measurement outcome by the insertion-shape sampler and writes
/// the diagram's `d` row lengths into `parts`.
///
/// # Safety
/// `parts` must point to `parts_cap` writable entries.
#[no_mangle]
pub unsafe extern "C" fn schurcon_sample_shape(
    spectrum: *const SchurconSpectrum,
    n: size_t,
    seed: u64,
    parts: *mut size_t,
    parts_cap: size_t,
) -> SchurconStatus {
    guarded(|| {
        let (Some(spectrum), false) = (unsafe { spectrum.as_ref() }, parts.is_null()) else {
            set_error("null pointer");
            return SchurconStatus::ErrNullPointer;
        };
        let d = spectrum.inner.dim();
        if parts_cap < d {
            set_error(format!("parts buffer holds {parts_cap}, need {d}"));
            return SchurconStatus::ErrBufferTooSmall;
        }
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        match sample_shape(&spectrum.inner, n, &mut rng) {
            Ok(shape) => {
                for (i, &p) in shape.parts().iter().enumerate() {
                    unsafe { *parts.add(i) = p };
                }
                SchurconStatus::Ok
            }
            Err(err) => {
                set_error(err.to_string());
                status_of(&err)
            }
        }
    })
}

/// Qubit and classical-bit cost of teleporting through a size-`bell_size`
/// perfect pair.
///
/// # Safety
/// Out-pointers may be null to skip a field.
#[no_mangle]
pub unsafe extern "C" fn schurcon_teleport_resources(
    bell_size: size_t,
    qubits: *mut f64,
    classical_bits: *mut f64,
) -> SchurconStatus {
    guarded(|| match teleport_resources(bell_size) {
        Ok(r) => {
            if !qubits.is_null() {
                unsafe { *qubits = r.qubits };
            }
            if !classical_bits.is_null() {
                unsafe { *classical_bits = r.classical_bits };
            }
            SchurconStatus::Ok
        }
        Err(err) => {
            set_error(err.to_string());
            status_of(&err)
        }
    })
}
