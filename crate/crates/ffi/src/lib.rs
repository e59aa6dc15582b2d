//! C ABI over `primeslit`.
//!
//! Conventions:
//! * every fallible call returns a [`PsStatus`] and writes its result through
//!   an out-pointer, which is left untouched on failure;
//! * objects are opaque handles created by `ps_*_new` (or a producing call)
//!   and released with the matching `ps_*_free`; freeing NULL is a no-op;
//! * after a non-OK status, [`ps_last_error_message`] describes the failure
//!   for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use primeslit::series::{factorize_series, superpose_float};
use primeslit::{
    alpha_series, big_omega_oracle, big_omega_series, build_arrangement, coherent_intensity,
    eratosthenes, factorize, incoherent_intensity, intensity_exact, intensity_float,
    omega_m_exact, omega_oracle, omega_series, overlaps, sieve_to, zeta_identity_check, Error,
    EvalConfig, Factorization, OmegaPartialSum, Placement, SlitArrangement,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotPrime = 3,
    OutOfRange = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsPlacement {
    Centered = 0,
    LeftAnchored = 1,
}

/// Plain-data copy of a zeta identity check.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsZetaReport {
    pub s: f64,
    pub n_terms: u64,
    pub partial_sum: f64,
    pub target: f64,
    pub gap: f64,
}

/// Evaluation tolerances.
pub struct PsConfig {
    inner: EvalConfig,
}

/// An owned, increasing list of primes.
pub struct PsPrimeList {
    primes: Vec<u64>,
}

pub struct PsFactorization {
    inner: Factorization,
}

pub struct PsArrangement {
    inner: SlitArrangement,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg).unwrap_or_else(|_| c"error message contained NUL".to_owned());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(PsStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NotPrime(_) => PsStatus::NotPrime,
            Error::OutOfRange { .. } | Error::Overflow(_) => PsStatus::OutOfRange,
            _ => PsStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(PsStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `body`, translating errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> PsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PsStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside primeslit".to_owned());
            PsStatus::Panic
        }
    }
}

/// # Safety
/// `out` must be NULL or valid for a write of `T`.
unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null and valid per the caller's contract.
    unsafe { out.write(value) };
    Ok(())
}

/// # Safety
/// `data` must be NULL (only when `len` is 0) or point to `len` readable `u64`s.
unsafe fn read_list<'a>(data: *const u64, len: usize) -> Result<&'a [u64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(null("prime list"));
    }
    // SAFETY: caller guarantees `len` readable elements.
    Ok(unsafe { slice::from_raw_parts(data, len) })
}

/// # Safety
/// `cfg` must be NULL or a live handle from `ps_config_new`/`ps_config_default`.
unsafe fn config_or_default(cfg: *const PsConfig) -> EvalConfig {
    // SAFETY: see function contract.
    unsafe { cfg.as_ref() }.map_or_else(EvalConfig::default, |c| c.inner)
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ps_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => c"unknown",
    };
    VERSION.as_ptr()
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ps_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

// ---- configuration -------------------------------------------------------

/// Handle with the default tolerances. Never NULL.
#[no_mangle]
pub extern "C" fn ps_config_default() -> *mut PsConfig {
    Box::into_raw(Box::new(PsConfig {
        inner: EvalConfig::default(),
    }))
}

/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ps_config_new(
    singularity_window: f64,
    zero_threshold: f64,
    integer_snap: f64,
    out: *mut *mut PsConfig,
) -> PsStatus {
    guard(|| {
        let inner = EvalConfig::new(singularity_window, zero_threshold, integer_snap)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let handle = Box::into_raw(Box::new(PsConfig { inner }));
        // SAFETY: checked non-null above.
        unsafe { write_out(out, handle, "out") }
    })
}

/// # Safety
/// `cfg` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ps_config_free(cfg: *mut PsConfig) {
    if !cfg.is_null() {
        // SAFETY: caller hands back ownership of a Box-allocated handle.
        drop(unsafe { Box::from_raw(cfg) });
    }
}

// ---- kernels -------------------------------------------------------------

/// Writes 1 to `out` when `p` divides `n` (including `n = 0`), else 0.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ps_intensity_exact(p: u64, n: i64, out: *mut u8) -> PsStatus {
    guard(|| {
        let v = intensity_exact(p, n)?;
        // SAFETY: forwarded caller contract.
        unsafe { write_out(out, v, "out") }
    })
}

/// # Safety
/// `cfg` must be NULL (defaults) or a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ps_intensity_float(
    cfg: *const PsConfig,
    p: u64,
    x: f64,
    out: *mut f64,
) -> PsStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let cfg = unsafe { config_or_default(cfg) };
        let v = intensity_float(p, x, &cfg)?;
        unsafe { write_out(out, v, "out") }
    })
}

/// Count of the listed slit sizes dividing `n`.
///
/// # Safety
/// `primes` must point to `len` values; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ps_omega_m_exact(
    primes: *const u64,
    len: usize,
    n: i64,
    out: *mut u32,
) -> PsStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let primes = unsafe { read_list(primes, len) }?;
        let v = omega_m_exact(primes, n)?;
        unsafe { write_out(out, v, "out") }
    })
}

/// Floating partial sum over a gap-free seed `{2, 3, ..., p_m}`.
///
/// # Safety
/// `cfg` NULL or live; `primes` points to `len` values; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ps_omega_m_float(
    cfg: *const PsConfig,
    primes: *const u64,
    len: usize,
    x: f64,
    out: *mut f64,
) -> PsStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let cfg = unsafe { config_or_default(cfg) };
        let primes = unsafe { read_list(primes, len) }?;
        let sum = OmegaPartialSum::new(primes.to_vec(), cfg)?;
        let v = sum.value(x)?;
        unsafe { write_out(out, v, "out") }
    })
}

/// Incoherent sum of kernels for arbitrary slit sizes, no seed validation.
///
/// # Safety
/// `cfg` NULL or live; `sizes` points to `len` values; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ps_superpose_float(
    cfg: *const PsConfig,
    sizes: *const u64,
    len: usize,
    x: f64,
    out: *mut f64,
) -> PsStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let cfg = unsafe { config_or_default(cfg) };
        let sizes = unsafe { read_list(sizes, len) }?;
        let v = superpose_float(sizes, x, &cfg)?;
        unsafe { write_out(out, v, "out") }
    })
}

// ---- integer series and oracles -----------------------------------------

/// Distinct prime factors of `n ≥ 1` from the interference series.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ps_omega_series(n: u64, out: *mut u32) -> PsStatus {
    guard(|| {
        let v = omega_series(n)?;
        // SAFETY: forwarded caller contract.
        unsafe { write_out(out, v, "out") }
    })
}

/// Prime factors of `n ≥ 1` with multiplicity, from the series.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ps_big_omega_series(n: u64, out: *mut u32) -> PsStatus {
    guard(|| {
        let v = big_omega_series(n)?;
        // SAFETY: forwarded caller contract.
        unsafe { write_out(out, v, "out") }
    })
}

/// Distinct prime factors by trial division.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ps_omega_oracle(n: u64, out: *mut u32) -> PsStatus {
    guard(|| {
        let v = omega_oracle(n)?;
        // SAFETY: forwarded caller contract.
        unsafe { write_out(out, v, "out") }
    })
}

/// Prime factors with multiplicity by trial division.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ps_big_omega_oracle(n: u64, out: *mut u32) -> PsStatus {
    guard(|| {
        let v = big_omega_oracle(n)?;
        // SAFETY: forwarded caller contract.
        unsafe { write_out(out, v, "out") }
    })
}

/// Exponent of the prime `p` in `n`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ps_alpha_series(p: u64, n: u64, out: *mut u32) -> PsStatus {
    guard(|| {
        let v = alpha_series(p, n)?;
        // SAFETY: forwarded caller contract.
        unsafe { write_out(out, v, "out") }
    })
}

/// Factorizes `n`, via the series when `use_series` is true, else by trial division.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ps_factorize(n: u64, use_series: bool, out: *mut *mut PsFactorization) -> PsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let inner = if use_series { factorize_series(n)? } else { factorize(n)? };
        let handle = Box::into_raw(Box::new(PsFactorization { inner }));
        // SAFETY: checked non-null above.
        unsafe { write_out(out, handle, "out") }
    })
}

/// Number of distinct primes; 0 for a NULL handle.
///
/// # Safety
/// `f` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ps_factorization_len(f: *const PsFactorization) -> usize {
    // SAFETY: caller contract.
    unsafe { f.as_ref() }.map_or(0, |f| f.inner.factors().len())
}

/// The `index`-th `(prime, exponent)` pair, primes increasing.
///
/// # Safety
/// `f` must be a live handle; `prime` and `exponent` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ps_factorization_get(
    f: *const PsFactorization,
    index: usize,
    prime: *mut u64,
    exponent: *mut u32,
) -> PsStatus {
    guard(|| {
        // SAFETY: caller contract.
        let f = unsafe { f.as_ref() }.ok_or_else(|| null("factorization"))?;
        let &(p, e) = f.inner.factors().get(index).ok_or_else(|| {
            Failure(PsStatus::OutOfRange, format!("index {index} out of range"))
        })?;
        if prime.is_null() || exponent.is_null() {
            return Err(null("prime/exponent"));
        }
        unsafe {
            write_out(prime, p, "prime")?;
            write_out(exponent, e, "exponent")
        }
    })
}

/// # Safety
/// `f` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ps_factorization_free(f: *mut PsFactorization) {
    if !f.is_null() {
        // SAFETY: caller hands back ownership.
        drop(unsafe { Box::from_raw(f) });
    }
}

// ---- sieves --------------------------------------------------------------

fn emit_list(primes: Vec<u64>, out: *mut *mut PsPrimeList) -> Result<(), Failure> {
    let handle = Box::into_raw(Box::new(PsPrimeList { primes }));
    // SAFETY: callers check `out` before computing.
    unsafe { write_out(out, handle, "out") }
}

/// All primes `≤ bound` by the sieve of Eratosthenes.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ps_eratosthenes(bound: u64, out: *mut *mut PsPrimeList) -> PsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        emit_list(eratosthenes(bound)?.into_primes(), out)
    })
}

/// All primes `≤ target` by zero scans of the partial sum, starting from a
/// gap-free seed.
///
/// # Safety
/// `seed` must point to `seed_len` values; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ps_sieve_to(
    target: u64,
    seed: *const u64,
    seed_len: usize,
    out: *mut *mut PsPrimeList,
) -> PsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        // SAFETY: forwarded caller contract.
        let seed = unsafe { read_list(seed, seed_len) }?;
        emit_list(sieve_to(target, seed.to_vec())?, out)
    })
}

/// # Safety
/// `list` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ps_prime_list_len(list: *const PsPrimeList) -> usize {
    // SAFETY: caller contract.
    unsafe { list.as_ref() }.map_or(0, |l| l.primes.len())
}

/// Borrowed pointer to the primes, valid until the list is freed.
///
/// # Safety
/// `list` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ps_prime_list_data(list: *const PsPrimeList) -> *const u64 {
    // SAFETY: caller contract.
    unsafe { list.as_ref() }.map_or(ptr::null(), |l| l.primes.as_ptr())
}

/// # Safety
/// `list` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ps_prime_list_free(list: *mut PsPrimeList) {
    if !list.is_null() {
        // SAFETY: caller hands back ownership.
        drop(unsafe { Box::from_raw(list) });
    }
}

// ---- zeta ----------------------------------------------------------------

/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ps_zeta_identity_check(s: f64, n_terms: u64, out: *mut PsZetaReport) -> PsStatus {
    guard(|| {
        let r = zeta_identity_check(s, n_terms)?;
        let report = PsZetaReport {
            s: r.s,
            n_terms: r.n_terms,
            partial_sum: r.partial_sum,
            target: r.target,
            gap: r.gap,
        };
        // SAFETY: forwarded caller contract.
        unsafe { write_out(out, report, "out") }
    })
}

// ---- geometry ------------------------------------------------------------

/// # Safety
/// `primes` must point to `len` values; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ps_arrangement_new(
    d: f64,
    primes: *const u64,
    len: usize,
    placement: PsPlacement,
    out: *mut *mut PsArrangement,
) -> PsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        // SAFETY: forwarded caller contract.
        let primes = unsafe { read_list(primes, len) }?;
        let placement = match placement {
            PsPlacement::Centered => Placement::Centered,
            PsPlacement::LeftAnchored => Placement::LeftAnchored,
        };
        let inner = build_arrangement(d, primes, placement)?;
        let handle = Box::into_raw(Box::new(PsArrangement { inner }));
        unsafe { write_out(out, handle, "out") }
    })
}

/// Total number of sources over all sets; 0 for NULL.
///
/// # Safety
/// `arr` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ps_arrangement_source_count(arr: *const PsArrangement) -> u64 {
    // SAFETY: caller contract.
    unsafe { arr.as_ref() }.map_or(0, |a| a.inner.source_count())
}

/// Number of coordinates shared by two or more sets.
///
/// # Safety
/// `arr` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ps_arrangement_overlap_count(arr: *const PsArrangement, out: *mut usize) -> PsStatus {
    guard(|| {
        // SAFETY: caller contract.
        let arr = unsafe { arr.as_ref() }.ok_or_else(|| null("arrangement"))?;
        unsafe { write_out(out, overlaps(&arr.inner).len(), "out") }
    })
}

/// The `index`-th overlap position as the fraction `num/den` of the segment.
///
/// # Safety
/// `arr` must be a live handle; `num` and `den` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ps_arrangement_overlap_position(
    arr: *const PsArrangement,
    index: usize,
    num: *mut u64,
    den: *mut u64,
) -> PsStatus {
    guard(|| {
        // SAFETY: caller contract.
        let arr = unsafe { arr.as_ref() }.ok_or_else(|| null("arrangement"))?;
        let found = overlaps(&arr.inner);
        let o = found.get(index).ok_or_else(|| {
            Failure(PsStatus::OutOfRange, format!("index {index} out of range"))
        })?;
        if num.is_null() || den.is_null() {
            return Err(null("num/den"));
        }
        unsafe {
            write_out(num, o.position.num(), "num")?;
            write_out(den, o.position.den(), "den")
        }
    })
}

/// # Safety
/// `arr` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ps_arrangement_coherent(arr: *const PsArrangement, x: f64, out: *mut f64) -> PsStatus {
    guard(|| {
        // SAFETY: caller contract.
        let arr = unsafe { arr.as_ref() }.ok_or_else(|| null("arrangement"))?;
        let v = coherent_intensity(&arr.inner, x)?;
        unsafe { write_out(out, v, "out") }
    })
}

/// # Safety
/// `arr` must be a live handle; `cfg` NULL or live; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ps_arrangement_incoherent(
    arr: *const PsArrangement,
    cfg: *const PsConfig,
    x: f64,
    out: *mut f64,
) -> PsStatus {
    guard(|| {
        // SAFETY: caller contract.
        let arr = unsafe { arr.as_ref() }.ok_or_else(|| null("arrangement"))?;
        let cfg = unsafe { config_or_default(cfg) };
        let v = incoherent_intensity(&arr.inner, x, &cfg)?;
        unsafe { write_out(out, v, "out") }
    })
}

/// # Safety
/// `arr` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ps_arrangement_free(arr: *mut PsArrangement) {
    if !arr.is_null() {
        // SAFETY: caller hands back ownership.
        drop(unsafe { Box::from_raw(arr) });
    }
}
