//! Prime sieving by locating the zeros of `ω_m`.
//!
//! Given all primes `2..=p_m`, the integers in `(p_m, p_m²]` at which `ω_m`
//! vanishes are exactly the primes there. Appending them and repeating
//! reaches every prime up to a target `N` once the frontier passes `√N`.

use std::io::{self, Write};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::intensity::{grid, Kernel};
use crate::series::{check_prime_prefix, OmegaPartialSum};

/// Integers per parallel work unit in a scan.
const SCAN_CHUNK: u64 = 1 << 14;

/// Known primes plus how far the integers have been classified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveState {
    known_primes: Vec<u64>,
    scanned: u64,
    target: u64,
}

/// One scanned integer and the value `ω_m(n)` it produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceRow {
    pub n: u64,
    pub omega_m: u32,
}

impl SieveState {
    /// Starts from a gap-free seed `{2, ..., p_m}` aiming at primes `≤ target`.
    pub fn new(seed: Vec<u64>, target: u64) -> Result<Self> {
        check_prime_prefix(&seed)?;
        let frontier = *seed.last().expect("checked non-empty");
        if target < frontier {
            return Err(Error::TargetBelowFrontier { target, frontier });
        }
        Ok(Self {
            known_primes: seed,
            scanned: frontier,
            target,
        })
    }

    pub fn known_primes(&self) -> &[u64] {
        &self.known_primes
    }

    pub fn into_primes(self) -> Vec<u64> {
        self.known_primes
    }

    /// The largest known prime `p_m`.
    pub fn frontier(&self) -> u64 {
        *self.known_primes.last().expect("non-empty by construction")
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    /// Every integer `≤ scanned` has been classified.
    pub fn scanned(&self) -> u64 {
        self.scanned
    }

    pub fn is_complete(&self) -> bool {
        self.scanned >= self.target
    }

    /// Upper end of the next scan: `min(p_m², target)`.
    fn next_bound(&self) -> u64 {
        let f = self.frontier();
        f.saturating_mul(f).min(self.target)
    }

    /// Scans `(scanned, min(p_m², target)]` and appends every zero of `ω_m`.
    pub fn extend_once(&self) -> SieveState {
        self.extend(false).0
    }

    /// Like [`extend_once`](Self::extend_once), also returning `ω_m(n)` for
    /// every scanned `n`.
    pub fn extend_once_traced(&self) -> (SieveState, Vec<TraceRow>) {
        self.extend(true)
    }

    fn extend(&self, traced: bool) -> (SieveState, Vec<TraceRow>) {
        let lo = self.scanned + 1;
        let hi = self.next_bound();
        let mut next = self.clone();
        if lo > hi {
            return (next, Vec::new());
        }
        // primes above √hi cannot be the smallest factor of a composite ≤ hi
        let sieving: Vec<Kernel> = self
            .known_primes
            .iter()
            .take_while(|&&p| p <= hi / p)
            .map(|&p| Kernel::of(p))
            .collect();
        let chunks: Vec<(u64, u64)> = (lo..=hi)
            .step_by(SCAN_CHUNK as usize)
            .map(|start| (start, (start + SCAN_CHUNK - 1).min(hi)))
            .collect();
        let scanned: Vec<(Vec<u64>, Vec<TraceRow>)> = chunks
            .par_iter()
            .map(|&(a, b)| scan_chunk(&sieving, a, b, traced))
            .collect();
        let mut trace = Vec::new();
        for (zeros, rows) in scanned {
            next.known_primes.extend(zeros);
            trace.extend(rows);
        }
        next.scanned = hi;
        (next, trace)
    }
}

fn scan_chunk(kernels: &[Kernel], a: u64, b: u64, traced: bool) -> (Vec<u64>, Vec<TraceRow>) {
    let mut zeros = Vec::new();
    let mut rows = Vec::new();
    for n in a..=b {
        if traced {
            let omega_m: u32 = kernels.iter().map(|k| u32::from(k.exact(n))).sum();
            rows.push(TraceRow { n, omega_m });
            if omega_m == 0 {
                zeros.push(n);
            }
        } else if kernels.iter().all(|k| k.exact(n) == 0) {
            zeros.push(n);
        }
    }
    (zeros, rows)
}

/// All primes `≤ target`, bootstrapped from `seed` by repeated zero scans.
pub fn sieve_to(target: u64, seed: Vec<u64>) -> Result<Vec<u64>> {
    let mut state = start(target, seed)?;
    while !state.is_complete() {
        state = state.extend_once();
    }
    Ok(state.into_primes())
}

/// [`sieve_to`] together with the trace of every scanned integer, in order.
pub fn sieve_to_traced(target: u64, seed: Vec<u64>) -> Result<(Vec<u64>, Vec<TraceRow>)> {
    let mut state = start(target, seed)?;
    let mut trace = Vec::new();
    while !state.is_complete() {
        let (next, rows) = state.extend_once_traced();
        trace.extend(rows);
        state = next;
    }
    Ok((state.into_primes(), trace))
}

fn start(target: u64, seed: Vec<u64>) -> Result<SieveState> {
    if target < 2 {
        return Err(Error::BoundTooSmall(target));
    }
    SieveState::new(seed, target)
}

pub fn write_trace_csv<W: Write>(rows: &[TraceRow], mut w: W) -> io::Result<()> {
    writeln!(w, "n,omega_m_value")?;
    for r in rows {
        writeln!(w, "{},{}", r.n, r.omega_m)?;
    }
    Ok(())
}

/// Zeros of the floating `ω_m` on a grid over `[lo, hi]`, snapped to integers.
///
/// A grid point is a candidate when `ω_m < zero_threshold` there, and it is
/// kept when it lies within `integer_snap` of an integer. Zeros are only
/// found if the grid passes through them, so `lo` should be an integer and
/// `grid_step` should divide 1.
pub fn locate_zeros_float(sum: &OmegaPartialSum, lo: f64, hi: f64, grid_step: f64) -> Result<Vec<f64>> {
    let xs = grid(lo, hi, grid_step)?;
    let cfg = *sum.cfg();
    let hits: Vec<Option<f64>> = xs
        .par_iter()
        .map(|&x| -> Result<Option<f64>> {
            if sum.value(x)? >= cfg.zero_threshold() {
                return Ok(None);
            }
            let k = x.round();
            Ok(((x - k).abs() <= cfg.integer_snap()).then_some(k))
        })
        .collect::<Result<_>>()?;
    let mut zeros: Vec<f64> = hits.into_iter().flatten().collect();
    zeros.dedup();
    Ok(zeros)
}
