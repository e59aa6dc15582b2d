//! Number-theoretic functions as superpositions of interference kernels.
//!
//! * `ω_m(x) = Σ_{i≤m} I_{p_i}(x)` over the first `m` primes,
//! * `ω(n)   = Σ_p I_p(n)` over all primes,
//! * `α_p(n) = Σ_{j≥1} I_{p^j}(n)`,
//! * `Ω(n)   = Σ_{p | n} α_p(n)`.
//!
//! At integer arguments every term is a divisibility indicator, so the
//! infinite sums are evaluated exactly: terms with `p > n` (or `p^j > n`)
//! vanish identically.

use std::io::{self, Write};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::config::EvalConfig;
use crate::csvfmt::g17;
use crate::error::{Error, Result};
use crate::intensity::{grid, IntensityProfile, Kernel};
use crate::oracle::{eratosthenes, is_prime, Factorization};

/// Largest `n` accepted by the integer series. Keeps the table of primes
/// `≤ √n` at 2^20 entries.
pub const MAX_SERIES_ARG: u64 = 1 << 40;

const SMALL_PRIME_LIMIT: u64 = 1 << 20;

fn small_primes() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        eratosthenes(SMALL_PRIME_LIMIT)
            .expect("static bound")
            .into_primes()
    })
}

/// Checks that `primes` is exactly `2, 3, 5, ..., p_m` with nothing skipped.
pub fn check_prime_prefix(primes: &[u64]) -> Result<()> {
    let Some(&last) = primes.last() else {
        return Err(Error::SeedGap("empty prime list".into()));
    };
    for w in primes.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicatePrime(w[0]));
        }
        if w[0] > w[1] {
            return Err(Error::SeedGap(format!("{} listed before {}", w[0], w[1])));
        }
    }
    if let Some(&bad) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::NotPrime(bad));
    }
    let full = eratosthenes(last.max(2))?;
    if let Some(missing) = full.primes().iter().find(|p| primes.binary_search(p).is_err()) {
        return Err(Error::SeedGap(format!("missing prime {missing}")));
    }
    Ok(())
}

/// The partial sum `ω_m` over a gap-free seed `{2, 3, ..., p_m}`.
#[derive(Debug, Clone, PartialEq)]
pub struct OmegaPartialSum {
    primes: Vec<u64>,
    cfg: EvalConfig,
}

impl OmegaPartialSum {
    pub fn new(primes: Vec<u64>, cfg: EvalConfig) -> Result<Self> {
        check_prime_prefix(&primes)?;
        cfg.check_for_largest(*primes.last().expect("checked non-empty"))?;
        Ok(Self { primes, cfg })
    }

    /// Seed made of the first `m` primes.
    pub fn first(m: usize, cfg: EvalConfig) -> Result<Self> {
        if m == 0 {
            return Err(Error::SeedGap("empty prime list".into()));
        }
        let primes: Vec<u64> = small_primes()
            .get(..m)
            .ok_or(Error::OutOfRange {
                value: m as u64,
                max: small_primes().len() as u64,
            })?
            .to_vec();
        Self::new(primes, cfg)
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn m(&self) -> usize {
        self.primes.len()
    }

    /// `p_m`, the largest seed prime.
    pub fn frontier(&self) -> u64 {
        *self.primes.last().expect("non-empty by construction")
    }

    pub fn cfg(&self) -> &EvalConfig {
        &self.cfg
    }

    pub fn value(&self, x: f64) -> Result<f64> {
        superpose_float(&self.primes, x, &self.cfg)
    }

    /// Samples `ω_m` on the closed grid; CSV column `omega_m`.
    pub fn profile(&self, x_min: f64, x_max: f64, step: f64) -> Result<IntensityProfile> {
        let xs = grid(x_min, x_max, step)?;
        let values = xs
            .iter()
            .map(|&x| self.value(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntensityProfile::new("omega_m", xs, values))
    }
}

/// Incoherent superposition `Σ_i I_{p_i}(x)` of arbitrary slit sets.
pub fn superpose_float(sizes: &[u64], x: f64, cfg: &EvalConfig) -> Result<f64> {
    sizes
        .iter()
        .map(|&p| Kernel::new(p)?.float(x, cfg))
        .sum()
}

pub fn omega_m_float(sum: &OmegaPartialSum, x: f64) -> Result<f64> {
    sum.value(x)
}

/// Number of listed primes dividing `n`; `n = 0` gives `m`.
pub fn omega_m_exact(primes: &[u64], n: i64) -> Result<u32> {
    primes
        .iter()
        .map(|&p| Ok(u32::from(Kernel::new(p)?.exact(n))))
        .sum()
}

fn check_series_arg(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    if n > MAX_SERIES_ARG {
        return Err(Error::OutOfRange {
            value: n,
            max: MAX_SERIES_ARG,
        });
    }
    Ok(())
}

/// `Σ_{j≥1, p^j ≤ n} I_{p^j}(n)` for a `p` already known to be prime.
fn alpha_terms(p: u64, n: u64) -> u32 {
    let mut total = 0;
    let mut power = p;
    while power <= n {
        total += u32::from(Kernel::of(power).exact(n));
        match power.checked_mul(p) {
            Some(next) => power = next,
            None => break,
        }
    }
    total
}

/// Primes with a nonzero term in the `ω(n)` series, each with its `α_p(n)`.
///
/// Terms for `p ≤ √n` are evaluated one by one. Among primes in `(√n, n]` at
/// most one term can be nonzero, and it sits at the cofactor left after
/// dividing out `p^α_p(n)` for every small `p`, so it is evaluated there
/// directly instead of enumerating the whole range.
fn series_terms(n: u64) -> Vec<(u64, u32)> {
    let mut terms = Vec::new();
    let mut cofactor = n;
    for &p in small_primes().iter().take_while(|&&p| p <= n / p) {
        if Kernel::of(p).exact(n) == 1 {
            let alpha = alpha_terms(p, n);
            cofactor /= p.pow(alpha);
            terms.push((p, alpha));
        }
    }
    if cofactor > 1 && Kernel::of(cofactor).exact(n) == 1 {
        terms.push((cofactor, alpha_terms(cofactor, n)));
    }
    terms
}

/// `ω(n)` from the interference series.
pub fn omega_series(n: u64) -> Result<u32> {
    check_series_arg(n)?;
    Ok(series_terms(n).len() as u32)
}

/// `ω(n)` summed term by term over every prime `p ≤ n`. Linear in `n`; used
/// to cross-check [`omega_series`] on small arguments.
pub fn omega_series_full(n: u64) -> Result<u32> {
    check_series_arg(n)?;
    if n == 1 {
        return Ok(0);
    }
    let primes = eratosthenes(n)?;
    Ok(primes
        .primes()
        .iter()
        .map(|&p| u32::from(Kernel::of(p).exact(n)))
        .sum())
}

/// `ω(n)` for every `n ≤ limit` at once (index 0 is unused and left at 0).
/// Each prime's indicator is added along its multiples, which are exactly
/// the points where that term of the series is nonzero.
pub fn omega_series_table(limit: u64) -> Result<Vec<u32>> {
    check_series_arg(limit)?;
    let mut table = vec![0u32; limit as usize + 1];
    if limit < 2 {
        return Ok(table);
    }
    for &p in eratosthenes(limit)?.primes() {
        for slot in table.iter_mut().step_by(p as usize).skip(1) {
            *slot += 1;
        }
    }
    Ok(table)
}

/// `α_p(n)`, the exponent of the prime `p` in `n`.
pub fn alpha_series(p: u64, n: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    check_series_arg(n)?;
    Ok(alpha_terms(p, n))
}

/// `Ω(n)` as the double series over primes dividing `n` and their powers.
pub fn big_omega_series(n: u64) -> Result<u32> {
    check_series_arg(n)?;
    Ok(series_terms(n).iter().map(|&(_, a)| a).sum())
}

/// The full decomposition read off the series.
pub fn factorize_series(n: u64) -> Result<Factorization> {
    check_series_arg(n)?;
    Factorization::from_parts(n, series_terms(n))
}

/// Result of comparing `Σ_{n≤N} 2^ω(n)/n^s` against `ζ(s)²/ζ(2s)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaCheckReport {
    pub s: f64,
    pub n_terms: u64,
    pub partial_sum: f64,
    pub target: f64,
    pub gap: f64,
}

impl ZetaCheckReport {
    pub const CSV_HEADER: &'static str = "s,n_terms,partial_sum,target,gap";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            g17(self.s),
            self.n_terms,
            g17(self.partial_sum),
            g17(self.target),
            g17(self.gap)
        )
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{}", Self::CSV_HEADER)?;
        writeln!(w, "{}", self.csv_row())
    }
}

const ZETA_DIRECT_TERMS: u64 = 100;

/// Riemann zeta for real `s > 1`: direct sum of the first 99 terms plus an
/// Euler–Maclaurin tail through the `B_6` correction. The truncation error is
/// below `1e-19` for every `s > 1`.
pub fn zeta(s: f64) -> Result<f64> {
    if !(s.is_finite() && s > 1.0) {
        return Err(Error::DivergentExponent(s));
    }
    let m = ZETA_DIRECT_TERMS as f64;
    let head: f64 = (1..ZETA_DIRECT_TERMS)
        .rev()
        .map(|n| (n as f64).powf(-s))
        .sum();
    let ms = m.powf(-s);
    let tail = m * ms / (s - 1.0) + 0.5 * ms + s * ms / (12.0 * m)
        - s * (s + 1.0) * (s + 2.0) * ms / (720.0 * m.powi(3))
        + s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * ms / (30240.0 * m.powi(5));
    Ok(head + tail)
}

const SUM_BLOCK: usize = 4096;

/// Pairwise sum whose tree equals the one over the input zero-padded to a
/// power of two, so appending positive terms can never decrease the result.
fn pairwise(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        len => {
            // largest power of two strictly below len
            let split = 1usize << (usize::BITS - 1 - (len - 1).leading_zeros());
            pairwise(&values[..split]) + pairwise(&values[split..])
        }
    }
}

/// Checks `Σ_{n≥1} 2^ω(n)/n^s = ζ(s)²/ζ(2s)` with `n_terms` terms.
///
/// `ω(n)` comes from the interference series. Terms are summed in fixed
/// blocks of 4096 (in parallel), and the block sums are combined pairwise, so
/// the result is bit-reproducible regardless of thread count.
pub fn zeta_identity_check(s: f64, n_terms: u64) -> Result<ZetaCheckReport> {
    if !(s.is_finite() && s > 1.0) {
        return Err(Error::DivergentExponent(s));
    }
    if n_terms == 0 {
        return Err(Error::ZeroInput);
    }
    let omega = omega_series_table(n_terms)?;
    let blocks: Vec<f64> = omega[1..]
        .par_chunks(SUM_BLOCK)
        .enumerate()
        .map(|(b, chunk)| {
            let first = (b * SUM_BLOCK + 1) as u64;
            chunk
                .iter()
                .zip(first..)
                .map(|(&w, n)| (1u64 << w) as f64 / (n as f64).powf(s))
                .sum::<f64>()
        })
        .collect();
    let partial_sum = pairwise(&blocks);
    let zs = zeta(s)?;
    let target = zs * zs / zeta(2.0 * s)?;
    Ok(ZetaCheckReport {
        s,
        n_terms,
        partial_sum,
        target,
        gap: (partial_sum - target).abs(),
    })
}
