//! Classical ground truth: trial-division factorization and the sieve of
//! Eratosthenes. Nothing here touches the interference kernels.

use std::fmt;
use std::io::{self, Write};

use crate::error::{Error, Result};

/// `n` together with its prime-power decomposition, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from parts, checking every invariant.
    pub fn from_parts(n: u64, factors: Vec<(u64, u32)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroInput);
        }
        let mut product: u64 = 1;
        let mut prev = 1;
        for &(p, e) in &factors {
            if p <= prev || e == 0 || !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            prev = p;
            for _ in 0..e {
                product = product
                    .checked_mul(p)
                    .ok_or(Error::Overflow("factorization product"))?;
            }
        }
        if product != n {
            return Err(Error::InvalidConfig(format!(
                "factors multiply to {product}, not {n}"
            )));
        }
        Ok(Self { n, factors })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Exponent of `p` (0 when `p` does not divide `n`).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| *q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn omega(&self) -> u32 {
        self.factors.len() as u32
    }

    pub fn big_omega(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    /// Rows `n,prime,exponent`, header included.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "n,prime,exponent")?;
        for &(p, e) in &self.factors {
            writeln!(w, "{},{p},{e}", self.n)?;
        }
        Ok(())
    }

    /// Summary row `n,omega,big_omega` without header.
    pub fn summary_row(&self) -> String {
        format!("{},{},{}", self.n, self.omega(), self.big_omega())
    }
}

impl fmt::Display for Factorization {
    /// `12 = 2^2 * 3^1`; `1 = 1` for the empty product.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ", self.n)?;
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "{p}^{e}")?;
        }
        Ok(())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Factors `n` by trial division up to √n.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d <= rest / d {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn omega_oracle(n: u64) -> Result<u32> {
    Ok(factorize(n)?.omega())
}

pub fn big_omega_oracle(n: u64) -> Result<u32> {
    Ok(factorize(n)?.big_omega())
}

/// All primes up to `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    bound: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn into_primes(self) -> Vec<u64> {
        self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Membership for `n ≤ bound`; `None` outside the table's range.
    pub fn contains(&self, n: u64) -> Option<bool> {
        (n <= self.bound).then(|| self.primes.binary_search(&n).is_ok())
    }
}

/// Classical sieve: cross off multiples of each prime `p ≤ √bound`, starting at `p²`.
pub fn eratosthenes(bound: u64) -> Result<PrimeTable> {
    if bound < 2 {
        return Err(Error::BoundTooSmall(bound));
    }
    let len = usize::try_from(bound)
        .ok()
        .and_then(|b| b.checked_add(1))
        .ok_or(Error::Overflow("sieve bound"))?;
    let mut composite = vec![false; len];
    let mut p = 2usize;
    while p * p < len {
        if !composite[p] {
            for m in (p * p..len).step_by(p) {
                composite[m] = true;
            }
        }
        p += 1;
    }
    let primes = (2..len)
        .filter(|&i| !composite[i])
        .map(|i| i as u64)
        .collect();
    Ok(PrimeTable { bound, primes })
}
