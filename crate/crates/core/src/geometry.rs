//! Slit arrangements: `m` sets of `p_i` narrow sources with spacing `d/p_i`
//! on a segment of length `d`.
//!
//! Source positions are kept as exact fractions of `d`, so coincidences
//! between sets are found by integer cross-multiplication.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::io::{self, Write};

use crate::config::EvalConfig;
use crate::csvfmt::g17;
use crate::error::{Error, Result};
use crate::oracle::is_prime;
use crate::series::superpose_float;

/// Where the sources of a set sit inside the segment `[0, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Placement {
    /// Source `k` at `(k + 1/2)·d/p`, symmetric about the midpoint `d/2`.
    #[default]
    Centered,
    /// Source `k` at `k·d/p`, first source at 0.
    LeftAnchored,
}

/// A non-negative fraction `num/den` of the segment length, in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u64,
    den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = gcd(num, den);
        Self {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Debug, Clone, PartialEq)]
pub struct SlitSet {
    prime: u64,
    positions: Vec<Fraction>,
}

impl SlitSet {
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Source coordinates as fractions of `d`, increasing.
    pub fn positions(&self) -> &[Fraction] {
        &self.positions
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SlitArrangement {
    d: f64,
    placement: Placement,
    sets: Vec<SlitSet>,
}

/// A coordinate occupied by sources from two or more sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overlap {
    pub position: Fraction,
    /// Indices into [`SlitArrangement::sets`], increasing.
    pub sets: Vec<usize>,
}

/// Builds one set per prime (sorted ascending).
pub fn build_arrangement(d: f64, primes: &[u64], placement: Placement) -> Result<SlitArrangement> {
    if !(d.is_finite() && d > 0.0) {
        return Err(Error::InvalidLength(d));
    }
    if primes.is_empty() {
        return Err(Error::InvalidConfig("arrangement needs at least one slit set".into()));
    }
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicatePrime(w[0]));
        }
    }
    if let Some(&bad) = sorted.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::NotPrime(bad));
    }
    let sets = sorted
        .into_iter()
        .map(|p| {
            let positions = (0..p)
                .map(|k| match placement {
                    Placement::Centered => Fraction::new(2 * k + 1, 2 * p),
                    Placement::LeftAnchored => Fraction::new(k, p),
                })
                .collect();
            SlitSet { prime: p, positions }
        })
        .collect();
    Ok(SlitArrangement { d, placement, sets })
}

impl SlitArrangement {
    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn placement(&self) -> Placement {
        self.placement
    }

    pub fn sets(&self) -> &[SlitSet] {
        &self.sets
    }

    pub fn primes(&self) -> Vec<u64> {
        self.sets.iter().map(|s| s.prime).collect()
    }

    pub fn source_count(&self) -> u64 {
        self.sets.iter().map(|s| s.prime).sum()
    }

    /// Same arrangement with a different segment length.
    pub fn with_length(&self, d: f64) -> Result<Self> {
        build_arrangement(d, &self.primes(), self.placement)
    }

    /// Dump as `set_index,prime,source_index,position,position_float`, where
    /// `position` is the exact fraction of `d` and `position_float` the
    /// coordinate itself.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "set_index,prime,source_index,position,position_float")?;
        for (i, set) in self.sets.iter().enumerate() {
            for (k, pos) in set.positions.iter().enumerate() {
                writeln!(w, "{i},{},{k},{pos},{}", set.prime, g17(self.d * pos.to_f64()))?;
            }
        }
        Ok(())
    }
}

/// Every coordinate shared by at least two sets, in increasing order.
pub fn overlaps(arr: &SlitArrangement) -> Vec<Overlap> {
    let mut by_position: BTreeMap<Fraction, Vec<usize>> = BTreeMap::new();
    for (i, set) in arr.sets.iter().enumerate() {
        for &pos in &set.positions {
            by_position.entry(pos).or_default().push(i);
        }
    }
    by_position
        .into_iter()
        .filter(|(_, sets)| sets.len() >= 2)
        .map(|(position, sets)| Overlap { position, sets })
        .collect()
}

pub fn write_overlaps_csv<W: Write>(arr: &SlitArrangement, found: &[Overlap], mut w: W) -> io::Result<()> {
    writeln!(w, "position,position_float,set_indices,primes")?;
    for o in found {
        let idx: Vec<String> = o.sets.iter().map(usize::to_string).collect();
        let primes: Vec<String> = o.sets.iter().map(|&i| arr.sets[i].prime.to_string()).collect();
        writeln!(
            w,
            "{},{},{},{}",
            o.position,
            g17(arr.d * o.position.to_f64()),
            idx.join(";"),
            primes.join(";")
        )?;
    }
    Ok(())
}

/// Mutually incoherent sets: intensities add.
pub fn incoherent_intensity(arr: &SlitArrangement, x: f64, cfg: &EvalConfig) -> Result<f64> {
    superpose_float(&arr.primes(), x, cfg)
}

/// All sources under one coherent beam: amplitudes add, then square.
///
/// A source at position `q·d` contributes the unit phasor `exp(2πi·x·q)`,
/// `x` being the same rescaled coordinate used by the incoherent kernels.
/// The result is divided by the squared total source count, so it is 1 at
/// `x = 0`.
pub fn coherent_intensity(arr: &SlitArrangement, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite(x));
    }
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for set in &arr.sets {
        for pos in &set.positions {
            let turns = (x * pos.num as f64 / pos.den as f64).rem_euclid(1.0);
            let phase = 2.0 * PI * turns;
            re += phase.cos();
            im += phase.sin();
        }
    }
    let total = arr.source_count() as f64;
    Ok((re * re + im * im) / (total * total))
}
