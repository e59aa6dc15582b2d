//! The single-set interference kernel.
//!
//! In rescaled coordinates a set of `p` equally spaced coherent narrow slits
//! has normalized intensity
//!
//! ```text
//! I_p(x) = sin²(πx) / (p² sin²(πx/p))
//! ```
//!
//! which is 1 at every multiple of `p` and 0 at every other integer. Two
//! evaluation paths are provided: [`intensity_exact`] works on integers by
//! divisibility, [`intensity_float`] handles real `x` and falls back to the
//! direct phasor sum inside a window around the removable singularities.

use std::f64::consts::PI;
use std::io::{self, Write};

use crate::config::EvalConfig;
use crate::csvfmt::g17;
use crate::error::{Error, Result};

/// Values this close above 1 are rounding noise and get clamped.
const OVERSHOOT_CLAMP: f64 = 1e-12;

/// A set of `p ≥ 2` coherent slits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Kernel {
    p: u64,
}

impl Kernel {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidSlitCount(p));
        }
        Ok(Self { p })
    }

    /// For callers that already guarantee `p ≥ 2`.
    pub(crate) fn of(p: u64) -> Self {
        debug_assert!(p >= 2);
        Self { p }
    }

    pub fn slits(&self) -> u64 {
        self.p
    }

    /// Divisibility indicator: 1 when `p | n`, including `n = 0`.
    pub fn exact(&self, n: impl Into<i128>) -> u8 {
        u8::from(n.into().rem_euclid(self.p as i128) == 0)
    }

    pub fn float(&self, x: f64, cfg: &EvalConfig) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::NonFinite(x));
        }
        let t = self.reduce(x);
        let pf = self.p as f64;
        let v = if t.abs() < pf * cfg.singularity_window() {
            self.phasor_reduced(t)
        } else {
            self.ratio_reduced(t)
        };
        Ok(if v > 1.0 && v - 1.0 < OVERSHOOT_CLAMP { 1.0 } else { v })
    }

    /// Closed-form ratio without any singularity handling. NaN at multiples of `p`.
    pub fn ratio_form(&self, x: f64) -> f64 {
        self.ratio_reduced(self.reduce(x))
    }

    /// `(1/p²)·|Σ_{k<p} exp(2πikx/p)|²`, evaluated term by term.
    pub fn phasor_form(&self, x: f64) -> f64 {
        self.phasor_reduced(self.reduce(x))
    }

    /// Maps `x` to the representative `t ≡ x (mod p)` in `(-p/2, p/2]`.
    /// `rem_euclid` and the single shift are both exact in binary floating point.
    fn reduce(&self, x: f64) -> f64 {
        let pf = self.p as f64;
        let t = x.rem_euclid(pf);
        if t > 0.5 * pf {
            t - pf
        } else {
            t
        }
    }

    fn ratio_reduced(&self, t: f64) -> f64 {
        let pf = self.p as f64;
        // sin²(πt) has period 1.
        let u = t - t.round();
        let num = (PI * u).sin().powi(2);
        let den = (PI * t / pf).sin().powi(2);
        num / (pf * pf * den)
    }

    fn phasor_reduced(&self, t: f64) -> f64 {
        let pf = self.p as f64;
        let (mut re, mut im) = (0.0f64, 0.0f64);
        for k in 0..self.p {
            let phase = 2.0 * PI * (k as f64 * t / pf);
            re += phase.cos();
            im += phase.sin();
        }
        (re * re + im * im) / (pf * pf)
    }
}

pub fn intensity_exact(p: u64, n: impl Into<i128>) -> Result<u8> {
    Ok(Kernel::new(p)?.exact(n))
}

pub fn intensity_float(p: u64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Kernel::new(p)?.float(x, cfg)
}

/// Closed grid `x_min, x_min + step, ...` ending exactly at `x_max`.
pub fn grid(x_min: f64, x_max: f64, step: f64) -> Result<Vec<f64>> {
    let bad = || Error::InvalidRange {
        lo: x_min,
        hi: x_max,
        step,
    };
    if !(x_min.is_finite() && x_max.is_finite() && step.is_finite()) || x_min >= x_max || step <= 0.0
    {
        return Err(bad());
    }
    let intervals = ((x_max - x_min) / step - 1e-9).ceil();
    if intervals > 1e9 {
        return Err(bad());
    }
    let intervals = intervals.max(1.0) as u64;
    let mut xs: Vec<f64> = (0..intervals).map(|i| x_min + i as f64 * step).collect();
    xs.push(x_max);
    Ok(xs)
}

/// A sampled curve ready for CSV emission.
#[derive(Debug, Clone, PartialEq)]
pub struct IntensityProfile {
    value_column: String,
    xs: Vec<f64>,
    values: Vec<f64>,
}

impl IntensityProfile {
    pub fn new(value_column: impl Into<String>, xs: Vec<f64>, values: Vec<f64>) -> Self {
        assert_eq!(xs.len(), values.len(), "profile columns differ in length");
        Self {
            value_column: value_column.into(),
            xs,
            values,
        }
    }

    pub fn value_column(&self) -> &str {
        &self.value_column
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.xs.iter().copied().zip(self.values.iter().copied())
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "x,{}", self.value_column)?;
        for (x, v) in self.points() {
            writeln!(w, "{},{}", g17(x), g17(v))?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV is ASCII")
    }
}

pub fn profile(p: u64, x_min: f64, x_max: f64, step: f64, cfg: &EvalConfig) -> Result<IntensityProfile> {
    let kernel = Kernel::new(p)?;
    let xs = grid(x_min, x_max, step)?;
    let values = xs
        .iter()
        .map(|&x| kernel.float(x, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntensityProfile::new("intensity", xs, values))
}
