use crate::error::{Error, Result};

/// Tolerances governing floating-point evaluation of the interference kernels.
///
/// All three fields are in units of the (rescaled) coordinate `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    singularity_window: f64,
    zero_threshold: f64,
    integer_snap: f64,
}

impl EvalConfig {
    pub const DEFAULT_SINGULARITY_WINDOW: f64 = 1e-6;
    pub const DEFAULT_ZERO_THRESHOLD: f64 = 1e-9;
    pub const DEFAULT_INTEGER_SNAP: f64 = 1e-9;

    pub fn new(singularity_window: f64, zero_threshold: f64, integer_snap: f64) -> Result<Self> {
        for (name, v) in [
            ("singularity_window", singularity_window),
            ("zero_threshold", zero_threshold),
            ("integer_snap", integer_snap),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be finite and strictly positive, got {v}"
                )));
            }
        }
        Ok(Self {
            singularity_window,
            zero_threshold,
            integer_snap,
        })
    }

    pub fn singularity_window(&self) -> f64 {
        self.singularity_window
    }

    pub fn zero_threshold(&self) -> f64 {
        self.zero_threshold
    }

    pub fn integer_snap(&self) -> f64 {
        self.integer_snap
    }

    /// Checks that a single unit term `1/p²` for the largest prime in use can
    /// never be mistaken for zero.
    pub fn check_for_largest(&self, p_max: u64) -> Result<()> {
        let unit = 1.0 / (p_max as f64 * p_max as f64);
        if self.zero_threshold < unit {
            Ok(())
        } else {
            Err(Error::InvalidConfig(format!(
                "zero_threshold {} must be below 1/p^2 = {unit:e} for p = {p_max}",
                self.zero_threshold
            )))
        }
    }
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            singularity_window: Self::DEFAULT_SINGULARITY_WINDOW,
            zero_threshold: Self::DEFAULT_ZERO_THRESHOLD,
            integer_snap: Self::DEFAULT_INTEGER_SNAP,
        }
    }
}
