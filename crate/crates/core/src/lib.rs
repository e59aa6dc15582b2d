//! Prime-factorization functions written as superpositions of multi-slit
//! interference intensities, with classical oracles to check them against.
//!
//! A set of `p` coherent narrow slits, in rescaled coordinates, has intensity
//! `I_p(x) = sin²(πx) / (p² sin²(πx/p))`, which at integers is exactly the
//! indicator of `p | n`. Summing such sets incoherently gives:
//!
//! * [`series::omega_m_float`] / [`series::omega_m_exact`]: the partial sum
//!   over the first `m` primes, whose zeros on `(p_m, p_m²]` are the primes there;
//! * [`series::omega_series`]: the number of distinct prime factors;
//! * [`series::alpha_series`] and [`series::big_omega_series`]: exponents
//!   and the number of prime factors with multiplicity;
//! * [`sieve::sieve_to`]: a prime sieve driven by the zeros of `ω_m`.
//!
//! [`oracle`] holds trial division and the sieve of Eratosthenes, and
//! [`geometry`] models the physical slit layout.

pub mod config;
pub mod csvfmt;
pub mod error;
pub mod geometry;
pub mod intensity;
pub mod oracle;
pub mod series;
pub mod sieve;

pub use config::EvalConfig;
pub use error::{Error, Result};
pub use geometry::{
    build_arrangement, coherent_intensity, incoherent_intensity, overlaps, Fraction, Overlap,
    Placement, SlitArrangement,
};
pub use intensity::{intensity_exact, intensity_float, profile, IntensityProfile, Kernel};
pub use oracle::{
    big_omega_oracle, eratosthenes, factorize, is_prime, omega_oracle, Factorization, PrimeTable,
};
pub use series::{
    alpha_series, big_omega_series, omega_m_exact, omega_m_float, omega_series,
    zeta_identity_check, OmegaPartialSum, ZetaCheckReport,
};
pub use sieve::{locate_zeros_float, sieve_to, SieveState};
