//! Evaluation context: precision, truncation and quadrature configuration.
//!
//! Every evaluator takes an [`EvalContext`] and produces results correct to
//! `precision_digits` significant decimal digits. Internally all arithmetic
//! runs at `precision_digits + guard_digits` digits; public results are
//! rounded back to the requested precision.

use crate::error::{Error, Result};
use rug::Float;

const LOG2_10: f64 = 3.321928094887362;

/// Immutable evaluation configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalContext {
    precision_digits: u32,
    guard_digits: u32,
    max_terms: usize,
    quad_level: u32,
    seed: u64,
}

impl EvalContext {
    /// Context with `precision_digits` significant digits and defaults for
    /// everything else (15 guard digits, 10^6 term cap, quadrature level 10,
    /// seed 42).
    pub fn new(precision_digits: u32) -> Result<Self> {
        Self::with_options(precision_digits, 15, 1_000_000, 10, 42)
    }

    pub fn with_options(
        precision_digits: u32,
        guard_digits: u32,
        max_terms: usize,
        quad_level: u32,
        seed: u64,
    ) -> Result<Self> {
        if precision_digits < 15 {
            return Err(Error::Domain(format!(
                "precision_digits must be >= 15, got {precision_digits}"
            )));
        }
        if guard_digits < 5 {
            return Err(Error::Domain(format!(
                "guard_digits must be >= 5, got {guard_digits}"
            )));
        }
        if max_terms < 1_000 {
            return Err(Error::Domain(format!(
                "max_terms must be >= 1000, got {max_terms}"
            )));
        }
        Ok(Self {
            precision_digits,
            guard_digits,
            max_terms,
            quad_level,
            seed,
        })
    }

    pub fn precision_digits(&self) -> u32 {
        self.precision_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn quad_level(&self) -> u32 {
        self.quad_level
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Same context with a different seed.
    pub fn with_seed(&self, seed: u64) -> Self {
        let mut c = self.clone();
        c.seed = seed;
        c
    }

    /// Working decimal digits: requested plus guard.
    pub fn working_digits(&self) -> u32 {
        self.precision_digits + self.guard_digits
    }

    /// Working precision in bits.
    pub fn working_bits(&self) -> u32 {
        (self.working_digits() as f64 * LOG2_10).ceil() as u32 + 8
    }

    /// Bits corresponding to the requested (public) precision.
    pub fn output_bits(&self) -> u32 {
        (self.precision_digits as f64 * LOG2_10).ceil() as u32 + 4
    }

    /// Shift threshold before asymptotic (Euler-Maclaurin / Stirling) series
    /// are trusted: |a + N| must exceed this.
    pub fn shift_threshold(&self) -> f64 {
        0.9 * self.working_digits() as f64
    }

    /// Absolute tolerance at working precision: 10^-(working_digits + 2).
    pub fn eps_working(&self) -> Float {
        use rug::ops::Pow;
        let wb = self.working_bits();
        Float::with_val(wb, 10f64).pow(-(self.working_digits() as i32 + 2))
    }

    /// A fresh working-precision real from anything rug can assign.
    pub fn real<T>(&self, v: T) -> Float
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.working_bits(), v)
    }

    /// Round a working-precision real down to the requested output precision.
    pub fn round_real(&self, mut x: Float) -> Result<Float> {
        if !x.is_finite() {
            return Err(Error::Convergence(
                "non-finite result at working precision".into(),
            ));
        }
        x.set_prec(self.output_bits());
        Ok(x)
    }
}
