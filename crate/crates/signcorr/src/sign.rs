//! Three-valued signs with explicit zero-hits.
//!
//! A zero-hit marks an evaluation that is numerically indistinguishable from
//! zero at the working tolerance. Zero-hits are counted separately everywhere
//! so that downstream statistics can bound their influence.

use serde::{Deserialize, Serialize};

/// Relative tolerance used to declare a recurrence value a zero-hit.
pub const RELATIVE_ZERO_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    /// Strict sign of a float. Only exact `0.0` maps to `Zero`.
    pub fn of(value: f64) -> Sign {
        if value > 0.0 {
            Sign::Plus
        } else if value < 0.0 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    /// Sign with zero-hit detection relative to a running magnitude `scale`.
    pub fn of_scaled(value: f64, scale: f64) -> Sign {
        if value.abs() <= RELATIVE_ZERO_TOL * scale {
            Sign::Zero
        } else if value > 0.0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Zero => 0,
            Sign::Plus => 1,
        }
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.as_i8())
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }

    /// Parity flip: negate when `n` is odd.
    pub fn parity_flipped(self, n: u64) -> Sign {
        if n % 2 == 1 {
            self.flipped()
        } else {
            self
        }
    }
}
