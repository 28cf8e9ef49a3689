//! Equidistribution diagnostics: star discrepancy, Weyl sums, and exact
//! fixed-point rotation.
//!
//! Fractional parts frac(n·α) are accumulated in an unsigned 128-bit
//! fixed-point fraction, so repeated addition reduces mod 1 exactly and the
//! sign of cos(2π·frac(nα)) near quarter-points is decided by exact integer
//! comparison rather than drifting floating-point arithmetic. The input α is
//! rounded to fixed point once; that single rounding is the only
//! approximation in the whole orbit.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A fraction in [0, 1) stored as value/2¹²⁸.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FixedPointFraction(u128);

impl FixedPointFraction {
    pub const ZERO: FixedPointFraction = FixedPointFraction(0);
    pub const QUARTER: FixedPointFraction = FixedPointFraction(1u128 << 126);
    pub const HALF: FixedPointFraction = FixedPointFraction(1u128 << 127);
    pub const THREE_QUARTERS: FixedPointFraction = FixedPointFraction(3u128 << 126);

    pub fn from_raw(raw: u128) -> Self {
        FixedPointFraction(raw)
    }

    pub fn raw(self) -> u128 {
        self.0
    }

    /// Rounds the fractional part of a float to fixed point. The conversion
    /// is exact for the f64 value itself; the represented real is therefore
    /// within one f64 ulp (≤ 2⁻⁵³) of the caller's number.
    pub fn from_f64(x: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "cannot convert non-finite value {x} to a fraction"
            )));
        }
        let mut f = x.rem_euclid(1.0);
        if f >= 1.0 {
            f = 0.0;
        }
        const TWO64: f64 = 18446744073709551616.0;
        let s = f * TWO64; // power-of-two scaling, exact
        let hi = s.floor();
        let lo = ((s - hi) * TWO64).floor();
        Ok(FixedPointFraction(((hi as u128) << 64) | lo as u128))
    }

    /// Exact fraction num/den reduced mod 1, with error below 2⁻¹²⁸.
    pub fn from_ratio(num: u128, den: u128) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidParameter("denominator must be nonzero".into()));
        }
        let num = num % den;
        let scaled = (BigUint::from(num) << 128) / BigUint::from(den);
        Ok(FixedPointFraction(biguint_low128(&scaled)))
    }

    /// frac(√n) to full 128-bit precision via an integer square root.
    pub fn from_sqrt(n: u64) -> Self {
        let s = (BigUint::from(n) << 256u32).sqrt();
        FixedPointFraction(biguint_low128(&s))
    }

    /// (√5 − 1)/2, the golden rotation number.
    pub fn golden() -> Self {
        let s5 = (BigUint::from(5u32) << 256u32).sqrt();
        let g = (s5 - (BigUint::from(1u32) << 128)) >> 1;
        FixedPointFraction(biguint_low128(&g))
    }

    /// Exact division of the fraction by a positive integer.
    pub fn div_int(self, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("division by zero".into()));
        }
        Ok(FixedPointFraction(self.0 / k as u128))
    }

    /// frac(self + other), exact.
    pub fn wrapping_add(self, other: Self) -> Self {
        FixedPointFraction(self.0.wrapping_add(other.0))
    }

    /// frac(k · self), exact. This is what makes orbit positions directly
    /// computable per block, without replaying the additions.
    pub fn wrapping_mul_int(self, k: u64) -> Self {
        FixedPointFraction(self.0.wrapping_mul(k as u128))
    }

    /// Top 53 bits as a float; always strictly below 1.0.
    pub fn to_f64(self) -> f64 {
        const TWO53: f64 = 9007199254740992.0;
        ((self.0 >> 75) as u64) as f64 / TWO53
    }
}

fn biguint_low128(v: &BigUint) -> u128 {
    let digits = v.to_u64_digits();
    let lo = digits.first().copied().unwrap_or(0) as u128;
    let hi = digits.get(1).copied().unwrap_or(0) as u128;
    lo | (hi << 64)
}

/// Infinite stream of frac(n·α) for n = 0, 1, 2, … by exact repeated
/// addition in fixed point.
#[derive(Debug, Clone)]
pub struct FracSequence {
    acc: FixedPointFraction,
    step: FixedPointFraction,
}

impl FracSequence {
    pub fn new(alpha: FixedPointFraction) -> Self {
        FracSequence {
            acc: FixedPointFraction::ZERO,
            step: alpha,
        }
    }

    /// Repositions to index n in O(1).
    pub fn starting_at(alpha: FixedPointFraction, n: u64) -> Self {
        FracSequence {
            acc: alpha.wrapping_mul_int(n),
            step: alpha,
        }
    }

    /// Jumps `count` indices forward in O(1); exact because frac(n·α) is a
    /// wrapping multiple of the step.
    pub fn advance_by(&mut self, count: u64) {
        self.acc = self.acc.wrapping_add(self.step.wrapping_mul_int(count));
    }
}

impl Iterator for FracSequence {
    type Item = FixedPointFraction;

    fn next(&mut self) -> Option<FixedPointFraction> {
        let out = self.acc;
        self.acc = self.acc.wrapping_add(self.step);
        Some(out)
    }
}

/// First `n` fractional parts of the rotation by `alpha`, as floats.
pub fn frac_sequence(alpha: FixedPointFraction, n: u64) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::EmptyCount);
    }
    Ok(FracSequence::new(alpha)
        .take(n as usize)
        .map(FixedPointFraction::to_f64)
        .collect())
}

/// Star discrepancy D*_N of a finite point set in [0, 1): the sorted-points
/// evaluation max_i max(i/N − x_(i), x_(i) − (i−1)/N).
pub fn star_discrepancy(points: &[f64]) -> Result<f64> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut sorted = points.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sorted.len() as f64;
    let mut d = 0.0f64;
    for (i, &x) in sorted.iter().enumerate() {
        let up = (i + 1) as f64 / n - x;
        let down = x - i as f64 / n;
        d = d.max(up).max(down);
    }
    Ok(d)
}

/// Normalized Weyl sum (1/N)·|Σ_n e^{2πik·xₙ}|. Values near zero certify
/// cancellation at frequency k; the constant sequence gives 1.
pub fn weyl_sum(points: &[f64], k: i64) -> Result<f64> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if k == 0 {
        return Err(Error::ZeroFrequency);
    }
    let mut re = 0.0f64;
    let mut im = 0.0f64;
    for &x in points {
        let angle = std::f64::consts::TAU * k as f64 * x;
        re += angle.cos();
        im += angle.sin();
    }
    Ok(re.hypot(im) / points.len() as f64)
}

/// A final discrepancy at or above this level marks the subsequence as not
/// equidistributing (degenerate orbits cluster all mass near one point).
pub const EQUIDISTRIBUTION_FAILURE_LEVEL: f64 = 0.5;

/// Diagnostics for one parity subsequence of eigenvalue frequencies.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParityDiagnostics {
    /// Star discrepancies at power-of-two prefixes plus the full length.
    pub checkpoints: Vec<(usize, f64)>,
    /// Normalized Weyl sums at the full length for k = 1, 2, 3.
    pub weyl: Vec<(i64, f64)>,
    pub final_discrepancy: f64,
    /// Eigenvalues skipped because they were not positive.
    pub skipped_nonpositive: usize,
    pub equidistribution_failure: bool,
}

/// Equidistribution report for the two parity subsequences {√λ·x mod 1}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParityEquidistributionReport {
    pub x: f64,
    pub even: ParityDiagnostics,
    pub odd: ParityDiagnostics,
}

/// Probes whether the even- and odd-index eigenvalue frequencies scaled by a
/// fixed point x equidistribute mod 1. x = 0 is rejected: every fractional
/// part would be zero regardless of the spectrum.
pub fn parity_equidistribution_report(
    even_lambdas: &[f64],
    odd_lambdas: &[f64],
    x: f64,
) -> Result<ParityEquidistributionReport> {
    if x == 0.0 || !x.is_finite() {
        return Err(Error::InvalidParameter(
            "evaluation point x must be finite and nonzero".into(),
        ));
    }
    Ok(ParityEquidistributionReport {
        x,
        even: parity_diagnostics(even_lambdas, x)?,
        odd: parity_diagnostics(odd_lambdas, x)?,
    })
}

fn parity_diagnostics(lambdas: &[f64], x: f64) -> Result<ParityDiagnostics> {
    let mut points: Vec<f64> = Vec::with_capacity(lambdas.len());
    let mut skipped = 0usize;
    for &l in lambdas {
        if l > 0.0 {
            let v = (l.sqrt() * x.abs()).fract();
            points.push(if v < 0.0 { v + 1.0 } else { v });
        } else {
            skipped += 1;
        }
    }
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut checkpoints = Vec::new();
    let mut n = 2usize;
    while n < points.len() {
        checkpoints.push((n, star_discrepancy(&points[..n])?));
        n *= 2;
    }
    let final_d = star_discrepancy(&points)?;
    checkpoints.push((points.len(), final_d));
    let weyl = [1i64, 2, 3]
        .iter()
        .map(|&k| weyl_sum(&points, k).map(|w| (k, w)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ParityDiagnostics {
        checkpoints,
        weyl,
        final_discrepancy: final_d,
        skipped_nonpositive: skipped,
        equidistribution_failure: final_d >= EQUIDISTRIBUTION_FAILURE_LEVEL,
    })
}
