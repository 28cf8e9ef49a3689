//! Closed-form sign-correlation limits.
//!
//! All predictors reduce to averages of the sign product along closed torus
//! rays. Three model families are covered:
//!
//! * a single-phase cosine family wₙ(x) ≈ φ(x,n)·cos(2π(μₙφ(x) − θ)) with
//!   equidistributed frequencies — [`single_phase_limit`];
//! * eigenfunctions of an even confining potential, which split into the two
//!   phase classes {0, 1/4} — [`parity_split_limit`];
//! * an arbitrary finite mixture of phase classes — [`wkb_family_limit`],
//!   of which the Hermite and Laguerre specializations are
//!   [`hermite_limit`] and [`laguerre_limit`].

use num_integer::gcd;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::torus::{ray_average_closed_form, TorusRay};

/// A reduced fraction p/q with both entries nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRatio {
    p: i64,
    q: i64,
}

impl RationalRatio {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidRatio(format!(
                "numerator and denominator must be nonzero (got {p}/{q})"
            )));
        }
        let g = gcd(p.unsigned_abs(), q.unsigned_abs()) as i64;
        Ok(RationalRatio { p: p / g, q: q / g })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Parses "p/q" with integer entries, or a bare integer "n" as n/1.
    /// Decimal input is rejected: rationality is an input contract, never
    /// inferred from floating-point values.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = |t: &str| Error::InvalidRatio(format!("expected p/q with integers, got {t:?}"));
        if let Some((num, den)) = text.split_once('/') {
            let p: i64 = num.trim().parse().map_err(|_| bad(text))?;
            let q: i64 = den.trim().parse().map_err(|_| bad(text))?;
            RationalRatio::new(p, q)
        } else {
            let p: i64 = text.parse().map_err(|_| bad(text))?;
            RationalRatio::new(p, 1)
        }
    }
}

/// Ratio of two evaluation points: an exact fraction, or declared irrational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioInput {
    Rational(RationalRatio),
    Irrational,
}

impl RatioInput {
    /// Accepts "p/q", a bare integer, or the literal token "irrational".
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim().eq_ignore_ascii_case("irrational") {
            Ok(RatioInput::Irrational)
        } else {
            Ok(RatioInput::Rational(RationalRatio::parse(text)?))
        }
    }
}

/// One phase class of a WKB-type family: an offset θ ∈ [0,1) carrying a
/// fraction of the indices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseClass {
    pub offset: f64,
    pub weight: f64,
}

/// Descriptor of a family wₙ(x) ≈ φ(x,n)·cos(2π(μₙφ(x) − θ_c)) whose phase
/// offset cycles through finitely many classes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WkbFamily {
    phase_classes: Vec<PhaseClass>,
    /// Free-text description of the frequency map x ↦ φ(x).
    pub frequency_map: String,
    /// Whether the amplitude product φ(x,n)·φ(y,n) is positive for all n.
    pub amplitude_positive: bool,
}

impl WkbFamily {
    pub fn new(phase_classes: Vec<PhaseClass>, frequency_map: impl Into<String>) -> Result<Self> {
        if phase_classes.is_empty() {
            return Err(Error::InvalidPhaseClasses("no phase classes".into()));
        }
        let mut total = 0.0;
        for c in &phase_classes {
            if !(c.weight > 0.0) {
                return Err(Error::InvalidPhaseClasses(format!(
                    "weights must be positive (got {})",
                    c.weight
                )));
            }
            if !c.offset.is_finite() {
                return Err(Error::InvalidPhaseClasses("non-finite offset".into()));
            }
            total += c.weight;
        }
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidPhaseClasses(format!(
                "weights must sum to 1 (got {total})"
            )));
        }
        Ok(WkbFamily {
            phase_classes,
            frequency_map: frequency_map.into(),
            amplitude_positive: true,
        })
    }

    /// Family with one global phase offset.
    pub fn single_phase(theta: f64) -> Self {
        WkbFamily::new(
            vec![PhaseClass {
                offset: theta,
                weight: 1.0,
            }],
            "single phase",
        )
        .expect("one unit-weight class is valid")
    }

    /// The two equal-weight classes {0, 1/4} produced by parity splitting of
    /// an even-potential eigenbasis.
    pub fn parity_split() -> Self {
        WkbFamily::new(
            vec![
                PhaseClass {
                    offset: 0.0,
                    weight: 0.5,
                },
                PhaseClass {
                    offset: 0.25,
                    weight: 0.5,
                },
            ],
            "parity split",
        )
        .expect("two equal-weight classes are valid")
    }

    pub fn phase_classes(&self) -> &[PhaseClass] {
        &self.phase_classes
    }
}

/// Result of [`single_phase_limit`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SinglePhasePrediction {
    pub value: f64,
    /// Set when |pq| < 3, i.e. the frequency map takes equal (up to sign)
    /// values at the two points and the bounds [1/3, 2/3] need not apply.
    /// The value is still the correct closed-ray average.
    pub hypothesis_warning: bool,
}

/// Sign-correlation limit for a single-phase family at frequency ratio p/q:
/// 1/2 + ½·(closed-ray average with α = β = θ). Lies in [1/3, 2/3] whenever
/// |pq| ≥ 3.
pub fn single_phase_limit(ratio: &RationalRatio, theta: f64) -> SinglePhasePrediction {
    let ray = TorusRay::new(ratio.p, ratio.q, theta, theta)
        .expect("RationalRatio guarantees nonzero entries");
    SinglePhasePrediction {
        value: 0.5 + 0.5 * ray_average_closed_form(&ray),
        hypothesis_warning: (ratio.p * ratio.q).abs() < 3,
    }
}

/// Sign-correlation limit for eigenfunctions of an even confining potential
/// at points with ratio x/y = p/q: 1/2 + 1/(2pq) when p ≡ q (mod 4) with
/// both odd, 1/2 otherwise; 1/2 for an irrational ratio.
pub fn parity_split_limit(input: &RatioInput) -> f64 {
    match input {
        RatioInput::Irrational => 0.5,
        RatioInput::Rational(r) => {
            let (p, q) = (r.p, r.q);
            let pm = p.rem_euclid(4);
            let qm = q.rem_euclid(4);
            if (pm == 1 && qm == 1) || (pm == 3 && qm == 3) {
                0.5 + 1.0 / (2.0 * p as f64 * q as f64)
            } else {
                0.5
            }
        }
    }
}

/// Sign-correlation limit of a general phase-class mixture:
/// 1/2 + Σ_c weight_c · ½ · (closed-ray average at α = β = θ_c).
pub fn wkb_family_limit(ratio: &RationalRatio, family: &WkbFamily) -> f64 {
    let mut acc = 0.5;
    for class in &family.phase_classes {
        let ray = TorusRay::new(ratio.p, ratio.q, class.offset, class.offset)
            .expect("RationalRatio guarantees nonzero entries");
        acc += class.weight * 0.5 * ray_average_closed_form(&ray);
    }
    acc
}

/// Relative tolerance for recognizing a caller-supplied exact integer or
/// small rational that arrives through a floating-point API.
const RATIO_RECOGNITION_TOL: f64 = 1e-9;

/// Recovers the integer m = y/x the caller supplied, rejecting anything that
/// is not within [`RATIO_RECOGNITION_TOL`] of an integer.
pub fn integer_ratio_of(x: f64, y: f64) -> Result<i64> {
    if x == 0.0 || !x.is_finite() || !y.is_finite() {
        return Err(Error::InvalidRatio(format!(
            "points must be finite with x nonzero (got x={x}, y={y})"
        )));
    }
    let r = y / x;
    let m = r.round();
    if m == 0.0 || (r - m).abs() > RATIO_RECOGNITION_TOL * m.abs().max(1.0) {
        return Err(Error::InvalidRatio(format!(
            "y/x = {r} is not a nonzero integer"
        )));
    }
    Ok(m as i64)
}

/// Recovers a small reduced fraction a/b ≈ x/y via continued fractions.
/// Fails when no fraction with denominator ≤ `max_den` matches to the
/// recognition tolerance.
pub fn small_ratio_of(x: f64, y: f64, max_den: i64) -> Result<RationalRatio> {
    if x == 0.0 || y == 0.0 || !x.is_finite() || !y.is_finite() {
        return Err(Error::InvalidRatio(format!(
            "points must be finite and nonzero (got {x}, {y})"
        )));
    }
    let target = x / y;
    let target_abs = target.abs();
    let mut value = target_abs;
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    for _ in 0..64 {
        let a = value.floor();
        if a > i64::MAX as f64 {
            break;
        }
        let a_i = a as i64;
        let h2 = a_i.checked_mul(h1).and_then(|v| v.checked_add(h0));
        let k2 = a_i.checked_mul(k1).and_then(|v| v.checked_add(k0));
        let (Some(h2), Some(k2)) = (h2, k2) else {
            break;
        };
        if k2 > max_den || h2 > max_den {
            break;
        }
        (h0, h1) = (h1, h2);
        (k0, k1) = (k1, k2);
        if k1 > 0 {
            let approx = h1 as f64 / k1 as f64;
            if (approx - target_abs).abs() <= RATIO_RECOGNITION_TOL * target_abs.max(1.0) {
                let sign = if target < 0.0 { -1 } else { 1 };
                return RationalRatio::new(sign * h1, k1);
            }
        }
        let frac = value - a;
        if frac.abs() < f64::EPSILON {
            break;
        }
        value = 1.0 / frac;
    }
    Err(Error::InvalidRatio(format!(
        "x/y = {target} is not a small exact fraction (max denominator {max_den})"
    )))
}

/// Sign-correlation limit for the Hermite eigenfamily at points x and
/// y = m·x with integer m: 1/2 + x/(2y) when m ≡ 1 (mod 4), 1/2 otherwise.
pub fn hermite_limit(x: f64, y: f64) -> Result<f64> {
    let m = integer_ratio_of(x, y)?;
    if m.rem_euclid(4) == 1 {
        Ok(0.5 + 1.0 / (2.0 * m as f64))
    } else {
        Ok(0.5)
    }
}

/// Sign-correlation limit for the radial Laguerre eigenfamily in dimension d
/// at radii with ratio r₁/r₂ = p/q:
/// 1/2 when p or q is even, or when p, q and (p−q)(d−1)/2 are all odd;
/// otherwise 1/2 − (−1)^{(p+q)/2 + (p−q)(d−1)/4} / (2pq).
pub fn laguerre_limit(ratio: &RationalRatio, d: u32) -> Result<f64> {
    if d < 1 {
        return Err(Error::InvalidParameter(
            "dimension must be at least 1".into(),
        ));
    }
    let (mut p, mut q) = (ratio.p, ratio.q);
    if p * q < 0 {
        return Err(Error::InvalidRatio(
            "radius ratio must be positive".into(),
        ));
    }
    if p < 0 {
        p = -p;
        q = -q;
    }
    if p % 2 == 0 || q % 2 == 0 {
        return Ok(0.5);
    }
    let m = (p - q) * (d as i64 - 1);
    if (m / 2).rem_euclid(2) == 1 {
        // p, q and (p−q)(d−1)/2 all odd.
        return Ok(0.5);
    }
    let exponent = (p + q) / 2 + m / 4;
    let sign = if exponent.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    Ok(0.5 - sign / (2.0 * p as f64 * q as f64))
}
