//! Averages of the sign-product function over rays of the flat torus 𝕋².
//!
//! The central object is sgn(cos(2πx)·cos(2πy)) integrated along a line
//! (pt−α, qt−β). For a rational direction the line closes up and the time
//! average has a closed form built from a triangle wave; an independent
//! breakpoint integrator recomputes the same average by summing signed
//! interval lengths, which keeps the closed form honest. Irrational slopes
//! are handled by finite-horizon piecewise integration.

use num_integer::gcd;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::sign::Sign;

/// Absolute tolerance (after mod-1 reduction) at which a cosine argument is
/// declared to sit on a quarter-integer, i.e. on a zero of the cosine.
pub const QUARTER_ZERO_TOL: f64 = 1e-12;

/// Breakpoints closer than this are merged before integration.
const BREAKPOINT_DEDUP_TOL: f64 = 1e-14;

/// A closed ray t ↦ (pt−α, qt−β) on 𝕋² with coprime integer direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusRay {
    p: i64,
    q: i64,
    alpha: f64,
    beta: f64,
}

impl TorusRay {
    /// Builds a ray from a general integer direction (A, B), reducing it to
    /// lowest terms. Phases are stored in [0, 1).
    pub fn new(a: i64, b: i64, alpha: f64, beta: f64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidRayDirection { p: a, q: b });
        }
        let g = gcd(a.unsigned_abs(), b.unsigned_abs()) as i64;
        Ok(TorusRay {
            p: a / g,
            q: b / g,
            alpha: wrap_unit(alpha),
            beta: wrap_unit(beta),
        })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// The phase combination pβ − qα that drives the closed-form average.
    pub fn phase_offset(&self) -> f64 {
        self.p as f64 * self.beta - self.q as f64 * self.alpha
    }
}

/// A line t ↦ (t, at+b) whose slope the caller declares irrational.
///
/// No rationality detection is performed on floats: the dichotomy between
/// rational and irrational slopes is dispatched on the type chosen by the
/// caller, never inferred from the bits of `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IrrationalRay {
    slope: f64,
    intercept: f64,
}

impl IrrationalRay {
    pub fn new(slope: f64, intercept: f64) -> Result<Self> {
        if slope == 0.0 || !slope.is_finite() {
            return Err(Error::InvalidSlope(format!(
                "slope must be finite and nonzero (got {slope})"
            )));
        }
        if !intercept.is_finite() {
            return Err(Error::InvalidSlope(format!(
                "intercept must be finite (got {intercept})"
            )));
        }
        Ok(IrrationalRay { slope, intercept })
    }

    pub fn slope(&self) -> f64 {
        self.slope
    }

    pub fn intercept(&self) -> f64 {
        self.intercept
    }
}

/// Reduce to [0, 1), guarding against the rounding of tiny negatives to 1.0.
fn wrap_unit(x: f64) -> f64 {
    let r = x.rem_euclid(1.0);
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

/// Sign of cos(2πx) with quarter-integer zero detection.
fn cos_sign(x: f64) -> Sign {
    let f = wrap_unit(x);
    if (f - 0.25).abs() <= QUARTER_ZERO_TOL || (f - 0.75).abs() <= QUARTER_ZERO_TOL {
        Sign::Zero
    } else if f < 0.25 || f > 0.75 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// sgn(cos(2πx)·cos(2πy)) ∈ {−1, 0, +1}, zero when either factor's argument
/// lies within [`QUARTER_ZERO_TOL`] of a quarter-integer.
pub fn sign_product(x: f64, y: f64) -> Sign {
    let sx = cos_sign(x);
    let sy = cos_sign(y);
    if sx.is_zero() || sy.is_zero() {
        Sign::Zero
    } else if sx == sy {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Triangle wave 1 − 4·|ũ| with ũ = u − nearest integer ∈ [−1/2, 1/2].
///
/// Equals (8/π²)·Σ_{ℓ≥0} cos(2π(2ℓ+1)u)/(2ℓ+1)²; the identity is validated
/// against the truncated series in the tests below.
pub(crate) fn triangle_wave(u: f64) -> f64 {
    let r = u - u.round();
    1.0 - 4.0 * r.abs()
}

/// Time average of the sign product along a closed ray, in closed form.
///
/// Vanishes when p or q is even. For odd p, q the value is
/// (−1)^{(p+q)/2+1} · (1 − 4|ũ|) / (pq) with u = pβ − qα, so its magnitude
/// is at most 1/|pq|.
pub fn ray_average_closed_form(ray: &TorusRay) -> f64 {
    let (p, q) = (ray.p, ray.q);
    if p % 2 == 0 || q % 2 == 0 {
        return 0.0;
    }
    let exponent = (p + q) / 2 + 1;
    let sign = if exponent.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    sign * triangle_wave(ray.phase_offset()) / (p as f64 * q as f64)
}

/// Independent oracle for [`ray_average_closed_form`]: integrates the sign
/// product over one period by enumerating the zeros of both cosine factors,
/// sorting them, and summing sign × length over the resulting subintervals.
pub fn ray_average_breakpoints(ray: &TorusRay) -> f64 {
    let mut cuts: Vec<f64> = vec![0.0, 1.0];
    push_factor_breakpoints(&mut cuts, ray.p, ray.alpha);
    push_factor_breakpoints(&mut cuts, ray.q, ray.beta);
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup_by(|a, b| (*a - *b).abs() <= BREAKPOINT_DEDUP_TOL);

    let (p, q) = (ray.p as f64, ray.q as f64);
    let mut total = 0.0;
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let mid = 0.5 * (a + b);
        let s = sign_product(p * mid - ray.alpha, q * mid - ray.beta);
        total += s.as_f64() * (b - a);
    }
    total
}

/// Zeros in [0, 1] of t ↦ cos(2π(c·t − phase)): t = (1/4 + k/2 + phase)/c.
fn push_factor_breakpoints(cuts: &mut Vec<f64>, c: i64, phase: f64) {
    let c = c as f64;
    let lo = (c.min(0.0) - 0.25 - phase) / 0.5;
    let hi = (c.max(0.0) - 0.25 - phase) / 0.5;
    let k_lo = lo.floor() as i64 - 1;
    let k_hi = hi.ceil() as i64 + 1;
    for k in k_lo..=k_hi {
        let t = (0.25 + 0.5 * k as f64 + phase) / c;
        if (0.0..=1.0).contains(&t) {
            cuts.push(t);
        }
    }
}

/// Exact-arithmetic variant of the breakpoint oracle for rays with rational
/// phases. Every t-coordinate, midpoint sign, and interval length is a
/// rational number, so the returned average is exact.
pub fn ray_average_exact(
    p: i64,
    q: i64,
    alpha: Ratio<i64>,
    beta: Ratio<i64>,
) -> Result<Ratio<i64>> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidRayDirection { p, q });
    }
    let g = gcd(p.unsigned_abs(), q.unsigned_abs()) as i64;
    let (p, q) = (p / g, q / g);
    let alpha = wrap_unit_ratio(alpha);
    let beta = wrap_unit_ratio(beta);

    let mut cuts: Vec<Ratio<i64>> = vec![Ratio::new(0, 1), Ratio::new(1, 1)];
    push_exact_breakpoints(&mut cuts, p, alpha);
    push_exact_breakpoints(&mut cuts, q, beta);
    cuts.sort();
    cuts.dedup();

    let mut total = Ratio::new(0, 1);
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let mid = (a + b) / 2;
        let sx = cos_sign_ratio(Ratio::new(p, 1) * mid - alpha);
        let sy = cos_sign_ratio(Ratio::new(q, 1) * mid - beta);
        total += Ratio::new((sx * sy) as i64, 1) * (b - a);
    }
    Ok(total)
}

fn wrap_unit_ratio(r: Ratio<i64>) -> Ratio<i64> {
    r - r.floor()
}

fn push_exact_breakpoints(cuts: &mut Vec<Ratio<i64>>, c: i64, phase: Ratio<i64>) {
    // Zeros at t = (1/4 + k/2 + phase)/c for every k with t in [0, 1].
    let zero = Ratio::new(0i64, 1);
    let one = Ratio::new(1i64, 1);
    for k in -(2 * c.abs() + 4)..=(2 * c.abs() + 4) {
        let t = (Ratio::new(1, 4) + Ratio::new(k, 2) + phase) / Ratio::new(c, 1);
        if t >= zero && t <= one {
            cuts.push(t);
        }
    }
}

fn cos_sign_ratio(r: Ratio<i64>) -> i8 {
    let f = wrap_unit_ratio(r);
    let quarter = Ratio::new(1, 4);
    let three_quarters = Ratio::new(3, 4);
    if f == quarter || f == three_quarters {
        0
    } else if f < quarter || f > three_quarters {
        1
    } else {
        -1
    }
}

/// Finite-horizon average along a declared-irrational line, with decay
/// checkpoints used to flag a non-decaying (hence slope-is-rational) input.
#[derive(Debug, Clone)]
pub struct HorizonAverage {
    /// (1/T)∫₀ᵀ of the sign product along the line.
    pub average: f64,
    /// Running averages at T/8, T/4, T/2, T.
    pub checkpoints: Vec<(f64, f64)>,
    /// Set when the running average shows no sign of decaying toward zero,
    /// which for large T indicates the slope was in fact rational.
    pub non_decaying: bool,
}

/// Below this magnitude a finite-horizon average is treated as consistent
/// with decay toward zero when flagging non-decaying inputs.
const DECAY_FLAG_THRESHOLD: f64 = 0.02;

/// Averages the sign product over [0, T] along (t, at+b) by exact piecewise
/// integration: the zeros of both cosine factors are enumerated up to T in
/// increasing order and the integrand, constant between consecutive zeros,
/// is summed as sign × length.
pub fn ray_average_finite_horizon(ray: &IrrationalRay, horizon: f64) -> Result<HorizonAverage> {
    if !(horizon > 0.0) || !horizon.is_finite() {
        return Err(Error::InvalidHorizon(horizon));
    }
    let a = ray.slope;
    let b = ray.intercept;

    let mut first = FactorZeros::unit_speed(horizon);
    let mut second = FactorZeros::sloped(a, b, horizon);

    let targets = [horizon / 8.0, horizon / 4.0, horizon / 2.0, horizon];
    let mut checkpoints: Vec<(f64, f64)> = Vec::with_capacity(4);
    let mut target_idx = 0;

    let mut integral = 0.0;
    let mut t = 0.0;
    while t < horizon {
        let mut t_next = match (first.peek(), second.peek()) {
            (Some(u), Some(v)) => u.min(v),
            (Some(u), None) => u,
            (None, Some(v)) => v,
            (None, None) => horizon,
        };
        t_next = t_next.min(horizon);

        // Split the segment at pending checkpoint times so the running
        // average can be recorded exactly there.
        while target_idx < targets.len() && targets[target_idx] <= t_next {
            let c = targets[target_idx];
            if c > t {
                let mid = 0.5 * (t + c);
                integral += sign_product(mid, a * mid + b).as_f64() * (c - t);
                t = c;
            }
            checkpoints.push((c, integral / c));
            target_idx += 1;
        }

        if t_next > t {
            let mid = 0.5 * (t + t_next);
            integral += sign_product(mid, a * mid + b).as_f64() * (t_next - t);
        }
        t = t_next;
        first.advance_past(t);
        second.advance_past(t);
    }

    let average = integral / horizon;
    let early = checkpoints
        .first()
        .map(|&(_, v)| v.abs())
        .unwrap_or(average.abs());
    let non_decaying = average.abs() > DECAY_FLAG_THRESHOLD && average.abs() > 0.5 * early;

    Ok(HorizonAverage {
        average,
        checkpoints,
        non_decaying,
    })
}

/// Ordered stream of zeros of one cosine factor on [0, horizon].
struct FactorZeros {
    /// Produces the k-th zero; monotone increasing in k over the index range.
    coeff: f64,
    offset: f64,
    k: i64,
    k_end: i64,
    done: bool,
}

impl FactorZeros {
    /// Zeros of cos(2πt): t = 1/4 + k/2.
    fn unit_speed(horizon: f64) -> Self {
        let k_end = ((horizon - 0.25) / 0.5).floor() as i64;
        FactorZeros {
            coeff: 0.5,
            offset: 0.25,
            k: 0,
            k_end,
            done: k_end < 0,
        }
    }

    /// Zeros of cos(2π(at+b)): t = (1/4 + k/2 − b)/a, reparametrized so the
    /// stream is increasing in k for either sign of a.
    fn sloped(a: f64, b: f64, horizon: f64) -> Self {
        if a > 0.0 {
            let k_start = ((b - 0.25) / 0.5).ceil() as i64;
            let k_end = ((a * horizon + b - 0.25) / 0.5).floor() as i64;
            FactorZeros {
                coeff: 0.5 / a,
                offset: (0.25 - b) / a,
                k: k_start,
                k_end,
                done: k_end < k_start,
            }
        } else {
            // t(k) = (1/4 + k/2 − b)/a is decreasing in k; flip the index.
            let k_start = -(((b - 0.25) / 0.5).floor() as i64);
            let k_end = -(((a * horizon + b - 0.25) / 0.5).ceil() as i64);
            FactorZeros {
                coeff: -0.5 / a,
                offset: (0.25 - b) / a,
                k: k_start,
                k_end,
                done: k_end < k_start,
            }
        }
    }

    fn value(&self, k: i64) -> f64 {
        self.offset + self.coeff * k as f64
    }

    fn peek(&mut self) -> Option<f64> {
        while !self.done {
            let t = self.value(self.k);
            if t < 0.0 {
                self.k += 1;
                if self.k > self.k_end {
                    self.done = true;
                }
                continue;
            }
            return Some(t);
        }
        None
    }

    fn advance_past(&mut self, t: f64) {
        while !self.done {
            if self.value(self.k) <= t {
                self.k += 1;
                if self.k > self.k_end {
                    self.done = true;
                }
            } else {
                break;
            }
        }
    }
}

/// Sign pattern for a pair of evaluations, counted up to a global flip:
/// `Matched` covers (+,+) and (−,−); `Opposed` covers (+,−) and (−,+).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignPattern {
    Matched,
    Opposed,
}

/// Fraction of time a closed ray with common phase θ spends on the given
/// sign pattern: (1 ± average)/2.
pub fn sign_pattern_integral(p: i64, q: i64, theta: f64, pattern: SignPattern) -> Result<f64> {
    let ray = TorusRay::new(p, q, theta, theta)?;
    let avg = ray_average_closed_form(&ray);
    Ok(match pattern {
        SignPattern::Matched => 0.5 * (1.0 + avg),
        SignPattern::Opposed => 0.5 * (1.0 - avg),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sign_product_basic_values() {
        assert_eq!(sign_product(0.0, 0.0), Sign::Plus);
        assert_eq!(sign_product(0.0, 0.5), Sign::Minus);
        assert_eq!(sign_product(0.25, 0.3), Sign::Zero);
    }

    #[test]
    fn sign_product_is_half_shift_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let x: f64 = rng.random_range(-3.0..3.0);
            let y: f64 = rng.random_range(-3.0..3.0);
            assert_eq!(sign_product(x, y), sign_product(x + 0.5, y + 0.5));
        }
    }

    /// The triangle-wave form of Σ cos(2π(2ℓ+1)u)/(2ℓ+1)² must match the
    /// truncated series. Summed smallest-terms-first over 10⁶ terms; u is
    /// drawn away from 0 and 1/2 where the truncated tail converges too
    /// slowly for a 1e−10 comparison.
    #[test]
    fn triangle_wave_matches_partial_series() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        const TERMS: usize = 1_000_000;
        for _ in 0..100 {
            let base: f64 = rng.random_range(0.02..0.48);
            let u = if rng.random_bool(0.5) { base } else { 1.0 - base };
            let mut series = 0.0f64;
            for l in (0..TERMS).rev() {
                let m = (2 * l + 1) as f64;
                series += (std::f64::consts::TAU * m * u).cos() / (m * m);
            }
            let closed = std::f64::consts::PI.powi(2) / 8.0 * triangle_wave(u);
            assert!(
                (series - closed).abs() <= 1e-10,
                "u={u}: series={series}, closed={closed}"
            );
        }
    }

    #[test]
    fn triangle_wave_special_points() {
        assert_eq!(triangle_wave(0.0), 1.0);
        assert_eq!(triangle_wave(0.25), 0.0);
        assert_eq!(triangle_wave(0.5), -1.0);
        assert_eq!(triangle_wave(-0.5), -1.0);
        assert_eq!(triangle_wave(2.5), -1.0);
        assert_eq!(triangle_wave(3.0), 1.0);
    }

    #[test]
    fn closed_form_even_direction_vanishes() {
        let ray = TorusRay::new(2, 3, 0.37, 0.11).unwrap();
        assert_eq!(ray_average_closed_form(&ray), 0.0);
    }

    #[test]
    fn closed_form_frozen_values() {
        // Exact breakpoint oracle values, frozen.
        let ray = TorusRay::new(1, 3, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(ray_average_closed_form(&ray), -1.0 / 3.0, epsilon = 1e-15);

        let ray = TorusRay::new(3, 5, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(ray_average_closed_form(&ray), -1.0 / 15.0, epsilon = 1e-15);

        // Antiphase second coordinate: signs always opposite.
        let ray = TorusRay::new(1, 1, 0.0, 0.5).unwrap();
        assert_abs_diff_eq!(ray_average_closed_form(&ray), -1.0, epsilon = 1e-15);

        // Identical coordinates: signs always agree.
        let ray = TorusRay::new(1, 1, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(ray_average_closed_form(&ray), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn exact_oracle_frozen_values() {
        let v = ray_average_exact(1, 3, Ratio::new(0, 1), Ratio::new(0, 1)).unwrap();
        assert_eq!(v, Ratio::new(-1, 3));

        let v = ray_average_exact(3, 5, Ratio::new(0, 1), Ratio::new(0, 1)).unwrap();
        assert_eq!(v, Ratio::new(-1, 15));

        let v = ray_average_exact(2, 3, Ratio::new(0, 1), Ratio::new(0, 1)).unwrap();
        assert_eq!(v, Ratio::new(0, 1));

        let v = ray_average_exact(1, 1, Ratio::new(0, 1), Ratio::new(0, 1)).unwrap();
        assert_eq!(v, Ratio::new(1, 1));

        let v = ray_average_exact(1, 1, Ratio::new(0, 1), Ratio::new(1, 2)).unwrap();
        assert_eq!(v, Ratio::new(-1, 1));
    }

    #[test]
    fn breakpoint_oracle_matches_frozen_values() {
        let ray = TorusRay::new(1, 3, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(ray_average_breakpoints(&ray), -1.0 / 3.0, epsilon = 1e-13);

        let ray = TorusRay::new(2, 3, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(ray_average_breakpoints(&ray), 0.0, epsilon = 1e-13);

        let ray = TorusRay::new(1, 1, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(ray_average_breakpoints(&ray), 1.0, epsilon = 1e-13);
    }

    #[test]
    fn closed_form_agrees_with_breakpoints_on_random_rays() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut tested = 0;
        while tested < 300 {
            let p = rng.random_range(-99i64..=99);
            let q = rng.random_range(-99i64..=99);
            if p == 0 || q == 0 {
                continue;
            }
            let alpha: f64 = rng.random_range(0.0..1.0);
            let beta: f64 = rng.random_range(0.0..1.0);
            let ray = TorusRay::new(p, q, alpha, beta).unwrap();
            let closed = ray_average_closed_form(&ray);
            let oracle = ray_average_breakpoints(&ray);
            assert!(
                (closed - oracle).abs() <= 1e-12,
                "p={p} q={q} α={alpha} β={beta}: closed={closed} oracle={oracle}"
            );
            tested += 1;
        }
    }

    #[test]
    fn magnitude_bound_and_equality_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..500 {
            let p = 2 * rng.random_range(-20i64..20) + 1;
            let q = 2 * rng.random_range(-20i64..20) + 1;
            let alpha: f64 = rng.random_range(0.0..1.0);
            let beta: f64 = rng.random_range(0.0..1.0);
            let ray = TorusRay::new(p, q, alpha, beta).unwrap();
            let avg = ray_average_closed_form(&ray);
            let bound = 1.0 / (ray.p() * ray.q()).abs() as f64;
            assert!(avg.abs() <= bound + 1e-15);
        }

        // The bound is attained exactly when 2(pβ − qα) is an integer:
        // at integer offsets through the peak of the triangle wave, at
        // half-integer offsets through its trough.
        let ray = TorusRay::new(3, 5, 0.2, 0.12).unwrap(); // pβ − qα = −0.64
        assert!(ray_average_closed_form(&ray).abs() < 1.0 / 15.0);

        let ray = TorusRay::new(3, 5, 0.0, 1.0 / 3.0).unwrap(); // pβ − qα = 1
        assert_abs_diff_eq!(
            ray_average_closed_form(&ray).abs(),
            1.0 / 15.0,
            epsilon = 1e-15
        );

        let ray = TorusRay::new(1, 3, 0.0, 0.5).unwrap(); // pβ − qα = 1/2
        assert_abs_diff_eq!(
            ray_average_closed_form(&ray).abs(),
            1.0 / 3.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn phase_shift_by_integers_is_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let p = 2 * rng.random_range(-10i64..10) + 1;
            let q = 2 * rng.random_range(-10i64..10) + 1;
            let alpha: f64 = rng.random_range(0.0..1.0);
            let beta: f64 = rng.random_range(0.0..1.0);
            let base = ray_average_closed_form(&TorusRay::new(p, q, alpha, beta).unwrap());
            let shift_a = ray_average_closed_form(&TorusRay::new(p, q, alpha + 1.0, beta).unwrap());
            let shift_b = ray_average_closed_form(&TorusRay::new(p, q, alpha, beta + 1.0).unwrap());
            assert_abs_diff_eq!(base, shift_a, epsilon = 1e-12);
            assert_abs_diff_eq!(base, shift_b, epsilon = 1e-12);
        }
    }

    #[test]
    fn direction_reduction_and_rejection() {
        let ray = TorusRay::new(4, 6, 0.0, 0.0).unwrap();
        assert_eq!((ray.p(), ray.q()), (2, 3));
        assert!(TorusRay::new(0, 3, 0.0, 0.0).is_err());
        assert!(TorusRay::new(3, 0, 0.0, 0.0).is_err());
    }

    #[test]
    fn pattern_integral_values() {
        let v = sign_pattern_integral(1, 3, 0.0, SignPattern::Matched).unwrap();
        assert_abs_diff_eq!(v, 1.0 / 3.0, epsilon = 1e-15);

        let v = sign_pattern_integral(1, 1, 0.0, SignPattern::Matched).unwrap();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-15);

        let v = sign_pattern_integral(1, 2, 0.2, SignPattern::Matched).unwrap();
        assert_abs_diff_eq!(v, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn pattern_integrals_sum_to_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let p = rng.random_range(1i64..30);
            let q = rng.random_range(1i64..30);
            if p == 0 || q == 0 {
                continue;
            }
            let theta: f64 = rng.random_range(0.0..1.0);
            let a = sign_pattern_integral(p, q, theta, SignPattern::Matched).unwrap();
            let b = sign_pattern_integral(p, q, theta, SignPattern::Opposed).unwrap();
            assert_abs_diff_eq!(a + b, 1.0, epsilon = 1e-15);
            assert!((0.0..=1.0).contains(&a));
        }
    }

    #[test]
    fn irrational_horizon_average_decays() {
        let ray = IrrationalRay::new(std::f64::consts::SQRT_2, 0.0).unwrap();
        let out = ray_average_finite_horizon(&ray, 1e4).unwrap();
        assert!(out.average.abs() <= 0.01, "got {}", out.average);
        assert!(!out.non_decaying);

        let out = ray_average_finite_horizon(&ray, 1e6).unwrap();
        assert!(out.average.abs() <= 0.001, "got {}", out.average);
        assert!(!out.non_decaying);
    }

    #[test]
    fn rational_slope_is_flagged_non_decaying() {
        // Caller error: slope 3 is rational, the average tends to the
        // closed-ray value −1/3 instead of zero.
        let ray = IrrationalRay::new(3.0, 0.0).unwrap();
        let out = ray_average_finite_horizon(&ray, 2e4).unwrap();
        assert_abs_diff_eq!(out.average, -1.0 / 3.0, epsilon = 1e-3);
        assert!(out.non_decaying);
    }

    #[test]
    fn negative_slope_horizon_average() {
        // (t, −3t) has the same sign statistics as (t, 3t).
        let ray = IrrationalRay::new(-3.0, 0.0).unwrap();
        let out = ray_average_finite_horizon(&ray, 1e4).unwrap();
        assert_abs_diff_eq!(out.average, -1.0 / 3.0, epsilon = 1e-3);
    }

    #[test]
    fn horizon_rejects_bad_inputs() {
        let ray = IrrationalRay::new(1.5, 0.0).unwrap();
        assert!(ray_average_finite_horizon(&ray, 0.0).is_err());
        assert!(ray_average_finite_horizon(&ray, -2.0).is_err());
        assert!(IrrationalRay::new(0.0, 1.0).is_err());
    }
}
