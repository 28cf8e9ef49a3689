//! Overflow-safe sign sequences of Hermite functions, generalized Laguerre
//! functions, and Chebyshev polynomials at fixed evaluation points.
//!
//! Each family is driven by its three-term recurrence in a single O(N) pass.
//! Hermite uses the normalized Hermite-function recurrence, whose values are
//! uniformly bounded by 1, so any index is reachable without overflow.
//! Laguerre uses the plain polynomial recurrence; at a fixed positive
//! argument the values grow only polynomially in n. Chebyshev signs reduce to
//! the sign of cos(2π·frac(n·a)) and are decided exactly: by integer residue
//! arithmetic for rational a, by the 128-bit fixed-point rotation of
//! [`crate::equidist`] for irrational a.
//!
//! The streams are single-cursor, constant-memory generators; distinct
//! generators are independent, but one generator must not be shared across
//! threads without external coordination.

use num_integer::gcd;

use crate::equidist::{FixedPointFraction, FracSequence};
use crate::error::{Error, Result};
use crate::sign::Sign;

/// A Hermite evaluation point x together with the internal recurrence
/// argument t = √(2π)·x.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitePoint {
    x: f64,
    t: f64,
}

impl HermitePoint {
    pub fn new(x: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "Hermite point must be finite (got {x})"
            )));
        }
        let t = std::f64::consts::TAU.sqrt() * x;
        // The ground-state seed e^{−t²/2} must stay a positive normal number.
        if 0.5 * t * t > 700.0 {
            return Err(Error::InvalidParameter(format!(
                "|x| = {} is too deep in the Gaussian tail for the seed to be representable",
                x.abs()
            )));
        }
        Ok(HermitePoint { x, t })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn t(&self) -> f64 {
        self.t
    }
}

/// Streaming signs of the normalized Hermite functions ψₙ(t) at fixed t.
///
/// ψ₀(t) = π^{−1/4}e^{−t²/2}, ψ₁ = √2·t·ψ₀,
/// ψ_{n+1} = √(2/(n+1))·t·ψₙ − √(n/(n+1))·ψ_{n−1}.
#[derive(Debug, Clone)]
pub struct HermiteSignStream {
    t: f64,
    n: u64,
    prev: f64,
    curr: f64,
}

impl HermiteSignStream {
    pub fn new(point: HermitePoint) -> Self {
        let psi0 = std::f64::consts::PI.powf(-0.25) * (-0.5 * point.t * point.t).exp();
        HermiteSignStream {
            t: point.t,
            n: 0,
            prev: 0.0,
            curr: psi0,
        }
    }

    fn advance(&mut self) {
        let n = self.n as f64;
        let next = if self.n == 0 {
            std::f64::consts::SQRT_2 * self.t * self.curr
        } else {
            (2.0 / (n + 1.0)).sqrt() * self.t * self.curr - (n / (n + 1.0)).sqrt() * self.prev
        };
        self.prev = self.curr;
        self.curr = next;
        self.n += 1;
    }

    /// Advances past `count` indices without classifying signs.
    pub fn skip(&mut self, count: u64) {
        for _ in 0..count {
            self.advance();
        }
    }
}

impl Iterator for HermiteSignStream {
    type Item = Sign;

    fn next(&mut self) -> Option<Sign> {
        let scale = self.curr.abs().max(self.prev.abs());
        let sign = Sign::of_scaled(self.curr, scale);
        self.advance();
        Some(sign)
    }
}

/// Values ψ₀(√(2π)x) … ψ_{count−1}(√(2π)x) of the normalized Hermite
/// functions, for callers that need amplitudes rather than signs.
pub fn hermite_function_values(point: HermitePoint, count: usize) -> Vec<f64> {
    let mut stream = HermiteSignStream::new(point);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(stream.curr);
        stream.advance();
    }
    out
}

/// Laguerre family parameters: order ν > −1 and evaluation radius r > 0.
/// The recurrence runs at the argument z = 2πr².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreParams {
    nu: f64,
    r: f64,
}

impl LaguerreParams {
    pub fn new(nu: f64, r: f64) -> Result<Self> {
        if !(nu > -1.0) || !nu.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "Laguerre order must satisfy ν > −1 (got {nu})"
            )));
        }
        if !(r > 0.0) || !r.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "Laguerre radius must be positive (got {r})"
            )));
        }
        Ok(LaguerreParams { nu, r })
    }

    /// Radial family in dimension d, where ν = d/2 − 1.
    pub fn from_dimension(d: u32, r: f64) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidParameter(
                "dimension must be at least 1".into(),
            ));
        }
        LaguerreParams::new(d as f64 / 2.0 - 1.0, r)
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn argument(&self) -> f64 {
        std::f64::consts::TAU * self.r * self.r
    }
}

/// Streaming signs of L^ν_n(z) at fixed z = 2πr². The positive weight
/// r^… e^{−πr²} of the radial eigenfunctions never changes signs, so these
/// are also the eigenfunction signs.
#[derive(Debug, Clone)]
pub struct LaguerreSignStream {
    nu: f64,
    z: f64,
    n: u64,
    prev: f64,
    curr: f64,
}

impl LaguerreSignStream {
    pub fn new(params: LaguerreParams) -> Self {
        LaguerreSignStream {
            nu: params.nu,
            z: params.argument(),
            n: 0,
            prev: 0.0,
            curr: 1.0,
        }
    }

    fn advance(&mut self) {
        let n = self.n as f64;
        let next = if self.n == 0 {
            1.0 + self.nu - self.z
        } else {
            ((2.0 * n + 1.0 + self.nu - self.z) * self.curr - (n + self.nu) * self.prev)
                / (n + 1.0)
        };
        self.prev = self.curr;
        self.curr = next;
        self.n += 1;
    }

    pub fn skip(&mut self, count: u64) {
        for _ in 0..count {
            self.advance();
        }
    }
}

impl Iterator for LaguerreSignStream {
    type Item = Sign;

    fn next(&mut self) -> Option<Sign> {
        let scale = self.curr.abs().max(self.prev.abs());
        let sign = Sign::of_scaled(self.curr, scale);
        self.advance();
        Some(sign)
    }
}

/// The angle fraction a = arccos(x)/(2π) of a Chebyshev evaluation point
/// x = cos(2πa), restricted to (0, 1/2) to exclude the degenerate x = ±1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AngleFraction {
    /// Exact rational num/den in lowest terms.
    Rational { num: u64, den: u64 },
    /// High-precision irrational fraction.
    Irrational(FixedPointFraction),
}

impl AngleFraction {
    pub fn rational(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidParameter("denominator must be nonzero".into()));
        }
        let g = gcd(num, den);
        let (num, den) = (num / g, den / g);
        if num == 0 || 2 * num >= den {
            return Err(Error::InvalidParameter(format!(
                "angle fraction must lie in (0, 1/2) (got {num}/{den})"
            )));
        }
        Ok(AngleFraction::Rational { num, den })
    }

    pub fn irrational(f: FixedPointFraction) -> Result<Self> {
        if f.raw() == 0 || f >= FixedPointFraction::HALF {
            return Err(Error::InvalidParameter(
                "angle fraction must lie in (0, 1/2)".into(),
            ));
        }
        Ok(AngleFraction::Irrational(f))
    }

    /// Parses an angle token: `p/q` (exact rational), `golden` for
    /// (√5−1)/2, or `sqrtN` for frac(√N), each optionally divided by an
    /// integer as in `golden/4`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || {
            Error::InvalidParameter(format!(
                "cannot parse angle {text:?}: expected p/q, golden[/k], or sqrtN[/k]"
            ))
        };
        let (head, divisor) = match text.split_once('/') {
            Some((h, d)) => (h.trim(), Some(d.trim())),
            None => (text, None),
        };
        if head.eq_ignore_ascii_case("golden") || head.starts_with("sqrt") {
            let base = if head.eq_ignore_ascii_case("golden") {
                FixedPointFraction::golden()
            } else {
                let n: u64 = head[4..].parse().map_err(|_| bad())?;
                let root = (n as f64).sqrt();
                if (root.round() * root.round() - n as f64).abs() < 0.5 {
                    return Err(Error::InvalidParameter(format!(
                        "sqrt{n} is rational; use an exact p/q angle instead"
                    )));
                }
                FixedPointFraction::from_sqrt(n)
            };
            let f = match divisor {
                Some(d) => base.div_int(d.parse().map_err(|_| bad())?)?,
                None => base,
            };
            AngleFraction::irrational(f)
        } else {
            let num: u64 = head.parse().map_err(|_| bad())?;
            let den: u64 = divisor.ok_or_else(bad)?.parse().map_err(|_| bad())?;
            AngleFraction::rational(num, den)
        }
    }

    /// Angle scaled by a positive integer; fails when the result leaves
    /// (0, 1/2) and therefore no longer satisfies the type invariant.
    pub fn scaled(&self, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("ratio must be nonzero".into()));
        }
        match *self {
            AngleFraction::Rational { num, den } => {
                let scaled = num.checked_mul(k).ok_or_else(|| {
                    Error::InvalidParameter("scaled angle overflows".into())
                })?;
                AngleFraction::rational(scaled, den)
            }
            AngleFraction::Irrational(f) => {
                let raw = f
                    .raw()
                    .checked_mul(k as u128)
                    .ok_or_else(|| Error::InvalidParameter("scaled angle overflows".into()))?;
                AngleFraction::irrational(FixedPointFraction::from_raw(raw))
            }
        }
    }

    pub fn value(&self) -> f64 {
        match *self {
            AngleFraction::Rational { num, den } => num as f64 / den as f64,
            AngleFraction::Irrational(f) => f.to_f64(),
        }
    }

    /// The Chebyshev evaluation point x = cos(2πa).
    pub fn point(&self) -> f64 {
        (std::f64::consts::TAU * self.value()).cos()
    }
}

/// Streaming signs of Tₙ(cos 2πa) = cos(2πna). Exact: rational angles walk
/// integer residues mod den, irrational angles walk the fixed-point rotation,
/// and zero-hits occur only at exact quarter-points.
#[derive(Debug, Clone)]
pub enum ChebyshevSignStream {
    Rational { residue: u64, num: u64, den: u64 },
    Irrational(FracSequence),
}

impl ChebyshevSignStream {
    pub fn new(angle: AngleFraction) -> Self {
        Self::starting_at(angle, 0)
    }

    /// Positions directly at index n in O(1).
    pub fn starting_at(angle: AngleFraction, n: u64) -> Self {
        match angle {
            AngleFraction::Rational { num, den } => ChebyshevSignStream::Rational {
                residue: ((n as u128 * num as u128) % den as u128) as u64,
                num,
                den,
            },
            AngleFraction::Irrational(f) => {
                ChebyshevSignStream::Irrational(FracSequence::starting_at(f, n))
            }
        }
    }

    pub fn skip(&mut self, count: u64) {
        match self {
            ChebyshevSignStream::Rational { residue, num, den } => {
                *residue =
                    ((*residue as u128 + count as u128 * *num as u128) % *den as u128) as u64;
            }
            ChebyshevSignStream::Irrational(seq) => seq.advance_by(count),
        }
    }
}

impl Iterator for ChebyshevSignStream {
    type Item = Sign;

    fn next(&mut self) -> Option<Sign> {
        match self {
            ChebyshevSignStream::Rational { residue, num, den } => {
                let r = *residue;
                let d = *den;
                let sign = match (4 * r as u128).cmp(&(d as u128)) {
                    std::cmp::Ordering::Less => Sign::Plus,
                    std::cmp::Ordering::Equal => Sign::Zero,
                    std::cmp::Ordering::Greater => match (4 * r as u128).cmp(&(3 * d as u128)) {
                        std::cmp::Ordering::Less => Sign::Minus,
                        std::cmp::Ordering::Equal => Sign::Zero,
                        std::cmp::Ordering::Greater => Sign::Plus,
                    },
                };
                *residue = (r + *num) % d;
                Some(sign)
            }
            ChebyshevSignStream::Irrational(seq) => {
                let f = seq.next().expect("rotation stream is infinite");
                Some(if f == FixedPointFraction::QUARTER
                    || f == FixedPointFraction::THREE_QUARTERS
                {
                    Sign::Zero
                } else if f < FixedPointFraction::QUARTER || f > FixedPointFraction::THREE_QUARTERS
                {
                    Sign::Plus
                } else {
                    Sign::Minus
                })
            }
        }
    }
}

/// A materialized sign sequence with the zero-hit indices listed separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignSequence {
    pub signs: Vec<Sign>,
    pub zero_hits: Vec<u64>,
}

fn collect_sequence(iter: impl Iterator<Item = Sign>, count: u64) -> Result<SignSequence> {
    if count == 0 {
        return Err(Error::EmptyCount);
    }
    let mut signs = Vec::with_capacity(count as usize);
    let mut zero_hits = Vec::new();
    for (n, s) in iter.take(count as usize).enumerate() {
        if s.is_zero() {
            zero_hits.push(n as u64);
        }
        signs.push(s);
    }
    Ok(SignSequence { signs, zero_hits })
}

/// Signs of the Hermite eigenfunctions φ₀…φ_{count−1} at the given point.
pub fn hermite_sign_sequence(point: HermitePoint, count: u64) -> Result<SignSequence> {
    collect_sequence(HermiteSignStream::new(point), count)
}

/// Signs of L^ν_n(2πr²) for n = 0..count−1.
pub fn laguerre_sign_sequence(params: LaguerreParams, count: u64) -> Result<SignSequence> {
    collect_sequence(LaguerreSignStream::new(params), count)
}

/// Signs of Tₙ(cos 2πa) for n = 0..count−1.
pub fn chebyshev_sign_sequence(angle: AngleFraction, count: u64) -> Result<SignSequence> {
    collect_sequence(ChebyshevSignStream::new(angle), count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn hermite_index_zero_is_positive_everywhere() {
        for x in [-4.0, -0.7, 0.0, 0.3, 2.9] {
            let seq = hermite_sign_sequence(HermitePoint::new(x).unwrap(), 1).unwrap();
            assert_eq!(seq.signs[0], Sign::Plus);
        }
    }

    #[test]
    fn hermite_at_origin_alternates_with_zero_hits() {
        let seq = hermite_sign_sequence(HermitePoint::new(0.0).unwrap(), 64).unwrap();
        for n in 0..64usize {
            if n % 2 == 1 {
                assert_eq!(seq.signs[n], Sign::Zero, "odd index {n}");
            } else {
                let expected = if (n / 2) % 2 == 0 { Sign::Plus } else { Sign::Minus };
                assert_eq!(seq.signs[n], expected, "even index {n}");
            }
        }
        assert_eq!(seq.zero_hits.len(), 32);
    }

    #[test]
    fn hermite_parity_relation_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..5 {
            let x: f64 = rng.random_range(0.05..2.0);
            let plus = hermite_sign_sequence(HermitePoint::new(x).unwrap(), 10_000).unwrap();
            let minus = hermite_sign_sequence(HermitePoint::new(-x).unwrap(), 10_000).unwrap();
            for n in 0..10_000u64 {
                let expect = plus.signs[n as usize].parity_flipped(n);
                assert_eq!(minus.signs[n as usize], expect, "x={x} n={n}");
            }
        }
    }

    #[test]
    fn hermite_values_stay_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..5 {
            let x: f64 = rng.random_range(-3.0..3.0);
            let values = hermite_function_values(HermitePoint::new(x).unwrap(), 10_000);
            for (n, v) in values.iter().enumerate() {
                assert!(v.abs() <= 1.0 + 1e-9, "x={x} n={n}: |ψ| = {}", v.abs());
            }
        }
    }

    #[test]
    fn hermite_rejects_unrepresentable_points() {
        assert!(HermitePoint::new(20.0).is_err());
        assert!(HermitePoint::new(f64::NAN).is_err());
    }

    #[test]
    fn laguerre_index_zero_is_one() {
        let p = LaguerreParams::new(0.7, 1.3).unwrap();
        let seq = laguerre_sign_sequence(p, 1).unwrap();
        assert_eq!(seq.signs[0], Sign::Plus);
    }

    #[test]
    fn laguerre_linear_term_zero_hit() {
        // L₁^ν(z) = 1 + ν − z vanishes exactly when z = 1 + ν.
        let r = (1.0f64 / std::f64::consts::TAU).sqrt(); // z = 2πr² = 1
        let p = LaguerreParams::new(0.0, r).unwrap();
        let seq = laguerre_sign_sequence(p, 2).unwrap();
        assert_eq!(seq.signs[1], Sign::Zero);
        assert_eq!(seq.zero_hits, vec![1]);
    }

    #[test]
    fn laguerre_oscillates_at_positive_argument() {
        for nu in [-0.5, 0.0, 0.5, 2.0] {
            let p = LaguerreParams::new(nu, 0.8).unwrap();
            let seq = laguerre_sign_sequence(p, 1000).unwrap();
            let non_zero: Vec<Sign> = seq.signs.iter().copied().filter(|s| !s.is_zero()).collect();
            let changes = non_zero.windows(2).filter(|w| w[0] != w[1]).count();
            assert!(changes >= 1, "ν={nu}: no sign change in the first 1000 indices");
        }
    }

    #[test]
    fn laguerre_parameter_validation() {
        assert!(LaguerreParams::new(-1.0, 1.0).is_err());
        assert!(LaguerreParams::new(0.0, 0.0).is_err());
        assert!(LaguerreParams::from_dimension(0, 1.0).is_err());
        let p = LaguerreParams::from_dimension(3, 1.0).unwrap();
        assert!((p.nu() - 0.5).abs() < 1e-15);
    }

    /// Quadrature spot check of ∫₀^∞ L_m L_n z^ν e^{−z} dz: zero off the
    /// diagonal, Γ(n+ν+1)/n! on it.
    #[test]
    fn laguerre_orthogonality_spot_check() {
        let nu = 0.5f64;
        let laguerre_at = |n: usize, z: f64| -> f64 {
            let mut prev = 0.0;
            let mut curr = 1.0;
            for k in 0..n {
                let kf = k as f64;
                let next = if k == 0 {
                    1.0 + nu - z
                } else {
                    ((2.0 * kf + 1.0 + nu - z) * curr - (kf + nu) * prev) / (kf + 1.0)
                };
                prev = curr;
                curr = next;
            }
            curr
        };
        // Substituting z = u² removes the z^ν endpoint singularity; composite
        // Simpson on the smooth integrand then converges at full order.
        let integrate = |m: usize, n: usize| -> f64 {
            let steps = 16_000usize;
            let upper = 9.0f64; // z up to 81, far past the e^{−z} tail
            let h = upper / steps as f64;
            let f = |u: f64| -> f64 {
                let z = u * u;
                2.0 * laguerre_at(m, z) * laguerre_at(n, z) * u.powf(2.0 * nu + 1.0) * (-z).exp()
            };
            let mut acc = f(0.0) + f(upper);
            for i in 1..steps {
                let u = i as f64 * h;
                acc += f(u) * if i % 2 == 1 { 4.0 } else { 2.0 };
            }
            acc * h / 3.0
        };
        // Γ(ν+1) = Γ(1.5) = √π/2, then Γ(n+ν+1) by the recurrence.
        let gamma_nu_plus = |n: usize| -> f64 {
            let mut g = 0.5 * std::f64::consts::PI.sqrt();
            let mut x = nu + 1.0;
            for _ in 0..n {
                g *= x;
                x += 1.0;
            }
            g
        };
        for m in 0..4usize {
            for n in 0..4usize {
                let integral = integrate(m, n);
                if m == n {
                    let expected = gamma_nu_plus(n) / (1..=n).product::<usize>().max(1) as f64;
                    assert!(
                        (integral - expected).abs() <= 1e-6 * expected.abs().max(1.0),
                        "diagonal ({m},{n}): {integral} vs {expected}"
                    );
                } else {
                    assert!(integral.abs() <= 1e-6, "off-diagonal ({m},{n}): {integral}");
                }
            }
        }
    }

    #[test]
    fn chebyshev_quarter_angle_values() {
        // x = cos(π/2) = 0: T₁(0) = 0, T₂(0) = −1.
        let a = AngleFraction::rational(1, 4).unwrap();
        let seq = chebyshev_sign_sequence(a, 3).unwrap();
        assert_eq!(seq.signs[1], Sign::Zero);
        assert_eq!(seq.signs[2], Sign::Minus);
    }

    #[test]
    fn chebyshev_period_ten_pattern() {
        let a = AngleFraction::rational(1, 10).unwrap();
        let seq = chebyshev_sign_sequence(a, 10).unwrap();
        let expected = [
            Sign::Plus,
            Sign::Plus,
            Sign::Plus,
            Sign::Minus,
            Sign::Minus,
            Sign::Minus,
            Sign::Minus,
            Sign::Minus,
            Sign::Plus,
            Sign::Plus,
        ];
        assert_eq!(seq.signs.as_slice(), expected.as_slice());
        assert!(seq.zero_hits.is_empty());
    }

    #[test]
    fn chebyshev_rational_is_exactly_periodic() {
        for (num, den) in [(1u64, 10u64), (3, 14), (2, 9)] {
            let a = AngleFraction::rational(num, den).unwrap();
            let seq = chebyshev_sign_sequence(a, 3 * den).unwrap();
            for n in 0..(2 * den) as usize {
                assert_eq!(seq.signs[n], seq.signs[n + den as usize]);
            }
        }
    }

    #[test]
    fn chebyshev_direct_positioning_matches_walk() {
        let angles = [
            AngleFraction::rational(3, 14).unwrap(),
            AngleFraction::Irrational(FixedPointFraction::golden().div_int(4).unwrap()),
        ];
        for a in angles {
            let walked: Vec<Sign> = ChebyshevSignStream::new(a).take(500).collect();
            for start in [0u64, 1, 97, 499] {
                let jumped: Vec<Sign> = ChebyshevSignStream::starting_at(a, start)
                    .take(500 - start as usize)
                    .collect();
                assert_eq!(&walked[start as usize..], jumped.as_slice());
            }
        }
    }

    #[test]
    fn angle_fraction_validation() {
        assert!(AngleFraction::rational(1, 2).is_err());
        assert!(AngleFraction::rational(0, 5).is_err());
        assert!(AngleFraction::rational(3, 5).is_err());
        assert!(AngleFraction::rational(1, 10).is_ok());
        // 2/4 reduces to 1/2 and is rejected.
        assert!(AngleFraction::rational(2, 4).is_err());
        assert!(AngleFraction::irrational(FixedPointFraction::HALF).is_err());
        assert!(AngleFraction::irrational(FixedPointFraction::ZERO).is_err());
    }

    #[test]
    fn angle_scaling_enforces_range() {
        let a = AngleFraction::rational(1, 10).unwrap();
        assert!(a.scaled(3).is_ok());
        assert!(a.scaled(5).is_err()); // 5/10 = 1/2 is degenerate

        let a = AngleFraction::rational(1, 4).unwrap();
        assert!(a.scaled(3).is_err()); // 3/4 leaves (0, 1/2)
    }

    #[test]
    fn angle_parsing() {
        assert_eq!(
            AngleFraction::parse("1/10").unwrap(),
            AngleFraction::rational(1, 10).unwrap()
        );
        let golden4 = AngleFraction::parse("golden/4").unwrap();
        assert!((golden4.value() - (5f64.sqrt() - 1.0) / 8.0).abs() < 1e-15);
        let s2 = AngleFraction::parse("sqrt2/4").unwrap();
        assert!((s2.value() - (std::f64::consts::SQRT_2 - 1.0) / 4.0).abs() < 1e-15);
        assert!(AngleFraction::parse("sqrt4").is_err());
        assert!(AngleFraction::parse("0.3").is_err());
        assert!(AngleFraction::parse("golden").is_err()); // 0.618… ∉ (0, 1/2)
    }
}
