//! Numerical eigenpairs of H = −(1/4π²)·d²/dx² + V(x) for even polynomial
//! potentials.
//!
//! Evenness splits the eigenbasis by parity, so everything happens on the
//! half line [0, L]: even indices shoot with (w(0), w'(0)) = (1, 0), odd
//! indices with (0, 1). The global index n carries parity n mod 2 and
//! ⌊n/2⌋ interior nodes, eigenvalues are located by node-count bisection of
//! a Numerov shot, and the final eigenfunction is assembled from an outward
//! pass matched to a decaying inward pass at the classical turning point, so
//! tails are not polluted by the exponentially growing admixture.
//!
//! After solving, eigenfunctions are L²-normalized and sign-normalized so
//! that sgn w_{2m}(0) = sgn w'_{2m+1}(0) = (−1)^m.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sign::Sign;

const FOUR_PI_SQ: f64 = 4.0 * std::f64::consts::PI * std::f64::consts::PI;

/// Shooting values beyond this magnitude are rescaled to avoid overflow.
const RENORM_THRESHOLD: f64 = 1e250;
const RENORM_FACTOR: f64 = 1e-250;

/// An even polynomial potential V(x) = Σ_k c_k·x^{2k} with positive leading
/// coefficient, which keeps V confining.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    coeffs: Vec<f64>,
}

impl PotentialSpec {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        let mut trimmed = coeffs;
        while trimmed.last() == Some(&0.0) {
            trimmed.pop();
        }
        if trimmed.len() < 2 {
            return Err(Error::InvalidParameter(
                "potential needs a nonconstant even polynomial (at least one x^{2k} term, k ≥ 1)"
                    .into(),
            ));
        }
        if trimmed.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter(
                "potential coefficients must be finite".into(),
            ));
        }
        if *trimmed.last().unwrap() <= 0.0 {
            return Err(Error::InvalidParameter(
                "leading potential coefficient must be positive".into(),
            ));
        }
        Ok(PotentialSpec { coeffs: trimmed })
    }

    /// The harmonic well V(x) = x².
    pub fn harmonic() -> Self {
        PotentialSpec::new(vec![0.0, 1.0]).expect("x^2 is valid")
    }

    /// The quartic well V(x) = x⁴.
    pub fn quartic() -> Self {
        PotentialSpec::new(vec![0.0, 0.0, 1.0]).expect("x^4 is valid")
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, x: f64) -> f64 {
        let x2 = x * x;
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x2 + c;
        }
        acc
    }

    /// V''(0) = 2·c₁, used for high-order odd-parity seeding.
    fn second_derivative_at_origin(&self) -> f64 {
        2.0 * self.coeffs.get(1).copied().unwrap_or(0.0)
    }

    /// Parses a comma-separated coefficient list c₀,c₁,c₂,… .
    pub fn parse(text: &str) -> Result<Self> {
        let coeffs: std::result::Result<Vec<f64>, _> =
            text.split(',').map(|t| t.trim().parse::<f64>()).collect();
        match coeffs {
            Ok(c) => PotentialSpec::new(c),
            Err(_) => Err(Error::InvalidParameter(format!(
                "cannot parse potential coefficients from {text:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Solver knobs. Defaults: 50 grid points per shortest wavelength, domain
/// out to V(L) ≥ 2·λ_max, relative eigenvalue bracket width 1e−10.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub n_max: usize,
    pub points_per_wavelength: f64,
    pub domain_margin: f64,
    pub eigenvalue_tolerance: f64,
    pub max_bisection_iterations: usize,
}

impl SolverConfig {
    pub fn new(n_max: usize) -> Self {
        SolverConfig {
            n_max,
            points_per_wavelength: 50.0,
            domain_margin: 2.0,
            eigenvalue_tolerance: 1e-10,
            max_bisection_iterations: 256,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.points_per_wavelength <= 0.0
            || self.domain_margin <= 0.0
            || self.eigenvalue_tolerance <= 0.0
            || self.max_bisection_iterations == 0
        {
            return Err(Error::InvalidParameter(
                "solver configuration values must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// One solved eigenfunction, stored on the uniform half-line grid [0, L].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Eigenpair {
    pub index: usize,
    pub parity: Parity,
    pub lambda: f64,
    /// w(0); exactly zero for odd indices.
    pub w0: f64,
    /// w'(0); exactly zero for even indices.
    pub dw0: f64,
    pub grid_step: f64,
    /// Values w(j·grid_step) for j = 0 .. values.len()−1.
    pub values: Vec<f64>,
}

/// A complete solve: potential, truncation domain, and all eigenpairs in
/// index order. This struct is the serialized cache layout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenpairSet {
    pub potential: Vec<f64>,
    pub domain: f64,
    pub pairs: Vec<Eigenpair>,
}

impl EigenpairSet {
    pub fn lambdas_by_parity(&self) -> (Vec<f64>, Vec<f64>) {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for p in &self.pairs {
            match p.parity {
                Parity::Even => even.push(p.lambda),
                Parity::Odd => odd.push(p.lambda),
            }
        }
        (even, odd)
    }
}

/// Solves the eigenvalue problem for indices 0..=n_max.
///
/// Eigenvalue searches for distinct indices run concurrently; results are
/// emitted in index order regardless of completion order.
pub fn solve_eigenpairs(potential: &PotentialSpec, cfg: &SolverConfig) -> Result<EigenpairSet> {
    cfg.validate()?;
    let lambda_max = estimate_lambda_ceiling(potential, cfg.n_max);

    // Truncation point: V(L) comfortably above every eigenvalue in range.
    let mut domain = 1.0f64;
    while potential.eval(domain) < cfg.domain_margin * lambda_max {
        domain *= 1.25;
        if domain > 1e6 {
            return Err(Error::NonConvergence {
                index: 0,
                detail: "could not find a truncation point; potential grows too slowly".into(),
            });
        }
    }

    // Grid step from the shortest local wavelength 1/√(λ_max − min V).
    let mut vmin = f64::INFINITY;
    let probe_steps = 4096;
    for j in 0..=probe_steps {
        vmin = vmin.min(potential.eval(domain * j as f64 / probe_steps as f64));
    }
    let span = (lambda_max - vmin.min(0.0)).max(1.0);
    let h_target = 1.0 / (cfg.points_per_wavelength * span.sqrt());
    let count = ((domain / h_target).ceil() as usize + 1).max(64);
    let h = domain / (count - 1) as f64;

    let v_grid: Vec<f64> = (0..count).map(|j| potential.eval(j as f64 * h)).collect();
    let vmin_grid = v_grid.iter().cloned().fold(f64::INFINITY, f64::min);
    let vpp0 = potential.second_derivative_at_origin();

    let grid = SolveGrid {
        h,
        v: &v_grid,
        vpp0,
        vmin: vmin_grid,
    };

    let pairs: Vec<Eigenpair> = (0..=cfg.n_max)
        .into_par_iter()
        .map(|n| solve_index(n, &grid, cfg))
        .collect::<Result<Vec<_>>>()?;

    Ok(EigenpairSet {
        potential: potential.coeffs.clone(),
        domain,
        pairs,
    })
}

/// Semiclassical eigenvalue ceiling: grow λ until the phase-space count
/// 4∫₀^∞ √(λ−V)₊ dx exceeds n_max + 2.
fn estimate_lambda_ceiling(potential: &PotentialSpec, n_max: usize) -> f64 {
    let mut vmin = f64::INFINITY;
    for j in 0..=2048 {
        vmin = vmin.min(potential.eval(j as f64 / 128.0));
    }
    let count_below = |lambda: f64| -> f64 {
        // Outer bound of the classically allowed region.
        let mut x_big = 1.0f64;
        while potential.eval(x_big) < lambda {
            x_big *= 1.5;
        }
        let steps = 2000usize;
        let h = x_big / steps as f64;
        let f = |x: f64| (lambda - potential.eval(x)).max(0.0).sqrt();
        let mut acc = 0.5 * (f(0.0) + f(x_big));
        for i in 1..steps {
            acc += f(i as f64 * h);
        }
        4.0 * acc * h
    };
    let mut lambda = vmin + 1.0;
    while count_below(lambda) < (n_max + 2) as f64 {
        lambda = vmin + 2.0 * (lambda - vmin);
    }
    lambda
}

struct SolveGrid<'a> {
    h: f64,
    v: &'a [f64],
    vpp0: f64,
    vmin: f64,
}

impl SolveGrid<'_> {
    fn count(&self) -> usize {
        self.v.len()
    }

    fn seeds(&self, parity: Parity, lambda: f64) -> (f64, f64) {
        let h = self.h;
        let f0 = FOUR_PI_SQ * (lambda - self.v[0]);
        match parity {
            Parity::Even => {
                // Symmetric Numerov step across the origin: y(−h) = y(h).
                let f1 = FOUR_PI_SQ * (lambda - self.v[1]);
                let y0 = 1.0;
                let y1 = y0 * (1.0 - 5.0 * h * h * f0 / 12.0) / (1.0 + h * h * f1 / 12.0);
                (y0, y1)
            }
            Parity::Odd => {
                // Taylor seed to O(h⁵) with w(0) = 0, w'(0) = 1.
                let h3 = h * h * h;
                let h5 = h3 * h * h;
                let y1 =
                    h - f0 * h3 / 6.0 + (f0 * f0 + 3.0 * FOUR_PI_SQ * self.vpp0) * h5 / 120.0;
                (0.0, y1)
            }
        }
    }

    /// One outward Numerov shot; returns the number of interior nodes on
    /// (0, L], counted as sign changes between consecutive nonzero values.
    fn shoot_nodes(&self, parity: Parity, lambda: f64) -> usize {
        let h2 = self.h * self.h;
        let (mut y0, mut y1) = self.seeds(parity, lambda);
        let mut f0 = FOUR_PI_SQ * (lambda - self.v[0]);
        let mut f1 = FOUR_PI_SQ * (lambda - self.v[1]);

        let mut nodes = 0usize;
        let mut last = match parity {
            Parity::Even => y0,
            Parity::Odd => y1,
        };
        if parity == Parity::Even && y1 != 0.0 {
            if last != 0.0 && y1 * last < 0.0 {
                nodes += 1;
            }
            last = y1;
        }

        for j in 1..self.count() - 1 {
            let f2 = FOUR_PI_SQ * (lambda - self.v[j + 1]);
            let y2 = (2.0 * y1 * (1.0 - 5.0 * h2 * f1 / 12.0) - y0 * (1.0 + h2 * f0 / 12.0))
                / (1.0 + h2 * f2 / 12.0);
            if y2 != 0.0 {
                if last != 0.0 && y2 * last < 0.0 {
                    nodes += 1;
                }
                last = y2;
            }
            y0 = y1;
            y1 = y2;
            f0 = f1;
            f1 = f2;
            if y1.abs() > RENORM_THRESHOLD {
                y0 *= RENORM_FACTOR;
                y1 *= RENORM_FACTOR;
                last *= RENORM_FACTOR;
            }
        }
        nodes
    }

    /// Outward Numerov pass storing values on 0..=j_end.
    fn integrate_outward(&self, parity: Parity, lambda: f64, j_end: usize) -> Vec<f64> {
        let h2 = self.h * self.h;
        let (y0, y1) = self.seeds(parity, lambda);
        let mut out = Vec::with_capacity(j_end + 1);
        out.push(y0);
        if j_end >= 1 {
            out.push(y1);
        }
        for j in 1..j_end {
            let f0 = FOUR_PI_SQ * (lambda - self.v[j - 1]);
            let f1 = FOUR_PI_SQ * (lambda - self.v[j]);
            let f2 = FOUR_PI_SQ * (lambda - self.v[j + 1]);
            let y2 = (2.0 * out[j] * (1.0 - 5.0 * h2 * f1 / 12.0)
                - out[j - 1] * (1.0 + h2 * f0 / 12.0))
                / (1.0 + h2 * f2 / 12.0);
            out.push(y2);
        }
        out
    }

    /// Inward Numerov pass from the Dirichlet end down to j_start, seeded
    /// with the decaying behavior. Rescale events are folded back in so the
    /// returned values share one overall scale; far-tail entries may
    /// underflow to zero, which is their honest magnitude.
    fn integrate_inward(&self, lambda: f64, j_start: usize) -> Vec<f64> {
        let n = self.count();
        let h2 = self.h * self.h;
        let mut values = vec![0.0f64; n - j_start];

        let mut y_hi = 0.0f64; // w(L) = 0
        let mut y = 1e-250f64; // tiny decaying seed
        values[n - 1 - j_start] = y_hi;
        values[n - 2 - j_start] = y;

        let mut events: Vec<usize> = Vec::new();
        let mut j = n - 2;
        while j > j_start {
            let f_hi = FOUR_PI_SQ * (lambda - self.v[j + 1]);
            let f_mid = FOUR_PI_SQ * (lambda - self.v[j]);
            let f_lo = FOUR_PI_SQ * (lambda - self.v[j - 1]);
            let y_lo = (2.0 * y * (1.0 - 5.0 * h2 * f_mid / 12.0)
                - y_hi * (1.0 + h2 * f_hi / 12.0))
                / (1.0 + h2 * f_lo / 12.0);
            j -= 1;
            values[j - j_start] = y_lo;
            y_hi = y;
            y = y_lo;
            if y.abs() > RENORM_THRESHOLD {
                y *= RENORM_FACTOR;
                y_hi *= RENORM_FACTOR;
                values[j - j_start] = y;
                events.push(j);
            }
        }

        // A value written before an event needs that event's factor applied.
        for &e in &events {
            for v in values.iter_mut().skip(e - j_start + 1) {
                *v *= RENORM_FACTOR;
            }
        }

        // The absolute scale is arbitrary (it is fixed later by matching);
        // bring the peak to 1 so squared sums cannot underflow.
        let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if peak.is_finite() && peak > 0.0 {
            for v in values.iter_mut() {
                *v /= peak;
            }
        }
        values
    }
}

fn solve_index(n: usize, grid: &SolveGrid<'_>, cfg: &SolverConfig) -> Result<Eigenpair> {
    let parity = if n % 2 == 0 { Parity::Even } else { Parity::Odd };
    let target_nodes = n / 2;

    // Bracket: below the bottom of the well there are no nodes; grow the
    // upper end until the shot oscillates past the target count.
    let lo_base = grid.vmin;
    let mut lo = lo_base;
    let mut hi = lo_base + 1.0;
    let mut guard = 0;
    while grid.shoot_nodes(parity, hi) <= target_nodes {
        hi = lo_base + 2.0 * (hi - lo_base);
        guard += 1;
        if guard > 200 {
            return Err(Error::NonConvergence {
                index: n,
                detail: "no upper bracket for the eigenvalue search".into(),
            });
        }
    }

    // Node-count bisection: the transition from ≤ target to > target is the
    // Dirichlet eigenvalue with `target_nodes` interior nodes.
    let mut iterations = 0;
    loop {
        let width = hi - lo;
        let scale = lo.abs().max(hi.abs()).max(1e-6);
        if width <= cfg.eigenvalue_tolerance * scale {
            break;
        }
        iterations += 1;
        if iterations > cfg.max_bisection_iterations {
            return Err(Error::NonConvergence {
                index: n,
                detail: format!(
                    "bisection did not reach relative width {} within {} iterations",
                    cfg.eigenvalue_tolerance, cfg.max_bisection_iterations
                ),
            });
        }
        let mid = 0.5 * (lo + hi);
        if grid.shoot_nodes(parity, mid) > target_nodes {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let lambda = 0.5 * (lo + hi);

    let pair = assemble_eigenpair(n, parity, lambda, grid).ok_or_else(|| Error::NonConvergence {
        index: n,
        detail: "two-sided matching failed at the converged eigenvalue".into(),
    })?;

    let found = count_nodes(&pair.values);
    if found != target_nodes {
        return Err(Error::NodeCountMismatch {
            index: n,
            expected: target_nodes,
            found,
        });
    }
    Ok(pair)
}

fn count_nodes(values: &[f64]) -> usize {
    let mut nodes = 0usize;
    let mut last = 0.0f64;
    for (j, &v) in values.iter().enumerate() {
        if j == 0 {
            last = v;
            continue;
        }
        if v == 0.0 {
            continue;
        }
        if last != 0.0 && v * last < 0.0 {
            nodes += 1;
        }
        last = v;
    }
    nodes
}

fn assemble_eigenpair(
    n: usize,
    parity: Parity,
    lambda: f64,
    grid: &SolveGrid<'_>,
) -> Option<Eigenpair> {
    let count = grid.count();

    // Match at the outer classical turning point, clamped into the grid.
    let mut turning = count - 3;
    while turning > 2 && grid.v[turning] > lambda {
        turning -= 1;
    }
    let j_match = turning.clamp(2, count - 3);
    let window_end = (j_match + 4).min(count - 1);

    let outward = grid.integrate_outward(parity, lambda, window_end);
    let inward = grid.integrate_inward(lambda, j_match);

    // Least-squares amplitude of the inward pass over the matching window.
    let mut num = 0.0f64;
    let mut den = 0.0f64;
    for j in j_match..=window_end {
        let wi = inward[j - j_match];
        num += outward[j] * wi;
        den += wi * wi;
    }
    if den == 0.0 || !num.is_finite() || !den.is_finite() {
        return None;
    }
    let c = num / den;
    if c == 0.0 || !c.is_finite() {
        return None;
    }

    let mut values: Vec<f64> = Vec::with_capacity(count);
    values.extend_from_slice(&outward[..=j_match]);
    for j in j_match + 1..count {
        values.push(c * inward[j - j_match]);
    }

    // L² normalization over the whole line: ∫_ℝ w² = 2∫₀^L w².
    let h = grid.h;
    let mut norm_sq = 0.0f64;
    for j in 0..count - 1 {
        norm_sq += 0.5 * (values[j] * values[j] + values[j + 1] * values[j + 1]) * h;
    }
    norm_sq *= 2.0;
    if norm_sq <= 0.0 || !norm_sq.is_finite() {
        return None;
    }
    let mut scale = 1.0 / norm_sq.sqrt();

    // Center sign normalization: sgn w_{2m}(0) = sgn w'_{2m+1}(0) = (−1)^m.
    let wanted = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
    let current = match parity {
        Parity::Even => values[0].signum(),
        Parity::Odd => 1.0, // outward seed has w'(0) = +1
    };
    if current * wanted < 0.0 {
        scale = -scale;
    }
    for v in values.iter_mut() {
        *v *= scale;
    }

    let (w0, dw0) = match parity {
        Parity::Even => (values[0], 0.0),
        Parity::Odd => (0.0, scale),
    };

    Some(Eigenpair {
        index: n,
        parity,
        lambda,
        w0,
        dw0,
        grid_step: h,
        values,
    })
}

/// Sup over the grid restricted to [0, K] of the relative deviation of wₙ
/// from its high-frequency model Aₙ·cos(2π(√λₙ·x − n/4)), with
/// Aₙ = √(w(0)² + w'(0)²/(4π²λₙ)).
pub fn wkb_residual(pair: &Eigenpair, k: f64) -> Result<f64> {
    let domain = pair.grid_step * (pair.values.len() - 1) as f64;
    if !(0.0..=domain + 1e-12).contains(&k) {
        return Err(Error::PointOutsideDomain { point: k, domain });
    }
    let amplitude = (pair.w0 * pair.w0 + pair.dw0 * pair.dw0 / (FOUR_PI_SQ * pair.lambda)).sqrt();
    let freq = pair.lambda.sqrt();
    let phase = pair.index as f64 / 4.0;
    let mut worst = 0.0f64;
    for (j, &w) in pair.values.iter().enumerate() {
        let x = j as f64 * pair.grid_step;
        if x > k {
            break;
        }
        let model = amplitude * (std::f64::consts::TAU * (freq * x - phase)).cos();
        worst = worst.max((w - model).abs() / amplitude);
    }
    Ok(worst)
}

/// Sign of wₙ at an arbitrary point in [−L, L]: parity reflection for
/// negative arguments, sign read from the two bracketing grid values, and a
/// zero-hit when they disagree with the interpolated magnitude below the
/// working tolerance.
pub fn eigenfunction_sign_at(set: &EigenpairSet, pair: &Eigenpair, point: f64) -> Result<Sign> {
    let t = point.abs();
    if t > set.domain + 1e-12 {
        return Err(Error::PointOutsideDomain {
            point,
            domain: set.domain,
        });
    }
    let h = pair.grid_step;
    let last = pair.values.len() - 1;
    let j = ((t / h) as usize).min(last - 1);
    let v0 = pair.values[j];
    let v1 = pair.values[j + 1];

    let s0 = Sign::of(v0);
    let s1 = Sign::of(v1);
    let base = if s0 == s1 && !s0.is_zero() {
        s0
    } else {
        let frac = (t - j as f64 * h) / h;
        let interp = v0 + (v1 - v0) * frac;
        Sign::of_scaled(interp, v0.abs().max(v1.abs()))
    };

    Ok(if point < 0.0 {
        base.parity_flipped(pair.index as u64)
    } else {
        base
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn harmonic_lambda(n: usize) -> f64 {
        (2 * n + 1) as f64 / std::f64::consts::TAU
    }

    #[test]
    fn harmonic_eigenvalues_match_closed_form() {
        let cfg = SolverConfig::new(15);
        let set = solve_eigenpairs(&PotentialSpec::harmonic(), &cfg).unwrap();
        for pair in &set.pairs {
            let expected = harmonic_lambda(pair.index);
            let rel = (pair.lambda - expected).abs() / expected;
            assert!(
                rel <= 2e-6,
                "n={}: λ={} expected={} rel={rel}",
                pair.index,
                pair.lambda,
                expected
            );
        }
    }

    #[test]
    fn harmonic_eigenfunction_matches_hermite_evaluator() {
        use crate::special::{hermite_function_values, HermitePoint};
        let cfg = SolverConfig::new(3);
        let set = solve_eigenpairs(&PotentialSpec::harmonic(), &cfg).unwrap();
        let pair = &set.pairs[3];

        // Least-squares amplitude match of ψ₃(√(2π)x) against the grid.
        let mut num = 0.0;
        let mut den = 0.0;
        let mut reference = Vec::with_capacity(pair.values.len());
        for j in 0..pair.values.len() {
            let x = j as f64 * pair.grid_step;
            let psi = hermite_function_values(HermitePoint::new(x).unwrap(), 4)[3];
            reference.push(psi);
            num += pair.values[j] * psi;
            den += psi * psi;
        }
        let c = num / den;
        let peak = reference
            .iter()
            .map(|p| (c * p).abs())
            .fold(0.0f64, f64::max);
        let mut worst = 0.0f64;
        for (w, p) in pair.values.iter().zip(reference.iter()) {
            worst = worst.max((w - c * p).abs());
        }
        assert!(
            worst / peak <= 1e-5,
            "sup-relative deviation {}",
            worst / peak
        );
    }

    #[test]
    fn center_sign_normalization_holds() {
        let cfg = SolverConfig::new(12);
        let set = solve_eigenpairs(&PotentialSpec::harmonic(), &cfg).unwrap();
        for pair in &set.pairs {
            let m = pair.index / 2;
            let wanted = if m % 2 == 0 { 1.0 } else { -1.0 };
            match pair.parity {
                Parity::Even => {
                    assert!(pair.w0 * wanted > 0.0, "n={}: w0={}", pair.index, pair.w0);
                    assert_eq!(pair.dw0, 0.0);
                }
                Parity::Odd => {
                    assert!(pair.dw0 * wanted > 0.0, "n={}: dw0={}", pair.index, pair.dw0);
                    assert_eq!(pair.w0, 0.0);
                }
            }
        }
    }

    #[test]
    fn quartic_eigenvalues_increase_with_index() {
        let cfg = SolverConfig::new(24);
        let set = solve_eigenpairs(&PotentialSpec::quartic(), &cfg).unwrap();
        for w in set.pairs.windows(2) {
            assert!(
                w[1].lambda > w[0].lambda,
                "λ_{} = {} vs λ_{} = {}",
                w[1].index,
                w[1].lambda,
                w[0].index,
                w[0].lambda
            );
        }
    }

    #[test]
    fn harmonic_parities_interlace() {
        let cfg = SolverConfig::new(20);
        let set = solve_eigenpairs(&PotentialSpec::harmonic(), &cfg).unwrap();
        for w in set.pairs.windows(2) {
            assert!(w[0].lambda < w[1].lambda);
            assert_ne!(w[0].parity, w[1].parity);
        }
    }

    #[test]
    fn eigenfunctions_are_orthonormal() {
        let cfg = SolverConfig::new(12);
        let set = solve_eigenpairs(&PotentialSpec::harmonic(), &cfg).unwrap();
        let h = set.pairs[0].grid_step;
        let inner = |a: &Eigenpair, b: &Eigenpair| -> f64 {
            let mut acc = 0.0;
            for j in 0..a.values.len() - 1 {
                acc += 0.5 * (a.values[j] * b.values[j] + a.values[j + 1] * b.values[j + 1]) * h;
            }
            2.0 * acc
        };
        for a in &set.pairs {
            for b in &set.pairs {
                let ip = inner(a, b);
                if a.index == b.index {
                    assert!((ip - 1.0).abs() <= 1e-6, "⟨{0},{0}⟩ = {ip}", a.index);
                } else if a.parity == b.parity {
                    assert!(ip.abs() <= 1e-6, "⟨{},{}⟩ = {ip}", a.index, b.index);
                }
            }
        }
    }

    #[test]
    fn grid_refinement_is_converged() {
        let coarse = solve_eigenpairs(&PotentialSpec::harmonic(), &SolverConfig::new(20)).unwrap();
        let mut fine_cfg = SolverConfig::new(20);
        fine_cfg.points_per_wavelength = 100.0;
        let fine = solve_eigenpairs(&PotentialSpec::harmonic(), &fine_cfg).unwrap();
        for (a, b) in coarse.pairs.iter().zip(fine.pairs.iter()) {
            let rel = (a.lambda - b.lambda).abs() / b.lambda;
            assert!(rel <= 1e-5, "n={}: halving h moved λ by {rel}", a.index);
        }
    }

    #[test]
    fn wkb_residual_decreases_with_index() {
        let cfg = SolverConfig::new(60);
        let set = solve_eigenpairs(&PotentialSpec::harmonic(), &cfg).unwrap();
        let r10 = wkb_residual(&set.pairs[10], 1.0).unwrap();
        let r60 = wkb_residual(&set.pairs[60], 1.0).unwrap();
        assert!(r60 < r10, "residuals: n=10 → {r10}, n=60 → {r60}");
    }

    #[test]
    fn wkb_residual_rejects_points_outside_domain() {
        let cfg = SolverConfig::new(2);
        let set = solve_eigenpairs(&PotentialSpec::harmonic(), &cfg).unwrap();
        assert!(wkb_residual(&set.pairs[0], set.domain * 2.0).is_err());
    }

    #[test]
    fn sign_lookup_respects_parity() {
        let cfg = SolverConfig::new(9);
        let set = solve_eigenpairs(&PotentialSpec::harmonic(), &cfg).unwrap();
        for pair in &set.pairs {
            for x in [0.3, 0.9, 1.7] {
                let plus = eigenfunction_sign_at(&set, pair, x).unwrap();
                let minus = eigenfunction_sign_at(&set, pair, -x).unwrap();
                assert_eq!(minus, plus.parity_flipped(pair.index as u64));
            }
        }
        assert!(eigenfunction_sign_at(&set, &set.pairs[0], set.domain + 1.0).is_err());
    }

    #[test]
    fn potential_validation() {
        assert!(PotentialSpec::new(vec![1.0]).is_err()); // constant
        assert!(PotentialSpec::new(vec![0.0, -1.0]).is_err()); // not confining
        assert!(PotentialSpec::new(vec![0.0, 0.0, 0.0]).is_err());
        assert!(PotentialSpec::parse("0,0,1").is_ok());
        assert!(PotentialSpec::parse("0,a").is_err());
        let v = PotentialSpec::parse("1,0,2").unwrap();
        assert_eq!(v.eval(1.0), 3.0);
        assert_eq!(v.eval(0.0), 1.0);
    }

    #[test]
    fn starved_bisection_reports_non_convergence() {
        let mut cfg = SolverConfig::new(2);
        cfg.max_bisection_iterations = 2;
        let err = solve_eigenpairs(&PotentialSpec::harmonic(), &cfg).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { .. }));
    }

    #[test]
    fn eigenpair_set_roundtrips_through_json() {
        let cfg = SolverConfig::new(2);
        let set = solve_eigenpairs(&PotentialSpec::harmonic(), &cfg).unwrap();
        let text = serde_json::to_string(&set).unwrap();
        let back: EigenpairSet = serde_json::from_str(&text).unwrap();
        assert_eq!(set, back);
    }
}
