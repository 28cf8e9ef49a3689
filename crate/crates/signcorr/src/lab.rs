//! Empirical estimation of sign-correlation limits.
//!
//! Any family is adapted to the estimator through [`SignPairSource`], a
//! deterministic generator n ↦ (σₓ(n), σᵧ(n)). Counting is integer-exact:
//! an index agrees when both signs are nonzero and equal, zero-hits are
//! tallied separately and excluded from the agreement numerator while the
//! denominator stays N, so zero_hits/N bounds their influence.
//!
//! Estimation splits [0, N) into contiguous blocks whose boundaries depend
//! only on N and the checkpoint schedule. Blocks are counted in parallel and
//! merged as a sum of integer counters, so reports are reproducible
//! bit-for-bit across runs and across thread counts.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::equidist::parity_equidistribution_report;
use crate::error::{Error, Result};
use crate::predictors::{
    hermite_limit, laguerre_limit, parity_split_limit, single_phase_limit, small_ratio_of,
    wkb_family_limit, RationalRatio, RatioInput, WkbFamily,
};
use crate::sign::Sign;
use crate::solver::{eigenfunction_sign_at, EigenpairSet};
use crate::special::{
    AngleFraction, ChebyshevSignStream, HermitePoint, HermiteSignStream, LaguerreParams,
    LaguerreSignStream,
};

/// Names the family and evaluation points a source draws from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceInfo {
    pub family: String,
    pub x: String,
    pub y: String,
}

/// A positioned cursor over the sign pairs of a source.
pub trait SignPairCursor: Send {
    fn next_pair(&mut self) -> (Sign, Sign);

    /// Clones the cursor state, so a block can be replayed from here.
    fn fork(&self) -> Box<dyn SignPairCursor + Send>;

    /// Advances without classifying; sources with directly computable
    /// positions override this with an O(1) jump.
    fn skip(&mut self, count: u64) {
        for _ in 0..count {
            self.next_pair();
        }
    }
}

/// Deterministic, restartable generator of sign pairs.
pub trait SignPairSource: Sync {
    fn info(&self) -> SourceInfo;

    /// Cursor positioned at n = 0.
    fn start(&self) -> Box<dyn SignPairCursor + Send>;

    /// Number of indices available, when finite.
    fn len_limit(&self) -> Option<u64> {
        None
    }
}

/// A stream of signs that can be cloned and advanced cheaply.
trait SignStream: Iterator<Item = Sign> + Clone + Send + 'static {
    fn skip_ahead(&mut self, count: u64);
}

impl SignStream for HermiteSignStream {
    fn skip_ahead(&mut self, count: u64) {
        self.skip(count);
    }
}

impl SignStream for LaguerreSignStream {
    fn skip_ahead(&mut self, count: u64) {
        self.skip(count);
    }
}

impl SignStream for ChebyshevSignStream {
    fn skip_ahead(&mut self, count: u64) {
        self.skip(count);
    }
}

#[derive(Clone)]
struct StreamPairCursor<S: SignStream> {
    x: S,
    y: S,
}

impl<S: SignStream> SignPairCursor for StreamPairCursor<S> {
    fn next_pair(&mut self) -> (Sign, Sign) {
        (
            self.x.next().expect("sign streams are infinite"),
            self.y.next().expect("sign streams are infinite"),
        )
    }

    fn fork(&self) -> Box<dyn SignPairCursor + Send> {
        Box::new(self.clone())
    }

    fn skip(&mut self, count: u64) {
        self.x.skip_ahead(count);
        self.y.skip_ahead(count);
    }
}

/// Hermite eigenfamily signs at two points.
pub struct HermitePairSource {
    px: HermitePoint,
    py: HermitePoint,
}

impl HermitePairSource {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        Ok(HermitePairSource {
            px: HermitePoint::new(x)?,
            py: HermitePoint::new(y)?,
        })
    }
}

impl SignPairSource for HermitePairSource {
    fn info(&self) -> SourceInfo {
        SourceInfo {
            family: "hermite".into(),
            x: format!("{}", self.px.x()),
            y: format!("{}", self.py.x()),
        }
    }

    fn start(&self) -> Box<dyn SignPairCursor + Send> {
        Box::new(StreamPairCursor {
            x: HermiteSignStream::new(self.px),
            y: HermiteSignStream::new(self.py),
        })
    }
}

/// Radial Laguerre eigenfamily signs at two radii in a fixed dimension.
pub struct LaguerrePairSource {
    d: u32,
    params_x: LaguerreParams,
    params_y: LaguerreParams,
}

impl LaguerrePairSource {
    pub fn new(d: u32, r1: f64, r2: f64) -> Result<Self> {
        Ok(LaguerrePairSource {
            d,
            params_x: LaguerreParams::from_dimension(d, r1)?,
            params_y: LaguerreParams::from_dimension(d, r2)?,
        })
    }

    pub fn dimension(&self) -> u32 {
        self.d
    }
}

impl SignPairSource for LaguerrePairSource {
    fn info(&self) -> SourceInfo {
        SourceInfo {
            family: "laguerre".into(),
            x: format!("r1={}", self.params_x.r()),
            y: format!("r2={}", self.params_y.r()),
        }
    }

    fn start(&self) -> Box<dyn SignPairCursor + Send> {
        Box::new(StreamPairCursor {
            x: LaguerreSignStream::new(self.params_x),
            y: LaguerreSignStream::new(self.params_y),
        })
    }
}

/// Chebyshev signs at x = cos(2πa) and y = cos(2π·ratio·a).
pub struct ChebyshevPairSource {
    angle: AngleFraction,
    scaled: AngleFraction,
    ratio: u64,
}

impl ChebyshevPairSource {
    pub fn new(angle: AngleFraction, ratio: u64) -> Result<Self> {
        Ok(ChebyshevPairSource {
            angle,
            scaled: angle.scaled(ratio)?,
            ratio,
        })
    }

    pub fn angle(&self) -> AngleFraction {
        self.angle
    }

    pub fn ratio(&self) -> u64 {
        self.ratio
    }
}

impl SignPairSource for ChebyshevPairSource {
    fn info(&self) -> SourceInfo {
        SourceInfo {
            family: "chebyshev".into(),
            x: format!("angle={}", self.angle.value()),
            y: format!("angle={}", self.scaled.value()),
        }
    }

    fn start(&self) -> Box<dyn SignPairCursor + Send> {
        Box::new(StreamPairCursor {
            x: ChebyshevSignStream::new(self.angle),
            y: ChebyshevSignStream::new(self.scaled),
        })
    }
}

/// Sign pairs materialized up front, e.g. read off solved eigenfunctions.
pub struct PrecomputedPairSource {
    info: SourceInfo,
    pairs: Arc<Vec<(Sign, Sign)>>,
}

impl PrecomputedPairSource {
    pub fn new(info: SourceInfo, pairs: Vec<(Sign, Sign)>) -> Self {
        PrecomputedPairSource {
            info,
            pairs: Arc::new(pairs),
        }
    }
}

struct PrecomputedCursor {
    pairs: Arc<Vec<(Sign, Sign)>>,
    idx: usize,
}

impl SignPairCursor for PrecomputedCursor {
    fn next_pair(&mut self) -> (Sign, Sign) {
        let out = self.pairs[self.idx];
        self.idx += 1;
        out
    }

    fn fork(&self) -> Box<dyn SignPairCursor + Send> {
        Box::new(PrecomputedCursor {
            pairs: Arc::clone(&self.pairs),
            idx: self.idx,
        })
    }

    fn skip(&mut self, count: u64) {
        self.idx += count as usize;
    }
}

impl SignPairSource for PrecomputedPairSource {
    fn info(&self) -> SourceInfo {
        self.info.clone()
    }

    fn start(&self) -> Box<dyn SignPairCursor + Send> {
        Box::new(PrecomputedCursor {
            pairs: Arc::clone(&self.pairs),
            idx: 0,
        })
    }

    fn len_limit(&self) -> Option<u64> {
        Some(self.pairs.len() as u64)
    }
}

/// Running state of the estimate at one checkpoint.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheckpointEstimate {
    pub n: u64,
    pub agree: u64,
    pub estimate: f64,
}

/// Outcome of a full estimation pass.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub n: u64,
    pub agree: u64,
    pub disagree: u64,
    pub zero_hits: u64,
    /// agree / n.
    pub estimate: f64,
    pub checkpoints: Vec<CheckpointEstimate>,
}

/// Default checkpoint schedule: powers of two below n, plus n itself.
pub fn default_checkpoints(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut c = 1u64;
    while c < n {
        out.push(c);
        match c.checked_mul(2) {
            Some(next) => c = next,
            None => break,
        }
    }
    out.push(n);
    out
}

/// Contiguous blocks counted independently; boundaries depend only on n and
/// the checkpoints, never on the number of worker threads.
fn block_boundaries(n: u64, checkpoints: &[u64]) -> Vec<u64> {
    let block = (n / 64).max(65_536);
    let mut bounds: Vec<u64> = Vec::new();
    bounds.push(0);
    bounds.extend(checkpoints.iter().copied().filter(|&c| c < n));
    let mut b = block;
    while b < n {
        bounds.push(b);
        b += block;
    }
    bounds.push(n);
    bounds.sort_unstable();
    bounds.dedup();
    bounds
}

#[derive(Debug, Clone, Copy, Default)]
struct SegmentCounts {
    agree: u64,
    disagree: u64,
    zero_hits: u64,
}

fn count_segment(cursor: &mut dyn SignPairCursor, len: u64) -> SegmentCounts {
    let mut c = SegmentCounts::default();
    for _ in 0..len {
        let (sx, sy) = cursor.next_pair();
        if sx.is_zero() || sy.is_zero() {
            c.zero_hits += 1;
        } else if sx == sy {
            c.agree += 1;
        } else {
            c.disagree += 1;
        }
    }
    c
}

/// Single deterministic pass over n = 0..N−1 counting sign agreements.
///
/// `checkpoints` defaults to powers of two plus the final N; entries outside
/// [1, N] are rejected.
pub fn estimate_limit(
    source: &dyn SignPairSource,
    n: u64,
    checkpoints: Option<&[u64]>,
) -> Result<CorrelationReport> {
    if n == 0 {
        return Err(Error::EmptyCount);
    }
    if let Some(limit) = source.len_limit() {
        if n > limit {
            return Err(Error::Config(format!(
                "requested {n} indices but the source provides only {limit}"
            )));
        }
    }
    let schedule = match checkpoints {
        Some(c) => {
            let mut s: Vec<u64> = c.to_vec();
            s.sort_unstable();
            s.dedup();
            if s.iter().any(|&v| v == 0 || v > n) {
                return Err(Error::Config("checkpoints must lie in [1, n]".into()));
            }
            if s.last() != Some(&n) {
                s.push(n);
            }
            s
        }
        None => default_checkpoints(n),
    };

    let bounds = block_boundaries(n, &schedule);
    let mut segments: Vec<(u64, u64, Box<dyn SignPairCursor + Send>)> =
        Vec::with_capacity(bounds.len() - 1);
    let mut walker = source.start();
    let mut pos = 0u64;
    for w in bounds.windows(2) {
        let (a, b) = (w[0], w[1]);
        walker.skip(a - pos);
        pos = a;
        segments.push((a, b, walker.fork()));
    }

    let counted: Vec<SegmentCounts> = segments
        .into_par_iter()
        .map(|(a, b, mut cursor)| count_segment(cursor.as_mut(), b - a))
        .collect();

    let mut totals = SegmentCounts::default();
    let mut checkpoint_rows = Vec::with_capacity(schedule.len());
    let mut schedule_iter = schedule.iter().peekable();
    for (w, c) in bounds.windows(2).zip(counted.iter()) {
        totals.agree += c.agree;
        totals.disagree += c.disagree;
        totals.zero_hits += c.zero_hits;
        let end = w[1];
        while let Some(&&cp) = schedule_iter.peek() {
            if cp == end {
                checkpoint_rows.push(CheckpointEstimate {
                    n: cp,
                    agree: totals.agree,
                    estimate: totals.agree as f64 / cp as f64,
                });
                schedule_iter.next();
            } else {
                break;
            }
        }
    }

    Ok(CorrelationReport {
        n,
        agree: totals.agree,
        disagree: totals.disagree,
        zero_hits: totals.zero_hits,
        estimate: totals.agree as f64 / n as f64,
        checkpoints: checkpoint_rows,
    })
}

/// One row of a remainder scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RemainderPoint {
    pub n: u64,
    pub agree: u64,
    pub estimate: f64,
    /// R(N) = agree(N) − target·N.
    pub remainder: f64,
}

/// Remainder series R(N) = agree(N) − ℓ·N against a target density ℓ.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RemainderScan {
    pub target: f64,
    pub n: u64,
    pub agree: u64,
    pub zero_hits: u64,
    pub estimate: f64,
    /// Maximum of |R(N)| over every prefix N ≤ n, not just emitted rows.
    pub max_abs_remainder: f64,
    /// Rows at multiples of the stride, plus the final N.
    pub series: Vec<RemainderPoint>,
}

/// Sequential scan emitting the remainder series and its running maximum.
pub fn remainder_scan(
    source: &dyn SignPairSource,
    n_max: u64,
    target: f64,
    stride: u64,
) -> Result<RemainderScan> {
    if n_max == 0 {
        return Err(Error::EmptyCount);
    }
    if !(0.0..=1.0).contains(&target) {
        return Err(Error::InvalidTarget(target));
    }
    let stride = stride.max(1);
    if let Some(limit) = source.len_limit() {
        if n_max > limit {
            return Err(Error::Config(format!(
                "requested {n_max} indices but the source provides only {limit}"
            )));
        }
    }

    let mut cursor = source.start();
    let mut agree = 0u64;
    let mut zero_hits = 0u64;
    let mut max_abs = 0.0f64;
    let mut series = Vec::new();
    for i in 1..=n_max {
        let (sx, sy) = cursor.next_pair();
        if sx.is_zero() || sy.is_zero() {
            zero_hits += 1;
        } else if sx == sy {
            agree += 1;
        }
        let remainder = agree as f64 - target * i as f64;
        if remainder.abs() > max_abs {
            max_abs = remainder.abs();
        }
        if i % stride == 0 || i == n_max {
            series.push(RemainderPoint {
                n: i,
                agree,
                estimate: agree as f64 / i as f64,
                remainder,
            });
        }
    }

    Ok(RemainderScan {
        target,
        n: n_max,
        agree,
        zero_hits,
        estimate: agree as f64 / n_max as f64,
        max_abs_remainder: max_abs,
        series,
    })
}

/// Exact agreement statistics of the periodic Chebyshev orbit at a rational
/// angle: the sign pair sequence repeats with period den, so counts at any N
/// follow from one period of integer residues.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChebyshevOrbitProfile {
    pub period: u64,
    pub agree_per_period: u64,
    pub zero_per_period: u64,
    /// agree_prefix[k] = agreements among indices 0..k, length period + 1.
    pub agree_prefix: Vec<u64>,
}

impl ChebyshevOrbitProfile {
    pub fn new(num: u64, den: u64, ratio: u64) -> Result<Self> {
        let angle = AngleFraction::rational(num, den)?;
        let AngleFraction::Rational { num, den } = angle else {
            unreachable!()
        };
        let scaled = angle.scaled(ratio)?;
        let AngleFraction::Rational {
            num: num_y,
            den: den_y,
        } = scaled
        else {
            unreachable!()
        };

        let mut agree_prefix = Vec::with_capacity(den as usize + 1);
        agree_prefix.push(0u64);
        let mut agree = 0u64;
        let mut zeros = 0u64;
        for n in 0..den {
            let sx = residue_sign(n as u128 * num as u128 % den as u128, den);
            // The scaled angle may carry a different reduced denominator.
            let sy = residue_sign(n as u128 * num_y as u128 % den_y as u128, den_y);
            if sx.is_zero() || sy.is_zero() {
                zeros += 1;
            } else if sx == sy {
                agree += 1;
            }
            agree_prefix.push(agree);
        }
        Ok(ChebyshevOrbitProfile {
            period: den,
            agree_per_period: agree,
            zero_per_period: zeros,
            agree_prefix,
        })
    }

    /// Exact number of agreements among the first n indices.
    pub fn agree_count_at(&self, n: u64) -> u64 {
        (n / self.period) * self.agree_per_period + self.agree_prefix[(n % self.period) as usize]
    }

    /// Exact orbit density as a reduced fraction.
    pub fn density_fraction(&self) -> (u64, u64) {
        let g = num_integer::gcd(self.agree_per_period, self.period);
        (self.agree_per_period / g, self.period / g)
    }

    pub fn density(&self) -> f64 {
        self.agree_per_period as f64 / self.period as f64
    }
}

fn residue_sign(r: u128, den: u64) -> Sign {
    let d = den as u128;
    match (4 * r).cmp(&d) {
        std::cmp::Ordering::Less => Sign::Plus,
        std::cmp::Ordering::Equal => Sign::Zero,
        std::cmp::Ordering::Greater => match (4 * r).cmp(&(3 * d)) {
            std::cmp::Ordering::Less => Sign::Minus,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Plus,
        },
    }
}

/// Family and points of one experiment.
pub enum FamilyConfig {
    Hermite {
        x: f64,
        y: f64,
    },
    Laguerre {
        d: u32,
        r1: f64,
        r2: f64,
    },
    Chebyshev {
        angle: AngleFraction,
        ratio: u64,
    },
    Potential {
        set: Arc<EigenpairSet>,
        x: f64,
        y: f64,
    },
}

/// Which closed-form value to attach to the measurement.
pub enum PredictorChoice {
    /// Pick the predictor matching the family.
    Auto,
    /// Attach no prediction.
    None,
    SinglePhase { theta: f64 },
    ParitySplit,
    Hermite,
    Laguerre,
    WkbMixture(WkbFamily),
}

/// Remainder-scan request attached to an experiment.
pub struct ScanConfig {
    /// Explicit target density; `None` uses the family's predicted density.
    pub target: Option<f64>,
    pub stride: u64,
}

pub struct ExperimentConfig {
    pub family: FamilyConfig,
    pub n: u64,
    pub checkpoints: Option<Vec<u64>>,
    pub predictor: PredictorChoice,
    /// Declared exact ratio of the evaluation points (x/y, or r1/r2), used
    /// by predictors that require one. When absent, a small exact fraction
    /// is recovered from the floating-point points if possible.
    pub ratio: Option<RationalRatio>,
    pub scan: Option<ScanConfig>,
}

/// Everything produced by one experiment run.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentOutcome {
    pub info: SourceInfo,
    pub params: Map<String, Value>,
    pub report: CorrelationReport,
    pub prediction_method: Option<String>,
    pub prediction: Option<f64>,
    /// |estimate − prediction|.
    pub gap: Option<f64>,
    pub scan: Option<RemainderScan>,
    pub diagnostics: Map<String, Value>,
}

/// Prefix length over which reference deviations |count − ref·N| are
/// maximized in scan diagnostics.
const REFERENCE_DEVIATION_CAP: u64 = 10_000;

/// Builds the source, runs the estimator and optional remainder scan, and
/// attaches the matching closed-form prediction and diagnostics.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentOutcome> {
    let mut params = Map::new();
    let mut diagnostics = Map::new();

    let source: Box<dyn SignPairSource> = match &cfg.family {
        FamilyConfig::Hermite { x, y } => {
            params.insert("x".into(), json!(x));
            params.insert("y".into(), json!(y));
            Box::new(HermitePairSource::new(*x, *y)?)
        }
        FamilyConfig::Laguerre { d, r1, r2 } => {
            params.insert("d".into(), json!(d));
            params.insert("r1".into(), json!(r1));
            params.insert("r2".into(), json!(r2));
            Box::new(LaguerrePairSource::new(*d, *r1, *r2)?)
        }
        FamilyConfig::Chebyshev { angle, ratio } => {
            params.insert("angle".into(), json!(angle.value()));
            params.insert("ratio".into(), json!(ratio));
            Box::new(ChebyshevPairSource::new(*angle, *ratio)?)
        }
        FamilyConfig::Potential { set, x, y } => {
            params.insert("x".into(), json!(x));
            params.insert("y".into(), json!(y));
            params.insert("potential".into(), json!(set.potential.clone()));
            Box::new(potential_pair_source(set, *x, *y)?)
        }
    };
    params.insert("n".into(), json!(cfg.n));

    let (prediction_method, prediction) = resolve_prediction(cfg)?;

    let report = estimate_limit(source.as_ref(), cfg.n, cfg.checkpoints.as_deref())?;

    let scan = match &cfg.scan {
        Some(scan_cfg) => {
            let target = match scan_cfg.target {
                Some(t) => t,
                None => prediction.ok_or_else(|| {
                    Error::Config(
                        "scan target is 'auto' but no prediction is available for this family"
                            .into(),
                    )
                })?,
            };
            Some(remainder_scan(
                source.as_ref(),
                cfg.n,
                target,
                scan_cfg.stride,
            )?)
        }
        None => None,
    };

    if let FamilyConfig::Chebyshev { angle, ratio } = &cfg.family {
        chebyshev_diagnostics(source.as_ref(), angle, *ratio, cfg.n, &mut diagnostics)?;
    }
    if let FamilyConfig::Potential { set, x, .. } = &cfg.family {
        let (even, odd) = set.lambdas_by_parity();
        let h2 = parity_equidistribution_report(&even, &odd, *x)?;
        diagnostics.insert(
            "frequency_equidistribution".into(),
            serde_json::to_value(&h2)?,
        );
        diagnostics.insert("solved_indices".into(), json!(set.pairs.len()));
    }

    let gap = prediction.map(|p| (report.estimate - p).abs());

    Ok(ExperimentOutcome {
        info: source.info(),
        params,
        report,
        prediction_method,
        prediction,
        gap,
        scan,
        diagnostics,
    })
}

fn resolve_prediction(cfg: &ExperimentConfig) -> Result<(Option<String>, Option<f64>)> {
    let declared_or = |x: f64, y: f64| -> Result<RationalRatio> {
        match cfg.ratio {
            Some(r) => Ok(r),
            None => small_ratio_of(x, y, 1 << 20),
        }
    };
    match (&cfg.predictor, &cfg.family) {
        (PredictorChoice::None, _) => Ok((None, None)),
        (PredictorChoice::SinglePhase { theta }, _) => {
            let ratio = match cfg.ratio {
                Some(r) => r,
                None => match &cfg.family {
                    FamilyConfig::Chebyshev { ratio, .. } => RationalRatio::new(1, *ratio as i64)?,
                    FamilyConfig::Hermite { x, y } | FamilyConfig::Potential { x, y, .. } => {
                        small_ratio_of(*x, *y, 1 << 20)?
                    }
                    FamilyConfig::Laguerre { r1, r2, .. } => small_ratio_of(*r1, *r2, 1 << 20)?,
                },
            };
            Ok((
                Some("single-phase".into()),
                Some(single_phase_limit(&ratio, *theta).value),
            ))
        }
        (PredictorChoice::ParitySplit, FamilyConfig::Hermite { x, y })
        | (PredictorChoice::ParitySplit, FamilyConfig::Potential { x, y, .. }) => {
            let ratio = declared_or(*x, *y)?;
            Ok((
                Some("parity-split".into()),
                Some(parity_split_limit(&RatioInput::Rational(ratio))),
            ))
        }
        (PredictorChoice::ParitySplit, _) => {
            let ratio = cfg.ratio.ok_or_else(|| {
                Error::Config("the parity-split predictor requires an explicit ratio".into())
            })?;
            Ok((
                Some("parity-split".into()),
                Some(parity_split_limit(&RatioInput::Rational(ratio))),
            ))
        }
        (PredictorChoice::Hermite, FamilyConfig::Hermite { x, y })
        | (PredictorChoice::Auto, FamilyConfig::Hermite { x, y }) => match hermite_limit(*x, *y) {
            Ok(v) => Ok((Some("hermite".into()), Some(v))),
            Err(e) => match cfg.predictor {
                // Auto quietly skips when y/x is not an integer.
                PredictorChoice::Auto => Ok((None, None)),
                _ => Err(e),
            },
        },
        (PredictorChoice::Hermite, _) => Err(Error::Config(
            "the hermite predictor applies to the hermite family".into(),
        )),
        (PredictorChoice::Laguerre, FamilyConfig::Laguerre { d, r1, r2 })
        | (PredictorChoice::Auto, FamilyConfig::Laguerre { d, r1, r2 }) => {
            let ratio = declared_or(*r1, *r2)?;
            Ok((Some("laguerre".into()), Some(laguerre_limit(&ratio, *d)?)))
        }
        (PredictorChoice::Laguerre, _) => Err(Error::Config(
            "the laguerre predictor applies to the laguerre family".into(),
        )),
        (PredictorChoice::Auto, FamilyConfig::Chebyshev { angle, ratio }) => match angle {
            AngleFraction::Rational { num, den } => {
                let profile = ChebyshevOrbitProfile::new(*num, *den, *ratio)?;
                Ok((Some("periodic-orbit".into()), Some(profile.density())))
            }
            AngleFraction::Irrational(_) => {
                let r = RationalRatio::new(1, *ratio as i64)?;
                Ok((
                    Some("single-phase".into()),
                    Some(single_phase_limit(&r, 0.0).value),
                ))
            }
        },
        (PredictorChoice::Auto, FamilyConfig::Potential { x, y, .. }) => {
            let ratio = declared_or(*x, *y)?;
            Ok((
                Some("parity-split".into()),
                Some(parity_split_limit(&RatioInput::Rational(ratio))),
            ))
        }
        (PredictorChoice::WkbMixture(fam), _) => {
            let ratio = cfg.ratio.ok_or_else(|| {
                Error::Config("the wkb predictor requires an explicit ratio".into())
            })?;
            Ok((Some("wkb".into()), Some(wkb_family_limit(&ratio, fam))))
        }
    }
}

/// Chebyshev diagnostics: the equidistributed-model reference density and,
/// for rational angles, the exact periodic-orbit density it disagrees with.
fn chebyshev_diagnostics(
    source: &dyn SignPairSource,
    angle: &AngleFraction,
    ratio: u64,
    n: u64,
    diagnostics: &mut Map<String, Value>,
) -> Result<()> {
    let model_ratio = RationalRatio::new(1, ratio as i64)?;
    let reference = single_phase_limit(&model_ratio, 0.0).value;
    let cap = n.min(REFERENCE_DEVIATION_CAP);
    let ref_scan = remainder_scan(source, cap, reference, cap)?;

    let mut block = Map::new();
    block.insert("density".into(), json!(reference));
    block.insert("prefix_cap".into(), json!(cap));
    block.insert(
        "max_abs_deviation".into(),
        json!(ref_scan.max_abs_remainder),
    );
    block.insert(
        "deviation_within_10".into(),
        json!(ref_scan.max_abs_remainder <= 10.0),
    );
    diagnostics.insert("equidistributed_model".into(), Value::Object(block));

    if let AngleFraction::Rational { num, den } = angle {
        let profile = ChebyshevOrbitProfile::new(*num, *den, ratio)?;
        let (dn, dd) = profile.density_fraction();
        let mut block = Map::new();
        block.insert("period".into(), json!(profile.period));
        block.insert("density".into(), json!(profile.density()));
        block.insert("density_fraction".into(), json!(format!("{dn}/{dd}")));
        block.insert(
            "zero_hits_per_period".into(),
            json!(profile.zero_per_period),
        );
        diagnostics.insert("periodic_orbit".into(), Value::Object(block));
        if (profile.density() - reference).abs() > 1e-12 {
            diagnostics.insert(
                "note".into(),
                json!(format!(
                    "rational angle: the sign pattern is periodic with period {} and its exact \
                     agreement density {dn}/{dd} differs from the equidistributed-model density \
                     {reference}; the periodic-orbit value is the true limit",
                    profile.period
                )),
            );
        }
    }
    Ok(())
}

/// Adapts a solved eigenpair set to the estimator: signs of wₙ(x) and wₙ(y)
/// for every solved index, with parity reflection for negative arguments.
pub fn potential_pair_source(set: &EigenpairSet, x: f64, y: f64) -> Result<PrecomputedPairSource> {
    let pairs: Vec<(Sign, Sign)> = set
        .pairs
        .iter()
        .map(|p| -> Result<(Sign, Sign)> {
            Ok((
                eigenfunction_sign_at(set, p, x)?,
                eigenfunction_sign_at(set, p, y)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PrecomputedPairSource::new(
        SourceInfo {
            family: "potential".into(),
            x: format!("{x}"),
            y: format!("{y}"),
        },
        pairs,
    ))
}
