//! Threshold functions for even sets and the constants derived from them.
//!
//! `f_3(x) = √(x/2) + (x/2)^{1/4} + 1/2` and
//! `f_k(x) = √(2x·f_{k-1}(x) + 1/4) + 1/2` for `k >= 4`. The weak-Sidon
//! family `F_k` uses the base `√(x/2) + 4(x/2)^{1/4} + 11` with the same
//! recursion. An even set with `r >= f_k(span)` elements contains a
//! `k`-witness (see [`crate::constructive::construct_even_lemma`]).
//!
//! Evaluation is in `f64`; each recursion level costs a handful of roundings,
//! well under `1e-12` relative error per level. Dominance checks that land
//! within the safety margin are recomputed in double-double arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use twofloat::TwoFloat;

use crate::error::{Error, Result};

/// Which base the recursion starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundVariant {
    /// `f_k`, from the Sidon set bound.
    Strict,
    /// `F_k`, from the weak Sidon set bound.
    Weak,
}

impl BoundVariant {
    /// `(coefficient of (x/2)^{1/4}, additive term)` of the base level.
    pub fn base_constants(self) -> (f64, f64) {
        match self {
            BoundVariant::Strict => (1.0, 0.5),
            BoundVariant::Weak => (4.0, 11.0),
        }
    }
}

impl fmt::Display for BoundVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundVariant::Strict => "strict",
            BoundVariant::Weak => "weak",
        })
    }
}

impl std::str::FromStr for BoundVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" | "f" => Ok(BoundVariant::Strict),
            "weak" | "F" => Ok(BoundVariant::Weak),
            other => Err(Error::PreconditionViolation(format!("unknown variant {other:?}"))),
        }
    }
}

trait Real: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> {
    fn lift(v: f64) -> Self;
    fn root(self) -> Self;
}

impl Real for f64 {
    fn lift(v: f64) -> Self {
        v
    }
    fn root(self) -> Self {
        self.sqrt()
    }
}

impl Real for TwoFloat {
    fn lift(v: f64) -> Self {
        TwoFloat::from(v)
    }
    fn root(self) -> Self {
        self.sqrt()
    }
}

fn bound_generic<T: Real>(k: usize, x: T, variant: BoundVariant) -> T {
    let (coef, add) = variant.base_constants();
    let half = x * T::lift(0.5);
    let r = half.root();
    let mut v = r + T::lift(coef) * r.root() + T::lift(add);
    for _ in 3..k {
        v = (T::lift(2.0) * x * v + T::lift(0.25)).root() + T::lift(0.5);
    }
    v
}

fn check_domain(k: usize, x: f64) -> Result<()> {
    if k < 3 {
        return Err(Error::Domain(format!("k = {k} < 3")));
    }
    if !(x >= 1.0) || !x.is_finite() {
        return Err(Error::Domain(format!("x = {x} is not a finite real >= 1")));
    }
    Ok(())
}

/// `f_k(x)` or `F_k(x)`.
pub fn eval_bound(k: usize, x: f64, variant: BoundVariant) -> Result<f64> {
    check_domain(k, x)?;
    Ok(bound_generic(k, x, variant))
}

/// Upper envelope `2^{1-3/2^{k-2}} x^{1-1/2^{k-2}} + 2x^{1-3/2^{k-1}}` for `f_k`.
pub fn envelope(k: usize, x: f64) -> f64 {
    let p = 2f64.powi(k as i32 - 2);
    2f64.powf(1.0 - 3.0 / p) * x.powf(1.0 - 1.0 / p) + 2.0 * x.powf(1.0 - 3.0 / (2.0 * p))
}

/// "Is `slope·x + α·C + β > bound_k(x)` for every `x >= 1`?"
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DominanceQuery {
    pub slope: Ratio<i64>,
    pub alpha: Ratio<i64>,
    pub beta: Ratio<i64>,
    pub k: usize,
    pub variant: BoundVariant,
    pub c: i64,
}

impl DominanceQuery {
    /// `x/12 + C/2 - 2 > f_5(x)`, the inequality fixing the five-term constant.
    pub fn g5(c: i64) -> Self {
        DominanceQuery {
            slope: Ratio::new(1, 12),
            alpha: Ratio::new(1, 2),
            beta: Ratio::from_integer(-2),
            k: 5,
            variant: BoundVariant::Strict,
            c,
        }
    }

    /// `(x - 6)/16 + C/2 > F_4(x)`, the inequality for positive 4-witnesses.
    pub fn h4(c: i64) -> Self {
        DominanceQuery {
            slope: Ratio::new(1, 16),
            alpha: Ratio::new(1, 2),
            beta: Ratio::new(-6, 16),
            k: 4,
            variant: BoundVariant::Weak,
            c,
        }
    }

    pub fn with_c(self, c: i64) -> Self {
        DominanceQuery { c, ..self }
    }

    fn offset(&self) -> Ratio<i64> {
        self.alpha * self.c + self.beta
    }
}

fn ratio_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn ratio_dd(r: Ratio<i64>) -> TwoFloat {
    TwoFloat::from(*r.numer()) / TwoFloat::from(*r.denom())
}

const SEARCH_HI: f64 = 1e14;
const MARGIN: f64 = 1e-6;
const DD_MARGIN: f64 = 1e-12;

/// Location and value of `max_{x >= 1} (bound_k(x) - slope·x)`.
///
/// The gap is concave (bound concave increasing, minus a line), so ternary
/// search on `[1, 1e14]` to x-precision `1e-3` finds the maximiser.
pub fn max_gap(k: usize, variant: BoundVariant, slope: f64) -> Result<(f64, f64)> {
    check_domain(k, 1.0)?;
    if !(slope > 0.0) {
        return Err(Error::Domain(format!("slope {slope} must be positive")));
    }
    let gap = |x: f64| bound_generic(k, x, variant) - slope * x;
    let (mut lo, mut hi) = (1.0f64, SEARCH_HI);
    // beyond ~1e3 iterations f64 spacing stops the bracket from shrinking
    for _ in 0..1000 {
        if hi - lo < 1e-3 {
            break;
        }
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if gap(m1) < gap(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    let x = 0.5 * (lo + hi);
    Ok((x, gap(x)))
}

fn max_gap_dd(k: usize, variant: BoundVariant, slope: TwoFloat, near: f64) -> TwoFloat {
    let gap = |x: TwoFloat| bound_generic(k, x, variant) - slope * x;
    let mut lo = TwoFloat::from((near * (1.0 - 1e-3)).max(1.0));
    let mut hi = TwoFloat::from((near * (1.0 + 1e-3)).min(SEARCH_HI));
    let third = TwoFloat::from(1.0) / TwoFloat::from(3.0);
    for _ in 0..300 {
        let w = (hi - lo) * third;
        let m1 = lo + w;
        let m2 = hi - w;
        if gap(m1) < gap(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    gap((lo + hi) * TwoFloat::from(0.5))
}

/// True iff `slope·x + offset(C) > bound(x)` for all `x >= 1`.
///
/// Decided at the maximiser of the gap with an absolute safety margin of
/// `1e-6` plus the rounding error of the operands; ties inside that margin
/// are re-decided in double-double arithmetic, and ties that survive the
/// extended margin yield [`Error::PrecisionIndeterminate`].
pub fn check_dominance(q: &DominanceQuery) -> Result<bool> {
    let slope = ratio_f64(q.slope);
    let (x, gap) = max_gap(q.k, q.variant, slope)?;
    let offset = ratio_f64(q.offset());
    let margin = MARGIN + 64.0 * f64::EPSILON * (slope * x).abs().max(offset.abs());
    let diff = offset - gap;
    if diff > margin {
        return Ok(true);
    }
    if diff < -margin {
        return Ok(false);
    }
    let gap_dd = max_gap_dd(q.k, q.variant, ratio_dd(q.slope), x);
    let diff_dd = ratio_dd(q.offset()) - gap_dd;
    if diff_dd > DD_MARGIN {
        Ok(true)
    } else if diff_dd < -DD_MARGIN {
        Ok(false)
    } else {
        Err(Error::PrecisionIndeterminate(format!(
            "C = {}: offset minus maximal gap is {:e} at x ≈ {x:.3}",
            q.c,
            diff_dd.hi()
        )))
    }
}

/// Smallest `C` in `[lo, hi]` for which `template.with_c(C)` dominates.
///
/// Relies on dominance being monotone in `C` (the offset is increasing in
/// `C` whenever `α > 0`).
pub fn minimal_constant(template: DominanceQuery, lo: i64, hi: i64) -> Result<i64> {
    if *template.alpha.numer() <= 0 {
        return Err(Error::Domain("alpha must be positive".into()));
    }
    if !check_dominance(&template.with_c(hi))? {
        return Err(Error::OutOfRange(format!("no C <= {hi} dominates")));
    }
    let (mut lo, mut hi) = (lo, hi);
    if check_dominance(&template.with_c(lo))? {
        return Ok(lo);
    }
    // invariant: lo fails, hi succeeds
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if check_dominance(&template.with_c(mid))? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// The smallest integer `C` with `x/12 + C/2 - 2 > f_5(x)` for all `x >= 1`.
pub fn solve_g5_constant() -> Result<i64> {
    minimal_constant(DominanceQuery::g5(0), 1, 200_000_000)
}

/// Constant for positive 4-witnesses that is checked, not minimised.
pub const H4_CONSTANT: i64 = 3166;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthPoint {
    pub k: usize,
    pub x: f64,
    pub f_x: f64,
    pub f_2x: f64,
    pub envelope: f64,
    /// `2 f_k(x) > f_k(2x)`
    pub sublinear: bool,
    /// `f_k(x) <= envelope`
    pub within_envelope: bool,
}

/// Checks the doubling and envelope inequalities at one point.
pub fn check_growth_at(k: usize, x: f64) -> Result<GrowthPoint> {
    let f_x = eval_bound(k, x, BoundVariant::Strict)?;
    let f_2x = eval_bound(k, 2.0 * x, BoundVariant::Strict)?;
    let env = envelope(k, x);
    Ok(GrowthPoint {
        k,
        x,
        f_x,
        f_2x,
        envelope: env,
        sublinear: 2.0 * f_x > f_2x,
        within_envelope: f_x <= env,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthLevel {
    pub k: usize,
    pub samples: usize,
    pub sublinear_failures: usize,
    pub envelope_failures: usize,
    pub monotone_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthReport {
    pub seed: u64,
    pub levels: Vec<GrowthLevel>,
    pub passed: bool,
}

fn log_uniform_samples(count: usize, lo_exp: f64, hi_exp: f64, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut xs: Vec<f64> =
        (0..count).map(|_| 10f64.powf(rng.gen_range(lo_exp..hi_exp))).collect();
    xs.sort_by(f64::total_cmp);
    xs
}

/// Samples `x ∈ [1, 1e6]` log-uniformly and checks, for each `k` in
/// `3..=k_max`: `2f_k(x) > f_k(2x)`, `f_k(x) <=` envelope, and that `f_k` is
/// increasing across consecutive samples.
pub fn check_growth_properties(k_max: usize, sample_count: usize, seed: u64) -> Result<GrowthReport> {
    if k_max < 3 || sample_count == 0 {
        return Err(Error::Domain("need k_max >= 3 and at least one sample".into()));
    }
    let xs = log_uniform_samples(sample_count, 0.0, 6.0, seed);
    let mut levels = Vec::new();
    for k in 3..=k_max {
        let mut level = GrowthLevel {
            k,
            samples: xs.len(),
            sublinear_failures: 0,
            envelope_failures: 0,
            monotone_failures: 0,
        };
        let mut prev: Option<(f64, f64)> = None;
        for &x in &xs {
            let p = check_growth_at(k, x)?;
            level.sublinear_failures += usize::from(!p.sublinear);
            level.envelope_failures += usize::from(!p.within_envelope);
            if let Some((px, pf)) = prev {
                if px < x && !(pf < p.f_x) {
                    level.monotone_failures += 1;
                }
            }
            prev = Some((x, p.f_x));
        }
        levels.push(level);
    }
    let passed = levels
        .iter()
        .all(|l| l.sublinear_failures + l.envelope_failures + l.monotone_failures == 0);
    Ok(GrowthReport { seed, levels, passed })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneralUpperReport {
    pub samples: usize,
    /// `(k, n)` pairs where `f_k(2n) >= 4 n^{1 - 1/2^{k-2}}`.
    pub failures: Vec<(usize, f64)>,
    /// Smallest observed ratio `4 n^{1-1/2^{k-2}} / f_k(2n)` per `k`.
    pub min_ratio: Vec<(usize, f64)>,
}

impl GeneralUpperReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Bound-function form of the general upper estimate: for sampled
/// `n ∈ [1e6, 1e12]`, `f_k(2n) < 4 n^{1 - 1/2^{k-2}}`.
pub fn check_general_upper(k_max: usize, sample_count: usize, seed: u64) -> Result<GeneralUpperReport> {
    if k_max < 3 || sample_count == 0 {
        return Err(Error::Domain("need k_max >= 3 and at least one sample".into()));
    }
    let ns = log_uniform_samples(sample_count, 6.0, 12.0, seed);
    let mut failures = Vec::new();
    let mut min_ratio = Vec::new();
    for k in 3..=k_max {
        let e = 1.0 - 1.0 / 2f64.powi(k as i32 - 2);
        let mut worst = f64::INFINITY;
        for &n in &ns {
            let lhs = eval_bound(k, 2.0 * n, BoundVariant::Strict)?;
            let rhs = 4.0 * n.powf(e);
            worst = worst.min(rhs / lhs);
            if lhs >= rhs {
                failures.push((k, n));
            }
        }
        min_ratio.push((k, worst));
    }
    Ok(GeneralUpperReport { samples: ns.len(), failures, min_ratio })
}
