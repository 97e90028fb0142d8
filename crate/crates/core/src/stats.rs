//! Exact moment statistics of tile-count distributions, plus an approximate
//! growth-rate estimate for counting sequences.
//!
//! A weight enumerator restricted to one variable is the probability
//! generating function of "number of tiles of that kind in a uniformly random
//! tiling", up to the total count. Repeated formal differentiation at 1 gives
//! the factorial moments exactly; raw and central moments follow by exact
//! rational arithmetic. Because the conventional standardized third moment
//! `mu3 / sigma^3` is irrational in general, the third moment is reported as
//! the *signed squared skewness* `mu3 * |mu3| / mu2^3` and the fourth as the
//! kurtosis `mu4 / mu2^2`; both are exact rationals, and both are undefined
//! (absent) for degenerate distributions with zero variance.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cfinite::CFinite;
use crate::exact::{Int, MultiPoly, Rat};

/// Exact per-index moment record of a weight enumerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentRecord {
    pub index: usize,
    /// Total number of tilings (the enumerator at all ones).
    pub count: Rat,
    pub mean: Rat,
    pub variance: Rat,
    /// `sign(mu3) * mu3^2 / mu2^3`; `None` when the variance vanishes or the
    /// requested order is below 3.
    pub skewness_squared: Option<Rat>,
    /// `mu4 / mu2^2`; `None` when the variance vanishes or the requested
    /// order is below 4.
    pub kurtosis: Option<Rat>,
}

/// Error type of the statistics layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StatsError {
    /// The enumerator at `index` has no tilings at all.
    ZeroEnumerator { index: usize },
    /// A weight enumerator must have nonnegative coefficients.
    NegativeCoefficient { index: usize },
    /// Moment order outside 2..=4.
    UnsupportedOrder { up_to: usize },
    /// Growth-rate estimation needs an eventually positive sequence.
    NotEventuallyPositive,
    /// Growth-rate estimation needs a sampling index of at least 2.
    IndexTooSmall,
}

impl fmt::Display for StatsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatsError::ZeroEnumerator { index } => {
                write!(f, "enumerator at index {index} has no tilings")
            }
            StatsError::NegativeCoefficient { index } => {
                write!(f, "enumerator at index {index} has a negative coefficient")
            }
            StatsError::UnsupportedOrder { up_to } => {
                write!(f, "moment order {up_to} unsupported (expected 2..=4)")
            }
            StatsError::NotEventuallyPositive => {
                write!(f, "sequence is not positive around the sampling index")
            }
            StatsError::IndexTooSmall => write!(f, "sampling index must be at least 2"),
        }
    }
}

impl core::error::Error for StatsError {}

/// Exact moments (up to order `up_to`, between 2 and 4) of the tile-count
/// random variables defined by `polys`: the `n`-th polynomial restricted to
/// `variable` (all other variables set to one) is treated as the weight
/// enumerator of a uniformly random tiling.
pub fn weighted_moments(
    polys: &[MultiPoly],
    variable: usize,
    up_to: usize,
) -> Result<Vec<MomentRecord>, StatsError> {
    if !(2..=4).contains(&up_to) {
        return Err(StatsError::UnsupportedOrder { up_to });
    }
    polys
        .iter()
        .enumerate()
        .map(|(index, poly)| moments_of(index, poly, variable, up_to))
        .collect()
}

fn moments_of(
    index: usize,
    poly: &MultiPoly,
    variable: usize,
    up_to: usize,
) -> Result<MomentRecord, StatsError> {
    let coeffs = poly.restrict(variable);
    if coeffs.iter().any(Signed::is_negative) {
        return Err(StatsError::NegativeCoefficient { index });
    }
    let count: Rat = coeffs.iter().fold(Rat::zero(), |acc, c| acc + c);
    if count.is_zero() {
        return Err(StatsError::ZeroEnumerator { index });
    }
    // factorial moments f_k = u^(k)(1) / u(1); a coefficient at exponent e
    // contributes the falling factorial e (e-1) ... (e-k+1)
    let mut factorial = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
    for (e, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut falling = Rat::one();
        for k in 1..=4usize {
            if k > e {
                break;
            }
            falling *= Rat::from_integer(Int::from((e - k + 1) as u64));
            factorial[k - 1] += c * &falling;
        }
    }
    for f in &mut factorial {
        *f /= &count;
    }
    let [f1, f2, f3, f4] = factorial;
    // raw moments via Stirling numbers of the second kind
    let m1 = f1.clone();
    let m2 = &f2 + &f1;
    let m3 = &f3 + Rat::from_integer(Int::from(3)) * &f2 + &f1;
    let m4 =
        &f4 + Rat::from_integer(Int::from(6)) * &f3 + Rat::from_integer(Int::from(7)) * &f2 + &f1;
    // central moments
    let mu2 = &m2 - &m1 * &m1;
    let mu3 = &m3 - Rat::from_integer(Int::from(3)) * &m1 * &m2
        + Rat::from_integer(Int::from(2)) * &m1 * &m1 * &m1;
    let mu4 = &m4 - Rat::from_integer(Int::from(4)) * &m1 * &m3
        + Rat::from_integer(Int::from(6)) * &m1 * &m1 * &m2
        - Rat::from_integer(Int::from(3)) * &m1 * &m1 * &m1 * &m1;
    debug_assert!(!mu2.is_negative());
    let skewness_squared = if up_to >= 3 && !mu2.is_zero() {
        let sq = &mu3 * &mu3 / (&mu2 * &mu2 * &mu2);
        Some(if mu3.is_negative() { -sq } else { sq })
    } else {
        None
    };
    let kurtosis = if up_to >= 4 && !mu2.is_zero() {
        Some(&mu4 / (&mu2 * &mu2))
    } else {
        None
    };
    Ok(MomentRecord {
        index,
        count,
        mean: m1,
        variance: mu2,
        skewness_squared,
        kurtosis,
    })
}

/// An approximate dominant growth ratio with a stated error bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrowthEstimate {
    pub estimate: f64,
    /// Distance between the last two consecutive-term ratios — a
    /// stabilisation heuristic, not a rigorous bound.
    pub error_bound: f64,
    /// The index at which the ratio was sampled.
    pub index: usize,
}

/// Estimates the dominant growth ratio of the sequence of `cf` from the
/// consecutive-term ratios `a(index+1)/a(index)` and `a(index)/a(index-1)`.
/// The terms in a window around the sampling index must be strictly positive.
pub fn growth_rate(cf: &CFinite, index: usize) -> Result<GrowthEstimate, StatsError> {
    if index < 2 {
        return Err(StatsError::IndexTooSmall);
    }
    let terms = cf.terms(index + 2);
    let window_start = index.saturating_sub(8);
    if terms[window_start..].iter().any(|t| !t.is_positive()) {
        return Err(StatsError::NotEventuallyPositive);
    }
    let r_prev = &terms[index] / &terms[index - 1];
    let r_last = &terms[index + 1] / &terms[index];
    let estimate = rat_to_f64(&r_last);
    let drift = rat_to_f64(&(&r_last - &r_prev));
    let error_bound = if drift < 0.0 { -drift } else { drift };
    Ok(GrowthEstimate {
        estimate,
        error_bound,
        index,
    })
}

/// Rational-to-double conversion that stays accurate for operands far beyond
/// the double range, by shifting the quotient into an 80-bit window first.
pub fn rat_to_f64(r: &Rat) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let numer = r.numer();
    let denom = r.denom();
    let shift: i64 = 80 - (numer.bits() as i64 - denom.bits() as i64);
    let scaled: Int = if shift >= 0 {
        (numer << shift as usize) / denom
    } else {
        numer / (denom << (-shift) as usize)
    };
    let q = scaled.to_f64().unwrap_or(f64::INFINITY);
    scale_pow2(q, -shift)
}

/// `x * 2^k` without `std` float intrinsics: multiplies by exactly
/// representable powers of two in saturating chunks.
fn scale_pow2(mut x: f64, mut k: i64) -> f64 {
    while k > 0 {
        let step = k.min(1023);
        x *= f64::from_bits(((1023 + step) as u64) << 52);
        k -= step;
    }
    while k < 0 {
        let step = (-k).min(1022);
        x /= f64::from_bits(((1023 + step) as u64) << 52);
        k += step;
    }
    x
}
