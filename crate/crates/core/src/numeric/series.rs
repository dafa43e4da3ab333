use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::real::{HPReal, PrecisionContext};
use crate::error::{Error, Result};
use crate::exact::IntPolynomial;

/// Terms inspected past the cut-off before an alternating tail is trusted.
pub const TAIL_LOOKAHEAD: u64 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesEvaluation {
    pub partial_sum: HPReal,
    pub terms_used: u64,
    /// `|t_{K+1}|` when the tail is verifiably alternating and shrinking.
    pub tail_bound: Option<HPReal>,
    pub monotone_tail: bool,
    /// `t_K`, the last term included.
    pub last_term: HPReal,
}

/// Horner evaluation of an integer polynomial at `at`.
pub fn eval_poly(p: &IntPolynomial, at: &HPReal) -> HPReal {
    let ctx = at.ctx();
    p.coeffs()
        .iter()
        .rev()
        .fold(HPReal::zero(ctx), |acc, c| &(&acc * at) + &HPReal::from_int(c, ctx))
}

/// Sum `t_{k0} + … + t_K`.
///
/// The tail is declared monotone only if `t_K, t_{K+1}, …, t_{K+4}` are all
/// nonzero, strictly shrinking in magnitude and alternating in sign; the
/// alternating-series estimate `|t_{K+1}|` is then reported as the bound.
pub fn sum_series<F>(mut term: F, k0: u64, k_max: u64, ctx: PrecisionContext) -> Result<SeriesEvaluation>
where
    F: FnMut(u64) -> HPReal,
{
    if k_max < k0 {
        return Err(Error::InvalidArgument(format!(
            "series depth {k_max} is below the first index {k0}"
        )));
    }
    let mut sum = HPReal::zero(ctx);
    let mut last = HPReal::zero(ctx);
    for k in k0..=k_max {
        last = term(k);
        sum = &sum + &last;
    }

    let mut window = vec![last.clone()];
    window.extend((1..=TAIL_LOOKAHEAD).map(|i| term(k_max + i)));
    let monotone = window.windows(2).all(|w| {
        let (a, b) = (&w[0], &w[1]);
        !b.is_zero() && a.signum() == -b.signum() && a.cmp_abs(b) == Ordering::Greater
    });
    let tail_bound = monotone.then(|| window[1].abs());

    Ok(SeriesEvaluation {
        partial_sum: sum,
        terms_used: k_max - k0 + 1,
        tail_bound,
        monotone_tail: monotone,
        last_term: last,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioEvaluation {
    pub numerator: SeriesEvaluation,
    pub denominator: SeriesEvaluation,
    pub ratio: HPReal,
}

/// Both partial sums through `K` and their quotient.
pub fn ratio_evaluation<N, D>(
    num_term: N,
    den_term: D,
    k0: u64,
    k_max: u64,
    ctx: PrecisionContext,
) -> Result<RatioEvaluation>
where
    N: FnMut(u64) -> HPReal,
    D: FnMut(u64) -> HPReal,
{
    let numerator = sum_series(num_term, k0, k_max, ctx)?;
    let denominator = sum_series(den_term, k0, k_max, ctx)?;
    if denominator.partial_sum.is_negligible() {
        return Err(Error::ZeroDenominator);
    }
    let ratio = &numerator.partial_sum / &denominator.partial_sum;
    Ok(RatioEvaluation {
        numerator,
        denominator,
        ratio,
    })
}

/// Ratio of the two partial sums through index `K`.
pub fn sum_ratio<N, D>(num_term: N, den_term: D, k0: u64, k_max: u64, ctx: PrecisionContext) -> Result<HPReal>
where
    N: FnMut(u64) -> HPReal,
    D: FnMut(u64) -> HPReal,
{
    ratio_evaluation(num_term, den_term, k0, k_max, ctx).map(|r| r.ratio)
}

/// Largest `d ≤ digits` of `a`'s context with `|a − b| < 10^{−d}·max(1, |a|)`.
pub fn digits_matched(a: &HPReal, b: &HPReal) -> u32 {
    let cap = a.ctx().digits();
    let diff = (a - b).mantissa().abs();
    if diff.is_zero() {
        return cap;
    }
    let unit = BigInt::one() << a.ctx().bits();
    let scale = a.mantissa().abs().max(unit);
    let mut d = 0;
    let mut lhs = diff * 10u32;
    while d < cap && lhs < scale {
        d += 1;
        lhs *= 10u32;
    }
    d
}
