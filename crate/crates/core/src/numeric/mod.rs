//! Arbitrary-precision evaluation with explicit truncation accounting.

mod constants;
mod real;
mod series;

pub use constants::{constant, constant_by_name, cosh1, e, pi, pi_gauss_legendre, pi_machin, sinh1, Constant};
pub use real::{HPReal, PrecisionContext, DEFAULT_GUARD, MIN_DIGITS, MIN_GUARD};
pub use series::{
    digits_matched, eval_poly, ratio_evaluation, sum_ratio, sum_series, RatioEvaluation, SeriesEvaluation,
    TAIL_LOOKAHEAD,
};
