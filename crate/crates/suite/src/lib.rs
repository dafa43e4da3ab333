//! Pinned acceptance thresholds. The checks themselves live in
//! `tests/acceptance.rs`; run them with `cargo test -p epi-suite`.

/// `thm2` at x = 1, digits = 50, K = 40.
pub const THM2_MIN_DIGITS: u32 = 40;
pub const THM2_MAX_SECONDS: f64 = 1.0;

/// `thm1` at x ∈ {0, 1, 2}, digits = 50, K = 40.
pub const THM1_MIN_DIGITS: u32 = 30;

/// `thm3` at K = 25, digits = 50.
pub const THM3_DEPTH: u64 = 25;
pub const THM3_MIN_DIGITS: u32 = 20;

/// `thm5` at n = 2, x = 1 against e³.
pub const THM5_MIN_DIGITS: u32 = 25;

/// `cheb_2pii` and `lucas_ipi` at digits = 40, K = 30.
pub const IPI_DEPTH: u64 = 30;
pub const IPI_MIN_DIGITS: u32 = 20;

/// Every conjecture at digits = 40.
pub const CONJECTURE_MIN_DIGITS: u32 = 15;

/// Composite-factorial series summed through 14!.
pub const COMPOSITE_LAST_INDEX: u32 = 14;
pub const COMPOSITE_MIN_DIGITS: u32 = 10;

/// Brothers ratio: exact for n ≤ 60, relative error at n = 1000.
pub const BROTHERS_EXACT_UP_TO: u32 = 60;
pub const BROTHERS_LARGE_N: u32 = 1000;
/// 2 × 10⁻³ as a rational.
pub const BROTHERS_MAX_REL_ERROR: (i64, i64) = (2, 1000);

/// The uncorrected Gardner signs may agree with e to at most this many digits.
pub const GARDNER_FALSE_MAX_DIGITS: u32 = 2;
pub const GARDNER_FIXED_MIN_DIGITS: u32 = 30;

/// Structural suite bounds.
pub const POLY_MAX_INDEX: u32 = 200;
pub const CLOSED_FORM_DIGITS: u32 = 60;
pub const CLOSED_FORM_MIN_DIGITS: u32 = 50;
pub const NEGATIVE_INDEX_MAX_X: i64 = 5;
pub const NEGATIVE_INDEX_MAX_K: i64 = 50;
pub const DIVISIBILITY_PRIMES: [u32; 5] = [3, 5, 7, 11, 13];
pub const VERIFY_ALL_MAX_SECONDS: f64 = 60.0;
