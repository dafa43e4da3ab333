//! Fibonacci numbers on all of ℤ and the two-parameter sequences built from them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// `F_n` for any integer `n`, extended to negative indices by
/// `F_{−n} = (−1)^(n+1) F_n`.
pub fn fibonacci(n: i64) -> BigInt {
    let m = n.unsigned_abs();
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..m {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    if n < 0 && m.is_multiple_of(2) {
        -a
    } else {
        a
    }
}

/// `L_n = F_{n−1} + F_{n+1}`, valid on all of ℤ.
pub fn lucas_number(n: i64) -> BigInt {
    fibonacci(n - 1) + fibonacci(n + 1)
}

/// Which of the two sequences pairing up in the Fibonacci ratio for e.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeqKind {
    /// `G_k = F_{k+1} + x·F_{k−1}`
    Numerator,
    /// `D_k = F_{k−1} + x·F_{k+1}`
    Denominator,
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeqKind::Numerator => "numerator",
            SeqKind::Denominator => "denominator",
        })
    }
}

impl FromStr for SeqKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "numerator" | "num" => Ok(SeqKind::Numerator),
            "denominator" | "den" => Ok(SeqKind::Denominator),
            other => Err(Error::InvalidArgument(format!("unknown sequence kind `{other}`"))),
        }
    }
}

/// Term `k` of the generalized Lucas sequence with parameter `x`.
pub fn gen_lucas_term(x: &BigInt, k: i64, kind: SeqKind) -> BigInt {
    match kind {
        SeqKind::Numerator => fibonacci(k + 1) + x * fibonacci(k - 1),
        SeqKind::Denominator => fibonacci(k - 1) + x * fibonacci(k + 1),
    }
}
