//! Pascal's triangle, the Lucas triangle, and the integer helpers they need.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `C(n, k)`, zero when `k < 0` or `k > n`.
///
/// Built from the prime factorization of the binomial: the exponent of each
/// prime `p ≤ n` is `Σ_i (⌊n/p^i⌋ − ⌊k/p^i⌋ − ⌊(n−k)/p^i⌋)`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!(
            "binomial row must be nonnegative, got n = {n}"
        )));
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let (n, k) = (n as u64, k as u64);
    let mut result = BigInt::one();
    for p in primes_up_to(n) {
        let mut exponent = 0u32;
        let mut pk = p;
        while pk <= n {
            exponent += (n / pk - k / pk - (n - k) / pk) as u32;
            match pk.checked_mul(p) {
                Some(next) => pk = next,
                None => break,
            }
        }
        if exponent > 0 {
            result *= num_traits::pow(BigInt::from(p), exponent as usize);
        }
    }
    Ok(result)
}

/// Infallible binomial for nonnegative rows, used internally where the row is
/// known to be valid.
pub(crate) fn choose(n: u64, k: i64) -> BigInt {
    binomial(n as i64, k).expect("row is nonnegative")
}

/// Row `n` of Pascal's triangle, `[C(n,0), …, C(n,n)]`.
pub fn pascal_row(n: u32) -> Vec<BigInt> {
    let n = u64::from(n);
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * (n - k) / (k + 1);
        row.push(c.clone());
    }
    row
}

/// Entry `B(n, k) = C(n, k) + C(n−1, k−1)` of the Lucas triangle.
///
/// Rows start at `n = 1` with `[1, 2]`; every row begins with 1 and ends
/// with 2. Out-of-range `k` gives 0.
pub fn lucas_triangle_entry(n: i64, k: i64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "Lucas triangle rows start at n = 1, got n = {n}"
        )));
    }
    Ok(binomial(n, k)? + binomial(n - 1, k - 1)?)
}

pub(crate) fn lucas_entry(n: u64, k: i64) -> BigInt {
    lucas_triangle_entry(n as i64, k).expect("row is positive")
}

/// Row `n ≥ 1` of the Lucas triangle.
pub fn lucas_triangle_row(n: u32) -> Result<Vec<BigInt>> {
    (0..=i64::from(n))
        .map(|k| lucas_triangle_entry(i64::from(n), k))
        .collect()
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}
