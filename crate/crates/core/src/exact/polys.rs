//! Fibonacci and Lucas polynomials, by recurrence and read off triangle diagonals.

use num_bigint::BigInt;
use num_traits::Zero;

use super::polynomial::IntPolynomial;
use super::triangle::{choose, lucas_entry};
use crate::error::{Error, Result};

fn recurrence(first: IntPolynomial, second: IntPolynomial, k: u32) -> IntPolynomial {
    let (mut prev, mut cur) = (first, second);
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &cur.shift_up() + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `F_k(x)` from `F_0 = 0`, `F_1 = 1`, `F_k = x·F_{k−1} + F_{k−2}`.
pub fn fib_poly(k: u32) -> IntPolynomial {
    recurrence(IntPolynomial::zero(), IntPolynomial::constant(1), k)
}

/// `L_k(x)` from `L_0 = 2`, `L_1 = x`, `L_k = x·L_{k−1} + L_{k−2}`.
pub fn lucas_poly(k: u32) -> IntPolynomial {
    recurrence(IntPolynomial::constant(2), IntPolynomial::x(), k)
}

/// `F_k(x)` read off the shallow diagonal of Pascal's triangle: the
/// coefficient of `x^(k−1−2j)` is `C(k−1−j, j)`.
pub fn fib_poly_from_diagonal(k: u32) -> Result<IntPolynomial> {
    if k == 0 {
        return Err(Error::InvalidArgument("diagonal reading starts at k = 1".into()));
    }
    let top = (k - 1) as usize;
    let mut coeffs = vec![BigInt::zero(); top + 1];
    for j in 0..=top / 2 {
        coeffs[top - 2 * j] = choose((top - j) as u64, j as i64);
    }
    Ok(IntPolynomial::new(coeffs))
}

/// `L_k(x)` read off the shallow diagonal of the Lucas triangle: the
/// coefficient of `x^(k−2j)` is `B(k−j, j)`.
pub fn lucas_poly_from_diagonal(k: u32) -> Result<IntPolynomial> {
    if k == 0 {
        return Err(Error::InvalidArgument("diagonal reading starts at k = 1".into()));
    }
    let top = k as usize;
    let mut coeffs = vec![BigInt::zero(); top + 1];
    for j in 0..=top / 2 {
        coeffs[top - 2 * j] = lucas_entry((top - j) as u64, j as i64);
    }
    Ok(IntPolynomial::new(coeffs))
}
