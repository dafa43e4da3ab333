use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::triangle::pascal_row;
use crate::error::{Error, Result};

/// `s_m`, the product of every entry in row `m` of Pascal's triangle.
pub fn row_product(m: u32) -> BigInt {
    pascal_row(m).into_iter().fold(BigInt::one(), |acc, c| acc * c)
}

/// `s_{n+1}·s_{n−1} / s_n²` as an exact reduced rational.
pub fn brothers_ratio(n: u32) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::InvalidArgument("row-product ratio needs n >= 1".into()));
    }
    let below = row_product(n - 1);
    let here = row_product(n);
    let above = row_product(n + 1);
    Ok(BigRational::new(above * below, &here * &here))
}
