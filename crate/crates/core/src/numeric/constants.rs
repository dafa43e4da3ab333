//! π, e and the hyperbolic values at 1.
//!
//! π is produced by two unrelated algorithms (Machin's arctangent formula and
//! the Gauss–Legendre AGM iteration) and only returned when they agree.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::real::{div_round, HPReal, PrecisionContext};
use crate::error::{Error, Result};

/// Extra bits carried while computing a constant, dropped on return.
const INTERNAL_BITS: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Constant {
    Pi,
    E,
    Sinh1,
    Cosh1,
}

impl Constant {
    pub fn name(&self) -> &'static str {
        match self {
            Constant::Pi => "pi",
            Constant::E => "e",
            Constant::Sinh1 => "sinh1",
            Constant::Cosh1 => "cosh1",
        }
    }
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Constant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pi" => Ok(Constant::Pi),
            "e" => Ok(Constant::E),
            "sinh1" => Ok(Constant::Sinh1),
            "cosh1" => Ok(Constant::Cosh1),
            other => Err(Error::UnknownConstant(other.to_string())),
        }
    }
}

pub fn constant(name: Constant, ctx: PrecisionContext) -> Result<HPReal> {
    match name {
        Constant::Pi => pi(ctx),
        Constant::E => Ok(e(ctx)),
        Constant::Sinh1 => Ok(sinh1(ctx)),
        Constant::Cosh1 => Ok(cosh1(ctx)),
    }
}

/// Look a constant up by name (`pi`, `e`, `sinh1`, `cosh1`).
pub fn constant_by_name(name: &str, ctx: PrecisionContext) -> Result<HPReal> {
    constant(name.parse()?, ctx)
}

/// π, cross-checked between Machin and Gauss–Legendre.
pub fn pi(ctx: PrecisionContext) -> Result<HPReal> {
    let bits = ctx.bits() + INTERNAL_BITS;
    let machin = pi_machin_raw(bits);
    let agm = pi_gauss_legendre_raw(bits);
    // Both routes are accurate to a handful of ulps at the internal width.
    if (&machin - &agm).abs() > BigInt::from(1u32 << 16) {
        return Err(Error::ConstantMismatch("pi"));
    }
    Ok(narrow(machin, ctx))
}

/// π from `16·atan(1/5) − 4·atan(1/239)`.
pub fn pi_machin(ctx: PrecisionContext) -> HPReal {
    narrow(pi_machin_raw(ctx.bits() + INTERNAL_BITS), ctx)
}

/// π from the Gauss–Legendre arithmetic–geometric mean iteration.
pub fn pi_gauss_legendre(ctx: PrecisionContext) -> HPReal {
    narrow(pi_gauss_legendre_raw(ctx.bits() + INTERNAL_BITS), ctx)
}

/// e from `Σ 1/k!`.
pub fn e(ctx: PrecisionContext) -> HPReal {
    let bits = ctx.bits() + INTERNAL_BITS;
    let mut term = BigInt::one() << bits;
    let mut sum = BigInt::zero();
    let mut k = 1u32;
    while !term.is_zero() {
        sum += &term;
        term /= k;
        k += 1;
    }
    narrow(sum, ctx)
}

pub fn sinh1(ctx: PrecisionContext) -> HPReal {
    let (e, inv) = e_and_inverse(ctx);
    (&e - &inv).div_int(&BigInt::from(2))
}

pub fn cosh1(ctx: PrecisionContext) -> HPReal {
    let (e, inv) = e_and_inverse(ctx);
    (&e + &inv).div_int(&BigInt::from(2))
}

fn e_and_inverse(ctx: PrecisionContext) -> (HPReal, HPReal) {
    let e = e(ctx);
    let inv = e.recip();
    (e, inv)
}

fn narrow(raw: BigInt, ctx: PrecisionContext) -> HPReal {
    HPReal::from_mantissa(div_round(&raw, &(BigInt::one() << INTERNAL_BITS)), ctx)
}

/// `atan(1/x)` scaled by `2^bits`.
fn arctan_inv(x: u32, bits: u32) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = (BigInt::one() << bits) / &x;
    let mut sum = BigInt::zero();
    let mut n = 1u32;
    let mut add = true;
    while !power.is_zero() {
        let term = &power / n;
        if add {
            sum += term;
        } else {
            sum -= term;
        }
        add = !add;
        power /= &x2;
        n += 2;
    }
    sum
}

fn pi_machin_raw(bits: u32) -> BigInt {
    arctan_inv(5, bits) * 16 - arctan_inv(239, bits) * 4
}

fn pi_gauss_legendre_raw(bits: u32) -> BigInt {
    let one = BigInt::one() << bits;
    let sqrt = |v: &BigInt| (v << bits).sqrt();
    let mul = |a: &BigInt, b: &BigInt| (a * b) >> bits;

    let mut a = one.clone();
    let mut b = sqrt(&(&one / 2));
    let mut t = &one / 4;
    let mut p = BigInt::one();
    loop {
        let next_a = (&a + &b) / 2;
        let next_b = sqrt(&mul(&a, &b));
        let d = &a - &next_a;
        t -= mul(&d, &d) * &p;
        p *= 2;
        a = next_a;
        b = next_b;
        if (&a - &b).abs() <= BigInt::from(2) {
            break;
        }
    }
    let s = &a + &b;
    (mul(&s, &s) << bits) / (t * 4)
}
