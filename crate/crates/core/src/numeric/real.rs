use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_GUARD: u32 = 15;
pub const MIN_DIGITS: u32 = 10;
pub const MIN_GUARD: u32 = 5;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Requested decimal precision plus guard digits carried through every
/// intermediate step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrecisionContext {
    digits: u32,
    guard: u32,
}

impl PrecisionContext {
    pub fn new(digits: u32) -> Result<Self> {
        Self::with_guard(digits, DEFAULT_GUARD)
    }

    pub fn with_guard(digits: u32, guard: u32) -> Result<Self> {
        if digits < MIN_DIGITS {
            return Err(Error::InvalidArgument(format!(
                "precision must be at least {MIN_DIGITS} digits, got {digits}"
            )));
        }
        if guard < MIN_GUARD {
            return Err(Error::InvalidArgument(format!(
                "guard must be at least {MIN_GUARD} digits, got {guard}"
            )));
        }
        Ok(Self { digits, guard })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    /// Same requested digits, twice the guard.
    pub fn doubled_guard(&self) -> Self {
        Self {
            digits: self.digits,
            guard: self.guard * 2,
        }
    }

    /// Fractional bits of the fixed-point representation.
    pub fn bits(&self) -> u32 {
        (f64::from(self.digits + self.guard) * LOG2_10).ceil() as u32 + 8
    }
}

/// Fixed-point real: the value is `mantissa / 2^bits` for the context's bit
/// count. Absolute precision is uniform, which matches how agreement is
/// scored (`max(1, |a|)` scaling).
///
/// Binary operations require both operands to share a context and panic
/// otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HPReal {
    mantissa: BigInt,
    ctx: PrecisionContext,
}

/// `a / b` rounded to nearest, ties away from zero.
pub(crate) fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if (r.abs() * 2u32) >= b.abs() {
        if (a.sign() == Sign::Minus) != (b.sign() == Sign::Minus) {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

fn shr_round(a: &BigInt, bits: u32) -> BigInt {
    if bits == 0 {
        return a.clone();
    }
    div_round(a, &(BigInt::one() << bits))
}

impl HPReal {
    pub fn from_mantissa(mantissa: BigInt, ctx: PrecisionContext) -> Self {
        Self { mantissa, ctx }
    }

    pub fn zero(ctx: PrecisionContext) -> Self {
        Self::from_mantissa(BigInt::zero(), ctx)
    }

    pub fn one(ctx: PrecisionContext) -> Self {
        Self::from_int(&BigInt::one(), ctx)
    }

    pub fn from_int(n: &BigInt, ctx: PrecisionContext) -> Self {
        Self::from_mantissa(n << ctx.bits(), ctx)
    }

    pub fn from_i64(n: i64, ctx: PrecisionContext) -> Self {
        Self::from_int(&BigInt::from(n), ctx)
    }

    pub fn from_ratio(num: &BigInt, den: &BigInt, ctx: PrecisionContext) -> Self {
        Self::from_mantissa(div_round(&(num << ctx.bits()), den), ctx)
    }

    pub fn from_rational(q: &BigRational, ctx: PrecisionContext) -> Self {
        Self::from_ratio(q.numer(), q.denom(), ctx)
    }

    /// Re-express at another precision, rounding when bits are dropped.
    pub fn with_context(&self, ctx: PrecisionContext) -> Self {
        let (from, to) = (self.ctx.bits(), ctx.bits());
        let mantissa = match to.cmp(&from) {
            Ordering::Equal => self.mantissa.clone(),
            Ordering::Greater => &self.mantissa << (to - from),
            Ordering::Less => shr_round(&self.mantissa, from - to),
        };
        Self { mantissa, ctx }
    }

    pub fn ctx(&self) -> PrecisionContext {
        self.ctx
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn signum(&self) -> i8 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Self::from_mantissa(self.mantissa.abs(), self.ctx)
    }

    pub fn cmp_abs(&self, other: &Self) -> Ordering {
        self.check(other);
        self.mantissa.abs().cmp(&other.mantissa.abs())
    }

    pub fn mul_int(&self, n: &BigInt) -> Self {
        Self::from_mantissa(&self.mantissa * n, self.ctx)
    }

    pub fn div_int(&self, n: &BigInt) -> Self {
        Self::from_mantissa(div_round(&self.mantissa, n), self.ctx)
    }

    pub fn recip(&self) -> Self {
        Self::one(self.ctx) / self.clone()
    }

    /// Integer power by repeated squaring; negative exponents invert.
    pub fn powi(&self, exp: i64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ctx);
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        if exp < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    /// Square root, floor at working precision. Panics on negative input.
    pub fn sqrt(&self) -> Self {
        assert!(self.signum() >= 0, "square root of a negative value");
        Self::from_mantissa((&self.mantissa << self.ctx.bits()).sqrt(), self.ctx)
    }

    /// Magnitude is below `10^{-digits}`.
    pub fn is_negligible(&self) -> bool {
        let limit = (BigInt::one() << self.ctx.bits()) / num_traits::pow(BigInt::from(10), self.ctx.digits as usize);
        self.mantissa.abs() < limit
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.ctx.bits() as i32;
        let m = &self.mantissa;
        let shift = (m.bits() as i32 - 60).max(0);
        let top = (m >> shift as u32).to_f64().unwrap_or(0.0);
        top * 2f64.powi(shift - bits)
    }

    /// Decimal string rounded to nearest: `digits` decimals when `|v| < 1`,
    /// otherwise `digits` significant digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        let int_part = (self.mantissa.abs() >> self.ctx.bits()).to_string();
        let int_len = if int_part == "0" { 0 } else { int_part.len() as u32 };
        let decimals = if int_len == 0 {
            digits
        } else {
            digits.saturating_sub(int_len)
        };
        self.to_fixed(decimals)
    }

    /// Decimal string with exactly `decimals` digits after the point.
    pub fn to_fixed(&self, decimals: u32) -> String {
        let scale = num_traits::pow(BigInt::from(10), decimals as usize);
        let scaled = shr_round(&(&self.mantissa * &scale), self.ctx.bits());
        let negative = scaled.is_negative();
        let digits = scaled.abs().to_string();
        let decimals = decimals as usize;
        let padded = if digits.len() <= decimals {
            format!("{}{}", "0".repeat(decimals + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int, frac) = padded.split_at(padded.len() - decimals);
        let sign = if negative { "-" } else { "" };
        if decimals == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    /// Scientific notation with `sig` significant digits, e.g. `3.2e-41`.
    /// Exact zero prints as `0`.
    pub fn to_sci(&self, sig: u32) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let sig = sig.max(1) as usize;
        // Enough decimals to expose every nonzero bit of the mantissa.
        let extra = (f64::from(self.ctx.bits()) / LOG2_10).ceil() as usize + sig + 2;
        let scale = num_traits::pow(BigInt::from(10), extra);
        let scaled = shr_round(&(self.mantissa.abs() * scale), self.ctx.bits());
        let s = scaled.to_string();
        let mut exponent = s.len() as i64 - 1 - extra as i64;
        let head: BigInt = if s.len() > sig {
            let lead: BigInt = s[..sig].parse().expect("decimal digits");
            if s.as_bytes()[sig] >= b'5' {
                lead + 1
            } else {
                lead
            }
        } else {
            s.parse::<BigInt>().expect("decimal digits") * num_traits::pow(BigInt::from(10), sig - s.len())
        };
        let mut head = head.to_string();
        if head.len() > sig {
            head.truncate(sig);
            exponent += 1;
        }
        let sign = if self.signum() < 0 { "-" } else { "" };
        let (first, rest) = head.split_at(1);
        if rest.is_empty() {
            format!("{sign}{first}e{exponent}")
        } else {
            format!("{sign}{first}.{rest}e{exponent}")
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.ctx.bits(),
            other.ctx.bits(),
            "HPReal operands come from different precision contexts"
        );
    }
}

impl fmt::Display for HPReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(self.ctx.digits))
    }
}

impl Add for &HPReal {
    type Output = HPReal;

    fn add(self, rhs: &HPReal) -> HPReal {
        self.check(rhs);
        HPReal::from_mantissa(&self.mantissa + &rhs.mantissa, self.ctx)
    }
}

impl Sub for &HPReal {
    type Output = HPReal;

    fn sub(self, rhs: &HPReal) -> HPReal {
        self.check(rhs);
        HPReal::from_mantissa(&self.mantissa - &rhs.mantissa, self.ctx)
    }
}

impl Mul for &HPReal {
    type Output = HPReal;

    fn mul(self, rhs: &HPReal) -> HPReal {
        self.check(rhs);
        HPReal::from_mantissa(shr_round(&(&self.mantissa * &rhs.mantissa), self.ctx.bits()), self.ctx)
    }
}

impl Div for &HPReal {
    type Output = HPReal;

    /// Panics on division by an exact zero.
    fn div(self, rhs: &HPReal) -> HPReal {
        self.check(rhs);
        assert!(!rhs.is_zero(), "division by zero");
        HPReal::from_mantissa(div_round(&(&self.mantissa << self.ctx.bits()), &rhs.mantissa), self.ctx)
    }
}

impl Neg for &HPReal {
    type Output = HPReal;

    fn neg(self) -> HPReal {
        HPReal::from_mantissa(-&self.mantissa, self.ctx)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for HPReal {
            type Output = HPReal;
            fn $m(self, rhs: HPReal) -> HPReal {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for HPReal {
    type Output = HPReal;

    fn neg(self) -> HPReal {
        -&self
    }
}
