//! Exact term structures and the per-identity rules that generate them.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{
    brothers_ratio, choose, composite_transform, factorial, fib_poly, imaginary_substitution, is_prime, lucas_entry,
    lucas_poly, IntPolynomial, Monomial, MonomialGroup,
};
use crate::numeric::{eval_poly, HPReal};

/// One exact term: `sign · scale · numerator(π) · π^pi_shift / factorial_index!`.
///
/// `numerator` has a nonnegative leading coefficient; the sign is carried
/// separately so printed forms such as `−(π⁴ − 3π²)/5!` compare directly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub sign: i8,
    pub numerator: IntPolynomial,
    pub pi_shift: i32,
    pub factorial_index: u32,
    pub scale: BigRational,
}

impl Term {
    /// Build from a signed numerator; `nominal_sign` is the rule's sign and
    /// is folded together with the sign of the leading coefficient.
    pub fn signed(nominal_sign: i8, numerator: IntPolynomial, factorial_index: u32) -> Self {
        let flip = numerator.leading_coeff().is_some_and(Signed::is_negative);
        let (sign, numerator) = if flip {
            (-nominal_sign, -&numerator)
        } else {
            (nominal_sign, numerator)
        };
        Self {
            sign,
            numerator,
            pi_shift: 0,
            factorial_index,
            scale: BigRational::one(),
        }
    }

    pub fn integer(nominal_sign: i8, value: BigInt, factorial_index: u32) -> Self {
        Self::signed(nominal_sign, IntPolynomial::constant(value), factorial_index)
    }

    pub fn with_scale(mut self, scale: BigRational) -> Self {
        self.scale = scale;
        self
    }

    pub fn with_pi_shift(mut self, shift: i32) -> Self {
        self.pi_shift = shift;
        self
    }

    /// The value as an exact rational when no power of π is involved.
    pub fn exact_value(&self) -> Option<BigRational> {
        if self.numerator.degree().unwrap_or(0) > 0 || self.pi_shift != 0 {
            return None;
        }
        let v = BigRational::new(
            self.numerator.coeff(0) * i64::from(self.sign),
            factorial(u64::from(self.factorial_index)),
        );
        Some(v * &self.scale)
    }

    /// Fully expanded `(coefficient, power of π)` pairs, highest power first.
    pub fn monomials(&self) -> Vec<(BigRational, i32)> {
        let denom = factorial(u64::from(self.factorial_index));
        self.numerator
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let coeff = BigRational::new(c * i64::from(self.sign), denom.clone()) * &self.scale;
                (coeff, j as i32 + self.pi_shift)
            })
            .collect()
    }

    pub fn value(&self, pi: &HPReal) -> HPReal {
        let mut v = eval_poly(&self.numerator, pi);
        // Divide by large powers rather than multiplying by tiny ones: the
        // representation has uniform absolute precision.
        match self.pi_shift.cmp(&0) {
            std::cmp::Ordering::Greater => v = &v * &pi.powi(i64::from(self.pi_shift)),
            std::cmp::Ordering::Less => v = &v / &pi.powi(-i64::from(self.pi_shift)),
            std::cmp::Ordering::Equal => {}
        }
        let num = self.scale.numer() * i64::from(self.sign);
        let den = self.scale.denom() * factorial(u64::from(self.factorial_index));
        v.mul_int(&num).div_int(&den)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "+" };
        let body = self.numerator.to_text("pi");
        let compound = self.numerator.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        let body = if compound { format!("({body})") } else { body };
        let shift = if self.pi_shift != 0 {
            format!("*pi^{}", self.pi_shift)
        } else {
            String::new()
        };
        let scale_num = self.scale.numer();
        let lead = if scale_num.is_one() {
            String::new()
        } else {
            format!("{scale_num}*")
        };
        let mut den = format!("{}!", self.factorial_index);
        if !self.scale.denom().is_one() {
            den = format!("({}*{den})", self.scale.denom());
        }
        write!(f, "{sign} {lead}{body}{shift}/{den}")
    }
}

/// What an identity produces at index `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "term", rename_all = "snake_case")]
pub enum TermStructure {
    Series(Term),
    Ratio {
        numerator: Term,
        denominator: Term,
    },
    /// Both sides of an identity between two infinite series.
    Difference {
        left: Term,
        right: Term,
    },
    /// The `k`-th member of a sequence whose limit is the target.
    Limit(BigRational),
}

impl fmt::Display for TermStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermStructure::Series(t) => write!(f, "{t}"),
            TermStructure::Ratio { numerator, denominator } => write!(f, "num {numerator} ; den {denominator}"),
            TermStructure::Difference { left, right } => write!(f, "lhs {left} ; rhs {right}"),
            TermStructure::Limit(q) => write!(f, "{q}"),
        }
    }
}

fn parity_sign(k: u64) -> i8 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Polynomial in π from `(power, coefficient)` pairs.
fn pi_poly(terms: impl IntoIterator<Item = (usize, BigInt)>) -> IntPolynomial {
    let terms: Vec<_> = terms.into_iter().collect();
    let top = terms.iter().map(|(d, _)| *d).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); top + 1];
    for (d, c) in terms {
        coeffs[d] += c;
    }
    IntPolynomial::new(coeffs)
}

/// `Σ_{j<k} (−1)^j c(j) π^{2(k−j)}`.
fn alternating_even(k: u64, c: impl Fn(u64) -> BigInt) -> IntPolynomial {
    pi_poly((0..k).map(|j| {
        let v = c(j);
        let v = if j % 2 == 1 { -v } else { v };
        (2 * (k - j) as usize, v)
    }))
}

/// `a_j` for the sequence `a_0 = first`, `a_1 = second`, `a_j = x·a_{j−1} + a_{j−2}`.
fn poly_sequence_value(first: BigInt, second: BigInt, j: u64, x: &BigInt) -> BigInt {
    if j == 0 {
        return first;
    }
    let (mut prev, mut cur) = (first, second);
    for _ in 1..j {
        let next = x * &cur + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `F_j(x)` at an integer by the recurrence, without building the polynomial.
pub(crate) fn fib_value(j: u64, x: &BigInt) -> BigInt {
    poly_sequence_value(BigInt::zero(), BigInt::one(), j, x)
}

/// `L_j(x)` at an integer by the recurrence.
pub(crate) fn lucas_value(j: u64, x: &BigInt) -> BigInt {
    poly_sequence_value(BigInt::from(2), x.clone(), j, x)
}

pub(crate) fn ratio_thm1(x: &BigInt, k: u64) -> TermStructure {
    use crate::exact::{gen_lucas_term, SeqKind};
    let k_i = k as i64;
    TermStructure::Ratio {
        numerator: Term::integer(1, gen_lucas_term(x, k_i, SeqKind::Numerator), k as u32),
        denominator: Term::integer(parity_sign(k), gen_lucas_term(x, k_i, SeqKind::Denominator), k as u32),
    }
}

pub(crate) fn ratio_gardner_false(k: u64) -> TermStructure {
    use crate::exact::fibonacci;
    let k_i = k as i64;
    TermStructure::Ratio {
        numerator: Term::integer(1, fibonacci(k_i + 1), k as u32),
        denominator: Term::integer(1, fibonacci(k_i - 1), k as u32),
    }
}

pub(crate) fn ratio_thm2(x: &BigInt, k: u64) -> TermStructure {
    let f = fib_value(k, x);
    TermStructure::Ratio {
        numerator: Term::integer(1, f.clone(), k as u32),
        denominator: Term::integer(-parity_sign(k), f, k as u32),
    }
}

pub(crate) fn ratio_thm4(x: &BigInt, k: u64) -> TermStructure {
    let l = lucas_value(k, x);
    TermStructure::Ratio {
        numerator: Term::integer(1, l.clone(), k as u32),
        denominator: Term::integer(parity_sign(k), l, k as u32),
    }
}

pub(crate) fn ratio_thm5(n: u64, x: &BigInt, k: u64) -> TermStructure {
    let l = lucas_value(n * k, x);
    TermStructure::Ratio {
        numerator: Term::integer(1, l.clone(), k as u32),
        denominator: Term::integer(parity_sign(k), l, k as u32),
    }
}

/// `N_k = Σ_{j<k} (−1)^j C(2k−j, j) π^{2(k−j)}` over `(2k+1)!`.
pub(crate) fn series_thm3(k: u64) -> Term {
    let numerator = alternating_even(k, |j| choose(2 * k - j, j as i64));
    Term::signed(-parity_sign(k), numerator, (2 * k + 1) as u32)
}

/// Second-kind Chebyshev route: `F_{2m}(2πi)` with `m = k + 1`, the part
/// summing to `sinh(1)/2` removed and the rest rescaled by `−2`.
pub(crate) fn series_cheb(k: u64) -> Term {
    let m = k + 1;
    let imag = imaginary_substitution(&fib_poly((2 * m) as u32)).imag;
    // imag is odd: divide by t.
    let over_t = IntPolynomial::new(imag.coeffs().iter().skip(1).cloned().collect());
    let trimmed = &over_t - &IntPolynomial::constant(m);
    let numerator = trimmed.scale(&BigInt::from(-2)).dilate(&BigInt::from(2));
    Term::signed(1, numerator, (2 * m) as u32)
}

/// `(−1)^k (L_{2k}(iπ) − 2)` over `(2k)!` with sign `(−1)^{k+1}`.
pub(crate) fn series_lucas_ipi(k: u64) -> Term {
    let real = imaginary_substitution(&lucas_poly((2 * k) as u32)).real;
    let dropped = &real - &IntPolynomial::constant(2);
    let numerator = dropped.scale(&BigInt::from(parity_sign(k)));
    Term::signed(-parity_sign(k), numerator, (2 * k) as u32)
}

/// `C(2k+m, m) π^{2k} / (2(k+m)+1)!` with sign `(−1)^{k+1}`.
pub(crate) fn series_conj1(m: u64, k: u64) -> Term {
    let numerator = IntPolynomial::monomial(choose(2 * k + m, m as i64), (2 * k) as usize);
    Term::signed(-parity_sign(k), numerator, (2 * (k + m) + 1) as u32)
}

/// Odd Pascal rows, even positions, over `(2k+1)!`.
pub(crate) fn series_conj4(k: u64) -> Term {
    let numerator = alternating_even(k, |j| choose(2 * k + 1, 2 * j as i64));
    Term::signed(-parity_sign(k), numerator, (2 * k + 1) as u32)
}

/// Even Pascal rows, odd positions, over `(2k+2)!`.
pub(crate) fn series_conj3(k: u64) -> Term {
    let numerator = alternating_even(k, |j| choose(2 * k + 2, (2 * j + 1) as i64));
    Term::signed(-parity_sign(k), numerator, (2 * k + 2) as u32)
}

/// Interleaving: odd `k` takes the next `conj4` term, even `k` the next
/// `conj3` term. Term `k` sits over `(k+2)!`.
pub(crate) fn series_conj2(k: u64) -> Term {
    if k % 2 == 1 {
        series_conj4(k.div_ceil(2))
    } else {
        series_conj3(k / 2)
    }
}

/// Leading monomial of each `conj2` term; these sum to 2.
pub(crate) fn series_composite_two(k: u64) -> Term {
    let full = series_conj2(k);
    let degree = full.numerator.degree().unwrap_or(0);
    let lead = IntPolynomial::monomial(full.numerator.coeff(degree), degree);
    Term::signed(full.sign, lead, full.factorial_index)
}

pub(crate) fn series_conj5(k: u64) -> Term {
    let numerator = alternating_even(k, |j| lucas_entry(2 * k + 1, 2 * j as i64));
    Term::signed(-parity_sign(k), numerator, (2 * k) as u32).with_scale(half())
}

pub(crate) fn series_conj6(k: u64) -> Term {
    let numerator = alternating_even(k, |j| lucas_entry(2 * k + 2, (2 * j + 1) as i64));
    Term::signed(-parity_sign(k), numerator, (2 * k + 1) as u32).with_scale(half())
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// Left side: `Σ_{j<k} (−1)^j C(2k−1−j, j) π^{2(k−j)−1}` over `(2k)!`.
pub(crate) fn conj7_left(k: u64) -> Term {
    let numerator = pi_poly((0..k).map(|j| {
        let c = choose(2 * k - 1 - j, j as i64);
        let c = if j % 2 == 1 { -c } else { c };
        ((2 * (k - j) - 1) as usize, c)
    }));
    Term::signed(-parity_sign(k), numerator, (2 * k) as u32)
}

/// Right side, `r`-th term: `2·A_r/π^{2r+1}` with
/// `A_r = Σ_j (−1)^j C(2r−2j, r−2j) π^{2j}/(2j)!`, written over `(2⌊r/2⌋)!`.
pub(crate) fn conj7_right(r: u64) -> Term {
    let top = r / 2;
    let top_fact = factorial(2 * top);
    let numerator = pi_poly((0..=top).map(|j| {
        let c = choose(2 * r - 2 * j, (r - 2 * j) as i64) * (&top_fact / factorial(2 * j));
        let c = if j % 2 == 1 { -c } else { c };
        ((2 * j) as usize, c)
    }));
    Term::signed(1, numerator, (2 * top) as u32)
        .with_pi_shift(-((2 * r + 1) as i32))
        .with_scale(BigRational::from_integer(BigInt::from(2)))
}

pub(crate) fn conj7(k: u64) -> TermStructure {
    TermStructure::Difference {
        left: conj7_left(k),
        right: conj7_right(k - 1),
    }
}

fn term_to_group(t: &Term) -> MonomialGroup {
    let monomials = t
        .numerator
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| Monomial::new(c * i64::from(t.sign), j as u32))
        .collect();
    MonomialGroup::new(t.factorial_index, monomials)
}

fn group_to_term(g: &MonomialGroup) -> Term {
    let numerator = pi_poly(g.monomials.iter().map(|m| (m.pi_power as usize, m.coefficient.clone())));
    Term::signed(1, numerator, g.factorial_index)
}

/// The `conj2` series through `(max_index)!` as monomial groups.
pub fn conj2_groups(max_index: u32) -> Vec<MonomialGroup> {
    (1..=u64::from(max_index.saturating_sub(2)))
        .map(|k| term_to_group(&series_conj2(k)))
        .collect()
}

/// Composite-factorial series for e, complete through `(max_index)!`.
pub fn composite_series(max_index: u32) -> crate::Result<Vec<MonomialGroup>> {
    let groups = composite_transform(&conj2_groups(max_index + 1))?;
    Ok(groups.into_iter().filter(|g| g.factorial_index <= max_index).collect())
}

/// Term `k` of the composite series: `k = 1` is the constant 2, then the
/// groups over 4!, 6!, 8!, 9!, 10!, … in order.
pub(crate) fn series_composite(k: u64) -> crate::Result<Term> {
    if k == 1 {
        return Ok(Term::integer(1, BigInt::from(2), 0));
    }
    let mut index = 3u32;
    let mut seen = 1;
    while seen < k {
        index += 1;
        if !is_prime(u64::from(index)) {
            seen += 1;
        }
    }
    let groups = composite_series(index)?;
    Ok(groups
        .iter()
        .find(|g| g.factorial_index == index)
        .map(group_to_term)
        .unwrap_or_else(|| Term::integer(1, BigInt::zero(), index)))
}

pub(crate) fn limit_brothers(k: u64) -> crate::Result<TermStructure> {
    let n = u32::try_from(k).map_err(|_| crate::Error::InvalidArgument("row index too large".into()))?;
    Ok(TermStructure::Limit(brothers_ratio(n)?))
}
