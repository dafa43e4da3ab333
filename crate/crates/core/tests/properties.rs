use epi_core::exact::{
    binomial, brothers_ratio, composite_transform, fib_poly, gen_lucas_term, imaginary_substitution, is_prime,
    lucas_poly, IntPolynomial, SeqKind,
};
use epi_core::numeric::{digits_matched, HPReal, PrecisionContext};
use epi_core::registry::conj2_groups;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

/// `p(i·t)` by Gaussian-integer Horner, returned as (real, imaginary).
fn eval_at_i(p: &IntPolynomial, t: &BigInt) -> (BigInt, BigInt) {
    let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
    for c in p.coeffs().iter().rev() {
        // (re + i·im)(i·t) = −im·t + i·re·t
        let next_re = -&im * t + c;
        let next_im = &re * t;
        re = next_re;
        im = next_im;
    }
    (re, im)
}

fn ctx() -> PrecisionContext {
    PrecisionContext::new(30).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pascal_rule(n in 1i64..300, k in -2i64..302) {
        prop_assert_eq!(binomial(n, k).unwrap(), binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap());
    }

    #[test]
    fn binomial_symmetry(n in 0i64..400, k in 0i64..400) {
        prop_assume!(k <= n);
        prop_assert_eq!(binomial(n, k).unwrap(), binomial(n, n - k).unwrap());
    }

    #[test]
    fn fibonacci_addition_formula(m in 1u32..60, n in 1u32..60, x in -20i64..20) {
        // F_{m+n} = F_{m+1}F_n + F_m F_{n-1}
        let xb = BigInt::from(x);
        let f = |k: u32| fib_poly(k).eval(&xb);
        let f_prev = |k: u32| if k == 1 { BigInt::zero() } else { f(k - 1) };
        prop_assert_eq!(f(m + n), f(m + 1) * f(n) + f(m) * f_prev(n));
    }

    #[test]
    fn lucas_is_sum_of_neighbouring_fibonacci(k in 2u32..120, x in -20i64..20) {
        let xb = BigInt::from(x);
        prop_assert_eq!(lucas_poly(k).eval(&xb), fib_poly(k + 1).eval(&xb) + fib_poly(k - 1).eval(&xb));
    }

    #[test]
    fn imaginary_split_matches_gaussian_evaluation(k in 0u32..40, t in -12i64..12, lucas in any::<bool>()) {
        let p = if lucas { lucas_poly(k) } else { fib_poly(k.max(1)) };
        let split = imaginary_substitution(&p);
        let tb = BigInt::from(t);
        let (re, im) = eval_at_i(&p, &tb);
        prop_assert_eq!(split.real.eval(&tb), re);
        prop_assert_eq!(split.imag.eval(&tb), im);
        if p.is_even() {
            prop_assert!(split.imag.is_zero());
        }
        if p.is_odd() {
            prop_assert!(split.real.is_zero());
        }
    }

    #[test]
    fn negative_indices_for_wide_x(x in -100i64..100, k in 0i64..80) {
        let xb = BigInt::from(x);
        let d = gen_lucas_term(&xb, k, SeqKind::Denominator);
        let expected = if k % 2 == 0 { d } else { -d };
        prop_assert_eq!(gen_lucas_term(&xb, -k, SeqKind::Numerator), expected);
    }

    #[test]
    fn brothers_ratio_increases_below_three(n in 1u32..80) {
        let a = brothers_ratio(n).unwrap();
        let b = brothers_ratio(n + 1).unwrap();
        prop_assert!(a < b);
        prop_assert!(b < num_rational::BigRational::from_integer(3.into()));
    }

    #[test]
    fn composite_output_avoids_primes(max_index in 4u32..24) {
        let out = composite_transform(&conj2_groups(max_index)).unwrap();
        prop_assert_eq!(out[0].factorial_index, 0);
        for g in &out {
            prop_assert!(!is_prime(u64::from(g.factorial_index)), "prime index {}", g.factorial_index);
        }
    }

    #[test]
    fn fixed_point_addition_is_exact(a in any::<i64>(), b in any::<i64>(), d in 1i64..1_000_000) {
        let c = ctx();
        let x = HPReal::from_ratio(&BigInt::from(a), &BigInt::from(d), c);
        let y = HPReal::from_ratio(&BigInt::from(b), &BigInt::from(d), c);
        prop_assert_eq!(&(&x + &y) - &y, x);
    }

    #[test]
    fn division_then_multiplication_round_trips(a in 1i64..1_000_000_000, d in 1i64..1_000_000_000) {
        let c = ctx();
        let q = HPReal::from_ratio(&BigInt::from(a), &BigInt::from(d), c);
        let back = q.mul_int(&BigInt::from(d));
        prop_assert!(digits_matched(&back, &HPReal::from_i64(a, c)) >= 29);
    }

    #[test]
    fn digits_matched_is_capped_and_nearly_symmetric(a in any::<i32>(), b in any::<i32>()) {
        let c = ctx();
        let x = HPReal::from_ratio(&BigInt::from(a), &BigInt::from(1000), c);
        let y = HPReal::from_ratio(&BigInt::from(b), &BigInt::from(1000), c);
        prop_assert_eq!(digits_matched(&x, &x), 30);
        let (p, q) = (digits_matched(&x, &y), digits_matched(&y, &x));
        prop_assert!(p.abs_diff(q) <= 1, "{} vs {}", p, q);
    }

    #[test]
    fn powers_agree_with_repeated_products(n in 1i64..20, base in 1i64..50) {
        let c = ctx();
        let r = HPReal::from_ratio(&BigInt::from(base), &BigInt::from(7), c);
        let slow = (1..n).fold(r.clone(), |acc, _| &acc * &r);
        prop_assert!(digits_matched(&r.powi(n), &slow) >= 25);
        prop_assert!(digits_matched(&(&r.powi(-n) * &r.powi(n)), &HPReal::one(c)) >= 25);
    }
}

#[test]
fn gaussian_helper_sanity() {
    // (it)^2 + 1 = 1 − t²
    let p = IntPolynomial::from_i64s(&[1, 0, 1]);
    assert_eq!(eval_at_i(&p, &BigInt::from(3)), (BigInt::from(-8), BigInt::zero()));
}
