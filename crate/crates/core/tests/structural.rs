use epi_core::exact::{
    binomial, brothers_ratio, fib_poly, fib_poly_from_diagonal, fibonacci, gen_lucas_term, lucas_number, lucas_poly,
    lucas_poly_from_diagonal, lucas_triangle_row, pascal_row, SeqKind,
};
use epi_core::numeric::{digits_matched, HPReal, PrecisionContext};
use epi_core::registry::{params, term_structure, Params, TermStructure};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

#[test]
fn diagonal_sums_equal_recurrence() {
    for k in 1..=200 {
        assert_eq!(fib_poly(k), fib_poly_from_diagonal(k).unwrap(), "F_{k}");
        assert_eq!(lucas_poly(k), lucas_poly_from_diagonal(k).unwrap(), "L_{k}");
    }
}

#[test]
fn degrees_and_signs() {
    for k in 1..=60u32 {
        let f = fib_poly(k);
        let l = lucas_poly(k);
        assert_eq!(f.degree(), Some(k as usize - 1));
        assert_eq!(l.degree(), Some(k as usize));
        assert!(f.coeffs().iter().chain(l.coeffs()).all(|c| !c.is_negative()));
    }
}

/// `(x ± √(x²+4))/2` at `ctx`.
fn roots(x: i64, ctx: PrecisionContext) -> (HPReal, HPReal) {
    let s = HPReal::from_i64(x * x + 4, ctx).sqrt();
    let xr = HPReal::from_i64(x, ctx);
    let two = BigInt::from(2);
    ((&xr + &s).div_int(&two), (&xr - &s).div_int(&two))
}

#[test]
fn closed_forms_at_sixty_digits() {
    let ctx = PrecisionContext::new(60).unwrap();
    for x in 1..=3i64 {
        let (a, b) = roots(x, ctx);
        let s = &a - &b;
        let xb = BigInt::from(x);
        for k in 1..=50u32 {
            let (ak, bk) = (a.powi(k.into()), b.powi(k.into()));
            let f_closed = &(&ak - &bk) / &s;
            let l_closed = &ak + &bk;
            let f_exact = HPReal::from_int(&fib_poly(k).eval(&xb), ctx);
            let l_exact = HPReal::from_int(&lucas_poly(k).eval(&xb), ctx);
            assert!(digits_matched(&f_exact, &f_closed) >= 50, "F_{k}({x})");
            assert!(digits_matched(&l_exact, &l_closed) >= 50, "L_{k}({x})");
        }
    }
}

#[test]
fn polynomials_at_one_give_the_classic_sequences() {
    let fib = [0i64, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89];
    let luc = [2i64, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123];
    for k in 1..fib.len() as u32 {
        assert_eq!(fib_poly(k).eval(&BigInt::one()), BigInt::from(fib[k as usize]));
    }
    for (k, &l) in luc.iter().enumerate() {
        assert_eq!(lucas_poly(k as u32).eval(&BigInt::one()), BigInt::from(l));
        assert_eq!(lucas_number(k as i64), BigInt::from(l));
    }
    for k in 1..=90u32 {
        assert_eq!(fib_poly(k).eval(&BigInt::one()), fibonacci(i64::from(k)));
    }
}

#[test]
fn negative_index_law() {
    for x in 0..=5i64 {
        let xb = BigInt::from(x);
        for k in 0..=50i64 {
            let left = gen_lucas_term(&xb, -k, SeqKind::Numerator);
            let right = gen_lucas_term(&xb, k, SeqKind::Denominator);
            let right = if k % 2 == 0 { right } else { -right };
            assert_eq!(left, right, "x={x} k={k}");
        }
    }
}

#[test]
fn sequences_obey_the_recurrence_both_ways() {
    for x in -3..=5i64 {
        let xb = BigInt::from(x);
        for kind in [SeqKind::Numerator, SeqKind::Denominator] {
            for k in -40..=40i64 {
                let a = |i| gen_lucas_term(&xb, i, kind);
                assert_eq!(a(k), a(k - 1) + a(k - 2), "x={x} {kind} k={k}");
            }
        }
    }
}

#[test]
fn printed_pattern_to_the_left() {
    let x = BigInt::from(2);
    let got: Vec<BigInt> = (-5..=4).map(|k| gen_lucas_term(&x, k, SeqKind::Numerator)).collect();
    let want: Vec<BigInt> = [-19, 12, -7, 5, -2, 3, 1, 4, 5, 9]
        .into_iter()
        .map(BigInt::from)
        .collect();
    assert_eq!(got, want);
}

const PRIMES: [u32; 5] = [3, 5, 7, 11, 13];

#[test]
fn binomials_of_primes() {
    for p in PRIMES {
        for r in 1..p {
            assert!(
                binomial(p.into(), r.into()).unwrap().is_multiple_of(&BigInt::from(p)),
                "C({p},{r})"
            );
        }
    }
}

fn series_numerator(id: &str, k: u64) -> (Vec<BigInt>, u32, BigRational) {
    let Ok(TermStructure::Series(t)) = term_structure(id, &Params::new(), k) else {
        panic!("{id} is a series");
    };
    let coeffs = t
        .numerator
        .coeffs()
        .iter()
        .rev()
        .filter(|c| !c.is_zero())
        .cloned()
        .collect();
    (coeffs, t.factorial_index, t.scale)
}

#[test]
fn conj2_prime_rows_are_multiples_of_the_prime() {
    for p in PRIMES {
        // conj2 term k carries (k + 2)!.
        let (coeffs, fi, _) = series_numerator("conj2", u64::from(p) - 2);
        assert_eq!(fi, p);
        assert!(coeffs[0].is_one(), "leading coefficient over {p}!");
        for c in &coeffs[1..] {
            assert!(c.is_multiple_of(&BigInt::from(p)), "{c} over {p}!");
        }
    }
}

#[test]
fn conj6_prime_rows_are_multiples_of_the_prime() {
    for p in PRIMES {
        let (coeffs, fi, scale) = series_numerator("conj6", u64::from(p - 1) / 2);
        assert_eq!(fi, p);
        assert_eq!(scale, BigRational::new(1.into(), 2.into()));
        for c in &coeffs[1..] {
            assert!(c.is_multiple_of(&BigInt::from(p)), "{c} over 2*{p}!");
        }
    }
}

#[test]
fn brothers_ratio_is_the_compound_interest_sequence() {
    for n in 1..=60u32 {
        let base = BigRational::new(BigInt::from(n + 1), BigInt::from(n));
        assert_eq!(brothers_ratio(n).unwrap(), Pow::pow(base, n), "n={n}");
    }
}

#[test]
fn large_binomial_by_product_formula() {
    let (n, k) = (2000i64, 1000i64);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=k {
        num *= n - k + i;
        den *= i;
    }
    assert!((&num % &den).is_zero());
    assert_eq!(binomial(n, k).unwrap(), num / den);
}

#[test]
fn pascal_rows() {
    let row = pascal_row(50);
    assert_eq!(row.iter().sum::<BigInt>(), BigInt::one() << 50);
    assert_eq!(row.len(), 51);
    assert!(row.iter().eq(row.iter().rev()));
    let seven: Vec<BigInt> = [1, 7, 21, 35, 35, 21, 7, 1].into_iter().map(BigInt::from).collect();
    assert_eq!(pascal_row(7), seven);
    assert_eq!(lucas_triangle_row(1).unwrap(), vec![BigInt::from(1), BigInt::from(2)]);
    assert!(binomial(-1, 0).is_err());
    assert!(binomial(4, 5).unwrap().is_zero());
}

#[test]
fn term_generators_reject_indices_below_the_domain() {
    assert!(term_structure("thm3", &Params::new(), 0).is_err());
    assert!(term_structure("thm1", &params([("x", 1)]), 0).is_ok());
}
