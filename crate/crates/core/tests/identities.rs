use std::cmp::Ordering;
use std::collections::BTreeMap;

use epi_core::exact::{fib_poly, imaginary_substitution, lucas_poly, IntPolynomial};
use epi_core::numeric::{pi, HPReal, PrecisionContext};
use epi_core::registry::{instance, list_identities, params, term_structure, Params, Status, Term, TermStructure};
use epi_core::verifier::{convergence_table, scan, verify, verify_instance, Verdict};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

fn series(id: &str, k: u64) -> Term {
    match term_structure(id, &Params::new(), k).unwrap() {
        TermStructure::Series(t) => t,
        other => panic!("{other:?}"),
    }
}

fn signed_numerator(t: &Term) -> IntPolynomial {
    t.numerator.scale(&BigInt::from(t.sign))
}

fn parity(k: u64) -> BigInt {
    BigInt::from(if k.is_multiple_of(2) { 1 } else { -1 })
}

#[test]
fn thm3_numerators_from_fibonacci_at_i_pi() {
    for k in 1..=20u64 {
        let split = imaginary_substitution(&fib_poly(2 * k as u32 + 1));
        let n_k = (&split.real - &IntPolynomial::constant(1)).scale(&parity(k));
        let t = series("thm3", k);
        assert_eq!(t.factorial_index as u64, 2 * k + 1);
        assert_eq!(signed_numerator(&t), n_k.scale(&-parity(k)), "k={k}");
    }
}

#[test]
fn lucas_ipi_numerators_from_lucas_at_i_pi() {
    for k in 1..=20u64 {
        let split = imaginary_substitution(&lucas_poly(2 * k as u32));
        let n_k = (&split.real - &IntPolynomial::constant(2)).scale(&parity(k));
        let t = series("lucas_ipi", k);
        assert_eq!(t.factorial_index as u64, 2 * k);
        assert_eq!(signed_numerator(&t), n_k.scale(&-parity(k)), "k={k}");
    }
}

fn accumulate(acc: &mut BTreeMap<i32, BigRational>, t: &Term) {
    for (c, p) in t.monomials() {
        *acc.entry(p).or_insert_with(BigRational::zero) += c;
    }
    acc.retain(|_, c| !c.is_zero());
}

#[test]
fn conj2_is_conj3_plus_conj4_at_equal_depth() {
    for depth in 1..=15u64 {
        let inst = instance("conj2", &Params::new()).unwrap();
        let (k0, k1) = inst.index_range(depth);
        let mut left = BTreeMap::new();
        for k in k0..=k1 {
            accumulate(&mut left, &series("conj2", k));
        }
        let mut right = BTreeMap::new();
        for k in 1..=depth {
            accumulate(&mut right, &series("conj3", k));
            accumulate(&mut right, &series("conj4", k));
        }
        assert_eq!(left, right, "depth {depth}");
    }
}

fn conj7_gap(depth: u64, ctx: PrecisionContext) -> HPReal {
    let p = pi(ctx).unwrap();
    (1..=depth).fold(HPReal::zero(ctx), |acc, k| {
        match term_structure("conj7", &Params::new(), k).unwrap() {
            TermStructure::Difference { left, right } => &acc + &(&left.value(&p) - &right.value(&p)),
            other => panic!("{other:?}"),
        }
    })
}

#[test]
fn conj7_sides_close_in() {
    let ctx = PrecisionContext::new(50).unwrap();
    let gaps: Vec<HPReal> = [4, 6, 8, 10].into_iter().map(|k| conj7_gap(k, ctx)).collect();
    for w in gaps.windows(2) {
        assert_eq!(w[1].cmp_abs(&w[0]), Ordering::Less);
    }
}

/// Theorem instances at digits = 50, K = 40, threshold = 30.
#[test]
fn theorems_pass_at_fifty_digits() {
    let mut short = Vec::new();
    for identity in list_identities()
        .iter()
        .filter(|i| i.status == Status::Theorem && i.id != "brothers_limit")
    {
        for inst in identity.default_instances() {
            let r = verify_instance(&inst, 50, 40, Some(30)).unwrap();
            if r.verdict != Verdict::Pass {
                short.push((inst.label(), r.digits_matched));
            }
        }
    }
    // Forty terms cannot resolve e^3 or e^{L_n(1)} for n ≥ 3 to thirty digits:
    // the terms behave like λ^k/k! and the truncation error at k = 40 exceeds
    // 1e-30 once λ ≳ 3.
    let labels: Vec<&str> = short.iter().map(|(l, _)| l.as_str()).collect();
    assert_eq!(labels, ["thm2_x3", "thm4_x3", "thm5_n3_x1", "thm5_n4_x1"], "{short:?}");
    for (label, _) in &short {
        let r = verify_instance(&instance_from_label(label), 50, 80, Some(30)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{label} at K=80");
    }
}

fn instance_from_label(label: &str) -> epi_core::registry::Instance {
    let (id, rest) = label.split_once('_').unwrap();
    let ps: Params = rest
        .split('_')
        .map(|kv| (kv[..1].to_string(), kv[1..].parse().unwrap()))
        .collect();
    instance(id, &ps).unwrap()
}

#[test]
fn negative_control_fails_and_corrected_form_passes() {
    let bad = verify("gardner_false", &Params::new(), 30, 40, Some(5)).unwrap();
    assert_eq!(bad.verdict, Verdict::Fail);
    assert!(bad.digits_matched <= 2);
    assert!(bad.is_expected());
    let good = verify("gardner_fixed", &Params::new(), 50, 40, None).unwrap();
    assert_eq!(good.verdict, Verdict::Pass);
    assert!(good.digits_matched >= 30);
}

#[test]
fn conj4_against_cosh1() {
    let r = verify("conj4", &Params::new(), 40, 20, Some(15)).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.status, Status::Conjecture);
}

#[test]
fn family_scans() {
    let s = scan("conj1", None, 0..=8, &Params::new(), 40, Some(25), None).unwrap();
    assert_eq!((s.passed, s.reports.len()), (9, 9));
    let s = scan("thm1", Some("x"), 0..=3, &Params::new(), 40, Some(40), None).unwrap();
    assert_eq!(s.passed, 4);
    let s = scan("thm5", Some("n"), 1..=4, &params([("x", 1)]), 40, Some(30), None).unwrap();
    let ctx = PrecisionContext::new(40).unwrap();
    let e = epi_core::numeric::e(ctx);
    for (r, exp) in s.reports.iter().zip([1, 3, 4, 7]) {
        assert_eq!(r.target, e.powi(exp).to_decimal(40));
    }
    let labels: Vec<String> = s.reports.iter().map(|r| r.label()).collect();
    assert_eq!(labels, ["thm5_n1_x1", "thm5_n2_x1", "thm5_n3_x1", "thm5_n4_x1"]);
}

#[test]
fn convergence_tables() {
    let t = convergence_table("thm3", &Params::new(), 50, &[5, 10, 15, 20, 25]).unwrap();
    for w in t.rows.windows(2) {
        assert!(w[1].digits_matched > w[0].digits_matched, "{:?}", t.rows);
    }
    let t = convergence_table("brothers_limit", &Params::new(), 30, &[10, 100, 1000]).unwrap();
    let dm: Vec<u32> = t.rows.iter().map(|r| r.digits_matched).collect();
    // Relative error about 1/(2n): one more digit per decade.
    assert_eq!(dm, [1, 2, 3]);
    let t = convergence_table("thm2", &params([("x", 1)]), 50, &[40]).unwrap();
    assert_eq!(t.rows.len(), 1);
}

#[test]
fn every_default_instance_meets_its_status() {
    let reports = epi_core::verifier::verify_all(40, None, None).unwrap();
    for r in &reports {
        assert!(r.is_expected(), "{} {:?}", r.label(), r.verdict);
    }
    let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
    let mut order = list_identities().into_iter().map(|i| i.id);
    let mut cursor = order.next();
    for id in ids {
        while cursor.as_deref() != Some(id) {
            cursor = order.next();
            assert!(cursor.is_some(), "reports out of catalog order at {id}");
        }
    }
}
