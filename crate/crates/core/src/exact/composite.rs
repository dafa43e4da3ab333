//! Rewriting the Pascal-row series for e so that only composite factorials
//! remain in the denominators.
//!
//! The input is a list of groups `(±Σ c_i π^{p_i}) / n!`. Every group's
//! leading monomial reduces to `±π^p/(p+1)!`; together those monomials sum
//! to the constant 2 and are replaced by it. Afterwards each group sitting on
//! a prime factorial `p!` has every remaining coefficient divisible by `p`,
//! so `c·π^q/p! = (c/p)·π^q/(p−1)!` moves it onto a composite factorial.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::triangle::{factorial, is_prime};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    /// Signed coefficient.
    pub coefficient: BigInt,
    /// Even power of π; 0 denotes a rational constant.
    pub pi_power: u32,
}

impl Monomial {
    pub fn new(coefficient: impl Into<BigInt>, pi_power: u32) -> Self {
        Self {
            coefficient: coefficient.into(),
            pi_power,
        }
    }
}

/// `(Σ coefficient·π^pi_power) / factorial_index!`, monomials in descending
/// π-power. Signs live on the coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialGroup {
    pub factorial_index: u32,
    pub monomials: Vec<Monomial>,
}

impl MonomialGroup {
    pub fn new(factorial_index: u32, monomials: Vec<Monomial>) -> Self {
        let mut by_power: BTreeMap<u32, BigInt> = BTreeMap::new();
        for m in monomials {
            *by_power.entry(m.pi_power).or_default() += m.coefficient;
        }
        let monomials = by_power
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(pi_power, coefficient)| Monomial { coefficient, pi_power })
            .collect();
        Self {
            factorial_index,
            monomials,
        }
    }

    /// `+1`, `−1`, or `0` for an empty group: the sign of the leading monomial.
    pub fn sign(&self) -> i8 {
        match self.monomials.first() {
            Some(m) if m.coefficient.is_negative() => -1,
            Some(_) => 1,
            None => 0,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Text like `-(3pi^4 - 25pi^2)/6!` or `2`.
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            return "0".into();
        }
        let flip = self.sign() < 0;
        let mut inner = String::new();
        for (i, m) in self.monomials.iter().enumerate() {
            let c = if flip { -&m.coefficient } else { m.coefficient.clone() };
            if i > 0 {
                inner.push_str(if c.is_negative() { " - " } else { " + " });
            } else if c.is_negative() {
                inner.push('-');
            }
            let mag = c.abs();
            if m.pi_power == 0 || !mag.is_one() {
                inner.push_str(&mag.to_string());
            }
            match m.pi_power {
                0 => {}
                1 => inner.push_str("pi"),
                p => inner.push_str(&format!("pi^{p}")),
            }
        }
        let body = if self.factorial_index <= 1 {
            inner
        } else if self.monomials.len() > 1 {
            format!("({inner})/{}!", self.factorial_index)
        } else {
            format!("{inner}/{}!", self.factorial_index)
        };
        if flip {
            format!("-{body}")
        } else {
            body
        }
    }
}

impl fmt::Display for MonomialGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Render a list of groups as a series: `2 + 2pi^2/4! - (3pi^4 - 25pi^2)/6! - …`.
pub fn series_text(groups: &[MonomialGroup]) -> String {
    let mut out = String::new();
    for g in groups.iter().filter(|g| !g.is_empty()) {
        let text = g.to_text();
        if out.is_empty() {
            out = text;
        } else if let Some(rest) = text.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&text);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Replace the leading monomials by the constant 2 and fold every prime
/// factorial onto its predecessor.
///
/// Output is the constant group (`factorial_index` 0) followed by the
/// remaining groups in ascending factorial index; no prime index survives.
pub fn composite_transform(groups: &[MonomialGroup]) -> Result<Vec<MonomialGroup>> {
    let mut merged: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
    for g in groups {
        merged
            .entry(g.factorial_index)
            .or_default()
            .extend(g.monomials.iter().cloned());
    }

    let mut remaining: BTreeMap<u32, MonomialGroup> = BTreeMap::new();
    for (n, monomials) in merged {
        let mut group = MonomialGroup::new(n, monomials);
        if group.is_empty() {
            continue;
        }
        let lead = group.monomials.remove(0);
        let expected = factorial(u64::from(n));
        let actual = lead.coefficient.abs() * factorial(u64::from(lead.pi_power) + 1);
        if actual != expected {
            return Err(Error::CompositeInput(format!(
                "leading monomial {}·pi^{} of the {n}! group is not of the form pi^p/(p+1)!",
                lead.coefficient, lead.pi_power
            )));
        }
        remaining.insert(n, group);
    }

    let mut out: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
    out.entry(0).or_default().push(Monomial::new(2, 0));
    for (n, group) in remaining {
        if group.is_empty() {
            continue;
        }
        if is_prime(u64::from(n)) {
            let p = BigInt::from(n);
            let mut folded = Vec::with_capacity(group.monomials.len());
            for m in &group.monomials {
                if !(&m.coefficient % &p).is_zero() {
                    return Err(Error::DivisibilityFailed {
                        p: n,
                        coefficient: m.coefficient.to_string(),
                        pi_power: m.pi_power,
                    });
                }
                folded.push(Monomial::new(&m.coefficient / &p, m.pi_power));
            }
            if is_prime(u64::from(n - 1)) {
                return Err(Error::CompositeInput(format!(
                    "the {n}! group would fold onto the prime factorial {}!",
                    n - 1
                )));
            }
            out.entry(n - 1).or_default().extend(folded);
        } else {
            out.entry(n).or_default().extend(group.monomials);
        }
    }

    Ok(out
        .into_iter()
        .map(|(n, monomials)| MonomialGroup::new(n, monomials))
        .filter(|g| !g.is_empty())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_input_gives_two() {
        let out = composite_transform(&[]).unwrap();
        assert_eq!(out, vec![MonomialGroup::new(0, vec![Monomial::new(2, 0)])]);
        assert_eq!(series_text(&out), "2");
    }

    #[test]
    fn group_text() {
        let g = MonomialGroup::new(6, vec![Monomial::new(-3, 4), Monomial::new(25, 2)]);
        assert_eq!(g.to_text(), "-(3pi^4 - 25pi^2)/6!");
        let g = MonomialGroup::new(4, vec![Monomial::new(2, 2)]);
        assert_eq!(g.to_text(), "2pi^2/4!");
    }

    #[test]
    fn indivisible_prime_group_is_rejected() {
        // pi^4/5! leads, then 3pi^2 is not a multiple of 5.
        let g = MonomialGroup::new(5, vec![Monomial::new(1, 4), Monomial::new(3, 2)]);
        assert!(matches!(
            composite_transform(&[g]),
            Err(Error::DivisibilityFailed { p: 5, .. })
        ));
    }

    #[test]
    fn foreign_leading_monomial_is_rejected() {
        let g = MonomialGroup::new(6, vec![Monomial::new(7, 4)]);
        assert!(matches!(composite_transform(&[g]), Err(Error::CompositeInput(_))));
    }

    #[test]
    fn prime_group_moves_down() {
        let groups = vec![
            MonomialGroup::new(4, vec![Monomial::new(4, 2)]),
            MonomialGroup::new(5, vec![Monomial::new(-1, 4), Monomial::new(10, 2)]),
        ];
        let out = composite_transform(&groups).unwrap();
        assert_eq!(series_text(&out), "2 + 2pi^2/4!");
    }
}
