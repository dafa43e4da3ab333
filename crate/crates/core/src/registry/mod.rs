//! Catalog of every identity, each with an exact term rule and a target.

mod terms;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::factorial;
use crate::numeric::{constant, Constant, HPReal, PrecisionContext};

pub use terms::{composite_series, conj2_groups, Term, TermStructure};

use terms::lucas_value;

pub type Params = BTreeMap<String, i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Theorem,
    Conjecture,
    NegativeControl,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Theorem => "theorem",
            Status::Conjecture => "conjecture",
            Status::NegativeControl => "negative_control",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    Ratio,
    Series,
    Limit,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Ratio => "ratio",
            Form::Series => "series",
            Form::Limit => "limit",
        })
    }
}

/// The constant an identity's series is claimed to reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    E,
    Sinh1,
    Cosh1,
    EPlusInverse,
    /// `e^x`
    ExpX,
    /// `e^{L_n(x)}`
    ExpLucas,
    /// `1/(2m+1)!`
    InverseOddFactorial,
    /// Difference of the two sides.
    Zero,
    Two,
}

impl Target {
    pub fn describe(&self) -> &'static str {
        match self {
            Target::E => "e",
            Target::Sinh1 => "sinh(1) = (e - 1/e)/2",
            Target::Cosh1 => "cosh(1) = (e + 1/e)/2",
            Target::EPlusInverse => "e + 1/e",
            Target::ExpX => "e^x",
            Target::ExpLucas => "e^(L_n(x))",
            Target::InverseOddFactorial => "1/(2m+1)!",
            Target::Zero => "0 (left side minus right side)",
            Target::Two => "2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSpec {
    pub name: String,
    pub default: i64,
    pub min: i64,
    pub max: i64,
    /// Inclusive range used by family scans and `--all`.
    pub scan: Option<(i64, i64)>,
}

impl ParamSpec {
    fn new(name: &str, default: i64, min: i64, max: i64, scan: Option<(i64, i64)>) -> Self {
        Self {
            name: name.into(),
            default,
            min,
            max,
            scan,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identity {
    pub id: String,
    pub name: String,
    pub status: Status,
    pub form: Form,
    pub target: Target,
    pub params: Vec<ParamSpec>,
    pub paper_anchor: String,
}

impl Identity {
    fn new(id: &str, name: &str, status: Status, form: Form, target: Target, anchor: &str) -> Self {
        Self {
            id: id.into(),
            name: name.into(),
            status,
            form,
            target,
            params: Vec::new(),
            paper_anchor: anchor.into(),
        }
    }

    fn param(mut self, spec: ParamSpec) -> Self {
        self.params.push(spec);
        self
    }

    pub fn default_params(&self) -> Params {
        self.params.iter().map(|p| (p.name.clone(), p.default)).collect()
    }

    /// The scanned parameter, if this is a family.
    pub fn scan_param(&self) -> Option<&ParamSpec> {
        self.params.iter().find(|p| p.scan.is_some())
    }

    /// Merge `overrides` into the defaults and check names and ranges.
    pub fn resolve(&self, overrides: &Params) -> Result<Instance> {
        let mut params = self.default_params();
        for (name, &value) in overrides {
            let spec = self
                .params
                .iter()
                .find(|p| &p.name == name)
                .ok_or_else(|| Error::InvalidParams {
                    id: self.id.clone(),
                    reason: if self.params.is_empty() {
                        format!("takes no parameters, got `{name}`")
                    } else {
                        format!("unknown parameter `{name}`")
                    },
                })?;
            if value < spec.min || value > spec.max {
                return Err(Error::InvalidParams {
                    id: self.id.clone(),
                    reason: format!("{name} = {value} is outside {}..{}", spec.min, spec.max),
                });
            }
            params.insert(name.clone(), value);
        }
        Ok(Instance {
            identity: self.clone(),
            params,
        })
    }

    /// Every instance exercised by `verify --all`: the scan range for
    /// families, the defaults otherwise.
    pub fn default_instances(&self) -> Vec<Instance> {
        match self.scan_param() {
            Some(spec) => {
                let (lo, hi) = spec.scan.expect("scan param");
                (lo..=hi)
                    .map(|v| {
                        let mut p = Params::new();
                        p.insert(spec.name.clone(), v);
                        self.resolve(&p).expect("scan range lies inside the domain")
                    })
                    .collect()
            }
            None => vec![self.resolve(&Params::new()).expect("defaults are valid")],
        }
    }
}

/// An identity with every parameter fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub identity: Identity,
    pub params: Params,
}

impl Instance {
    pub fn id(&self) -> &str {
        &self.identity.id
    }

    fn get(&self, name: &str) -> i64 {
        self.params[name]
    }

    fn big(&self, name: &str) -> BigInt {
        BigInt::from(self.get(name))
    }

    /// `thm5_n2_x1`-style label used in file names.
    pub fn label(&self) -> String {
        let mut out = self.identity.id.clone();
        for (k, v) in &self.params {
            out.push('_');
            out.push_str(k);
            out.push_str(&v.to_string());
        }
        out
    }

    /// Lowest valid term index.
    pub fn first_index(&self) -> u64 {
        match self.identity.id.as_str() {
            "thm1" | "thm4" | "thm5" | "gardner_fixed" | "gardner_false" => 0,
            _ => 1,
        }
    }

    /// Term indices summed at depth `K`. For `conj2`, depth counts pairs of
    /// (odd-row, even-row) terms, so that its partial sums line up with
    /// `conj3 + conj4` at the same depth.
    pub fn index_range(&self, depth: u64) -> (u64, u64) {
        match self.identity.id.as_str() {
            "conj2" => (1, 2 * depth),
            _ => (self.first_index(), depth),
        }
    }

    /// Smallest depth accepted by the verifier.
    pub fn min_depth(&self) -> u64 {
        self.first_index().max(1)
    }

    /// Depth that reaches the verdict threshold at the default precision.
    pub fn default_depth(&self) -> u64 {
        match self.identity.id.as_str() {
            "brothers_limit" => 1000,
            // Terms grow like λ^k/k! with λ = L_n(x) ≈ φ^n, so the cut-off
            // must move out with n.
            "thm5" => 40 * self.get("n").max(1) as u64,
            _ => 40,
        }
    }

    pub fn term_structure(&self, k: u64) -> Result<TermStructure> {
        let first = self.first_index();
        if k < first {
            return Err(Error::TermOutOfDomain {
                id: self.identity.id.clone(),
                k,
                first,
            });
        }
        Ok(match self.identity.id.as_str() {
            "brothers_limit" => terms::limit_brothers(k)?,
            "gardner_false" => terms::ratio_gardner_false(k),
            "gardner_fixed" => terms::ratio_thm1(&BigInt::from(0), k),
            "thm1" => terms::ratio_thm1(&self.big("x"), k),
            "thm2" => terms::ratio_thm2(&self.big("x"), k),
            "thm3" => TermStructure::Series(terms::series_thm3(k)),
            "conj1" => TermStructure::Series(terms::series_conj1(self.get("m") as u64, k)),
            "conj2" => TermStructure::Series(terms::series_conj2(k)),
            "conj3" => TermStructure::Series(terms::series_conj3(k)),
            "conj4" => TermStructure::Series(terms::series_conj4(k)),
            "composite_two" => TermStructure::Series(terms::series_composite_two(k)),
            "composite_e" => TermStructure::Series(terms::series_composite(k)?),
            "cheb_2pii" => TermStructure::Series(terms::series_cheb(k)),
            "thm4" => terms::ratio_thm4(&self.big("x"), k),
            "lucas_ipi" => TermStructure::Series(terms::series_lucas_ipi(k)),
            "thm5" => terms::ratio_thm5(self.get("n") as u64, &self.big("x"), k),
            "conj5" => TermStructure::Series(terms::series_conj5(k)),
            "conj6" => TermStructure::Series(terms::series_conj6(k)),
            "conj7" => terms::conj7(k),
            other => return Err(Error::UnknownIdentity(other.to_string())),
        })
    }

    /// Exact exponent for the `e^…` targets.
    fn exponent(&self) -> Option<i64> {
        match self.identity.target {
            Target::ExpX => Some(self.get("x")),
            Target::ExpLucas => {
                let l = lucas_value(self.get("n") as u64, &self.big("x"));
                Some(i64::try_from(l).expect("L_n(x) fits the parameter domain"))
            }
            _ => None,
        }
    }

    pub fn target_value(&self, ctx: PrecisionContext) -> Result<HPReal> {
        let e = || constant(Constant::E, ctx);
        Ok(match self.identity.target {
            Target::E => e()?,
            Target::Sinh1 => constant(Constant::Sinh1, ctx)?,
            Target::Cosh1 => constant(Constant::Cosh1, ctx)?,
            Target::EPlusInverse => {
                let e = e()?;
                &e + &e.recip()
            }
            Target::ExpX | Target::ExpLucas => e()?.powi(self.exponent().expect("exponential target")),
            Target::InverseOddFactorial => {
                let m = self.get("m") as u64;
                HPReal::from_ratio(&BigInt::one(), &factorial(2 * m + 1), ctx)
            }
            Target::Zero => HPReal::zero(ctx),
            Target::Two => HPReal::from_i64(2, ctx),
        })
    }

    /// Human-readable target, with parameters substituted where useful.
    pub fn target_text(&self) -> String {
        match self.identity.target {
            Target::ExpX => format!("e^{}", self.get("x")),
            Target::ExpLucas => format!("e^{}", self.exponent().expect("exponential target")),
            Target::InverseOddFactorial => format!("1/{}!", 2 * self.get("m") + 1),
            t => t.describe().to_string(),
        }
    }
}

/// The full catalog in reading order.
pub fn list_identities() -> Vec<Identity> {
    use Form::*;
    use Status::*;
    let x = |default| ParamSpec::new("x", default, -1000, 1000, Some((0, 3)));
    vec![
        Identity::new(
            "brothers_limit",
            "Row-product ratio limit",
            Theorem,
            Limit,
            Target::E,
            "Brothers: s(n+1)s(n-1)/s(n)^2 -> e, s(n) the product of row n of Pascal's triangle",
        ),
        Identity::new(
            "gardner_false",
            "Fibonacci ratio for e with Gardner's original signs",
            NegativeControl,
            Ratio,
            Target::E,
            "Gardner's identity as originally stated (claimed false)",
        ),
        Identity::new(
            "gardner_fixed",
            "Fibonacci ratio for e with corrected signs",
            Theorem,
            Ratio,
            Target::E,
            "Gardner's identity after the sign correction (Theorem 1 at x = 0)",
        ),
        Identity::new(
            "thm1",
            "Generalized Lucas-sequence ratio for e",
            Theorem,
            Ratio,
            Target::E,
            "Theorem 1: e from (F(k+1) + xF(k-1))/k! over (-1)^k (F(k-1) + xF(k+1))/k!",
        )
        .param(x(1)),
        Identity::new(
            "thm2",
            "Fibonacci-polynomial ratio for e^x",
            Theorem,
            Ratio,
            Target::ExpX,
            "Theorem 2: e^x from F_k(x)/k! over (-1)^(k+1) F_k(x)/k!",
        )
        .param(x(1)),
        Identity::new(
            "thm3",
            "sinh(1) from the rotated Pascal triangle",
            Theorem,
            Series,
            Target::Sinh1,
            "Theorem 3: (e - 1/e)/2 = pi^2/3! - (pi^4 - 3pi^2)/5! + ...",
        ),
        Identity::new(
            "conj1",
            "Single-diagonal series for 1/(2m+1)!",
            Conjecture,
            Series,
            Target::InverseOddFactorial,
            "Conjecture 1: 1/(2m+1)! = sum (-1)^(k+1) C(2k+m, m) pi^(2k)/(2k+2m+1)!",
        )
        .param(ParamSpec::new("m", 0, 0, 200, Some((0, 8)))),
        Identity::new(
            "conj2",
            "Pascal-row series for e",
            Conjecture,
            Series,
            Target::E,
            "Conjecture 2: e = pi^2/3! + 4pi^2/4! - (pi^4 - 10pi^2)/5! - ...",
        ),
        Identity::new(
            "conj3",
            "Even Pascal rows for sinh(1)",
            Conjecture,
            Series,
            Target::Sinh1,
            "Conjecture 3: (e - 1/e)/2 = 4pi^2/4! - (6pi^4 - 20pi^2)/6! + ...",
        ),
        Identity::new(
            "conj4",
            "Odd Pascal rows for cosh(1)",
            Conjecture,
            Series,
            Target::Cosh1,
            "Conjecture 4: (e + 1/e)/2 = pi^2/3! - (pi^4 - 10pi^2)/5! + ...",
        ),
        Identity::new(
            "composite_two",
            "Leading monomials of the Pascal-row series sum to 2",
            Conjecture,
            Series,
            Target::Two,
            "Sub-identity 2 = pi^2/3! + 4pi^2/4! - pi^4/5! - 6pi^4/6! + ... used by the composite rewrite",
        ),
        Identity::new(
            "composite_e",
            "Composite-factorial series for e",
            Conjecture,
            Series,
            Target::E,
            "Composite rewrite: e = 2 + 2pi^2/4! - (3pi^4 - 25pi^2)/6! - ...",
        ),
        Identity::new(
            "cheb_2pii",
            "sinh(1) from F_k(2 pi i)",
            Theorem,
            Series,
            Target::Sinh1,
            "Chebyshev (second kind) route, x = 2 pi i: (e - 1/e)/2 = 8pi^2/4! - (32pi^4 - 32pi^2)/6! + ...",
        ),
        Identity::new(
            "thm4",
            "Lucas-polynomial ratio for e^x",
            Theorem,
            Ratio,
            Target::ExpX,
            "Theorem 4: e^x from L_k(x)/k! over (-1)^k L_k(x)/k!",
        )
        .param(x(1)),
        Identity::new(
            "lucas_ipi",
            "e + 1/e from L_k(i pi)",
            Theorem,
            Series,
            Target::EPlusInverse,
            "Lucas polynomials at x = i pi: e + 1/e = pi^2/2! - (pi^4 - 4pi^2)/4! + ...",
        ),
        Identity::new(
            "thm5",
            "Lucas-polynomial ratio for e^(L_n(x))",
            Theorem,
            Ratio,
            Target::ExpLucas,
            "Theorem 5: e^(L_n(x)) from L_(nk)(x)/k! over (-1)^k L_(nk)(x)/k!",
        )
        .param(ParamSpec::new("n", 2, 1, 64, Some((1, 4))))
        .param(ParamSpec::new("x", 1, -50, 50, None)),
        Identity::new(
            "conj5",
            "Odd Lucas-triangle rows for e",
            Conjecture,
            Series,
            Target::E,
            "Conjecture 5: e = pi^2/(2*2!) - (pi^4 - 14pi^2)/(2*4!) + ...",
        ),
        Identity::new(
            "conj6",
            "Even Lucas-triangle rows for e",
            Conjecture,
            Series,
            Target::E,
            "Conjecture 6: e = 5pi^2/(2*3!) - (7pi^4 - 30pi^2)/(2*5!) + ...",
        ),
        Identity::new(
            "conj7",
            "Shallow versus normal diagonals of Pascal's triangle",
            Conjecture,
            Series,
            Target::Zero,
            "Conjecture 7: pi/2! - (pi^3 - 2pi)/4! + ... = 2(1/pi + 2/pi^3 + (6 - pi^2/2!)/pi^5 + ...)",
        ),
    ]
}

pub fn find_identity(id: &str) -> Result<Identity> {
    list_identities()
        .into_iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Resolve an id plus parameter overrides into an instance.
pub fn instance(id: &str, overrides: &Params) -> Result<Instance> {
    find_identity(id)?.resolve(overrides)
}

/// `term_structure(id, k)` at default parameters with overrides.
pub fn term_structure(id: &str, params: &Params, k: u64) -> Result<TermStructure> {
    instance(id, params)?.term_structure(k)
}

pub fn target_value(id: &str, params: &Params, ctx: PrecisionContext) -> Result<HPReal> {
    instance(id, params)?.target_value(ctx)
}

/// Convenience for building parameter maps in code and tests.
pub fn params<const N: usize>(pairs: [(&str, i64); N]) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
