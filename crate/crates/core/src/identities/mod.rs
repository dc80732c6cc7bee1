//! Registry of the verified identities.
//!
//! Each [`Identity`] value is one parameterized instance. Symbolic instances
//! are checked by exact rational or integer arithmetic; adelic instances by
//! comparing both sides residue by residue over a prime range, gating only
//! primes above `weight + 2`.

mod probe;
mod report;
mod sides;
mod suite;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Index;
use crate::error::{Error, Result};

pub use crate::combinatorics::{binomial, multinomial};
pub use probe::{ratio_probe, reconstruct_rational, ProbeRecord, ProbeReport};
pub use report::{PrimeRecord, SkippedPrime, SymbolicOutcome, Verdict, VerificationReport};
pub use sides::{adelic_sides, main_theorem_coefficient, shuffle_a2_expansion};
pub use suite::{default_instances, run_suite, SuiteConfig, SuiteReport};
pub use verify::{verify, verify_adelic, verify_symbolic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    SymbolicExact,
    AdelicA1,
    AdelicA2,
}

impl Kind {
    /// Modulus power of the adelic ring, if any.
    pub fn power(self) -> Option<u8> {
        match self {
            Kind::SymbolicExact => None,
            Kind::AdelicA1 => Some(1),
            Kind::AdelicA2 => Some(2),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::SymbolicExact => "symbolic-exact",
            Kind::AdelicA1 => "adelic-A1",
            Kind::AdelicA2 => "adelic-A2",
        })
    }
}

/// One instance of a registered identity.
///
/// Serialized with the identity id as the `id` tag and the parameters as
/// sibling fields, e.g. `{"id":"mt1","l":1,"m":0}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "id")]
pub enum Identity {
    /// Bowman-Bradley sum of strict values in `A_2`.
    #[serde(rename = "mt1")]
    Mt1 { l: u32, m: u32 },
    /// Bowman-Bradley sum of star values in `A_2`.
    #[serde(rename = "mt2")]
    Mt2 { l: u32, m: u32 },
    /// Vanishing of the `{a,b}^l`, `{c}^m` interleaving sum in `A_1`.
    #[serde(rename = "sw")]
    Sw {
        a: u32,
        b: u32,
        c: u32,
        l: u32,
        m: u32,
    },
    #[serde(rename = "sw_star")]
    SwStar {
        a: u32,
        b: u32,
        c: u32,
        l: u32,
        m: u32,
    },
    /// Expansion of `4^l ({1,3}^l t~sh {2}^m)` in the index space.
    #[serde(rename = "muneta")]
    Muneta { l: u32, m: u32 },
    /// Shuffle relation in `A_2`.
    #[serde(rename = "shuffle_a2")]
    ShuffleA2 { k: Index, l: Index },
    /// `zeta({2}^r) = (-1)^{r-1} 2 beta_{2r+1} p`.
    #[serde(rename = "zc")]
    Zc { r: u32 },
    /// `zeta*({2}^r) = 2 beta_{2r+1} p`.
    #[serde(rename = "zc_star")]
    ZcStar { r: u32 },
    /// `zeta({2}^a, 3, {2}^b)` in `A_1`.
    #[serde(rename = "two_three")]
    TwoThree { a: u32, b: u32 },
    /// `zeta(({2}^{l+m}) sh ({2}^l))` in `A_2`.
    #[serde(rename = "aaa")]
    Aaa { l: u32, m: u32 },
    #[serde(rename = "vdm1")]
    Vdm1 { l: u32, m: u32 },
    #[serde(rename = "vdm2")]
    Vdm2 { l: u32, m: u32 },
    /// Star Bowman-Bradley sum expanded through strict sums and `zeta*({2}^n)`.
    #[serde(rename = "yam")]
    Yam { l: u32, m: u32 },
    /// `zeta(1) = 0` in `A_2`.
    #[serde(rename = "wolstenholme")]
    Wolstenholme,
    /// Compares two integer constants in `A_2`. Exists to test the harness.
    #[serde(rename = "constant")]
    Constant { lhs: i64, rhs: i64 },
}

/// Every catalog id with its kind, in registry order.
pub const CATALOG: &[(&str, Kind)] = &[
    ("mt1", Kind::AdelicA2),
    ("mt2", Kind::AdelicA2),
    ("sw", Kind::AdelicA1),
    ("sw_star", Kind::AdelicA1),
    ("muneta", Kind::SymbolicExact),
    ("shuffle_a2", Kind::AdelicA2),
    ("zc", Kind::AdelicA2),
    ("zc_star", Kind::AdelicA2),
    ("two_three", Kind::AdelicA1),
    ("aaa", Kind::AdelicA2),
    ("vdm1", Kind::SymbolicExact),
    ("vdm2", Kind::SymbolicExact),
    ("yam", Kind::AdelicA2),
    ("wolstenholme", Kind::AdelicA2),
];

fn invalid(id: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParams {
        id: id.to_string(),
        reason: reason.into(),
    }
}

impl Identity {
    pub fn id(&self) -> &'static str {
        match self {
            Identity::Mt1 { .. } => "mt1",
            Identity::Mt2 { .. } => "mt2",
            Identity::Sw { .. } => "sw",
            Identity::SwStar { .. } => "sw_star",
            Identity::Muneta { .. } => "muneta",
            Identity::ShuffleA2 { .. } => "shuffle_a2",
            Identity::Zc { .. } => "zc",
            Identity::ZcStar { .. } => "zc_star",
            Identity::TwoThree { .. } => "two_three",
            Identity::Aaa { .. } => "aaa",
            Identity::Vdm1 { .. } => "vdm1",
            Identity::Vdm2 { .. } => "vdm2",
            Identity::Yam { .. } => "yam",
            Identity::Wolstenholme => "wolstenholme",
            Identity::Constant { .. } => "constant",
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            Identity::Muneta { .. } | Identity::Vdm1 { .. } | Identity::Vdm2 { .. } => {
                Kind::SymbolicExact
            }
            Identity::Sw { .. } | Identity::SwStar { .. } | Identity::TwoThree { .. } => {
                Kind::AdelicA1
            }
            _ => Kind::AdelicA2,
        }
    }

    /// Builds an instance from an id and named integer / index parameters.
    /// Missing integer parameters default to zero.
    pub fn from_parts(
        id: &str,
        ints: &BTreeMap<String, u32>,
        indices: &BTreeMap<String, Index>,
    ) -> Result<Self> {
        let int = |name: &str| ints.get(name).copied().unwrap_or(0);
        let index = |name: &str| indices.get(name).cloned().unwrap_or_default();
        let (l, m) = (int("l"), int("m"));
        let instance = match id {
            "mt1" => Identity::Mt1 { l, m },
            "mt2" => Identity::Mt2 { l, m },
            "sw" | "sw_star" => {
                let (a, b, c) = (int("a"), int("b"), int("c"));
                if id == "sw" {
                    Identity::Sw { a, b, c, l, m }
                } else {
                    Identity::SwStar { a, b, c, l, m }
                }
            }
            "muneta" => Identity::Muneta { l, m },
            "shuffle_a2" => Identity::ShuffleA2 {
                k: index("k"),
                l: index("l"),
            },
            "zc" => Identity::Zc { r: int("r") },
            "zc_star" => Identity::ZcStar { r: int("r") },
            "two_three" => Identity::TwoThree {
                a: int("a"),
                b: int("b"),
            },
            "aaa" => Identity::Aaa { l, m },
            "vdm1" => Identity::Vdm1 { l, m },
            "vdm2" => Identity::Vdm2 { l, m },
            "yam" => Identity::Yam { l, m },
            "wolstenholme" => Identity::Wolstenholme,
            other => return Err(Error::UnknownIdentity(other.to_string())),
        };
        instance.validate()?;
        Ok(instance)
    }

    /// Checks the parameter constraints of the instance.
    pub fn validate(&self) -> Result<()> {
        let id = self.id();
        match *self {
            Identity::Mt1 { l, m } | Identity::Mt2 { l, m } | Identity::Aaa { l, m }
                if (l, m) == (0, 0) =>
            {
                Err(invalid(id, "requires (l, m) != (0, 0)"))
            }
            Identity::Sw { a, b, c, l, m } | Identity::SwStar { a, b, c, l, m } => {
                if a % 2 == 0 || b % 2 == 0 {
                    Err(invalid(id, "a and b must be odd positive integers"))
                } else if c == 0 || c % 2 == 1 {
                    Err(invalid(id, "c must be an even positive integer"))
                } else if (l, m) == (0, 0) {
                    Err(invalid(id, "requires (l, m) != (0, 0)"))
                } else {
                    Ok(())
                }
            }
            Identity::Zc { r } | Identity::ZcStar { r } if r == 0 => {
                Err(invalid(id, "requires r >= 1"))
            }
            _ => Ok(()),
        }
    }

    /// Weight of the indices involved, when the identity is homogeneous.
    pub fn weight(&self) -> Option<u32> {
        Some(match self {
            Identity::Mt1 { l, m }
            | Identity::Mt2 { l, m }
            | Identity::Aaa { l, m }
            | Identity::Yam { l, m }
            | Identity::Muneta { l, m } => 4 * l + 2 * m,
            Identity::Sw { a, b, c, l, m } | Identity::SwStar { a, b, c, l, m } => {
                (a + b) * l + c * m
            }
            Identity::ShuffleA2 { k, l } => k.weight() + l.weight(),
            Identity::Zc { r } | Identity::ZcStar { r } => 2 * r,
            Identity::TwoThree { a, b } => 2 * a + 2 * b + 3,
            Identity::Wolstenholme => 1,
            Identity::Constant { .. } => 0,
            Identity::Vdm1 { .. } | Identity::Vdm2 { .. } => return None,
        })
    }

    /// Primes above this value gate the verdict of an adelic check.
    pub fn threshold(&self) -> u64 {
        u64::from(self.weight().unwrap_or(0)) + 2
    }

    /// Parameters as `name=value` pairs joined by `;`.
    pub fn params_text(&self) -> String {
        named_params(self)
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

fn named_params(identity: &Identity) -> Vec<(&'static str, String)> {
    let n = |v: &u32| v.to_string();
    match identity {
        Identity::Mt1 { l, m }
        | Identity::Mt2 { l, m }
        | Identity::Muneta { l, m }
        | Identity::Aaa { l, m }
        | Identity::Vdm1 { l, m }
        | Identity::Vdm2 { l, m }
        | Identity::Yam { l, m } => vec![("l", n(l)), ("m", n(m))],
        Identity::Sw { a, b, c, l, m } | Identity::SwStar { a, b, c, l, m } => vec![
            ("a", n(a)),
            ("b", n(b)),
            ("c", n(c)),
            ("l", n(l)),
            ("m", n(m)),
        ],
        Identity::ShuffleA2 { k, l } => vec![("k", format!("({k})")), ("l", format!("({l})"))],
        Identity::Zc { r } | Identity::ZcStar { r } => vec![("r", n(r))],
        Identity::TwoThree { a, b } => vec![("a", n(a)), ("b", n(b))],
        Identity::Wolstenholme => vec![],
        Identity::Constant { lhs, rhs } => vec![("lhs", lhs.to_string()), ("rhs", rhs.to_string())],
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.id(), self.params_text())
    }
}
