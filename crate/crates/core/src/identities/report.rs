use serde::{Deserialize, Serialize};

use super::{Identity, Kind};
use crate::modular::PrimeRange;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

/// Both sides at one prime, as canonical residues modulo `p^power`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRecord {
    pub p: u64,
    pub lhs: u64,
    pub rhs: u64,
    pub pass: bool,
    /// Whether this prime lies above the threshold and counts toward the
    /// verdict.
    pub gated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedPrime {
    pub p: u64,
    pub reason: String,
}

/// Outcome of an exact check: both sides and their difference in text form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicOutcome {
    pub lhs: String,
    pub rhs: String,
    pub difference: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: Identity,
    pub kind: Kind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub power: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub range: Option<PrimeRange>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub threshold: Option<u64>,
    #[serde(default)]
    pub records: Vec<PrimeRecord>,
    #[serde(default)]
    pub skipped: Vec<SkippedPrime>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub symbolic: Option<SymbolicOutcome>,
    /// Number of primes that counted toward the verdict.
    pub gated_primes: usize,
    /// Gated primes where the sides differ.
    pub failures: Vec<u64>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }

    /// Primes at or below the threshold where the sides differ. Reported,
    /// never gating.
    pub fn ungated_failures(&self) -> Vec<u64> {
        self.records
            .iter()
            .filter(|r| !r.gated && !r.pass)
            .map(|r| r.p)
            .collect()
    }
}
