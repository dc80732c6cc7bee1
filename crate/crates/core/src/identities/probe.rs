//! Tests numerically whether an element with vanishing `A_1` image is a fixed
//! rational multiple of `beta_k p`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::report::SkippedPrime;
use crate::algebra::IndexCombination;
use crate::bernoulli::beta;
use crate::engine::{eval, EvalRequest};
use crate::error::{Error, Result};
use crate::modular::{Modulus, PrimeRange};

/// Minimum number of primes that must reconstruct the same rational.
pub const MIN_SUPPORT: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeRecord {
    pub p: u64,
    /// `value / p mod p`.
    pub quotient: u64,
    /// `beta_k mod p`.
    pub beta: u64,
    /// `quotient / beta mod p`.
    pub ratio: u64,
    /// Small-height rational congruent to `ratio`, if any.
    pub reconstructed: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub combination: String,
    pub k: u32,
    pub star: bool,
    pub range: PrimeRange,
    pub records: Vec<ProbeRecord>,
    pub skipped: Vec<SkippedPrime>,
    /// Most frequently reconstructed rational.
    pub candidate: Option<String>,
    /// Number of primes that reconstructed the candidate.
    pub support: usize,
    /// The candidate has enough support and matches the ratio at every
    /// recorded prime.
    pub consistent: bool,
}

/// `floor(cbrt(n))`.
fn icbrt(n: u64) -> u64 {
    let mut r = (n as f64).cbrt() as u64;
    while r * r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Finds `a / b` with `|a| <= bound`, `0 < b <= bound` and `a = r b mod p`,
/// by the half-extended Euclidean algorithm. Unique when `2 bound^2 < p`.
pub fn reconstruct_rational(r: u64, p: u64, bound: u64) -> Option<BigRational> {
    let (mut r0, mut r1) = (p as i128, (r % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound as i128 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.unsigned_abs() > bound as u128 {
        return None;
    }
    Some(BigRational::new(BigInt::from(r1), BigInt::from(t1)))
}

/// Writes `eval(v) = p w mod p^2` per prime and reconstructs `w / beta_k`
/// mod `p` as a rational of height at most `p^{1/3}`.
pub fn ratio_probe(
    combination: &IndexCombination,
    k: u32,
    range: &PrimeRange,
    star: bool,
) -> Result<ProbeReport> {
    let value = eval(&EvalRequest::new(
        combination.clone(),
        star,
        range.clone(),
        2,
    ));
    let beta = beta(k, range)?;

    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for (p, v) in value.values() {
        let Some(b) = beta.get(p) else {
            skipped.push(SkippedPrime {
                p,
                reason: beta.skipped().get(&p).cloned().unwrap_or_default(),
            });
            continue;
        };
        if v % p != 0 {
            return Err(Error::Precondition(format!(
                "{combination} does not vanish modulo {p}"
            )));
        }
        let b = b.value() % p;
        if b == 0 {
            skipped.push(SkippedPrime {
                p,
                reason: format!("beta_{k} vanishes modulo {p}"),
            });
            continue;
        }
        let m = Modulus::new(p, 1)?;
        let quotient = v / p;
        let ratio = m.mul(quotient, m.inv(b)?);
        records.push(ProbeRecord {
            p,
            quotient,
            beta: b,
            ratio,
            reconstructed: reconstruct_rational(ratio, p, icbrt(p)).map(|q| q.to_string()),
        });
    }
    for (&p, reason) in value.skipped() {
        skipped.push(SkippedPrime {
            p,
            reason: reason.clone(),
        });
    }
    skipped.sort_by_key(|s| s.p);

    let mut tally: BTreeMap<&str, usize> = BTreeMap::new();
    for r in &records {
        if let Some(q) = &r.reconstructed {
            *tally.entry(q.as_str()).or_default() += 1;
        }
    }
    let best = tally
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(a.0)))
        .map(|(q, n)| (q.to_string(), *n));
    let (candidate, support) = match best {
        Some((q, n)) => (Some(q), n),
        None => (None, 0),
    };
    let consistent = match &candidate {
        Some(q) if support >= MIN_SUPPORT => {
            let q: BigRational = q.parse().expect("formatted by BigRational");
            records.iter().all(|r| {
                let m = Modulus::new(r.p, 1).expect("prime");
                m.rational(&q).is_ok_and(|c| c == r.ratio)
            })
        }
        _ => false,
    };

    Ok(ProbeReport {
        combination: combination.to_string(),
        k,
        star,
        range: range.clone(),
        records,
        skipped,
        candidate,
        support,
        consistent,
    })
}
