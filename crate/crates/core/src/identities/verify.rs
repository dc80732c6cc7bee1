use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::report::{PrimeRecord, SkippedPrime, SymbolicOutcome, Verdict, VerificationReport};
use super::sides::adelic_sides;
use super::{Identity, Kind};
use crate::algebra::muneta_sides;
use crate::bernoulli::Convention;
use crate::combinatorics::{binomial, multinomial};
use crate::error::{Error, Result};
use crate::modular::PrimeRange;

/// Dispatches on the identity's kind; `range` is ignored for symbolic ones.
pub fn verify(identity: &Identity, range: &PrimeRange) -> Result<VerificationReport> {
    match identity.kind() {
        Kind::SymbolicExact => verify_symbolic(identity),
        _ => verify_adelic(identity, range),
    }
}

pub fn verify_symbolic(identity: &Identity) -> Result<VerificationReport> {
    identity.validate()?;
    let outcome = match *identity {
        Identity::Muneta { l, m } => {
            let (lhs, rhs) = muneta_sides(l as usize, m as usize);
            SymbolicOutcome {
                difference: (&lhs - &rhs).to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }
        }
        Identity::Vdm1 { l, m } => {
            let (l, m) = (i64::from(l), i64::from(m));
            let lhs = (0..=l).fold(BigInt::zero(), |acc, k| {
                let term = binomial(2 * l + m - 2 * k, l - k) * binomial(2 * l + m - k, k);
                if k % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            });
            let rhs = BigInt::one();
            SymbolicOutcome {
                difference: (&lhs - &rhs).to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }
        }
        Identity::Vdm2 { l, m } => {
            let (l, m) = (i64::from(l), i64::from(m));
            let lhs = (0..=l).fold(BigInt::zero(), |acc, k| {
                acc + BigInt::from(4).pow(k as u32)
                    * binomial(2 * l + m - 2 * k, l - k)
                    * binomial(2 * l + m, 2 * k)
            });
            // The same coefficient of Y^{2l} read off (1 + 2Y + Y^2)^{2l+m}.
            let n = (2 * l + m) as u64;
            let via_multinomial = (0..=l as u64).try_fold(BigInt::zero(), |acc, j| {
                let parts = multinomial(n, j + m as u64, 2 * l as u64 - 2 * j, j)?;
                Ok::<_, Error>(acc + parts * BigInt::from(2).pow((2 * l as u64 - 2 * j) as u32))
            })?;
            let rhs = binomial(4 * l + 2 * m, 2 * l);
            let difference = if lhs == via_multinomial {
                (&lhs - &rhs).to_string()
            } else {
                format!("{} (multinomial form {via_multinomial})", &lhs - &rhs)
            };
            SymbolicOutcome {
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                difference,
            }
        }
        _ => {
            return Err(Error::InvalidParams {
                id: identity.id().to_string(),
                reason: format!("{} is not a symbolic identity", identity.id()),
            })
        }
    };
    let pass = outcome.difference == "0";
    Ok(VerificationReport {
        identity: identity.clone(),
        kind: Kind::SymbolicExact,
        power: None,
        range: None,
        threshold: None,
        records: Vec::new(),
        skipped: Vec::new(),
        symbolic: Some(outcome),
        gated_primes: 0,
        failures: Vec::new(),
        verdict: Verdict::from_pass(pass),
    })
}

pub fn verify_adelic(identity: &Identity, range: &PrimeRange) -> Result<VerificationReport> {
    verify_adelic_with(identity, range, Convention::Seki)
}

/// As [`verify_adelic`], with an explicit sign convention for `B_1`.
pub fn verify_adelic_with(
    identity: &Identity,
    range: &PrimeRange,
    convention: Convention,
) -> Result<VerificationReport> {
    let kind = identity.kind();
    let power = kind.power().ok_or_else(|| Error::InvalidParams {
        id: identity.id().to_string(),
        reason: "symbolic identity verified adelically".to_string(),
    })?;
    let (lhs, rhs) = adelic_sides(identity, range, convention)?;
    let threshold = identity.threshold();

    let mut records = Vec::new();
    let mut skipped: Vec<SkippedPrime> = Vec::new();
    for (p, l) in lhs.values() {
        match rhs.get(p) {
            Some(r) => records.push(PrimeRecord {
                p,
                lhs: l,
                rhs: r.value(),
                pass: l == r.value(),
                gated: p > threshold,
            }),
            None => skipped.push(SkippedPrime {
                p,
                reason: format!("rhs: {}", rhs.skipped().get(&p).map_or("missing", |s| s)),
            }),
        }
    }
    for (&p, reason) in lhs.skipped() {
        skipped.push(SkippedPrime {
            p,
            reason: format!("lhs: {reason}"),
        });
    }
    skipped.sort_by_key(|s| s.p);

    let failures: Vec<u64> = records
        .iter()
        .filter(|r| r.gated && !r.pass)
        .map(|r| r.p)
        .collect();
    let gated_primes = records.iter().filter(|r| r.gated).count();
    Ok(VerificationReport {
        identity: identity.clone(),
        kind,
        power: Some(power),
        range: Some(range.clone()),
        threshold: Some(threshold),
        records,
        skipped,
        symbolic: None,
        gated_primes,
        verdict: Verdict::from_pass(failures.is_empty()),
        failures,
    })
}
