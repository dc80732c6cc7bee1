//! Finite stand-ins for elements of `A_1` and `A_2`: one residue per prime
//! over a declared range, with every omitted prime listed with a reason.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;

use crate::modular::{Modulus, PrimeRange, Residue};

/// Primes below this bound are never evaluated.
pub const MIN_PRIME: u64 = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdelicElement {
    power: u8,
    range: PrimeRange,
    values: BTreeMap<u64, u64>,
    skipped: BTreeMap<u64, String>,
}

impl AdelicElement {
    /// Fills one residue per prime of `range`, in parallel.
    ///
    /// Primes 2 and 3 and members of the range's skip set are recorded as
    /// skipped without calling `f`; an `Err` from `f` skips that prime with
    /// the returned reason.
    pub fn from_fn<F>(range: &PrimeRange, power: u8, f: F) -> Self
    where
        F: Fn(&Modulus) -> Result<u64, String> + Sync,
    {
        let all = crate::modular::primes_in(&PrimeRange::new(range.lo, range.hi));
        let outcomes: Vec<(u64, Result<u64, String>)> = all
            .par_iter()
            .map(|&p| {
                let outcome = if p < MIN_PRIME {
                    Err("p < 5 is excluded globally".to_string())
                } else if range.skip.contains(&p) {
                    Err("excluded by the range's skip set".to_string())
                } else {
                    Modulus::new(p, power)
                        .map_err(|e| e.to_string())
                        .and_then(|m| f(&m))
                };
                (p, outcome)
            })
            .collect();
        let mut values = BTreeMap::new();
        let mut skipped = BTreeMap::new();
        for (p, outcome) in outcomes {
            match outcome {
                Ok(v) => {
                    values.insert(p, v);
                }
                Err(reason) => {
                    skipped.insert(p, reason);
                }
            }
        }
        Self {
            power,
            range: range.clone(),
            values,
            skipped,
        }
    }

    /// The image of an exact rational; primes dividing its denominator are
    /// skipped.
    pub fn constant(range: &PrimeRange, power: u8, q: &BigRational) -> Self {
        Self::from_fn(range, power, |m| m.rational(q).map_err(|e| e.to_string()))
    }

    /// The element `(p mod p^2)_p`.
    pub fn p_element(range: &PrimeRange) -> Self {
        Self::from_fn(range, 2, |m| Ok(m.reduce(m.p())))
    }

    pub fn power(&self) -> u8 {
        self.power
    }

    pub fn range(&self) -> &PrimeRange {
        &self.range
    }

    pub fn get(&self, p: u64) -> Option<Residue> {
        let v = *self.values.get(&p)?;
        Some(Residue::new(v, p, self.power).expect("stored primes are valid"))
    }

    /// `(p, canonical value)` pairs in ascending order of `p`.
    pub fn values(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.values.iter().map(|(&p, &v)| (p, v))
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.values.keys().copied()
    }

    pub fn skipped(&self) -> &BTreeMap<u64, String> {
        &self.skipped
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&Modulus, u64, u64) -> u64) -> Self {
        assert_eq!(
            self.power, other.power,
            "adelic arithmetic across A_1 and A_2"
        );
        let mut skipped = self.skipped.clone();
        for (p, r) in &other.skipped {
            skipped.entry(*p).or_insert_with(|| r.clone());
        }
        let mut values = BTreeMap::new();
        for (&p, &a) in &self.values {
            if let Some(&b) = other.values.get(&p) {
                let m = Modulus::new(p, self.power).expect("stored primes are valid");
                values.insert(p, op(&m, a, b));
            }
        }
        Self {
            power: self.power,
            range: self.range.clone(),
            values,
            skipped,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |m, a, b| m.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |m, a, b| m.sub(a, b))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip_with(other, |m, a, b| m.mul(a, b))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut out = self.clone();
        out.values.clear();
        for (&p, &v) in &self.values {
            let m = Modulus::new(p, self.power).expect("stored primes are valid");
            match m.rational(q) {
                Ok(c) => {
                    out.values.insert(p, m.mul(c, v));
                }
                Err(e) => {
                    out.skipped.insert(p, e.to_string());
                }
            }
        }
        out
    }

    /// Image under the projection `A_2 -> A_1`.
    pub fn project(&self) -> Self {
        Self {
            power: 1,
            range: self.range.clone(),
            values: self.values.iter().map(|(&p, &v)| (p, v % p)).collect(),
            skipped: self.skipped.clone(),
        }
    }
}
