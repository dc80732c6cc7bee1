use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Deterministic trial division; callers only pass values below `2^32`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Inclusive range of primes with an explicit exclusion set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeRange {
    pub lo: u64,
    pub hi: u64,
    #[serde(default)]
    pub skip: BTreeSet<u64>,
}

impl PrimeRange {
    pub fn new(lo: u64, hi: u64) -> Self {
        Self {
            lo: lo.max(2),
            hi,
            skip: BTreeSet::new(),
        }
    }

    pub fn single(p: u64) -> Self {
        Self::new(p, p)
    }

    pub fn with_skip(mut self, skip: impl IntoIterator<Item = u64>) -> Self {
        self.skip.extend(skip);
        self
    }

    pub fn contains(&self, p: u64) -> bool {
        (self.lo..=self.hi).contains(&p) && !self.skip.contains(&p) && is_prime(p)
    }

    pub fn primes(&self) -> Vec<u64> {
        primes_in(self)
    }
}

impl fmt::Display for PrimeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)?;
        if !self.skip.is_empty() {
            let skip: Vec<String> = self.skip.iter().map(u64::to_string).collect();
            write!(f, " skip {}", skip.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for PrimeRange {
    type Err = Error;

    /// Parses `"LO..HI"` (inclusive).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRange(s.to_string());
        let (lo, hi) = s.trim().split_once("..").ok_or_else(bad)?;
        let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
        if lo < 2 || lo > hi || hi >= 1 << 32 {
            return Err(bad());
        }
        Ok(Self::new(lo, hi))
    }
}

/// Ascending primes in `[lo, hi]` minus the skip set.
pub fn primes_in(range: &PrimeRange) -> Vec<u64> {
    if range.hi < range.lo || range.hi < 2 {
        return Vec::new();
    }
    let hi = range.hi as usize;
    let mut composite = vec![false; hi + 1];
    let mut out = Vec::new();
    for n in 2..=hi {
        if composite[n] {
            continue;
        }
        if n as u64 >= range.lo && !range.skip.contains(&(n as u64)) {
            out.push(n as u64);
        }
        let mut k = n * n;
        while k <= hi {
            composite[k] = true;
            k += n;
        }
    }
    out
}
