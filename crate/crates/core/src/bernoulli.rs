//! Seki-Bernoulli numbers, exactly and modulo `p^2`, and the adelic
//! constants built from them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::adelic::AdelicElement;
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::modular::{Modulus, PrimeRange, Residue};

/// Largest index accepted by [`bernoulli_exact`].
pub const EXACT_CAP: usize = 60;

/// Sign of `B_1`. Only `B_1` differs between the two.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    /// `B_1 = +1/2`, the Seki convention.
    #[default]
    Seki,
    /// `B_1 = -1/2`.
    Minus,
}

impl Convention {
    /// Right-hand side of `sum_{j=0}^{n} C(n+1, j) B_j = rhs(n)`.
    fn rhs(self, n: usize) -> u64 {
        match self {
            Convention::Seki => n as u64 + 1,
            Convention::Minus => u64::from(n == 0),
        }
    }
}

pub fn bernoulli_exact(n: usize) -> Result<BigRational> {
    bernoulli_exact_with(n, Convention::Seki)
}

pub fn bernoulli_exact_with(n: usize, convention: Convention) -> Result<BigRational> {
    if n > EXACT_CAP {
        return Err(Error::BernoulliCap(n));
    }
    let mut table: Vec<BigRational> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = BigRational::from_integer(BigInt::from(convention.rhs(i)));
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc -= BigRational::from_integer(binomial(i as i64 + 1, j as i64)) * b;
            }
        }
        table.push(acc / BigRational::from_integer(BigInt::from(i + 1)));
    }
    Ok(table.pop().expect("table has n + 1 entries"))
}

/// `B_0, ..., B_{p-2}` modulo `p^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    modulus: Modulus,
    values: Vec<u64>,
}

impl BernoulliTable {
    pub fn p(&self) -> u64 {
        self.modulus.p()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `B_j mod p^2` for `j <= p - 2`.
    pub fn get(&self, j: usize) -> Option<Residue> {
        self.values.get(j).map(|&v| self.modulus.residue(v))
    }

    fn compute(p: u64, convention: Convention) -> Result<Self> {
        if p < 5 {
            return Err(Error::Precondition(format!(
                "Bernoulli tables mod p^2 need p >= 5, got {p}"
            )));
        }
        let m = Modulus::new(p, 2)?;
        let len = (p - 1) as usize;
        let denominators: Vec<u64> = (1..=len as u64).collect();
        let inverses = m.batch_inv(&denominators)?;
        // row[j] = C(n + 1, j) mod p^2, advanced one step per n.
        let mut row = vec![0u64; len + 2];
        row[0] = 1;
        row[1] = 1;
        let mut values: Vec<u64> = Vec::with_capacity(len);
        for (n, &inverse) in inverses.iter().enumerate().take(len) {
            let mut acc = m.reduce(convention.rhs(n));
            for (j, &b) in values.iter().enumerate() {
                if b != 0 {
                    acc = m.sub(acc, m.mul(row[j], b));
                }
            }
            values.push(m.mul(acc, inverse));
            for j in (1..=n + 2).rev() {
                row[j] = m.add(row[j], row[j - 1]);
            }
        }
        Ok(Self { modulus: m, values })
    }
}

type Cache = Mutex<HashMap<(u64, Convention), Arc<BernoulliTable>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The table for `p`, memoized for the lifetime of the process.
pub fn bernoulli_mod(p: u64) -> Result<Arc<BernoulliTable>> {
    bernoulli_mod_with(p, Convention::Seki)
}

pub fn bernoulli_mod_with(p: u64, convention: Convention) -> Result<Arc<BernoulliTable>> {
    let key = (p, convention);
    if let Some(t) = cache().lock().expect("cache poisoned").get(&key) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(BernoulliTable::compute(p, convention)?);
    Ok(Arc::clone(
        cache()
            .lock()
            .expect("cache poisoned")
            .entry(key)
            .or_insert(table),
    ))
}

/// `beta_k = (B_{p-k} / k mod p^2)_p`; primes `p <= k + 2` are skipped.
pub fn beta(k: u32, range: &PrimeRange) -> Result<AdelicElement> {
    beta_with(k, range, Convention::Seki)
}

pub fn beta_with(k: u32, range: &PrimeRange, convention: Convention) -> Result<AdelicElement> {
    if k < 2 {
        return Err(Error::BetaIndex(k));
    }
    Ok(AdelicElement::from_fn(range, 2, |m| {
        let p = m.p();
        if p <= u64::from(k) + 2 {
            return Err(format!("beta_{k} is not evaluated for p <= {}", k + 2));
        }
        beta_at_with(k, p, convention)
            .map(|r| r.value())
            .map_err(|e| e.to_string())
    }))
}

/// `B_{p-k} / k mod p^2` at a single prime, without the skip policy.
/// Needs `2 <= k < p`.
pub fn beta_at(k: u32, p: u64) -> Result<Residue> {
    beta_at_with(k, p, Convention::Seki)
}

pub fn beta_at_with(k: u32, p: u64, convention: Convention) -> Result<Residue> {
    if k < 2 {
        return Err(Error::BetaIndex(k));
    }
    if u64::from(k) >= p {
        return Err(Error::Precondition(format!(
            "beta_{k} needs p > {k}, got {p}"
        )));
    }
    let table = bernoulli_mod_with(p, convention)?;
    let b = table
        .get((p - u64::from(k)) as usize)
        .expect("p - k <= p - 2");
    Ok(b * b.modulus().residue(u64::from(k)).inv()?)
}

/// The element `p` of `A_2`.
pub fn p_element(range: &PrimeRange) -> AdelicElement {
    AdelicElement::p_element(range)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::rational_to_residue;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn exact_values() {
        assert_eq!(bernoulli_exact(0).unwrap(), q(1, 1));
        assert_eq!(bernoulli_exact(1).unwrap(), q(1, 2));
        assert_eq!(bernoulli_exact(2).unwrap(), q(1, 6));
        assert_eq!(bernoulli_exact(3).unwrap(), q(0, 1));
        assert_eq!(bernoulli_exact(4).unwrap(), q(-1, 30));
        assert_eq!(bernoulli_exact(12).unwrap(), q(-691, 2730));
        assert_eq!(
            bernoulli_exact_with(1, Convention::Minus).unwrap(),
            q(-1, 2)
        );
        assert_eq!(bernoulli_exact(61), Err(Error::BernoulliCap(61)));
    }

    #[test]
    fn conventions_agree_beyond_one() {
        for n in (0..=40).filter(|&n| n != 1) {
            assert_eq!(
                bernoulli_exact(n).unwrap(),
                bernoulli_exact_with(n, Convention::Minus).unwrap()
            );
        }
    }

    #[test]
    fn table_examples_mod_49() {
        let t = bernoulli_mod(7).unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(t.get(0).unwrap().value(), 1);
        assert_eq!(t.get(2).unwrap().value(), 41);
        assert_eq!(t.get(3).unwrap().value(), 0);
        assert_eq!(t.get(4).unwrap().value(), 31);
        assert!(t.get(6).is_none());
        assert!(bernoulli_mod(3).is_err());
    }

    #[test]
    fn tables_match_exact_rationals() {
        for p in [5u64, 7, 11, 13, 31, 61] {
            let t = bernoulli_mod(p).unwrap();
            for j in 0..=(p as usize - 2) {
                let exact = rational_to_residue(&bernoulli_exact(j).unwrap(), p, 2).unwrap();
                assert_eq!(t.get(j).unwrap(), exact, "p={p} j={j}");
            }
            for j in (3..=(p as usize - 2)).step_by(2) {
                assert!(t.get(j).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn beta_examples() {
        let range = PrimeRange::new(5, 40);
        let b3 = beta(3, &range).unwrap();
        assert_eq!(b3.get(7).unwrap().value(), 43);
        assert!(b3.get(5).is_none());
        assert_eq!(beta_at(3, 7).unwrap().value(), 43);
        // p = 7 <= 5 + 2 sits below the adelic threshold but the raw value exists.
        let m = Modulus::new(7, 2).unwrap();
        assert_eq!(beta_at(5, 7).unwrap().value(), m.mul(41, m.inv(5).unwrap()));
        assert!(beta(5, &range).unwrap().get(7).is_none());
        assert!(beta_at(7, 7).is_err());
        let b4 = beta(4, &range).unwrap();
        assert!(b4.values().all(|(_, v)| v == 0));
        assert_eq!(beta(1, &range), Err(Error::BetaIndex(1)));
    }

    #[test]
    fn odd_beta_is_nonzero_on_sample() {
        // Logged rather than asserted: nonvanishing is not a theorem.
        let range = PrimeRange::new(5, 200);
        for k in [3u32, 5, 7, 9, 11, 13] {
            let b = beta(k, &range).unwrap();
            let zeros: Vec<u64> = b
                .values()
                .filter(|&(_, v)| v == 0)
                .map(|(p, _)| p)
                .collect();
            if !zeros.is_empty() {
                eprintln!("beta_{k} vanishes mod p^2 at {zeros:?}");
            }
        }
    }
}
