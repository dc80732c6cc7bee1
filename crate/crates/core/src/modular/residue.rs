use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::primes::is_prime;
use crate::error::{Error, Result};

/// The ring `Z/p^n Z`. Values handed to the raw methods are canonical
/// representatives in `[0, p^n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Modulus {
    p: u64,
    power: u8,
    m: u64,
}

impl Modulus {
    pub fn new(p: u64, power: u8) -> Result<Self> {
        if !(1..=2).contains(&power) {
            return Err(Error::UnsupportedPower(power));
        }
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        let m = if power == 1 { p } else { p * p };
        Ok(Self { p, power, m })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn power(&self) -> u8 {
        self.power
    }

    /// `p^power`.
    #[inline]
    pub fn value(&self) -> u64 {
        self.m
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        x % self.m
    }

    pub fn reduce_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.m as i64) as u64
    }

    pub fn reduce_bigint(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.m))
            .to_u64()
            .expect("canonical residue fits in u64")
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.m {
            s - self.m
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.m - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.m - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.m as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.m;
        base %= self.m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: u64) -> Result<u64> {
        let a = a % self.m;
        if a.is_multiple_of(self.p) {
            return Err(Error::NotInvertible {
                value: a,
                p: self.p,
                power: self.power,
            });
        }
        let (mut r0, mut r1) = (self.m as i128, a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(t0.rem_euclid(self.m as i128) as u64)
    }

    /// Inverts every element with a single modular inversion (prefix products).
    pub fn batch_inv(&self, values: &[u64]) -> Result<Vec<u64>> {
        let mut prefix = Vec::with_capacity(values.len());
        let mut acc = 1 % self.m;
        for (position, &v) in values.iter().enumerate() {
            if v % self.p == 0 {
                return Err(Error::BatchNotInvertible {
                    position,
                    value: v,
                    p: self.p,
                    power: self.power,
                });
            }
            prefix.push(acc);
            acc = self.mul(acc, v % self.m);
        }
        let mut inv_acc = self.inv(acc)?;
        let mut out = vec![0; values.len()];
        for i in (0..values.len()).rev() {
            out[i] = self.mul(inv_acc, prefix[i]);
            inv_acc = self.mul(inv_acc, values[i] % self.m);
        }
        Ok(out)
    }

    /// Residue of an exact rational; the denominator must be prime to `p`.
    pub fn rational(&self, q: &BigRational) -> Result<u64> {
        let den = q.denom();
        let p = BigInt::from(self.p);
        if (den.abs() % &p).is_zero() {
            return Err(Error::DenominatorNotCoprime {
                denominator: den.to_string(),
                p: self.p,
            });
        }
        let num = self.reduce_bigint(q.numer());
        let den = self.reduce_bigint(den);
        Ok(self.mul(num, self.inv(den)?))
    }

    pub fn residue(&self, value: u64) -> Residue {
        Residue {
            value: value % self.m,
            modulus: *self,
        }
    }
}

/// A canonical element of `Z/p^n Z`.
///
/// Mixing residues with different moduli in arithmetic panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    pub fn new(value: u64, p: u64, power: u8) -> Result<Self> {
        Ok(Modulus::new(p, power)?.residue(value))
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn p(&self) -> u64 {
        self.modulus.p
    }

    pub fn power(&self) -> u8 {
        self.modulus.power
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.modulus.residue(self.modulus.inv(self.value)?))
    }

    pub fn pow(&self, exp: u64) -> Self {
        self.modulus.residue(self.modulus.pow(self.value, exp))
    }

    /// Image under `Z/p^2 Z -> Z/p Z`; identity on residues mod `p`.
    pub fn project(&self) -> Self {
        let m = Modulus::new(self.modulus.p, 1).expect("modulus already validated");
        m.residue(self.value)
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "residue arithmetic across different moduli"
        );
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus.m)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Self) -> Self {
        self.check(&rhs);
        self.modulus
            .residue(self.modulus.add(self.value, rhs.value))
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Self) -> Self {
        self.check(&rhs);
        self.modulus
            .residue(self.modulus.sub(self.value, rhs.value))
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Self) -> Self {
        self.check(&rhs);
        self.modulus
            .residue(self.modulus.mul(self.value, rhs.value))
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Self {
        self.modulus.residue(self.modulus.neg(self.value))
    }
}

/// Elementwise inverses of residues sharing one modulus.
pub fn batch_inv(values: &[Residue]) -> Result<Vec<Residue>> {
    let Some(first) = values.first() else {
        return Ok(Vec::new());
    };
    let modulus = first.modulus;
    for v in values {
        first.check(v);
    }
    let raw: Vec<u64> = values.iter().map(|r| r.value).collect();
    Ok(modulus
        .batch_inv(&raw)?
        .into_iter()
        .map(|v| modulus.residue(v))
        .collect())
}

pub fn rational_to_residue(q: &BigRational, p: u64, power: u8) -> Result<Residue> {
    let m = Modulus::new(p, power)?;
    Ok(m.residue(m.rational(q)?))
}
