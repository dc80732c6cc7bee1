use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// `C(n, k)`, zero outside `0 <= k <= n`.
///
/// Panics when `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    assert!(n >= 0, "binomial with negative upper index {n}");
    if k < 0 || k > n {
        return BigInt::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `n! / (a! b! c!)` with `a + b + c = n`.
pub fn multinomial(n: u64, a: u64, b: u64, c: u64) -> Result<BigInt> {
    if a.checked_add(b).and_then(|s| s.checked_add(c)) != Some(n) {
        return Err(Error::Multinomial(n));
    }
    Ok(factorial(n) / (factorial(a) * factorial(b) * factorial(c)))
}
