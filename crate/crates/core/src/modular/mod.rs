//! Arithmetic in `Z/p^n Z` for `n` in `{1, 2}` and finite prime ranges.

mod primes;
mod residue;

pub use primes::{is_prime, primes_in, PrimeRange};
pub use residue::{batch_inv, rational_to_residue, Modulus, Residue};
