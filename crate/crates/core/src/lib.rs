//! Finite multiple zeta(-star) values modulo `p` and `p^2`.
//!
//! The crate is layered bottom up:
//!
//! * [`algebra`]: indices, words, rational combinations and shuffles;
//! * [`modular`]: `Z/p^n Z` arithmetic and prime ranges;
//! * [`bernoulli`]: Bernoulli numbers and the constants `beta_k`, `p`;
//! * [`engine`]: truncated multiple harmonic sums and their adelic
//!   evaluation;
//! * [`identities`]: the verification registry, ratio probe and suite
//!   runner.

pub mod adelic;
pub mod algebra;
pub mod bernoulli;
pub mod combinatorics;
pub mod engine;
mod error;
pub mod identities;
pub mod modular;

pub use adelic::AdelicElement;
pub use error::{Error, Result};
