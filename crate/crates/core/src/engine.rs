//! Multiple harmonic sums truncated at `p - 1`, modulo `p` or `p^2`.
//!
//! For an index `(k_1, ..., k_r)` the strict sum runs over
//! `1 <= n_1 < ... < n_r <= p - 1` and the star sum over
//! `1 <= n_1 <= ... <= n_r <= p - 1`, each term being
//! `1 / (n_1^{k_1} ... n_r^{k_r})`.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::adelic::AdelicElement;
use crate::algebra::{Index, IndexCombination};
use crate::error::{Error, Result};
use crate::modular::{Modulus, PrimeRange, Residue};

/// Inverses of `1..p-1` and their powers for one modulus.
pub struct HarmonicKernel {
    modulus: Modulus,
    // powers[e - 1][n - 1] = n^{-e}
    powers: Vec<Vec<u64>>,
}

impl HarmonicKernel {
    /// Builds inverse powers up to `max_exponent` with one batch inversion.
    pub fn new(modulus: Modulus, max_exponent: u32) -> Self {
        let ns: Vec<u64> = (1..modulus.p()).map(|n| modulus.reduce(n)).collect();
        let inverses = modulus.batch_inv(&ns).expect("1..p-1 are units modulo p^n");
        let mut powers = Vec::with_capacity(max_exponent as usize);
        if max_exponent >= 1 {
            powers.push(inverses.clone());
        }
        for _ in 1..max_exponent {
            let last = powers.last().expect("non-empty");
            let next = last
                .iter()
                .zip(&inverses)
                .map(|(&a, &b)| modulus.mul(a, b))
                .collect();
            powers.push(next);
        }
        Self { modulus, powers }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    fn inverse_powers(&mut self, e: u32) -> &[u64] {
        while self.powers.len() < e as usize {
            let m = self.modulus;
            let next: Vec<u64> = match self.powers.last() {
                Some(last) => last
                    .iter()
                    .zip(&self.powers[0])
                    .map(|(&a, &b)| m.mul(a, b))
                    .collect(),
                None => {
                    let ns: Vec<u64> = (1..m.p()).map(|n| m.reduce(n)).collect();
                    m.batch_inv(&ns).expect("1..p-1 are units modulo p^n")
                }
            };
            self.powers.push(next);
        }
        &self.powers[e as usize - 1]
    }

    /// The harmonic sum as a canonical value.
    ///
    /// `acc[j]` holds the sum over `n_1 < ... < n_j` (or `<=`) bounded by the
    /// current `n`. The strict sum updates `j` from the top down, so that
    /// `acc[j - 1]` still excludes the current `n`; the star sum updates
    /// bottom up so that it includes it.
    #[allow(clippy::needless_range_loop)]
    pub fn sum(&mut self, index: &Index, star: bool) -> u64 {
        let m = self.modulus;
        let depth = index.depth();
        if depth == 0 {
            return m.reduce(1);
        }
        for &k in index.entries() {
            self.inverse_powers(k);
        }
        let columns: Vec<&[u64]> = index
            .entries()
            .iter()
            .map(|&k| self.powers[k as usize - 1].as_slice())
            .collect();
        let mut acc = vec![0u64; depth + 1];
        acc[0] = m.reduce(1);
        for n in 0..(m.p() - 1) as usize {
            if star {
                for j in 1..=depth {
                    acc[j] = m.add(acc[j], m.mul(acc[j - 1], columns[j - 1][n]));
                }
            } else {
                for j in (1..=depth).rev() {
                    acc[j] = m.add(acc[j], m.mul(acc[j - 1], columns[j - 1][n]));
                }
            }
        }
        acc[depth]
    }
}

/// The multiple harmonic sum of `index` modulo `p^power`; `1` for the
/// empty index.
pub fn mhs(index: &Index, p: u64, power: u8, star: bool) -> Result<Residue> {
    let m = Modulus::new(p, power)?;
    let max = index.entries().iter().copied().max().unwrap_or(0);
    let mut kernel = HarmonicKernel::new(m, max);
    Ok(m.residue(kernel.sum(index, star)))
}

/// Largest prime accepted by [`mhs_bruteforce`].
pub const BRUTEFORCE_MAX_PRIME: u64 = 50;
/// Largest depth accepted by [`mhs_bruteforce`].
pub const BRUTEFORCE_MAX_DEPTH: usize = 4;

/// Direct enumeration of every summation tuple, inverting each term's
/// denominator by Euler's theorem. Shares no code with [`mhs`].
pub fn mhs_bruteforce(index: &Index, p: u64, power: u8, star: bool) -> Result<Residue> {
    if p > BRUTEFORCE_MAX_PRIME || index.depth() > BRUTEFORCE_MAX_DEPTH {
        return Err(Error::CostGuard {
            p,
            depth: index.depth(),
        });
    }
    let m = Modulus::new(p, power)?;
    let phi = m.value() / p * (p - 1);

    fn walk(
        m: &Modulus,
        phi: u64,
        ks: &[u32],
        lowest: u64,
        denom: u64,
        star: bool,
        total: &mut u64,
    ) {
        let Some((&k, rest)) = ks.split_first() else {
            *total = m.add(*total, m.pow(denom, phi - 1));
            return;
        };
        for n in lowest..m.p() {
            let next = if star { n } else { n + 1 };
            walk(
                m,
                phi,
                rest,
                next,
                m.mul(denom, m.pow(n, k as u64)),
                star,
                total,
            );
        }
    }

    let mut total = 0;
    walk(&m, phi, index.entries(), 1, m.reduce(1), star, &mut total);
    Ok(m.residue(total))
}

/// A rational linear combination of harmonic sums, evaluated over a prime
/// range.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EvalRequest {
    #[serde(skip)]
    pub combination: IndexCombination,
    pub star: bool,
    pub range: PrimeRange,
    pub power: u8,
}

impl EvalRequest {
    pub fn new(combination: IndexCombination, star: bool, range: PrimeRange, power: u8) -> Self {
        Self {
            combination,
            star,
            range,
            power,
        }
    }
}

/// Evaluates the combination prime by prime. A coefficient whose
/// denominator is divisible by `p` skips `p` with that reason.
pub fn eval(req: &EvalRequest) -> AdelicElement {
    let terms: Vec<(&Index, &BigRational)> = req.combination.iter().collect();
    let max = terms
        .iter()
        .flat_map(|(i, _)| i.entries().iter().copied())
        .max()
        .unwrap_or(0);
    AdelicElement::from_fn(&req.range, req.power, |m| {
        let mut kernel = HarmonicKernel::new(*m, max);
        let mut total = 0;
        for (index, coeff) in &terms {
            let c = m.rational(coeff).map_err(|e| e.to_string())?;
            total = m.add(total, m.mul(c, kernel.sum(index, req.star)));
        }
        Ok(total)
    })
}

/// Shorthand for evaluating a single index.
pub fn eval_index(index: &Index, star: bool, range: &PrimeRange, power: u8) -> AdelicElement {
    eval(&EvalRequest::new(
        IndexCombination::basis(index.clone()),
        star,
        range.clone(),
        power,
    ))
}
