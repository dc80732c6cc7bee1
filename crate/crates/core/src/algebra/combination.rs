use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::index::{Index, Word};

/// A finite formal rational linear combination of basis elements.
///
/// Zero coefficients are never stored, so equality of combinations is
/// equality of the underlying maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCombination<K: Ord> {
    terms: BTreeMap<K, BigRational>,
}

pub type IndexCombination = LinearCombination<Index>;
pub type WordCombination = LinearCombination<Word>;

impl<K: Ord> Default for LinearCombination<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinearCombination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, BigRational::one())
    }

    pub fn term(key: K, coeff: BigRational) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
    }

    pub fn add_term(&mut self, key: K, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, key: &K) -> BigRational {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().sum()
    }

    /// Re-keys every term, merging keys that collide.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> LinearCombination<L> {
        self.terms.iter().map(|(k, c)| (f(k), c.clone())).collect()
    }
}

impl<K: Ord + Clone> FromIterator<(K, BigRational)> for LinearCombination<K> {
    fn from_iter<I: IntoIterator<Item = (K, BigRational)>>(iter: I) -> Self {
        let mut c = Self::zero();
        for (k, v) in iter {
            c.add_term(k, v);
        }
        c
    }
}

impl<K: Ord + Clone> AddAssign<&LinearCombination<K>> for LinearCombination<K> {
    fn add_assign(&mut self, rhs: &LinearCombination<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<K: Ord + Clone> Add for &LinearCombination<K> {
    type Output = LinearCombination<K>;
    fn add(self, rhs: Self) -> LinearCombination<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Neg for &LinearCombination<K> {
    type Output = LinearCombination<K>;
    fn neg(self) -> LinearCombination<K> {
        LinearCombination {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl<K: Ord + Clone> Sub for &LinearCombination<K> {
    type Output = LinearCombination<K>;
    fn sub(self, rhs: Self) -> LinearCombination<K> {
        let mut out = self.clone();
        out += &-rhs;
        out
    }
}

/// Terms `c*(key)` joined by `" + "` in canonical key order; `0` when empty.
impl<K: Ord + fmt::Display> fmt::Display for LinearCombination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*({k})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut c = IndexCombination::basis(Index::from([2]));
        c.add_term(Index::from([2]), q(-1, 1));
        assert!(c.is_zero());
        c.add_term(Index::from([1]), q(0, 1));
        assert!(c.is_zero());
        assert!(c.scale(&q(0, 1)).is_zero());
    }

    #[test]
    fn arithmetic_and_text_form() {
        let a = IndexCombination::term(Index::from([1, 2]), q(1, 2));
        let b: IndexCombination = [(Index::from([3]), q(-2, 3)), (Index::from([1, 2]), q(1, 2))]
            .into_iter()
            .collect();
        let s = &a + &b;
        assert_eq!(s.to_string(), "-2/3*(3) + 1*(1,2)");
        assert_eq!((&s - &b), a);
        assert_eq!(IndexCombination::zero().to_string(), "0");
        assert_eq!(IndexCombination::basis(Index::empty()).to_string(), "1*()");
        assert_eq!(s.coefficient_sum(), q(1, 3));
    }
}
