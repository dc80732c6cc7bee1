use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A tuple `(k_1, ..., k_r)` of positive integers, innermost summation
/// variable first.
///
/// Ordered by depth, then lexicographically.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Index(Vec<u32>);

impl Index {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::ParseIndex(format!("{entries:?}")));
        }
        Ok(Self(entries))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Index) -> Index {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Index(v)
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(!entries.contains(&0));
        Self(entries)
    }
}

impl Ord for Index {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Index {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl FromStr for Index {
    type Err = Error;

    /// Comma-separated positive integers; whitespace is ignored and the
    /// empty string is the empty index.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Ok(Self::empty());
        }
        let entries = compact
            .split(',')
            .map(|t| match t.parse::<u32>() {
                Ok(k) if k > 0 && t.bytes().all(|b| b.is_ascii_digit()) => Ok(k),
                _ => Err(Error::ParseIndex(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self(entries))
    }
}

impl From<&[u32]> for Index {
    /// Panics on a zero entry; intended for literals.
    fn from(entries: &[u32]) -> Self {
        Index::new(entries.to_vec()).expect("index entries must be positive")
    }
}

impl<const N: usize> From<[u32; N]> for Index {
    fn from(entries: [u32; N]) -> Self {
        Index::from(&entries[..])
    }
}

impl Serialize for Index {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Index {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `{pattern}^count`.
pub fn repeat(pattern: &Index, count: usize) -> Index {
    Index(pattern.0.repeat(count))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

/// A word over `{x, y}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Membership in `Q + Q<x,y>y`.
    pub fn in_h1(&self) -> bool {
        self.0.last().is_none_or(|&l| l == Letter::Y)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::X => "x",
                Letter::Y => "y",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                _ => Err(Error::NotInH1(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// `(k_1, ..., k_r) -> x^{k_r - 1} y ... x^{k_1 - 1} y`. The reversal lives
/// here and nowhere else.
pub fn index_to_word(index: &Index) -> Word {
    let mut letters = Vec::with_capacity(index.weight() as usize);
    for &k in index.0.iter().rev() {
        letters.extend(std::iter::repeat_n(Letter::X, k as usize - 1));
        letters.push(Letter::Y);
    }
    Word(letters)
}

pub fn word_to_index(word: &Word) -> Result<Index> {
    if !word.in_h1() {
        return Err(Error::NotInH1(word.to_string()));
    }
    let mut entries = Vec::new();
    let mut run = 1;
    for &l in &word.0 {
        match l {
            Letter::X => run += 1,
            Letter::Y => {
                entries.push(run);
                run = 1;
            }
        }
    }
    entries.reverse();
    Ok(Index(entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn to_word() {
        assert_eq!(index_to_word(&Index::empty()), Word::default());
        assert_eq!(index_to_word(&Index::from([1, 2])), w("xyy"));
        assert_eq!(index_to_word(&Index::from([2, 3])), w("xxyxy"));
    }

    #[test]
    fn to_index() {
        assert_eq!(word_to_index(&Word::default()).unwrap(), Index::empty());
        assert_eq!(word_to_index(&w("xyy")).unwrap(), Index::from([1, 2]));
        assert_eq!(word_to_index(&w("xxy")).unwrap(), Index::from([3]));
        assert!(matches!(word_to_index(&w("yx")), Err(Error::NotInH1(_))));
    }

    #[test]
    fn repetition() {
        assert_eq!(repeat(&Index::from([2]), 2), Index::from([2, 2]));
        assert_eq!(repeat(&Index::from([1, 3]), 2), Index::from([1, 3, 1, 3]));
        assert_eq!(repeat(&Index::from([1, 3]), 0), Index::empty());
    }

    #[test]
    fn weight_and_depth() {
        let i = Index::from([1, 3, 2]);
        assert_eq!((i.weight(), i.depth()), (6, 3));
        assert_eq!((Index::empty().weight(), Index::empty().depth()), (0, 0));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(
            " 1, 3 ,2 ".parse::<Index>().unwrap(),
            Index::from([1, 3, 2])
        );
        assert_eq!("".parse::<Index>().unwrap(), Index::empty());
        assert_eq!(Index::from([1, 3, 2]).to_string(), "1,3,2");
        for bad in ["0", "1,,2", "1,", "-1", "+2", "a", "1;2"] {
            assert!(bad.parse::<Index>().is_err(), "{bad}");
        }
        assert!(Index::new(vec![1, 0]).is_err());
    }

    #[test]
    fn canonical_order() {
        let mut v = [
            Index::from([1, 2]),
            Index::from([5]),
            Index::empty(),
            Index::from([1, 1, 1]),
            Index::from([1, 1]),
        ];
        v.sort();
        let s: Vec<String> = v.iter().map(|i| i.to_string()).collect();
        assert_eq!(s, ["", "5", "1,1", "1,2", "1,1,1"]);
    }

    /// Every index of weight at most `max`, enumerated as compositions.
    fn compositions(max: u32) -> Vec<Index> {
        let mut out = vec![Index::empty()];
        let mut frontier = vec![Vec::<u32>::new()];
        while let Some(prefix) = frontier.pop() {
            let used: u32 = prefix.iter().sum();
            for k in 1..=max - used {
                let mut next = prefix.clone();
                next.push(k);
                out.push(Index(next.clone()));
                frontier.push(next);
            }
        }
        out
    }

    #[test]
    fn roundtrip_through_words_up_to_weight_12() {
        let all = compositions(12);
        assert_eq!(all.len(), 1 << 12);
        for i in all {
            let word = index_to_word(&i);
            assert_eq!(word.len() as u32, i.weight());
            assert_eq!(word_to_index(&word).unwrap(), i);
        }
    }

    proptest! {
        #[test]
        fn words_ending_in_y_roundtrip(bits in proptest::collection::vec(any::<bool>(), 0..20)) {
            let mut letters: Vec<Letter> = bits.into_iter().map(|b| if b { Letter::X } else { Letter::Y }).collect();
            letters.push(Letter::Y);
            let word = Word::new(letters);
            prop_assert_eq!(index_to_word(&word_to_index(&word).unwrap()), word);
        }
    }
}
