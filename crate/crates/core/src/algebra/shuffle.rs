use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::combination::IndexCombination;
use super::index::{index_to_word, repeat, word_to_index, Index};
use crate::combinatorics::binomial;

/// All interleavings of `u` and `v` with multiplicities.
///
/// Dynamic program over prefix pairs: the shuffle of `u[..i]` and `v[..j]`
/// ends either in `u[i-1]` or in `v[j-1]`.
pub fn shuffle_words<T: Ord + Clone>(u: &[T], v: &[T]) -> BTreeMap<Vec<T>, u128> {
    let extend = |cell: &BTreeMap<Vec<T>, u128>, letter: &T, into: &mut BTreeMap<Vec<T>, u128>| {
        for (w, &n) in cell {
            let mut w = w.clone();
            w.push(letter.clone());
            let slot = into.entry(w).or_insert(0);
            *slot = slot.checked_add(n).expect("shuffle multiplicity overflow");
        }
    };

    // row[j] holds the shuffle of u[..i] and v[..j] for the current i.
    let mut row: Vec<BTreeMap<Vec<T>, u128>> = (0..=v.len())
        .map(|j| BTreeMap::from([(v[..j].to_vec(), 1)]))
        .collect();
    for i in 1..=u.len() {
        let mut next = Vec::with_capacity(v.len() + 1);
        next.push(BTreeMap::from([(u[..i].to_vec(), 1)]));
        for j in 1..=v.len() {
            let mut cell = BTreeMap::new();
            extend(&row[j], &u[i - 1], &mut cell);
            extend(&next[j - 1], &v[j - 1], &mut cell);
            next.push(cell);
        }
        row = next;
    }
    row.pop().expect("row is never empty")
}

fn bilinear(
    u: &IndexCombination,
    v: &IndexCombination,
    mut product: impl FnMut(&Index, &Index) -> BTreeMap<Index, u128>,
) -> IndexCombination {
    let mut out = IndexCombination::zero();
    for (a, ca) in u.iter() {
        for (b, cb) in v.iter() {
            let coeff = ca * cb;
            for (i, n) in product(a, b) {
                out.add_term(i, &coeff * BigRational::from_integer(BigInt::from(n)));
            }
        }
    }
    out
}

/// The shuffle product of words over `{x, y}`, transported to indices.
pub fn shuffle_sh(u: &IndexCombination, v: &IndexCombination) -> IndexCombination {
    bilinear(u, v, |a, b| {
        let (wa, wb) = (index_to_word(a), index_to_word(b));
        let mut out = BTreeMap::new();
        for (letters, n) in shuffle_words(wa.letters(), wb.letters()) {
            let word = super::index::Word::new(letters);
            let idx = word_to_index(&word).expect("shuffles of H1 words end in y");
            *out.entry(idx).or_insert(0) += n;
        }
        out
    })
}

/// The shuffle product treating each index entry as a single letter.
pub fn shuffle_tilde(u: &IndexCombination, v: &IndexCombination) -> IndexCombination {
    bilinear(u, v, |a, b| {
        shuffle_words(a.entries(), b.entries())
            .into_iter()
            .map(|(e, n)| (Index::from_entries_unchecked(e), n))
            .collect()
    })
}

/// `({pattern}^blocks) t~sh ({filler}^fillers)`.
pub fn interleave_blocks(
    pattern: &Index,
    blocks: usize,
    filler: u32,
    fillers: usize,
) -> IndexCombination {
    let left = IndexCombination::basis(repeat(pattern, blocks));
    let right = IndexCombination::basis(Index::from_entries_unchecked(vec![filler; fillers]));
    shuffle_tilde(&left, &right)
}

/// `({1,3}^l) t~sh ({2}^m)`.
pub fn bb_shuffle(l: usize, m: usize) -> IndexCombination {
    interleave_blocks(&Index::from([1, 3]), l, 2, m)
}

fn twos(n: usize) -> IndexCombination {
    IndexCombination::basis(Index::from_entries_unchecked(vec![2; n]))
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Both sides of the expansion of `4^l (({1,3}^l) t~sh ({2}^m))` in terms of
/// `({2}^{l+m}) sh ({2}^l)` and lower tilde-shuffles.
pub fn muneta_sides(l: usize, m: usize) -> (IndexCombination, IndexCombination) {
    let lhs = bb_shuffle(l, m).scale(&int(BigInt::from(4).pow(l as u32)));
    let mut rhs = shuffle_sh(&twos(l + m), &twos(l));
    for k in 0..l {
        let n = 2 * l + m - 2 * k;
        let coeff = BigInt::from(4).pow(k as u32) * binomial(n as i64, (l - k) as i64);
        rhs = &rhs - &bb_shuffle(k, n).scale(&int(coeff));
    }
    (lhs, rhs)
}
