//! Indices, words over `{x, y}`, their rational linear spans and the two
//! shuffle products.

mod combination;
mod index;
mod shuffle;

pub use combination::{IndexCombination, LinearCombination, WordCombination};
pub use index::{index_to_word, repeat, word_to_index, Index, Letter, Word};
pub use shuffle::{
    bb_shuffle, interleave_blocks, muneta_sides, shuffle_sh, shuffle_tilde, shuffle_words,
};
