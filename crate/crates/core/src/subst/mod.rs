//! Alphabets, words and substitutions, with their matrices, Perron–Frobenius
//! data, fixed words and aperiodicity verdicts.

pub mod dsl;
pub mod fixed;
pub mod matrix;
pub mod pf;
pub mod substitution;
pub mod verdict;
pub mod word;

pub use dsl::parse_substitution;
pub use fixed::{fixed_point_seed, fixed_word_prefix, FixedPointSeed, FixedWordStream};
pub use matrix::{substitution_matrix, SubstitutionMatrix};
pub use pf::{pf_data, PfData};
pub use substitution::{catalog, Substitution};
pub use verdict::{aperiodicity_verdict, gap_bound, AperiodicityVerdict};
pub use word::{Alphabet, LetterId, Word};
