//! The Fibonacci substitution `a → ab, b → a`: supertiles, the pair
//! decomposition, position identities and positivity bounds for `C_a`.

pub mod positions;
pub mod positivity;
pub mod supertiles;

pub use positions::{fib_position_identities, FormCheck, PositionIdentityReport};
pub use positivity::{default_tolerance, is_monotone, positivity_bound, PairBlock, PositivityBound};
pub use supertiles::{
    fib, induced_three_letter_substitution, pair_polynomials, supertile_word, verify_decomposition, DecompositionReport,
    Supertile, SupertilePolys, MAX_PAIR_LEVEL, MAX_SUPERTILE_LEVEL,
};
