//! Generating functions of fixed words: characteristic, weighted and
//! position series, their polynomial prefixes and recursions, periodicity
//! certificates and rationality verdicts.

pub mod fixed_series;
pub mod period;
pub mod recursive;
pub mod series;
pub mod verdict;
pub mod words;

pub use fixed_series::{char_series, occurrence_positions, position_series, weighted_series, LetterWeighting};
pub use period::{detect_period, rational_form_from_witness, PeriodWitness, RationalForm};
pub use recursive::RecursivePolys;
pub use series::{difference_transform, summatory_transform, TruncatedSeries};
pub use verdict::{series_verdict, AperiodicityReason, PeriodBounds, SeriesKind, SeriesVerdict, VerdictOptions};
pub use words::{char_prefix_poly, concat_char, concat_pos, position_prefix_poly};
