//! Geometric realisation: tile lengths in `Q(√D)`, endpoints of the tiling,
//! the series `G(X)` and the two-letter dichotomy.

pub mod quadratic;
pub mod realisation;

pub use quadratic::QuadraticReal;
pub use realisation::{
    classify_two_letter, endpoint_sequence, endpoints_csv, geometric_series, natural_lengths, reduce_two_letter,
    GeometricSeries, LengthAssignment, TwoLetterClass, TwoLetterReduction,
};
