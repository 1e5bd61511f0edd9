use thiserror::Error;

use crate::rational::Rational;

/// What went wrong while reading the rule DSL.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyImage,
    DuplicateRule,
    UnknownLetterInImage(char),
    Syntax(String),
}

impl std::fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseErrorKind::EmptyImage => write!(f, "rule image is empty"),
            ParseErrorKind::DuplicateRule => write!(f, "duplicate rule for letter"),
            ParseErrorKind::UnknownLetterInImage(c) => {
                write!(f, "letter '{c}' in image has no rule")
            }
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {kind}")]
    Parse {
        line: usize,
        column: usize,
        kind: ParseErrorKind,
    },
    #[error("substitution is not primitive")]
    NotPrimitive,
    #[error("no letter starts a growing fixed point of any power of the substitution")]
    NoGrowingSeed,
    #[error("letter '{letter}' occurs fewer than {wanted} times in a prefix of length {scanned}")]
    InsufficientOccurrences {
        letter: char,
        wanted: usize,
        scanned: usize,
    },
    #[error("polynomial degree {degree} is not below the block length {len}")]
    DegreeOverflow { degree: isize, len: usize },
    #[error("position polynomial degree {degree} exceeds occurrence count {count}")]
    CountMismatch { degree: isize, count: usize },
    #[error("sequence of length {have} is shorter than the required {need}")]
    InsufficientData { have: usize, need: usize },
    #[error("period witness (preperiod {preperiod}, period {period}) does not hold on the data")]
    WitnessInvalid { preperiod: usize, period: usize },
    #[error("operation does not support an alphabet of {0} letters")]
    WrongAlphabetSize(usize),
    #[error("requested size {requested} exceeds the supported limit {limit}")]
    TooLarge { requested: usize, limit: usize },
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("interval endpoint {0} is a root of the polynomial")]
    EndpointIsRoot(Rational),
    #[error("empty interval ({0}, {1}]")]
    InvalidInterval(Rational, Rational),
    #[error("no real root in the interval")]
    NoRoot,
    #[error("polynomial has a root in ({0}, {1}]")]
    RootPresent(Rational, Rational),
    #[error("polynomial is not positive at the sample point {0}")]
    NotPositive(Rational),
    #[error("none of the polynomials has a root in (-1, 0)")]
    NoRootInInterval,
    #[error("unknown letter '{0}'")]
    UnknownLetter(char),
    #[error("tile lengths must be strictly positive")]
    NonPositiveLength,
    #[error("quadratic values over different radicands {0} and {1}")]
    IncompatibleRadicands(u64, u64),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("invalid value: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
