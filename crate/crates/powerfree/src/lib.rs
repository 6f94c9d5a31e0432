//! Generation and exact repetition analysis of a bi-infinite ternary word.
//!
//! The word in question is Kurosaki's word: iterate `phi(a) = sigma(a) a rho(a)`
//! on the seed `2`, where sigma swaps the letters 1 and 2 and rho swaps 2 and 3.
//! Each iterate is the middle third of the next, so the family converges to a
//! two-sided infinite word
//!
//! ```text
//! ... 123213231 213123132 312132123 ...
//! ```
//!
//! that is squarefree and, more sharply, avoids all fractional powers with
//! exponent above 7/4 — the best possible bound on three letters.
//!
//! The crate provides:
//!
//! - [`word`]: symbols, finite words, letter permutations, the map `phi`,
//!   generation of the level words, and centered indexing around the common
//!   center symbol.
//! - [`power`]: least periods, exact rational exponents, freeness checks with
//!   two interchangeable engines (a definitional oracle and a border-array
//!   scan), critical exponents, and maximal-violation listings.
//! - [`search`]: exhaustive backtracking over power-free words, used to probe
//!   how far a repetition constraint can be pushed.
//! - [`balanced`] and [`automaton`]: balanced-ternary digits and the 6-state
//!   permutation automaton that evaluates the bi-infinite word at any integer
//!   index in O(log |i|), cross-validated against direct generation.
//! - [`verify`]: structured pass/fail checks for every structural claim the
//!   construction rests on, from squarefreeness and triple structure to the
//!   boundary-window and leader-propagation arguments.
//!
//! All verdict paths use exact integer arithmetic; no floating point is
//! involved anywhere.

pub mod automaton;
pub mod balanced;
pub mod power;
pub mod rational;
pub mod search;
pub mod verify;
pub mod word;

pub use automaton::{automaton_table, symbol_at_infinite, AutomatonTable};
pub use balanced::{BalancedTernaryDigits, Digit};
pub use power::{
    check_freeness, check_freeness_with, exponent, find_violations, least_period, max_exponent,
    Engine, FreenessMode, FreenessVerdict, RepetitionOccurrence,
};
pub use rational::Rational;
pub use search::{avoidance_search, SearchSummary};
pub use verify::{
    check_boundary_windows, check_four_tuple, check_main, check_preimage, check_squarefree,
    check_triples, extend_occurrence, leader_propagation, render_table, run_all, CheckKind,
    CheckReport, CheckWitness,
};
pub use word::{
    extract_middles, generate, generate_with_cap, half_width, phi, symbol_at, triples,
    CenteredIndex, Permutation3, Symbol, TernaryWord, DEFAULT_LEVEL_CAP, IDENTITY, RHO, SIGMA,
};

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("'{0}' is not a symbol; expected '1', '2' or '3'")]
    InvalidSymbol(char),

    #[error("'{0}' is not a balanced-ternary digit; expected 'T', '0' or '1'")]
    InvalidDigit(char),

    #[error("'{0}' is not a rational; expected an integer or 'p/q'")]
    InvalidRational(String),

    #[error("images must be pairwise distinct to form a permutation")]
    NotABijection,

    #[error("level {level} exceeds the generation cap {cap}")]
    LevelTooLarge { level: u32, cap: u32 },

    #[error("level {level} is below the minimum {min} for this check")]
    LevelBelow { level: u32, min: u32 },

    #[error("index {index} is out of range for level {level}")]
    IndexOutOfRange { index: i64, level: u32 },

    #[error("word length {0} is not divisible by 3")]
    LengthNotDivisibleBy3(usize),

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("word of length {len} is shorter than the required {min}")]
    WordTooShort { len: usize, min: usize },

    #[error("threshold {0} is below 1")]
    ThresholdBelowOne(Rational),

    #[error("alphabet size {0} is unsupported; expected 2 or 3")]
    UnsupportedAlphabet(usize),

    #[error("search length must be at least 1")]
    InvalidSearchLength,

    #[error("occurrence ends at {end} but the word has length {len}")]
    OccurrenceOutOfBounds { end: usize, len: usize },

    #[error("stated period {period} fails at position {position}")]
    PeriodViolated { position: usize, period: usize },

    #[error("block {block_index} is not a permutation of 123")]
    NonPermutationTriple { block_index: usize },

    #[error("period {0} must be a multiple of 3 here")]
    PeriodNotMultipleOfThree(usize),

    #[error("period {0} must not be a multiple of 3 here")]
    PeriodMultipleOfThree(usize),

    #[error("matched length {matched} is below the required {required}")]
    MatchTooShort { matched: usize, required: usize },

    #[error("square found in the 6-symbol neighborhood starting at {window_start}")]
    LocalSquare { window_start: usize },

    #[error("extension would need length {required_len} but the word has length {len}")]
    ExtensionOutOfRange { required_len: usize, len: usize },

    #[error("extended occurrence loses its period at position {position}")]
    ExtensionBroken { position: usize },
}

/// Crate-wide result type.
pub type Result<T, E = Error> = std::result::Result<T, E>;
