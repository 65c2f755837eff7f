//! Exact computation in the 3-strand braid group B3.
//!
//! The crate decides the word problem through Garside normal forms (in both
//! the classical half-twist structure and the dual band-generator structure),
//! recognises quasipositive braids, enumerates all quasipositive
//! factorizations up to Hurwitz equivalence, and counts Hurwitz orbits for
//! braids of exponent sum two via polygon antisymmetries.
//!
//! Everything is exact integer/enum arithmetic; there is no floating point
//! anywhere. All core values (words, canonical forms, factorization tuples)
//! are immutable and cheap to clone, so they can be shared freely between
//! threads.

pub mod bands;
pub mod cli;
pub mod factorsearch;
pub mod garside;
pub mod hurwitz;
pub mod normalform;
pub mod rewrite;
pub mod selftest;
pub mod word;

pub use factorsearch::IndexSet;
pub use garside::{Braid, DualBraid, Structure};
pub use hurwitz::{Factorization, Move, MoveSequence, Orbit};
pub use word::{Gen, Letter, Mode, PositiveWord, Sign, Word};

/// Default cap on the number of states an orbit search may visit.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error in token {token}: {message}")]
    Syntax { token: usize, message: String },

    #[error("mode violation: {0}")]
    ModeViolation(String),

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("orbit cap of {cap} states exceeded")]
    CapExceeded { cap: usize },

    #[error("braid is a power of the half-twist and has no block decomposition")]
    HalfTwistPower,

    #[error("conjugacy class of {class} admits no closed normal form")]
    ExcludedClass { class: String },

    #[error("exponent sum is {found}, expected {expected}")]
    ExponentSum { expected: i64, found: i64 },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
