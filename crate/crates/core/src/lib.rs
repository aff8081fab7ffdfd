//! Maximal gapped repeats, runs, subrepetitions and gapped palindromes.
//!
//! A gapped repeat `uvu` is a pair of equal, non-overlapping copies `u`
//! separated by a nonempty gap `v`; its period is `|uv|` and it is
//! `alpha`-gapped when `|uv| <= alpha * |u|`. This crate enumerates all
//! *maximal* `alpha`-gapped repeats of a byte string with a near-linear
//! algorithm built on constant-time longest-common-extension queries, and
//! ships brute-force reference enumerators for every output kind so the two
//! can be checked against each other.
//!
//! All public positions are 1-based and inclusive.
//!
//! ```
//! use gapreps::{maximal_gapped_repeats, Engine, Rational, Word};
//!
//! let word = Word::from("cabacaabaa");
//! let reps = maximal_gapped_repeats(&word, Rational::from_integer(7), Engine::fast()).unwrap();
//! assert!(reps.iter().any(|r| r.beg1 == 2 && r.period() == 5 && r.copy_len() == 3));
//! ```

pub mod analysis;
mod error;
pub mod lce;
pub mod nonpr;
pub mod oracle;
pub mod pr;
pub mod runs;
mod types;
mod word;

#[cfg(test)]
mod testutil;

pub use analysis::{
    bound_stats, gen_family, maximal_gapped_palindromes, maximal_gapped_repeats,
    maximal_subrepetitions, random_word, BoundKind, BoundStats, Engine, Family, FastConfig,
};
pub use error::{Error, Result};
pub use lce::LceIndex;
pub use runs::{compute_runs, sum_of_exponents};
pub use types::{GappedPalindrome, GappedRepeat, Run, Subrepetition};
pub use word::{Rational, Segment, Word};
