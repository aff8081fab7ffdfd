use thiserror::Error;

use crate::{GappedRepeat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alpha must be greater than 1 (got {0})")]
    InvalidAlpha(Rational),
    #[error("delta must lie strictly between 0 and 1 (got {0})")]
    InvalidDelta(Rational),
    #[error("repeat {repeat:?} is not a consistent candidate in a word of length {len}")]
    InvalidCandidate { repeat: GappedRepeat, len: usize },
    #[error("family parameter k must be at least 1")]
    EmptyFamily,
    #[error("abk family needs {0} distinct letters besides 'a', at most 255 exist")]
    AlphabetExhausted(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
