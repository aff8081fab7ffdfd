//! The fast engine for maximal gapped repeats.
//!
//! Repeats generated by runs come from [`crate::pr`]; the rest are split by
//! copy length into a large phase over superbasic blocks and a small phase
//! over overlapping windows.

mod large;
mod naming;
mod occ;
mod scheme;
mod small;

pub use large::{extension_of, find_large_nonpr, repeat_from_triple, Triple};
pub use naming::{associated_occurrences, Associated, BasicFactorName, Naming};
pub use occ::{AlignOcc, OccItem};
pub use scheme::BlockScheme;
pub use small::find_small;

use crate::oracle::{check_alpha, naive_repeats};
use crate::pr::all_pr_repeats;
use crate::{compute_runs, GappedRepeat, LceIndex, Rational, Result, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FastConfig {
    /// Block length; the default grows with `log n`.
    pub block_size: Option<usize>,
    /// Words shorter than this go straight to the brute-force scan.
    pub naive_below: usize,
}

impl Default for FastConfig {
    fn default() -> Self {
        FastConfig {
            block_size: None,
            naive_below: 64,
        }
    }
}

/// All maximal `alpha`-gapped repeats, sorted by `(beg1, period)`.
pub fn fast_repeats(word: &Word, alpha: Rational, cfg: &FastConfig) -> Result<Vec<GappedRepeat>> {
    check_alpha(alpha)?;
    Ok(repeats_at_depth(word, alpha, cfg, 0))
}

fn repeats_at_depth(
    word: &Word,
    alpha: Rational,
    cfg: &FastConfig,
    depth: usize,
) -> Vec<GappedRepeat> {
    let n = word.len();
    if n < cfg.naive_below || n < 2 {
        return naive_repeats(word, alpha).unwrap_or_default();
    }
    let idx = LceIndex::build(word);
    let runs = compute_runs(word, &idx);
    let scheme = BlockScheme::new(n, cfg.block_size);
    let mut out = all_pr_repeats(&runs, alpha);
    out.extend(find_large_nonpr(&idx, &scheme, alpha));
    out.extend(find_small(word, alpha, &scheme, cfg, depth));
    out.sort_unstable();
    out.dedup_by_key(|r| (r.beg1, r.period()));
    out
}
