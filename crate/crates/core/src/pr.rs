//! Maximal gapped repeats generated by a single run.
//!
//! A periodic maximal repeat whose copies extend to the same run `r` has a
//! period `p` that is a multiple of `per(r)` with `|r|/2 < p <= |r| - 2 per(r)`,
//! left copy `w[beg(r) .. end(r) - p]` and right copy `w[beg(r) + p .. end(r)]`.
//! So a run generates at most `exp(r) / 2` of them.

use crate::word::at_most_times;
use crate::{GappedRepeat, Rational, Run};

/// The `alpha`-gapped repeats generated by `run`, sorted by period.
pub fn generated_repeats(run: &Run, alpha: Rational) -> Vec<GappedRepeat> {
    let (len, per) = (run.len(), run.period);
    let mut out = Vec::new();
    if len < 2 * per {
        return out;
    }
    let max_p = len - 2 * per;
    let mut p = (len / 2 / per + 1) * per;
    while p <= max_p {
        let c = len - p;
        if at_most_times(p, alpha, c) {
            out.push(GappedRepeat::new(run.beg, run.beg + p, c));
        }
        p += per;
    }
    out
}

/// All run-generated `alpha`-gapped repeats, sorted by `(beg1, period)`.
pub fn all_pr_repeats(runs: &[Run], alpha: Rational) -> Vec<GappedRepeat> {
    let mut out: Vec<GappedRepeat> = runs
        .iter()
        .flat_map(|r| generated_repeats(r, alpha))
        .collect();
    out.sort_unstable();
    out
}
