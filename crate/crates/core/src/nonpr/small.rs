//! Repeats with copies shorter than `4 * delta`, found window by window over
//! `[i D + 1, (i + 2) D]`.

use super::{repeats_at_depth, BlockScheme, FastConfig};
use crate::word::at_most_times;
use crate::{GappedRepeat, Rational, Word};

/// Copy length bound below which this phase is responsible.
pub fn threshold(scheme: &BlockScheme) -> usize {
    4 * scheme.delta()
}

/// Window step `max(floor(2 log2(n)^2), ceil((1 + alpha) T))`.
pub fn window_step(n: usize, alpha: Rational, t: usize) -> usize {
    let lg = (n.max(2) as f64).log2();
    let by_log = (2.0 * lg * lg).floor() as usize;
    let span = (Rational::from_integer(t as u64) * (alpha + 1))
        .ceil()
        .to_integer() as usize;
    by_log.max(span).max(1)
}

/// Maximal `alpha`-gapped repeats with copy length below `t`, by scanning
/// every admissible period.
pub fn scan_short(w: &[u8], alpha: Rational, t: usize) -> Vec<GappedRepeat> {
    let n = w.len();
    let mut out = Vec::new();
    if t < 2 {
        return out;
    }
    let max_p = (Rational::from_integer(t as u64 - 1) * alpha).to_integer() as usize;
    for p in 1..=max_p.min(n.saturating_sub(1)) {
        let mut i = 0;
        while i + p < n {
            if w[i] != w[i + p] {
                i += 1;
                continue;
            }
            let start = i;
            while i + p < n && w[i] == w[i + p] {
                i += 1;
            }
            let c = i - start;
            if c < t && c < p && at_most_times(p, alpha, c) {
                out.push(GappedRepeat::new(start + 1, start + 1 + p, c));
            }
        }
    }
    out
}

pub fn find_small(
    word: &Word,
    alpha: Rational,
    scheme: &BlockScheme,
    cfg: &FastConfig,
    depth: usize,
) -> Vec<GappedRepeat> {
    let w = word.as_bytes();
    let n = w.len();
    let t = threshold(scheme);
    let step = window_step(n, alpha, t);
    if depth > 0 || 2 * step >= n {
        return scan_short(w, alpha, t);
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i * step < n {
        let ws = i * step + 1;
        let we = n.min((i + 2) * step);
        let sub = Word::new(&w[ws - 1..we]);
        for rep in repeats_at_depth(&sub, alpha, cfg, depth + 1) {
            if rep.copy_len() >= t {
                continue;
            }
            let rep = GappedRepeat::new(rep.beg1 + ws - 1, rep.beg2 + ws - 1, rep.copy_len());
            if (rep.beg1 - 1) / step != i {
                continue;
            }
            let left_ok = rep.beg1 > ws || ws == 1 || w[rep.beg1 - 2] != w[rep.beg2 - 2];
            let right_ok = rep.end2() < we || we == n || w[rep.end1] != w[rep.end2()];
            if left_ok && right_ok {
                out.push(rep);
            }
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::naive_repeats;
    use crate::testutil::all_words;

    #[test]
    fn window_step_covers_span() {
        for n in [10, 100, 5000] {
            for alpha in [Rational::new(3, 2), Rational::from_integer(8)] {
                for t in [4, 8, 20] {
                    let d = window_step(n, alpha, t);
                    assert!(
                        Rational::from_integer(d as u64) >= alpha * (t as u64 - 1) + (t as u64 - 1)
                    );
                }
            }
        }
    }

    #[test]
    fn scan_short_matches_oracle() {
        for n in 0..=12 {
            for w in all_words(n, 2) {
                let word = Word::new(w.clone());
                for alpha in [Rational::new(3, 2), Rational::from_integer(3)] {
                    for t in [1, 2, 3, 5] {
                        let mut got = scan_short(&w, alpha, t);
                        got.sort_unstable();
                        let expect: Vec<_> = naive_repeats(&word, alpha)
                            .unwrap()
                            .into_iter()
                            .filter(|r| r.copy_len() < t)
                            .collect();
                        assert_eq!(got, expect);
                    }
                }
            }
        }
    }
}
