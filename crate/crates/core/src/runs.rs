//! All maximal repetitions of a word.
//!
//! Every run `r` with period `p` has a Lyndon root `w[i..i+p)` with
//! `i > beg(r)` that is the longest Lyndon word starting at `i`, for one of
//! the two orders on the alphabet. Both Lyndon arrays are computed with a
//! next-smaller-suffix stack over LCE comparisons, and each candidate root is
//! extended with `lcs`/`lcp` in constant time. Linear after preprocessing.

use std::cmp::Ordering;

use crate::{LceIndex, Rational, Run, Word};

/// Compares suffixes at 1-based `i != j`; the empty continuation sorts first.
fn cmp_suffixes(word: &Word, idx: &LceIndex, i: usize, j: usize, inverted: bool) -> Ordering {
    let n = word.len();
    let l = idx.lcp(i, j);
    match (i + l > n, j + l > n) {
        (true, _) => Ordering::Less,
        (_, true) => Ordering::Greater,
        _ => {
            let ord = word.at(i + l).cmp(&word.at(j + l));
            if inverted {
                ord.reverse()
            } else {
                ord
            }
        }
    }
}

/// `end[i]` is the exclusive end of the longest Lyndon word starting at `i`.
fn lyndon_ends(word: &Word, idx: &LceIndex, inverted: bool) -> Vec<usize> {
    let n = word.len();
    let mut end = vec![0; n + 2];
    let mut stack: Vec<usize> = Vec::new();
    for i in (1..=n).rev() {
        while let Some(&top) = stack.last() {
            let greater = if inverted {
                cmp_suffixes(word, idx, top, i, true) == Ordering::Greater
            } else {
                idx.rank(top) > idx.rank(i)
            };
            if greater {
                stack.pop();
            } else {
                break;
            }
        }
        end[i] = stack.last().copied().unwrap_or(n + 1);
        stack.push(i);
    }
    end
}

/// The exact set of runs, sorted by `(beg, period)`.
pub fn compute_runs(word: &Word, idx: &LceIndex) -> Vec<Run> {
    let n = word.len();
    let mut runs = Vec::new();
    if n < 2 {
        return runs;
    }
    for inverted in [false, true] {
        let ends = lyndon_ends(word, idx, inverted);
        for (i, &e) in ends.iter().enumerate().take(n + 1).skip(1) {
            let p = e - i;
            if i + p > n {
                continue;
            }
            let beg = i - idx.lcs(i - 1, i + p - 1);
            let end = i + p - 1 + idx.lcp(i, i + p);
            if end + 1 - beg >= 2 * p {
                runs.push(Run {
                    beg,
                    end,
                    period: p,
                });
            }
        }
    }
    runs.sort_unstable();
    runs.dedup();
    runs
}

pub fn sum_of_exponents(runs: &[Run]) -> Rational {
    runs.iter().map(Run::exponent).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::naive_runs;
    use crate::testutil::all_words;

    fn runs_of(s: &[u8]) -> Vec<Run> {
        let w = Word::new(s);
        compute_runs(&w, &LceIndex::build(&w))
    }

    #[test]
    fn two_runs_fixture() {
        assert_eq!(
            runs_of(b"cababaaa"),
            vec![
                Run {
                    beg: 2,
                    end: 6,
                    period: 2
                },
                Run {
                    beg: 6,
                    end: 8,
                    period: 1
                },
            ]
        );
        let runs = runs_of(b"cababaaa");
        assert_eq!(runs[0].exponent(), Rational::new(5, 2));
        assert_eq!(sum_of_exponents(&runs), Rational::new(11, 2));
    }

    #[test]
    fn long_run_fixture() {
        assert!(runs_of(b"cabababababaa").contains(&Run {
            beg: 2,
            end: 12,
            period: 2
        }));
    }

    #[test]
    fn degenerate_words() {
        assert!(runs_of(b"").is_empty());
        assert!(runs_of(b"a").is_empty());
        assert!(runs_of(b"abc").is_empty());
        assert_eq!(sum_of_exponents(&[]), Rational::from_integer(0));
        assert_eq!(
            sum_of_exponents(&runs_of(b"aaaa")),
            Rational::from_integer(4)
        );
    }

    #[test]
    fn matches_oracle_exhaustively() {
        for n in 0..=14 {
            for w in all_words(n, 2) {
                let runs = runs_of(&w);
                assert_eq!(runs, naive_runs(&Word::new(w.clone())), "{w:?}");
                assert!(n == 0 || runs.len() < n);
            }
        }
        for n in 0..=10 {
            for w in all_words(n, 3) {
                assert_eq!(runs_of(&w), naive_runs(&Word::new(w.clone())), "{w:?}");
            }
        }
    }

    #[test]
    fn stored_period_is_smallest() {
        let w = Word::from("abaababaabaababaababaabaababaabab");
        let idx = LceIndex::build(&w);
        for r in compute_runs(&w, &idx) {
            assert_eq!(idx.smallest_period(r.segment()), r.period);
        }
    }
}
