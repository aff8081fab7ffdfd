//! Brute-force reference enumerators.
//!
//! These scan the word directly and share no code with the LCE-based fast
//! path, so they can serve as ground truth in tests. All are quadratic or
//! worse.

use crate::word::at_most_times;
use crate::{Error, GappedPalindrome, GappedRepeat, Rational, Result, Run, Subrepetition, Word};

pub(crate) fn check_alpha(alpha: Rational) -> Result<()> {
    if alpha > Rational::from_integer(1) {
        Ok(())
    } else {
        Err(Error::InvalidAlpha(alpha))
    }
}

pub(crate) fn check_delta(delta: Rational) -> Result<()> {
    if delta > Rational::from_integer(0) && delta < Rational::from_integer(1) {
        Ok(())
    } else {
        Err(Error::InvalidDelta(delta))
    }
}

/// Maximal blocks `(start, len)` (0-based) of positions `i` with
/// `w[i] == w[i + p]`.
fn period_blocks(w: &[u8], p: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = w.len();
    let mut i = 0;
    std::iter::from_fn(move || {
        while i + p < n && w[i] != w[i + p] {
            i += 1;
        }
        if i + p >= n {
            return None;
        }
        let start = i;
        while i + p < n && w[i] == w[i + p] {
            i += 1;
        }
        Some((start, i - start))
    })
}

/// Smallest period via the KMP failure function.
fn kmp_period(v: &[u8]) -> usize {
    let mut fail = vec![0usize; v.len() + 1];
    let mut k = 0;
    for i in 1..v.len() {
        while k > 0 && v[i] != v[k] {
            k = fail[k];
        }
        if v[i] == v[k] {
            k += 1;
        }
        fail[i + 1] = k;
    }
    v.len() - fail[v.len()]
}

/// All maximal `alpha`-gapped repeats, by scanning `w[i]` against `w[i + p]`
/// for every period `p`. Sorted by `(beg1, period)`.
pub fn naive_repeats(word: &Word, alpha: Rational) -> Result<Vec<GappedRepeat>> {
    check_alpha(alpha)?;
    let w = word.as_bytes();
    let mut out = Vec::new();
    for p in 1..w.len() {
        for (start, len) in period_blocks(w, p) {
            if len < p && at_most_times(p, alpha, len) {
                out.push(GappedRepeat::new(start + 1, start + 1 + p, len));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Whether `cand` is a maximal gapped repeat of `word`.
pub fn is_maximal_repeat(word: &Word, cand: &GappedRepeat) -> Result<bool> {
    let n = word.len();
    let consistent = cand.beg1 >= 1
        && cand.beg1 <= cand.end1
        && cand.beg2 > cand.end1 + 1
        && cand.end1 + (cand.beg2 - cand.beg1) <= n;
    if !consistent {
        return Err(Error::InvalidCandidate {
            repeat: *cand,
            len: n,
        });
    }
    let w = word.as_bytes();
    let (b1, b2, c) = (cand.beg1 - 1, cand.beg2 - 1, cand.copy_len());
    if w[b1..b1 + c] != w[b2..b2 + c] {
        return Ok(false);
    }
    let left_ok = b1 == 0 || w[b1 - 1] != w[b2 - 1];
    let right_ok = b2 + c == n || w[b1 + c] != w[b2 + c];
    Ok(left_ok && right_ok)
}

/// All runs by a per-period block scan, each reported with its smallest
/// period. Sorted by `(beg, period)`.
pub fn naive_runs(word: &Word) -> Vec<Run> {
    let w = word.as_bytes();
    let mut out = Vec::new();
    for p in 1..w.len() {
        for (start, len) in period_blocks(w, p) {
            if len >= p && kmp_period(&w[start..start + len + p]) == p {
                out.push(Run {
                    beg: start + 1,
                    end: start + len + p,
                    period: p,
                });
            }
        }
    }
    out.sort_unstable();
    out
}

/// All maximal `delta`-subrepetitions by scanning every segment start with
/// an incremental failure function. Sorted by `(beg, period)`.
pub fn naive_subrepetitions(word: &Word, delta: Rational) -> Result<Vec<Subrepetition>> {
    check_delta(delta)?;
    let (num, den) = (*delta.numer() as u128, *delta.denom() as u128);
    let w = word.as_bytes();
    let n = w.len();
    let mut out = Vec::new();
    let mut fail = vec![0usize; n + 1];
    for b in 0..n {
        let v = &w[b..];
        let mut k = 0;
        fail[0] = 0;
        fail[1] = 0;
        for len in 1..=v.len() {
            if len > 1 {
                let i = len - 1;
                while k > 0 && v[i] != v[k] {
                    k = fail[k];
                }
                if v[i] == v[k] {
                    k += 1;
                }
                fail[len] = k;
            }
            let per = len - fail[len];
            let e = b + len - 1;
            // 1 + delta <= len / per < 2
            if len >= 2 * per || (len as u128) * den < (per as u128) * (den + num) {
                continue;
            }
            let left_ok = b == 0 || w[b - 1] != w[b - 1 + per];
            let right_ok = e + 1 == n || w[e + 1 - per] != w[e + 1];
            if left_ok && right_ok {
                out.push(Subrepetition {
                    beg: b + 1,
                    end: e + 1,
                    period: per,
                });
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// All maximal `alpha`-gapped palindromes `u v u^R` by scanning every pair
/// of arm boundaries. A gap of length 1 is always accepted on the inner side.
pub fn naive_palindromes(word: &Word, alpha: Rational) -> Result<Vec<GappedPalindrome>> {
    check_alpha(alpha)?;
    let w = word.as_bytes();
    let n = w.len();
    let mut out = Vec::new();
    // 0-based: left arm ends at e1, right arm starts at b2.
    for e1 in 0..n {
        for b2 in e1 + 2..n {
            let mut arm = 0;
            while arm <= e1 && b2 + arm < n && w[e1 - arm] == w[b2 + arm] {
                arm += 1;
            }
            if arm == 0 {
                continue;
            }
            let gap = b2 - e1 - 1;
            let inner_ok = gap == 1 || w[e1 + 1] != w[b2 - 1];
            if inner_ok && at_most_times(arm + gap, alpha, arm) {
                out.push(GappedPalindrome {
                    beg1: e1 + 2 - arm,
                    end1: e1 + 1,
                    beg2: b2 + 1,
                    end2: b2 + arm,
                });
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}
