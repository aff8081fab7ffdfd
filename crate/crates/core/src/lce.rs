//! Constant-time longest-common-extension queries.
//!
//! Forward queries (`lcp`) go through a suffix array of the word with a
//! sparse table over its LCP array; backward queries (`lcs`) reuse the same
//! machinery on the reversed word. Construction is `O(n log n)`.

use crate::{Segment, Word};

/// Suffix array by prefix doubling with radix sort. Entries are 0-based.
pub fn suffix_array(s: &[u8]) -> Vec<u32> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }

    let mut sa: Vec<u32> = (0..n as u32).collect();
    sa.sort_by_key(|&i| s[i as usize]);
    let mut rank = vec![0u32; n];
    let mut classes = 1u32;
    for k in 1..n {
        if s[sa[k] as usize] != s[sa[k - 1] as usize] {
            classes += 1;
        }
        rank[sa[k] as usize] = classes - 1;
    }

    let mut tmp = vec![0u32; n];
    let mut next = vec![0u32; n];
    let mut count = vec![0u32; n + 1];
    let mut h = 1;
    while (classes as usize) < n {
        // Order by second key: suffixes shorter than h first, then by sa.
        let mut t = 0;
        for i in n - h..n {
            tmp[t] = i as u32;
            t += 1;
        }
        for &j in &sa {
            if j as usize >= h {
                tmp[t] = j - h as u32;
                t += 1;
            }
        }
        // Stable counting sort by first key.
        count[..classes as usize + 1]
            .iter_mut()
            .for_each(|c| *c = 0);
        for &r in &rank {
            count[r as usize + 1] += 1;
        }
        for c in 1..=classes as usize {
            count[c] += count[c - 1];
        }
        for &i in &tmp {
            let r = rank[i as usize] as usize;
            sa[count[r] as usize] = i;
            count[r] += 1;
        }

        let second = |i: u32| -> i64 {
            let j = i as usize + h;
            if j < n {
                rank[j] as i64
            } else {
                -1
            }
        };
        next[sa[0] as usize] = 0;
        classes = 1;
        for k in 1..n {
            let (a, b) = (sa[k - 1], sa[k]);
            if rank[a as usize] != rank[b as usize] || second(a) != second(b) {
                classes += 1;
            }
            next[b as usize] = classes - 1;
        }
        std::mem::swap(&mut rank, &mut next);
        h *= 2;
    }
    sa
}

/// Kasai's algorithm: `lcp[r]` is the LCP of suffixes `sa[r - 1]` and `sa[r]`.
fn lcp_array(s: &[u8], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Range-minimum over a fixed array, O(1) query.
#[derive(Clone, Debug)]
struct SparseTable {
    levels: Vec<Vec<u32>>,
}

impl SparseTable {
    fn new(a: Vec<u32>) -> Self {
        let n = a.len();
        let mut levels = vec![a];
        let mut width = 1;
        while 2 * width <= n {
            let prev = levels.last().unwrap();
            let row: Vec<u32> = (0..=n - 2 * width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(row);
            width *= 2;
        }
        SparseTable { levels }
    }

    /// Minimum of `a[lo..hi]`, `lo < hi`.
    fn min(&self, lo: usize, hi: usize) -> u32 {
        let k = (hi - lo).ilog2() as usize;
        let row = &self.levels[k];
        row[lo].min(row[hi - (1 << k)])
    }
}

#[derive(Clone, Debug)]
struct Direction {
    sa: Vec<u32>,
    rank: Vec<u32>,
    rmq: SparseTable,
}

impl Direction {
    fn new(s: &[u8]) -> Self {
        let sa = suffix_array(s);
        let mut rank = vec![0u32; s.len()];
        for (r, &i) in sa.iter().enumerate() {
            rank[i as usize] = r as u32;
        }
        let lcp = lcp_array(s, &sa, &rank);
        Direction {
            sa,
            rank,
            rmq: SparseTable::new(lcp),
        }
    }

    /// LCP of 0-based suffixes `i != j`.
    fn query(&self, i: usize, j: usize) -> usize {
        let (a, b) = (self.rank[i] as usize, self.rank[j] as usize);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.rmq.min(lo + 1, hi + 1) as usize
    }
}

/// Longest-common-extension index over a word.
///
/// Positions outside `[1, n]` answer 0.
#[derive(Clone, Debug)]
pub struct LceIndex {
    n: usize,
    fwd: Direction,
    bwd: Direction,
}

impl LceIndex {
    pub fn build(word: &Word) -> Self {
        let s = word.as_bytes();
        let rev: Vec<u8> = s.iter().rev().copied().collect();
        LceIndex {
            n: s.len(),
            fwd: Direction::new(s),
            bwd: Direction::new(&rev),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Length of the longest common prefix of `w[i..n]` and `w[j..n]`.
    #[inline]
    pub fn lcp(&self, i: usize, j: usize) -> usize {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            0
        } else if i == j {
            self.n - i + 1
        } else {
            self.fwd.query(i - 1, j - 1)
        }
    }

    /// Length of the longest common suffix of `w[1..i]` and `w[1..j]`.
    #[inline]
    pub fn lcs(&self, i: usize, j: usize) -> usize {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            0
        } else if i == j {
            i
        } else {
            self.bwd.query(self.n - i, self.n - j)
        }
    }

    /// Forward suffix array, 0-based starts.
    pub fn suffix_array(&self) -> &[u32] {
        &self.fwd.sa
    }

    /// Rank of the suffix starting at 1-based `pos` in the forward suffix array.
    pub fn rank(&self, pos: usize) -> usize {
        self.fwd.rank[pos - 1] as usize
    }

    /// Smallest period of `w[seg]`, by an O(|seg|) scan of candidate shifts.
    pub fn smallest_period(&self, seg: Segment) -> usize {
        let len = seg.len();
        (1..len)
            .find(|&q| self.lcp(seg.beg, seg.beg + q) >= len - q)
            .unwrap_or(len)
    }

    /// Smallest period of `w[seg]` divisible by `delta`, if one is at most
    /// `|seg|`.
    pub fn min_delta_period(&self, seg: Segment, delta: usize) -> Option<usize> {
        assert!(delta >= 1);
        let len = seg.len();
        (delta..=len)
            .step_by(delta)
            .find(|&q| q == len || self.lcp(seg.beg, seg.beg + q) >= len - q)
    }
}
