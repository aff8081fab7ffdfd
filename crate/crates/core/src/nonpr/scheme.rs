use crate::Segment;

/// Block grid over a word of length `n`.
///
/// Blocks are `delta` symbols long. A basic factor occurrence of level `l`
/// has length `delta * 2^l` and starts on the block grid; a superbasic one
/// (level `l >= 1`) additionally starts on the `delta * 2^l` grid. Only
/// occurrences lying entirely inside the word and shorter than it exist, so
/// `n` need not be a power of two times `delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockScheme {
    n: usize,
    delta: usize,
    levels: usize,
}

impl BlockScheme {
    pub fn new(n: usize, delta_override: Option<usize>) -> Self {
        let delta = delta_override
            .unwrap_or_else(|| Self::default_delta(n))
            .max(1);
        let mut levels = 0;
        while delta << levels < n {
            levels += 1;
        }
        BlockScheme { n, delta, levels }
    }

    /// `max(1, ceil(log2(n) / 4))`.
    pub fn default_delta(n: usize) -> usize {
        if n <= 1 {
            return 1;
        }
        ((n as f64).log2() / 4.0).ceil().max(1.0) as usize
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Number of basic levels; level `l` exists iff `delta * 2^l < n`.
    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn basic_len(&self, level: usize) -> usize {
        self.delta << level
    }

    /// Number of aligned occurrences at `level`.
    pub fn aligned_count(&self, level: usize) -> usize {
        let len = self.basic_len(level);
        if len > self.n {
            0
        } else {
            (self.n - len) / self.delta + 1
        }
    }

    pub fn is_aligned(&self, pos: usize) -> bool {
        (pos - 1).is_multiple_of(self.delta)
    }

    /// Block index of an aligned 1-based position.
    pub fn block_of(&self, pos: usize) -> usize {
        (pos - 1) / self.delta
    }

    pub fn block_start(&self, block: usize) -> usize {
        block * self.delta + 1
    }

    /// Aligned superbasic occurrences as `(level, segment)`, by level then start.
    pub fn superbasic(&self) -> impl Iterator<Item = (usize, Segment)> + '_ {
        (1..self.levels).flat_map(move |level| {
            let len = self.basic_len(level);
            (0..self.n / len).map(move |q| (level, Segment::with_len(q * len + 1, len)))
        })
    }

    /// The leftmost longest aligned superbasic occurrence inside `seg`.
    pub fn canonical_superbasic(&self, seg: Segment) -> Option<(usize, Segment)> {
        let c = seg.len();
        if c < 2 * self.delta {
            return None;
        }
        if self.levels < 2 {
            return None;
        }
        let top = ((c / self.delta).ilog2() as usize).min(self.levels - 1);
        for level in [top, top - 1] {
            if level == 0 {
                continue;
            }
            let len = self.basic_len(level);
            let start = (seg.beg - 1).div_ceil(len) * len + 1;
            if start + len - 1 <= seg.end {
                return Some((level, Segment::with_len(start, len)));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid() {
        let s = BlockScheme::new(8, Some(2));
        assert_eq!(s.delta(), 2);
        let starts: Vec<_> = (0..s.aligned_count(0)).map(|b| s.block_start(b)).collect();
        assert_eq!(starts, vec![1, 3, 5, 7]);
        let lens: Vec<_> = (0..s.levels()).map(|l| s.basic_len(l)).collect();
        assert_eq!(lens, vec![2, 4]);
        let sb: Vec<_> = s.superbasic().collect();
        assert_eq!(sb, vec![(1, Segment::new(1, 4)), (1, Segment::new(5, 8))]);
    }

    #[test]
    fn default_delta() {
        assert_eq!(BlockScheme::new(65536, None).delta(), 4);
        assert_eq!(BlockScheme::new(65537, None).delta(), 5);
        let s = BlockScheme::new(1, None);
        assert_eq!(s.delta(), 1);
        assert_eq!(s.superbasic().count(), 0);
    }

    #[test]
    fn canonical_matches_scan() {
        for n in 1..80 {
            for delta in 1..5 {
                let s = BlockScheme::new(n, Some(delta));
                for b in 1..=n {
                    for e in b..=n {
                        let seg = Segment::new(b, e);
                        let best = s
                            .superbasic()
                            .filter(|(_, z)| seg.contains(*z))
                            .min_by_key(|(l, z)| (std::cmp::Reverse(*l), z.beg));
                        assert_eq!(s.canonical_superbasic(seg), best, "n={n} d={delta} {seg:?}");
                    }
                }
            }
        }
    }
}
