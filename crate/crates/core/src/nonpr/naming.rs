//! Names for basic factors.
//!
//! Equal substrings are contiguous in suffix-array order, so the aligned
//! occurrences of one basic factor form a run of consecutive aligned entries
//! of the suffix array whose pairwise LCP is at least the factor length. The
//! name of a factor is its level plus its leftmost aligned occurrence.

use super::BlockScheme;
use crate::{LceIndex, Segment};

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasicFactorName {
    pub level: usize,
    /// 1-based start of the leftmost aligned occurrence.
    pub anchor: usize,
}

#[derive(Clone, Debug)]
pub struct Naming {
    /// `anchors[level][block]` is the anchor block of the aligned occurrence
    /// starting at `block`.
    anchors: Vec<Vec<u32>>,
    /// Nearest rank at or before / after each rank whose suffix is aligned.
    prev_aligned: Vec<u32>,
    next_aligned: Vec<u32>,
}

impl Naming {
    pub fn build(scheme: &BlockScheme, idx: &LceIndex) -> Self {
        let sa = idx.suffix_array();
        let n = sa.len();
        let aligned_ranks: Vec<usize> = (0..n)
            .filter(|&r| scheme.is_aligned(sa[r] as usize + 1))
            .collect();

        let mut prev_aligned = vec![NONE; n];
        let mut next_aligned = vec![NONE; n];
        let mut last = NONE;
        for r in 0..n {
            if scheme.is_aligned(sa[r] as usize + 1) {
                last = r as u32;
            }
            prev_aligned[r] = last;
        }
        last = NONE;
        for r in (0..n).rev() {
            if scheme.is_aligned(sa[r] as usize + 1) {
                last = r as u32;
            }
            next_aligned[r] = last;
        }

        let mut anchors = Vec::with_capacity(scheme.levels());
        for level in 0..scheme.levels() {
            let len = scheme.basic_len(level);
            let mut names = vec![NONE; scheme.aligned_count(level)];
            let fitting: Vec<usize> = aligned_ranks
                .iter()
                .map(|&r| sa[r] as usize + 1)
                .filter(|&pos| pos + len - 1 <= n)
                .collect();
            let mut g = 0;
            while g < fitting.len() {
                let mut h = g + 1;
                while h < fitting.len() && idx.lcp(fitting[h - 1], fitting[h]) >= len {
                    h += 1;
                }
                let group = &fitting[g..h];
                let anchor = scheme.block_of(*group.iter().min().unwrap()) as u32;
                for &pos in group {
                    names[scheme.block_of(pos)] = anchor;
                }
                g = h;
            }
            anchors.push(names);
        }

        Naming {
            anchors,
            prev_aligned,
            next_aligned,
        }
    }

    /// Name of the aligned occurrence of `level` starting at `pos`.
    pub fn name_aligned(&self, scheme: &BlockScheme, level: usize, pos: usize) -> BasicFactorName {
        let anchor = self.anchors[level][scheme.block_of(pos)];
        debug_assert_ne!(anchor, NONE);
        BasicFactorName {
            level,
            anchor: scheme.block_start(anchor as usize),
        }
    }

    /// Name of the basic factor equal to `w[pos .. pos + len(level))`, if that
    /// substring occurs aligned anywhere.
    pub fn name_of(
        &self,
        scheme: &BlockScheme,
        idx: &LceIndex,
        level: usize,
        pos: usize,
    ) -> Option<BasicFactorName> {
        let len = scheme.basic_len(level);
        if pos + len - 1 > idx.len() {
            return None;
        }
        if scheme.is_aligned(pos) {
            return Some(self.name_aligned(scheme, level, pos));
        }
        let rank = idx.rank(pos);
        let sa = idx.suffix_array();
        [self.prev_aligned[rank], self.next_aligned[rank]]
            .into_iter()
            .filter(|&r| r != NONE)
            .map(|r| sa[r as usize] as usize + 1)
            .find(|&cand| idx.lcp(pos, cand) >= len)
            .map(|cand| self.name_aligned(scheme, level, cand))
    }
}

/// A basic factor occurrence `tau`-associated with a superbasic occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Associated {
    pub z: Segment,
    pub tau: usize,
    /// Start of the occurrence `y'`, `z.beg + tau`.
    pub start: usize,
    /// `None` when the factor has no aligned occurrence.
    pub name: Option<BasicFactorName>,
}

impl Associated {
    pub fn y_len(&self) -> usize {
        self.z.len() / 2
    }
}

/// For every aligned superbasic `z` of length `2L` and every `tau < delta`,
/// the length-`L` occurrence at `beg(z) + tau` with its name. Grouped by `z`,
/// at most `delta` entries each.
pub fn associated_occurrences(
    scheme: &BlockScheme,
    naming: &Naming,
    idx: &LceIndex,
) -> Vec<Associated> {
    let mut out = Vec::new();
    for (level, z) in scheme.superbasic() {
        for tau in 0..scheme.delta() {
            let start = z.beg + tau;
            out.push(Associated {
                z,
                tau,
                start,
                name: naming.name_of(scheme, idx, level - 1, start),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::all_words;
    use crate::Word;

    fn build(s: &str, delta: usize) -> (Word, BlockScheme, LceIndex, Naming) {
        let w = Word::from(s);
        let scheme = BlockScheme::new(w.len(), Some(delta));
        let idx = LceIndex::build(&w);
        let naming = Naming::build(&scheme, &idx);
        (w, scheme, idx, naming)
    }

    #[test]
    fn periodic_fixture() {
        let (_, scheme, _, naming) = build("abababab", 2);
        for pos in [1, 3, 5, 7] {
            assert_eq!(
                naming.name_aligned(&scheme, 0, pos),
                BasicFactorName {
                    level: 0,
                    anchor: 1
                }
            );
        }
        for pos in [1, 3, 5] {
            assert_eq!(
                naming.name_aligned(&scheme, 1, pos),
                BasicFactorName {
                    level: 1,
                    anchor: 1
                }
            );
        }
    }

    #[test]
    fn associated_fixture() {
        let (_, scheme, idx, naming) = build("abababab", 2);
        let assoc = associated_occurrences(&scheme, &naming, &idx);
        let first: Vec<_> = assoc
            .iter()
            .filter(|a| a.z == Segment::new(1, 4))
            .map(|a| (a.tau, a.start, a.y_len()))
            .collect();
        assert_eq!(first, vec![(0, 1, 2), (1, 2, 2)]);
        let names: Vec<_> = assoc.iter().take(2).map(|a| a.name).collect();
        assert_eq!(
            names,
            vec![
                Some(BasicFactorName {
                    level: 0,
                    anchor: 1
                }),
                None
            ]
        );
        assert!(assoc.iter().all(|a| a.tau < 2));
    }

    #[test]
    fn naming_sound_exhaustive() {
        for n in 1..=12 {
            for w in all_words(n, 2) {
                let word = Word::new(w.clone());
                let idx = LceIndex::build(&word);
                for delta in 1..=3 {
                    let scheme = BlockScheme::new(n, Some(delta));
                    let naming = Naming::build(&scheme, &idx);
                    for level in 0..scheme.levels() {
                        let len = scheme.basic_len(level);
                        let aligned: Vec<usize> = (0..scheme.aligned_count(level))
                            .map(|b| scheme.block_start(b))
                            .collect();
                        for &a in &aligned {
                            let na = naming.name_aligned(&scheme, level, a);
                            assert_eq!(na.level, level);
                            // Anchor is the leftmost aligned occurrence.
                            let leftmost = aligned
                                .iter()
                                .copied()
                                .find(|&b| w[b - 1..b - 1 + len] == w[a - 1..a - 1 + len])
                                .unwrap();
                            assert_eq!(na.anchor, leftmost);
                            for &b in &aligned {
                                let same = w[a - 1..a - 1 + len] == w[b - 1..b - 1 + len];
                                assert_eq!(na == naming.name_aligned(&scheme, level, b), same);
                            }
                        }
                        for pos in 1..=n + 1 - len {
                            let expect = aligned
                                .iter()
                                .copied()
                                .find(|&b| w[b - 1..b - 1 + len] == w[pos - 1..pos - 1 + len])
                                .map(|anchor| BasicFactorName { level, anchor });
                            assert_eq!(naming.name_of(&scheme, &idx, level, pos), expect);
                        }
                    }
                    for a in associated_occurrences(&scheme, &naming, &idx) {
                        assert!(a.tau < delta);
                        assert!(a.z.contains(Segment::with_len(a.start, a.y_len())));
                    }
                }
            }
        }
    }
}
