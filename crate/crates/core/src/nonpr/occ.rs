use super::naming::{BasicFactorName, Naming};
use super::BlockScheme;
use crate::LceIndex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OccItem {
    Ordinary(usize),
    /// Aligned occurrences `first, first + step, ..., last` inside one run.
    Run {
        first: usize,
        last: usize,
        step: usize,
    },
}

impl OccItem {
    pub fn first(&self) -> usize {
        match *self {
            OccItem::Ordinary(s) => s,
            OccItem::Run { first, .. } => first,
        }
    }

    pub fn last(&self) -> usize {
        match *self {
            OccItem::Ordinary(s) => s,
            OccItem::Run { last, .. } => last,
        }
    }

    pub fn starts(&self) -> impl Iterator<Item = usize> {
        let (first, last, step) = match *self {
            OccItem::Ordinary(s) => (s, s, 1),
            OccItem::Run { first, last, step } => (first, last, step),
        };
        (first..=last).step_by(step)
    }
}

/// Per-name lists of aligned occurrences, left to right.
#[derive(Clone, Debug)]
pub struct AlignOcc {
    level_offset: Vec<usize>,
    lists: Vec<Vec<OccItem>>,
}

impl AlignOcc {
    pub fn build(scheme: &BlockScheme, naming: &Naming, idx: &LceIndex) -> Self {
        let mut level_offset = Vec::with_capacity(scheme.levels());
        let mut total = 0;
        for level in 0..scheme.levels() {
            level_offset.push(total);
            total += scheme.aligned_count(level);
        }
        let mut lists: Vec<Vec<OccItem>> = vec![Vec::new(); total];
        for level in 0..scheme.levels() {
            let len = scheme.basic_len(level);
            for block in 0..scheme.aligned_count(level) {
                let i = scheme.block_start(block);
                let name = naming.name_aligned(scheme, level, i);
                let list = &mut lists[level_offset[level] + scheme.block_of(name.anchor)];
                match list.last_mut() {
                    Some(&mut OccItem::Ordinary(j)) if i - j <= len / 2 => {
                        let step = i - j;
                        let end_r = i + len - 1 + idx.lcp(j + len, i + len);
                        let last = j + step * ((end_r + 1 - len - j) / step);
                        *list.last_mut().unwrap() = OccItem::Run {
                            first: j,
                            last,
                            step,
                        };
                    }
                    Some(&mut OccItem::Run { last, .. }) if i <= last => {}
                    _ => list.push(OccItem::Ordinary(i)),
                }
            }
        }
        AlignOcc {
            level_offset,
            lists,
        }
    }

    fn id(&self, scheme: &BlockScheme, name: BasicFactorName) -> usize {
        self.level_offset[name.level] + scheme.block_of(name.anchor)
    }

    pub fn items(&self, scheme: &BlockScheme, name: BasicFactorName) -> &[OccItem] {
        &self.lists[self.id(scheme, name)]
    }

    /// For each query `(threshold, name)`, the index of the first item of
    /// `name` having an occurrence starting at or after `threshold`.
    ///
    /// Queries are bucketed by threshold and every list is scanned with a
    /// single forward pointer.
    pub fn first_occ(
        &self,
        scheme: &BlockScheme,
        queries: &[(usize, BasicFactorName)],
    ) -> Vec<usize> {
        let n = scheme.n();
        let mut head = vec![0usize; n + 3];
        for &(t, _) in queries {
            head[t.min(n + 1) + 1] += 1;
        }
        for i in 1..head.len() {
            head[i] += head[i - 1];
        }
        let mut order = vec![0usize; queries.len()];
        let mut fill = head.clone();
        for (q, &(t, _)) in queries.iter().enumerate() {
            let b = t.min(n + 1);
            order[fill[b]] = q;
            fill[b] += 1;
        }
        let mut pointer = vec![0usize; self.lists.len()];
        let mut out = vec![0usize; queries.len()];
        for &q in &order {
            let (t, name) = queries[q];
            let id = self.id(scheme, name);
            let list = &self.lists[id];
            let p = &mut pointer[id];
            while *p < list.len() && list[*p].last() < t {
                *p += 1;
            }
            out[q] = *p;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::all_words;
    use crate::Word;

    fn setup(w: &[u8], delta: usize) -> (BlockScheme, LceIndex, Naming, AlignOcc) {
        let word = Word::new(w.to_vec());
        let scheme = BlockScheme::new(w.len(), Some(delta));
        let idx = LceIndex::build(&word);
        let naming = Naming::build(&scheme, &idx);
        let occ = AlignOcc::build(&scheme, &naming, &idx);
        (scheme, idx, naming, occ)
    }

    #[test]
    fn periodic_fixture() {
        let (scheme, _, _, occ) = setup(b"abababab", 2);
        let name = BasicFactorName {
            level: 1,
            anchor: 1,
        };
        assert_eq!(
            occ.items(&scheme, name),
            &[OccItem::Run {
                first: 1,
                last: 5,
                step: 2
            }]
        );
    }

    #[test]
    fn sparse_occurrences_stay_ordinary() {
        let (scheme, _, _, occ) = setup(b"abxxabyyab", 1);
        let name = BasicFactorName {
            level: 1,
            anchor: 1,
        };
        assert_eq!(
            occ.items(&scheme, name),
            &[
                OccItem::Ordinary(1),
                OccItem::Ordinary(5),
                OccItem::Ordinary(9)
            ]
        );
    }

    #[test]
    fn lists_match_enumeration() {
        for n in 1..=12 {
            for w in all_words(n, 2) {
                for delta in 1..=2 {
                    let (scheme, _, naming, occ) = setup(&w, delta);
                    for level in 0..scheme.levels() {
                        let len = scheme.basic_len(level);
                        for block in 0..scheme.aligned_count(level) {
                            let a = scheme.block_start(block);
                            let name = naming.name_aligned(&scheme, level, a);
                            if name.anchor != a {
                                continue;
                            }
                            let expect: Vec<usize> = (0..scheme.aligned_count(level))
                                .map(|b| scheme.block_start(b))
                                .filter(|&b| w[b - 1..b - 1 + len] == w[a - 1..a - 1 + len])
                                .collect();
                            let items = occ.items(&scheme, name);
                            let got: Vec<usize> = items.iter().flat_map(|it| it.starts()).collect();
                            assert_eq!(got, expect, "{w:?} d={delta} l={level}");
                            for pair in items.windows(2) {
                                assert!(pair[1].first() - pair[0].last() > len / 2);
                            }
                            let queries: Vec<_> = (1..=n + 2).map(|t| (t, name)).collect();
                            let first = occ.first_occ(&scheme, &queries);
                            for (&(t, _), &f) in queries.iter().zip(&first) {
                                let brute = items.iter().position(|it| it.last() >= t);
                                assert_eq!(brute.unwrap_or(items.len()), f);
                            }
                        }
                    }
                }
            }
        }
    }
}
