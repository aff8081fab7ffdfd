use std::cmp::Ordering;

use crate::{Rational, Segment};

/// A maximal repetition: a segment of exponent at least 2 that cannot be
/// extended without increasing its smallest period.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Run {
    pub beg: usize,
    pub end: usize,
    pub period: usize,
}

#[allow(clippy::len_without_is_empty)]
impl Run {
    pub fn len(&self) -> usize {
        self.end + 1 - self.beg
    }

    pub fn segment(&self) -> Segment {
        Segment::new(self.beg, self.end)
    }

    pub fn exponent(&self) -> Rational {
        Rational::new(self.len() as u64, self.period as u64)
    }
}

impl Ord for Run {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.beg, self.period, self.end).cmp(&(other.beg, other.period, other.end))
    }
}

impl PartialOrd for Run {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A gapped repeat `(u', u'')` with left copy `[beg1, end1]` and right copy
/// starting at `beg2`. Ordered by `(beg1, period)`, which identifies a
/// maximal repeat uniquely.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GappedRepeat {
    pub beg1: usize,
    pub end1: usize,
    pub beg2: usize,
}

impl GappedRepeat {
    pub fn new(beg1: usize, beg2: usize, copy_len: usize) -> Self {
        GappedRepeat {
            beg1,
            end1: beg1 + copy_len - 1,
            beg2,
        }
    }

    pub fn period(&self) -> usize {
        self.beg2 - self.beg1
    }

    pub fn copy_len(&self) -> usize {
        self.end1 + 1 - self.beg1
    }

    pub fn end2(&self) -> usize {
        self.end1 + self.period()
    }

    pub fn left(&self) -> Segment {
        Segment::new(self.beg1, self.end1)
    }

    pub fn right(&self) -> Segment {
        Segment::new(self.beg2, self.end2())
    }

    /// The whole factor `u v u`.
    pub fn span(&self) -> Segment {
        Segment::new(self.beg1, self.end2())
    }

    pub fn is_alpha_gapped(&self, alpha: Rational) -> bool {
        crate::word::at_most_times(self.period(), alpha, self.copy_len())
    }
}

impl Ord for GappedRepeat {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.beg1, self.beg2, self.end1).cmp(&(other.beg1, other.beg2, other.end1))
    }
}

impl PartialOrd for GappedRepeat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A maximal segment whose exponent lies in `[1 + delta, 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Subrepetition {
    pub beg: usize,
    pub end: usize,
    pub period: usize,
}

#[allow(clippy::len_without_is_empty)]
impl Subrepetition {
    pub fn len(&self) -> usize {
        self.end + 1 - self.beg
    }

    pub fn segment(&self) -> Segment {
        Segment::new(self.beg, self.end)
    }

    pub fn exponent(&self) -> Rational {
        Rational::new(self.len() as u64, self.period as u64)
    }
}

impl Ord for Subrepetition {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.beg, self.period, self.end).cmp(&(other.beg, other.period, other.end))
    }
}

impl PartialOrd for Subrepetition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A gapped palindrome `u v u^R` with arms `[beg1, end1]` and `[beg2, end2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GappedPalindrome {
    pub beg1: usize,
    pub end1: usize,
    pub beg2: usize,
    pub end2: usize,
}

impl GappedPalindrome {
    pub fn arm_len(&self) -> usize {
        self.end1 + 1 - self.beg1
    }

    pub fn gap_len(&self) -> usize {
        self.beg2 - self.end1 - 1
    }

    pub fn is_alpha_gapped(&self, alpha: Rational) -> bool {
        crate::word::at_most_times(self.arm_len() + self.gap_len(), alpha, self.arm_len())
    }
}
