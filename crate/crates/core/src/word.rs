use std::fmt;

/// Exact nonnegative rational used for `alpha`, `delta` and exponents.
pub type Rational = num_rational::Ratio<u64>;

/// `p <= ratio * c`, evaluated exactly.
pub(crate) fn at_most_times(p: usize, ratio: Rational, c: usize) -> bool {
    (p as u128) * (*ratio.denom() as u128) <= (*ratio.numer() as u128) * (c as u128)
}

/// An immutable byte string addressed with 1-based positions.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    bytes: Vec<u8>,
}

impl Word {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Self {
        Word {
            bytes: bytes.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Symbol at 1-based `pos`. Panics outside `[1, n]`.
    pub fn at(&self, pos: usize) -> u8 {
        self.bytes[pos - 1]
    }

    /// Symbol at 1-based `pos`, or `None` outside `[1, n]`.
    pub fn get(&self, pos: usize) -> Option<u8> {
        pos.checked_sub(1).and_then(|i| self.bytes.get(i)).copied()
    }

    pub fn slice(&self, seg: Segment) -> &[u8] {
        &self.bytes[seg.beg - 1..seg.end]
    }

    /// The factor `w[seg]` as a standalone word.
    pub fn factor(&self, seg: Segment) -> Word {
        Word::new(self.slice(seg))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", String::from_utf8_lossy(&self.bytes))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.bytes))
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word::new(s.as_bytes())
    }
}

impl From<&[u8]> for Word {
    fn from(s: &[u8]) -> Self {
        Word::new(s)
    }
}

impl From<Vec<u8>> for Word {
    fn from(bytes: Vec<u8>) -> Self {
        Word { bytes }
    }
}

/// Inclusive 1-based occurrence `[beg, end]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub beg: usize,
    pub end: usize,
}

#[allow(clippy::len_without_is_empty)]
impl Segment {
    pub fn new(beg: usize, end: usize) -> Self {
        debug_assert!(beg >= 1 && beg <= end, "bad segment [{beg}, {end}]");
        Segment { beg, end }
    }

    pub fn with_len(beg: usize, len: usize) -> Self {
        Segment::new(beg, beg + len - 1)
    }

    pub fn len(&self) -> usize {
        self.end + 1 - self.beg
    }

    pub fn contains(&self, other: Segment) -> bool {
        self.beg <= other.beg && other.end <= self.end
    }
}
