//! Front ends, bound statistics and word generators.

use rand::Rng;

use crate::nonpr::fast_repeats;
pub use crate::nonpr::FastConfig;
use crate::oracle::{check_delta, naive_palindromes, naive_repeats, naive_subrepetitions};
use crate::{
    Error, GappedPalindrome, GappedRepeat, LceIndex, Rational, Result, Subrepetition, Word,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Fast(FastConfig),
    Naive,
}

impl Engine {
    pub fn fast() -> Self {
        Engine::Fast(FastConfig::default())
    }
}

impl Default for Engine {
    fn default() -> Self {
        Engine::fast()
    }
}

/// All maximal `alpha`-gapped repeats sorted by `(beg1, period)`.
pub fn maximal_gapped_repeats(
    word: &Word,
    alpha: Rational,
    engine: Engine,
) -> Result<Vec<GappedRepeat>> {
    match engine {
        Engine::Fast(cfg) => fast_repeats(word, alpha, &cfg),
        Engine::Naive => naive_repeats(word, alpha),
    }
}

/// All maximal `delta`-subrepetitions sorted by `(beg, period)`.
pub fn maximal_subrepetitions(
    word: &Word,
    delta: Rational,
    engine: Engine,
) -> Result<Vec<Subrepetition>> {
    check_delta(delta)?;
    let cfg = match engine {
        Engine::Fast(cfg) => cfg,
        Engine::Naive => return naive_subrepetitions(word, delta),
    };
    let reps = fast_repeats(word, delta.recip(), &cfg)?;
    if reps.is_empty() {
        return Ok(Vec::new());
    }
    let idx = LceIndex::build(word);
    let mut out: Vec<Subrepetition> = reps
        .into_iter()
        .filter(|r| idx.smallest_period(r.span()) == r.period())
        .map(|r| Subrepetition {
            beg: r.beg1,
            end: r.end2(),
            period: r.period(),
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// All maximal `alpha`-gapped palindromes (brute force only).
pub fn maximal_gapped_palindromes(word: &Word, alpha: Rational) -> Result<Vec<GappedPalindrome>> {
    naive_palindromes(word, alpha)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Repeats,
    Subrepetitions,
    Palindromes,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundStats {
    pub count: usize,
    pub n: usize,
    /// `count / (alpha n)` for repeats and palindromes, `count delta / n` for
    /// subrepetitions; 0 on the empty word.
    pub ratio: f64,
}

/// Output count of the fast engine relative to its linear bound. `param` is
/// `alpha` or `delta` according to `kind`.
pub fn bound_stats(word: &Word, param: Rational, kind: BoundKind) -> Result<BoundStats> {
    let n = word.len();
    let (count, scale) = match kind {
        BoundKind::Repeats => (
            maximal_gapped_repeats(word, param, Engine::fast())?.len(),
            param,
        ),
        BoundKind::Subrepetitions => (
            maximal_subrepetitions(word, param, Engine::fast())?.len(),
            param.recip(),
        ),
        BoundKind::Palindromes => (maximal_gapped_palindromes(word, param)?.len(), param),
    };
    let ratio = if n == 0 {
        0.0
    } else {
        count as f64 * *scale.denom() as f64 / (*scale.numer() as f64 * n as f64)
    };
    Ok(BoundStats { count, n, ratio })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `(0110)^k`.
    Quad,
    /// `a b_1 a b_2 ... a b_k` with distinct letters `b_i`.
    Abk,
}

/// The `i`-th letter distinct from `a`, for `i < 255`.
fn abk_letter(i: usize) -> u8 {
    let above = (u8::MAX - b'a') as usize;
    if i < above {
        b'b' + i as u8
    } else {
        (i - above) as u8
    }
}

pub fn gen_family(family: Family, k: usize) -> Result<Word> {
    if k == 0 {
        return Err(Error::EmptyFamily);
    }
    match family {
        Family::Quad => Ok(Word::new(b"0110".repeat(k))),
        Family::Abk => {
            if k > 255 {
                return Err(Error::AlphabetExhausted(k));
            }
            Ok(Word::new(
                (0..k)
                    .flat_map(|i| [b'a', abk_letter(i)])
                    .collect::<Vec<_>>(),
            ))
        }
    }
}

/// Uniform word over `sigma` letters, `a, b, ...` when `sigma <= 26` and raw
/// bytes `0 .. sigma` otherwise.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, n: usize, sigma: u16) -> Word {
    let sigma = sigma.clamp(1, 256);
    let base = if sigma <= 26 { b'a' as u16 } else { 0 };
    Word::new(
        (0..n)
            .map(|_| (base + rng.gen_range(0..sigma)) as u8)
            .collect::<Vec<_>>(),
    )
}
