//! Non-periodic repeats whose left copy contains an aligned superbasic
//! occurrence.
//!
//! A repeat is reported only from its canonical triple `(z, y', y'')`: `z` is
//! the canonical superbasic occurrence inside the left copy, `y'` the
//! associated occurrence inside `z` and `y''` its aligned counterpart in the
//! right copy.

use super::naming::{associated_occurrences, Naming};
use super::occ::{AlignOcc, OccItem};
use super::BlockScheme;
use crate::word::at_most_times;
use crate::{GappedRepeat, LceIndex, Rational, Segment};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triple {
    pub level: usize,
    pub z: Segment,
    /// Start of `y'`.
    pub y1: usize,
    /// Start of `y''`.
    pub y2: usize,
}

impl Triple {
    pub fn y_len(&self) -> usize {
        self.z.len() / 2
    }
}

/// Maximal segment around `occ` with period `step`.
pub fn extension_of(idx: &LceIndex, occ: Segment, step: usize) -> Segment {
    let beg = occ.beg - idx.lcs(occ.beg - 1, occ.beg - 1 + step);
    let end = occ.end + idx.lcp(occ.end + 1, occ.end + 1 - step);
    Segment::new(beg, end)
}

fn in_window(z: Segment, left: Segment) -> bool {
    let zl = z.len();
    left.beg + zl > z.beg && left.beg <= z.beg && left.end >= z.end && left.end < z.end + 3 * zl
}

/// The maximal repeat whose copies extend `y'` and `y''`, when `t` is its
/// canonical triple and it is `alpha`-gapped.
pub fn repeat_from_triple(
    idx: &LceIndex,
    scheme: &BlockScheme,
    alpha: Rational,
    t: &Triple,
) -> Option<GappedRepeat> {
    if t.y2 <= t.y1 {
        return None;
    }
    let m = t.y_len();
    let ls = idx.lcs(t.y1 - 1, t.y2 - 1);
    let lp = idx.lcp(t.y1 + m, t.y2 + m);
    let rep = GappedRepeat::new(t.y1 - ls, t.y2 - ls, m + ls + lp);
    accept(scheme, alpha, t, rep)
}

fn accept(
    scheme: &BlockScheme,
    alpha: Rational,
    t: &Triple,
    rep: GappedRepeat,
) -> Option<GappedRepeat> {
    let (p, c) = (rep.period(), rep.copy_len());
    let ok = p > c
        && at_most_times(p, alpha, c)
        && in_window(t.z, rep.left())
        && scheme.canonical_superbasic(rep.left()) == Some((t.level, t.z));
    ok.then_some(rep)
}

/// `a * s + b`.
#[derive(Clone, Copy, Debug)]
struct Affine {
    a: i128,
    b: i128,
}

impl Affine {
    fn at(self, s: i128) -> i128 {
        self.a * s + self.b
    }

    fn sub(self, o: Affine) -> Affine {
        Affine {
            a: self.a - o.a,
            b: self.b - o.b,
        }
    }

    fn scale(self, k: i128) -> Affine {
        Affine {
            a: self.a * k,
            b: self.b * k,
        }
    }
}

/// Narrow `[lo, hi]` to the `s` with `f(s) >= 0`.
fn restrict(lo: &mut i128, hi: &mut i128, f: Affine) {
    match f.a.signum() {
        0 => {
            if f.b < 0 {
                *hi = *lo - 1;
            }
        }
        1 => *lo = (*lo).max((-f.b).div_euclid(f.a) + ((-f.b).rem_euclid(f.a) != 0) as i128),
        _ => *hi = (*hi).min(f.b.div_euclid(-f.a)),
    }
}

/// All repeats from the triples `(z, y', y'')` with `y''` ranging over a run
/// item whose occurrences lie in a different run than `y'`.
#[allow(clippy::too_many_arguments)]
fn process_run_item(
    idx: &LceIndex,
    scheme: &BlockScheme,
    alpha: Rational,
    level: usize,
    z: Segment,
    y1: usize,
    item: (usize, usize, usize),
    out: &mut Vec<GappedRepeat>,
) {
    let (first, last, d) = item;
    let m = z.len() / 2;
    let e1 = y1 + m - 1;
    let r1 = extension_of(idx, Segment::with_len(y1, m), d);
    let r2 = extension_of(idx, Segment::with_len(first, m), d);
    if r1 == r2 {
        return;
    }
    let on_item =
        |s: i128| s >= first as i128 && s <= last as i128 && (s - first as i128) % d as i128 == 0;
    let triple = |s: usize| Triple {
        level,
        z,
        y1,
        y2: s,
    };

    let (b1, e1i) = (y1 as i128, e1 as i128);
    let (bb1, ee1, bb2, ee2) = (
        r1.beg as i128,
        r1.end as i128,
        r2.beg as i128,
        r2.end as i128,
    );
    let mi = m as i128;
    let s_left = b1 + (bb2 - bb1);
    let s_right = b1 + (ee2 - ee1);
    let mut cuts = vec![s_left, s_right];
    cuts.sort_unstable();
    cuts.dedup();
    for &s in &cuts {
        if on_item(s) {
            if let Some(rep) = repeat_from_triple(idx, scheme, alpha, &triple(s as usize)) {
                out.push(rep);
            }
        }
    }

    let (num, den) = (*alpha.numer() as i128, *alpha.denom() as i128);
    let (zs, ze, zl) = (z.beg as i128, z.end as i128, z.len() as i128);
    let mut pieces = Vec::new();
    let mut lo = first as i128;
    for &cut in &cuts {
        pieces.push((lo, cut - 1));
        lo = cut + 1;
    }
    pieces.push((lo, last as i128));

    for (plo, phi) in pieces {
        let (mut lo, mut hi) = (plo.max(first as i128), phi.min(last as i128));
        if lo > hi {
            continue;
        }
        // Branches are constant on a piece; pick them at any member.
        let left_short = lo < s_left;
        let right_long = lo < s_right;
        let beg_u = if left_short {
            Affine { a: -1, b: b1 + bb2 }
        } else {
            Affine { a: 0, b: bb1 }
        };
        let end_u = if right_long {
            Affine { a: 0, b: ee1 }
        } else {
            Affine {
                a: -1,
                b: e1i + ee2 - mi + 1,
            }
        };
        let one = Affine { a: 0, b: 1 };
        let c = end_u.sub(beg_u).sub(Affine { a: 0, b: -1 });
        let p = Affine { a: 1, b: -b1 };
        restrict(&mut lo, &mut hi, p.sub(c).sub(one));
        restrict(&mut lo, &mut hi, c.scale(num).sub(p.scale(den)));
        restrict(
            &mut lo,
            &mut hi,
            beg_u.sub(Affine { a: 0, b: zs - zl }).sub(one),
        );
        restrict(&mut lo, &mut hi, Affine { a: 0, b: zs }.sub(beg_u));
        restrict(&mut lo, &mut hi, end_u.sub(Affine { a: 0, b: ze }));
        restrict(
            &mut lo,
            &mut hi,
            Affine {
                a: 0,
                b: ze + 3 * zl,
            }
            .sub(end_u)
            .sub(one),
        );
        if lo > hi {
            continue;
        }
        let f = first as i128;
        let mut s = f + (lo - f).div_euclid(d as i128) * d as i128;
        if s < lo {
            s += d as i128;
        }
        while s <= hi {
            let rep = GappedRepeat::new(
                beg_u.at(s) as usize,
                (beg_u.at(s) + p.at(s)) as usize,
                c.at(s) as usize,
            );
            if let Some(rep) = accept(scheme, alpha, &triple(s as usize), rep) {
                out.push(rep);
            }
            s += d as i128;
        }
    }
}

/// All maximal `alpha`-gapped repeats found from canonical triples. Contains
/// every non-periodic one with a copy of length at least `4 * delta`.
pub fn find_large_nonpr(
    idx: &LceIndex,
    scheme: &BlockScheme,
    alpha: Rational,
) -> Vec<GappedRepeat> {
    let mut out = Vec::new();
    if scheme.levels() < 2 {
        return out;
    }
    let naming = Naming::build(scheme, idx);
    let occ = AlignOcc::build(scheme, &naming, idx);
    let assoc: Vec<_> = associated_occurrences(scheme, &naming, idx)
        .into_iter()
        .filter_map(|a| a.name.map(|name| (a, name)))
        .collect();
    let queries: Vec<_> = assoc.iter().map(|(a, name)| (a.z.end + 1, *name)).collect();
    let firsts = occ.first_occ(scheme, &queries);
    let (num, den) = (*alpha.numer() as u128, *alpha.denom() as u128);

    for ((a, name), &first) in assoc.iter().zip(&firsts) {
        let m = a.y_len();
        let bound = a.z.end + (12 * m as u128 * num / den).min(scheme.n() as u128) as usize;
        for item in &occ.items(scheme, *name)[first..] {
            if item.first() > bound {
                break;
            }
            match *item {
                OccItem::Ordinary(s) => {
                    let t = Triple {
                        level: name.level + 1,
                        z: a.z,
                        y1: a.start,
                        y2: s,
                    };
                    if let Some(rep) = repeat_from_triple(idx, scheme, alpha, &t) {
                        out.push(rep);
                    }
                }
                OccItem::Run { first, last, step } => process_run_item(
                    idx,
                    scheme,
                    alpha,
                    name.level + 1,
                    a.z,
                    a.start,
                    (first, last, step),
                    &mut out,
                ),
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}
