//! 5-good sequencings of 3-chromatic systems.
//!
//! When at most one class has fewer than 8 points the colour-class
//! construction applies directly. The remaining profiles at v = 21 and
//! v = 25 are handled by ordering one class so that a pair next to the
//! boundary has its third point in a class that is not adjacent, which lowers
//! the size needed by the neighbouring class from 8 to 7:
//!
//! * (11,7,7): find a block `{B_i, B_j, A_k}`, list B ending `B_i, B_j`, then C, then A.
//! * (7,7,7): with `n` blocks of type AAB (and `21 - n` of type AAC), list A
//!   and put B in front of it and C behind it. If `n` is 0 or 21 the order of
//!   A is free (after swapping B and C when `n = 21`); otherwise A starts with a
//!   pair whose third is in C and ends with a pair whose third is in B.
//! * (8,7,6): if every pair of the 6-class has its third in the 7-class, a
//!   point of the 8-class can join the 6-class, giving (7,7,7). Otherwise
//!   start the 6-class with a pair whose third is in the 8-class and proceed
//!   as for (7,7,7).

use std::fmt;

use crate::error::{Error, Result};
use crate::search::{search_ell_good, SearchStatus};
use crate::structure::{cross_block_counts, proper_colouring, Colouring};
use crate::system::{Point, PointSet, Sequencing, TripleSystem};

use super::colour_classes::colour_class_traced;
use super::{Builder, ConstructionTrace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiveGoodRoute {
    ColourClasses,
    /// (11,7,7) at v = 25.
    AnchorBlock,
    /// (7,7,7) at v = 21 with no AAB or no AAC blocks.
    EquitableExtremal,
    /// (7,7,7) at v = 21 with both kinds present.
    EquitableAnchored,
    /// (8,7,6) at v = 21, recoloured to (7,7,7).
    Promoted,
    /// (8,7,6) at v = 21 with a block meeting the 6-class twice and the 8-class once.
    UnequalAnchored,
    /// No construction covers the colouring; found by exhaustive search.
    Search,
}

impl fmt::Display for FiveGoodRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FiveGoodRoute::ColourClasses => "colour-classes",
            FiveGoodRoute::AnchorBlock => "anchor-block",
            FiveGoodRoute::EquitableExtremal => "equitable-extremal",
            FiveGoodRoute::EquitableAnchored => "equitable-anchored",
            FiveGoodRoute::Promoted => "promoted",
            FiveGoodRoute::UnequalAnchored => "unequal-anchored",
            FiveGoodRoute::Search => "search",
        };
        f.write_str(s)
    }
}

pub fn five_good_3chromatic(sys: &TripleSystem, colouring: &Colouring) -> Result<Sequencing> {
    five_good_traced(sys, colouring, None).map(|(_, t)| t.sequencing)
}

pub fn five_good_traced(
    sys: &TripleSystem,
    colouring: &Colouring,
    seed: Option<u64>,
) -> Result<(FiveGoodRoute, ConstructionTrace)> {
    let v = sys.order();
    if colouring.num_classes() != 3 {
        return Err(Error::NotThreeChromatic);
    }
    if v < 15 {
        return Err(Error::PreconditionFailed(format!("needs v >= 15, got {v}")));
    }
    let profile = colouring.profile();
    let small = profile.iter().filter(|&&n| n < 8).count();
    if small <= 1 {
        return Ok((FiveGoodRoute::ColourClasses, colour_class_traced(sys, colouring, 5, false, seed)?));
    }
    let classes = colouring.classes();
    match (v, profile.as_slice()) {
        (25, [11, 7, 7]) => anchor_block(sys, &classes[0], &classes[1], &classes[2], seed),
        (21, [7, 7, 7]) => equitable(sys, colouring, seed),
        (21, [8, 7, 6]) => unequal(sys, colouring, seed),
        _ => Err(Error::UnhandledProfile(profile)),
    }
}

/// Block with two points in `pair_class` and one in `third_class`, lowest first.
fn anchor(sys: &TripleSystem, pair_class: &[Point], third_class: &[Point]) -> Option<(Point, Point, Point)> {
    let pc: PointSet = pair_class.iter().copied().collect();
    let tc: PointSet = third_class.iter().copied().collect();
    sys.blocks().iter().find_map(|b| {
        let [x, y, z] = b.points();
        [(x, y, z), (x, z, y), (y, z, x)]
            .into_iter()
            .find(|&(p, q, r)| pc.contains(p) && pc.contains(q) && tc.contains(r))
    })
}

/// `class` reordered to start with `first` and end with `last`.
fn arrange(class: &[Point], first: &[Point], last: &[Point]) -> Vec<Point> {
    let mut out = first.to_vec();
    out.extend(class.iter().filter(|p| !first.contains(p) && !last.contains(p)));
    out.extend(last);
    out
}

fn anchor_block(
    sys: &TripleSystem,
    a: &[Point],
    b: &[Point],
    c: &[Point],
    seed: Option<u64>,
) -> Result<(FiveGoodRoute, ConstructionTrace)> {
    // At most 21 blocks meet B twice and C once, and 21 meet C twice and B
    // once; together those would need 84 B-C pairs, but there are only 49.
    let bc_blocks = sys
        .blocks()
        .iter()
        .filter(|blk| {
            let inb = blk.points().iter().filter(|p| b.contains(p)).count();
            let inc = blk.points().iter().filter(|p| c.contains(p)).count();
            inb + inc == 3 && inb > 0 && inc > 0
        })
        .count();
    assert!(bc_blocks < b.len() * c.len(), "B-C pair count exceeded");
    let (b, c, (p, q, _)) = match anchor(sys, b, a) {
        Some(blk) => (b, c, blk),
        None => (c, b, anchor(sys, c, a).expect("pair counting guarantees an anchor block")),
    };
    let mut builder = Builder::new(sys, 5, seed);
    builder.append_free(&arrange(b, &[], &[p, q]));
    builder.append_class(c, 0)?;
    builder.append_class(a, 0)?;
    Ok((FiveGoodRoute::AnchorBlock, builder.finish("five-good-anchor", false)?))
}

/// A in the middle, B prepended, C appended.
fn middle_layout(
    sys: &TripleSystem,
    a: &[Point],
    b: &[Point],
    c: &[Point],
    seed: Option<u64>,
    route: FiveGoodRoute,
) -> Result<(FiveGoodRoute, ConstructionTrace)> {
    let mut builder = Builder::new(sys, 5, seed);
    builder.append_free(a);
    builder.prepend_class(b)?;
    builder.append_class(c, 0)?;
    Ok((route, builder.finish(&format!("five-good-{route}"), false)?))
}

fn equitable(
    sys: &TripleSystem,
    colouring: &Colouring,
    seed: Option<u64>,
) -> Result<(FiveGoodRoute, ConstructionTrace)> {
    let classes = colouring.classes();
    let counts = cross_block_counts(sys, colouring)?;
    let n = counts.equitable_21_n().ok_or_else(|| {
        Error::VerificationFailed("equitable STS(21) colouring violates the block-count identities".into())
    })?;
    let (a, mut b, mut c) = (&classes[0], &classes[1], &classes[2]);
    match n {
        0 | 21 => {
            if n == 21 {
                std::mem::swap(&mut b, &mut c);
            }
            middle_layout(sys, a, b, c, seed, FiveGoodRoute::EquitableExtremal)
        }
        _ => {
            let order = anchored_order(sys, a, b, c).expect("with 0 < n < 21, disjoint AAC and AAB pairs exist");
            middle_layout(sys, &order, b, c, seed, FiveGoodRoute::EquitableAnchored)
        }
    }
}

/// A ordered as `A1, A2, ..., A6, A7` with `A1.A2` in C and `A6.A7` in B.
fn anchored_order(sys: &TripleSystem, a: &[Point], b: &[Point], c: &[Point]) -> Option<Vec<Point>> {
    let pairs_to = |target: &[Point]| -> Vec<(Point, Point)> {
        let mut out = Vec::new();
        for (i, &x) in a.iter().enumerate() {
            for &y in &a[i + 1..] {
                if target.contains(&sys.third(x, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    };
    let front = pairs_to(c);
    let back = pairs_to(b);
    front.iter().find_map(|&(a1, a2)| {
        back.iter()
            .find(|&&(a6, a7)| ![a1, a2].contains(&a6) && ![a1, a2].contains(&a7))
            .map(|&(a6, a7)| arrange(a, &[a1, a2], &[a6, a7]))
    })
}

fn unequal(sys: &TripleSystem, colouring: &Colouring, seed: Option<u64>) -> Result<(FiveGoodRoute, ConstructionTrace)> {
    let classes = colouring.classes();
    let (c, b, a) = (&classes[0], &classes[1], &classes[2]);
    match anchor(sys, a, c) {
        None => {
            // Every pair of A has its third in B, so no point of C is a third
            // of an A-pair and any of them can move to A.
            let moved = c[0];
            let mut new_a = a.clone();
            new_a.push(moved);
            let new_c: Vec<Point> = c[1..].to_vec();
            let recoloured = Colouring::new(sys, vec![new_a, b.clone(), new_c])?;
            let (_, trace) = equitable(sys, &recoloured, seed)?;
            Ok((FiveGoodRoute::Promoted, trace))
        }
        Some((a1, a2, _)) => {
            let order = arrange(a, &[a1, a2], &[]);
            middle_layout(sys, &order, b, c, seed, FiveGoodRoute::UnequalAnchored)
        }
    }
}

/// Finds a 3-colouring itself and builds a 5-good sequencing, falling back to
/// exhaustive search (within `budget` nodes) for colourings no construction
/// covers, such as every 3-colouring at v = 15 and v = 19.
pub fn five_good_sequencing(sys: &TripleSystem, budget: u64) -> Result<(FiveGoodRoute, Sequencing)> {
    five_good_auto(sys, budget, None).map(|(route, seq, _)| (route, seq))
}

/// As [`five_good_sequencing`], also returning the construction trace (none
/// for the search route).
pub fn five_good_auto(
    sys: &TripleSystem,
    budget: u64,
    seed: Option<u64>,
) -> Result<(FiveGoodRoute, Sequencing, Option<ConstructionTrace>)> {
    let v = sys.order();
    let mut candidates = Vec::new();
    if v == 21 {
        for p in [[7, 7, 7], [8, 7, 6]] {
            if let Some(col) = proper_colouring(sys, 3, Some(&p))? {
                candidates.push(col);
            }
        }
    }
    if candidates.is_empty() {
        match proper_colouring(sys, 3, None)? {
            Some(col) => candidates.push(col),
            None => return Err(Error::NotThreeChromatic),
        }
    }
    let mut last_err = None;
    for col in &candidates {
        match five_good_traced(sys, col, seed) {
            Ok((route, trace)) => return Ok((route, trace.sequencing.clone(), Some(trace))),
            Err(e @ Error::UnhandledProfile(_)) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    match search_ell_good(sys, 5, false, budget, None).status {
        SearchStatus::Found(seq) => Ok((FiveGoodRoute::Search, seq, None)),
        _ => Err(last_err.unwrap_or_else(|| Error::UnhandledProfile(candidates[0].profile()))),
    }
}
