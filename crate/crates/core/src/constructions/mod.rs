//! Constructive sequencings: Colbourn's relabelling, the independent-set
//! construction for 4-good sequencings, the colour-class construction for
//! `ell`-good sequencings, and its refinements for 5-good sequencings of
//! 3-chromatic systems.
//!
//! Every construction re-verifies its output and can return a
//! [`ConstructionTrace`] recording each pick and what it had to avoid.

mod colbourn;
mod colour_classes;
mod five_good;
mod independent;
mod trace;

pub use colbourn::{colbourn_3good, colbourn_traced};
pub use colour_classes::{colour_class_ell_good, colour_class_traced};
pub use five_good::{five_good_3chromatic, five_good_auto, five_good_sequencing, five_good_traced, FiveGoodRoute};
pub use independent::{independent_set_4good, independent_set_traced};
pub use trace::{ConstructionTrace, Pick};

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::system::{is_ell_good, Point, PointSet, Sequencing, TripleSystem};

/// `C(n, 2)`.
fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Thirds of every pair in `pts`.
fn thirds(sys: &TripleSystem, pts: &[Point]) -> PointSet {
    let mut out = PointSet::empty();
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            out.insert(sys.third(a, b));
        }
    }
    out
}

/// Lowest allowed point of `pool`, or a uniformly random one when seeded.
fn choose(rng: &mut Option<ChaCha8Rng>, pool: &PointSet, excluded: &PointSet) -> Option<Point> {
    let allowed = pool.difference(excluded);
    match rng {
        None => allowed.first(),
        Some(r) => allowed.iter().collect::<Vec<_>>().choose(r).copied(),
    }
}

fn ordered(rng: &mut Option<ChaCha8Rng>, pool: &PointSet) -> Vec<Point> {
    let mut pts: Vec<Point> = pool.iter().collect();
    if let Some(r) = rng {
        pts.shuffle(r);
    }
    pts
}

/// Checks the result and turns picks into a trace with final positions.
fn finish(
    sys: &TripleSystem,
    method: &str,
    order: Vec<Point>,
    picks: Vec<(Point, Vec<Point>)>,
    ell: usize,
    cyclic: bool,
) -> Result<ConstructionTrace> {
    let sequencing = Sequencing::new(order)
        .map_err(|e| Error::VerificationFailed(format!("{method} did not produce a permutation: {e}")))?;
    if !is_ell_good(sys, &sequencing, ell, cyclic)? {
        let mode = if cyclic { "cyclically " } else { "" };
        return Err(Error::VerificationFailed(format!("{method} output is not {mode}{ell}-good")));
    }
    let picks = picks
        .into_iter()
        .map(|(point, excluded)| Pick { position: sequencing.position(point), point, excluded })
        .collect();
    let trace = ConstructionTrace { method: method.to_string(), picks, sequencing };
    debug_assert_eq!(trace.replay().as_ref().ok(), Some(&trace.sequencing));
    Ok(trace)
}

/// A sequence grown at both ends, class by class.
struct Builder<'a> {
    sys: &'a TripleSystem,
    ell: usize,
    seq: VecDeque<Point>,
    picks: Vec<(Point, Vec<Point>)>,
    rng: Option<ChaCha8Rng>,
    step: usize,
}

impl<'a> Builder<'a> {
    fn new(sys: &'a TripleSystem, ell: usize, seed: Option<u64>) -> Self {
        Builder {
            sys,
            ell,
            seq: VecDeque::with_capacity(sys.order()),
            picks: Vec::with_capacity(sys.order()),
            rng: seed.map(ChaCha8Rng::seed_from_u64),
            step: 0,
        }
    }

    fn record(&mut self, p: Point, excluded: &PointSet, back: bool) {
        if back {
            self.seq.push_back(p);
        } else {
            self.seq.push_front(p);
        }
        self.picks.push((p, excluded.iter().collect()));
        self.step += 1;
    }

    /// Points in the same order as given, no constraints.
    fn append_free(&mut self, pts: &[Point]) {
        for &p in pts {
            self.record(p, &PointSet::empty(), true);
        }
    }

    /// Picks one point of `pool` avoiding the thirds of pairs in `window`.
    ///
    /// `in_class` counts the window points from the same independent class;
    /// their mutual pairs cannot exclude anything from `pool`.
    fn pick(&mut self, pool: &PointSet, window: &[Point], in_class: usize) -> Result<(Point, PointSet)> {
        let excluded = thirds(self.sys, window).intersection(pool);
        let bound = pairs(self.ell - 1) - pairs(in_class);
        assert!(
            excluded.len() <= bound,
            "pick {} excludes {} points, more than the {bound} pairs that can reach the class",
            self.step,
            excluded.len()
        );
        let p = choose(&mut self.rng, pool, &excluded).ok_or(Error::StuckChoice { step: self.step.to_string() })?;
        Ok((p, excluded))
    }

    /// Adds an independent class after the current sequence. Its first
    /// `ell - 1` points avoid closing a block with the last `ell - 1` placed
    /// points; the rest go in any order. `keep` points are held back (they
    /// are returned for the caller to place).
    fn append_class(&mut self, class: &[Point], keep: usize) -> Result<PointSet> {
        let mut pool: PointSet = class.iter().copied().collect();
        let guarded = (self.ell - 1).min(class.len().saturating_sub(keep));
        for j in 0..guarded {
            let from = self.seq.len().saturating_sub(self.ell - 1);
            let window: Vec<Point> = self.seq.range(from..).copied().collect();
            let (p, excluded) = self.pick(&pool, &window, j.min(window.len()))?;
            pool.remove(p);
            self.record(p, &excluded, true);
        }
        let rest = ordered(&mut self.rng, &pool);
        let (free, held) = rest.split_at(rest.len() - keep.min(rest.len()));
        self.append_free(free);
        Ok(held.iter().copied().collect())
    }

    /// Adds an independent class in front of the current sequence, choosing
    /// its points right to left.
    fn prepend_class(&mut self, class: &[Point]) -> Result<()> {
        let mut pool: PointSet = class.iter().copied().collect();
        let guarded = (self.ell - 1).min(class.len());
        for j in 0..guarded {
            let to = self.seq.len().min(self.ell - 1);
            let window: Vec<Point> = self.seq.range(..to).copied().collect();
            let (p, excluded) = self.pick(&pool, &window, j.min(window.len()))?;
            pool.remove(p);
            self.record(p, &excluded, false);
        }
        for p in ordered(&mut self.rng, &pool) {
            self.record(p, &PointSet::empty(), false);
        }
        Ok(())
    }

    fn finish(self, method: &str, cyclic: bool) -> Result<ConstructionTrace> {
        let order = self.seq.into_iter().collect();
        finish(self.sys, method, order, self.picks, self.ell, cyclic)
    }
}
