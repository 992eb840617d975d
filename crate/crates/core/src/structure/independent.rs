use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::system::{Point, PointSet, TripleSystem};

/// A point set containing no block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    points: PointSet,
}

impl IndependentSet {
    /// Checks independence against `sys`.
    pub fn new(sys: &TripleSystem, points: PointSet) -> Option<Self> {
        sys.is_independent(&points).then_some(IndependentSet { points })
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Every point outside is the third point of a pair inside.
    pub fn is_maximal(&self, sys: &TripleSystem) -> bool {
        let closed = closure_targets(sys, &self.points);
        sys.points().all(|p| self.points.contains(p) || closed.contains(p))
    }
}

fn closure_targets(sys: &TripleSystem, set: &PointSet) -> PointSet {
    let pts: Vec<Point> = set.iter().collect();
    let mut out = PointSet::empty();
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            out.insert(sys.third(a, b));
        }
    }
    out
}

/// Adds points in a seeded random order whenever no block is completed.
///
/// The result is maximal, so its size `m` satisfies `m(m+1)/2 >= v`.
pub fn greedy_maximal_independent(sys: &TripleSystem, order_seed: u64) -> IndependentSet {
    let mut order: Vec<Point> = sys.points().collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(order_seed));
    let mut chosen = PointSet::empty();
    let mut forbidden = PointSet::empty();
    for p in order {
        if forbidden.contains(p) {
            continue;
        }
        for q in chosen.iter() {
            forbidden.insert(sys.third(p, q));
        }
        chosen.insert(p);
    }
    let set = IndependentSet { points: chosen };
    debug_assert!(sys.is_independent(&set.points) && set.is_maximal(sys));
    set
}

/// Exact search for an independent set of size `k`; `None` proves there is none.
///
/// Points are added in ascending order. Choosing `p` forbids `p.q` for every
/// chosen `q`, and a branch is cut once chosen plus still-allowed candidates
/// cannot reach `k`.
pub fn find_independent_set(sys: &TripleSystem, k: usize) -> Option<IndependentSet> {
    fn extend(sys: &TripleSystem, k: usize, chosen: &mut Vec<Point>, candidates: PointSet) -> bool {
        if chosen.len() == k {
            return true;
        }
        if chosen.len() + candidates.len() < k {
            return false;
        }
        let mut rest = candidates;
        for p in candidates.iter() {
            rest.remove(p);
            if chosen.len() + 1 + rest.len() < k {
                return false;
            }
            let mut next = rest;
            for &q in chosen.iter() {
                next.remove(sys.third(p, q));
            }
            chosen.push(p);
            if extend(sys, k, chosen, next) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let mut chosen = Vec::with_capacity(k);
    if !extend(sys, k, &mut chosen, PointSet::full(sys.order())) {
        return None;
    }
    let set = IndependentSet::new(sys, chosen.into_iter().collect());
    assert!(set.is_some(), "independent-set search returned a set containing a block");
    set
}
