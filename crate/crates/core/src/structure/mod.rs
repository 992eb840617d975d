//! Independent sets, colourings, subsystems and cross-class block counts.

mod colouring;
mod independent;

pub use colouring::{chromatic_number, proper_colouring, Colouring};
pub use independent::{find_independent_set, greedy_maximal_independent, IndependentSet};

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::system::{Point, PointSet, TripleSystem};

/// Outcome of the class-size filter for 3-colourings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Feasibility {
    pub feasible: bool,
    pub reason: Option<String>,
}

/// Necessary conditions on the class sizes `c1 >= c2 >= c3` of a proper
/// 3-colouring of an STS(v): the sizes sum to `v`,
/// `v >= ((c1-c2)^2 + (c2-c3)^2 + (c3-c1)^2) / 2`, and `c1 <= (v-1)/2`.
pub fn profile_feasible(v: usize, (c1, c2, c3): (usize, usize, usize)) -> Feasibility {
    let fail = |r: String| Feasibility { feasible: false, reason: Some(r) };
    if !(c1 >= c2 && c2 >= c3 && c3 >= 1) {
        return fail(format!("({c1},{c2},{c3}) is not a non-increasing positive triple"));
    }
    if c1 + c2 + c3 != v {
        return fail(format!("sizes sum to {}, not {v}", c1 + c2 + c3));
    }
    if 2 * c1 > v - 1 {
        return fail(format!("largest class {c1} exceeds (v-1)/2"));
    }
    let sq = |a: usize, b: usize| a.abs_diff(b).pow(2);
    let spread = sq(c1, c2) + sq(c2, c3) + sq(c3, c1);
    if 2 * v < spread {
        return fail(format!("2v = {} < {spread}", 2 * v));
    }
    Feasibility { feasible: true, reason: None }
}

/// All non-increasing triples that pass [`profile_feasible`].
pub fn feasible_profiles(v: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for c1 in (1..v).rev() {
        for c2 in (1..=c1).rev() {
            let Some(c3) = v.checked_sub(c1 + c2) else { continue };
            if profile_feasible(v, (c1, c2, c3)).feasible {
                out.push((c1, c2, c3));
            }
        }
    }
    out
}

/// Smallest set containing `seed` and closed under `a, b -> a.b`, or `None`
/// once it grows past `limit`.
pub fn closure(sys: &TripleSystem, seed: &PointSet, limit: usize) -> Option<PointSet> {
    let mut set = *seed;
    let mut frontier: Vec<Point> = seed.iter().collect();
    let mut members: Vec<Point> = Vec::new();
    while let Some(p) = frontier.pop() {
        for &q in &members {
            let r = sys.third(p, q);
            if !set.contains(r) {
                set.insert(r);
                if set.len() > limit {
                    return None;
                }
                frontier.push(r);
            }
        }
        members.push(p);
    }
    Some(set)
}

/// Every 7-point subsystem, found by closing each block together with each
/// outside point. Sorted by point set.
pub fn find_sts7_subsystems(sys: &TripleSystem) -> Vec<PointSet> {
    let mut found: BTreeSet<Vec<Point>> = BTreeSet::new();
    for block in sys.blocks() {
        let base: PointSet = block.points().into_iter().collect();
        for x in sys.points().filter(|&x| !base.contains(x)) {
            let mut seed = base;
            seed.insert(x);
            if let Some(s) = closure(sys, &seed, 7).filter(|s| s.len() == 7) {
                found.insert(s.iter().collect());
            }
        }
    }
    found.into_iter().map(|v| v.into_iter().collect()).collect()
}

/// Block tallies across the classes of a proper colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossBlockCounts {
    /// `pair_in[x][y]`: blocks with two points in class `x` and one in class `y`.
    pub pair_in: Vec<Vec<usize>>,
    /// Blocks meeting three different classes.
    pub transversal: usize,
}

impl CrossBlockCounts {
    pub fn total(&self) -> usize {
        self.pair_in.iter().flatten().sum::<usize>() + self.transversal
    }

    /// For an equitable 3-colouring of an STS(21) with classes A, B, C:
    /// `n{AAB} = n{BBC} = n{CCA} = n`, `n{AAC} = n{BBA} = n{CCB} = 21 - n`
    /// and seven transversal blocks. Returns `n`.
    pub fn equitable_21_n(&self) -> Option<usize> {
        if self.pair_in.len() != 3 {
            return None;
        }
        let c = &self.pair_in;
        let n = c[0][1];
        let ok = c[1][2] == n
            && c[2][0] == n
            && c[0][2] == 21 - n.min(21)
            && c[1][0] == 21 - n.min(21)
            && c[2][1] == 21 - n.min(21)
            && self.transversal == 7;
        ok.then_some(n)
    }
}

pub fn cross_block_counts(sys: &TripleSystem, colouring: &Colouring) -> Result<CrossBlockCounts> {
    let class_of = colouring.class_of(sys.order());
    let k = colouring.num_classes();
    let mut pair_in = vec![vec![0; k]; k];
    let mut transversal = 0;
    for b in sys.blocks() {
        let [x, y, z] = b.points().map(|p| class_of[p as usize]);
        match (x == y, y == z, x == z) {
            (true, true, _) => return Err(Error::ImproperColouring(*b)),
            (true, false, _) => pair_in[x][z] += 1,
            (false, true, _) => pair_in[y][x] += 1,
            (false, false, true) => pair_in[x][y] += 1,
            (false, false, false) => transversal += 1,
        }
    }
    Ok(CrossBlockCounts { pair_in, transversal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin_system, fano, projective_system, random_system};
    use itertools::Itertools;

    fn brute_sts7(sys: &TripleSystem) -> Vec<PointSet> {
        (0..sys.order() as Point)
            .combinations(7)
            .map(|c| c.into_iter().collect::<PointSet>())
            .filter(|s| sys.blocks().iter().filter(|b| b.points().iter().all(|&p| s.contains(p))).count() == 7)
            .collect()
    }

    #[test]
    fn profile_lists() {
        assert!(profile_feasible(27, (12, 9, 6)).feasible);
        assert!(profile_feasible(25, (11, 7, 7)).feasible);
        let r = profile_feasible(25, (13, 6, 6));
        assert!(!r.feasible);
        assert!(r.reason.unwrap().contains("(v-1)/2"));
        assert!(!profile_feasible(25, (10, 10, 6)).feasible);
        assert!(!profile_feasible(25, (6, 10, 9)).feasible);
        assert_eq!(
            feasible_profiles(27),
            vec![(12, 9, 6), (12, 8, 7), (11, 10, 6), (11, 9, 7), (11, 8, 8), (10, 10, 7), (10, 9, 8), (9, 9, 9)]
        );
        assert_eq!(
            feasible_profiles(25),
            vec![(11, 8, 6), (11, 7, 7), (10, 10, 5), (10, 9, 6), (10, 8, 7), (9, 9, 7), (9, 8, 8)]
        );
    }

    #[test]
    fn subsystems_match_brute_force() {
        let pg = projective_system(4).unwrap();
        let found = find_sts7_subsystems(&pg);
        assert_eq!(found.len(), 15);
        let mut brute = brute_sts7(&pg);
        brute.sort_by_key(|s| s.iter().collect::<Vec<_>>());
        assert_eq!(found, brute);

        assert!(find_sts7_subsystems(&builtin_system("STS13-1").unwrap()).is_empty());
        assert!(find_sts7_subsystems(&builtin_system("STS13-2").unwrap()).is_empty());
        assert_eq!(find_sts7_subsystems(&fano()).len(), 1);
        for seed in 0..5 {
            let s = random_system(15, seed).unwrap();
            let mut brute = brute_sts7(&s);
            brute.sort_by_key(|s| s.iter().collect::<Vec<_>>());
            assert_eq!(find_sts7_subsystems(&s), brute, "seed {seed}");
        }
    }

    #[test]
    fn counts_for_a1() {
        let a1 = builtin_system("A1").unwrap();
        let c = proper_colouring(&a1, 3, Some(&[7, 6, 6])).unwrap().unwrap();
        let counts = cross_block_counts(&a1, &c).unwrap();
        assert_eq!(counts.total(), 57);
    }

    #[test]
    fn equitable_21_identities() {
        for id in ["C1", "C2", "C3", "C4", "C5", "C6", "C7"] {
            let s = builtin_system(id).unwrap();
            if let Some(c) = proper_colouring(&s, 3, Some(&[7, 7, 7])).unwrap() {
                let counts = cross_block_counts(&s, &c).unwrap();
                assert_eq!(counts.transversal, 7, "{id}");
                assert_eq!(counts.pair_in[0][1] + counts.pair_in[0][2], 21, "{id}");
                assert!(counts.equitable_21_n().is_some(), "{id}");
            }
        }
    }
}
