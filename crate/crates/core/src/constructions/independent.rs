//! 4-good sequencings from an 8-point independent set.
//!
//! The points outside the set `I` are laid out greedily so that no four
//! consecutive ones contain a block, leaving three of them `x, y, z` aside.
//! One of those goes in front, the other two at the very end, and the eight
//! points of `I` fill the gap:
//!
//! ```text
//! z, a, b, c, d, e, f, ..., p, q, r, s, t, u, *, *, g, h, w, x, y
//! ```
//!
//! `s, t, u` are chosen left to right and `w, h, g` right to left, each
//! avoiding the thirds of the pairs it could complete a block with. The
//! counting bounds on the number of choices are asserted as the slots fill.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::structure::IndependentSet;
use crate::system::{Point, PointSet, Sequencing, TripleSystem};

use super::{choose, finish, ConstructionTrace};

pub fn independent_set_4good(sys: &TripleSystem, indep: &IndependentSet) -> Result<Sequencing> {
    independent_set_traced(sys, indep, None).map(|t| t.sequencing)
}

struct Picker<'a> {
    sys: &'a TripleSystem,
    rng: Option<ChaCha8Rng>,
    picks: Vec<(Point, Vec<Point>)>,
    step: usize,
}

impl Picker<'_> {
    /// Chooses from `pool` minus the thirds of `pairs`, asserting that at
    /// least `at_least` choices remain.
    fn pick(&mut self, pool: &mut PointSet, pairs: &[(Point, Point)], at_least: usize, slot: &str) -> Result<Point> {
        let excluded: PointSet = pairs.iter().map(|&(a, b)| self.sys.third(a, b)).collect();
        let excluded = excluded.intersection(pool);
        let available = pool.len() - excluded.len();
        assert!(available >= at_least, "slot {slot}: {available} choices, counting promises {at_least}");
        let p = choose(&mut self.rng, pool, &excluded).ok_or_else(|| Error::StuckChoice { step: slot.to_string() })?;
        pool.remove(p);
        self.picks.push((p, excluded.iter().collect()));
        self.step += 1;
        Ok(p)
    }
}

/// As [`independent_set_4good`]; arbitrary choices are lowest-index unless
/// `seed` is given.
pub fn independent_set_traced(
    sys: &TripleSystem,
    indep: &IndependentSet,
    seed: Option<u64>,
) -> Result<ConstructionTrace> {
    let v = sys.order();
    if v < 19 {
        return Err(Error::PreconditionFailed(format!("needs v >= 19, got {v}")));
    }
    if indep.len() != 8 || !sys.is_independent(indep.points()) {
        return Err(Error::PreconditionFailed(format!(
            "needs an independent set of 8 points, got {} points",
            indep.len()
        )));
    }
    let mut pk = Picker { sys, rng: seed.map(ChaCha8Rng::seed_from_u64), picks: Vec::new(), step: 0 };
    let mut t_pool = PointSet::full(v).difference(indep.points());
    let in_t = t_pool;

    // a, then a block {a, b, e} inside T: at most 8 of the blocks through a
    // meet I, and a lies on (v-1)/2 >= 9 blocks.
    let a = pk.pick(&mut t_pool, &[], 1, "a")?;
    let inside: Vec<(Point, Point)> =
        sys.pencil(a).into_iter().filter(|&(x, y)| in_t.contains(x) && in_t.contains(y)).collect();
    assert!(!inside.is_empty(), "no block through {a} avoids the independent set");
    let (b, e) = match pk.rng.as_mut() {
        None => *inside.iter().min().expect("nonempty"),
        Some(r) => *rand::seq::SliceRandom::choose(inside.as_slice(), r).expect("nonempty"),
    };
    t_pool.remove(b);
    t_pool.remove(e);
    pk.picks.push((b, Vec::new()));
    pk.step += 1;
    let c = pk.pick(&mut t_pool, &[], 1, "c")?;
    let d = pk.pick(&mut t_pool, &[(a, c), (b, c), (c, e)], 1, "d")?;
    pk.picks.push((e, Vec::new()));
    pk.step += 1;
    let mut head = vec![a, b, c, d, e];

    // Greedy run while at least four points of T remain.
    while t_pool.len() > 3 {
        let n = head.len();
        let (p, q, r) = (head[n - 3], head[n - 2], head[n - 1]);
        let next = pk.pick(&mut t_pool, &[(p, q), (p, r), (q, r)], 1, "run")?;
        head.push(next);
    }
    let n = head.len();
    let (p, q, r) = (head[n - 3], head[n - 2], head[n - 1]);

    // a.b = e is already placed, so only a.c and b.c can rule out the front slot.
    let z = pk.pick(&mut t_pool, &[(a, b), (a, c), (b, c)], 1, "z")?;
    let x = pk.pick(&mut t_pool, &[], 1, "x")?;
    let y = pk.pick(&mut t_pool, &[], 1, "y")?;
    debug_assert!(t_pool.is_empty());

    let mut i_pool = *indep.points();
    let s = pk.pick(&mut i_pool, &[(p, q), (p, r), (q, r)], 5, "s")?;
    let t = pk.pick(&mut i_pool, &[(q, r), (q, s), (r, s)], 4, "t")?;
    let u = pk.pick(&mut i_pool, &[(r, s), (r, t), (s, t)], 4, "u")?;
    let w = pk.pick(&mut i_pool, &[(x, y)], 4, "w")?;
    let h = pk.pick(&mut i_pool, &[(x, y), (w, y), (w, x)], 1, "h")?;
    let g = pk.pick(&mut i_pool, &[(h, w), (h, x), (w, x)], 1, "g")?;
    let m1 = pk.pick(&mut i_pool, &[], 1, "gap")?;
    let m2 = pk.pick(&mut i_pool, &[], 1, "gap")?;

    let mut order = Vec::with_capacity(v);
    order.push(z);
    order.extend(&head);
    order.extend([s, t, u, m1, m2, g, h, w, x, y]);
    finish(sys, "independent-set", order, pk.picks, 4, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin_system, fano, random_system};
    use crate::structure::find_independent_set;
    use crate::system::is_ell_good;

    #[test]
    fn cyclic_21s() {
        for id in ["C1", "C2", "C3", "C4", "C5", "C6", "C7"] {
            let s = builtin_system(id).unwrap();
            let i = find_independent_set(&s, 8).unwrap();
            let t = independent_set_traced(&s, &i, None).unwrap();
            assert!(is_ell_good(&s, &t.sequencing, 4, false).unwrap(), "{id}");
            assert_eq!(t.replay().unwrap(), t.sequencing);
            for seed in 0..10 {
                let t = independent_set_traced(&s, &i, Some(seed)).unwrap();
                assert!(is_ell_good(&s, &t.sequencing, 4, false).unwrap(), "{id} seed {seed}");
            }
        }
    }

    #[test]
    fn random_21s() {
        for seed in 0..20 {
            let s = random_system(21, seed).unwrap();
            let i = find_independent_set(&s, 8).expect("every STS(21) has an 8-point independent set");
            let seq = independent_set_4good(&s, &i).unwrap();
            assert!(is_ell_good(&s, &seq, 4, false).unwrap());
        }
    }

    #[test]
    fn larger_orders() {
        for (v, seed) in [(19, 1), (25, 2), (27, 3), (33, 4), (45, 5)] {
            let s = random_system(v, seed).unwrap();
            if let Some(i) = find_independent_set(&s, 8) {
                let seq = independent_set_4good(&s, &i).unwrap();
                assert!(is_ell_good(&s, &seq, 4, false).unwrap(), "v {v}");
            }
        }
    }

    #[test]
    fn preconditions() {
        let f = fano();
        let i = IndependentSet::new(&f, [0, 1].into_iter().collect()).unwrap();
        assert!(matches!(independent_set_4good(&f, &i), Err(Error::PreconditionFailed(_))));
        let a2 = builtin_system("A2").unwrap();
        let seven = find_independent_set(&a2, 7).unwrap();
        assert!(matches!(independent_set_4good(&a2, &seven), Err(Error::PreconditionFailed(_))));
    }
}
