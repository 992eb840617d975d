use crate::error::{Error, Result};
use crate::system::{Block, Point, Sequencing, TripleSystem};

use super::{finish, ConstructionTrace};

/// Relabels the points `1..=v` so that the blocks through label 1 are
/// `{1,2,v}, {1,3,4}, ..., {1,v-2,v-1}`.
///
/// Point 0 gets label 1, the lowest pair through it gets 2 and `v`, and the
/// remaining pairs get consecutive labels in ascending order. Returns the
/// point carrying each label (index 0 is label 1).
fn relabel(sys: &TripleSystem) -> Vec<Point> {
    let v = sys.order();
    let mut pencil = sys.pencil(0);
    pencil.sort_unstable();
    let mut by_label = vec![0; v];
    let (first, rest) = pencil.split_first().expect("every point lies in a block");
    by_label[1] = first.0;
    by_label[v - 1] = first.1;
    for (i, &(x, y)) in rest.iter().enumerate() {
        by_label[2 + 2 * i] = x;
        by_label[3 + 2 * i] = y;
    }
    by_label
}

/// A 3-good sequencing, or a cyclically 3-good one when `cyclic` is set.
pub fn colbourn_3good(sys: &TripleSystem, cyclic: bool) -> Result<Sequencing> {
    colbourn_traced(sys, cyclic).map(|t| t.sequencing)
}

pub fn colbourn_traced(sys: &TripleSystem, cyclic: bool) -> Result<ConstructionTrace> {
    let v = sys.order();
    if v < 7 {
        return Err(Error::PreconditionFailed(format!("relabelling needs v >= 7, got {v}")));
    }
    let mut by_label = relabel(sys);
    let label = |l: usize| l - 1;
    let order = if cyclic {
        let has = |by_label: &[Point], a, b, c| {
            sys.contains_block(&Block::new(by_label[label(a)], by_label[label(b)], by_label[label(c)]))
        };
        if has(&by_label, 2, 4, 5) {
            by_label.swap(label(5), label(6));
        }
        let mut order = by_label.clone();
        order.swap(1, 2);
        order
    } else {
        by_label
    };
    let picks = order.iter().map(|&p| (p, Vec::new())).collect();
    finish(sys, "colbourn", order, picks, 3, cyclic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin_system, fano, random_system, Catalog};
    use crate::system::{goodness_report, is_ell_good};

    #[test]
    fn relabelling_shape() {
        let s = builtin_system("STS13-1").unwrap();
        let l = relabel(&s);
        let v = 13;
        assert_eq!(l[0], 0);
        assert!(s.contains_block(&Block::new(l[0], l[1], l[v - 1])));
        for i in (2..v - 1).step_by(2) {
            assert!(s.contains_block(&Block::new(l[0], l[i], l[i + 1])));
        }
    }

    #[test]
    fn fano_and_sts9_cyclic() {
        for s in [fano(), builtin_system("STS9").unwrap()] {
            let seq = colbourn_3good(&s, true).unwrap();
            assert!(is_ell_good(&s, &seq, 3, true).unwrap());
        }
    }

    #[test]
    fn every_builtin_both_modes() {
        for id in Catalog::builtin_ids() {
            let s = builtin_system(&id).unwrap();
            for cyclic in [false, true] {
                let t = colbourn_traced(&s, cyclic).unwrap();
                assert!(is_ell_good(&s, &t.sequencing, 3, cyclic).unwrap(), "{id}");
                assert_eq!(t.replay().unwrap(), t.sequencing);
            }
        }
        let s = builtin_system("STS13-1").unwrap();
        let seq = colbourn_3good(&s, false).unwrap();
        assert!(goodness_report(&s, &seq).unwrap().max_linear_ell >= 3);
    }

    #[test]
    fn random_systems_cyclic() {
        for v in [7, 9, 13, 15, 19, 21, 25, 27, 31] {
            for seed in 0..5 {
                let s = random_system(v, seed).unwrap();
                let seq = colbourn_3good(&s, true).unwrap();
                assert!(is_ell_good(&s, &seq, 3, true).unwrap(), "v {v} seed {seed}");
            }
        }
    }

    #[test]
    fn too_small() {
        let s = TripleSystem::new(3, [Block::new(0, 1, 2)]).unwrap();
        assert!(matches!(colbourn_3good(&s, false), Err(Error::PreconditionFailed(_))));
    }
}
