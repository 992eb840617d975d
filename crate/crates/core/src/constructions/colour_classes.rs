//! `ell`-good sequencings that list the colour classes one after another.
//!
//! Only the first `ell - 1` points of each class can share a window with the
//! previous class, so those are picked greedily; with at least
//! `c = (ell^2 - 3 ell + 6) / 2` points in the class a choice always exists.
//! The smallest class goes first and is exempt. In cyclic mode the largest
//! class goes last and its final `ell - 1` points are also picked, right to
//! left, against the start of the sequence.

use crate::bounds::colour_class_threshold;
use crate::error::{Error, Result};
use crate::structure::Colouring;
use crate::system::{Point, PointSet, Sequencing, TripleSystem};

use super::{Builder, ConstructionTrace};

pub fn colour_class_ell_good(
    sys: &TripleSystem,
    colouring: &Colouring,
    ell: usize,
    cyclic: bool,
) -> Result<Sequencing> {
    colour_class_traced(sys, colouring, ell, cyclic, None).map(|t| t.sequencing)
}

/// Classes are used smallest first, largest last.
pub fn colour_class_traced(
    sys: &TripleSystem,
    colouring: &Colouring,
    ell: usize,
    cyclic: bool,
    seed: Option<u64>,
) -> Result<ConstructionTrace> {
    if ell < 3 {
        return Err(Error::InvalidParameter(format!("ell must be at least 3, got {ell}")));
    }
    let c = colour_class_threshold(ell);
    let mut classes: Vec<&[Point]> = colouring.classes().iter().map(Vec::as_slice).collect();
    classes.reverse();
    for class in &classes[1..] {
        if class.len() < c {
            return Err(Error::ClassTooSmall { size: class.len(), required: c });
        }
    }
    let last = classes.len() - 1;
    if cyclic {
        if last == 0 {
            return Err(Error::PreconditionFailed("cyclic mode needs at least two colour classes".into()));
        }
        if classes[last].len() < c + ell - 1 {
            return Err(Error::ClassTooSmall { size: classes[last].len(), required: c + ell - 1 });
        }
    }

    let mut b = Builder::new(sys, ell, seed);
    b.append_free(classes[0]);
    for (i, class) in classes.iter().enumerate().skip(1) {
        let keep = if cyclic && i == last { ell - 1 } else { 0 };
        let held = b.append_class(class, keep)?;
        if keep > 0 {
            close_cycle(&mut b, held)?;
        }
    }
    b.finish("colour-classes", cyclic)
}

/// Places `held` at the end, choosing from the last slot backwards so that
/// no window wrapping round to the start closes a block.
fn close_cycle(b: &mut Builder<'_>, mut pool: PointSet) -> Result<()> {
    let n = pool.len();
    let head: Vec<Point> = b.seq.iter().take(b.ell - 1).copied().collect();
    let mut tail: Vec<Point> = Vec::with_capacity(n);
    let mut picks = Vec::with_capacity(n);
    for j in 0..n {
        // The ell - 1 points after this slot, cyclically.
        let window: Vec<Point> = tail.iter().rev().chain(head.iter()).take(b.ell - 1).copied().collect();
        let (p, excluded) = b.pick(&pool, &window, j.min(window.len()))?;
        pool.remove(p);
        tail.push(p);
        picks.push((p, excluded.iter().collect::<Vec<_>>()));
    }
    for (p, excluded) in picks.into_iter().rev() {
        b.seq.push_back(p);
        b.picks.push((p, excluded));
        b.step += 1;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin_system, fano, random_system};
    use crate::structure::proper_colouring;
    use crate::system::is_ell_good;

    #[test]
    fn v19_route() {
        for id in ["A1", "A2", "A3", "A4"] {
            let s = builtin_system(id).unwrap();
            let col = proper_colouring(&s, 3, Some(&[7, 6, 6])).unwrap().unwrap();
            let t = colour_class_traced(&s, &col, 4, false, None).unwrap();
            assert!(is_ell_good(&s, &t.sequencing, 4, false).unwrap(), "{id}");
            assert_eq!(t.replay().unwrap(), t.sequencing);
            for seed in 0..10 {
                let seq = colour_class_traced(&s, &col, 4, false, Some(seed)).unwrap().sequencing;
                assert!(is_ell_good(&s, &seq, 4, false).unwrap());
            }
        }
    }

    #[test]
    fn equitable_21_is_too_small_for_5() {
        let s = builtin_system("C3").unwrap();
        let col = proper_colouring(&s, 3, Some(&[7, 7, 7])).unwrap().unwrap();
        assert!(matches!(
            colour_class_ell_good(&s, &col, 5, false),
            Err(Error::ClassTooSmall { size: 7, required: 8 })
        ));
    }

    #[test]
    fn ell_3_any_colouring() {
        for seed in 0..10 {
            let s = random_system(15, seed).unwrap();
            let col = proper_colouring(&s, 3, None).unwrap().unwrap();
            if col.classes().iter().all(|c| c.len() >= 3) {
                let seq = colour_class_ell_good(&s, &col, 3, false).unwrap();
                assert!(is_ell_good(&s, &seq, 3, false).unwrap());
            }
        }
        let f = fano();
        let col = proper_colouring(&f, 3, Some(&[3, 2, 2])).unwrap().unwrap();
        assert!(matches!(colour_class_ell_good(&f, &col, 3, false), Err(Error::ClassTooSmall { .. })));
    }

    #[test]
    fn cyclic_needs_a_large_last_class() {
        // (ell^2 - ell + 4) / 2 = 5 for ell = 3: a 5-point last class suffices.
        let s = builtin_system("A1").unwrap();
        let col = proper_colouring(&s, 3, Some(&[7, 6, 6])).unwrap().unwrap();
        let seq = colour_class_ell_good(&s, &col, 3, true).unwrap();
        assert!(is_ell_good(&s, &seq, 3, true).unwrap());
        assert!(matches!(colour_class_ell_good(&s, &col, 4, true), Err(Error::ClassTooSmall { size: 7, required: 8 })));
        for seed in 0..10 {
            let s = random_system(45, seed).unwrap();
            let Some(col) = proper_colouring(&s, 3, Some(&[16, 15, 14])).unwrap() else { continue };
            let seq = colour_class_ell_good(&s, &col, 5, true).unwrap();
            assert!(is_ell_good(&s, &seq, 5, true).unwrap());
        }
    }
}
