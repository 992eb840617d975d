use crate::error::{Error, Result};
use crate::system::{Point, PointSet, TripleSystem};

/// A partition of the points into independent classes.
///
/// Classes are kept in non-increasing size order (ties by least point), so
/// `profile()` lines up with `classes()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    classes: Vec<Vec<Point>>,
}

impl Colouring {
    pub fn new(sys: &TripleSystem, mut classes: Vec<Vec<Point>>) -> Result<Self> {
        let mut seen = PointSet::empty();
        for class in &mut classes {
            class.sort_unstable();
            for &p in class.iter() {
                if p as usize >= sys.order() {
                    return Err(Error::OutOfRange { point: p as usize, v: sys.order() });
                }
                if seen.contains(p) {
                    return Err(Error::PreconditionFailed(format!("point {p} in two colour classes")));
                }
                seen.insert(p);
            }
        }
        if seen.len() != sys.order() {
            return Err(Error::PreconditionFailed("colour classes do not cover every point".into()));
        }
        classes.retain(|c| !c.is_empty());
        for class in &classes {
            let set: PointSet = class.iter().copied().collect();
            if let Some(b) = sys.blocks().iter().find(|b| b.points().iter().all(|&p| set.contains(p))) {
                return Err(Error::ImproperColouring(*b));
            }
        }
        classes.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        Ok(Colouring { classes })
    }

    pub fn classes(&self) -> &[Vec<Point>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn profile(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Class index of every point.
    pub fn class_of(&self, v: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; v];
        for (i, class) in self.classes.iter().enumerate() {
            for &p in class {
                out[p as usize] = i;
            }
        }
        out
    }

    pub fn is_equitable(&self) -> bool {
        let p = self.profile();
        p.first().zip(p.last()).is_none_or(|(a, b)| a - b <= 1)
    }
}

struct ColourSearch<'a> {
    sys: &'a TripleSystem,
    pencils: Vec<Vec<(Point, Point)>>,
    k: usize,
    capacity: Vec<usize>,
    colour: Vec<u8>,
    size: Vec<usize>,
    /// `blocked[p * k + c]`: blocks through `p` whose other two points have colour `c`.
    blocked: Vec<u16>,
    /// Blocks through `p` with at least one coloured point.
    touched: Vec<u16>,
}

const UNCOLOURED: u8 = u8::MAX;

impl ColourSearch<'_> {
    fn allowed(&self, p: Point, c: usize) -> bool {
        self.size[c] < self.capacity[c] && self.blocked[p as usize * self.k + c] == 0
    }

    fn assign(&mut self, x: Point, c: usize, delta: i32) {
        let apply = |v: &mut u16| *v = (*v as i32 + delta) as u16;
        for i in 0..self.pencils[x as usize].len() {
            let (y, z) = self.pencils[x as usize][i];
            for (a, b) in [(y, z), (z, y)] {
                if self.colour[b as usize] == UNCOLOURED {
                    apply(&mut self.touched[b as usize]);
                    if self.colour[a as usize] == c as u8 {
                        apply(&mut self.blocked[b as usize * self.k + c]);
                    }
                }
            }
        }
        if delta > 0 {
            self.colour[x as usize] = c as u8;
            self.size[c] += 1;
        } else {
            self.colour[x as usize] = UNCOLOURED;
            self.size[c] -= 1;
        }
    }

    /// Most constrained uncoloured point: fewest allowed colours, then most
    /// touched blocks, then least index.
    fn next_point(&self) -> Option<(Point, usize)> {
        self.sys
            .points()
            .filter(|&p| self.colour[p as usize] == UNCOLOURED)
            .map(|p| {
                let options = (0..self.k).filter(|&c| self.allowed(p, c)).count();
                (p, options)
            })
            .min_by_key(|&(p, options)| (options, std::cmp::Reverse(self.touched[p as usize]), p))
    }

    fn solve(&mut self) -> bool {
        let Some((p, options)) = self.next_point() else {
            return true;
        };
        if options == 0 {
            return false;
        }
        for c in 0..self.k {
            if !self.allowed(p, c) {
                continue;
            }
            // Unused colours of equal capacity are interchangeable.
            let redundant =
                self.size[c] == 0 && (0..c).any(|d| self.size[d] == 0 && self.capacity[d] == self.capacity[c]);
            if redundant {
                continue;
            }
            self.assign(p, c, 1);
            if self.solve() {
                return true;
            }
            self.assign(p, c, -1);
        }
        false
    }
}

/// Exact search for a proper colouring with `k` classes, optionally with the
/// given class sizes. `Ok(None)` proves none exists.
pub fn proper_colouring(sys: &TripleSystem, k: usize, profile: Option<&[usize]>) -> Result<Option<Colouring>> {
    let v = sys.order();
    if !(1..=32).contains(&k) {
        return Err(Error::InvalidParameter(format!("colour count {k} out of range")));
    }
    let capacity = match profile {
        Some(p) if p.len() != k || p.iter().sum::<usize>() != v => {
            return Err(Error::InvalidParameter(format!("profile {p:?} must have {k} parts summing to {v}")));
        }
        Some(p) => p.to_vec(),
        None => vec![v; k],
    };
    let mut search = ColourSearch {
        sys,
        pencils: sys.points().map(|p| sys.pencil(p)).collect(),
        k,
        capacity,
        colour: vec![UNCOLOURED; v],
        size: vec![0; k],
        blocked: vec![0; v * k],
        touched: vec![0; v],
    };
    if !search.solve() {
        return Ok(None);
    }
    let mut classes = vec![Vec::new(); k];
    for p in sys.points() {
        classes[search.colour[p as usize] as usize].push(p);
    }
    Colouring::new(sys, classes).map(Some)
}

/// Least number of colours in a proper colouring.
pub fn chromatic_number(sys: &TripleSystem) -> usize {
    (1..=sys.order())
        .find(|&k| matches!(proper_colouring(sys, k, None), Ok(Some(_))))
        .expect("colouring every point differently is proper")
}
