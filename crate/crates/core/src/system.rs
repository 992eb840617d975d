//! Triple systems, point sequencings and goodness verification.
//!
//! Goodness is measured through block spans: for a sequencing and a block, the
//! span is the length of the shortest window (linear or cyclic) holding all
//! three points. A sequencing is `ell`-good exactly when every block has span
//! greater than `ell`, so one pass over the blocks yields both the verdict and
//! the best `ell` together with a witness block.

use std::fmt;

use crate::error::{Error, Result};

/// A point index, `0 <= p < v`.
pub type Point = u8;

/// Largest order representable with [`Point`] (255 is kept as a sentinel).
pub const MAX_ORDER: usize = 255;

/// A block: three distinct points stored in ascending order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block([Point; 3]);

impl Block {
    /// Canonicalises the three points into ascending order.
    pub fn new(a: Point, b: Point, c: Point) -> Self {
        let mut p = [a, b, c];
        p.sort_unstable();
        Block(p)
    }

    pub fn points(&self) -> [Point; 3] {
        self.0
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0.contains(&p)
    }

    pub fn is_degenerate(&self) -> bool {
        self.0[0] == self.0[1] || self.0[1] == self.0[2]
    }

    /// The block shifted by `k` modulo `v`.
    pub fn translate(&self, k: usize, v: usize) -> Self {
        let [a, b, c] = self.0.map(|x| ((x as usize + k) % v) as Point);
        Block::new(a, b, c)
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// Fixed-capacity bit set over points.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Debug)]
pub struct PointSet([u64; 4]);

impl PointSet {
    pub const fn empty() -> Self {
        PointSet([0; 4])
    }

    /// The set `{0, .., v-1}`.
    pub fn full(v: usize) -> Self {
        let mut s = Self::empty();
        for p in 0..v {
            s.insert(p as Point);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, p: Point) {
        self.0[(p >> 6) as usize] |= 1u64 << (p & 63);
    }

    #[inline]
    pub fn remove(&mut self, p: Point) {
        self.0[(p >> 6) as usize] &= !(1u64 << (p & 63));
    }

    #[inline]
    pub fn contains(&self, p: Point) -> bool {
        self.0[(p >> 6) as usize] >> (p & 63) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a |= b;
        }
        out
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a &= !b;
        }
        out
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a &= b;
        }
        out
    }

    /// Ascending iteration.
    pub fn iter(&self) -> impl Iterator<Item = Point> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros();
                bits &= bits - 1;
                Some((w as u32 * 64 + tz) as Point)
            })
        })
    }

    pub fn first(&self) -> Option<Point> {
        self.iter().next()
    }
}

impl FromIterator<Point> for PointSet {
    fn from_iter<I: IntoIterator<Item = Point>>(iter: I) -> Self {
        let mut s = PointSet::empty();
        for p in iter {
            s.insert(p);
        }
        s
    }
}

const NO_POINT: Point = Point::MAX;

/// A validated Steiner triple system on the points `0..v`.
///
/// Immutable after construction; the quasigroup table `third(a, b)` is
/// populated for every pair of distinct points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSystem {
    v: usize,
    blocks: Vec<Block>,
    third: Vec<Point>,
}

/// Checks `v = 1, 3 (mod 6)` within the supported range.
pub fn check_order(v: usize) -> Result<()> {
    if !(3..=MAX_ORDER).contains(&v) || !matches!(v % 6, 1 | 3) {
        return Err(Error::BadOrder(v));
    }
    Ok(())
}

impl TripleSystem {
    /// Validates `blocks` as an STS(v) and builds the third-point table.
    /// Blocks are stored sorted.
    pub fn new(v: usize, blocks: impl IntoIterator<Item = Block>) -> Result<Self> {
        check_order(v)?;
        let mut blocks: Vec<Block> = blocks.into_iter().collect();
        let mut third = vec![NO_POINT; v * v];
        let mut cover = vec![0usize; v * v];
        for b in &blocks {
            let [x, y, z] = b.points();
            if let Some(&p) = [x, y, z].iter().find(|&&p| p as usize >= v) {
                return Err(Error::OutOfRange { point: p as usize, v });
            }
            if b.is_degenerate() {
                return Err(Error::DegenerateBlock(b.to_string()));
            }
            for (p, q, r) in [(x, y, z), (x, z, y), (y, z, x)] {
                let (p, q) = (p as usize, q as usize);
                cover[p * v + q] += 1;
                cover[q * v + p] += 1;
                third[p * v + q] = r;
                third[q * v + p] = r;
            }
        }
        for a in 0..v {
            for b in a + 1..v {
                let count = cover[a * v + b];
                if count != 1 {
                    return Err(Error::NotAnSts { a: a as Point, b: b as Point, count });
                }
            }
        }
        blocks.sort_unstable();
        Ok(TripleSystem { v, blocks, third })
    }

    pub fn order(&self) -> usize {
        self.v
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn points(&self) -> impl Iterator<Item = Point> {
        (0..self.v).map(|p| p as Point)
    }

    /// `a.b`: the third point of the block through `a` and `b`.
    pub fn third_point(&self, a: Point, b: Point) -> Result<Point> {
        for p in [a, b] {
            if p as usize >= self.v {
                return Err(Error::OutOfRange { point: p as usize, v: self.v });
            }
        }
        if a == b {
            return Err(Error::SamePoint(a));
        }
        Ok(self.third(a, b))
    }

    /// Unchecked `a.b` for hot loops; `a != b`, both in range.
    #[inline]
    pub fn third(&self, a: Point, b: Point) -> Point {
        debug_assert_ne!(a, b);
        self.third[a as usize * self.v + b as usize]
    }

    pub fn contains_block(&self, block: &Block) -> bool {
        let [a, b, c] = block.points();
        (c as usize) < self.v && a != b && self.third(a, b) == c
    }

    /// True when `set` contains no block.
    pub fn is_independent(&self, set: &PointSet) -> bool {
        let pts: Vec<Point> = set.iter().collect();
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                if set.contains(self.third(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Blocks through `p`, as the other two points.
    pub fn pencil(&self, p: Point) -> Vec<(Point, Point)> {
        self.blocks
            .iter()
            .filter(|b| b.contains(p))
            .map(|b| {
                let [x, y, z] = b.points();
                match (x == p, y == p) {
                    (true, _) => (y, z),
                    (_, true) => (x, z),
                    _ => (x, y),
                }
            })
            .collect()
    }
}

/// A permutation of the points `0..v`, with its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequencing {
    order: Vec<Point>,
    position: Vec<usize>,
}

impl Sequencing {
    pub fn new(order: Vec<Point>) -> Result<Self> {
        let v = order.len();
        if v > MAX_ORDER {
            return Err(Error::NotAPermutation { v, detail: "too many points".into() });
        }
        let mut position = vec![usize::MAX; v];
        for (i, &p) in order.iter().enumerate() {
            let p = p as usize;
            if p >= v {
                return Err(Error::NotAPermutation { v, detail: format!("point {p} out of range") });
            }
            if position[p] != usize::MAX {
                return Err(Error::NotAPermutation { v, detail: format!("point {p} repeated") });
            }
            position[p] = i;
        }
        Ok(Sequencing { order, position })
    }

    pub fn identity(v: usize) -> Self {
        Self::new((0..v).map(|p| p as Point).collect()).expect("identity is a permutation")
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn as_slice(&self) -> &[Point] {
        &self.order
    }

    pub fn position(&self, p: Point) -> usize {
        self.position[p as usize]
    }

    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        Self::new(order).expect("reversal preserves permutations")
    }

    pub fn rotated(&self, k: usize) -> Self {
        let mut order = self.order.clone();
        let n = order.len();
        if n > 0 {
            order.rotate_left(k % n);
        }
        Self::new(order).expect("rotation preserves permutations")
    }
}

impl fmt::Display for Sequencing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.order.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Length of the shortest window of `seq` holding all points of `block`.
///
/// Linear: `p3 - p1 + 1` for sorted positions. Cyclic: `v` minus the largest
/// of the three cyclic gaps, plus one.
pub fn block_span(seq: &Sequencing, block: &Block, cyclic: bool) -> usize {
    let v = seq.len();
    let mut pos = block.points().map(|p| seq.position(p));
    pos.sort_unstable();
    if !cyclic {
        return pos[2] - pos[0] + 1;
    }
    let largest_gap = (pos[1] - pos[0]).max(pos[2] - pos[1]).max(v - pos[2] + pos[0]);
    v - largest_gap + 1
}

fn check_len(sys: &TripleSystem, seq: &Sequencing) -> Result<()> {
    if sys.order() != seq.len() {
        return Err(Error::LengthMismatch { expected: sys.order(), got: seq.len() });
    }
    Ok(())
}

/// Block of minimal span and that span.
fn min_span(sys: &TripleSystem, seq: &Sequencing, cyclic: bool) -> Option<(usize, Block)> {
    sys.blocks().iter().map(|b| (block_span(seq, b, cyclic), *b)).min_by_key(|&(s, b)| (s, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EllCheck {
    Good,
    /// A block of minimal span, which lies within some window of length `ell`.
    Violated(Block),
}

impl EllCheck {
    pub fn is_good(&self) -> bool {
        matches!(self, EllCheck::Good)
    }
}

/// Whether no `ell` consecutive points (cyclically, if requested) contain a block.
pub fn check_ell_good(sys: &TripleSystem, seq: &Sequencing, ell: usize, cyclic: bool) -> Result<EllCheck> {
    check_len(sys, seq)?;
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("ell must be at least 2, got {ell}")));
    }
    Ok(match min_span(sys, seq, cyclic) {
        Some((span, block)) if span <= ell => EllCheck::Violated(block),
        _ => EllCheck::Good,
    })
}

pub fn is_ell_good(sys: &TripleSystem, seq: &Sequencing, ell: usize, cyclic: bool) -> Result<bool> {
    check_ell_good(sys, seq, ell, cyclic).map(|c| c.is_good())
}

/// Best linear and cyclic `ell` attained by one sequencing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoodnessReport {
    pub max_linear_ell: usize,
    pub max_cyclic_ell: usize,
    pub witness_linear: Option<Block>,
    pub witness_cyclic: Option<Block>,
}

pub fn goodness_report(sys: &TripleSystem, seq: &Sequencing) -> Result<GoodnessReport> {
    check_len(sys, seq)?;
    let lin = min_span(sys, seq, false);
    let cyc = min_span(sys, seq, true);
    // Two points never hold a block, so every sequencing is 2-good.
    let best = |s: Option<(usize, Block)>| s.map_or(sys.order(), |(span, _)| span - 1).max(2);
    Ok(GoodnessReport {
        max_linear_ell: best(lin),
        max_cyclic_ell: best(cyc),
        witness_linear: lin.map(|(_, b)| b),
        witness_cyclic: cyc.map(|(_, b)| b),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fano() -> TripleSystem {
        let base = Block::new(0, 1, 3);
        TripleSystem::new(7, (0..7).map(|k| base.translate(k, 7))).unwrap()
    }

    fn cyclic13() -> TripleSystem {
        let starters = [Block::new(0, 1, 4), Block::new(0, 2, 7)];
        TripleSystem::new(13, starters.iter().flat_map(|b| (0..13).map(|k| b.translate(k, 13)))).unwrap()
    }

    #[test]
    fn fano_builds() {
        let f = fano();
        assert_eq!(f.blocks().len(), 7);
        for a in f.points() {
            for b in f.points().filter(|&b| b != a) {
                let c = f.third_point(a, b).unwrap();
                assert!(c != a && c != b);
                assert_eq!(c, f.third_point(b, a).unwrap());
                assert!(f.contains_block(&Block::new(a, b, c)));
            }
        }
    }

    #[test]
    fn duplicated_block_is_rejected() {
        let mut blocks = fano().blocks().to_vec();
        blocks.push(blocks[0]);
        assert!(matches!(TripleSystem::new(7, blocks), Err(Error::NotAnSts { count: 2, .. })));
    }

    #[test]
    fn bad_order_and_range() {
        assert!(matches!(TripleSystem::new(8, vec![]), Err(Error::BadOrder(8))));
        let mut blocks = fano().blocks().to_vec();
        blocks[0] = Block::new(0, 1, 9);
        assert!(matches!(TripleSystem::new(7, blocks), Err(Error::OutOfRange { point: 9, .. })));
    }

    #[test]
    fn third_point_examples() {
        let s = cyclic13();
        assert_eq!(s.third_point(0, 1).unwrap(), 4);
        assert_eq!(s.third_point(1, 0).unwrap(), 4);
        assert!(matches!(s.third_point(3, 3), Err(Error::SamePoint(3))));
    }

    #[test]
    fn span_examples() {
        let seq = Sequencing::identity(13);
        assert_eq!(block_span(&seq, &Block::new(0, 1, 4), false), 5);
        // positions {0,2,7}: gaps 2, 5, 6 -> 13 - 6 + 1
        assert_eq!(block_span(&seq, &Block::new(0, 2, 7), true), 8);
        assert_eq!(block_span(&seq, &Block::new(0, 2, 7), false), 8);
        assert_eq!(block_span(&seq, &Block::new(0, 11, 12), true), 3);
    }

    #[test]
    fn identity_on_cyclic13_is_cyclically_4_good() {
        let s = cyclic13();
        let seq = Sequencing::identity(13);
        assert!(is_ell_good(&s, &seq, 4, true).unwrap());
        assert!(!is_ell_good(&s, &seq, 5, false).unwrap());
        let r = goodness_report(&s, &seq).unwrap();
        assert_eq!((r.max_linear_ell, r.max_cyclic_ell), (4, 4));
    }

    #[test]
    fn violation_reports_a_minimal_block() {
        let f = fano();
        let seq = Sequencing::identity(7);
        match check_ell_good(&f, &seq, 4, false).unwrap() {
            EllCheck::Violated(b) => assert!(block_span(&seq, &b, false) <= 4),
            EllCheck::Good => panic!("Fano has no 4-good sequencing"),
        }
    }

    #[test]
    fn length_mismatch() {
        assert!(matches!(goodness_report(&fano(), &Sequencing::identity(9)), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn sequencing_rejects_repeats() {
        assert!(Sequencing::new(vec![0, 1, 1]).is_err());
        assert!(Sequencing::new(vec![0, 1, 3]).is_err());
    }

    #[test]
    fn point_set_ops() {
        let mut s = PointSet::empty();
        for p in [0, 63, 64, 200] {
            s.insert(p);
        }
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 200]);
        assert_eq!(s.len(), 4);
        s.remove(63);
        assert!(!s.contains(63));
        assert_eq!(PointSet::full(7).len(), 7);
    }
}
