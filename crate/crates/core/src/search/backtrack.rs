//! Depth-first extension of partial sequencings.
//!
//! Placing point `p` at position `i` is rejected when some already-placed pair
//! `(j, k)` has `seq[j].seq[k] = p` and `{j, k, i}` fits in a window of length
//! `ell`. Each such triple of positions is checked exactly once, at its
//! largest position, so linear mode only looks back `ell - 1` places and
//! cyclic mode adds the windows that wrap past the end once the last `ell - 1`
//! slots are being filled.
//!
//! Symmetry reduction: linear mode requires `seq[0] < seq[v-1]` (reversal);
//! cyclic mode fixes `seq[0] = 0` (rotation) and requires `seq[1] < seq[v-1]`
//! (reflection).
//!
//! Seeded searches restart with a fresh shuffle after a Luby sequence of node
//! slices, since a single random order often stalls in one large dead
//! subtree. A slice that finishes its walk still proves exhaustion.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::system::{is_ell_good, Point, PointSet, Sequencing, TripleSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Found(Sequencing),
    Exhausted,
    BudgetExceeded,
}

impl SearchStatus {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchStatus::Found(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            SearchStatus::Found(_) => "FOUND",
            SearchStatus::Exhausted => "EXHAUSTED",
            SearchStatus::BudgetExceeded => "BUDGET",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub nodes_expanded: u64,
    pub elapsed: Duration,
}

/// Parameters of one existence search.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub ell: usize,
    pub cyclic: bool,
    /// Node limit; a node is one tentative placement.
    pub budget: u64,
    /// Shuffles candidates at every node when set; ascending order otherwise.
    pub seed: Option<u64>,
    pub workers: usize,
    pub wall_clock: Option<Duration>,
}

impl SearchConfig {
    pub fn new(ell: usize, cyclic: bool, budget: u64) -> Self {
        SearchConfig { ell, cyclic, budget, seed: None, workers: 1, wall_clock: None }
    }

    pub fn seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn wall_clock(mut self, cap: Option<Duration>) -> Self {
        self.wall_clock = cap;
        self
    }
}

/// Position pairs `(j, k)`, `j < k < i`, that together with `i` fit in one window.
fn window_pairs(v: usize, ell: usize, cyclic: bool) -> Vec<Vec<(u8, u8)>> {
    (0..v)
        .map(|i| {
            let mut pairs = Vec::new();
            for j in 0..i {
                for k in j + 1..i {
                    let linear = i - j + 1;
                    let span = if cyclic {
                        let gap = (k - j).max(i - k).max(v - i + j);
                        v - gap + 1
                    } else {
                        linear
                    };
                    if span <= ell {
                        pairs.push((j as u8, k as u8));
                    }
                }
            }
            pairs
        })
        .collect()
}

struct Shared {
    stop: AtomicBool,
    nodes: AtomicU64,
}

enum Step {
    Done,
    Continue,
    Stop,
}

struct Walker<'a> {
    sys: &'a TripleSystem,
    v: usize,
    cyclic: bool,
    reduce: bool,
    pairs: &'a [Vec<(u8, u8)>],
    seq: Vec<Point>,
    used: PointSet,
    nodes: u64,
    flushed: u64,
    budget: u64,
    deadline: Option<Instant>,
    rng: Option<ChaCha8Rng>,
    shared: Option<&'a Shared>,
    counting: bool,
    count: u64,
    budget_hit: bool,
}

const FLUSH_EVERY: u64 = 1 << 12;

impl Walker<'_> {
    fn candidates(&mut self, i: usize) -> Vec<Point> {
        let mut forbidden = self.used;
        for &(j, k) in &self.pairs[i] {
            forbidden.insert(self.sys.third(self.seq[j as usize], self.seq[k as usize]));
        }
        let free = PointSet::full(self.v).difference(&forbidden);
        let mut out: Vec<Point> = free.iter().collect();
        if self.reduce && i == self.v - 1 && self.v > 1 {
            let anchor = if self.cyclic { self.seq[1] } else { self.seq[0] };
            out.retain(|&p| p > anchor);
        }
        if let Some(rng) = self.rng.as_mut() {
            out.shuffle(rng);
        }
        out
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes - self.flushed >= FLUSH_EVERY {
            if let Some(shared) = self.shared {
                shared.nodes.fetch_add(self.nodes - self.flushed, Ordering::Relaxed);
                self.flushed = self.nodes;
                if shared.stop.load(Ordering::Relaxed) {
                    return false;
                }
                if shared.nodes.load(Ordering::Relaxed) >= self.budget {
                    self.budget_hit = true;
                    return false;
                }
            }
            if self.deadline.is_some_and(|d| Instant::now() >= d) {
                self.budget_hit = true;
                return false;
            }
        }
        if self.shared.is_none() && self.nodes >= self.budget {
            self.budget_hit = true;
            return false;
        }
        true
    }

    fn walk(&mut self) -> Step {
        let i = self.seq.len();
        if i == self.v {
            if self.counting {
                self.count += 1;
                return Step::Continue;
            }
            return Step::Done;
        }
        // The point closing the reflection check must still be available.
        if self.reduce && i >= 2 {
            let anchor = if self.cyclic { self.seq[1] } else { self.seq[0] };
            let remaining = PointSet::full(self.v).difference(&self.used);
            if !remaining.iter().any(|p| p > anchor) {
                return Step::Continue;
            }
        }
        for p in self.candidates(i) {
            if !self.tick() {
                return Step::Stop;
            }
            self.seq.push(p);
            self.used.insert(p);
            match self.walk() {
                Step::Continue => {}
                other => return other,
            }
            self.used.remove(p);
            self.seq.pop();
        }
        Step::Continue
    }
}

fn prefix_for(cyclic: bool) -> Vec<Point> {
    if cyclic {
        vec![0]
    } else {
        vec![]
    }
}

struct RunResult {
    found: Option<Vec<Point>>,
    complete: bool,
    nodes: u64,
    count: u64,
}

#[allow(clippy::too_many_arguments)]
fn run_serial(
    sys: &TripleSystem,
    pairs: &[Vec<(u8, u8)>],
    cfg: &SearchConfig,
    prefix: Vec<Point>,
    budget: u64,
    seed: Option<u64>,
    shared: Option<&Shared>,
    reduce: bool,
    counting: bool,
    deadline: Option<Instant>,
) -> RunResult {
    let used = prefix.iter().copied().collect();
    let mut w = Walker {
        sys,
        v: sys.order(),
        cyclic: cfg.cyclic,
        reduce,
        pairs,
        seq: prefix,
        used,
        nodes: 0,
        flushed: 0,
        budget,
        deadline,
        rng: seed.map(ChaCha8Rng::seed_from_u64),
        shared,
        counting,
        count: 0,
        budget_hit: false,
    };
    let step = w.walk();
    if let Some(s) = shared {
        s.nodes.fetch_add(w.nodes - w.flushed, Ordering::Relaxed);
    }
    match step {
        Step::Done => RunResult { found: Some(w.seq), complete: false, nodes: w.nodes, count: w.count },
        Step::Continue => RunResult { found: None, complete: true, nodes: w.nodes, count: w.count },
        Step::Stop => RunResult { found: None, complete: false, nodes: w.nodes, count: w.count },
    }
}

/// Searches for an `ell`-good (or cyclically `ell`-good) sequencing.
///
/// `Exhausted` is only reported after the whole symmetry-reduced tree has
/// been walked, so it does not depend on the seed or the worker count.
pub fn search(sys: &TripleSystem, cfg: &SearchConfig) -> SearchOutcome {
    let start = Instant::now();
    let v = sys.order();
    let pairs = window_pairs(v, cfg.ell, cfg.cyclic);
    let deadline = cfg.wall_clock.map(|d| start + d);
    let prefix = prefix_for(cfg.cyclic);

    let attempt = |cfg: &SearchConfig| {
        if cfg.workers <= 1 || v < 3 {
            let r = run_serial(sys, &pairs, cfg, prefix.clone(), cfg.budget, cfg.seed, None, true, false, deadline);
            (r.found, r.complete, r.nodes)
        } else {
            run_parallel(sys, &pairs, cfg, prefix.clone(), deadline)
        }
    };
    let (found, complete, nodes) = match cfg.seed {
        None => attempt(cfg),
        Some(seed) => {
            let mut nodes = 0u64;
            let mut round = 1u64;
            loop {
                let slice = luby(round).saturating_mul(RESTART_UNIT).min(cfg.budget - nodes);
                let sub = SearchConfig {
                    budget: slice,
                    seed: Some(seed.wrapping_add(round.wrapping_mul(0x9E37_79B9))),
                    ..cfg.clone()
                };
                let (found, complete, n) = attempt(&sub);
                nodes += n;
                let out_of_time = deadline.is_some_and(|d| Instant::now() >= d);
                if found.is_some() || complete || nodes >= cfg.budget || out_of_time {
                    break (found, complete, nodes);
                }
                round += 1;
            }
        }
    };

    let status = match found {
        Some(order) => {
            let seq = Sequencing::new(order).expect("search yields permutations");
            assert!(
                is_ell_good(sys, &seq, cfg.ell, cfg.cyclic).unwrap_or(false),
                "search produced an unverified sequencing"
            );
            SearchStatus::Found(seq)
        }
        None if complete => SearchStatus::Exhausted,
        None => SearchStatus::BudgetExceeded,
    };
    SearchOutcome { status, nodes_expanded: nodes, elapsed: start.elapsed() }
}

/// Nodes per unit of the restart schedule.
const RESTART_UNIT: u64 = 25_000;

/// The Luby sequence 1, 1, 2, 1, 1, 2, 4, 1, 1, 2, ... (1-based).
fn luby(i: u64) -> u64 {
    let mut i = i;
    loop {
        let k = 64 - i.leading_zeros() as u64;
        if i == (1 << k) - 1 {
            return 1 << (k - 1);
        }
        i -= (1 << (k - 1)) - 1;
    }
}

/// Splits the tree on the candidates of the first unfixed position.
fn run_parallel(
    sys: &TripleSystem,
    pairs: &[Vec<(u8, u8)>],
    cfg: &SearchConfig,
    prefix: Vec<Point>,
    deadline: Option<Instant>,
) -> (Option<Vec<Point>>, bool, u64) {
    let shared = Shared { stop: AtomicBool::new(false), nodes: AtomicU64::new(0) };
    let v = sys.order();
    let first: Vec<Point> = (0..v as Point).filter(|p| !prefix.contains(p)).collect();
    let next = std::sync::Mutex::new(first.into_iter().enumerate());
    let results = std::sync::Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..cfg.workers {
            scope.spawn(|| loop {
                let Some((idx, p)) = next.lock().expect("shard queue").next() else { break };
                if shared.stop.load(Ordering::Relaxed) {
                    results.lock().expect("results").push((None, false));
                    break;
                }
                let mut pre = prefix.clone();
                pre.push(p);
                // The root placement is a node too.
                shared.nodes.fetch_add(1, Ordering::Relaxed);
                let seed = cfg.seed.map(|s| s.wrapping_add(idx as u64));
                let r = run_serial(sys, pairs, cfg, pre, cfg.budget, seed, Some(&shared), true, false, deadline);
                if r.found.is_some() {
                    shared.stop.store(true, Ordering::Relaxed);
                }
                results.lock().expect("results").push((r.found, r.complete));
            });
        }
    });
    let results = results.into_inner().expect("results");
    let nodes = shared.nodes.load(Ordering::Relaxed);
    let found = results.iter().find_map(|(f, _)| f.clone());
    let shards = v - prefix.len();
    let complete = found.is_none() && results.len() == shards && results.iter().all(|(_, c)| *c);
    (found, complete, nodes)
}

/// Single-threaded existence search with deterministic order unless seeded.
pub fn search_ell_good(sys: &TripleSystem, ell: usize, cyclic: bool, budget: u64, seed: Option<u64>) -> SearchOutcome {
    search(sys, &SearchConfig::new(ell, cyclic, budget).seed(seed))
}

/// Counts all good sequencings in the tree, or `None` if the budget runs out.
///
/// With `reduce`, counts are per symmetry class as described in the module
/// docs. Without it, linear mode counts every permutation and cyclic mode
/// counts those with `seq[0] = 0`.
pub fn count_ell_good(sys: &TripleSystem, ell: usize, cyclic: bool, reduce: bool, budget: u64) -> Option<u64> {
    let pairs = window_pairs(sys.order(), ell, cyclic);
    let cfg = SearchConfig::new(ell, cyclic, budget);
    let r = run_serial(sys, &pairs, &cfg, prefix_for(cyclic), budget, None, None, reduce, true, None);
    r.complete.then_some(r.count)
}
