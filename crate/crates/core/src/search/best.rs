use crate::bounds::lmax_upper_bound;
use crate::system::{goodness_report, Sequencing, TripleSystem};

use super::backtrack::{search, SearchConfig, SearchStatus};

/// What a sweep learned about one `(ell, mode)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelStatus {
    Found(Sequencing),
    /// Proved by search, or implied by exhaustion at a smaller `ell`.
    Exhausted,
    BudgetExceeded,
    /// Not searched because a smaller `ell` ran out of budget.
    NotAttempted,
}

impl LevelStatus {
    pub fn is_found(&self) -> bool {
        matches!(self, LevelStatus::Found(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            LevelStatus::Found(_) => "FOUND",
            LevelStatus::Exhausted => "EXHAUSTED",
            LevelStatus::BudgetExceeded => "BUDGET",
            LevelStatus::NotAttempted => "-",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub ell: usize,
    pub linear: LevelStatus,
    pub cyclic: LevelStatus,
    /// Nodes spent searching at this level, per mode; 0 when settled otherwise.
    pub linear_nodes: u64,
    pub cyclic_nodes: u64,
}

#[derive(Clone, Debug)]
pub struct BestReport {
    pub v: usize,
    /// One entry per `ell` from 3 up to the upper bound for `v`.
    pub levels: Vec<Level>,
    /// Largest `ell` with a linear witness; 2 when there is none.
    pub best_linear: usize,
    pub best_cyclic: usize,
    pub nodes_expanded: u64,
}

impl BestReport {
    pub fn witness(&self, ell: usize, cyclic: bool) -> Option<&Sequencing> {
        let level = self.levels.iter().find(|l| l.ell == ell)?;
        match if cyclic { &level.cyclic } else { &level.linear } {
            LevelStatus::Found(s) => Some(s),
            _ => None,
        }
    }

    /// Found is downward closed, Exhausted is upward closed, and a cyclic
    /// witness is also a linear one.
    pub fn is_monotone(&self) -> bool {
        let track_ok = |track: Vec<&LevelStatus>| {
            let last_found = track.iter().rposition(|s| s.is_found());
            let first_exhausted = track.iter().position(|s| **s == LevelStatus::Exhausted);
            let found_prefix = last_found.is_none_or(|i| track[..=i].iter().all(|s| s.is_found()));
            let exhausted_suffix =
                first_exhausted.is_none_or(|i| track[i..].iter().all(|s| **s == LevelStatus::Exhausted));
            found_prefix && exhausted_suffix
        };
        track_ok(self.levels.iter().map(|l| &l.linear).collect())
            && track_ok(self.levels.iter().map(|l| &l.cyclic).collect())
            && self.levels.iter().all(|l| !l.cyclic.is_found() || l.linear.is_found())
    }
}

/// Single-worker, ascending-order sweep with a per-search node budget.
pub fn best_goodness(sys: &TripleSystem, budget: u64) -> BestReport {
    best_goodness_with(sys, &SearchConfig::new(3, false, budget))
}

/// Sweeps `ell` upward on the cyclic track, then on the linear track.
///
/// A witness is credited at every level it satisfies, so a search is skipped
/// whenever an earlier witness already settles the level. `cfg.ell` and
/// `cfg.cyclic` are ignored.
pub fn best_goodness_with(sys: &TripleSystem, cfg: &SearchConfig) -> BestReport {
    let v = sys.order();
    let top = lmax_upper_bound(v).unwrap_or(2);
    let mut levels: Vec<Level> = (3..=top)
        .map(|ell| Level {
            ell,
            linear: LevelStatus::NotAttempted,
            cyclic: LevelStatus::NotAttempted,
            linear_nodes: 0,
            cyclic_nodes: 0,
        })
        .collect();
    let mut nodes = 0;

    for cyclic in [true, false] {
        let mut stopped: Option<LevelStatus> = None;
        for i in 0..levels.len() {
            let ell = levels[i].ell;
            let slot_done = |l: &Level| if cyclic { l.cyclic.is_found() } else { l.linear.is_found() };
            if slot_done(&levels[i]) {
                continue;
            }
            if let Some(s) = &stopped {
                let s = if *s == LevelStatus::Exhausted { LevelStatus::Exhausted } else { LevelStatus::NotAttempted };
                set(&mut levels[i], cyclic, s);
                continue;
            }
            let out = search(sys, &SearchConfig { ell, cyclic, ..cfg.clone() });
            nodes += out.nodes_expanded;
            if cyclic {
                levels[i].cyclic_nodes = out.nodes_expanded;
            } else {
                levels[i].linear_nodes = out.nodes_expanded;
            }
            match out.status {
                SearchStatus::Found(seq) => credit(&mut levels, sys, &seq),
                SearchStatus::Exhausted => {
                    set(&mut levels[i], cyclic, LevelStatus::Exhausted);
                    stopped = Some(LevelStatus::Exhausted);
                }
                SearchStatus::BudgetExceeded => {
                    set(&mut levels[i], cyclic, LevelStatus::BudgetExceeded);
                    stopped = Some(LevelStatus::BudgetExceeded);
                }
            }
        }
    }

    let best = |cyclic: bool| {
        levels
            .iter()
            .filter(|l| if cyclic { l.cyclic.is_found() } else { l.linear.is_found() })
            .map(|l| l.ell)
            .max()
            .unwrap_or(2)
    };
    let report = BestReport { v, best_linear: best(false), best_cyclic: best(true), levels, nodes_expanded: nodes };
    assert!(report.is_monotone(), "best-goodness sweep violated monotonicity");
    report
}

fn set(level: &mut Level, cyclic: bool, status: LevelStatus) {
    if cyclic {
        level.cyclic = status;
    } else {
        level.linear = status;
    }
}

/// Records `seq` at every level it satisfies, in both modes.
fn credit(levels: &mut [Level], sys: &TripleSystem, seq: &Sequencing) {
    let report = goodness_report(sys, seq).expect("witness matches the system");
    for level in levels.iter_mut() {
        if level.ell <= report.max_cyclic_ell && !level.cyclic.is_found() {
            level.cyclic = LevelStatus::Found(seq.clone());
        }
        if level.ell <= report.max_linear_ell && !level.linear.is_found() {
            level.linear = LevelStatus::Found(seq.clone());
        }
    }
}
