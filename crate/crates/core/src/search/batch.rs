use std::collections::HashSet;
use std::path::Path;

use crate::error::{Error, Result};
use crate::system::TripleSystem;

use super::backtrack::{search, SearchConfig};
use super::ledger::{append_row, read_ledger, LedgerRow, RowStatus};

/// Which searches to run on every system of a batch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatchTask {
    pub ells: Vec<usize>,
    pub modes: Vec<bool>,
    pub budget: u64,
    pub seed: Option<u64>,
    pub workers: usize,
}

impl BatchTask {
    /// Parses `MODE:ELLS` with mode `linear`, `cyclic` or `both`, and ells
    /// a single value or an inclusive range `a-b`, e.g. `cyclic:6` or `linear:4-6`.
    pub fn parse(spec: &str, budget: u64, seed: Option<u64>) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("bad task {spec:?}; expected e.g. cyclic:6 or linear:4-6"));
        let (mode, range) = spec.split_once(':').ok_or_else(bad)?;
        let modes = match mode {
            "linear" => vec![false],
            "cyclic" => vec![true],
            "both" => vec![false, true],
            _ => return Err(bad()),
        };
        let (lo, hi) = match range.split_once('-') {
            Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
            None => {
                let e = range.parse().map_err(|_| bad())?;
                (e, e)
            }
        };
        if lo < 3 || hi < lo {
            return Err(bad());
        }
        Ok(BatchTask { ells: (lo..=hi).collect(), modes, budget, seed, workers: 1 })
    }
}

#[derive(Clone, Debug, Default)]
pub struct BatchReport {
    /// One row per (system, ell, mode), in task order, old or new.
    pub rows: Vec<LedgerRow>,
    /// Searches actually run; zero when everything was already in the ledger.
    pub searches_run: usize,
}

impl BatchReport {
    pub fn count(&self, status: RowStatus) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }
}

/// Runs `task` on each named system, appending each new row to `ledger` as
/// soon as it is known. Rows already in the ledger are reused, not rerun.
pub fn batch_run(entries: &[(String, TripleSystem)], task: &BatchTask, ledger: Option<&Path>) -> Result<BatchReport> {
    let existing = match ledger {
        Some(p) => read_ledger(p)?,
        None => Vec::new(),
    };
    let mut done: HashSet<(String, usize, bool)> = HashSet::new();
    let mut report = BatchReport::default();
    for (id, sys) in entries {
        for &ell in &task.ells {
            for &cyclic in &task.modes {
                let key = (id.clone(), ell, cyclic);
                if let Some(old) = existing.iter().find(|r| r.key() == key) {
                    if done.insert(key) {
                        report.rows.push(old.clone());
                    }
                    continue;
                }
                let cfg = SearchConfig::new(ell, cyclic, task.budget).seed(task.seed).workers(task.workers);
                let out = search(sys, &cfg);
                report.searches_run += 1;
                let row = LedgerRow::from_outcome(id, sys.order(), ell, cyclic, &out, task.seed);
                if let Some(p) = ledger {
                    append_row(p, &row)?;
                }
                done.insert(key);
                report.rows.push(row);
            }
        }
    }
    Ok(report)
}
