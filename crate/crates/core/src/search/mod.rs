//! Backtracking search for good sequencings, best-`ell` sweeps and batch runs.

mod backtrack;
mod batch;
mod best;
pub mod ledger;

pub use backtrack::{count_ell_good, search, search_ell_good, SearchConfig, SearchOutcome, SearchStatus};
pub use batch::{batch_run, BatchReport, BatchTask};
pub use best::{best_goodness, best_goodness_with, BestReport, Level, LevelStatus};
pub use ledger::{append_row, read_ledger, system_hash, LedgerRow, RowStatus};
