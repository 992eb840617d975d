//! Tab-separated, append-only result records.
//!
//! Field order: system, v, ell, mode (`L`/`C`), status, witness, nodes, seed,
//! version. Missing witness or seed is written as `-`.

use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::catalog::{format_sequencing, format_system};
use crate::error::{Error, Result};
use crate::system::TripleSystem;

use super::backtrack::{SearchOutcome, SearchStatus};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RowStatus {
    Found,
    Exhausted,
    Budget,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Found => "FOUND",
            RowStatus::Exhausted => "EXHAUSTED",
            RowStatus::Budget => "BUDGET",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerRow {
    pub system: String,
    pub v: usize,
    pub ell: usize,
    pub cyclic: bool,
    pub status: RowStatus,
    pub witness: Option<String>,
    pub nodes: u64,
    pub seed: Option<u64>,
    pub version: String,
}

impl LedgerRow {
    pub fn from_outcome(
        system: &str,
        v: usize,
        ell: usize,
        cyclic: bool,
        out: &SearchOutcome,
        seed: Option<u64>,
    ) -> Self {
        let (status, witness) = match &out.status {
            SearchStatus::Found(s) => (RowStatus::Found, Some(format_sequencing(s))),
            SearchStatus::Exhausted => (RowStatus::Exhausted, None),
            SearchStatus::BudgetExceeded => (RowStatus::Budget, None),
        };
        LedgerRow {
            system: system.to_string(),
            v,
            ell,
            cyclic,
            status,
            witness,
            nodes: out.nodes_expanded,
            seed,
            version: TOOL_VERSION.to_string(),
        }
    }

    /// Identifies the search a row answers, for resuming.
    pub fn key(&self) -> (String, usize, bool) {
        (self.system.clone(), self.ell, self.cyclic)
    }

    pub fn parse(line: &str, line_no: usize) -> Result<Self> {
        let bad = |msg: String| Error::LedgerCorrupt { line: line_no, msg };
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 9 {
            return Err(bad(format!("expected 9 fields, got {}", f.len())));
        }
        let num = |s: &str, what: &str| s.parse::<u64>().map_err(|_| bad(format!("bad {what} {s:?}")));
        let opt = |s: &str| (s != "-").then(|| s.to_string());
        let cyclic = match f[3] {
            "L" => false,
            "C" => true,
            m => return Err(bad(format!("bad mode {m:?}"))),
        };
        let status = match f[4] {
            "FOUND" => RowStatus::Found,
            "EXHAUSTED" => RowStatus::Exhausted,
            "BUDGET" => RowStatus::Budget,
            s => return Err(bad(format!("bad status {s:?}"))),
        };
        if f[0].is_empty() {
            return Err(bad("empty system id".into()));
        }
        let witness = opt(f[5]);
        if (status == RowStatus::Found) != witness.is_some() {
            return Err(bad("witness must be present exactly for FOUND rows".into()));
        }
        Ok(LedgerRow {
            system: f[0].to_string(),
            v: num(f[1], "v")? as usize,
            ell: num(f[2], "ell")? as usize,
            cyclic,
            status,
            witness,
            nodes: num(f[6], "node count")?,
            seed: opt(f[7]).map(|s| num(&s, "seed")).transpose()?,
            version: f[8].to_string(),
        })
    }
}

impl fmt::Display for LedgerRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dash = || "-".to_string();
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.system,
            self.v,
            self.ell,
            if self.cyclic { "C" } else { "L" },
            self.status.as_str(),
            self.witness.clone().unwrap_or_else(dash),
            self.nodes,
            self.seed.map(|s| s.to_string()).unwrap_or_else(dash),
            self.version
        )
    }
}

/// Parses every non-blank line; a missing file is an empty ledger.
pub fn read_ledger(path: impl AsRef<Path>) -> Result<Vec<LedgerRow>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(e.into()),
    };
    let mut rows = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if !line.trim().is_empty() {
            rows.push(LedgerRow::parse(&line, i + 1)?);
        }
    }
    Ok(rows)
}

pub fn append_row(path: impl AsRef<Path>, row: &LedgerRow) -> Result<()> {
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    writeln!(f, "{row}")?;
    f.flush()?;
    Ok(())
}

/// FNV-1a over the canonical block listing, as 16 hex digits.
pub fn system_hash(sys: &TripleSystem) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in format_system(sys).bytes() {
        h ^= byte as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}
