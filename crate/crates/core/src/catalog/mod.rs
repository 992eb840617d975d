//! Named systems, cyclic development from starter blocks, and the published
//! best-sequencing tables.

pub mod codec;
pub mod file;
pub mod random;
mod tables;

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::system::{goodness_report, is_ell_good, Block, Point, Sequencing, TripleSystem};

pub use codec::{decode_sequencing, encode_sequencing, format_sequencing, parse_sequencing};
pub use file::{format_system, parse_listing, parse_system, read_system_file, write_system_file};
pub use random::{random_coloured_system, random_system};

/// Environment variable naming the directory that holds vendored listings.
pub const DATA_DIR_ENV: &str = "STSEQ_DATA_DIR";
/// File name of the 80-system STS(15) listing inside the data directory.
pub const STS15_FILE: &str = "sts15.txt";

/// Base blocks whose translates mod `v` give a cyclic system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarterSet {
    pub v: usize,
    pub full_orbit_starters: Vec<Block>,
    /// Adds the orbit of `{0, v/3, 2v/3}`, of length `v/3`.
    pub include_short_orbit: bool,
}

impl StarterSet {
    pub fn new(v: usize, starters: &[[Point; 3]], include_short_orbit: bool) -> Self {
        StarterSet {
            v,
            full_orbit_starters: starters.iter().map(|&[a, b, c]| Block::new(a, b, c)).collect(),
            include_short_orbit,
        }
    }
}

/// Develops the starters under `i -> i + 1 (mod v)` and validates the result.
pub fn develop_cyclic(starter: &StarterSet) -> Result<TripleSystem> {
    let v = starter.v;
    crate::system::check_order(v)?;
    let mut seen = std::collections::HashSet::new();
    let mut blocks = Vec::new();
    let mut add = |b: Block, blocks: &mut Vec<Block>| {
        if !seen.insert(b) {
            return Err(Error::OrbitCollision(b));
        }
        blocks.push(b);
        Ok(())
    };
    for s in &starter.full_orbit_starters {
        if let Some(&p) = s.points().iter().find(|&&p| p as usize >= v) {
            return Err(Error::OutOfRange { point: p as usize, v });
        }
        for k in 0..v {
            add(s.translate(k, v), &mut blocks)?;
        }
    }
    if starter.include_short_orbit {
        if !v.is_multiple_of(3) {
            return Err(Error::InvalidParameter(format!("short orbit needs 3 | v, got v = {v}")));
        }
        let t = (v / 3) as Point;
        let short = Block::new(0, t, 2 * t);
        for k in 0..v / 3 {
            add(short.translate(k, v), &mut blocks)?;
        }
    }
    TripleSystem::new(v, blocks)
}

/// The Fano plane, developed from `{0,1,3}` mod 7.
pub fn fano() -> TripleSystem {
    develop_cyclic(&StarterSet::new(7, &[[0, 1, 3]], false)).expect("Fano plane")
}

/// The affine plane AG(2,3) on `3x + y`, `x, y in Z_3`.
pub fn affine_plane_9() -> TripleSystem {
    let mut blocks = std::collections::BTreeSet::new();
    for a in 0..9u8 {
        for b in a + 1..9 {
            let (ax, ay, bx, by) = (a / 3, a % 3, b / 3, b % 3);
            let cx = (6 - ax - bx) % 3;
            let cy = (6 - ay - by) % 3;
            blocks.insert(Block::new(a, b, 3 * cx + cy));
        }
    }
    TripleSystem::new(9, blocks).expect("AG(2,3)")
}

/// The projective space PG(n-1, 2): points are the nonzero vectors of
/// `F_2^n` (labelled value minus one), blocks are `{x, y, x ^ y}`.
pub fn projective_system(n: u32) -> Result<TripleSystem> {
    if !(2..=7).contains(&n) {
        return Err(Error::InvalidParameter(format!("PG(n-1,2) needs 2 <= n <= 7, got {n}")));
    }
    let v = (1usize << n) - 1;
    let mut blocks = std::collections::BTreeSet::new();
    for x in 1..=v {
        for y in x + 1..=v {
            let z = x ^ y;
            blocks.insert(Block::new((x - 1) as Point, (y - 1) as Point, (z - 1) as Point));
        }
    }
    TripleSystem::new(v, blocks)
}

/// Where a known sequencing comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Printed in the published tables.
    Printed,
    /// Found by this crate's search and frozen here.
    Computed,
}

/// A sequencing together with the linear and cyclic `ell` it attains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownSequencing {
    pub sequencing: Sequencing,
    pub linear_ell: usize,
    pub cyclic_ell: usize,
    pub provenance: Provenance,
}

/// Best `ell` values published for a system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claims {
    pub linear: usize,
    pub cyclic: usize,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub system: TripleSystem,
    pub known_sequencings: Vec<KnownSequencing>,
    pub claims: Claims,
}

/// Resolves catalog ids, reading vendored listings from `data_dir`.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    data_dir: Option<PathBuf>,
}

impl Catalog {
    pub fn new(data_dir: Option<PathBuf>) -> Self {
        Catalog { data_dir }
    }

    /// Uses `$STSEQ_DATA_DIR` when set.
    pub fn from_env() -> Self {
        Catalog { data_dir: std::env::var_os(DATA_DIR_ENV).map(PathBuf::from) }
    }

    pub fn data_dir(&self) -> Option<&Path> {
        self.data_dir.as_deref()
    }

    fn sts15_path(&self) -> PathBuf {
        self.data_dir.clone().unwrap_or_default().join(STS15_FILE)
    }

    /// The 80 STS(15)s in standard-listing order.
    pub fn sts15_listing(&self) -> Result<Vec<TripleSystem>> {
        let path = self.sts15_path();
        if self.data_dir.is_none() || !path.is_file() {
            return Err(Error::MissingDataFile(path));
        }
        let systems = parse_listing(&std::fs::read_to_string(&path)?)?;
        if systems.len() != 80 || systems.iter().any(|s| s.order() != 15) {
            return Err(Error::Parse { line: 0, msg: format!("{} must hold 80 systems of order 15", path.display()) });
        }
        Ok(systems)
    }

    /// Ids that resolve without external data.
    pub fn builtin_ids() -> Vec<String> {
        let mut ids: Vec<String> = ["STS7", "STS9", "STS13-1", "STS13-2", "PG15"].map(String::from).to_vec();
        ids.extend(tables::CYCLIC_19.iter().map(|r| r.id.to_string()));
        ids.extend(tables::CYCLIC_21.iter().map(|r| r.id.to_string()));
        ids
    }

    pub fn sts15_ids() -> Vec<String> {
        (1..=80).map(|i| format!("STS15-{i}")).collect()
    }

    pub fn get(&self, id: &str) -> Result<CatalogEntry> {
        if let Some(n) = id.strip_prefix("STS15-") {
            let index: usize = n.parse().map_err(|_| Error::UnknownId(id.to_string()))?;
            if !(1..=80).contains(&index) {
                return Err(Error::UnknownId(id.to_string()));
            }
            let system = self.sts15_listing()?.swap_remove(index - 1);
            let exceptional = tables::STS15_NOT_CYCLIC_5.contains(&index);
            let cyclic = if exceptional { 4 } else { 5 };
            let seq = decode_sequencing(tables::STS15_SEQUENCINGS[index - 1], 15)?;
            return Ok(CatalogEntry {
                id: id.to_string(),
                system,
                known_sequencings: vec![KnownSequencing {
                    sequencing: seq,
                    linear_ell: 5,
                    cyclic_ell: cyclic,
                    provenance: Provenance::Printed,
                }],
                claims: Claims { linear: 5, cyclic },
            });
        }
        builtin(id)
    }
}

fn known(v: usize, text: &str, linear_ell: usize, cyclic_ell: usize, provenance: Provenance) -> KnownSequencing {
    KnownSequencing {
        sequencing: decode_sequencing(text, v).expect("catalog sequencing decodes"),
        linear_ell,
        cyclic_ell,
        provenance,
    }
}

/// The second STS(13): the cyclic one with one Pasch trade applied.
fn sts13_traded() -> TripleSystem {
    let base = builtin_system("STS13-1").expect("cyclic STS(13)");
    let out = [[1, 2, 5], [1, 3, 8], [3, 5, 10], [8, 10, 2]].map(|[a, b, c]| Block::new(a, b, c));
    let inn = [[3, 8, 10], [2, 5, 10], [1, 2, 8], [1, 3, 5]].map(|[a, b, c]| Block::new(a, b, c));
    let blocks = base.blocks().iter().filter(|b| !out.contains(b)).copied().chain(inn);
    TripleSystem::new(13, blocks).expect("traded STS(13) is valid")
}

/// One line of a catalog re-verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimCheck {
    pub description: String,
    pub pass: bool,
}

/// Re-verifies an entry: every stored sequencing attains exactly the values
/// stored with it, and some stored sequencing witnesses each claimed value.
pub fn check_entry(entry: &CatalogEntry) -> Result<Vec<ClaimCheck>> {
    let mut out = Vec::new();
    for k in &entry.known_sequencings {
        let r = goodness_report(&entry.system, &k.sequencing)?;
        let kind = match k.provenance {
            Provenance::Printed => "printed",
            Provenance::Computed => "computed",
        };
        out.push(ClaimCheck {
            description: format!(
                "{} {kind} {} attains linear {} cyclic {} (stored {} {})",
                entry.id,
                format_sequencing(&k.sequencing),
                r.max_linear_ell,
                r.max_cyclic_ell,
                k.linear_ell,
                k.cyclic_ell
            ),
            pass: (r.max_linear_ell, r.max_cyclic_ell) == (k.linear_ell, k.cyclic_ell),
        });
    }
    for (cyclic, ell) in [(false, entry.claims.linear), (true, entry.claims.cyclic)] {
        let mode = if cyclic { "cyclic" } else { "linear" };
        let mut witness = None;
        for k in &entry.known_sequencings {
            if is_ell_good(&entry.system, &k.sequencing, ell, cyclic)? {
                witness = Some(format_sequencing(&k.sequencing));
                break;
            }
        }
        out.push(ClaimCheck {
            description: match &witness {
                Some(w) => format!("{} {mode} {ell}-good witnessed by {w}", entry.id),
                None => format!("{} {mode} {ell}-good has no stored witness", entry.id),
            },
            pass: witness.is_some(),
        });
    }
    Ok(out)
}

/// Resolves an id that needs no data files.
pub fn builtin_system(id: &str) -> Result<TripleSystem> {
    Ok(match id {
        "STS7" => fano(),
        "STS9" => affine_plane_9(),
        "STS13-1" => develop_cyclic(&StarterSet::new(13, &[[0, 1, 4], [0, 2, 7]], false))?,
        "STS13-2" => sts13_traded(),
        "PG15" => projective_system(4)?,
        _ => {
            let row = tables::CYCLIC_19
                .iter()
                .chain(tables::CYCLIC_21)
                .find(|r| r.id == id)
                .ok_or_else(|| Error::UnknownId(id.to_string()))?;
            develop_cyclic(&StarterSet::new(row.v, row.starters, row.v == 21))?
        }
    })
}

/// Catalog entry for an id that needs no data files.
pub fn builtin(id: &str) -> Result<CatalogEntry> {
    if id.starts_with("STS15-") {
        return Catalog::from_env().get(id);
    }
    let system = builtin_system(id)?;
    let (known_sequencings, claims) = match id {
        "STS7" | "STS9" => (vec![], Claims { linear: 3, cyclic: 3 }),
        "STS13-1" | "STS13-2" => {
            (vec![known(13, "0123456789abc", 4, 4, Provenance::Printed)], Claims { linear: 4, cyclic: 4 })
        }
        "PG15" => (
            tables::PG15_KNOWN.iter().map(|&(s, l, c)| known(15, s, l, c, Provenance::Computed)).collect(),
            Claims { linear: 5, cyclic: 4 },
        ),
        _ => {
            let row = tables::CYCLIC_19.iter().chain(tables::CYCLIC_21).find(|r| r.id == id).expect("resolved above");
            let mut ks = vec![known(row.v, row.printed, row.printed_linear, row.printed_cyclic, Provenance::Printed)];
            ks.extend(row.computed.iter().map(|&(s, l, c)| known(row.v, s, l, c, Provenance::Computed)));
            (ks, Claims { linear: row.claim_linear, cyclic: row.claim_cyclic })
        }
    };
    Ok(CatalogEntry { id: id.to_string(), system, known_sequencings, claims })
}
