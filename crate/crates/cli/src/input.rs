use std::path::Path;

use stseq::catalog::{read_system_file, Catalog, StarterSet};
use stseq::search::system_hash;
use stseq::structure::Colouring;
use stseq::{Error, Point, Result, TripleSystem};

/// Resolves `builtin:ID` through the catalog, anything else as a file path.
/// Returns the id used in ledger rows alongside the system.
pub fn load_system(catalog: &Catalog, spec: &str) -> Result<(String, TripleSystem)> {
    if let Some(id) = spec.strip_prefix("builtin:") {
        return Ok((id.to_string(), catalog.get(id)?.system));
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(Error::InvalidParameter(format!("{spec:?} is neither builtin:ID nor an existing file")));
    }
    let sys = read_system_file(path)?;
    Ok((system_hash(&sys), sys))
}

/// Like [`load_system`], but a bare catalog id is also accepted.
pub fn load_system_loose(catalog: &Catalog, spec: &str) -> Result<(String, TripleSystem)> {
    if spec.starts_with("builtin:") || Path::new(spec).exists() {
        load_system(catalog, spec)
    } else {
        Ok((spec.to_string(), catalog.get(spec)?.system))
    }
}

/// `0,1,4;0,2,9;0,5,11`
pub fn parse_starters(text: &str, v: usize, short_orbit: bool) -> Result<StarterSet> {
    let mut starters = Vec::new();
    for (i, part) in text.split(';').map(str::trim).filter(|p| !p.is_empty()).enumerate() {
        let bad = || Error::Parse { line: i + 1, msg: format!("starter `{part}` is not three comma-separated points") };
        let pts: Vec<Point> = part
            .split(',')
            .map(|t| t.trim().parse::<Point>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let [a, b, c] = pts[..] else { return Err(bad()) };
        starters.push([a, b, c]);
    }
    if starters.is_empty() {
        return Err(Error::InvalidParameter("no starter blocks given".into()));
    }
    Ok(StarterSet::new(v, &starters, short_orbit))
}

/// One class per non-blank line, points separated by spaces or commas.
pub fn read_colouring(sys: &TripleSystem, path: &Path) -> Result<Colouring> {
    let text = std::fs::read_to_string(path)?;
    let mut classes = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let class: Vec<Point> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<Point>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse { line: i + 1, msg: format!("bad point in `{line}`") })?;
        classes.push(class);
    }
    Colouring::new(sys, classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn starters() {
        let s = parse_starters("0,1,3; 0,4,12 ;0,5,15", 21, true).unwrap();
        assert_eq!(s.full_orbit_starters.len(), 3);
        assert!(s.include_short_orbit);
        assert!(matches!(parse_starters("0,1", 7, false), Err(Error::Parse { .. })));
        assert!(matches!(parse_starters("0,1,x", 7, false), Err(Error::Parse { .. })));
        assert!(matches!(parse_starters(" ; ", 7, false), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn system_specs() {
        let cat = Catalog::new(None);
        assert_eq!(load_system(&cat, "builtin:STS7").unwrap().1.order(), 7);
        assert!(matches!(load_system(&cat, "builtin:nope"), Err(Error::UnknownId(_))));
        assert!(matches!(load_system(&cat, "STS7"), Err(Error::InvalidParameter(_))));
        assert_eq!(load_system_loose(&cat, "C2").unwrap().0, "C2");
    }
}
