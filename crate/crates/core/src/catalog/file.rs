//! Plain-text system files.
//!
//! ```text
//! # comment
//! 7
//! 0 1 3
//! 0 2 6
//! ...
//! ```
//!
//! Line one holds `v`; each following line holds one block as three 0-based
//! integers. Blank lines and `#` comments are ignored. A listing file is
//! several such records back to back, each taking exactly `v(v-1)/6` block
//! lines.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::system::{Block, Point, TripleSystem};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_order(line_no: usize, line: &str) -> Result<usize> {
    line.parse().map_err(|_| Error::Parse { line: line_no, msg: format!("expected order, got `{line}`") })
}

fn parse_block(line_no: usize, line: &str, v: usize) -> Result<Block> {
    let nums: Vec<usize> = line
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse { line: line_no, msg: format!("bad integer in `{line}`") })?;
    let [a, b, c] = nums[..] else {
        return Err(Error::Parse { line: line_no, msg: format!("expected 3 points, got {}", nums.len()) });
    };
    if let Some(&p) = [a, b, c].iter().find(|&&p| p >= v) {
        return Err(Error::OutOfRange { point: p, v });
    }
    Ok(Block::new(a as Point, b as Point, c as Point))
}

/// Parses one system; every line after the order is a block.
pub fn parse_system(text: &str) -> Result<TripleSystem> {
    let mut lines = content_lines(text);
    let (line_no, first) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty system file".into() })?;
    let v = parse_order(line_no, first)?;
    let blocks = lines.map(|(n, l)| parse_block(n, l, v)).collect::<Result<Vec<_>>>()?;
    TripleSystem::new(v, blocks)
}

/// Parses consecutive system records.
pub fn parse_listing(text: &str) -> Result<Vec<TripleSystem>> {
    let mut lines = content_lines(text);
    let mut out = Vec::new();
    while let Some((line_no, first)) = lines.next() {
        let v = parse_order(line_no, first)?;
        let want = v * v.saturating_sub(1) / 6;
        let mut blocks = Vec::with_capacity(want);
        for _ in 0..want {
            let (n, l) = lines
                .next()
                .ok_or(Error::Parse { line: line_no, msg: format!("record truncated: expected {want} blocks") })?;
            blocks.push(parse_block(n, l, v)?);
        }
        out.push(TripleSystem::new(v, blocks)?);
    }
    Ok(out)
}

/// Serialises with blocks in lexicographic order.
pub fn format_system(sys: &TripleSystem) -> String {
    let mut out = format!("{}\n", sys.order());
    for b in sys.blocks() {
        let [x, y, z] = b.points();
        let _ = writeln!(out, "{x} {y} {z}");
    }
    out
}

pub fn read_system_file(path: impl AsRef<Path>) -> Result<TripleSystem> {
    parse_system(&std::fs::read_to_string(path)?)
}

pub fn write_system_file(path: impl AsRef<Path>, sys: &TripleSystem) -> Result<()> {
    std::fs::write(path, format_system(sys))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::fano;

    #[test]
    fn round_trip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("fano.txt");
        write_system_file(&path, &fano()).unwrap();
        assert_eq!(read_system_file(&path).unwrap(), fano());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = format!("# the Fano plane\n\n{}\n# end\n", format_system(&fano()).replace('\n', "  # x\n"));
        assert_eq!(parse_system(&text).unwrap(), fano());
    }

    #[test]
    fn wrong_block_count_is_not_an_sts() {
        let sys = crate::catalog::builtin_system("STS13-1").unwrap();
        let text = format_system(&sys);
        let truncated: Vec<&str> = text.lines().take(26).collect();
        assert!(matches!(parse_system(&truncated.join("\n")), Err(Error::NotAnSts { .. })));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(parse_system("7\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_system("x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_system("7\n0 1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_system("7\n0 1 7\n"), Err(Error::OutOfRange { point: 7, .. })));
    }

    #[test]
    fn listing_of_two() {
        let text = format!("{}{}", format_system(&fano()), format_system(&fano()));
        assert_eq!(parse_listing(&text).unwrap().len(), 2);
        assert!(parse_listing("7\n0 1 3\n").is_err());
    }
}
