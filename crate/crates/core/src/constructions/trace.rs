use std::fmt;

use crate::error::{Error, Result};
use crate::system::{Point, Sequencing};

/// One placement: the point put at `position` and the points that were ruled
/// out for that slot when it was chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pick {
    pub position: usize,
    pub point: Point,
    pub excluded: Vec<Point>,
}

/// Audit log of a construction.
///
/// Text form:
///
/// ```text
/// method colour-classes
/// v 19
/// pick 0 3 -
/// pick 7 11 2,5,9
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub method: String,
    pub picks: Vec<Pick>,
    pub sequencing: Sequencing,
}

impl ConstructionTrace {
    /// Rebuilds the sequencing from the picks alone, checking that no pick
    /// used a point it had excluded.
    pub fn replay(&self) -> Result<Sequencing> {
        replay_picks(self.sequencing.len(), &self.picks)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut method = None;
        let mut v = None;
        let mut picks = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|_| err(&format!("bad number {s:?}")));
            match fields.as_slice() {
                ["method", m] => method = Some(m.to_string()),
                ["v", n] => v = Some(num(n)?),
                ["pick", pos, point, excluded] => {
                    let point = num(point)?;
                    let point = Point::try_from(point).map_err(|_| err("point too large"))?;
                    let excluded = if *excluded == "-" {
                        Vec::new()
                    } else {
                        excluded
                            .split(',')
                            .map(|s| num(s).and_then(|p| Point::try_from(p).map_err(|_| err("point too large"))))
                            .collect::<Result<_>>()?
                    };
                    picks.push(Pick { position: num(pos)?, point, excluded });
                }
                _ => return Err(err("expected `method`, `v` or `pick` line")),
            }
        }
        let method = method.ok_or(Error::Parse { line: 0, msg: "missing method line".into() })?;
        let v = v.ok_or(Error::Parse { line: 0, msg: "missing v line".into() })?;
        let sequencing = replay_picks(v, &picks)?;
        Ok(ConstructionTrace { method, picks, sequencing })
    }
}

fn replay_picks(v: usize, picks: &[Pick]) -> Result<Sequencing> {
    let mut order: Vec<Option<Point>> = vec![None; v];
    for pick in picks {
        if pick.excluded.contains(&pick.point) {
            return Err(Error::VerificationFailed(format!(
                "pick at position {} uses excluded point {}",
                pick.position, pick.point
            )));
        }
        match order.get_mut(pick.position) {
            Some(slot @ None) => *slot = Some(pick.point),
            Some(Some(_)) => {
                return Err(Error::VerificationFailed(format!("position {} picked twice", pick.position)));
            }
            None => return Err(Error::OutOfRange { point: pick.position, v }),
        }
    }
    let order = order
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| Error::VerificationFailed(format!("position {i} never picked"))))
        .collect::<Result<Vec<_>>>()?;
    Sequencing::new(order)
}

impl fmt::Display for ConstructionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "method {}", self.method)?;
        writeln!(f, "v {}", self.sequencing.len())?;
        for pick in &self.picks {
            let excluded = if pick.excluded.is_empty() {
                "-".to_string()
            } else {
                pick.excluded.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
            };
            writeln!(f, "pick {} {} {}", pick.position, pick.point, excluded)?;
        }
        Ok(())
    }
}
