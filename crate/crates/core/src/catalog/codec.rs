//! Text forms of a sequencing.
//!
//! The compact form writes one character per point: `0`-`9` for 0..9 and
//! `a`-`z` for 10..35, so it covers orders up to 36. Larger orders use the
//! comma-separated integer form.

use crate::error::{Error, Result};
use crate::system::{Point, Sequencing};

pub const COMPACT_MAX_ORDER: usize = 36;

/// Decodes the compact form for a system of order `v`.
pub fn decode_sequencing(text: &str, v: usize) -> Result<Sequencing> {
    if v > COMPACT_MAX_ORDER {
        return Err(Error::TooLarge(v));
    }
    let mut order = Vec::with_capacity(v);
    for (offset, ch) in text.trim().chars().enumerate() {
        let value = ch.to_digit(36).filter(|_| !ch.is_ascii_uppercase()).ok_or(Error::BadChar { ch, offset })?;
        order.push(value as usize);
    }
    to_sequencing(order, v)
}

/// Encodes in the compact form; fails above order 36.
pub fn encode_sequencing(seq: &Sequencing) -> Result<String> {
    if seq.len() > COMPACT_MAX_ORDER {
        return Err(Error::TooLarge(seq.len()));
    }
    Ok(seq.as_slice().iter().map(|&p| char::from_digit(p as u32, 36).expect("point below 36")).collect())
}

/// Compact form when it fits, comma form otherwise.
pub fn format_sequencing(seq: &Sequencing) -> String {
    encode_sequencing(seq).unwrap_or_else(|_| seq.to_string())
}

/// Accepts either the comma form (`0,4,5,...`) or the compact form.
pub fn parse_sequencing(text: &str, v: usize) -> Result<Sequencing> {
    let text = text.trim();
    if !text.contains(',') {
        return decode_sequencing(text, v);
    }
    let mut order = Vec::with_capacity(v);
    let mut offset = 0;
    for part in text.split(',') {
        let value: usize = part.trim().parse().map_err(|_| Error::BadChar {
            ch: part.trim().chars().find(|c| !c.is_ascii_digit()).unwrap_or(','),
            offset,
        })?;
        order.push(value);
        offset += part.len() + 1;
    }
    to_sequencing(order, v)
}

fn to_sequencing(order: Vec<usize>, v: usize) -> Result<Sequencing> {
    if order.len() != v {
        return Err(Error::NotAPermutation { v, detail: format!("{} symbols for {v} points", order.len()) });
    }
    if let Some(&p) = order.iter().find(|&&p| p >= v) {
        return Err(Error::NotAPermutation { v, detail: format!("point {p} out of range") });
    }
    Sequencing::new(order.into_iter().map(|p| p as Point).collect())
}
