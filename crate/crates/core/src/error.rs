use std::path::PathBuf;

use crate::system::{Block, Point};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("order {0} is not admissible (need v = 1 or 3 mod 6, 3 <= v <= 255)")]
    BadOrder(usize),
    #[error("point {point} is out of range for order {v}")]
    OutOfRange { point: usize, v: usize },
    #[error("not a Steiner triple system: pair {{{a},{b}}} covered {count} times")]
    NotAnSts { a: Point, b: Point, count: usize },
    #[error("block {0} has a repeated point")]
    DegenerateBlock(String),
    #[error("third point requested for the same point {0} twice")]
    SamePoint(Point),
    #[error("sequencing has length {got}, system has order {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("starter blocks generate the block {0} more than once")]
    OrbitCollision(Block),
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),
    #[error("data file {} is missing; set STSEQ_DATA_DIR or --data-dir", .0.display())]
    MissingDataFile(PathBuf),
    #[error("character `{ch}` at offset {offset} is not a point symbol")]
    BadChar { ch: char, offset: usize },
    #[error("not a permutation of 0..{v}: {detail}")]
    NotAPermutation { v: usize, detail: String },
    #[error("order {0} is too large for the compact codec (max 36); use the comma form")]
    TooLarge(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("greedy step `{step}` had no admissible choice")]
    StuckChoice { step: String },
    #[error("colour class of size {size} is below the required {required}")]
    ClassTooSmall { size: usize, required: usize },
    #[error("colour profile {0:?} is outside the handled cases")]
    UnhandledProfile(Vec<usize>),
    #[error("colouring does not have exactly three classes")]
    NotThreeChromatic,
    #[error("block {0} is monochromatic")]
    ImproperColouring(Block),
    #[error("constructed sequencing failed verification: {0}")]
    VerificationFailed(String),
    #[error("ledger line {line} is malformed: {msg}")]
    LedgerCorrupt { line: usize, msg: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
