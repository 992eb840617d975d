//! Good point sequencings of Steiner triple systems.
//!
//! An `ell`-good sequencing is an ordering of the points in which no `ell`
//! consecutive points contain a block; in a cyclic sequencing the windows
//! also wrap around from the end to the start. This crate builds and
//! validates systems, verifies sequencings, runs the known constructions
//! (3-good, 4-good from an independent set, `ell`-good from a colouring,
//! 5-good for 3-chromatic systems) and searches for best sequencings.

pub mod bounds;
pub mod catalog;
pub mod constructions;
pub mod error;
pub mod search;
pub mod structure;
pub mod system;

pub use error::{Error, Result};
pub use system::{
    block_span, check_ell_good, goodness_report, is_ell_good, Block, EllCheck, GoodnessReport, Point, PointSet,
    Sequencing, TripleSystem,
};
