//! Braid words, planar diagrams, and total resolutions.

mod braid;
mod diagram;
mod state;

use thiserror::Error;

pub use braid::{parse_braid, BraidWord};
pub(crate) use diagram::compact_labels;
pub use diagram::{braid_closure, parse_pd, Crossing, CrossingTag, Diagram, Origin};
pub use state::{EdgeEvent, EventKind, Resolution};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkError {
    #[error("malformed braid '{0}', expected \"<strands>: w1 w2 ...\"")]
    BadBraid(String),
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("letter {letter} out of range for {strands} strands")]
    GeneratorOutOfRange { letter: i32, strands: usize },
    #[error("malformed PD code: {0}")]
    BadPd(String),
    #[error("inconsistent orientation at arc {0}")]
    Orientation(i64),
    #[error("crossing sign must be 1 or -1, got {0}")]
    BadSign(i8),
    #[error("arc {0} out of range")]
    ArcOutOfRange(usize),
    #[error("arc {arc} used {uses} times")]
    ArcUse { arc: usize, uses: usize },
    #[error("{0} crossings exceed the supported maximum of 63")]
    TooManyCrossings(usize),
    #[error("no crossing {0}")]
    UnknownCrossing(usize),
    #[error("state has {got} bits, diagram has {expected} crossings")]
    StateLength { expected: usize, got: usize },
    #[error("crossing {0} is already 1-smoothed")]
    EdgeFromOne(usize),
    #[error("bad diagram JSON: {0}")]
    BadJson(String),
}
