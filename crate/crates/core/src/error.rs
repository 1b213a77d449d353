use crate::perm::Cell;
use crate::pipedream::LadderMove;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid permutation word {word:?}: {reason}")]
    InvalidPermutation { word: Vec<usize>, reason: String },

    #[error("could not parse permutation {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("cell ({row},{col}) is out of range for a grid of size {size}")]
    OutOfRange { row: usize, col: usize, size: usize },

    #[error("cross ({}, {}) lies outside the staircase of size {size}", .cell.row, .cell.col)]
    OutsideStaircase { cell: Cell, size: usize },

    #[error("ladder move {mv} is not valid on this pipe dream")]
    InvalidMove { mv: LadderMove },

    #[error("ladder move {mv} is not simple")]
    NotSimple { mv: LadderMove },

    #[error("labeling does not cover the cross-set bijectively: {0}")]
    Labeling(String),

    #[error("top pipe dream of {word:?} is not reachable by simple ladder moves")]
    NoSimplePath { word: Vec<usize> },
}
