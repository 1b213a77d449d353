//! Pipe dreams inside the staircase `{(i, j) : i + j <= n}`.
//!
//! A pipe dream is stored as its set of crosses. Every other cell of the
//! `n x n` grid is an elbow joining west to north and south to east; a cross
//! passes west to east and south to north. Strands enter at the west edge of
//! each row and leave through the top of a column.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Cell, CellSet, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPipeDream")]
pub struct PipeDream {
    size: usize,
    crosses: CellSet,
}

#[derive(Deserialize)]
struct RawPipeDream {
    size: usize,
    crosses: CellSet,
}

impl TryFrom<RawPipeDream> for PipeDream {
    type Error = Error;

    fn try_from(raw: RawPipeDream) -> Result<Self> {
        PipeDream::new(raw.size, raw.crosses)
    }
}

/// A ladder move anchored at the empty cell `(row, col)`.
///
/// It removes the cross at `(row + rungs + 1, col)` and adds one at
/// `(row, col + 1)`; the `rungs` rows in between hold crosses in both
/// columns. A move with no rungs is simple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LadderMove {
    pub row: usize,
    pub col: usize,
    pub rungs: usize,
}

impl LadderMove {
    pub const fn new(row: usize, col: usize, rungs: usize) -> Self {
        LadderMove { row, col, rungs }
    }

    pub const fn is_simple(self) -> bool {
        self.rungs == 0
    }

    pub const fn source(self) -> Cell {
        Cell::new(self.row + self.rungs + 1, self.col)
    }

    pub const fn target(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }
}

impl fmt::Display for LadderMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.rungs)
    }
}

impl PipeDream {
    pub fn new(size: usize, crosses: CellSet) -> Result<Self> {
        if let Some(cell) = crosses.iter().find(|c| c.row == 0 || c.col == 0 || c.row + c.col > size) {
            return Err(Error::OutsideStaircase { cell, size });
        }
        Ok(PipeDream { size, crosses })
    }

    pub fn empty(size: usize) -> Self {
        PipeDream { size, crosses: CellSet::new() }
    }

    /// `B_w`: the Rothe diagram left-justified within each row.
    pub fn bottom(w: &Permutation) -> Self {
        let crosses = w
            .m_vector()
            .into_iter()
            .enumerate()
            .flat_map(|(i, m)| (1..=m).map(move |j| Cell::new(i + 1, j)))
            .collect();
        PipeDream { size: w.size(), crosses }
    }

    /// `T_w`: the transpose of `B_{w^-1}`.
    pub fn top(w: &Permutation) -> Self {
        let b = PipeDream::bottom(&w.inverse());
        PipeDream { size: w.size(), crosses: b.crosses.transpose() }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn crosses(&self) -> &CellSet {
        &self.crosses
    }

    pub fn len(&self) -> usize {
        self.crosses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crosses.is_empty()
    }

    pub fn has_cross(&self, row: usize, col: usize) -> bool {
        self.crosses.contains(row, col)
    }

    /// Traces every strand and returns `w_P` in `S_size`.
    pub fn wiring_permutation(&self) -> Permutation {
        let word = (1..=self.size).map(|row| self.trace(row)).collect();
        Permutation::from_one_line(word).expect("strands of a staircase pipe dream form a permutation")
    }

    fn trace(&self, start_row: usize) -> usize {
        let (mut row, mut col) = (start_row, 1);
        let mut heading_east = true;
        while row > 0 {
            if !self.has_cross(row, col) {
                heading_east = !heading_east;
            }
            if heading_east {
                col += 1;
            } else {
                row -= 1;
            }
        }
        col
    }

    pub fn is_reduced(&self) -> bool {
        self.len() == self.wiring_permutation().length()
    }

    /// Crosses per row, `weight()[i-1]` being the exponent of `x_i`.
    pub fn weight(&self) -> Vec<u32> {
        let mut exps = vec![0u32; self.size];
        for c in &self.crosses {
            exps[c.row - 1] += 1;
        }
        exps
    }

    /// Crosses per antidiagonal `k = i + j - 1`, for `k = 1..size`.
    pub fn antidiagonal_vector(&self) -> Vec<usize> {
        let mut counts = vec![0; self.size.saturating_sub(1)];
        for c in &self.crosses {
            counts[c.antidiagonal() - 1] += 1;
        }
        counts
    }

    /// Every ladder move applicable to this pipe dream, for every rung count.
    pub fn valid_ladder_moves(&self) -> Vec<LadderMove> {
        let n = self.size;
        let mut moves = Vec::new();
        for row in 1..n {
            for col in 1..n - row {
                if self.has_cross(row, col) || self.has_cross(row, col + 1) {
                    continue;
                }
                let mut r = row + 1;
                while r + col <= n && self.has_cross(r, col) {
                    if !self.has_cross(r, col + 1) {
                        moves.push(LadderMove::new(row, col, r - row - 1));
                        break;
                    }
                    r += 1;
                }
            }
        }
        moves
    }

    pub fn simple_ladder_moves(&self) -> Vec<LadderMove> {
        self.valid_ladder_moves().into_iter().filter(|m| m.is_simple()).collect()
    }

    pub fn is_valid_move(&self, mv: LadderMove) -> bool {
        let LadderMove { row, col, rungs } = mv;
        let source = mv.source();
        row >= 1
            && col >= 1
            && source.row + source.col <= self.size
            && !self.has_cross(row, col)
            && !self.has_cross(row, col + 1)
            && (row + 1..=row + rungs).all(|r| self.has_cross(r, col) && self.has_cross(r, col + 1))
            && self.has_cross(source.row, source.col)
            && !self.has_cross(source.row, col + 1)
    }

    pub fn apply_ladder_move(&self, mv: LadderMove) -> Result<PipeDream> {
        if !self.is_valid_move(mv) {
            return Err(Error::InvalidMove { mv });
        }
        let mut crosses = self.crosses.clone();
        crosses.remove(mv.source());
        crosses.insert(mv.target());
        Ok(PipeDream { size: self.size, crosses })
    }

    /// Row-major staircase picture: row `i` has `size - i` cells drawn as
    /// `+` (cross) or `.` (elbow); rows are newline-separated.
    pub fn to_ascii(&self) -> String {
        (1..self.size)
            .map(|i| {
                (1..=self.size - i)
                    .map(|j| if self.has_cross(i, j) { '+' } else { '.' })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.crosses.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", cells.join(","))
    }
}
