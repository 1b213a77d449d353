//! Permutations in one-line notation, Rothe diagrams, rank functions and
//! 132-pattern occurrences.
//!
//! Everything is 1-based: `w.at(i)` is `w(i)` for `1 <= i <= n`, and a
//! [`Cell`] `(row, col)` counts rows from the top and columns from the left.
//! A permutation's `n` is the length of its word; nothing here silently
//! embeds `S_n` into a larger group.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A grid cell in matrix coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub const fn transpose(self) -> Self {
        Cell { row: self.col, col: self.row }
    }

    /// Index of the antidiagonal containing this cell, `row + col - 1`.
    pub const fn antidiagonal(self) -> usize {
        self.row + self.col - 1
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A finite set of grid cells, iterated in row-major order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CellSet(BTreeSet<Cell>);

impl CellSet {
    pub fn new() -> Self {
        CellSet(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.0.contains(&Cell::new(row, col))
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.0.contains(&cell)
    }

    pub fn insert(&mut self, cell: Cell) -> bool {
        self.0.insert(cell)
    }

    pub fn remove(&mut self, cell: Cell) -> bool {
        self.0.remove(&cell)
    }

    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().copied()
    }

    pub fn transpose(&self) -> CellSet {
        self.iter().map(Cell::transpose).collect()
    }

    /// Columns occupied in `row`, increasing.
    pub fn row(&self, row: usize) -> impl Iterator<Item = usize> + '_ {
        self.0
            .range(Cell::new(row, 0)..Cell::new(row + 1, 0))
            .map(|c| c.col)
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        CellSet(iter.into_iter().collect())
    }
}

impl FromIterator<(usize, usize)> for CellSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        CellSet(iter.into_iter().map(Cell::from).collect())
    }
}

impl<'a> IntoIterator for &'a CellSet {
    type Item = Cell;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Cell>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Positions `i < j < k` with `w(i) < w(k) < w(j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize, usize)", into = "(usize, usize, usize)")]
pub struct PatternTriple {
    i: usize,
    j: usize,
    k: usize,
}

impl PatternTriple {
    pub fn new(i: usize, j: usize, k: usize) -> Option<Self> {
        (1 <= i && i < j && j < k).then_some(PatternTriple { i, j, k })
    }

    pub fn positions(self) -> (usize, usize, usize) {
        (self.i, self.j, self.k)
    }
}

impl TryFrom<(usize, usize, usize)> for PatternTriple {
    type Error = String;

    fn try_from((i, j, k): (usize, usize, usize)) -> Result<Self, String> {
        PatternTriple::new(i, j, k).ok_or_else(|| format!("({i},{j},{k}) is not increasing"))
    }
}

impl From<PatternTriple> for (usize, usize, usize) {
    fn from(t: PatternTriple) -> Self {
        (t.i, t.j, t.k)
    }
}

impl fmt::Display for PatternTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn from_one_line(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation {
                    reason: format!("entry {v} is outside 1..={n}"),
                    word,
                });
            }
            if seen[v] {
                return Err(Error::InvalidPermutation {
                    reason: format!("duplicate entry {v}"),
                    word,
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n).collect() }
    }

    /// The longest element `n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { word: (1..=n).rev().collect() }
    }

    /// Every permutation of `S_n`, in lexicographic order of words.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some(Permutation::identity(n).word) }
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)`, 1-based. Panics when `i` is outside `1..=n`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(p, &v)| v == p + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (p, &v) in self.word.iter().enumerate() {
            inv[v - 1] = p + 1;
        }
        Permutation { word: inv }
    }

    /// `w s_i`: swaps the entries in positions `i` and `i + 1`.
    pub fn swap_positions(&self, i: usize) -> Permutation {
        assert!(i >= 1 && i < self.size(), "s_{i} is not a simple transposition of S_{}", self.size());
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// Positions `i` with `w(i) < w(i+1)`.
    pub fn ascents(&self) -> impl Iterator<Item = usize> + '_ {
        self.word.windows(2).enumerate().filter(|(_, p)| p[0] < p[1]).map(|(i, _)| i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    pub fn rothe_diagram(&self) -> CellSet {
        let n = self.size();
        let inv = self.inverse();
        let mut cells = CellSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if self.at(i) > j && inv.at(j) > i {
                    cells.insert(Cell::new(i, j));
                }
            }
        }
        cells
    }

    /// `r_w(i, j) = #{k <= i : w(k) <= j}`.
    pub fn rank(&self, i: usize, j: usize) -> Result<usize> {
        let n = self.size();
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::OutOfRange { row: i, col: j, size: n });
        }
        Ok(self.rank_unchecked(i, j))
    }

    pub(crate) fn rank_unchecked(&self, i: usize, j: usize) -> usize {
        self.word[..i].iter().filter(|&&v| v <= j).count()
    }

    /// The `n x n` rank table, `table[i-1][j-1] = r_w(i, j)`.
    pub fn rank_table(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (1..=n).map(|i| (1..=n).map(|j| self.rank_unchecked(i, j)).collect()).collect()
    }

    /// Exhaustive `O(n^3)` scan for 132-patterns.
    pub fn pattern_occurrences_132(&self) -> BTreeSet<PatternTriple> {
        let w = &self.word;
        let n = w.len();
        let mut out = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if w[i] < w[k] && w[k] < w[j] {
                        out.insert(PatternTriple { i: i + 1, j: j + 1, k: k + 1 });
                    }
                }
            }
        }
        out
    }

    /// Number of 132-patterns.
    pub fn eta(&self) -> usize {
        self.pattern_occurrences_132().len()
    }

    /// Sum of the rank function over the Rothe diagram. Counts the same
    /// quantity as [`Permutation::eta`] without scanning triples.
    pub fn eta_via_rank(&self) -> usize {
        self.rothe_diagram().iter().map(|c| self.rank_unchecked(c.row, c.col)).sum()
    }

    /// `m_i(w) = #{j > i : w(j) < w(i)}` (the Lehmer code).
    pub fn m_vector(&self) -> Vec<usize> {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .collect()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

/// Accepts comma-separated entries (`4,7,2,1,6,3,5`) or, for `n <= 9`,
/// contiguous digits (`4721635`).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let err = |reason: String| Error::Parse { input: s.to_string(), reason };
        if s.is_empty() {
            return Err(err("empty word".into()));
        }
        let word = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| err(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d > 0 => Ok(d as usize),
                    _ => Err(err(format!("{c:?} is not a digit 1-9; use commas for n >= 10"))),
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::from_one_line(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.size() > 9 { "," } else { "" };
        let parts: Vec<String> = self.word.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

/// Iterator over `S_n` in lexicographic order.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { word: current })
    }
}

fn next_lexicographic(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn cells(v: &[(usize, usize)]) -> CellSet {
        v.iter().copied().collect()
    }

    #[test]
    fn one_line_validation() {
        assert!(Permutation::from_one_line(vec![1]).unwrap().is_identity());
        assert_eq!(Permutation::from_one_line(vec![4, 7, 2, 1, 6, 3, 5]).unwrap().size(), 7);
        assert!(matches!(
            Permutation::from_one_line(vec![1, 1, 2]),
            Err(Error::InvalidPermutation { .. })
        ));
        assert!(Permutation::from_one_line(vec![0, 1]).is_err());
        assert!(Permutation::from_one_line(vec![1, 4, 2]).is_err());
    }

    #[test]
    fn parsing_forms_agree() {
        assert_eq!(p("4721635"), p("4,7,2,1,6,3,5"));
        assert_eq!(p(" 4, 7,2,1,6,3,5 "), p("4721635"));
        assert!("4720635".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert!("1,x".parse::<Permutation>().is_err());
        let big: Permutation = "10,9,8,7,6,5,4,3,2,1".parse().unwrap();
        assert_eq!(big, Permutation::longest(10));
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(p("4721635").to_string(), "4721635");
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("1234").inverse(), p("1234"));
        let w = p("4721635");
        let inv = w.inverse();
        assert_eq!(inv, p("4361752"));
        for i in 1..=7 {
            assert_eq!(inv.at(w.at(i)), i);
        }
        assert_eq!(p("1432").inverse(), p("1432"));
    }

    #[test]
    fn length_examples() {
        assert_eq!(p("1234").length(), 0);
        assert_eq!(p("4721635").length(), 11);
        for n in 1..=8 {
            assert_eq!(Permutation::longest(n).length(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn rothe_examples() {
        assert!(p("1234").rothe_diagram().is_empty());
        let d = p("4721635").rothe_diagram();
        let expected = cells(&[
            (1, 1), (1, 2), (1, 3),
            (2, 1), (2, 2), (2, 3), (2, 5), (2, 6),
            (3, 1),
            (5, 3), (5, 5),
        ]);
        assert_eq!(d, expected);
        assert_eq!(p("1432").rothe_diagram(), cells(&[(2, 2), (2, 3), (3, 2)]));
        assert_eq!(d.row(2).collect::<Vec<_>>(), vec![1, 2, 3, 5, 6]);
        assert_eq!(d.row(4).count(), 0);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(p("1432").rank(2, 2).unwrap(), 1);
        assert_eq!(p("4721635").rank(5, 5).unwrap(), 3);
        let w = p("4721635");
        assert_eq!(w.rank(7, 7).unwrap(), 7);
        assert!(matches!(w.rank(0, 1), Err(Error::OutOfRange { .. })));
        assert!(w.rank(8, 1).is_err());
        assert!(w.rank(1, 8).is_err());
    }

    #[test]
    fn pattern_examples() {
        assert!(p("1234").pattern_occurrences_132().is_empty());
        let got: Vec<_> = p("1432").pattern_occurrences_132().into_iter().map(PatternTriple::positions).collect();
        assert_eq!(got, vec![(1, 2, 3), (1, 2, 4), (1, 3, 4)]);
        for n in 1..=7 {
            assert!(Permutation::longest(n).pattern_occurrences_132().is_empty());
        }
        assert!(PatternTriple::new(2, 2, 3).is_none());
    }

    #[test]
    fn eta_examples() {
        assert_eq!(p("132").eta(), 1);
        assert_eq!(p("1432").eta(), 3);
        assert_eq!(p("4721635").eta(), 7);
        assert_eq!(p("1234").eta_via_rank(), 0);
        assert_eq!(p("1432").eta_via_rank(), 3);
        assert_eq!(p("4721635").eta_via_rank(), 7);
    }

    #[test]
    fn eta_via_rank_nonzero_terms_for_4721635() {
        let w = p("4721635");
        let nonzero: Vec<_> = w
            .rothe_diagram()
            .iter()
            .map(|c| (c, w.rank(c.row, c.col).unwrap()))
            .filter(|&(_, r)| r > 0)
            .map(|(c, r)| (c.row, c.col, r))
            .collect();
        assert_eq!(nonzero, vec![(2, 5, 1), (2, 6, 1), (5, 3, 2), (5, 5, 3)]);
    }

    #[test]
    fn m_vector_examples() {
        assert_eq!(p("1234").m_vector(), vec![0, 0, 0, 0]);
        assert_eq!(p("1432").m_vector(), vec![0, 2, 1, 0]);
        assert_eq!(p("4721635").m_vector(), vec![3, 5, 1, 0, 2, 0, 0]);
    }

    #[test]
    fn all_enumerates_factorial_many_in_order() {
        let counts: Vec<usize> = (0..=6).map(|n| Permutation::all(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 24, 120, 720]);
        let s3: Vec<String> = Permutation::all(3).map(|w| w.to_string()).collect();
        assert_eq!(s3, ["123", "132", "213", "231", "312", "321"]);
    }

    #[test]
    fn swap_and_ascents() {
        let w = p("1432");
        assert_eq!(w.swap_positions(1), p("4132"));
        assert_eq!(w.ascents().collect::<Vec<_>>(), vec![1]);
        assert_eq!(Permutation::longest(4).ascents().count(), 0);
    }

    #[test]
    fn serde_word_round_trip_rejects_invalid() {
        let w = p("4721635");
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, "[4,7,2,1,6,3,5]");
        assert_eq!(serde_json::from_str::<Permutation>(&json).unwrap(), w);
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }
}

#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    fn any_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_n)
            .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|w| Permutation::from_one_line(w).unwrap())
    }

    #[test]
    fn eta_matches_rank_sum_exhaustively() {
        for n in 1..=7 {
            for w in Permutation::all(n) {
                assert_eq!(w.eta(), w.eta_via_rank(), "{w}");
            }
        }
    }

    proptest! {
        #[test]
        fn inverse_is_involution(w in any_perm(10)) {
            prop_assert_eq!(w.inverse().inverse(), w.clone());
            prop_assert_eq!(w.length(), w.inverse().length());
        }

        #[test]
        fn diagram_of_inverse_is_transpose(w in any_perm(10)) {
            prop_assert_eq!(w.inverse().rothe_diagram(), w.rothe_diagram().transpose());
        }

        #[test]
        fn length_counts_boxes_and_code(w in any_perm(10)) {
            let d = w.rothe_diagram();
            let m = w.m_vector();
            prop_assert_eq!(w.length(), d.len());
            prop_assert_eq!(w.length(), m.iter().sum::<usize>());
            for i in 1..=w.size() {
                prop_assert_eq!(d.row(i).count(), m[i - 1]);
            }
        }

        #[test]
        fn rank_is_monotone(w in any_perm(9)) {
            let n = w.size();
            for i in 1..=n {
                for j in 1..=n {
                    let r = w.rank(i, j).unwrap();
                    if i < n { prop_assert!(w.rank(i + 1, j).unwrap() >= r); }
                    if j < n { prop_assert!(w.rank(i, j + 1).unwrap() >= r); }
                }
                prop_assert_eq!(w.rank(n, i).unwrap(), i);
            }
        }

        #[test]
        fn eta_matches_rank_sum(w in any_perm(10)) {
            prop_assert_eq!(w.eta(), w.eta_via_rank());
        }
    }
}
