//! Labeled pipe dreams and simple-ladder paths from `B_w` to `T_w`.
//!
//! Each cross of `B_w` is labeled by the Rothe diagram cell `(i, j)` it comes
//! from, sitting at `(i, j - r_w(i, j))`. A simple ladder move carries its
//! cross one step up and to the right along its antidiagonal, and the label
//! moves with it. Walking to `T_w` this way, the cross labeled `(i, j)` ends
//! at `(i - r_w(i, j), j)` after exactly `r_w(i, j)` moves, so every such
//! path has `sum r_w = eta(w)` steps.

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Cell, Permutation};
use crate::pipedream::{LadderMove, PipeDream};

/// A pipe dream with an injective map from its crosses to diagram cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledPipeDream {
    dream: PipeDream,
    #[serde(with = "cell_pairs")]
    labels: BTreeMap<Cell, Cell>,
}

impl LabeledPipeDream {
    /// Checks that `labels` is defined exactly on the crosses and injective.
    pub fn new(dream: PipeDream, labels: BTreeMap<Cell, Cell>) -> Result<Self> {
        if labels.len() != dream.len() || labels.keys().any(|c| !dream.crosses().contains_cell(*c)) {
            return Err(Error::Labeling(format!(
                "{} labels for {} crosses of {dream}",
                labels.len(),
                dream.len()
            )));
        }
        let distinct: HashSet<_> = labels.values().collect();
        if distinct.len() != labels.len() {
            return Err(Error::Labeling("two crosses share a label".into()));
        }
        Ok(LabeledPipeDream { dream, labels })
    }

    pub fn dream(&self) -> &PipeDream {
        &self.dream
    }

    pub fn labels(&self) -> &BTreeMap<Cell, Cell> {
        &self.labels
    }

    pub fn label_at(&self, cross: Cell) -> Option<Cell> {
        self.labels.get(&cross).copied()
    }

    /// Position of the cross carrying `label`.
    pub fn position_of(&self, label: Cell) -> Option<Cell> {
        self.labels.iter().find(|(_, &l)| l == label).map(|(&c, _)| c)
    }

    /// Labels in each antidiagonal, read top to bottom.
    pub fn labels_by_antidiagonal(&self) -> BTreeMap<usize, Vec<Cell>> {
        let mut out: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
        // Row-major iteration visits each antidiagonal top to bottom.
        for (cross, &label) in &self.labels {
            out.entry(cross.antidiagonal()).or_default().push(label);
        }
        out
    }

    /// Applies a simple ladder move; the added cross takes the label of the
    /// removed one.
    pub fn inherit_label(&self, mv: LadderMove) -> Result<LabeledPipeDream> {
        if !mv.is_simple() {
            return Err(Error::NotSimple { mv });
        }
        let dream = self.dream.apply_ladder_move(mv)?;
        let mut labels = self.labels.clone();
        let label = labels.remove(&mv.source()).expect("source of a valid move is a cross");
        labels.insert(mv.target(), label);
        Ok(LabeledPipeDream { dream, labels })
    }
}

/// `B_w` with the cross at `(i, j - r_w(i, j))` labeled `(i, j)`.
pub fn initial_labeling(w: &Permutation) -> Result<LabeledPipeDream> {
    image_labeling(w, PipeDream::bottom(w), |c, r| Cell::new(c.row, c.col - r))
}

/// `T_w` with the cross at `(i - r_w(i, j), j)` labeled `(i, j)`.
pub fn target_labeling(w: &Permutation) -> Result<LabeledPipeDream> {
    image_labeling(w, PipeDream::top(w), |c, r| Cell::new(c.row - r, c.col))
}

fn image_labeling(
    w: &Permutation,
    dream: PipeDream,
    place: impl Fn(Cell, usize) -> Cell,
) -> Result<LabeledPipeDream> {
    let mut labels = BTreeMap::new();
    for cell in &w.rothe_diagram() {
        let cross = place(cell, w.rank_unchecked(cell.row, cell.col));
        if labels.insert(cross, cell).is_some() {
            return Err(Error::Labeling(format!("{cross} is the image of two diagram cells")));
        }
    }
    LabeledPipeDream::new(dream, labels)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStep {
    #[serde(rename = "move")]
    pub mv: LadderMove,
    /// Label of the cross this step moved.
    pub label: Cell,
    /// The labeled pipe dream after the move.
    pub result: LabeledPipeDream,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathReport {
    pub permutation: Permutation,
    pub start: LabeledPipeDream,
    pub steps: Vec<PathStep>,
    /// Number of steps that moved each label.
    #[serde(with = "cell_counts")]
    pub move_counts: BTreeMap<Cell, usize>,
    pub total: usize,
}

impl PathReport {
    pub fn end(&self) -> &LabeledPipeDream {
        self.steps.last().map_or(&self.start, |s| &s.result)
    }

    /// Every labeled pipe dream on the path, starting with `B_w`.
    pub fn labeled_dreams(&self) -> impl Iterator<Item = &LabeledPipeDream> + '_ {
        std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.result))
    }
}

/// A simple-ladder path from `B_w` to `T_w`, trying moves in sorted order.
pub fn find_simple_path(w: &Permutation) -> Result<PathReport> {
    search(w, |_| {})
}

/// Like [`find_simple_path`], but tries moves in an order drawn from `rng`.
pub fn find_random_simple_path<R: Rng>(w: &Permutation, rng: &mut R) -> Result<PathReport> {
    search(w, |moves| moves.shuffle(rng))
}

fn search(w: &Permutation, mut order: impl FnMut(&mut Vec<LadderMove>)) -> Result<PathReport> {
    let target = PipeDream::top(w);
    let mut dead = HashSet::new();
    let mut moves = Vec::new();
    if !dfs(&PipeDream::bottom(w), &target, &mut dead, &mut moves, &mut order) {
        return Err(Error::NoSimplePath { word: w.word().to_vec() });
    }

    let start = initial_labeling(w)?;
    let mut current = start.clone();
    let mut steps = Vec::with_capacity(moves.len());
    let mut move_counts: BTreeMap<Cell, usize> = w.rothe_diagram().iter().map(|c| (c, 0)).collect();
    for mv in moves {
        let label = current.label_at(mv.source()).expect("source of a valid move is a cross");
        *move_counts.get_mut(&label).expect("labels are diagram cells") += 1;
        current = current.inherit_label(mv)?;
        steps.push(PathStep { mv, label, result: current.clone() });
    }
    if current != target_labeling(w)? {
        return Err(Error::Labeling(format!("labels carried to T_{w} differ from the rank placement")));
    }
    let total = steps.len();
    Ok(PathReport { permutation: w.clone(), start, steps, move_counts, total })
}

// Simple moves strictly lower the row sum of the crosses, so the search
// graph is acyclic and a dead-end set is enough to keep it linear.
fn dfs(
    p: &PipeDream,
    target: &PipeDream,
    dead: &mut HashSet<PipeDream>,
    path: &mut Vec<LadderMove>,
    order: &mut impl FnMut(&mut Vec<LadderMove>),
) -> bool {
    if p == target {
        return true;
    }
    let mut moves = p.simple_ladder_moves();
    order(&mut moves);
    for mv in moves {
        let q = p.apply_ladder_move(mv).expect("scanned moves are valid");
        if dead.contains(&q) {
            continue;
        }
        path.push(mv);
        if dfs(&q, target, dead, path, order) {
            return true;
        }
        path.pop();
    }
    dead.insert(p.clone());
    false
}

/// Whether every label `(i, j)` moves exactly `r_w(i, j)` times along the
/// path found by [`find_simple_path`].
pub fn verify_claim_plusrank(w: &Permutation) -> bool {
    let Ok(report) = find_simple_path(w) else {
        return false;
    };
    report.move_counts.iter().all(|(c, &n)| n == w.rank_unchecked(c.row, c.col))
}

mod cell_pairs {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        cross: Cell,
        label: Cell,
    }

    pub fn serialize<S: Serializer>(map: &BTreeMap<Cell, Cell>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Entry> = map.iter().map(|(&cross, &label)| Entry { cross, label }).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Cell, Cell>, D::Error> {
        let v = Vec::<Entry>::deserialize(d)?;
        Ok(v.into_iter().map(|e| (e.cross, e.label)).collect())
    }
}

mod cell_counts {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        label: Cell,
        moves: usize,
    }

    pub fn serialize<S: Serializer>(map: &BTreeMap<Cell, usize>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Entry> = map.iter().map(|(&label, &moves)| Entry { label, moves }).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Cell, usize>, D::Error> {
        let v = Vec::<Entry>::deserialize(d)?;
        Ok(v.into_iter().map(|e| (e.label, e.moves)).collect())
    }
}
