//! Reduced pipe dreams by ladder-move closure from the bottom pipe dream.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::perm::Permutation;
use crate::pipedream::{LadderMove, PipeDream};
use crate::poly::{Monomial, Polynomial};

/// `RP(w)`, in sorted order of cross-sets.
pub fn enumerate_rp(w: &Permutation) -> Vec<PipeDream> {
    let start = PipeDream::bottom(w);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for mv in p.valid_ladder_moves() {
            let q = p.apply_ladder_move(mv).expect("scanned moves are valid");
            if !seen.contains(&q) {
                seen.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    seen.into_iter().collect()
}

/// `nu(w) = #RP(w) = S_w(1, ..., 1)`.
pub fn nu(w: &Permutation) -> usize {
    enumerate_rp(w).len()
}

/// `S_w` as the sum of `wt(P)` over `RP(w)`.
pub fn schubert_from_pipedreams(w: &Permutation) -> Polynomial {
    enumerate_rp(w)
        .iter()
        .map(|p| (Monomial::new(p.weight()), 1))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEdge {
    pub source: usize,
    pub target: usize,
    #[serde(rename = "move")]
    pub mv: LadderMove,
}

/// The ladder-move graph on `RP(w)`. Nodes are sorted by cross-set and
/// edges refer to node indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderGraph {
    pub permutation: Permutation,
    pub nodes: Vec<PipeDream>,
    pub edges: Vec<GraphEdge>,
}

pub fn ladder_graph(w: &Permutation) -> LadderGraph {
    let nodes = enumerate_rp(w);
    let index: BTreeMap<&PipeDream, usize> = nodes.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut edges = Vec::new();
    for (source, p) in nodes.iter().enumerate() {
        let mut moves = p.valid_ladder_moves();
        moves.sort();
        for mv in moves {
            let q = p.apply_ladder_move(mv).expect("scanned moves are valid");
            let target = index[&q];
            edges.push(GraphEdge { source, target, mv });
        }
    }
    LadderGraph { permutation: w.clone(), nodes, edges }
}

impl LadderGraph {
    pub fn node_index(&self, p: &PipeDream) -> Option<usize> {
        self.nodes.binary_search(p).ok()
    }

    /// Graphviz source. Node labels show the pipe dream and its weight;
    /// simple moves are solid edges and the rest dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph ladder_moves {{").unwrap();
        writeln!(out, "    label=\"RP({})\";", self.permutation).unwrap();
        writeln!(out, "    node [shape=box fontname=\"monospace\"];").unwrap();
        for (i, p) in self.nodes.iter().enumerate() {
            let monomial = Monomial::new(p.weight());
            let mut label = String::new();
            for line in p.to_ascii().lines() {
                label.push_str(line);
                label.push_str("\\l");
            }
            label.push_str(&monomial.to_string());
            label.push_str("\\l");
            writeln!(out, "    n{i} [label=\"{label}\"];").unwrap();
        }
        for e in &self.edges {
            let style = if e.mv.is_simple() { "solid" } else { "dashed" };
            writeln!(out, "    n{} -> n{} [label=\"{}\" style={style}];", e.source, e.target, e.mv).unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}
