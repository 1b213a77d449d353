//! Schubert polynomials, reduced pipe dreams and the 132-bound.
//!
//! The crate computes Schubert polynomials two independent ways (as a sum
//! over reduced pipe dreams reached by ladder moves from the bottom pipe
//! dream, and by divided differences from the longest permutation), counts
//! 132-patterns, and builds labeled simple-ladder paths from the bottom to
//! the top pipe dream. The [`verify`] module sweeps whole symmetric groups
//! to check `nu(w) >= eta(w) + 1` and its consequences.

pub mod enumeration;
mod error;
pub mod labeled_path;
pub mod perm;
pub mod pipedream;
pub mod poly;
pub mod verify;

pub use enumeration::{enumerate_rp, ladder_graph, nu, schubert_from_pipedreams, LadderGraph};
pub use error::{Error, Result};
pub use labeled_path::{find_simple_path, LabeledPipeDream, PathReport};
pub use perm::{Cell, CellSet, PatternTriple, Permutation};
pub use pipedream::{LadderMove, PipeDream};
pub use poly::{schubert_divdiff, Monomial, Polynomial, SchubertMemo};
