//! Explicit winning sequences built from structure: a Hamilton path, a
//! partition into paths of a bipartite graph, or the grid decomposition of a
//! graph power.
//!
//! Every public solver replays its output through the game rules before
//! returning it.

mod bipartite;
mod chunk;
mod path;
mod power;
mod tree;

pub use bipartite::{biwheel_partition, solve_bipartite_paths};
pub use chunk::{chunk_partition, stack_chunked_path, Chunk, ChunkedStack, Chunking};
pub use path::{solve_via_hamilton, stack_path};
pub use power::{canonical_hamilton_path, min_power_for_stackability, solve_power};
pub use tree::{check_tree_power_hypotheses, tree_path_partition, SubdivisionReport, TreePowerReport};

use serde::Serialize;
use thiserror::Error;

use crate::game::{Failure, GameState, Move, MoveSequence};
use crate::graph::{DistanceMatrix, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("sequence is not a path in the graph")]
    NotAPath,
    #[error("index {index} out of range for a path of {len} vertices")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("target {0} lies on the path")]
    TargetOnPath(usize),
    #[error("target {0} out of range")]
    TargetOutOfRange(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("empty path or sequence")]
    Empty,
    #[error("no Hamilton path exists")]
    NoHamiltonPath,
    #[error("chunking failed for grid {grid:?}")]
    ChunkingFailed { grid: Vec<usize> },
    #[error("constructed sequence failed verification: {0}")]
    Unverified(Failure),
}

/// How one path of a decomposition was handled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SegmentRole {
    /// Stacked directly onto the target, which lies on the path.
    Target,
    /// Cut into proper chunks, each stacked on its anchor and hopped to the target.
    Chunked,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub role: SegmentRole,
    /// The path in traversal order (after any reversal).
    pub path: Vec<usize>,
    pub reversed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub chunks: Vec<Chunk>,
    /// Path indices `(i_1, ..., i_r)` of the grid, for power solutions.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<Vec<usize>>,
    /// Coordinate traversed innermost, for power solutions.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inner_coordinate: Option<usize>,
}

/// Hypotheses of the sufficient condition a solver is built on.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub guaranteed: bool,
    pub violations: Vec<String>,
}

impl HypothesisCheck {
    fn from_violations(violations: Vec<String>) -> Self {
        HypothesisCheck {
            guaranteed: violations.is_empty(),
            violations,
        }
    }
}

/// Sidecar describing how a solution was assembled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Plan {
    pub method: &'static str,
    pub target: usize,
    pub segments: Vec<Segment>,
    pub hypotheses: HypothesisCheck,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub moves: MoveSequence,
    pub plan: Plan,
}

/// Replays `moves` from a state with one cup on each of `path` and, if given,
/// one cup on `target`; checks that the cups of `path` all end on `goal`.
fn replay_local(
    d: &DistanceMatrix,
    path: &[usize],
    target: Option<usize>,
    goal: usize,
    moves: &[Move],
) -> Result<(), Failure> {
    let mut cups = vec![0u32; d.n()];
    for &v in path {
        cups[v] = 1;
    }
    if let Some(t) = target {
        cups[t] = 1;
    }
    let mut state = GameState::from_counts(cups);
    for (index, &m) in moves.iter().enumerate() {
        crate::game::check_move(d, &state, m).map_err(|error| Failure::IllegalMove { index, error })?;
        state.apply_unchecked(m);
    }
    if !state.is_stacked_on(goal) {
        return Err(Failure::NotStacked {
            cups_on_target: state.get(goal),
            total: state.total(),
        });
    }
    Ok(())
}
