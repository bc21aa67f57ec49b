//! The geodesic cup-stacking game on graphs.
//!
//! Every vertex starts with one cup. A move takes the whole stack of `r` cups
//! on a vertex `x` and puts it onto an occupied vertex `y` at distance exactly
//! `r`. A graph is `t`-stackable when all cups can end up on `t`, and
//! stackable when that works for every `t`.
//!
//! * [`graph`]: graphs, distances, families and enumeration.
//! * [`game`]: states, moves and the sequence verifier.
//! * [`construct`]: explicit winning sequences from Hamilton paths, path
//!   partitions and graph powers.
//! * [`search`]: exact decisions, minimum weights, census and edge chains.
//! * [`certificate`]: checkable proofs that a target is out of reach.

pub mod certificate;
pub mod construct;
pub mod game;
pub mod graph;
pub mod search;

pub use game::{verify_sequence, GameState, Move, MoveSequence, Verdict};
pub use graph::{
    all_pairs_distances, build_family, DistanceMatrix, Family, Graph, GraphError, PathPartition,
};
pub use search::{decide_stackable, decide_t_stackable, min_weight, Classification, SearchOptions, Status};
