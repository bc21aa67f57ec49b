//! Rules of the geodesic cup-stacking game.
//!
//! Every vertex starts with one cup. A move takes the whole stack of `r` cups
//! from a vertex `x` onto an occupied vertex `y` with `d(x, y) = r`. The game is
//! won for target `t` when all cups sit on `t`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GameState {
    cups: Vec<u32>,
    total: u32,
}

/// One cup on every vertex.
pub fn initial_state(g: &Graph) -> GameState {
    GameState::from_counts(vec![1; g.n()])
}

impl GameState {
    pub fn from_counts(cups: Vec<u32>) -> Self {
        let total = cups.iter().sum();
        GameState { cups, total }
    }

    pub fn cups(&self) -> &[u32] {
        &self.cups
    }

    pub fn get(&self, v: usize) -> u32 {
        self.cups[v]
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn n(&self) -> usize {
        self.cups.len()
    }

    pub fn occupied(&self) -> usize {
        self.cups.iter().filter(|&&c| c > 0).count()
    }

    /// All cups are on `t`.
    pub fn is_stacked_on(&self, t: usize) -> bool {
        self.cups.get(t) == Some(&self.total)
    }

    /// Applies `m` without any legality check. For search inner loops only.
    #[inline]
    pub fn apply_unchecked(&mut self, m: Move) {
        self.cups[m.from] = 0;
        self.cups[m.to] += m.cups;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Move {
    pub from: usize,
    pub to: usize,
    pub cups: u32,
}

impl Move {
    pub fn new(from: usize, to: usize, cups: u32) -> Self {
        Move { from, to, cups }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{} ({})", self.from, self.to, self.cups)
    }
}

/// An ordered list of moves with its cached total weight. Serializes as a
/// bare JSON array of moves.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<Move>", into = "Vec<Move>")]
pub struct MoveSequence {
    moves: Vec<Move>,
    weight: u64,
}

impl From<Vec<Move>> for MoveSequence {
    fn from(moves: Vec<Move>) -> Self {
        let weight = moves.iter().map(|m| u64::from(m.cups)).sum();
        MoveSequence { moves, weight }
    }
}

impl From<MoveSequence> for Vec<Move> {
    fn from(seq: MoveSequence) -> Self {
        seq.moves
    }
}

impl MoveSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, m: Move) {
        self.weight += u64::from(m.cups);
        self.moves.push(m);
    }

    pub fn append(&mut self, other: MoveSequence) {
        self.weight += other.weight;
        self.moves.extend(other.moves);
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Total number of cups moved, summed over moves.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Renames vertices, e.g. to transport a witness along an automorphism.
    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> MoveSequence {
        self.moves
            .iter()
            .map(|m| Move::new(f(m.from), f(m.to), m.cups))
            .collect::<Vec<_>>()
            .into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.moves).expect("moves serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Which clause of the move rule a move breaks.
#[derive(Clone, Debug, Error, PartialEq, Eq, Serialize)]
pub enum MoveError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("source and target are both {0}")]
    SameVertex(usize),
    #[error("move declares {declared} cups but the source holds {actual}")]
    WrongStackSize { declared: u32, actual: u32 },
    #[error("target {0} holds no cups")]
    EmptyTarget(usize),
    #[error("distance {distance:?} does not equal the stack size {cups}")]
    DistanceMismatch { distance: Option<usize>, cups: u32 },
}

/// Checks the move rule against state `s`.
pub fn check_move(d: &DistanceMatrix, s: &GameState, m: Move) -> Result<(), MoveError> {
    for v in [m.from, m.to] {
        if v >= s.n() || v >= d.n() {
            return Err(MoveError::VertexOutOfRange(v));
        }
    }
    if m.from == m.to {
        return Err(MoveError::SameVertex(m.from));
    }
    let actual = s.get(m.from);
    if actual == 0 || actual != m.cups {
        return Err(MoveError::WrongStackSize {
            declared: m.cups,
            actual,
        });
    }
    if s.get(m.to) == 0 {
        return Err(MoveError::EmptyTarget(m.to));
    }
    let distance = d.get(m.from, m.to);
    if distance != Some(m.cups as usize) {
        return Err(MoveError::DistanceMismatch {
            distance,
            cups: m.cups,
        });
    }
    Ok(())
}

pub fn apply_move(d: &DistanceMatrix, s: &GameState, m: Move) -> Result<GameState, MoveError> {
    check_move(d, s, m)?;
    let mut next = s.clone();
    next.apply_unchecked(m);
    Ok(next)
}

/// Every legal move in `s`, ordered by source then target.
pub fn legal_moves(d: &DistanceMatrix, s: &GameState) -> Vec<Move> {
    let n = s.n();
    let mut moves = Vec::new();
    for from in 0..n {
        let r = s.get(from);
        if r == 0 {
            continue;
        }
        for to in 0..n {
            if to != from && s.get(to) > 0 && d.get(from, to) == Some(r as usize) {
                moves.push(Move::new(from, to, r));
            }
        }
    }
    moves
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "failure", rename_all = "kebab-case")]
pub enum Failure {
    TargetOutOfRange { target: usize },
    IllegalMove { index: usize, error: MoveError },
    NotStacked { cups_on_target: u32, total: u32 },
    WrongMoveCount { expected: usize, actual: usize },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::TargetOutOfRange { target } => write!(f, "target {target} out of range"),
            Failure::IllegalMove { index, error } => write!(f, "move #{index} is illegal: {error}"),
            Failure::NotStacked {
                cups_on_target,
                total,
            } => write!(f, "only {cups_on_target} of {total} cups end on the target"),
            Failure::WrongMoveCount { expected, actual } => {
                write!(f, "expected {expected} moves, got {actual}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Failure),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Replays `seq` from the initial state and checks that it wins for `t`.
pub fn verify_sequence(g: &Graph, t: usize, seq: &MoveSequence) -> Verdict {
    verify_with_distances(&all_pairs_distances(g), t, seq)
}

/// [`verify_sequence`] with precomputed distances.
pub fn verify_with_distances(d: &DistanceMatrix, t: usize, seq: &MoveSequence) -> Verdict {
    let n = d.n();
    if t >= n {
        return Verdict::Invalid(Failure::TargetOutOfRange { target: t });
    }
    let mut state = GameState::from_counts(vec![1; n]);
    for (index, &m) in seq.moves().iter().enumerate() {
        if let Err(error) = check_move(d, &state, m) {
            return Verdict::Invalid(Failure::IllegalMove { index, error });
        }
        state.apply_unchecked(m);
    }
    if !state.is_stacked_on(t) {
        return Verdict::Invalid(Failure::NotStacked {
            cups_on_target: state.get(t),
            total: state.total(),
        });
    }
    if seq.len() != n - 1 {
        return Verdict::Invalid(Failure::WrongMoveCount {
            expected: n - 1,
            actual: seq.len(),
        });
    }
    Verdict::Valid
}
