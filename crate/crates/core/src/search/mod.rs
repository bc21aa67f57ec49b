//! Exact decisions by exhaustive search over game states.
//!
//! A state is the vector of cup counts, packed into a `u128`. Only failed
//! states are memoized. Two prunings keep the search exact: cups never leave
//! the target (it could not be refilled), and a stack on a non-target vertex
//! taller than that vertex's eccentricity can never move again.

mod census;
mod chain;
mod symmetry;
mod weight;

pub use census::{census_stackable_nonhamiltonian, Census, CensusEntry};
pub use chain::{align_supergraph, find_alternating_chain, Chain};
pub use symmetry::{automorphism_mapping, target_orbits, Orbits};
pub use weight::{min_weight, weight_table, WeightOutcome, WeightTable};

use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::Serialize;
use thiserror::Error;

use crate::game::{verify_with_distances, Move, MoveSequence, Verdict};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, GraphError};

/// Largest graph the packed state encoding supports.
pub const MAX_SEARCH_VERTICES: usize = 25;
pub const DEFAULT_DECIDE_BUDGET: u64 = 50_000_000;
pub const DEFAULT_WEIGHT_BUDGET: u64 = 20_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("search supports at most {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("target {0} out of range")]
    TargetOutOfRange(usize),
    #[error("base graph is not a subgraph of the supergraph")]
    NotSubgraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Stackable,
    Not,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Stackable,
    NonStackable,
    StronglyNonStackable,
    Unknown,
}

impl Classification {
    fn from_statuses(statuses: impl IntoIterator<Item = Status>) -> Self {
        let (mut yes, mut no, mut unknown) = (0, 0, 0);
        for s in statuses {
            match s {
                Status::Stackable => yes += 1,
                Status::Not => no += 1,
                Status::Unknown => unknown += 1,
            }
        }
        match (yes, no, unknown) {
            (_, 0, 0) => Classification::Stackable,
            (0, _, 0) => Classification::StronglyNonStackable,
            (_, 0, _) => Classification::Unknown,
            _ => Classification::NonStackable,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Cap on expanded states per target.
    pub budget: u64,
    /// Search one target per automorphism orbit and map witnesses.
    pub symmetry: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_DECIDE_BUDGET,
            symmetry: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TargetOutcome {
    pub target: usize,
    pub status: Status,
    pub witness: Option<MoveSequence>,
    pub explored: u64,
    pub memo_hits: u64,
    /// Representative whose search answered this target, when symmetry was used.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub via: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub classification: Classification,
    pub verdicts: Vec<TargetOutcome>,
    pub explored: u64,
    pub memo_hits: u64,
}

/// Distance tables shared by all searches on one graph.
pub(crate) struct Arena {
    pub n: usize,
    pub bits: u32,
    pub dist: DistanceMatrix,
    pub ecc: Vec<usize>,
    /// `at[x][r]`: vertices at distance exactly `r` from `x`, ascending.
    pub at: Vec<Vec<Vec<usize>>>,
}

impl Arena {
    pub fn new(g: &Graph) -> Result<Self, SearchError> {
        let n = g.n();
        if n == 0 {
            return Err(SearchError::Empty);
        }
        if n > MAX_SEARCH_VERTICES {
            return Err(SearchError::TooManyVertices {
                n,
                max: MAX_SEARCH_VERTICES,
            });
        }
        let dist = all_pairs_distances(g);
        if !dist.is_connected() {
            return Err(SearchError::Disconnected);
        }
        let ecc: Vec<usize> = (0..n).map(|x| dist.eccentricity(x).expect("connected")).collect();
        let at = (0..n)
            .map(|x| {
                let mut rows = vec![Vec::new(); n + 1];
                for y in 0..n {
                    rows[dist.get(x, y).expect("connected")].push(y);
                }
                rows
            })
            .collect();
        let bits = usize::BITS - n.leading_zeros();
        Ok(Arena {
            n,
            bits,
            dist,
            ecc,
            at,
        })
    }

    pub fn pack(&self, cups: &[u32]) -> u128 {
        cups.iter().enumerate().fold(0u128, |acc, (v, &c)| {
            acc | (c as u128) << (self.bits as usize * v)
        })
    }

    pub fn unpack(&self, key: u128) -> Vec<u32> {
        let mask = (1u128 << self.bits) - 1;
        (0..self.n)
            .map(|v| (key >> (self.bits as usize * v) & mask) as u32)
            .collect()
    }

    #[inline]
    pub fn shift(&self, v: usize) -> u32 {
        self.bits * v as u32
    }

    /// Legal, unpruned successors of `cups` for target `t`, lexicographic.
    pub fn moves(&self, cups: &[u32], t: usize) -> Vec<Move> {
        let mut out = Vec::new();
        for x in 0..self.n {
            let r = cups[x] as usize;
            if r == 0 || x == t || r >= self.at[x].len() {
                continue;
            }
            for &y in &self.at[x][r] {
                if cups[y] > 0 && (y == t || (cups[y] as usize + r) <= self.ecc[y]) {
                    out.push(Move::new(x, y, r as u32));
                }
            }
        }
        out
    }

    fn check_target(&self, t: usize) -> Result<(), SearchError> {
        if t >= self.n {
            return Err(SearchError::TargetOutOfRange(t));
        }
        Ok(())
    }
}

enum Flow {
    Found,
    Failed,
    OutOfBudget,
}

struct Dfs<'a> {
    arena: &'a Arena,
    t: usize,
    budget: u64,
    cups: Vec<u32>,
    key: u128,
    stack: Vec<Move>,
    failed: FxHashSet<u128>,
    explored: u64,
    memo_hits: u64,
}

impl Dfs<'_> {
    fn run(&mut self, occupied: usize) -> Flow {
        if occupied == 1 {
            return Flow::Found;
        }
        if self.failed.contains(&self.key) {
            self.memo_hits += 1;
            return Flow::Failed;
        }
        if self.explored >= self.budget {
            return Flow::OutOfBudget;
        }
        self.explored += 1;
        let arena = self.arena;
        for x in 0..arena.n {
            let r = self.cups[x] as usize;
            if r == 0 || x == self.t || r >= arena.at[x].len() {
                continue;
            }
            for &y in &arena.at[x][r] {
                let landed = self.cups[y] as usize;
                if landed == 0 || (y != self.t && landed + r > arena.ecc[y]) {
                    continue;
                }
                let delta_x = (r as u128) << arena.shift(x);
                let delta_y = (r as u128) << arena.shift(y);
                self.cups[x] = 0;
                self.cups[y] += r as u32;
                self.key = self.key - delta_x + delta_y;
                self.stack.push(Move::new(x, y, r as u32));
                match self.run(occupied - 1) {
                    Flow::Found => return Flow::Found,
                    Flow::OutOfBudget => return Flow::OutOfBudget,
                    Flow::Failed => {}
                }
                self.stack.pop();
                self.key = self.key + delta_x - delta_y;
                self.cups[y] -= r as u32;
                self.cups[x] = r as u32;
            }
        }
        self.failed.insert(self.key);
        Flow::Failed
    }
}

pub(crate) fn decide_in(arena: &Arena, t: usize, budget: u64) -> Result<TargetOutcome, SearchError> {
    arena.check_target(t)?;
    let cups = vec![1u32; arena.n];
    let mut dfs = Dfs {
        arena,
        t,
        budget,
        key: arena.pack(&cups),
        cups,
        stack: Vec::new(),
        failed: FxHashSet::default(),
        explored: 0,
        memo_hits: 0,
    };
    let flow = dfs.run(arena.n);
    let (status, witness) = match flow {
        Flow::Found => {
            let witness = MoveSequence::from(std::mem::take(&mut dfs.stack));
            match verify_with_distances(&arena.dist, t, &witness) {
                Verdict::Valid => {}
                Verdict::Invalid(f) => panic!("search produced an invalid witness: {f}"),
            }
            (Status::Stackable, Some(witness))
        }
        Flow::Failed => (Status::Not, None),
        Flow::OutOfBudget => (Status::Unknown, None),
    };
    Ok(TargetOutcome {
        target: t,
        status,
        witness,
        explored: dfs.explored,
        memo_hits: dfs.memo_hits,
        via: None,
    })
}

/// Depth-first search for a winning sequence onto `t`. Running out of
/// `budget` expanded states gives [`Status::Unknown`], never a negative.
pub fn decide_t_stackable(g: &Graph, t: usize, budget: u64) -> Result<TargetOutcome, SearchError> {
    let arena = Arena::new(g)?;
    decide_in(&arena, t, budget)
}

/// Per-target searches, run in parallel; verdicts and witnesses do not depend
/// on the worker count.
pub fn decide_stackable(g: &Graph, options: SearchOptions) -> Result<SearchResult, SearchError> {
    let arena = Arena::new(g)?;
    decide_in_arena(g, &arena, options)
}

pub(crate) fn decide_in_arena(
    g: &Graph,
    arena: &Arena,
    options: SearchOptions,
) -> Result<SearchResult, SearchError> {
    let n = arena.n;
    let orbits = if options.symmetry {
        target_orbits(g)
    } else {
        Orbits::trivial(n)
    };
    let reps = orbits.representatives();
    let searched: Vec<TargetOutcome> = reps
        .par_iter()
        .map(|&t| decide_in(arena, t, options.budget))
        .collect::<Result<_, _>>()?;
    let mut verdicts = Vec::with_capacity(n);
    for t in 0..n {
        let (rep, map) = orbits.of(t);
        let base = &searched[reps.binary_search(&rep).expect("representative searched")];
        if rep == t {
            verdicts.push(base.clone());
            continue;
        }
        let witness = base.witness.as_ref().map(|w| w.map_vertices(|v| map[v]));
        if let Some(w) = &witness {
            debug_assert!(verify_with_distances(&arena.dist, t, w).is_valid());
        }
        verdicts.push(TargetOutcome {
            target: t,
            status: base.status,
            witness,
            explored: 0,
            memo_hits: 0,
            via: Some(rep),
        });
    }
    Ok(SearchResult {
        classification: Classification::from_statuses(verdicts.iter().map(|v| v.status)),
        explored: verdicts.iter().map(|v| v.explored).sum(),
        memo_hits: verdicts.iter().map(|v| v.memo_hits).sum(),
        verdicts,
    })
}
