use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use super::{Arena, SearchError, Status};
use crate::game::{verify_with_distances, Move, MoveSequence};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightOutcome {
    pub target: usize,
    pub status: Status,
    pub mu: Option<u64>,
    pub witness: Option<MoveSequence>,
    pub explored: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightTable {
    pub rows: Vec<WeightOutcome>,
}

impl WeightTable {
    /// `mu` per target; `None` where the target is not stackable or unknown.
    pub fn mu(&self) -> Vec<Option<u64>> {
        self.rows.iter().map(|r| r.mu).collect()
    }

    /// Comma-separated `mu` values, with `-` for non-stackable targets and
    /// `?` for unknown ones.
    pub fn csv_row(&self) -> String {
        self.rows
            .iter()
            .map(|r| match (r.status, r.mu) {
                (_, Some(mu)) => mu.to_string(),
                (Status::Unknown, None) => "?".to_string(),
                _ => "-".to_string(),
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Minimum total number of cups moved over all winning sequences onto `t`.
///
/// A* over cup-count states with edge cost equal to the stack size moved. The
/// heuristic is the number of cups not yet on `t`, since each of them still
/// has to move at least once. Ties go to the state reached first, with moves
/// expanded in lexicographic order.
pub fn min_weight(g: &Graph, t: usize, budget: u64) -> Result<WeightOutcome, SearchError> {
    let arena = Arena::new(g)?;
    min_weight_in(&arena, t, budget)
}

/// [`min_weight`] for every target, in parallel.
pub fn weight_table(g: &Graph, budget: u64) -> Result<WeightTable, SearchError> {
    let arena = Arena::new(g)?;
    let rows = (0..arena.n)
        .into_par_iter()
        .map(|t| min_weight_in(&arena, t, budget))
        .collect::<Result<_, _>>()?;
    Ok(WeightTable { rows })
}

pub(crate) fn min_weight_in(arena: &Arena, t: usize, budget: u64) -> Result<WeightOutcome, SearchError> {
    arena.check_target(t)?;
    let n = arena.n as u64;
    let start_cups = vec![1u32; arena.n];
    let start = arena.pack(&start_cups);
    // state -> (cost so far, predecessor, move taken)
    let mut best: FxHashMap<u128, (u64, u128, Option<Move>)> = FxHashMap::default();
    let mut heap = BinaryHeap::new();
    let mut tick: u64 = 0;
    best.insert(start, (0, start, None));
    heap.push(Reverse((n - 1, tick, 0u64, start)));
    let mut explored = 0u64;
    while let Some(Reverse((_, _, cost, key))) = heap.pop() {
        if best.get(&key).is_some_and(|&(c, _, _)| c < cost) {
            continue;
        }
        let cups = arena.unpack(key);
        if cups[t] as u64 == n {
            let witness = rebuild(&best, start, key);
            debug_assert!(verify_with_distances(&arena.dist, t, &witness).is_valid());
            debug_assert_eq!(witness.weight(), cost);
            return Ok(WeightOutcome {
                target: t,
                status: Status::Stackable,
                mu: Some(cost),
                witness: Some(witness),
                explored,
            });
        }
        if explored >= budget {
            return Ok(WeightOutcome {
                target: t,
                status: Status::Unknown,
                mu: None,
                witness: None,
                explored,
            });
        }
        explored += 1;
        for m in arena.moves(&cups, t) {
            let r = m.cups as u128;
            let next = key - (r << arena.shift(m.from)) + (r << arena.shift(m.to));
            let next_cost = cost + m.cups as u64;
            if best.get(&next).is_some_and(|&(c, _, _)| c <= next_cost) {
                continue;
            }
            best.insert(next, (next_cost, key, Some(m)));
            let on_target = cups[t] as u64 + if m.to == t { m.cups as u64 } else { 0 };
            tick += 1;
            heap.push(Reverse((next_cost + n - on_target, tick, next_cost, next)));
        }
    }
    Ok(WeightOutcome {
        target: t,
        status: Status::Not,
        mu: None,
        witness: None,
        explored,
    })
}

fn rebuild(best: &FxHashMap<u128, (u64, u128, Option<Move>)>, start: u128, mut key: u128) -> MoveSequence {
    let mut moves = Vec::new();
    while key != start {
        let (_, prev, m) = best[&key];
        moves.push(m.expect("only the start has no move"));
        key = prev;
    }
    moves.reverse();
    MoveSequence::from(moves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{apply_move, initial_state, legal_moves, verify_sequence};
    use crate::graph::{all_pairs_distances, build_family, Family};
    use rand::{rngs::StdRng, seq::IndexedRandom, SeedableRng};

    fn path(n: usize) -> Graph {
        build_family(&Family::Path(n)).unwrap()
    }

    #[test]
    fn small_paths() {
        assert_eq!(weight_table(&path(1), 100).unwrap().mu(), vec![Some(0)]);
        assert_eq!(
            weight_table(&path(3), 100).unwrap().mu(),
            vec![Some(3), Some(2), Some(3)]
        );
        let p6 = weight_table(&path(6), 1_000_000).unwrap();
        assert_eq!(p6.csv_row(), "9,7,7,7,7,9");
        for row in &p6.rows {
            let w = row.witness.as_ref().unwrap();
            assert_eq!(Some(w.weight()), row.mu);
            assert!(verify_sequence(&path(6), row.target, w).is_valid());
        }
    }

    #[test]
    fn absent_for_non_stackable_targets() {
        let g = build_family(&Family::CompleteBipartite(2, 4)).unwrap();
        let table = weight_table(&g, 1_000_000).unwrap();
        assert!(table.rows[..2].iter().all(|r| r.mu.is_some()));
        assert!(table.rows[2..]
            .iter()
            .all(|r| r.status == Status::Not && r.mu.is_none()));
        assert!(table.csv_row().ends_with(",-,-,-,-"));
    }

    #[test]
    fn symmetric_on_paths() {
        for n in 1..=9 {
            let mu = weight_table(&path(n), 5_000_000).unwrap().mu();
            let mut rev = mu.clone();
            rev.reverse();
            assert_eq!(mu, rev);
        }
    }

    #[test]
    fn random_playouts_never_beat_mu() {
        let mut rng = StdRng::seed_from_u64(7);
        for f in [
            Family::Path(7),
            Family::ForkedPath(9),
            Family::Cycle(8),
            Family::Petersen,
        ] {
            let g = build_family(&f).unwrap();
            let d = all_pairs_distances(&g);
            for t in [0, g.n() / 2] {
                let mu = min_weight(&g, t, 5_000_000).unwrap().mu.unwrap();
                let mut found = 0;
                for _ in 0..20_000 {
                    let mut s = initial_state(&g);
                    let mut weight = 0;
                    loop {
                        let moves = legal_moves(&d, &s);
                        let Some(&m) = moves.choose(&mut rng) else { break };
                        weight += m.cups as u64;
                        s = apply_move(&d, &s, m).unwrap();
                    }
                    if s.is_stacked_on(t) {
                        assert!(weight >= mu, "{f} t={t}: playout {weight} < mu {mu}");
                        found += 1;
                        if found == 100 {
                            break;
                        }
                    }
                }
                assert!(found > 0, "{f} t={t}: no random win");
            }
        }
    }

    #[test]
    fn budget_gives_unknown() {
        let out = min_weight(&path(10), 0, 5).unwrap();
        assert_eq!(out.status, Status::Unknown);
        assert_eq!(out.mu, None);
    }
}
