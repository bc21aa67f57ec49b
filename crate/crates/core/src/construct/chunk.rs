//! Cutting a sequence of distances into proper chunks.
//!
//! A chunk `x_i..x_j` is proper when one of its values equals its length
//! `j - i + 1`; that element is the chunk's anchor. Along a path whose
//! vertices sit at distances `x_1..x_N` from a target, a proper chunk is a
//! subpath that can be stacked onto its anchor and then moved to the target in
//! one jump.

use serde::Serialize;

use super::path::stack_path_unchecked;
use super::{replay_local, SolveError};
use crate::game::{Move, MoveSequence};
use crate::graph::{DistanceMatrix, Graph};

/// Half-open index range `start..end` with the index of its anchor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Chunk {
    pub start: usize,
    pub end: usize,
    pub anchor: usize,
}

impl Chunk {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chunking {
    pub chunks: Vec<Chunk>,
}

fn anchor_of(xs: &[usize], start: usize, end: usize) -> Option<usize> {
    let len = end - start;
    (start..end).find(|&k| xs[k] == len)
}

/// Decides whether `xs` splits into proper chunks and returns one such split.
///
/// Dynamic programming over cuts: prefix length `i` is a cut when `xs[..i]`
/// splits into proper chunks. A proper chunk is never longer than `max(xs)`,
/// so only that many predecessors are examined. Among feasible last chunks the
/// shortest is taken.
pub fn chunk_partition(xs: &[usize]) -> Result<Option<Chunking>, SolveError> {
    if xs.is_empty() {
        return Err(SolveError::Empty);
    }
    let n = xs.len();
    let longest = xs.iter().copied().max().unwrap_or(0).min(n);
    // last[i] = start of the chosen last chunk of the prefix of length i
    let mut last: Vec<Option<usize>> = vec![None; n + 1];
    let mut is_cut = vec![false; n + 1];
    is_cut[0] = true;
    for i in 1..=n {
        let lowest = i.saturating_sub(longest);
        last[i] = (lowest..i)
            .rev()
            .find(|&j| is_cut[j] && anchor_of(xs, j, i).is_some());
        is_cut[i] = last[i].is_some();
    }
    if !is_cut[n] {
        return Ok(None);
    }
    let mut chunks = Vec::new();
    let mut end = n;
    while end > 0 {
        let start = last[end].expect("every cut has a last chunk");
        let anchor = anchor_of(xs, start, end).expect("chosen chunks are proper");
        chunks.push(Chunk { start, end, anchor });
        end = start;
    }
    chunks.reverse();
    Ok(Some(Chunking { chunks }))
}

/// Result of [`stack_chunked_path`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChunkedStack {
    pub moves: MoveSequence,
    /// Whether the path was traversed back to front.
    pub reversed: bool,
    /// Chunks in terms of the traversal order.
    pub chunking: Chunking,
}

/// Moves all cups of `p` (one per vertex) onto the occupied vertex `t`, which
/// is not on `p`. Tries `p` as given, then reversed; `None` when neither
/// orientation chunks.
pub fn stack_chunked_path(
    g: &Graph,
    d: &DistanceMatrix,
    p: &[usize],
    t: usize,
) -> Result<Option<ChunkedStack>, SolveError> {
    if p.is_empty() {
        return Err(SolveError::Empty);
    }
    if t >= g.n() {
        return Err(SolveError::TargetOutOfRange(t));
    }
    if p.contains(&t) {
        return Err(SolveError::TargetOnPath(t));
    }
    if !g.is_path(p) {
        return Err(SolveError::NotAPath);
    }
    stack_chunked_path_unchecked(d, p, t)
}

pub(crate) fn stack_chunked_path_unchecked(
    d: &DistanceMatrix,
    p: &[usize],
    t: usize,
) -> Result<Option<ChunkedStack>, SolveError> {
    let forward = p.to_vec();
    let mut backward = forward.clone();
    backward.reverse();
    for (reversed, path) in [(false, forward), (true, backward)] {
        let xs = path
            .iter()
            .map(|&v| d.get(v, t).ok_or(SolveError::Disconnected))
            .collect::<Result<Vec<_>, _>>()?;
        let Some(chunking) = chunk_partition(&xs)? else {
            continue;
        };
        let mut moves = MoveSequence::new();
        for chunk in &chunking.chunks {
            let sub = &path[chunk.start..chunk.end];
            moves.append(stack_path_unchecked(d, sub, chunk.anchor - chunk.start)?);
            moves.push(Move::new(path[chunk.anchor], t, chunk.len() as u32));
        }
        replay_local(d, &path, Some(t), t, moves.moves()).map_err(SolveError::Unverified)?;
        return Ok(Some(ChunkedStack {
            moves,
            reversed,
            chunking,
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, build_family, Family};
    use proptest::prelude::*;

    /// Tries every set of cut positions.
    fn brute_force_chunkable(xs: &[usize]) -> bool {
        let n = xs.len();
        (0u32..1 << (n - 1)).any(|cuts| {
            let mut start = 0;
            for i in 1..=n {
                if i == n || cuts >> (i - 1) & 1 == 1 {
                    let len = i - start;
                    if !xs[start..i].contains(&len) {
                        return false;
                    }
                    start = i;
                }
            }
            true
        })
    }

    fn check_chunking(xs: &[usize], c: &Chunking) {
        let mut next = 0;
        for chunk in &c.chunks {
            assert_eq!(chunk.start, next);
            assert!(chunk.start <= chunk.anchor && chunk.anchor < chunk.end);
            assert_eq!(xs[chunk.anchor], chunk.len());
            next = chunk.end;
        }
        assert_eq!(next, xs.len());
    }

    #[test]
    fn worked_example_has_two_chunks() {
        let c = chunk_partition(&[6, 5, 3, 4, 5, 6, 4]).unwrap().unwrap();
        assert_eq!(
            c.chunks,
            vec![
                Chunk {
                    start: 0,
                    end: 3,
                    anchor: 2
                },
                Chunk {
                    start: 3,
                    end: 7,
                    anchor: 3
                }
            ]
        );
    }

    #[test]
    fn alternating_two_one_fails() {
        assert_eq!(chunk_partition(&[2, 1, 2, 1, 2]).unwrap(), None);
        assert_eq!(chunk_partition(&[2, 1, 2, 1, 2, 1, 2, 1, 2]).unwrap(), None);
    }

    #[test]
    fn singleton_and_empty() {
        let c = chunk_partition(&[1]).unwrap().unwrap();
        assert_eq!(
            c.chunks,
            vec![Chunk {
                start: 0,
                end: 1,
                anchor: 0
            }]
        );
        assert_eq!(chunk_partition(&[]), Err(SolveError::Empty));
        assert_eq!(chunk_partition(&[2]).unwrap(), None);
    }

    #[test]
    fn shortest_last_chunk_wins_ties() {
        // both [1] and [2,1] are feasible last chunks
        let c = chunk_partition(&[1, 2, 1]).unwrap().unwrap();
        assert_eq!(c.chunks.len(), 2);
        assert_eq!(
            c.chunks[1],
            Chunk {
                start: 2,
                end: 3,
                anchor: 2
            }
        );
    }

    #[test]
    fn single_vertex_at_distance_one() {
        let g = build_family(&Family::Path(2)).unwrap();
        let d = all_pairs_distances(&g);
        let out = stack_chunked_path(&g, &d, &[1], 0).unwrap().unwrap();
        assert_eq!(out.moves.moves(), &[Move::new(1, 0, 1)]);
    }

    #[test]
    fn three_vertices_opposite_on_eight_cycle() {
        // vertices 3,4,5 of C_8 sit at distances 3,4,3 from vertex 0
        let g = build_family(&Family::Cycle(8)).unwrap();
        let d = all_pairs_distances(&g);
        let out = stack_chunked_path(&g, &d, &[3, 4, 5], 0).unwrap().unwrap();
        assert_eq!(
            out.chunking.chunks,
            vec![Chunk {
                start: 0,
                end: 3,
                anchor: 0
            }]
        );
        let last = *out.moves.moves().last().unwrap();
        assert_eq!(last, Move::new(3, 0, 3));
        assert_eq!(out.moves.len(), 3);
    }

    #[test]
    fn fails_both_ways_on_two_one_pattern() {
        // path 1-2-3-4-5 with t = 0 joined to 2 and 4: distances read 2,1,2,1,2
        let g = Graph::from_edges(6, &[(0, 2), (0, 4), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let d = all_pairs_distances(&g);
        let xs: Vec<usize> = [1, 2, 3, 4, 5].iter().map(|&v| d.get(v, 0).unwrap()).collect();
        assert_eq!(xs, vec![2, 1, 2, 1, 2]);
        assert_eq!(stack_chunked_path(&g, &d, &[1, 2, 3, 4, 5], 0).unwrap(), None);
        assert_eq!(
            stack_chunked_path(&g, &d, &[0, 2], 0),
            Err(SolveError::TargetOnPath(0))
        );
    }

    #[test]
    fn exhaustive_small_sequences_match_oracle() {
        fn rec(xs: &mut Vec<usize>, max_len: usize) {
            if !xs.is_empty() {
                let got = chunk_partition(xs).unwrap();
                assert_eq!(got.is_some(), brute_force_chunkable(xs), "{xs:?}");
                if let Some(c) = got {
                    check_chunking(xs, &c);
                }
            }
            if xs.len() == max_len {
                return;
            }
            for v in 1..=5 {
                xs.push(v);
                rec(xs, max_len);
                xs.pop();
            }
        }
        rec(&mut vec![], 7);
    }

    proptest! {
        #[test]
        fn oracle_equivalence_arbitrary(xs in proptest::collection::vec(1usize..=6, 1..=18)) {
            let got = chunk_partition(&xs).unwrap();
            prop_assert_eq!(got.is_some(), brute_force_chunkable(&xs));
            if let Some(c) = got {
                check_chunking(&xs, &c);
            }
        }
    }
}
