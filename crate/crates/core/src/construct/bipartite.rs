use super::chunk::stack_chunked_path_unchecked;
use super::path::stack_path_unchecked;
use super::{HypothesisCheck, Plan, Segment, SegmentRole, Solution, SolveError};
use crate::game::{verify_with_distances, MoveSequence, Verdict};
use crate::graph::{bipartition, DistanceMatrix, Graph, GraphError, PathPartition};

/// Stacks a connected bipartite graph onto `t` from a path partition: the path
/// through `t` is stacked directly, every other path is chunked by its
/// distances to `t`.
///
/// The sufficient conditions (at least two paths; every path not containing
/// `t` has at least `diam^2` vertices and ends at distance other than 2 or 4)
/// are reported in the plan but not required. Returns `None` when some path
/// cannot be chunked in either orientation.
pub fn solve_bipartite_paths(
    g: &Graph,
    d: &DistanceMatrix,
    pp: &PathPartition,
    t: usize,
) -> Result<Option<Solution>, SolveError> {
    if t >= g.n() {
        return Err(SolveError::TargetOutOfRange(t));
    }
    if !d.is_connected() {
        return Err(SolveError::Disconnected);
    }
    if bipartition(g).is_none() {
        return Err(SolveError::NotBipartite);
    }
    let pp = PathPartition::new(g, pp.paths().to_vec())?;
    let first = pp.path_of(t).expect("partition covers t");
    let diameter = d.diameter().expect("connected");

    let mut violations = Vec::new();
    if pp.paths().len() < 2 {
        violations.push("fewer than two paths".to_string());
    }
    for (j, path) in pp.paths().iter().enumerate().filter(|&(j, _)| j != first) {
        if path.len() < diameter * diameter {
            violations.push(format!(
                "path {j} has {} vertices, fewer than diameter^2 = {}",
                path.len(),
                diameter * diameter
            ));
        }
        let ends = d.get(path[0], path[path.len() - 1]).expect("connected");
        if ends == 2 || ends == 4 {
            violations.push(format!("path {j} has end-to-end distance {ends}"));
        }
    }

    let p1 = &pp.paths()[first];
    let t_index = p1.iter().position(|&v| v == t).expect("t is on its path");
    let mut moves = stack_path_unchecked(d, p1, t_index)?;
    let mut segments = vec![Segment {
        role: SegmentRole::Target,
        path: p1.clone(),
        reversed: false,
        chunks: Vec::new(),
        grid: None,
        inner_coordinate: None,
    }];
    for (_, path) in pp.paths().iter().enumerate().filter(|&(j, _)| j != first) {
        let Some(stacked) = stack_chunked_path_unchecked(d, path, t)? else {
            return Ok(None);
        };
        let mut traversal = path.clone();
        if stacked.reversed {
            traversal.reverse();
        }
        moves.append(stacked.moves);
        segments.push(Segment {
            role: SegmentRole::Chunked,
            path: traversal,
            reversed: stacked.reversed,
            chunks: stacked.chunking.chunks,
            grid: None,
            inner_coordinate: None,
        });
    }
    finish(d, t, moves, "bipartite-paths", segments, violations).map(Some)
}

pub(super) fn finish(
    d: &DistanceMatrix,
    t: usize,
    moves: MoveSequence,
    method: &'static str,
    segments: Vec<Segment>,
    violations: Vec<String>,
) -> Result<Solution, SolveError> {
    match verify_with_distances(d, t, &moves) {
        Verdict::Valid => Ok(Solution {
            moves,
            plan: Plan {
                method,
                target: t,
                segments,
                hypotheses: HypothesisCheck::from_violations(violations),
            },
        }),
        Verdict::Invalid(failure) => Err(SolveError::Unverified(failure)),
    }
}

/// The path partition of a biwheel with removed spoke-side edges, arranged for
/// target `t`.
///
/// Deleting the edges `x_i y_i` for `i` in `removed` cuts the rim into paths
/// `y_i, x_{i+1}, .., x_j` running between consecutive removed indices. The
/// path through `t` (or the first path, when `t` is the hub) is extended by the
/// hub, which is adjacent to its `x` end, and comes first.
pub fn biwheel_partition(l: usize, removed: &[usize], t: usize) -> Result<PathPartition, SolveError> {
    let mut idx: Vec<usize> = removed.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if idx.is_empty() {
        return Err(GraphError::InvalidParameter("biwheel partition needs a removed edge".into()).into());
    }
    if t > 2 * l {
        return Err(SolveError::TargetOutOfRange(t));
    }
    let g = crate::graph::build_family(&crate::graph::Family::Biwheel {
        l,
        removed: idx.clone(),
    })?;
    let x = |i: usize| i;
    let y = |i: usize| l + i;
    let mut paths = Vec::new();
    for (k, &i) in idx.iter().enumerate() {
        let j = idx[(k + 1) % idx.len()];
        let mut path = vec![y(i)];
        let mut cur = i % l + 1;
        loop {
            path.push(x(cur));
            if cur == j {
                break;
            }
            path.push(y(cur));
            cur = cur % l + 1;
        }
        paths.push(path);
    }
    let first = if t == 0 {
        0
    } else {
        paths
            .iter()
            .position(|p| p.contains(&t))
            .expect("rim pieces cover the rim")
    };
    let mut p1 = paths.remove(first);
    p1.push(0);
    paths.insert(0, p1);
    Ok(PathPartition::new(&g, paths)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, build_family, Family};

    #[test]
    fn single_path_reduces_to_path_stacking() {
        let g = build_family(&Family::Path(6)).unwrap();
        let d = all_pairs_distances(&g);
        let pp = PathPartition::new(&g, vec![(0..6).collect()]).unwrap();
        let sol = solve_bipartite_paths(&g, &d, &pp, 2).unwrap().unwrap();
        assert_eq!(sol.moves.len(), 5);
        assert!(!sol.plan.hypotheses.guaranteed);
    }

    #[test]
    fn biwheel_pieces() {
        let pp = biwheel_partition(24, &[1, 9, 17], 5).unwrap();
        assert_eq!(pp.paths().len(), 3);
        // piece through x5 is y1 x2 .. x9, plus the hub
        assert_eq!(pp.paths()[0].first(), Some(&25));
        assert_eq!(pp.paths()[0].last(), Some(&0));
        assert_eq!(pp.paths()[0].len(), 17);
        assert!(pp.paths()[1..].iter().all(|p| p.len() == 16));
    }

    #[test]
    fn biwheel_all_targets() {
        let g = build_family(&Family::Biwheel {
            l: 24,
            removed: vec![1, 9, 17],
        })
        .unwrap();
        let d = all_pairs_distances(&g);
        for t in 0..g.n() {
            let pp = biwheel_partition(24, &[1, 9, 17], t).unwrap();
            let sol = solve_bipartite_paths(&g, &d, &pp, t).unwrap().unwrap();
            assert!(sol.plan.hypotheses.guaranteed, "{:?}", sol.plan.hypotheses);
            assert_eq!(sol.moves.len(), g.n() - 1);
        }
    }

    #[test]
    fn rejects_odd_cycles() {
        let g = build_family(&Family::Cycle(5)).unwrap();
        let d = all_pairs_distances(&g);
        let pp = PathPartition::new(&g, vec![(0..5).collect()]).unwrap();
        assert_eq!(
            solve_bipartite_paths(&g, &d, &pp, 0),
            Err(SolveError::NotBipartite)
        );
    }

    #[test]
    fn failing_chunking_is_none_never_unverified() {
        // K_{2,4} split into 3-paths: second path has distances that cannot chunk
        // for some targets; whatever happens, no invalid sequence comes back.
        let g = build_family(&Family::CompleteBipartite(2, 4)).unwrap();
        let d = all_pairs_distances(&g);
        let pp = PathPartition::new(&g, vec![vec![2, 0, 3], vec![4, 1, 5]]).unwrap();
        for t in 0..6 {
            if let Some(sol) = solve_bipartite_paths(&g, &d, &pp, t).unwrap() {
                assert!(crate::game::verify_sequence(&g, t, &sol.moves).is_valid());
            }
        }
    }
}
