use rayon::prelude::*;

use super::bipartite::finish;
use super::chunk::stack_chunked_path_unchecked;
use super::path::stack_path_unchecked;
use super::{Segment, SegmentRole, Solution, SolveError};
use crate::game::MoveSequence;
use crate::graph::{
    all_pairs_distances, bipartition, DistanceMatrix, Graph, GraphError, PathPartition, PowerIndexer,
};

/// Boustrophedon Hamilton path of the product of `paths`, as coordinate
/// tuples. The first path varies fastest: the order is `H' x_1`,
/// `rev(H') x_2`, `H' x_3`, ... where `H'` covers all but the last path.
pub fn canonical_hamilton_path<T: Clone>(paths: &[Vec<T>]) -> Result<Vec<Vec<T>>, SolveError> {
    if paths.is_empty() || paths.iter().any(Vec::is_empty) {
        return Err(SolveError::Empty);
    }
    let mut order: Vec<Vec<T>> = paths[0].iter().map(|x| vec![x.clone()]).collect();
    for path in &paths[1..] {
        let mut next = Vec::with_capacity(order.len() * path.len());
        for (k, x) in path.iter().enumerate() {
            let extend = |tuple: &Vec<T>| {
                let mut t = tuple.clone();
                t.push(x.clone());
                t
            };
            if k % 2 == 0 {
                next.extend(order.iter().map(extend));
            } else {
                next.extend(order.iter().rev().map(extend));
            }
        }
        order = next;
    }
    Ok(order)
}

/// Smallest `r >= 2` with `k^r >= (d r)^2`.
pub fn min_power_for_stackability(k: usize, d: usize) -> Result<usize, SolveError> {
    if k < 2 {
        return Err(GraphError::InvalidParameter("path length k must be at least 2".into()).into());
    }
    let (k, d) = (k as u128, d as u128);
    let mut r: u32 = 2;
    loop {
        let rhs = (d * r as u128).pow(2);
        match k.checked_pow(r) {
            Some(lhs) if lhs < rhs => r += 1,
            _ => return Ok(r as usize),
        }
    }
}

/// Stacks the `r`-th power of `g` onto `t` (numbered as in
/// [`graph_power`](crate::graph::graph_power)) using the grids spanned by the
/// paths of `pp`.
///
/// The grid through `t` is stacked along its canonical Hamilton path. Every
/// other grid is traversed with a coordinate whose path misses `t` innermost
/// and the remaining paths oriented so `t` is not their first vertex, then
/// chunked. The hypotheses (bipartite, at least two paths of at least
/// `k >= 2` vertices, `r >= 2`, `k^r >= (d r)^2`) are reported in the plan.
pub fn solve_power(
    g: &Graph,
    r: usize,
    pp: &PathPartition,
    t: usize,
    vertex_budget: usize,
) -> Result<Solution, SolveError> {
    if r < 1 {
        return Err(GraphError::InvalidParameter("power needs r >= 1".into()).into());
    }
    if g.n() == 0 {
        return Err(SolveError::Empty);
    }
    let pp = PathPartition::new(g, pp.paths().to_vec())?;
    let base = all_pairs_distances(g);
    if !base.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let size = (0..r).try_fold(1usize, |acc, _| acc.checked_mul(g.n()));
    let size = match size {
        Some(s) if s <= vertex_budget => s,
        _ => {
            return Err(GraphError::BudgetExceeded {
                what: "graph power",
                required: size.unwrap_or(usize::MAX),
                budget: vertex_budget,
            }
            .into())
        }
    };
    if t >= size {
        return Err(SolveError::TargetOutOfRange(t));
    }
    let d = DistanceMatrix::power(&base, r).expect("size fits");
    let indexer = PowerIndexer { base: g.n(), r };
    let target = indexer.decode(t);
    let paths = pp.paths();
    let p = paths.len();

    let mut violations = Vec::new();
    if bipartition(g).is_none() {
        violations.push("base graph is not bipartite".to_string());
    }
    if p < 2 {
        violations.push("fewer than two paths".to_string());
    }
    let k = pp.min_len();
    if k < 2 {
        violations.push(format!("shortest path has {k} vertices"));
    }
    if r < 2 {
        violations.push("power below 2".to_string());
    }
    let diameter = base.diameter().expect("connected");
    let enough = (k as u128)
        .checked_pow(r as u32)
        .is_none_or(|lhs| lhs >= ((diameter * r) as u128).pow(2));
    if !enough {
        violations.push(format!("{k}^{r} < ({diameter}*{r})^2"));
    }

    let home: Vec<usize> = target
        .iter()
        .map(|&v| pp.path_of(v).expect("partition covers every vertex"))
        .collect();
    let grids = PowerIndexer { base: p, r };
    let mut order: Vec<Vec<usize>> = (0..grids.size()).map(|i| grids.decode(i)).collect();
    let first = order.iter().position(|q| *q == home).expect("home grid exists");
    let home_grid = order.remove(first);

    let encode_order = |coords: &[usize], tuples: Vec<Vec<usize>>| -> Vec<usize> {
        tuples
            .into_iter()
            .map(|tuple| {
                let mut full = vec![0; r];
                for (&c, v) in coords.iter().zip(tuple) {
                    full[c] = v;
                }
                indexer.encode(&full)
            })
            .collect()
    };

    let home_paths: Vec<Vec<usize>> = home_grid.iter().map(|&i| paths[i].clone()).collect();
    let home_path = encode_order(&(0..r).collect::<Vec<_>>(), canonical_hamilton_path(&home_paths)?);
    let t_index = home_path
        .iter()
        .position(|&v| v == t)
        .expect("home grid contains t");
    let mut moves = stack_path_unchecked(&d, &home_path, t_index)?;
    let mut segments = vec![Segment {
        role: SegmentRole::Target,
        path: home_path,
        reversed: false,
        chunks: Vec::new(),
        grid: Some(home_grid),
        inner_coordinate: None,
    }];

    let per_grid: Vec<Result<(MoveSequence, Segment), SolveError>> = order
        .into_par_iter()
        .map(|grid| {
            let inner = (0..r)
                .find(|&j| grid[j] != home[j])
                .expect("grid differs from home");
            let mut coords = vec![inner];
            coords.extend((0..r).filter(|&j| j != inner));
            let oriented: Vec<Vec<usize>> = coords
                .iter()
                .map(|&j| {
                    let mut path = paths[grid[j]].clone();
                    if j != inner && path[0] == target[j] && path.len() > 1 {
                        path.reverse();
                    }
                    path
                })
                .collect();
            let walk = encode_order(&coords, canonical_hamilton_path(&oriented)?);
            let stacked = stack_chunked_path_unchecked(&d, &walk, t)?
                .ok_or_else(|| SolveError::ChunkingFailed { grid: grid.clone() })?;
            let mut traversal = walk;
            if stacked.reversed {
                traversal.reverse();
            }
            Ok((
                stacked.moves,
                Segment {
                    role: SegmentRole::Chunked,
                    path: traversal,
                    reversed: stacked.reversed,
                    chunks: stacked.chunking.chunks,
                    grid: Some(grid),
                    inner_coordinate: Some(inner),
                },
            ))
        })
        .collect();
    for item in per_grid {
        let (m, segment) = item?;
        moves.append(m);
        segments.push(segment);
    }
    finish(&d, t, moves, "power-grids", segments, violations)
}
