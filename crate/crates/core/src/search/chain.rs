use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use super::{decide_in_arena, Arena, Classification, SearchError, SearchOptions};
use crate::graph::{Graph, GraphError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chain {
    /// Edges in the order they are added.
    pub edges: Vec<(usize, usize)>,
    /// Classification of the base graph and of each graph after an addition.
    pub classifications: Vec<Classification>,
}

/// Relabels `sup` so that `base` is a subgraph of it on the same vertex set.
/// Returns `sup` unchanged when that already holds, `None` when `base` does not
/// embed.
pub fn align_supergraph(base: &Graph, sup: &Graph) -> Option<Graph> {
    if base.n() != sup.n() {
        return None;
    }
    if base.is_subgraph_of(sup) {
        return Some(sup.clone());
    }
    let n = base.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(base.degree(v)));
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !embed(base, sup, &order, 0, &mut phi, &mut used) {
        return None;
    }
    // sup vertex phi[u] becomes u
    let mut inverse = vec![0; n];
    for (u, &x) in phi.iter().enumerate() {
        inverse[x] = u;
    }
    let aligned = sup.relabeled(&inverse);
    debug_assert!(base.is_subgraph_of(&aligned));
    Some(aligned)
}

fn embed(base: &Graph, sup: &Graph, order: &[usize], k: usize, phi: &mut [usize], used: &mut [bool]) -> bool {
    if k == order.len() {
        return true;
    }
    let u = order[k];
    for x in 0..sup.n() {
        if used[x] || sup.degree(x) < base.degree(u) {
            continue;
        }
        let fits = base
            .neighbors(u)
            .iter()
            .all(|&w| phi[w] == usize::MAX || sup.has_edge(x, phi[w]));
        if !fits {
            continue;
        }
        phi[u] = x;
        used[x] = true;
        if embed(base, sup, order, k + 1, phi, used) {
            return true;
        }
        used[x] = false;
        phi[u] = usize::MAX;
    }
    false
}

struct ChainSearch<'a> {
    base: &'a Graph,
    candidates: Vec<(usize, usize)>,
    options: SearchOptions,
    verdicts: FxHashMap<u128, Classification>,
    dead: FxHashSet<(u128, usize)>,
}

impl ChainSearch<'_> {
    fn graph(&self, mask: u128) -> Graph {
        let mut edges: Vec<(usize, usize)> = self.base.edges().collect();
        edges.extend(
            self.candidates
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        );
        Graph::from_edges(self.base.n(), &edges).expect("candidate edges are new")
    }

    fn classify(&mut self, mask: u128) -> Result<Classification, SearchError> {
        if let Some(&c) = self.verdicts.get(&mask) {
            return Ok(c);
        }
        let g = self.graph(mask);
        let arena = Arena::new(&g)?;
        let c = decide_in_arena(&g, &arena, self.options)?.classification;
        self.verdicts.insert(mask, c);
        Ok(c)
    }

    fn extend(
        &mut self,
        mask: u128,
        stackable: bool,
        remaining: usize,
        path: &mut Vec<usize>,
    ) -> Result<bool, SearchError> {
        if remaining == 0 {
            return Ok(true);
        }
        if self.dead.contains(&(mask, remaining)) {
            return Ok(false);
        }
        for i in 0..self.candidates.len() {
            if mask >> i & 1 == 1 {
                continue;
            }
            let next = mask | 1 << i;
            let wanted = match self.classify(next)? {
                Classification::Stackable => !stackable,
                Classification::NonStackable | Classification::StronglyNonStackable => stackable,
                Classification::Unknown => false,
            };
            if !wanted {
                continue;
            }
            path.push(i);
            if self.extend(next, !stackable, remaining - 1, path)? {
                return Ok(true);
            }
            path.pop();
        }
        self.dead.insert((mask, remaining));
        Ok(false)
    }
}

/// Adds `length` edges of `sup` missing from `base`, one at a time, so that
/// stackability flips after every addition. Edges are tried in ascending
/// order, so the first chain found is deterministic. Graphs whose search runs
/// out of budget are never used in a chain.
pub fn find_alternating_chain(
    base: &Graph,
    sup: &Graph,
    length: usize,
    options: SearchOptions,
) -> Result<Option<Chain>, SearchError> {
    if !base.is_subgraph_of(sup) {
        return Err(SearchError::NotSubgraph);
    }
    let candidates: Vec<(usize, usize)> = sup.edges().filter(|&(u, v)| !base.has_edge(u, v)).collect();
    if candidates.len() > 128 {
        return Err(GraphError::InvalidParameter(format!(
            "{} candidate edges, at most 128 supported",
            candidates.len()
        ))
        .into());
    }
    let mut search = ChainSearch {
        base,
        candidates,
        options,
        verdicts: FxHashMap::default(),
        dead: FxHashSet::default(),
    };
    let first = search.classify(0)?;
    let stackable = match first {
        Classification::Stackable => true,
        Classification::Unknown => return Ok(None),
        _ => false,
    };
    let mut path = Vec::new();
    if !search.extend(0, stackable, length, &mut path)? {
        return Ok(None);
    }
    let mut classifications = vec![first];
    let mut mask = 0u128;
    for &i in &path {
        mask |= 1 << i;
        classifications.push(search.verdicts[&mask]);
    }
    Ok(Some(Chain {
        edges: path.iter().map(|&i| search.candidates[i]).collect(),
        classifications,
    }))
}
