//! Undirected simple graphs, metrics, structural queries and the family
//! generators used throughout the crate.

mod bipartite;
mod distance;
mod enumerate;
mod families;
mod hamilton;
mod io;
mod ops;
mod tree;

pub use bipartite::{bipartition, Bipartition};
pub use distance::{all_pairs_distances, DistanceMatrix};
pub use enumerate::{canonical_form, enumerate_connected_graphs, CanonicalForm, MAX_ENUMERATION_VERTICES};
pub use families::{build_family, Family};
pub use hamilton::{find_hamilton_path, MAX_HAMILTON_VERTICES};
pub use ops::{cartesian_product, graph_power, subdivide, PowerIndexer, DEFAULT_VERTEX_BUDGET};
pub use tree::tree_spread_and_diameter;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{what} needs {required} vertices, over the budget of {budget}")]
    BudgetExceeded {
        what: &'static str,
        required: usize,
        budget: usize,
    },
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is empty")]
    Empty,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// An immutable undirected simple graph on the vertices `0..n`.
///
/// Neighbor lists are kept sorted, so iteration order is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj, labels: None })
    }

    /// Like [`Graph::from_edges`] for generators that produce each edge once.
    pub(crate) fn from_edges_unchecked(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::from_edges(n, edges).expect("generator produced an invalid edge list")
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The display label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    /// Returns a copy with the extra edge `uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.push((u, v));
        let g = Graph::from_edges(self.n(), &edges)?;
        Ok(Graph {
            labels: self.labels.clone(),
            ..g
        })
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges_unchecked(self.n(), &edges)
    }

    /// True when every edge of `self` is an edge of `other` on the same vertex set.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n() == other.n() && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.bfs(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.edge_count() == self.n() - 1 && self.is_connected()
    }

    /// True when `seq` visits distinct vertices with consecutive ones adjacent.
    pub fn is_path(&self, seq: &[usize]) -> bool {
        let mut seen = vec![false; self.n()];
        for &v in seq {
            if v >= self.n() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        seq.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A spanning collection of vertex-disjoint paths.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PathPartition {
    paths: Vec<Vec<usize>>,
}

impl PathPartition {
    /// Validates that `paths` are graph paths covering every vertex exactly once.
    pub fn new(g: &Graph, paths: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut seen = vec![false; g.n()];
        for path in &paths {
            if path.is_empty() {
                return Err(GraphError::InvalidParameter("empty path in partition".into()));
            }
            for &v in path {
                if v >= g.n() {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(GraphError::InvalidParameter(format!(
                        "vertex {v} appears twice in the partition"
                    )));
                }
            }
            if let Some(w) = path.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
                return Err(GraphError::InvalidParameter(format!(
                    "{}-{} is not an edge",
                    w[0], w[1]
                )));
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(GraphError::InvalidParameter(format!(
                "vertex {v} is not covered by the partition"
            )));
        }
        Ok(PathPartition { paths })
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn into_paths(self) -> Vec<Vec<usize>> {
        self.paths
    }

    /// Index of the path containing `v`.
    pub fn path_of(&self, v: usize) -> Option<usize> {
        self.paths.iter().position(|p| p.contains(&v))
    }

    /// Number of vertices on the shortest path.
    pub fn min_len(&self) -> usize {
        self.paths.iter().map(Vec::len).min().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn edges_sorted_and_symmetric() {
        let g = Graph::from_edges(4, &[(3, 2), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(g.has_edge(2, 1) && g.has_edge(1, 2));
        assert!(!g.has_edge(0, 2));
        assert!(g.is_tree());
    }

    #[test]
    fn path_partition_validation() {
        let g = build_family(&Family::Path(4)).unwrap();
        assert!(PathPartition::new(&g, vec![vec![0, 1], vec![2, 3]]).is_ok());
        assert!(PathPartition::new(&g, vec![vec![0, 2], vec![1, 3]]).is_err());
        assert!(PathPartition::new(&g, vec![vec![0, 1, 2]]).is_err());
        assert!(PathPartition::new(&g, vec![vec![0, 1], vec![1, 2, 3]]).is_err());
    }
}
