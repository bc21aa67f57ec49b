use super::{Graph, GraphError};

/// Default cap on the number of vertices a power may have.
pub const DEFAULT_VERTEX_BUDGET: usize = 1 << 16;

/// The Cartesian product. Vertex `(v, w)` gets index `v * |V(h)| + w` and the
/// label `(label_g(v),label_h(w))`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    if g.n() == 0 || h.n() == 0 {
        return Err(GraphError::Empty);
    }
    let m = h.n();
    let idx = |v: usize, w: usize| v * m + w;
    let mut edges = Vec::with_capacity(g.n() * h.edge_count() + m * g.edge_count());
    for v in 0..g.n() {
        for (w, w2) in h.edges() {
            edges.push((idx(v, w), idx(v, w2)));
        }
    }
    for (v, v2) in g.edges() {
        for w in 0..m {
            edges.push((idx(v, w), idx(v2, w)));
        }
    }
    let labels = (0..g.n())
        .flat_map(|v| (0..m).map(move |w| (v, w)))
        .map(|(v, w)| format!("({},{})", g.label(v), h.label(w)))
        .collect();
    Ok(Graph::from_edges_unchecked(g.n() * m, &edges).with_labels(labels))
}

/// Mixed-radix numbering of `r`-tuples over `0..base`, first coordinate most
/// significant. This is the vertex numbering of [`graph_power`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerIndexer {
    pub base: usize,
    pub r: usize,
}

impl PowerIndexer {
    pub fn size(&self) -> usize {
        self.base.pow(self.r as u32)
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.r);
        tuple.iter().fold(0, |acc, &x| acc * self.base + x)
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut tuple = vec![0; self.r];
        for slot in tuple.iter_mut().rev() {
            *slot = index % self.base;
            index /= self.base;
        }
        tuple
    }
}

/// The `r`-fold Cartesian product of `g` with itself. Refuses to build more
/// than `vertex_budget` vertices.
pub fn graph_power(g: &Graph, r: usize, vertex_budget: usize) -> Result<Graph, GraphError> {
    if r < 1 {
        return Err(GraphError::InvalidParameter("power needs r >= 1".into()));
    }
    if g.n() == 0 {
        return Err(GraphError::Empty);
    }
    let size = (0..r).try_fold(1usize, |acc, _| acc.checked_mul(g.n()));
    let size = match size {
        Some(s) if s <= vertex_budget => s,
        _ => {
            return Err(GraphError::BudgetExceeded {
                what: "graph power",
                required: size.unwrap_or(usize::MAX),
                budget: vertex_budget,
            })
        }
    };
    let ix = PowerIndexer { base: g.n(), r };
    let mut edges = Vec::with_capacity(size * r * g.edge_count() / g.n().max(1));
    for v in 0..size {
        let tuple = ix.decode(v);
        let mut place = size;
        for &coord in &tuple {
            place /= g.n();
            for &w in g.neighbors(coord) {
                if w > coord {
                    edges.push((v, v + (w - coord) * place));
                }
            }
        }
    }
    let labels = (0..size)
        .map(|v| {
            let parts: Vec<String> = ix.decode(v).iter().map(|&c| g.label(c)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    Ok(Graph::from_edges_unchecked(size, &edges).with_labels(labels))
}

/// Replaces each edge by a path of length `s`. New vertices follow the
/// original ones, `s - 1` per edge, in sorted edge order and running from the
/// smaller endpoint to the larger one.
pub fn subdivide(g: &Graph, s: usize) -> Result<Graph, GraphError> {
    if s < 1 {
        return Err(GraphError::InvalidParameter("subdivision needs s >= 1".into()));
    }
    let mut next = g.n();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        let mut prev = u;
        for _ in 1..s {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Ok(Graph::from_edges_unchecked(next, &edges))
}
