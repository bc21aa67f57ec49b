//! Isomorphism-free enumeration of small connected graphs.
//!
//! The canonical form of a graph on `n` vertices is the lexicographically
//! smallest adjacency bit string over all vertex permutations, where the bit
//! string lists the upper triangle column by column:
//! `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`. Column order lets a
//! partial permutation fix a prefix of the string, which the search uses to
//! prune.

use std::collections::BTreeSet;

use super::{Graph, GraphError};

pub const MAX_ENUMERATION_VERTICES: usize = 7;

/// Largest `n` whose bit string fits the `u64` encoding.
const MAX_CANONICAL_VERTICES: usize = 11;

/// Canonical adjacency bit string; bit `k` of the string is stored at
/// position `len - 1 - k` so that integer order is lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u64,
}

impl CanonicalForm {
    fn len(n: usize) -> usize {
        n * n.saturating_sub(1) / 2
    }

    /// The string of `0`/`1` characters.
    pub fn to_bit_string(&self) -> String {
        let len = Self::len(self.n);
        (0..len)
            .map(|k| {
                if self.bits >> (len - 1 - k) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    pub fn to_graph(&self) -> Graph {
        let len = Self::len(self.n);
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> (len - 1 - k) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges_unchecked(self.n, &edges)
    }
}

struct Canonizer<'a> {
    n: usize,
    adj: &'a [u16],
    perm: Vec<usize>,
    used: u16,
    best: Option<u64>,
}

impl Canonizer<'_> {
    /// `prefix` holds the bits of columns `1..placed`. A branch is cut as soon
    /// as its prefix exceeds the best string's prefix of the same length.
    fn search(&mut self, placed: usize, prefix: u64) {
        if placed == self.n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let total = CanonicalForm::len(self.n);
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut next = prefix;
            for i in 0..placed {
                next = next << 1 | u64::from(self.adj[self.perm[i]] >> v & 1);
            }
            if let Some(best) = self.best {
                let bits = CanonicalForm::len(placed + 1);
                if next > best >> (total - bits) {
                    continue;
                }
            }
            self.perm[placed] = v;
            self.used |= 1 << v;
            self.search(placed + 1, next);
            self.used &= !(1 << v);
        }
    }
}

/// Brute-force canonical form; supports up to 11 vertices.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    assert!(n <= MAX_CANONICAL_VERTICES, "canonical form supports n <= 11");
    let adj: Vec<u16> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | (1 << w)))
        .collect();
    let mut c = Canonizer {
        n,
        adj: &adj,
        perm: vec![0; n],
        used: 0,
        best: None,
    };
    c.search(0, 0);
    CanonicalForm {
        n,
        bits: c.best.unwrap_or(0),
    }
}

/// One representative (the canonical graph) per isomorphism class of
/// connected graphs on `n` vertices, sorted by canonical form.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(GraphError::BudgetExceeded {
            what: "graph enumeration",
            required: n,
            budget: MAX_ENUMERATION_VERTICES,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    // All graphs (connected or not) on m vertices, grown one vertex at a time.
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::from([CanonicalForm { n: 1, bits: 0 }]);
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let base = form.to_graph();
            let base_edges: Vec<_> = base.edges().collect();
            for subset in 0u32..(1 << (m - 1)) {
                let mut edges = base_edges.clone();
                edges.extend((0..m - 1).filter(|i| subset >> i & 1 == 1).map(|i| (i, m - 1)));
                next.insert(canonical_form(&Graph::from_edges_unchecked(m, &edges)));
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|f| f.to_graph())
        .filter(Graph::is_connected)
        .collect())
}
