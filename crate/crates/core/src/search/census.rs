use serde::Serialize;

use super::{decide_stackable, Classification, SearchError, SearchOptions};
use crate::graph::{canonical_form, enumerate_connected_graphs, find_hamilton_path, CanonicalForm, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub n: usize,
    /// Upper-triangle adjacency bits of the canonical labeling.
    pub canonical: String,
    pub edges: Vec<(usize, usize)>,
}

impl CensusEntry {
    fn new(g: &Graph, form: CanonicalForm) -> Self {
        CensusEntry {
            n: g.n(),
            canonical: form.to_bit_string(),
            edges: g.edges().collect(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Census {
    /// Stackable graphs without a Hamilton path.
    pub found: Vec<CensusEntry>,
    /// Non-Hamiltonian graphs whose search ran out of budget.
    pub undecided: Vec<CensusEntry>,
    /// Connected graphs examined per vertex count, starting at `n = 1`.
    pub examined: Vec<usize>,
}

/// Every connected graph on at most `max_n` vertices (up to isomorphism) that
/// is stackable but has no Hamilton path.
pub fn census_stackable_nonhamiltonian(max_n: usize, options: SearchOptions) -> Result<Census, SearchError> {
    let mut census = Census::default();
    for n in 1..=max_n {
        let graphs = enumerate_connected_graphs(n)?;
        census.examined.push(graphs.len());
        for g in graphs {
            if find_hamilton_path(&g, n)?.is_some() {
                continue;
            }
            let entry = || CensusEntry::new(&g, canonical_form(&g));
            match decide_stackable(&g, options)?.classification {
                Classification::Stackable => census.found.push(entry()),
                Classification::Unknown => census.undecided.push(entry()),
                _ => {}
            }
        }
    }
    Ok(census)
}
