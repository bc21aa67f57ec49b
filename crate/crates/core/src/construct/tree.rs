use serde::Serialize;

use super::SolveError;
use crate::graph::{tree_spread_and_diameter, Graph, GraphError, PathPartition};

/// Partitions a tree into paths by repeatedly peeling off the branch to a
/// deepest leaf, with the tree rooted at its smallest leaf. When the spread
/// is `k`, every path has at least `k / 2` vertices.
///
/// Paths come in removal order, each listed from the end nearer the root; the
/// last path starts at the root.
pub fn tree_path_partition(t: &Graph) -> Result<PathPartition, SolveError> {
    let n = t.n();
    if n == 0 {
        return Err(SolveError::Empty);
    }
    if !t.is_tree() {
        return Err(GraphError::NotATree.into());
    }
    if n == 1 {
        return Ok(PathPartition::new(t, vec![vec![0]])?);
    }
    let root = (0..n).find(|&v| t.degree(v) == 1).expect("trees have leaves");
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &w in t.neighbors(v) {
            if w != root && parent[w] == usize::MAX {
                parent[w] = v;
                depth[w] = depth[v] + 1;
                order.push(w);
            }
        }
    }
    let mut children = vec![0usize; n];
    for v in 0..n {
        if v != root {
            children[parent[v]] += 1;
        }
    }
    let mut alive = vec![true; n];
    let mut paths = Vec::new();
    loop {
        if (0..n).all(|v| !alive[v] || children[v] <= 1) {
            // what is left hangs straight down from the root
            let mut path = vec![root];
            let mut cur = root;
            while let Some(&next) = t
                .neighbors(cur)
                .iter()
                .find(|&&w| alive[w] && w != root && parent[w] == cur)
            {
                path.push(next);
                cur = next;
            }
            paths.push(path);
            break;
        }
        let x = (0..n)
            .filter(|&v| alive[v] && v != root && children[v] == 0)
            .max_by_key(|&v| (depth[v], std::cmp::Reverse(v)))
            .expect("a non-path tree has a leaf below the root");
        let mut branch = vec![x];
        let mut cur = x;
        while children[parent[cur]] <= 1 {
            cur = parent[cur];
            branch.push(cur);
        }
        children[parent[cur]] -= 1;
        for &v in &branch {
            alive[v] = false;
        }
        branch.reverse();
        paths.push(branch);
    }
    Ok(PathPartition::new(t, paths)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdivisionReport {
    pub s: usize,
    pub spread: usize,
    pub diameter: usize,
    pub applies: bool,
}

/// Whether the third power of a tree (or of its `s`-subdivision) is covered
/// by the sufficient condition `k >= 72` and `72 d^2 <= k^3` on spread `k` and
/// diameter `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreePowerReport {
    pub spread: usize,
    pub diameter: usize,
    pub applies: bool,
    /// Least `s` for which the `s`-subdivision qualifies; `None` for a single vertex.
    pub min_subdivision: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subdivision: Option<SubdivisionReport>,
}

fn cube_condition(k: usize, d: usize) -> bool {
    let (k, d) = (k as u128, d as u128);
    k >= 72 && 72 * d * d <= k * k * k
}

pub fn check_tree_power_hypotheses(t: &Graph, s: Option<usize>) -> Result<TreePowerReport, SolveError> {
    let (k, d) = tree_spread_and_diameter(t)?;
    let min_subdivision = (k > 0).then(|| {
        let (num, den) = (72 * (d as u128).pow(2), (k as u128).pow(3));
        num.div_ceil(den).max(1) as usize
    });
    let subdivision = match s {
        Some(0) => {
            return Err(GraphError::InvalidParameter("subdivision factor must be positive".into()).into())
        }
        Some(s) => Some(SubdivisionReport {
            s,
            spread: s * k,
            diameter: s * d,
            applies: cube_condition(s * k, s * d),
        }),
        None => None,
    };
    Ok(TreePowerReport {
        spread: k,
        diameter: d,
        applies: cube_condition(k, d),
        min_subdivision,
        subdivision,
    })
}
