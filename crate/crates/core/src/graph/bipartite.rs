use super::Graph;

/// A proper 2-coloring and the size difference of its color classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<bool>,
    pub delta: usize,
}

impl Bipartition {
    /// Vertices on the given side, ascending.
    pub fn class(&self, side: bool) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v] == side).collect()
    }
}

/// Two-colors `g` by breadth-first search, or returns `None` on an odd cycle.
/// Each component is colored starting from its smallest vertex on side `false`.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut stack = Vec::new();
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        stack.push(root);
        while let Some(u) = stack.pop() {
            let cu = color[u]?;
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        stack.push(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let side: Vec<bool> = color.into_iter().map(Option::unwrap_or_default).collect();
    let ones = side.iter().filter(|&&s| s).count();
    Some(Bipartition {
        delta: ones.abs_diff(n - ones),
        side,
    })
}
