use super::{Graph, GraphError};

/// Returns `(spread, diameter)`: the minimum and maximum distance between two
/// distinct leaves. A single vertex reports `(0, 0)`.
pub fn tree_spread_and_diameter(t: &Graph) -> Result<(usize, usize), GraphError> {
    if !t.is_tree() {
        return Err(GraphError::NotATree);
    }
    if t.n() == 1 {
        return Ok((0, 0));
    }
    let leaves: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) == 1).collect();
    let mut spread = usize::MAX;
    let mut diameter = 0;
    for (i, &x) in leaves.iter().enumerate() {
        let dist = t.bfs(x);
        for &y in &leaves[i + 1..] {
            let d = dist[y].expect("trees are connected");
            spread = spread.min(d);
            diameter = diameter.max(d);
        }
    }
    Ok((spread, diameter))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, subdivide, Family};

    #[test]
    fn star_and_path() {
        let star = build_family(&Family::Star(3)).unwrap();
        assert_eq!(tree_spread_and_diameter(&star).unwrap(), (2, 2));
        for n in 2..8 {
            let p = build_family(&Family::Path(n)).unwrap();
            assert_eq!(tree_spread_and_diameter(&p).unwrap(), (n - 1, n - 1));
        }
    }

    #[test]
    fn spider_with_legs_of_two() {
        let spider = subdivide(&build_family(&Family::Star(3)).unwrap(), 2).unwrap();
        assert_eq!(tree_spread_and_diameter(&spider).unwrap(), (4, 4));
    }

    #[test]
    fn rejects_non_trees() {
        let c4 = build_family(&Family::Cycle(4)).unwrap();
        assert_eq!(tree_spread_and_diameter(&c4), Err(GraphError::NotATree));
    }

    #[test]
    fn double_star() {
        let g = build_family(&Family::DoubleStar(3, 2)).unwrap();
        assert_eq!(tree_spread_and_diameter(&g).unwrap(), (2, 3));
    }
}
