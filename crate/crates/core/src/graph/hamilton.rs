use super::{Graph, GraphError};

/// Default vertex cap for the exact subset dynamic program.
pub const MAX_HAMILTON_VERTICES: usize = 24;

/// Exact Hamilton path search by dynamic programming over vertex subsets.
///
/// `reach[mask]` holds the set of end vertices `v` such that some path visits
/// exactly `mask` and ends at `v`. `Ok(None)` means no Hamilton path exists.
pub fn find_hamilton_path(g: &Graph, max_vertices: usize) -> Result<Option<Vec<usize>>, GraphError> {
    let n = g.n();
    if n > max_vertices.min(28) {
        return Err(GraphError::BudgetExceeded {
            what: "hamilton path search",
            required: n,
            budget: max_vertices.min(28),
        });
    }
    if n == 0 || !g.is_connected() {
        return Ok(None);
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | (1 << w)))
        .collect();
    let full = (1u32 << n) - 1;
    let mut reach = vec![0u32; 1 << n];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        let mut ends = reach[mask as usize];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut ext = nbr[v] & !mask;
            while ext != 0 {
                let w = ext.trailing_zeros();
                ext &= ext - 1;
                reach[(mask | (1 << w)) as usize] |= 1 << w;
            }
        }
    }
    if reach[full as usize] == 0 {
        return Ok(None);
    }
    // Walk back from the smallest feasible end vertex.
    let mut path = Vec::with_capacity(n);
    let mut mask = full;
    let mut v = reach[full as usize].trailing_zeros() as usize;
    loop {
        path.push(v);
        mask &= !(1 << v);
        if mask == 0 {
            break;
        }
        let candidates = reach[mask as usize] & nbr[v];
        v = candidates.trailing_zeros() as usize;
    }
    path.reverse();
    Ok(Some(path))
}
