use super::Graph;

/// All-pairs hop distances. Unreachable pairs are `None`, never a large number.
///
/// Distances of a Cartesian power are computed on demand from the base, so a
/// power never stores its full table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    storage: Storage,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Storage {
    Dense(Vec<Option<u32>>),
    Power { base: Box<DistanceMatrix>, r: usize },
}

/// Breadth-first search from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut dist = Vec::with_capacity(n * n);
    for s in 0..n {
        dist.extend(g.bfs(s).into_iter().map(|d| d.map(|d| d as u32)));
    }
    DistanceMatrix {
        n,
        storage: Storage::Dense(dist),
    }
}

impl DistanceMatrix {
    /// Distances of the `r`-th Cartesian power of the graph behind `base`,
    /// numbered as in [`graph_power`](super::graph_power).
    pub fn power(base: &DistanceMatrix, r: usize) -> Option<DistanceMatrix> {
        let n = (0..r).try_fold(1usize, |acc, _| acc.checked_mul(base.n))?;
        Some(DistanceMatrix {
            n,
            storage: Storage::Power {
                base: Box::new(base.clone()),
                r,
            },
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> Option<usize> {
        match &self.storage {
            Storage::Dense(dist) => dist[x * self.n + y].map(|d| d as usize),
            Storage::Power { base, r } => {
                let b = base.n;
                let (mut x, mut y, mut total) = (x, y, 0);
                for _ in 0..*r {
                    total += base.get(x % b, y % b)?;
                    x /= b;
                    y /= b;
                }
                Some(total)
            }
        }
    }

    pub fn is_connected(&self) -> bool {
        match &self.storage {
            Storage::Dense(dist) => self.n > 0 && dist.iter().all(Option::is_some),
            Storage::Power { base, .. } => base.is_connected(),
        }
    }

    /// Maximum distance from `x`, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self, x: usize) -> Option<usize> {
        match &self.storage {
            Storage::Dense(_) => (0..self.n)
                .map(|y| self.get(x, y))
                .try_fold(0, |acc, d| d.map(|d| acc.max(d))),
            Storage::Power { base, r } => {
                let mut x = x;
                let mut total = 0;
                for _ in 0..*r {
                    total += base.eccentricity(x % base.n)?;
                    x /= base.n;
                }
                Some(total)
            }
        }
    }

    /// `None` for disconnected (or empty) graphs.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        match &self.storage {
            Storage::Dense(_) => (0..self.n)
                .map(|x| self.eccentricity(x))
                .try_fold(0, |acc, e| e.map(|e| acc.max(e))),
            Storage::Power { base, r } => base.diameter().map(|d| d * r),
        }
    }
}
