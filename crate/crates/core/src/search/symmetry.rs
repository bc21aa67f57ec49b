use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};

/// Nodes visited per automorphism search before giving up on that pair.
const NODE_BUDGET: u64 = 1_000_000;

/// Target vertices grouped by automorphism. Every vertex `t` carries the
/// representative of its class and an automorphism mapping that
/// representative onto `t`.
///
/// Classes can be finer than the true orbits when a search runs out of budget;
/// that only costs extra work.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbits {
    rep: Vec<usize>,
    maps: Vec<Vec<usize>>,
}

impl Orbits {
    pub fn trivial(n: usize) -> Self {
        let id: Vec<usize> = (0..n).collect();
        Orbits {
            rep: id.clone(),
            maps: vec![id; n],
        }
    }

    /// Smallest vertex of each class, ascending.
    pub fn representatives(&self) -> Vec<usize> {
        (0..self.rep.len()).filter(|&v| self.rep[v] == v).collect()
    }

    pub fn of(&self, t: usize) -> (usize, &[usize]) {
        (self.rep[t], &self.maps[t])
    }
}

/// Classes of vertices under the automorphism group, found pair by pair.
pub fn target_orbits(g: &Graph) -> Orbits {
    let n = g.n();
    let mut orbits = Orbits::trivial(n);
    let d = all_pairs_distances(g);
    if !d.is_connected() {
        return orbits;
    }
    let profile = profiles(&d);
    let mut reps: Vec<usize> = Vec::new();
    for t in 0..n {
        let found = reps
            .iter()
            .filter(|&&r| profile[r] == profile[t] && g.degree(r) == g.degree(t))
            .find_map(|&r| search(g, &d, &profile, r, t).map(|m| (r, m)));
        match found {
            Some((r, m)) => {
                orbits.rep[t] = r;
                orbits.maps[t] = m;
            }
            None => reps.push(t),
        }
    }
    orbits
}

/// An automorphism of `g` sending `from` to `to`, if one exists (and is found
/// within the node budget).
pub fn automorphism_mapping(g: &Graph, from: usize, to: usize) -> Option<Vec<usize>> {
    let d = all_pairs_distances(g);
    if from >= g.n() || to >= g.n() || !d.is_connected() {
        return None;
    }
    search(g, &d, &profiles(&d), from, to)
}

/// Number of vertices at each distance, per vertex.
fn profiles(d: &DistanceMatrix) -> Vec<Vec<usize>> {
    (0..d.n())
        .map(|x| {
            let mut counts = vec![0; d.n()];
            for y in 0..d.n() {
                counts[d.get(x, y).expect("connected")] += 1;
            }
            counts
        })
        .collect()
}

fn search(
    g: &Graph,
    d: &DistanceMatrix,
    profile: &[Vec<usize>],
    from: usize,
    to: usize,
) -> Option<Vec<usize>> {
    let n = g.n();
    // breadth-first order from `from`, so every later vertex has a mapped neighbor
    let mut order = vec![from];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut i = 0;
    while i < order.len() {
        for &w in g.neighbors(order[i]) {
            if !std::mem::replace(&mut seen[w], true) {
                order.push(w);
            }
        }
        i += 1;
    }
    let mut rank = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        rank[v] = k;
    }
    let mut anchor = vec![usize::MAX; n];
    for &u in &order[1..] {
        anchor[u] = *g
            .neighbors(u)
            .iter()
            .min_by_key(|&&w| rank[w])
            .expect("connected");
    }
    let mut st = State {
        g,
        d,
        profile,
        order: &order,
        anchor: &anchor,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        nodes: 0,
    };
    if profile[from] != profile[to] {
        return None;
    }
    st.map[from] = to;
    st.used[to] = true;
    st.extend(1).then_some(st.map)
}

struct State<'a> {
    g: &'a Graph,
    d: &'a DistanceMatrix,
    profile: &'a [Vec<usize>],
    order: &'a [usize],
    anchor: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
}

impl State<'_> {
    fn extend(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        self.nodes += 1;
        if self.nodes > NODE_BUDGET {
            return false;
        }
        let u = self.order[k];
        let image_of_anchor = self.map[self.anchor[u]];
        for &c in self.g.neighbors(image_of_anchor) {
            if self.used[c] || self.profile[c] != self.profile[u] {
                continue;
            }
            let consistent = self.order[..k]
                .iter()
                .all(|&w| self.d.get(u, w) == self.d.get(c, self.map[w]));
            if !consistent {
                continue;
            }
            self.map[u] = c;
            self.used[c] = true;
            if self.extend(k + 1) {
                return true;
            }
            self.used[c] = false;
            self.map[u] = usize::MAX;
        }
        false
    }
}
