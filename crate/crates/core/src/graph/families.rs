//! Deterministic generators for the graph families that show up in the
//! stacking results.
//!
//! Vertex numbering per family:
//!
//! * `Path(n)`, `Cycle(n)`: `0..n` in order along the path / cycle.
//! * `CompleteBipartite(a, b)`: first class `0..a`, second class `a..a+b`.
//! * `Star(k)`: center `0`, leaves `1..=k`.
//! * `Hypercube(d)`, `Grid(dims)`: mixed-radix tuples, first coordinate most
//!   significant (same as [`cartesian_product`](super::cartesian_product)).
//! * `Kneser`, `Johnson`: `k`-subsets of `{1..n}` in lexicographic order,
//!   labeled like `{1,2}`.
//! * `Biwheel { l, removed }`: hub `c = 0`, `x_i = i`, `y_i = l + i` for
//!   `i in 1..=l`; `removed` lists the 1-based `i` whose spoke-side edge
//!   `x_i y_i` is deleted.
//! * `Cactus { base, c }`: base vertices first, then the `c` pendants of base
//!   vertex `v` at `n + v*c .. n + (v+1)*c`.
//! * `ForkedPath(n)` (often written `F_n`): path `0..n-2`, the two pendants
//!   `n-2` and `n-1` hang off vertex `n-3`.
//! * `Spiky { clique, groups }`: clique `0..clique`, group `j` is attached to
//!   clique vertex `j`; pendants follow in group order.
//! * `SpikyPath { len, groups }`: same numbering as `Spiky` with two groups,
//!   but the clique is thinned to the path `0, 2, 3, .., len-1, 1`.
//! * `DoubleStar(a, b)`: centers `0` and `1`, then the `a` leaves of `0`, then
//!   the `b` leaves of `1`.
//! * `ConnectivityGadget(c)`: a `K_{c,c}` with classes `A = 0..c` and
//!   `B = c..2c`; the new `5c` vertices joined to all of `A` are
//!   `2c..7c`, those joined to all of `B` are `7c..12c`.
//! * `Glued { base, a, b }`: base vertices first; for each base vertex `v` a
//!   block of `a - 1 + b` new vertices forms a `K_{a,b}` together with `v`,
//!   which sits on the `a` side.

use std::fmt;
use std::str::FromStr;

use super::{cartesian_product, Graph, GraphError};

/// Hard cap on generated sizes so a typo cannot allocate the machine away.
const FAMILY_VERTEX_LIMIT: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Hypercube(usize),
    Grid(Vec<usize>),
    Kneser { n: usize, k: usize },
    Johnson { n: usize, k: usize, s: usize },
    Petersen,
    Biwheel { l: usize, removed: Vec<usize> },
    Cactus { base: Box<Family>, c: usize },
    ForkedPath(usize),
    Spiky { clique: usize, groups: Vec<usize> },
    SpikyPath { len: usize, groups: Vec<usize> },
    DoubleStar(usize, usize),
    ConnectivityGadget(usize),
    Glued { base: Box<Family>, a: usize, b: usize },
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter(msg.into())
}

fn check_size(required: usize) -> Result<(), GraphError> {
    if required > FAMILY_VERTEX_LIMIT {
        return Err(GraphError::BudgetExceeded {
            what: "family",
            required,
            budget: FAMILY_VERTEX_LIMIT,
        });
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

pub fn build_family(family: &Family) -> Result<Graph, GraphError> {
    match family {
        Family::Path(n) => path(*n),
        Family::Cycle(n) => {
            if *n < 3 {
                return Err(invalid("cycle needs n >= 3"));
            }
            check_size(*n)?;
            let mut edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
            edges.push((n - 1, 0));
            Ok(Graph::from_edges_unchecked(*n, &edges))
        }
        Family::Complete(n) => {
            if *n < 1 {
                return Err(invalid("complete graph needs n >= 1"));
            }
            check_size(*n)?;
            let edges: Vec<_> = (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))).collect();
            Ok(Graph::from_edges_unchecked(*n, &edges))
        }
        Family::CompleteBipartite(a, b) => {
            if *a < 1 || *b < 1 {
                return Err(invalid("complete bipartite graph needs a, b >= 1"));
            }
            check_size(a + b)?;
            let edges: Vec<_> = (0..*a).flat_map(|u| (*a..a + b).map(move |v| (u, v))).collect();
            Ok(Graph::from_edges_unchecked(a + b, &edges))
        }
        Family::Star(k) => build_family(&Family::CompleteBipartite(1, *k)),
        Family::Hypercube(d) => {
            if *d < 1 {
                return Err(invalid("hypercube needs d >= 1"));
            }
            if *d > 20 {
                return Err(GraphError::BudgetExceeded {
                    what: "hypercube",
                    required: usize::MAX,
                    budget: FAMILY_VERTEX_LIMIT,
                });
            }
            build_family(&Family::Grid(vec![2; *d]))
        }
        Family::Grid(dims) => {
            if dims.is_empty() || dims.contains(&0) {
                return Err(invalid("grid needs at least one dimension, each >= 1"));
            }
            let size = dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d));
            check_size(size.unwrap_or(usize::MAX))?;
            let mut g = path(dims[0])?;
            for &d in &dims[1..] {
                g = cartesian_product(&g, &path(d)?)?;
            }
            Ok(g)
        }
        Family::Kneser { n, k } => {
            if *k < 1 || *n < 2 * k + 1 {
                return Err(invalid(format!(
                    "kneser graph K({n},{k}) needs k >= 1 and n >= 2k+1"
                )));
            }
            set_graph(*n, *k, 0)
        }
        Family::Johnson { n, k, s } => {
            let indicator = usize::from(*s == 0);
            if *k < 1 || s >= k || *n < 2 * k - s + indicator {
                return Err(invalid(format!(
                    "johnson graph J({n},{k},{s}) needs k >= 1, s < k and n >= 2k-s+[s=0]"
                )));
            }
            set_graph(*n, *k, *s)
        }
        Family::Petersen => build_family(&Family::Kneser { n: 5, k: 2 }),
        Family::Biwheel { l, removed } => biwheel(*l, removed),
        Family::Cactus { base, c } => {
            let g = build_family(base)?;
            let n = g.n();
            check_size(n.saturating_mul(c + 1))?;
            let mut edges: Vec<_> = g.edges().collect();
            for v in 0..n {
                for j in 0..*c {
                    edges.push((v, n + v * c + j));
                }
            }
            Ok(Graph::from_edges_unchecked(n * (c + 1), &edges))
        }
        Family::ForkedPath(n) => {
            if *n < 4 {
                return Err(invalid("F_n needs n >= 4"));
            }
            check_size(*n)?;
            let mut edges: Vec<_> = (1..n - 2).map(|i| (i - 1, i)).collect();
            edges.push((n - 3, n - 2));
            edges.push((n - 3, n - 1));
            Ok(Graph::from_edges_unchecked(*n, &edges))
        }
        Family::Spiky { clique, groups } => spiky(*clique, groups, false),
        Family::SpikyPath { len, groups } => spiky(*len, groups, true),
        Family::DoubleStar(a, b) => {
            if *a < 1 || *b < 1 {
                return Err(invalid("double star needs a, b >= 1"));
            }
            check_size(a + b + 2)?;
            let mut edges = vec![(0, 1)];
            edges.extend((0..*a).map(|i| (0, 2 + i)));
            edges.extend((0..*b).map(|i| (1, 2 + a + i)));
            Ok(Graph::from_edges_unchecked(a + b + 2, &edges))
        }
        Family::ConnectivityGadget(c) => {
            if *c < 1 {
                return Err(invalid("connectivity gadget needs c >= 1"));
            }
            check_size(12 * c)?;
            let c = *c;
            let mut edges = Vec::new();
            for a in 0..c {
                for b in c..2 * c {
                    edges.push((a, b));
                }
            }
            for a in 0..c {
                edges.extend((2 * c..7 * c).map(|w| (a, w)));
            }
            for b in c..2 * c {
                edges.extend((7 * c..12 * c).map(|w| (b, w)));
            }
            Ok(Graph::from_edges_unchecked(12 * c, &edges))
        }
        Family::Glued { base, a, b } => {
            if *a < 1 || *b < 1 {
                return Err(invalid("glued blocks need a, b >= 1"));
            }
            let g = build_family(base)?;
            let n = g.n();
            let block = a - 1 + b;
            check_size(n.saturating_mul(block + 1))?;
            let mut edges: Vec<_> = g.edges().collect();
            for v in 0..n {
                let start = n + v * block;
                let a_side: Vec<usize> = std::iter::once(v).chain(start..start + a - 1).collect();
                for &x in &a_side {
                    edges.extend((start + a - 1..start + block).map(|y| (x, y)));
                }
            }
            Ok(Graph::from_edges_unchecked(n * (block + 1), &edges))
        }
    }
}

fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(invalid("path needs n >= 1"));
    }
    check_size(n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges_unchecked(n, &edges))
}

/// `k`-subsets of `{1..n}` adjacent when they share exactly `s` elements.
fn set_graph(n: usize, k: usize, s: usize) -> Result<Graph, GraphError> {
    if n > 63 {
        return Err(invalid("set-based families support n <= 63"));
    }
    check_size(binomial(n, k))?;
    let mut sets: Vec<u64> = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        sets.push(current.iter().fold(0, |m, &i| m | (1 << i)));
        // advance to the next combination in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| current[i] < n - k + i) else {
            break;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
    let mut edges = Vec::new();
    for (i, &a) in sets.iter().enumerate() {
        for (j, &b) in sets.iter().enumerate().skip(i + 1) {
            if (a & b).count_ones() as usize == s {
                edges.push((i, j));
            }
        }
    }
    let labels = sets
        .iter()
        .map(|&m| {
            let items: Vec<String> = (0..n)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| (i + 1).to_string())
                .collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    Ok(Graph::from_edges_unchecked(sets.len(), &edges).with_labels(labels))
}

fn biwheel(l: usize, removed: &[usize]) -> Result<Graph, GraphError> {
    if l < 2 {
        return Err(invalid("biwheel needs l >= 2"));
    }
    check_size(2 * l + 1)?;
    let mut drop = vec![false; l + 1];
    for &i in removed {
        if i < 1 || i > l {
            return Err(invalid(format!("biwheel removed index {i} not in 1..={l}")));
        }
        if std::mem::replace(&mut drop[i], true) {
            return Err(invalid(format!("biwheel removed index {i} listed twice")));
        }
    }
    let x = |i: usize| i;
    let y = |i: usize| l + i;
    let mut edges = Vec::new();
    for (i, &dropped) in drop.iter().enumerate().skip(1) {
        edges.push((0, x(i)));
        if !dropped {
            edges.push((x(i), y(i)));
        }
        edges.push((y(i), x(i % l + 1)));
    }
    let mut labels = vec!["c".to_string()];
    labels.extend((1..=l).map(|i| format!("x{i}")));
    labels.extend((1..=l).map(|i| format!("y{i}")));
    Ok(Graph::from_edges_unchecked(2 * l + 1, &edges).with_labels(labels))
}

fn spiky(clique: usize, groups: &[usize], thinned: bool) -> Result<Graph, GraphError> {
    if clique < 2 {
        return Err(invalid("spiky graph needs a clique of size >= 2"));
    }
    if groups.len() < 2 || groups.len() > clique {
        return Err(invalid(
            "spiky graph needs between 2 and clique-size pendant groups",
        ));
    }
    if groups.iter().any(|&g| g < 3) {
        return Err(invalid("spiky pendant groups need at least 3 pendants each"));
    }
    if thinned && groups.len() != 2 {
        return Err(invalid("spiky path carries exactly two pendant groups"));
    }
    let total = clique + groups.iter().sum::<usize>();
    check_size(total)?;
    let mut edges = Vec::new();
    if thinned {
        let order: Vec<usize> = std::iter::once(0)
            .chain(2..clique)
            .chain(std::iter::once(1))
            .collect();
        edges.extend(order.windows(2).map(|w| (w[0], w[1])));
    } else {
        for u in 0..clique {
            edges.extend((u + 1..clique).map(|v| (u, v)));
        }
    }
    let mut next = clique;
    for (anchor, &size) in groups.iter().enumerate() {
        for _ in 0..size {
            edges.push((anchor, next));
            next += 1;
        }
    }
    Ok(Graph::from_edges_unchecked(total, &edges))
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "kab:{a},{b}"),
            Family::Star(k) => write!(f, "star:{k}"),
            Family::Hypercube(d) => write!(f, "hypercube:{d}"),
            Family::Grid(dims) => write!(f, "grid:{}", join(dims)),
            Family::Kneser { n, k } => write!(f, "kneser:{n},{k}"),
            Family::Johnson { n, k, s } => write!(f, "johnson:{n},{k},{s}"),
            Family::Petersen => write!(f, "petersen"),
            Family::Biwheel { l, removed } if removed.is_empty() => write!(f, "biwheel:{l}"),
            Family::Biwheel { l, removed } => write!(f, "biwheel:{l}:{}", join(removed)),
            Family::Cactus { base, c } => write!(f, "cactus:{c}:{base}"),
            Family::ForkedPath(n) => write!(f, "f:{n}"),
            Family::Spiky { clique, groups } => write!(f, "spiky:{clique}:{}", join(groups)),
            Family::SpikyPath { len, groups } => write!(f, "spiky-path:{len}:{}", join(groups)),
            Family::DoubleStar(a, b) => write!(f, "double-star:{a},{b}"),
            Family::ConnectivityGadget(c) => write!(f, "conn:{c}"),
            Family::Glued { base, a, b } => write!(f, "glued:{a},{b}:{base}"),
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>, GraphError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| invalid(format!("expected an integer, got {x:?}")))
        })
        .collect()
}

fn exactly<const N: usize>(name: &str, s: &str) -> Result<[usize; N], GraphError> {
    parse_list(s)?
        .try_into()
        .map_err(|_| invalid(format!("{name} takes {N} parameter(s)")))
}

impl FromStr for Family {
    type Err = GraphError;

    /// Parses the compact `name:params[:more]` form produced by `Display`.
    /// Also accepts the short aliases `f10` (= `f:10`) and `k46` (= `kab:4,6`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let name = name.to_ascii_lowercase();
        let family = match name.as_str() {
            "path" => Family::Path(exactly::<1>("path", rest)?[0]),
            "cycle" => Family::Cycle(exactly::<1>("cycle", rest)?[0]),
            "complete" => Family::Complete(exactly::<1>("complete", rest)?[0]),
            "kab" => {
                let [a, b] = exactly("kab", rest)?;
                Family::CompleteBipartite(a, b)
            }
            "star" => Family::Star(exactly::<1>("star", rest)?[0]),
            "hypercube" => Family::Hypercube(exactly::<1>("hypercube", rest)?[0]),
            "grid" => Family::Grid(parse_list(rest)?),
            "kneser" => {
                let [n, k] = exactly("kneser", rest)?;
                Family::Kneser { n, k }
            }
            "johnson" => {
                let [n, k, s] = exactly("johnson", rest)?;
                Family::Johnson { n, k, s }
            }
            "petersen" => Family::Petersen,
            "biwheel" => {
                let (l, removed) = rest.split_once(':').unwrap_or((rest, ""));
                Family::Biwheel {
                    l: exactly::<1>("biwheel", l)?[0],
                    removed: parse_list(removed)?,
                }
            }
            "cactus" => {
                let (c, base) = rest
                    .split_once(':')
                    .ok_or_else(|| invalid("cactus takes c:base"))?;
                Family::Cactus {
                    base: Box::new(base.parse()?),
                    c: exactly::<1>("cactus", c)?[0],
                }
            }
            "f" => Family::ForkedPath(exactly::<1>("f", rest)?[0]),
            "spiky" | "spiky-path" => {
                let (m, groups) = rest
                    .split_once(':')
                    .ok_or_else(|| invalid("spiky takes size:groups"))?;
                let m = exactly::<1>("spiky", m)?[0];
                let groups = parse_list(groups)?;
                if name == "spiky" {
                    Family::Spiky { clique: m, groups }
                } else {
                    Family::SpikyPath { len: m, groups }
                }
            }
            "double-star" => {
                let [a, b] = exactly("double-star", rest)?;
                Family::DoubleStar(a, b)
            }
            "conn" => Family::ConnectivityGadget(exactly::<1>("conn", rest)?[0]),
            "glued" => {
                let (ab, base) = rest
                    .split_once(':')
                    .ok_or_else(|| invalid("glued takes a,b:base"))?;
                let [a, b] = exactly("glued", ab)?;
                Family::Glued {
                    base: Box::new(base.parse()?),
                    a,
                    b,
                }
            }
            alias if rest.is_empty() && alias.len() > 1 && alias.starts_with('f') => {
                Family::ForkedPath(exactly::<1>("f", &alias[1..])?[0])
            }
            alias
                if rest.is_empty()
                    && alias.len() == 3
                    && alias.starts_with('k')
                    && alias[1..].bytes().all(|b| b.is_ascii_digit()) =>
            {
                let digits = alias.as_bytes();
                Family::CompleteBipartite((digits[1] - b'0') as usize, (digits[2] - b'0') as usize)
            }
            other => return Err(invalid(format!("unknown family {other:?}"))),
        };
        Ok(family)
    }
}

impl Family {
    /// A Hamilton path known from the construction, for families where one is
    /// immediate and exact search would be too expensive.
    pub fn known_hamilton_path(&self) -> Option<Vec<usize>> {
        match self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) => Some((0..*n).collect()),
            Family::Hypercube(d) => grid_hamilton_path(&vec![2; *d]),
            Family::Grid(dims) => grid_hamilton_path(dims),
            _ => None,
        }
    }
}

/// Boustrophedon order of a grid in the numbering used by `Family::Grid`.
fn grid_hamilton_path(dims: &[usize]) -> Option<Vec<usize>> {
    if dims.is_empty() || dims.contains(&0) {
        return None;
    }
    // The first coordinate is most significant in the numbering; traverse with
    // the last coordinate varying fastest.
    let paths: Vec<Vec<usize>> = dims.iter().rev().map(|&d| (0..d).collect()).collect();
    let order = crate::construct::canonical_hamilton_path(&paths).ok()?;
    Some(
        order
            .into_iter()
            .map(|tuple| tuple.iter().rev().zip(dims).fold(0, |acc, (&x, &d)| acc * d + x))
            .collect(),
    )
}
