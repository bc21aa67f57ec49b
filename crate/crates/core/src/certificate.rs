//! Non-stackability certificates that can be checked in polynomial time, and
//! the closed-form classification of complete bipartite graphs.
//!
//! * Independent set: `U` independent, `U'` the members at distance at least
//!   2 from `t`, `W` the complement of `U`, `e` the eccentricity of `t`. If
//!   `|U'| > (e - 1) |W|` the graph is not `t`-stackable.
//! * Pendant pair: in a graph of diameter at most 3, two degree-1 vertices with
//!   a common neighbor, both at distance 2 from `t`, rule out `t`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, GraphError};

/// Largest graph on which the independent-set search is exact.
pub const EXACT_INDEPENDENT_SET_LIMIT: usize = 30;
const NODE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndepSetCertificate {
    pub target: usize,
    pub u_set: Vec<usize>,
    pub u_prime_size: usize,
    pub w_size: usize,
    pub ecc: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PendantPairCertificate {
    pub target: usize,
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    #[serde(rename = "indep-set")]
    IndepSet(IndepSetCertificate),
    #[serde(rename = "pendant-pair")]
    PendantPair(PendantPairCertificate),
}

impl Certificate {
    pub fn target(&self) -> usize {
        match self {
            Certificate::IndepSet(c) => c.target,
            Certificate::PendantPair(c) => c.target,
        }
    }
}

/// Quantities `(|U'|, |W|, e)` of an independent-set certificate, or `None`
/// when `u_set` is not an independent set of distinct vertices.
fn indep_quantities(
    g: &Graph,
    d: &DistanceMatrix,
    t: usize,
    u_set: &[usize],
) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let mut member = vec![false; n];
    for &x in u_set {
        if x >= n || std::mem::replace(&mut member[x], true) {
            return None;
        }
    }
    for &x in u_set {
        if g.neighbors(x).iter().any(|&y| member[y]) {
            return None;
        }
    }
    let ecc = d.eccentricity(t)?;
    let u_prime = u_set
        .iter()
        .filter(|&&x| d.get(x, t).is_some_and(|dx| dx >= 2))
        .count();
    Some((u_prime, n - u_set.len(), ecc))
}

fn inequality_holds(u_prime: usize, w: usize, ecc: usize) -> bool {
    ecc >= 1 && u_prime as i64 > (ecc as i64 - 1) * w as i64
}

/// True when `u_set` certifies that `g` is not `t`-stackable.
pub fn check_indep_certificate(g: &Graph, t: usize, u_set: &[usize]) -> bool {
    if t >= g.n() {
        return false;
    }
    let d = all_pairs_distances(g);
    if !d.is_connected() {
        return false;
    }
    indep_quantities(g, &d, t, u_set).is_some_and(|(u, w, e)| inequality_holds(u, w, e))
}

/// Re-derives every recorded quantity and checks the certificate.
pub fn check_certificate(g: &Graph, cert: &Certificate) -> bool {
    match cert {
        Certificate::IndepSet(c) => {
            if c.target >= g.n() {
                return false;
            }
            let d = all_pairs_distances(g);
            d.is_connected()
                && indep_quantities(g, &d, c.target, &c.u_set).is_some_and(|q| {
                    q == (c.u_prime_size, c.w_size, c.ecc) && inequality_holds(q.0, q.1, q.2)
                })
        }
        Certificate::PendantPair(c) => {
            let d = all_pairs_distances(g);
            pendant_valid(g, &d, c)
        }
    }
}

fn pendant_valid(g: &Graph, d: &DistanceMatrix, c: &PendantPairCertificate) -> bool {
    let n = g.n();
    if [c.target, c.u, c.v, c.w].iter().any(|&x| x >= n) || c.u == c.v {
        return false;
    }
    d.diameter().is_some_and(|diam| diam <= 3)
        && g.degree(c.u) == 1
        && g.degree(c.v) == 1
        && g.has_edge(c.u, c.w)
        && g.has_edge(c.v, c.w)
        && d.get(c.u, c.target) == Some(2)
        && d.get(c.v, c.target) == Some(2)
}

/// Looks for a pendant pair at distance 2 from `t`; requires diameter at most 3.
pub fn check_pendant_certificate(g: &Graph, t: usize) -> Option<PendantPairCertificate> {
    if t >= g.n() {
        return None;
    }
    let d = all_pairs_distances(g);
    pendant_in(g, &d, t)
}

fn pendant_in(g: &Graph, d: &DistanceMatrix, t: usize) -> Option<PendantPairCertificate> {
    if !d.diameter().is_some_and(|diam| diam <= 3) {
        return None;
    }
    for w in 0..g.n() {
        let mut leaves = g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&x| g.degree(x) == 1 && d.get(x, t) == Some(2));
        if let (Some(u), Some(v)) = (leaves.next(), leaves.next()) {
            return Some(PendantPairCertificate { target: t, u, v, w });
        }
    }
    None
}

/// Searches for an independent set satisfying the inequality: exact
/// branch-and-bound up to [`EXACT_INDEPENDENT_SET_LIMIT`] vertices, greedy
/// above. `None` says nothing about stackability.
pub fn find_indep_certificate(g: &Graph, t: usize) -> Result<Option<IndepSetCertificate>, GraphError> {
    let n = g.n();
    if t >= n {
        return Err(GraphError::VertexOutOfRange { vertex: t, n });
    }
    let d = all_pairs_distances(g);
    if !d.is_connected() {
        return Ok(None);
    }
    find_indep_in(g, &d, t)
}

fn find_indep_in(g: &Graph, d: &DistanceMatrix, t: usize) -> Result<Option<IndepSetCertificate>, GraphError> {
    let n = g.n();
    let ecc = d.eccentricity(t).expect("connected");
    if ecc < 2 {
        return Ok(None);
    }
    // |U'| > (e-1)(n-|U|)  <=>  sum over U of (e-1) + [d(x,t) >= 2]  >  (e-1) n
    let weight: Vec<u64> = (0..n)
        .map(|x| (ecc as u64 - 1) + u64::from(d.get(x, t).expect("connected") >= 2))
        .collect();
    let threshold = (ecc as u64 - 1) * n as u64;
    let make = |set: Vec<usize>| {
        let (u_prime_size, w_size, ecc) = indep_quantities(g, d, t, &set).expect("independent");
        IndepSetCertificate {
            target: t,
            u_set: set,
            u_prime_size,
            w_size,
            ecc,
        }
    };

    let mut greedy_order: Vec<usize> = (0..n).collect();
    greedy_order.sort_by_key(|&x| (std::cmp::Reverse(weight[x]), g.degree(x), x));
    let mut taken = vec![false; n];
    let mut blocked = vec![false; n];
    for &x in &greedy_order {
        if !blocked[x] {
            taken[x] = true;
            blocked[x] = true;
            for &y in g.neighbors(x) {
                blocked[y] = true;
            }
        }
    }
    let greedy: Vec<usize> = (0..n).filter(|&x| taken[x]).collect();
    if greedy.iter().map(|&x| weight[x]).sum::<u64>() > threshold {
        return Ok(Some(make(greedy)));
    }
    if n > EXACT_INDEPENDENT_SET_LIMIT {
        return Ok(None);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (g.degree(x), x));
    let mut position = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        position[x] = i;
    }
    let closed: Vec<u64> = order
        .iter()
        .map(|&x| {
            g.neighbors(x)
                .iter()
                .fold(1u64 << position[x], |m, &y| m | 1 << position[y])
        })
        .collect();
    let mut bb = BranchAndBound {
        weight: order.iter().map(|&x| weight[x]).collect(),
        closed,
        threshold,
        nodes: 0,
        chosen: 0,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    match bb.run(all, 0) {
        Some(true) => {
            let mut set: Vec<usize> = (0..n)
                .filter(|&i| bb.chosen >> i & 1 == 1)
                .map(|i| order[i])
                .collect();
            set.sort_unstable();
            Ok(Some(make(set)))
        }
        Some(false) => Ok(None),
        None => Err(GraphError::BudgetExceeded {
            what: "independent set search",
            required: bb.nodes as usize,
            budget: NODE_BUDGET as usize,
        }),
    }
}

struct BranchAndBound {
    weight: Vec<u64>,
    closed: Vec<u64>,
    threshold: u64,
    nodes: u64,
    chosen: u64,
}

impl BranchAndBound {
    /// `Some(true)` once a set beats the threshold, `None` out of budget.
    fn run(&mut self, cand: u64, total: u64) -> Option<bool> {
        if total > self.threshold {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > NODE_BUDGET {
            return None;
        }
        if cand == 0 {
            return Some(false);
        }
        let bound: u64 = (0..64)
            .filter(|&i| cand >> i & 1 == 1)
            .map(|i| self.weight[i])
            .sum();
        if total + bound <= self.threshold {
            return Some(false);
        }
        let v = cand.trailing_zeros() as usize;
        self.chosen |= 1 << v;
        if self.run(cand & !self.closed[v], total + self.weight[v])? {
            return Some(true);
        }
        self.chosen &= !(1 << v);
        self.run(cand & !(1 << v), total)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BipartiteClass {
    Stackable,
    /// `t`-stackable exactly for `t` in the smaller class.
    OnlyFromSmallerClass,
}

/// `K_{a,b}` with `a <= b` is stackable iff `b` is `a` or `a + 1`.
pub fn classify_complete_bipartite(a: usize, b: usize) -> Result<BipartiteClass, GraphError> {
    if a < 1 || a > b {
        return Err(GraphError::InvalidParameter(format!(
            "need 1 <= a <= b, got ({a}, {b})"
        )));
    }
    Ok(if b <= a + 1 {
        BipartiteClass::Stackable
    } else {
        BipartiteClass::OnlyFromSmallerClass
    })
}

/// Per-target certificates, pendant pair first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateMap {
    pub certificates: Vec<Option<Certificate>>,
}

impl CertificateMap {
    /// Every target has a certificate.
    pub fn is_complete(&self) -> bool {
        !self.certificates.is_empty() && self.certificates.iter().all(Option::is_some)
    }

    pub fn covered(&self) -> Vec<usize> {
        (0..self.certificates.len())
            .filter(|&t| self.certificates[t].is_some())
            .collect()
    }
}

/// Tries to certify every target; a complete map proves strong non-stackability.
pub fn prove_strongly_nonstackable(g: &Graph) -> Result<CertificateMap, GraphError> {
    let d = all_pairs_distances(g);
    if !d.is_connected() {
        return Ok(CertificateMap {
            certificates: vec![None; g.n()],
        });
    }
    let certificates = (0..g.n())
        .into_par_iter()
        .map(|t| {
            if let Some(c) = pendant_in(g, &d, t) {
                return Ok(Some(Certificate::PendantPair(c)));
            }
            Ok(find_indep_in(g, &d, t)?.map(Certificate::IndepSet))
        })
        .collect::<Result<_, GraphError>>()?;
    Ok(CertificateMap { certificates })
}
