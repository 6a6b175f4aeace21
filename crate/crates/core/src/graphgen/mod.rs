//! Social network generation.
//!
//! Two generators are provided: a single Erdős–Rényi graph with edge
//! probability `k/n`, and a two-block graph whose halves are denser inside
//! than across. Either graph is turned into influence weights by
//! [`sinkhorn_normalize`].

mod sinkhorn;
pub mod strategy;

pub use sinkhorn::{sinkhorn_normalize, WeightMatrix, DEFAULT_MAX_ITER, DEFAULT_TOL};
pub use strategy::{network_registry, NetworkGenerator};

use std::collections::BTreeSet;

use rand::Rng;

use crate::rng;
use crate::{Error, Result};

/// Undirected simple graph with a 0/1 community label per node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    group: Vec<u8>,
}

impl Graph {
    /// Builds a graph from arbitrary pairs; pairs are normalised to `(lo, hi)`,
    /// deduplicated and sorted. Self-pairs and out-of-range endpoints are rejected.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        group: Option<Vec<u8>>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::config(
                    "edges",
                    format!("edge ({u},{v}) outside [0,{n})"),
                ));
            }
            if u == v {
                return Err(Error::config("edges", format!("self-pair ({u},{u})")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let group = group.unwrap_or_else(|| vec![0; n]);
        if group.len() != n || group.iter().any(|&g| g > 1) {
            return Err(Error::config("group", "expected one 0/1 label per node"));
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
            group,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(lo, hi)` pairs in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn groups(&self) -> &[u8] {
        &self.group
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    pub fn mean_degree(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        2.0 * self.edges.len() as f64 / self.n as f64
    }

    /// Number of edges whose endpoints carry different labels.
    pub fn crossing_edges(&self) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| self.group[u] != self.group[v])
            .count()
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::config("n", "must be at least 1"));
    }
    Ok(())
}

/// Erdős–Rényi graph: every unordered pair is an edge with probability `k/n`.
///
/// `k = 0` is accepted and yields an empty graph.
pub fn generate_er(n: usize, k: f64, seed: u64) -> Result<Graph> {
    check_n(n)?;
    if !k.is_finite() || k < 0.0 || k >= n as f64 {
        return Err(Error::config(
            "k",
            format!("must satisfy 0 <= k < n = {n}, got {k}"),
        ));
    }
    let p = k / n as f64;
    let mut rng = rng::stream(seed, rng::GRAPH);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph {
        n,
        edges,
        group: vec![0; n],
    })
}

/// Two equal communities: nodes `[0, n/2)` are group 0, `[n/2, n)` group 1.
///
/// Pairs inside a community connect with probability `k_in / (n/2)`, pairs
/// across communities with probability `k_out / n`.
pub fn generate_two_community(n: usize, k_in: f64, k_out: f64, seed: u64) -> Result<Graph> {
    check_n(n)?;
    if !n.is_multiple_of(2) {
        return Err(Error::config(
            "n",
            format!("two-community graphs need an even n, got {n}"),
        ));
    }
    let half = n / 2;
    if !k_in.is_finite() || k_in <= 0.0 || k_in >= half as f64 {
        return Err(Error::config(
            "k_in",
            format!("must satisfy 0 < k_in < n/2 = {half}, got {k_in}"),
        ));
    }
    if !k_out.is_finite() || k_out < 0.0 || k_out >= n as f64 {
        return Err(Error::config(
            "k_out",
            format!("must satisfy 0 <= k_out < n = {n}, got {k_out}"),
        ));
    }
    let p_in = k_in / half as f64;
    let p_out = k_out / n as f64;
    let group: Vec<u8> = (0..n).map(|v| u8::from(v >= half)).collect();
    let mut rng = rng::stream(seed, rng::GRAPH);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let p = if group[u] == group[v] { p_in } else { p_out };
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph { n, edges, group })
}

/// Maximal connected sets, each ascending, largest first (ties by smallest member).
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let adj = g.adjacency();
    let mut seen = vec![false; g.n];
    let mut comps = Vec::new();
    for start in 0..g.n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    comps
}

pub fn giant_component_fraction(g: &Graph) -> f64 {
    if g.n == 0 {
        return 0.0;
    }
    connected_components(g)
        .first()
        .map_or(0.0, |c| c.len() as f64 / g.n as f64)
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}
