//! Simple undirected graphs: cliques, Kneser graphs, tensor products,
//! exponential graphs, exact chromatic numbers and homomorphism search.

mod colour;
mod hom;

pub use colour::{chromatic_number, dsatur, greedy_clique, ColouringCertificate, Refutation};
pub use hom::hom_exists;

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// Construction cap: graphs are stored densely enough that millions of
/// vertices make no sense at desk scale.
const VERTEX_HARD_CAP: usize = 1 << 20;

/// A simple undirected graph on `[n]`, 0-based in memory, 1-based in JSON.
/// Labels, when present, record what each vertex encodes (a subset, a map).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertices: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        let edges = raw
            .edges
            .iter()
            .map(|&[u, v]| {
                if u == 0 || v == 0 {
                    return Err(Error::domain("vertices are 1-based".to_string()));
                }
                Ok((u - 1, v - 1))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut g = Graph::new(raw.vertices, edges)?;
        if let Some(labels) = raw.labels {
            g.set_labels(labels)?;
        }
        Ok(g)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> RawGraph {
        RawGraph {
            vertices: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u + 1, v + 1]).collect(),
            labels: g.labels,
        }
    }
}

impl Graph {
    /// Build from 0-based endpoint pairs; loops and duplicates are rejected.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("graph needs at least one vertex".to_string()));
        }
        if n > VERTEX_HARD_CAP {
            return Err(Error::guard("graph vertices", n as u128, VERTEX_HARD_CAP as u128));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::domain(format!("loop at vertex {}", a + 1)));
            }
            if a >= n || b >= n {
                return Err(Error::domain(format!(
                    "edge ({}, {}) outside [1, {n}]",
                    a + 1,
                    b + 1
                )));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::domain(format!(
                    "duplicate edge ({}, {})",
                    a.min(b) + 1,
                    a.max(b) + 1
                )));
            }
        }
        Ok(Graph {
            n,
            edges: set,
            labels: None,
        })
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.n {
            return Err(Error::domain(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Adjacency rows as single-word masks; only valid for `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }
}

/// The complete graph `K_n`.
pub fn clique(n: usize) -> Result<Graph> {
    let mut edges = Vec::with_capacity(n.saturating_sub(1) * n / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

/// Kneser graph `KG(n, k)`: vertices are the k-subsets of `[n]` in
/// lexicographic order, edges the disjoint pairs. `k = 0` is rejected (it
/// would put a loop at the empty set).
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::domain(
            "KG(n, 0) is a loop at the empty set; k must be at least 1".to_string(),
        ));
    }
    if k > n || n > 64 {
        return Err(Error::domain(format!(
            "need 1 <= k <= n <= 64, got n = {n}, k = {k}"
        )));
    }
    let vertices: Vec<u64> = (0..n).combinations(k).map(|c| {
        c.iter().fold(0u64, |m, &i| m | 1 << i)
    }).collect();
    if vertices.len() > VERTEX_HARD_CAP {
        return Err(Error::guard(
            "kneser vertices",
            vertices.len() as u128,
            VERTEX_HARD_CAP as u128,
        ));
    }
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if vertices[i] & vertices[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    let mut g = Graph::new(vertices.len(), edges)?;
    let labels = vertices
        .iter()
        .map(|&m| {
            let elems: Vec<String> = (0..n).filter(|&i| m >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", elems.join(","))
        })
        .collect();
    g.set_labels(labels)?;
    Ok(g)
}

/// Tensor (categorical) product: `(g, h) ~ (g', h')` iff `g ~ g'` and
/// `h ~ h'`. Vertex `(g, h)` has index `g * |V(H)| + h`.
pub fn tensor(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g
        .n()
        .checked_mul(h.n())
        .filter(|&n| n <= VERTEX_HARD_CAP)
        .ok_or(Error::Guard {
            guard: "tensor vertices",
            requested: g.n() as u128 * h.n() as u128,
            limit: VERTEX_HARD_CAP as u128,
        })?;
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        for (x, y) in h.edges() {
            edges.push((a * h.n() + x, b * h.n() + y));
            edges.push((a * h.n() + y, b * h.n() + x));
        }
    }
    let mut out = Graph::new(n, edges)?;
    if let (Some(gl), Some(hl)) = (g.labels(), h.labels()) {
        let labels = (0..g.n())
            .flat_map(|a| (0..h.n()).map(move |x| (a, x)))
            .map(|(a, x)| format!("({},{})", gl[a], hl[x]))
            .collect();
        out.set_labels(labels)?;
    }
    Ok(out)
}

/// Decode vertex `index` of the exponential graph into the map `[m] -> [n]`
/// it encodes, 1-based values; position 1 is the least significant digit.
pub fn exponential_map(index: usize, n: usize, m: usize) -> Vec<u8> {
    let mut digits = Vec::with_capacity(m);
    let mut rest = index;
    for _ in 0..m {
        digits.push((rest % n) as u8 + 1);
        rest /= n;
    }
    digits
}

/// Exponential graph `K_n^{K_m}`: vertices are all maps `[m] -> [n]`,
/// `φ ~ ψ` iff `φ(a) != ψ(b)` for every ordered pair `a != b`.
pub fn exponential(n: usize, m: usize, limits: &Limits) -> Result<Graph> {
    if n == 0 || m == 0 {
        return Err(Error::domain("need n >= 1 and m >= 1".to_string()));
    }
    let count = n
        .checked_pow(m as u32)
        .filter(|&c| c <= limits.expo_vertex_guard)
        .ok_or(Error::Guard {
            guard: "exponential graph vertices",
            requested: (n as u128).saturating_pow(m as u32),
            limit: limits.expo_vertex_guard as u128,
        })?;
    let maps: Vec<Vec<u8>> = (0..count).map(|i| exponential_map(i, n, m)).collect();
    let adjacent = |p: &[u8], q: &[u8]| -> bool {
        for a in 0..m {
            for b in 0..m {
                if a != b && p[a] == q[b] {
                    return false;
                }
            }
        }
        true
    };
    let mut edges = Vec::new();
    for i in 0..count {
        for j in i + 1..count {
            if adjacent(&maps[i], &maps[j]) {
                edges.push((i, j));
            }
        }
    }
    let mut g = Graph::new(count, edges)?;
    let labels = maps
        .iter()
        .map(|p| format!("({})", p.iter().map(|d| d.to_string()).join(",")))
        .collect();
    g.set_labels(labels)?;
    Ok(g)
}

/// The homomorphism `K_n^{K_{n+1}} -> K_n` sending each (improper)
/// n-colouring of `K_{n+1}` to its least repeating colour, which exists by
/// pigeonhole. Verified edge-by-edge before returning; colours are 1-based.
pub fn repeating_colour_hom(n: usize, limits: &Limits) -> Result<Vec<u8>> {
    let g = exponential(n, n + 1, limits)?;
    let mut colours = Vec::with_capacity(g.n());
    for idx in 0..g.n() {
        let digits = exponential_map(idx, n, n + 1);
        let mut counts = vec![0u8; n + 1];
        let mut repeat = None;
        for &d in &digits {
            counts[d as usize] += 1;
        }
        for d in 1..=n {
            if counts[d] >= 2 {
                repeat = Some(d as u8);
                break;
            }
        }
        colours.push(repeat.expect("n+1 values over n colours always repeat"));
    }
    for (u, v) in g.edges() {
        assert_ne!(
            colours[u], colours[v],
            "repeating-colour map failed on edge ({u}, {v})"
        );
    }
    Ok(colours)
}
