//! Exact chromatic number by iterative deepening.
//!
//! DSATUR greedy gives the upper bound, a greedy clique the lower bound, and
//! a branch-and-bound decision search settles every level in between. The
//! reported certificate carries the lexicographically least proper colouring
//! at χ and the node count of the completed refutation at χ-1.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

/// Completed exhaustive refutation of a colour count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refutation {
    /// The colour count that was refuted (χ - 1; 0 is vacuous).
    pub colours: usize,
    /// Branch-and-bound nodes visited by the completed search.
    pub nodes: u64,
}

/// Exact chromatic number with a proper colouring and a refutation token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouringCertificate {
    pub chi: usize,
    /// 1-based colours, the least proper χ-colouring in assignment order.
    pub colouring: Vec<u8>,
    pub refutation: Refutation,
}

/// Vertex-set word for the searcher; u64 covers 64 vertices, u128 covers 128.
pub(crate) trait VertexWord: Copy {
    fn zero() -> Self;
    fn bit(i: usize) -> Self;
    fn or_assign(&mut self, other: Self);
    fn is_zero(self) -> bool;
    fn lowest(self) -> usize;
    fn strip_lowest(&mut self);
}

macro_rules! vertex_word {
    ($t:ty) => {
        impl VertexWord for $t {
            fn zero() -> Self {
                0
            }
            fn bit(i: usize) -> Self {
                1 << i
            }
            fn or_assign(&mut self, other: Self) {
                *self |= other;
            }
            fn is_zero(self) -> bool {
                self == 0
            }
            fn lowest(self) -> usize {
                self.trailing_zeros() as usize
            }
            fn strip_lowest(&mut self) {
                *self &= *self - 1;
            }
        }
    };
}

vertex_word!(u64);
vertex_word!(u128);

fn adjacency_rows<W: VertexWord>(g: &Graph) -> Vec<W> {
    let mut adj = vec![W::zero(); g.n()];
    for (u, v) in g.edges() {
        adj[u].or_assign(W::bit(v));
        adj[v].or_assign(W::bit(u));
    }
    adj
}

/// DSATUR greedy colouring; returns (colour count, 1-based assignment).
pub fn dsatur(g: &Graph) -> (usize, Vec<u8>) {
    let n = g.n();
    let adj = g.adjacency();
    let mut colours = vec![0u8; n];
    let mut neighbour_colours: Vec<u128> = vec![0; n];
    let mut max_used = 0usize;
    for _ in 0..n {
        // most saturated uncoloured vertex, ties by degree then index
        let v = (0..n)
            .filter(|&v| colours[v] == 0)
            .max_by_key(|&v| (neighbour_colours[v].count_ones(), adj[v].len(), usize::MAX - v))
            .expect("uncoloured vertex exists");
        let c = (1..).find(|&c| neighbour_colours[v] >> (c - 1) & 1 == 0).unwrap();
        colours[v] = c as u8;
        max_used = max_used.max(c);
        for &u in &adj[v] {
            neighbour_colours[u] |= 1 << (c - 1);
        }
    }
    (max_used, colours)
}

/// Greedy clique, used as a cheap lower bound: grow from each seed vertex,
/// always taking the highest-degree compatible candidate.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let adj = g.adjacency();
    let mut best: Vec<usize> = Vec::new();
    for seed in 0..n {
        let mut members = vec![seed];
        let mut candidates: Vec<usize> = adj[seed].clone();
        candidates.sort_unstable();
        while !candidates.is_empty() {
            let &v = candidates
                .iter()
                .max_by_key(|&&v| (adj[v].len(), usize::MAX - v))
                .unwrap();
            members.push(v);
            candidates.retain(|&u| u != v && g.has_edge(u, v));
        }
        if members.len() > best.len() {
            best = members;
        }
    }
    best.sort_unstable();
    best
}

struct Searcher<'a, W: VertexWord> {
    adj: &'a [W],
    m: usize,
    nodes: u64,
    budget: u64,
    /// colours[v] in 1..=m, 0 = unassigned
    colours: Vec<u8>,
    /// mask of colours used by assigned neighbours
    neighbour_used: Vec<u64>,
    max_used: u8,
    lexicographic: bool,
}

enum Search {
    Found,
    Exhausted,
    OverBudget,
}

impl<'a, W: VertexWord> Searcher<'a, W> {
    fn feasible(&self, v: usize) -> u64 {
        let cap = self.m.min(self.max_used as usize + 1);
        let palette = if cap >= 64 { u64::MAX } else { (1u64 << cap) - 1 };
        !self.neighbour_used[v] & palette
    }

    fn pick_vertex(&self) -> Option<usize> {
        let n = self.adj.len();
        if self.lexicographic {
            return (0..n).find(|&v| self.colours[v] == 0);
        }
        // fail-first: fewest feasible colours, then most saturation
        (0..n)
            .filter(|&v| self.colours[v] == 0)
            .min_by_key(|&v| {
                (
                    self.feasible(v).count_ones(),
                    64 - self.neighbour_used[v].count_ones(),
                    v,
                )
            })
    }

    fn run(&mut self) -> Search {
        let v = match self.pick_vertex() {
            None => return Search::Found,
            Some(v) => v,
        };
        let mut feasible = self.feasible(v);
        while feasible != 0 {
            let c = feasible.trailing_zeros() as u8 + 1;
            feasible &= feasible - 1;
            self.nodes += 1;
            if self.nodes > self.budget {
                return Search::OverBudget;
            }
            let saved_max = self.max_used;
            self.colours[v] = c;
            self.max_used = self.max_used.max(c);
            let bit = 1u64 << (c - 1);
            let mut touched = W::zero();
            let mut dead = false;
            let mut nb = self.adj[v];
            while !nb.is_zero() {
                let u = nb.lowest();
                nb.strip_lowest();
                if self.colours[u] == 0 && self.neighbour_used[u] & bit == 0 {
                    self.neighbour_used[u] |= bit;
                    touched.or_assign(W::bit(u));
                    if self.feasible(u) == 0 {
                        dead = true;
                        break;
                    }
                }
            }
            if !dead {
                match self.run() {
                    Search::Found => return Search::Found,
                    Search::OverBudget => return Search::OverBudget,
                    Search::Exhausted => {}
                }
            }
            let mut t = touched;
            while !t.is_zero() {
                let u = t.lowest();
                t.strip_lowest();
                self.neighbour_used[u] &= !bit;
            }
            self.colours[v] = 0;
            self.max_used = saved_max;
        }
        Search::Exhausted
    }
}

fn decide_with<W: VertexWord>(
    g: &Graph,
    m: usize,
    precolour: &[usize],
    lexicographic: bool,
    limits: &Limits,
) -> Result<(Option<Vec<u8>>, u64)> {
    let n = g.n();
    if precolour.len() > m {
        // a clique larger than the palette refutes immediately
        return Ok((None, 0));
    }
    let adj: Vec<W> = adjacency_rows(g);
    let mut s = Searcher {
        adj: &adj,
        m,
        nodes: 0,
        budget: limits.solver_node_budget,
        colours: vec![0; n],
        neighbour_used: vec![0; n],
        max_used: 0,
        lexicographic,
    };
    for (i, &v) in precolour.iter().enumerate() {
        let c = i as u8 + 1;
        s.colours[v] = c;
        s.max_used = s.max_used.max(c);
        let mut nb = adj[v];
        while !nb.is_zero() {
            let u = nb.lowest();
            nb.strip_lowest();
            s.neighbour_used[u] |= 1 << (c - 1);
        }
    }
    if s.colours.iter().enumerate().any(|(v, &c)| c == 0 && s.feasible(v) == 0) {
        return Ok((None, 0));
    }
    match s.run() {
        Search::Found => Ok((Some(s.colours), s.nodes)),
        Search::Exhausted => Ok((None, s.nodes)),
        Search::OverBudget => Err(Error::guard(
            "solver node budget",
            s.nodes as u128,
            limits.solver_node_budget as u128,
        )),
    }
}

/// Decide m-colourability for graphs of up to 128 vertices and a palette of
/// up to 64 colours. `precolour` pins an initial clique (decision mode);
/// `lexicographic` colours vertices in index order so the first solution is
/// the least proper colouring. Returns the node count alongside the verdict.
pub(crate) fn decide(
    g: &Graph,
    m: usize,
    precolour: &[usize],
    lexicographic: bool,
    limits: &Limits,
) -> Result<(Option<Vec<u8>>, u64)> {
    if m > 64 {
        return Err(Error::guard("solver colour palette", m as u128, 64));
    }
    if g.n() <= 64 {
        decide_with::<u64>(g, m, precolour, lexicographic, limits)
    } else {
        decide_with::<u128>(g, m, precolour, lexicographic, limits)
    }
}

/// Exact chromatic number with certificates in both directions.
pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<ColouringCertificate> {
    let n = g.n();
    if n > limits.solver_vertex_guard || n > 128 {
        return Err(Error::guard(
            "solver vertices",
            n as u128,
            limits.solver_vertex_guard.min(128) as u128,
        ));
    }
    if g.edge_count() == 0 {
        return Ok(ColouringCertificate {
            chi: 1,
            colouring: vec![1; n],
            refutation: Refutation { colours: 0, nodes: 0 },
        });
    }
    let (ub, _) = dsatur(g);
    if ub > 64 {
        return Err(Error::guard("solver colour palette", ub as u128, 64));
    }
    let clique = greedy_clique(g);
    let lb = clique.len().max(2);
    let mut chi = ub;
    let mut refutation = None;
    for m in lb..ub {
        let (solution, nodes) = decide(g, m, &clique, false, limits)?;
        match solution {
            Some(_) => {
                chi = m;
                break;
            }
            None => refutation = Some(Refutation { colours: m, nodes }),
        }
    }
    // the certificate wants a completed search at exactly χ-1
    let refutation = match refutation {
        Some(r) if r.colours == chi - 1 => r,
        _ => {
            let (solution, nodes) = decide(g, chi - 1, &clique, false, limits)?;
            assert!(solution.is_none(), "refutation search found a colouring below chi");
            Refutation { colours: chi - 1, nodes }
        }
    };
    let (witness, _) = decide(g, chi, &[], true, limits)?;
    let colouring = witness.expect("a chi-colouring exists");
    for (u, v) in g.edges() {
        assert_ne!(colouring[u], colouring[v], "solver emitted an improper colouring");
    }
    Ok(ColouringCertificate {
        chi,
        colouring,
        refutation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{clique, kneser, Graph};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn cliques_need_n_colours() {
        for n in 1..8 {
            let g = clique(n).unwrap();
            let cert = chromatic_number(&g, &lim()).unwrap();
            assert_eq!(cert.chi, n);
            assert_eq!(cert.refutation.colours, n - 1);
        }
    }

    #[test]
    fn five_cycle_needs_three() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let cert = chromatic_number(&g, &lim()).unwrap();
        assert_eq!(cert.chi, 3);
        // least proper colouring of C_5
        assert_eq!(cert.colouring, vec![1, 2, 1, 2, 3]);
    }

    #[test]
    fn petersen_is_three_chromatic() {
        let g = kneser(5, 2).unwrap();
        let cert = chromatic_number(&g, &lim()).unwrap();
        assert_eq!(cert.chi, 3);
    }

    #[test]
    fn edgeless_graph() {
        let g = Graph::new(4, vec![]).unwrap();
        let cert = chromatic_number(&g, &lim()).unwrap();
        assert_eq!(cert.chi, 1);
        assert_eq!(cert.colouring, vec![1, 1, 1, 1]);
        assert_eq!(cert.refutation.colours, 0);
    }

    #[test]
    fn wide_graphs_use_wide_words() {
        // KG(8,4) is a perfect matching on 70 vertices
        let g = kneser(8, 4).unwrap();
        let mut wide = lim();
        wide.solver_vertex_guard = 128;
        let cert = chromatic_number(&g, &wide).unwrap();
        assert_eq!(cert.chi, 2);
        assert_eq!(cert.refutation.colours, 1);
    }

    #[test]
    fn vertex_guard() {
        let g = Graph::new(70, vec![(0, 1)]).unwrap();
        assert!(matches!(
            chromatic_number(&g, &lim()),
            Err(Error::Guard { .. })
        ));
        let huge = Graph::new(200, vec![(0, 1)]).unwrap();
        let mut wide = lim();
        wide.solver_vertex_guard = 256;
        assert!(matches!(
            chromatic_number(&huge, &wide),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn node_budget_is_a_guard() {
        let g = kneser(7, 2).unwrap();
        let mut tiny = lim();
        tiny.solver_node_budget = 5;
        assert!(matches!(
            chromatic_number(&g, &tiny),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn dsatur_bounds_chi() {
        let g = kneser(6, 2).unwrap();
        let (ub, colouring) = dsatur(&g);
        for (u, v) in g.edges() {
            assert_ne!(colouring[u], colouring[v]);
        }
        let cert = chromatic_number(&g, &lim()).unwrap();
        assert!(cert.chi <= ub);
        assert_eq!(cert.chi, 4);
    }

    #[test]
    fn greedy_clique_is_a_clique() {
        let g = kneser(8, 2).unwrap();
        let q = greedy_clique(&g);
        assert_eq!(q.len(), 4);
        for i in 0..q.len() {
            for j in i + 1..q.len() {
                assert!(g.has_edge(q[i], q[j]));
            }
        }
    }
}
