//! Backtracking homomorphism search with forward checking.

use crate::error::{Error, Result};
use crate::graph::colour::{decide, greedy_clique};
use crate::graph::Graph;
use crate::limits::Limits;

/// An edge-preserving map `V(G) -> V(H)` (0-based), or `None` after an
/// exhaustive search. The returned witness is the lexicographically least
/// one in (vertex, target) order.
pub fn hom_exists(g: &Graph, h: &Graph, limits: &Limits) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n > limits.solver_vertex_guard || n > 64 {
        return Err(Error::guard(
            "solver vertices",
            n as u128,
            limits.solver_vertex_guard.min(64) as u128,
        ));
    }
    let complete = h.edge_count() == h.n() * (h.n() - 1) / 2;
    let map = if complete {
        // hom into K_m is proper m-colouring; never needs more than n colours
        let m = h.n().min(n);
        let clique = greedy_clique(g);
        let (found, _) = decide(g, m, &clique, false, limits)?;
        if found.is_none() {
            return Ok(None);
        }
        let (witness, _) = decide(g, m, &[], true, limits)?;
        witness
            .expect("decision succeeded")
            .iter()
            .map(|&c| c as usize - 1)
            .collect()
    } else {
        let (decision, _) = search(g, h, false, limits)?;
        if decision.is_none() {
            return Ok(None);
        }
        let (witness, _) = search(g, h, true, limits)?;
        witness.expect("decision succeeded")
    };
    for (u, v) in g.edges() {
        assert!(
            h.has_edge(map[u], map[v]),
            "hom search emitted a non-homomorphism on ({u}, {v})"
        );
    }
    Ok(Some(map))
}

struct HomSearcher<'a> {
    g_adj: &'a [u64],
    h_rows: &'a [Vec<u64>],
    words: usize,
    assignment: Vec<Option<usize>>,
    domains: Vec<Vec<u64>>,
    nodes: u64,
    budget: u64,
    lexicographic: bool,
}

enum Outcome {
    Found,
    Exhausted,
    OverBudget,
}

impl<'a> HomSearcher<'a> {
    fn domain_size(&self, v: usize) -> u32 {
        self.domains[v].iter().map(|w| w.count_ones()).sum()
    }

    fn pick(&self) -> Option<usize> {
        let n = self.g_adj.len();
        if self.lexicographic {
            return (0..n).find(|&v| self.assignment[v].is_none());
        }
        (0..n)
            .filter(|&v| self.assignment[v].is_none())
            .min_by_key(|&v| (self.domain_size(v), v))
    }

    fn run(&mut self) -> Outcome {
        let v = match self.pick() {
            None => return Outcome::Found,
            Some(v) => v,
        };
        let candidates = self.domains[v].clone();
        for word in 0..self.words {
            let mut bits = candidates[word];
            while bits != 0 {
                let t = word * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Outcome::OverBudget;
                }
                self.assignment[v] = Some(t);
                let mut saved: Vec<(usize, Vec<u64>)> = Vec::new();
                let mut dead = false;
                let mut nb = self.g_adj[v];
                while nb != 0 {
                    let u = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if self.assignment[u].is_some() {
                        continue;
                    }
                    saved.push((u, self.domains[u].clone()));
                    let mut empty = true;
                    for w in 0..self.words {
                        self.domains[u][w] &= self.h_rows[t][w];
                        empty &= self.domains[u][w] == 0;
                    }
                    if empty {
                        dead = true;
                        break;
                    }
                }
                if !dead {
                    match self.run() {
                        Outcome::Found => return Outcome::Found,
                        Outcome::OverBudget => return Outcome::OverBudget,
                        Outcome::Exhausted => {}
                    }
                }
                for (u, dom) in saved {
                    self.domains[u] = dom;
                }
                self.assignment[v] = None;
            }
        }
        Outcome::Exhausted
    }
}

fn search(
    g: &Graph,
    h: &Graph,
    lexicographic: bool,
    limits: &Limits,
) -> Result<(Option<Vec<usize>>, u64)> {
    let words = h.n().div_ceil(64);
    let mut h_rows = vec![vec![0u64; words]; h.n()];
    for (x, y) in h.edges() {
        h_rows[x][y / 64] |= 1 << (y % 64);
        h_rows[y][x / 64] |= 1 << (x % 64);
    }
    let mut full = vec![u64::MAX; words];
    if h.n() % 64 != 0 {
        full[words - 1] = (1u64 << (h.n() % 64)) - 1;
    }
    let g_adj = g.adjacency_masks();
    let mut s = HomSearcher {
        g_adj: &g_adj,
        h_rows: &h_rows,
        words,
        assignment: vec![None; g.n()],
        domains: vec![full; g.n()],
        nodes: 0,
        budget: limits.solver_node_budget,
        lexicographic,
    };
    match s.run() {
        Outcome::Found => {
            let map = s.assignment.iter().map(|a| a.unwrap()).collect();
            Ok((Some(map), s.nodes))
        }
        Outcome::Exhausted => Ok((None, s.nodes)),
        Outcome::OverBudget => Err(Error::guard(
            "solver node budget",
            s.nodes as u128,
            limits.solver_node_budget as u128,
        )),
    }
}
