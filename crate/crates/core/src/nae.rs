//! Not-all-equal templates and 3-uniform hypergraph colouring.
//!
//! `H_c` is the domain `[c] = {1..c}` with the single ternary relation
//! `NAE_c`, all triples except the `c` constant ones. A `k`-colouring of a
//! 3-uniform hypergraph is a homomorphism to `H_k`: an assignment with no
//! monochromatic edge.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// The template `H_c`: domain `[c]` with the relation `NAE_c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaeTemplate {
    colors: u8,
}

impl NaeTemplate {
    pub fn new(colors: u8) -> Result<Self> {
        if colors < 2 || colors as u32 > 64 {
            return Err(Error::domain(format!(
                "colour count must be in 2..=64, got {colors}"
            )));
        }
        Ok(NaeTemplate { colors })
    }

    pub fn colors(&self) -> u8 {
        self.colors
    }

    /// Relation membership: every non-constant triple of `[c]^3`.
    pub fn member(&self, triple: [u8; 3]) -> Result<bool> {
        for &a in &triple {
            if a == 0 || a > self.colors {
                return Err(Error::domain(format!(
                    "colour {a} outside [1, {}]",
                    self.colors
                )));
            }
        }
        Ok(!(triple[0] == triple[1] && triple[1] == triple[2]))
    }
}

/// `NAE_c` membership for a single triple.
pub fn nae_member(triple: [u8; 3], colors: u8) -> Result<bool> {
    NaeTemplate::new(colors)?.member(triple)
}

/// The identity inclusion `[k] -> [c]` when `k <= c`; no homomorphism
/// `H_k -> H_c` exists otherwise (two source colours would collide and send
/// a non-constant triple to a constant one).
pub fn template_hom_exists(k: u8, c: u8) -> Result<Option<Vec<u8>>> {
    NaeTemplate::new(k)?;
    NaeTemplate::new(c)?;
    if k <= c {
        Ok(Some((1..=k).collect()))
    } else {
        Ok(None)
    }
}

/// A 3-uniform hypergraph on `[n]`; edges are strictly ascending triples,
/// stored sorted and deduplicated. Vertices are 0-based in memory and
/// 1-based in the JSON format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph", into = "RawHypergraph")]
pub struct Hypergraph {
    vertices: usize,
    edges: Vec<[usize; 3]>,
}

#[derive(Serialize, Deserialize)]
struct RawHypergraph {
    vertices: usize,
    edges: Vec<[usize; 3]>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        let edges = raw
            .edges
            .iter()
            .map(|&[a, b, c]| {
                if a == 0 {
                    return Err(Error::domain("vertices are 1-based".to_string()));
                }
                Ok([a - 1, b - 1, c - 1])
            })
            .collect::<Result<_>>()?;
        Hypergraph::new(raw.vertices, edges)
    }
}

impl From<Hypergraph> for RawHypergraph {
    fn from(h: Hypergraph) -> RawHypergraph {
        RawHypergraph {
            vertices: h.vertices,
            edges: h
                .edges
                .iter()
                .map(|&[a, b, c]| [a + 1, b + 1, c + 1])
                .collect(),
        }
    }
}

impl Hypergraph {
    /// Build from 0-based triples; each triple must be strictly ascending.
    pub fn new(vertices: usize, mut edges: Vec<[usize; 3]>) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::domain("hypergraph needs at least one vertex".to_string()));
        }
        for e in &edges {
            if !(e[0] < e[1] && e[1] < e[2]) {
                return Err(Error::domain(format!(
                    "edge {:?} is not strictly ascending (0-based)",
                    e
                )));
            }
            if e[2] >= vertices {
                return Err(Error::domain(format!(
                    "edge {:?} mentions a vertex outside [0, {})",
                    e, vertices
                )));
            }
        }
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        if edges.len() != before {
            return Err(Error::domain("duplicate edges".to_string()));
        }
        Ok(Hypergraph { vertices, edges })
    }

    /// Complete 3-uniform hypergraph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    edges.push([a, b, c]);
                }
            }
        }
        Hypergraph::new(n, edges)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }
}

/// A colouring as carried by the JSON format: 1-based colours in `[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperColouring {
    pub k: u8,
    pub assignment: Vec<u8>,
}

/// True iff every edge's image is in `NAE_k`.
pub fn verify_hyper_colouring(h: &Hypergraph, assignment: &[u8], k: u8) -> Result<bool> {
    NaeTemplate::new(k)?;
    if assignment.len() != h.vertices() {
        return Err(Error::argument(format!(
            "assignment covers {} vertices, hypergraph has {}",
            assignment.len(),
            h.vertices()
        )));
    }
    if let Some(&bad) = assignment.iter().find(|&&c| c == 0 || c > k) {
        return Err(Error::domain(format!("colour {bad} outside [1, {k}]")));
    }
    Ok(h.edges().iter().all(|&[a, b, c]| {
        !(assignment[a] == assignment[b] && assignment[b] == assignment[c])
    }))
}

/// Exhaustive backtracking search for the lexicographically least valid
/// assignment, or `None` when no valid assignment exists.
///
/// Vertices are coloured in index order and a vertex may only take a colour
/// at most one larger than any colour used so far; since `NAE_k` is invariant
/// under colour permutations, the least valid assignment has exactly this
/// first-use form, so the restriction is lossless.
pub fn hyper_colour(h: &Hypergraph, k: u8, limits: &Limits) -> Result<Option<HyperColouring>> {
    NaeTemplate::new(k)?;
    if h.vertices() > limits.hyper_vertex_guard {
        return Err(Error::guard(
            "hypergraph colouring vertices",
            h.vertices() as u128,
            limits.hyper_vertex_guard as u128,
        ));
    }
    let n = h.vertices();
    // edges become checkable once their largest vertex is coloured
    let mut closing: Vec<Vec<[usize; 3]>> = vec![Vec::new(); n];
    for &e in h.edges() {
        closing[e[2]].push(e);
    }

    let mut assignment = vec![0u8; n];
    let mut v = 0usize;
    loop {
        let used = assignment[..v].iter().copied().max().unwrap_or(0);
        let limit = k.min(used + 1);
        let mut colour = assignment[v] + 1;
        let mut placed = false;
        while colour <= limit {
            assignment[v] = colour;
            let ok = closing[v]
                .iter()
                .all(|&[a, b, c]| !(assignment[a] == assignment[b] && assignment[b] == assignment[c]));
            if ok {
                placed = true;
                break;
            }
            colour += 1;
        }
        if placed {
            if v + 1 == n {
                assert!(
                    verify_hyper_colouring(h, &assignment, k)?,
                    "search emitted an invalid colouring"
                );
                return Ok(Some(HyperColouring { k, assignment }));
            }
            v += 1;
        } else {
            assignment[v] = 0;
            if v == 0 {
                return Ok(None);
            }
            v -= 1;
        }
    }
}

/// Deterministic random hypergraph: `m` distinct triples drawn with a seeded
/// partial shuffle of the full triple list.
pub fn random_hypergraph(n: usize, m: usize, seed: u64) -> Result<Hypergraph> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    if n == 0 || n > 256 {
        return Err(Error::domain(format!("vertex count {n} outside 1..=256")));
    }
    let total = if n >= 3 { n * (n - 1) * (n - 2) / 6 } else { 0 };
    if m > total {
        return Err(Error::argument(format!(
            "requested {m} edges, only {total} distinct triples exist on {n} vertices"
        )));
    }
    let mut all = Vec::with_capacity(total);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                all.push([a, b, c]);
            }
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let (chosen, _) = all.partial_shuffle(&mut rng, m);
    Hypergraph::new(n, chosen.to_vec())
}

/// The Fano plane: 7 points, 7 lines, the classic non-2-colourable example.
pub fn fano_plane() -> Hypergraph {
    let lines = vec![
        [0, 1, 2],
        [0, 3, 4],
        [0, 5, 6],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ];
    Hypergraph::new(7, lines).expect("valid")
}
