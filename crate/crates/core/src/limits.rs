/// Resource guards for the exhaustive searches.
///
/// Every search that could blow up takes a `&Limits` and refuses to start
/// (with [`crate::Error::Guard`]) when the estimated volume exceeds the
/// configured bound. Guards never truncate an answer: an operation either
/// completes exactly or errors out before doing any work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest arity accepted by the subcube-presence polymorphism checker.
    pub max_check_arity: u32,
    /// Largest arity accepted by the naive triple-loop checker.
    pub oracle_max_arity: u32,
    /// Cap on `c^(2^L)`, the number of tables a full enumeration streams.
    pub enumeration_budget: u64,
    /// Vertex cap for the exact colouring / homomorphism solvers.
    pub solver_vertex_guard: usize,
    /// Node cap for a single branch-and-bound run; a deterministic timeout.
    pub solver_node_budget: u64,
    /// Vertex cap (`n^m`) for exponential-graph construction.
    pub expo_vertex_guard: usize,
    /// Vertex cap for exhaustive hypergraph colouring.
    pub hyper_vertex_guard: usize,
    /// Cap on free coordinates `L - |S|` in brute-force avoidance checks.
    pub free_coord_guard: u32,
    /// Cap on the number of inputs visited by a subset scan (`t_of`, `sel`).
    pub subset_scan_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_check_arity: 12,
            oracle_max_arity: 6,
            enumeration_budget: 1_000_000,
            solver_vertex_guard: 64,
            solver_node_budget: 1_000_000_000,
            expo_vertex_guard: 10_000,
            hyper_vertex_guard: 24,
            free_coord_guard: 24,
            subset_scan_budget: 100_000_000,
        }
    }
}
