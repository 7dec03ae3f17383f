//! Exact chromatic numbers across the small Kneser grid, checked against
//! the Lovász formula n - 2k + 2, with solver statistics.

use std::time::Instant;

use nae_core::graph::{chromatic_number, kneser};
use nae_core::Limits;

fn main() {
    let limits = Limits {
        solver_vertex_guard: 128,
        ..Limits::default()
    };
    println!("{:<10} {:>9} {:>7} {:>5} {:>8} {:>12}", "graph", "vertices", "edges", "chi", "formula", "refute-nodes");
    for n in 2..=8usize {
        for k in 1..=n / 2 {
            let g = kneser(n, k).unwrap();
            let start = Instant::now();
            let cert = chromatic_number(&g, &limits).unwrap();
            let formula = n - 2 * k + 2;
            assert_eq!(cert.chi, formula);
            println!(
                "KG({n},{k})    {:>9} {:>7} {:>5} {:>8} {:>12}   {:?}",
                g.n(),
                g.edge_count(),
                cert.chi,
                formula,
                cert.refutation.nodes,
                start.elapsed()
            );
        }
    }
}
