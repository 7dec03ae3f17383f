//! Shared helpers for the integration suites: seeded sampling of graphs,
//! generator-family polymorphisms and coordinate maps.

#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nae_core::graph::Graph;
use nae_core::poly::{make_generator, Generator, MinorMap, Polymorphism};
use nae_core::Limits;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi-style graph: each pair is an edge with probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("valid random graph")
}

/// A random injective pair of colours from `[c]`.
pub fn random_sigma(rng: &mut ChaCha8Rng, colors: u8) -> [u8; 2] {
    let a = rng.gen_range(1..=colors);
    let mut b = rng.gen_range(1..=colors - 1);
    if b >= a {
        b += 1;
    }
    [a, b]
}

/// Seeded sample from the generator families (dictators, injective juntas
/// where `c` permits, recoloured dictators), cycling through the kinds.
pub fn random_generator(
    rng: &mut ChaCha8Rng,
    kind: usize,
    arity: u32,
    colors: u8,
    limits: &Limits,
) -> Polymorphism {
    match kind % 3 {
        0 => make_generator(
            &Generator::Dictator {
                arity,
                colors,
                coord: rng.gen_range(1..=arity as usize),
                sigma: random_sigma(rng, colors),
            },
            limits,
        )
        .expect("dictator"),
        1 if colors >= 4 => {
            let mut a = rng.gen_range(1..=arity as usize);
            let mut b = rng.gen_range(1..=arity as usize);
            while b == a {
                b = rng.gen_range(1..=arity as usize);
            }
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            // random injective ι: {0,1}^2 -> [c]
            let mut palette: Vec<u8> = (1..=colors).collect();
            for i in (1..palette.len()).rev() {
                let j = rng.gen_range(0..=i);
                palette.swap(i, j);
            }
            make_generator(
                &Generator::InjectiveJunta {
                    arity,
                    colors,
                    coords: vec![a, b],
                    iota: palette[..4].to_vec(),
                },
                limits,
            )
            .expect("junta")
        }
        _ => {
            // dictator over two colours, recoloured injectively into [c]
            let inner = make_generator(
                &Generator::Dictator {
                    arity,
                    colors: 2,
                    coord: rng.gen_range(1..=arity as usize),
                    sigma: [2, 1],
                },
                limits,
            )
            .expect("inner dictator");
            let a = rng.gen_range(1..=colors);
            let mut b = rng.gen_range(1..=colors - 1);
            if b >= a {
                b += 1;
            }
            make_generator(
                &Generator::Recolour {
                    inner: Box::new(inner),
                    colors,
                    map: vec![a, b],
                },
                limits,
            )
            .expect("recolour")
        }
    }
}

/// A uniformly random coordinate map `[from] -> [to]`.
pub fn random_map(rng: &mut ChaCha8Rng, from: u32, to: u32) -> MinorMap {
    let targets = (0..from).map(|_| rng.gen_range(1..=to)).collect();
    MinorMap::new(from, to, targets).expect("valid map")
}
