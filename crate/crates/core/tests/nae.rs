//! Hypergraph colouring against an independent enumeration oracle, and the
//! template-homomorphism contract against exhaustive map search.

mod common;

use nae_core::nae::{
    hyper_colour, nae_member, random_hypergraph, template_hom_exists, verify_hyper_colouring,
    Hypergraph,
};
use nae_core::Limits;

use proptest::prelude::*;

/// Lex-least valid assignment by plain odometer enumeration of [k]^n.
fn oracle_colour(h: &Hypergraph, k: u8) -> Option<Vec<u8>> {
    let n = h.vertices();
    let mut assignment = vec![1u8; n];
    loop {
        if verify_hyper_colouring(h, &assignment, k).unwrap() {
            return Some(assignment);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if assignment[i] < k {
                assignment[i] += 1;
                for later in assignment.iter_mut().skip(i + 1) {
                    *later = 1;
                }
                break;
            }
        }
    }
}

#[test]
fn backtracker_matches_oracle_on_random_hypergraphs() {
    let limits = Limits::default();
    for seed in 0..40u64 {
        let n = 4 + (seed % 7) as usize; // up to 10
        let total = n * (n - 1) * (n - 2) / 6;
        let m = (seed as usize * 3 + 1) % (total + 1);
        let h = random_hypergraph(n, m, seed).unwrap();
        for k in 2..=3u8 {
            let fast = hyper_colour(&h, k, &limits).unwrap();
            let slow = oracle_colour(&h, k);
            assert_eq!(
                fast.clone().map(|c| c.assignment),
                slow,
                "mismatch at n={n} m={m} k={k} seed={seed}"
            );
            if let Some(col) = fast {
                assert!(verify_hyper_colouring(&h, &col.assignment, k).unwrap());
            }
        }
    }
}

#[test]
fn fano_refusal_is_consistent_with_oracle() {
    let fano = nae_core::nae::fano_plane();
    assert_eq!(oracle_colour(&fano, 2), None);
    assert_eq!(hyper_colour(&fano, 2, &Limits::default()).unwrap(), None);
}

/// Exhaustive search over all maps [k] -> [c] for an NAE-preserving one.
fn oracle_template_hom(k: u8, c: u8) -> bool {
    let total = (c as u64).pow(k as u32);
    'maps: for idx in 0..total {
        let mut map = Vec::with_capacity(k as usize);
        let mut rest = idx;
        for _ in 0..k {
            map.push((rest % c as u64) as u8 + 1);
            rest /= c as u64;
        }
        for a in 1..=k {
            for b in 1..=k {
                for d in 1..=k {
                    let non_constant = !(a == b && b == d);
                    if non_constant {
                        let (x, y, z) = (
                            map[a as usize - 1],
                            map[b as usize - 1],
                            map[d as usize - 1],
                        );
                        if x == y && y == z {
                            continue 'maps;
                        }
                    }
                }
            }
        }
        return true;
    }
    false
}

#[test]
fn template_hom_matches_exhaustive_search() {
    for k in 2..=4u8 {
        for c in 2..=4u8 {
            let claimed = template_hom_exists(k, c).unwrap().is_some();
            assert_eq!(claimed, oracle_template_hom(k, c), "k={k} c={c}");
        }
    }
}

#[test]
fn inclusion_certificate_preserves_nae() {
    let map = template_hom_exists(3, 5).unwrap().unwrap();
    for a in 1..=3u8 {
        for b in 1..=3u8 {
            for d in 1..=3u8 {
                if nae_member([a, b, d], 3).unwrap() {
                    let image = [
                        map[a as usize - 1],
                        map[b as usize - 1],
                        map[d as usize - 1],
                    ];
                    assert!(nae_member(image, 5).unwrap());
                }
            }
        }
    }
}

#[test]
fn rejected_triple_count_is_exactly_c() {
    for c in 2..=6u8 {
        let mut rejected = 0usize;
        for a in 1..=c {
            for b in 1..=c {
                for d in 1..=c {
                    if !nae_member([a, b, d], c).unwrap() {
                        rejected += 1;
                    }
                }
            }
        }
        assert_eq!(rejected, c as usize);
        assert_eq!(
            (c as usize).pow(3) - rejected,
            (c as usize).pow(3) - c as usize
        );
    }
}

proptest! {
    #[test]
    fn hypergraph_files_round_trip(seed in 0u64..500, n in 4usize..12, m in 0usize..8) {
        let total = n * (n - 1) * (n - 2) / 6;
        let h = random_hypergraph(n, m.min(total), seed).unwrap();
        let text = serde_json::to_string(&h).unwrap();
        let back: Hypergraph = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, h);
    }

    #[test]
    fn any_returned_colouring_verifies(seed in 0u64..200) {
        let limits = Limits::default();
        let n = 5 + (seed % 5) as usize;
        let total = n * (n - 1) * (n - 2) / 6;
        let h = random_hypergraph(n, (seed as usize * 7 + 2) % (total + 1), seed).unwrap();
        if let Some(col) = hyper_colour(&h, 2, &limits).unwrap() {
            prop_assert!(verify_hyper_colouring(&h, &col.assignment, 2).unwrap());
        }
    }
}
