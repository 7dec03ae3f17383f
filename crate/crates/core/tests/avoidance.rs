//! Avoidance invariants: monotonicity, totality, the extraction contract on
//! generator families, minor transport of avoiding sets, and a recorded
//! bounded search for amplification preconditions with |C| >= 2.

mod common;

use common::{random_generator, random_map, rng};

use rand::Rng;

use nae_core::avoid::{
    avoided_colours, find_1_avoiding, inductive_step, is_t_avoiding, sel, t_of, AvoidanceMethod,
};
use nae_core::bits;
use nae_core::poly::{minor, Polymorphism};
use nae_core::Limits;

use proptest::prelude::*;

fn lim() -> Limits {
    Limits::default()
}

fn random_table(r: &mut rand_chacha::ChaCha8Rng, arity: u32, colors: u8) -> Polymorphism {
    let table = (0..1u32 << arity).map(|_| r.gen_range(1..=colors)).collect();
    Polymorphism::new(arity, colors, table).unwrap()
}

#[test]
fn monotone_under_set_extension_seeded() {
    let limits = lim();
    let mut r = rng(301);
    for _ in 0..300 {
        let arity = r.gen_range(2..=10u32);
        let colors = r.gen_range(2..=4u8);
        let f = random_table(&mut r, arity, colors);
        let small: u32 = r.gen_range(0..1u32 << arity);
        let extra: u32 = r.gen_range(0..1u32 << arity);
        let large = small | extra;
        let a = avoided_colours(&f, small, &limits).unwrap();
        let b = avoided_colours(&f, large, &limits).unwrap();
        assert_eq!(a & b, a, "S ⊆ S' must avoid at least as much");
    }
}

#[test]
fn never_all_colours_avoided_seeded() {
    let limits = lim();
    let mut r = rng(302);
    for _ in 0..300 {
        let arity = r.gen_range(1..=10u32);
        let colors = r.gen_range(2..=4u8);
        let f = random_table(&mut r, arity, colors);
        let set: u32 = r.gen_range(0..1u32 << arity);
        let avoided = avoided_colours(&f, set, &limits).unwrap();
        assert!(avoided.count_ones() <= colors as u32 - 1);
        assert!(!is_t_avoiding(&f, set, colors, &limits).unwrap());
    }
}

#[test]
fn extraction_contract_on_generator_families() {
    let limits = lim();
    let mut r = rng(303);
    for trial in 0..60 {
        let colors = [2u8, 3, 4][trial % 3];
        let arity = r.gen_range(colors as u32 + 1..=12);
        let f = random_generator(&mut r, trial, arity, colors, &limits);
        let cert = find_1_avoiding(&f, &limits).unwrap();
        assert!(cert.verified, "trial {trial}");
        assert_eq!(cert.method, AvoidanceMethod::Lemma3);
        assert!(cert.witness_pair.is_some());
        let size = cert.set_size();
        assert!(
            size == colors as u32 || size == colors as u32 - 1,
            "|S| = {size} for c = {colors}"
        );
    }
}

#[test]
fn minor_transport_of_avoiding_sets() {
    let limits = lim();
    let mut r = rng(304);
    let mut nontrivial = 0;
    for trial in 0..150 {
        let colors = [2u8, 3, 4][trial % 3];
        let arity = r.gen_range(colors as u32 + 1..=10);
        let f = random_generator(&mut r, trial, arity, colors, &limits);
        let set: u32 = r.gen_range(0..1u32 << arity);
        let avoided = avoided_colours(&f, set, &limits).unwrap();
        if avoided == 0 {
            continue;
        }
        nontrivial += 1;
        let to = r.gen_range(2..=10);
        let pi = random_map(&mut r, arity, to);
        let g = minor(&f, &pi).unwrap();
        let image = pi.image_of(set);
        let transported = avoided_colours(&g, image, &limits).unwrap();
        assert_eq!(
            transported & avoided,
            avoided,
            "π(S) must avoid what S avoided (trial {trial})"
        );
        assert!(image.count_ones() <= set.count_ones());
    }
    assert!(nontrivial >= 50, "only {nontrivial} informative samples");
}

#[test]
fn selection_consistency_on_minor_pairs() {
    let limits = lim();
    let mut r = rng(305);
    let mut checked = 0;
    for trial in 0..60 {
        let colors = [2u8, 3][trial % 2];
        let arity = r.gen_range(8..=12u32);
        let f = random_generator(&mut r, trial, arity, colors, &limits);
        let to = r.gen_range(8..=12);
        let pi = random_map(&mut r, arity, to);
        let g = minor(&f, &pi).unwrap();
        let (Some(tf), Some(tg)) = (t_of(&f, &limits).unwrap(), t_of(&g, &limits).unwrap()) else {
            panic!("generator families always have t defined");
        };
        if tf != tg {
            continue;
        }
        checked += 1;
        let sf = sel(&f, None, &limits).unwrap();
        let sg = sel(&g, None, &limits).unwrap();
        assert!(
            pi.image_of(sf.union) & sg.union != 0,
            "selection consistency failed at trial {trial}"
        );
    }
    assert!(checked >= 40, "only {checked} pairs had equal t");
}

/// Bounded search for the amplification precondition with |C| = t >= 2:
/// c+1 pairwise-disjoint sets of size <= c^t avoiding a common 2-element
/// colour set. Findings are recorded, not asserted; none are expected in
/// the generator families at this scale.
#[test]
fn record_amplification_preconditions_with_larger_c() {
    let limits = lim();
    let mut r = rng(306);
    let mut found = 0usize;
    for trial in 0..40 {
        let colors = [3u8, 4][trial % 2];
        let arity = r.gen_range(colors as u32 + 2..=10);
        let f = random_generator(&mut r, trial, arity, colors, &limits);
        // collect singletons avoiding >= 2 colours, bucketed by avoided pair
        let mut buckets: std::collections::BTreeMap<u64, Vec<u32>> = Default::default();
        for i in 0..arity {
            let set = 1u32 << i;
            let avoided = avoided_colours(&f, set, &limits).unwrap();
            if avoided.count_ones() >= 2 {
                let pair = lowest_two(avoided);
                buckets.entry(pair).or_default().push(set);
            }
        }
        for (pair, sets) in buckets {
            // the step itself also needs |R| >= c leftover coordinates
            if sets.len() >= colors as usize + 1 && arity >= 2 * colors as u32 + 1 {
                found += 1;
                let chosen = &sets[..colors as usize + 1];
                let cert = inductive_step(&f, chosen, pair, &limits).unwrap();
                assert!(cert.verified, "genuine amplification must verify");
                println!(
                    "amplification precondition found: c={colors} L={arity} C={:?}",
                    bits::mask_to_colours(pair)
                );
            }
        }
    }
    println!("bounded search finished: {found} amplification preconditions with |C| = 2");
}

fn lowest_two(mask: u64) -> u64 {
    let first = mask & mask.wrapping_neg();
    let rest = mask ^ first;
    first | (rest & rest.wrapping_neg())
}

#[test]
fn certificates_are_deterministic() {
    let limits = lim();
    let mut r = rng(307);
    let f = random_generator(&mut r, 0, 9, 3, &limits);
    let a = find_1_avoiding(&f, &limits).unwrap();
    let b = find_1_avoiding(&f, &limits).unwrap();
    assert_eq!(a, b);
    let sa = sel(&f, None, &limits).unwrap();
    let sb = sel(&f, None, &limits).unwrap();
    assert_eq!(sa, sb);
}

proptest! {
    #[test]
    fn monotonicity_property(seed in 0u64..2000) {
        let limits = lim();
        let mut r = rng(seed);
        let arity = r.gen_range(2..=8u32);
        let colors = r.gen_range(2..=4u8);
        let f = random_table(&mut r, arity, colors);
        let small: u32 = r.gen_range(0..1u32 << arity);
        let large = small | r.gen_range(0..1u32 << arity);
        let a = avoided_colours(&f, small, &limits).unwrap();
        let b = avoided_colours(&f, large, &limits).unwrap();
        prop_assert_eq!(a & b, a);
        prop_assert!(b.count_ones() <= colors as u32 - 1);
    }
}
