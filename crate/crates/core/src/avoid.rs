//! Avoided colours, extraction of 1-avoiding sets, the inductive
//! amplification step, and the t(f)/sel(f) selection.
//!
//! A set `S ⊆ [L]` is `C`-avoiding for `f` when every input that is 1 on all
//! of `S` evaluates outside `C`; it is t-avoiding when it is `C`-avoiding for
//! some `C` of size `t`. All certificates are brute-verified by enumerating
//! the `2^{L-|S|}` inputs of the fixed subcube and never trust the lemma
//! guarantees, since callers may pass tables that do not preserve NAE.

use serde::{Deserialize, Serialize};

use crate::bits::{self, ColourMask, CoordMask};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::Polymorphism;

use itertools::Itertools;

/// How a certificate was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AvoidanceMethod {
    /// Weight-h monochromatic pair search on the full coordinate set.
    Lemma3,
    /// Amplification from c+1 disjoint C-avoiding sets.
    Lemma4,
    /// `L <= c`: all of `[L]` avoids everything but one colour.
    Fallback,
    /// Avoided colours computed directly for a caller-supplied set.
    Direct,
}

/// The monochromatic disjoint input pair behind a lemma-produced set,
/// in the table's index encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPair {
    pub u: u32,
    pub v: u32,
    #[serde(rename = "color")]
    pub colour: u8,
}

/// A set `S`, the colours it avoids, and the verification verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCertificate", into = "RawCertificate")]
pub struct AvoidanceCertificate {
    pub set: CoordMask,
    pub avoided: ColourMask,
    pub witness_pair: Option<WitnessPair>,
    pub method: AvoidanceMethod,
    pub verified: bool,
}

#[derive(Serialize, Deserialize)]
struct RawCertificate {
    set: Vec<usize>,
    avoided: Vec<u8>,
    witness_pair: Option<WitnessPair>,
    method: AvoidanceMethod,
    verified: bool,
}

impl TryFrom<RawCertificate> for AvoidanceCertificate {
    type Error = Error;

    fn try_from(raw: RawCertificate) -> Result<Self> {
        let set = bits::coords_to_mask(&raw.set, 32)
            .ok_or_else(|| Error::domain("certificate set outside [1, 32]".to_string()))?;
        let avoided = bits::colours_to_mask(&raw.avoided, 64)
            .ok_or_else(|| Error::domain("certificate colours outside [1, 64]".to_string()))?;
        Ok(AvoidanceCertificate {
            set,
            avoided,
            witness_pair: raw.witness_pair,
            method: raw.method,
            verified: raw.verified,
        })
    }
}

impl From<AvoidanceCertificate> for RawCertificate {
    fn from(c: AvoidanceCertificate) -> RawCertificate {
        RawCertificate {
            set: bits::mask_to_coords(c.set),
            avoided: bits::mask_to_colours(c.avoided),
            witness_pair: c.witness_pair,
            method: c.method,
            verified: c.verified,
        }
    }
}

impl AvoidanceCertificate {
    /// 1-based coordinates of the set.
    pub fn set_coords(&self) -> Vec<usize> {
        bits::mask_to_coords(self.set)
    }

    /// 1-based avoided colours.
    pub fn avoided_colours(&self) -> Vec<u8> {
        bits::mask_to_colours(self.avoided)
    }

    pub fn set_size(&self) -> u32 {
        self.set.count_ones()
    }
}

/// t(f), the greedy maximal disjoint family, and its union sel(f).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSelection", into = "RawSelection")]
pub struct SelectionResult {
    pub t: u8,
    pub family: Vec<CoordMask>,
    pub union: CoordMask,
    pub fallback_used: bool,
    /// The fallback threshold in force, `(c+1)·c^t + c` unless overridden.
    pub threshold: u64,
}

#[derive(Serialize, Deserialize)]
struct RawSelection {
    t: u8,
    family: Vec<Vec<usize>>,
    union: Vec<usize>,
    fallback_used: bool,
    threshold: u64,
}

impl TryFrom<RawSelection> for SelectionResult {
    type Error = Error;

    fn try_from(raw: RawSelection) -> Result<Self> {
        let family = raw
            .family
            .iter()
            .map(|s| {
                bits::coords_to_mask(s, 32)
                    .ok_or_else(|| Error::domain("family set outside [1, 32]".to_string()))
            })
            .collect::<Result<_>>()?;
        let union = bits::coords_to_mask(&raw.union, 32)
            .ok_or_else(|| Error::domain("union outside [1, 32]".to_string()))?;
        Ok(SelectionResult {
            t: raw.t,
            family,
            union,
            fallback_used: raw.fallback_used,
            threshold: raw.threshold,
        })
    }
}

impl From<SelectionResult> for RawSelection {
    fn from(s: SelectionResult) -> RawSelection {
        RawSelection {
            t: s.t,
            family: s.family.iter().map(|&m| bits::mask_to_coords(m)).collect(),
            union: bits::mask_to_coords(s.union),
            fallback_used: s.fallback_used,
            threshold: s.threshold,
        }
    }
}

impl SelectionResult {
    pub fn union_coords(&self) -> Vec<usize> {
        bits::mask_to_coords(self.union)
    }
}

/// Work meter for the subset scans; trips the budget guard mid-scan rather
/// than emitting a partial answer.
struct Budget {
    used: u64,
    cap: u64,
}

impl Budget {
    fn new(limits: &Limits) -> Self {
        Budget {
            used: 0,
            cap: limits.subset_scan_budget,
        }
    }

    fn charge(&mut self, amount: u64) -> Result<()> {
        self.used = self.used.saturating_add(amount);
        if self.used > self.cap {
            Err(Error::guard(
                "avoidance scan budget",
                self.used as u128,
                self.cap as u128,
            ))
        } else {
            Ok(())
        }
    }
}

fn validate_set(f: &Polymorphism, set: CoordMask) -> Result<()> {
    if set >> f.arity() != 0 {
        return Err(Error::argument(format!(
            "set {:?} not contained in [1, {}]",
            bits::mask_to_coords(set),
            f.arity()
        )));
    }
    Ok(())
}

/// Complement of the image of `f` restricted to inputs that are 1 on `set`,
/// by full enumeration of the `2^{L-|S|}` free assignments.
pub fn avoided_colours(f: &Polymorphism, set: CoordMask, limits: &Limits) -> Result<ColourMask> {
    validate_set(f, set)?;
    let free = f.arity() - set.count_ones();
    if free > limits.free_coord_guard {
        return Err(Error::guard(
            "free coordinates",
            free as u128,
            limits.free_coord_guard as u128,
        ));
    }
    let free_mask = bits::full_coords(f.arity()) & !set;
    let mut image: ColourMask = 0;
    let mut sub = free_mask;
    loop {
        image |= 1u64 << (f.value(set | sub) - 1);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free_mask;
    }
    Ok(bits::full_colours(f.colors()) & !image)
}

/// True iff at least `t` colours are avoided when fixing `set` to 1.
pub fn is_t_avoiding(f: &Polymorphism, set: CoordMask, t: u8, limits: &Limits) -> Result<bool> {
    if t == 0 || t > f.colors() {
        return Err(Error::argument(format!(
            "t must be in [1, {}], got {t}",
            f.colors()
        )));
    }
    Ok(avoided_colours(f, set, limits)?.count_ones() >= t as u32)
}

/// The unique integer `h` with `m - c + 2 > 2h >= m - c`.
pub fn choose_h(m: u32, c: u32) -> Result<u32> {
    if m < c {
        return Err(Error::argument(format!("need m >= c, got m = {m}, c = {c}")));
    }
    Ok((m - c).div_ceil(2))
}

/// A certificate for a caller-supplied set: avoided colours computed and
/// verified by the same enumeration.
pub fn direct_certificate(
    f: &Polymorphism,
    set: CoordMask,
    limits: &Limits,
) -> Result<AvoidanceCertificate> {
    let avoided = avoided_colours(f, set, limits)?;
    Ok(AvoidanceCertificate {
        set,
        avoided,
        witness_pair: None,
        method: AvoidanceMethod::Direct,
        verified: true,
    })
}

/// Ascending-index scan for the least pair of disjoint-support inputs with
/// equal colour among `candidates` (which must be sorted ascending).
fn least_monochromatic_disjoint_pair(
    f: &Polymorphism,
    candidates: &[u32],
    budget: &mut Budget,
) -> Result<Option<(u32, u32, u8)>> {
    for (i, &u) in candidates.iter().enumerate() {
        let cu = f.value(u);
        for &v in &candidates[i + 1..] {
            budget.charge(1)?;
            if u & v == 0 && f.value(v) == cu {
                return Ok(Some((u, v, cu)));
            }
        }
    }
    Ok(None)
}

/// Extract a 1-avoiding set of size at most `c`.
///
/// For `L <= c` all of `[L]` is a (c-1)-avoiding set. Otherwise the
/// weight-h inputs with `h` chosen by [`choose_h`] form a Kneser graph
/// `KG(L, h)` under support-disjointness whose chromatic number `L - 2h + 2`
/// exceeds `c`, so some disjoint pair shares a colour; dropping both supports
/// leaves a set that avoids that colour. The pair search never materializes
/// the graph. The certificate is brute-verified either way.
pub fn find_1_avoiding(f: &Polymorphism, limits: &Limits) -> Result<AvoidanceCertificate> {
    let arity = f.arity();
    let c = f.colors() as u32;
    let full = bits::full_coords(arity);
    if arity <= c {
        let avoided = bits::full_colours(f.colors()) & !(1u64 << (f.value(full) - 1));
        let verified = avoided_colours(f, full, limits)? & avoided == avoided;
        return Ok(AvoidanceCertificate {
            set: full,
            avoided,
            witness_pair: None,
            method: AvoidanceMethod::Fallback,
            verified,
        });
    }
    let h = choose_h(arity, c)?;
    let mut budget = Budget::new(limits);
    budget.charge(binomial(arity as u64, h as u64))?;
    let candidates: Vec<u32> = (0..arity as usize)
        .combinations(h as usize)
        .map(|comb| comb.iter().fold(0u32, |m, &i| m | 1 << i))
        .sorted_unstable()
        .collect();
    match least_monochromatic_disjoint_pair(f, &candidates, &mut budget)? {
        Some((u, v, b)) => {
            let set = full & !(u | v);
            let avoided = 1u64 << (b - 1);
            let verified = avoided_colours(f, set, limits)? & avoided == avoided;
            Ok(AvoidanceCertificate {
                set,
                avoided,
                witness_pair: Some(WitnessPair { u, v, colour: b }),
                method: AvoidanceMethod::Lemma3,
                verified,
            })
        }
        None => {
            let distinct = candidates.iter().map(|&u| f.value(u)).unique().count();
            Err(Error::NoMonochromaticPair {
                weight: h,
                candidates: candidates.len(),
                colours: distinct,
            })
        }
    }
}

/// Amplify `c+1` disjoint `C`-avoiding sets into a `C ∪ {b'}`-avoiding set.
///
/// Candidate inputs take one whole `S_i` plus `h` leftover coordinates; under
/// support-disjointness they form `K_{c+1} × KG(R, h)`, which again needs
/// more than `c` colours, so a monochromatic disjoint pair exists for any
/// total `f`. Its colour `b'` cannot lie in `C` because each candidate fixes
/// one verified `C`-avoiding set to 1. When `h = 0` the candidates are the
/// `S_i` themselves and disjointness is just `i != j`.
pub fn inductive_step(
    f: &Polymorphism,
    sets: &[CoordMask],
    avoided_so_far: ColourMask,
    limits: &Limits,
) -> Result<AvoidanceCertificate> {
    let arity = f.arity();
    let c = f.colors() as u32;
    let t = avoided_so_far.count_ones();
    if t == 0 || t >= c {
        return Err(Error::argument(format!(
            "|C| must be in [1, {}], got {t}",
            c - 1
        )));
    }
    if sets.len() != c as usize + 1 {
        return Err(Error::argument(format!(
            "need exactly c+1 = {} sets, got {}",
            c + 1,
            sets.len()
        )));
    }
    let size_cap = (c as u64).pow(t);
    let mut seen: CoordMask = 0;
    for (i, &s) in sets.iter().enumerate() {
        validate_set(f, s)?;
        if s == 0 {
            return Err(Error::argument(format!("set {} is empty", i + 1)));
        }
        if s & seen != 0 {
            return Err(Error::argument(format!(
                "set {} overlaps an earlier set",
                i + 1
            )));
        }
        seen |= s;
        if s.count_ones() as u64 > size_cap {
            return Err(Error::argument(format!(
                "set {} has {} coordinates, bound is c^t = {size_cap}",
                i + 1,
                s.count_ones()
            )));
        }
        let av = avoided_colours(f, s, limits)?;
        if av & avoided_so_far != avoided_so_far {
            return Err(Error::argument(format!(
                "set {} is not C-avoiding (brute check failed)",
                i + 1
            )));
        }
    }
    let full = bits::full_coords(arity);
    let rest = full & !seen;
    let r = rest.count_ones();
    if r < c {
        return Err(Error::size(format!(
            "need |R| >= c, got |R| = {r} with c = {c}"
        )));
    }
    let h = choose_h(r, c)?;
    let rest_coords: Vec<usize> = (0..arity as usize).filter(|&i| rest >> i & 1 == 1).collect();
    let mut budget = Budget::new(limits);
    budget.charge((c as u64 + 1).saturating_mul(binomial(r as u64, h as u64)))?;
    let mut candidates: Vec<u32> = Vec::new();
    for &s in sets {
        for comb in rest_coords.iter().combinations(h as usize) {
            candidates.push(comb.iter().fold(s, |m, &&i| m | 1 << i));
        }
    }
    candidates.sort_unstable();
    match least_monochromatic_disjoint_pair(f, &candidates, &mut budget)? {
        Some((u, v, b)) => {
            assert!(
                avoided_so_far >> (b - 1) & 1 == 0,
                "pair colour {b} lies in C, contradicting verified C-avoidance"
            );
            let set = full & !(u | v);
            let size_bound = (c as u64 - 1) * size_cap + c as u64;
            assert!(
                set.count_ones() as u64 <= size_bound,
                "|S| = {} exceeds (c-1)c^t + c = {size_bound}",
                set.count_ones()
            );
            let avoided = avoided_so_far | 1u64 << (b - 1);
            let verified = avoided_colours(f, set, limits)? & avoided == avoided;
            Ok(AvoidanceCertificate {
                set,
                avoided,
                witness_pair: Some(WitnessPair { u, v, colour: b }),
                method: AvoidanceMethod::Lemma4,
                verified,
            })
        }
        None => {
            let distinct = candidates.iter().map(|&u| f.value(u)).unique().count();
            Err(Error::NoMonochromaticPair {
                weight: h,
                candidates: candidates.len(),
                colours: distinct,
            })
        }
    }
}

/// The largest `t` in `[1, c-1]` such that some set of size at most `c^t`
/// is t-avoiding, or `None` (possible only for non-NAE-preserving tables).
/// Candidate sets are scanned by size then lexicographic order.
pub fn t_of(f: &Polymorphism, limits: &Limits) -> Result<Option<u8>> {
    let c = f.colors();
    let arity = f.arity() as usize;
    let mut budget = Budget::new(limits);
    for t in (1..=c - 1).rev() {
        let size_cap = (c as u64)
            .checked_pow(t as u32)
            .unwrap_or(u64::MAX)
            .min(arity as u64) as usize;
        for size in 1..=size_cap {
            for comb in (0..arity).combinations(size) {
                let set = comb.iter().fold(0u32, |m, &i| m | 1 << i);
                budget.charge(1u64 << (arity - size))?;
                if avoided_colours(f, set, limits)?.count_ones() >= t as u32 {
                    return Ok(Some(t));
                }
            }
        }
    }
    Ok(None)
}

/// Greedy maximal family of disjoint t(f)-avoiding sets and its union.
///
/// Below the threshold `(c+1)·c^t + c` the whole of `[L]` is selected, as the
/// amplification argument needs room to run. Otherwise subsets are scanned by
/// size then lex order and every brute-verified t-avoiding set disjoint from
/// the current union is taken; the completed scan certifies maximality. The
/// family and union bounds implied by maximality of t are checked and their
/// violation (possible only for non-NAE-preserving tables) is an error.
pub fn sel(
    f: &Polymorphism,
    threshold_override: Option<u64>,
    limits: &Limits,
) -> Result<SelectionResult> {
    let t = t_of(f, limits)?.ok_or_else(|| {
        Error::argument("t(f) is undefined: no small avoiding set exists".to_string())
    })?;
    let c = f.colors() as u64;
    let arity = f.arity() as u64;
    let size_cap = c.pow(t as u32);
    let threshold = threshold_override.unwrap_or((c + 1) * size_cap + c);
    if arity < threshold {
        return Ok(SelectionResult {
            t,
            family: Vec::new(),
            union: bits::full_coords(f.arity()),
            fallback_used: true,
            threshold,
        });
    }
    let mut budget = Budget::new(limits);
    let mut family: Vec<CoordMask> = Vec::new();
    let mut union: CoordMask = 0;
    let l = f.arity() as usize;
    for size in 1..=size_cap.min(arity) as usize {
        for comb in (0..l).combinations(size) {
            let set = comb.iter().fold(0u32, |m, &i| m | 1 << i);
            if set & union != 0 {
                continue;
            }
            budget.charge(1u64 << (l - size))?;
            if avoided_colours(f, set, limits)?.count_ones() >= t as u32 {
                family.push(set);
                union |= set;
            }
        }
    }
    let family_bound = binomial(c, t as u64) * c;
    if family.len() as u64 > family_bound {
        return Err(Error::size(format!(
            "family has {} members, bound C(c,t)·c = {family_bound} \
             (f cannot be NAE-preserving)",
            family.len()
        )));
    }
    if union.count_ones() as u64 > family_bound * size_cap {
        return Err(Error::size(format!(
            "selection has {} coordinates, bound C(c,t)·c·c^t = {}",
            union.count_ones(),
            family_bound * size_cap
        )));
    }
    Ok(SelectionResult {
        t,
        family,
        union,
        fallback_used: false,
        threshold,
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out = 1u128;
    for i in 0..k as u128 {
        out = out.saturating_mul(n as u128 - i) / (i + 1);
    }
    out.min(u64::MAX as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{make_generator, Generator};

    fn lim() -> Limits {
        Limits::default()
    }

    /// Dictator on `coord` with σ(1) = 1, σ(0) = 2, recoloured into `c`.
    fn dictator(arity: u32, colors: u8, coord: usize) -> Polymorphism {
        make_generator(
            &Generator::Dictator {
                arity,
                colors,
                coord,
                sigma: [2, 1],
            },
            &lim(),
        )
        .unwrap()
    }

    #[test]
    fn avoided_for_dictator() {
        let f = dictator(5, 3, 1);
        // fixing coordinate 1 to 1 leaves only colour 1
        assert_eq!(avoided_colours(&f, 0b00001, &lim()).unwrap(), 0b110);
        // coordinate 2 does not constrain the output
        assert_eq!(avoided_colours(&f, 0b00010, &lim()).unwrap(), 0b100);
        // surjective table, empty set: nothing avoided
        let g = dictator(4, 2, 1);
        assert_eq!(avoided_colours(&g, 0, &lim()).unwrap(), 0);
    }

    #[test]
    fn avoided_for_junta() {
        let f = make_generator(
            &Generator::InjectiveJunta {
                arity: 5,
                colors: 4,
                coords: vec![1, 2],
                iota: vec![1, 2, 3, 4],
            },
            &lim(),
        )
        .unwrap();
        // fixing coordinate 1 to 1 rules out the two patterns with x1 = 0
        let avoided = avoided_colours(&f, 0b00001, &lim()).unwrap();
        assert_eq!(avoided.count_ones(), 2);
        assert_eq!(bits::mask_to_colours(avoided), vec![1, 3]);
    }

    #[test]
    fn t_avoiding_basics() {
        let f = dictator(6, 2, 1);
        assert!(is_t_avoiding(&f, 0b000001, 1, &lim()).unwrap());
        assert!(!is_t_avoiding(&f, 0b000010, 1, &lim()).unwrap());
        // no set can avoid all c colours
        assert!(!is_t_avoiding(&f, 0b000001, 2, &lim()).unwrap());
        assert!(is_t_avoiding(&f, 0b000001, 0, &lim()).is_err());
    }

    #[test]
    fn h_window() {
        assert_eq!(choose_h(5, 3).unwrap(), 1);
        assert_eq!(choose_h(10, 2).unwrap(), 4);
        assert_eq!(choose_h(3, 3).unwrap(), 0);
        assert!(choose_h(2, 3).is_err());
        for m in 2..40u32 {
            for c in 2..=m.min(8) {
                let h = choose_h(m, c).unwrap();
                assert!(m - c + 2 > 2 * h && 2 * h >= m - c);
            }
        }
    }

    #[test]
    fn find_1_avoiding_recoloured_dictator() {
        let f = dictator(5, 3, 1);
        let cert = find_1_avoiding(&f, &lim()).unwrap();
        assert_eq!(cert.method, AvoidanceMethod::Lemma3);
        // weight-1 vectors e2 and e3 both take colour 2
        let pair = cert.witness_pair.unwrap();
        assert_eq!((pair.u, pair.v, pair.colour), (0b00010, 0b00100, 2));
        assert_eq!(cert.set_coords(), vec![1, 4, 5]);
        assert_eq!(cert.avoided_colours(), vec![2]);
        assert!(cert.verified);
    }

    #[test]
    fn find_1_avoiding_fallback() {
        let f = dictator(3, 3, 1);
        let cert = find_1_avoiding(&f, &lim()).unwrap();
        assert_eq!(cert.method, AvoidanceMethod::Fallback);
        assert_eq!(cert.set_coords(), vec![1, 2, 3]);
        assert_eq!(cert.avoided_colours().len(), 2);
        assert!(cert.verified);
    }

    #[test]
    fn find_1_avoiding_constant_is_unverified() {
        let f = Polymorphism::new(5, 2, vec![1; 32]).unwrap();
        let cert = find_1_avoiding(&f, &lim()).unwrap();
        assert_eq!(cert.method, AvoidanceMethod::Lemma3);
        assert!(cert.witness_pair.is_some());
        assert!(!cert.verified);
    }

    #[test]
    fn inductive_step_spec_example() {
        let f = dictator(15, 3, 1);
        let sets = [0b0001u32, 0b0010, 0b0100, 0b1000];
        let cert = inductive_step(&f, &sets, 0b100, &lim()).unwrap();
        let pair = cert.witness_pair.unwrap();
        let u_coords = bits::mask_to_coords(pair.u);
        let v_coords = bits::mask_to_coords(pair.v);
        assert_eq!(u_coords, vec![2, 5, 6, 7, 8]);
        assert_eq!(v_coords, vec![3, 9, 10, 11, 12]);
        assert_eq!(pair.colour, 2);
        assert_eq!(cert.set_coords(), vec![1, 4, 13, 14, 15]);
        assert_eq!(cert.avoided_colours(), vec![2, 3]);
        assert!(cert.verified);
        assert_eq!(cert.method, AvoidanceMethod::Lemma4);
    }

    #[test]
    fn inductive_step_degenerate_h_and_unverified() {
        // output 2 iff some block is all-ones, else 1; not NAE-preserving
        let blocks = [0b111u32, 0b111000, 0b111000000, 0b111000000000];
        let table: Vec<u8> = (0..1u32 << 15)
            .map(|x| {
                if blocks.iter().any(|&b| x & b == b) {
                    2
                } else {
                    1
                }
            })
            .collect();
        let f = Polymorphism::new(15, 3, table).unwrap();
        let cert = inductive_step(&f, &blocks, 0b001, &lim()).unwrap();
        let pair = cert.witness_pair.unwrap();
        // h = 0: the candidates are the blocks themselves
        assert_eq!((pair.u, pair.v), (0b111, 0b111000));
        assert_eq!(pair.colour, 2);
        assert_eq!(cert.set_size(), 9);
        assert!(!cert.verified);
    }

    #[test]
    fn inductive_step_rejects_bad_inputs() {
        let f = dictator(15, 3, 1);
        // overlapping sets
        assert!(matches!(
            inductive_step(&f, &[0b0011, 0b0010, 0b0100, 0b1000], 0b100, &lim()),
            Err(Error::Argument(_))
        ));
        // wrong count
        assert!(matches!(
            inductive_step(&f, &[0b0001, 0b0010, 0b0100], 0b100, &lim()),
            Err(Error::Argument(_))
        ));
        // the singletons avoid {3} (and {1} avoids {2,3}), never {1}
        assert!(matches!(
            inductive_step(&f, &[0b0001, 0b0010, 0b0100, 0b1000], 0b001, &lim()),
            Err(Error::Argument(_))
        ));
        // |R| < c
        let small = dictator(5, 3, 1);
        assert!(matches!(
            inductive_step(&small, &[0b0001, 0b0010, 0b0100, 0b1000], 0b100, &lim()),
            Err(Error::Size(_))
        ));
    }

    #[test]
    fn t_of_examples() {
        assert_eq!(t_of(&dictator(10, 2, 1), &lim()).unwrap(), Some(1));
        assert_eq!(t_of(&dictator(15, 3, 1), &lim()).unwrap(), Some(2));
        // parity admits no small avoiding set
        let parity: Vec<u8> = (0..32u32).map(|x| 1 + (x.count_ones() % 2) as u8).collect();
        let f = Polymorphism::new(5, 2, parity).unwrap();
        assert_eq!(t_of(&f, &lim()).unwrap(), None);
    }

    #[test]
    fn sel_dictator_c2() {
        let f = dictator(10, 2, 1);
        let s = sel(&f, None, &lim()).unwrap();
        assert_eq!(s.t, 1);
        assert_eq!(s.threshold, 8);
        assert!(!s.fallback_used);
        assert_eq!(s.family, vec![0b1]);
        assert_eq!(s.union_coords(), vec![1]);
    }

    #[test]
    fn sel_fallback_and_override() {
        let f = dictator(15, 3, 1);
        let s = sel(&f, None, &lim()).unwrap();
        assert_eq!(s.threshold, 39);
        assert!(s.fallback_used);
        assert_eq!(s.union_coords().len(), 15);

        let s = sel(&f, Some(15), &lim()).unwrap();
        assert!(!s.fallback_used);
        assert_eq!(s.family, vec![0b1]);
        assert_eq!(s.union_coords(), vec![1]);
    }

    #[test]
    fn sel_bound_violation_for_constant_table() {
        let f = Polymorphism::new(8, 2, vec![1; 256]).unwrap();
        assert!(matches!(sel(&f, None, &lim()), Err(Error::Size(_))));
    }

    #[test]
    fn certificate_json_round_trip() {
        let f = dictator(5, 3, 1);
        let cert = find_1_avoiding(&f, &lim()).unwrap();
        let s = serde_json::to_string(&cert).unwrap();
        assert!(s.contains("\"method\":\"lemma3\""));
        assert!(s.contains("\"color\":2"));
        let back: AvoidanceCertificate = serde_json::from_str(&s).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn scan_budget_guard() {
        let f = dictator(12, 2, 12);
        let mut tight = lim();
        tight.subset_scan_budget = 10;
        assert!(matches!(t_of(&f, &tight), Err(Error::Guard { .. })));
    }
}
