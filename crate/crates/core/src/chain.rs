//! Chains of minors and the pigeonhole consistency witness.
//!
//! A chain `f_0 ->π f_1 -> ... -> f_ℓ` over a fixed colour count carries one
//! coordinate map per link. Since t(f) ranges over `[1, c-1]`, any chain of
//! c+1 NAE-preserving functions has two indices with equal t, and the
//! composed map must carry the selection of one into the selection of the
//! other.

use serde::{Deserialize, Serialize};

use crate::avoid::{sel, t_of, SelectionResult};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{check_minor, is_polymorphism, MinorMap, NaeViolation, Polymorphism, Verdict};

/// Functions `f_0 .. f_ℓ` with maps `π_{i,i+1}`; shapes are validated at
/// construction, the minor identities themselves by [`verify_chain`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawChain", into = "RawChain")]
pub struct MinorChain {
    colors: u8,
    functions: Vec<Polymorphism>,
    maps: Vec<MinorMap>,
}

#[derive(Serialize, Deserialize)]
struct RawChain {
    colors: u8,
    functions: Vec<Polymorphism>,
    maps: Vec<MinorMap>,
}

impl TryFrom<RawChain> for MinorChain {
    type Error = Error;

    fn try_from(raw: RawChain) -> Result<Self> {
        MinorChain::new(raw.colors, raw.functions, raw.maps)
    }
}

impl From<MinorChain> for RawChain {
    fn from(c: MinorChain) -> RawChain {
        RawChain {
            colors: c.colors,
            functions: c.functions,
            maps: c.maps,
        }
    }
}

impl MinorChain {
    pub fn new(colors: u8, functions: Vec<Polymorphism>, maps: Vec<MinorMap>) -> Result<Self> {
        if functions.is_empty() {
            return Err(Error::domain("chain needs at least one function".to_string()));
        }
        if maps.len() + 1 != functions.len() {
            return Err(Error::domain(format!(
                "{} functions need {} maps, got {}",
                functions.len(),
                functions.len() - 1,
                maps.len()
            )));
        }
        for (i, f) in functions.iter().enumerate() {
            if f.colors() != colors {
                return Err(Error::domain(format!(
                    "function {i} has {} colours, chain declares {colors}",
                    f.colors()
                )));
            }
        }
        for (i, pi) in maps.iter().enumerate() {
            if pi.from_arity() != functions[i].arity() || pi.to_arity() != functions[i + 1].arity()
            {
                return Err(Error::domain(format!(
                    "map {i} has shape [{}]->[{}], functions have arities {} and {}",
                    pi.from_arity(),
                    pi.to_arity(),
                    functions[i].arity(),
                    functions[i + 1].arity()
                )));
            }
        }
        Ok(MinorChain {
            colors,
            functions,
            maps,
        })
    }

    pub fn colors(&self) -> u8 {
        self.colors
    }

    /// Number of links ℓ (one less than the function count).
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn functions(&self) -> &[Polymorphism] {
        &self.functions
    }

    pub fn maps(&self) -> &[MinorMap] {
        &self.maps
    }
}

/// The composed map `π_{i,j} = π_{j-1,j} ∘ ... ∘ π_{i,i+1}`, verified to
/// satisfy `f_i ->π f_j` before it is returned.
pub fn compose_maps(chain: &MinorChain, i: usize, j: usize) -> Result<MinorMap> {
    if i >= j || j > chain.length() {
        return Err(Error::argument(format!(
            "need 0 <= i < j <= {}, got i = {i}, j = {j}",
            chain.length()
        )));
    }
    let mut pi = chain.maps[i].clone();
    for k in i + 1..j {
        pi = pi.compose(&chain.maps[k])?;
    }
    let check = check_minor(&chain.functions[i], &chain.functions[j], &pi)?;
    if let Some(x) = check.mismatch {
        return Err(Error::argument(format!(
            "composed map does not witness f_{i} -> f_{j}: tables differ at index {x}"
        )));
    }
    Ok(pi)
}

/// Outcome of auditing a chain: the links are checked first, then every
/// function is run through the NAE checker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainCheck {
    Valid,
    /// `is_minor_of` failed on link `link` (between functions link and
    /// link+1) at the given table index.
    BrokenLink { link: usize, mismatch: u32 },
    /// Function `index` is not a polymorphism.
    NotPolymorphism {
        index: usize,
        violation: NaeViolation,
    },
}

/// Audit every link and every function; the first failure is reported.
pub fn verify_chain(chain: &MinorChain, limits: &Limits) -> Result<ChainCheck> {
    for (link, pi) in chain.maps.iter().enumerate() {
        let check = check_minor(&chain.functions[link], &chain.functions[link + 1], pi)?;
        if let Some(mismatch) = check.mismatch {
            return Ok(ChainCheck::BrokenLink { link, mismatch });
        }
    }
    for (index, f) in chain.functions.iter().enumerate() {
        if let Verdict::Violation(violation) = is_polymorphism(f, limits)? {
            return Ok(ChainCheck::NotPolymorphism { index, violation });
        }
    }
    Ok(ChainCheck::Valid)
}

/// A consistency witness: `t(f_i) = t(f_j)` and the composed image of
/// `sel(f_i)` meets `sel(f_j)` at `coordinate` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainWitness {
    pub i: usize,
    pub j: usize,
    pub coordinate: usize,
    pub t: u8,
}

/// The lexicographically least `(i, j, coordinate)` with `i < j`,
/// `t(f_i) = t(f_j)` and `coordinate ∈ π_{i,j}(sel(f_i)) ∩ sel(f_j)`.
///
/// For a chain of c+1 NAE-preserving functions this always exists: only
/// c-1 values of t are possible, and for the colliding pair maximality of
/// the greedy family forces the intersection to be nonempty. `None` is
/// possible only when some function fails to preserve NAE.
pub fn consistency_witness(
    chain: &MinorChain,
    threshold_override: Option<u64>,
    limits: &Limits,
) -> Result<Option<ChainWitness>> {
    let mut ts: Vec<u8> = Vec::with_capacity(chain.functions.len());
    let mut selections: Vec<SelectionResult> = Vec::with_capacity(chain.functions.len());
    for (index, f) in chain.functions.iter().enumerate() {
        let t = t_of(f, limits)?.ok_or_else(|| {
            Error::argument(format!("t(f_{index}) is undefined: no small avoiding set"))
        })?;
        ts.push(t);
        selections.push(sel(f, threshold_override, limits)?);
    }
    for i in 0..chain.functions.len() {
        for j in i + 1..chain.functions.len() {
            if ts[i] != ts[j] {
                continue;
            }
            let pi = compose_maps(chain, i, j)?;
            let image = pi.image_of(selections[i].union);
            let meet = image & selections[j].union;
            if meet != 0 {
                let coordinate = meet.trailing_zeros() as usize + 1;
                let bit = 1u32 << (coordinate - 1);
                assert!(image & bit != 0 && selections[j].union & bit != 0);
                return Ok(Some(ChainWitness {
                    i,
                    j,
                    coordinate,
                    t: ts[i],
                }));
            }
        }
    }
    Ok(None)
}
