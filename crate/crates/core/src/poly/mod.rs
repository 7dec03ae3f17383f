//! Polymorphism tables over the Boolean domain, minors, generators and
//! enumeration.
//!
//! A table of arity `L` over `c` colours stores `f(v)` for every
//! `v ∈ {0,1}^L` at index `i`, where coordinate `j` of `v` is bit `j-1`
//! of `i` (coordinate 1 is the least significant bit). Colours are 1-based:
//! entries lie in `1..=c`.

mod check;

pub use check::{is_polymorphism, is_polymorphism_oracle, NaeViolation, Verdict};

use serde::{Deserialize, Serialize};

use crate::bits::{self, CoordMask};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Hard cap on table arity: tables are dense, `2^L` entries.
pub const MAX_ARITY: u32 = 24;

/// Hard cap on the colour count; colour sets are single-word masks.
pub const MAX_COLORS: u8 = 64;

/// An explicit value table for `f: {0,1}^L -> [c]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPolymorphism")]
pub struct Polymorphism {
    arity: u32,
    colors: u8,
    table: Vec<u8>,
}

#[derive(Deserialize)]
struct RawPolymorphism {
    arity: u32,
    colors: u8,
    table: Vec<u8>,
}

impl TryFrom<RawPolymorphism> for Polymorphism {
    type Error = Error;

    fn try_from(raw: RawPolymorphism) -> Result<Self> {
        Polymorphism::new(raw.arity, raw.colors, raw.table)
    }
}

impl Polymorphism {
    pub fn new(arity: u32, colors: u8, table: Vec<u8>) -> Result<Self> {
        if arity == 0 || arity > MAX_ARITY {
            return Err(Error::domain(format!(
                "arity must be in 1..={MAX_ARITY}, got {arity}"
            )));
        }
        if colors < 2 || colors > MAX_COLORS {
            return Err(Error::domain(format!(
                "colour count must be in 2..={MAX_COLORS}, got {colors}"
            )));
        }
        let expect = 1usize << arity;
        if table.len() != expect {
            return Err(Error::domain(format!(
                "table must have 2^{arity} = {expect} entries, got {}",
                table.len()
            )));
        }
        if let Some(pos) = table.iter().position(|&t| t == 0 || t > colors) {
            return Err(Error::domain(format!(
                "table entry {} at index {pos} outside [1, {colors}]",
                table[pos]
            )));
        }
        Ok(Polymorphism {
            arity,
            colors,
            table,
        })
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn colors(&self) -> u8 {
        self.colors
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    /// Table lookup by input index.
    #[inline]
    pub fn value(&self, index: u32) -> u8 {
        self.table[index as usize]
    }

    /// Number of inputs, `2^L`.
    pub fn input_count(&self) -> u32 {
        1u32 << self.arity
    }
}

/// A Boolean input row of fixed arity; the index encoding matches the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InputVector {
    arity: u32,
    bits: u32,
}

impl InputVector {
    pub fn new(arity: u32, bits: u32) -> Result<Self> {
        if arity == 0 || arity > MAX_ARITY {
            return Err(Error::domain(format!(
                "arity must be in 1..={MAX_ARITY}, got {arity}"
            )));
        }
        if bits >> arity != 0 {
            return Err(Error::domain(format!(
                "bits {bits:#b} exceed arity {arity}"
            )));
        }
        Ok(InputVector { arity, bits })
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    /// The table index this vector encodes.
    pub fn index(&self) -> u32 {
        self.bits
    }

    /// Coordinates set to 1, as a mask.
    pub fn support_mask(&self) -> CoordMask {
        self.bits
    }

    /// Coordinates set to 1, 1-based ascending.
    pub fn support(&self) -> Vec<usize> {
        bits::mask_to_coords(self.bits)
    }

    /// Hamming weight.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }
}

/// Evaluate `f` on an input row.
pub fn evaluate(f: &Polymorphism, v: &InputVector) -> Result<u8> {
    if v.arity() != f.arity() {
        return Err(Error::argument(format!(
            "input arity {} does not match table arity {}",
            v.arity(),
            f.arity()
        )));
    }
    Ok(f.value(v.index()))
}

/// A coordinate map `π: [L] -> [L']` inducing the minor
/// `g(x_1..x_{L'}) = f(x_{π(1)}, ..., x_{π(L)})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMinorMap")]
pub struct MinorMap {
    from_arity: u32,
    to_arity: u32,
    /// 1-based targets, `map[i]` = π(i+1).
    map: Vec<u32>,
}

#[derive(Deserialize)]
struct RawMinorMap {
    from_arity: u32,
    to_arity: u32,
    map: Vec<u32>,
}

impl TryFrom<RawMinorMap> for MinorMap {
    type Error = Error;

    fn try_from(raw: RawMinorMap) -> Result<Self> {
        MinorMap::new(raw.from_arity, raw.to_arity, raw.map)
    }
}

impl MinorMap {
    pub fn new(from_arity: u32, to_arity: u32, map: Vec<u32>) -> Result<Self> {
        if from_arity == 0 || from_arity > MAX_ARITY || to_arity == 0 || to_arity > MAX_ARITY {
            return Err(Error::domain(format!(
                "arities must be in 1..={MAX_ARITY}, got {from_arity} -> {to_arity}"
            )));
        }
        if map.len() != from_arity as usize {
            return Err(Error::domain(format!(
                "map must have {from_arity} entries, got {}",
                map.len()
            )));
        }
        if let Some(pos) = map.iter().position(|&t| t == 0 || t > to_arity) {
            return Err(Error::domain(format!(
                "map entry {} at position {} outside [1, {to_arity}]",
                map[pos],
                pos + 1
            )));
        }
        Ok(MinorMap {
            from_arity,
            to_arity,
            map,
        })
    }

    pub fn identity(arity: u32) -> Result<Self> {
        MinorMap::new(arity, arity, (1..=arity).collect())
    }

    pub fn from_arity(&self) -> u32 {
        self.from_arity
    }

    pub fn to_arity(&self) -> u32 {
        self.to_arity
    }

    /// 1-based targets.
    pub fn map(&self) -> &[u32] {
        &self.map
    }

    /// 0-based target of 0-based source coordinate.
    #[inline]
    pub fn target(&self, i: usize) -> usize {
        self.map[i] as usize - 1
    }

    /// Pointwise composition: `(other ∘ self)(i) = other(self(i))`.
    pub fn compose(&self, other: &MinorMap) -> Result<MinorMap> {
        if self.to_arity != other.from_arity {
            return Err(Error::argument(format!(
                "cannot compose [{}]->[{}] with [{}]->[{}]",
                self.from_arity, self.to_arity, other.from_arity, other.to_arity
            )));
        }
        let map = self.map.iter().map(|&t| other.map[t as usize - 1]).collect();
        MinorMap::new(self.from_arity, other.to_arity, map)
    }

    /// Image of a coordinate set under π.
    pub fn image_of(&self, set: CoordMask) -> CoordMask {
        let mut out = 0u32;
        for i in 0..self.from_arity as usize {
            if set >> i & 1 == 1 {
                out |= 1 << self.target(i);
            }
        }
        out
    }
}

/// The minor `g` of `f` under π.
pub fn minor(f: &Polymorphism, pi: &MinorMap) -> Result<Polymorphism> {
    if pi.from_arity() != f.arity() {
        return Err(Error::argument(format!(
            "map source arity {} does not match table arity {}",
            pi.from_arity(),
            f.arity()
        )));
    }
    let to = pi.to_arity();
    let mut table = Vec::with_capacity(1usize << to);
    for x in 0..1u32 << to {
        let mut y = 0u32;
        for i in 0..f.arity() as usize {
            y |= (x >> pi.target(i) & 1) << i;
        }
        table.push(f.value(y));
    }
    Polymorphism::new(to, f.colors(), table)
}

/// Outcome of an entrywise minor check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorCheck {
    /// First input index of `g` where the tables differ, if any.
    pub mismatch: Option<u32>,
    /// Number of table evaluations performed (exactly `2^{L'}` on success).
    pub evaluations: u64,
}

/// Check `f ->π g` entrywise, reporting the first mismatch and the work done.
pub fn check_minor(f: &Polymorphism, g: &Polymorphism, pi: &MinorMap) -> Result<MinorCheck> {
    if pi.from_arity() != f.arity() {
        return Err(Error::argument(format!(
            "map source arity {} does not match arity {} of f",
            pi.from_arity(),
            f.arity()
        )));
    }
    if pi.to_arity() != g.arity() {
        return Err(Error::argument(format!(
            "map target arity {} does not match arity {} of g",
            pi.to_arity(),
            g.arity()
        )));
    }
    if f.colors() != g.colors() {
        return Err(Error::argument(format!(
            "colour counts differ: {} vs {}",
            f.colors(),
            g.colors()
        )));
    }
    let mut evaluations = 0u64;
    for x in 0..1u32 << g.arity() {
        let mut y = 0u32;
        for i in 0..f.arity() as usize {
            y |= (x >> pi.target(i) & 1) << i;
        }
        evaluations += 1;
        if g.value(x) != f.value(y) {
            return Ok(MinorCheck {
                mismatch: Some(x),
                evaluations,
            });
        }
    }
    Ok(MinorCheck {
        mismatch: None,
        evaluations,
    })
}

/// True iff `g` equals `minor(f, π)` entrywise.
pub fn is_minor_of(f: &Polymorphism, g: &Polymorphism, pi: &MinorMap) -> Result<bool> {
    Ok(check_minor(f, g, pi)?.mismatch.is_none())
}

/// Families that preserve NAE by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// `f(x) = σ(x_i)` with σ injective.
    Dictator {
        arity: u32,
        colors: u8,
        /// 1-based coordinate.
        coord: usize,
        /// `sigma[b]` = colour of input bit `b`.
        sigma: [u8; 2],
    },
    /// `f(x) = ι(x|_J)` with ι injective; needs `2^|J| <= c`.
    InjectiveJunta {
        arity: u32,
        colors: u8,
        /// 1-based coordinates, strictly ascending.
        coords: Vec<usize>,
        /// `iota[p]` = colour of the pattern whose bit k is the value of
        /// `coords[k]`; length `2^|J|`.
        iota: Vec<u8>,
    },
    /// Post-compose an existing table with an injective colour map.
    Recolour {
        inner: Box<Polymorphism>,
        colors: u8,
        /// `map[b-1]` = new colour of old colour `b`; injective.
        map: Vec<u8>,
    },
}

/// Build a generator-family table.
///
/// Parameter validation (injectivity, `2^|J| <= c`) already forces the NAE
/// property; on top of that the table is re-checked with [`is_polymorphism`]
/// whenever the arity fits the checker guard.
pub fn make_generator(spec: &Generator, limits: &Limits) -> Result<Polymorphism> {
    let f = match spec {
        Generator::Dictator {
            arity,
            colors,
            coord,
            sigma,
        } => {
            if *coord == 0 || *coord > *arity as usize {
                return Err(Error::argument(format!(
                    "dictator coordinate {coord} outside [1, {arity}]"
                )));
            }
            if sigma[0] == sigma[1] {
                return Err(Error::argument("sigma must be injective".to_string()));
            }
            let bit = coord - 1;
            let table = (0..1u32 << arity)
                .map(|x| sigma[(x >> bit & 1) as usize])
                .collect();
            Polymorphism::new(*arity, *colors, table)?
        }
        Generator::InjectiveJunta {
            arity,
            colors,
            coords,
            iota,
        } => {
            if coords.is_empty() || !coords.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::argument(
                    "junta coordinates must be nonempty and strictly ascending".to_string(),
                ));
            }
            if *coords.last().unwrap() > *arity as usize {
                return Err(Error::argument(format!(
                    "junta coordinate {} outside [1, {arity}]",
                    coords.last().unwrap()
                )));
            }
            let j = coords.len();
            if j >= 7 || (1usize << j) > *colors as usize {
                return Err(Error::argument(format!(
                    "junta needs 2^|J| <= c, got |J| = {j}, c = {colors}"
                )));
            }
            if iota.len() != 1 << j {
                return Err(Error::argument(format!(
                    "iota must have 2^{j} entries, got {}",
                    iota.len()
                )));
            }
            let mut seen = 0u64;
            for &b in iota {
                if b == 0 || b > *colors {
                    return Err(Error::argument(format!("iota value {b} outside [1, {colors}]")));
                }
                if seen >> (b - 1) & 1 == 1 {
                    return Err(Error::argument("iota must be injective".to_string()));
                }
                seen |= 1 << (b - 1);
            }
            let table = (0..1u32 << arity)
                .map(|x| {
                    let mut p = 0usize;
                    for (k, &c) in coords.iter().enumerate() {
                        p |= ((x >> (c - 1) & 1) as usize) << k;
                    }
                    iota[p]
                })
                .collect();
            Polymorphism::new(*arity, *colors, table)?
        }
        Generator::Recolour { inner, colors, map } => {
            if map.len() != inner.colors() as usize {
                return Err(Error::argument(format!(
                    "colour map must have {} entries, got {}",
                    inner.colors(),
                    map.len()
                )));
            }
            let mut seen = 0u64;
            for &b in map {
                if b == 0 || b > *colors {
                    return Err(Error::argument(format!(
                        "colour map value {b} outside [1, {colors}]"
                    )));
                }
                if seen >> (b - 1) & 1 == 1 {
                    return Err(Error::argument("colour map must be injective".to_string()));
                }
                seen |= 1 << (b - 1);
            }
            let table = inner
                .table()
                .iter()
                .map(|&b| map[b as usize - 1])
                .collect();
            Polymorphism::new(inner.arity(), *colors, table)?
        }
    };
    if f.arity() <= limits.max_check_arity {
        match is_polymorphism(&f, limits)? {
            Verdict::Preserves => {}
            Verdict::Violation(v) => {
                return Err(Error::argument(format!(
                    "generator output failed the NAE check at triple ({}, {}, {})",
                    v.u, v.v, v.w
                )))
            }
        }
    }
    Ok(f)
}

/// Stream every NAE-preserving table of the given shape in table-lexicographic
/// order (entry 0 most significant).
pub fn enumerate_polymorphisms(
    arity: u32,
    colors: u8,
    limits: &Limits,
) -> Result<PolymorphismEnumeration> {
    if arity == 0 || arity > MAX_ARITY {
        return Err(Error::domain(format!("arity {arity} outside 1..={MAX_ARITY}")));
    }
    if colors < 2 || colors > MAX_COLORS {
        return Err(Error::domain(format!("colour count {colors} outside 2..={MAX_COLORS}")));
    }
    let entries = 1u32 << arity;
    let total = (colors as u128).checked_pow(entries);
    match total {
        Some(t) if t <= limits.enumeration_budget as u128 => {}
        _ => {
            return Err(Error::guard(
                "enumeration budget",
                total.unwrap_or(u128::MAX),
                limits.enumeration_budget as u128,
            ))
        }
    }
    if arity > limits.max_check_arity {
        return Err(Error::guard(
            "polymorphism check arity",
            arity as u128,
            limits.max_check_arity as u128,
        ));
    }
    Ok(PolymorphismEnumeration {
        arity,
        colors,
        limits: limits.clone(),
        next_table: Some(vec![1u8; entries as usize]),
    })
}

/// Iterator over accepted tables; see [`enumerate_polymorphisms`].
pub struct PolymorphismEnumeration {
    arity: u32,
    colors: u8,
    limits: Limits,
    next_table: Option<Vec<u8>>,
}

impl PolymorphismEnumeration {
    /// Advance the odometer (last entry fastest = table-lex order).
    fn bump(&mut self) {
        let table = self.next_table.as_mut().unwrap();
        for i in (0..table.len()).rev() {
            if table[i] < self.colors {
                table[i] += 1;
                return;
            }
            table[i] = 1;
        }
        self.next_table = None;
    }
}

impl Iterator for PolymorphismEnumeration {
    type Item = Polymorphism;

    fn next(&mut self) -> Option<Polymorphism> {
        while self.next_table.is_some() {
            let candidate =
                Polymorphism::new(self.arity, self.colors, self.next_table.clone().unwrap())
                    .expect("odometer tables are valid");
            self.bump();
            if let Ok(Verdict::Preserves) = is_polymorphism(&candidate, &self.limits) {
                return Some(candidate);
            }
        }
        None
    }
}
