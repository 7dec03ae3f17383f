//! NAE-preservation checking, twice.
//!
//! [`is_polymorphism`] enumerates output-equal pairs `(u, v)` and asks a
//! precomputed colour-presence table whether the subcube of compatible third
//! rows contains the shared colour. [`is_polymorphism_oracle`] is the naive
//! triple loop kept as an independent cross-check. Both return the same
//! verdict and, on rejection, the same lexicographically least violating
//! triple `(u, v, w)` in the table's index order.

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::Polymorphism;

/// Three rows that are NAE column-wise yet share one output colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaeViolation {
    pub u: u32,
    pub v: u32,
    pub w: u32,
    /// The shared output colour.
    pub colour: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Every column-wise NAE triple of rows has a non-constant output triple.
    Preserves,
    Violation(NaeViolation),
}

impl Verdict {
    pub fn preserves(&self) -> bool {
        matches!(self, Verdict::Preserves)
    }

    pub fn violation(&self) -> Option<NaeViolation> {
        match self {
            Verdict::Preserves => None,
            Verdict::Violation(v) => Some(*v),
        }
    }
}

// The presence table cost is 3^L words; past L = 16 that is gigabytes, so the
// checker refuses even if the configured guard is looser.
const HARD_CHECK_ARITY: u32 = 16;

/// Subcube-presence checker.
///
/// For rows `u, v` with `f(u) = f(v)`, a third row `w` completes a column-wise
/// NAE triple iff `w_i = 1 - u_i` wherever `u_i = v_i` (free elsewhere), i.e.
/// the compatible `w` form a subcube. A DP table over `{0,1,*}^L` patterns
/// answers "which colours occur in this subcube" in one lookup, so the scan
/// is one pass over all `4^L` ordered pairs after an `O(3^L)` build.
pub fn is_polymorphism(f: &Polymorphism, limits: &Limits) -> Result<Verdict> {
    let arity = f.arity();
    let cap = limits.max_check_arity.min(HARD_CHECK_ARITY);
    if arity > cap {
        return Err(Error::guard(
            "polymorphism check arity",
            arity as u128,
            cap as u128,
        ));
    }
    let l = arity as usize;
    let pow3: Vec<usize> = (0..=l).scan(1usize, |p, _| {
        let v = *p;
        *p *= 3;
        Some(v)
    })
    .collect();
    let npat = pow3[l];
    debug_assert_eq!(npat, 3usize.pow(arity));

    // presence[p] = mask of colours attained on the subcube described by
    // pattern p (ternary digits: 0, 1 fixed; 2 = free).
    let mut presence = vec![0u64; npat];
    for w in 0..1u32 << arity {
        let mut pat = 0usize;
        for i in 0..l {
            pat += ((w >> i & 1) as usize) * pow3[i];
        }
        presence[pat] = 1u64 << (f.value(w) - 1);
    }
    for i in 0..l {
        let step = pow3[i];
        for pat in 0..npat {
            if pat / step % 3 == 2 {
                presence[pat] = presence[pat - 2 * step] | presence[pat - step];
            }
        }
    }

    // Half-word tables mapping (u, v) chunks to their pattern contribution:
    // agreeing bits force the complement, differing bits become stars.
    let lo = l / 2;
    let hi = l - lo;
    let chunk_pattern = |bits: usize, a: u32, b: u32| -> usize {
        let mut pat = 0usize;
        for i in 0..bits {
            let (x, y) = (a >> i & 1, b >> i & 1);
            let digit = if x == y { (1 - x) as usize } else { 2 };
            pat += digit * pow3[i];
        }
        pat
    };
    let lo_table: Vec<usize> = (0..1usize << (2 * lo))
        .map(|k| chunk_pattern(lo, (k & ((1 << lo) - 1)) as u32, (k >> lo) as u32))
        .collect();
    let hi_table: Vec<usize> = (0..1usize << (2 * hi))
        .map(|k| chunk_pattern(hi, (k & ((1 << hi) - 1)) as u32, (k >> hi) as u32))
        .collect();
    let lo_mask = (1u32 << lo) - 1;

    let n = 1u32 << arity;
    for u in 0..n {
        let cu = f.value(u);
        let cu_bit = 1u64 << (cu - 1);
        for v in 0..n {
            if f.value(v) != cu {
                continue;
            }
            let pat = lo_table[((u & lo_mask) | (v & lo_mask) << lo) as usize]
                + pow3[lo] * hi_table[((u >> lo) | (v >> lo) << hi) as usize];
            if presence[pat] & cu_bit != 0 {
                let w = least_point(pat, cu_bit, &presence, &pow3, l);
                return Ok(Verdict::Violation(NaeViolation { u, v, w, colour: cu }));
            }
        }
    }
    Ok(Verdict::Preserves)
}

/// Resolve the free digits of `pat` to the least input index whose subcube
/// still contains the colour. Highest coordinate first, preferring 0.
fn least_point(mut pat: usize, colour_bit: u64, presence: &[u64], pow3: &[usize], l: usize) -> u32 {
    for i in (0..l).rev() {
        if pat / pow3[i] % 3 == 2 {
            let zero = pat - 2 * pow3[i];
            pat = if presence[zero] & colour_bit != 0 {
                zero
            } else {
                zero + pow3[i]
            };
        }
    }
    let mut w = 0u32;
    for i in 0..l {
        if pat / pow3[i] % 3 == 1 {
            w |= 1 << i;
        }
    }
    w
}

/// Naive cross-check: scan all `(u, v, w)` triples in index order.
pub fn is_polymorphism_oracle(f: &Polymorphism, limits: &Limits) -> Result<Verdict> {
    let arity = f.arity();
    if arity > limits.oracle_max_arity {
        return Err(Error::guard(
            "oracle check arity",
            arity as u128,
            limits.oracle_max_arity as u128,
        ));
    }
    let n = 1u32 << arity;
    let mask = n - 1;
    for u in 0..n {
        for v in 0..n {
            if f.value(v) != f.value(u) {
                continue;
            }
            for w in 0..n {
                // constant columns are exactly the bits agreeing across all rows
                if !(u ^ v) & !(v ^ w) & mask != 0 {
                    continue;
                }
                if f.value(w) == f.value(u) {
                    return Ok(Verdict::Violation(NaeViolation {
                        u,
                        v,
                        w,
                        colour: f.value(u),
                    }));
                }
            }
        }
    }
    Ok(Verdict::Preserves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{make_generator, Generator};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn dictator_preserves() {
        let f = make_generator(
            &Generator::Dictator {
                arity: 5,
                colors: 2,
                coord: 1,
                sigma: [2, 1],
            },
            &lim(),
        )
        .unwrap();
        assert!(is_polymorphism(&f, &lim()).unwrap().preserves());
        assert!(is_polymorphism_oracle(&f, &lim()).unwrap().preserves());
    }

    #[test]
    fn constant_function_has_least_witness() {
        let f = Polymorphism::new(3, 2, vec![1; 8]).unwrap();
        let expect = NaeViolation {
            u: 0,
            v: 0,
            w: 7,
            colour: 1,
        };
        assert_eq!(is_polymorphism(&f, &lim()).unwrap().violation(), Some(expect));
        assert_eq!(
            is_polymorphism_oracle(&f, &lim()).unwrap().violation(),
            Some(expect)
        );
    }

    #[test]
    fn majority_is_rejected_at_the_unit_vectors() {
        // colour = majority bit + 1
        let table: Vec<u8> = (0..8u32)
            .map(|x| if x.count_ones() >= 2 { 2 } else { 1 })
            .collect();
        let f = Polymorphism::new(3, 2, table).unwrap();
        // The least violating triple is the three unit vectors: every column
        // holds exactly one 1, and all outputs are the minority colour.
        let expect = NaeViolation {
            u: 0b001,
            v: 0b010,
            w: 0b100,
            colour: 1,
        };
        assert_eq!(is_polymorphism(&f, &lim()).unwrap().violation(), Some(expect));
        assert_eq!(
            is_polymorphism_oracle(&f, &lim()).unwrap().violation(),
            Some(expect)
        );
        // The triple of weight-2 rows named alongside it is also violating.
        let (u, v, w) = (0b011u32, 0b101, 0b110);
        assert!(!(u ^ v) & !(v ^ w) & 0b111 == 0);
        assert_eq!(f.value(u), f.value(v));
        assert_eq!(f.value(v), f.value(w));
    }

    #[test]
    fn guard_trips_above_configured_arity() {
        let f = Polymorphism::new(3, 2, vec![1, 2, 1, 2, 1, 2, 1, 2]).unwrap();
        let mut tight = lim();
        tight.max_check_arity = 2;
        assert!(matches!(
            is_polymorphism(&f, &tight),
            Err(Error::Guard { .. })
        ));
        tight.oracle_max_arity = 2;
        assert!(matches!(
            is_polymorphism_oracle(&f, &tight),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn checkers_agree_on_all_tables_l2_c2() {
        for bits in 0..16u32 {
            let table: Vec<u8> = (0..4).map(|i| 1 + (bits >> i & 1) as u8).collect();
            let f = Polymorphism::new(2, 2, table).unwrap();
            assert_eq!(
                is_polymorphism(&f, &lim()).unwrap(),
                is_polymorphism_oracle(&f, &lim()).unwrap()
            );
        }
    }
}
