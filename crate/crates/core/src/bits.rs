//! Mask plumbing shared by the polymorphism and avoidance modules.
//!
//! Coordinates of `[L]` live in the low `L` bits of a `u32` (coordinate 1 is
//! bit 0), colours of `[c]` in the low `c` bits of a `u64` (colour 1 is
//! bit 0). External formats are 1-based; these helpers do the conversion.

/// Set of input coordinates as a bitmask (coordinate j ↔ bit j-1).
pub type CoordMask = u32;

/// Set of colours as a bitmask (colour b ↔ bit b-1).
pub type ColourMask = u64;

/// All of `[L]` as a mask.
pub fn full_coords(arity: u32) -> CoordMask {
    debug_assert!(arity <= 31);
    (1u32 << arity) - 1
}

/// All of `[c]` as a mask.
pub fn full_colours(colors: u8) -> ColourMask {
    debug_assert!(colors as u32 <= 64);
    if colors == 64 {
        u64::MAX
    } else {
        (1u64 << colors) - 1
    }
}

/// 1-based sorted coordinate list -> mask. Rejects entries outside `[arity]`
/// and duplicates by returning `None`.
pub fn coords_to_mask(coords: &[usize], arity: u32) -> Option<CoordMask> {
    let mut mask = 0u32;
    for &j in coords {
        if j == 0 || j > arity as usize {
            return None;
        }
        let bit = 1u32 << (j - 1);
        if mask & bit != 0 {
            return None;
        }
        mask |= bit;
    }
    Some(mask)
}

/// Mask -> sorted 1-based coordinate list.
pub fn mask_to_coords(mask: CoordMask) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// 1-based colour list -> mask, rejecting entries outside `[colors]`.
pub fn colours_to_mask(colours: &[u8], colors: u8) -> Option<ColourMask> {
    let mut mask = 0u64;
    for &b in colours {
        if b == 0 || b > colors {
            return None;
        }
        mask |= 1u64 << (b - 1);
    }
    Some(mask)
}

/// Mask -> sorted 1-based colour list.
pub fn mask_to_colours(mask: ColourMask) -> Vec<u8> {
    (0..64u8).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}
