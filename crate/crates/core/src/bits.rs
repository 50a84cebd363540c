//! Small helpers for `u128` vertex-set masks.

use crate::VertexId;

/// Mask with only bit `v` set.
#[inline(always)]
pub fn bit(v: VertexId) -> u128 {
    1u128 << v
}

/// Iterates the set bits of `mask` in ascending order.
#[inline]
pub fn iter(mask: u128) -> BitIter {
    BitIter(mask)
}

/// Collects the set bits of `mask` in ascending order.
pub fn to_vec(mask: u128) -> Vec<VertexId> {
    iter(mask).collect()
}

/// Lowest set bit, if any.
#[inline(always)]
pub fn first(mask: u128) -> Option<VertexId> {
    if mask == 0 {
        None
    } else {
        Some(mask.trailing_zeros() as VertexId)
    }
}

/// Number of set bits as `usize`.
#[inline(always)]
pub fn count(mask: u128) -> usize {
    mask.count_ones() as usize
}

/// Iterator over set bits of a `u128`.
pub struct BitIter(u128);

impl Iterator for BitIter {
    type Item = VertexId;

    #[inline]
    fn next(&mut self) -> Option<VertexId> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as VertexId;
        self.0 &= self.0 - 1;
        Some(v)
    }
}
