//! Small helpers for single-word vertex sets.

/// A set of vertices `0..64`, bit `i` set iff vertex `i` is a member.
pub type VertexSet = u64;

#[inline(always)]
pub const fn bit(v: usize) -> VertexSet {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub const fn low_mask(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the members of a vertex set in increasing order.
#[derive(Clone, Copy, Debug)]
pub struct Members(VertexSet);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

#[inline]
pub fn members(set: VertexSet) -> Members {
    Members(set)
}

/// Builds a vertex set from a list of vertices.
pub fn set_of<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
    vs.into_iter().fold(0, |acc, v| acc | bit(v))
}
