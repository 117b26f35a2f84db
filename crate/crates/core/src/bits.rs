//! Small helpers for `u64` vertex masks. Searches in this crate work on hosts
//! with at most 64 vertices so one word per vertex set suffices.

#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
#[derive(Clone, Copy)]
pub struct Ones(pub u64);

impl Iterator for Ones {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

#[inline]
pub fn ones(mask: u64) -> Ones {
    Ones(mask)
}

/// Removes bit position `v` and shifts every higher bit down by one.
#[inline]
pub fn squeeze(mask: u64, v: usize) -> u64 {
    let below = mask & low_mask(v);
    let above = if v >= 63 { 0 } else { (mask >> (v + 1)) << v };
    below | above
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn squeeze_drops_one_position() {
        assert_eq!(squeeze(0b1011, 1), 0b101);
        assert_eq!(squeeze(0b1011, 0), 0b101);
        assert_eq!(squeeze(0b1011, 3), 0b011);
        assert_eq!(squeeze(u64::MAX, 63), u64::MAX >> 1);
    }

    #[test]
    fn ones_in_order() {
        let v: Vec<usize> = ones(0b1010_0101).collect();
        assert_eq!(v, [0, 2, 5, 7]);
    }
}
