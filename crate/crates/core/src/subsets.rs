//! Subsets of a ground set `0..n` as machine-word bitmasks, with
//! colexicographic ranking of fixed-size subsets.
//!
//! The colex rank of `S = {s_1 < s_2 < ... < s_p}` is
//! `sum_i C(s_i, i)`; it enumerates the `p`-subsets of `0..n` in
//! increasing order of their largest differing element. All exterior
//! coordinate vectors in this crate are indexed this way.

use crate::error::{Error, Result};

/// Hard ceiling on the ground-set size; keeps every binomial table and
/// dense coordinate vector at desk scale.
pub const MAX_GROUND_SET: usize = 20;

/// A subset of `0..n` packed into the low bits of a `u32`.
pub type Subset = u32;

/// `C(n, k)` for `n <= 2 * MAX_GROUND_SET`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Validates `0 <= n <= MAX_GROUND_SET`.
pub fn check_ground_set(n: usize) -> Result<()> {
    if n > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge {
            n,
            max: MAX_GROUND_SET,
        });
    }
    Ok(())
}

/// Builds the bitmask of a list of elements, validating the range.
pub fn mask_from_elements(elements: &[usize], n: usize) -> Result<Subset> {
    let mut mask: Subset = 0;
    for &e in elements {
        if e >= n {
            return Err(Error::ElementOutOfRange { element: e, n });
        }
        mask |= 1 << e;
    }
    Ok(mask)
}

/// The elements of a mask in increasing order.
pub fn elements(mask: Subset) -> Vec<usize> {
    BitIter(mask).collect()
}

/// Iterator over the set bits of a mask, low to high.
#[derive(Clone, Copy, Debug)]
pub struct BitIter(pub Subset);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// Colex rank of a `p`-subset among all `p`-subsets.
pub fn colex_rank(mask: Subset) -> usize {
    let mut rank = 0;
    for (i, e) in BitIter(mask).enumerate() {
        rank += binomial(e, i + 1);
    }
    rank
}

/// Inverse of [`colex_rank`] for subsets of size `p`.
pub fn colex_unrank(mut rank: usize, p: usize) -> Subset {
    let mut mask: Subset = 0;
    for i in (1..=p).rev() {
        // Largest e with C(e, i) <= rank.
        let mut e = i - 1;
        while binomial(e + 1, i) <= rank {
            e += 1;
        }
        rank -= binomial(e, i);
        mask |= 1 << e;
    }
    mask
}

/// All subsets of `0..n` of size `p`, in colex order.
pub fn subsets_of_size(n: usize, p: usize) -> Vec<Subset> {
    let count = binomial(n, p);
    let mut out = Vec::with_capacity(count);
    if p == 0 {
        if count > 0 {
            out.push(0);
        }
        return out;
    }
    // Gosper's successor; the loop is count-bounded so the value computed
    // after the last valid mask is never used.
    let mut mask: Subset = (1 << p) - 1;
    for _ in 0..count {
        out.push(mask);
        let low = mask & mask.wrapping_neg();
        let carry = mask + low;
        mask = (((mask ^ carry) >> 2) / low) | carry;
    }
    out
}

/// Sign of merging two disjoint monomial index sets: parity of the number
/// of pairs `(s, t)` with `s` in `left`, `t` in `right`, `s > t`.
/// Returns `1` or `-1`.
pub fn shuffle_sign(left: Subset, right: Subset) -> i32 {
    debug_assert_eq!(left & right, 0);
    let mut swaps = 0u32;
    for t in BitIter(right) {
        swaps += (left >> (t + 1)).count_ones();
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Formats a mask as a sorted element list, e.g. `{0,2,5}`.
pub fn format_mask(mask: Subset) -> String {
    let parts: Vec<String> = BitIter(mask).map(|e| e.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(20, 10), 184756);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn colex_rank_roundtrip() {
        for n in 0..=10usize {
            for p in 0..=n {
                for (rank, &mask) in subsets_of_size(n, p).iter().enumerate() {
                    assert_eq!(colex_rank(mask), rank, "mask {:b}", mask);
                    assert_eq!(colex_unrank(rank, p), mask);
                }
            }
        }
    }

    #[test]
    fn colex_order_is_increasing_in_largest_difference() {
        // {0,1} < {0,2} < {1,2} for pairs of 0..3.
        let pairs = subsets_of_size(3, 2);
        assert_eq!(pairs, vec![0b011, 0b101, 0b110]);
    }

    #[test]
    fn shuffle_sign_counts_inversions() {
        // e1 ^ e0 = -(e0 ^ e1): left {1}, right {0} has one inversion.
        assert_eq!(shuffle_sign(0b10, 0b01), -1);
        assert_eq!(shuffle_sign(0b01, 0b10), 1);
        // left {2}, right {0,1}: two inversions.
        assert_eq!(shuffle_sign(0b100, 0b011), 1);
    }

    #[test]
    fn subset_iteration_counts() {
        assert_eq!(subsets_of_size(6, 3).len(), 20);
        assert_eq!(subsets_of_size(4, 0), vec![0]);
        assert_eq!(subsets_of_size(4, 5).len(), 0);
    }

    #[test]
    fn mask_range_check() {
        assert!(mask_from_elements(&[0, 3], 4).is_ok());
        assert!(matches!(
            mask_from_elements(&[4], 4),
            Err(Error::ElementOutOfRange { element: 4, n: 4 })
        ));
    }
}
