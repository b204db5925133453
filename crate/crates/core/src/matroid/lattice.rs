//! The lattice of flats, its Möbius function, and Whitney numbers.

use std::collections::BTreeSet;

use super::Matroid;
use crate::subsets::Subset;

/// All flats of a matroid stratified by rank, with the Möbius values
/// `μ(∅, X)` computed once at construction.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    by_rank: Vec<Vec<Subset>>,
    mobius: Vec<Vec<i64>>,
}

impl FlatLattice {
    pub fn new(m: &Matroid) -> Self {
        let r = m.rank();
        let mut by_rank: Vec<Vec<Subset>> = vec![Vec::new(); r + 1];
        // A simple matroid has no loops, so the bottom flat is empty.
        by_rank[0].push(0);
        for k in 0..r {
            let mut next: BTreeSet<Subset> = BTreeSet::new();
            for &f in &by_rank[k] {
                for e in 0..m.n() {
                    let bit = 1 << e;
                    if f & bit == 0 {
                        next.insert(m.closure(f | bit));
                    }
                }
            }
            by_rank[k + 1] = next.into_iter().collect();
        }
        // μ(∅, X) = -Σ μ(∅, Y) over proper subflats Y of X, from the
        // bottom up.
        let mut mobius: Vec<Vec<i64>> = vec![Vec::new(); r + 1];
        mobius[0].push(1);
        for k in 1..=r {
            for &x in &by_rank[k] {
                let mut acc: i64 = 0;
                for j in 0..k {
                    for (i, &y) in by_rank[j].iter().enumerate() {
                        if y & x == y {
                            acc += mobius[j][i];
                        }
                    }
                }
                // Geometric lattices have strictly sign-alternating Möbius
                // values.
                debug_assert!(if k % 2 == 0 { -acc > 0 } else { -acc < 0 });
                mobius[k].push(-acc);
            }
        }
        FlatLattice { by_rank, mobius }
    }

    pub fn rank(&self) -> usize {
        self.by_rank.len() - 1
    }

    /// Flats of the given rank in increasing bitmask order.
    pub fn flats(&self, rank: usize) -> &[Subset] {
        &self.by_rank[rank]
    }

    pub fn all_flats(&self) -> impl Iterator<Item = (usize, Subset)> + '_ {
        self.by_rank
            .iter()
            .enumerate()
            .flat_map(|(k, fs)| fs.iter().map(move |&f| (k, f)))
    }

    pub fn mobius(&self, rank: usize, index: usize) -> i64 {
        self.mobius[rank][index]
    }

    /// Unsigned Whitney numbers `w_p = Σ |μ(∅, X)|` over rank-p flats;
    /// these are the graded dimensions of the Orlik-Solomon algebra.
    pub fn whitney_unsigned(&self) -> Vec<u64> {
        self.mobius
            .iter()
            .map(|level| level.iter().map(|&v| v.unsigned_abs()).sum())
            .collect()
    }

    /// Signed Whitney numbers `(-1)^p w_p`, the coefficients of the
    /// characteristic polynomial from the top degree down.
    pub fn whitney_signed(&self) -> Vec<i64> {
        self.mobius.iter().map(|level| level.iter().sum()).collect()
    }

    /// Number of flats of each rank.
    pub fn flat_counts(&self) -> Vec<usize> {
        self.by_rank.iter().map(|fs| fs.len()).collect()
    }

    /// Sorted multiset of flat sizes per rank, a cheap isomorphism
    /// invariant.
    pub fn flat_size_profile(&self) -> Vec<Vec<u32>> {
        self.by_rank
            .iter()
            .map(|fs| {
                let mut sizes: Vec<u32> = fs.iter().map(|f| f.count_ones()).collect();
                sizes.sort_unstable();
                sizes
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::mask_from_elements;

    fn m(elems: &[usize]) -> Subset {
        mask_from_elements(elems, 20).unwrap()
    }

    #[test]
    fn u23_lattice() {
        let g = Matroid::from_circuits(3, vec![m(&[0, 1, 2])], None).unwrap();
        let l = FlatLattice::new(&g);
        assert_eq!(l.flat_counts(), vec![1, 3, 1]);
        // μ values: 1 at bottom, -1 at atoms, 2 at top.
        assert_eq!(l.whitney_unsigned(), vec![1, 3, 2]);
        assert_eq!(l.whitney_signed(), vec![1, -3, 2]);
    }

    #[test]
    fn k4_lattice() {
        let circuits = vec![
            m(&[0, 1, 3]),
            m(&[0, 2, 4]),
            m(&[1, 2, 5]),
            m(&[3, 4, 5]),
            m(&[0, 2, 3, 5]),
            m(&[0, 1, 4, 5]),
            m(&[1, 2, 3, 4]),
        ];
        let g = Matroid::from_circuits(6, circuits, Some(3)).unwrap();
        let l = FlatLattice::new(&g);
        // 4 triangle lines + 3 two-point lines.
        assert_eq!(l.flat_counts(), vec![1, 6, 7, 1]);
        assert_eq!(l.whitney_unsigned(), vec![1, 6, 11, 6]);
    }

    #[test]
    fn boolean_lattice_dimensions() {
        let g = Matroid::from_circuits(4, vec![], None).unwrap();
        let l = FlatLattice::new(&g);
        assert_eq!(l.flat_counts(), vec![1, 4, 6, 4, 1]);
        assert_eq!(l.whitney_unsigned(), vec![1, 4, 6, 4, 1]);
        assert_eq!(l.whitney_signed(), vec![1, -4, 6, -4, 1]);
    }

    #[test]
    fn u34_lattice() {
        // U_{3,4}: circuits are all 4-subsets.
        let g = Matroid::from_circuits(4, vec![m(&[0, 1, 2, 3])], Some(3)).unwrap();
        let l = FlatLattice::new(&g);
        assert_eq!(l.flat_counts(), vec![1, 4, 6, 1]);
        // μ at top: -1 + 4 - 6... = Σ over chains: 1, -4, 6, -3.
        assert_eq!(l.whitney_unsigned(), vec![1, 4, 6, 3]);
    }
}
