//! nbc and nbb monomial enumeration with respect to a chosen element order.

use crate::error::{Error, Result};
use crate::matroid::{line_closure, Matroid};
use crate::subsets::Subset;

/// Subsets of the ground set grouped by cardinality, each bucket sorted.
pub struct GradedSets {
    n: usize,
    by_degree: Vec<Vec<Subset>>,
}

impl GradedSets {
    pub fn ground_set_size(&self) -> usize {
        self.n
    }

    pub fn sets(&self, p: usize) -> &[Subset] {
        &self.by_degree[p]
    }

    pub fn by_degree(&self) -> &[Vec<Subset>] {
        &self.by_degree
    }

    /// Cardinality of each bucket, length n+1.
    pub fn counts(&self) -> Vec<u64> {
        self.by_degree.iter().map(|b| b.len() as u64).collect()
    }

    pub fn total(&self) -> u64 {
        self.by_degree.iter().map(|b| b.len() as u64).sum()
    }
}

/// `order[j]` is the j-th smallest element; returns position-in-order per
/// element after checking that `order` is a permutation of 0..n.
fn order_positions(n: usize, order: &[usize]) -> Result<Vec<usize>> {
    if order.len() != n {
        return Err(Error::Parse(format!(
            "order must list all {n} elements, got {}",
            order.len()
        )));
    }
    let mut pos = vec![usize::MAX; n];
    for (j, &e) in order.iter().enumerate() {
        if e >= n {
            return Err(Error::ElementOutOfRange { element: e, n });
        }
        if pos[e] != usize::MAX {
            return Err(Error::Parse(format!("order repeats element {e}")));
        }
        pos[e] = j;
    }
    Ok(pos)
}

fn least_in(mask: Subset, pos: &[usize]) -> usize {
    let mut best = usize::MAX;
    let mut best_pos = usize::MAX;
    let mut m = mask;
    while m != 0 {
        let e = m.trailing_zeros() as usize;
        if pos[e] < best_pos {
            best_pos = pos[e];
            best = e;
        }
        m &= m - 1;
    }
    best
}

/// Subsets containing no broken circuit (circuit minus its order-least
/// element).  These index a basis of the OS algebra for every order.
pub fn nbc_sets(m: &Matroid, order: &[usize]) -> Result<GradedSets> {
    let n = m.n();
    let pos = order_positions(n, order)?;
    let broken: Vec<Subset> = m
        .circuits()
        .iter()
        .map(|&c| c & !(1 << least_in(c, &pos)))
        .collect();
    let mut by_degree = vec![Vec::new(); n + 1];
    for s in 0..(1u32 << n) {
        if broken.iter().all(|&b| s & b != b) {
            by_degree[s.count_ones() as usize].push(s);
        }
    }
    Ok(GradedSets { n, by_degree })
}

/// Subsets S = {i_1 < … < i_p} (in the given order) such that every suffix
/// {i_j, …, i_p} has its order-least element equal to the order-least element
/// of its line-closure.  The family is closed under taking suffixes, so a
/// depth-first search that prepends order-smaller elements visits exactly the
/// valid sets, with one line-closure test per extension.
pub fn nbb_sets(m: &Matroid, order: &[usize]) -> Result<GradedSets> {
    let n = m.n();
    let pos = order_positions(n, order)?;
    let mut by_degree = vec![Vec::new(); n + 1];
    by_degree[0].push(0);

    fn extend(
        m: &Matroid,
        order: &[usize],
        pos: &[usize],
        s: Subset,
        min_pos: usize,
        by_degree: &mut [Vec<Subset>],
    ) {
        for q in 0..min_pos {
            let a = order[q];
            let t = s | (1 << a);
            let lc = line_closure(m, t).expect("subset of the ground set");
            if least_in(lc, pos) == a {
                by_degree[t.count_ones() as usize].push(t);
                extend(m, order, pos, t, q, by_degree);
            }
        }
    }

    for q in 0..n {
        let a = order[q];
        // singletons are always valid: lc({a}) = {a} in a simple matroid
        by_degree[1].push(1 << a);
        extend(m, order, &pos, 1 << a, q, &mut by_degree);
    }

    for bucket in by_degree.iter_mut() {
        bucket.sort_unstable();
    }
    Ok(GradedSets { n, by_degree })
}

/// The identity order 0 < 1 < … < n−1.
pub fn natural_order(n: usize) -> Vec<usize> {
    (0..n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{FlatLattice, Matroid};

    fn u23() -> Matroid {
        Matroid::from_circuits(3, vec![0b111], None).unwrap()
    }

    fn u34() -> Matroid {
        Matroid::from_circuits(4, vec![0b1111], None).unwrap()
    }

    fn k4() -> Matroid {
        Matroid::from_circuits(
            6,
            vec![
                0b001011, 0b010101, 0b100110, 0b111000, 0b101101, 0b110011, 0b011110,
            ],
            None,
        )
        .unwrap()
    }

    #[test]
    fn nbc_counts_match_whitney_in_every_order() {
        for m in [u23(), u34(), k4()] {
            let mut whitney = FlatLattice::new(&m).whitney_unsigned();
            whitney.resize(m.n() + 1, 0);
            let orders: Vec<Vec<usize>> = vec![
                natural_order(m.n()),
                (0..m.n()).rev().collect(),
                (0..m.n()).map(|i| (i + 1) % m.n()).collect(),
            ];
            for order in orders {
                assert_eq!(nbc_sets(&m, &order).unwrap().counts(), whitney);
            }
        }
    }

    #[test]
    fn nbc_sets_of_u23_natural_order() {
        let sets = nbc_sets(&u23(), &natural_order(3)).unwrap();
        assert_eq!(sets.sets(2), &[0b011, 0b101]);
        assert_eq!(sets.counts(), vec![1, 3, 2, 0]);
    }

    #[test]
    fn nbb_u23() {
        let sets = nbb_sets(&u23(), &natural_order(3)).unwrap();
        // pairs must contain 0, the least point of the only line
        assert_eq!(sets.sets(2), &[0b011, 0b101]);
        assert_eq!(sets.counts(), vec![1, 3, 2, 0]);
    }

    #[test]
    fn nbb_u34_sees_no_lines_and_keeps_everything() {
        // all lines of U_{3,4} are 2-point, so lc is the identity and every
        // subset qualifies
        let sets = nbb_sets(&u34(), &natural_order(4)).unwrap();
        assert_eq!(sets.counts(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn nbb_respects_the_order() {
        // reversed order on U_{2,3}: pairs must now contain point 2
        let sets = nbb_sets(&u23(), &[2, 1, 0]).unwrap();
        assert_eq!(sets.sets(2), &[0b101, 0b110]);
        assert_eq!(sets.counts(), vec![1, 3, 2, 0]);
    }

    #[test]
    fn order_validation() {
        assert!(nbc_sets(&u23(), &[0, 1]).is_err());
        assert!(nbc_sets(&u23(), &[0, 1, 1]).is_err());
        assert!(nbc_sets(&u23(), &[0, 1, 3]).is_err());
    }

    #[test]
    fn nbb_counts_bounded_by_nbc_counts_on_k4() {
        // K4 is line-closed and quadratic; nbb counts in the natural order
        // coincide with the Whitney numbers there
        let m = k4();
        let nbb = nbb_sets(&m, &natural_order(6)).unwrap().counts();
        let mut whitney = FlatLattice::new(&m).whitney_unsigned();
        whitney.resize(7, 0);
        assert_eq!(nbb, whitney);
    }
}
