//! Line closure: the closure operator generated by rank-2 flats, and
//! the line-closed property.

use std::collections::BTreeSet;

use super::Matroid;
use crate::error::{Error, Result};
use crate::subsets::{elements, Subset};

/// Smallest superset of `s` containing the full line through every one
/// of its pairs.
pub fn line_closure(m: &Matroid, s: Subset) -> Result<Subset> {
    if s & !m.ground_set() != 0 {
        let bad = elements(s & !m.ground_set())[0];
        return Err(Error::ElementOutOfRange {
            element: bad,
            n: m.n(),
        });
    }
    let mut cur = s;
    loop {
        let mut next = cur;
        let elems = elements(cur);
        for (i, &a) in elems.iter().enumerate() {
            for &b in elems.iter().skip(i + 1) {
                next |= m.closure((1 << a) | (1 << b));
            }
        }
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

/// All fixed points of the line-closure operator, enumerated by
/// one-element extensions from the bottom of the closure system.
pub fn lc_closed_sets(m: &Matroid) -> Vec<Subset> {
    let mut seen: BTreeSet<Subset> = BTreeSet::new();
    let mut queue: Vec<Subset> = vec![0];
    seen.insert(0);
    while let Some(t) = queue.pop() {
        for e in 0..m.n() {
            let bit = 1 << e;
            if t & bit != 0 {
                continue;
            }
            let ext = line_closure(m, t | bit).expect("elements are in range");
            if seen.insert(ext) {
                queue.push(ext);
            }
        }
    }
    seen.into_iter().collect()
}

/// A matroid is line-closed when every line-closed set is closed.
pub fn is_line_closed(m: &Matroid) -> bool {
    lc_closed_sets(m).iter().all(|&s| m.is_flat(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::mask_from_elements;

    fn m(elems: &[usize]) -> Subset {
        mask_from_elements(elems, 20).unwrap()
    }

    #[test]
    fn pairs_close_to_their_line() {
        let u23 = Matroid::from_circuits(3, vec![m(&[0, 1, 2])], None).unwrap();
        assert_eq!(line_closure(&u23, m(&[0, 1])).unwrap(), m(&[0, 1, 2]));
        assert_eq!(line_closure(&u23, m(&[2])).unwrap(), m(&[2]));
    }

    #[test]
    fn u34_is_not_line_closed() {
        let u34 = Matroid::from_circuits(4, vec![m(&[0, 1, 2, 3])], None).unwrap();
        // All lines are pairs, so every set is lc-closed...
        assert_eq!(line_closure(&u34, m(&[0, 1, 2])).unwrap(), m(&[0, 1, 2]));
        assert_eq!(lc_closed_sets(&u34).len(), 16);
        // ...but 3-sets span, so they are not flats.
        assert!(!is_line_closed(&u34));
    }

    #[test]
    fn rank_two_matroids_are_line_closed() {
        let u24 = Matroid::from_circuits(
            4,
            vec![m(&[0, 1, 2]), m(&[0, 1, 3]), m(&[0, 2, 3]), m(&[1, 2, 3])],
            None,
        )
        .unwrap();
        assert!(is_line_closed(&u24));
    }

    #[test]
    fn boolean_matroids_are_line_closed() {
        let b3 = Matroid::from_circuits(3, vec![], None).unwrap();
        assert!(is_line_closed(&b3));
    }

    #[test]
    fn chained_lines_close_transitively() {
        // Lines {0,1,2} and {2,3,4}: starting from {0,1,3} pulls in 2,
        // then the second line closes over 4... only once 2 and 3 are
        // both present.
        let g = Matroid::from_circuits(
            5,
            vec![m(&[0, 1, 2]), m(&[2, 3, 4]), m(&[0, 1, 3, 4])],
            None,
        )
        .unwrap();
        assert_eq!(
            line_closure(&g, m(&[0, 1, 3])).unwrap(),
            m(&[0, 1, 2, 3, 4])
        );
        assert_eq!(line_closure(&g, m(&[0, 3])).unwrap(), m(&[0, 3]));
    }
}
