//! Matroid constructions: direct sum, cone, parallel connection, and
//! corank-one truncation.

use super::Matroid;
use crate::error::{Error, Result};
use crate::subsets::{elements, subsets_of_size, Subset};

/// A matroid with a marked base point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedMatroid {
    matroid: Matroid,
    base: usize,
}

impl PointedMatroid {
    pub fn new(matroid: Matroid, base: usize) -> Result<Self> {
        if base >= matroid.n() {
            return Err(Error::ElementOutOfRange {
                element: base,
                n: matroid.n(),
            });
        }
        Ok(PointedMatroid { matroid, base })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn base(&self) -> usize {
        self.base
    }
}

fn shift_mask(mask: Subset, by: usize) -> Subset {
    mask << by
}

/// Disjoint union; the second factor's labels are shifted by `a.n()`.
pub fn direct_sum(a: &Matroid, b: &Matroid) -> Result<Matroid> {
    let n = a.n() + b.n();
    let mut circuits: Vec<Subset> = a.circuits().to_vec();
    circuits.extend(b.circuits().iter().map(|&c| shift_mask(c, a.n())));
    let m = Matroid::from_circuits(n, circuits, None)?;
    debug_assert_eq!(m.rank(), a.rank() + b.rank());
    Ok(m)
}

/// Adds an isthmus labeled 0 (shifting `m` up by one) and marks it as
/// the base point.
pub fn cone(m: &Matroid) -> Result<PointedMatroid> {
    let isthmus = Matroid::from_circuits(1, Vec::new(), None)?;
    PointedMatroid::new(direct_sum(&isthmus, m)?, 0)
}

/// Glues two pointed matroids along their base points. The glued point
/// is labeled 0, followed by `a`'s other points in increasing original
/// order, then `b`'s.
pub fn parallel_connection(a: &PointedMatroid, b: &PointedMatroid) -> Result<PointedMatroid> {
    let (ga, gb) = (a.matroid(), b.matroid());
    let relabel = |g: &Matroid, base: usize, offset: usize| -> Vec<usize> {
        // Position of each original label in the glued ground set.
        (0..g.n())
            .map(|e| {
                if e == base {
                    0
                } else {
                    let below = (0..e).filter(|&x| x != base).count();
                    offset + below + 1
                }
            })
            .collect()
    };
    let map_a = relabel(ga, a.base(), 0);
    let map_b = relabel(gb, b.base(), ga.n() - 1);
    let apply = |mask: Subset, map: &[usize]| -> Subset {
        elements(mask).iter().map(|&e| 1u32 << map[e]).sum()
    };
    let n = ga.n() + gb.n() - 1;
    let mut circuits: Vec<Subset> = Vec::new();
    for &c in ga.circuits() {
        circuits.push(apply(c, &map_a));
    }
    for &c in gb.circuits() {
        circuits.push(apply(c, &map_b));
    }
    let base_bit_a = 1u32 << a.base();
    let base_bit_b = 1u32 << b.base();
    for &ca in ga.circuits() {
        if ca & base_bit_a == 0 {
            continue;
        }
        for &cb in gb.circuits() {
            if cb & base_bit_b == 0 {
                continue;
            }
            let mixed = apply(ca & !base_bit_a, &map_a) | apply(cb & !base_bit_b, &map_b);
            circuits.push(mixed);
        }
    }
    let m = Matroid::from_circuits(n, circuits, None)?;
    debug_assert_eq!(m.rank(), ga.rank() + gb.rank() - 1);
    PointedMatroid::new(m, 0)
}

/// Corank-one truncation: caps the rank function at `rank - 1` and
/// recomputes circuits as the minimal dependent sets. Requires rank at
/// least 3 so the result stays simple.
pub fn truncation(m: &Matroid) -> Result<Matroid> {
    let r = m.rank();
    if r < 3 {
        return Err(Error::RankTooLow { rank: r });
    }
    let new_rank = r - 1;
    // A set is dependent for the truncation iff it contains an old
    // circuit or has at least new_rank + 1 elements.
    let mut circuits: Vec<Subset> = m
        .circuits()
        .iter()
        .copied()
        .filter(|c| (c.count_ones() as usize) <= new_rank + 1)
        .collect();
    for cand in subsets_of_size(m.n(), new_rank + 1) {
        if circuits.iter().all(|&c| cand & c != c) {
            circuits.push(cand);
        }
    }
    let t = Matroid::from_circuits(m.n(), circuits, Some(new_rank))?;
    Ok(t)
}
