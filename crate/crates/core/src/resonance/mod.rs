//! Degree-one resonance varieties over the rationals.
//!
//! R₁(G) is described combinatorially: a nonzero λ with Σλ_i = 0 lies in a
//! component iff its support S affords a neighborly partition Π (no block
//! meets a rank-2 flat of the restriction G|S in exactly all-but-one point)
//! such that λ lies in
//!
//!   L_Π = Δ ∩ ⋂_{i∉S} H_i ∩ ⋂_{X multicolored} H_X
//!
//! and some μ ∈ L_Π non-proportional to λ satisfies (λ∧μ)_{ij} = 0 whenever
//! i, j share a block.  The last condition holds for a whole subspace exactly
//! when every block-wise coordinate projection of L_Π has rank ≤ 1 — without
//! it, single-block partitions (which are vacuously neighborly) would
//! manufacture fake components on every support.  Components are then the
//! maximal such L_Π of dimension ≥ 2; we check afterwards that they meet
//! pairwise in 0 and that multicolored flats meet every block.

mod fp;

pub use fp::{
    cohomology_dim_at, exceptional_primes, nu, resonance_fp, ExceptionalPrimesReport,
    ResonanceFpProfile, DEFAULT_POINT_BUDGET,
};

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::linalg::{Matrix, Subspace};
use crate::matroid::Matroid;
use crate::subsets::{elements, Subset};
use num_rational::BigRational;
use std::collections::BTreeSet;

/// Default cap on the number of set partitions examined during component
/// enumeration.
pub const DEFAULT_PARTITION_BUDGET: u64 = 10_000_000;

/// A partition of a support set, blocks sorted by least element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NeighborlyPartition {
    support: Subset,
    blocks: Vec<Subset>,
}

impl NeighborlyPartition {
    pub fn new(blocks: Vec<Subset>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Parse("partition needs at least one block".into()));
        }
        let mut support = 0;
        for &b in &blocks {
            if b == 0 {
                return Err(Error::Parse("empty partition block".into()));
            }
            if support & b != 0 {
                return Err(Error::Parse("partition blocks overlap".into()));
            }
            support |= b;
        }
        let mut blocks = blocks;
        blocks.sort_unstable_by_key(|b| b.trailing_zeros());
        Ok(NeighborlyPartition { support, blocks })
    }

    pub fn support(&self) -> Subset {
        self.support
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    /// All blocks are singletons.
    pub fn is_discrete(&self) -> bool {
        self.blocks.iter().all(|b| b.count_ones() == 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComponentKind {
    Local,
    Nonlocal,
}

/// An irreducible component of R₁ over ℚ: the subspace L_Π together with the
/// neighborly partition that produced it.
#[derive(Clone, Debug)]
pub struct ResonanceComponent {
    pub kind: ComponentKind,
    pub partition: NeighborlyPartition,
    pub subspace: Subspace<Rationals>,
}

impl ResonanceComponent {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn support(&self) -> Subset {
        self.partition.support()
    }
}

/// Rank-2 flats of the restriction G|S, as subsets of S (each has ≥ 2
/// elements; the 2-element ones are exactly the "free" pairs of S).
pub fn restriction_lines(m: &Matroid, s: Subset) -> Vec<Subset> {
    let els = elements(s);
    let mut out = BTreeSet::new();
    for (a, &x) in els.iter().enumerate() {
        for &y in &els[a + 1..] {
            out.insert(m.closure((1 << x) | (1 << y)) & s);
        }
    }
    out.into_iter().collect()
}

/// No block meets any restriction line in exactly all-but-one of its points.
pub fn is_neighborly(blocks: &[Subset], lines: &[Subset]) -> bool {
    lines.iter().all(|&x| {
        let all_but_one = x.count_ones() - 1;
        blocks.iter().all(|&b| (b & x).count_ones() != all_but_one)
    })
}

/// Solve for L_Π: coordinates vanish off the support, the total sum
/// vanishes, and the sum over every multicolored restriction line vanishes.
pub fn partition_subspace(m: &Matroid, pi: &NeighborlyPartition) -> Result<Subspace<Rationals>> {
    let q = Rationals;
    let n = m.n();
    let s = pi.support();
    let mut equations: Vec<Vec<BigRational>> = Vec::new();

    let row_of = |mask: Subset| -> Vec<BigRational> {
        (0..n)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    q.one()
                } else {
                    q.zero()
                }
            })
            .collect()
    };

    for i in 0..n {
        if s & (1 << i) == 0 {
            equations.push(row_of(1 << i));
        }
    }
    equations.push(row_of(m.ground_set()));
    for x in restriction_lines(m, s) {
        let met = pi.blocks().iter().filter(|&&b| b & x != 0).count();
        if met >= 2 {
            equations.push(row_of(x));
        }
    }

    let mat = Matrix::from_rows(n, equations)?;
    Ok(Subspace::from_matrix(&q, &mat.right_kernel(&q)))
}

/// Every block-wise coordinate projection of the subspace has rank ≤ 1.
/// This is the subspace form of the wedge condition (λ∧μ)_{ij} = 0 for
/// block-mates i, j.
fn block_projections_rank_le_one(sub: &Subspace<Rationals>, blocks: &[Subset]) -> bool {
    let q = Rationals;
    let basis = sub.basis();
    blocks.iter().all(|&b| {
        if b.count_ones() <= 1 {
            return true;
        }
        let cols = elements(b);
        let rows: Vec<Vec<BigRational>> = (0..basis.n_rows())
            .map(|r| cols.iter().map(|&c| basis.at(r, c).clone()).collect())
            .collect();
        let mat = Matrix::from_rows(cols.len(), rows).expect("uniform row length");
        mat.rank(&q) <= 1
    })
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }

    fn union(&mut self, i: usize, j: usize) {
        let (a, b) = (self.find(i), self.find(j));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

/// Atoms of the coarsest partition every neighborly partition of S refines…
/// rather: 2-point restriction lines force their endpoints into a common
/// block, so only partitions of the merged classes need enumerating.
fn forced_atoms(s: Subset, lines: &[Subset]) -> Vec<Subset> {
    let els = elements(s);
    let index_of = |e: usize| els.iter().position(|&x| x == e).expect("element of s");
    let mut uf = UnionFind::new(els.len());
    for &x in lines {
        if x.count_ones() == 2 {
            let pair = elements(x);
            uf.union(index_of(pair[0]), index_of(pair[1]));
        }
    }
    let mut atoms: Vec<Subset> = vec![0; els.len()];
    for (i, &e) in els.iter().enumerate() {
        atoms[uf.find(i)] |= 1 << e;
    }
    let mut atoms: Vec<Subset> = atoms.into_iter().filter(|&a| a != 0).collect();
    atoms.sort_unstable_by_key(|a| a.trailing_zeros());
    atoms
}

/// Enumerate the neighborly partitions (with ≥ 2 blocks) of every support of
/// size 3..=max_support.  Supports of size ≤ 2 never yield a component
/// subspace of dimension ≥ 2, and single-block partitions are vacuously
/// neighborly but filtered here.  Every support and every candidate
/// partition examined counts against the budget.
pub fn neighborly_partitions(
    m: &Matroid,
    max_support: usize,
    budget: u64,
) -> Result<Vec<NeighborlyPartition>> {
    let n = m.n();
    let mut out = Vec::new();
    let mut spent: u64 = 0;

    for s in 0..(1u32 << n) {
        let size = s.count_ones() as usize;
        if size < 3 || size > max_support {
            continue;
        }
        spent += 1;
        if spent > budget {
            return Err(Error::BudgetExceeded {
                needed: spent,
                budget,
            });
        }
        let lines = restriction_lines(m, s);
        let atoms = forced_atoms(s, &lines);
        if atoms.len() < 2 {
            continue;
        }

        // restricted-growth enumeration of partitions of the atom list
        let mut assign = vec![0usize; atoms.len()];
        rgs(
            &atoms,
            &lines,
            1,
            0,
            &mut assign,
            budget,
            &mut spent,
            &mut out,
        )?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn rgs(
    atoms: &[Subset],
    lines: &[Subset],
    i: usize,
    max_used: usize,
    assign: &mut Vec<usize>,
    budget: u64,
    spent: &mut u64,
    out: &mut Vec<NeighborlyPartition>,
) -> Result<()> {
    if i == atoms.len() {
        *spent += 1;
        if *spent > budget {
            return Err(Error::BudgetExceeded {
                needed: *spent,
                budget,
            });
        }
        if max_used == 0 {
            return Ok(()); // single block: vacuous, never a component
        }
        let mut blocks = vec![0 as Subset; max_used + 1];
        for (j, &a) in atoms.iter().enumerate() {
            blocks[assign[j]] |= a;
        }
        if is_neighborly(&blocks, lines) {
            out.push(NeighborlyPartition::new(blocks).expect("atoms form a partition"));
        }
        return Ok(());
    }
    for b in 0..=max_used + 1 {
        assign[i] = b;
        rgs(
            atoms,
            lines,
            i + 1,
            max_used.max(b),
            assign,
            budget,
            spent,
            out,
        )?;
    }
    Ok(())
}

/// The local components: one for each line with ≥ 3 points, from the
/// singleton partition of that line.
pub fn local_components(m: &Matroid) -> Result<Vec<ResonanceComponent>> {
    let mut out = Vec::new();
    for x in m.long_lines() {
        let blocks: Vec<Subset> = elements(x).into_iter().map(|e| 1 << e).collect();
        let pi = NeighborlyPartition::new(blocks)?;
        let sub = partition_subspace(m, &pi)?;
        debug_assert_eq!(sub.dim(), x.count_ones() as usize - 1);
        out.push(ResonanceComponent {
            kind: ComponentKind::Local,
            partition: pi,
            subspace: sub,
        });
    }
    Ok(out)
}

/// A single partition's candidate component, if it clears the dimension and
/// block-projection tests.
pub fn component_subspace(
    m: &Matroid,
    pi: &NeighborlyPartition,
) -> Result<Option<ResonanceComponent>> {
    let sub = partition_subspace(m, pi)?;
    if sub.dim() < 2 || !block_projections_rank_le_one(&sub, pi.blocks()) {
        return Ok(None);
    }
    let kind = if pi.is_discrete() && m.long_lines().contains(&pi.support()) {
        ComponentKind::Local
    } else {
        ComponentKind::Nonlocal
    };
    Ok(Some(ResonanceComponent {
        kind,
        partition: pi.clone(),
        subspace: sub,
    }))
}

/// All components of R₁(G) over ℚ: the maximal candidate subspaces, local
/// ones first.  Verifies that distinct components intersect in 0 and that
/// multicolored lines of a component's partition meet all of its blocks.
pub fn resonance_q(m: &Matroid, budget: u64) -> Result<Vec<ResonanceComponent>> {
    let q = Rationals;
    let partitions = neighborly_partitions(m, m.n(), budget)?;
    let mut cands: Vec<ResonanceComponent> = Vec::new();
    for pi in &partitions {
        if let Some(c) = component_subspace(m, pi)? {
            cands.push(c);
        }
    }

    // keep one representative per subspace, preferring local labels, then
    // drop candidates strictly contained in another
    let mut keep = vec![true; cands.len()];
    for i in 0..cands.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..cands.len() {
            if i == j || !keep[i] || !keep[j] {
                continue;
            }
            if cands[i].subspace == cands[j].subspace {
                let prefer_j = (cands[j].kind, j) < (cands[i].kind, i);
                if prefer_j {
                    keep[i] = false;
                } else {
                    keep[j] = false;
                }
            } else if cands[j]
                .subspace
                .contains_subspace(&q, &cands[i].subspace)?
            {
                keep[i] = false;
            }
        }
    }
    let mut comps: Vec<ResonanceComponent> = cands
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect();

    comps.sort_by(|a, b| {
        (a.kind, a.support(), &a.partition.blocks).cmp(&(b.kind, b.support(), &b.partition.blocks))
    });

    // Distinct components of R_1 can only meet in 0; enforce it.
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            let meet = comps[i].subspace.intersect(&q, &comps[j].subspace)?;
            assert_eq!(
                meet.dim(),
                0,
                "resonance components {i} and {j} intersect nontrivially"
            );
        }
    }
    // A line of the restriction that meets two blocks of a neighborly
    // partition must meet every block; enforce it.
    for c in &comps {
        let lines = restriction_lines(m, c.support());
        for &x in &lines {
            let met = c.partition.blocks().iter().filter(|&&b| b & x != 0).count();
            if met >= 2 {
                assert_eq!(
                    met,
                    c.partition.blocks().len(),
                    "multicolored line misses a block of a component partition"
                );
            }
        }
    }

    Ok(comps)
}

/// The rank table of the polymatroid spanned by the components of R₁:
/// for each subset of components, the dimension of the sum of their
/// subspaces.  Full table for ≤ 12 components, otherwise subsets of size
/// ≤ 3 plus the full set; more than 20 components exceeds the budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly1 {
    pub component_count: usize,
    pub full_table: bool,
    /// (component-index mask, rank), sorted by mask.
    pub ranks: Vec<(u32, usize)>,
}

impl Poly1 {
    pub fn rank_of(&self, mask: u32) -> Option<usize> {
        self.ranks
            .binary_search_by_key(&mask, |&(m, _)| m)
            .ok()
            .map(|i| self.ranks[i].1)
    }
}

pub fn poly1(m: &Matroid, budget: u64) -> Result<Poly1> {
    let comps = resonance_q(m, budget)?;
    poly1_of_components(&comps, m.n())
}

pub fn poly1_of_components(comps: &[ResonanceComponent], n: usize) -> Result<Poly1> {
    let q = Rationals;
    let count = comps.len();
    if count > 20 {
        return Err(Error::BudgetExceeded {
            needed: count as u64,
            budget: 20,
        });
    }
    let full_table = count <= 12;
    let masks: Vec<u32> = if full_table {
        (0..(1u32 << count)).collect()
    } else {
        let mut masks: Vec<u32> = (0..(1u32 << count))
            .filter(|m| m.count_ones() <= 3)
            .collect();
        masks.push((1u32 << count) - 1);
        masks
    };

    let mut ranks = Vec::with_capacity(masks.len());
    for mask in masks {
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for (i, c) in comps.iter().enumerate() {
            if mask & (1 << i) != 0 {
                rows.extend(c.subspace.basis().rows_vec());
            }
        }
        let rank = Matrix::from_rows(n, rows)?.rank(&q);
        ranks.push((mask, rank));
    }

    if full_table && count <= 10 {
        // submodularity of the rank table
        let table: Vec<usize> = ranks.iter().map(|&(_, r)| r).collect();
        for a in 0..table.len() as u32 {
            for b in 0..table.len() as u32 {
                assert!(
                    table[(a | b) as usize] + table[(a & b) as usize]
                        <= table[a as usize] + table[b as usize],
                    "poly1 rank table is not submodular at {a:#b}, {b:#b}"
                );
            }
        }
    }

    Ok(Poly1 {
        component_count: count,
        full_table,
        ranks,
    })
}

/// Membership test for λ ∈ R₁ over ℚ straight from the definition: the
/// multiplication image test dim{μ : e_λ ∧ e_μ ∈ I²} ≥ 2.
pub fn r1_membership_q(m: &Matroid, lambda: &[BigRational]) -> Result<bool> {
    use crate::exterior::ExteriorElement;
    use crate::os::OSIdeal;

    let q = Rationals;
    let n = m.n();
    if lambda.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "lambda has {} coordinates, ground set has {n}",
            lambda.len()
        )));
    }
    if lambda.iter().all(|c| q.is_zero(c)) {
        return Ok(false);
    }
    let ideal = OSIdeal::full(m, &q)?;
    let e_lambda = ExteriorElement::from_coeffs(n, 1, lambda.to_vec())?;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let ei = ExteriorElement::monomial(&q, n, 1 << i)?;
        let w = e_lambda.wedge(&q, &ei)?;
        rows.push(ideal.normal_form(&w)?.into_coeffs());
    }
    let mat = Matrix::from_rows(crate::subsets::binomial(n, 2), rows)?;
    Ok(mat.left_kernel(&q).n_rows() >= 2)
}
