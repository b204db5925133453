//! Simple matroids on small ground sets, presented by circuits.
//!
//! The ground set is `{0, ..., n-1}` and subsets are bitmasks. Every
//! constructor validates its input: the circuit axioms are checked
//! directly, and the other presentations (bases, column vectors over
//! `Q`, rank-3 line data) are converted to circuits and re-validated.
//! Loops and parallel elements are rejected, so circuits always have
//! at least three elements.

mod lattice;
mod lines;
mod ops;

pub use lattice::FlatLattice;
pub use lines::{is_line_closed, lc_closed_sets, line_closure};
pub use ops::{cone, direct_sum, parallel_connection, truncation, PointedMatroid};

use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::linalg::Matrix;
use crate::subsets::{check_ground_set, elements, format_mask, subsets_of_size, Subset};

/// A simple matroid given by its set of circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    rank: usize,
    circuits: Vec<Subset>,
}

impl Matroid {
    /// Validates the circuit axioms (incomparability and weak circuit
    /// elimination), simplicity, and the declared rank if given.
    pub fn from_circuits(
        n: usize,
        circuits: Vec<Subset>,
        declared_rank: Option<usize>,
    ) -> Result<Self> {
        check_ground_set(n)?;
        let full: Subset = if n == 0 { 0 } else { (1 << n) - 1 };
        let mut circuits = circuits;
        circuits.sort_unstable();
        circuits.dedup();
        for &c in &circuits {
            if c & !full != 0 {
                let bad = elements(c & !full)[0];
                return Err(Error::ElementOutOfRange { element: bad, n });
            }
            if c == 0 {
                return Err(Error::CircuitAxiomViolation(
                    "the empty set cannot be a circuit".to_string(),
                ));
            }
            if c.count_ones() == 1 {
                return Err(Error::NotSimple(format!("loop {}", format_mask(c))));
            }
            if c.count_ones() == 2 {
                return Err(Error::NotSimple(format!(
                    "parallel pair {}",
                    format_mask(c)
                )));
            }
        }
        for (i, &a) in circuits.iter().enumerate() {
            for &b in circuits.iter().skip(i + 1) {
                if a & b == a || a & b == b {
                    return Err(Error::CircuitAxiomViolation(format!(
                        "circuits {} and {} are nested",
                        format_mask(a),
                        format_mask(b)
                    )));
                }
            }
        }
        // Weak elimination: circuits meeting in e must dominate a third
        // circuit avoiding e.
        for (i, &a) in circuits.iter().enumerate() {
            for &b in circuits.iter().skip(i + 1) {
                let mut common = a & b;
                while common != 0 {
                    let low = common & common.wrapping_neg();
                    let union_minus = (a | b) & !low;
                    // Subset test, not membership: clippy's `contains` rewrite
                    // would change the meaning.
                    #[allow(clippy::manual_contains)]
                    if !circuits.iter().any(|&c| c & union_minus == c) {
                        return Err(Error::CircuitAxiomViolation(format!(
                            "no circuit inside {} from eliminating element {} of {} and {}",
                            format_mask(union_minus),
                            low.trailing_zeros(),
                            format_mask(a),
                            format_mask(b)
                        )));
                    }
                    common &= !low;
                }
            }
        }
        let mut m = Matroid {
            n,
            rank: 0,
            circuits,
        };
        m.rank = m.rank_of(full);
        if let Some(r) = declared_rank {
            if r != m.rank {
                return Err(Error::RankMismatch {
                    declared: r,
                    computed: m.rank,
                });
            }
        }
        Ok(m)
    }

    /// Builds the matroid from its bases, validating the exchange axiom
    /// before deriving circuits as minimal non-independent sets.
    pub fn from_bases(n: usize, bases: Vec<Subset>, declared_rank: Option<usize>) -> Result<Self> {
        check_ground_set(n)?;
        let mut bases = bases;
        bases.sort_unstable();
        bases.dedup();
        if bases.is_empty() {
            return Err(Error::CircuitAxiomViolation(
                "a matroid needs at least one basis".to_string(),
            ));
        }
        let full: Subset = if n == 0 { 0 } else { (1 << n) - 1 };
        for &b in &bases {
            if b & !full != 0 {
                let bad = elements(b & !full)[0];
                return Err(Error::ElementOutOfRange { element: bad, n });
            }
        }
        let r = bases[0].count_ones() as usize;
        if bases.iter().any(|b| b.count_ones() as usize != r) {
            return Err(Error::CircuitAxiomViolation(
                "bases of unequal size".to_string(),
            ));
        }
        for &b1 in &bases {
            for &b2 in &bases {
                let mut out = b1 & !b2;
                while out != 0 {
                    let x = out & out.wrapping_neg();
                    let stub = b1 & !x;
                    let found = elements(b2 & !b1)
                        .iter()
                        .any(|&y| bases.binary_search(&(stub | (1 << y))).is_ok());
                    if !found {
                        return Err(Error::CircuitAxiomViolation(format!(
                            "exchange fails for bases {} and {} at element {}",
                            format_mask(b1),
                            format_mask(b2),
                            x.trailing_zeros()
                        )));
                    }
                    out &= !x;
                }
            }
        }
        let independent = |s: Subset| bases.iter().any(|&b| s & b == s);
        let mut circuits: Vec<Subset> = Vec::new();
        for size in 1..=(r + 1).min(n) {
            'candidates: for cand in subsets_of_size(n, size) {
                for &c in &circuits {
                    if cand & c == c {
                        continue 'candidates;
                    }
                }
                if !independent(cand) {
                    circuits.push(cand);
                }
            }
        }
        let m = Matroid::from_circuits(n, circuits, declared_rank)?;
        if m.rank != r {
            return Err(Error::RankMismatch {
                declared: r,
                computed: m.rank,
            });
        }
        Ok(m)
    }

    /// The matroid of the columns of a matrix over `Q`: circuits are the
    /// minimal linearly dependent sets of columns.
    pub fn from_matrix(mat: &Matrix<Rationals>, declared_rank: Option<usize>) -> Result<Self> {
        let q = Rationals;
        let n = mat.n_cols();
        check_ground_set(n)?;
        if n == 0 || mat.n_rows() == 0 {
            return Err(Error::EmptyMatrix);
        }
        let col_rank = |s: Subset| -> usize {
            let cols = elements(s);
            let rows: Vec<Vec<_>> = cols
                .iter()
                .map(|&c| (0..mat.n_rows()).map(|r| mat.at(r, c).clone()).collect())
                .collect();
            Matrix::from_rows(mat.n_rows(), rows)
                .expect("column slices have the matrix's row count")
                .rank(&q)
        };
        let full: Subset = (1 << n) - 1;
        let r = col_rank(full);
        let mut circuits: Vec<Subset> = Vec::new();
        for size in 1..=(r + 1).min(n) {
            'candidates: for cand in subsets_of_size(n, size) {
                for &c in &circuits {
                    if cand & c == c {
                        continue 'candidates;
                    }
                }
                if col_rank(cand) < size {
                    circuits.push(cand);
                }
            }
        }
        let m = Matroid::from_circuits(n, circuits, declared_rank)?;
        debug_assert_eq!(m.rank, r);
        Ok(m)
    }

    /// A rank-3 simple matroid from its lines of three or more points;
    /// two-point lines are implicit. Circuits are the collinear triples
    /// together with the quadruples containing no collinear triple.
    pub fn from_rank3_lines(n: usize, lines: Vec<Subset>) -> Result<Self> {
        check_ground_set(n)?;
        let full: Subset = if n == 0 { 0 } else { (1 << n) - 1 };
        for &l in &lines {
            if l & !full != 0 {
                let bad = elements(l & !full)[0];
                return Err(Error::ElementOutOfRange { element: bad, n });
            }
            if l.count_ones() < 3 {
                return Err(Error::CircuitAxiomViolation(format!(
                    "line {} has fewer than three points",
                    format_mask(l)
                )));
            }
        }
        for (i, &a) in lines.iter().enumerate() {
            for &b in lines.iter().skip(i + 1) {
                if (a & b).count_ones() > 1 {
                    return Err(Error::CircuitAxiomViolation(format!(
                        "lines {} and {} share two points",
                        format_mask(a),
                        format_mask(b)
                    )));
                }
            }
        }
        let collinear = |t: Subset| lines.iter().any(|&l| t & l == t);
        let mut circuits: Vec<Subset> = Vec::new();
        for t in subsets_of_size(n, 3) {
            if collinear(t) {
                circuits.push(t);
            }
        }
        if n >= 4 {
            for q in subsets_of_size(n, 4) {
                let mut free = true;
                for e in elements(q) {
                    if collinear(q & !(1 << e)) {
                        free = false;
                        break;
                    }
                }
                if free {
                    circuits.push(q);
                }
            }
        }
        Matroid::from_circuits(n, circuits, Some(3))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Circuits in increasing bitmask (colex) order.
    pub fn circuits(&self) -> &[Subset] {
        &self.circuits
    }

    pub fn ground_set(&self) -> Subset {
        if self.n == 0 {
            0
        } else {
            (1 << self.n) - 1
        }
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.circuits.iter().all(|&c| s & c != c)
    }

    /// Rank of an arbitrary subset by greedy extension of an
    /// independent subset.
    pub fn rank_of(&self, s: Subset) -> usize {
        let mut indep: Subset = 0;
        for e in elements(s) {
            let cand = indep | (1 << e);
            if self.is_independent(cand) {
                indep = cand;
            }
        }
        indep.count_ones() as usize
    }

    /// The matroid closure: all elements whose addition keeps the rank.
    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank_of(s);
        let mut out = s;
        for e in 0..self.n {
            let bit = 1 << e;
            if s & bit == 0 && self.rank_of(s | bit) == r {
                out |= bit;
            }
        }
        out
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        self.closure(s) == s
    }

    /// Rank-2 flats, in increasing bitmask order.
    pub fn lines(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = Vec::new();
        for pair in subsets_of_size(self.n, 2) {
            let l = self.closure(pair);
            if !out.contains(&l) {
                out.push(l);
            }
        }
        out.sort_unstable();
        out
    }

    /// Lines with at least three points; for a rank-3 matroid these
    /// determine it completely.
    pub fn long_lines(&self) -> Vec<Subset> {
        self.lines()
            .into_iter()
            .filter(|l| l.count_ones() >= 3)
            .collect()
    }

    /// Broken circuits `C \ min(C)` with respect to the natural order.
    pub fn broken_circuits(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = self
            .circuits
            .iter()
            .map(|&c| c & !(c & c.wrapping_neg()))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Bases: maximal independent sets, all of size `rank`.
    pub fn bases(&self) -> Vec<Subset> {
        subsets_of_size(self.n, self.rank)
            .into_iter()
            .filter(|&b| self.is_independent(b))
            .collect()
    }
}
