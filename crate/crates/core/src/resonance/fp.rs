//! Brute-force degree-q resonance over prime fields, ν_{p,d} counts, and the
//! comparison of GF(p)-resonance with mod-p reductions of the rational
//! components (exceptional primes).
//!
//! For λ ∈ GF(p)^n the complex (A ⊗ GF(p), a_λ·) is evaluated on the nbc
//! quotient basis: multiplication by each point is a precomputed sparse
//! matrix, M_q(λ) = Σ λ_i B_i^{(q)} is assembled per parameter, and
//! dim H^q = dim A^q − rank M_q − rank M_{q−1}.  Parameters are enumerated
//! projectively (first nonzero coordinate 1); dim H^q is invariant under
//! scaling λ, so affine counts are (p−1) times the projective ones.

use super::resonance_q;
use crate::error::{Error, Result};
use crate::exterior::ExteriorElement;
use crate::field::{Field, PrimeField};
use crate::matroid::Matroid;
use crate::os::OSIdeal;
use crate::subsets::{shuffle_sign, Subset};
use std::collections::{BTreeMap, BTreeSet};

/// Default cap on pⁿ, the number of parameters a brute-force enumeration
/// would cover.
pub const DEFAULT_POINT_BUDGET: u64 = 10_000_000;

/// The exact-dimension strata of R_q(A ⊗ GF(p)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResonanceFpProfile {
    pub p: u64,
    pub q: usize,
    /// Projective representatives (first nonzero coordinate 1) with
    /// dim H^q exactly d, for each d ≥ 1, in enumeration order.
    pub strata: BTreeMap<usize, Vec<Vec<u64>>>,
}

impl ResonanceFpProfile {
    /// ν_{p,d}: the number of nonzero λ ∈ GF(p)^n with dim H^q = d, d ≥ 1.
    pub fn nu_affine(&self) -> BTreeMap<usize, u64> {
        self.strata
            .iter()
            .map(|(&d, reps)| (d, reps.len() as u64 * (self.p - 1)))
            .collect()
    }

    pub fn nu_projective(&self) -> BTreeMap<usize, u64> {
        self.strata
            .iter()
            .map(|(&d, reps)| (d, reps.len() as u64))
            .collect()
    }

    /// Projective size of the stratum R_{q,d} = {λ : dim H^q ≥ d}.
    pub fn projective_points_with_dim_at_least(&self, d: usize) -> u64 {
        self.strata
            .iter()
            .filter(|&(&e, _)| e >= d)
            .map(|(_, reps)| reps.len() as u64)
            .sum()
    }
}

/// Sparse matrices of multiplication by each point: A^q → A^{q+1} on the
/// quotient bases, entries (row, col, value).
struct MulTables {
    dim_from: usize,
    dim_to: usize,
    per_point: Vec<Vec<(u32, u32, u64)>>,
}

fn mul_tables(ideal: &OSIdeal<PrimeField>, fp: &PrimeField, q: usize) -> Result<MulTables> {
    let n = ideal.ground_set_size();
    let from = ideal.quotient_basis(q).to_vec();
    if q >= n {
        return Ok(MulTables {
            dim_from: from.len(),
            dim_to: 0,
            per_point: vec![Vec::new(); n],
        });
    }
    let to = ideal.quotient_basis(q + 1);
    let p = fp.modulus();

    let mut nf_cache: BTreeMap<Subset, Vec<u64>> = BTreeMap::new();
    let mut per_point = vec![Vec::new(); n];
    for (r, &s) in from.iter().enumerate() {
        // `i` is simultaneously a bit position and the per-point index.
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            if s & (1 << i) != 0 {
                continue;
            }
            let t = s | (1 << i);
            if let std::collections::btree_map::Entry::Vacant(slot) = nf_cache.entry(t) {
                let et = ExteriorElement::monomial(fp, n, t)?;
                slot.insert(ideal.quotient_coordinates(&et)?);
            }
            let coords = &nf_cache[&t];
            let negate = shuffle_sign(1 << i, s) < 0;
            for (c, &v) in coords.iter().enumerate() {
                if v == 0 {
                    continue;
                }
                let val = if negate { p - v } else { v };
                per_point[i].push((r as u32, c as u32, val));
            }
        }
    }
    Ok(MulTables {
        dim_from: from.len(),
        dim_to: to.len(),
        per_point,
    })
}

/// Row-echelon rank of a dense matrix mod p, entries kept reduced.  Row
/// updates use piv·r − f·r_pivot, so no inversions are needed; products stay
/// below 2p² < 2⁶⁴ for p < 2³¹.
fn rank_mod_p(buf: &mut [u64], rows: usize, cols: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| buf[r * cols + col] != 0) else {
            continue;
        };
        if pr != rank {
            for c in col..cols {
                buf.swap(pr * cols + c, rank * cols + c);
            }
        }
        let piv = buf[rank * cols + col];
        for r in rank + 1..rows {
            let f = buf[r * cols + col];
            if f == 0 {
                continue;
            }
            for c in col..cols {
                buf[r * cols + c] = (piv * buf[r * cols + c] + (p - f) * buf[rank * cols + c]) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn assembled_rank(tables: &MulTables, lambda: &[u64], p: u64, buf: &mut Vec<u64>) -> usize {
    let (rows, cols) = (tables.dim_from, tables.dim_to);
    if rows == 0 || cols == 0 {
        return 0;
    }
    buf.clear();
    buf.resize(rows * cols, 0);
    for (i, &l) in lambda.iter().enumerate() {
        if l == 0 {
            continue;
        }
        for &(r, c, v) in &tables.per_point[i] {
            let idx = r as usize * cols + c as usize;
            buf[idx] = (buf[idx] + l * v) % p;
        }
    }
    rank_mod_p(buf, rows, cols, p)
}

/// Brute-force profile of R_q(A ⊗ GF(p)): requires pⁿ within the budget.
pub fn resonance_fp(m: &Matroid, p: u64, q: usize, budget: u64) -> Result<ResonanceFpProfile> {
    let n = m.n();
    let fp = PrimeField::new(p)?;
    if q > m.rank() {
        return Err(Error::LevelOutOfRange {
            given: q,
            max: m.rank(),
        });
    }
    let total = (p as u128).pow(n as u32);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: total.min(u64::MAX as u128) as u64,
            budget,
        });
    }

    let ideal = OSIdeal::full(m, &fp)?;
    let dim_q = ideal.quotient_basis(q).len();
    let tab_q = mul_tables(&ideal, &fp, q)?;
    let tab_prev = if q > 0 {
        Some(mul_tables(&ideal, &fp, q - 1)?)
    } else {
        None
    };

    let mut strata: BTreeMap<usize, Vec<Vec<u64>>> = BTreeMap::new();
    let mut lambda = vec![0u64; n];
    let mut buf = Vec::new();
    for lead in 0..n {
        for l in lambda.iter_mut() {
            *l = 0;
        }
        lambda[lead] = 1;
        'points: loop {
            let rank_q = assembled_rank(&tab_q, &lambda, p, &mut buf);
            let rank_prev = tab_prev
                .as_ref()
                .map_or(0, |t| assembled_rank(t, &lambda, p, &mut buf));
            let d = dim_q - rank_q - rank_prev;
            if d >= 1 {
                strata.entry(d).or_default().push(lambda.clone());
            }

            let mut j = n;
            loop {
                if j == lead + 1 {
                    break 'points;
                }
                j -= 1;
                lambda[j] += 1;
                if lambda[j] < p {
                    break;
                }
                lambda[j] = 0;
            }
        }
    }

    Ok(ResonanceFpProfile { p, q, strata })
}

/// ν_{p,d} table (affine counts over nonzero parameters).
pub fn nu(m: &Matroid, p: u64, q: usize, budget: u64) -> Result<BTreeMap<usize, u64>> {
    Ok(resonance_fp(m, p, q, budget)?.nu_affine())
}

/// dim H^q at a single parameter; used for homogeneity spot checks.
pub fn cohomology_dim_at(m: &Matroid, p: u64, q: usize, lambda: &[u64]) -> Result<usize> {
    let fp = PrimeField::new(p)?;
    if q > m.rank() {
        return Err(Error::LevelOutOfRange {
            given: q,
            max: m.rank(),
        });
    }
    if lambda.len() != m.n() {
        return Err(Error::DimensionMismatch(format!(
            "lambda has {} coordinates, ground set has {}",
            lambda.len(),
            m.n()
        )));
    }
    let reduced: Vec<u64> = lambda.iter().map(|&l| l % p).collect();
    let ideal = OSIdeal::full(m, &fp)?;
    let dim_q = ideal.quotient_basis(q).len();
    let tab_q = mul_tables(&ideal, &fp, q)?;
    let mut buf = Vec::new();
    let rank_q = assembled_rank(&tab_q, &reduced, p, &mut buf);
    let rank_prev = if q > 0 {
        let t = mul_tables(&ideal, &fp, q - 1)?;
        assembled_rank(&t, &reduced, p, &mut buf)
    } else {
        0
    };
    Ok(dim_q - rank_q - rank_prev)
}

/// Comparison of R₁ over ℚ with R₁ over GF(p) for all primes p ≤ max_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalPrimesReport {
    pub max_p: u64,
    /// Primes where the GF(p) points of the reduced rational components
    /// differ from the brute-force GF(p) resonance.
    pub exceptional: Vec<u64>,
    /// Primes dividing a denominator in some component basis; reduction is
    /// skipped there.
    pub denominator_clashes: Vec<u64>,
}

fn primes_up_to(bound: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for c in 2..=bound {
        if out.iter().all(|&p| c % p != 0) {
            out.push(c);
        }
    }
    out
}

/// All nonzero points of the row span, projectively normalized.
fn projective_span_points(rows: &[Vec<u64>], fp: &PrimeField) -> BTreeSet<Vec<u64>> {
    let p = fp.modulus();
    let mut out = BTreeSet::new();
    if rows.is_empty() {
        return out;
    }
    let n = rows[0].len();
    let d = rows.len();
    let mut coeffs = vec![0u64; d];
    loop {
        // advance the odometer first so the all-zero combination is skipped
        let mut j = d;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            coeffs[j] += 1;
            if coeffs[j] < p {
                break;
            }
            coeffs[j] = 0;
        }
        let mut v = vec![0u64; n];
        for (c, row) in coeffs.iter().zip(rows) {
            if *c == 0 {
                continue;
            }
            for (vi, &ri) in v.iter_mut().zip(row) {
                *vi = (*vi + c * ri) % p;
            }
        }
        if let Some(lead) = v.iter().position(|&x| x != 0) {
            let inv = fp.inv(&v[lead]).expect("nonzero leading coordinate");
            let normalized: Vec<u64> = v.iter().map(|&x| fp.mul(&x, &inv)).collect();
            out.insert(normalized);
        }
    }
}

pub fn exceptional_primes(m: &Matroid, max_p: u64, budget: u64) -> Result<ExceptionalPrimesReport> {
    let n = m.n();
    let comps = resonance_q(m, budget)?;
    let mut exceptional = Vec::new();
    let mut denominator_clashes = Vec::new();

    'primes: for p in primes_up_to(max_p) {
        let fp = PrimeField::new(p)?;
        let mut q_points: BTreeSet<Vec<u64>> = BTreeSet::new();
        for c in &comps {
            let basis = c.subspace.basis();
            let mut rows: Vec<Vec<u64>> = Vec::with_capacity(basis.n_rows());
            for r in 0..basis.n_rows() {
                let mut row = Vec::with_capacity(n);
                for col in 0..n {
                    match fp.reduce_rational(basis.at(r, col)) {
                        Some(v) => row.push(v),
                        None => {
                            denominator_clashes.push(p);
                            continue 'primes;
                        }
                    }
                }
                rows.push(row);
            }
            q_points.extend(projective_span_points(&rows, &fp));
        }

        let profile = resonance_fp(m, p, 1, budget)?;
        let fp_points: BTreeSet<Vec<u64>> = profile.strata.values().flatten().cloned().collect();
        if q_points != fp_points {
            exceptional.push(p);
        }
    }

    Ok(ExceptionalPrimesReport {
        max_p,
        exceptional,
        denominator_clashes,
    })
}
