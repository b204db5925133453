//! Orlik–Solomon algebras as quotients of the exterior algebra.
//!
//! The ideal I(G) is generated by the boundaries of circuit monomials.  We
//! work degree by degree: the degree-p piece of the k-adic ideal I_k is
//! spanned by the products e_T ∧ ∂e_C over circuits C with |C| ≤ k+1.  Two
//! reductions keep the generator list short: a product with |T ∩ C| ≥ 2
//! vanishes, and a product with |T ∩ C| = 1 collapses to ± a single monomial
//! e_{T∪C}, whose support contains C.  So it suffices to span
//!
//!   { e_S : S ⊇ C for some circuit |C| ≤ k+1 }  ∪
//!   { e_T ∧ ∂e_C : |C| ≤ k+1, T ∩ C = ∅ }.
//!
//! Row reduction uses the trailing-pivot echelon form from `linalg`, whose
//! pivot monomials are exactly the supersets of broken circuits; the
//! complementary (nbc) monomials index the quotient basis in every degree
//! and over every coefficient field.

mod affine;
mod monomials;

pub use affine::{affine_os, tensor_dims, AffineOSAlgebra};
pub use monomials::{natural_order, nbb_sets, nbc_sets, GradedSets};

use crate::error::{Error, Result};
use crate::exterior::{boundary_of_monomial, ExteriorElement};
use crate::field::Field;
use crate::graded::GradedSubspace;
use crate::linalg::{Matrix, Subspace};
use crate::matroid::{FlatLattice, Matroid};
use crate::subsets::{binomial, colex_unrank, subsets_of_size, Subset};

/// A graded ideal of the exterior algebra attached to a matroid: either the
/// full Orlik–Solomon ideal or its k-adic approximation I_k (generated by the
/// ideal's components in degrees ≤ k, equivalently by circuits of size ≤ k+1).
pub struct OSIdeal<F: Field> {
    field: F,
    n: usize,
    rank: usize,
    cutoff: usize,
    graded: GradedSubspace<F>,
    quotient_bases: Vec<Vec<Subset>>,
}

fn ideal_piece<F: Field>(
    field: &F,
    m: &Matroid,
    small: &[Subset],
    p: usize,
) -> Result<Subspace<F>> {
    let n = m.n();
    let dim = binomial(n, p);
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();

    // Monomials whose support contains a short circuit.  These absorb every
    // product e_T ∧ ∂e_C with T meeting C in one element.
    for s in subsets_of_size(n, p) {
        // Subset test, not membership: clippy's `contains` rewrite would
        // change the meaning.
        #[allow(clippy::manual_contains)]
        if small.iter().any(|&c| s & c == c) {
            rows.push(ExteriorElement::monomial(field, n, s)?.into_coeffs());
        }
    }

    // Products e_T ∧ ∂e_C with T disjoint from C.
    for &c in small {
        let csz = c.count_ones() as usize;
        if csz == 0 || csz > p + 1 {
            continue;
        }
        let dc = boundary_of_monomial(field, n, c)?;
        let tsz = p + 1 - csz;
        if tsz == 0 {
            rows.push(dc.coeffs().to_vec());
            continue;
        }
        for t in subsets_of_size(n, tsz) {
            if t & c != 0 {
                continue;
            }
            let et = ExteriorElement::monomial(field, n, t)?;
            rows.push(et.wedge(field, &dc)?.into_coeffs());
        }
    }

    Subspace::from_rows(field, dim, rows)
}

impl<F: Field> OSIdeal<F> {
    fn build(m: &Matroid, field: &F, cutoff: usize) -> Result<Self> {
        let n = m.n();
        let small: Vec<Subset> = m
            .circuits()
            .iter()
            .copied()
            .filter(|c| (c.count_ones() as usize) <= cutoff)
            .collect();
        let mut pieces = Vec::with_capacity(n + 1);
        for p in 0..=n {
            pieces.push(ideal_piece(field, m, &small, p)?);
        }
        let graded = GradedSubspace::from_pieces(n, pieces)?;

        let mut quotient_bases = Vec::with_capacity(n + 1);
        for p in 0..=n {
            let piece = graded.piece(p);
            let mut is_pivot = vec![false; piece.ambient()];
            for &c in piece.pivots() {
                is_pivot[c] = true;
            }
            let basis: Vec<Subset> = (0..piece.ambient())
                .filter(|&i| !is_pivot[i])
                .map(|i| colex_unrank(i, p))
                .collect();
            quotient_bases.push(basis);
        }

        Ok(OSIdeal {
            field: field.clone(),
            n,
            rank: m.rank(),
            cutoff,
            graded,
            quotient_bases,
        })
    }

    /// The full Orlik–Solomon ideal.
    pub fn full(m: &Matroid, field: &F) -> Result<Self> {
        let ideal = Self::build(m, field, m.n() + 1)?;
        #[cfg(debug_assertions)]
        {
            // The quotient basis must consist of nbc monomials (natural order).
            let broken = m.broken_circuits();
            for (p, basis) in ideal.quotient_bases.iter().enumerate() {
                for &s in basis {
                    debug_assert!(
                        broken.iter().all(|&b| s & b != b),
                        "degree-{p} quotient monomial contains a broken circuit"
                    );
                }
            }
        }
        Ok(ideal)
    }

    /// The k-adic ideal I_k, 2 ≤ k ≤ rank.  I_rank is the full ideal.
    pub fn kadic(m: &Matroid, field: &F, k: usize) -> Result<Self> {
        if k < 2 || k > m.rank() {
            return Err(Error::LevelOutOfRange {
                given: k,
                max: m.rank(),
            });
        }
        Self::build(m, field, k + 1)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ground_set_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Circuits of size ≤ cutoff generate this ideal (cutoff = k+1 for I_k,
    /// n+1 for the full ideal).
    pub fn circuit_size_cutoff(&self) -> usize {
        self.cutoff
    }

    /// Ideal dimensions per degree, length n+1.
    pub fn dims(&self) -> Vec<usize> {
        self.graded.dims()
    }

    /// Dimensions of the quotient E/I per degree, length n+1.
    pub fn quotient_dims(&self) -> Vec<usize> {
        (0..=self.n)
            .map(|p| binomial(self.n, p) - self.graded.piece(p).dim())
            .collect()
    }

    pub fn piece(&self, p: usize) -> &Subspace<F> {
        self.graded.piece(p)
    }

    pub fn graded(&self) -> &GradedSubspace<F> {
        &self.graded
    }

    pub fn contains(&self, e: &ExteriorElement<F>) -> Result<bool> {
        self.graded.contains(&self.field, e)
    }

    /// Canonical coset representative: the unique element of e + I supported
    /// on non-pivot (for the full ideal: nbc) monomials.
    pub fn normal_form(&self, e: &ExteriorElement<F>) -> Result<ExteriorElement<F>> {
        let p = e.degree();
        let nf = self.graded.piece(p).normal_form(&self.field, e.coeffs())?;
        ExteriorElement::from_coeffs(self.n, p, nf)
    }

    /// Monomial masks indexing the degree-p quotient basis, in colex order.
    pub fn quotient_basis(&self, p: usize) -> &[Subset] {
        &self.quotient_bases[p]
    }

    /// Coordinates of e + I with respect to `quotient_basis(deg e)`.
    pub fn quotient_coordinates(&self, e: &ExteriorElement<F>) -> Result<Vec<F::Elem>> {
        let nf = self.normal_form(e)?;
        Ok(self.quotient_bases[e.degree()]
            .iter()
            .map(|&s| nf.coeff_of(s).clone())
            .collect())
    }
}

/// Graded dimensions of the OS algebra A(G), length rank+1.  By the
/// nbc-basis theorem these agree with the unsigned Whitney numbers.
pub fn os_dims<F: Field>(m: &Matroid, field: &F) -> Result<Vec<u64>> {
    let ideal = OSIdeal::full(m, field)?;
    let q = ideal.quotient_dims();
    debug_assert!(q.iter().skip(m.rank() + 1).all(|&d| d == 0));
    Ok(q[..=m.rank()].iter().map(|&d| d as u64).collect())
}

/// Graded dimensions of the k-adic closure A_k(G) = E/I_k, length n+1
/// (unlike A itself, A_k can be nonzero above the rank).
pub fn kadic_dims<F: Field>(m: &Matroid, field: &F, k: usize) -> Result<Vec<u64>> {
    let ideal = OSIdeal::kadic(m, field, k)?;
    Ok(ideal.quotient_dims().iter().map(|&d| d as u64).collect())
}

/// Whether A(G) is quadratic, i.e. A_2 = A.
pub fn is_quadratic<F: Field>(m: &Matroid, field: &F) -> Result<bool> {
    if m.rank() < 2 {
        return Ok(true);
    }
    let quad = OSIdeal::kadic(m, field, 2)?;
    let full = OSIdeal::full(m, field)?;
    Ok(quad.dims() == full.dims())
}

/// Whether ∂e_S lies in the k-adic ideal.
pub fn boundary_in_ideal<F: Field>(m: &Matroid, field: &F, s: Subset, k: usize) -> Result<bool> {
    if s == 0 {
        return Err(Error::DegreeZero);
    }
    let ideal = OSIdeal::kadic(m, field, k)?;
    let b = boundary_of_monomial(field, m.n(), s)?;
    ideal.contains(&b)
}

/// φ₃(G): the nullity of the multiplication map E¹ ⊗ I² → E³.  Cross-checked
/// against the closed formula 2·C(n+1,3) − n·w₂ + dim A₂³ (n = ground-set
/// size), which is equivalent via n·C(n,2) = 2·C(n+1,3) + C(n,3).
pub fn phi3<F: Field>(m: &Matroid, field: &F) -> Result<u64> {
    let n = m.n();
    if n < 2 {
        // A simple matroid on fewer than two points has no circuits, so the
        // ideal vanishes and the multiplication map has zero domain.
        return Ok(0);
    }
    let full = OSIdeal::full(m, field)?;
    let i2 = full.piece(2);

    let basis2: Vec<ExteriorElement<F>> = (0..i2.dim())
        .map(|r| ExteriorElement::from_coeffs(n, 2, i2.basis().row(r).to_vec()))
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(n * basis2.len());
    for i in 0..n {
        let ei = ExteriorElement::monomial(field, n, 1 << i)?;
        for b in &basis2 {
            rows.push(ei.wedge(field, b)?.into_coeffs());
        }
    }
    let mat = Matrix::from_rows(binomial(n, 3), rows)?;
    let nullity = n * i2.dim() - mat.rank(field);

    let lattice = FlatLattice::new(m);
    let w2 = lattice.whitney_unsigned().get(2).copied().unwrap_or(0) as i64;
    let i23 = if m.rank() < 2 {
        0
    } else {
        OSIdeal::kadic(m, field, 2)?
            .dims()
            .get(3)
            .copied()
            .unwrap_or(0)
    };
    let a23 = (binomial(n, 3) - i23) as i64;
    let formula = 2 * binomial(n + 1, 3) as i64 - (n as i64) * w2 + a23;
    assert_eq!(
        nullity as i64, formula,
        "phi3: nullity and closed formula disagree"
    );

    Ok(nullity as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::matroid::Matroid;

    fn u23() -> Matroid {
        Matroid::from_circuits(3, vec![0b111], None).unwrap()
    }

    fn u24() -> Matroid {
        Matroid::from_circuits(4, vec![0b0111, 0b1011, 0b1101, 0b1110], None).unwrap()
    }

    fn u34() -> Matroid {
        Matroid::from_circuits(4, vec![0b1111], None).unwrap()
    }

    fn boolean(n: usize) -> Matroid {
        Matroid::from_circuits(n, vec![], None).unwrap()
    }

    fn k4() -> Matroid {
        // edges 0=12, 1=13, 2=14, 3=23, 4=24, 5=34 of the complete graph K4
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
    fn u23_ideal_and_quotient() {
        let q = Rationals;
        let ideal = OSIdeal::full(&u23(), &q).unwrap();
        assert_eq!(ideal.dims(), vec![0, 0, 1, 1]);
        assert_eq!(ideal.quotient_dims(), vec![1, 3, 2, 0]);
        assert_eq!(os_dims(&u23(), &q).unwrap(), vec![1, 3, 2]);
        // nbc monomials in degree 2: broken circuit {1,2} is excluded
        assert_eq!(ideal.quotient_basis(2), &[0b011, 0b101]);
    }

    #[test]
    fn normal_form_rewrites_onto_nbc_monomials() {
        let q = Rationals;
        let ideal = OSIdeal::full(&u23(), &q).unwrap();
        // e_{12} ≡ e_{02} − e_{01} modulo ∂e_{012}
        let e12 = ExteriorElement::monomial(&q, 3, 0b110).unwrap();
        let nf = ideal.normal_form(&e12).unwrap();
        assert_eq!(nf.coeff_of(0b110), &q.zero());
        assert_eq!(nf.coeff_of(0b101), &q.one());
        assert_eq!(nf.coeff_of(0b011), &q.from_i64(-1));
        // and the rewrite is a coset move
        let diff = e12.add(&q, &nf.scale(&q, &q.from_i64(-1))).unwrap();
        assert!(ideal.contains(&diff).unwrap());
    }

    #[test]
    fn os_dims_match_whitney_over_several_fields() {
        let matroids = [u23(), u24(), u34(), boolean(4), k4()];
        for m in &matroids {
            let whitney: Vec<u64> = FlatLattice::new(m).whitney_unsigned();
            assert_eq!(os_dims(m, &Rationals).unwrap(), whitney);
            assert_eq!(os_dims(m, &PrimeField::new(2).unwrap()).unwrap(), whitney);
            assert_eq!(os_dims(m, &PrimeField::new(5).unwrap()).unwrap(), whitney);
        }
        assert_eq!(os_dims(&k4(), &Rationals).unwrap(), vec![1, 6, 11, 6]);
    }

    #[test]
    fn kadic_dims_of_u34() {
        let q = Rationals;
        // A_2(U_{3,4}) = E/(∂e_{0123}·E) has the full exterior dimensions in
        // degrees ≤ 2 and misses the relation only from degree 3 on... the
        // quadratic closure keeps everything: I_2 = 0 since the only circuit
        // has size 4 > 3.
        assert_eq!(kadic_dims(&u34(), &q, 2).unwrap(), vec![1, 4, 6, 4, 1]);
        assert_eq!(kadic_dims(&u34(), &q, 3).unwrap(), vec![1, 4, 6, 3, 0]);
        assert!(matches!(
            kadic_dims(&u34(), &q, 1),
            Err(Error::LevelOutOfRange { given: 1, max: 3 })
        ));
        assert!(matches!(
            kadic_dims(&u34(), &q, 4),
            Err(Error::LevelOutOfRange { given: 4, max: 3 })
        ));
    }

    #[test]
    fn quadraticity() {
        let q = Rationals;
        assert!(is_quadratic(&u23(), &q).unwrap());
        assert!(is_quadratic(&u24(), &q).unwrap());
        assert!(is_quadratic(&boolean(3), &q).unwrap());
        assert!(is_quadratic(&k4(), &q).unwrap());
        assert!(!is_quadratic(&u34(), &q).unwrap());
    }

    #[test]
    fn boundary_membership() {
        let q = Rationals;
        assert!(boundary_in_ideal(&u23(), &q, 0b111, 2).unwrap());
        assert!(!boundary_in_ideal(&u23(), &q, 0b011, 2).unwrap());
        assert!(matches!(
            boundary_in_ideal(&u23(), &q, 0, 2),
            Err(Error::DegreeZero)
        ));
        // ∂e_{0123} ∈ I_3 = I for U_{3,4} but not in I_2 = 0
        assert!(boundary_in_ideal(&u34(), &q, 0b1111, 3).unwrap());
        assert!(!boundary_in_ideal(&u34(), &q, 0b1111, 2).unwrap());
    }

    #[test]
    fn phi3_values() {
        let q = Rationals;
        assert_eq!(phi3(&u23(), &q).unwrap(), 2);
        assert_eq!(phi3(&u24(), &q).unwrap(), 8);
        assert_eq!(phi3(&boolean(3), &q).unwrap(), 0);
        assert_eq!(phi3(&boolean(4), &q).unwrap(), 0);
        assert_eq!(phi3(&boolean(2), &q).unwrap(), 0);
        // field-independence on a non-Boolean example
        assert_eq!(phi3(&u24(), &PrimeField::new(3).unwrap()).unwrap(), 8);
    }

    #[test]
    fn quotient_coordinates_extract_nbc_part() {
        let q = Rationals;
        let ideal = OSIdeal::full(&u23(), &q).unwrap();
        let e12 = ExteriorElement::monomial(&q, 3, 0b110).unwrap();
        let coords = ideal.quotient_coordinates(&e12).unwrap();
        assert_eq!(coords, vec![q.from_i64(-1), q.one()]);
    }
}
