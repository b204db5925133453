//! Affine OS algebras of pointed matroids.
//!
//! For a pointed matroid dG with base point b, the affine algebra A_d(dG) is
//! the subalgebra of A(G) generated by the differences a_i − a_b.  Its graded
//! pieces are computed as normal-form subspaces inside the exterior
//! coordinates, so subalgebras for different base points (which coincide as
//! subsets of A(G)) compare by subspace equality.

use super::OSIdeal;
use crate::error::{Error, Result};
use crate::exterior::ExteriorElement;
use crate::field::Field;
use crate::linalg::Subspace;
use crate::matroid::PointedMatroid;
use crate::subsets::{binomial, elements, subsets_of_size};

pub struct AffineOSAlgebra<F: Field> {
    field: F,
    n: usize,
    rank: usize,
    base: usize,
    pieces: Vec<Subspace<F>>,
    dims: Vec<u64>,
}

impl<F: Field> AffineOSAlgebra<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ground_set_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// Graded dimensions, length rank (the top degree is rank−1).
    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    /// The degree-p piece as a subspace of E^p in normal-form coordinates,
    /// 0 ≤ p ≤ rank.
    pub fn piece(&self, p: usize) -> &Subspace<F> {
        &self.pieces[p]
    }
}

/// Compute A_d(dG) together with the Poincaré-polynomial factorization check
/// Poin(A, t) = (1 + t) · Poin(A_d, t).
pub fn affine_os<F: Field>(dm: &PointedMatroid, field: &F) -> Result<AffineOSAlgebra<F>> {
    let m = dm.matroid();
    let n = m.n();
    let rank = m.rank();
    let base = dm.base();
    let ideal = OSIdeal::full(m, field)?;

    let others: Vec<usize> = (0..n).filter(|&i| i != base).collect();
    let e_base = ExteriorElement::monomial(field, n, 1 << base)?;
    let gens: Vec<ExteriorElement<F>> = others
        .iter()
        .map(|&i| {
            let ei = ExteriorElement::monomial(field, n, 1 << i)?;
            ei.add(field, &e_base.scale(field, &field.from_i64(-1)))
        })
        .collect::<Result<_>>()?;

    let mut pieces = Vec::with_capacity(rank + 1);
    for p in 0..=rank {
        let mut rows = Vec::new();
        for t in subsets_of_size(others.len(), p) {
            let mut prod = ExteriorElement::monomial(field, n, 0)?;
            for j in elements(t) {
                prod = prod.wedge(field, &gens[j])?;
            }
            rows.push(ideal.normal_form(&prod)?.into_coeffs());
        }
        pieces.push(Subspace::from_rows(field, binomial(n, p), rows)?);
    }

    let full_dims = ideal.quotient_dims();
    for p in 0..=rank {
        let lower = if p == 0 { 0 } else { pieces[p - 1].dim() };
        assert_eq!(
            lower + pieces[p].dim(),
            full_dims[p],
            "affine OS: Poincaré factorization fails in degree {p}"
        );
    }
    assert_eq!(pieces[rank].dim(), 0, "affine OS: nonzero top piece");

    let dims = pieces[..rank].iter().map(|s| s.dim() as u64).collect();
    Ok(AffineOSAlgebra {
        field: field.clone(),
        n,
        rank,
        base,
        pieces,
        dims,
    })
}

/// Graded dimensions of A_d(dG₀) ⊗ A_d(dG₁); by the parallel-connection
/// theorem these are the affine dimensions of A_d(P_d(dG₀, dG₁)).
pub fn tensor_dims<F: Field>(a: &AffineOSAlgebra<F>, b: &AffineOSAlgebra<F>) -> Result<Vec<u64>> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(a.field.name(), b.field.name()));
    }
    let mut out = vec![0u64; a.dims.len() + b.dims.len() - 1];
    for (i, &x) in a.dims.iter().enumerate() {
        for (j, &y) in b.dims.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::matroid::{cone, parallel_connection, Matroid};

    fn u23() -> Matroid {
        Matroid::from_circuits(3, vec![0b111], None).unwrap()
    }

    #[test]
    fn cone_affine_algebra_recovers_the_base_matroid() {
        let q = Rationals;
        let c = cone(&u23()).unwrap();
        let a = affine_os(&c, &q).unwrap();
        assert_eq!(a.dims(), &[1, 3, 2]);
    }

    #[test]
    fn base_point_choice_does_not_change_the_subalgebra() {
        let q = Rationals;
        let c = cone(&u23()).unwrap();
        let a0 = affine_os(&c, &q).unwrap();
        for b in 1..4 {
            let alt = PointedMatroid::new(c.matroid().clone(), b).unwrap();
            let ab = affine_os(&alt, &q).unwrap();
            assert_eq!(a0.dims(), ab.dims());
            for p in 0..=a0.rank() {
                assert_eq!(a0.piece(p), ab.piece(p), "degree {p} subspaces differ");
            }
        }
    }

    #[test]
    fn parallel_connection_tensor_decomposition() {
        let q = Rationals;
        let c = cone(&u23()).unwrap();
        let p = parallel_connection(&c, &c).unwrap();
        let joint = affine_os(&p, &q).unwrap();
        assert_eq!(joint.dims(), &[1, 6, 13, 12, 4]);
        let factor = affine_os(&c, &q).unwrap();
        assert_eq!(
            tensor_dims(&factor, &factor).unwrap(),
            vec![1, 6, 13, 12, 4]
        );
    }

    #[test]
    fn tensor_requires_matching_fields() {
        let c = cone(&u23()).unwrap();
        let a2 = affine_os(&c, &PrimeField::new(2).unwrap()).unwrap();
        let a3 = affine_os(&c, &PrimeField::new(3).unwrap()).unwrap();
        assert!(matches!(
            tensor_dims(&a2, &a3),
            Err(Error::FieldMismatch(_, _))
        ));
        assert_eq!(tensor_dims(&a2, &a2).unwrap(), vec![1, 6, 13, 12, 4]);
    }
}
