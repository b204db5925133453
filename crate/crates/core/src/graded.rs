//! Graded subspaces of the exterior algebra: one canonical echelon
//! basis per degree.

use crate::error::{Error, Result};
use crate::exterior::ExteriorElement;
use crate::field::Field;
use crate::linalg::Subspace;
use crate::subsets::{binomial, check_ground_set};

/// A degree-indexed family of subspaces `V^p ⊆ ℰ^p`, `0 ≤ p ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace<F: Field> {
    n: usize,
    by_degree: Vec<Subspace<F>>,
}

impl<F: Field> GradedSubspace<F> {
    pub fn zero(field: &F, n: usize) -> Result<Self> {
        check_ground_set(n)?;
        let by_degree = (0..=n)
            .map(|p| Subspace::zero(field, binomial(n, p)))
            .collect();
        Ok(GradedSubspace { n, by_degree })
    }

    /// Spans the given homogeneous elements, grouped by their degrees.
    pub fn span(field: &F, n: usize, elements: &[ExteriorElement<F>]) -> Result<Self> {
        check_ground_set(n)?;
        let mut rows: Vec<Vec<Vec<F::Elem>>> = (0..=n).map(|_| Vec::new()).collect();
        for e in elements {
            if e.ground_set_size() != n {
                return Err(Error::MixedAmbient(n, e.ground_set_size()));
            }
            rows[e.degree()].push(e.coeffs().to_vec());
        }
        let by_degree = rows
            .into_iter()
            .enumerate()
            .map(|(p, r)| Subspace::from_rows(field, binomial(n, p), r))
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedSubspace { n, by_degree })
    }

    pub fn from_pieces(n: usize, by_degree: Vec<Subspace<F>>) -> Result<Self> {
        check_ground_set(n)?;
        if by_degree.len() != n + 1 {
            return Err(Error::DimensionMismatch(format!(
                "{} graded pieces for ground set of {} elements",
                by_degree.len(),
                n
            )));
        }
        for (p, s) in by_degree.iter().enumerate() {
            if s.ambient() != binomial(n, p) {
                return Err(Error::DimensionMismatch(format!(
                    "degree-{p} piece has ambient {} instead of binomial({n},{p})",
                    s.ambient()
                )));
            }
        }
        Ok(GradedSubspace { n, by_degree })
    }

    pub fn ground_set_size(&self) -> usize {
        self.n
    }

    pub fn piece(&self, p: usize) -> &Subspace<F> {
        &self.by_degree[p]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.by_degree.iter().map(|s| s.dim()).collect()
    }

    pub fn sum(&self, field: &F, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.sum(field, b))
    }

    pub fn intersect(&self, field: &F, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.intersect(field, b))
    }

    fn zip_with(
        &self,
        other: &Self,
        mut op: impl FnMut(&Subspace<F>, &Subspace<F>) -> Result<Subspace<F>>,
    ) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::MixedAmbient(self.n, other.n));
        }
        let by_degree = self
            .by_degree
            .iter()
            .zip(&other.by_degree)
            .map(|(a, b)| op(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedSubspace {
            n: self.n,
            by_degree,
        })
    }

    pub fn contains(&self, field: &F, e: &ExteriorElement<F>) -> Result<bool> {
        if e.ground_set_size() != self.n {
            return Err(Error::MixedAmbient(self.n, e.ground_set_size()));
        }
        self.by_degree[e.degree()].contains(field, e.coeffs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::subsets::mask_from_elements;

    #[test]
    fn span_groups_by_degree() {
        let q = Rationals;
        let n = 3;
        let e01 = ExteriorElement::monomial(&q, n, 0b011).unwrap();
        let e0 = ExteriorElement::monomial(&q, n, 0b001).unwrap();
        let e1 = ExteriorElement::monomial(&q, n, 0b010).unwrap();
        let sum = e0.add(&q, &e1).unwrap();
        let g = GradedSubspace::span(&q, n, &[e01.clone(), e0, sum]).unwrap();
        assert_eq!(g.dims(), vec![0, 2, 1, 0]);
        assert!(g.contains(&q, &e01).unwrap());
        assert!(!g
            .contains(&q, &ExteriorElement::monomial(&q, n, 0b100).unwrap())
            .unwrap());
    }

    #[test]
    fn boundary_span_example() {
        let q = Rationals;
        let mask = mask_from_elements(&[0, 1, 2], 3).unwrap();
        let de = crate::exterior::boundary_of_monomial(&q, 3, mask).unwrap();
        let g = GradedSubspace::span(&q, 3, &[de]).unwrap();
        assert_eq!(g.dims(), vec![0, 0, 1, 0]);
    }

    #[test]
    fn sum_and_intersection_respect_grading() {
        let q = Rationals;
        let a = GradedSubspace::span(&q, 3, &[ExteriorElement::monomial(&q, 3, 0b001).unwrap()])
            .unwrap();
        let b = GradedSubspace::span(&q, 3, &[ExteriorElement::monomial(&q, 3, 0b010).unwrap()])
            .unwrap();
        let s = a.sum(&q, &b).unwrap();
        let i = a.intersect(&q, &b).unwrap();
        assert_eq!(s.dims()[1], 2);
        assert_eq!(i.dims()[1], 0);
        assert_eq!(a.sum(&q, &a).unwrap(), a);
        assert_eq!(a.intersect(&q, &a).unwrap(), a);
    }
}
