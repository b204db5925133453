//! Homogeneous elements of the exterior algebra `Λ(e_0, ..., e_{n-1})`.
//!
//! A degree-`p` element is a dense coefficient vector over the
//! `binomial(n, p)` standard monomials `e_S`, `|S| = p`, indexed by
//! colex rank. The boundary map `∂` and the wedge product are the two
//! operations everything else is built from.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::subsets::{
    binomial, check_ground_set, colex_rank, shuffle_sign, subsets_of_size, Subset,
};

/// A homogeneous exterior form of fixed degree over a fixed ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorElement<F: Field> {
    n: usize,
    degree: usize,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> ExteriorElement<F> {
    pub fn zero(field: &F, n: usize, degree: usize) -> Result<Self> {
        check_ground_set(n)?;
        if degree > n {
            return Err(Error::DegreeOverflow { degree, n });
        }
        Ok(ExteriorElement {
            n,
            degree,
            coeffs: vec![field.zero(); binomial(n, degree)],
        })
    }

    /// The standard monomial `e_S`.
    pub fn monomial(field: &F, n: usize, mask: Subset) -> Result<Self> {
        let degree = mask.count_ones() as usize;
        let mut e = ExteriorElement::zero(field, n, degree)?;
        e.coeffs[colex_rank(mask)] = field.one();
        Ok(e)
    }

    pub fn from_coeffs(n: usize, degree: usize, coeffs: Vec<F::Elem>) -> Result<Self> {
        check_ground_set(n)?;
        if degree > n || coeffs.len() != binomial(n, degree) {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for degree {degree} over {n} points",
                coeffs.len()
            )));
        }
        Ok(ExteriorElement { n, degree, coeffs })
    }

    pub fn ground_set_size(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn coeff_of(&self, mask: Subset) -> &F::Elem {
        &self.coeffs[colex_rank(mask)]
    }

    pub fn is_zero(&self, field: &F) -> bool {
        self.coeffs.iter().all(|c| field.is_zero(c))
    }

    pub fn add(&self, field: &F, other: &Self) -> Result<Self> {
        self.compatible(other, true)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| field.add(a, b))
            .collect();
        Ok(ExteriorElement {
            n: self.n,
            degree: self.degree,
            coeffs,
        })
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        ExteriorElement {
            n: self.n,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| field.mul(a, c)).collect(),
        }
    }

    fn compatible(&self, other: &Self, same_degree: bool) -> Result<()> {
        if self.n != other.n {
            return Err(Error::MixedAmbient(self.n, other.n));
        }
        if same_degree && self.degree != other.degree {
            return Err(Error::DimensionMismatch(format!(
                "degrees {} and {}",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    /// Exterior product. Monomial pairs with overlapping support vanish;
    /// disjoint pairs contribute with the shuffle sign.
    pub fn wedge(&self, field: &F, other: &Self) -> Result<Self> {
        self.compatible(other, false)?;
        let degree = self.degree + other.degree;
        if degree > self.n {
            return Err(Error::DegreeOverflow { degree, n: self.n });
        }
        let mut out = ExteriorElement::zero(field, self.n, degree)?;
        let left_masks = subsets_of_size(self.n, self.degree);
        let right_masks = subsets_of_size(self.n, other.degree);
        for (i, &a) in left_masks.iter().enumerate() {
            if field.is_zero(&self.coeffs[i]) {
                continue;
            }
            for (j, &b) in right_masks.iter().enumerate() {
                if a & b != 0 || field.is_zero(&other.coeffs[j]) {
                    continue;
                }
                let term = field.mul(&self.coeffs[i], &other.coeffs[j]);
                let term = if shuffle_sign(a, b) < 0 {
                    field.neg(&term)
                } else {
                    term
                };
                let idx = colex_rank(a | b);
                out.coeffs[idx] = field.add(&out.coeffs[idx], &term);
            }
        }
        Ok(out)
    }

    /// The boundary `∂ e_S = Σ_k (-1)^(k-1) e_(S \ s_k)` with
    /// `s_1 < s_2 < ...`, extended linearly.
    pub fn boundary(&self, field: &F) -> Result<Self> {
        if self.degree == 0 {
            return Err(Error::DegreeZero);
        }
        let mut out = ExteriorElement::zero(field, self.n, self.degree - 1)?;
        let masks = subsets_of_size(self.n, self.degree);
        for (i, &mask) in masks.iter().enumerate() {
            if field.is_zero(&self.coeffs[i]) {
                continue;
            }
            let mut sign_neg = false;
            let mut rest = mask;
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                let idx = colex_rank(mask & !low);
                let term = if sign_neg {
                    field.neg(&self.coeffs[i])
                } else {
                    self.coeffs[i].clone()
                };
                out.coeffs[idx] = field.add(&out.coeffs[idx], &term);
                sign_neg = !sign_neg;
                rest &= !low;
            }
        }
        Ok(out)
    }

    /// Nonzero terms as `(mask, coefficient)` pairs, colex order.
    pub fn terms<'a>(&'a self, field: &'a F) -> impl Iterator<Item = (Subset, &'a F::Elem)> + 'a {
        let masks = subsets_of_size(self.n, self.degree);
        masks
            .into_iter()
            .zip(self.coeffs.iter())
            .filter(move |(_, c)| !field.is_zero(c))
    }
}

/// `∂ e_C` for a single monomial, a convenience for ideal generators.
pub fn boundary_of_monomial<F: Field>(
    field: &F,
    n: usize,
    mask: Subset,
) -> Result<ExteriorElement<F>> {
    ExteriorElement::monomial(field, n, mask)?.boundary(field)
}
