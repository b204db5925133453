//! Dense exact linear algebra over a [`Field`].
//!
//! Echelon forms use the *trailing-pivot* convention: columns are
//! processed from the last (colex-largest) index down, so each pivot is
//! the rightmost nonzero entry of its row. The reduced form is still
//! canonical for the row space; choosing the trailing convention makes
//! the non-pivot columns of an Orlik-Solomon ideal's echelon basis line
//! up with the no-broken-circuit monomials.

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense row-major matrix with entries in `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {} columns",
                    r.len(),
                    cols
                )));
            }
        }
        let n_rows = rows.len();
        let data = rows.into_iter().flatten().collect();
        Ok(Matrix {
            rows: n_rows,
            cols,
            data,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self, field: &F) -> Self {
        let mut t = Matrix::zero(field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix<F>) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix<F>) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(Matrix {
            rows: self.rows,
            cols,
            data,
        })
    }

    pub fn mul(&self, field: &F, other: &Matrix<F>) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if field.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let v = field.add(out.at(r, c), &field.mul(a, other.at(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Adds `coeff * other` entrywise.
    pub fn scaled_add(&self, field: &F, coeff: &F::Elem, other: &Matrix<F>) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(
                "scaled_add shape mismatch".to_string(),
            ));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| field.add(a, &field.mul(coeff, b)))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, field: &F, r: usize, c: &F::Elem) {
        for j in 0..self.cols {
            let v = field.mul(self.at(r, j), c);
            self.set(r, j, v);
        }
    }

    /// `row[r] -= coeff * row[src]`.
    fn row_sub_scaled(&mut self, field: &F, r: usize, src: usize, coeff: &F::Elem) {
        for j in 0..self.cols {
            let v = field.mul_sub(self.at(r, j), coeff, self.at(src, j));
            self.set(r, j, v);
        }
    }

    /// In-place reduced row echelon form with trailing pivots. Returns
    /// the pivot columns in decreasing order; rows below `pivots.len()`
    /// are zero afterwards.
    pub fn rref(&mut self, field: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for col in (0..self.cols).rev() {
            if next == self.rows {
                break;
            }
            let Some(r) = (next..self.rows).find(|&r| !field.is_zero(self.at(r, col))) else {
                continue;
            };
            self.swap_rows(next, r);
            let inv = field
                .inv(self.at(next, col))
                .expect("pivot entry is nonzero");
            self.scale_row(field, next, &inv);
            for r2 in 0..self.rows {
                if r2 != next && !field.is_zero(self.at(r2, col)) {
                    let c = self.at(r2, col).clone();
                    self.row_sub_scaled(field, r2, next, &c);
                }
            }
            pivots.push(col);
            next += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &F) -> usize {
        let mut m = self.clone();
        m.rref(field).len()
    }

    /// Canonical basis of `{ x : x * self = 0 }`, the left kernel.
    ///
    /// Works on the augmented block `[I | M]`: the identity occupies the
    /// low columns, so trailing-pivot elimination clears the `M` block
    /// first and the kernel rows are exactly those whose `M` part ends
    /// up zero.
    pub fn left_kernel(&self, field: &F) -> Matrix<F> {
        let id = Matrix::identity(field, self.rows);
        let mut aug = id.hstack(self).expect("rows match by construction");
        aug.rref(field);
        let mut kernel_rows = Vec::new();
        for r in 0..aug.rows {
            let m_part_zero = (self.rows..aug.cols).all(|c| field.is_zero(aug.at(r, c)));
            let i_part_nonzero = (0..self.rows).any(|c| !field.is_zero(aug.at(r, c)));
            if m_part_zero && i_part_nonzero {
                kernel_rows.push(aug.row(r)[..self.rows].to_vec());
            }
        }
        Matrix::from_rows(self.rows, kernel_rows).expect("kernel rows have fixed width")
    }

    /// Canonical basis of `{ x : self * x = 0 }`, as rows of the result.
    pub fn right_kernel(&self, field: &F) -> Matrix<F> {
        self.transpose(field).left_kernel(field)
    }

    pub fn render(&self, field: &F) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|e| field.render(e)).collect())
            .collect()
    }
}

/// A linear subspace of `F^ambient`, stored as a canonical echelon
/// basis. Two subspaces are equal iff their stored matrices are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(field: &F, ambient: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let mut m = Matrix::from_rows(ambient, rows)?;
        let pivots = m.rref(field);
        let kept = m.rows_vec().into_iter().take(pivots.len()).collect();
        let basis = Matrix::from_rows(ambient, kept)?;
        Ok(Subspace {
            ambient,
            basis,
            pivots,
        })
    }

    pub fn from_matrix(field: &F, m: &Matrix<F>) -> Self {
        Subspace::from_rows(field, m.n_cols(), m.rows_vec()).expect("rows match matrix width")
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Subspace::from_matrix(field, &Matrix::identity(field, ambient))
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Pivot coordinates of the canonical basis, in decreasing order.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    /// Reduces `v` modulo the subspace: subtracts the unique combination
    /// of basis rows matching `v` on the pivot coordinates. The result
    /// vanishes on every pivot coordinate, and is zero iff `v` lies in
    /// the subspace; it is the canonical representative of `v`'s coset.
    pub fn normal_form(&self, field: &F, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if field.is_zero(&out[p]) {
                continue;
            }
            let c = out[p].clone();
            for (j, o) in out.iter_mut().enumerate() {
                *o = field.mul_sub(o, &c, self.basis.at(i, j));
            }
        }
        Ok(out)
    }

    pub fn contains(&self, field: &F, v: &[F::Elem]) -> Result<bool> {
        Ok(self.normal_form(field, v)?.iter().all(|e| field.is_zero(e)))
    }

    pub fn contains_subspace(&self, field: &F, other: &Subspace<F>) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::MixedAmbient(self.ambient, other.ambient));
        }
        for r in 0..other.basis.n_rows() {
            if !self.contains(field, other.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, field: &F, other: &Subspace<F>) -> Result<Subspace<F>> {
        if self.ambient != other.ambient {
            return Err(Error::MixedAmbient(self.ambient, other.ambient));
        }
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Subspace::from_matrix(field, &stacked))
    }

    /// Intersection via the kernel of the stacked system: a left-kernel
    /// row `(u | v)` of `[A; B]` satisfies `u A = -v B`, and those
    /// products sweep out exactly the intersection.
    pub fn intersect(&self, field: &F, other: &Subspace<F>) -> Result<Subspace<F>> {
        if self.ambient != other.ambient {
            return Err(Error::MixedAmbient(self.ambient, other.ambient));
        }
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(field, self.ambient));
        }
        let stacked = self.basis.vstack(&other.basis)?;
        let kernel = stacked.left_kernel(field);
        let a_rows = self.basis.n_rows();
        let mut rows = Vec::new();
        for r in 0..kernel.n_rows() {
            let u = &kernel.row(r)[..a_rows];
            let mut vec = vec![field.zero(); self.ambient];
            for (i, coeff) in u.iter().enumerate() {
                if field.is_zero(coeff) {
                    continue;
                }
                for (j, slot) in vec.iter_mut().enumerate() {
                    *slot = field.add(slot, &field.mul(coeff, self.basis.at(i, j)));
                }
            }
            rows.push(vec);
        }
        Subspace::from_rows(field, self.ambient, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn qv(vals: &[i64]) -> Vec<BigRational> {
        let q = Rationals;
        vals.iter().map(|&v| q.from_i64(v)).collect()
    }

    #[test]
    fn rref_trailing_pivots() {
        let q = Rationals;
        let mut m = Matrix::from_rows(3, vec![qv(&[1, 1, 0]), qv(&[0, 1, 1])]).unwrap();
        let pivots = m.rref(&q);
        // Rightmost nonzero entries become pivots: columns 2 then 1.
        assert_eq!(pivots, vec![2, 1]);
        assert_eq!(m.row(0), &qv(&[-1, 0, 1])[..]);
        assert_eq!(m.row(1), &qv(&[1, 1, 0])[..]);
    }

    #[test]
    fn rref_is_canonical_for_row_space() {
        let q = Rationals;
        let a = Subspace::from_rows(&q, 4, vec![qv(&[1, 2, 3, 4]), qv(&[0, 1, 1, 0])]).unwrap();
        let b = Subspace::from_rows(
            &q,
            4,
            vec![qv(&[1, 3, 4, 4]), qv(&[2, 5, 7, 8]), qv(&[1, 2, 3, 4])],
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn left_kernel_annihilates() {
        let q = Rationals;
        let m =
            Matrix::from_rows(2, vec![qv(&[1, 0]), qv(&[0, 1]), qv(&[1, 1]), qv(&[2, 3])]).unwrap();
        let k = m.left_kernel(&q);
        assert_eq!(k.n_rows(), 2);
        let prod = k.mul(&q, &m).unwrap();
        assert!(prod.rows_vec().iter().flatten().all(|e| q.is_zero(e)));
        // Kernel of a full-row-rank matrix is empty.
        let id = Matrix::identity(&q, 3);
        assert_eq!(id.left_kernel(&q).n_rows(), 0);
    }

    #[test]
    fn subspace_sum_and_intersection_dims() {
        let f = PrimeField::new(5).unwrap();
        let mk = |rows: Vec<Vec<i64>>| {
            Subspace::from_rows(
                &f,
                4,
                rows.into_iter()
                    .map(|r| r.into_iter().map(|v| f.from_i64(v)).collect())
                    .collect(),
            )
            .unwrap()
        };
        let a = mk(vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        let b = mk(vec![vec![0, 1, 0, 0], vec![0, 0, 1, 0]]);
        let s = a.sum(&f, &b).unwrap();
        let i = a.intersect(&f, &b).unwrap();
        assert_eq!(s.dim(), 3);
        assert_eq!(i.dim(), 1);
        // dim(A) + dim(B) = dim(A+B) + dim(A∩B).
        assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
        assert!(a
            .contains(&f, &[f.from_i64(3), f.from_i64(-2), f.zero(), f.zero()])
            .unwrap());
        assert!(s.contains_subspace(&f, &i).unwrap());
    }

    #[test]
    fn intersection_is_contained_in_both() {
        let q = Rationals;
        let a = Subspace::from_rows(&q, 3, vec![qv(&[1, 1, 0]), qv(&[0, 0, 1])]).unwrap();
        let b = Subspace::from_rows(&q, 3, vec![qv(&[1, 1, 1]), qv(&[1, 1, -1])]).unwrap();
        let i = a.intersect(&q, &b).unwrap();
        assert_eq!(i.dim(), 2);
        assert!(a.contains_subspace(&q, &i).unwrap());
        assert!(b.contains_subspace(&q, &i).unwrap());
    }

    #[test]
    fn normal_form_kills_pivot_coordinates() {
        let q = Rationals;
        let s = Subspace::from_rows(&q, 3, vec![qv(&[1, 1, 0]), qv(&[0, 1, 1])]).unwrap();
        let nf = s.normal_form(&q, &qv(&[5, 7, 11])).unwrap();
        for &p in s.pivots() {
            assert!(q.is_zero(&nf[p]));
        }
        // v - nf(v) must lie in the subspace.
        let diff: Vec<_> = qv(&[5, 7, 11])
            .iter()
            .zip(&nf)
            .map(|(a, b)| q.sub(a, b))
            .collect();
        assert!(s.contains(&q, &diff).unwrap());
        assert!(!s.contains(&q, &qv(&[5, 7, 11])).unwrap());
    }

    #[test]
    fn right_kernel_solves_system() {
        let q = Rationals;
        let m = Matrix::from_rows(3, vec![qv(&[1, 1, 1])]).unwrap();
        let k = m.right_kernel(&q);
        assert_eq!(k.n_rows(), 2);
        for r in 0..k.n_rows() {
            let prod = m.mul(&q, &k.transpose(&q)).unwrap();
            assert!(q.is_zero(prod.at(0, r)));
        }
    }
}
