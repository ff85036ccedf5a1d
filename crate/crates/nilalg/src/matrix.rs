//! Small exact matrices over a field-like entry type.
//!
//! Used with [`Scalar`] entries (subspaces, derivation systems, classifier
//! linear algebra) and with [`RationalFunction`] entries (parametrized bases,
//! adjugate inverses of symbolic basis changes).

use crate::scalar::Scalar;
use crate::symbolic::RationalFunction;

/// Exact field operations, enough for Gaussian elimination.
pub trait FieldEntry: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Divide; caller guarantees the divisor is nonzero.
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl FieldEntry for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Scalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Scalar::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Scalar::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        Scalar::div(self, o).expect("nonzero divisor")
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
}

impl FieldEntry for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RationalFunction::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RationalFunction::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RationalFunction::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        RationalFunction::div(self, o).expect("nonzero divisor")
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F: FieldEntry> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: FieldEntry> Matrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for k in 0..n {
            *m.at_mut(k, k) = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut F {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<F> {
        self.row(r).to_vec()
    }

    pub fn rows_vec(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row_vec(r)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *m.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        m
    }

    pub fn mul_mat(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.rows);
        let mut m = Matrix::zero(self.rows, o.cols);
        for r in 0..self.rows {
            for c in 0..o.cols {
                let mut acc = F::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(r, k).mul(o.at(k, c)));
                }
                *m.at_mut(r, c) = acc;
            }
        }
        m
    }

    /// Row-reduce in place to reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let mut pivot = None;
            for r in row..self.rows {
                if !self.at(r, col).is_zero() {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            self.swap_rows(row, p);
            let inv_lead = F::one().div(self.at(row, col));
            for c in col..self.cols {
                let v = self.at(row, c).mul(&inv_lead);
                *self.at_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for c in col..self.cols {
                        let v = self.at(r, c).sub(&factor.mul(self.at(row, c)));
                        *self.at_mut(r, c) = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel {x : M x = 0}, each of length `cols`.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<usize> = pivots.clone();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (prow, pcol) in pivot_set.iter().enumerate() {
                // x_pcol = -m[prow][free]
                v[*pcol] = m.at(prow, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve M x = b; None when inconsistent. Free variables are set to 0.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols) = b[r].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (prow, pcol) in pivots.iter().enumerate() {
            x[*pcol] = aug.at(prow, self.cols).clone();
        }
        Some(x)
    }

    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for col in 0..n {
            let mut pivot = None;
            for r in col..n {
                if !m.at(r, col).is_zero() {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(p) = pivot else { return F::zero() };
            if p != col {
                m.swap_rows(col, p);
                det = det.neg();
            }
            let lead = m.at(col, col).clone();
            det = det.mul(&lead);
            for r in (col + 1)..n {
                if !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).div(&lead);
                    for c in col..n {
                        let v = m.at(r, c).sub(&factor.mul(m.at(col, c)));
                        *m.at_mut(r, c) = v;
                    }
                }
            }
        }
        det
    }

    /// Inverse via Gauss-Jordan; None when singular.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, n + r) = F::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(k, &p)| p != k) {
            return None;
        }
        let mut inv = Matrix::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                *inv.at_mut(r, c) = aug.at(r, n + c).clone();
            }
        }
        Some(inv)
    }
}

/// Row-span comparison helper: canonical RREF of the row span.
pub fn row_space_rref<F: FieldEntry>(rows: Vec<Vec<F>>) -> Vec<Vec<F>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let mut m = Matrix::from_rows(rows);
    m.rref();
    (0..m.rows)
        .map(|r| m.row_vec(r))
        .filter(|row| row.iter().any(|e| !e.is_zero()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(vec![
            vec![s(1), s(2), s(0)],
            vec![s(0), s(1), s(3)],
            vec![s(1), s(0), s(1)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul_mat(&inv), Matrix::identity(3));
    }

    #[test]
    fn kernel_and_rank() {
        let m = Matrix::from_rows(vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
        ]);
        assert_eq!(m.rank(), 1);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in ker {
            let mut acc = Scalar::zero();
            for (c, x) in v.iter().enumerate() {
                acc = acc.add(&m.at(0, c).mul(x));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn det_matches_singularity() {
        let m = Matrix::from_rows(vec![
            vec![s(1), s(2)],
            vec![s(2), s(4)],
        ]);
        assert!(m.det().is_zero());
        let m2 = Matrix::from_rows(vec![
            vec![s(0), s(1)],
            vec![s(1), s(0)],
        ]);
        assert_eq!(m2.det(), s(-1));
    }
}
