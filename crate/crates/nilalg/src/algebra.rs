//! Structure-constant algebras, basis changes, subspaces and series.
//!
//! An [`Algebra`] stores its table c_{ij}^k with rational-function entries so
//! parametric families (entries in `alpha`) and deformation computations
//! (entries in `t`) share one code path. Fully instantiated algebras expose a
//! scalar table for the hot paths in classification and invariants.

use crate::matrix::{row_space_rref, FieldEntry, Matrix};
use crate::scalar::Scalar;
use crate::symbolic::{RationalFunction, Var};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("table index out of range: ({0},{1},{2})")]
    IndexOutOfRange(usize, usize, usize),
    #[error("basis change is singular")]
    SingularBasisChange,
    #[error("operation requires scalar (fully instantiated) entries")]
    NotScalar,
    #[error("dimension mismatch")]
    DimensionMismatch,
}

/// Finite-dimensional algebra given by structure constants e_i e_j = Σ c_{ij}^k e_k.
#[derive(Debug, Clone, PartialEq)]
pub struct Algebra {
    dim: usize,
    params: Vec<Var>,
    /// c[i][j][k], zero-based indices.
    table: Vec<Vec<Vec<RationalFunction>>>,
}

impl Algebra {
    pub fn zero_algebra(dim: usize) -> Algebra {
        Algebra {
            dim,
            params: Vec::new(),
            table: vec![vec![vec![RationalFunction::zero(); dim]; dim]; dim],
        }
    }

    /// Build from (i, j, k, c) entries with 1-based indices; omitted are zero.
    pub fn from_entries(
        dim: usize,
        params: Vec<Var>,
        entries: &[(usize, usize, usize, RationalFunction)],
    ) -> Result<Algebra, AlgebraError> {
        let mut a = Algebra::zero_algebra(dim);
        a.params = params;
        for (i, j, k, c) in entries {
            if *i < 1 || *i > dim || *j < 1 || *j > dim || *k < 1 || *k > dim {
                return Err(AlgebraError::IndexOutOfRange(*i, *j, *k));
            }
            a.table[i - 1][j - 1][k - 1] = c.clone();
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &[Var] {
        &self.params
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> &RationalFunction {
        &self.table[i][j][k]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, k: usize, v: RationalFunction) {
        self.table[i][j][k] = v;
    }

    /// Nonzero entries as 1-based (i, j, k, c), sorted.
    pub fn entries(&self) -> Vec<(usize, usize, usize, RationalFunction)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if !self.table[i][j][k].is_zero() {
                        out.push((i + 1, j + 1, k + 1, self.table[i][j][k].clone()));
                    }
                }
            }
        }
        out
    }

    /// True when every entry is a scalar constant.
    pub fn is_scalar(&self) -> bool {
        self.table
            .iter()
            .flatten()
            .flatten()
            .all(|c| c.as_scalar().is_some())
    }

    /// The scalar table; error when entries still carry variables.
    pub fn scalar_table(&self) -> Result<ScalarAlgebra, AlgebraError> {
        let mut c = vec![vec![vec![Scalar::zero(); self.dim]; self.dim]; self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    c[i][j][k] = self.table[i][j][k]
                        .as_scalar()
                        .ok_or(AlgebraError::NotScalar)?;
                }
            }
        }
        Ok(ScalarAlgebra { dim: self.dim, c })
    }

    /// Substitute a value (or rational function) for a parameter.
    pub fn substitute_param(&self, v: Var, value: &RationalFunction) -> Algebra {
        let mut out = self.clone();
        // A reparametrization like α ↦ 1/α keeps α a parameter.
        if !value.support_vars().contains(&v) {
            out.params.retain(|p| *p != v);
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    out.table[i][j][k] =
                        self.table[i][j][k].substitute_rf(&[(v, value.clone())]);
                }
            }
        }
        out
    }

    pub fn instantiate_param(&self, v: Var, value: &Scalar) -> Algebra {
        self.substitute_param(v, &RationalFunction::from_scalar(value.clone()))
    }

    /// Bilinear product of coordinate vectors over any field entry type.
    pub fn multiply_generic<F: FieldEntry>(
        &self,
        lift: &dyn Fn(&RationalFunction) -> F,
        u: &[F],
        v: &[F],
    ) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let uv = u[i].mul(&v[j]);
                for k in 0..self.dim {
                    let c = &self.table[i][j][k];
                    if !c.is_zero() {
                        out[k] = out[k].add(&lift(c).mul(&uv));
                    }
                }
            }
        }
        out
    }

    /// Product of two vectors with rational-function coordinates.
    pub fn multiply_rf(&self, u: &[RationalFunction], v: &[RationalFunction]) -> Vec<RationalFunction> {
        self.multiply_generic(&|c: &RationalFunction| c.clone(), u, v)
    }

    /// Structure constants in the new basis f_i = Σ_j B_{ij} e_j.
    ///
    /// `basis` rows are the new basis vectors in the old coordinates. This is
    /// the same action as g∗μ = gμ(g⁻¹ ⊗ g⁻¹) with g the inverse transpose.
    pub fn transform_rf(&self, basis: &Matrix<RationalFunction>) -> Result<Algebra, AlgebraError> {
        if basis.rows != self.dim || basis.cols != self.dim {
            return Err(AlgebraError::DimensionMismatch);
        }
        let inv = basis.inverse().ok_or(AlgebraError::SingularBasisChange)?;
        let mut out = Algebra::zero_algebra(self.dim);
        out.params = self.params.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let prod = self.multiply_rf(basis.row(i), basis.row(j));
                // coefficients x with x · B = prod, i.e. x = prod · B⁻¹
                for k in 0..self.dim {
                    let mut acc = RationalFunction::zero();
                    for l in 0..self.dim {
                        acc = acc.add(&prod[l].mul(inv.at(l, k)));
                    }
                    out.table[i][j][k] = acc;
                }
            }
        }
        Ok(out)
    }

    /// Symmetrized product x·y = ½(xy + yx).
    pub fn plus_algebra(&self) -> Algebra {
        let mut out = Algebra::zero_algebra(self.dim);
        out.params = self.params.clone();
        let half = RationalFunction::from_scalar(Scalar::from_fraction(1, 2));
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    out.table[i][j][k] = self.table[i][j][k]
                        .add(&self.table[j][i][k])
                        .mul(&half);
                }
            }
        }
        out
    }

    /// Opposite-symmetrization check: commutative iff c_{ij} = c_{ji}.
    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if self.table[i][j][k] != self.table[j][i][k] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_anticommutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if self.table[i][j][k] != self.table[j][i][k].neg() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_zero_table(&self) -> bool {
        self.table
            .iter()
            .flatten()
            .flatten()
            .all(|c| c.is_zero())
    }
}

/// Fully instantiated algebra with scalar structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarAlgebra {
    dim: usize,
    c: Vec<Vec<Vec<Scalar>>>,
}

impl ScalarAlgebra {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[i][j][k]
    }

    pub fn to_algebra(&self) -> Algebra {
        let mut a = Algebra::zero_algebra(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    a.table[i][j][k] = RationalFunction::from_scalar(self.c[i][j][k].clone());
                }
            }
        }
        a
    }

    /// Product of coordinate vectors.
    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let uv = u[i].mul(&v[j]);
                for k in 0..self.dim {
                    if !self.c[i][j][k].is_zero() {
                        out[k] = out[k].add(&self.c[i][j][k].mul(&uv));
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }

    pub fn transform(&self, basis: &Matrix<Scalar>) -> Result<ScalarAlgebra, AlgebraError> {
        let rf_rows: Vec<Vec<RationalFunction>> = basis
            .rows_vec()
            .into_iter()
            .map(|r| r.into_iter().map(RationalFunction::from_scalar).collect())
            .collect();
        let a = self
            .to_algebra()
            .transform_rf(&Matrix::from_rows(rf_rows))?;
        a.scalar_table()
    }

    pub fn is_commutative(&self) -> bool {
        self.to_subspace_products_flag(|a, b| a == b)
    }

    pub fn is_anticommutative(&self) -> bool {
        self.to_subspace_products_flag(|a, b| *a == b.neg())
    }

    fn to_subspace_products_flag(&self, rel: impl Fn(&Scalar, &Scalar) -> bool) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if !rel(&self.c[i][j][k], &self.c[j][i][k]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Subspace in reduced row echelon form; canonical per subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    dim_ambient: usize,
    rows: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(dim_ambient: usize) -> Subspace {
        Subspace {
            dim_ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(dim_ambient: usize) -> Subspace {
        Subspace::span(
            dim_ambient,
            (0..dim_ambient)
                .map(|i| {
                    let mut v = vec![Scalar::zero(); dim_ambient];
                    v[i] = Scalar::one();
                    v
                })
                .collect(),
        )
    }

    pub fn span(dim_ambient: usize, vectors: Vec<Vec<Scalar>>) -> Subspace {
        let rows = row_space_rref(vectors);
        Subspace { dim_ambient, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim_ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut all = self.rows.clone();
        all.push(v.to_vec());
        row_space_rref(all).len() == self.rows.len()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.rows.clone();
        all.extend(other.rows.clone());
        Subspace::span(self.dim_ambient, all)
    }
}

/// Span of {u·w : u over U's basis, w over W's basis}.
pub fn product_subspace(a: &ScalarAlgebra, u: &Subspace, w: &Subspace) -> Subspace {
    let mut products = Vec::new();
    for x in u.basis() {
        for y in w.basis() {
            products.push(a.multiply(x, y));
        }
    }
    Subspace::span(a.dim(), products)
}

/// {v : vA = Av = 0}, computed as the kernel of the stacked multiplication maps.
pub fn annihilator(a: &ScalarAlgebra) -> Subspace {
    let n = a.dim();
    // rows: for each basis e_j and coordinate k: Σ_i v_i c_{ij}^k = 0 and Σ_i v_i c_{ji}^k = 0
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..n {
            let left: Vec<Scalar> = (0..n).map(|i| a.entry(i, j, k).clone()).collect();
            let right: Vec<Scalar> = (0..n).map(|i| a.entry(j, i, k).clone()).collect();
            rows.push(left);
            rows.push(right);
        }
    }
    let m = Matrix::from_rows(rows);
    Subspace::span(n, m.kernel_basis())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    Power,
}

#[derive(Debug, Clone)]
pub struct SeriesResult {
    pub terms: Vec<Subspace>,
    /// Derived series reached zero.
    pub reaches_zero: bool,
}

/// Derived series A, A², (A²)², … or the all-splits power series
/// A¹ = A, A^{n+1} = Σ_{i+j=n+1} A^i A^j, each until stabilization.
///
/// For the power series, a single value repeat is not stabilization: the
/// recurrence mixes all earlier terms (e.g. the series 3,2,1,1,0 occurs).
/// A window of equal values on [p, 2p+1] does force constancy from p on,
/// since every later summand A^i A^j equals a window-term value.
pub fn series(a: &ScalarAlgebra, kind: SeriesKind) -> SeriesResult {
    let n = a.dim();
    let mut terms = vec![Subspace::full(n)];
    loop {
        let next = match kind {
            SeriesKind::Derived => {
                let last = terms.last().unwrap();
                product_subspace(a, last, last)
            }
            SeriesKind::Power => {
                let m = terms.len() + 1; // computing A^m
                let mut acc = Subspace::zero(n);
                for i in 1..m {
                    let j = m - i;
                    acc = acc.sum(&product_subspace(a, &terms[i - 1], &terms[j - 1]));
                }
                acc
            }
        };
        let zero = next.is_zero();
        let stable = match kind {
            // D_{k+1} depends only on D_k: a value repeat is a fixed point.
            SeriesKind::Derived => *terms.last().unwrap() == next,
            SeriesKind::Power => {
                terms.push(next.clone());
                let len = terms.len();
                let settled = (1..=len / 2).any(|p| {
                    2 * p + 1 <= len && (p..=2 * p).all(|m| terms[m] == terms[p - 1])
                });
                terms.pop();
                settled
            }
        };
        terms.push(next);
        if zero || stable {
            break;
        }
    }
    let reaches_zero = terms.last().unwrap().is_zero();
    SeriesResult {
        terms,
        reaches_zero,
    }
}

pub fn is_solvable(a: &ScalarAlgebra) -> bool {
    series(a, SeriesKind::Derived).reaches_zero
}

pub fn is_nilpotent(a: &ScalarAlgebra) -> bool {
    series(a, SeriesKind::Power).reaches_zero
}

/// A² as a subspace.
pub fn square_subspace(a: &ScalarAlgebra) -> Subspace {
    let full = Subspace::full(a.dim());
    product_subspace(a, &full, &full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{instantiate, CatalogLabel, FamilyId};
    use crate::matrix::Matrix;

    fn scalar_mat(rows: Vec<Vec<i64>>) -> Matrix<Scalar> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Scalar::from_int).collect())
                .collect(),
        )
    }

    fn alg(id: FamilyId) -> ScalarAlgebra {
        instantiate(&CatalogLabel::plain(id))
            .unwrap()
            .scalar_table()
            .unwrap()
    }

    #[test]
    fn multiply_follows_table() {
        let n1 = alg(FamilyId::N1);
        let e1 = n1.basis_vector(0);
        let p = n1.multiply(&e1, &e1);
        assert_eq!(p, n1.basis_vector(1)); // e1e1 = e2
        let zero = vec![Scalar::zero(); 3];
        assert_eq!(n1.multiply(&zero, &e1), zero);
        let n5 = alg(FamilyId::N5);
        let e3 = n5.basis_vector(2);
        assert_eq!(n5.multiply(&e3, &e3), n5.basis_vector(1)); // e3e3 = e2
    }

    #[test]
    fn transform_identity_is_identity() {
        let a = alg(FamilyId::N5);
        let id = scalar_mat(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(a.transform(&id).unwrap(), a);
    }

    #[test]
    fn transform_zero_algebra_stays_zero() {
        let z = alg(FamilyId::Zero);
        let g = scalar_mat(vec![vec![1, 2, 0], vec![0, 1, 5], vec![3, 0, 1]]);
        let t = z.transform(&g).unwrap();
        assert_eq!(t, z);
    }

    #[test]
    fn transform_roundtrip_inverse() {
        // transform(transform(A, g), g⁻¹) = A: the old basis expressed in the
        // new coordinates is exactly the rows of g⁻¹.
        let a = instantiate(&CatalogLabel::with_param(FamilyId::N6, Scalar::from_int(5)))
            .unwrap()
            .scalar_table()
            .unwrap();
        let g = scalar_mat(vec![vec![1, 1, 0], vec![0, 1, 2], vec![1, 0, 1]]);
        let b = a.transform(&g).unwrap();
        let back = b.transform(&g.inverse().unwrap()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn plus_algebra_on_anticommutative_is_zero() {
        let g1 = alg(FamilyId::G1);
        assert!(g1.to_algebra().plus_algebra().is_zero_table());
    }

    #[test]
    fn plus_algebra_fixes_commutative() {
        let n1 = alg(FamilyId::N1);
        let a = n1.to_algebra();
        assert!(a.is_commutative());
        assert_eq!(a.plus_algebra(), a);
    }

    #[test]
    fn plus_of_n5_is_n6_zero_table() {
        // Symmetrizing N5 gives C_{0,a²} = N6⁰ in the same basis.
        let n5 = alg(FamilyId::N5).to_algebra();
        let plus = n5.plus_algebra();
        let n6_0 = instantiate(&CatalogLabel::with_param(FamilyId::N6, Scalar::zero()))
            .unwrap();
        assert_eq!(plus, n6_0);
    }

    #[test]
    fn subspace_products_match_paper_dims() {
        let n2 = alg(FamilyId::N2);
        let sq = square_subspace(&n2);
        assert_eq!(sq.dim(), 2); // ⟨e1, e2⟩
        let n4 = alg(FamilyId::N4);
        assert_eq!(square_subspace(&n4).dim(), 1); // ⟨e2⟩
        let z = alg(FamilyId::Zero);
        assert_eq!(square_subspace(&z).dim(), 0);
    }

    #[test]
    fn annihilator_dims() {
        assert_eq!(annihilator(&alg(FamilyId::N1)).dim(), 2);
        let n6_0 = instantiate(&CatalogLabel::with_param(FamilyId::N6, Scalar::zero()))
            .unwrap()
            .scalar_table()
            .unwrap();
        assert_eq!(annihilator(&n6_0).dim(), 1);
        assert_eq!(annihilator(&alg(FamilyId::Zero)).dim(), 3);
    }

    #[test]
    fn n3_solvable_not_nilpotent() {
        let n3 = alg(FamilyId::N3);
        let der = series(&n3, SeriesKind::Derived);
        assert!(der.reaches_zero);
        assert_eq!(der.terms.len(), 3); // A, A², (A²)² = 0
        let pow = series(&n3, SeriesKind::Power);
        assert!(!pow.reaches_zero);
        assert_eq!(pow.terms.last().unwrap().dim(), 1); // stabilizes at ⟨e3⟩
    }

    #[test]
    fn bn1_nilpotent() {
        let bn1 = alg(FamilyId::BN1);
        assert!(is_nilpotent(&bn1));
        assert!(is_solvable(&bn1));
        let z = alg(FamilyId::Zero);
        assert!(is_nilpotent(&z) && is_solvable(&z));
    }

    #[test]
    fn product_subspace_monotone() {
        let n2 = alg(FamilyId::N2);
        let u = Subspace::span(3, vec![vec![Scalar::one(), Scalar::zero(), Scalar::zero()]]);
        let u2 = Subspace::full(3);
        let w = Subspace::full(3);
        let uw = product_subspace(&n2, &u, &w);
        let u2w = product_subspace(&n2, &u2, &w);
        assert!(u2w.contains_subspace(&uw));
    }

    #[test]
    fn annihilator_times_full_is_zero() {
        let n4 = alg(FamilyId::N4);
        let ann = annihilator(&n4);
        let full = Subspace::full(3);
        assert!(product_subspace(&n4, &ann, &full).is_zero());
        assert!(product_subspace(&n4, &full, &ann).is_zero());
    }
}
