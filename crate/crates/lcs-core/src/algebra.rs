//! Finite-dimensional real Lie algebras given by structure constants, with an
//! optional matrix realization.
//!
//! Elements are coordinate vectors in the declared basis; a matrix basis, when
//! present, realizes the same algebra inside `n×n` matrices and must reproduce
//! the structure constants.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::linalg;
use crate::{LcsError, Result, Tolerances};

/// A real Lie algebra of dimension `d`, with bracket
/// `[eᵢ, eⱼ] = Σₖ c[i][j][k] eₖ`.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    /// Structure constants, flattened as `sc[(i*d + j)*d + k]`.
    sc: Vec<f64>,
    basis: Option<Vec<DMatrix<f64>>>,
    tol: Tolerances,
}

/// Residuals of the defining identities of a [`LieAlgebra`].
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub max_antisymmetry_residual: f64,
    pub max_jacobi_residual: f64,
    /// Worst disagreement between matrix commutators and structure constants;
    /// zero when no matrix basis is attached.
    pub max_basis_mismatch: f64,
    pub passes: bool,
}

impl LieAlgebra {
    /// Build from structure constants alone. Fails if antisymmetry or the
    /// Jacobi identity is violated beyond `tol.eps_alg`.
    pub fn from_structure_constants(
        name: impl Into<String>,
        dim: usize,
        sc: Vec<f64>,
        tol: Tolerances,
    ) -> Result<Self> {
        if sc.len() != dim * dim * dim {
            return Err(LcsError::InvalidAlgebra(format!(
                "structure constants must have d³ = {} entries, got {}",
                dim * dim * dim,
                sc.len()
            )));
        }
        let alg = Self {
            name: name.into(),
            dim,
            sc,
            basis: None,
            tol,
        };
        let report = alg.validate();
        if !report.passes {
            return Err(LcsError::InvalidAlgebra(format!(
                "identities violated: antisymmetry {:.3e}, Jacobi {:.3e}",
                report.max_antisymmetry_residual, report.max_jacobi_residual
            )));
        }
        Ok(alg)
    }

    /// Build from a matrix basis; structure constants are derived from the
    /// commutators. Fails if the commutators do not close in the span of the
    /// basis.
    pub fn from_matrix_basis(
        name: impl Into<String>,
        basis: Vec<DMatrix<f64>>,
        tol: Tolerances,
    ) -> Result<Self> {
        let dim = basis.len();
        if dim == 0 {
            return Err(LcsError::InvalidAlgebra("empty basis".into()));
        }
        let n = basis[0].nrows();
        if basis.iter().any(|b| b.nrows() != n || b.ncols() != n) {
            return Err(LcsError::InvalidAlgebra(
                "basis matrices must be square of equal size".into(),
            ));
        }
        let mut sc = vec![0.0; dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let comm = &basis[i] * &basis[j] - &basis[j] * &basis[i];
                let (coords, residual) = linalg::coordinates_in_matrix_basis(&basis, &comm);
                if residual > tol.eps_alg * comm.norm().max(1.0) {
                    return Err(LcsError::InvalidAlgebra(format!(
                        "commutator [e{i}, e{j}] leaves the span of the basis (residual {residual:.3e})"
                    )));
                }
                for k in 0..dim {
                    sc[(i * dim + j) * dim + k] = coords[k];
                }
            }
        }
        let mut alg = Self::from_structure_constants(name, dim, sc, tol)?;
        alg.basis = Some(basis);
        Ok(alg)
    }

    /// Build from both structure constants and a matrix basis; the two must
    /// agree to `tol.eps_alg`, otherwise loading fails.
    pub fn from_basis_and_constants(
        name: impl Into<String>,
        basis: Vec<DMatrix<f64>>,
        dim: usize,
        sc: Vec<f64>,
        tol: Tolerances,
    ) -> Result<Self> {
        let name = name.into();
        if basis.len() != dim {
            return Err(LcsError::InvalidAlgebra(format!(
                "basis has {} matrices but dim = {dim}",
                basis.len()
            )));
        }
        let derived = Self::from_matrix_basis(name.clone(), basis, tol)?;
        let mut mismatch = 0.0_f64;
        for (a, b) in derived.sc.iter().zip(sc.iter()) {
            mismatch = mismatch.max((a - b).abs());
        }
        if mismatch > tol.eps_alg {
            return Err(LcsError::InvalidAlgebra(format!(
                "matrix basis disagrees with declared structure constants (max mismatch {mismatch:.3e})"
            )));
        }
        // Keep the declared constants; they already match the basis.
        let mut alg = Self::from_structure_constants(name, dim, sc, tol)?;
        alg.basis = derived.basis;
        Ok(alg)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    pub fn matrix_basis(&self) -> Option<&[DMatrix<f64>]> {
        self.basis.as_deref()
    }

    /// `c[i][j][k]` with `[eᵢ, eⱼ] = Σₖ c[i][j][k] eₖ`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> f64 {
        self.sc[(i * self.dim + j) * self.dim + k]
    }

    pub fn structure_constants(&self) -> &[f64] {
        &self.sc
    }

    /// Realize a coordinate vector as a matrix, if a basis is attached.
    pub fn realize(&self, x: &DVector<f64>) -> Option<DMatrix<f64>> {
        let basis = self.basis.as_ref()?;
        let n = basis[0].nrows();
        let mut m = DMatrix::zeros(n, n);
        for (b, &c) in basis.iter().zip(x.iter()) {
            m += b * c;
        }
        Some(m)
    }

    /// Bracket `[x, y]` via bilinear extension of the structure constants.
    pub fn bracket(&self, x: &DVector<f64>, y: &DVector<f64>) -> Result<DVector<f64>> {
        let d = self.dim;
        if x.len() != d {
            return Err(LcsError::DimensionMismatch {
                expected: d,
                got: x.len(),
            });
        }
        if y.len() != d {
            return Err(LcsError::DimensionMismatch {
                expected: d,
                got: y.len(),
            });
        }
        let mut out = DVector::zeros(d);
        for i in 0..d {
            let xi = x[i];
            if xi == 0.0 {
                continue;
            }
            for j in 0..d {
                let xy = xi * y[j];
                if xy == 0.0 {
                    continue;
                }
                for k in 0..d {
                    out[k] += xy * self.sc[(i * d + j) * d + k];
                }
            }
        }
        Ok(out)
    }

    /// The adjoint map `ad(x)` as a `d×d` matrix: column `j` is `[x, eⱼ]`.
    pub fn ad(&self, x: &DVector<f64>) -> Result<DMatrix<f64>> {
        let d = self.dim;
        if x.len() != d {
            return Err(LcsError::DimensionMismatch {
                expected: d,
                got: x.len(),
            });
        }
        let mut m = DMatrix::zeros(d, d);
        for j in 0..d {
            let ej = basis_vector(d, j);
            let col = self.bracket(x, &ej)?;
            m.set_column(j, &col);
        }
        Ok(m)
    }

    /// Residuals of antisymmetry, Jacobi, and basis/constant agreement.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim;
        let mut max_antisym = 0.0_f64;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let r = self.sc[(i * d + j) * d + k] + self.sc[(j * d + i) * d + k];
                    max_antisym = max_antisym.max(r.abs());
                }
            }
        }
        let mut max_jacobi = 0.0_f64;
        for i in 0..d {
            let ei = basis_vector(d, i);
            for j in (i + 1)..d {
                let ej = basis_vector(d, j);
                for k in (j + 1)..d {
                    let ek = basis_vector(d, k);
                    // [[i,j],k] + [[j,k],i] + [[k,i],j]
                    let t1 = self.bracket(&self.bracket(&ei, &ej).unwrap(), &ek).unwrap();
                    let t2 = self.bracket(&self.bracket(&ej, &ek).unwrap(), &ei).unwrap();
                    let t3 = self.bracket(&self.bracket(&ek, &ei).unwrap(), &ej).unwrap();
                    let r = (t1 + t2 + t3).amax();
                    max_jacobi = max_jacobi.max(r);
                }
            }
        }
        let mut max_basis = 0.0_f64;
        if let Some(basis) = &self.basis {
            for i in 0..d {
                for j in 0..d {
                    let comm = &basis[i] * &basis[j] - &basis[j] * &basis[i];
                    let mut expected = DMatrix::zeros(comm.nrows(), comm.ncols());
                    for k in 0..d {
                        expected += &basis[k] * self.sc[(i * d + j) * d + k];
                    }
                    max_basis = max_basis.max((comm - expected).amax());
                }
            }
        }
        let eps = self.tol.eps_alg;
        ValidationReport {
            max_antisymmetry_residual: max_antisym,
            max_jacobi_residual: max_jacobi,
            max_basis_mismatch: max_basis,
            passes: max_antisym < eps && max_jacobi < eps && max_basis < eps,
        }
    }

    /// Leibniz test `D[x,y] = [Dx,y] + [x,Dy]` over all basis pairs. Returns
    /// the verdict and the worst residual.
    pub fn is_derivation(&self, d_mat: &DMatrix<f64>) -> Result<(bool, f64)> {
        let d = self.dim;
        if d_mat.nrows() != d || d_mat.ncols() != d {
            return Err(LcsError::DimensionMismatch {
                expected: d,
                got: d_mat.nrows().max(d_mat.ncols()),
            });
        }
        let mut max_residual = 0.0_f64;
        for i in 0..d {
            let ei = basis_vector(d, i);
            let dei = d_mat * &ei;
            for j in (i + 1)..d {
                let ej = basis_vector(d, j);
                let dej = d_mat * &ej;
                let lhs = d_mat * self.bracket(&ei, &ej)?;
                let rhs = self.bracket(&dei, &ej)? + self.bracket(&ei, &dej)?;
                max_residual = max_residual.max((lhs - rhs).amax());
            }
        }
        Ok((max_residual < self.tol.eps_alg, max_residual))
    }

    /// Smallest subspace containing `seeds`, closed under the bracket and,
    /// when given, under the `stabilizer` map. Computed by span saturation
    /// until the dimension stabilizes.
    pub fn generated_subalgebra(
        &self,
        seeds: &[DVector<f64>],
        stabilizer: Option<&DMatrix<f64>>,
    ) -> Result<Subspace> {
        if seeds.is_empty() {
            return Err(LcsError::InvalidInput("seeds must be nonempty".into()));
        }
        for s in seeds {
            if s.len() != self.dim {
                return Err(LcsError::DimensionMismatch {
                    expected: self.dim,
                    got: s.len(),
                });
            }
        }
        let eps = self.tol.eps_rank;
        let mut basis = linalg::orthonormalize(seeds, eps);
        loop {
            let mut candidates = basis.clone();
            if let Some(st) = stabilizer {
                for b in &basis {
                    candidates.push(st * b);
                }
            }
            for i in 0..basis.len() {
                for j in (i + 1)..basis.len() {
                    candidates.push(self.bracket(&basis[i], &basis[j])?);
                }
            }
            let new_basis = linalg::orthonormalize(&candidates, eps);
            if new_basis.len() == basis.len() {
                return Ok(Subspace::from_orthonormal(self.dim, new_basis));
            }
            basis = new_basis;
            if basis.len() >= self.dim {
                return Ok(Subspace::from_orthonormal(self.dim, basis));
            }
        }
    }

    /// Closure residual of `s` under the bracket: the worst projection
    /// residual of `[bᵢ, bⱼ]` off `s`.
    pub fn closure_residual(&self, s: &Subspace) -> Result<f64> {
        let mut worst = 0.0_f64;
        for i in 0..s.dim() {
            for j in (i + 1)..s.dim() {
                let br = self.bracket(&s.basis()[i], &s.basis()[j])?;
                worst = worst.max(s.residual(&br));
            }
        }
        Ok(worst)
    }

    /// Lower-central-series test: true iff the series of `s` reaches zero
    /// within `dim(s)` steps. Errors unless `s` is bracket-closed.
    pub fn is_nilpotent_subalgebra(&self, s: &Subspace) -> Result<bool> {
        let closure = self.closure_residual(s)?;
        if closure > self.tol.eps_alg.max(self.tol.eps_rank) {
            return Err(LcsError::NotSubalgebra { residual: closure });
        }
        let mut current = s.clone();
        for _ in 0..=s.dim() {
            if current.dim() == 0 {
                return Ok(true);
            }
            let mut next_vecs = Vec::new();
            for a in s.basis() {
                for b in current.basis() {
                    next_vecs.push(self.bracket(a, b)?);
                }
            }
            let next = Subspace::from_vectors(self.dim, &next_vecs, self.tol.eps_rank);
            if next.dim() >= current.dim() {
                return Ok(false);
            }
            current = next;
        }
        Ok(current.dim() == 0)
    }

    /// Killing form `K(x, y) = tr(ad(x) ad(y))` as a symmetric matrix in the
    /// algebra basis.
    pub fn killing_form(&self) -> DMatrix<f64> {
        let d = self.dim;
        let ads: Vec<DMatrix<f64>> = (0..d)
            .map(|i| self.ad(&basis_vector(d, i)).unwrap())
            .collect();
        let mut k = DMatrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let v = (&ads[i] * &ads[j]).trace();
                k[(i, j)] = v;
                k[(j, i)] = v;
            }
        }
        k
    }

    /// The same algebra expressed in the basis `e'_j = Σᵢ p[i][j] eᵢ`
    /// (columns of `p` are the new basis vectors in old coordinates).
    pub fn change_basis(&self, p: &DMatrix<f64>) -> Result<Self> {
        let d = self.dim;
        if p.nrows() != d || p.ncols() != d {
            return Err(LcsError::DimensionMismatch {
                expected: d,
                got: p.nrows().max(p.ncols()),
            });
        }
        let p_inv = p
            .clone()
            .try_inverse()
            .ok_or_else(|| LcsError::InvalidInput("basis change matrix is singular".into()))?;
        let mut sc = vec![0.0; d * d * d];
        for i in 0..d {
            let ei = p.column(i).into_owned();
            for j in 0..d {
                let ej = p.column(j).into_owned();
                let br_old = self.bracket(&ei, &ej)?;
                let br_new = &p_inv * br_old;
                for k in 0..d {
                    sc[(i * d + j) * d + k] = br_new[k];
                }
            }
        }
        let mut alg = Self::from_structure_constants(format!("{}'", self.name), d, sc, self.tol)?;
        if let Some(basis) = &self.basis {
            let n = basis[0].nrows();
            let new_basis: Vec<DMatrix<f64>> = (0..d)
                .map(|j| {
                    let mut m = DMatrix::zeros(n, n);
                    for (i, b) in basis.iter().enumerate() {
                        m += b * p[(i, j)];
                    }
                    m
                })
                .collect();
            alg.basis = Some(new_basis);
        }
        Ok(alg)
    }
}

/// Standard basis vector `eᵢ` of `ℝᵈ`.
pub fn basis_vector(d: usize, i: usize) -> DVector<f64> {
    let mut v = DVector::zeros(d);
    v[i] = 1.0;
    v
}

/// A linear subspace of the algebra, stored as an orthonormal basis of
/// coordinate vectors.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<DVector<f64>>,
}

impl Subspace {
    /// Span of `vectors`, orthonormalized with threshold `eps_rank`.
    pub fn from_vectors(ambient_dim: usize, vectors: &[DVector<f64>], eps_rank: f64) -> Self {
        let basis = linalg::orthonormalize(vectors, eps_rank);
        Self { ambient_dim, basis }
    }

    pub(crate) fn from_orthonormal(ambient_dim: usize, basis: Vec<DVector<f64>>) -> Self {
        Self { ambient_dim, basis }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| basis_vector(ambient_dim, i)).collect();
        Self { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[DVector<f64>] {
        &self.basis
    }

    /// Orthogonal projection of `v` onto the subspace.
    pub fn project(&self, v: &DVector<f64>) -> DVector<f64> {
        let mut p = DVector::zeros(self.ambient_dim);
        for b in &self.basis {
            p.axpy(b.dot(v), b, 1.0);
        }
        p
    }

    /// Norm of the component of `v` orthogonal to the subspace.
    pub fn residual(&self, v: &DVector<f64>) -> f64 {
        (v - self.project(v)).norm()
    }

    pub fn contains(&self, v: &DVector<f64>, tol: f64) -> bool {
        self.residual(v) <= tol * v.norm().max(1.0)
    }

    /// Span of the union of two subspaces.
    pub fn union(&self, other: &Subspace, eps_rank: f64) -> Subspace {
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::from_vectors(self.ambient_dim, &vecs, eps_rank)
    }

    /// Equality as subspaces: same dimension and mutual containment.
    pub fn same_span(&self, other: &Subspace, tol: f64) -> bool {
        if self.dim() != other.dim() || self.ambient_dim != other.ambient_dim {
            return false;
        }
        self.basis.iter().all(|b| other.residual(b) <= tol)
            && other.basis.iter().all(|b| self.residual(b) <= tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn commutator_coords(alg: &LieAlgebra, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        // Independent oracle: realize, commute matrices, map back.
        let basis = alg.matrix_basis().unwrap();
        let xm = alg.realize(x).unwrap();
        let ym = alg.realize(y).unwrap();
        let comm = &xm * &ym - &ym * &xm;
        let (coords, res) = linalg::coordinates_in_matrix_basis(basis, &comm);
        assert!(res < 1e-10);
        coords
    }

    #[test]
    fn heis3_bracket_matches_matrix_commutator() {
        let alg = catalog::heis3();
        let e1 = basis_vector(3, 0);
        let e2 = basis_vector(3, 1);
        let got = alg.bracket(&e1, &e2).unwrap();
        let expected = commutator_coords(&alg, &e1, &e2);
        assert!((got.clone() - expected).norm() < 1e-12);
        // [e1, e2] = e3
        assert!((got - basis_vector(3, 2)).norm() < 1e-12);
    }

    #[test]
    fn abelian_bracket_is_zero() {
        let alg = catalog::abelian(2);
        let x = DVector::from_vec(vec![1.5, -0.3]);
        let y = DVector::from_vec(vec![0.2, 4.0]);
        assert_eq!(alg.bracket(&x, &y).unwrap().norm(), 0.0);
    }

    #[test]
    fn sl2_bracket_h_e() {
        let alg = catalog::sl2();
        let h = basis_vector(3, 0);
        let e = basis_vector(3, 1);
        let got = alg.bracket(&h, &e).unwrap();
        let expected = commutator_coords(&alg, &h, &e);
        assert!((got.clone() - expected).norm() < 1e-12);
        assert!((got - e * 2.0).norm() < 1e-12);
    }

    #[test]
    fn bracket_dimension_mismatch_errors() {
        let alg = catalog::heis3();
        let bad = DVector::zeros(2);
        assert!(alg.bracket(&bad, &bad).is_err());
    }

    #[test]
    fn validate_bundled_algebras() {
        for alg in [
            catalog::heis3(),
            catalog::sl2(),
            catalog::sl(3).unwrap(),
            catalog::so3(),
            catalog::abelian(4),
        ] {
            let r = alg.validate();
            assert!(r.passes, "{} failed validation: {r:?}", alg.name());
        }
        let r = catalog::heis3().validate();
        assert_eq!(r.max_jacobi_residual, 0.0);
        assert_eq!(r.max_antisymmetry_residual, 0.0);
    }

    #[test]
    fn perturbed_constants_fail_to_load() {
        let heis = catalog::heis3();
        let mut sc = heis.structure_constants().to_vec();
        // c[1][2][3] → 1.1 while the matrix basis is unchanged.
        sc[(0 * 3 + 1) * 3 + 2] = 1.1;
        sc[(1 * 3 + 0) * 3 + 2] = -1.1;
        let basis = heis.matrix_basis().unwrap().to_vec();
        let err = LieAlgebra::from_basis_and_constants("bad", basis, 3, sc, Tolerances::default());
        match err {
            Err(LcsError::InvalidAlgebra(msg)) => assert!(msg.contains("disagrees")),
            other => panic!("expected mismatch failure, got {other:?}"),
        }
    }

    #[test]
    fn derivation_checks_on_heis3() {
        let alg = catalog::heis3();
        let d = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, -1.0, 0.0]));
        let (ok, res) = alg.is_derivation(&d).unwrap();
        assert!(ok, "residual {res}");

        let id = DMatrix::identity(3, 3);
        let (ok, res) = alg.is_derivation(&id).unwrap();
        assert!(!ok);
        assert!((res - 1.0).abs() < 1e-12, "identity residual should be 1, got {res}");
    }

    #[test]
    fn inner_maps_are_derivations() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(7);
        for alg in [catalog::heis3(), catalog::sl2(), catalog::so3(), catalog::sl(3).unwrap()] {
            for _ in 0..250 {
                let x = DVector::from_fn(alg.dim(), |_, _| rng.random_range(-2.0..2.0));
                let ad = alg.ad(&x).unwrap();
                let (ok, res) = alg.is_derivation(&ad).unwrap();
                assert!(ok, "ad(x) not a derivation on {} (residual {res})", alg.name());
            }
        }
    }

    #[test]
    fn generated_subalgebra_cases() {
        let heis = catalog::heis3();
        let s = heis
            .generated_subalgebra(&[basis_vector(3, 0), basis_vector(3, 1)], None)
            .unwrap();
        assert_eq!(s.dim(), 3);

        let ab = catalog::abelian(2);
        let stab = DMatrix::from_row_slice(2, 2, &[0.0, 0.0, 1.0, 0.0]);
        let s = ab
            .generated_subalgebra(&[basis_vector(2, 0)], Some(&stab))
            .unwrap();
        assert_eq!(s.dim(), 2);

        let sl2 = catalog::sl2();
        let ad_h = sl2.ad(&basis_vector(3, 0)).unwrap();
        let s = sl2
            .generated_subalgebra(&[basis_vector(3, 1)], Some(&ad_h))
            .unwrap();
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn generated_subalgebra_is_idempotent() {
        let sl3 = catalog::sl(3).unwrap();
        let seeds = [basis_vector(8, 2), basis_vector(8, 5)];
        let s1 = sl3.generated_subalgebra(&seeds, None).unwrap();
        let s2 = sl3.generated_subalgebra(s1.basis(), None).unwrap();
        assert!(s1.same_span(&s2, 1e-8));
    }

    #[test]
    fn nilpotency_tests() {
        let heis = catalog::heis3();
        assert!(heis.is_nilpotent_subalgebra(&Subspace::full(3)).unwrap());

        let sl2 = catalog::sl2();
        assert!(!sl2.is_nilpotent_subalgebra(&Subspace::full(3)).unwrap());

        let one_dim = Subspace::from_vectors(3, &[basis_vector(3, 1)], 1e-8);
        assert!(sl2.is_nilpotent_subalgebra(&one_dim).unwrap());

        // {e1, e2} in sl2 is not bracket-closed: [H, E] = 2E is fine but
        // [E, F]... take {E, F} whose bracket H escapes.
        let not_closed = Subspace::from_vectors(3, &[basis_vector(3, 1), basis_vector(3, 2)], 1e-8);
        assert!(matches!(
            sl2.is_nilpotent_subalgebra(&not_closed),
            Err(LcsError::NotSubalgebra { .. })
        ));
    }

    #[test]
    fn killing_form_values() {
        assert_eq!(catalog::abelian(3).killing_form().norm(), 0.0);
        assert_eq!(catalog::heis3().killing_form().norm(), 0.0);
        let k = catalog::sl2().killing_form();
        assert!((k[(0, 0)] - 8.0).abs() < 1e-12, "K(H,H) = {}", k[(0, 0)]);
    }

    #[test]
    fn killing_form_is_invariant() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(11);
        for alg in [catalog::sl2(), catalog::so3(), catalog::sl(3).unwrap()] {
            let k = alg.killing_form();
            for _ in 0..50 {
                let rv =
                    |rng: &mut rand_chacha::ChaCha20Rng| DVector::from_fn(alg.dim(), |_, _| rng.random_range(-1.0..1.0));
                let (x, y, z) = (rv(&mut rng), rv(&mut rng), rv(&mut rng));
                let lhs = (&k * &z).dot(&alg.bracket(&x, &y).unwrap());
                let rhs = (&k * &alg.bracket(&x, &z).unwrap()).dot(&y);
                assert!((lhs + rhs).abs() < 1e-9, "K([x,y],z) + K(y,[x,z]) = {}", lhs + rhs);
            }
        }
    }
}
