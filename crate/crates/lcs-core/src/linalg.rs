//! Small dense-matrix helpers shared by the analyses: rank-revealing
//! orthogonalization, kernels, and matrix exponentials/logarithms.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex;

use crate::{LcsError, Result};

type CMatrix = DMatrix<Complex<f64>>;

/// Orthonormalize `vectors` with modified Gram–Schmidt, dropping vectors whose
/// residual after projection falls below `eps_rank`. The result spans the same
/// subspace to within the threshold and is orthonormal.
pub fn orthonormalize(vectors: &[DVector<f64>], eps_rank: f64) -> Vec<DVector<f64>> {
    let mut basis: Vec<DVector<f64>> = Vec::new();
    for v in vectors {
        let mut r = v.clone();
        // Two projection passes for numerical orthogonality.
        for _ in 0..2 {
            for b in &basis {
                let c = b.dot(&r);
                r.axpy(-c, b, 1.0);
            }
        }
        let n = r.norm();
        if n > eps_rank * v.norm().max(1.0) {
            basis.push(r / n);
        }
    }
    basis
}

/// Numerical rank of `m`: number of singular values above
/// `eps * max(σ_max, 1)`.
pub fn rank(m: &DMatrix<f64>, eps: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().singular_values();
    let smax = sv.iter().cloned().fold(0.0_f64, f64::max);
    let thresh = eps * smax.max(1.0);
    sv.iter().filter(|&&s| s > thresh).count()
}

/// Orthonormal basis of the kernel of a square matrix, via SVD. Singular
/// values at or below `eps * max(σ_max, 1)` count as zero.
pub fn kernel(m: &DMatrix<f64>, eps: f64) -> Vec<DVector<f64>> {
    let n = m.ncols();
    assert_eq!(m.nrows(), n, "kernel expects a square matrix");
    let svd = m.clone().svd(false, true);
    let v_t = svd.v_t.expect("SVD with v_t requested");
    let smax = svd.singular_values.iter().cloned().fold(0.0_f64, f64::max);
    let thresh = eps * smax.max(1.0);
    let mut out = Vec::new();
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if s <= thresh {
            out.push(v_t.row(i).transpose());
        }
    }
    out
}

/// Orthonormal basis of the kernel of a square complex matrix.
pub fn kernel_complex(m: &CMatrix, eps: f64) -> Vec<DVector<Complex<f64>>> {
    let n = m.ncols();
    assert_eq!(m.nrows(), n, "kernel expects a square matrix");
    let svd = m.clone().svd(false, true);
    let v_t = svd.v_t.expect("SVD with v_t requested");
    let smax = svd.singular_values.iter().cloned().fold(0.0_f64, f64::max);
    let thresh = eps * smax.max(1.0);
    let mut out = Vec::new();
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if s <= thresh {
            out.push(v_t.row(i).map(|z| z.conj()).transpose());
        }
    }
    out
}

/// Matrix exponential. Uses the exact truncated series when the argument is
/// nilpotent (detected by a vanishing power), scaling-and-squaring otherwise.
pub fn expm(m: &DMatrix<f64>) -> DMatrix<f64> {
    if let Some(idx) = nilpotency_index(m, 1e-14) {
        return expm_nilpotent(m, idx);
    }
    m.exp()
}

/// Exact exponential of a nilpotent matrix with `m^idx = 0`:
/// `Σ_{k<idx} m^k / k!`.
pub fn expm_nilpotent(m: &DMatrix<f64>, idx: usize) -> DMatrix<f64> {
    let n = m.nrows();
    let mut sum = DMatrix::identity(n, n);
    let mut term = DMatrix::identity(n, n);
    for k in 1..idx {
        term = (&term * m) / (k as f64);
        sum += &term;
    }
    sum
}

/// Smallest `k ≤ n` with `‖m^k‖ ≤ tol·max(1, ‖m‖^k)`, if any.
pub fn nilpotency_index(m: &DMatrix<f64>, tol: f64) -> Option<usize> {
    let n = m.nrows();
    let scale = m.norm().max(1.0);
    let mut p = m.clone();
    let mut bound = scale;
    for k in 1..=n {
        if p.norm() <= tol * bound.max(1.0) {
            return Some(k);
        }
        p = &p * m;
        bound *= scale;
    }
    None
}

/// Logarithm of a unipotent matrix (`g − I` nilpotent): the finite series
/// `Σ (−1)^{k+1} N^k / k` with `N = g − I`, truncated at the ambient size.
pub fn logm_unipotent(g: &DMatrix<f64>) -> DMatrix<f64> {
    let n = g.nrows();
    let nil = g - DMatrix::identity(n, n);
    let mut sum = DMatrix::zeros(n, n);
    let mut power = DMatrix::identity(n, n);
    for k in 1..=n {
        power = &power * &nil;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        sum += &power * (sign / k as f64);
    }
    sum
}

/// Principal matrix logarithm by inverse scaling-and-squaring: take matrix
/// square roots (Denman–Beavers) until `‖g^{1/2^k} − I‖ < 1/4`, apply the
/// Mercator series, scale back. Requires `‖g − I‖ < 1` on entry.
pub fn logm(g: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = g.nrows();
    let id = DMatrix::identity(n, n);
    if (g - &id).norm() >= 1.0 {
        return Err(LcsError::LogOutOfDomain(format!(
            "‖g − I‖ = {:.3e} ≥ 1",
            (g - &id).norm()
        )));
    }
    let mut a = g.clone();
    let mut squarings = 0u32;
    while (&a - &id).norm() > 0.25 {
        a = sqrtm_db(&a)?;
        squarings += 1;
        if squarings > 40 {
            return Err(LcsError::LogOutOfDomain(
                "square-root iteration did not contract".into(),
            ));
        }
    }
    let nil = &a - &id;
    let mut sum = DMatrix::zeros(n, n);
    let mut power = id.clone();
    for k in 1..=40 {
        power = &power * &nil;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let term = &power * (sign / k as f64);
        sum += &term;
        if term.norm() < 1e-17 {
            break;
        }
    }
    Ok(sum * 2.0_f64.powi(squarings as i32))
}

/// Principal square root via the Denman–Beavers iteration.
fn sqrtm_db(a: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = a.nrows();
    let mut y = a.clone();
    let mut z = DMatrix::identity(n, n);
    for _ in 0..60 {
        let y_inv = y
            .clone()
            .try_inverse()
            .ok_or_else(|| LcsError::LogOutOfDomain("singular iterate in sqrt".into()))?;
        let z_inv = z
            .clone()
            .try_inverse()
            .ok_or_else(|| LcsError::LogOutOfDomain("singular iterate in sqrt".into()))?;
        let y_next = (&y + z_inv) * 0.5;
        let z_next = (&z + y_inv) * 0.5;
        let delta = (&y_next - &y).norm();
        y = y_next;
        z = z_next;
        if delta < 1e-15 * y.norm().max(1.0) {
            return Ok(y);
        }
    }
    Ok(y)
}

/// `m^k` by repeated squaring.
pub fn matrix_power(m: &DMatrix<f64>, k: usize) -> DMatrix<f64> {
    let n = m.nrows();
    let mut result = DMatrix::identity(n, n);
    let mut base = m.clone();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            result = &result * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    result
}

/// Least-squares coordinates of `target` in the span of `basis` (matrices
/// flattened column-wise), together with the representation residual.
pub fn coordinates_in_matrix_basis(
    basis: &[DMatrix<f64>],
    target: &DMatrix<f64>,
) -> (DVector<f64>, f64) {
    let d = basis.len();
    let nn = target.nrows() * target.ncols();
    let mut a = DMatrix::zeros(nn, d);
    for (j, b) in basis.iter().enumerate() {
        for (i, &x) in b.iter().enumerate() {
            a[(i, j)] = x;
        }
    }
    let rhs = DVector::from_iterator(nn, target.iter().cloned());
    let svd = a.clone().svd(true, true);
    let coords = svd
        .solve(&rhs, 1e-12)
        .expect("SVD solve with u/v_t requested");
    let residual = (&a * &coords - &rhs).norm();
    (coords, residual)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthonormalize_drops_dependent_vectors() {
        let v1 = DVector::from_vec(vec![1.0, 0.0, 0.0]);
        let v2 = DVector::from_vec(vec![1.0, 1.0, 0.0]);
        let v3 = DVector::from_vec(vec![2.0, 1.0, 0.0]); // dependent on v1, v2
        let basis = orthonormalize(&[v1, v2, v3], 1e-8);
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert!((b.norm() - 1.0).abs() < 1e-12);
        }
        assert!(basis[0].dot(&basis[1]).abs() < 1e-12);
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let m = DMatrix::from_row_slice(3, 3, &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        let k = kernel(&m, 1e-10);
        assert_eq!(k.len(), 1);
        assert!(k[0][2].abs() > 0.99);
    }

    #[test]
    fn expm_nilpotent_matches_series() {
        // Strictly upper triangular 3×3: the series truncates at k = 3.
        let m = DMatrix::from_row_slice(3, 3, &[0.0, 1.0, 0.5, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0]);
        let e = expm(&m);
        let expected = DMatrix::identity(3, 3) + &m + (&m * &m) * 0.5;
        assert!((e - expected).norm() < 1e-14);
    }

    #[test]
    fn logm_roundtrip_general() {
        let m = DMatrix::from_row_slice(2, 2, &[0.1, 0.2, 0.05, -0.1]);
        let g = expm(&m);
        let back = logm(&g).unwrap();
        assert!((back - m).norm() < 1e-12);
    }

    #[test]
    fn logm_rejects_far_from_identity() {
        let g = DMatrix::from_row_slice(2, 2, &[5.0, 0.0, 0.0, 0.2]);
        assert!(logm(&g).is_err());
    }

    #[test]
    fn coordinates_roundtrip() {
        let b1 = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]);
        let b2 = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        let target = &b1 * 2.0 + &b2 * -3.0;
        let (c, res) = coordinates_in_matrix_basis(&[b1, b2], &target);
        assert!(res < 1e-12);
        assert!((c[0] - 2.0).abs() < 1e-12 && (c[1] + 3.0).abs() < 1e-12);
    }
}
