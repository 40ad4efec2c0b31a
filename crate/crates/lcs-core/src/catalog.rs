//! Bundled algebra catalog, addressable by name from the CLI and spec files.

use nalgebra::DMatrix;

use crate::algebra::LieAlgebra;
use crate::{LcsError, Result, Tolerances};

fn unit(n: usize, r: usize, c: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(n, n);
    m[(r, c)] = 1.0;
    m
}

/// Heisenberg algebra: basis `e1 = E₁₂`, `e2 = E₂₃`, `e3 = E₁₃` in 3×3
/// strictly upper triangular matrices, with `[e1, e2] = e3` central.
pub fn heis3() -> LieAlgebra {
    let basis = vec![unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)];
    LieAlgebra::from_matrix_basis("heis3", basis, Tolerances::default()).unwrap()
}

/// `sl(2,ℝ)` in the basis `(H, E, F)`: `[H,E] = 2E`, `[H,F] = −2F`,
/// `[E,F] = H`.
pub fn sl2() -> LieAlgebra {
    sl(2).unwrap()
}

/// `sl(n,ℝ)` in the basis: diagonals `hᵢ = Eᵢᵢ − E_{i+1,i+1}`, then the
/// strictly upper `E_{ij}` (row-major), then the strictly lower `E_{ij}`.
pub fn sl(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(LcsError::InvalidInput("sl(n) requires n ≥ 2".into()));
    }
    let basis = sl_basis(n);
    LieAlgebra::from_matrix_basis(format!("sl{n}"), basis, Tolerances::default())
}

pub(crate) fn sl_basis(n: usize) -> Vec<DMatrix<f64>> {
    let mut basis = Vec::with_capacity(n * n - 1);
    for i in 0..n - 1 {
        let mut h = DMatrix::zeros(n, n);
        h[(i, i)] = 1.0;
        h[(i + 1, i + 1)] = -1.0;
        basis.push(h);
    }
    for i in 0..n {
        for j in i + 1..n {
            basis.push(unit(n, i, j));
        }
    }
    for j in 0..n {
        for i in j + 1..n {
            basis.push(unit(n, i, j));
        }
    }
    basis
}

/// `so(3)` rotation generators: `[e1,e2] = e3`, `[e2,e3] = e1`,
/// `[e3,e1] = e2`.
pub fn so3() -> LieAlgebra {
    let l1 = DMatrix::from_row_slice(3, 3, &[0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 1.0, 0.0]);
    let l2 = DMatrix::from_row_slice(3, 3, &[0.0, 0.0, 1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0]);
    let l3 = DMatrix::from_row_slice(3, 3, &[0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    LieAlgebra::from_matrix_basis("so3", vec![l1, l2, l3], Tolerances::default()).unwrap()
}

/// Abelian `ℝᵈ`, realized in the affine embedding: basis `Bᵢ = E_{i,d+1}`
/// inside `(d+1)×(d+1)` matrices, so `exp(Σ xᵢBᵢ) = [[I, x], [0, 1]]`.
pub fn abelian(d: usize) -> LieAlgebra {
    let basis: Vec<DMatrix<f64>> = (0..d).map(|i| unit(d + 1, i, d)).collect();
    LieAlgebra::from_matrix_basis(format!("abelian{d}"), basis, Tolerances::default()).unwrap()
}

/// Look up a catalog algebra: `heis3`, `sl2`, `sl3`, `so3`, or `abelian<d>`.
pub fn by_name(name: &str) -> Result<LieAlgebra> {
    match name {
        "heis3" => Ok(heis3()),
        "sl2" => Ok(sl2()),
        "sl3" => sl(3),
        "so3" => Ok(so3()),
        _ => {
            if let Some(ds) = name.strip_prefix("abelian") {
                let d: usize = ds.parse().map_err(|_| {
                    LcsError::InvalidInput(format!("unknown catalog algebra '{name}'"))
                })?;
                if d == 0 || d > 64 {
                    return Err(LcsError::InvalidInput(format!(
                        "abelian dimension out of range: {d}"
                    )));
                }
                Ok(abelian(d))
            } else {
                Err(LcsError::InvalidInput(format!(
                    "unknown catalog algebra '{name}'"
                )))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_dimensions() {
        assert_eq!(heis3().dim(), 3);
        assert_eq!(sl2().dim(), 3);
        assert_eq!(sl(3).unwrap().dim(), 8);
        assert_eq!(so3().dim(), 3);
        assert_eq!(abelian(5).dim(), 5);
    }

    #[test]
    fn by_name_lookup() {
        assert_eq!(by_name("heis3").unwrap().name(), "heis3");
        assert_eq!(by_name("abelian2").unwrap().dim(), 2);
        assert!(by_name("e8").is_err());
    }

    #[test]
    fn so3_cyclic_brackets() {
        let alg = so3();
        let e = |i| crate::algebra::basis_vector(3, i);
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            let br = alg.bracket(&e(i), &e(j)).unwrap();
            assert!((br - e(k)).norm() < 1e-12);
        }
    }
}
