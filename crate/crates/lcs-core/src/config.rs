use serde::{Deserialize, Serialize};

/// Numerical tolerances used across the analyses.
///
/// All defaults assume double-precision matrices of desk scale (entries of
/// order one, dimension below ~16).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Absolute residual bound for algebraic identities (Jacobi, Leibniz,
    /// basis/constant agreement).
    pub eps_alg: f64,
    /// Singular-value threshold for rank and span decisions.
    pub eps_rank: f64,
    /// Eigenvalue cluster diameter.
    pub eps_eig: f64,
    /// Dead band on |Re α| inside which an eigenvalue counts as critical
    /// (sign 0).
    pub eps_sign: f64,
    /// Residual bound for grading/structure reports.
    pub eps_grade: f64,
    /// Group-level tolerance (exp/log round trips, automorphism checks).
    pub eps_grp: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            eps_alg: 1e-9,
            eps_rank: 1e-8,
            eps_eig: 1e-7,
            eps_sign: 1e-8,
            eps_grade: 1e-8,
            eps_grp: 1e-8,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> crate::Result<()> {
        let all = [
            self.eps_alg,
            self.eps_rank,
            self.eps_eig,
            self.eps_sign,
            self.eps_grade,
            self.eps_grp,
        ];
        if all.iter().any(|&e| !(e > 0.0) || !e.is_finite()) {
            return Err(crate::LcsError::InvalidInput(
                "all tolerances must be positive and finite".into(),
            ));
        }
        Ok(())
    }
}
