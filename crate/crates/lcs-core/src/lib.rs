//! Analysis of linear control systems on matrix Lie groups.
//!
//! A linear control system on a connected Lie group `G` pairs a drift that is
//! a linear vector field (its flow is a one-parameter group of automorphisms,
//! determined by a derivation `D` of the Lie algebra) with right-invariant
//! control directions constrained to a compact convex set `Ω`. This crate
//! provides:
//!
//! * [`algebra`] — Lie algebras by structure constants and matrix bases:
//!   brackets, span closures, nilpotency, Killing form.
//! * [`spectral`] — generalized eigenspaces of a derivation and the sign
//!   decomposition `g = g⁺ ⊕ g⁰ ⊕ g⁻`, with grading and structure checks.
//! * [`group`] — group realizations for simulation: exp/log, the automorphism
//!   flow `φ_t`, subgroup sampling, flow-invariance checks.
//! * [`dynamics`] — trajectory integration, reachable-set cloud sampling, and
//!   the reachable-set identities.
//! * [`semigroup`] — estimation of the system semigroup `S_Σ = ∩_t φ_t(A)`
//!   and its membership/closure/invariance diagnostics.
//! * [`semisimple`] — Iwasawa frames for `sl(n,ℝ)`, commuting triples
//!   `X = E + H + N`, and the spectrum link `Re spec(ad X) = spec(ad H)`.
//! * [`verdict`] — rule-based controllability decisions with a fired-rule
//!   trace, plus the abelian Kalman cross-check.
//! * [`specfile`] — versioned JSON system descriptions consumed by the CLI
//!   and the Python bindings.

pub mod algebra;
pub mod catalog;
pub mod config;
pub mod dynamics;
pub mod group;
pub mod linalg;
pub mod semigroup;
pub mod semisimple;
pub mod spectral;
pub mod specfile;
pub mod verdict;

mod error;

pub use config::Tolerances;
pub use error::{LcsError, Result};
