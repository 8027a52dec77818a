//! Numerical K-energy verification on the Riemann sphere.
//!
//! This module is the floating-point companion to the exact certifier: it
//! verifies, by quadrature, the analytic identities that the certifier's
//! angle calculus relies on, in the one place where everything can be
//! computed explicitly — rotation-invariant metrics on `P¹` and the cyclic
//! coverings `z ↦ z^d`.
//!
//! Three statements are checked numerically:
//!
//! 1. **Pullback identity** ([`verify_pullback_identity`]): the K-energy
//!    upstairs on the degree-`d` covering, taken relative to the pulled-back
//!    reference metric and evaluated on pulled-back potentials, equals `d`
//!    times the log-K-energy downstairs with cone angle `β = 1/d` along the
//!    branch points.  This is the bridge that lets a conical bound on the
//!    base control the canonical K-energy upstairs.
//! 2. **Angle linearity** ([`verify_delta_linearity`]): the log-K-energy is
//!    affine in the scaled branch angle `δ`, which is why certifying one
//!    interior angle and the boundary suffices for the whole segment.
//! 3. **Change-of-reference cocycle** ([`cocycle_defect`]): evaluating
//!    against the degenerate pulled-back reference or against a smooth metric
//!    in the same class changes the K-energy by a constant only, so energy
//!    *differences* — the quantities with geometric meaning — agree.
//!
//! All evaluations reduce to 1-D integrals in the radial coordinate
//! `t = log|w|²` and are performed by composite Gauss–Legendre quadrature on
//! a graded symmetric mesh with node-doubling error estimates
//! ([`QuadratureSettings`]).  Every reported value carries its termwise
//! breakdown and a self-estimated quadrature error ([`KEnergyResult`]).

mod functionals;
mod potential;
mod quadrature;

pub use functionals::{
    cocycle_defect, eval_cover_kenergy, eval_cover_kenergy_upstairs, eval_log_kenergy,
    eval_scaled_smooth_kenergy, gauss_bonnet_check, pullback_area_defect, verify_delta_linearity,
    verify_pullback_identity, KEnergyResult,
};
pub use potential::RadialPotential;
pub use quadrature::{legendre_rule, CompositeGrid, QuadratureSettings};

/// Failure modes of the numerical K-energy evaluators.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum KEnergyError {
    /// Cone angle parameter outside `(0, 1]`.
    #[error("cone angle parameter beta must lie in (0, 1], got {beta}")]
    InvalidAngle {
        /// The rejected value.
        beta: f64,
    },
    /// Covering degree outside the supported range.
    #[error("covering degree must be at least 1, got {degree}")]
    InvalidDegree {
        /// The rejected degree.
        degree: u32,
    },
    /// A potential family parameter is out of range.
    #[error("invalid potential: {0}")]
    InvalidPotential(String),
    /// The requested pair of scaled angles violates the admissible range.
    #[error("invalid angle range: {0}")]
    InvalidAngleRange(String),
    /// The perturbed metric density fails to be positive at a quadrature node.
    #[error("metric positivity violated at t = {t}: density {density}")]
    PositivityViolated {
        /// Radial coordinate of the worst offending node.
        t: f64,
        /// The non-positive density value found there.
        density: f64,
    },
    /// The node-doubling self-estimate exceeds the configured tolerance.
    #[error("quadrature did not converge: self-estimate {estimate} exceeds tolerance {tolerance}")]
    QuadratureNotConverged {
        /// Self-estimated quadrature error.
        estimate: f64,
        /// The configured acceptance threshold.
        tolerance: f64,
    },
}
