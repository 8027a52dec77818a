//! Exact certificates for constant scalar curvature Kähler metrics on
//! ramified Galois coverings, with a numerical K-energy cross-check on the
//! Riemann sphere.
//!
//! The crate has three layers:
//!
//! * [`lattice`] — a small catalogue of Picard lattices (projective spaces,
//!   their products, and blow-ups of the plane in up to three points) with
//!   exact intersection products and nef/ample tests against fixed curve
//!   generators.
//! * [`cover`] — numerical descriptions of ramified Galois coverings: branch
//!   divisors, cone-angle calculus, the canonical class upstairs, and mean
//!   scalar curvature.
//! * [`certify`] — the decision procedures themselves: exact feasibility
//!   intervals in the cone-angle parameter and machine-checkable
//!   [`certify::Certificate`]s for the sufficient conditions.
//!
//! The [`kenergy`] module is independent of the exact layer: it numerically
//! evaluates log-K-energy functionals for rotation-invariant metrics on the
//! Riemann sphere and cross-checks the pull-back identities that the exact
//! certificates rely on.
//!
//! All certificate arithmetic is done in `BigRational`; floating point only
//! appears in the quadrature module.

pub mod certify;
pub mod cover;
pub mod kenergy;
pub mod lattice;
pub mod rational;

pub mod book;

pub use certify::{
    biproj_dihedral_instance, blowup_dihedral_instance, check_alpha_properness,
    check_prescribed_angle, check_proportional_boundary, check_unit_angle, einstein_factor,
    enumerate, find_delta_witness, proj_cyclic_instance, proj_dihedral_instance,
    quadric_cyclic_instance, AlphaPropernessReport, Certificate, CertifyError, CheckKind,
    ConstraintRecord, DeltaInterval, EnumerationRow, FamilySpec, ParamRange, Verdict,
};
pub use cover::{
    c1_sign_upstairs, canonical_upstairs, decompose_abelian, mean_scalar, BranchComponent, C1Sign,
    CoverDescriptor, CoverError, CoverGroup, HypothesisLedger,
};
pub use kenergy::{
    cocycle_defect, eval_cover_kenergy, eval_log_kenergy, gauss_bonnet_check, pullback_area_defect,
    verify_delta_linearity, verify_pullback_identity, KEnergyError, KEnergyResult,
    QuadratureSettings, RadialPotential,
};
pub use lattice::{
    CurveClass, CurveClassSet, DivisorClass, GeometryKind, GeometryModel, LatticeError,
};
pub use rational::{format_rational, parse_rational, RationalError};
