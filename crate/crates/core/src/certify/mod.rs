//! Exact decision procedures for sufficient cscK conditions on coverings.
//!
//! Given a catalogue geometry, a covering descriptor, and a reference
//! class, the procedures here decide — in exact rational arithmetic —
//! whether the nef conditions guaranteeing a constant scalar curvature
//! Kähler metric upstairs hold for some admissible scaling of the branch
//! divisor.  Outcomes are [`Certificate`] records: the constraints, the
//! feasible angle interval, the witness, and the verdict, all reproducible
//! from the inputs.
//!
//! The individual procedures:
//!
//! * [`find_delta_witness`] — sweep the admissible window `[1, delta_sup)`.
//! * [`check_unit_angle`] — the same conditions frozen at `delta = 1`.
//! * [`check_prescribed_angle`] — the angle induced by a weight
//!   `beta0 ∈ (0, 1/d]` on a cyclic covering.
//! * [`check_proportional_boundary`] — closed-endpoint conditions for
//!   cyclic coverings polarized along the branch class.
//! * [`check_alpha_properness`] — the properness test driven by a log
//!   alpha-invariant lower bound.
//! * [`einstein_factor`] — exact Kähler–Einstein proportionality.
//! * [`enumerate`] — deterministic verdict tables over parameter families.

mod certificate;
mod checks;
mod enumerate;
mod interval;

pub use certificate::{AlphaPropernessReport, Certificate, CheckKind, ConstraintRecord, Verdict};
pub use checks::{
    check_alpha_properness, check_prescribed_angle, check_proportional_boundary, check_unit_angle,
    einstein_factor, find_delta_witness,
};
pub use enumerate::{
    biproj_dihedral_instance, blowup_dihedral_instance, enumerate, proj_cyclic_instance,
    proj_dihedral_instance, quadric_cyclic_instance, EnumerationRow, FamilySpec, ParamRange,
};
pub use interval::{clip, solve_affine_nonneg, DeltaInterval, HalfLine};

use crate::cover::CoverError;
use crate::lattice::LatticeError;
use thiserror::Error;

/// Errors surfaced by the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("degenerate reference class: {0}")]
    ReferenceDegenerate(String),
    #[error("weight beta0 = {beta0} is outside (0, 1/{degree}]")]
    PrescribedWeightOutOfRange { beta0: String, degree: u64 },
    #[error("unsupported covering for this check: {0}")]
    UnsupportedCover(String),
    #[error("reference class is not a positive rational multiple of the branch class")]
    NotProportional,
    #[error("boundary weight {0} is outside (0, 1]")]
    BoundaryWeightOutOfRange(String),
    #[error("epsilon must be nonnegative, got {0}")]
    NegativeEpsilon(String),
    #[error("alpha lower bound must be positive, got {0}")]
    NonPositiveAlpha(String),
    #[error("invalid parameter range: {0}")]
    EmptyRange(String),
}
