//! Certificate records emitted by the decision procedures.
//!
//! A certificate is a machine-checkable transcript: which check ran, the
//! exact affine constraints it examined, where they were evaluated, the
//! feasible cone-angle interval, and the verdict.  Verdicts are one-sided —
//! the conditions certified here are sufficient, never necessary, so the
//! negative outcome is always `Inconclusive`, never "no cscK metric".

use super::interval::DeltaInterval;
use crate::cover::HypothesisLedger;
use crate::rational::format_rational;
use num::rational::BigRational;
use std::fmt;

/// Which decision procedure produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// Sweep the admissible interval `[1, delta_sup)` for a feasible angle.
    DeltaSweep,
    /// Evaluate at the angle determined by a prescribed weight `beta0`.
    PrescribedAngle,
    /// Boundary check for cyclic covers polarized proportionally to the
    /// branch class (closed endpoint, no free angle).
    ProportionalBoundary,
    /// Evaluate with the angle frozen at `delta = 1`.
    UnitAngle,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::DeltaSweep => "delta-sweep",
            CheckKind::PrescribedAngle => "prescribed-angle",
            CheckKind::ProportionalBoundary => "proportional-boundary",
            CheckKind::UnitAngle => "unit-angle",
        })
    }
}

/// Outcome of a check.  The conditions are sufficient only, so failure to
/// certify never claims nonexistence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    ProvenCscK,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ProvenCscK => "proven-cscK",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// One affine-in-delta constraint `constant + slope·delta >= 0`, paired with
/// the curve generator it came from and its status at the probe angle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintRecord {
    /// Which family the constraint belongs to (`adjoint` or `twisted`).
    pub label: String,
    /// Label of the curve generator being paired against.
    pub generator: String,
    /// Constant term of the affine form.
    pub constant: BigRational,
    /// Coefficient of delta in the affine form.
    pub slope: BigRational,
    /// Whether the constraint holds at the certificate's probe angle.
    pub satisfied: bool,
}

impl ConstraintRecord {
    /// Value of the affine form at a given angle.
    pub fn value_at(&self, delta: &BigRational) -> BigRational {
        &self.constant + &self.slope * delta
    }
}

impl fmt::Display for ConstraintRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{} {} + {}·delta >= 0 [{}]",
            self.label,
            self.generator,
            format_rational(&self.constant),
            format_rational(&self.slope),
            if self.satisfied { "ok" } else { "violated" }
        )
    }
}

/// Machine-checkable transcript of one decision procedure run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// The procedure that ran.
    pub check: CheckKind,
    /// One-sided outcome.
    pub verdict: Verdict,
    /// Feasible angle actually certified; always in `[1, delta_sup)` and
    /// only present when the verdict is `ProvenCscK` (boundary checks have
    /// no angle and leave this empty even when proven).
    pub delta_witness: Option<BigRational>,
    /// The angle at which the per-constraint `satisfied` flags were
    /// evaluated (also set for inconclusive outcomes).
    pub delta_probe: Option<BigRational>,
    /// Full feasible set of angles, when nonempty.
    pub feasible_interval: Option<DeltaInterval>,
    /// Supremum of the admissible window, `min_i d_i/(d_i - 1)`.
    pub delta_sup: Option<BigRational>,
    /// The affine constraints examined, in deterministic order.
    pub constraints: Vec<ConstraintRecord>,
    /// Snapshot of the analytic hypotheses granted by the caller.
    pub hypotheses: HypothesisLedger,
    /// Whether the covering data is Einstein-proportional
    /// (`K_N + B_f = lambda·omega` for some rational `lambda`).
    pub einstein_proportional: Option<bool>,
    /// The factor `lambda` when Einstein-proportional.
    pub einstein_factor: Option<BigRational>,
    /// Mean scalar curvature of the covering metric (real convention).
    pub scalar_mean: Option<BigRational>,
    /// The prescribed weight `beta0`, for the prescribed-angle check.
    pub prescribed_angle: Option<BigRational>,
    /// Factor `c` with `omega = c·B`, for the proportional-boundary check.
    pub polarization_factor: Option<BigRational>,
    /// Human-readable diagnostics: blocking constraints, missing
    /// hypotheses, degenerate inputs.
    pub notes: Vec<String>,
}

impl Certificate {
    /// `true` iff the verdict is `ProvenCscK`.
    pub fn proven(&self) -> bool {
        self.verdict == Verdict::ProvenCscK
    }

    /// Internal consistency of the record itself (not of the math): a proven
    /// sweep carries an admissible witness satisfying every constraint; an
    /// inconclusive verdict names a violated constraint or a missing
    /// hypothesis in its notes.
    pub fn is_well_formed(&self) -> bool {
        use num::{One, Signed};
        match self.verdict {
            Verdict::ProvenCscK => {
                let witness_ok = match (&self.delta_witness, self.check) {
                    (None, CheckKind::ProportionalBoundary) => true,
                    (Some(w), _) => {
                        let above = *w >= BigRational::one();
                        let below = match &self.delta_sup {
                            Some(s) => w < s,
                            None => true,
                        };
                        above
                            && below
                            && self
                                .constraints
                                .iter()
                                .all(|c| !c.value_at(w).is_negative())
                    }
                    (None, _) => false,
                };
                witness_ok && self.constraints.iter().all(|c| c.satisfied)
            }
            Verdict::Inconclusive => {
                self.constraints.iter().any(|c| !c.satisfied) || !self.notes.is_empty()
            }
        }
    }
}

/// Report of the properness test driven by a log alpha-invariant lower
/// bound: a strict angle condition plus two ampleness conditions, all
/// recorded with exact margins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaPropernessReport {
    /// Conjunction of the three conditions below.
    pub satisfied: bool,
    /// `alpha_lower_bound > n·epsilon/(n+1)` (strict).
    pub angle_condition: bool,
    /// Margin `alpha_lower_bound - n·epsilon/(n+1)`.
    pub angle_margin: BigRational,
    /// `(K_N + D) + epsilon·omega` ample, with per-generator margins.
    pub adjoint_ample: bool,
    pub adjoint_margins: Vec<(String, BigRational)>,
    /// The epsilon-shifted twisted class ample, with per-generator margins.
    pub twisted_ample: bool,
    pub twisted_margins: Vec<(String, BigRational)>,
}
