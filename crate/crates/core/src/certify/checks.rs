//! The decision procedures.
//!
//! Every check reduces to exact linear algebra over the rationals: the two
//! divisor-class conditions
//!
//! ```text
//! K_N + B_delta  nef        (adjoint family)
//! T(delta)       nef        (twisted family)
//! ```
//!
//! with `T(delta) = [n (K_N+B_delta)·omega^{n-1} / omega^n] omega -
//! (n-1)(K_N+B_delta)`, are affine in `delta`, so each pairing against a
//! nef-cone generator yields a rational half-line and the feasible set is an
//! exact interval inside `[1, delta_sup)`.  Witnesses are the infima of the
//! feasible intervals, which are attained because every constraint is a
//! closed condition.

use super::certificate::{
    AlphaPropernessReport, Certificate, CheckKind, ConstraintRecord, Verdict,
};
use super::interval::{clip, solve_affine_nonneg, DeltaInterval, HalfLine};
use super::CertifyError;
use crate::cover::{
    canonical_upstairs, mean_scalar, CoverDescriptor, CoverGroup, HypothesisLedger,
};
use crate::lattice::{DivisorClass, GeometryModel};
use crate::rational::{format_rational, int};
use num::rational::BigRational;
use num::{One, Signed, Zero};

const HYP_BOUNDED: &str = "hypothesis not granted: K-energy bounded below on the base";
const HYP_CSCK: &str = "hypothesis not granted: cscK reference metric on the base";

/// Searches `[1, delta_sup)` for an angle making both class conditions nef.
///
/// On success the witness is the smallest feasible angle clamped to 1 (the
/// infimum of the feasible interval, always attained).  An unramified
/// covering has no branch class to scale and yields `Inconclusive`.
pub fn find_delta_witness(
    geometry: &GeometryModel,
    cover: &CoverDescriptor,
    omega: &DivisorClass,
    hyp: &HypothesisLedger,
) -> Result<Certificate, CertifyError> {
    assemble(
        CheckKind::DeltaSweep,
        geometry,
        cover,
        omega,
        hyp,
        None,
        hyp.kenergy_bounded_below(),
        HYP_BOUNDED,
    )
}

/// The same class conditions with the angle frozen at `delta = 1`.
///
/// This is the comparison point for properness criteria that do not scale
/// the branch divisor; on projective space it reproduces the classical
/// threshold `lambda >= (n+1) d/(d-1)`.
pub fn check_unit_angle(
    geometry: &GeometryModel,
    cover: &CoverDescriptor,
    omega: &DivisorClass,
    hyp: &HypothesisLedger,
) -> Result<Certificate, CertifyError> {
    assemble(
        CheckKind::UnitAngle,
        geometry,
        cover,
        omega,
        hyp,
        Some(BigRational::one()),
        hyp.kenergy_bounded_below(),
        HYP_BOUNDED,
    )
}

/// Evaluates the class conditions at the angle determined by a prescribed
/// weight `beta0 ∈ (0, 1/d]` via `delta = (1 - beta0)·d/(d-1)`.
///
/// Requires a cyclic covering with a single branch component of inertia
/// equal to the degree; the weight range is exactly what keeps the induced
/// angle inside `[1, delta_sup)`.
pub fn check_prescribed_angle(
    geometry: &GeometryModel,
    cover: &CoverDescriptor,
    omega: &DivisorClass,
    hyp: &HypothesisLedger,
    beta0: &BigRational,
) -> Result<Certificate, CertifyError> {
    let d = cyclic_single_branch(cover)?;
    let d_rat = int(d as i64);
    let upper = BigRational::one() / &d_rat;
    if !beta0.is_positive() || *beta0 > upper {
        return Err(CertifyError::PrescribedWeightOutOfRange {
            beta0: format_rational(beta0),
            degree: d,
        });
    }
    let delta = (BigRational::one() - beta0) * &d_rat / (&d_rat - BigRational::one());
    let mut certificate = assemble(
        CheckKind::PrescribedAngle,
        geometry,
        cover,
        omega,
        hyp,
        Some(delta.clone()),
        hyp.kenergy_bounded_below(),
        HYP_BOUNDED,
    )?;
    certificate.prescribed_angle = Some(beta0.clone());
    certificate.notes.insert(
        0,
        format!(
            "weight beta0 = {} corresponds to angle delta = {}",
            format_rational(beta0),
            format_rational(&delta)
        ),
    );
    Ok(certificate)
}

/// Boundary check for cyclic coverings polarized proportionally to the
/// branch class: tests nefness of `K_N + B` and of
/// `(n·K_N·B^{n-1}/B^n + 1)·B - (n-1)·K_N`, the closed-endpoint limits of
/// the two sweep families.
///
/// Requires a single smooth irreducible branch component with inertia equal
/// to the degree, `omega = c·B` with `c > 0`, and the cscK hypothesis on
/// the base.  There is no free angle, so no witness is emitted.
pub fn check_proportional_boundary(
    geometry: &GeometryModel,
    cover: &CoverDescriptor,
    omega: &DivisorClass,
    hyp: &HypothesisLedger,
) -> Result<Certificate, CertifyError> {
    cyclic_single_branch(cover)?;
    let branch = &cover.branches()[0];
    if !branch.smooth || !branch.irreducible {
        return Err(CertifyError::UnsupportedCover(
            "boundary check needs a smooth irreducible branch component".into(),
        ));
    }
    let b_class = branch.class.clone();
    if b_class.geometry() != geometry {
        return Err(crate::lattice::LatticeError::GeometryMismatch {
            expected: geometry.to_string(),
            found: b_class.geometry().to_string(),
        }
        .into());
    }
    let n = geometry.dim();
    let b_top = geometry.intersection_number(&vec![b_class.clone(); n])?;
    if b_top.is_zero() {
        return Err(CertifyError::ReferenceDegenerate(
            "branch class has vanishing top self-intersection".into(),
        ));
    }
    let factor = match omega.proportionality_to(&b_class) {
        Some(c) if c.is_positive() => c,
        _ => return Err(CertifyError::NotProportional),
    };

    let k_class = geometry.canonical_class();
    let adjoint = k_class.add(&b_class)?;
    let mut pairing_factors = vec![k_class.clone()];
    pairing_factors.extend(std::iter::repeat(b_class.clone()).take(n - 1));
    let k_dot = geometry.intersection_number(&pairing_factors)?;
    let n_rat = int(n as i64);
    let coefficient = &n_rat * &k_dot / &b_top + BigRational::one();
    let twisted = b_class
        .scale(&coefficient)
        .sub(&k_class.scale(&(&n_rat - BigRational::one())))?;

    let generators = geometry.nef_cone_generators();
    let mut constraints = Vec::new();
    for (label, class) in [("adjoint", &adjoint), ("twisted", &twisted)] {
        for generator in generators.generators() {
            let margin = generator.pair(class)?;
            constraints.push(ConstraintRecord {
                label: label.to_string(),
                generator: generator.label().to_string(),
                constant: margin.clone(),
                slope: BigRational::zero(),
                satisfied: !margin.is_negative(),
            });
        }
    }

    let all_nef = constraints.iter().all(|c| c.satisfied);
    let hypothesis_ok = hyp.base_csck;
    let mut notes = Vec::new();
    if !hypothesis_ok {
        notes.push(HYP_CSCK.to_string());
    }
    for record in constraints.iter().filter(|c| !c.satisfied) {
        notes.push(format!(
            "blocking constraint {}:{} with margin {}",
            record.label,
            record.generator,
            format_rational(&record.constant)
        ));
    }
    let verdict = if all_nef && hypothesis_ok {
        Verdict::ProvenCscK
    } else {
        Verdict::Inconclusive
    };

    Ok(Certificate {
        check: CheckKind::ProportionalBoundary,
        verdict,
        delta_witness: None,
        delta_probe: None,
        feasible_interval: None,
        delta_sup: cover.delta_sup(),
        constraints,
        hypotheses: *hyp,
        einstein_proportional: Some(einstein_factor(geometry, cover, omega)?.is_some()),
        einstein_factor: einstein_factor(geometry, cover, omega)?,
        scalar_mean: Some(mean_scalar(geometry, cover, omega)?),
        prescribed_angle: None,
        polarization_factor: Some(factor),
        notes,
    })
}

/// Properness test driven by a user-supplied lower bound on the log
/// alpha-invariant: checks the strict angle inequality
/// `alpha > n·epsilon/(n+1)` together with ampleness of
/// `(K_N + D) + epsilon·omega` and of the epsilon-shifted twisted class,
/// where `D = Σ (1 - beta_i)·D_i`.
pub fn check_alpha_properness(
    geometry: &GeometryModel,
    boundary: &[(DivisorClass, BigRational)],
    omega: &DivisorClass,
    epsilon: &BigRational,
    alpha_lower_bound: &BigRational,
) -> Result<AlphaPropernessReport, CertifyError> {
    if !omega.is_ample() {
        return Err(CertifyError::ReferenceDegenerate(
            "reference class must be ample".into(),
        ));
    }
    if epsilon.is_negative() {
        return Err(CertifyError::NegativeEpsilon(format_rational(epsilon)));
    }
    if !alpha_lower_bound.is_positive() {
        return Err(CertifyError::NonPositiveAlpha(format_rational(
            alpha_lower_bound,
        )));
    }
    let mut weighted = DivisorClass::zero(geometry.clone());
    for (class, beta) in boundary {
        if !beta.is_positive() || *beta > BigRational::one() {
            return Err(CertifyError::BoundaryWeightOutOfRange(format_rational(
                beta,
            )));
        }
        weighted = weighted.add(&class.scale(&(BigRational::one() - beta)))?;
    }

    let n = geometry.dim();
    let n_rat = int(n as i64);
    let threshold = &n_rat * epsilon / (&n_rat + BigRational::one());
    let angle_margin = alpha_lower_bound - &threshold;
    let angle_condition = angle_margin.is_positive();

    let adjoint_base = geometry.canonical_class().add(&weighted)?;
    let adjoint = adjoint_base.add(&omega.scale(epsilon))?;

    let volume = geometry.intersection_number(&vec![omega.clone(); n])?;
    let mut factors = vec![adjoint_base.clone()];
    factors.extend(std::iter::repeat(omega.clone()).take(n - 1));
    let pairing = geometry.intersection_number(&factors)?;
    let coefficient = &n_rat * &pairing / &volume + epsilon;
    let twisted = omega
        .scale(&coefficient)
        .sub(&adjoint_base.scale(&(&n_rat - BigRational::one())))?;

    let labels: Vec<String> = geometry
        .nef_cone_generators()
        .generators()
        .iter()
        .map(|g| g.label().to_string())
        .collect();
    let margin_rows = |class: &DivisorClass| -> Vec<(String, BigRational)> {
        labels.iter().cloned().zip(class.nef_margins()).collect()
    };
    let adjoint_margins = margin_rows(&adjoint);
    let twisted_margins = margin_rows(&twisted);
    let adjoint_ample = adjoint.is_ample();
    let twisted_ample = twisted.is_ample();

    Ok(AlphaPropernessReport {
        satisfied: angle_condition && adjoint_ample && twisted_ample,
        angle_condition,
        angle_margin,
        adjoint_ample,
        adjoint_margins,
        twisted_ample,
        twisted_margins,
    })
}

/// Rational Einstein factor: `Some(lambda)` iff `K_N + B_f = lambda·omega`.
///
/// A zero factor means the adjoint class vanishes (Calabi–Yau upstairs);
/// negative factors are the Fano side.  Errors on a zero reference class.
pub fn einstein_factor(
    geometry: &GeometryModel,
    cover: &CoverDescriptor,
    omega: &DivisorClass,
) -> Result<Option<BigRational>, CertifyError> {
    if omega.is_zero() {
        return Err(CertifyError::ReferenceDegenerate(
            "reference class is zero".into(),
        ));
    }
    let adjoint = canonical_upstairs(geometry, cover)?;
    if adjoint.geometry() != omega.geometry() {
        return Err(crate::lattice::LatticeError::GeometryMismatch {
            expected: adjoint.geometry().to_string(),
            found: omega.geometry().to_string(),
        }
        .into());
    }
    Ok(adjoint.proportionality_to(omega))
}

/// Degree of a cyclic covering with one branch component whose inertia is
/// the full degree; errors otherwise.
fn cyclic_single_branch(cover: &CoverDescriptor) -> Result<u64, CertifyError> {
    if *cover.group() != CoverGroup::Cyclic {
        return Err(CertifyError::UnsupportedCover(
            "check needs a cyclic covering".into(),
        ));
    }
    if cover.branches().len() != 1 {
        return Err(CertifyError::UnsupportedCover(
            "check needs a single branch component".into(),
        ));
    }
    let d = cover.degree();
    if cover.branches()[0].inertia != d {
        return Err(CertifyError::UnsupportedCover(
            "branch inertia must equal the covering degree".into(),
        ));
    }
    Ok(d)
}

/// Shared core: builds the affine constraint families, intersects their
/// half-lines with `[1, delta_sup)`, and assembles the certificate either
/// for a sweep (`frozen = None`) or at a frozen angle.
#[allow(clippy::too_many_arguments)]
fn assemble(
    check: CheckKind,
    geometry: &GeometryModel,
    cover: &CoverDescriptor,
    omega: &DivisorClass,
    hyp: &HypothesisLedger,
    frozen: Option<BigRational>,
    hypothesis_ok: bool,
    hypothesis_note: &str,
) -> Result<Certificate, CertifyError> {
    let n = geometry.dim();
    let volume = geometry.intersection_number(&vec![omega.clone(); n])?;
    let (omega_nef, _) = omega.is_nef();
    if !omega_nef || !volume.is_positive() {
        return Err(CertifyError::ReferenceDegenerate(
            "reference class must be nef with positive top self-intersection".into(),
        ));
    }

    let einstein = einstein_factor(geometry, cover, omega)?;
    let scalar = mean_scalar(geometry, cover, omega)?;

    if cover.is_unramified() {
        let mut notes =
            vec!["unramified covering: no branch class to scale, nothing to certify".to_string()];
        if !hypothesis_ok {
            notes.push(hypothesis_note.to_string());
        }
        return Ok(Certificate {
            check,
            verdict: Verdict::Inconclusive,
            delta_witness: None,
            delta_probe: None,
            feasible_interval: None,
            delta_sup: None,
            constraints: Vec::new(),
            hypotheses: *hyp,
            einstein_proportional: Some(einstein.is_some()),
            einstein_factor: einstein,
            scalar_mean: Some(scalar),
            prescribed_angle: None,
            polarization_factor: None,
            notes,
        });
    }

    let delta_sup = cover
        .delta_sup()
        .expect("ramified covering has an angle supremum");
    let branch_unit = cover.branch_class_or_zero(geometry, &BigRational::one())?;
    let k_class = geometry.canonical_class();

    // T(delta) = T_K + delta·T_B with
    //   T_K = [n K·omega^{n-1}/omega^n] omega - (n-1) K
    //   T_B = [n B_f·omega^{n-1}/omega^n] omega - (n-1) B_f
    let n_rat = int(n as i64);
    let n_minus_one = &n_rat - BigRational::one();
    let pair_with_powers = |class: &DivisorClass| -> Result<BigRational, CertifyError> {
        let mut factors = vec![class.clone()];
        factors.extend(std::iter::repeat(omega.clone()).take(n - 1));
        Ok(geometry.intersection_number(&factors)?)
    };
    let twisted_part = |class: &DivisorClass| -> Result<DivisorClass, CertifyError> {
        let coefficient = &n_rat * pair_with_powers(class)? / &volume;
        Ok(omega.scale(&coefficient).sub(&class.scale(&n_minus_one))?)
    };
    let twisted_k = twisted_part(&k_class)?;
    let twisted_b = twisted_part(&branch_unit)?;

    let generators = geometry.nef_cone_generators();
    let mut affine: Vec<(String, String, BigRational, BigRational)> = Vec::new();
    for (label, constant_class, slope_class) in [
        ("adjoint", &k_class, &branch_unit),
        ("twisted", &twisted_k, &twisted_b),
    ] {
        for generator in generators.generators() {
            affine.push((
                label.to_string(),
                generator.label().to_string(),
                generator.pair(constant_class)?,
                generator.pair(slope_class)?,
            ));
        }
    }

    let ambient = DeltaInterval::half_open(BigRational::one(), delta_sup.clone())
        .expect("delta_sup exceeds 1 for inertia >= 2");
    let mut feasible = Some(ambient.clone());
    let mut candidate = BigRational::one();
    let mut candidate_source: Option<(String, String)> = None;
    let mut everywhere_violated: Vec<(String, String)> = Vec::new();
    for (label, generator, a, b) in &affine {
        let half = solve_affine_nonneg(a, b);
        if let HalfLine::AtLeast(bound) = &half {
            if *bound > candidate {
                candidate = bound.clone();
                candidate_source = Some((label.clone(), generator.clone()));
            }
        }
        if half == HalfLine::Empty {
            everywhere_violated.push((label.clone(), generator.clone()));
        }
        feasible = feasible.and_then(|window| clip(&window, &half));
    }

    let probe = frozen.clone().unwrap_or_else(|| candidate.clone());
    debug_assert!(
        frozen.is_none() || ambient.contains(&probe),
        "frozen angle must be admissible"
    );
    let constraints: Vec<ConstraintRecord> = affine
        .iter()
        .map(|(label, generator, a, b)| ConstraintRecord {
            label: label.clone(),
            generator: generator.clone(),
            constant: a.clone(),
            slope: b.clone(),
            satisfied: !(a + b * &probe).is_negative(),
        })
        .collect();

    let mut notes = Vec::new();
    if !hypothesis_ok {
        notes.push(hypothesis_note.to_string());
    }
    let conditions_met = match frozen {
        None => feasible.is_some(),
        Some(_) => constraints.iter().all(|c| c.satisfied),
    };
    if !conditions_met {
        for (label, generator) in &everywhere_violated {
            notes.push(format!(
                "constraint {label}:{generator} is violated for every angle"
            ));
        }
        for record in constraints.iter().filter(|c| !c.satisfied) {
            notes.push(format!(
                "blocking constraint {}:{} at angle {}",
                record.label,
                record.generator,
                format_rational(&probe)
            ));
        }
        if frozen.is_none() && candidate >= delta_sup {
            if let Some((label, generator)) = &candidate_source {
                notes.push(format!(
                    "constraint {label}:{generator} forces angle >= {}, not below the admissible supremum {}",
                    format_rational(&candidate),
                    format_rational(&delta_sup)
                ));
            }
        }
    }

    let verdict = if conditions_met && hypothesis_ok {
        Verdict::ProvenCscK
    } else {
        Verdict::Inconclusive
    };
    let delta_witness = if verdict == Verdict::ProvenCscK {
        Some(match frozen {
            None => {
                let window = feasible
                    .as_ref()
                    .expect("sweep verdict implies feasibility");
                debug_assert!(window.lo_closed(), "lower bounds are closed conditions");
                window.lo().clone()
            }
            Some(ref delta) => delta.clone(),
        })
    } else {
        None
    };

    Ok(Certificate {
        check,
        verdict,
        delta_witness,
        delta_probe: Some(probe),
        feasible_interval: feasible,
        delta_sup: Some(delta_sup),
        constraints,
        hypotheses: *hyp,
        einstein_proportional: Some(einstein.is_some()),
        einstein_factor: einstein,
        scalar_mean: Some(scalar),
        prescribed_angle: None,
        polarization_factor: None,
        notes,
    })
}
