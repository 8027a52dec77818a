//! K-energy functionals on the Riemann sphere, radial form.
//!
//! All functionals below are written in the complex normalization in which
//! the Fubini–Study reference `ω = i∂∂̄ log(1+e^t)` has area `2π`, Ricci form
//! `Ric(ω) = 2ω` (total `4π`), and mean scalar curvature `2` on the base.
//! Three reference configurations are supported:
//!
//! * **Base with cone angles** — the pair `(P¹, (1-β)([0]+[∞]))`: the
//!   log-K-energy is entropy plus two divisor terms plus an energy term,
//!   ```text
//!   K_β(ϕ) = 2π ∫ log(ρ_ϕ/ρ₀) ρ_ϕ dt
//!          + 2π(1-β) ∫ (t-u₀) ϕ'' dt  +  2π(1-β) ∫ (-u₀) ϕ'' dt
//!          + 2πβ ∫ ϕ ϕ'' dt ,
//!   ```
//!   with `ρ_ϕ = ρ₀ + ϕ''` and `u₀(t) = log(1+e^t)`.  The two middle
//!   integrals are `∫ log‖s‖² (ω_ϕ - ω)` for the sections cutting out the
//!   poles, with `‖s₀‖² = e^t/(1+e^t)` and `‖s_∞‖² = 1/(1+e^t)`.
//! * **Degenerate pulled-back reference** — upstairs on the degree-`d`
//!   covering `z ↦ z^d`, relative to `f*ω` with density `π_d(t) = d²ρ₀(dt)`:
//!   entropy against `π_d`, a linear term carrying the upstairs mean scalar
//!   curvature `s̄ = 2/d` and the Ricci density of the reference, and point
//!   contributions `2π(d-1)ψ(±∞)` at the two ramification points,
//!   ```text
//!   K^M(ψ) = 2π ∫ log(ρ_ψ/π_d) ρ_ψ dt
//!          + 2π ∫ ψ [ s̄(π_d + ψ''/2) - 2π_d ] dt
//!          + 2π(d-1)(ψ(-∞) + ψ(+∞)) .
//!   ```
//! * **Smooth scaled reference** — upstairs relative to the smooth metric
//!   `d·ω_FS` in the same class: the same template with density `d·ρ₀`,
//!   Ricci density `2ρ₀`, and no point terms.
//!
//! Three identities tie these evaluators together and are exposed as checks:
//! the pullback identity `K^M(f*ϕ) = d·K_β(ϕ)` with `β = 1/d`; affinity of
//! `K_β` in the cone parameter (angle linearity); and the change-of-reference
//! cocycle relating the degenerate and smooth upstairs references through the
//! gauge potential.  Each identity holds exactly at the level of the
//! integrands' antiderivatives, so the numerical defect measures only
//! quadrature error.

use std::f64::consts::PI;

use super::potential::{fs_density, log_one_plus_exp, pullback_density, RadialPotential};
use super::quadrature::{CompositeGrid, QuadratureSettings};
use super::KEnergyError;

/// Value and termwise breakdown of a K-energy evaluation.
#[derive(Clone, Debug)]
pub struct KEnergyResult {
    /// Total: always the exact floating-point sum of the reported terms.
    pub value: f64,
    /// Relative-entropy term of the metric against the reference.
    pub entropy_term: f64,
    /// Energy (linear/path) term.
    pub jhat_term: f64,
    /// Divisor or ramification-point contributions, one entry per point.
    pub divisor_terms: Vec<f64>,
    /// Node-doubling self-estimate of the quadrature error in `value`.
    pub quadrature_error_estimate: f64,
}

impl KEnergyResult {
    /// Sum of the reported terms; equals `value` by construction.
    pub fn term_sum(&self) -> f64 {
        self.entropy_term + self.jhat_term + self.divisor_terms.iter().sum::<f64>()
    }
}

/// Reference configurations for the shared evaluation core.
enum Reference {
    ConeBase { beta: f64 },
    PulledBack { degree: u32 },
    ScaledSmooth { degree: u32 },
}

impl Reference {
    fn density(&self, t: f64) -> f64 {
        match self {
            Reference::ConeBase { .. } => fs_density(t),
            Reference::PulledBack { degree } => pullback_density(*degree, t),
            Reference::ScaledSmooth { degree } => *degree as f64 * fs_density(t),
        }
    }

    /// Density of the Ricci form of the smooth part of the reference, as the
    /// coefficient `r(t)` in `Ric = 2·r(t)·dt∧dθ`... stored directly as the
    /// full coefficient `-(log π)''`.
    fn ricci_density(&self, t: f64) -> f64 {
        match self {
            Reference::ConeBase { .. } => 2.0 * fs_density(t),
            Reference::PulledBack { degree } => 2.0 * pullback_density(*degree, t),
            Reference::ScaledSmooth { .. } => 2.0 * fs_density(t),
        }
    }

    fn mean_scalar(&self) -> f64 {
        match self {
            Reference::ConeBase { beta } => 2.0 * beta,
            Reference::PulledBack { degree } | Reference::ScaledSmooth { degree } => {
                2.0 / *degree as f64
            }
        }
    }

    fn feature_scales(&self) -> Vec<f64> {
        match self {
            Reference::ConeBase { .. } => vec![1.0],
            Reference::PulledBack { degree } | Reference::ScaledSmooth { degree } => {
                vec![1.0, 1.0 / *degree as f64]
            }
        }
    }
}

/// One integral contributing to a K-energy value: a labelled integrand with a
/// constant prefactor.
struct TermSpec<'a> {
    coefficient: f64,
    integrand: Box<dyn Fn(f64) -> f64 + 'a>,
}

fn integrate_terms(
    grid: &CompositeGrid,
    settings: &QuadratureSettings,
    terms: &[TermSpec<'_>],
) -> (Vec<f64>, f64) {
    let mut values = Vec::with_capacity(terms.len());
    let mut estimate = 0.0;
    for term in terms {
        let (fine, diff) = grid.integrate_with_estimate(settings.order, &*term.integrand);
        values.push(term.coefficient * fine);
        estimate += term.coefficient.abs() * diff;
    }
    (values, estimate)
}

/// Shared evaluation core: admissibility check, quadrature, assembly.
fn evaluate(
    reference: Reference,
    psi: &RadialPotential,
    settings: &QuadratureSettings,
) -> Result<KEnergyResult, KEnergyError> {
    let mut scales = reference.feature_scales();
    scales.extend(psi.feature_scales());
    let grid = CompositeGrid::new(settings, &scales);

    // Admissibility: the perturbed density must be positive at every node
    // that the quadrature will touch.
    let mut violation: Option<(f64, f64)> = None;
    grid.for_each_node(settings.order, &mut |t| {
        let density = reference.density(t) + psi.second_derivative(t);
        if density <= 0.0 {
            match violation {
                Some((_, worst)) if worst <= density => {}
                _ => violation = Some((t, density)),
            }
        }
    });
    if let Some((t, density)) = violation {
        return Err(KEnergyError::PositivityViolated { t, density });
    }

    let two_pi = 2.0 * PI;
    let entropy_spec = TermSpec {
        coefficient: two_pi,
        integrand: Box::new(|t: f64| {
            let pi_t = reference.density(t);
            let dd = psi.second_derivative(t);
            (dd / pi_t).ln_1p() * (pi_t + dd)
        }),
    };

    let (entropy_term, jhat_term, divisor_terms, estimate) = match &reference {
        Reference::ConeBase { beta } => {
            let cone_weight = 1.0 - beta;
            let specs = [
                entropy_spec,
                TermSpec {
                    coefficient: two_pi * cone_weight,
                    integrand: Box::new(|t: f64| {
                        (t - log_one_plus_exp(t)) * psi.second_derivative(t)
                    }),
                },
                TermSpec {
                    coefficient: two_pi * cone_weight,
                    integrand: Box::new(|t: f64| -log_one_plus_exp(t) * psi.second_derivative(t)),
                },
                TermSpec {
                    coefficient: two_pi * beta,
                    integrand: Box::new(|t: f64| psi.value(t) * psi.second_derivative(t)),
                },
            ];
            let (values, estimate) = integrate_terms(&grid, settings, &specs);
            (values[0], values[3], vec![values[1], values[2]], estimate)
        }
        Reference::PulledBack { degree } => {
            let s_bar = reference.mean_scalar();
            let specs = [
                entropy_spec,
                TermSpec {
                    coefficient: two_pi,
                    integrand: Box::new(|t: f64| {
                        let pi_t = reference.density(t);
                        let dd = psi.second_derivative(t);
                        psi.value(t) * (s_bar * (pi_t + 0.5 * dd) - reference.ricci_density(t))
                    }),
                },
            ];
            let (values, estimate) = integrate_terms(&grid, settings, &specs);
            let point_coeff = two_pi * (*degree as f64 - 1.0);
            let points = vec![point_coeff * psi.limit_neg(), point_coeff * psi.limit_pos()];
            (values[0], values[1], points, estimate)
        }
        Reference::ScaledSmooth { .. } => {
            let s_bar = reference.mean_scalar();
            let specs = [
                entropy_spec,
                TermSpec {
                    coefficient: two_pi,
                    integrand: Box::new(|t: f64| {
                        let pi_t = reference.density(t);
                        let dd = psi.second_derivative(t);
                        psi.value(t) * (s_bar * (pi_t + 0.5 * dd) - reference.ricci_density(t))
                    }),
                },
            ];
            let (values, estimate) = integrate_terms(&grid, settings, &specs);
            (values[0], values[1], Vec::new(), estimate)
        }
    };

    if estimate > settings.convergence_tolerance {
        return Err(KEnergyError::QuadratureNotConverged {
            estimate,
            tolerance: settings.convergence_tolerance,
        });
    }

    let value = entropy_term + jhat_term + divisor_terms.iter().sum::<f64>();
    Ok(KEnergyResult {
        value,
        entropy_term,
        jhat_term,
        divisor_terms,
        quadrature_error_estimate: estimate,
    })
}

/// Log-K-energy of the pair `(P¹, (1-β)([0]+[∞]))` relative to the
/// Fubini–Study reference.  `β = 1` is the smooth Mabuchi K-energy.
pub fn eval_log_kenergy(
    phi: &RadialPotential,
    beta: f64,
    settings: &QuadratureSettings,
) -> Result<KEnergyResult, KEnergyError> {
    if !(beta.is_finite() && beta > 0.0 && beta <= 1.0) {
        return Err(KEnergyError::InvalidAngle { beta });
    }
    evaluate(Reference::ConeBase { beta }, phi, settings)
}

/// K-energy upstairs on the degree-`d` covering `z ↦ z^d`, relative to the
/// degenerate pulled-back reference `f*ω`, evaluated at the pullback `f*ϕ`
/// of the given base potential.
pub fn eval_cover_kenergy(
    phi_base: &RadialPotential,
    degree: u32,
    settings: &QuadratureSettings,
) -> Result<KEnergyResult, KEnergyError> {
    let pulled = RadialPotential::pullback(degree, phi_base.clone())?;
    eval_cover_kenergy_upstairs(&pulled, degree, settings)
}

/// Same functional as [`eval_cover_kenergy`], but on an arbitrary upstairs
/// potential (not necessarily a pullback).  Needed for the change-of-reference
/// cocycle, whose gauge potential lives upstairs only.
pub fn eval_cover_kenergy_upstairs(
    psi: &RadialPotential,
    degree: u32,
    settings: &QuadratureSettings,
) -> Result<KEnergyResult, KEnergyError> {
    if degree == 0 {
        return Err(KEnergyError::InvalidDegree { degree });
    }
    evaluate(Reference::PulledBack { degree }, psi, settings)
}

/// Smooth Mabuchi K-energy upstairs relative to the smooth reference
/// `d·ω_FS` (same Kähler class as the pulled-back reference).
pub fn eval_scaled_smooth_kenergy(
    psi: &RadialPotential,
    degree: u32,
    settings: &QuadratureSettings,
) -> Result<KEnergyResult, KEnergyError> {
    if degree == 0 {
        return Err(KEnergyError::InvalidDegree { degree });
    }
    evaluate(Reference::ScaledSmooth { degree }, psi, settings)
}

/// Relative defect of the pullback identity `K^M(f*ϕ) = d·K_β(ϕ)`, `β = 1/d`:
/// `|K^M - d·K_β| / (1 + |K^M|)`.  Both sides are evaluated by independent
/// quadratures of structurally different integrands.
pub fn verify_pullback_identity(
    phi: &RadialPotential,
    degree: u32,
    settings: &QuadratureSettings,
) -> Result<f64, KEnergyError> {
    if degree == 0 {
        return Err(KEnergyError::InvalidDegree { degree });
    }
    let upstairs = eval_cover_kenergy(phi, degree, settings)?;
    let downstairs = eval_log_kenergy(phi, 1.0 / degree as f64, settings)?;
    let defect = (upstairs.value - degree as f64 * downstairs.value).abs();
    Ok(defect / (1.0 + upstairs.value.abs()))
}

/// Relative defect of the affine dependence of the log-K-energy on the scaled
/// branch angle `δ`: with cone parameter `β(δ) = 1 - δ(1-1/d)`,
/// `K_{β(δ)} = (δ/δ₀)·K_{β(δ₀)} + (1-δ/δ₀)·K_{β=1}` holds identically; the
/// three evaluations share one quadrature mesh, so the defect is pure
/// floating-point round-off.
pub fn verify_delta_linearity(
    phi: &RadialPotential,
    degree: u32,
    delta0: f64,
    delta: f64,
    settings: &QuadratureSettings,
) -> Result<f64, KEnergyError> {
    if degree < 2 {
        return Err(KEnergyError::InvalidDegree { degree });
    }
    let ramification = 1.0 - 1.0 / degree as f64;
    let supremum = 1.0 / ramification;
    if !(delta0.is_finite() && delta.is_finite() && delta > 0.0 && delta <= delta0) {
        return Err(KEnergyError::InvalidAngleRange(format!(
            "need 0 < delta <= delta0, got delta = {delta}, delta0 = {delta0}"
        )));
    }
    if delta0 >= supremum {
        return Err(KEnergyError::InvalidAngleRange(format!(
            "delta0 = {delta0} must stay below the admissible supremum {supremum} \
             for degree {degree}"
        )));
    }
    let beta = |d: f64| 1.0 - d * ramification;
    let at_delta = eval_log_kenergy(phi, beta(delta), settings)?;
    let at_delta0 = eval_log_kenergy(phi, beta(delta0), settings)?;
    let smooth = eval_log_kenergy(phi, 1.0, settings)?;
    let ratio = delta / delta0;
    let predicted = ratio * at_delta0.value + (1.0 - ratio) * smooth.value;
    Ok((at_delta.value - predicted).abs() / (1.0 + at_delta.value.abs()))
}

/// Change-of-reference cocycle defect upstairs: with the gauge `φ₀` turning
/// the degenerate reference into the smooth one,
/// `K_{d·ω_FS}(φ_a) - K_{d·ω_FS}(φ_b)` must equal
/// `K_{f*ω}(φ_a+φ₀) - K_{f*ω}(φ_b+φ₀)`.
pub fn cocycle_defect(
    phi_a: &RadialPotential,
    phi_b: &RadialPotential,
    degree: u32,
    settings: &QuadratureSettings,
) -> Result<f64, KEnergyError> {
    if degree == 0 {
        return Err(KEnergyError::InvalidDegree { degree });
    }
    let gauge = RadialPotential::cover_gauge(degree)?;
    let smooth_a = eval_scaled_smooth_kenergy(phi_a, degree, settings)?;
    let smooth_b = eval_scaled_smooth_kenergy(phi_b, degree, settings)?;
    let lifted_a = RadialPotential::sum(vec![phi_a.clone(), gauge.clone()]);
    let lifted_b = RadialPotential::sum(vec![phi_b.clone(), gauge]);
    let degenerate_a = eval_cover_kenergy_upstairs(&lifted_a, degree, settings)?;
    let degenerate_b = eval_cover_kenergy_upstairs(&lifted_b, degree, settings)?;
    let lhs = smooth_a.value - smooth_b.value;
    let rhs = degenerate_a.value - degenerate_b.value;
    Ok((lhs - rhs).abs())
}

/// `|∫ Ric(ω_FS) - 4π|` through the module's quadrature: the total Ricci
/// curvature of the sphere must come out as `4π` (Euler characteristic 2).
pub fn gauss_bonnet_check(settings: &QuadratureSettings) -> f64 {
    let grid = CompositeGrid::new(settings, &[]);
    let total = 2.0 * PI * grid.integrate(settings.order, &|t: f64| 2.0 * fs_density(t));
    (total - 4.0 * PI).abs()
}

/// `|area(f*ω) - 2πd|`: the pulled-back reference of the degree-`d` covering
/// carries `d` times the base area.
pub fn pullback_area_defect(
    degree: u32,
    settings: &QuadratureSettings,
) -> Result<f64, KEnergyError> {
    if degree == 0 {
        return Err(KEnergyError::InvalidDegree { degree });
    }
    let grid = CompositeGrid::new(settings, &[1.0 / degree as f64]);
    let area = 2.0 * PI * grid.integrate(settings.order, &|t: f64| pullback_density(degree, t));
    Ok((area - 2.0 * PI * degree as f64).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn settings() -> QuadratureSettings {
        QuadratureSettings::default()
    }

    #[test]
    fn zero_potential_has_zero_energy_in_every_configuration() {
        let zero = RadialPotential::Zero;
        for &beta in &[1.0, 0.5, 0.125] {
            let r = eval_log_kenergy(&zero, beta, &settings()).unwrap();
            assert_eq!(r.value, 0.0);
            assert!(r.divisor_terms.iter().all(|&d| d == 0.0));
        }
        for degree in 1..=5 {
            let r = eval_cover_kenergy(&zero, degree, &settings()).unwrap();
            assert_eq!(r.value, 0.0);
            let s = eval_scaled_smooth_kenergy(&zero, degree, &settings()).unwrap();
            assert_eq!(s.value, 0.0);
        }
    }

    #[test]
    fn moebius_family_has_vanishing_smooth_kenergy() {
        // The Möbius metrics are isometric images of the reference, where the
        // K-energy attains its minimum 0.
        for &lambda in &[2.0, 5.0] {
            let phi = RadialPotential::moebius(lambda).unwrap();
            let r = eval_log_kenergy(&phi, 1.0, &settings()).unwrap();
            assert!(
                r.value.abs() <= 1e-6,
                "lambda {lambda}: K = {} (estimate {})",
                r.value,
                r.quadrature_error_estimate
            );
        }
    }

    #[test]
    fn value_equals_term_sum_and_bump_energy_is_positive() {
        let bump = RadialPotential::standard_bump();
        for &beta in &[1.0, 0.5, 0.25] {
            let r = eval_log_kenergy(&bump, beta, &settings()).unwrap();
            let rel = (r.value - r.term_sum()).abs() / (1.0 + r.value.abs());
            assert!(rel <= 1e-12, "beta {beta}: {rel}");
            assert_eq!(r.divisor_terms.len(), 2);
        }
        let smooth = eval_log_kenergy(&bump, 1.0, &settings()).unwrap();
        assert!(smooth.value > 0.0, "K = {}", smooth.value);
    }

    #[test]
    fn cone_energy_matches_independent_trapezoid_oracle() {
        // Dense uniform trapezoid evaluation of the same four closed-form
        // integrals, independent of the Gauss-Legendre machinery.
        let bump = RadialPotential::standard_bump();
        let beta = 0.5_f64;
        let result = eval_log_kenergy(&bump, beta, &settings()).unwrap();

        let (lo, hi, n) = (-60.0_f64, 60.0_f64, 240_000usize);
        let h = (hi - lo) / n as f64;
        let mut sums = [0.0_f64; 4];
        for k in 0..=n {
            let t = lo + k as f64 * h;
            let w = if k == 0 || k == n { 0.5 } else { 1.0 };
            let dd = bump.second_derivative(t);
            let rho0 = fs_density(t);
            let u0 = log_one_plus_exp(t);
            sums[0] += w * (dd / rho0).ln_1p() * (rho0 + dd);
            sums[1] += w * (t - u0) * dd;
            sums[2] += w * (-u0) * dd;
            sums[3] += w * bump.value(t) * dd;
        }
        let two_pi = 2.0 * PI;
        let oracle = two_pi * h * (sums[0] + (1.0 - beta) * (sums[1] + sums[2]) + beta * sums[3]);
        assert!(
            (result.value - oracle).abs() <= 1e-6,
            "quadrature {} vs trapezoid {}",
            result.value,
            oracle
        );
    }

    #[test]
    fn pullback_identity_holds_across_degrees_and_potentials() {
        let bump = RadialPotential::standard_bump();
        for degree in 2..=5 {
            let defect = verify_pullback_identity(&bump, degree, &settings()).unwrap();
            assert!(defect <= 1e-6, "bump, degree {degree}: {defect}");
        }
        let moebius = RadialPotential::moebius(2.0).unwrap();
        let defect = verify_pullback_identity(&moebius, 2, &settings()).unwrap();
        assert!(defect <= 1e-6, "moebius: {defect}");
        assert_eq!(
            verify_pullback_identity(&RadialPotential::Zero, 3, &settings()).unwrap(),
            0.0
        );
    }

    #[test]
    fn degree_one_cover_energy_is_the_smooth_base_energy() {
        let bump = RadialPotential::standard_bump();
        let upstairs = eval_cover_kenergy(&bump, 1, &settings()).unwrap();
        let base = eval_log_kenergy(&bump, 1.0, &settings()).unwrap();
        assert!(
            (upstairs.value - base.value).abs() <= 1e-10,
            "{} vs {}",
            upstairs.value,
            base.value
        );
        // No ramification: the point terms vanish.
        assert!(upstairs.divisor_terms.iter().all(|&p| p == 0.0));
    }

    #[test]
    fn angle_linearity_is_machine_exact_on_shared_nodes() {
        let bump = RadialPotential::standard_bump();
        let defect = verify_delta_linearity(&bump, 2, 1.5, 1.0, &settings()).unwrap();
        assert!(defect <= 1e-12, "defect {defect}");
        let defect = verify_delta_linearity(&bump, 3, 1.25, 0.5, &settings()).unwrap();
        assert!(defect <= 1e-12, "defect {defect}");
        // delta = delta0 degenerates to an identical evaluation.
        let defect = verify_delta_linearity(&bump, 2, 1.5, 1.5, &settings()).unwrap();
        assert_eq!(defect, 0.0);
    }

    #[test]
    fn cocycle_between_references_holds_on_potential_pairs() {
        let pairs = [
            (RadialPotential::standard_bump(), RadialPotential::Zero),
            (
                RadialPotential::moebius(2.0).unwrap(),
                RadialPotential::standard_bump(),
            ),
            (
                RadialPotential::scaled(0.4, RadialPotential::standard_bump()),
                RadialPotential::moebius(5.0).unwrap(),
            ),
        ];
        for degree in [2u32, 3] {
            for (a, b) in &pairs {
                let defect = cocycle_defect(a, b, degree, &settings()).unwrap();
                assert!(
                    defect <= 1e-6,
                    "degree {degree}, {} vs {}: {defect}",
                    a.describe(),
                    b.describe()
                );
            }
        }
    }

    #[test]
    fn gauss_bonnet_and_cover_area_normalizations() {
        assert!(gauss_bonnet_check(&settings()) <= 1e-10);
        // A deliberately coarse rule still lands within 1e-6.
        let coarse = QuadratureSettings::coarse(1.5, 8);
        assert!(gauss_bonnet_check(&coarse) <= 1e-6);
        for degree in [1u32, 2, 5] {
            let defect = pullback_area_defect(degree, &settings()).unwrap();
            assert!(defect <= 1e-10, "degree {degree}: {defect}");
        }
    }

    #[test]
    fn inadmissible_potential_is_rejected_at_a_node() {
        // A tall narrow bump drives the density negative near its center.
        let spike = RadialPotential::bump(0.0, 5.0, 0.5).unwrap();
        match eval_log_kenergy(&spike, 1.0, &settings()) {
            Err(KEnergyError::PositivityViolated { density, .. }) => {
                assert!(density <= 0.0);
            }
            other => panic!("expected positivity violation, got {other:?}"),
        }
    }

    #[test]
    fn parameter_validation_rejects_out_of_range_inputs() {
        let bump = RadialPotential::standard_bump();
        for &beta in &[0.0, -0.5, 1.5, f64::NAN] {
            assert!(matches!(
                eval_log_kenergy(&bump, beta, &settings()),
                Err(KEnergyError::InvalidAngle { .. })
            ));
        }
        assert!(matches!(
            eval_cover_kenergy(&bump, 0, &settings()),
            Err(KEnergyError::InvalidDegree { .. })
        ));
        assert!(matches!(
            verify_delta_linearity(&bump, 1, 1.0, 0.5, &settings()),
            Err(KEnergyError::InvalidDegree { .. })
        ));
        assert!(matches!(
            verify_delta_linearity(&bump, 2, 2.0, 1.0, &settings()),
            Err(KEnergyError::InvalidAngleRange(_))
        ));
        assert!(matches!(
            verify_delta_linearity(&bump, 2, 1.5, 0.0, &settings()),
            Err(KEnergyError::InvalidAngleRange(_))
        ));
    }

    #[test]
    fn unattainable_tolerance_reports_non_convergence() {
        let bump = RadialPotential::standard_bump();
        let mut strict = settings();
        strict.convergence_tolerance = 1e-30;
        match eval_log_kenergy(&bump, 0.5, &strict) {
            Err(KEnergyError::QuadratureNotConverged {
                estimate,
                tolerance,
            }) => {
                assert!(estimate > tolerance);
            }
            other => panic!("expected convergence failure, got {other:?}"),
        }
    }
}
