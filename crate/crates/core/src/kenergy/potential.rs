//! Rotation-invariant Kähler potentials on the Riemann sphere.
//!
//! In the radial coordinate `t = log|w|²` a rotation-invariant potential is a
//! smooth bounded function `ϕ(t)` with finite limits at `t = ±∞` (the two
//! poles of the sphere) and `i∂∂̄ϕ = ϕ''(t) · dt∧dθ`.  The reference metric is
//! the Fubini–Study form `ω = i∂∂̄ log(1+e^t)` of total area `2π`, with radial
//! density `ρ₀(t) = 1/(4 cosh²(t/2))`.
//!
//! The catalogue below covers every potential the verification suite needs:
//!
//! * [`RadialPotential::Zero`] — the reference metric itself;
//! * [`RadialPotential::MoebiusScaling`] — the pullback of the Fubini–Study
//!   metric by the automorphism `w ↦ λ²w`, written as a potential; the
//!   K-energy of this family vanishes identically, which pins the overall
//!   normalization;
//! * [`RadialPotential::Bump`] — a Gaussian bump in `t`, a generic admissible
//!   perturbation with no special symmetry;
//! * [`RadialPotential::CoverGauge`] — for the degree-`d` covering
//!   `z ↦ z^d`, the fixed potential `φ₀` with
//!   `f*ω + i∂∂̄φ₀ = d·ω_FS`: it exchanges the pulled-back (degenerate)
//!   reference for a smooth one in the same class;
//! * [`RadialPotential::Pullback`] — `ϕ(d·t)`, the pullback of a base
//!   potential through `z ↦ z^d`;
//! * [`RadialPotential::Sum`] and [`RadialPotential::Scaled`] — closure under
//!   the affine operations the cocycle and linearity checks require.

use super::KEnergyError;

/// Logistic sigmoid `σ(t) = 1/(1+e^{-t})`, the first derivative of
/// `log(1+e^t)`.
pub(crate) fn sigmoid(t: f64) -> f64 {
    if t >= 0.0 {
        1.0 / (1.0 + (-t).exp())
    } else {
        let e = t.exp();
        e / (1.0 + e)
    }
}

/// `log(1+e^t)`, evaluated without overflow for large `|t|`.
pub(crate) fn log_one_plus_exp(t: f64) -> f64 {
    t.max(0.0) + (-t.abs()).exp().ln_1p()
}

/// Radial density of the Fubini–Study metric: `ρ₀(t) = 1/(4 cosh²(t/2))`,
/// equal to `σ(t)(1-σ(t))` and to `e^{-|t|}/(1+e^{-|t|})²`.
pub(crate) fn fs_density(t: f64) -> f64 {
    let s = sigmoid(-t.abs());
    s * (1.0 - s)
}

/// Radial density of the degree-`d` pullback `f*ω_FS`, `f(z) = z^d`:
/// `π_d(t) = d²·ρ₀(d·t)`.
pub(crate) fn pullback_density(degree: u32, t: f64) -> f64 {
    let d = degree as f64;
    d * d * fs_density(d * t)
}

/// A rotation-invariant potential on the sphere, closed under pullback, sums
/// and scaling.
#[derive(Clone, Debug, PartialEq)]
pub enum RadialPotential {
    /// The zero potential (reference metric unchanged).
    Zero,
    /// `ϕ_λ(t) = log((1+λ²e^t)/(1+e^t))`: the Fubini–Study metric moved by
    /// the scaling automorphism `w ↦ λ²·w`.
    MoebiusScaling {
        /// Scaling parameter, strictly positive.
        lambda: f64,
    },
    /// Gaussian bump `h·exp(-((t-c)/w)²)`.
    Bump {
        /// Center `c` in the radial coordinate.
        center: f64,
        /// Amplitude `h` (may be negative as long as positivity holds).
        height: f64,
        /// Width `w > 0`.
        width: f64,
    },
    /// `φ₀(t) = d·log(1+e^t) − log(1+e^{dt})`, the gauge between the
    /// pulled-back reference and the smooth metric `d·ω_FS` upstairs.
    CoverGauge {
        /// Covering degree `d ≥ 1`.
        degree: u32,
    },
    /// `ϕ(d·t)`: pullback of a base potential through `z ↦ z^d`.
    Pullback {
        /// Covering degree `d ≥ 1`.
        degree: u32,
        /// The base potential being pulled back.
        inner: Box<RadialPotential>,
    },
    /// Pointwise sum of finitely many potentials.
    Sum {
        /// The summands.
        terms: Vec<RadialPotential>,
    },
    /// A potential multiplied by a real factor.
    Scaled {
        /// Multiplier.
        factor: f64,
        /// The potential being scaled.
        inner: Box<RadialPotential>,
    },
}

impl RadialPotential {
    /// Möbius-scaling potential with parameter `λ > 0`.
    pub fn moebius(lambda: f64) -> Result<RadialPotential, KEnergyError> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(KEnergyError::InvalidPotential(format!(
                "Moebius scaling parameter must be positive and finite, got {lambda}"
            )));
        }
        Ok(RadialPotential::MoebiusScaling { lambda })
    }

    /// Gaussian bump potential; the width must be positive.
    pub fn bump(center: f64, height: f64, width: f64) -> Result<RadialPotential, KEnergyError> {
        if !(center.is_finite() && height.is_finite() && width.is_finite() && width > 0.0) {
            return Err(KEnergyError::InvalidPotential(format!(
                "bump parameters must be finite with positive width, got \
                 center {center}, height {height}, width {width}"
            )));
        }
        Ok(RadialPotential::Bump {
            center,
            height,
            width,
        })
    }

    /// The default bump used throughout the verification suite: a mild,
    /// off-center perturbation that is admissible against every reference
    /// metric in the module.
    pub fn standard_bump() -> RadialPotential {
        RadialPotential::Bump {
            center: 0.7,
            height: 0.1,
            width: 2.0,
        }
    }

    /// Gauge potential exchanging `f*ω_FS` for `d·ω_FS`.
    pub fn cover_gauge(degree: u32) -> Result<RadialPotential, KEnergyError> {
        if degree == 0 {
            return Err(KEnergyError::InvalidDegree { degree });
        }
        Ok(RadialPotential::CoverGauge { degree })
    }

    /// Pullback of `inner` through `z ↦ z^d`.
    pub fn pullback(degree: u32, inner: RadialPotential) -> Result<RadialPotential, KEnergyError> {
        if degree == 0 {
            return Err(KEnergyError::InvalidDegree { degree });
        }
        Ok(RadialPotential::Pullback {
            degree,
            inner: Box::new(inner),
        })
    }

    /// Pointwise sum.
    pub fn sum(terms: Vec<RadialPotential>) -> RadialPotential {
        RadialPotential::Sum { terms }
    }

    /// Scalar multiple.
    pub fn scaled(factor: f64, inner: RadialPotential) -> RadialPotential {
        RadialPotential::Scaled {
            factor,
            inner: Box::new(inner),
        }
    }

    /// Value `ϕ(t)`.
    pub fn value(&self, t: f64) -> f64 {
        match self {
            RadialPotential::Zero => 0.0,
            RadialPotential::MoebiusScaling { lambda } => {
                let shift = 2.0 * lambda.ln();
                log_one_plus_exp(t + shift) - log_one_plus_exp(t)
            }
            RadialPotential::Bump {
                center,
                height,
                width,
            } => {
                let x = (t - center) / width;
                height * (-x * x).exp()
            }
            RadialPotential::CoverGauge { degree } => {
                let d = *degree as f64;
                d * log_one_plus_exp(t) - log_one_plus_exp(d * t)
            }
            RadialPotential::Pullback { degree, inner } => inner.value(*degree as f64 * t),
            RadialPotential::Sum { terms } => terms.iter().map(|p| p.value(t)).sum(),
            RadialPotential::Scaled { factor, inner } => factor * inner.value(t),
        }
    }

    /// Second derivative `ϕ''(t)`, the radial density of `i∂∂̄ϕ`.
    pub fn second_derivative(&self, t: f64) -> f64 {
        match self {
            RadialPotential::Zero => 0.0,
            RadialPotential::MoebiusScaling { lambda } => {
                let shift = 2.0 * lambda.ln();
                fs_density(t + shift) - fs_density(t)
            }
            RadialPotential::Bump {
                center,
                height,
                width,
            } => {
                let x = (t - center) / width;
                height * (-x * x).exp() * (4.0 * x * x - 2.0) / (width * width)
            }
            RadialPotential::CoverGauge { degree } => {
                let d = *degree as f64;
                d * fs_density(t) - d * d * fs_density(d * t)
            }
            RadialPotential::Pullback { degree, inner } => {
                let d = *degree as f64;
                d * d * inner.second_derivative(d * t)
            }
            RadialPotential::Sum { terms } => terms.iter().map(|p| p.second_derivative(t)).sum(),
            RadialPotential::Scaled { factor, inner } => factor * inner.second_derivative(t),
        }
    }

    /// Limit of `ϕ(t)` as `t → -∞` (value at the pole `w = 0`).
    pub fn limit_neg(&self) -> f64 {
        match self {
            RadialPotential::Zero
            | RadialPotential::MoebiusScaling { .. }
            | RadialPotential::Bump { .. }
            | RadialPotential::CoverGauge { .. } => 0.0,
            RadialPotential::Pullback { inner, .. } => inner.limit_neg(),
            RadialPotential::Sum { terms } => terms.iter().map(|p| p.limit_neg()).sum(),
            RadialPotential::Scaled { factor, inner } => factor * inner.limit_neg(),
        }
    }

    /// Limit of `ϕ(t)` as `t → +∞` (value at the pole `w = ∞`).
    pub fn limit_pos(&self) -> f64 {
        match self {
            RadialPotential::Zero
            | RadialPotential::Bump { .. }
            | RadialPotential::CoverGauge { .. } => 0.0,
            RadialPotential::MoebiusScaling { lambda } => 2.0 * lambda.ln(),
            RadialPotential::Pullback { inner, .. } => inner.limit_pos(),
            RadialPotential::Sum { terms } => terms.iter().map(|p| p.limit_pos()).sum(),
            RadialPotential::Scaled { factor, inner } => factor * inner.limit_pos(),
        }
    }

    /// Characteristic length scales (relative to the unit scale) on which the
    /// potential varies; feeds the graded quadrature mesh.
    pub fn feature_scales(&self) -> Vec<f64> {
        match self {
            RadialPotential::Zero
            | RadialPotential::MoebiusScaling { .. }
            | RadialPotential::Bump { .. } => vec![1.0],
            RadialPotential::CoverGauge { degree } => vec![1.0, 1.0 / *degree as f64],
            RadialPotential::Pullback { degree, inner } => {
                let d = *degree as f64;
                inner.feature_scales().iter().map(|s| s / d).collect()
            }
            RadialPotential::Sum { terms } => {
                let mut scales = Vec::new();
                for term in terms {
                    scales.extend(term.feature_scales());
                }
                if scales.is_empty() {
                    scales.push(1.0);
                }
                scales
            }
            RadialPotential::Scaled { inner, .. } => inner.feature_scales(),
        }
    }

    /// Short human-readable description used in reports.
    pub fn describe(&self) -> String {
        match self {
            RadialPotential::Zero => "zero".to_string(),
            RadialPotential::MoebiusScaling { lambda } => format!("moebius(lambda={lambda})"),
            RadialPotential::Bump {
                center,
                height,
                width,
            } => format!("bump(center={center}, height={height}, width={width})"),
            RadialPotential::CoverGauge { degree } => format!("cover-gauge(degree={degree})"),
            RadialPotential::Pullback { degree, inner } => {
                format!("pullback(degree={degree}, {})", inner.describe())
            }
            RadialPotential::Sum { terms } => {
                let parts: Vec<String> = terms.iter().map(|p| p.describe()).collect();
                format!("sum({})", parts.join(" + "))
            }
            RadialPotential::Scaled { factor, inner } => {
                format!("scaled({factor} * {})", inner.describe())
            }
        }
    }
}
