//! Composite Gauss–Legendre quadrature on a graded symmetric mesh of the real
//! line.
//!
//! Every integral in this module's parent is a 1-D integral over the radial
//! coordinate `t = log|w|²` of an integrand that decays at least like
//! `e^{-|t|}` (possibly times a polynomial) as `t → ±∞`.  Truncating at
//! `|t| = 48` therefore leaves a tail below `1e-19`, far under every tolerance
//! used here.  Within the truncated window the integrands are analytic, so a
//! composite Gauss–Legendre rule with moderate panel width converges
//! spectrally.
//!
//! Pulled-back data oscillates on a scale `1/d` for a degree-`d` covering, so
//! the mesh is a union of scaled ladders: a unit-scale ladder covering
//! `[-48, 48]` plus, for every extra scale `s`, a ladder with panel width
//! `s · w` covering `[-48·s, 48·s]`.  Outside that inner window the
//! fine-scale features are already in their exponential tail and the
//! unit-scale ladder resolves them.
//!
//! Error estimation uses node doubling: each integral is evaluated with the
//! configured rule order and with twice that order on the same panels; the
//! difference is reported as the error estimate and the higher-order value is
//! kept.

/// Tunable parameters for the quadrature scheme.
///
/// The defaults are deliberately generous: smooth integrands are resolved to
/// machine precision, which the self-estimates in the test suite confirm.
#[derive(Clone, Debug)]
pub struct QuadratureSettings {
    /// Truncation point of the real line: integrals run over `[-max_abs_t, max_abs_t]`.
    pub max_abs_t: f64,
    /// Panel width of the unit-scale ladder.
    pub panel_width: f64,
    /// Gauss–Legendre order per panel (number of nodes).  The companion
    /// evaluation used for the error estimate doubles this.
    pub order: usize,
    /// Upper bound accepted for a result's self-estimated quadrature error.
    pub convergence_tolerance: f64,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        QuadratureSettings {
            max_abs_t: 48.0,
            panel_width: 0.75,
            order: 16,
            convergence_tolerance: 1e-8,
        }
    }
}

impl QuadratureSettings {
    /// A deliberately coarse configuration used to measure convergence order.
    pub fn coarse(panel_width: f64, order: usize) -> Self {
        QuadratureSettings {
            panel_width,
            order,
            ..QuadratureSettings::default()
        }
    }
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
///
/// Computed by Newton iteration on the Legendre polynomial `P_n`, using the
/// standard asymptotic initial guesses.  For the orders used here (≤ 64) the
/// iteration converges to machine precision in a handful of steps.
pub fn legendre_rule(order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(order >= 1, "quadrature order must be at least 1");
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Initial guess for the i-th root (descending order).
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n and P_n' by the three-term recurrence.
            let mut p_prev = 1.0_f64;
            let mut p = x;
            for k in 2..=n {
                let kf = k as f64;
                let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
                p_prev = p;
                p = p_next;
            }
            dp = (n as f64) * (x * p - p_prev) / (x * x - 1.0);
            let step = p / dp;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// A fixed partition of `[-max_abs_t, max_abs_t]` into panels.
#[derive(Clone, Debug)]
pub struct CompositeGrid {
    boundaries: Vec<f64>,
}

impl CompositeGrid {
    /// Builds the graded symmetric mesh for the given extra feature scales.
    ///
    /// `extra_scales` lists the characteristic lengths (relative to the unit
    /// scale) on which the integrand varies; a degree-`d` pullback contributes
    /// `1/d`.  The unit scale is always included.
    pub fn new(settings: &QuadratureSettings, extra_scales: &[f64]) -> CompositeGrid {
        let t_max = settings.max_abs_t;
        let width = settings.panel_width;
        assert!(
            t_max > 0.0 && width > 0.0,
            "mesh parameters must be positive"
        );

        let mut scales: Vec<f64> = vec![1.0];
        for &s in extra_scales {
            assert!(s.is_finite() && s > 0.0, "mesh scales must be positive");
            scales.push(s.min(1.0));
        }

        let mut boundaries: Vec<f64> = Vec::new();
        for &s in &scales {
            let step = width * s;
            let reach = t_max * s;
            let count = (reach / step).ceil() as usize;
            for k in 0..=count {
                let b = (k as f64 * step).min(reach);
                boundaries.push(b);
                boundaries.push(-b);
            }
        }
        boundaries.push(t_max);
        boundaries.push(-t_max);
        boundaries.sort_by(|a, b| a.partial_cmp(b).expect("finite boundaries"));
        // Drop near-duplicates so every panel has positive length.
        let mut dedup: Vec<f64> = Vec::with_capacity(boundaries.len());
        for b in boundaries {
            match dedup.last() {
                Some(&prev) if b - prev <= 1e-9 => {}
                _ => dedup.push(b),
            }
        }
        assert!(dedup.len() >= 2, "mesh must contain at least one panel");
        CompositeGrid { boundaries: dedup }
    }

    /// Number of panels in the mesh.
    pub fn panel_count(&self) -> usize {
        self.boundaries.len() - 1
    }

    /// Integrates `f` over the mesh with the `order`-point rule per panel.
    pub fn integrate(&self, order: usize, f: &dyn Fn(f64) -> f64) -> f64 {
        let (nodes, weights) = legendre_rule(order);
        let mut total = 0.0;
        for pair in self.boundaries.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let mid = 0.5 * (a + b);
            let half = 0.5 * (b - a);
            let mut panel = 0.0;
            for (&x, &w) in nodes.iter().zip(weights.iter()) {
                panel += w * f(mid + half * x);
            }
            total += half * panel;
        }
        total
    }

    /// Integrates `f` with the configured order and with the doubled order,
    /// returning the doubled-order value and the node-doubling error estimate.
    pub fn integrate_with_estimate(&self, order: usize, f: &dyn Fn(f64) -> f64) -> (f64, f64) {
        let coarse = self.integrate(order, f);
        let fine = self.integrate(2 * order, f);
        (fine, (fine - coarse).abs())
    }

    /// Visits every node of both the configured-order and doubled-order rules.
    ///
    /// Used for admissibility pre-checks so that a violation is diagnosed at
    /// an actual evaluation point rather than surfacing as a `NaN` integral.
    pub fn for_each_node(&self, order: usize, visit: &mut dyn FnMut(f64)) {
        for ord in [order, 2 * order] {
            let (nodes, _) = legendre_rule(ord);
            for pair in self.boundaries.windows(2) {
                let (a, b) = (pair[0], pair[1]);
                let mid = 0.5 * (a + b);
                let half = 0.5 * (b - a);
                for &x in &nodes {
                    visit(mid + half * x);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_rules_integrate_polynomials_exactly() {
        // The n-point rule is exact on polynomials of degree 2n-1.
        for order in [1usize, 2, 5, 16] {
            let (nodes, weights) = legendre_rule(order);
            assert_eq!(nodes.len(), order);
            let max_degree = 2 * order - 1;
            for degree in 0..=max_degree {
                let quad: f64 = nodes
                    .iter()
                    .zip(weights.iter())
                    .map(|(&x, &w)| w * x.powi(degree as i32))
                    .sum();
                let exact = if degree % 2 == 0 {
                    2.0 / (degree as f64 + 1.0)
                } else {
                    0.0
                };
                assert!(
                    (quad - exact).abs() < 1e-13,
                    "order {order} degree {degree}: {quad} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn legendre_weights_sum_to_interval_length() {
        for order in [2usize, 8, 32, 64] {
            let (_, weights) = legendre_rule(order);
            let sum: f64 = weights.iter().sum();
            assert!((sum - 2.0).abs() < 1e-13, "order {order}: {sum}");
        }
    }

    #[test]
    fn grid_integrates_gaussian_to_machine_precision() {
        let settings = QuadratureSettings::default();
        let grid = CompositeGrid::new(&settings, &[]);
        let (value, estimate) =
            grid.integrate_with_estimate(settings.order, &|t: f64| (-t * t).exp());
        let exact = std::f64::consts::PI.sqrt();
        assert!((value - exact).abs() < 1e-13, "value {value}");
        assert!(estimate < 1e-12, "estimate {estimate}");
    }

    #[test]
    fn grid_resolves_fine_scale_features_with_extra_ladder() {
        // e^{-(10 t)^2} concentrated on scale 1/10.
        let settings = QuadratureSettings::default();
        let fine = CompositeGrid::new(&settings, &[0.1]);
        let (value, estimate) =
            fine.integrate_with_estimate(settings.order, &|t: f64| (-(10.0 * t).powi(2)).exp());
        let exact = std::f64::consts::PI.sqrt() / 10.0;
        assert!((value - exact).abs() < 1e-13, "value {value}");
        assert!(estimate < 1e-12, "estimate {estimate}");
    }

    #[test]
    fn boundaries_are_symmetric_and_span_the_window() {
        let settings = QuadratureSettings::default();
        let grid = CompositeGrid::new(&settings, &[0.25]);
        let first = grid.boundaries.first().copied().unwrap();
        let last = grid.boundaries.last().copied().unwrap();
        assert_eq!(first, -settings.max_abs_t);
        assert_eq!(last, settings.max_abs_t);
        for &b in &grid.boundaries {
            assert!(
                grid.boundaries.iter().any(|&c| (c + b).abs() < 1e-8),
                "boundary {b} lacks a mirror"
            );
        }
        assert!(grid.panel_count() >= 128);
    }

    #[test]
    fn node_doubling_estimate_shrinks_with_panel_width() {
        // Second-order rule: true error scales like width^4, so halving the
        // panel width must shrink the error by far more than 4x.
        let f = |t: f64| 1.0 / (1.0 + t * t);
        let coarse_settings = QuadratureSettings::coarse(3.0, 2);
        let fine_settings = QuadratureSettings::coarse(1.5, 2);
        let coarse = CompositeGrid::new(&coarse_settings, &[]);
        let fine = CompositeGrid::new(&fine_settings, &[]);
        let exact = 2.0 * (48.0_f64).atan();
        let err_coarse = (coarse.integrate(2, &f) - exact).abs();
        let err_fine = (fine.integrate(2, &f) - exact).abs();
        assert!(
            err_coarse > 4.0 * err_fine,
            "coarse {err_coarse} fine {err_fine}"
        );
    }
}
