//! Randomized property suites: exact lattice algebra, cone geometry, cover
//! calculus, certificate invariants, and numerical sanity, all driven by
//! proptest with exact rational inputs.

use covercert::{
    check_prescribed_angle, check_unit_angle, decompose_abelian, einstein_factor, eval_log_kenergy,
    find_delta_witness, mean_scalar, proj_cyclic_instance, quadric_cyclic_instance,
    BranchComponent, CoverDescriptor, CoverGroup, DivisorClass, GeometryModel, HypothesisLedger,
    QuadratureSettings, RadialPotential,
};
use num::{BigRational, One, Signed};
use proptest::collection::vec as pvec;
use proptest::prelude::*;

fn int(value: i64) -> BigRational {
    BigRational::from_integer(value.into())
}

fn frac(numer: i64, denom: i64) -> BigRational {
    BigRational::new(numer.into(), denom.into())
}

fn granted() -> HypothesisLedger {
    HypothesisLedger::granted()
}

fn geometry() -> impl Strategy<Value = GeometryModel> {
    prop_oneof![
        Just(GeometryModel::proj_space(1).unwrap()),
        Just(GeometryModel::proj_space(2).unwrap()),
        Just(GeometryModel::proj_space(3).unwrap()),
        Just(GeometryModel::prod_proj_spaces(&[1, 1]).unwrap()),
        Just(GeometryModel::prod_proj_spaces(&[1, 2]).unwrap()),
        Just(GeometryModel::blow_up_p2(1).unwrap()),
        Just(GeometryModel::blow_up_p2(2).unwrap()),
        Just(GeometryModel::blow_up_p2(3).unwrap()),
    ]
}

fn rank(geometry: &GeometryModel) -> usize {
    geometry.canonical_class().coeffs().len()
}

fn class_from_pairs(geometry: &GeometryModel, pairs: &[(i64, i64)]) -> DivisorClass {
    let coeffs = pairs.iter().map(|&(n, d)| frac(n, d)).collect();
    DivisorClass::new(geometry.clone(), coeffs).unwrap()
}

/// A geometry together with `count` unconstrained rational classes.
fn geometry_with_classes(
    count: usize,
) -> impl Strategy<Value = (GeometryModel, Vec<DivisorClass>)> {
    geometry().prop_flat_map(move |g| {
        let r = rank(&g);
        pvec(pvec((-6i64..=6, 1i64..=4), r), count).prop_map(move |raw| {
            let classes = raw
                .iter()
                .map(|pairs| class_from_pairs(&g, pairs))
                .collect();
            (g.clone(), classes)
        })
    })
}

/// A geometry with classes biased towards the nef cone (nonnegative degree
/// against the hyperplane, small exceptional parts), so rejection sampling
/// stays cheap.
fn geometry_with_nef_biased_classes(
    count: usize,
) -> impl Strategy<Value = (GeometryModel, Vec<DivisorClass>)> {
    geometry().prop_flat_map(move |g| {
        let r = rank(&g);
        let coeff = |i: usize| {
            if i == 0 {
                (0i64..=8, 1i64..=2).boxed()
            } else {
                (-2i64..=2, 1i64..=2).boxed()
            }
        };
        let one_class: Vec<BoxedStrategy<(i64, i64)>> = (0..r).map(coeff).collect();
        pvec(one_class, count).prop_map(move |raw| {
            let classes = raw
                .iter()
                .map(|pairs| class_from_pairs(&g, pairs))
                .collect();
            (g.clone(), classes)
        })
    })
}

/// `K_N + B_delta` paired against the fan of generators, plus the twisted
/// companion class, evaluated independently of the certifier internals.
fn feasible_at(
    geometry: &GeometryModel,
    cover: &CoverDescriptor,
    omega: &DivisorClass,
    delta: &BigRational,
) -> bool {
    let adjoint = geometry
        .canonical_class()
        .add(&cover.branch_class(delta).unwrap())
        .unwrap();
    if !adjoint.is_nef().0 {
        return false;
    }
    let n = geometry.dim();
    let mut factors = vec![adjoint.clone()];
    factors.extend(std::iter::repeat(omega.clone()).take(n - 1));
    let pairing = geometry.intersection_number(&factors).unwrap();
    let volume = geometry
        .intersection_number(&vec![omega.clone(); n])
        .unwrap();
    let twisted = omega
        .scale(&(int(n as i64) * pairing / volume))
        .sub(&adjoint.scale(&int(n as i64 - 1)))
        .unwrap();
    twisted.is_nef().0
}

fn brute_feasible(
    geometry: &GeometryModel,
    cover: &CoverDescriptor,
    omega: &DivisorClass,
    steps: i64,
) -> bool {
    let sup = cover.delta_sup().unwrap();
    let step = (sup - int(1)) / int(steps);
    (0..steps).any(|j| {
        let delta = int(1) + step.clone() * int(j);
        feasible_at(geometry, cover, omega, &delta)
    })
}

fn is_prime_power(mut value: u64) -> bool {
    if value < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= value {
        if value % p == 0 {
            while value % p == 0 {
                value /= p;
            }
            return value == 1;
        }
        p += 1;
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// The intersection product is linear in its first slot.
    #[test]
    fn intersection_is_multilinear(
        (g, classes) in geometry_with_classes(6),
        (qn, qd) in (-6i64..=6, 1i64..=4),
    ) {
        let n = g.dim();
        let q = frac(qn, qd);
        let a = &classes[0];
        let b = &classes[1];
        let rest: Vec<DivisorClass> = classes[2..2 + (n - 1)].to_vec();

        let mut combined = vec![a.scale(&q).add(b).unwrap()];
        combined.extend(rest.iter().cloned());
        let lhs = g.intersection_number(&combined).unwrap();

        let mut first = vec![a.clone()];
        first.extend(rest.iter().cloned());
        let mut second = vec![b.clone()];
        second.extend(rest.iter().cloned());
        let rhs = q * g.intersection_number(&first).unwrap()
            + g.intersection_number(&second).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// The intersection product does not depend on the slot order.
    #[test]
    fn intersection_is_symmetric((g, classes) in geometry_with_classes(4)) {
        let n = g.dim();
        let slots: Vec<DivisorClass> = classes[..n].to_vec();
        let base = g.intersection_number(&slots).unwrap();
        let mut rotated = slots.clone();
        rotated.rotate_left(1);
        prop_assert_eq!(g.intersection_number(&rotated).unwrap(), base.clone());
        let mut swapped = slots.clone();
        swapped.reverse();
        prop_assert_eq!(g.intersection_number(&swapped).unwrap(), base);
    }

    /// Ample classes are nef, and nef classes have nonnegative top power.
    #[test]
    fn ample_nef_top_chain((g, classes) in geometry_with_classes(1)) {
        let class = &classes[0];
        let (nef, margins) = class.is_nef();
        if class.is_ample() {
            prop_assert!(nef, "ample class failed the nef test");
            prop_assert!(margins.iter().all(|m| m.is_positive()));
        }
        if nef {
            let top = g
                .intersection_number(&vec![class.clone(); g.dim()])
                .unwrap();
            prop_assert!(!top.is_negative(), "nef class with negative top power");
        }
    }

    /// Ampleness on the three-point blow-up is exactly the system of pair
    /// inequalities.
    #[test]
    fn blow_up_ample_inequalities(
        (kn, kd) in (-4i64..=12, 1i64..=3),
        raw_a in pvec((-4i64..=8, 1i64..=3), 3),
    ) {
        let g = GeometryModel::blow_up_p2(3).unwrap();
        let k = frac(kn, kd);
        let a: Vec<BigRational> = raw_a.iter().map(|&(n, d)| frac(n, d)).collect();
        let class = DivisorClass::new(
            g.clone(),
            vec![k.clone(), -a[0].clone(), -a[1].clone(), -a[2].clone()],
        )
        .unwrap();
        let expected = a.iter().all(|ai| ai.is_positive())
            && (0..3).all(|i| (0..3).all(|j| i == j || k > &a[i] + &a[j]));
        prop_assert_eq!(class.is_ample(), expected);
    }

    /// Elementary-divisor decomposition: order preserved, sorted descending,
    /// every summand a prime power, concatenation respected.
    #[test]
    fn abelian_decomposition_shape(
        factors in pvec(1u64..=60, 1..=5),
        split in 0usize..=5,
    ) {
        let summands = decompose_abelian(&factors).unwrap();
        let order: u64 = factors.iter().product();
        prop_assert_eq!(summands.iter().product::<u64>(), order);
        prop_assert!(summands.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(summands.iter().all(|&s| is_prime_power(s)));

        let cut = split.min(factors.len());
        let mut merged = decompose_abelian(&factors[..cut]).unwrap();
        merged.extend(decompose_abelian(&factors[cut..]).unwrap());
        merged.sort_unstable_by(|x, y| y.cmp(x));
        prop_assert_eq!(merged, summands);
    }

    /// The scaled branch class is linear in the angle.
    #[test]
    fn branch_class_is_linear_in_the_angle(
        b in 1i64..=8,
        m in 2u64..=6,
        (dn, dd) in (0i64..=9, 1i64..=4),
        (en, ed) in (0i64..=9, 1i64..=4),
    ) {
        let g = GeometryModel::proj_space(2).unwrap();
        let branch = DivisorClass::from_integers(g.clone(), &[b]).unwrap();
        let cover = CoverDescriptor::new(
            m,
            CoverGroup::Cyclic,
            vec![BranchComponent::new(branch, m)],
        )
        .unwrap();
        let delta = frac(dn, dd);
        let eta = frac(en, ed);
        let at_delta = cover.branch_class(&delta).unwrap();
        let at_eta = cover.branch_class(&eta).unwrap();
        let at_sum = cover.branch_class(&(&delta + &eta)).unwrap();
        let summed = at_delta.add(&at_eta).unwrap();
        prop_assert_eq!(summed.coeffs(), at_sum.coeffs());
        let rescaled = cover.branch_class(&BigRational::one()).unwrap().scale(&delta);
        prop_assert_eq!(rescaled.coeffs(), at_delta.coeffs());
    }
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 200,
        max_global_rejects: 60_000,
        ..ProptestConfig::default()
    })]

    /// Nonnegative rational combinations never leave the nef cone.
    #[test]
    fn nef_cone_is_closed_under_combinations(
        (_g, classes) in geometry_with_nef_biased_classes(2),
        (q1n, q1d) in (0i64..=6, 1i64..=4),
        (q2n, q2d) in (0i64..=6, 1i64..=4),
    ) {
        prop_assume!(classes[0].is_nef().0 && classes[1].is_nef().0);
        let combo = classes[0]
            .scale(&frac(q1n, q1d))
            .add(&classes[1].scale(&frac(q2n, q2d)))
            .unwrap();
        prop_assert!(combo.is_nef().0, "combination left the nef cone");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Scaling the polarization changes nothing about the verdict, the
    /// witness, or the feasible interval; the Einstein factor and the mean
    /// scalar divide by the same factor.
    #[test]
    fn polarization_scaling_invariance(
        d in 2i64..=4,
        b1 in 1i64..=3,
        b2 in 1i64..=3,
        a1 in 1i64..=3,
        a2 in 1i64..=3,
        (qn, qd) in (1i64..=6, 1i64..=4),
    ) {
        let (g, cover, omega) = quadric_cyclic_instance(d, b1, b2, a1, a2).unwrap();
        let q = frac(qn, qd);
        let scaled = omega.scale(&q);

        let base = find_delta_witness(&g, &cover, &omega, &granted()).unwrap();
        let moved = find_delta_witness(&g, &cover, &scaled, &granted()).unwrap();
        prop_assert_eq!(base.verdict, moved.verdict);
        prop_assert_eq!(&base.delta_witness, &moved.delta_witness);
        prop_assert_eq!(
            base.feasible_interval.is_some(),
            moved.feasible_interval.is_some()
        );
        if let (Some(lhs), Some(rhs)) = (&base.feasible_interval, &moved.feasible_interval) {
            prop_assert_eq!(lhs.lo(), rhs.lo());
            prop_assert_eq!(lhs.hi(), rhs.hi());
        }

        let factor = einstein_factor(&g, &cover, &omega).unwrap();
        let factor_scaled = einstein_factor(&g, &cover, &scaled).unwrap();
        match (factor, factor_scaled) {
            (Some(f), Some(fs)) => prop_assert_eq!(f, fs * &q),
            (None, None) => {}
            other => prop_assert!(false, "proportionality changed under scaling: {:?}", other),
        }

        let s = mean_scalar(&g, &cover, &omega).unwrap();
        let s_scaled = mean_scalar(&g, &cover, &scaled).unwrap();
        prop_assert_eq!(s, s_scaled * q);
    }

    /// The sweep agrees with a brute-force scan of the admissible interval:
    /// any angle the scan certifies is covered by the sweep, and the sweep's
    /// witness satisfies the constraints it reports.
    #[test]
    fn sweep_matches_brute_force_oracle(
        n in 1i64..=3,
        d in 2i64..=4,
        lambda in 1i64..=8,
    ) {
        let (g, cover, omega) = proj_cyclic_instance(n, d, lambda).unwrap();
        let cert = find_delta_witness(&g, &cover, &omega, &granted()).unwrap();
        if brute_feasible(&g, &cover, &omega, 48) {
            prop_assert!(cert.proven(), "oracle found an angle the sweep missed");
        }
        if let Some(witness) = &cert.delta_witness {
            prop_assert!(feasible_at(&g, &cover, &omega, witness));
            let interval = cert.feasible_interval.as_ref().unwrap();
            prop_assert_eq!(interval.lo(), witness);
            prop_assert!(interval.lo_closed(), "witness must be attained");
            prop_assert!(witness >= &BigRational::one());
        }
    }

    /// Fixing the branch weight evaluates the same constraint system at the
    /// induced angle.
    #[test]
    fn prescribed_weight_matches_induced_angle(
        n in 1i64..=3,
        d in 2i64..=4,
        lambda in 1i64..=8,
        p in 1i64..=4,
        extra in 0i64..=6,
    ) {
        let (g, cover, omega) = proj_cyclic_instance(n, d, lambda).unwrap();
        // Any rational weight in (0, 1/d].
        let beta0 = frac(p, p * d + extra);
        let cert = check_prescribed_angle(&g, &cover, &omega, &granted(), &beta0).unwrap();
        let delta = (BigRational::one() - &beta0) * frac(d, d - 1);
        prop_assert_eq!(cert.proven(), feasible_at(&g, &cover, &omega, &delta));
        prop_assert_eq!(cert.prescribed_angle.as_ref(), Some(&beta0));
        prop_assert_eq!(cert.delta_probe.as_ref(), Some(&delta));
    }

    /// The unit-angle gate is the constraint system frozen at angle one.
    #[test]
    fn unit_angle_matches_direct_evaluation(
        n in 1i64..=3,
        d in 2i64..=4,
        lambda in 1i64..=8,
    ) {
        let (g, cover, omega) = proj_cyclic_instance(n, d, lambda).unwrap();
        let cert = check_unit_angle(&g, &cover, &omega, &granted()).unwrap();
        prop_assert_eq!(
            cert.proven(),
            feasible_at(&g, &cover, &omega, &BigRational::one())
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The smooth K-energy is bounded below by zero on every admissible
    /// potential (up to quadrature error): it vanishes on the reference and
    /// on the scaling orbit and is convex along the paths used here.  Draws
    /// whose curvature breaks metric positivity are rejected by the
    /// evaluator and skipped.
    #[test]
    fn smooth_kenergy_is_nonnegative(
        center in -2.0f64..2.0,
        height in 0.0f64..0.25,
        width in 0.8f64..3.0,
        lambda in 0.3f64..3.5,
    ) {
        let settings = QuadratureSettings::default();
        let bump = RadialPotential::bump(center, height, width).unwrap();
        let moebius = RadialPotential::moebius(lambda).unwrap();
        for potential in [bump, moebius] {
            match eval_log_kenergy(&potential, 1.0, &settings) {
                Ok(result) => prop_assert!(
                    result.value >= -1e-6,
                    "smooth energy {} below tolerance for {:?}",
                    result.value,
                    potential
                ),
                Err(covercert::KEnergyError::PositivityViolated { .. })
                | Err(covercert::KEnergyError::QuadratureNotConverged { .. }) => {
                    prop_assume!(false, "potential at the admissibility boundary");
                }
                Err(other) => prop_assert!(false, "unexpected error {:?}", other),
            }
        }
    }
}
