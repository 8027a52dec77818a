//! Ramified covering data over a catalogue base.
//!
//! A covering is described purely by its numerical shadow downstairs: the
//! Galois group, the total degree, and the branch divisor components with
//! their inertia orders.  From these the module computes the weighted branch
//! classes
//!
//! ```text
//! B_delta = delta * sum_i (1 - 1/d_i) * B_i ,
//! ```
//!
//! the admissible range `[1, delta_sup)` with `delta_sup = min_i d_i/(d_i-1)`,
//! the canonical class upstairs via the Hurwitz-type formula
//! `K_M = f^*(K_N + B_f)` (where `B_f = B_1`, the weight at `delta = 1`), the
//! mean scalar curvature of the covering metric, and the sign of its first
//! Chern class.  Everything is exact rational arithmetic.

use crate::lattice::{DivisorClass, GeometryModel, LatticeError};
use crate::rational::{int, ratio};
use num::rational::BigRational;
use num::{One, Zero};
use thiserror::Error;

/// Errors surfaced by covering-data validation and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("covering degree must be >= {minimum}, got {degree}")]
    InvalidDegree { degree: u64, minimum: u64 },
    #[error("a branched covering needs at least one branch component")]
    EmptyBranches,
    #[error("operation needs branch data, but the covering is unramified")]
    NoBranches,
    #[error("inertia order {inertia} must be >= 2 and divide the degree {degree}")]
    InvalidInertia { inertia: u64, degree: u64 },
    #[error("branch components live on different geometries")]
    MixedGeometries,
    #[error("dihedral covering of parameter p={p} must have degree 2p and inertia 2 everywhere (degree given: {degree})")]
    DihedralShape { degree: u64, p: u64 },
    #[error("invalid abelian invariant factors: {0}")]
    InvalidAbelianFactors(String),
    #[error("the reference class has vanishing top self-intersection")]
    DegenerateVolume,
}

/// The Galois group of the covering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoverGroup {
    /// Cyclic of order equal to the covering degree.
    Cyclic,
    /// A finite abelian group given by its invariant factors.
    Abelian { invariant_factors: Vec<u64> },
    /// Dihedral of order `2p` with `p >= 3`; branch inertia is always 2.
    Dihedral { p: u64 },
}

/// One irreducible component of the branch divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchComponent {
    /// Class of the (reduced) component downstairs.
    pub class: DivisorClass,
    /// Order of the inertia (stabiliser) group along the component.
    pub inertia: u64,
    /// Whether the component is asserted smooth.
    pub smooth: bool,
    /// Whether the component is asserted irreducible.
    pub irreducible: bool,
}

impl BranchComponent {
    pub fn new(class: DivisorClass, inertia: u64) -> Self {
        Self {
            class,
            inertia,
            smooth: true,
            irreducible: true,
        }
    }
}

/// Numerical description of a ramified Galois covering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverDescriptor {
    degree: u64,
    group: CoverGroup,
    branches: Vec<BranchComponent>,
}

impl CoverDescriptor {
    /// A branched covering; requires degree >= 2 and at least one component.
    pub fn new(
        degree: u64,
        group: CoverGroup,
        branches: Vec<BranchComponent>,
    ) -> Result<Self, CoverError> {
        if degree < 2 {
            return Err(CoverError::InvalidDegree { degree, minimum: 2 });
        }
        if branches.is_empty() {
            return Err(CoverError::EmptyBranches);
        }
        let descriptor = Self {
            degree,
            group,
            branches,
        };
        descriptor.validate()?;
        Ok(descriptor)
    }

    /// An unramified covering (empty branch divisor).  Degree 1 is allowed
    /// here and denotes the identity covering.
    pub fn unramified(degree: u64, group: CoverGroup) -> Result<Self, CoverError> {
        if degree < 1 {
            return Err(CoverError::InvalidDegree { degree, minimum: 1 });
        }
        let descriptor = Self {
            degree,
            group,
            branches: Vec::new(),
        };
        descriptor.validate()?;
        Ok(descriptor)
    }

    fn validate(&self) -> Result<(), CoverError> {
        for branch in &self.branches {
            if branch.inertia < 2 || self.degree % branch.inertia != 0 {
                return Err(CoverError::InvalidInertia {
                    inertia: branch.inertia,
                    degree: self.degree,
                });
            }
        }
        if let Some(first) = self.branches.first() {
            if self
                .branches
                .iter()
                .any(|b| b.class.geometry() != first.class.geometry())
            {
                return Err(CoverError::MixedGeometries);
            }
        }
        match &self.group {
            CoverGroup::Cyclic => {}
            CoverGroup::Abelian { invariant_factors } => {
                if invariant_factors.contains(&0) {
                    return Err(CoverError::InvalidAbelianFactors(
                        "factors must be positive".into(),
                    ));
                }
                let order: u64 = invariant_factors.iter().product();
                if order != self.degree {
                    return Err(CoverError::InvalidAbelianFactors(format!(
                        "factors multiply to {order}, degree is {}",
                        self.degree
                    )));
                }
            }
            CoverGroup::Dihedral { p } => {
                if *p < 3 || self.degree != 2 * p {
                    return Err(CoverError::DihedralShape {
                        degree: self.degree,
                        p: *p,
                    });
                }
                if self.branches.iter().any(|b| b.inertia != 2) {
                    return Err(CoverError::DihedralShape {
                        degree: self.degree,
                        p: *p,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn group(&self) -> &CoverGroup {
        &self.group
    }

    pub fn branches(&self) -> &[BranchComponent] {
        &self.branches
    }

    pub fn is_unramified(&self) -> bool {
        self.branches.is_empty()
    }

    /// Geometry the branch components live on (`None` when unramified).
    pub fn geometry(&self) -> Option<&GeometryModel> {
        self.branches.first().map(|b| b.class.geometry())
    }

    /// The weighted branch class `B_delta = delta * sum (1 - 1/d_i) B_i`.
    ///
    /// Linear in `delta` by construction; errors when there are no branches.
    pub fn branch_class(&self, delta: &BigRational) -> Result<DivisorClass, CoverError> {
        let geometry = self.geometry().ok_or(CoverError::NoBranches)?.clone();
        let mut total = DivisorClass::zero(geometry);
        for branch in &self.branches {
            let weight = BigRational::one()
                - BigRational::new(
                    int(1).numer().clone(),
                    int(branch.inertia as i64).numer().clone(),
                );
            total = total.add(&branch.class.scale(&weight))?;
        }
        Ok(total.scale(delta))
    }

    /// `B_delta` where an unramified covering contributes the zero class.
    pub fn branch_class_or_zero(
        &self,
        geometry: &GeometryModel,
        delta: &BigRational,
    ) -> Result<DivisorClass, CoverError> {
        match self.geometry() {
            None => Ok(DivisorClass::zero(geometry.clone())),
            Some(branch_geometry) => {
                if branch_geometry != geometry {
                    return Err(LatticeError::GeometryMismatch {
                        expected: geometry.to_string(),
                        found: branch_geometry.to_string(),
                    }
                    .into());
                }
                self.branch_class(delta)
            }
        }
    }

    /// Supremum of the admissible cone-angle parameter:
    /// `delta_sup = min_i d_i / (d_i - 1)`; `None` when unramified (no bound).
    pub fn delta_sup(&self) -> Option<BigRational> {
        self.branches
            .iter()
            .map(|b| ratio(b.inertia as i64, b.inertia as i64 - 1))
            .min()
    }
}

/// Ledger of analytic hypotheses on the base that the certifier cannot check.
///
/// `base_cscK` (the reference metric has constant scalar curvature) implies
/// `base_kenergy_bounded_below`, so the effective boundedness flag is the
/// disjunction of the two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct HypothesisLedger {
    pub base_kenergy_bounded_below: bool,
    pub base_csck: bool,
}

impl HypothesisLedger {
    pub fn new(base_kenergy_bounded_below: bool, base_csck: bool) -> Self {
        Self {
            base_kenergy_bounded_below,
            base_csck,
        }
    }

    /// Both hypotheses granted (the common case in the worked examples).
    pub fn granted() -> Self {
        Self::new(true, true)
    }

    /// K-energy boundedness, honouring the implication from `base_csck`.
    pub fn kenergy_bounded_below(&self) -> bool {
        self.base_kenergy_bounded_below || self.base_csck
    }
}

/// Sign of the first Chern class upstairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C1Sign {
    /// `-(K_N + B_f)` ample: positive first Chern class.
    Fano,
    /// `K_N + B_f = 0`: numerically trivial canonical class.
    CalabiYau,
    /// `K_N + B_f` ample: negative first Chern class.
    GeneralType,
    /// None of the above.
    Indefinite,
}

/// The canonical class upstairs, expressed downstairs:
/// `K_M = f^*(K_N + B_f)` returns `K_N + B_f`.
pub fn canonical_upstairs(
    geometry: &GeometryModel,
    cover: &CoverDescriptor,
) -> Result<DivisorClass, CoverError> {
    let branch = cover.branch_class_or_zero(geometry, &BigRational::one())?;
    Ok(geometry.canonical_class().add(&branch)?)
}

/// Mean scalar curvature of the covering metric in units where `2 pi = 1`:
///
/// ```text
/// s_mean = 2 n (-K_N - B_f) · omega^{n-1} / omega^n .
/// ```
///
/// This is the real (Riemannian) mean; the complex trace convention is half
/// of it.  Errors when `omega^n = 0`.
pub fn mean_scalar(
    geometry: &GeometryModel,
    cover: &CoverDescriptor,
    omega: &DivisorClass,
) -> Result<BigRational, CoverError> {
    let n = geometry.dim();
    let volume = geometry.intersection_number(&vec![omega.clone(); n])?;
    if volume.is_zero() {
        return Err(CoverError::DegenerateVolume);
    }
    let anticanonical = canonical_upstairs(geometry, cover)?.neg();
    let mut factors = vec![anticanonical];
    factors.extend(std::iter::repeat(omega.clone()).take(n - 1));
    let pairing = geometry.intersection_number(&factors)?;
    Ok(int(2 * n as i64) * pairing / volume)
}

/// Classifies the sign of `c_1` upstairs from `K_N + B_f`.
pub fn c1_sign_upstairs(
    geometry: &GeometryModel,
    cover: &CoverDescriptor,
) -> Result<C1Sign, CoverError> {
    let adjoint = canonical_upstairs(geometry, cover)?;
    Ok(if adjoint.is_zero() {
        C1Sign::CalabiYau
    } else if adjoint.neg().is_ample() {
        C1Sign::Fano
    } else if adjoint.is_ample() {
        C1Sign::GeneralType
    } else {
        C1Sign::Indefinite
    })
}

/// Splits a finite abelian group, given by invariant factors, into cyclic
/// groups of prime-power order, sorted descending.
///
/// This is the elementary-divisor decomposition: each invariant factor
/// `m = p_1^{a_1} ... p_r^{a_r}` contributes the summands `p_j^{a_j}`.
/// Factors equal to 1 contribute nothing.  The product of the output equals
/// the product of the input, and the multiset of summands determines the
/// group up to isomorphism.
pub fn decompose_abelian(invariant_factors: &[u64]) -> Result<Vec<u64>, CoverError> {
    let mut summands = Vec::new();
    for &factor in invariant_factors {
        if factor == 0 {
            return Err(CoverError::InvalidAbelianFactors(
                "factors must be positive".into(),
            ));
        }
        let mut remaining = factor;
        let mut p = 2u64;
        while p * p <= remaining {
            if remaining % p == 0 {
                let mut power = 1u64;
                while remaining % p == 0 {
                    remaining /= p;
                    power *= p;
                }
                summands.push(power);
            }
            p += 1;
        }
        if remaining > 1 {
            summands.push(remaining);
        }
    }
    summands.sort_unstable_by(|a, b| b.cmp(a));
    Ok(summands)
}
