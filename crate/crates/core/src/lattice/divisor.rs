//! Divisor classes: rational vectors over the standard basis of a geometry.

use super::{GeometryModel, LatticeError};
use num::rational::BigRational;
use num::{Signed, Zero};
use std::fmt;

/// A divisor class with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    geometry: GeometryModel,
    coeffs: Vec<BigRational>,
}

impl DivisorClass {
    /// Wraps a coefficient vector after checking it has full Picard rank.
    pub fn new(geometry: GeometryModel, coeffs: Vec<BigRational>) -> Result<Self, LatticeError> {
        let expected = geometry.picard_rank();
        if coeffs.len() != expected {
            return Err(LatticeError::RankMismatch {
                expected,
                found: coeffs.len(),
            });
        }
        Ok(Self { geometry, coeffs })
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_integers(geometry: GeometryModel, coeffs: &[i64]) -> Result<Self, LatticeError> {
        Self::new(
            geometry,
            coeffs.iter().map(|&c| crate::rational::int(c)).collect(),
        )
    }

    /// The zero class.
    pub fn zero(geometry: GeometryModel) -> Self {
        let rank = geometry.picard_rank();
        Self {
            geometry,
            coeffs: vec![BigRational::zero(); rank],
        }
    }

    pub fn geometry(&self) -> &GeometryModel {
        &self.geometry
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_same_geometry(&self, other: &Self) -> Result<(), LatticeError> {
        if self.geometry != other.geometry {
            return Err(LatticeError::GeometryMismatch {
                expected: self.geometry.to_string(),
                found: other.geometry.to_string(),
            });
        }
        Ok(())
    }

    /// Componentwise sum; both classes must live on the same geometry.
    pub fn add(&self, other: &Self) -> Result<Self, LatticeError> {
        self.check_same_geometry(other)?;
        Ok(Self {
            geometry: self.geometry.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Componentwise difference.
    pub fn sub(&self, other: &Self) -> Result<Self, LatticeError> {
        self.check_same_geometry(other)?;
        Ok(Self {
            geometry: self.geometry.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        Self {
            geometry: self.geometry.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            geometry: self.geometry.clone(),
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Pairing against every extremal curve class, in generator order.
    ///
    /// A class is nef exactly when all margins are `>= 0` and ample exactly
    /// when all are `> 0`; a negative margin names the curve that obstructs.
    pub fn nef_margins(&self) -> Vec<BigRational> {
        self.geometry
            .nef_cone_generators()
            .generators()
            .iter()
            .map(|curve| curve.pair(self).expect("generator matches geometry"))
            .collect()
    }

    /// Nefness against the geometry's extremal curves, with the margins.
    pub fn is_nef(&self) -> (bool, Vec<BigRational>) {
        let margins = self.nef_margins();
        let nef = margins.iter().all(|m| !m.is_negative());
        (nef, margins)
    }

    /// Ampleness: every margin strictly positive.
    pub fn is_ample(&self) -> bool {
        self.nef_margins().iter().all(Signed::is_positive)
    }

    /// If `self = lambda * other` for a rational `lambda`, returns it.
    ///
    /// Returns `None` when the classes are not proportional.  The zero class
    /// is proportional to everything with `lambda = 0`, while nothing nonzero
    /// is proportional to zero.
    pub fn proportionality_to(&self, other: &Self) -> Option<BigRational> {
        if self.geometry != other.geometry {
            return None;
        }
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        let pivot = other.coeffs.iter().position(|c| !c.is_zero())?;
        let lambda = &self.coeffs[pivot] / &other.coeffs[pivot];
        let scaled = other.scale(&lambda);
        if scaled == *self {
            Some(lambda)
        } else {
            None
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.geometry.basis_labels();
        let mut wrote = false;
        for (coeff, label) in self.coeffs.iter().zip(&labels) {
            if coeff.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " {} ", if coeff.is_negative() { "-" } else { "+" })?;
            } else if coeff.is_negative() {
                write!(f, "-")?;
            }
            let magnitude = coeff.abs();
            if magnitude == num::One::one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{}{label}", crate::rational::format_rational(&magnitude))?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn bl3() -> GeometryModel {
        GeometryModel::blow_up_p2(3).unwrap()
    }

    #[test]
    fn arithmetic_is_componentwise() {
        let g = bl3();
        let a = DivisorClass::from_integers(g.clone(), &[6, -2, -2, -2]).unwrap();
        let b = DivisorClass::from_integers(g.clone(), &[-3, 1, 1, 1]).unwrap();
        let sum = a.add(&b).unwrap();
        assert_eq!(
            sum,
            DivisorClass::from_integers(g.clone(), &[3, -1, -1, -1]).unwrap()
        );
        assert_eq!(sum.sub(&b).unwrap(), a);
        assert_eq!(a.neg().scale(&int(-1)), a);
        assert_eq!(
            a.scale(&ratio(1, 2)),
            DivisorClass::from_integers(g, &[3, -1, -1, -1]).unwrap()
        );
    }

    #[test]
    fn rank_and_geometry_guards() {
        let g = bl3();
        assert!(matches!(
            DivisorClass::from_integers(g.clone(), &[1, 2]),
            Err(LatticeError::RankMismatch {
                expected: 4,
                found: 2
            })
        ));
        let p2 = GeometryModel::proj_space(2).unwrap();
        let a = DivisorClass::from_integers(g, &[1, 0, 0, 0]).unwrap();
        let b = DivisorClass::from_integers(p2, &[1]).unwrap();
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn proportionality_detection() {
        let g = GeometryModel::prod_proj_spaces(&[1, 1]).unwrap();
        let a = DivisorClass::from_integers(g.clone(), &[2, 4]).unwrap();
        let b = DivisorClass::from_integers(g.clone(), &[1, 2]).unwrap();
        let c = DivisorClass::from_integers(g.clone(), &[1, 3]).unwrap();
        assert_eq!(a.proportionality_to(&b), Some(int(2)));
        assert_eq!(b.proportionality_to(&a), Some(ratio(1, 2)));
        assert_eq!(a.proportionality_to(&c), None);
        let zero = DivisorClass::zero(g);
        assert_eq!(zero.proportionality_to(&b), Some(int(0)));
        assert_eq!(b.proportionality_to(&zero), None);
    }

    #[test]
    fn display_uses_basis_labels() {
        let g = bl3();
        let a = DivisorClass::from_integers(g.clone(), &[6, -2, 0, -2]).unwrap();
        assert_eq!(a.to_string(), "6H - 2E1 - 2E3");
        assert_eq!(DivisorClass::zero(g).to_string(), "0");
    }
}
