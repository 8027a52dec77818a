//! The geometry catalogue and its multilinear intersection form.

use super::{DivisorClass, LatticeError};
use crate::rational::int;
use num::rational::BigRational;
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Which base variety a lattice models.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GeometryKind {
    /// Projective space `P^n`, Picard rank 1 with basis `H` (hyperplane).
    ProjSpace { n: u32 },
    /// A product `P^{n_1} x ... x P^{n_k}`, rank `k`, basis the pullback
    /// hyperplanes `H_1 .. H_k`.
    ProdProjSpaces { dims: Vec<u32> },
    /// The plane blown up in `k <= 3` general points, rank `k + 1`, basis
    /// `H, E_1, .., E_k` with the form `diag(1, -1, .., -1)`.
    BlowUpP2 { points: u32 },
}

/// A base geometry together with its intersection theory.
///
/// Values are only constructible through the validating constructors, so a
/// `GeometryModel` in hand is always a member of the supported catalogue.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeometryModel {
    kind: GeometryKind,
}

impl GeometryModel {
    /// Projective space `P^n` (`n >= 1`).
    pub fn proj_space(n: u32) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::InvalidGeometry(
                "ProjSpace requires n >= 1".into(),
            ));
        }
        Ok(Self {
            kind: GeometryKind::ProjSpace { n },
        })
    }

    /// A product of projective spaces with the given factor dimensions.
    pub fn prod_proj_spaces(dims: &[u32]) -> Result<Self, LatticeError> {
        if dims.is_empty() {
            return Err(LatticeError::InvalidGeometry(
                "ProdProjSpaces requires at least one factor".into(),
            ));
        }
        if dims.contains(&0) {
            return Err(LatticeError::InvalidGeometry(
                "ProdProjSpaces factors must have dimension >= 1".into(),
            ));
        }
        Ok(Self {
            kind: GeometryKind::ProdProjSpaces {
                dims: dims.to_vec(),
            },
        })
    }

    /// The plane blown up in `points <= 3` general points.
    pub fn blow_up_p2(points: u32) -> Result<Self, LatticeError> {
        if points > 3 {
            return Err(LatticeError::InvalidGeometry(
                "BlowUpP2 supports at most 3 points".into(),
            ));
        }
        Ok(Self {
            kind: GeometryKind::BlowUpP2 { points },
        })
    }

    pub fn kind(&self) -> &GeometryKind {
        &self.kind
    }

    /// Complex dimension of the base.
    pub fn dim(&self) -> usize {
        match &self.kind {
            GeometryKind::ProjSpace { n } => *n as usize,
            GeometryKind::ProdProjSpaces { dims } => dims.iter().map(|&n| n as usize).sum(),
            GeometryKind::BlowUpP2 { .. } => 2,
        }
    }

    /// Picard rank, i.e. the length of every coefficient vector.
    pub fn picard_rank(&self) -> usize {
        match &self.kind {
            GeometryKind::ProjSpace { .. } => 1,
            GeometryKind::ProdProjSpaces { dims } => dims.len(),
            GeometryKind::BlowUpP2 { points } => *points as usize + 1,
        }
    }

    /// Human-readable names of the basis classes, in coefficient order.
    pub fn basis_labels(&self) -> Vec<String> {
        match &self.kind {
            GeometryKind::ProjSpace { .. } => vec!["H".into()],
            GeometryKind::ProdProjSpaces { dims } => {
                (1..=dims.len()).map(|i| format!("H{i}")).collect()
            }
            GeometryKind::BlowUpP2 { points } => {
                let mut labels = vec!["H".to_string()];
                labels.extend((1..=*points).map(|i| format!("E{i}")));
                labels
            }
        }
    }

    /// The canonical class `K` of the base.
    pub fn canonical_class(&self) -> DivisorClass {
        let coeffs: Vec<BigRational> = match &self.kind {
            GeometryKind::ProjSpace { n } => vec![int(-(i64::from(*n) + 1))],
            GeometryKind::ProdProjSpaces { dims } => {
                dims.iter().map(|&n| int(-(i64::from(n) + 1))).collect()
            }
            GeometryKind::BlowUpP2 { points } => {
                // K = -3H + E_1 + ... + E_k.
                let mut coeffs = vec![int(-3)];
                coeffs.extend((0..*points).map(|_| int(1)));
                coeffs
            }
        };
        DivisorClass::new(self.clone(), coeffs).expect("canonical class has full rank")
    }

    /// Exact intersection number of `dim` divisor classes.
    ///
    /// The form is symmetric and multilinear; passing the same class `dim`
    /// times computes the top self-intersection.
    pub fn intersection_number(
        &self,
        classes: &[DivisorClass],
    ) -> Result<BigRational, LatticeError> {
        let dim = self.dim();
        if classes.len() != dim {
            return Err(LatticeError::ArityMismatch {
                expected: dim,
                found: classes.len(),
            });
        }
        for class in classes {
            if class.geometry() != self {
                return Err(LatticeError::GeometryMismatch {
                    expected: self.to_string(),
                    found: class.geometry().to_string(),
                });
            }
        }
        Ok(match &self.kind {
            // H^n = 1, so the product of the coefficients.
            GeometryKind::ProjSpace { .. } => classes
                .iter()
                .map(|c| c.coeffs()[0].clone())
                .fold(BigRational::one(), |acc, c| acc * c),
            GeometryKind::ProdProjSpaces { dims } => prod_intersection(dims, classes),
            // Bilinear form diag(1, -1, .., -1) on (H, E_1, .., E_k).
            GeometryKind::BlowUpP2 { points } => {
                let a = classes[0].coeffs();
                let b = classes[1].coeffs();
                let mut total = &a[0] * &b[0];
                for i in 1..=*points as usize {
                    total -= &a[i] * &b[i];
                }
                total
            }
        })
    }
}

/// Expands the multilinear form on a product of projective spaces.
///
/// The monomial `H_1^{e_1} ... H_k^{e_k}` evaluates to 1 exactly when
/// `e_i = n_i` for every factor and to 0 otherwise, so we multiply the linear
/// forms together while capping each exponent at `n_i` (higher powers vanish)
/// and read off the top coefficient.
fn prod_intersection(dims: &[u32], classes: &[DivisorClass]) -> BigRational {
    let rank = dims.len();
    let mut expansion: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
    expansion.insert(vec![0; rank], BigRational::one());
    for class in classes {
        let mut next: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (exponents, weight) in &expansion {
            for (j, coeff) in class.coeffs().iter().enumerate() {
                if coeff.is_zero() || exponents[j] >= dims[j] {
                    continue;
                }
                let mut bumped = exponents.clone();
                bumped[j] += 1;
                let term = weight * coeff;
                next.entry(bumped)
                    .and_modify(|acc| *acc += &term)
                    .or_insert(term);
            }
        }
        expansion = next;
    }
    expansion.remove(dims).unwrap_or_else(BigRational::zero)
}

impl fmt::Display for GeometryModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GeometryKind::ProjSpace { n } => write!(f, "P^{n}"),
            GeometryKind::ProdProjSpaces { dims } => {
                let parts: Vec<String> = dims.iter().map(|n| format!("P^{n}")).collect();
                write!(f, "{}", parts.join(" x "))
            }
            GeometryKind::BlowUpP2 { points } => write!(f, "Bl_{points} P^2"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn cls(geometry: &GeometryModel, coeffs: &[i64]) -> DivisorClass {
        DivisorClass::new(geometry.clone(), coeffs.iter().map(|&c| int(c)).collect()).unwrap()
    }

    #[test]
    fn rejects_invalid_catalogue_entries() {
        assert!(GeometryModel::proj_space(0).is_err());
        assert!(GeometryModel::prod_proj_spaces(&[]).is_err());
        assert!(GeometryModel::prod_proj_spaces(&[1, 0]).is_err());
        assert!(GeometryModel::blow_up_p2(4).is_err());
        assert!(GeometryModel::blow_up_p2(0).is_ok());
    }

    #[test]
    fn proj_space_top_power() {
        // H^2 = 1 on P^2; (2H)·(3H) = 6.
        let p2 = GeometryModel::proj_space(2).unwrap();
        let two_h = cls(&p2, &[2]);
        let three_h = cls(&p2, &[3]);
        assert_eq!(p2.intersection_number(&[two_h, three_h]).unwrap(), int(6));
    }

    #[test]
    fn product_surface_form() {
        // On P^1 x P^1 the form is (x1,x2)·(y1,y2) = x1 y2 + x2 y1,
        // so L = H1 + 2 H2 has L·L = 2·1·2 = 4.
        let quadric = GeometryModel::prod_proj_spaces(&[1, 1]).unwrap();
        let l = cls(&quadric, &[1, 2]);
        assert_eq!(
            quadric.intersection_number(&[l.clone(), l]).unwrap(),
            int(4)
        );
    }

    #[test]
    fn product_mixed_dimensions() {
        // On P^2 x P^1 (dimension 3): (H1 + H2)^3 = 3 H1^2 H2 = 3.
        let base = GeometryModel::prod_proj_spaces(&[2, 1]).unwrap();
        let l = cls(&base, &[1, 1]);
        assert_eq!(
            base.intersection_number(&[l.clone(), l.clone(), l])
                .unwrap(),
            int(3)
        );
        // H2^2 = 0 in the P^1 factor.
        let h2 = cls(&base, &[0, 1]);
        let h1 = cls(&base, &[1, 0]);
        assert_eq!(
            base.intersection_number(&[h2.clone(), h2, h1]).unwrap(),
            int(0)
        );
    }

    #[test]
    fn blow_up_form_is_diagonal() {
        // (H - E1 - E2)^2 = 1 - 1 - 1 = -1 on Bl_3 P^2.
        let bl3 = GeometryModel::blow_up_p2(3).unwrap();
        let conic_line = cls(&bl3, &[1, -1, -1, 0]);
        assert_eq!(
            bl3.intersection_number(&[conic_line.clone(), conic_line])
                .unwrap(),
            int(-1)
        );
    }

    #[test]
    fn rational_coefficients_are_exact() {
        let p1 = GeometryModel::proj_space(1).unwrap();
        let half = DivisorClass::new(p1.clone(), vec![ratio(1, 2)]).unwrap();
        assert_eq!(p1.intersection_number(&[half]).unwrap(), ratio(1, 2));
    }

    #[test]
    fn arity_and_geometry_are_enforced() {
        let p2 = GeometryModel::proj_space(2).unwrap();
        let h = cls(&p2, &[1]);
        assert!(matches!(
            p2.intersection_number(std::slice::from_ref(&h)),
            Err(LatticeError::ArityMismatch {
                expected: 2,
                found: 1
            })
        ));
        let p3 = GeometryModel::proj_space(3).unwrap();
        let other = cls(&p3, &[1]);
        assert!(matches!(
            p2.intersection_number(&[h, other]),
            Err(LatticeError::GeometryMismatch { .. })
        ));
    }

    #[test]
    fn canonical_classes_match_the_catalogue() {
        let p2 = GeometryModel::proj_space(2).unwrap();
        assert_eq!(p2.canonical_class().coeffs(), &[int(-3)]);

        let quadric = GeometryModel::prod_proj_spaces(&[1, 1]).unwrap();
        assert_eq!(quadric.canonical_class().coeffs(), &[int(-2), int(-2)]);

        let bl3 = GeometryModel::blow_up_p2(3).unwrap();
        assert_eq!(
            bl3.canonical_class().coeffs(),
            &[int(-3), int(1), int(1), int(1)]
        );
    }
}
