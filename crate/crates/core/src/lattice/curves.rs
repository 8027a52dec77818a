//! Extremal curve classes: the linear functionals that cut out the nef cone.
//!
//! For each catalogue geometry the Mori cone is polyhedral with a known,
//! finite set of generators, so "nef" reduces to finitely many exact sign
//! conditions:
//!
//! * `P^n` — the line class; a multiple `cH` is nef iff `c >= 0`.
//! * products — one line per factor; `sum c_i H_i` is nef iff every `c_i >= 0`.
//! * `Bl_k P^2` — the (-1)-curves: the exceptional `E_i` together with the
//!   strict transforms `H - E_i - E_j` of lines through two of the points
//!   (for `k = 1` the second family degenerates to the line `H - E_1`, and for
//!   `k = 0` only the line `H` remains).

use super::{DivisorClass, GeometryKind, GeometryModel, LatticeError};
use crate::rational::int;
use num::rational::BigRational;
use num::Zero;

/// A curve class, stored as the linear functional `D -> C · D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveClass {
    label: String,
    functional: Vec<BigRational>,
}

impl CurveClass {
    fn new(label: impl Into<String>, functional: Vec<BigRational>) -> Self {
        Self {
            label: label.into(),
            functional,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Evaluates `C · D` exactly.
    pub fn pair(&self, class: &DivisorClass) -> Result<BigRational, LatticeError> {
        if class.coeffs().len() != self.functional.len() {
            return Err(LatticeError::RankMismatch {
                expected: self.functional.len(),
                found: class.coeffs().len(),
            });
        }
        Ok(self
            .functional
            .iter()
            .zip(class.coeffs())
            .map(|(f, c)| f * c)
            .fold(BigRational::zero(), |acc, term| acc + term))
    }
}

/// The generator list for one geometry, in a fixed deterministic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveClassSet {
    geometry: GeometryModel,
    generators: Vec<CurveClass>,
}

impl CurveClassSet {
    pub fn geometry(&self) -> &GeometryModel {
        &self.geometry
    }

    pub fn generators(&self) -> &[CurveClass] {
        &self.generators
    }
}

impl GeometryModel {
    /// The extremal curve classes of this geometry.
    pub fn nef_cone_generators(&self) -> CurveClassSet {
        let rank = self.picard_rank();
        let generators = match self.kind() {
            GeometryKind::ProjSpace { .. } => {
                vec![CurveClass::new("line", vec![int(1)])]
            }
            GeometryKind::ProdProjSpaces { dims } => (0..dims.len())
                .map(|i| {
                    // The line inside factor i+1 pairs to 1 against the
                    // pullback hyperplane H_{i+1} and to 0 against the others,
                    // so its functional reads off the i-th coefficient.
                    let mut functional = vec![BigRational::zero(); rank];
                    functional[i] = int(1);
                    CurveClass::new(format!("line{}", i + 1), functional)
                })
                .collect(),
            GeometryKind::BlowUpP2 { points } => {
                let k = *points as usize;
                if k == 0 {
                    let mut functional = vec![BigRational::zero(); rank];
                    functional[0] = int(1);
                    return CurveClassSet {
                        geometry: self.clone(),
                        generators: vec![CurveClass::new("H", functional)],
                    };
                }
                let mut generators = Vec::new();
                // E_i · (c0 H + sum c_j E_j) = -c_i.
                for i in 1..=k {
                    let mut functional = vec![BigRational::zero(); rank];
                    functional[i] = int(-1);
                    generators.push(CurveClass::new(format!("E{i}"), functional));
                }
                // (H - E_i - E_j) · D = c0 + c_i + c_j; for k = 1 the line
                // through the single point is H - E_1 with pairing c0 + c1.
                if k == 1 {
                    generators.push(CurveClass::new("H-E1", vec![int(1), int(1)]));
                } else {
                    for i in 1..=k {
                        for j in (i + 1)..=k {
                            let mut functional = vec![BigRational::zero(); rank];
                            functional[0] = int(1);
                            functional[i] = int(1);
                            functional[j] = int(1);
                            generators.push(CurveClass::new(format!("H-E{i}-E{j}"), functional));
                        }
                    }
                }
                generators
            }
        };
        CurveClassSet {
            geometry: self.clone(),
            generators,
        }
    }
}
