//! Wire format of the command-line front end.
//!
//! Problem documents are JSON (TOML is accepted for files with a `.toml`
//! extension and converted on the fly).  Every rational number crosses the
//! interface as a string `"p/q"` (or `"p"` for integers) so that inputs stay
//! exact — floats are never accepted where the certifier needs exact
//! arithmetic.  Schema violations and value errors are reported with the path
//! of the offending field.

use covercert::{
    parse_rational, BranchComponent, CoverDescriptor, CoverGroup, DivisorClass, GeometryModel,
    HypothesisLedger,
};
use num::BigRational;
use serde::{Deserialize, Serialize};

/// A value error located at a field path, reported verbatim to the user.
#[derive(Debug)]
pub struct InputError {
    /// Dotted path of the offending field, e.g. `cover.branches[0].inertia`.
    pub path: String,
    /// Human-readable description of the problem.
    pub message: String,
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.path.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.path, self.message)
        }
    }
}

impl std::error::Error for InputError {}

fn err(path: impl Into<String>, message: impl ToString) -> InputError {
    InputError {
        path: path.into(),
        message: message.to_string(),
    }
}

/// Base geometry selector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GeometrySpec {
    /// Projective space `P^n`.
    ProjSpace {
        /// Dimension `n >= 1`.
        dimension: u32,
    },
    /// A product of projective spaces.
    ProductProjSpaces {
        /// Factor dimensions, each `>= 1`.
        dimensions: Vec<u32>,
    },
    /// The blow-up of `P^2` in up to three general points.
    BlowUpP2 {
        /// Number of blown-up points, `0..=3`.
        points: u32,
    },
}

impl GeometrySpec {
    /// Builds the exact geometry model, reporting failures at `path`.
    pub fn build(&self, path: &str) -> Result<GeometryModel, InputError> {
        match self {
            GeometrySpec::ProjSpace { dimension } => {
                GeometryModel::proj_space(*dimension).map_err(|e| err(path, e))
            }
            GeometrySpec::ProductProjSpaces { dimensions } => {
                GeometryModel::prod_proj_spaces(dimensions).map_err(|e| err(path, e))
            }
            GeometrySpec::BlowUpP2 { points } => {
                GeometryModel::blow_up_p2(*points).map_err(|e| err(path, e))
            }
        }
    }
}

/// Deck transformation group selector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GroupSpec {
    /// Cyclic group of the covering degree.
    Cyclic,
    /// Abelian group given by its invariant factors.
    Abelian {
        /// Invariant factors; their product must equal the degree.
        invariant_factors: Vec<u64>,
    },
    /// Dihedral group of order `2p`.
    Dihedral {
        /// Rotation order `p >= 3`.
        p: u64,
    },
}

impl GroupSpec {
    fn build(&self) -> CoverGroup {
        match self {
            GroupSpec::Cyclic => CoverGroup::Cyclic,
            GroupSpec::Abelian { invariant_factors } => CoverGroup::Abelian {
                invariant_factors: invariant_factors.clone(),
            },
            GroupSpec::Dihedral { p } => CoverGroup::Dihedral { p: *p },
        }
    }
}

fn default_true() -> bool {
    true
}

/// One branch component of the covering.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchSpec {
    /// Divisor class coefficients in the geometry's basis, exact rationals.
    pub coefficients: Vec<String>,
    /// Inertia (local branching) order along this component, `>= 2`.
    pub inertia: u64,
    /// Whether the component is smooth (defaults to true).
    #[serde(default = "default_true")]
    pub smooth: bool,
    /// Whether the component is irreducible (defaults to true).
    #[serde(default = "default_true")]
    pub irreducible: bool,
}

/// Covering data: degree, group, branch components.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverSpec {
    /// Covering degree.
    pub degree: u64,
    /// Deck group.
    pub group: GroupSpec,
    /// Branch components; empty means an unramified covering.
    #[serde(default)]
    pub branches: Vec<BranchSpec>,
}

/// Analytic hypotheses granted as assumptions (never verified here).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypothesesSpec {
    /// The K-energy of the base metric is bounded below.
    #[serde(default)]
    pub base_kenergy_bounded_below: bool,
    /// The base reference metric has constant scalar curvature.
    #[serde(default)]
    pub base_csck: bool,
}

impl HypothesesSpec {
    /// Converts to the certifier's hypothesis ledger.
    pub fn build(&self) -> HypothesisLedger {
        HypothesisLedger {
            base_kenergy_bounded_below: self.base_kenergy_bounded_below,
            base_csck: self.base_csck,
        }
    }
}

/// Which certifier entry point to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    /// Sweep the admissible angle segment for a feasible angle.
    DeltaSweep,
    /// Freeze the angle at 1.
    UnitAngle,
    /// Certify a prescribed cone weight `beta0`.
    PrescribedAngle,
    /// Boundary case: reference proportional to the branch class.
    ProportionalBoundary,
    /// Properness transfer through an alpha-invariant lower bound.
    AlphaProperness,
    /// Exact Einstein proportionality factor of the covering.
    EinsteinFactor,
    /// Mean scalar curvature upstairs.
    ScalarMean,
    /// Sign classification of the first Chern class upstairs.
    C1Sign,
}

impl CheckName {
    /// Kebab-case wire name (matches serde).
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckName::DeltaSweep => "delta-sweep",
            CheckName::UnitAngle => "unit-angle",
            CheckName::PrescribedAngle => "prescribed-angle",
            CheckName::ProportionalBoundary => "proportional-boundary",
            CheckName::AlphaProperness => "alpha-properness",
            CheckName::EinsteinFactor => "einstein-factor",
            CheckName::ScalarMean => "scalar-mean",
            CheckName::C1Sign => "c1-sign",
        }
    }
}

/// A full certification problem document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertifyRequest {
    /// Base geometry.
    pub geometry: GeometrySpec,
    /// Reference class coefficients, exact rationals.
    pub omega: Vec<String>,
    /// Covering data.
    pub cover: CoverSpec,
    /// Hypotheses granted by the caller.
    #[serde(default)]
    pub hypotheses: HypothesesSpec,
    /// Which check to run.
    pub check: CheckName,
    /// Cone weight for `prescribed-angle` (exact rational in `(0, 1/d]`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta0: Option<String>,
    /// Ample shift for `alpha-properness` (exact rational `>= 0`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
    /// Known alpha-invariant lower bound for `alpha-properness`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_lower_bound: Option<String>,
}

/// Fully validated problem, ready for dispatch.
#[derive(Debug)]
pub struct Problem {
    pub geometry: GeometryModel,
    pub omega: DivisorClass,
    pub cover: CoverDescriptor,
    pub hypotheses: HypothesisLedger,
    pub check: CheckName,
    pub beta0: Option<BigRational>,
    pub epsilon: Option<BigRational>,
    pub alpha_lower_bound: Option<BigRational>,
}

fn parse_rational_at(path: String, text: &str) -> Result<BigRational, InputError> {
    parse_rational(text).map_err(|e| err(path, e))
}

fn parse_class(
    geometry: &GeometryModel,
    path: &str,
    coefficients: &[String],
) -> Result<DivisorClass, InputError> {
    let mut coeffs = Vec::with_capacity(coefficients.len());
    for (i, text) in coefficients.iter().enumerate() {
        coeffs.push(parse_rational_at(format!("{path}[{i}]"), text)?);
    }
    DivisorClass::new(geometry.clone(), coeffs).map_err(|e| err(path, e))
}

impl CertifyRequest {
    /// Validates the document and builds the exact problem data.
    pub fn build(&self) -> Result<Problem, InputError> {
        let geometry = self.geometry.build("geometry")?;
        let omega = parse_class(&geometry, "omega", &self.omega)?;

        let group = self.cover.group.build();
        let cover = if self.cover.branches.is_empty() {
            CoverDescriptor::unramified(self.cover.degree, group).map_err(|e| err("cover", e))?
        } else {
            let mut branches = Vec::with_capacity(self.cover.branches.len());
            for (i, branch) in self.cover.branches.iter().enumerate() {
                let class = parse_class(
                    &geometry,
                    &format!("cover.branches[{i}].coefficients"),
                    &branch.coefficients,
                )?;
                let mut component = BranchComponent::new(class, branch.inertia);
                component.smooth = branch.smooth;
                component.irreducible = branch.irreducible;
                branches.push(component);
            }
            CoverDescriptor::new(self.cover.degree, group, branches).map_err(|e| err("cover", e))?
        };

        let beta0 = self
            .beta0
            .as_ref()
            .map(|text| parse_rational_at("beta0".into(), text))
            .transpose()?;
        let epsilon = self
            .epsilon
            .as_ref()
            .map(|text| parse_rational_at("epsilon".into(), text))
            .transpose()?;
        let alpha_lower_bound = self
            .alpha_lower_bound
            .as_ref()
            .map(|text| parse_rational_at("alpha_lower_bound".into(), text))
            .transpose()?;

        // Check-specific parameters must be present exactly when used.
        let requires = |present: bool, name: &str, used: bool| -> Result<(), InputError> {
            if used && !present {
                Err(err(
                    name,
                    format!("required for check '{}'", self.check.as_str()),
                ))
            } else if !used && present {
                Err(err(
                    name,
                    format!("not accepted for check '{}'", self.check.as_str()),
                ))
            } else {
                Ok(())
            }
        };
        requires(
            beta0.is_some(),
            "beta0",
            self.check == CheckName::PrescribedAngle,
        )?;
        requires(
            epsilon.is_some(),
            "epsilon",
            self.check == CheckName::AlphaProperness,
        )?;
        requires(
            alpha_lower_bound.is_some(),
            "alpha_lower_bound",
            self.check == CheckName::AlphaProperness,
        )?;

        Ok(Problem {
            geometry,
            omega,
            cover,
            hypotheses: self.hypotheses.build(),
            check: self.check,
            beta0,
            epsilon,
            alpha_lower_bound,
        })
    }
}

/// An inclusive integer range; a bare integer is shorthand for a single point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RangeSpec {
    /// Single value.
    Point(i64),
    /// Inclusive span.
    Span {
        /// Lower bound.
        lo: i64,
        /// Upper bound (inclusive).
        hi: i64,
    },
}

impl RangeSpec {
    /// Converts to the enumeration range type.
    pub fn build(&self) -> covercert::ParamRange {
        match self {
            RangeSpec::Point(v) => covercert::ParamRange::new(*v, *v),
            RangeSpec::Span { lo, hi } => covercert::ParamRange::new(*lo, *hi),
        }
    }
}

/// Enumeration family with parameter ranges.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FamilySpec {
    /// `P^n` with a cyclic covering branched along `lambda·H`.
    ProjCyclic {
        n: RangeSpec,
        d: RangeSpec,
        lambda: RangeSpec,
    },
    /// `P^1 x P^1` with a cyclic covering branched along `d·(b1, b2)`,
    /// reference `(a1, a2)`.
    QuadricCyclic {
        d: RangeSpec,
        b1: RangeSpec,
        b2: RangeSpec,
        a1: RangeSpec,
        a2: RangeSpec,
    },
    /// `P^n` with a dihedral covering of order `2p`.
    ProjDihedral {
        n: RangeSpec,
        p: RangeSpec,
        lambda: RangeSpec,
    },
    /// Three-point blow-up of `P^2` with a dihedral covering, reference
    /// `r·H - E1 - E2 - E3`.
    BlowupDihedral {
        p: RangeSpec,
        k: RangeSpec,
        a1: RangeSpec,
        a2: RangeSpec,
        a3: RangeSpec,
        r: RangeSpec,
    },
    /// `P^n x P^n` with a dihedral covering, reference `(b1, b2)`.
    BiprojDihedral {
        n: RangeSpec,
        p: RangeSpec,
        b1: RangeSpec,
        b2: RangeSpec,
    },
}

impl FamilySpec {
    /// Converts to the certifier's family description.
    pub fn build(&self) -> covercert::FamilySpec {
        match self {
            FamilySpec::ProjCyclic { n, d, lambda } => covercert::FamilySpec::ProjCyclic {
                n: n.build(),
                d: d.build(),
                lambda: lambda.build(),
            },
            FamilySpec::QuadricCyclic { d, b1, b2, a1, a2 } => {
                covercert::FamilySpec::QuadricCyclic {
                    d: d.build(),
                    b1: b1.build(),
                    b2: b2.build(),
                    a1: a1.build(),
                    a2: a2.build(),
                }
            }
            FamilySpec::ProjDihedral { n, p, lambda } => covercert::FamilySpec::ProjDihedral {
                n: n.build(),
                p: p.build(),
                lambda: lambda.build(),
            },
            FamilySpec::BlowupDihedral {
                p,
                k,
                a1,
                a2,
                a3,
                r,
            } => covercert::FamilySpec::BlowupDihedral {
                p: p.build(),
                k: k.build(),
                a1: a1.build(),
                a2: a2.build(),
                a3: a3.build(),
                r: r.build(),
            },
            FamilySpec::BiprojDihedral { n, p, b1, b2 } => covercert::FamilySpec::BiProjDihedral {
                n: n.build(),
                p: p.build(),
                b1: b1.build(),
                b2: b2.build(),
            },
        }
    }
}

/// An enumeration request: family, ranges, shared hypotheses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumerateRequest {
    /// Family and ranges.
    #[serde(flatten)]
    pub family: FamilySpec,
    /// Hypotheses granted for every row.
    #[serde(default)]
    pub hypotheses: HypothesesSpec,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_certify_request_round_trips() {
        let text = r#"{
            "geometry": {"kind": "proj-space", "dimension": 2},
            "omega": ["1"],
            "cover": {
                "degree": 3,
                "group": {"kind": "cyclic"},
                "branches": [{"coefficients": ["4"], "inertia": 3}]
            },
            "hypotheses": {"base_kenergy_bounded_below": true},
            "check": "delta-sweep"
        }"#;
        let request: CertifyRequest = serde_json::from_str(text).unwrap();
        let echoed = serde_json::to_string(&request).unwrap();
        let reparsed: CertifyRequest = serde_json::from_str(&echoed).unwrap();
        assert_eq!(request, reparsed);
        let problem = request.build().unwrap();
        assert_eq!(problem.cover.degree(), 3);
        assert!(problem.hypotheses.base_kenergy_bounded_below);
    }

    #[test]
    fn zero_denominator_is_reported_with_field_path() {
        let text = r#"{
            "geometry": {"kind": "proj-space", "dimension": 2},
            "omega": ["1/0"],
            "cover": {"degree": 2, "group": {"kind": "cyclic"},
                      "branches": [{"coefficients": ["2"], "inertia": 2}]},
            "check": "delta-sweep"
        }"#;
        let request: CertifyRequest = serde_json::from_str(text).unwrap();
        let error = request.build().unwrap_err();
        assert_eq!(error.path, "omega[0]");
        assert!(error.message.contains("denominator"));
    }

    #[test]
    fn check_parameters_are_cross_validated() {
        let base = r#"{
            "geometry": {"kind": "proj-space", "dimension": 1},
            "omega": ["1"],
            "cover": {"degree": 2, "group": {"kind": "cyclic"},
                      "branches": [{"coefficients": ["4"], "inertia": 2}]},
            "check": "CHECK"
        }"#;
        // prescribed-angle without beta0 -> error at field beta0.
        let text = base.replace("\"CHECK\"", "\"prescribed-angle\"");
        let request: CertifyRequest = serde_json::from_str(&text).unwrap();
        assert_eq!(request.build().unwrap_err().path, "beta0");
        // delta-sweep with a stray beta0 -> rejected.
        let text = base.replace(
            "\"check\": \"CHECK\"",
            "\"check\": \"delta-sweep\", \"beta0\": \"1/2\"",
        );
        let request: CertifyRequest = serde_json::from_str(&text).unwrap();
        assert_eq!(request.build().unwrap_err().path, "beta0");
    }

    #[test]
    fn unknown_fields_are_rejected_by_the_schema() {
        let text = r#"{
            "geometry": {"kind": "proj-space", "dimension": 2, "stray": 1},
            "omega": ["1"],
            "cover": {"degree": 2, "group": {"kind": "cyclic"}},
            "check": "delta-sweep"
        }"#;
        assert!(serde_json::from_str::<CertifyRequest>(text).is_err());
    }

    #[test]
    fn enumerate_request_accepts_point_and_span_ranges() {
        let text = r#"{
            "family": "proj-cyclic",
            "n": 2,
            "d": {"lo": 2, "hi": 4},
            "lambda": {"lo": 1, "hi": 7},
            "hypotheses": {"base_kenergy_bounded_below": true}
        }"#;
        let request: EnumerateRequest = serde_json::from_str(text).unwrap();
        match &request.family {
            FamilySpec::ProjCyclic { n, d, .. } => {
                assert_eq!(*n, RangeSpec::Point(2));
                assert_eq!(*d, RangeSpec::Span { lo: 2, hi: 4 });
            }
            other => panic!("wrong family: {other:?}"),
        }
        let echoed = serde_json::to_string(&request).unwrap();
        let reparsed: EnumerateRequest = serde_json::from_str(&echoed).unwrap();
        assert_eq!(request, reparsed);
    }
}
