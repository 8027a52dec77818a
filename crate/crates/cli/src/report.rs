//! Machine-readable output documents.
//!
//! Every command emits one UTF-8 JSON document (or JSON lines for
//! enumerations).  Documents are deterministic: running the same input twice
//! produces byte-identical output except for the `timing` block, and the
//! echoed input re-parses to an equal request.  Exact rationals are emitted
//! in the same canonical string form the inputs use.

use covercert::{
    format_rational, AlphaPropernessReport, C1Sign, Certificate, EnumerationRow, KEnergyResult,
};
use num::BigRational;
use serde::Serialize;

use crate::schema::CertifyRequest;

/// Name and version of the emitting tool.
#[derive(Debug, Clone, Serialize)]
pub struct ToolInfo {
    /// Binary name.
    pub name: &'static str,
    /// Crate version.
    pub version: &'static str,
}

impl ToolInfo {
    /// The current build.
    pub fn current() -> ToolInfo {
        ToolInfo {
            name: "covercert",
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

/// Wall-clock timing, the only non-deterministic part of any document.
#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    /// Seconds spent producing the result.
    pub seconds: f64,
}

fn fmt_opt(value: &Option<BigRational>) -> Option<String> {
    value.as_ref().map(format_rational)
}

/// Serialized closed/open endpoint description of a feasibility segment.
#[derive(Debug, Clone, Serialize)]
pub struct IntervalDoc {
    /// Lower endpoint (canonical rational string).
    pub lo: String,
    /// Whether the lower endpoint is attained.
    pub lo_closed: bool,
    /// Upper endpoint; absent means unbounded.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hi: Option<String>,
    /// Whether the upper endpoint is attained.
    pub hi_closed: bool,
    /// Human-readable rendering, e.g. `[9/8, 3/2)`.
    pub display: String,
}

/// One affine constraint in the angle parameter, with its status.
#[derive(Debug, Clone, Serialize)]
pub struct ConstraintDoc {
    /// Which class family the constraint comes from.
    pub label: String,
    /// The curve generator being paired against.
    pub generator: String,
    /// Constant term of the affine form.
    pub constant: String,
    /// Slope in the angle parameter.
    pub slope: String,
    /// Whether the constraint holds at the probed angle.
    pub satisfied: bool,
}

/// Serialized certificate.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateDoc {
    /// Which check produced this certificate.
    pub check: String,
    /// `proven-cscK` or `inconclusive`.
    pub verdict: String,
    /// Convenience boolean mirror of `verdict`.
    pub proven: bool,
    /// Certified angle, when one is attained.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_witness: Option<String>,
    /// Angle at which constraints were probed (diagnostics).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_probe: Option<String>,
    /// Supremum of admissible angles for this covering.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_sup: Option<String>,
    /// Feasible angle segment, when the sweep found one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub feasible_interval: Option<IntervalDoc>,
    /// All generator constraints with exact coefficients.
    pub constraints: Vec<ConstraintDoc>,
    /// Hypotheses that were granted.
    pub hypotheses: HypothesesDoc,
    /// Whether the adjoint class is proportional to the reference.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub einstein_proportional: Option<bool>,
    /// The proportionality factor when it exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub einstein_factor: Option<String>,
    /// Mean scalar curvature upstairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalar_mean: Option<String>,
    /// The prescribed cone weight, for the prescribed-angle check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prescribed_angle: Option<String>,
    /// Factor relating the reference to the branch class (boundary check).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polarization_factor: Option<String>,
    /// Diagnostics: blocking constraints, hypothesis gaps, degenerate cases.
    pub notes: Vec<String>,
}

/// Echo of the granted hypotheses.
#[derive(Debug, Clone, Serialize)]
pub struct HypothesesDoc {
    pub base_kenergy_bounded_below: bool,
    pub base_csck: bool,
}

impl CertificateDoc {
    /// Serializes a certificate.
    pub fn from_certificate(certificate: &Certificate) -> CertificateDoc {
        CertificateDoc {
            check: certificate.check.to_string(),
            verdict: certificate.verdict.to_string(),
            proven: certificate.proven(),
            delta_witness: fmt_opt(&certificate.delta_witness),
            delta_probe: fmt_opt(&certificate.delta_probe),
            delta_sup: fmt_opt(&certificate.delta_sup),
            feasible_interval: certificate
                .feasible_interval
                .as_ref()
                .map(|seg| IntervalDoc {
                    lo: format_rational(seg.lo()),
                    lo_closed: seg.lo_closed(),
                    hi: seg.hi().map(format_rational),
                    hi_closed: seg.hi_closed(),
                    display: seg.to_string(),
                }),
            constraints: certificate
                .constraints
                .iter()
                .map(|c| ConstraintDoc {
                    label: c.label.clone(),
                    generator: c.generator.clone(),
                    constant: format_rational(&c.constant),
                    slope: format_rational(&c.slope),
                    satisfied: c.satisfied,
                })
                .collect(),
            hypotheses: HypothesesDoc {
                base_kenergy_bounded_below: certificate.hypotheses.base_kenergy_bounded_below,
                base_csck: certificate.hypotheses.base_csck,
            },
            einstein_proportional: certificate.einstein_proportional,
            einstein_factor: fmt_opt(&certificate.einstein_factor),
            scalar_mean: fmt_opt(&certificate.scalar_mean),
            prescribed_angle: fmt_opt(&certificate.prescribed_angle),
            polarization_factor: fmt_opt(&certificate.polarization_factor),
            notes: certificate.notes.clone(),
        }
    }
}

/// Serialized properness-transfer report.
#[derive(Debug, Clone, Serialize)]
pub struct AlphaDoc {
    /// Always `alpha-properness`.
    pub check: &'static str,
    /// Conjunction of the three conditions.
    pub satisfied: bool,
    /// Strict angle inequality on the alpha bound.
    pub angle_condition: bool,
    /// Margin of that inequality.
    pub angle_margin: String,
    /// Whether the shifted adjoint class is ample.
    pub adjoint_ample: bool,
    /// Per-generator margins for the adjoint class.
    pub adjoint_margins: Vec<MarginDoc>,
    /// Whether the shifted twisted class is ample.
    pub twisted_ample: bool,
    /// Per-generator margins for the twisted class.
    pub twisted_margins: Vec<MarginDoc>,
}

/// A named exact margin.
#[derive(Debug, Clone, Serialize)]
pub struct MarginDoc {
    /// Curve generator label.
    pub generator: String,
    /// Exact pairing value.
    pub margin: String,
}

fn margins(list: &[(String, BigRational)]) -> Vec<MarginDoc> {
    list.iter()
        .map(|(generator, margin)| MarginDoc {
            generator: generator.clone(),
            margin: format_rational(margin),
        })
        .collect()
}

impl AlphaDoc {
    /// Serializes a properness report.
    pub fn from_report(report: &AlphaPropernessReport) -> AlphaDoc {
        AlphaDoc {
            check: "alpha-properness",
            satisfied: report.satisfied,
            angle_condition: report.angle_condition,
            angle_margin: format_rational(&report.angle_margin),
            adjoint_ample: report.adjoint_ample,
            adjoint_margins: margins(&report.adjoint_margins),
            twisted_ample: report.twisted_ample,
            twisted_margins: margins(&report.twisted_margins),
        }
    }
}

/// Result document of an informational check.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum CheckOutcome {
    /// A full certificate (sweep, frozen-angle, boundary checks).
    Certificate(Box<CertificateDoc>),
    /// Properness transfer report.
    Alpha(AlphaDoc),
    /// Einstein proportionality factor.
    Einstein {
        check: &'static str,
        proportional: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        factor: Option<String>,
    },
    /// Mean scalar curvature upstairs.
    Scalar { check: &'static str, value: String },
    /// Sign classification of the first Chern class upstairs.
    Sign {
        check: &'static str,
        sign: &'static str,
    },
}

/// Wire name of a Chern-class sign.
pub fn sign_name(sign: C1Sign) -> &'static str {
    match sign {
        C1Sign::Fano => "fano",
        C1Sign::CalabiYau => "calabi-yau",
        C1Sign::GeneralType => "general-type",
        C1Sign::Indefinite => "indefinite",
    }
}

/// Top-level document of the `certify` command.
#[derive(Debug, Clone, Serialize)]
pub struct CertifyDocument {
    /// Emitting tool.
    pub tool: ToolInfo,
    /// Echo of the parsed request; re-parses to an equal request.
    pub input: CertifyRequest,
    /// The check outcome.
    pub result: CheckOutcome,
    /// Wall-clock timing (excluded from determinism guarantees).
    pub timing: Timing,
}

/// One row of an enumeration, kept deliberately compact.
#[derive(Debug, Clone, Serialize)]
pub struct RowDoc {
    /// Parameter values in declared order.
    pub params: serde_json::Map<String, serde_json::Value>,
    /// Verdict string.
    pub verdict: String,
    /// Certified angle, when attained.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_witness: Option<String>,
    /// Feasible segment rendering, when nonempty.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub feasible_interval: Option<String>,
    /// First diagnostic note, when inconclusive.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl RowDoc {
    /// Serializes an enumeration row.
    pub fn from_row(row: &EnumerationRow) -> RowDoc {
        let mut params = serde_json::Map::new();
        for (name, value) in &row.parameters {
            params.insert(name.clone(), serde_json::Value::from(*value));
        }
        RowDoc {
            params,
            verdict: row.certificate.verdict.to_string(),
            delta_witness: fmt_opt(&row.certificate.delta_witness),
            feasible_interval: row
                .certificate
                .feasible_interval
                .as_ref()
                .map(|seg| seg.to_string()),
            note: row.certificate.notes.first().cloned(),
        }
    }
}

/// Footer of an enumeration: totals per verdict.
#[derive(Debug, Clone, Serialize)]
pub struct SummaryDoc {
    /// Marker making the footer self-describing in JSON-lines output.
    pub summary: SummaryCounts,
}

/// Verdict counts.
#[derive(Debug, Clone, Serialize)]
pub struct SummaryCounts {
    /// Total number of rows.
    pub rows: usize,
    /// Rows with verdict `proven-cscK`.
    pub proven: usize,
    /// Rows with verdict `inconclusive`.
    pub inconclusive: usize,
}

/// One numerical check result in a K-energy report.
#[derive(Debug, Clone, Serialize)]
pub struct KenergyCheckDoc {
    /// Check name.
    pub name: String,
    /// Measured defect.
    pub defect: f64,
    /// Acceptance threshold.
    pub tolerance: f64,
    /// Whether the defect is within tolerance.
    pub pass: bool,
}

/// Term breakdown of one K-energy evaluation.
#[derive(Debug, Clone, Serialize)]
pub struct KenergyValueDoc {
    /// What was evaluated.
    pub name: String,
    /// Total value.
    pub value: f64,
    /// Entropy term.
    pub entropy_term: f64,
    /// Energy (linear) term.
    pub jhat_term: f64,
    /// Divisor / ramification point contributions.
    pub divisor_terms: Vec<f64>,
    /// Self-estimated quadrature error.
    pub quadrature_error_estimate: f64,
}

impl KenergyValueDoc {
    /// Serializes an evaluation under the given name.
    pub fn from_result(name: impl Into<String>, result: &KEnergyResult) -> KenergyValueDoc {
        KenergyValueDoc {
            name: name.into(),
            value: result.value,
            entropy_term: result.entropy_term,
            jhat_term: result.jhat_term,
            divisor_terms: result.divisor_terms.clone(),
            quadrature_error_estimate: result.quadrature_error_estimate,
        }
    }
}

/// Top-level document of the `kenergy` command.
#[derive(Debug, Clone, Serialize)]
pub struct KenergyDocument {
    /// Emitting tool.
    pub tool: ToolInfo,
    /// Which battery was requested.
    pub check: String,
    /// Effective parameters.
    pub parameters: KenergyParamsDoc,
    /// Individual check results.
    pub results: Vec<KenergyCheckDoc>,
    /// Evaluations backing the checks (term breakdowns).
    pub evaluations: Vec<KenergyValueDoc>,
    /// Conjunction of all `pass` flags.
    pub pass: bool,
    /// Wall-clock timing (excluded from determinism guarantees).
    pub timing: Timing,
}

/// Effective parameters of a K-energy run.
#[derive(Debug, Clone, Serialize)]
pub struct KenergyParamsDoc {
    /// Covering degree.
    pub degree: u32,
    /// Potential description.
    pub potential: String,
    /// Gauss–Legendre nodes per panel.
    pub nodes: usize,
}
