//! Command-line front end: batch certification, enumeration, and numerical
//! K-energy verification.
//!
//! Three subcommands:
//!
//! * `covercert certify <file>` — run one certifier check described by a JSON
//!   document (TOML accepted for `.toml` files; `-` reads stdin).  Exit code
//!   0 when the verdict is proven, 10 when inconclusive, 2 on input errors.
//! * `covercert enumerate <file>` — sweep a parameter family and emit one
//!   JSON line per instance plus a summary footer (a single pretty document
//!   with `--pretty`).
//! * `covercert kenergy <check>` — run the numerical verification battery
//!   (`pullback`, `linearity`, `cocycle`, `gauss-bonnet`, or `all`).  Exit
//!   code 0 when every defect is within tolerance, 1 otherwise; the report is
//!   emitted either way.
//!
//! All outputs are deterministic except for the `timing` block.

pub mod report;
pub mod schema;

use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;

use covercert::{
    c1_sign_upstairs, check_alpha_properness, check_prescribed_angle, check_proportional_boundary,
    check_unit_angle, cocycle_defect, einstein_factor, enumerate, eval_cover_kenergy,
    eval_log_kenergy, find_delta_witness, gauss_bonnet_check, mean_scalar, pullback_area_defect,
    verify_delta_linearity, verify_pullback_identity, QuadratureSettings, RadialPotential,
};

use report::{
    AlphaDoc, CertificateDoc, CertifyDocument, CheckOutcome, KenergyCheckDoc, KenergyDocument,
    KenergyParamsDoc, KenergyValueDoc, RowDoc, SummaryCounts, SummaryDoc, Timing, ToolInfo,
};
use schema::{CertifyRequest, CheckName, EnumerateRequest, Problem};

/// Exit code for a proven verdict or a passing report.
pub const EXIT_OK: i32 = 0;
/// Exit code when a numerical defect exceeds its tolerance.
pub const EXIT_TOLERANCE: i32 = 1;
/// Exit code for input, schema, or value errors.
pub const EXIT_INPUT: i32 = 2;
/// Exit code for an inconclusive certificate.
pub const EXIT_INCONCLUSIVE: i32 = 10;

/// Tolerances applied by the `kenergy` battery, pinned in one place.
pub mod tolerances {
    /// Pullback identity, relative defect.
    pub const PULLBACK: f64 = 1e-6;
    /// Angle linearity on shared nodes, relative defect.
    pub const LINEARITY: f64 = 1e-12;
    /// Change-of-reference cocycle, absolute defect.
    pub const COCYCLE: f64 = 1e-6;
    /// Total Ricci curvature of the sphere, absolute defect.
    pub const GAUSS_BONNET: f64 = 1e-10;
    /// Pulled-back reference area, absolute defect.
    pub const COVER_AREA: f64 = 1e-10;
}

/// Top-level argument parser.
#[derive(Debug, Parser)]
#[command(
    name = "covercert",
    version,
    about = "Exact cscK certificates on ramified Galois coverings"
)]
pub struct Cli {
    /// Subcommand.
    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify one problem document (JSON; `.toml` files accepted; `-` = stdin).
    Certify {
        /// Input document path.
        input: String,
        /// Write the result document here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Pretty-print the JSON output.
        #[arg(long)]
        pretty: bool,
    },
    /// Enumerate a parameter family; one JSON line per row plus a summary.
    Enumerate {
        /// Input document path.
        input: String,
        /// Write the output here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit a single pretty document instead of JSON lines.
        #[arg(long)]
        pretty: bool,
    },
    /// Run the numerical K-energy verification battery.
    Kenergy {
        /// Which battery to run.
        check: KenergyCheck,
        /// Covering degree.
        #[arg(long, default_value_t = 3)]
        d: u32,
        /// Potential: `zero`, `bump`, `bump:center,height,width`,
        /// `moebius`, or `moebius:lambda`.
        #[arg(long, default_value = "bump")]
        potential: String,
        /// Gauss–Legendre nodes per quadrature panel (1..=64).
        #[arg(long, default_value_t = 16)]
        nodes: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Pretty-print the JSON report.
        #[arg(long)]
        pretty: bool,
    },
}

/// Numerical check batteries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KenergyCheck {
    /// Upstairs K-energy equals degree times the conical K-energy downstairs.
    Pullback,
    /// The conical K-energy is affine in the scaled branch angle.
    Linearity,
    /// Energy differences agree across the two upstairs references.
    Cocycle,
    /// Curvature and area normalizations of the quadrature.
    GaussBonnet,
    /// Everything above.
    All,
}

impl KenergyCheck {
    fn as_str(&self) -> &'static str {
        match self {
            KenergyCheck::Pullback => "pullback",
            KenergyCheck::Linearity => "linearity",
            KenergyCheck::Cocycle => "cocycle",
            KenergyCheck::GaussBonnet => "gauss-bonnet",
            KenergyCheck::All => "all",
        }
    }
}

struct Failure {
    message: String,
}

impl Failure {
    fn new(message: impl ToString) -> Failure {
        Failure {
            message: message.to_string(),
        }
    }
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure::new(e)
    }
}

/// Runs a parsed command line; returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let outcome = match &cli.command {
        Command::Certify { input, out, pretty } => run_certify(input, out.as_deref(), *pretty),
        Command::Enumerate { input, out, pretty } => run_enumerate(input, out.as_deref(), *pretty),
        Command::Kenergy {
            check,
            d,
            potential,
            nodes,
            out,
            pretty,
        } => run_kenergy(*check, *d, potential, *nodes, out.as_deref(), *pretty),
    };
    match outcome {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            EXIT_INPUT
        }
    }
}

fn read_input(path: &str) -> Result<(String, bool), Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::new(format!("reading stdin: {e}")))?;
        return Ok((text, false));
    }
    let is_toml = std::path::Path::new(path)
        .extension()
        .map(|ext| ext.eq_ignore_ascii_case("toml"))
        .unwrap_or(false);
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::new(format!("reading {path}: {e}")))?;
    Ok((text, is_toml))
}

fn parse_document<T: serde::de::DeserializeOwned>(text: &str, is_toml: bool) -> Result<T, Failure> {
    if is_toml {
        let deserializer = toml::Deserializer::new(text);
        serde_path_to_error::deserialize(deserializer)
            .map_err(|e| Failure::new(format!("at {}: {}", e.path(), e.inner())))
    } else {
        let mut deserializer = serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(&mut deserializer)
            .map_err(|e| Failure::new(format!("at {}: {}", e.path(), e.inner())))
    }
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::new(format!("writing {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T, pretty: bool) -> Result<String, Failure> {
    let mut text = if pretty {
        serde_json::to_string_pretty(value)?
    } else {
        serde_json::to_string(value)?
    };
    text.push('\n');
    Ok(text)
}

fn dispatch_check(problem: &Problem) -> Result<(CheckOutcome, i32), Failure> {
    let Problem {
        geometry,
        omega,
        cover,
        hypotheses,
        check,
        beta0,
        epsilon,
        alpha_lower_bound,
    } = problem;
    let outcome = match check {
        CheckName::DeltaSweep => {
            let certificate = find_delta_witness(geometry, cover, omega, hypotheses)?;
            let code = if certificate.proven() {
                EXIT_OK
            } else {
                EXIT_INCONCLUSIVE
            };
            (
                CheckOutcome::Certificate(Box::new(CertificateDoc::from_certificate(&certificate))),
                code,
            )
        }
        CheckName::UnitAngle => {
            let certificate = check_unit_angle(geometry, cover, omega, hypotheses)?;
            let code = if certificate.proven() {
                EXIT_OK
            } else {
                EXIT_INCONCLUSIVE
            };
            (
                CheckOutcome::Certificate(Box::new(CertificateDoc::from_certificate(&certificate))),
                code,
            )
        }
        CheckName::PrescribedAngle => {
            let beta0 = beta0.as_ref().expect("validated by schema");
            let certificate = check_prescribed_angle(geometry, cover, omega, hypotheses, beta0)?;
            let code = if certificate.proven() {
                EXIT_OK
            } else {
                EXIT_INCONCLUSIVE
            };
            (
                CheckOutcome::Certificate(Box::new(CertificateDoc::from_certificate(&certificate))),
                code,
            )
        }
        CheckName::ProportionalBoundary => {
            let certificate = check_proportional_boundary(geometry, cover, omega, hypotheses)?;
            let code = if certificate.proven() {
                EXIT_OK
            } else {
                EXIT_INCONCLUSIVE
            };
            (
                CheckOutcome::Certificate(Box::new(CertificateDoc::from_certificate(&certificate))),
                code,
            )
        }
        CheckName::AlphaProperness => {
            let epsilon = epsilon.as_ref().expect("validated by schema");
            let alpha = alpha_lower_bound.as_ref().expect("validated by schema");
            let boundary: Vec<(covercert::DivisorClass, BigRational)> = cover
                .branches()
                .iter()
                .map(|branch| {
                    let beta = BigRational::new(1.into(), (branch.inertia as i64).into());
                    (branch.class.clone(), beta)
                })
                .collect();
            let report = check_alpha_properness(geometry, &boundary, omega, epsilon, alpha)?;
            let code = if report.satisfied {
                EXIT_OK
            } else {
                EXIT_INCONCLUSIVE
            };
            (CheckOutcome::Alpha(AlphaDoc::from_report(&report)), code)
        }
        CheckName::EinsteinFactor => {
            let factor = einstein_factor(geometry, cover, omega)?;
            (
                CheckOutcome::Einstein {
                    check: "einstein-factor",
                    proportional: factor.is_some(),
                    factor: factor.as_ref().map(covercert::format_rational),
                },
                EXIT_OK,
            )
        }
        CheckName::ScalarMean => {
            let value = mean_scalar(geometry, cover, omega)?;
            (
                CheckOutcome::Scalar {
                    check: "scalar-mean",
                    value: covercert::format_rational(&value),
                },
                EXIT_OK,
            )
        }
        CheckName::C1Sign => {
            let sign = c1_sign_upstairs(geometry, cover)?;
            (
                CheckOutcome::Sign {
                    check: "c1-sign",
                    sign: report::sign_name(sign),
                },
                EXIT_OK,
            )
        }
    };
    Ok(outcome)
}

fn run_certify(input: &str, out: Option<&std::path::Path>, pretty: bool) -> Result<i32, Failure> {
    let started = Instant::now();
    let (text, is_toml) = read_input(input)?;
    let request: CertifyRequest = parse_document(&text, is_toml)?;
    let problem = request.build()?;
    let (result, code) = dispatch_check(&problem)?;
    let document = CertifyDocument {
        tool: ToolInfo::current(),
        input: request,
        result,
        timing: Timing {
            seconds: started.elapsed().as_secs_f64(),
        },
    };
    emit(&to_json(&document, pretty)?, out)?;
    Ok(code)
}

fn run_enumerate(input: &str, out: Option<&std::path::Path>, pretty: bool) -> Result<i32, Failure> {
    let (text, is_toml) = read_input(input)?;
    let request: EnumerateRequest = parse_document(&text, is_toml)?;
    let family = request.family.build();
    let hypotheses = request.hypotheses.build();
    let rows = enumerate(&family, &hypotheses)?;

    let row_docs: Vec<RowDoc> = rows.iter().map(RowDoc::from_row).collect();
    let proven = rows.iter().filter(|r| r.certificate.proven()).count();
    let counts = SummaryCounts {
        rows: rows.len(),
        proven,
        inconclusive: rows.len() - proven,
    };

    let output = if pretty {
        #[derive(serde::Serialize)]
        struct PrettyEnumeration {
            tool: ToolInfo,
            rows: Vec<RowDoc>,
            summary: SummaryCounts,
        }
        to_json(
            &PrettyEnumeration {
                tool: ToolInfo::current(),
                rows: row_docs,
                summary: counts,
            },
            true,
        )?
    } else {
        let mut lines = String::new();
        for row in &row_docs {
            lines.push_str(&serde_json::to_string(row)?);
            lines.push('\n');
        }
        lines.push_str(&serde_json::to_string(&SummaryDoc { summary: counts })?);
        lines.push('\n');
        lines
    };
    emit(&output, out)?;
    Ok(EXIT_OK)
}

/// Parses a potential description of the form `zero`, `bump`,
/// `bump:center,height,width`, `moebius`, or `moebius:lambda`.
pub fn parse_potential(spec: &str) -> Result<RadialPotential, String> {
    let (name, args) = match spec.split_once(':') {
        Some((name, args)) => (name, Some(args)),
        None => (spec, None),
    };
    match (name, args) {
        ("zero", None) => Ok(RadialPotential::Zero),
        ("bump", None) => Ok(RadialPotential::standard_bump()),
        ("bump", Some(args)) => {
            let parts: Vec<&str> = args.split(',').collect();
            if parts.len() != 3 {
                return Err(format!(
                    "potential {spec:?}: expected bump:center,height,width"
                ));
            }
            let mut values = [0.0_f64; 3];
            for (slot, part) in values.iter_mut().zip(&parts) {
                *slot = part
                    .trim()
                    .parse()
                    .map_err(|e| format!("potential {spec:?}: {e}"))?;
            }
            RadialPotential::bump(values[0], values[1], values[2]).map_err(|e| e.to_string())
        }
        ("moebius", None) => RadialPotential::moebius(2.0).map_err(|e| e.to_string()),
        ("moebius", Some(arg)) => {
            let lambda: f64 = arg
                .trim()
                .parse()
                .map_err(|e| format!("potential {spec:?}: {e}"))?;
            RadialPotential::moebius(lambda).map_err(|e| e.to_string())
        }
        _ => Err(format!(
            "unknown potential {spec:?}; expected zero, bump[:c,h,w], or moebius[:lambda]"
        )),
    }
}

struct Battery {
    results: Vec<KenergyCheckDoc>,
    evaluations: Vec<KenergyValueDoc>,
}

impl Battery {
    fn new() -> Battery {
        Battery {
            results: Vec::new(),
            evaluations: Vec::new(),
        }
    }

    fn record(&mut self, name: impl Into<String>, defect: f64, tolerance: f64) {
        self.results.push(KenergyCheckDoc {
            name: name.into(),
            defect,
            tolerance,
            pass: defect <= tolerance,
        });
    }
}

fn run_kenergy(
    check: KenergyCheck,
    degree: u32,
    potential_spec: &str,
    nodes: usize,
    out: Option<&std::path::Path>,
    pretty: bool,
) -> Result<i32, Failure> {
    let started = Instant::now();
    if degree == 0 {
        return Err(Failure::new("covering degree must be at least 1"));
    }
    if !(1..=64).contains(&nodes) {
        return Err(Failure::new("nodes must lie in 1..=64"));
    }
    let potential = parse_potential(potential_spec).map_err(Failure::new)?;
    let settings = QuadratureSettings {
        order: nodes,
        ..QuadratureSettings::default()
    };

    let mut battery = Battery::new();
    let run_pullback = matches!(check, KenergyCheck::Pullback | KenergyCheck::All);
    let run_linearity = matches!(check, KenergyCheck::Linearity | KenergyCheck::All);
    let run_cocycle = matches!(check, KenergyCheck::Cocycle | KenergyCheck::All);
    let run_gauss = matches!(check, KenergyCheck::GaussBonnet | KenergyCheck::All);

    if run_pullback {
        let defect = verify_pullback_identity(&potential, degree, &settings)?;
        battery.record("pullback-identity", defect, tolerances::PULLBACK);
        let upstairs = eval_cover_kenergy(&potential, degree, &settings)?;
        battery.evaluations.push(KenergyValueDoc::from_result(
            "upstairs-cover-energy",
            &upstairs,
        ));
        let beta = 1.0 / degree as f64;
        let downstairs = eval_log_kenergy(&potential, beta, &settings)?;
        battery.evaluations.push(KenergyValueDoc::from_result(
            "downstairs-cone-energy",
            &downstairs,
        ));
    }
    if run_linearity {
        if degree < 2 {
            return Err(Failure::new(
                "the linearity check needs a covering degree of at least 2",
            ));
        }
        let supremum = degree as f64 / (degree as f64 - 1.0);
        let delta0 = 0.5 * (1.0 + supremum);
        let delta = 1.0_f64.min(0.5 * (1.0 + delta0));
        let defect = verify_delta_linearity(&potential, degree, delta0, delta, &settings)?;
        battery.record("angle-linearity", defect, tolerances::LINEARITY);
    }
    if run_cocycle {
        let partners: [(&str, RadialPotential); 2] = [
            ("cocycle-vs-zero", RadialPotential::Zero),
            ("cocycle-vs-moebius", RadialPotential::moebius(2.0)?),
        ];
        for (name, partner) in partners {
            let defect = cocycle_defect(&potential, &partner, degree, &settings)?;
            battery.record(name, defect, tolerances::COCYCLE);
        }
    }
    if run_gauss {
        battery.record(
            "gauss-bonnet",
            gauss_bonnet_check(&settings),
            tolerances::GAUSS_BONNET,
        );
        battery.record(
            "cover-area",
            pullback_area_defect(degree, &settings)?,
            tolerances::COVER_AREA,
        );
    }

    let pass = battery.results.iter().all(|r| r.pass);
    let document = KenergyDocument {
        tool: ToolInfo::current(),
        check: check.as_str().to_string(),
        parameters: KenergyParamsDoc {
            degree,
            potential: potential.describe(),
            nodes,
        },
        results: battery.results,
        evaluations: battery.evaluations,
        pass,
        timing: Timing {
            seconds: started.elapsed().as_secs_f64(),
        },
    };
    emit(&to_json(&document, pretty)?, out)?;
    Ok(if pass { EXIT_OK } else { EXIT_TOLERANCE })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn potential_specs_parse() {
        assert_eq!(parse_potential("zero").unwrap(), RadialPotential::Zero);
        assert_eq!(
            parse_potential("bump").unwrap(),
            RadialPotential::standard_bump()
        );
        match parse_potential("bump:0.5,0.2,1.5").unwrap() {
            RadialPotential::Bump {
                center,
                height,
                width,
            } => {
                assert_eq!((center, height, width), (0.5, 0.2, 1.5));
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_potential("moebius:4").unwrap() {
            RadialPotential::MoebiusScaling { lambda } => assert_eq!(lambda, 4.0),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_potential("spike").is_err());
        assert!(parse_potential("bump:1,2").is_err());
        assert!(parse_potential("moebius:-1").is_err());
    }

    #[test]
    fn linearity_defaults_stay_admissible() {
        for degree in 2u32..=9 {
            let supremum = degree as f64 / (degree as f64 - 1.0);
            let delta0 = 0.5 * (1.0 + supremum);
            let delta = 1.0_f64.min(0.5 * (1.0 + delta0));
            assert!(delta0 < supremum, "degree {degree}");
            assert!(0.0 < delta && delta <= delta0, "degree {degree}");
        }
    }
}
