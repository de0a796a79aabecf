//! `cubic-torsion`: family sweeps, torsion and field computations, the
//! obstruction checks, and the acceptance suite, as JSON reports.

mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use cubic_torsion::cubic_field::{BaseField, CubicField, RationalField};
use cubic_torsion::elliptic::torsion_points;
use cubic_torsion::exact::{format_rational, parse_rational};
use cubic_torsion::families::FamilyLabel;
use cubic_torsion::numeric::DEFAULT_BITS;
use cubic_torsion::obstruction::obstruction_report;
use cubic_torsion::report::{verify_family, Suite, Summary, VerifyOptions};
use cubic_torsion::{Rational, RationalCurve};

/// Environment variable naming a directory that receives a copy of every report.
const OUTPUT_DIR_VAR: &str = "CUBIC_TORSION_OUTPUT_DIR";

#[derive(Parser)]
#[command(name = "cubic-torsion", version, about = "Exact verification of torsion growth over cubic fields")]
struct Cli {
    /// Worker threads; all cores by default.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Starting precision in bits of the numerical root stage.
    #[arg(long, global = true, default_value_t = DEFAULT_BITS)]
    bits: usize,
    /// Include wall-clock timings in the reports.
    #[arg(long, global = true)]
    timings: bool,
    /// Run the acceptance suite (same as the `seed-suite` command).
    #[arg(long)]
    seed_suite: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify members of a family against their predicted torsion and field type.
    VerifyFamily {
        /// F13, F14_ISOG, F14_KUBERT7, F18_CYCLIC, F18_KUBERT9, F2x14, FIXED_49A3 or FIXED_49A4.
        #[arg(value_parser = parse_label)]
        family: FamilyLabel,
        /// Comma-separated rational parameters; the family's defaults if omitted.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Option<Vec<String>>,
    },
    /// Torsion subgroup and points of a rational curve over Q or a cubic field.
    Torsion {
        /// `{"a": [a1, a2, a3, a4, a6]}`, `[A, B]` for y² = x³ + Ax + B, or `@file`.
        #[arg(long)]
        curve: String,
        /// Defining cubic as text (`x^3 + 2x^2 - x - 1`), coefficient array, or `@file`; Q if omitted.
        #[arg(long)]
        field: Option<String>,
    },
    /// Galois type and pure-cubic candidacy of a cubic field.
    Classify {
        /// Defining cubic as text, coefficient array, or `@file`.
        field: String,
    },
    /// Rational points of the pure-cubic obstruction curve of a Kubert family.
    Obstruction {
        /// F14_KUBERT7 or F18_KUBERT9.
        #[arg(value_parser = parse_label)]
        family: FamilyLabel,
        /// Height bound of the search.
        #[arg(long, default_value_t = 100)]
        height: u64,
    },
    /// Run every acceptance criterion with its default parameters.
    SeedSuite {
        #[arg(long, default_value_t = 100)]
        height: u64,
        /// Seed for the random square-root checks.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn parse_label(s: &str) -> Result<FamilyLabel, String> {
    s.parse()
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed arguments.
    Usage(String),
    /// Well-formed input violating a mathematical precondition.
    Input(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

/// Prints a report to stdout and copies it into the output directory when
/// one is configured.
fn emit(name: &str, report: &impl Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(report).map_err(|e| CliError::Io(e.to_string()))?;
    println!("{text}");
    if let Some(dir) = std::env::var_os(OUTPUT_DIR_VAR) {
        let dir = PathBuf::from(dir);
        std::fs::create_dir_all(&dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, text + "\n").map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn verify_family_cmd(label: FamilyLabel, params: Option<Vec<String>>, opts: &VerifyOptions) -> Result<bool, CliError> {
    let params: Option<Vec<Rational>> = params
        .map(|ps| ps.iter().map(|p| parse_rational(p).map_err(|e| CliError::Usage(e.to_string()))).collect())
        .transpose()?;
    let reports = verify_family(label, params.as_deref(), opts).map_err(|e| CliError::Usage(e.to_string()))?;
    for r in &reports {
        eprintln!("{}", r.line());
    }
    let summary = Summary::of(&reports);
    eprintln!("{label}: {summary}");
    emit(&format!("verify-family-{label}"), &json!({ "family": label, "summary": summary, "reports": reports }))?;
    Ok(summary.violation == 0)
}

fn torsion_report<F: BaseField>(e: &RationalCurve, k: &F, elem: impl Fn(&F::Elem) -> Value) -> Result<Value, CliError> {
    let data = torsion_points(e, k).map_err(|e| CliError::Input(e.to_string()))?;
    let points: Vec<_> = data.points.iter().map(|p| p.map(&elem)).collect();
    Ok(json!({
        "curve": e,
        "field": k.describe(),
        "torsion": data.group,
        "points": points,
    }))
}

fn torsion_cmd(curve: &str, field: Option<&str>, bits: usize) -> Result<bool, CliError> {
    let e = input::curve(curve)?;
    let report = match field {
        None => torsion_report(&e, &RationalField, |x| json!(format_rational(x)))?,
        Some(f) => {
            let k = input::field(f)?.rebit(bits);
            let mut r = torsion_report(&e, &k, |x| json!(x))?;
            r["field_class"] = json!(k.classify());
            r
        }
    };
    eprintln!(
        "torsion over {}: {}",
        report["field"].as_str().unwrap_or("?"),
        report["torsion"].as_str().unwrap_or("?")
    );
    emit("torsion", &report)?;
    Ok(true)
}

fn classify_cmd(field: &str) -> Result<bool, CliError> {
    let k: CubicField = input::field(field)?;
    let class = k.classify();
    eprintln!("{}: {}", k.minpoly(), class.galois_type);
    emit(
        "classify",
        &json!({
            "field": k.minpoly().to_string(),
            "discriminant": format_rational(k.disc()),
            "galois_type": class.galois_type,
            "pure_candidate": class.pure_candidate,
        }),
    )?;
    Ok(true)
}

fn obstruction_cmd(family: FamilyLabel, height: u64) -> Result<bool, CliError> {
    let r = obstruction_report(family, height).map_err(|e| CliError::Usage(e.to_string()))?;
    let pts: Vec<String> = r.points_found.iter().map(ToString::to_string).collect();
    eprintln!("{family}: {} has {{{}}} up to height {height}", r.curve, pts.join(", "));
    emit(&format!("obstruction-{family}"), &r)?;
    Ok(r.substitution_identity && r.matches_expected)
}

fn seed_suite_cmd(opts: VerifyOptions, height: u64, seed: Option<u64>) -> Result<bool, CliError> {
    let mut suite = Suite::new(opts).with_height(height);
    if let Some(s) = seed {
        suite = suite.with_seed(s);
    }
    let mut results = Vec::new();
    for c in cubic_torsion::report::CRITERIA {
        let r = suite.run(c.id);
        eprintln!("{}", r.line());
        results.push(r);
    }
    let passed = results.iter().filter(|r| r.passed()).count();
    eprintln!("seed suite: {passed} of {} criteria passed", results.len());
    let summary = Summary::of(suite.reports());
    emit(
        "seed-suite",
        &json!({ "passed": passed, "criteria": results, "summary": summary, "reports": suite.reports() }),
    )?;
    Ok(passed == results.len() && summary.violation == 0)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let opts = VerifyOptions { bits: cli.bits, timings: cli.timings };
    match (cli.command, cli.seed_suite) {
        (None, true) => seed_suite_cmd(opts, 100, None),
        (Some(Command::SeedSuite { height, seed }), _) => seed_suite_cmd(opts, height, seed),
        (Some(_), true) => Err(CliError::Usage("--seed-suite takes no subcommand".into())),
        (None, false) => Err(CliError::Usage("a subcommand or --seed-suite is required (see --help)".into())),
        (Some(Command::VerifyFamily { family, params }), _) => verify_family_cmd(family, params, &opts),
        (Some(Command::Torsion { curve, field }), _) => torsion_cmd(&curve, field.as_deref(), cli.bits),
        (Some(Command::Classify { field }), _) => classify_cmd(&field),
        (Some(Command::Obstruction { family, height }), _) => obstruction_cmd(family, height),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("cubic-torsion: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
