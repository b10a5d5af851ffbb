//! Command-line front-end: certify inclusion disks, run the simultaneous
//! iteration, convert radius constants between condition families, and run
//! randomized soundness surveys.
//!
//! Exit codes are a contract: 0 success/certified, 1 soundness violation
//! (survey only), 2 condition unsatisfied / domain violation /
//! non-convergence, 3 invalid input. No other codes are produced.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use rootcert_core::serde_ext::complex_pair_vec;
use rootcert_core::{
    certify_fixed_r, certify_gamma, certify_main, convert_first_to_second, convert_first_to_third,
    convert_first_to_third_simple, convert_second_to_third, convert_second_to_third_simple,
    iterate, survey, Certificate, Complex64, ConversionResult, Error, GuessVector, IterationStatus,
    PNormSpec, Polynomial, SurveyConfig,
};

const EXIT_OK: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_UNSATISFIED: u8 = 2;
const EXIT_INVALID: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rootcert",
    version,
    about = "Certified simultaneous polynomial root finding",
    long_about = "Runs the simultaneous root-finding iteration and certifies guesses: \
when the computable quantity E = ||W_f(x)/d(x)||_p clears a closed-form threshold, \
the tool emits mutually disjoint disks each containing exactly one zero."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify inclusion disks for a guess vector
    Certify(CertifyArgs),
    /// Run the simultaneous iteration to convergence
    Solve(SolveArgs),
    /// Convert a radius constant between condition families
    Convert(ConvertArgs),
    /// Run a randomized certificate-soundness survey
    Survey(SurveyArgs),
}

#[derive(Args)]
struct CertifyArgs {
    /// Polynomial file: {"coeffs": [[re, im], ...]} leading-to-constant
    #[arg(long, value_name = "PATH")]
    poly: PathBuf,
    /// Guess file: {"guess": [[re, im], ...]}
    #[arg(long, value_name = "PATH")]
    guess: PathBuf,
    /// Norm exponent: 1, 2, "inf", or any decimal >= 1
    #[arg(long, value_name = "VALUE", default_value = "inf", value_parser = parse_exponent)]
    p: f64,
    /// Which localization statement to instantiate
    #[arg(long, value_enum, default_value_t = TheoremArg::Main)]
    theorem: TheoremArg,
    /// Level for --theorem fixedR (0 <= R <= 1/(2a+2))
    #[arg(long = "R", value_name = "VALUE", allow_negative_numbers = true)]
    r: Option<f64>,
    /// Write the certificate JSON here instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Also write the disks as CSV (columns center_re,center_im,radius)
    #[arg(long = "disks-csv", value_name = "PATH")]
    disks_csv: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    #[value(name = "main")]
    Main,
    #[value(name = "gamma")]
    Gamma,
    #[value(name = "fixedR")]
    FixedR,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_name = "PATH")]
    poly: PathBuf,
    #[arg(long, value_name = "PATH")]
    guess: PathBuf,
    /// Norm exponent used by --certify-first
    #[arg(long, value_name = "VALUE", default_value = "inf", value_parser = parse_exponent)]
    p: f64,
    /// Relative correction-norm tolerance
    #[arg(long, value_name = "VALUE", default_value_t = 1e-12)]
    tol: f64,
    /// Iteration budget (must be >= 1)
    #[arg(long = "max-iter", value_name = "N", default_value_t = 100)]
    max_iter: usize,
    /// Refuse to iterate unless the guess certifies first
    #[arg(long = "certify-first")]
    certify_first: bool,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConvertArgs {
    /// Conversion: 1to2, 2to3, 2to3s (rational variant), 1to3, 1to3s
    #[arg(long = "type", value_enum, value_name = "TOKEN")]
    kind: ConvertKind,
    /// Input radius
    #[arg(long = "R", value_name = "VALUE", allow_negative_numbers = true)]
    r: f64,
    /// Polynomial degree
    #[arg(long, value_name = "N")]
    n: usize,
    /// Norm exponent
    #[arg(long, value_name = "VALUE", value_parser = parse_exponent)]
    p: f64,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertKind {
    #[value(name = "1to2")]
    FirstToSecond,
    #[value(name = "2to3")]
    SecondToThird,
    #[value(name = "2to3s")]
    SecondToThirdSimple,
    #[value(name = "1to3")]
    FirstToThird,
    #[value(name = "1to3s")]
    FirstToThirdSimple,
}

#[derive(Args)]
struct SurveyArgs {
    /// Number of randomized trials
    #[arg(long, value_name = "N", default_value_t = 10_000)]
    trials: usize,
    /// Generator seed (the report is deterministic in it)
    #[arg(long, value_name = "N", default_value_t = 7)]
    seed: u64,
    /// Largest polynomial degree to sample (range is 2..=N)
    #[arg(long, value_name = "N", default_value_t = 12)]
    n: usize,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

fn parse_exponent(s: &str) -> Result<f64, String> {
    let p = if s == "inf" {
        f64::INFINITY
    } else {
        s.parse::<f64>().map_err(|e| e.to_string())?
    };
    if p.is_nan() || p < 1.0 {
        return Err(format!("exponent {s} must be >= 1 or \"inf\""));
    }
    Ok(p)
}

/// A failure that already knows its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            // runtime refusals: out-of-domain arguments, numeric breakdown
            Error::Domain(_)
            | Error::NonfiniteArithmetic(_)
            | Error::InstanceGeneration(_)
            | Error::InvalidInstance(_) => EXIT_UNSATISFIED,
            // malformed user input
            Error::InvalidExponent(_)
            | Error::DegenerateGuess(_)
            | Error::InvalidWeights
            | Error::MissingReference(_)
            | Error::DimensionMismatch { .. }
            | Error::InvalidPolynomial(_) => EXIT_INVALID,
        };
        Self {
            code,
            message: err.to_string(),
        }
    }
}

#[derive(Deserialize)]
struct PolyFile {
    #[serde(with = "complex_pair_vec")]
    coeffs: Vec<Complex64>,
}

#[derive(Deserialize)]
struct GuessFile {
    #[serde(with = "complex_pair_vec")]
    guess: Vec<Complex64>,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::invalid(format!("cannot parse {}: {e}", path.display())))
}

fn load_polynomial(path: &Path) -> Result<Polynomial, Failure> {
    let file: PolyFile = read_json(path)?;
    Ok(Polynomial::new(file.coeffs)?)
}

fn load_guess(path: &Path) -> Result<GuessVector, Failure> {
    let file: GuessFile = read_json(path)?;
    Ok(GuessVector::new(file.guess))
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), Failure> {
    let mut json = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::invalid(format!("serialization failed: {e}")))?;
    json.push('\n');
    match out {
        Some(path) => fs::write(path, json)
            .map_err(|e| Failure::invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{json}");
            Ok(())
        }
    }
}

fn write_disks_csv(cert: &Certificate, path: &Path) -> Result<(), Failure> {
    let mut csv = String::from("center_re,center_im,radius\n");
    for disk in &cert.disks {
        csv.push_str(&format!(
            "{},{},{}\n",
            disk.center.re, disk.center.im, disk.radius
        ));
    }
    fs::write(path, csv)
        .map_err(|e| Failure::invalid(format!("cannot write {}: {e}", path.display())))
}

fn cmd_certify(args: &CertifyArgs) -> Result<u8, Failure> {
    let f = load_polynomial(&args.poly)?;
    let x = load_guess(&args.guess)?;
    let spec = PNormSpec::new(f.degree(), args.p)?;
    let cert = match args.theorem {
        TheoremArg::Main => certify_main(&f, &x, &spec)?,
        TheoremArg::Gamma => certify_gamma(&f, &x, &spec)?,
        TheoremArg::FixedR => {
            let r = args
                .r
                .ok_or_else(|| Failure::invalid("--theorem fixedR requires --R"))?;
            certify_fixed_r(&f, &x, &spec, r)?
        }
    };
    if let Some(reason) = &cert.failure {
        eprintln!("not certified: {reason}");
    }
    emit(&cert, args.out.as_deref())?;
    if let Some(path) = &args.disks_csv {
        write_disks_csv(&cert, path)?;
    }
    Ok(if cert.satisfied {
        EXIT_OK
    } else {
        EXIT_UNSATISFIED
    })
}

#[derive(Serialize, Deserialize)]
struct SolveOutput {
    #[serde(rename = "final", with = "complex_pair_vec")]
    final_guess: Vec<Complex64>,
    iterations: usize,
    final_correction_norm: Option<f64>,
    status: String,
}

fn status_name(status: IterationStatus) -> &'static str {
    match status {
        IterationStatus::Converged => "converged",
        IterationStatus::MaxIterations => "max-iterations",
        IterationStatus::DivergedNonfinite => "diverged-nonfinite",
    }
}

fn cmd_solve(args: &SolveArgs) -> Result<u8, Failure> {
    if args.max_iter < 1 {
        return Err(Failure::invalid("--max-iter must be at least 1"));
    }
    // written so that a NaN tolerance also takes the rejection branch
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(args.tol > 0.0) {
        return Err(Failure::invalid("--tol must be positive"));
    }
    let f = load_polynomial(&args.poly)?;
    let x0 = load_guess(&args.guess)?;
    if args.certify_first {
        let spec = PNormSpec::new(f.degree(), args.p)?;
        let cert = certify_main(&f, &x0, &spec)?;
        if !cert.satisfied {
            eprintln!("guess does not certify; not iterating");
            emit(&cert, args.out.as_deref())?;
            return Ok(EXIT_UNSATISFIED);
        }
    }
    let trace = iterate(&f, &x0, args.max_iter, args.tol, None)?;
    let output = SolveOutput {
        final_guess: trace.final_guess().components().to_vec(),
        iterations: trace.steps(),
        final_correction_norm: trace.correction_norms.last().copied(),
        status: status_name(trace.status).to_string(),
    };
    emit(&output, args.out.as_deref())?;
    Ok(match trace.status {
        IterationStatus::Converged => EXIT_OK,
        _ => EXIT_UNSATISFIED,
    })
}

fn cmd_convert(args: &ConvertArgs) -> Result<u8, Failure> {
    let result: ConversionResult = match args.kind {
        ConvertKind::FirstToSecond => convert_first_to_second(args.r, args.n, args.p)?,
        ConvertKind::SecondToThird => convert_second_to_third(args.r, args.n, args.p)?,
        ConvertKind::SecondToThirdSimple => convert_second_to_third_simple(args.r, args.n, args.p)?,
        ConvertKind::FirstToThird => convert_first_to_third(args.r, args.n, args.p)?,
        ConvertKind::FirstToThirdSimple => convert_first_to_third_simple(args.r, args.n, args.p)?,
    };
    emit(&result, args.out.as_deref())?;
    if result.domain_ok {
        Ok(EXIT_OK)
    } else {
        eprintln!("R = {} is outside the domain of this conversion", args.r);
        Ok(EXIT_UNSATISFIED)
    }
}

fn cmd_survey(args: &SurveyArgs) -> Result<u8, Failure> {
    if args.trials < 1 {
        return Err(Failure::invalid("--trials must be at least 1"));
    }
    if args.n < 2 {
        return Err(Failure::invalid("--n must be at least 2"));
    }
    let config = SurveyConfig {
        n_max: args.n,
        trials: args.trials,
        seed: args.seed,
        ..SurveyConfig::default()
    };
    let report = survey(&config)?;
    emit(&report, args.out.as_deref())?;
    if report.total_violations() == 0 {
        Ok(EXIT_OK)
    } else {
        eprintln!(
            "soundness violations detected: {}",
            report.total_violations()
        );
        Ok(EXIT_VIOLATION)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INVALID,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match &cli.command {
        Command::Certify(args) => cmd_certify(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Convert(args) => cmd_convert(args),
        Command::Survey(args) => cmd_survey(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
