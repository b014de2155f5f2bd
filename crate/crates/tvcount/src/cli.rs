use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use tvcount_core::{beta_pushforward, degree_of_power_sum_locus, transvectant, BinaryForm, PowerSumProblem};

use crate::formats::{format_coefficients, parse_coefficients, FormJson, FormatError, PolynomialJson};
use crate::{selftest, table};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Usage = 1,
    InvalidProblem = 2,
    Failure = 3,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Invalid(#[from] tvcount_core::Error),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    fn status(&self) -> ExitStatus {
        match self {
            Self::Usage(_) => ExitStatus::Usage,
            Self::Invalid(_) => ExitStatus::InvalidProblem,
            Self::Failure(_) => ExitStatus::Failure,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Core(e) => Self::Invalid(e),
            other => Self::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Failure(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "tvcount", version, about = "Degrees of loci of binary forms f^a + g^b")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree of the locus of degree-d forms f^a + g^b with deg f = m, deg g = n
    Count(CountArgs),
    /// Pushforward class of the variety of first transvectants
    Class(ClassArgs),
    /// First transvectant {f, g} = f_x g_y - f_y g_x
    Transvect(TransvectArgs),
    /// Counts for every admissible (d, a, b) with d <= max-d. Only a >= b is
    /// listed since the count is symmetric in (a, b)
    Table(TableArgs),
    /// Checks the four known counts 40, 3762, 29822 and 626327
    Selftest,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, required_unless_present = "d", requires = "n")]
    m: Option<u32>,
    #[arg(long, required_unless_present = "d", requires = "m")]
    n: Option<u32>,
    /// Use m = d/a, n = d/b instead of --m/--n
    #[arg(long, conflicts_with_all = ["m", "n"])]
    d: Option<u64>,
    #[arg(long)]
    a: u32,
    #[arg(long)]
    b: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassFormat {
    Text,
    Json,
    Latex,
}

#[derive(Args)]
struct ClassArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: ClassFormat,
}

#[derive(Args)]
struct TransvectArgs {
    /// Comma-separated rational coefficients, x-descending
    #[arg(long, allow_hyphen_values = true)]
    f: String,
    #[arg(long, allow_hyphen_values = true)]
    g: String,
    /// Read coefficients as f_i in f = sum C(e,i) f_i x^(e-i) y^i
    #[arg(long)]
    binomial: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long = "max-d")]
    max_d: u64,
    #[arg(long, conflicts_with = "json")]
    csv: bool,
    #[arg(long)]
    json: bool,
}

/// Stable JSON wrapper around every command's output.
#[derive(Serialize)]
pub struct OutputEnvelope<T: Serialize> {
    pub command: &'static str,
    pub inputs: Value,
    pub result: T,
    pub warnings: Vec<String>,
}

fn print_json<T: Serialize>(out: &mut dyn Write, envelope: &OutputEnvelope<T>) -> Result<(), CliError> {
    let s = serde_json::to_string(envelope).map_err(|e| CliError::Failure(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return ExitStatus::Usage;
            }
            let _ = write!(out, "{}", e.render());
            return ExitStatus::Success;
        }
    };
    let result = match cli.command {
        Command::Count(args) => count(args, out, err),
        Command::Class(args) => class(args, out),
        Command::Transvect(args) => transvect(args, out),
        Command::Table(args) => table_cmd(args, out),
        Command::Selftest => self_test(out),
    };
    match result {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.status()
        }
    }
}

fn warnings_for(p: &PowerSumProblem) -> Vec<String> {
    let mut w = Vec::new();
    if p.is_degenerate() {
        w.push("a = 1 or b = 1: every form of degree d is such a sum".to_owned());
    }
    if p.a() == p.b() {
        w.push("a = b: ordered pairs (f, g) are counted, so each decomposition appears twice".to_owned());
    }
    w
}

fn count(args: CountArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let (problem, inputs) = match (args.d, args.m, args.n) {
        (Some(d), _, _) => (
            tvcount_core::validate_from_degree(d, args.a, args.b)?,
            json!({"d": d, "a": args.a, "b": args.b}),
        ),
        (None, Some(m), Some(n)) => {
            (tvcount_core::validate(m, n, args.a, args.b)?, json!({"m": m, "n": n, "a": args.a, "b": args.b}))
        }
        _ => return Err(CliError::Usage("either --m and --n or --d is required".into())),
    };
    let degree = degree_of_power_sum_locus(&problem)?;
    let warnings = warnings_for(&problem);
    if args.json {
        let result = json!({
            "m": problem.m(),
            "n": problem.n(),
            "a": problem.a(),
            "b": problem.b(),
            "d": problem.d(),
            "gcd": problem.gcd(),
            "degree": degree.to_string(),
        });
        print_json(out, &OutputEnvelope { command: "count", inputs, result, warnings })?;
    } else {
        for w in &warnings {
            writeln!(err, "warning: {w}")?;
        }
        writeln!(out, "{degree}")?;
    }
    Ok(ExitStatus::Success)
}

fn class(args: ClassArgs, out: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let beta = beta_pushforward(args.m, args.n)?;
    match args.format {
        ClassFormat::Text => writeln!(out, "{beta}")?,
        ClassFormat::Latex => writeln!(out, "{}", beta.to_latex())?,
        ClassFormat::Json => print_json(
            out,
            &OutputEnvelope {
                command: "class",
                inputs: json!({"m": args.m, "n": args.n}),
                result: PolynomialJson::from(&beta),
                warnings: Vec::new(),
            },
        )?,
    }
    Ok(ExitStatus::Success)
}

fn transvect(args: TransvectArgs, out: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let build = |s: &str| -> Result<BinaryForm, CliError> {
        let coeffs = parse_coefficients(s)?;
        let form = if args.binomial { BinaryForm::from_binomial(coeffs) } else { BinaryForm::new(coeffs) };
        Ok(form?)
    };
    let f = build(&args.f)?;
    let g = build(&args.g)?;
    let t = transvectant(&f, &g)?;
    if args.json {
        let inputs = json!({
            "f": FormJson::from(&f),
            "g": FormJson::from(&g),
            "binomial": args.binomial,
        });
        print_json(
            out,
            &OutputEnvelope {
                command: "transvect",
                inputs,
                result: FormJson::from(&t),
                warnings: Vec::new(),
            },
        )?;
    } else {
        writeln!(out, "{}", format_coefficients(&t))?;
    }
    Ok(ExitStatus::Success)
}

fn table_cmd(args: TableArgs, out: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let threads = table::thread_count().map_err(CliError::Usage)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Failure(e.to_string()))?;
    let problems = table::admissible_problems(args.max_d);
    let rows = pool.install(|| table::evaluate(&problems))?;
    if args.json {
        print_json(
            out,
            &OutputEnvelope {
                command: "table",
                inputs: json!({"max_d": args.max_d}),
                result: json!({"rows": rows}),
                warnings: Vec::new(),
            },
        )?;
    } else if args.csv {
        write!(out, "{}", table::to_csv(&rows))?;
    } else {
        write!(out, "{}", table::to_text(&rows))?;
    }
    Ok(ExitStatus::Success)
}

fn self_test(out: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let results = selftest::run();
    write!(out, "{}", selftest::report(&results))?;
    if results.iter().all(selftest::CaseResult::passed) {
        Ok(ExitStatus::Success)
    } else {
        Ok(ExitStatus::Failure)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (ExitStatus, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let status = run(std::iter::once("tvcount").chain(args.iter().copied()), &mut out, &mut err);
        (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn count_text() {
        let (status, out, _) = run_args(&["count", "--m", "2", "--n", "3", "--a", "3", "--b", "2"]);
        assert_eq!(status, ExitStatus::Success);
        assert_eq!(out, "40\n");
    }

    #[test]
    fn count_needs_shape() {
        let (status, _, _) = run_args(&["count", "--a", "3", "--b", "2"]);
        assert_eq!(status, ExitStatus::Usage);
        let (status, _, _) = run_args(&["count", "--m", "2", "--d", "6", "--a", "3", "--b", "2"]);
        assert_eq!(status, ExitStatus::Usage);
    }

    #[test]
    fn degenerate_warning() {
        let (status, out, err) = run_args(&["count", "--m", "2", "--n", "2", "--a", "1", "--b", "1"]);
        assert_eq!(status, ExitStatus::Success);
        assert!(err.contains("warning: a = 1"));
        assert!(!out.is_empty());
    }

    #[test]
    fn help_is_success() {
        let (status, out, _) = run_args(&["--help"]);
        assert_eq!(status, ExitStatus::Success);
        assert!(out.contains("table"));
    }
}
