//! Command-line front end.
//!
//! Exit codes: 0 success, 1 guess FAIL or failed check/extension, 2 usage
//! or input-format error, 3 degenerate or insufficient input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::equation::QuadEquation;
use crate::error::Error;
use crate::guess::{guess, GuessConfig, GuessResult};
use crate::kernel::{parse_rational, Rational};
use crate::oracle::{oracle_sequence, OracleName};
use crate::prefix::SequencePrefix;
use crate::render::{render, RenderMode};
use crate::sequence::{check, extend};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "quadguess", version, about = "Guess quadratic differential equations from sequence prefixes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Guess an equation for a sequence prefix
    Guess {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        config: ConfigArgs,
        /// Replace a_n by a_n / lambda^n before guessing
        #[arg(long, value_parser = rational_arg)]
        rescale: Option<Rational>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Extend a prefix using an equation
    Extend {
        #[arg(long)]
        equation: PathBuf,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        count: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check an equation against a prefix
    Check {
        #[arg(long)]
        equation: PathBuf,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a reference sequence
    Oracle {
        #[arg(long, value_parser = oracle_arg)]
        name: OracleName,
        #[arg(long)]
        count: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct ConfigArgs {
    /// Degree bound m of the polynomial coefficients
    #[arg(long = "max-poly-deg", default_value_t = 2)]
    m: usize,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    d_start: u32,
    #[arg(long)]
    d_max: Option<usize>,
    #[arg(long = "min-verify", default_value_t = 2)]
    min_verify: usize,
}

impl From<&ConfigArgs> for GuessConfig {
    fn from(a: &ConfigArgs) -> Self {
        GuessConfig {
            m: a.m,
            d_start: a.d_start as usize,
            d_max: a.d_max,
            min_verify_rows: a.min_verify,
        }
    }
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn oracle_arg(s: &str) -> Result<OracleName, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = OracleName::ALL.iter().map(|o| o.as_str()).collect();
        format!("unknown oracle {s:?}; expected one of {}", names.join(", "))
    })
}

/// Parses `argv` (including the program name) and runs one subcommand.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::DegenerateInput
        | Error::InsufficientTerms { .. }
        | Error::InsufficientInitialTerms { .. }
        | Error::InconsistentInitialTerms { .. } => EXIT_INPUT,
        Error::LeadingCoefficientZero { .. } | Error::NonlinearStep { .. } => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Input {
        line: None,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn read_prefix(path: &Path) -> Result<SequencePrefix, Error> {
    SequencePrefix::parse(&read_file(path)?).map_err(|e| with_path(path, e))
}

fn read_equation(path: &Path) -> Result<QuadEquation, Error> {
    QuadEquation::from_json(&read_file(path)?).map_err(|e| with_path(path, e))
}

fn with_path(path: &Path, e: Error) -> Error {
    match e {
        Error::Input { line, message } => Error::Input {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, Error> {
    let io = |e: std::io::Error| Error::Input {
        line: None,
        message: e.to_string(),
    };
    match cmd {
        Command::Guess {
            input,
            config,
            rescale,
            format,
        } => {
            let mut prefix = read_prefix(&input)?;
            if let Some(lambda) = &rescale {
                prefix = prefix.rescaled(lambda)?;
            }
            let result = guess(&prefix, &GuessConfig::from(&config))?;
            write_guess(&result, format, out).map_err(io)?;
            Ok(if result.is_success() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Extend {
            equation,
            input,
            count,
            format,
        } => {
            let eq = read_equation(&equation)?;
            let prefix = read_prefix(&input)?;
            let extended = extend(&eq, &prefix, count)?;
            match format {
                Format::Json => writeln!(out, "{}", extended.to_json()),
                _ => write!(out, "{}", extended.to_lines()),
            }
            .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Check {
            equation,
            input,
            format,
        } => {
            let eq = read_equation(&equation)?;
            let prefix = read_prefix(&input)?;
            let report = check(&eq, &prefix);
            match format {
                Format::Json => writeln!(out, "{}", report.to_json()),
                _ => match &report.first_failure {
                    None => writeln!(out, "pass ({} rows)", report.rows_checked),
                    Some((n, r)) => writeln!(out, "fail at n = {n}: residual {r}"),
                },
            }
            .map_err(io)?;
            Ok(if report.passed { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Oracle {
            name,
            count,
            format,
        } => {
            let seq = oracle_sequence(name, count)?;
            match format {
                Format::Json => writeln!(out, "{}", seq.to_json()),
                _ => write!(out, "{}", seq.to_lines()),
            }
            .map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

fn write_guess(result: &GuessResult, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    if format == Format::Json {
        return writeln!(out, "{}", result.to_json());
    }
    if !result.is_success() {
        return writeln!(out, "FAIL");
    }
    writeln!(
        out,
        "# d = {}, m = {}, {} construction rows, {} verification rows",
        result.d.unwrap_or(0),
        result.m,
        result.rows.construction,
        result.rows.verification
    )?;
    for eq in &result.basis {
        let ode = render(eq, RenderMode::Ode);
        let rec = render(eq, RenderMode::Recurrence);
        let (ode, rec) = match format {
            Format::Latex => (ode.to_latex(), rec.to_latex()),
            _ => (ode.to_text(), rec.to_text()),
        };
        writeln!(out, "ode: {ode}")?;
        writeln!(out, "recurrence: {rec}")?;
        writeln!(out, "json: {}", eq.to_json())?;
    }
    Ok(())
}
