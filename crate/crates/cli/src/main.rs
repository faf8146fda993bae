//! `langlands`: evaluate Eisenstein series, run the functional-equation
//! checks, multiply Euler products from place data and tabulate maximal
//! parabolics.

mod commands;
mod failure;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use langlands_core::cplx::parse_complex;
use langlands_core::eisenstein::{CoefficientSource, TruncationPolicy};
use langlands_core::roots::CartanType;
use langlands_core::ComplexValue;
use serde::Serialize;

use commands::PlaceSource;
use failure::CliError;
use report::{Check, Method, Render};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "langlands",
    version,
    about = "Eisenstein series, Euler products and root-system tables"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Print the effective configuration, defaults included, to stderr.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

fn complex_arg(text: &str) -> Result<ComplexValue, String> {
    parse_complex(text).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Serialize, Args)]
struct Truncation {
    /// Lattice box radius max(|m|, |n|).
    #[arg(long, default_value_t = TruncationPolicy::default().lattice_radius)]
    radius: u32,
    /// Minimum number of nonzero Fourier modes.
    #[arg(long, default_value_t = TruncationPolicy::default().fourier_terms)]
    terms: u32,
    /// Trapezoid nodes for coefficient extraction.
    #[arg(long, default_value_t = TruncationPolicy::default().quadrature_nodes)]
    nodes: u32,
}

impl Truncation {
    fn policy(&self) -> TruncationPolicy {
        TruncationPolicy::default()
            .with_lattice_radius(self.radius)
            .with_fourier_terms(self.terms)
            .with_quadrature_nodes(self.nodes)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate E(z, s).
    Eval {
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        z: ComplexValue,
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        s: ComplexValue,
        #[arg(long, value_enum, default_value_t = Method::Fourier)]
        method: Method,
        #[command(flatten)]
        truncation: Truncation,
    },
    /// List Fourier coefficients a_n(y, s) for n = 0..=terms at y = Im z.
    Fourier {
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        z: ComplexValue,
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        s: ComplexValue,
        /// Also recover each coefficient by quadrature over x ∈ [0, 1).
        #[arg(long, value_enum)]
        extract: Option<Source>,
        #[command(flatten)]
        truncation: Truncation,
    },
    /// Sweep a verification check over a grid of s.
    FeCheck {
        #[arg(long, value_enum, default_value_t = Check::Fe)]
        check: Check,
        /// Point z for the functional-equation check.
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true, default_value = "0.3+1.4i")]
        z: ComplexValue,
        /// Explicit points; repeat the flag. Replaces the default grid.
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        s: Vec<ComplexValue>,
        /// Number of random points for the default ξ sweep.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        truncation: Truncation,
    },
    /// ξ(s) and its reflection ξ(1 − s).
    Xi {
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        s: ComplexValue,
    },
    /// Truncated partial L-function from place data.
    Euler {
        /// Place file (`q re im re im ...` per line).
        #[arg(long, conflicts_with = "trivial", required_unless_present = "trivial")]
        input: Option<String>,
        /// Use eigenvalue 1 at every prime below this bound instead of a file.
        #[arg(long)]
        trivial: Option<u64>,
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        s: ComplexValue,
        #[arg(long, default_value_t = 100_000)]
        max_q: u64,
        /// Label for the excluded set S.
        #[arg(long, default_value = "S")]
        label: String,
    },
    /// Maximal parabolics of a root system and their nilradical grading.
    Decompose {
        /// Cartan type letter A..G.
        #[arg(required_unless_present = "table")]
        cartan_type: Option<String>,
        #[arg(required_unless_present = "table")]
        rank: Option<usize>,
        /// Tabulate a fixed list of types instead.
        #[arg(long, conflicts_with_all = ["cartan_type", "rank"])]
        table: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Source {
    Lattice,
    Fourier,
    Auto,
}

impl From<Source> for CoefficientSource {
    fn from(s: Source) -> Self {
        match s {
            Source::Lattice => CoefficientSource::Lattice,
            Source::Fourier => CoefficientSource::Fourier,
            Source::Auto => CoefficientSource::Auto,
        }
    }
}

/// Effective settings, echoed under `--verbose`.
#[derive(Debug, Serialize)]
struct RunConfig<'a> {
    command: &'a str,
    format: Format,
    truncation: Option<TruncationPolicy>,
    accuracy: langlands_core::special::AccuracyPolicy,
    input: Option<&'a str>,
}

fn emit<R: Render>(report: &R, format: Format) -> Result<(), CliError> {
    let text = match format {
        Format::Json => report::to_json(report),
        Format::Csv => report::to_csv(report),
        Format::Text => report::to_text(report),
    };
    std::io::stdout()
        .write_all(text.as_bytes())
        .map_err(|e| CliError::Usage(format!("cannot write output: {e}")))
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let (name, truncation, input) = match &cli.command {
        Command::Eval { truncation, .. } => ("eval", Some(truncation.policy()), None),
        Command::Fourier { truncation, .. } => ("fourier", Some(truncation.policy()), None),
        Command::FeCheck { truncation, .. } => ("fe-check", Some(truncation.policy()), None),
        Command::Xi { .. } => ("xi", None, None),
        Command::Euler { input, .. } => ("euler", None, input.as_deref()),
        Command::Decompose { .. } => ("decompose", None, None),
    };
    if cli.verbose {
        let config = RunConfig {
            command: name,
            format: cli.format,
            truncation,
            accuracy: Default::default(),
            input,
        };
        eprintln!(
            "config: {}",
            serde_json::to_string(&config).expect("config serializes")
        );
    }

    match &cli.command {
        Command::Eval {
            z,
            s,
            method,
            truncation,
        } => emit(
            &commands::eval(*z, *s, *method, &truncation.policy())?,
            cli.format,
        ),
        Command::Fourier {
            z,
            s,
            extract,
            truncation,
        } => {
            let policy = truncation.policy();
            let r =
                commands::fourier(z.im, *s, truncation.terms, extract.map(Into::into), &policy)?;
            emit(&r, cli.format)
        }
        Command::FeCheck {
            check,
            z,
            s,
            samples,
            seed,
            truncation,
        } => {
            let points = (!s.is_empty()).then(|| s.clone());
            let r = commands::fe_check(*check, *z, points, *samples, *seed, &truncation.policy())?;
            for p in r.points.iter().filter(|p| p.message.is_some()) {
                eprintln!(
                    "note: s = {}: {}",
                    p.s,
                    p.message.as_deref().unwrap_or_default()
                );
            }
            emit(&r, cli.format)
        }
        Command::Xi { s } => emit(&commands::xi(*s)?, cli.format),
        Command::Euler {
            input,
            trivial,
            s,
            max_q,
            label,
        } => {
            let source = match (input, trivial) {
                (Some(path), _) => PlaceSource::File {
                    path: path.clone(),
                    label: label.clone(),
                },
                (None, Some(bound)) => PlaceSource::Trivial { bound: *bound },
                (None, None) => {
                    return Err(CliError::Usage(
                        "one of --input or --trivial is required".into(),
                    ))
                }
            };
            let r = commands::euler(&source, *s, *max_q)?;
            if let Some(w) = &r.warning {
                eprintln!("warning: {w}");
            }
            emit(&r, cli.format)
        }
        Command::Decompose {
            cartan_type,
            rank,
            table,
        } => {
            let types = if *table {
                commands::DEFAULT_TABLE.to_vec()
            } else {
                let t: CartanType = cartan_type.as_deref().unwrap_or_default().parse()?;
                vec![(t, rank.unwrap_or_default())]
            };
            emit(&commands::decompose(&types)?, cli.format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let record = e.record();
            match cli.format {
                Format::Json => eprintln!(
                    "{}",
                    serde_json::to_string(&record).expect("record serializes")
                ),
                _ => eprintln!("error ({}): {}", record.kind, record.message),
            }
            ExitCode::from(record.exit_code as u8)
        }
    }
}
