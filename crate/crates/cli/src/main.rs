//! `eiscong`: exact Siegel-Eisenstein pullback computations from the shell.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eiscong::{HalfIntegralMatrix, Rational};

#[derive(Parser, Debug)]
#[command(
    name = "eiscong",
    version,
    about = "Exact pullback, L-value and congruence computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format. CSV is only available for scalar tables.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// q-expansion precision (overrides EISCONG_PRECISION).
    #[arg(long, global = true)]
    precision: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normalized standard L-values for the eigenforms of weight k+nu.
    Lvalue(LvalueArgs),
    /// Pullback coefficient eps(n, N) as a binary form.
    Epsilon(EpsilonArgs),
    /// Congruence certificate for the eigenform of weight k+nu.
    Certify(CertifyArgs),
    /// Coefficients of the local Siegel series polynomial F_p(T, X).
    SiegelSeries(SiegelArgs),
    /// Fourier coefficient of the normalized Siegel-Eisenstein series.
    EisensteinCoeff(EisArgs),
    /// q-expansion of the Cohen series.
    CohenSeries(CohenArgs),
}

#[derive(Args, Debug)]
pub struct LvalueArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub nu: u32,
    /// Primes for ord_p columns.
    #[arg(long, value_delimiter = ',')]
    pub ords: Vec<u64>,
}

#[derive(Args, Debug)]
pub struct EpsilonArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub nu: u32,
    #[arg(long, default_value_t = 1)]
    pub n: i64,
    #[arg(long = "N", value_parser = parse_matrix, default_value = "1,0,1")]
    pub big_n: HalfIntegralMatrix,
    /// Evaluation point `x,y`; may be repeated.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    pub at: Vec<(Rational, Rational)>,
    /// Apply T^(m) in the first variable.
    #[arg(long)]
    pub hecke: Option<u64>,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub nu: u32,
    #[arg(long)]
    pub p: u64,
    #[arg(long = "A", value_parser = parse_matrix, default_value = "1,0,1")]
    pub a: HalfIntegralMatrix,
    #[arg(long, value_delimiter = ',')]
    pub m_list: Option<Vec<u64>>,
    /// Binary-form coefficient used in the determinant criterion.
    #[arg(long)]
    pub slot: Option<usize>,
    /// Treat a failing size condition as a warning.
    #[arg(long)]
    pub relaxed: bool,
    /// Index of the target eigenform.
    #[arg(long, default_value_t = 0)]
    pub form: usize,
    /// Externally quoted normalizing constant, recorded for display.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub reference_gamma: Option<Rational>,
}

#[derive(Args, Debug)]
pub struct SiegelArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long = "T", value_parser = parse_matrix)]
    pub t: HalfIntegralMatrix,
    /// Also run the character-sum oracle through X^J and compare.
    #[arg(long, value_name = "J")]
    pub oracle: Option<u32>,
    /// Cap on points visited by the oracle.
    #[arg(long, default_value_t = 1 << 24)]
    pub budget: u128,
}

#[derive(Args, Debug)]
pub struct EisArgs {
    #[arg(long)]
    pub degree: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long = "T", value_parser = parse_matrix)]
    pub t: HalfIntegralMatrix,
}

#[derive(Args, Debug)]
pub struct CohenArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub r: u32,
    /// Highest power of q to compute (defaults to the global precision).
    #[arg(long)]
    pub terms: Option<usize>,
}

fn parse_matrix(s: &str) -> Result<HalfIntegralMatrix, String> {
    s.parse().map_err(|e: eiscong::Error| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("expected a rational a or a/b, found {s:?}"))
}

fn parse_point(s: &str) -> Result<(Rational, Rational), String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected x,y, found {s:?}"))?;
    Ok((parse_rational(x)?, parse_rational(y)?))
}

/// Exit codes: 0 success, 1 certificate not established, 2 usage, 3 computation
/// error, 4 oracle budget exceeded.
fn main() -> ExitCode {
    let cli = Cli::parse();
    let precision = cli.precision;
    let result = match &cli.command {
        Command::Lvalue(a) => commands::lvalue(a, cli.format, precision),
        Command::Epsilon(a) => commands::epsilon(a, cli.format),
        Command::Certify(a) => commands::certify(a, cli.format, precision),
        Command::SiegelSeries(a) => commands::siegel_series(a, cli.format),
        Command::EisensteinCoeff(a) => commands::eisenstein_coeff(a, cli.format),
        Command::CohenSeries(a) => commands::cohen_series(a, cli.format, precision),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
