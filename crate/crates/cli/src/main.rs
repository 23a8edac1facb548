//! `ffhyper`: evaluate finite-field hypergeometric functions, verify the
//! identity registry, replay counterexamples and run the classical checks.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.

mod classical;
mod eval;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use ffhyper_core::field::{prime_power, DEFAULT_MAX_Q};
use ffhyper_core::{Char, Elem, Error, Fq};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::UnknownIdentity(_) | Error::CapExceeded { .. }) => 2,
            CliError::Io { .. } => 2,
            CliError::Core(_) => 3,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "ffhyper", version, about = "Finite-field Lauricella, Appell and Gauss hypergeometric functions")]
struct Cli {
    /// Largest field order accepted.
    #[arg(long, global = true, env = "FFHYPER_MAX_Q", default_value_t = DEFAULT_MAX_Q)]
    max_q: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a single function value exactly in Z[ζ_(q-1)].
    Eval(eval::EvalArgs),
    /// Check registered identities exhaustively or on seeded samples.
    Verify(verify::VerifyArgs),
    /// List the identity registry.
    List(ListArgs),
    /// Evaluate both sides of an identity at one assignment.
    Replay(ReplayArgs),
    /// Numerical checks of the classical (complex) formulas.
    Classical(classical::ClassicalArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct ListArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also list the printed forms that are known to fail.
    #[arg(long)]
    errata: bool,
}

#[derive(Args, Debug)]
struct ReplayArgs {
    #[arg(long)]
    id: String,
    #[arg(long, value_parser = parse_q)]
    q: u64,
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// Character exponents, in the identity's slot order.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    chars: Vec<u64>,
    /// Element indices, in the identity's slot order.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    points: Vec<u64>,
}

/// Accepts `q` as an integer or as `p^k`.
pub fn parse_q(s: &str) -> std::result::Result<u64, String> {
    let bad = || format!("`{s}` is not an integer or p^k");
    match s.split_once('^') {
        None => s.trim().parse().map_err(|_| bad()),
        Some((p, k)) => {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            let k: u32 = k.trim().parse().map_err(|_| bad())?;
            p.checked_pow(k).ok_or_else(|| format!("{s} overflows"))
        }
    }
}

pub fn field(q: u64, max_q: u64) -> CliResult<Fq> {
    let (p, k) = prime_power(q)?;
    Ok(Fq::with_cap(p as u64, k, max_q)?)
}

pub fn chr(fq: &Fq, m: u64) -> CliResult<Char> {
    Ok(fq.char_checked(m)?)
}

pub fn chars(fq: &Fq, ms: &[u64]) -> CliResult<Vec<Char>> {
    ms.iter().map(|&m| chr(fq, m)).collect()
}

pub fn elem(fq: &Fq, i: u64) -> CliResult<Elem> {
    Ok(fq.field().elem(i)?)
}

pub fn elems(fq: &Fq, is: &[u64]) -> CliResult<Vec<Elem>> {
    is.iter().map(|&i| elem(fq, i)).collect()
}

/// Writes to stdout, exiting quietly if the reader has gone away.
pub fn emit(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(s.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

/// `a+bi` with six decimals; values within rounding of zero print as 0.
pub fn complex(z: Complex64) -> String {
    let snap = |v: f64| if v.abs() < 5e-10 { 0.0 } else { v };
    format!("{:.6}{:+.6}i", snap(z.re), snap(z.im))
}

fn list(args: &ListArgs) -> CliResult<ExitCode> {
    use ffhyper_core::identities::{errata, list_identities};
    let mut all: Vec<_> = list_identities().iter().collect();
    if args.errata {
        all.extend(errata());
    }
    let mut text = String::new();
    match args.format {
        Format::Json => {
            let infos: Vec<_> = all.iter().map(|d| d.info()).collect();
            text = serde_json::to_string_pretty(&infos).expect("descriptor info serializes") + "\n";
        }
        Format::Text => {
            for d in all {
                let ns = match d.n_range {
                    Some((lo, hi)) if lo == hi => format!("n={lo}"),
                    Some((lo, hi)) => format!("n={lo}..{hi}"),
                    None => "-".to_string(),
                };
                text += &format!("{:<24} {:<8} {}\n", d.id, ns, d.summary);
                for c in d.constraints {
                    text += &format!("{:<33} where {c}\n", "");
                }
            }
        }
    }
    emit(&text);
    Ok(ExitCode::SUCCESS)
}

fn replay(args: &ReplayArgs, max_q: u64) -> CliResult<ExitCode> {
    let out = ffhyper_core::identities::replay(&args.id, args.q, args.n, &args.chars, &args.points, max_q)?;
    println!("lhs      {}", out.lhs);
    println!("         ~ {}", complex(out.lhs.to_complex()));
    println!("rhs      {}", out.rhs);
    println!("         ~ {}", complex(out.rhs.to_complex()));
    println!("equal    {}", out.equal);
    println!("admitted {}", out.admitted);
    Ok(if out.equal { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(a) => eval::run(a, cli.max_q),
        Command::Verify(a) => verify::run(a, cli.max_q),
        Command::List(a) => list(a),
        Command::Replay(a) => replay(a, cli.max_q),
        Command::Classical(a) => classical::run(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
