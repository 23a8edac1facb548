//! `ffhyper verify`: run the identity engine and emit a report.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, ValueEnum};

use ffhyper_core::identities::{
    errata, list_identities, lookup, verify_descriptor, IdentityDescriptor, Mode, ReportSet, VerifyOptions,
    DEFAULT_CAP,
};

use crate::{emit, parse_q, CliError, CliResult, Format};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// `all`, or comma-separated identity ids.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    id: Vec<String>,
    /// Field orders, as integers or p^k.
    #[arg(long, value_delimiter = ',', value_parser = parse_q, default_value = "3,4,5")]
    q: Vec<u64>,
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    mode: ModeArg,
    /// Admitted assignments per (q, n) in sampled mode.
    #[arg(long, default_value_t = 500)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Restrict to these n; with `--id all`, identities whose range misses
    /// every requested n are skipped.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    /// Largest exhaustive domain.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u128,
    /// Also evaluate assignments excluded by the domain constraints.
    #[arg(long)]
    probe: bool,
    /// Record wall time per report (makes output non-reproducible).
    #[arg(long)]
    timing: bool,
    /// With `--id all`, also run the printed forms known to fail.
    #[arg(long)]
    errata: bool,
    /// Failures kept per report.
    #[arg(long, default_value_t = 1000)]
    failure_limit: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn selected(args: &VerifyArgs) -> CliResult<Vec<IdentityDescriptor>> {
    if args.id.iter().any(|id| id == "all") {
        let mut all: Vec<IdentityDescriptor> = list_identities().to_vec();
        if args.errata {
            all.extend(errata().iter().copied());
        }
        let fits = |d: &IdentityDescriptor| {
            args.n.is_empty() || d.n_range.is_none() || args.n.iter().any(|&n| d.allows_n(n))
        };
        return Ok(all.into_iter().filter(fits).collect());
    }
    Ok(args.id.iter().map(|id| lookup(id)).collect::<Result<_, _>>()?)
}

pub fn run(args: &VerifyArgs, max_q: u64) -> CliResult<ExitCode> {
    let opts = VerifyOptions {
        qs: args.q.clone(),
        mode: match args.mode {
            ModeArg::Exhaustive => Mode::Exhaustive,
            ModeArg::Sampled => Mode::Sampled {
                seed: args.seed,
                count: args.count,
            },
        },
        ns: args.n.clone(),
        cap: args.cap,
        max_q,
        probe: args.probe,
        timing: args.timing,
        failure_limit: args.failure_limit,
    };
    let mut reports = Vec::new();
    for d in selected(args)? {
        reports.extend(verify_descriptor(&d, &opts)?);
    }
    let set = ReportSet::new(reports);
    let body = match args.format {
        Format::Json => set.to_json() + "\n",
        Format::Text => set.reports.iter().map(|r| r.text_line() + "\n").collect(),
    };
    let failed = set.reports.iter().filter(|r| !r.passed()).count();
    match &args.out {
        Some(path) => {
            std::fs::write(path, body).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            eprintln!(
                "{} reports, {} failed; written to {}",
                set.reports.len(),
                failed,
                path.display()
            );
        }
        None => emit(&body),
    }
    Ok(if set.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
