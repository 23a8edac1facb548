//! `ffhyper classical`: numerical checks of the complex-variable formulas.
//!
//! Parameters are real. Omitted parameters fall back to a fixed, convergent
//! sample point for each check; `--n` alone extends or trims that point.

use std::process::ExitCode;

use clap::{Args, ValueEnum};
use num_complex::Complex64;

use ffhyper_core::classical::{
    check_integral_formula, check_ksum_formula, check_mr_reduction, ClassicalFdParams, QuadratureConfig, DEFAULT_K,
    DEFAULT_M, INTEGRAL_TOL, SERIES_TOL,
};

use crate::{complex, CliResult};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    /// Beta-integral formula (quadrature against the series).
    Integral,
    /// Expansion in powers of x_n.
    Ksum,
    /// The c = b_1 + .. + b_n reduction.
    Mr,
}

#[derive(Args, Debug)]
pub struct ClassicalArgs {
    #[arg(value_enum)]
    check: Check,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    b: Option<Vec<f64>>,
    /// Ignored by `mr`, which uses c = Σb.
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    x: Option<Vec<f64>>,
    /// Overrides the last coordinate x_n.
    #[arg(long, allow_negative_numbers = true)]
    xn: Option<f64>,
    /// Number of variables when b and x are not given.
    #[arg(long)]
    n: Option<usize>,
    /// Per-index series truncation.
    #[arg(long, default_value_t = DEFAULT_M)]
    m: usize,
    /// Truncation of the outer sum in `ksum`.
    #[arg(long, default_value_t = DEFAULT_K)]
    k: usize,
    /// Pass threshold on |lhs - rhs|; defaults to 1e-8 for `integral`, 1e-9 otherwise.
    #[arg(long)]
    tol: Option<f64>,
}

struct Point {
    a: f64,
    b: Vec<f64>,
    c: f64,
    x: Vec<f64>,
}

fn default_point(check: Check) -> Point {
    match check {
        Check::Integral => Point {
            a: 0.5,
            b: vec![1.5, 2.0],
            c: 2.5,
            x: vec![0.3, 0.1],
        },
        Check::Ksum => Point {
            a: 0.4,
            b: vec![0.8, 1.2],
            c: 1.9,
            x: vec![0.3, 0.2],
        },
        Check::Mr => Point {
            a: 0.6,
            b: vec![0.7, 0.9],
            c: 1.6,
            x: vec![0.2, 0.4],
        },
    }
}

/// Truncates or extends `v` to length n; extra entries follow `fill(j)`.
fn resize(mut v: Vec<f64>, n: usize, fill: impl Fn(usize) -> f64) -> Vec<f64> {
    v.truncate(n);
    for j in v.len()..n {
        v.push(fill(j));
    }
    v
}

fn params(args: &ClassicalArgs) -> ClassicalFdParams {
    let d = default_point(args.check);
    let n = args
        .n
        .or(args.b.as_ref().map(Vec::len))
        .or(args.x.as_ref().map(Vec::len))
        .unwrap_or(d.b.len());
    let b = args.b.clone().unwrap_or_else(|| resize(d.b, n, |j| 1.0 + 0.25 * j as f64));
    let mut x = args.x.clone().unwrap_or_else(|| resize(d.x, n, |j| (j + 1) as f64 / 20.0));
    if let (Some(xn), Some(last)) = (args.xn, x.last_mut()) {
        *last = xn;
    }
    let mut p = ClassicalFdParams::real(args.a.unwrap_or(d.a), &b, args.c.unwrap_or(d.c), &x);
    p.m = args.m;
    p.k = args.k;
    p
}

fn list(v: &[Complex64]) -> String {
    v.iter().map(|z| z.re.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn run(args: &ClassicalArgs) -> CliResult<ExitCode> {
    let p = params(args);
    let (r, default_tol) = match args.check {
        Check::Integral => (check_integral_formula(&p, &QuadratureConfig::default())?, INTEGRAL_TOL),
        Check::Ksum => (check_ksum_formula(&p)?, SERIES_TOL),
        Check::Mr => (check_mr_reduction(&p)?, SERIES_TOL),
    };
    let tol = args.tol.unwrap_or(default_tol);
    let c = if args.check == Check::Mr {
        p.b.iter().sum::<Complex64>().re
    } else {
        p.c.re
    };
    println!("params    a={} b=[{}] c={} x=[{}]", p.a.re, list(&p.b), c, list(&p.x));
    println!("lhs       {}", complex(r.lhs));
    println!("rhs       {}", complex(r.rhs));
    println!("residual  {:.3e}", r.residual);
    println!("tolerance {tol:.0e}");
    let pass = r.residual < tol;
    println!("{}", if pass { "PASS" } else { "FAIL" });
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
