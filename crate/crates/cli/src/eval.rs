//! `ffhyper eval`: single exact evaluations.
//!
//! Characters are exponents m of χ_m(g^j) = ζ^(mj), with g the field's
//! generator. Elements are indices: base-p digits of the polynomial
//! representative, constant term least significant.

use std::process::ExitCode;

use clap::{Args, Subcommand, ValueEnum};

use ffhyper_core::{CycInt, FdInstance, GenFnInstance, GenFnVariant, Normalization};

use crate::{chars, chr, complex, elem, elems, field, parse_q, CliResult};

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[command(subcommand)]
    what: What,
}

#[derive(Args, Debug)]
struct Q {
    #[arg(long, value_parser = parse_q)]
    q: u64,
}

/// F_D parameters shared by the F_D-shaped evaluations.
#[derive(Args, Debug)]
struct FdArgs {
    #[arg(long = "A")]
    a: u64,
    /// B_1..B_n, comma separated.
    #[arg(long = "B", value_delimiter = ',', num_args = 0..)]
    b: Vec<u64>,
    #[arg(long = "C")]
    c: u64,
    /// x_1..x_n, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    x: Vec<u64>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Norm {
    Paper,
    Greene,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Variant {
    /// θ in the A slot.
    T41,
    /// θ in the last B slot.
    T42,
    /// θ in the C slot.
    T43,
}

#[derive(Subcommand, Debug)]
enum What {
    /// Field construction details: modulus and generator.
    Field {
        #[command(flatten)]
        q: Q,
    },
    /// Jacobi sum J(χ, λ) = Σ_u χ(u) λ(1-u).
    Jacobi {
        #[command(flatten)]
        q: Q,
        #[arg(long)]
        chi: u64,
        #[arg(long)]
        lam: u64,
    },
    /// Character binomial {A choose B}.
    Binom {
        #[command(flatten)]
        q: Q,
        #[arg(long = "A")]
        a: u64,
        #[arg(long = "B")]
        b: u64,
    },
    /// Gaussian 2F1(A, B; C | x).
    #[command(name = "2f1")]
    Gauss {
        #[command(flatten)]
        q: Q,
        #[arg(long = "A")]
        a: u64,
        #[arg(long = "B")]
        b: u64,
        #[arg(long = "C")]
        c: u64,
        #[arg(long)]
        x: u64,
        #[arg(long, value_enum, default_value_t = Norm::Paper)]
        normalization: Norm,
    },
    /// Appell F1(A; B, B'; C | x, y).
    Appell {
        #[command(flatten)]
        q: Q,
        #[arg(long = "A")]
        a: u64,
        #[arg(long = "B")]
        b: u64,
        #[arg(long = "B2")]
        b2: u64,
        #[arg(long = "C")]
        c: u64,
        #[arg(long)]
        x: u64,
        #[arg(long)]
        y: u64,
    },
    /// Lauricella F_D^(n) by its defining sum over u. n = 0 is the binomial {A choose C}.
    Fd {
        #[command(flatten)]
        q: Q,
        #[command(flatten)]
        fd: FdArgs,
    },
    /// Lauricella F_D^(n) through the multiple character sum (n >= 1).
    FdCharsum {
        #[command(flatten)]
        q: Q,
        #[command(flatten)]
        fd: FdArgs,
    },
    /// Both sides of a generating function for F_D at parameter t.
    Genfn {
        #[command(flatten)]
        q: Q,
        #[command(flatten)]
        fd: FdArgs,
        #[arg(long)]
        t: u64,
        #[arg(long, value_enum)]
        variant: Variant,
    },
}

fn show(label: &str, v: &CycInt) {
    println!("{label}{v}");
    println!("{:width$}~ {}", "", complex(v.to_complex()), width = label.len());
}

fn fd_instance(fq: &ffhyper_core::Fq, fd: &FdArgs) -> CliResult<FdInstance> {
    Ok(FdInstance::new(
        fq,
        chr(fq, fd.a)?,
        chars(fq, &fd.b)?,
        chr(fq, fd.c)?,
        elems(fq, &fd.x)?,
    )?)
}

pub fn run(args: &EvalArgs, max_q: u64) -> CliResult<ExitCode> {
    match &args.what {
        What::Field { q } => {
            let fq = field(q.q, max_q)?;
            let f = fq.field();
            println!("q         {}", f.q());
            println!("p^k       {}^{}", f.p(), f.k());
            println!("modulus   {}", f.modulus_string());
            println!("generator {}", f.generator().index());
        }
        What::Jacobi { q, chi, lam } => {
            let fq = field(q.q, max_q)?;
            show("", &fq.jacobi(chr(&fq, *chi)?, chr(&fq, *lam)?)?);
        }
        What::Binom { q, a, b } => {
            let fq = field(q.q, max_q)?;
            show("", &fq.binom(chr(&fq, *a)?, chr(&fq, *b)?)?);
        }
        What::Gauss {
            q,
            a,
            b,
            c,
            x,
            normalization,
        } => {
            let fq = field(q.q, max_q)?;
            let norm = match normalization {
                Norm::Paper => Normalization::Paper,
                Norm::Greene => Normalization::Greene,
            };
            let v = fq.gauss_2f1(chr(&fq, *a)?, chr(&fq, *b)?, chr(&fq, *c)?, elem(&fq, *x)?, norm)?;
            println!("{v}");
            println!("~ {}", complex(v.numerator.to_complex() / v.denominator as f64));
        }
        What::Appell { q, a, b, b2, c, x, y } => {
            let fq = field(q.q, max_q)?;
            let v = fq.appell_f1(
                chr(&fq, *a)?,
                chr(&fq, *b)?,
                chr(&fq, *b2)?,
                chr(&fq, *c)?,
                elem(&fq, *x)?,
                elem(&fq, *y)?,
            )?;
            show("", &v);
        }
        What::Fd { q, fd } => {
            let fq = field(q.q, max_q)?;
            let v = if fd.b.is_empty() && fd.x.is_empty() {
                fq.binom(chr(&fq, fd.a)?, chr(&fq, fd.c)?)?
            } else {
                fq.lauricella_def(&fd_instance(&fq, fd)?)?
            };
            show("", &v);
        }
        What::FdCharsum { q, fd } => {
            let fq = field(q.q, max_q)?;
            show("", &fq.lauricella_charsum(&fd_instance(&fq, fd)?)?);
        }
        What::Genfn { q, fd, t, variant } => {
            let fq = field(q.q, max_q)?;
            let g = GenFnInstance {
                base: fd_instance(&fq, fd)?,
                t: elem(&fq, *t)?,
                variant: match variant {
                    Variant::T41 => GenFnVariant::T41,
                    Variant::T42 => GenFnVariant::T42,
                    Variant::T43 => GenFnVariant::T43,
                },
            };
            let lhs = fq.genfn_lhs(&g)?;
            let rhs = fq.genfn_rhs(&g)?;
            show("sum    ", &lhs);
            show("closed ", &rhs);
            println!("equal  {}", lhs == rhs);
        }
    }
    Ok(ExitCode::SUCCESS)
}
