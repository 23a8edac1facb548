//! Left and right sides of every registered identity.
//!
//! Notation in the summaries: Ā is the inverse character, ΠB = B_1⋯B_n,
//! F_D^(0)(A; ; C) = {A choose C}, and ε(·) of a product is 1 exactly when
//! every factor is nonzero.

use crate::chars::{Char, Fq};
use crate::cyclo::CycInt;
use crate::error::Result;
use crate::field::Elem;
use crate::hyper::{FdInstance, GenFnInstance, GenFnVariant};

use super::{Assignment, IdentityDescriptor, Shape};

// ---------------------------------------------------------------- shapes

fn indexed(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|j| format!("{prefix}{j}")).collect()
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn with_a_c(bs: Vec<String>, c: bool) -> Vec<String> {
    let mut v = vec!["A".to_string()];
    v.extend(bs);
    if c {
        v.push("C".to_string());
    }
    v
}

fn shape_std(n: usize) -> Shape {
    Shape {
        chars: with_a_c(indexed("B", n), true),
        points: indexed("x", n),
    }
}

fn shape_no_c(n: usize) -> Shape {
    Shape {
        chars: with_a_c(indexed("B", n), false),
        points: indexed("x", n),
    }
}

fn shape_eps_last(n: usize) -> Shape {
    Shape {
        chars: with_a_c(indexed("B", n - 1), true),
        points: indexed("x", n),
    }
}

fn shape_equal_x(n: usize) -> Shape {
    Shape {
        chars: with_a_c(indexed("B", n), true),
        points: names(&["x"]),
    }
}

fn shape_no_c_equal_x(n: usize) -> Shape {
    Shape {
        chars: with_a_c(indexed("B", n), false),
        points: names(&["x"]),
    }
}

fn shape_last_one(n: usize) -> Shape {
    Shape {
        chars: with_a_c(indexed("B", n), true),
        points: indexed("x", n - 1),
    }
}

fn shape_all_ones(n: usize) -> Shape {
    Shape {
        chars: with_a_c(indexed("B", n), true),
        points: vec![],
    }
}

fn shape_genfn(n: usize) -> Shape {
    let mut points = indexed("x", n);
    points.push("t".to_string());
    Shape {
        chars: with_a_c(indexed("B", n), true),
        points,
    }
}

fn shape_a(_: usize) -> Shape {
    Shape {
        chars: names(&["A"]),
        points: vec![],
    }
}

fn shape_ab(_: usize) -> Shape {
    Shape {
        chars: names(&["A", "B"]),
        points: vec![],
    }
}

fn shape_abc(_: usize) -> Shape {
    Shape {
        chars: names(&["A", "B", "C"]),
        points: vec![],
    }
}

fn shape_a_x(_: usize) -> Shape {
    Shape {
        chars: names(&["A"]),
        points: names(&["x"]),
    }
}

fn shape_ab_x(_: usize) -> Shape {
    Shape {
        chars: names(&["A", "B"]),
        points: names(&["x"]),
    }
}

fn shape_abc_x(_: usize) -> Shape {
    Shape {
        chars: names(&["A", "B", "C"]),
        points: names(&["x"]),
    }
}

fn shape_appell(_: usize) -> Shape {
    Shape {
        chars: names(&["A", "B", "B'", "C"]),
        points: names(&["x", "y"]),
    }
}

// ---------------------------------------------------------------- helpers

/// (A, B_1..B_n, C, x_1..x_n) for the standard layout.
fn std(s: &Assignment) -> (Char, &[Char], Char, &[Elem]) {
    let n = s.n;
    (s.chars[0], &s.chars[1..=n], s.chars[n + 1], &s.points[..n])
}

/// (A, B_1..B_n, x_1..x_n) for layouts without C.
fn no_c(s: &Assignment) -> (Char, &[Char], &[Elem]) {
    let n = s.n;
    (s.chars[0], &s.chars[1..=n], &s.points[..n])
}

fn prod(f: &Fq, bs: &[Char]) -> Char {
    bs.iter().fold(f.trivial(), |acc, &b| acc * b)
}

fn one_minus(f: &Fq, x: Elem) -> Elem {
    f.field().sub(Elem::ONE, x)
}

/// Π_j B̄_j(y_j).
fn bbar_product(f: &Fq, bs: &[Char], ys: impl IntoIterator<Item = Elem>) -> CycInt {
    bs.iter()
        .zip(ys)
        .fold(f.int(1), |acc, (&b, y)| acc * f.eval(b.inverse(), y))
}

/// Π_(j<n) ε(x_n - x_j).
fn eps_pivot(f: &Fq, x: &[Elem]) -> CycInt {
    let n = x.len();
    let fl = f.field();
    f.int(x[..n - 1].iter().all(|&xj| fl.sub(x[n - 1], xj) != Elem::ZERO) as i64)
}

fn all_ne_one(_: &Fq, s: &Assignment) -> bool {
    s.points[..s.n].iter().all(|&x| x != Elem::ONE)
}

fn last_ne_one(_: &Fq, s: &Assignment) -> bool {
    s.points[s.n - 1] != Elem::ONE
}

fn any(_: &Fq, _: &Assignment) -> bool {
    true
}

fn delta(f: &Fq, b: bool) -> CycInt {
    f.int(b as i64)
}

// ---------------------------------------------------------------- t2.1

fn fd_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, c, x) = std(s);
    Ok(f.fd(a, b, c, x))
}

fn charsum_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, c, x) = std(s);
    f.fd_charsum(a, b, c, x)
}

fn corrupted_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    Ok(charsum_rhs(f, s)? + f.int(1))
}

// ---------------------------------------------------------------- t3

fn ff_beta_admits(_: &Fq, s: &Assignment) -> bool {
    !s.chars[1].is_trivial() && !s.chars[2].is_trivial()
}

fn ff_beta_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, c, x) = std(s);
    let fl = f.field();
    if x[0].is_zero() || x[1].is_zero() {
        return Ok(f.zero());
    }
    let mut bs = vec![b[0] * b[1]];
    bs.extend_from_slice(&b[2..]);
    let mut xs = x[1..].to_vec();
    let mut acc = f.zero();
    for u in fl.elements() {
        let w = one_minus(f, u);
        if u.is_zero() || w.is_zero() {
            continue;
        }
        xs[0] = fl.add(fl.mul(u, x[0]), fl.mul(w, x[1]));
        acc += f.eval(b[0], u) * f.eval(b[1], w) * f.fd(a, &bs, c, &xs);
    }
    Ok(acc)
}

fn ff_beta_rhs_with(f: &Fq, s: &Assignment, printed: bool) -> Result<CycInt> {
    let (a, b, c, x) = std(s);
    let fl = f.field();
    let bb = (b[0] * b[1]).inverse();
    let f0 = |a0: Char, c0: Char| {
        if printed {
            f.int(1)
        } else {
            f.fd(a0, &b[2..], c0, &x[2..])
        }
    };
    let first = f.bin(bb, b[0].inverse()) * f.fd(a, b, c, x);
    let second = f.eps_all(&x[..2])
        * f.int(f.sign(b[0]))
        * f.eval(bb, fl.sub(x[0], x[1]))
        * f0(a * bb, c * bb);
    let third = f.eval(b[0], x[1])
        * f.eval(b[1], fl.neg(x[0]))
        * f.eval(bb, fl.sub(x[1], x[0]))
        * f0(a, c);
    Ok(first - second - third)
}

fn ff_beta_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    ff_beta_rhs_with(f, s, false)
}

fn ff_beta_rhs_printed(f: &Fq, s: &Assignment) -> Result<CycInt> {
    ff_beta_rhs_with(f, s, true)
}

fn ksum_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, c, x) = std(s);
    let n = b.len();
    let mut acc = f.zero();
    for chi in f.all_chars() {
        if let Some(e) = f.eval_exp(chi, x[n - 1]) {
            acc += f.bin(b[n - 1] * chi, chi).mul_zeta(e as i64)
                * f.fd(a * chi, &b[..n - 1], c * chi, &x[..n - 1]);
        }
    }
    acc.div_exact(f.order() as i64)
}

// ---------------------------------------------------------------- t4 reductions

fn eps_reduce_parts(s: &Assignment) -> (Char, &[Char], Char, &[Elem]) {
    let n = s.n;
    (s.chars[0], &s.chars[1..n], s.chars[n], &s.points[..n])
}

fn eps_reduce_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, bp, c, x) = eps_reduce_parts(s);
    let mut bs = bp.to_vec();
    bs.push(f.trivial());
    Ok(f.fd(a, &bs, c, x))
}

fn eps_reduce_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, bp, c, x) = eps_reduce_parts(s);
    let fl = f.field();
    let n = x.len();
    let xn = x[n - 1];
    let head = f.eps(xn) * f.fd(a, bp, c, &x[..n - 1]);
    let tail = f.eps_all(&x[..n - 1])
        * f.eval(prod(f, bp) / c, xn)
        * f.eval(c / a, one_minus(f, xn))
        * bbar_product(f, bp, x[..n - 1].iter().map(|&xj| fl.sub(xn, xj)));
    Ok(head - tail)
}

fn c_eq_a_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, x) = no_c(s);
    Ok(f.fd(a, b, a, x))
}

fn c_eq_a_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, x) = no_c(s);
    let fl = f.field();
    let n = x.len();
    let (bn, xn) = (b[n - 1], x[n - 1]);
    let mut v = -(f.eps_all(x) * bbar_product(f, b, x.iter().map(|&xj| one_minus(f, xj))));
    // Ā(x_n) vanishes at x_n = 0, where the scaled arguments are undefined.
    if !xn.is_zero() {
        let xs: Vec<Elem> = x[..n - 1]
            .iter()
            .map(|&xj| fl.div(xj, xn))
            .collect::<Result<_>>()?;
        v += f.int(f.sign(bn)) * f.eval(a.inverse(), xn) * f.fd(a, &b[..n - 1], a / bn, &xs);
    }
    Ok(v)
}

fn one_minus_x_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, c, x) = std(s);
    let e = x.iter().all(|&xj| !one_minus(f, xj).is_zero());
    Ok(f.int(e as i64) * f.fd(a, b, c, x))
}

fn one_minus_x_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, c, x) = std(s);
    let pb = prod(f, b);
    let xs: Vec<Elem> = x.iter().map(|&xj| one_minus(f, xj)).collect();
    Ok(f.eps_all(x) * f.int(f.sign(pb)) * f.fd(a, b, a * pb / c, &xs))
}

fn pfaff_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, c, x) = std(s);
    let fl = f.field();
    let xs: Vec<Elem> = x
        .iter()
        .map(|&xj| fl.div(xj, fl.sub(xj, Elem::ONE)))
        .collect::<Result<_>>()?;
    Ok(f.int(f.sign(c))
        * bbar_product(f, b, x.iter().map(|&xj| one_minus(f, xj)))
        * f.fd(c / a, b, c, &xs))
}

fn pivot_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, c, x) = std(s);
    Ok(eps_pivot(f, x) * f.fd(a, b, c, x))
}

fn last_pivot_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, c, x) = std(s);
    let fl = f.field();
    let n = x.len();
    let xn = x[n - 1];
    let d = fl.sub(xn, Elem::ONE);
    let mut xs: Vec<Elem> = x[..n - 1]
        .iter()
        .map(|&xj| fl.div(fl.sub(xn, xj), d))
        .collect::<Result<_>>()?;
    xs.push(fl.div(xn, d)?);
    let mut bs = b[..n - 1].to_vec();
    bs.push(c / prod(f, b));
    Ok(f.eps_all(&x[..n - 1]) * f.eval(a.inverse(), one_minus(f, xn)) * f.fd(a, &bs, c, &xs))
}

fn reduce_c35_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, x) = no_c(s);
    Ok(eps_pivot(f, x) * f.fd(a, b, prod(f, b), x))
}

fn reduce_c35_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, x) = no_c(s);
    let fl = f.field();
    let n = x.len();
    let xn = x[n - 1];
    let d = fl.sub(xn, Elem::ONE);
    let xs: Vec<Elem> = x[..n - 1]
        .iter()
        .map(|&xj| fl.div(fl.sub(xn, xj), d))
        .collect::<Result<_>>()?;
    let head = f.eps_all(x)
        * f.eval(a.inverse(), one_minus(f, xn))
        * f.fd(a, &b[..n - 1], prod(f, b), &xs);
    let tail = eps_pivot(f, x) * bbar_product(f, b, x.iter().map(|&xj| fl.neg(xj)));
    Ok(head - tail)
}

fn pivot2_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, c, x) = std(s);
    let fl = f.field();
    let n = x.len();
    let xn = x[n - 1];
    let mut xs: Vec<Elem> = x[..n - 1]
        .iter()
        .map(|&xj| fl.div(fl.sub(xn, xj), one_minus(f, xj)))
        .collect::<Result<_>>()?;
    xs.push(xn);
    let mut bs = b[..n - 1].to_vec();
    bs.push(c / prod(f, b));
    Ok(f.eps_all(&x[..n - 1])
        * f.int(f.sign(c))
        * f.eval(c / (a * b[n - 1]), one_minus(f, xn))
        * bbar_product(f, &b[..n - 1], x[..n - 1].iter().map(|&xj| one_minus(f, xj)))
        * f.fd(c / a, &bs, c, &xs))
}

fn reduce_c37_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, x) = no_c(s);
    let fl = f.field();
    let n = x.len();
    let xn = x[n - 1];
    let cb = prod(f, b);
    let xs: Vec<Elem> = x[..n - 1]
        .iter()
        .map(|&xj| fl.div(fl.sub(xn, xj), one_minus(f, xj)))
        .collect::<Result<_>>()?;
    let head = f.eps_all(x)
        * f.int(f.sign(cb))
        * f.eval(prod(f, &b[..n - 1]) / a, one_minus(f, xn))
        * bbar_product(f, &b[..n - 1], x[..n - 1].iter().map(|&xj| one_minus(f, xj)))
        * f.fd(cb / a, &b[..n - 1], cb, &xs);
    let tail = eps_pivot(f, x)
        * f.eps(fl.sub(xn, Elem::ONE))
        * bbar_product(f, b, x.iter().map(|&xj| fl.neg(xj)));
    Ok(head - tail)
}

// ---------------------------------------------------------------- t4 evaluations

fn equal_x_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let n = s.n;
    let (a, b, c) = (s.chars[0], &s.chars[1..=n], s.chars[n + 1]);
    Ok(f.fd(a, b, c, &vec![s.points[0]; n]))
}

fn equal_x_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let n = s.n;
    let (a, b, c) = (s.chars[0], &s.chars[1..=n], s.chars[n + 1]);
    Ok(f.gauss_2f1_raw(prod(f, b), a, c, s.points[0]))
}

fn xn1_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let n = s.n;
    let (a, b, c) = (s.chars[0], &s.chars[1..=n], s.chars[n + 1]);
    let mut xs = s.points[..n - 1].to_vec();
    xs.push(Elem::ONE);
    Ok(f.fd(a, b, c, &xs))
}

fn xn1_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let n = s.n;
    let (a, b, c) = (s.chars[0], &s.chars[1..=n], s.chars[n + 1]);
    let bn = b[n - 1];
    Ok(f.int(f.sign(bn)) * f.fd(a, &b[..n - 1], c / bn, &s.points[..n - 1]))
}

fn all1_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let n = s.n;
    let (a, b, c) = (s.chars[0], &s.chars[1..=n], s.chars[n + 1]);
    Ok(f.fd(a, b, c, &vec![Elem::ONE; n]))
}

fn all1_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let n = s.n;
    let (a, b, c) = (s.chars[0], &s.chars[1..=n], s.chars[n + 1]);
    let pb = prod(f, b);
    Ok(f.int(f.sign(pb)) * f.bin(a, c / pb))
}

fn c62_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let n = s.n;
    let (a, b) = (s.chars[0], &s.chars[1..=n]);
    Ok(f.fd(a, b, a, &vec![s.points[0]; n]))
}

fn c62_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let n = s.n;
    let (a, b, x) = (s.chars[0], &s.chars[1..=n], s.points[0]);
    let pb = prod(f, b);
    Ok(f.int(f.sign(pb)) * f.eval(a.inverse(), x) * f.bin(a, pb)
        - f.eps(x) * f.eval(pb.inverse(), one_minus(f, x)))
}

fn c63_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let n = s.n;
    let (a, b) = (s.chars[0], &s.chars[1..=n]);
    Ok(f.fd(a, b, prod(f, b), &vec![s.points[0]; n]))
}

fn c63_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let n = s.n;
    let (a, b, x) = (s.chars[0], &s.chars[1..=n], s.points[0]);
    let pb = prod(f, b);
    let boundary = delta(f, x == Elem::ONE) * delta(f, a.is_trivial());
    Ok(f.bin(a, pb) * f.eps(x) * f.eval(a.inverse(), one_minus(f, x))
        - f.eval(pb.inverse(), f.field().neg(x))
        + boundary.scale(f.order() as i64 * f.sign(pb)))
}

// ---------------------------------------------------------------- t5

fn genfn(s: &Assignment, variant: GenFnVariant) -> GenFnInstance {
    let (a, b, c, x) = std(s);
    GenFnInstance {
        base: FdInstance {
            a,
            b: b.to_vec(),
            c,
            x: x.to_vec(),
        },
        t: s.points[s.n],
        variant,
    }
}

fn t_ne_one(_: &Fq, s: &Assignment) -> bool {
    s.points[s.n] != Elem::ONE
}

fn t_ne_minus_one(f: &Fq, s: &Assignment) -> bool {
    s.points[s.n] != f.field().minus_one()
}

macro_rules! genfn_sides {
    ($lhs:ident, $rhs:ident, $printed:ident, $variant:expr) => {
        fn $lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
            f.genfn_lhs(&genfn(s, $variant))
        }
        fn $rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
            f.genfn_rhs(&genfn(s, $variant))
        }
        fn $printed(f: &Fq, s: &Assignment) -> Result<CycInt> {
            f.genfn_rhs_printed(&genfn(s, $variant))
        }
    };
}

genfn_sides!(gf1_lhs, gf1_rhs, gf1_printed, GenFnVariant::T41);
genfn_sides!(gf2_lhs, gf2_rhs, gf2_printed, GenFnVariant::T42);
genfn_sides!(gf3_lhs, gf3_rhs, gf3_printed, GenFnVariant::T43);

// ---------------------------------------------------------------- binomials and friends

fn binom_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    Ok(f.bin(s.chars[0], s.chars[1]))
}

fn binom_sym_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b) = (s.chars[0], s.chars[1]);
    Ok(f.bin(a, a / b))
}

fn binom_flip_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b) = (s.chars[0], s.chars[1]);
    Ok(f.bin(b.inverse(), a.inverse()).scale(f.sign(a * b)))
}

fn binom_eps_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    Ok(f.bin(s.chars[0], f.trivial()))
}

fn binom_diag_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    Ok(f.bin(s.chars[0], s.chars[0]))
}

fn binom_eps_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    Ok(f.int(-1 + f.order() as i64 * s.chars[0].is_trivial() as i64))
}

fn binom_product_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, c) = (s.chars[0], s.chars[1], s.chars[2]);
    Ok(f.bin(a, b) * f.bin(c, a))
}

fn binom_product_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, c) = (s.chars[0], s.chars[1], s.chars[2]);
    let qm1 = f.order() as i64;
    let d1 = qm1 * f.sign(b) * a.is_trivial() as i64;
    let d2 = qm1 * f.sign(a * b) * (b / c).is_trivial() as i64;
    Ok(f.bin(c, b) * f.bin(c / b, a / b) - f.int(d1) + f.int(d2))
}

/// Both sides of the binomial theorem multiplied by q - 1.
fn binomial_theorem_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, x) = (s.chars[0], s.points[0]);
    Ok((f.eval(a.inverse(), one_minus(f, x)) - f.delta_elem(x)).scale(f.order() as i64))
}

fn binomial_theorem_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, x) = (s.chars[0], s.points[0]);
    let mut acc = f.zero();
    for chi in f.all_chars() {
        if let Some(e) = f.eval_exp(chi, x) {
            acc += f.bin(a * chi, chi).mul_zeta(e as i64);
        }
    }
    Ok(acc)
}

fn line_sum_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    f.char_line_sum(s.chars[0], s.chars[1], s.points[0])
}

fn line_sum_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    f.char_line_closed(s.chars[0], s.chars[1], s.points[0])
}

fn perm_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, c, x) = std(s);
    let mut bs = b.to_vec();
    let mut xs = x.to_vec();
    bs.rotate_left(1);
    xs.rotate_left(1);
    Ok(f.fd(a, &bs, c, &xs))
}

fn appell_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let c = &s.chars;
    f.appell_f1(c[0], c[1], c[2], c[3], s.points[0], s.points[1])
}

fn appell_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let c = &s.chars;
    Ok(f.fd(c[0], &c[1..3], c[3], &s.points))
}

fn gauss_swap_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let c = &s.chars;
    Ok(f.gauss_2f1_raw(c[0], c[1], c[2], s.points[0]))
}

fn gauss_swap_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let c = &s.chars;
    Ok(f.fd(c[1], &[c[0]], c[2], &s.points))
}

fn gauss_at1_lhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let c = &s.chars;
    Ok(f.gauss_2f1_raw(c[0], c[1], c[2], Elem::ONE))
}

fn gauss_at1_rhs(f: &Fq, s: &Assignment) -> Result<CycInt> {
    let (a, b, c) = (s.chars[0], s.chars[1], s.chars[2]);
    Ok(f.bin(b, c / a).scale(f.sign(a)))
}

// ---------------------------------------------------------------- tables

const NONE: &[&str] = &[];

pub(super) static REGISTRY: &[IdentityDescriptor] = &[
    IdentityDescriptor {
        id: "t2.1",
        summary: "F_D(A; B; C | x) from its definition equals the (q-1)^-n weighted sum over characters χ_1..χ_n of binomials",
        constraints: NONE,
        n_range: Some((1, 3)),
        shape: shape_std,
        admits: any,
        lhs: fd_lhs,
        rhs: charsum_rhs,
    },
    IdentityDescriptor {
        id: "t3.ff-beta",
        summary: "ε(x1x2) Σ_u B1(u)B2(1-u) F_D^(n-1)(A; B1B2, B3..; C | u x1 + (1-u) x2, x3..) in terms of F_D^(n) and two F_D^(n-2) terms",
        constraints: &["B1 != ε", "B2 != ε"],
        n_range: Some((2, 3)),
        shape: shape_std,
        admits: ff_beta_admits,
        lhs: ff_beta_lhs,
        rhs: ff_beta_rhs,
    },
    IdentityDescriptor {
        id: "t3.ksum",
        summary: "F_D^(n) = (q-1)^-1 Σ_χ {B_nχ choose χ} χ(x_n) F_D^(n-1)(Aχ; B1..B_(n-1); Cχ | x1..x_(n-1))",
        constraints: NONE,
        n_range: Some((1, 3)),
        shape: shape_std,
        admits: any,
        lhs: fd_lhs,
        rhs: ksum_rhs,
    },
    IdentityDescriptor {
        id: "t4.eps-reduce",
        summary: "F_D^(n) with B_n = ε reduces to ε(x_n) F_D^(n-1) minus a product of character values",
        constraints: NONE,
        n_range: Some((1, 3)),
        shape: shape_eps_last,
        admits: any,
        lhs: eps_reduce_lhs,
        rhs: eps_reduce_rhs,
    },
    IdentityDescriptor {
        id: "t4.c-eq-a",
        summary: "F_D^(n) with C = A in terms of F_D^(n-1)(A; B1..B_(n-1); AB̄_n | x_j/x_n)",
        constraints: NONE,
        n_range: Some((1, 3)),
        shape: shape_no_c,
        admits: any,
        lhs: c_eq_a_lhs,
        rhs: c_eq_a_rhs,
    },
    IdentityDescriptor {
        id: "t4.one-minus-x",
        summary: "ε(Π(1-x_j)) F_D(A; B; C | x) = ε(Πx_j) ΠB(-1) F_D(A; B; AΠB C̄ | 1-x)",
        constraints: NONE,
        n_range: Some((1, 3)),
        shape: shape_std,
        admits: any,
        lhs: one_minus_x_lhs,
        rhs: one_minus_x_rhs,
    },
    IdentityDescriptor {
        id: "t4.pfaff",
        summary: "F_D(A; B; C | x) = C(-1) Π B̄_j(1-x_j) F_D(ĀC; B; C | x_j/(x_j-1))",
        constraints: &["x_j != 1 for all j"],
        n_range: Some((1, 3)),
        shape: shape_std,
        admits: all_ne_one,
        lhs: fd_lhs,
        rhs: pfaff_rhs,
    },
    IdentityDescriptor {
        id: "t4.last-pivot",
        summary: "Π_(j<n) ε(x_n-x_j) F_D in terms of F_D at (x_n-x_j)/(x_n-1) and x_n/(x_n-1) with B_n replaced by CΠB̄",
        constraints: &["x_n != 1"],
        n_range: Some((1, 3)),
        shape: shape_std,
        admits: last_ne_one,
        lhs: pivot_lhs,
        rhs: last_pivot_rhs,
    },
    IdentityDescriptor {
        id: "t4.reduce-c35",
        summary: "F_D^(n) with C = ΠB reduces to F_D^(n-1) at (x_n-x_j)/(x_n-1) minus Π B̄_j(-x_j)",
        constraints: &["x_n != 1"],
        n_range: Some((1, 3)),
        shape: shape_no_c,
        admits: last_ne_one,
        lhs: reduce_c35_lhs,
        rhs: reduce_c35_rhs,
    },
    IdentityDescriptor {
        id: "t4.pivot2",
        summary: "Π_(j<n) ε(x_n-x_j) F_D in terms of F_D(ĀC; ..; C) at (x_n-x_j)/(1-x_j) and x_n",
        constraints: &["x_j != 1 for all j"],
        n_range: Some((1, 3)),
        shape: shape_std,
        admits: all_ne_one,
        lhs: pivot_lhs,
        rhs: pivot2_rhs,
    },
    IdentityDescriptor {
        id: "t4.reduce-c37",
        summary: "F_D^(n) with C = ΠB reduces to F_D^(n-1)(ĀΠB; ..; ΠB) at (x_n-x_j)/(1-x_j) minus Π B̄_j(-x_j)",
        constraints: &["x_j != 1 for all j"],
        n_range: Some((1, 3)),
        shape: shape_no_c,
        admits: all_ne_one,
        lhs: reduce_c35_lhs,
        rhs: reduce_c37_rhs,
    },
    IdentityDescriptor {
        id: "t4.eval-equal-x",
        summary: "F_D(A; B; C | x, .., x) = 2F1(ΠB, A; C | x)",
        constraints: NONE,
        n_range: Some((1, 3)),
        shape: shape_equal_x,
        admits: any,
        lhs: equal_x_lhs,
        rhs: equal_x_rhs,
    },
    IdentityDescriptor {
        id: "t4.eval-xn1",
        summary: "F_D(A; B; C | x1..x_(n-1), 1) = B_n(-1) F_D^(n-1)(A; B1..B_(n-1); B̄_n C | x1..x_(n-1))",
        constraints: NONE,
        n_range: Some((1, 3)),
        shape: shape_last_one,
        admits: any,
        lhs: xn1_lhs,
        rhs: xn1_rhs,
    },
    IdentityDescriptor {
        id: "t4.eval-all1",
        summary: "F_D(A; B; C | 1, .., 1) = ΠB(-1) {A choose ΠB̄ C}",
        constraints: NONE,
        n_range: Some((1, 3)),
        shape: shape_all_ones,
        admits: any,
        lhs: all1_lhs,
        rhs: all1_rhs,
    },
    IdentityDescriptor {
        id: "t4.c62",
        summary: "F_D(A; B; A | x, .., x) = -ε(x) ΠB̄(1-x) + ΠB(-1) Ā(x) {A choose ΠB}",
        constraints: NONE,
        n_range: Some((1, 3)),
        shape: shape_no_c_equal_x,
        admits: any,
        lhs: c62_lhs,
        rhs: c62_rhs,
    },
    IdentityDescriptor {
        id: "t4.c63",
        summary: "F_D(A; B; ΠB | x, .., x) = {A choose ΠB} ε(x) Ā(1-x) - ΠB̄(-x) + (q-1) ΠB(-1) δ(1-x) δ(A)",
        constraints: NONE,
        n_range: Some((1, 3)),
        shape: shape_no_c_equal_x,
        admits: any,
        lhs: c63_lhs,
        rhs: c63_rhs,
    },
    IdentityDescriptor {
        id: "t5.gf1",
        summary: "Σ_θ {AC̄θ choose θ} F_D(Aθ; B; C | x) θ(t) = (q-1)[ε(t) Ā(1-t) F_D(A; B; C | x/(1-t)) - ε(Πx) ĀC(-t) Π B̄_j(1-x_j)]",
        constraints: &["t != 1"],
        n_range: Some((1, 2)),
        shape: shape_genfn,
        admits: t_ne_one,
        lhs: gf1_lhs,
        rhs: gf1_rhs,
    },
    IdentityDescriptor {
        id: "t5.gf2",
        summary: "Σ_θ {B_nθ choose θ} F_D(A; .., B_nθ; C | x) θ(t) as (q-1) ε(t) B̄_n(1-t) F_D(.. | .., x_n/(1-t)) minus a product term",
        constraints: &["t != 1"],
        n_range: Some((1, 2)),
        shape: shape_genfn,
        admits: t_ne_one,
        lhs: gf2_lhs,
        rhs: gf2_rhs,
    },
    IdentityDescriptor {
        id: "t5.gf3",
        summary: "Σ_θ {AC̄θ choose θ} F_D(A; B; Cθ̄ | x) θ(t) = (q-1)[ε(t) C(1+t) F_D(A; B; C | (1+t)x) - ĀC(-t) ε(Πx) Π B̄_j(1-x_j)]",
        constraints: &["t != -1"],
        n_range: Some((1, 2)),
        shape: shape_genfn,
        admits: t_ne_minus_one,
        lhs: gf3_lhs,
        rhs: gf3_rhs,
    },
    IdentityDescriptor {
        id: "binom.sym",
        summary: "{A choose B} = {A choose AB̄}",
        constraints: NONE,
        n_range: None,
        shape: shape_ab,
        admits: any,
        lhs: binom_lhs,
        rhs: binom_sym_rhs,
    },
    IdentityDescriptor {
        id: "binom.flip",
        summary: "{A choose B} = {B̄ choose Ā} AB(-1)",
        constraints: NONE,
        n_range: None,
        shape: shape_ab,
        admits: any,
        lhs: binom_lhs,
        rhs: binom_flip_rhs,
    },
    IdentityDescriptor {
        id: "binom.eps",
        summary: "{A choose ε} = -1 + (q-1) δ(A)",
        constraints: NONE,
        n_range: None,
        shape: shape_a,
        admits: any,
        lhs: binom_eps_lhs,
        rhs: binom_eps_rhs,
    },
    IdentityDescriptor {
        id: "binom.diag",
        summary: "{A choose A} = -1 + (q-1) δ(A)",
        constraints: NONE,
        n_range: None,
        shape: shape_a,
        admits: any,
        lhs: binom_diag_lhs,
        rhs: binom_eps_rhs,
    },
    IdentityDescriptor {
        id: "binom.product",
        summary: "{A choose B}{C choose A} = {C choose B}{CB̄ choose AB̄} - (q-1) B(-1) δ(A) + (q-1) AB(-1) δ(BC̄)",
        constraints: NONE,
        n_range: None,
        shape: shape_abc,
        admits: any,
        lhs: binom_product_lhs,
        rhs: binom_product_rhs,
    },
    IdentityDescriptor {
        id: "binom.theorem",
        summary: "(q-1)(Ā(1-x) - δ(x)) = Σ_χ {Aχ choose χ} χ(x)",
        constraints: NONE,
        n_range: None,
        shape: shape_a_x,
        admits: any,
        lhs: binomial_theorem_lhs,
        rhs: binomial_theorem_rhs,
    },
    IdentityDescriptor {
        id: "charsum.line",
        summary: "Σ_χ {Aχ choose Bχ} χ(x) = (q-1) B̄(x) ĀB(1-x)",
        constraints: NONE,
        n_range: None,
        shape: shape_ab_x,
        admits: any,
        lhs: line_sum_lhs,
        rhs: line_sum_rhs,
    },
    IdentityDescriptor {
        id: "fd.perm",
        summary: "F_D is invariant under a cyclic shift of the (B_j, x_j) pairs",
        constraints: NONE,
        n_range: Some((2, 3)),
        shape: shape_std,
        admits: any,
        lhs: fd_lhs,
        rhs: perm_rhs,
    },
    IdentityDescriptor {
        id: "appell.fd2",
        summary: "F1(A; B, B'; C | x, y) summed directly equals F_D^(2)",
        constraints: NONE,
        n_range: None,
        shape: shape_appell,
        admits: any,
        lhs: appell_lhs,
        rhs: appell_rhs,
    },
    IdentityDescriptor {
        id: "gauss.swap",
        summary: "2F1(A, B; C | x) summed directly equals F_D^(1)(B; A; C | x)",
        constraints: NONE,
        n_range: None,
        shape: shape_abc_x,
        admits: any,
        lhs: gauss_swap_lhs,
        rhs: gauss_swap_rhs,
    },
    IdentityDescriptor {
        id: "gauss.at1",
        summary: "2F1(A, B; C | 1) = A(-1) {B choose ĀC}",
        constraints: NONE,
        n_range: None,
        shape: shape_abc,
        admits: any,
        lhs: gauss_at1_lhs,
        rhs: gauss_at1_rhs,
    },
];

pub(super) static ERRATA: &[IdentityDescriptor] = &[
    IdentityDescriptor {
        id: "t5.gf1.printed",
        summary: "t5.gf1 without the overall factor q-1",
        constraints: &["t != 1"],
        n_range: Some((1, 2)),
        shape: shape_genfn,
        admits: t_ne_one,
        lhs: gf1_lhs,
        rhs: gf1_printed,
    },
    IdentityDescriptor {
        id: "t5.gf2.printed",
        summary: "t5.gf2 claimed for every t, with the x_n/(1-t) term dropped at t = 1",
        constraints: NONE,
        n_range: Some((1, 2)),
        shape: shape_genfn,
        admits: any,
        lhs: gf2_lhs,
        rhs: gf2_printed,
    },
    IdentityDescriptor {
        id: "t5.gf3.printed",
        summary: "t5.gf3 with C̄(1+t) and arguments x_j/(1+t) in place of C(1+t) and (1+t)x_j",
        constraints: NONE,
        n_range: Some((1, 2)),
        shape: shape_genfn,
        admits: any,
        lhs: gf3_lhs,
        rhs: gf3_printed,
    },
    IdentityDescriptor {
        id: "t3.ff-beta.n2-printed",
        summary: "t3.ff-beta at n = 2 with both F_D^(0) factors replaced by 1",
        constraints: &["B1 != ε", "B2 != ε"],
        n_range: Some((2, 2)),
        shape: shape_std,
        admits: ff_beta_admits,
        lhs: ff_beta_lhs,
        rhs: ff_beta_rhs_printed,
    },
];

pub(super) const NEGATIVE_CONTROL: IdentityDescriptor = IdentityDescriptor {
    id: "selftest.corrupt",
    summary: "t2.1 with 1 added to the right side; must fail",
    constraints: NONE,
    n_range: Some((1, 2)),
    shape: shape_std,
    admits: any,
    lhs: fd_lhs,
    rhs: corrupted_rhs,
};
