//! Jacobi sums, the character binomial, and the finite-field ₂F₁, Appell F₁
//! and Lauricella F_D^(n).
//!
//! Everything uses the q-scaled normalization: the binomial is
//! `{A choose B} = B(-1) J(A, B̄)` and
//!
//! ```text
//! F_D^(n)(A; B_1..B_n; C | x_1..x_n)
//!     = ε(x_1⋯x_n) AC(-1) Σ_u A(u) ĀC(1-u) Π_j B̄_j(1 - x_j u)
//! ```
//!
//! with ₂F₁(A, B; C | x) = F_D^(1)(B; A; C | x) and F₁ = F_D^(2). Greene's
//! original ₂F₁ is this divided by q; [`Normalization::Greene`] exposes it.
//!
//! The kernels accumulate a histogram of exponents of ζ_(q-1) and reduce once
//! at the end, so an F_D evaluation costs O(q·n) table lookups.

use std::fmt;

use crate::chars::{Char, Fq};
use crate::cyclo::CycInt;
use crate::error::{Error, Result};
use crate::field::Elem;

/// Parameters (A; B_1..B_n; C | x_1..x_n) of one F_D^(n) evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FdInstance {
    pub a: Char,
    pub b: Vec<Char>,
    pub c: Char,
    pub x: Vec<Elem>,
}

impl FdInstance {
    /// Validates that every parameter belongs to `fq` and that n = |B| = |x| ≥ 1.
    pub fn new(fq: &Fq, a: Char, b: Vec<Char>, c: Char, x: Vec<Elem>) -> Result<FdInstance> {
        if b.is_empty() {
            return Err(Error::InvalidInstance("need at least one variable".into()));
        }
        if b.len() != x.len() {
            return Err(Error::InvalidInstance(format!(
                "{} characters B_j but {} points x_j",
                b.len(),
                x.len()
            )));
        }
        for &ch in std::iter::once(&a).chain(&b).chain(std::iter::once(&c)) {
            fq.check(ch)?;
        }
        for &xi in &x {
            fq.field().elem(xi.index() as u64)?;
        }
        Ok(FdInstance { a, b, c, x })
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }
}

/// Which generating function a [`GenFnInstance`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenFnVariant {
    /// θ runs through the A slot: Σ_θ {AC̄θ choose θ} F_D(Aθ; B; C | x) θ(t).
    T41,
    /// θ runs through the last B slot: Σ_θ {B_nθ choose θ} F_D(A; .., B_nθ; C | x) θ(t).
    T42,
    /// θ runs through the C slot: Σ_θ {AC̄θ choose θ} F_D(A; B; Cθ̄ | x) θ(t).
    T43,
}

/// A generating-function evaluation: a θ-sum of F_D values weighted by θ(t).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenFnInstance {
    pub base: FdInstance,
    pub t: Elem,
    pub variant: GenFnVariant,
}

/// Scaling convention for [`Fq::gauss_2f1`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    /// ε(x) BC(-1) Σ_y B(y) B̄C(1-y) Ā(1-xy).
    #[default]
    Paper,
    /// The same divided by q.
    Greene,
}

/// An exact value `numerator / denominator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scaled {
    pub numerator: CycInt,
    pub denominator: u32,
}

impl fmt::Display for Scaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / {}", self.numerator, self.denominator)
        }
    }
}

impl Fq {
    fn check_all(&self, chars: &[Char]) -> Result<()> {
        chars.iter().try_for_each(|&c| self.check(c).map(|_| ()))
    }

    /// Σ_u χ(u) λ(1-u).
    pub fn jacobi(&self, chi: Char, lam: Char) -> Result<CycInt> {
        self.check_all(&[chi, lam])?;
        Ok(self.jacobi_raw(chi, lam))
    }

    fn jacobi_raw(&self, chi: Char, lam: Char) -> CycInt {
        let f = self.field();
        let n = self.order() as usize;
        let mut counts = vec![0i64; n];
        for u in f.nonzero_elements() {
            let w = f.sub(Elem::ONE, u);
            if w.is_zero() {
                continue;
            }
            let e = self.eval_exp(chi, u).unwrap() as usize + self.eval_exp(lam, w).unwrap() as usize;
            counts[e % n] += 1;
        }
        self.ring().from_group_ring(&counts)
    }

    /// {A choose B} = B(-1) J(A, B̄).
    pub fn binom(&self, a: Char, b: Char) -> Result<CycInt> {
        self.check_all(&[a, b])?;
        Ok(self.bin(a, b))
    }

    /// [`binom`](Self::binom) without the field check; served from a table
    /// for small q.
    pub(crate) fn bin(&self, a: Char, b: Char) -> CycInt {
        if !self.binom_cacheable() {
            return self.binom_direct(a, b);
        }
        let n = self.order() as usize;
        let table = self.binom_cache.get_or_init(|| {
            let mut t = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    t.push(self.binom_direct(self.chr(i as i64), self.chr(j as i64)));
                }
            }
            t
        });
        table[a.exponent() as usize * n + b.exponent() as usize].clone()
    }

    fn binom_direct(&self, a: Char, b: Char) -> CycInt {
        self.jacobi_raw(a, b.inverse()).scale(self.sign(b))
    }

    /// The Gaussian ₂F₁(A, B; C | x), summed directly over y.
    pub fn gauss_2f1(
        &self,
        a: Char,
        b: Char,
        c: Char,
        x: Elem,
        normalization: Normalization,
    ) -> Result<Scaled> {
        self.check_all(&[a, b, c])?;
        let numerator = self.gauss_2f1_raw(a, b, c, x);
        Ok(match normalization {
            Normalization::Paper => Scaled {
                numerator,
                denominator: 1,
            },
            Normalization::Greene => Scaled {
                numerator,
                denominator: self.q(),
            },
        })
    }

    /// Paper-normalized ₂F₁ by a plain sum of products of character values.
    pub(crate) fn gauss_2f1_raw(&self, a: Char, b: Char, c: Char, x: Elem) -> CycInt {
        if x.is_zero() {
            return self.zero();
        }
        let f = self.field();
        let mut acc = self.zero();
        for y in f.elements() {
            let term = self.eval(b, y)
                * self.eval(c / b, f.sub(Elem::ONE, y))
                * self.eval(a.inverse(), f.sub(Elem::ONE, f.mul(x, y)));
            acc += term;
        }
        acc.scale(self.sign(b * c))
    }

    /// Appell F₁(A; B, B'; C | x, y), summed directly over u.
    pub fn appell_f1(&self, a: Char, b: Char, b2: Char, c: Char, x: Elem, y: Elem) -> Result<CycInt> {
        self.check_all(&[a, b, b2, c])?;
        if x.is_zero() || y.is_zero() {
            return Ok(self.zero());
        }
        let f = self.field();
        let mut acc = self.zero();
        for u in f.elements() {
            let term = self.eval(a, u)
                * self.eval(c / a, f.sub(Elem::ONE, u))
                * self.eval(b.inverse(), f.sub(Elem::ONE, f.mul(u, x)))
                * self.eval(b2.inverse(), f.sub(Elem::ONE, f.mul(u, y)));
            acc += term;
        }
        Ok(acc.scale(self.sign(a * c)))
    }

    /// F_D^(n) from its definition, for any n ≥ 0.
    ///
    /// With no variables the empty ε-factor is 1 and the sum collapses to
    /// AC(-1) J(A, ĀC) = {A choose C}, which is the value F_D^(0) takes
    /// throughout the reduction formulas.
    pub fn fd(&self, a: Char, b: &[Char], c: Char, x: &[Elem]) -> CycInt {
        assert_eq!(b.len(), x.len(), "F_D needs one point per B_j");
        if x.iter().any(|xi| xi.is_zero()) {
            return self.zero();
        }
        let f = self.field();
        let n = self.order() as u64;
        let ca = (c / a).exponent() as u64;
        let am = a.exponent() as u64;
        let binv: Vec<u64> = b.iter().map(|bj| bj.inverse().exponent() as u64).collect();
        let shift = (a * c).exponent() as u64 * self.log_minus_one() as u64;
        let mut counts = vec![0i64; n as usize];
        'u: for u in f.nonzero_elements() {
            let w = f.sub(Elem::ONE, u);
            if w.is_zero() {
                continue;
            }
            let mut e = am * f.log_unchecked(u) as u64 + ca * f.log_unchecked(w) as u64 + shift;
            for (&bj, &xj) in binv.iter().zip(x) {
                let v = f.sub(Elem::ONE, f.mul(xj, u));
                if v.is_zero() {
                    continue 'u;
                }
                e += bj * f.log_unchecked(v) as u64;
            }
            counts[(e % n) as usize] += 1;
        }
        self.ring().from_group_ring(&counts)
    }

    /// F_D^(n) from its definition. O(q·n).
    pub fn lauricella_def(&self, inst: &FdInstance) -> Result<CycInt> {
        self.check_instance(inst)?;
        Ok(self.fd(inst.a, &inst.b, inst.c, &inst.x))
    }

    fn check_instance(&self, inst: &FdInstance) -> Result<()> {
        FdInstance::new(self, inst.a, inst.b.clone(), inst.c, inst.x.clone()).map(|_| ())
    }

    /// F_D^(n) as a sum over character tuples:
    ///
    /// ```text
    /// (q-1)^(-n) Σ_{χ_1..χ_n} {Aχ_1⋯χ_n choose Cχ_1⋯χ_n} Π_j {B_jχ_j choose χ_j} χ_j(x_j)
    /// ```
    ///
    /// The product over j is folded into a cyclic convolution indexed by the
    /// exponent of χ_1⋯χ_n, so the cost is O(n (q-1)^2) ring products. The
    /// final division by (q-1)^n must be exact; anything else is a bug.
    pub fn lauricella_charsum(&self, inst: &FdInstance) -> Result<CycInt> {
        self.check_instance(inst)?;
        self.fd_charsum(inst.a, &inst.b, inst.c, &inst.x)
    }

    pub(crate) fn fd_charsum(&self, a: Char, b: &[Char], c: Char, x: &[Elem]) -> Result<CycInt> {
        let n = self.order() as usize;
        // weights[s] = Σ over tuples with Σ m_j ≡ s of Π_j {B_jχ_j choose χ_j} χ_j(x_j)
        let mut weights: Vec<CycInt> = (0..n)
            .map(|s| if s == 0 { self.int(1) } else { self.zero() })
            .collect();
        for (&bj, &xj) in b.iter().zip(x) {
            let factor: Vec<CycInt> = self
                .all_chars()
                .map(|chi| match self.eval_exp(chi, xj) {
                    None => self.zero(),
                    Some(e) => self.bin(bj * chi, chi).mul_zeta(e as i64),
                })
                .collect();
            let mut next: Vec<CycInt> = (0..n).map(|_| self.zero()).collect();
            for (s, w) in weights.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                for (m, fm) in factor.iter().enumerate() {
                    if !fm.is_zero() {
                        next[(s + m) % n] += w * fm;
                    }
                }
            }
            weights = next;
        }
        let mut total = self.zero();
        for (s, w) in weights.iter().enumerate() {
            if !w.is_zero() {
                let chi = self.chr(s as i64);
                total += self.bin(a * chi, c * chi) * w;
            }
        }
        let denom = (n as i64).pow(b.len() as u32);
        total.div_exact(denom)
    }

    /// Σ_χ {Aχ choose Bχ} χ(x), summed over all characters.
    pub fn char_line_sum(&self, a: Char, b: Char, x: Elem) -> Result<CycInt> {
        self.check_all(&[a, b])?;
        let mut acc = self.zero();
        for chi in self.all_chars() {
            if let Some(e) = self.eval_exp(chi, x) {
                acc += self.bin(a * chi, b * chi).mul_zeta(e as i64);
            }
        }
        Ok(acc)
    }

    /// Closed form of [`char_line_sum`](Self::char_line_sum):
    /// (q-1) B̄(x) ĀB(1-x).
    pub fn char_line_closed(&self, a: Char, b: Char, x: Elem) -> Result<CycInt> {
        self.check_all(&[a, b])?;
        let f = self.field();
        Ok((self.eval(b.inverse(), x) * self.eval(b / a, f.sub(Elem::ONE, x)))
            .scale(self.order() as i64))
    }

    fn check_genfn(&self, g: &GenFnInstance) -> Result<()> {
        self.check_instance(&g.base)?;
        self.field().elem(g.t.index() as u64)?;
        Ok(())
    }

    /// The θ-sum side of a generating function.
    pub fn genfn_lhs(&self, g: &GenFnInstance) -> Result<CycInt> {
        self.check_genfn(g)?;
        let FdInstance { a, b, c, x } = &g.base;
        let (a, c) = (*a, *c);
        let mut acc = self.zero();
        for theta in self.all_chars() {
            let Some(e) = self.eval_exp(theta, g.t) else {
                continue;
            };
            let term = match g.variant {
                GenFnVariant::T41 => self.bin(a / c * theta, theta) * self.fd(a * theta, b, c, x),
                GenFnVariant::T42 => {
                    let bn = *b.last().unwrap();
                    let mut shifted = b.clone();
                    *shifted.last_mut().unwrap() = bn * theta;
                    self.bin(bn * theta, theta) * self.fd(a, &shifted, c, x)
                }
                GenFnVariant::T43 => self.bin(a / c * theta, theta) * self.fd(a, b, c / theta, x),
            };
            acc += term.mul_zeta(e as i64);
        }
        Ok(acc)
    }

    /// The closed-form side of a generating function.
    ///
    /// * T41, t ≠ 1: (q-1)[ε(t) Ā(1-t) F_D(A; B; C | x/(1-t)) - ε(x_1⋯x_n) ĀC(-t) Π B̄_j(1-x_j)]
    /// * T42, t ≠ 1: (q-1) ε(t) B̄_n(1-t) F_D(A; B; C | x_1, .., x_(n-1), x_n/(1-t))
    ///   - (q-1) ε(x_1⋯x_(n-1)) B̄_n(-t) B_1⋯B_(n-1)C̄(x_n) ĀC(1-x_n) Π_(j<n) B̄_j(x_n - x_j)
    /// * T43, t ≠ -1: (q-1) ε(t) C(1+t) F_D(A; B; C | (1+t)x)
    ///   - (q-1) ĀC(-t) ε(x_1⋯x_n) Π B̄_j(1-x_j)
    ///
    /// The excluded values of t are [`Error::DomainViolation`]s: at those
    /// points the closed form does not match the θ-sum.
    pub fn genfn_rhs(&self, g: &GenFnInstance) -> Result<CycInt> {
        self.check_genfn(g)?;
        let f = self.field();
        let FdInstance { a, b, c, x } = &g.base;
        let (a, c, t) = (*a, *c, g.t);
        let qm1 = self.order() as i64;
        let one = Elem::ONE;
        match g.variant {
            GenFnVariant::T41 => {
                if t == one {
                    return Err(Error::DomainViolation("T41 requires t != 1".into()));
                }
                let omt = f.sub(one, t);
                let inv = f.inv(omt)?;
                let xs: Vec<Elem> = x.iter().map(|&xi| f.mul(xi, inv)).collect();
                let first = self.eps(t) * self.eval(a.inverse(), omt) * self.fd(a, b, c, &xs);
                Ok((first - self.t41_correction(a, b, c, x, t)).scale(qm1))
            }
            GenFnVariant::T42 => {
                if t == one {
                    return Err(Error::DomainViolation("T42 requires t != 1".into()));
                }
                self.t42_rhs(a, b, c, x, t)
            }
            GenFnVariant::T43 => {
                let opt = f.add(one, t);
                if opt.is_zero() {
                    return Err(Error::DomainViolation("T43 requires t != -1".into()));
                }
                let xs: Vec<Elem> = x.iter().map(|&xi| f.mul(xi, opt)).collect();
                let first = self.eps(t) * self.eval(c, opt) * self.fd(a, b, c, &xs);
                Ok((first - self.t41_correction(a, b, c, x, t)).scale(qm1))
            }
        }
    }

    /// The closed forms with the factors and arguments exactly as commonly
    /// printed: T41 without the overall (q-1); T42 and T43 with no restriction
    /// on t, the vanishing character at 1-t (resp. 1+t) dropping the first
    /// term; and T43 with C̄(1+t) and arguments x_j/(1+t). Each of these
    /// disagrees with the θ-sum on part of its domain; they are kept to
    /// exhibit the counterexamples.
    pub fn genfn_rhs_printed(&self, g: &GenFnInstance) -> Result<CycInt> {
        self.check_genfn(g)?;
        let f = self.field();
        let FdInstance { a, b, c, x } = &g.base;
        let (a, c, t) = (*a, *c, g.t);
        let one = Elem::ONE;
        match g.variant {
            GenFnVariant::T41 => {
                if t == one {
                    return Err(Error::DomainViolation("T41 requires t != 1".into()));
                }
                let omt = f.sub(one, t);
                let inv = f.inv(omt)?;
                let xs: Vec<Elem> = x.iter().map(|&xi| f.mul(xi, inv)).collect();
                let first = self.eps(t) * self.eval(a.inverse(), omt) * self.fd(a, b, c, &xs);
                Ok(first - self.t41_correction(a, b, c, x, t))
            }
            GenFnVariant::T42 => self.t42_rhs(a, b, c, x, t),
            GenFnVariant::T43 => {
                let qm1 = self.order() as i64;
                let opt = f.add(one, t);
                let first = match f.inv(opt) {
                    Err(_) => self.zero(),
                    Ok(inv) => {
                        let xs: Vec<Elem> = x.iter().map(|&xi| f.mul(xi, inv)).collect();
                        self.eps(t) * self.eval(c.inverse(), opt) * self.fd(a, b, c, &xs)
                    }
                };
                Ok((first - self.t41_correction(a, b, c, x, t)).scale(qm1))
            }
        }
    }

    /// ε(x_1⋯x_n) ĀC(-t) Π B̄_j(1-x_j)
    fn t41_correction(&self, a: Char, b: &[Char], c: Char, x: &[Elem], t: Elem) -> CycInt {
        let f = self.field();
        let mut v = self.eps_all(x) * self.eval(c / a, f.neg(t));
        for (&bj, &xj) in b.iter().zip(x) {
            v = v * self.eval(bj.inverse(), f.sub(Elem::ONE, xj));
        }
        v
    }

    /// T42 closed form; at t = 1 the first term is taken as zero.
    fn t42_rhs(&self, a: Char, b: &[Char], c: Char, x: &[Elem], t: Elem) -> Result<CycInt> {
        let f = self.field();
        let qm1 = self.order() as i64;
        let n = b.len();
        let bn = b[n - 1];
        let xn = x[n - 1];
        let omt = f.sub(Elem::ONE, t);
        let first = match f.inv(omt) {
            Err(_) => self.zero(),
            Ok(inv) => {
                let mut xs = x.to_vec();
                xs[n - 1] = f.mul(xn, inv);
                self.eps(t) * self.eval(bn.inverse(), omt) * self.fd(a, b, c, &xs)
            }
        };
        let head = b[..n - 1].iter().fold(self.trivial(), |acc, &bj| acc * bj);
        let mut second = self.eps_all(&x[..n - 1])
            * self.eval(bn.inverse(), f.neg(t))
            * self.eval(head / c, xn)
            * self.eval(c / a, f.sub(Elem::ONE, xn));
        for (&bj, &xj) in b[..n - 1].iter().zip(&x[..n - 1]) {
            second = second * self.eval(bj.inverse(), f.sub(xn, xj));
        }
        Ok((first - second).scale(qm1))
    }

    /// ε(x) as a ring element.
    pub(crate) fn eps(&self, x: Elem) -> CycInt {
        self.int(!x.is_zero() as i64)
    }

    /// ε(x_1⋯x_n).
    pub(crate) fn eps_all(&self, x: &[Elem]) -> CycInt {
        self.int(x.iter().all(|xi| !xi.is_zero()) as i64)
    }
}
