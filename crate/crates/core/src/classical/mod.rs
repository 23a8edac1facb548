//! Classical (complex) counterparts: Pochhammer symbols, truncated ₂F₁ and
//! F_D^(n) series, the beta function, and numerical checks of the beta
//! integral formula, the k-summation formula and the c = Σb reduction.
//!
//! Only |x_j| < 1 is supported; there is no analytic continuation.

mod quad;
mod special;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use quad::{integrate, Quadrature, QuadratureConfig};
pub use special::{beta, gamma, ln_gamma};

/// Default per-index truncation of the F_D multi-series.
pub const DEFAULT_M: usize = 60;
/// Default truncation of the outer k-sum.
pub const DEFAULT_K: usize = 60;
/// Acceptance tolerance for quadrature-backed checks.
pub const INTEGRAL_TOL: f64 = 1e-8;
/// Acceptance tolerance for series-against-series checks.
pub const SERIES_TOL: f64 = 1e-9;

/// (z)_k = z(z+1)⋯(z+k-1), with (z)_0 = 1.
pub fn pochhammer(z: Complex64, k: u32) -> Complex64 {
    (0..k).fold(Complex64::new(1.0, 0.0), |acc, i| acc * (z + i as f64))
}

/// Parameters of a classical F_D^(n)(a; b_1..b_n; c | x_1..x_n).
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalFdParams {
    pub a: Complex64,
    pub b: Vec<Complex64>,
    pub c: Complex64,
    pub x: Vec<Complex64>,
    /// Each index m_j runs over 0..=m.
    pub m: usize,
    /// Outer truncation for the k-summation check.
    pub k: usize,
    pub tol: f64,
}

impl ClassicalFdParams {
    /// Real parameters with default truncations and the series tolerance.
    pub fn real(a: f64, b: &[f64], c: f64, x: &[f64]) -> ClassicalFdParams {
        let cx = |v: &[f64]| v.iter().map(|&t| Complex64::new(t, 0.0)).collect();
        ClassicalFdParams {
            a: Complex64::new(a, 0.0),
            b: cx(b),
            c: Complex64::new(c, 0.0),
            x: cx(x),
            m: DEFAULT_M,
            k: DEFAULT_K,
            tol: SERIES_TOL,
        }
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    fn validate(&self) -> Result<()> {
        if self.b.len() != self.x.len() {
            return Err(Error::InvalidParameter(format!(
                "{} parameters b_j but {} points x_j",
                self.b.len(),
                self.x.len()
            )));
        }
        if is_nonpositive_integer(self.c) {
            return Err(Error::InvalidParameter(format!("c = {} is a non-positive integer", self.c)));
        }
        if let Some(x) = self.x.iter().find(|x| x.norm() >= 1.0) {
            return Err(Error::Diverged(format!("|x| = {} is not below 1", x.norm())));
        }
        Ok(())
    }
}

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// A truncated series value with a tail estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: Complex64,
    /// Geometric estimate of the omitted terms (see [`fd_series_detail`]);
    /// infinite when the term ratio bound is not below 1.
    pub tail_estimate: f64,
}

/// Truncated F_D^(n) with every m_j ≤ p.m.
pub fn fd_series(p: &ClassicalFdParams) -> Result<Complex64> {
    Ok(fd_series_detail(p)?.value)
}

/// [`fd_series`] with a tail estimate.
///
/// The sum is organized by total degree s = m_1 + .. + m_n: the coefficients
/// Σ_{|m|=s} Π_j (b_j)_(m_j) x_j^(m_j) / m_j! come from convolving the n
/// single-variable sequences, and each is weighted by (a)_s/(c)_s.
///
/// The tail estimate takes the absolute sum of the terms on the truncation
/// boundary (some m_j = M) and extends it geometrically with ratio
/// ρ = max_j |x_j| · max(1, |b_j+M|/(M+1)) · max(1, |a+s|/|c+s|) at
/// s = nM, giving shell · ρ/(1-ρ).
pub fn fd_series_detail(p: &ClassicalFdParams) -> Result<SeriesSum> {
    p.validate()?;
    let (value, abs_full) = truncated(p.a, &p.b, p.c, &p.x, p.m);
    if p.m == 0 || p.n() == 0 {
        let tail = if p.n() == 0 { 0.0 } else { f64::INFINITY };
        return Ok(SeriesSum {
            value,
            tail_estimate: tail,
        });
    }
    let (_, abs_inner) = truncated(p.a, &p.b, p.c, &p.x, p.m - 1);
    let shell = (abs_full - abs_inner).max(0.0);
    let m = p.m as f64;
    let s = p.n() as f64 * m;
    let ac = ((p.a + s).norm() / (p.c + s).norm()).max(1.0);
    let rho = p
        .b
        .iter()
        .zip(&p.x)
        .map(|(b, x)| x.norm() * ((b + m).norm() / (m + 1.0)).max(1.0) * ac)
        .fold(0.0, f64::max);
    let tail_estimate = if rho < 1.0 {
        shell * rho / (1.0 - rho)
    } else {
        f64::INFINITY
    };
    Ok(SeriesSum {
        value,
        tail_estimate,
    })
}

/// (value, Σ|terms|) of the series truncated at m_j ≤ cap.
fn truncated(a: Complex64, b: &[Complex64], c: Complex64, x: &[Complex64], cap: usize) -> (Complex64, f64) {
    let zero = Complex64::new(0.0, 0.0);
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    let mut abs_coeffs = vec![1.0f64];
    for (&bj, &xj) in b.iter().zip(x) {
        let mut u = Vec::with_capacity(cap + 1);
        let mut term = Complex64::new(1.0, 0.0);
        for m in 0..=cap {
            u.push(term);
            term = term * (bj + m as f64) * xj / (m as f64 + 1.0);
        }
        let mut next = vec![zero; coeffs.len() + cap];
        let mut next_abs = vec![0.0; coeffs.len() + cap];
        for (s, (&ps, &pa)) in coeffs.iter().zip(&abs_coeffs).enumerate() {
            for (m, &um) in u.iter().enumerate() {
                next[s + m] += ps * um;
                next_abs[s + m] += pa * um.norm();
            }
        }
        coeffs = next;
        abs_coeffs = next_abs;
    }
    let mut ratio = Complex64::new(1.0, 0.0);
    let mut value = zero;
    let mut abs = 0.0;
    for (s, (&ps, &pa)) in coeffs.iter().zip(&abs_coeffs).enumerate() {
        value += ratio * ps;
        abs += ratio.norm() * pa;
        ratio = ratio * (a + s as f64) / (c + s as f64);
    }
    (value, abs)
}

/// Gauss ₂F₁(a, b; c; x) summed term by term until the terms fall below
/// 1e-17 of the partial sum (at most 100 000 terms).
pub fn gauss_2f1(a: Complex64, b: Complex64, c: Complex64, x: Complex64) -> Result<Complex64> {
    if x.norm() >= 1.0 {
        return Err(Error::Diverged(format!("|x| = {} is not below 1", x.norm())));
    }
    if is_nonpositive_integer(c) {
        return Err(Error::InvalidParameter(format!("c = {c} is a non-positive integer")));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..100_000 {
        let k = k as f64;
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            break;
        }
    }
    Ok(sum)
}

/// The two sides of a classical check and their distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
}

impl Residual {
    fn new(lhs: Complex64, rhs: Complex64) -> Residual {
        Residual {
            lhs,
            rhs,
            residual: (lhs - rhs).norm(),
        }
    }
}

fn sub_params(p: &ClassicalFdParams, a: Complex64, b: Vec<Complex64>, c: Complex64, x: Vec<Complex64>) -> ClassicalFdParams {
    ClassicalFdParams {
        a,
        b,
        c,
        x,
        ..p.clone()
    }
}

/// B(b_1, b_2) F_D^(n)(a; b; c | x) against
/// ∫_0^1 u^(b_1-1) (1-u)^(b_2-1) F_D^(n-1)(a; b_1+b_2, b_3..; c | u x_1 + (1-u) x_2, x_3..) du.
///
/// Requires n ≥ 2 and Re b_1, Re b_2 ≥ 1 so the integrand is bounded.
pub fn check_integral_formula(p: &ClassicalFdParams, cfg: &QuadratureConfig) -> Result<Residual> {
    p.validate()?;
    if p.n() < 2 {
        return Err(Error::InvalidParameter("the integral formula needs n >= 2".into()));
    }
    let (b1, b2) = (p.b[0], p.b[1]);
    if b1.re < 1.0 || b2.re < 1.0 {
        return Err(Error::InvalidParameter("quadrature requires Re b1, Re b2 >= 1".into()));
    }
    let lhs = beta(b1, b2) * fd_series(p)?;
    let mut bs = vec![b1 + b2];
    bs.extend_from_slice(&p.b[2..]);
    let rest = p.x[2..].to_vec();
    let integrand = |u: f64| {
        let mut xs = vec![p.x[0] * u + p.x[1] * (1.0 - u)];
        xs.extend_from_slice(&rest);
        let (f, _) = truncated(p.a, &bs, p.c, &xs, p.m);
        // Complex::expf(e, base) is base^e.
        (b1 - 1.0).expf(u) * (b2 - 1.0).expf(1.0 - u) * f
    };
    let rhs = integrate(integrand, 0.0, 1.0, cfg).value;
    Ok(Residual::new(lhs, rhs))
}

/// F_D^(n) against Σ_(k ≤ K) (a)_k (b_n)_k / (k! (c)_k) x_n^k F_D^(n-1)(a+k; b_1..b_(n-1); c+k | x_1..x_(n-1)).
pub fn check_ksum_formula(p: &ClassicalFdParams) -> Result<Residual> {
    p.validate()?;
    let n = p.n();
    if n == 0 {
        return Err(Error::InvalidParameter("the k-summation needs n >= 1".into()));
    }
    let lhs = fd_series(p)?;
    let (bn, xn) = (p.b[n - 1], p.x[n - 1]);
    let mut coef = Complex64::new(1.0, 0.0);
    let mut rhs = Complex64::new(0.0, 0.0);
    for k in 0..=p.k {
        let kf = k as f64;
        let inner = sub_params(p, p.a + kf, p.b[..n - 1].to_vec(), p.c + kf, p.x[..n - 1].to_vec());
        rhs += coef * fd_series(&inner)?;
        coef = coef * (p.a + kf) * (bn + kf) / ((kf + 1.0) * (p.c + kf)) * xn;
    }
    Ok(Residual::new(lhs, rhs))
}

/// F_D^(n)(a; b; Σb | x) against
/// (1-x_n)^(-a) F_D^(n-1)(a; b_1..b_(n-1); Σb | (x_j-x_n)/(1-x_n)).
///
/// The parameter c is ignored and replaced by Σb.
pub fn check_mr_reduction(p: &ClassicalFdParams) -> Result<Residual> {
    let n = p.n();
    if n == 0 {
        return Err(Error::InvalidParameter("the reduction needs n >= 1".into()));
    }
    let c: Complex64 = p.b.iter().sum();
    let full = sub_params(p, p.a, p.b.clone(), c, p.x.clone());
    full.validate()?;
    let lhs = fd_series(&full)?;
    let xn = p.x[n - 1];
    let one = Complex64::new(1.0, 0.0);
    let xs: Vec<Complex64> = p.x[..n - 1].iter().map(|&xj| (xj - xn) / (one - xn)).collect();
    let inner = sub_params(p, p.a, p.b[..n - 1].to_vec(), c, xs);
    let rhs = (one - xn).powc(-p.a) * fd_series(&inner)?;
    Ok(Residual::new(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(re(3.7), 0), re(1.0));
        assert_eq!(pochhammer(re(1.0), 5), re(120.0));
        // 0.5 · 1.5 · 2.5
        assert!((pochhammer(re(0.5), 3) - re(1.875)).norm() < 1e-15);
    }

    #[test]
    fn fd_series_edge_values() {
        let p = ClassicalFdParams::real(0.4, &[0.3, 0.8], 1.7, &[0.0, 0.0]);
        assert_eq!(fd_series(&p).unwrap(), re(1.0));
        // c = a gives Π (1-x_j)^(-b_j).
        let p = ClassicalFdParams::real(1.3, &[1.0, 1.0], 1.3, &[0.5, 0.25]);
        assert!((fd_series(&p).unwrap() - re(8.0 / 3.0)).norm() < 1e-10);
        let p = ClassicalFdParams::real(0.4, &[0.3], 1.7, &[1.0]);
        assert!(matches!(fd_series(&p), Err(Error::Diverged(_))));
        let p = ClassicalFdParams::real(0.4, &[0.3], -2.0, &[0.5]);
        assert!(matches!(fd_series(&p), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn fd_n1_matches_gauss_series() {
        let p = ClassicalFdParams::real(0.3, &[0.7], 1.1, &[0.4]);
        let g = gauss_2f1(re(0.7), re(0.3), re(1.1), re(0.4)).unwrap();
        assert!((fd_series(&p).unwrap() - g).norm() < 1e-13);
    }

    #[test]
    fn gauss_closed_forms() {
        // 2F1(1, 1; 2; x) = -ln(1-x)/x.
        let x = 0.6;
        let v = gauss_2f1(re(1.0), re(1.0), re(2.0), re(x)).unwrap();
        assert!((v.re + (1.0 - x).ln() / x).abs() < 1e-13);
        // 2F1(a, b; b; x) = (1-x)^(-a), complex x.
        let z = Complex64::new(0.2, 0.3);
        let v = gauss_2f1(re(0.7), re(2.1), re(2.1), z).unwrap();
        assert!((v - (re(1.0) - z).powc(re(-0.7))).norm() < 1e-13);
    }

    #[test]
    fn tail_estimate_is_small_at_acceptance_points() {
        let p = ClassicalFdParams::real(0.5, &[1.5, 2.0], 2.5, &[0.3, 0.1]);
        let s = fd_series_detail(&p).unwrap();
        assert!(s.tail_estimate < 1e-20, "{}", s.tail_estimate);
        let mut coarse = p.clone();
        coarse.m = 5;
        let c = fd_series_detail(&coarse).unwrap();
        // The estimate should be within a couple of orders of the true error.
        let err = (c.value - s.value).norm();
        assert!(c.tail_estimate > err / 100.0 && c.tail_estimate < err * 100.0, "{} vs {err}", c.tail_estimate);
    }

    #[test]
    fn integral_formula() {
        let cfg = QuadratureConfig::default();
        let p = ClassicalFdParams::real(0.5, &[1.5, 2.0], 2.5, &[0.3, 0.1]);
        assert!(check_integral_formula(&p, &cfg).unwrap().residual < INTEGRAL_TOL);
        let p = ClassicalFdParams::real(0.5, &[1.5, 2.0], 2.5, &[0.3, 0.3]);
        assert!(check_integral_formula(&p, &cfg).unwrap().residual < 1e-12);
        let p = ClassicalFdParams::real(0.7, &[1.0, 1.0], 1.9, &[0.4, -0.2]);
        assert!(check_integral_formula(&p, &cfg).unwrap().residual < INTEGRAL_TOL);
        let p = ClassicalFdParams::real(0.7, &[1.2, 1.1, 0.6], 1.9, &[0.4, -0.2, 0.3]);
        assert!(check_integral_formula(&p, &cfg).unwrap().residual < INTEGRAL_TOL);
        let p = ClassicalFdParams::real(0.5, &[0.5, 2.0], 2.5, &[0.3, 0.1]);
        assert!(check_integral_formula(&p, &cfg).is_err());
    }

    #[test]
    fn ksum_formula() {
        let p = ClassicalFdParams::real(0.4, &[0.8, 1.2], 1.9, &[0.3, 0.2]);
        assert!(check_ksum_formula(&p).unwrap().residual < SERIES_TOL);
        let p = ClassicalFdParams::real(0.4, &[0.8, 1.2], 1.9, &[0.3, 0.0]);
        assert!(check_ksum_formula(&p).unwrap().residual < 1e-12);
        // n = 1: the right side is the Gauss series.
        let p = ClassicalFdParams::real(0.4, &[0.8], 1.9, &[0.3]);
        let r = check_ksum_formula(&p).unwrap();
        let g = gauss_2f1(re(0.4), re(0.8), re(1.9), re(0.3)).unwrap();
        assert!((r.rhs - g).norm() < 1e-13 && r.residual < 1e-13);
    }

    #[test]
    fn mr_reduction() {
        let p = ClassicalFdParams::real(0.6, &[0.7, 0.9], 0.0, &[0.2, 0.4]);
        assert!(check_mr_reduction(&p).unwrap().residual < SERIES_TOL);
        let p = ClassicalFdParams::real(0.6, &[0.7, 0.9], 0.0, &[0.2, 0.0]);
        assert!(check_mr_reduction(&p).unwrap().residual < 1e-12);
        let p = ClassicalFdParams::real(0.6, &[0.7, 0.9, 0.4], 0.0, &[0.3, 0.3, 0.3]);
        let r = check_mr_reduction(&p).unwrap();
        assert!((r.lhs - re(0.7f64.powf(-0.6))).norm() < 1e-10 && r.residual < 1e-10);
    }

    #[test]
    fn symmetric_and_convergent() {
        let p = ClassicalFdParams::real(0.6, &[0.7, 0.9, 1.3], 1.6, &[0.2, -0.4, 0.35]);
        let q = ClassicalFdParams::real(0.6, &[1.3, 0.7, 0.9], 1.6, &[0.35, 0.2, -0.4]);
        assert!((fd_series(&p).unwrap() - fd_series(&q).unwrap()).norm() < 1e-12);
        for p in [
            ClassicalFdParams::real(0.5, &[1.5, 2.0], 2.5, &[0.3, 0.1]),
            ClassicalFdParams::real(0.4, &[0.8, 1.2], 1.9, &[0.3, 0.2]),
            ClassicalFdParams::real(0.6, &[0.7, 0.9], 1.6, &[0.2, 0.4]),
        ] {
            let mut doubled = p.clone();
            doubled.m *= 2;
            assert!((fd_series(&p).unwrap() - fd_series(&doubled).unwrap()).norm() < 1e-10);
        }
    }
}
