//! Exact arithmetic in Z[ζ_n].
//!
//! Elements are stored in the power basis 1, ζ, …, ζ^(φ(n)-1), i.e. as the
//! remainder modulo the n-th cyclotomic polynomial Φ_n. Since Φ_n is monic,
//! reduction never leaves the integers, and two elements are equal exactly
//! when their coefficient vectors are.
//!
//! Coefficients are `i64`. Intermediate products are accumulated in `i128`
//! and converted back with an overflow check; character sums over fields of
//! a few thousand elements stay many orders of magnitude below the limit.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported root-of-unity order.
pub const MAX_ORDER: u32 = 1 << 16;

fn check_order(n: u32) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        Err(Error::InvalidParameter(format!(
            "cyclotomic order must be in 1..={MAX_ORDER}, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Φ_n as integer coefficients, constant term first.
///
/// Computed as (x^n - 1) divided exactly by Φ_d for every proper divisor d.
pub fn cyclotomic_poly(n: u32) -> Result<Vec<i64>> {
    check_order(n)?;
    let mut memo = HashMap::new();
    Ok(cyclotomic_rec(n, &mut memo))
}

fn cyclotomic_rec(n: u32, memo: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_rec(d, memo);
            num = div_exact_monic(&num, &phi_d);
        }
    }
    memo.insert(n, num.clone());
    num
}

fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dc) in den.iter().enumerate() {
                rem[i + j] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "cyclotomic division not exact");
    quot
}

/// The ring Z[ζ_n] together with its reduction data.
#[derive(Debug)]
pub struct CycloRing {
    n: u32,
    /// Φ_n, constant term first; its degree is φ(n).
    phi: Vec<i64>,
}

impl CycloRing {
    /// Shared ring of order `n`, built once per process.
    pub fn get(n: u32) -> Result<Arc<CycloRing>> {
        check_order(n)?;
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloRing>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(r) = guard.get(&n) {
            return Ok(Arc::clone(r));
        }
        let ring = Arc::new(CycloRing {
            n,
            phi: cyclotomic_poly(n)?,
        });
        guard.insert(n, Arc::clone(&ring));
        Ok(ring)
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    /// φ(n), the rank of Z[ζ_n] over Z.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn cyclotomic_poly(&self) -> &[i64] {
        &self.phi
    }

    pub fn zero(self: &Arc<Self>) -> CycInt {
        CycInt {
            ring: Arc::clone(self),
            coeffs: vec![0; self.degree()],
        }
    }

    pub fn from_int(self: &Arc<Self>, m: i64) -> CycInt {
        let mut z = self.zero();
        z.coeffs[0] = m;
        z
    }

    pub fn one(self: &Arc<Self>) -> CycInt {
        self.from_int(1)
    }

    /// ζ_n^j for any integer j.
    pub fn zeta_pow(self: &Arc<Self>, j: i64) -> CycInt {
        let e = j.rem_euclid(self.n as i64) as usize;
        let mut buf = vec![0i128; e.max(self.degree()) + 1];
        buf[e] = 1;
        self.reduce(buf)
    }

    /// Maps an element of Z[x]/(x^n - 1), given by its coefficients on
    /// 1, x, …, x^(n-1), to its canonical form.
    pub fn from_group_ring(self: &Arc<Self>, counts: &[i64]) -> CycInt {
        assert_eq!(counts.len(), self.n as usize, "group-ring vector length");
        self.reduce(counts.iter().map(|&c| c as i128).collect())
    }

    /// Reduces a polynomial in ζ modulo Φ_n.
    fn reduce(self: &Arc<Self>, mut buf: Vec<i128>) -> CycInt {
        let d = self.degree();
        if buf.len() < d {
            buf.resize(d, 0);
        }
        for deg in (d..buf.len()).rev() {
            let c = buf[deg];
            if c == 0 {
                continue;
            }
            buf[deg] = 0;
            for (i, &pc) in self.phi[..d].iter().enumerate() {
                if pc != 0 {
                    buf[deg - d + i] -= c * pc as i128;
                }
            }
        }
        buf.truncate(d);
        let coeffs = buf
            .into_iter()
            .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
            .collect();
        CycInt {
            ring: Arc::clone(self),
            coeffs,
        }
    }
}

/// ζ_n^j in the shared ring of order n.
pub fn zeta_pow(n: u32, j: i64) -> Result<CycInt> {
    Ok(CycloRing::get(n)?.zeta_pow(j))
}

/// The integer m in Z[ζ_n].
pub fn from_int(n: u32, m: i64) -> Result<CycInt> {
    Ok(CycloRing::get(n)?.from_int(m))
}

/// An element of Z[ζ_n] in canonical form.
#[derive(Clone)]
pub struct CycInt {
    ring: Arc<CycloRing>,
    coeffs: Vec<i64>,
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        self.ring.n == other.ring.n && self.coeffs == other.coeffs
    }
}

impl Eq for CycInt {}

impl std::hash::Hash for CycInt {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ring.n.hash(state);
        self.coeffs.hash(state);
    }
}

impl CycInt {
    pub fn order(&self) -> u32 {
        self.ring.n
    }

    pub fn ring(&self) -> &Arc<CycloRing> {
        &self.ring
    }

    /// Coefficients on 1, ζ, …, ζ^(φ(n)-1).
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as an integer, when it lies in Z.
    pub fn as_integer(&self) -> Option<i64> {
        match self.coeffs.split_first() {
            Some((&c0, rest)) if rest.iter().all(|&c| c == 0) => Some(c0),
            _ => None,
        }
    }

    fn check_same(&self, other: &CycInt) -> Result<()> {
        if self.ring.n == other.ring.n {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.ring.n,
                right: other.ring.n,
            })
        }
    }

    pub fn checked_add(&self, other: &CycInt) -> Result<CycInt> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).expect("cyclotomic coefficient overflow"))
            .collect();
        Ok(CycInt {
            ring: Arc::clone(&self.ring),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &CycInt) -> Result<CycInt> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &CycInt) -> Result<CycInt> {
        self.check_same(other)?;
        if let Some(c) = other.as_integer() {
            return Ok(self.scale(c));
        }
        if let Some(c) = self.as_integer() {
            return Ok(other.scale(c));
        }
        let d = self.coeffs.len();
        let mut buf = vec![0i128; 2 * d - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                buf[i + j] += a as i128 * b as i128;
            }
        }
        Ok(self.ring.reduce(buf))
    }

    pub fn scale(&self, m: i64) -> CycInt {
        CycInt {
            ring: Arc::clone(&self.ring),
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.checked_mul(m).expect("cyclotomic coefficient overflow"))
                .collect(),
        }
    }

    /// Multiplies by ζ^j.
    pub fn mul_zeta(&self, j: i64) -> CycInt {
        let n = self.ring.n as i64;
        let e = j.rem_euclid(n) as usize;
        if e == 0 {
            return self.clone();
        }
        let mut buf = vec![0i128; self.coeffs.len() + e];
        for (i, &c) in self.coeffs.iter().enumerate() {
            buf[i + e] = c as i128;
        }
        self.ring.reduce(buf)
    }

    /// Divides every coefficient by `d`, failing unless all divide evenly.
    pub fn div_exact(&self, d: i64) -> Result<CycInt> {
        if d == 0 || self.coeffs.iter().any(|c| c % d != 0) {
            return Err(Error::InexactDivision { divisor: d });
        }
        Ok(CycInt {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().map(|c| c / d).collect(),
        })
    }

    /// Image under Z[ζ_n] -> Z[ζ_m], ζ_n ↦ ζ_m^(m/n).
    pub fn embed(&self, m: u32) -> Result<CycInt> {
        let n = self.ring.n;
        if m == 0 || m % n != 0 {
            return Err(Error::InvalidEmbedding { from: n, to: m });
        }
        let target = CycloRing::get(m)?;
        let step = (m / n) as usize;
        let mut counts = vec![0i64; m as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            counts[i * step] += c;
        }
        Ok(target.from_group_ring(&counts))
    }

    /// Value under the complex embedding ζ_n ↦ e^(2πi/n).
    pub fn to_complex(&self) -> Complex64 {
        let n = self.ring.n as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| Complex64::from_polar(c as f64, TAU * i as f64 / n))
            .sum()
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt[{}]", self)
    }
}

/// Renders `c0 + c1*z + c2*z^2 + ... (z = zeta_n)`, omitting zero terms and the
/// suffix when the value is an integer.
impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_integer() {
            return write!(f, "{c}");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "z")?,
                (1, _) => write!(f, "{mag}*z")?,
                (_, 1) => write!(f, "z^{i}")?,
                _ => write!(f, "{mag}*z^{i}")?,
            }
        }
        write!(f, " (z = zeta_{})", self.ring.n)
    }
}

impl Serialize for CycInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CycInt", 2)?;
        s.serialize_field("order", &self.ring.n)?;
        s.serialize_field("coeffs", &self.coeffs)?;
        s.end()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycInt> for &CycInt {
            type Output = CycInt;
            fn $method(self, rhs: &CycInt) -> CycInt {
                self.$checked(rhs).expect("cyclotomic order mismatch")
            }
        }
        impl $trait<CycInt> for CycInt {
            type Output = CycInt;
            fn $method(self, rhs: CycInt) -> CycInt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycInt> for CycInt {
            type Output = CycInt;
            fn $method(self, rhs: &CycInt) -> CycInt {
                (&self).$method(rhs)
            }
        }
        impl $trait<CycInt> for &CycInt {
            type Output = CycInt;
            fn $method(self, rhs: CycInt) -> CycInt {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(mut self) -> CycInt {
        self.coeffs.iter_mut().for_each(|c| *c = -*c);
        self
    }
}

impl AddAssign<&CycInt> for CycInt {
    fn add_assign(&mut self, rhs: &CycInt) {
        self.check_same(rhs).expect("cyclotomic order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = a.checked_add(*b).expect("cyclotomic coefficient overflow");
        }
    }
}

impl AddAssign<CycInt> for CycInt {
    fn add_assign(&mut self, rhs: CycInt) {
        *self += &rhs;
    }
}

impl SubAssign<&CycInt> for CycInt {
    fn sub_assign(&mut self, rhs: &CycInt) {
        *self += &-rhs;
    }
}

impl SubAssign<CycInt> for CycInt {
    fn sub_assign(&mut self, rhs: CycInt) {
        *self += &-rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1).unwrap(), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2).unwrap(), vec![1, 1]);
        assert_eq!(cyclotomic_poly(4).unwrap(), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(12).unwrap(), vec![1, 0, -1, 0, 1]);
        assert!(cyclotomic_poly(0).is_err());
    }

    /// Oracle for Φ_12: multiply Φ_1Φ_2Φ_3Φ_4Φ_6Φ_12 back together.
    #[test]
    fn phi12_times_divisors_is_x12_minus_1() {
        fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
            let mut out = vec![0; a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            out
        }
        let prod = [1, 2, 3, 4, 6, 12]
            .iter()
            .map(|&d| cyclotomic_poly(d).unwrap())
            .fold(vec![1], |acc, p| mul(&acc, &p));
        let mut expected = vec![0; 13];
        expected[0] = -1;
        expected[12] = 1;
        assert_eq!(prod, expected);
    }

    #[test]
    fn basic_values() {
        let i = zeta_pow(4, 1).unwrap();
        assert_eq!(&i * &i, from_int(4, -1).unwrap());
        let w = zeta_pow(3, 1).unwrap() + zeta_pow(3, 2).unwrap();
        assert_eq!(w, from_int(3, -1).unwrap());
        for n in [1u32, 2, 3, 4, 5, 6, 8, 12, 15, 16] {
            let ring = CycloRing::get(n).unwrap();
            assert_eq!(ring.zeta_pow(n as i64), ring.one());
            let total = (0..n as i64).fold(ring.zero(), |acc, j| acc + ring.zeta_pow(j));
            if n > 1 {
                assert!(total.is_zero(), "sum of n-th roots, n={n}");
            } else {
                assert_eq!(total, ring.one());
            }
        }
    }

    #[test]
    fn mismatched_orders() {
        let a = from_int(4, 1).unwrap();
        let b = from_int(6, 1).unwrap();
        assert_eq!(
            a.checked_add(&b).unwrap_err(),
            Error::OrderMismatch { left: 4, right: 6 }
        );
        assert!(a.checked_mul(&b).is_err());
        assert!(a.embed(6).is_err());
    }

    #[test]
    fn display() {
        let ring = CycloRing::get(4).unwrap();
        assert_eq!(ring.from_int(-1).to_string(), "-1");
        assert_eq!(ring.zero().to_string(), "0");
        let v = ring.from_int(3) - ring.zeta_pow(1).scale(2);
        assert_eq!(v.to_string(), "3 - 2*z (z = zeta_4)");
        let r12 = CycloRing::get(12).unwrap();
        assert_eq!(
            (r12.zeta_pow(3) - r12.zeta_pow(1)).to_string(),
            "-z + z^3 (z = zeta_12)"
        );
    }

    #[test]
    fn complex_embedding() {
        let ring = CycloRing::get(12).unwrap();
        for j in 0..12 {
            let z = ring.zeta_pow(j).to_complex();
            let expect = Complex64::from_polar(1.0, TAU * j as f64 / 12.0);
            assert!((z - expect).norm() < 1e-12);
        }
    }

    #[test]
    fn exact_division() {
        let ring = CycloRing::get(6).unwrap();
        let v = (ring.one() + ring.zeta_pow(1)).scale(4);
        assert_eq!(v.div_exact(4).unwrap(), ring.one() + ring.zeta_pow(1));
        assert_eq!(
            v.div_exact(3).unwrap_err(),
            Error::InexactDivision { divisor: 3 }
        );
    }

    /// Naive product in Z[x]/(x^n - 1), reduced only at the end.
    fn naive_mul(n: u32, a: &[i64], b: &[i64]) -> CycInt {
        let ring = CycloRing::get(n).unwrap();
        let mut counts = vec![0i64; n as usize];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                counts[(i + j) % n as usize] += x * y;
            }
        }
        ring.from_group_ring(&counts)
    }

    fn arb_elem(n: u32) -> impl Strategy<Value = CycInt> {
        let d = CycloRing::get(n).unwrap().degree();
        proptest::collection::vec(-50i64..50, n as usize).prop_map(move |c| {
            let ring = CycloRing::get(n).unwrap();
            assert_eq!(ring.degree(), d);
            ring.from_group_ring(&c)
        })
    }

    fn arb_order() -> impl Strategy<Value = u32> {
        prop::sample::select(vec![1u32, 2, 3, 4, 6, 8, 12])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn mul_matches_group_ring_product(
            a in proptest::collection::vec(-20i64..20, 12),
            b in proptest::collection::vec(-20i64..20, 12),
            c in proptest::collection::vec(-20i64..20, 12),
        ) {
            let ring = CycloRing::get(12).unwrap();
            let (x, y, z) = (ring.from_group_ring(&a), ring.from_group_ring(&b), ring.from_group_ring(&c));
            prop_assert_eq!(&x * &y, naive_mul(12, &a, &b));
            prop_assert_eq!(&x * &(&y + &z), &x * &y + &x * &z);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn ring_axioms((x, y, z) in arb_order().prop_flat_map(|n| (arb_elem(n), arb_elem(n), arb_elem(n)))) {
            let ring = x.ring().clone();
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &(&y + &z), &x * &y + &x * &z);
            prop_assert_eq!(&x * &ring.one(), x.clone());
            prop_assert!((&x - &x).is_zero());
            prop_assert_eq!(&x + &(-&x), ring.zero());
        }

        #[test]
        fn embed_is_a_homomorphism((x, y) in arb_order().prop_flat_map(|n| (arb_elem(n), arb_elem(n)))) {
            let m = x.order() * 6;
            prop_assert_eq!((&x * &y).embed(m).unwrap(), &x.embed(m).unwrap() * &y.embed(m).unwrap());
            prop_assert_eq!((&x + &y).embed(m).unwrap(), &x.embed(m).unwrap() + &y.embed(m).unwrap());
            prop_assert!((x.embed(m).unwrap().to_complex() - x.to_complex()).norm() < 1e-6);
        }

        #[test]
        fn mul_zeta_matches_mul(x in arb_elem(12), j in -30i64..30) {
            let ring = x.ring().clone();
            prop_assert_eq!(x.mul_zeta(j), &x * &ring.zeta_pow(j));
        }
    }
}
