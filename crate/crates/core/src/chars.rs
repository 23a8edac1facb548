//! Multiplicative characters of F_q*, extended to F_q by χ(0) = 0.
//!
//! Characters are labelled by an exponent m in Z/(q-1): χ_m(g^j) = ζ^(mj)
//! with g the canonical generator of [`FieldTable`] and ζ = ζ_(q-1). The
//! trivial character ε is χ_0, and ε(0) = 0 like every other character.
//! Textbooks often set ε(0) = 1 instead; every ε(x₁⋯x_n) factor in the
//! hypergeometric definitions depends on the zero value here.

use std::fmt;
use std::ops::{Div, Mul};
use std::sync::{Arc, OnceLock};

use crate::cyclo::{CycInt, CycloRing};
use crate::error::{Error, Result};
use crate::field::{build_field_with_cap, prime_power, Elem, FieldTable, DEFAULT_MAX_Q};

/// A multiplicative character χ_m of F_q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Char {
    q: u32,
    m: u32,
}

impl Char {
    /// χ_m over F_q, with m reduced mod q - 1.
    pub fn new(q: u32, m: i64) -> Char {
        assert!(q >= 2, "field order must be at least 2");
        Char {
            q,
            m: m.rem_euclid((q - 1) as i64) as u32,
        }
    }

    pub fn trivial(q: u32) -> Char {
        Char::new(q, 0)
    }

    pub fn q(self) -> u32 {
        self.q
    }

    pub fn exponent(self) -> u32 {
        self.m
    }

    pub fn is_trivial(self) -> bool {
        self.m == 0
    }

    /// The inverse character χ̄ = χ_{-m}.
    pub fn inverse(self) -> Char {
        Char::new(self.q, -(self.m as i64))
    }

    pub fn product(self, other: Char) -> Result<Char> {
        if self.q != other.q {
            return Err(Error::FieldMismatch {
                left: self.q,
                right: other.q,
            });
        }
        Ok(Char::new(self.q, self.m as i64 + other.m as i64))
    }

    pub fn pow(self, k: i64) -> Char {
        Char::new(self.q, self.m as i64 * k)
    }
}

/// Character product; panics when the fields differ (see [`Char::product`]).
impl Mul for Char {
    type Output = Char;
    fn mul(self, rhs: Char) -> Char {
        self.product(rhs).expect("character field mismatch")
    }
}

/// `a / b` is a·b̄.
impl Div for Char {
    type Output = Char;
    fn div(self, rhs: Char) -> Char {
        self * rhs.inverse()
    }
}

impl fmt::Display for Char {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi_{}", self.m)
    }
}

/// Largest q for which the binomial table is cached.
const BINOM_CACHE_MAX_Q: u32 = 256;

/// A finite field together with its character values ring Z[ζ_(q-1)].
///
/// All character sums in the crate are evaluated through an `Fq`.
pub struct Fq {
    field: Arc<FieldTable>,
    ring: Arc<CycloRing>,
    /// dlog(-1): (q-1)/2 in odd characteristic, 0 in characteristic 2.
    log_minus_one: u32,
    pub(crate) binom_cache: OnceLock<Vec<CycInt>>,
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Fq").field("field", &self.field).finish()
    }
}

impl Fq {
    pub fn new(p: u64, k: u32) -> Result<Fq> {
        Self::with_cap(p, k, DEFAULT_MAX_Q)
    }

    pub fn with_cap(p: u64, k: u32, max_q: u64) -> Result<Fq> {
        Ok(Self::from_field(build_field_with_cap(p, k, max_q)?))
    }

    /// F_q for a prime power q.
    pub fn of_order(q: u64) -> Result<Fq> {
        let (p, k) = prime_power(q)?;
        Self::new(p as u64, k)
    }

    pub fn from_field(field: FieldTable) -> Fq {
        let ring = CycloRing::get(field.order()).expect("q - 1 within cyclotomic order cap");
        let log_minus_one = field.dlog(field.minus_one()).expect("-1 is nonzero");
        Fq {
            field: Arc::new(field),
            ring,
            log_minus_one,
            binom_cache: OnceLock::new(),
        }
    }

    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    pub fn ring(&self) -> &Arc<CycloRing> {
        &self.ring
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    /// q - 1, the order of the character group.
    pub fn order(&self) -> u32 {
        self.field.order()
    }

    pub(crate) fn binom_cacheable(&self) -> bool {
        self.q() <= BINOM_CACHE_MAX_Q
    }

    pub(crate) fn log_minus_one(&self) -> u32 {
        self.log_minus_one
    }

    /// χ_m over this field.
    pub fn chr(&self, m: i64) -> Char {
        Char::new(self.q(), m)
    }

    pub fn trivial(&self) -> Char {
        self.chr(0)
    }

    /// Validates an exponent given as a label (e.g. from the command line).
    pub fn char_checked(&self, m: u64) -> Result<Char> {
        if m < self.order() as u64 {
            Ok(self.chr(m as i64))
        } else {
            Err(Error::InvalidCharacter { m, q: self.q() })
        }
    }

    pub fn check(&self, c: Char) -> Result<Char> {
        if c.q == self.q() {
            Ok(c)
        } else {
            Err(Error::FieldMismatch {
                left: self.q(),
                right: c.q,
            })
        }
    }

    /// Every character, in exponent order 0..q-2.
    pub fn all_chars(&self) -> impl Iterator<Item = Char> + '_ {
        (0..self.order()).map(|m| self.chr(m as i64))
    }

    pub fn inverse(&self, c: Char) -> Char {
        c.inverse()
    }

    pub fn product(&self, a: Char, b: Char) -> Result<Char> {
        self.check(a)?;
        a.product(b)
    }

    /// Exponent e with χ(x) = ζ^e, or `None` when x = 0.
    #[inline]
    pub fn eval_exp(&self, c: Char, x: Elem) -> Option<u32> {
        if x.is_zero() {
            return None;
        }
        let n = self.order() as u64;
        Some(((c.m as u64 * self.field.log_unchecked(x) as u64) % n) as u32)
    }

    /// χ(x) as a cyclotomic integer.
    pub fn eval(&self, c: Char, x: Elem) -> CycInt {
        match self.eval_exp(c, x) {
            None => self.ring.zero(),
            Some(e) => self.ring.zeta_pow(e as i64),
        }
    }

    /// χ(-1) as ±1.
    pub fn sign(&self, c: Char) -> i64 {
        let n = self.order() as u64;
        if (c.m as u64 * self.log_minus_one as u64) % n == 0 {
            1
        } else {
            -1
        }
    }

    /// δ(χ): 1 for the trivial character, else 0.
    pub fn delta_char(&self, c: Char) -> CycInt {
        self.ring.from_int(c.is_trivial() as i64)
    }

    /// δ(x): 1 at x = 0, else 0.
    pub fn delta_elem(&self, x: Elem) -> CycInt {
        self.ring.from_int(x.is_zero() as i64)
    }

    pub fn zero(&self) -> CycInt {
        self.ring.zero()
    }

    pub fn int(&self, m: i64) -> CycInt {
        self.ring.from_int(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_over_f5() {
        let f = Fq::new(5, 1).unwrap();
        let eps = f.trivial();
        assert!(f.eval(eps, Elem::ZERO).is_zero());
        assert_eq!(f.eval(eps, f.field().elem(3).unwrap()), f.int(1));
        // 2 is not a square mod 5.
        let phi = f.chr(2);
        let two = f.field().elem(2).unwrap();
        assert!(!(1..5u64).any(|y| (y * y) % 5 == 2));
        assert_eq!(f.eval(phi, two), f.int(-1));
    }

    #[test]
    fn group_operations() {
        let f = Fq::new(5, 1).unwrap();
        assert_eq!(f.delta_char(f.trivial()), f.int(1));
        assert_eq!(f.delta_char(f.chr(1)), f.int(0));
        assert_eq!(f.product(f.chr(1), f.chr(3)).unwrap(), f.trivial());
        assert_eq!(f.chr(1).inverse(), f.chr(3));
        assert_eq!(f.all_chars().map(Char::exponent).collect::<Vec<_>>(), [0, 1, 2, 3]);
        let g = Fq::new(7, 1).unwrap();
        assert_eq!(
            f.product(f.chr(1), g.chr(1)).unwrap_err(),
            Error::FieldMismatch { left: 5, right: 7 }
        );
        assert!(f.char_checked(4).is_err());
        assert_eq!(f.delta_elem(Elem::ZERO), f.int(1));
        assert_eq!(f.delta_elem(Elem::ONE), f.int(0));
    }

    #[test]
    fn sign_matches_eval() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 13] {
            let f = Fq::of_order(q).unwrap();
            let m1 = f.field().minus_one();
            for c in f.all_chars() {
                assert_eq!(f.eval(c, m1), f.int(f.sign(c)));
            }
        }
    }

    #[test]
    fn orthogonality() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 49, 64] {
            let f = Fq::of_order(q).unwrap();
            for c in f.all_chars() {
                let mut counts = vec![0i64; f.order() as usize];
                for x in f.field().nonzero_elements() {
                    counts[f.eval_exp(c, x).unwrap() as usize] += 1;
                }
                let s = f.ring().from_group_ring(&counts);
                let expect = if c.is_trivial() { (q - 1) as i64 } else { 0 };
                assert_eq!(s, f.int(expect), "q={q} chi={c}");
            }
        }
    }

    #[test]
    fn multiplicative_including_zero() {
        for q in [3u64, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = Fq::of_order(q).unwrap();
            let fld = f.field();
            for c in f.all_chars() {
                for x in fld.elements() {
                    let cx = f.eval(c, x);
                    if !x.is_zero() {
                        assert_eq!(&cx * &f.eval(c.inverse(), x), f.int(1));
                    }
                    for y in fld.elements() {
                        assert_eq!(f.eval(c, fld.mul(x, y)), &cx * &f.eval(c, y));
                    }
                }
            }
        }
    }
}
