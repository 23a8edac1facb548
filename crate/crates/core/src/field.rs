//! Small finite fields F_q, q = p^k, materialized as lookup tables.
//!
//! Elements are identified by their index: the base-p digit vector of the
//! polynomial representative, constant term in the least significant digit.
//! For prime fields the index is simply the residue.
//!
//! Construction is canonical. The modulus is the lexicographically smallest
//! monic irreducible polynomial of degree k, where the comparison runs over
//! the non-leading coefficients from x^(k-1) down to the constant term (the
//! constant term is compared last). For k = 1 the modulus is x. The generator
//! is the smallest element index of multiplicative order q - 1.

use std::fmt;

use crate::error::{Error, Result};

/// Default cap on q for [`build_field`].
pub const DEFAULT_MAX_Q: u64 = 4096;

/// Largest q for which the full addition table is materialized.
const ADD_TABLE_MAX_Q: u32 = 1024;

/// A field element, by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An immutable, fully tabulated finite field.
#[derive(Clone)]
pub struct FieldTable {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, coefficients low to high (length k + 1).
    modulus: Vec<u32>,
    generator: Elem,
    /// `log[x]` for nonzero x; `log[0]` is unused.
    log: Vec<u32>,
    /// `exp[j] = g^j` for j in 0..q-1.
    exp: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u16>>,
}

impl fmt::Debug for FieldTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldTable")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("q", &self.q)
            .field("modulus", &self.modulus_string())
            .field("generator", &self.generator)
            .finish()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power q into (p, k).
pub fn prime_power(q: u64) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 2u64;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut rest = q;
    let mut k = 0u32;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p as u32, k))
}

/// Builds F_{p^k} with the default size cap.
pub fn build_field(p: u64, k: u32) -> Result<FieldTable> {
    build_field_with_cap(p, k, DEFAULT_MAX_Q)
}

/// Builds F_{p^k}, refusing fields with more than `max_q` elements.
pub fn build_field_with_cap(p: u64, k: u32, max_q: u64) -> Result<FieldTable> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k < 1 {
        return Err(Error::InvalidDegree(k));
    }
    let q = p
        .checked_pow(k)
        .filter(|&q| q <= max_q && q <= u32::MAX as u64)
        .ok_or(Error::TooLarge {
            q: p.saturating_pow(k),
            max: max_q,
        })?;
    FieldTable::construct(p as u32, k, q as u32)
}

impl FieldTable {
    fn construct(p: u32, k: u32, q: u32) -> Result<Self> {
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, k as usize)
        };
        let poly = PolyArith {
            p,
            k: k as usize,
            modulus: &modulus,
        };
        let order = q - 1;

        // Smallest primitive element by index.
        let mut generator = None;
        let mut powers = Vec::with_capacity(order as usize);
        for cand in 1..q {
            powers.clear();
            let g = poly.digits(cand);
            let mut cur = poly.digits(1);
            let mut primitive = true;
            for j in 0..order {
                let idx = poly.index(&cur);
                if j > 0 && idx == 1 {
                    primitive = false;
                    break;
                }
                powers.push(idx);
                cur = poly.mul(&cur, &g);
            }
            if primitive {
                generator = Some(Elem(cand));
                break;
            }
        }
        let generator = generator.expect("finite field multiplicative group is cyclic");

        let exp = powers;
        let mut log = vec![0u32; q as usize];
        for (j, &x) in exp.iter().enumerate() {
            log[x as usize] = j as u32;
        }

        let neg: Vec<u32> = (0..q)
            .map(|x| {
                let d: Vec<u32> = poly.digits(x).iter().map(|&c| (p - c) % p).collect();
                poly.index(&d)
            })
            .collect();

        let add = (q <= ADD_TABLE_MAX_Q).then(|| {
            let mut table = vec![0u16; (q as usize) * (q as usize)];
            for x in 0..q {
                for y in 0..q {
                    table[(x * q + y) as usize] = digit_add(p, q, x, y) as u16;
                }
            }
            table
        });

        Ok(FieldTable {
            p,
            k,
            q,
            modulus,
            generator,
            log,
            exp,
            neg,
            add,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Order of the multiplicative group, q - 1.
    pub fn order(&self) -> u32 {
        self.q - 1
    }

    /// Monic modulus, coefficients from the constant term upward.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    pub fn minus_one(&self) -> Elem {
        self.neg(Elem::ONE)
    }

    /// Validates an element index.
    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index < self.q as u64 {
            Ok(Elem(index as u32))
        } else {
            Err(Error::InvalidElement { index, q: self.q })
        }
    }

    /// The image of an integer under Z -> F_q.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.q).map(Elem)
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        match &self.add {
            Some(t) => Elem(t[(x.0 * self.q + y.0) as usize] as u32),
            None => Elem(digit_add(self.p, self.q, x.0, y.0)),
        }
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        Elem(self.neg[x.0 as usize])
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        if x.0 == 0 || y.0 == 0 {
            return Elem::ZERO;
        }
        let n = self.q - 1;
        let e = self.log[x.0 as usize] + self.log[y.0 as usize];
        Elem(self.exp[(if e >= n { e - n } else { e }) as usize])
    }

    pub fn inv(&self, x: Elem) -> Result<Elem> {
        if x.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let n = self.q - 1;
        Ok(Elem(self.exp[((n - self.log[x.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// Discrete logarithm base the canonical generator.
    pub fn dlog(&self, x: Elem) -> Result<u32> {
        if x.0 == 0 {
            Err(Error::ZeroLog)
        } else {
            Ok(self.log[x.0 as usize])
        }
    }

    /// Like [`dlog`](Self::dlog) but without the zero check; `x` must be nonzero.
    #[inline]
    pub(crate) fn log_unchecked(&self, x: Elem) -> u32 {
        debug_assert!(x.0 != 0);
        self.log[x.0 as usize]
    }

    /// g^j for any integer exponent.
    pub fn gen_pow(&self, j: i64) -> Elem {
        let n = (self.q - 1) as i64;
        Elem(self.exp[j.rem_euclid(n) as usize])
    }

    /// Multiplication by schoolbook polynomial arithmetic, independent of the
    /// log tables. Used to cross-check them.
    pub fn mul_poly(&self, x: Elem, y: Elem) -> Elem {
        let poly = PolyArith {
            p: self.p,
            k: self.k as usize,
            modulus: &self.modulus,
        };
        Elem(poly.index(&poly.mul(&poly.digits(x.0), &poly.digits(y.0))))
    }

    pub fn modulus_string(&self) -> String {
        poly_to_string(&self.modulus)
    }
}

fn digit_add(p: u32, q: u32, mut x: u32, mut y: u32) -> u32 {
    if q == p {
        let s = x + y;
        return if s >= p { s - p } else { s };
    }
    let mut out = 0u32;
    let mut place = 1u32;
    while x > 0 || y > 0 {
        out += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
    }
    out
}

struct PolyArith<'a> {
    p: u32,
    k: usize,
    modulus: &'a [u32],
}

impl PolyArith<'_> {
    fn digits(&self, mut idx: u32) -> Vec<u32> {
        let mut d = vec![0u32; self.k];
        for c in d.iter_mut() {
            *c = idx % self.p;
            idx /= self.p;
        }
        d
    }

    fn index(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * self.k];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Reduce by the monic modulus from the top down.
        for deg in (self.k..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for i in 0..self.k {
                let sub = c * self.modulus[i] as u64 % p;
                let slot = &mut prod[deg - self.k + i];
                *slot = (*slot + p - sub) % p;
            }
        }
        prod.truncate(self.k);
        prod.into_iter().map(|c| c as u32).collect()
    }
}

/// Remainder of `f` modulo the monic `g` over Z_p (coefficients low to high).
fn poly_rem(p: u32, f: &[u32], g: &[u32]) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if c != 0 {
            for (i, &gc) in g.iter().enumerate() {
                let slot = &mut r[shift + i];
                *slot = (*slot + p - c * gc as u64 % p) % p;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// All monic polynomials of the given degree, as low-to-high coefficient
/// vectors, in lex order of (a_{d-1}, ..., a_0).
fn monic_polys(p: u32, degree: usize) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(degree as u32);
    (0..count).map(move |mut rank| {
        let mut coeffs = vec![0u32; degree + 1];
        coeffs[degree] = 1;
        // The rank's most significant base-p digit is a_{d-1}; the least is a_0.
        for c in coeffs.iter_mut().take(degree) {
            *c = (rank % p as u64) as u32;
            rank /= p as u64;
        }
        coeffs
    })
}

fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for g in monic_polys(p, d) {
            if poly_rem(p, f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, k: usize) -> Vec<u32> {
    monic_polys(p, k)
        .find(|f| is_irreducible(p, f))
        .expect("irreducible polynomials exist in every degree")
}

fn poly_to_string(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match deg {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{deg}"),
        };
        terms.push(match (c, deg) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_by_powering(f: &FieldTable, x: Elem) -> u32 {
        let mut cur = x;
        let mut ord = 1;
        while cur != Elem::ONE {
            cur = f.mul_poly(cur, x);
            ord += 1;
        }
        ord
    }

    #[test]
    fn prime_field_generator() {
        let f = build_field(5, 1).unwrap();
        assert_eq!(f.q(), 5);
        assert_eq!(f.generator(), Elem(2));
        assert_eq!(f.modulus(), &[0, 1]);
    }

    #[test]
    fn f4_modulus() {
        let f = build_field(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.modulus_string(), "x^2 + x + 1");
        // x * x = x + 1; x is index 2, x + 1 is index 3.
        assert_eq!(f.mul(Elem(2), Elem(2)), Elem(3));
    }

    #[test]
    fn f9_generator_has_full_order() {
        let f = build_field(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        assert_eq!(order_by_powering(&f, f.generator()), 8);
        // Smaller indices are not primitive.
        for i in 1..f.generator().index() {
            assert!(order_by_powering(&f, Elem(i)) < 8);
        }
    }

    #[test]
    fn small_examples() {
        let f5 = build_field(5, 1).unwrap();
        assert_eq!(f5.add(Elem(3), Elem(4)), Elem(2));
        assert_eq!(f5.dlog(Elem(4)).unwrap(), 2);
        assert_eq!(f5.dlog(f5.generator()).unwrap(), 1);
        assert_eq!(f5.inv(Elem(0)), Err(Error::ZeroInverse));
        assert_eq!(f5.dlog(Elem(0)), Err(Error::ZeroLog));
        assert_eq!(f5.neg(Elem(2)), Elem(3));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(build_field(6, 1).unwrap_err(), Error::NotPrime(6));
        assert_eq!(build_field(5, 0).unwrap_err(), Error::InvalidDegree(0));
        assert!(matches!(
            build_field(2, 13).unwrap_err(),
            Error::TooLarge { q: 8192, .. }
        ));
        assert!(build_field_with_cap(2, 13, 1 << 13).is_ok());
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(9).unwrap(), (3, 2));
        assert_eq!(prime_power(13).unwrap(), (13, 1));
        assert_eq!(prime_power(64).unwrap(), (2, 6));
        assert!(prime_power(12).is_err());
        assert!(prime_power(1).is_err());
    }

    #[test]
    fn field_axioms_small() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let f = build_field(p, k).unwrap();
            for x in f.elements() {
                if !x.is_zero() {
                    assert_eq!(f.mul(x, f.inv(x).unwrap()), Elem::ONE);
                }
                assert_eq!(f.add(x, f.neg(x)), Elem::ZERO);
                for y in f.elements() {
                    assert_eq!(f.mul(x, y), f.mul_poly(x, y));
                    for z in f.elements() {
                        assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                        assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                        assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn dlog_is_a_homomorphism() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64] {
            let (p, k) = prime_power(q).unwrap();
            let f = build_field(p as u64, k).unwrap();
            let n = f.order();
            for x in f.nonzero_elements() {
                assert_eq!(f.gen_pow(f.dlog(x).unwrap() as i64), x);
                for y in f.nonzero_elements() {
                    let lhs = f.dlog(f.mul_poly(x, y)).unwrap();
                    assert_eq!(lhs, (f.dlog(x).unwrap() + f.dlog(y).unwrap()) % n);
                }
            }
            for j in 0..n {
                assert_eq!(f.dlog(f.gen_pow(j as i64)).unwrap(), j);
            }
        }
    }

    #[test]
    fn rebuild_is_deterministic() {
        let a = build_field(2, 6).unwrap();
        let b = build_field(2, 6).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.generator(), b.generator());
        assert_eq!(a.exp, b.exp);
        assert_eq!(a.add, b.add);
    }

    #[test]
    fn large_field_uses_digit_addition() {
        let f = build_field(2, 12).unwrap();
        assert!(f.add.is_none());
        assert_eq!(f.add(Elem(0b1010), Elem(0b0110)), Elem(0b1100));
        let g = f.generator();
        assert_eq!(f.mul(g, f.inv(g).unwrap()), Elem::ONE);
    }
}
