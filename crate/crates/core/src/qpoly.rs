//! Exact univariate polynomials in `q` over the rationals.
//!
//! Every character degree, bound and group order in this crate is a [`QPoly`].
//! Coefficients are stored as integer numerators over one positive common
//! denominator, which keeps evaluation at integer `q` in pure integer
//! arithmetic.

use std::collections::HashMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial `sum_i (num[i] / den) q^i`.
///
/// Invariants: `den > 0`, no trailing zero numerator, and
/// `gcd(den, num[0], num[1], ...) = 1`. The zero polynomial has no
/// coefficients and `den = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    num: Vec<BigInt>,
    den: BigInt,
}

impl QPoly {
    fn from_parts(num: Vec<BigInt>, den: BigInt) -> Self {
        let mut p = QPoly { num, den };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.num.last().is_some_and(Zero::is_zero) {
            self.num.pop();
        }
        if self.num.is_empty() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    pub fn zero() -> Self {
        QPoly { num: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::constant_int(1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial_int(1, 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn constant_int(c: i64) -> Self {
        Self::monomial_int(c, 0)
    }

    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut num = vec![BigInt::zero(); k + 1];
        let (n, d) = c.into_raw();
        num[k] = n;
        Self::from_parts(num, d)
    }

    pub fn monomial_int(c: i64, k: usize) -> Self {
        Self::monomial(BigRational::from_integer(c.into()), k)
    }

    /// `q^k + c`.
    pub fn q_pow_plus(k: usize, c: i64) -> Self {
        Self::monomial_int(1, k) + Self::constant_int(c)
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_parts(coeffs.iter().map(|&c| BigInt::from(c)).collect(), BigInt::one())
    }

    pub fn from_bigint_coeffs(coeffs: Vec<BigInt>) -> Self {
        Self::from_parts(coeffs, BigInt::one())
    }

    pub fn from_coeffs(coeffs: &[BigRational]) -> Self {
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Self::from_parts(num, den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.num.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        match self.num.get(i) {
            Some(c) => BigRational::new(c.clone(), self.den.clone()),
            None => BigRational::zero(),
        }
    }

    /// Coefficients in ascending order of exponent, without trailing zeros.
    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..self.num.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn leading_coeff(&self) -> BigRational {
        match self.degree() {
            Some(d) => self.coeff(d),
            None => BigRational::zero(),
        }
    }

    /// Common denominator of all coefficients.
    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Integer numerators over [`QPoly::denominator`].
    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_parts(self.num.iter().map(|a| a * c.numer()).collect(), &self.den * c.denom())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut num = vec![BigInt::zero(); k];
        num.extend(self.num.iter().cloned());
        QPoly { num, den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `sum num[i] x^i` for integer `x`, before dividing by the denominator.
    fn eval_numerator(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.num.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact value at an integer.
    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval_bigint(&BigInt::from(x))
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigRational {
        BigRational::new(self.eval_numerator(x), self.den.clone())
    }

    /// Exact value at a rational.
    pub fn eval_at(&self, x: &BigRational) -> BigRational {
        let Some(d) = self.degree() else {
            return BigRational::zero();
        };
        // p(a/b) * b^d = sum num[i] a^i b^(d-i)
        let (a, b) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        let mut bpows = Vec::with_capacity(d + 1);
        for _ in 0..=d {
            bpows.push(bpow.clone());
            bpow *= b;
        }
        for (i, c) in self.num.iter().enumerate().rev() {
            acc = acc * a + c * &bpows[d - i];
        }
        BigRational::new(acc, &self.den * &bpows[d])
    }

    /// Sign of `p(x)` at an integer `x`.
    pub fn sign_at(&self, x: &BigInt) -> std::cmp::Ordering {
        self.eval_numerator(x).cmp(&BigInt::zero())
    }

    /// Quotient and remainder of rational long division.
    pub fn div_rem(&self, d: &QPoly) -> Result<(QPoly, QPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((QPoly::zero(), QPoly::zero()));
        };
        if nd < dd {
            return Ok((QPoly::zero(), self.clone()));
        }
        // Work over integers: scale the remainder so that the divisor's
        // leading numerator divides every step exactly when possible.
        let lead = &d.num[dd];
        let mut rem: Vec<BigRational> = self.num.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / BigRational::from_integer(lead.clone());
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.num.iter().enumerate() {
                let t = &c * BigRational::from_integer(dc.clone());
                rem[k + j] -= t;
            }
            quot[k] = c;
        }
        // self/den_s = (quot * dnum/den_d + rem) / den_s, dnum = d * den_d
        let scale_q = BigRational::new(d.den.clone(), self.den.clone());
        let scale_r = BigRational::new(BigInt::one(), self.den.clone());
        let quot = QPoly::from_coeffs(&quot).scale(&scale_q);
        let rem = QPoly::from_coeffs(&rem[..dd]).scale(&scale_r);
        Ok((quot, rem))
    }

    /// Quotient `self / d`, which must leave no remainder.
    pub fn divide_exact(&self, d: &QPoly) -> Result<QPoly> {
        let (quot, rem) = self.div_rem(d)?;
        if !rem.is_zero() {
            return Err(Error::NonExactDivision(format!("({self}) / ({d}) leaves remainder {rem}")));
        }
        Ok(quot)
    }

    /// Exponent of the lowest nonzero term.
    pub fn q_valuation(&self) -> Result<usize> {
        self.num.iter().position(|c| !c.is_zero()).ok_or(Error::ZeroPolynomial)
    }

    /// Cauchy root bound `1 + max |a_i| / |a_lead|`, rounded up.
    ///
    /// Every complex root of a nonconstant polynomial has absolute value
    /// strictly below this bound.
    pub fn cauchy_bound(&self) -> Result<BigInt> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = self.num[d].abs();
        let max = self.num[..d].iter().map(|c| c.abs()).max().unwrap_or_default();
        Ok(BigInt::one() + ceil_div(&max, &lead))
    }

    /// Fujiwara root bound
    /// `2 max(|a_{d-1}/a_d|, |a_{d-2}/a_d|^(1/2), ..., |a_0/(2 a_d)|^(1/d))`,
    /// each root rounded up to an integer.
    pub fn fujiwara_bound(&self) -> Result<BigInt> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = self.num[d].abs();
        let mut best = BigInt::zero();
        for i in 1..=d {
            let a = self.num[d - i].abs();
            if a.is_zero() {
                continue;
            }
            let den = if i == d { &lead * 2 } else { lead.clone() };
            let r = ceil_root(&a, &den, i as u32);
            if r > best {
                best = r;
            }
        }
        Ok(best * 2)
    }

    /// Integer bound beyond which the polynomial has the sign of its leading
    /// coefficient: the smaller of the Cauchy and Fujiwara bounds.
    pub fn root_bound(&self) -> Result<BigInt> {
        Ok(self.cauchy_bound()?.min(self.fujiwara_bound()?))
    }

    /// Text form: ascending `"num/den"` strings, denominator omitted when 1.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs().iter().map(|c| c.to_string()).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let coeffs = items
            .iter()
            .map(|s| {
                s.as_ref()
                    .trim()
                    .parse::<BigRational>()
                    .map_err(|e| Error::Parse(format!("coefficient {:?}: {e}", s.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(&coeffs))
    }
}

/// True iff `p1(q) < p2(q)` for every integer `q >= q0`.
///
/// Sign of `p2 - p1` is checked directly at every integer in `[q0, B]` where
/// `B` is a root bound; beyond `B` the leading coefficient decides.
pub fn dominates_from(p1: &QPoly, p2: &QPoly, q0: i64) -> bool {
    let diff = p2 - p1;
    let Some(d) = diff.degree() else {
        return false;
    };
    if !diff.num[d].is_positive() {
        return false;
    }
    let bound = match diff.root_bound() {
        Ok(b) => b,
        Err(_) => return false,
    };
    let mut q = BigInt::from(q0);
    while q <= bound {
        if diff.sign_at(&q) != std::cmp::Ordering::Greater {
            return false;
        }
        q += 1;
    }
    true
}

/// True iff `p(q) >= 0` for every integer `q >= q0`.
pub fn nonnegative_from(p: &QPoly, q0: i64) -> bool {
    let Some(d) = p.degree() else {
        return true;
    };
    if !p.num[d].is_positive() {
        return false;
    }
    let bound = match p.root_bound() {
        Ok(b) => b,
        Err(_) => return false,
    };
    let mut q = BigInt::from(q0);
    while q <= bound {
        if p.sign_at(&q) == std::cmp::Ordering::Less {
            return false;
        }
        q += 1;
    }
    true
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

/// Smallest non-negative integer `r` with `r^k * den >= num`.
fn ceil_root(num: &BigInt, den: &BigInt, k: u32) -> BigInt {
    let mut r = (num / den).nth_root(k);
    while r.pow(k) * den < *num {
        r += 1;
    }
    r
}

fn add_vecs(a: &QPoly, b: &QPoly, negate_b: bool) -> QPoly {
    let len = a.num.len().max(b.num.len());
    let mut num = Vec::with_capacity(len);
    for i in 0..len {
        let x = a.num.get(i).map(|c| c * &b.den).unwrap_or_default();
        let y = b.num.get(i).map(|c| c * &a.den).unwrap_or_default();
        num.push(if negate_b { x - y } else { x + y });
    }
    QPoly::from_parts(num, &a.den * &b.den)
}

fn mul_vecs(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() || b.is_zero() {
        return QPoly::zero();
    }
    let mut num = vec![BigInt::zero(); a.num.len() + b.num.len() - 1];
    for (i, x) in a.num.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.num.iter().enumerate() {
            if !y.is_zero() {
                num[i + j] += x * y;
            }
        }
    }
    QPoly::from_parts(num, &a.den * &b.den)
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                $body(self, rhs)
            }
        }
        impl $tr<QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                $body(&self, &rhs)
            }
        }
        impl $tr<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                $body(&self, rhs)
            }
        }
        impl $tr<QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_vecs(a, b, false));
forward_binop!(Sub, sub, |a, b| add_vecs(a, b, true));
forward_binop!(Mul, mul, mul_vecs);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(mut self) -> QPoly {
        for c in &mut self.num {
            *c = -&*c;
        }
        self
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -self.clone()
    }
}

impl Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |a, b| a + b)
    }
}

impl Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |a, b| a * b)
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant_int(c)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = abs.is_one();
            if !unit || i == 0 {
                write!(f, "{abs}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        QPoly::from_strings(&items).map_err(serde::de::Error::custom)
    }
}

/// Exact value of a rational known to be an integer.
pub fn to_integer(x: &BigRational) -> Option<BigInt> {
    x.is_integer().then(|| x.to_integer())
}

/// Value as `i128` when integral and in range.
pub fn to_i128(x: &BigRational) -> Option<i128> {
    to_integer(x).and_then(|v| v.to_i128())
}

/// The `d`-th cyclotomic polynomial, cached.
pub fn cyclotomic(d: u32) -> Arc<QPoly> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<QPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("cyclotomic cache poisoned").get(&d) {
        return p.clone();
    }
    let p = Arc::new(cyclotomic_uncached(d));
    cache.lock().expect("cyclotomic cache poisoned").entry(d).or_insert(p).clone()
}

// Phi_d = prod_{e | d} (q^e - 1)^{mu(d/e)}, computed in i64 with exact
// division by the monic factors.
fn cyclotomic_uncached(d: u32) -> QPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut numer: Vec<i64> = vec![1];
    let mut denom: Vec<u32> = Vec::new();
    for e in 1..=d {
        if !d.is_multiple_of(e) {
            continue;
        }
        match mobius(d / e) {
            1 => numer = mul_i64(&numer, e),
            -1 => denom.push(e),
            _ => {}
        }
    }
    for e in denom {
        numer = div_i64(&numer, e);
    }
    QPoly::from_int_coeffs(&numer)
}

// p * (q^e - 1)
fn mul_i64(p: &[i64], e: u32) -> Vec<i64> {
    let e = e as usize;
    let mut out = vec![0i64; p.len() + e];
    for (i, &c) in p.iter().enumerate() {
        out[i + e] += c;
        out[i] -= c;
    }
    out
}

// p / (q^e - 1), exact
fn div_i64(p: &[i64], e: u32) -> Vec<i64> {
    let e = e as usize;
    let mut rem = p.to_vec();
    let qlen = p.len() - e;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + e];
        quot[k] = c;
        rem[k + e] = 0;
        rem[k] += c;
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn difference_of_squares() {
        let p = QPoly::q_pow_plus(1, 1) * QPoly::q_pow_plus(1, -1);
        assert_eq!(p, QPoly::from_int_coeffs(&[-1, 0, 1]));
    }

    #[test]
    fn self_subtraction_is_empty() {
        let p = QPoly::from_int_coeffs(&[3, -1, 4]);
        let z = &p - &p;
        assert!(z.is_zero());
        assert!(z.coeffs().is_empty());
        assert!(z.to_strings().is_empty());
    }

    #[test]
    fn simple_sum() {
        let p = QPoly::from_int_coeffs(&[1, 1, 1]) + QPoly::monomial_int(-1, 1);
        assert_eq!(p, QPoly::from_int_coeffs(&[1, 0, 1]));
    }

    #[test]
    fn evaluation() {
        assert_eq!(QPoly::from_int_coeffs(&[1, 1, 1]).eval_int(3), r(13, 1));
        assert_eq!(QPoly::zero().eval_int(17), r(0, 1));
        assert_eq!(QPoly::zero().eval_at(&r(5, 3)), r(0, 1));
        // 1/2 q (q^3-1)(q^2-1)/(q+1) at q = 3
        let q = QPoly::q();
        let p = (q * QPoly::q_pow_plus(3, -1) * QPoly::q_pow_plus(2, -1))
            .divide_exact(&QPoly::q_pow_plus(1, 1))
            .unwrap()
            .scale(&r(1, 2));
        assert_eq!(p.eval_int(3), r(78, 1));
        assert_eq!(p.eval_at(&r(3, 1)), r(78, 1));
    }

    #[test]
    fn rational_evaluation_matches_integer_path() {
        let p = QPoly::from_coeffs(&[r(1, 2), r(-3, 4), r(0, 1), r(5, 6)]);
        let x = r(7, 3);
        let direct = r(1, 2) + r(-3, 4) * &x + r(5, 6) * &x * &x * &x;
        assert_eq!(p.eval_at(&x), direct);
    }

    #[test]
    fn exact_division() {
        let p = QPoly::q_pow_plus(4, -1).divide_exact(&QPoly::q_pow_plus(1, 1)).unwrap();
        assert_eq!(p, QPoly::from_int_coeffs(&[-1, 1, -1, 1]));
        let p = QPoly::q_pow_plus(6, -1).divide_exact(&QPoly::q_pow_plus(2, -1)).unwrap();
        assert_eq!(p, QPoly::from_int_coeffs(&[1, 0, 1, 0, 1]));
        assert!(matches!(
            QPoly::q_pow_plus(3, -1).divide_exact(&QPoly::q_pow_plus(1, 1)),
            Err(Error::NonExactDivision(_))
        ));
        assert_eq!(QPoly::one().divide_exact(&QPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn division_with_rational_divisor() {
        let d = QPoly::from_coeffs(&[r(1, 3), r(2, 5)]);
        let p = QPoly::from_coeffs(&[r(-1, 2), r(0, 1), r(7, 9)]);
        let prod = &p * &d;
        assert_eq!(prod.divide_exact(&d).unwrap(), p);
    }

    #[test]
    fn valuation() {
        assert_eq!(QPoly::from_int_coeffs(&[0, 0, 0, 1, 0, 1]).q_valuation(), Ok(3));
        assert_eq!(QPoly::constant_int(7).q_valuation(), Ok(0));
        assert_eq!(QPoly::zero().q_valuation(), Err(Error::ZeroPolynomial));
        // q (q^10 - 1)/(q^2 - 1)
        let p = (QPoly::q() * QPoly::q_pow_plus(10, -1)).divide_exact(&QPoly::q_pow_plus(2, -1)).unwrap();
        assert_eq!(p.q_valuation(), Ok(1));
    }

    #[test]
    fn domination() {
        let p1 = QPoly::monomial_int(1, 7) - QPoly::monomial_int(1, 5);
        let p2 = QPoly::monomial_int(1, 20) - QPoly::monomial_int(1, 19);
        assert!(dominates_from(&p1, &p2, 2));
        assert!(!dominates_from(&p1, &p1, 2));
        let p1 = QPoly::monomial_int(1, 3);
        let p2 = QPoly::monomial_int(1, 2) + QPoly::constant_int(100);
        assert!(!dominates_from(&p1, &p2, 2));
        // q^3 < q^2 + 100 holds at q = 2..4 only; equality at q = 5.
        assert!(p1.eval_int(4) < p2.eval_int(4));
        assert_eq!(p1.eval_int(5), p2.eval_int(5));
        assert!(p1.eval_int(6) > p2.eval_int(6));
        assert!(dominates_from(&p1, &p2, 2) == dominates_from(&p1, &p2, 5));
    }

    #[test]
    fn domination_needs_the_finite_window() {
        // q^2 - 30q + 200 = (q-10)(q-20): negative strictly between 10 and 20.
        let p1 = QPoly::from_int_coeffs(&[-200, 30]);
        let p2 = QPoly::monomial_int(1, 2);
        assert!(!dominates_from(&p1, &p2, 2));
        assert!(dominates_from(&p1, &p2, 21));
        assert!(!dominates_from(&p1, &p2, 20));
    }

    #[test]
    fn root_bounds() {
        // q^2 - 3q + 2, roots 1 and 2
        let p = QPoly::from_int_coeffs(&[2, -3, 1]);
        assert_eq!(p.cauchy_bound().unwrap(), BigInt::from(4));
        // 2 * max(3, ceil(sqrt(2/2))) = 6
        assert_eq!(p.fujiwara_bound().unwrap(), BigInt::from(6));
        assert_eq!(p.root_bound().unwrap(), BigInt::from(4));
        let p = QPoly::from_coeffs(&[r(-7, 2), r(0, 1), r(1, 3)]);
        // 1 + (7/2)/(1/3) = 11.5 -> 12
        assert_eq!(p.cauchy_bound().unwrap(), BigInt::from(12));
    }

    #[test]
    fn text_round_trip() {
        let p = QPoly::from_coeffs(&[r(1, 2), r(-3, 1), r(0, 1), r(5, 6)]);
        assert_eq!(p.to_strings(), vec!["1/2", "-3", "0", "5/6"]);
        assert_eq!(QPoly::from_strings(&p.to_strings()).unwrap(), p);
        assert!(QPoly::from_strings(&["1/x"]).is_err());
        assert_eq!(p.to_string(), "5/6*q^3 - 3*q + 1/2");
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(*cyclotomic(1), QPoly::from_int_coeffs(&[-1, 1]));
        assert_eq!(*cyclotomic(2), QPoly::from_int_coeffs(&[1, 1]));
        assert_eq!(*cyclotomic(4), QPoly::from_int_coeffs(&[1, 0, 1]));
        assert_eq!(*cyclotomic(6), QPoly::from_int_coeffs(&[1, -1, 1]));
        for m in 1..=40u32 {
            let prod: QPoly = (1..=m).filter(|d| m % d == 0).map(|d| (*cyclotomic(d)).clone()).product();
            assert_eq!(prod, QPoly::q_pow_plus(m as usize, -1), "m = {m}");
        }
        // Phi_105 is the first with a coefficient of absolute value 2.
        assert!(cyclotomic(105).numerators().iter().any(|c| *c == BigInt::from(-2)));
    }
}
