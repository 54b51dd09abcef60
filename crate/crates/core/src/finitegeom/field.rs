//! Finite fields of odd characteristic with precomputed tables.

use std::fmt;

use crate::arith::{is_prime, prime_power};
use crate::error::{Error, Result};

/// Index of a field element: the base-`p` digits of its coordinates in the
/// polynomial basis, lowest digit first. `0` and `1` are the field's zero and
/// one.
pub type Elem = u16;

/// `F_q` with `q = p^f`, `p` odd, given by an explicit irreducible modulus.
#[derive(Clone)]
pub struct Fq {
    p: u32,
    f: u32,
    q: u32,
    /// Monic irreducible modulus, ascending coefficients (length `f + 1`).
    modulus: Vec<u32>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    trace: Vec<u32>,
    square: Vec<bool>,
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{} (p = {}, modulus {:?})", self.q, self.p, self.modulus)
    }
}

fn digits(x: u32, p: u32, f: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(f as usize);
    let mut x = x;
    for _ in 0..f {
        v.push(x % p);
        x /= p;
    }
    v
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic polynomial `m`, coefficients mod `p`.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().expect("nonempty");
        if lead != 0 {
            let shift = a.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - lead * c % p) % p;
            }
        }
    }
    a.resize(dm, 0);
    a
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Whether the monic polynomial `m` of degree `f` has no monic factor of
/// degree between 1 and `f/2`.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let f = m.len() as u32 - 1;
    for d in 1..=f / 2 {
        for low in 0..p.pow(d) {
            let mut g = digits(low, p, d);
            g.push(1);
            let r = poly_rem(m, &g, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible polynomial of degree `f` over `F_p`, ordered by
/// the base-`p` value of its lower coefficients.
fn smallest_irreducible(p: u32, f: u32) -> Vec<u32> {
    (0..p.pow(f))
        .map(|low| {
            let mut m = digits(low, p, f);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(m, p))
        .expect("irreducible polynomials exist in every degree")
}

impl Fq {
    /// The field with `q` elements; `q` must be an odd prime power with
    /// `q <= 65535`.
    pub fn new(q: u64) -> Result<Self> {
        let (p, f) = prime_power(q).ok_or_else(|| Error::BadInput(format!("{q} is not a prime power")))?;
        if p == 2 {
            return Err(Error::BadInput(format!("q = {q} is even; only odd characteristic is supported")));
        }
        if q > u16::MAX as u64 {
            return Err(Error::BadInput(format!("q = {q} is too large")));
        }
        let modulus = if f == 1 { vec![0, 1] } else { smallest_irreducible(p as u32, f) };
        Ok(Self::with_modulus(p as u32, modulus))
    }

    /// The field `F_p[X]/(modulus)`; the modulus must be monic and
    /// irreducible of degree at least 1.
    pub fn from_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if p == 2 || !is_prime(p as u64) {
            return Err(Error::BadInput(format!("characteristic {p} must be an odd prime")));
        }
        if modulus.len() < 2 || *modulus.last().expect("nonempty") != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadInput(format!("modulus {modulus:?} is not monic over F_{p}")));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::BadInput(format!("modulus {modulus:?} is reducible over F_{p}")));
        }
        if (p as u64).pow(modulus.len() as u32 - 1) > u16::MAX as u64 {
            return Err(Error::BadInput("field too large".into()));
        }
        Ok(Self::with_modulus(p, modulus))
    }

    fn with_modulus(p: u32, modulus: Vec<u32>) -> Self {
        let f = modulus.len() as u32 - 1;
        let q = p.pow(f);
        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        let coords: Vec<Vec<u32>> = (0..q).map(|x| digits(x, p, f)).collect();
        for a in 0..n {
            for b in 0..n {
                let s: Vec<u32> = coords[a].iter().zip(&coords[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * n + b] = from_digits(&s, p) as Elem;
                let m = poly_rem(&poly_mul(&coords[a], &coords[b], p), &modulus, p);
                mul[a * n + b] = from_digits(&m, p) as Elem;
            }
        }
        let neg = (0..n).map(|a| (0..n).find(|&b| add[a * n + b] == 0).expect("additive inverse") as Elem).collect();
        let inv = (0..n)
            .map(|a| if a == 0 { 0 } else { (1..n).find(|&b| mul[a * n + b] == 1).expect("inverse") as Elem })
            .collect();
        let mut square = vec![false; n];
        for a in 0..n {
            square[mul[a * n + a] as usize] = true;
        }
        let mut field = Fq { p, f, q, modulus, add, mul, neg, inv, trace: Vec::new(), square };
        field.trace = (0..q as Elem)
            .map(|a| {
                let mut x = a;
                let mut t = a;
                for _ in 1..f {
                    x = field.pow(x, p as u64);
                    t = field.add(t, x);
                }
                debug_assert!((t as u32) < p, "trace lies in the prime field");
                t as u32
            })
            .collect();
        field
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Absolute trace to `F_p`, as an integer in `[0, p)`.
    #[inline]
    pub fn trace(&self, a: Elem) -> u32 {
        self.trace[a as usize]
    }

    /// Whether `a` is a square (zero counts as a square).
    #[inline]
    pub fn is_square(&self, a: Elem) -> bool {
        self.square[a as usize]
    }

    /// The prime-field element `k mod p`.
    pub fn from_int(&self, k: i64) -> Elem {
        k.rem_euclid(self.p as i64) as Elem
    }

    /// Smallest (by index) non-square.
    pub fn nonsquare(&self) -> Elem {
        self.elements().find(|&a| !self.is_square(a)).expect("odd q has non-squares")
    }

    /// `1/2`.
    pub fn half(&self) -> Elem {
        self.inv(self.from_int(2)).expect("odd characteristic")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field() {
        let f = Fq::new(7).unwrap();
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.nonsquare(), 3);
        assert_eq!(f.half(), 4);
        assert_eq!(f.trace(5), 5);
    }

    #[test]
    fn extension_field_axioms() {
        for q in [9, 25, 27] {
            let f = Fq::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements().step_by(3) {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements().step_by(5) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
            // Frobenius fixes exactly the prime field.
            let fixed = f.elements().filter(|&a| f.pow(a, f.p() as u64) == a).count();
            assert_eq!(fixed as u32, f.p());
            // Trace is onto F_p with equal fibres.
            let mut fibres = vec![0; f.p() as usize];
            for a in f.elements() {
                fibres[f.trace(a) as usize] += 1;
            }
            assert!(fibres.iter().all(|&c| c * f.p() == f.size()));
            let squares = f.elements().filter(|&a| a != 0 && f.is_square(a)).count();
            assert_eq!(squares as u32, (f.size() - 1) / 2);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Fq::new(8).is_err());
        assert!(Fq::new(12).is_err());
        // X^2 - 1 splits.
        assert!(Fq::from_modulus(3, vec![2, 0, 1]).is_err());
        let f = Fq::from_modulus(3, vec![1, 0, 1]).unwrap();
        assert_eq!(f.size(), 9);
        assert_eq!(f.mul(3, 3), f.neg(1));
    }
}
