//! Elements of `Z[zeta_p]` in the power basis `1, zeta, ..., zeta^(p-2)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use serde::Serialize;

/// An element of the ring of integers of the `p`-th cyclotomic field, stored
/// as coordinates reduced by `1 + zeta + ... + zeta^(p-1) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycInt {
    p: u32,
    coords: Vec<i128>,
}

impl CycInt {
    pub fn zero(p: u32) -> Self {
        assert!(p >= 2, "p must be at least 2");
        CycInt { p, coords: vec![0; p as usize - 1] }
    }

    pub fn integer(p: u32, c: i128) -> Self {
        let mut z = Self::zero(p);
        z.coords[0] = c;
        z
    }

    /// `c * zeta^k`.
    pub fn root_power(p: u32, k: u32, c: i128) -> Self {
        let mut z = Self::zero(p);
        z.add_root_power(k, c);
        z
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coords(&self) -> &[i128] {
        &self.coords
    }

    /// Adds `c * zeta^k`, rewriting `zeta^(p-1)` as `-(1 + ... + zeta^(p-2))`.
    pub fn add_root_power(&mut self, k: u32, c: i128) {
        let k = k % self.p;
        if k == self.p - 1 {
            self.coords.iter_mut().for_each(|x| *x -= c);
        } else {
            self.coords[k as usize] += c;
        }
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|&c| c == 0)
    }

    /// The integer value, if every non-constant coordinate vanishes.
    pub fn to_integer(&self) -> Option<i128> {
        self.is_rational().then_some(self.coords[0])
    }
}

impl AddAssign<&CycInt> for CycInt {
    fn add_assign(&mut self, rhs: &CycInt) {
        assert_eq!(self.p, rhs.p, "mixed cyclotomic fields");
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a += b;
        }
    }
}

impl Add for CycInt {
    type Output = CycInt;
    fn add(mut self, rhs: CycInt) -> CycInt {
        self += &rhs;
        self
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        assert_eq!(self.p, rhs.p, "mixed cyclotomic fields");
        let mut out = CycInt::zero(self.p);
        for (i, &a) in self.coords.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coords.iter().enumerate() {
                out.add_root_power((i + j) as u32, a * b);
            }
        }
        out
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match k {
                0 => c.to_string(),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_sum_vanishes() {
        let mut z = CycInt::zero(5);
        for k in 0..5 {
            z.add_root_power(k, 1);
        }
        assert_eq!(z.to_integer(), Some(0));
        let mut w = CycInt::zero(7);
        w.add_root_power(3, 2);
        assert!(!w.is_rational());
    }

    #[test]
    fn multiplication_wraps() {
        let z = CycInt::root_power(3, 1, 1);
        let z2 = &z * &z;
        assert_eq!(z2, CycInt::root_power(3, 2, 1));
        assert_eq!((&z2 * &z).to_integer(), Some(1));
    }
}
