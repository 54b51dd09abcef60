//! Small integer helpers: primes, prime powers, multiplicative orders.

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, f)` with `q = p^f` and `p` prime, or `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut m, mut f) = (q, 0);
    while m % p == 0 {
        m /= p;
        f += 1;
    }
    (m == 1).then_some((p, f))
}

/// All prime powers in `[2, below)`.
pub fn prime_powers_below(below: u64) -> Vec<u64> {
    (2..below).filter(|&q| prime_power(q).is_some()).collect()
}

/// 1 if `ell` divides `m`, else 0.
pub fn kappa(ell: u64, m: u128) -> u8 {
    u8::from(m.is_multiple_of(ell as u128))
}

/// Order of `q` modulo the prime `ell`.
pub fn mult_order(q: u64, ell: u64) -> Result<u64> {
    if ell < 2 {
        return Err(Error::BadInput(format!("modulus {ell} < 2")));
    }
    if q.is_multiple_of(ell) {
        return Err(Error::BadInput(format!("{ell} divides {q}")));
    }
    let base = (q % ell) as u128;
    let mut x = base;
    let mut d = 1;
    while x != 1 {
        x = x * base % ell as u128;
        d += 1;
        if d > ell {
            return Err(Error::BadInput(format!("{q} is not a unit modulo {ell}")));
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_powers() {
        assert_eq!(prime_powers_below(20), vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19]);
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(12), None);
        assert!(is_prime(13) && !is_prime(15));
    }

    #[test]
    fn kappa_values() {
        assert_eq!(kappa(5, 80), 1);
        assert_eq!(kappa(7, 80), 0);
        assert_eq!(kappa(11, 242), 1);
    }

    #[test]
    fn orders() {
        assert_eq!(mult_order(3, 5).unwrap(), 4);
        assert_eq!(mult_order(3, 11).unwrap(), 5);
        for q in [3, 5, 7, 9] {
            assert_eq!(mult_order(q, 2).unwrap(), 1);
        }
        assert!(matches!(mult_order(9, 3), Err(Error::BadInput(_))));
    }
}
