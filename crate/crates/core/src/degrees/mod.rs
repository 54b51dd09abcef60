//! Unipotent character degrees from symbols, group orders, and the
//! Jordan-decomposition assembly of the small non-unipotent families.

pub mod family;
pub mod formula;
pub mod tables;

use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qpoly::{cyclotomic, QPoly};
use crate::symbols::{enumerate_symbols, Family, FamilyTag, Symbol, SymbolLabel};

pub use family::{family_table, CentraliserFactor, CharacterEntry, Multiplicity, Series};
pub use formula::{DegreeFormula, Entry, SymbolTemplate};
pub use tables::{unipotent_table, TableRow};

/// `q^k - eps` for the even orthogonal families, as used in group orders.
fn q_pow_minus(k: usize, eps: i64) -> QPoly {
    QPoly::q_pow_plus(k, -eps)
}

/// `prod_{i=1..k} (q^{2i} - 1)`, the p'-part of `|Sp_{2k}(q)|`.
pub fn symplectic_order_part(k: u32) -> QPoly {
    (1..=k as usize).map(|i| QPoly::q_pow_plus(2 * i, -1)).product()
}

/// `(q^k - eps) prod_{i=1..k-1} (q^{2i} - 1)`, the p'-part of `|SO^eps_{2k}(q)|`.
pub fn orthogonal_order_part(k: u32, eps: i64) -> QPoly {
    if k == 0 {
        return QPoly::one();
    }
    q_pow_minus(k as usize, eps) * symplectic_order_part(k - 1)
}

/// The p'-part of the group order for the family at rank `n`.
pub fn order_part(tag: FamilyTag) -> Result<QPoly> {
    if tag.rank < 2 {
        return Err(Error::OutOfRange(format!("rank {} < 2", tag.rank)));
    }
    Ok(match tag.family.epsilon() {
        None => symplectic_order_part(tag.rank),
        Some(eps) => orthogonal_order_part(tag.rank, eps),
    })
}

/// A product `2^two * q^q * prod_d Phi_d^{e_d}` with possibly negative
/// exponents, used to divide without ever leaving the integers.
#[derive(Default, Debug)]
struct Factored {
    two: i64,
    q: i64,
    cyc: BTreeMap<u32, i64>,
}

impl Factored {
    fn add_cyc(&mut self, d: u32, e: i64) {
        *self.cyc.entry(d).or_default() += e;
    }

    /// Multiply by `(q^m - 1)^e`.
    fn q_minus_one(&mut self, m: u64, e: i64) {
        assert!(m > 0);
        for d in divisors(m) {
            self.add_cyc(d as u32, e);
        }
    }

    /// Multiply by `(q^m + 1)^e`; `m = 0` gives the constant 2.
    fn q_plus_one(&mut self, m: u64, e: i64) {
        if m == 0 {
            self.two += e;
            return;
        }
        for d in divisors(2 * m) {
            if !m.is_multiple_of(d) {
                self.add_cyc(d as u32, e);
            }
        }
    }

    /// Multiply by `(q^m - eps)^e`.
    fn q_minus_eps(&mut self, m: u64, eps: i64, e: i64) {
        if eps == 1 {
            self.q_minus_one(m, e)
        } else {
            self.q_plus_one(m, e)
        }
    }

    fn expand(&self, what: &dyn Fn() -> String) -> Result<QPoly> {
        if self.q < 0 {
            return Err(Error::NonExactDivision(format!("{}: negative power of q", what())));
        }
        let mut p = QPoly::one().shift(self.q as usize);
        for (&d, &e) in &self.cyc {
            if e < 0 {
                return Err(Error::NonExactDivision(format!("{}: cyclotomic factor Phi_{d} has exponent {e}", what())));
            }
            for _ in 0..e {
                p = p * &*cyclotomic(d);
            }
        }
        let two = if self.two >= 0 {
            BigRational::from_integer(num_bigint::BigInt::from(2).pow(self.two as u32))
        } else {
            BigRational::new(1.into(), num_bigint::BigInt::from(2).pow((-self.two) as u32))
        };
        Ok(p.scale(&two))
    }
}

fn divisors(m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            if d * d != m {
                out.push(m / d);
            }
        }
        d += 1;
    }
    out
}

fn binom2(x: i64) -> i64 {
    if x < 2 {
        0
    } else {
        x * (x - 1) / 2
    }
}

/// Generic degree of the unipotent character(s) labelled by `symbol` in the
/// family at rank `tag.rank`. For a degenerate symbol this is the degree of
/// each of the two characters.
pub fn generic_degree(symbol: &Symbol, tag: FamilyTag) -> Result<QPoly> {
    if !tag.family.admits_defect(symbol.defect()) {
        return Err(Error::WrongDefectParity { defect: symbol.defect(), family: tag.family.to_string() });
    }
    if symbol.rank() != tag.rank as i64 {
        return Err(Error::OutOfRange(format!("symbol {symbol} has rank {}, expected {}", symbol.rank(), tag.rank)));
    }
    let n = tag.rank as u64;
    if n < 1 {
        return Err(Error::OutOfRange("rank 0".into()));
    }
    let mut f = Factored::default();
    for i in 1..=n {
        if i == n {
            if let Some(eps) = tag.family.epsilon() {
                f.q_minus_eps(n, eps, 1);
                continue;
            }
        }
        f.q_minus_one(2 * i, 1);
    }
    let (x, y) = (symbol.top(), symbol.bottom());
    for row in [x, y] {
        for (i, &lo) in row.iter().enumerate() {
            for &hi in &row[i + 1..] {
                f.q += lo as i64;
                f.q_minus_one((hi - lo) as u64, 1);
            }
        }
    }
    for &a in x {
        for &b in y {
            f.q += a.min(b) as i64;
            f.q_plus_one(a.abs_diff(b) as u64, 1);
        }
    }
    let len = (x.len() + y.len()) as i64;
    f.two -= (len - 1).div_euclid(2);
    f.q -= (1..).map(|i| len - 2 * i).take_while(|&m| m >= 2).map(binom2).sum::<i64>();
    for &v in x.iter().chain(y) {
        for k in 1..=v as u64 {
            f.q_minus_one(2 * k, -1);
        }
    }
    if symbol.is_degenerate() {
        f.two -= 1;
    }
    f.expand(&|| format!("generic degree of ({symbol}) in {tag}"))
}

/// `(index_numerator / index_denominator) * unip_degree`, the degree of the
/// character Jordan-corresponding to a unipotent character of the
/// centraliser.
pub fn jordan_degree(index_numerator: &QPoly, index_denominator: &QPoly, unip_degree: &QPoly) -> Result<QPoly> {
    Ok(index_numerator.divide_exact(index_denominator)? * unip_degree)
}

/// A unipotent character with its generic degree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnipotentCharacter {
    pub label: SymbolLabel,
    pub family: FamilyTag,
    pub degree: QPoly,
}

impl UnipotentCharacter {
    /// Exponent of the largest power of `q` dividing the degree.
    pub fn a_value(&self) -> usize {
        self.degree.q_valuation().expect("degrees are nonzero")
    }
}

/// Every unipotent character of the family at the given rank, in label order.
pub fn unipotent_characters(tag: FamilyTag) -> Result<Vec<UnipotentCharacter>> {
    enumerate_symbols(tag)?
        .into_par_iter()
        .map(|label| {
            let degree = generic_degree(&label.symbol, tag)?;
            Ok(UnipotentCharacter { label, family: tag, degree })
        })
        .collect()
}

/// Degree of the unipotent character in `family` given by a symbol whose rank
/// determines `n`.
pub fn degree_of(symbol: &Symbol, family: Family) -> Result<QPoly> {
    let rank =
        u32::try_from(symbol.rank()).map_err(|_| Error::OutOfRange(format!("symbol {symbol} has negative rank")))?;
    generic_degree(symbol, FamilyTag::new(family, rank))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> Symbol {
        s.parse().unwrap()
    }

    fn qp(k: usize, c: i64) -> QPoly {
        QPoly::q_pow_plus(k, c)
    }

    #[test]
    fn order_parts() {
        assert_eq!(order_part(FamilyTag::new(Family::BC, 2)).unwrap(), qp(2, -1) * qp(4, -1));
        assert_eq!(
            order_part(FamilyTag::new(Family::DPlus, 4)).unwrap(),
            qp(4, -1) * qp(2, -1) * qp(4, -1) * qp(6, -1)
        );
        assert_eq!(
            order_part(FamilyTag::new(Family::DMinus, 4)).unwrap(),
            qp(4, 1) * qp(2, -1) * qp(4, -1) * qp(6, -1)
        );
    }

    #[test]
    fn bc_row() {
        let d = generic_degree(&sym("0,1,6;"), FamilyTag::new(Family::BC, 6)).unwrap();
        let expect = (QPoly::q() * qp(6, -1) * qp(5, -1))
            .divide_exact(&qp(1, 1))
            .unwrap()
            .scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(d, expect);
    }

    #[test]
    fn trivial_characters() {
        for n in 2..8 {
            assert_eq!(degree_of(&Symbol::new(vec![n], vec![]).unwrap(), Family::BC).unwrap(), QPoly::one());
            assert_eq!(degree_of(&Symbol::new(vec![n], vec![0]).unwrap(), Family::DPlus).unwrap(), QPoly::one());
            assert_eq!(degree_of(&Symbol::new(vec![0, n], vec![]).unwrap(), Family::DMinus).unwrap(), QPoly::one());
        }
    }

    #[test]
    fn degenerate_is_halved() {
        let d = generic_degree(&sym("2;2"), FamilyTag::new(Family::DPlus, 4)).unwrap();
        assert_eq!(d, QPoly::q().pow(2) * qp(6, -1).divide_exact(&qp(2, -1)).unwrap());
    }

    #[test]
    fn twisted_row() {
        let d = generic_degree(&sym("1,4;"), FamilyTag::new(Family::DMinus, 5)).unwrap();
        assert_eq!(d, (QPoly::q() * qp(5, 1) * qp(3, -1)).divide_exact(&qp(2, -1)).unwrap());
    }

    #[test]
    fn parity_and_rank_checks() {
        assert!(matches!(
            generic_degree(&sym("2;2"), FamilyTag::new(Family::BC, 4)),
            Err(Error::WrongDefectParity { .. })
        ));
        assert!(matches!(generic_degree(&sym("3;"), FamilyTag::new(Family::BC, 4)), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn jordan_semisimple() {
        let n = 5;
        let num = symplectic_order_part(n);
        let den = symplectic_order_part(1) * symplectic_order_part(n - 1);
        let d = jordan_degree(&num, &den, &QPoly::one()).unwrap();
        assert_eq!(d, qp(10, -1).divide_exact(&qp(2, -1)).unwrap());
    }
}
