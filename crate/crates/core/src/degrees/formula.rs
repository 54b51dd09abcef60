//! Closed-form degree expressions and symbol templates with entries depending
//! on the rank `n`, as printed in classification tables.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::qpoly::QPoly;
use crate::symbols::Symbol;

/// Affine expression `per_n * n + constant`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lin {
    pub per_n: i32,
    pub constant: i32,
}

pub const fn lin(per_n: i32, constant: i32) -> Lin {
    Lin { per_n, constant }
}

pub const fn konst(c: i32) -> Lin {
    lin(0, c)
}

impl Lin {
    pub fn at(self, n: u32) -> i64 {
        self.per_n as i64 * n as i64 + self.constant as i64
    }

    /// Non-negative value at `n`, as an exponent.
    pub fn exponent(self, n: u32) -> Result<usize> {
        usize::try_from(self.at(n)).map_err(|_| Error::OutOfRange(format!("exponent {} at n = {n}", self.render())))
    }

    pub fn render(self) -> String {
        match (self.per_n, self.constant) {
            (0, c) => c.to_string(),
            (k, 0) => coef_n(k),
            (k, c) if c > 0 => format!("{}+{c}", coef_n(k)),
            (k, c) => format!("{}{c}", coef_n(k)),
        }
    }
}

fn coef_n(k: i32) -> String {
    match k {
        1 => "n".into(),
        -1 => "-n".into(),
        k => format!("{k}n"),
    }
}

/// Constant term of a factor `q^e + sign`, possibly depending on the group
/// type `eps`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
    Eps,
    NegEps,
}

impl Sign {
    pub fn value(self, eps: i64) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
            Sign::Eps => eps,
            Sign::NegEps => -eps,
        }
    }

    fn render(self) -> &'static str {
        match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
            Sign::Eps => "+e",
            Sign::NegEps => "-e",
        }
    }
}

/// `q^exp + sign`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub exp: Lin,
    pub sign: Sign,
}

pub const fn fac(per_n: i32, constant: i32, sign: Sign) -> Factor {
    Factor { exp: lin(per_n, constant), sign }
}

impl Factor {
    pub fn poly(self, n: u32, eps: i64) -> Result<QPoly> {
        Ok(QPoly::q_pow_plus(self.exp.exponent(n)?, self.sign.value(eps)))
    }

    fn render(self) -> String {
        format!("(q^{}{})", self.exp.render(), self.sign.render())
    }
}

/// `(num_coef/den_coef) q^q_pow prod(num) / prod(den)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeFormula {
    pub num_coef: i64,
    pub den_coef: i64,
    pub q_pow: Lin,
    pub num: &'static [Factor],
    pub den: &'static [Factor],
}

impl DegreeFormula {
    /// Instantiate at rank `n` and type `eps` (ignored by formulas without
    /// `eps`). The quotient must be a polynomial.
    pub fn eval(&self, n: u32, eps: i64) -> Result<QPoly> {
        let mut numer = QPoly::one().shift(self.q_pow.exponent(n)?);
        for f in self.num {
            numer = numer * f.poly(n, eps)?;
        }
        let mut denom = QPoly::one();
        for f in self.den {
            denom = denom * f.poly(n, eps)?;
        }
        let scalar = BigRational::new(self.num_coef.into(), self.den_coef.into());
        let p = numer.divide_exact(&denom)?.scale(&scalar);
        if p.is_zero() {
            return Err(Error::OutOfRange(format!("{} vanishes at n = {n}", self.render())));
        }
        Ok(p)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        if self.den_coef != 1 || self.num_coef != 1 {
            s.push_str(&format!("{}/{} ", self.num_coef, self.den_coef));
        }
        if self.q_pow != konst(0) {
            s.push_str(&format!("q^{}", self.q_pow.render()));
        }
        for f in self.num {
            s.push_str(&f.render());
        }
        if !self.den.is_empty() {
            s.push_str(" / ");
            for f in self.den {
                s.push_str(&f.render());
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

/// Entry of a symbol template: a constant or `n + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Entry {
    Const(u32),
    NPlus(i32),
}

impl Entry {
    fn at(self, n: u32) -> Result<u32> {
        match self {
            Entry::Const(c) => Ok(c),
            Entry::NPlus(c) => {
                u32::try_from(n as i64 + c as i64).map_err(|_| Error::OutOfRange(format!("entry n{c:+} at n = {n}")))
            }
        }
    }

    fn render(self) -> String {
        match self {
            Entry::Const(c) => c.to_string(),
            Entry::NPlus(0) => "n".into(),
            Entry::NPlus(c) => format!("n{c:+}"),
        }
    }
}

/// Two rows of template entries, instantiated at a concrete rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolTemplate {
    pub top: &'static [Entry],
    pub bottom: &'static [Entry],
}

impl SymbolTemplate {
    pub fn instantiate(&self, n: u32) -> Result<Symbol> {
        let row = |r: &[Entry]| r.iter().map(|e| e.at(n)).collect::<Result<Vec<_>>>();
        let s = Symbol::new(row(self.top)?, row(self.bottom)?)?;
        if s.rank() != n as i64 {
            return Err(Error::OutOfRange(format!("template {} has rank {} at n = {n}", self.render(), s.rank())));
        }
        Ok(s)
    }

    pub fn render(&self) -> String {
        let row = |r: &[Entry]| r.iter().map(|e| e.render()).collect::<Vec<_>>().join(",");
        format!("{};{}", row(self.top), row(self.bottom))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NCond {
    Any,
    Gt(u32),
    Eq(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QCond {
    Any,
    Gt(u32),
    OneOf(&'static [u32]),
}

impl NCond {
    pub fn holds(self, n: u32) -> bool {
        match self {
            NCond::Any => true,
            NCond::Gt(k) => n > k,
            NCond::Eq(k) => n == k,
        }
    }
}

impl QCond {
    pub fn holds(self, q: u64) -> bool {
        match self {
            QCond::Any => true,
            QCond::Gt(k) => q > k as u64,
            QCond::OneOf(list) => list.iter().any(|&v| v as u64 == q),
        }
    }

    /// Holds for every `q >= q0`.
    pub fn holds_eventually_from(self, q0: u64) -> bool {
        match self {
            QCond::Any => true,
            QCond::Gt(k) => q0 > k as u64,
            QCond::OneOf(_) => false,
        }
    }
}

/// Disjunction of `(n, q)` conditions; an empty list means "always".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Condition(pub &'static [(NCond, QCond)]);

impl Condition {
    pub const ALWAYS: Condition = Condition(&[]);

    pub fn holds_for_n(self, n: u32) -> bool {
        self.0.is_empty() || self.0.iter().any(|(c, _)| c.holds(n))
    }

    pub fn holds(self, n: u32, q: u64) -> bool {
        self.0.is_empty() || self.0.iter().any(|(c, d)| c.holds(n) && d.holds(q))
    }

    pub fn holds_eventually(self, n: u32, q0: u64) -> bool {
        self.0.is_empty() || self.0.iter().any(|(c, d)| c.holds(n) && d.holds_eventually_from(q0))
    }

    pub fn render(self) -> String {
        self.0
            .iter()
            .map(|(c, d)| {
                let mut parts = Vec::new();
                match c {
                    NCond::Any => {}
                    NCond::Gt(k) => parts.push(format!("n>{k}")),
                    NCond::Eq(k) => parts.push(format!("n={k}")),
                }
                match d {
                    QCond::Any => {}
                    QCond::Gt(k) => parts.push(format!("q>{k}")),
                    QCond::OneOf(l) => {
                        parts.push(format!("q in {{{}}}", l.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
                    }
                }
                parts.join(" and ")
            })
            .collect::<Vec<_>>()
            .join(" or ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_instantiation() {
        const F: DegreeFormula = DegreeFormula {
            num_coef: 1,
            den_coef: 2,
            q_pow: konst(1),
            num: &[fac(1, 0, Sign::Minus), fac(1, -1, Sign::Minus)],
            den: &[fac(0, 1, Sign::Plus)],
        };
        // 1/2 q (q^3-1)(q^2-1)/(q+1) at q = 3
        let p = F.eval(3, 1).unwrap();
        assert_eq!(p.eval_int(3), BigRational::from_integer(78.into()));
        assert_eq!(p.degree(), Some(5));
    }

    #[test]
    fn eps_signs() {
        const F: DegreeFormula =
            DegreeFormula { num_coef: 1, den_coef: 1, q_pow: konst(0), num: &[fac(1, 0, Sign::NegEps)], den: &[] };
        assert_eq!(F.eval(4, 1).unwrap(), QPoly::q_pow_plus(4, -1));
        assert_eq!(F.eval(4, -1).unwrap(), QPoly::q_pow_plus(4, 1));
    }

    #[test]
    fn template_rank_check() {
        let t = SymbolTemplate { top: &[Entry::Const(0), Entry::Const(1), Entry::NPlus(0)], bottom: &[] };
        assert_eq!(t.instantiate(6).unwrap().to_string(), "0,1,6;");
        assert_eq!(t.render(), "0,1,n;");
        let bad = SymbolTemplate { top: &[Entry::Const(2), Entry::NPlus(-1)], bottom: &[] };
        // (2, 2) is not strictly increasing
        assert!(bad.instantiate(3).is_err());
    }

    #[test]
    fn conditions() {
        let c = Condition(&[(NCond::Gt(5), QCond::Any), (NCond::Eq(3), QCond::OneOf(&[2]))]);
        assert!(c.holds(6, 7));
        assert!(c.holds(3, 2));
        assert!(!c.holds(3, 3));
        assert!(c.holds_for_n(3));
        assert!(!c.holds_eventually(3, 20));
        assert!(Condition(&[(NCond::Eq(5), QCond::Gt(2))]).holds_eventually(5, 20));
    }
}
