//! The smallest complex characters of the spin groups: unipotent rows plus
//! the semisimple characters of a few Lusztig series, each with the
//! centraliser data its degree comes from.

use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use super::formula::{fac, konst, lin, DegreeFormula, Lin, Sign};
use super::tables::{named_row, table_min_rank};
use super::{generic_degree, jordan_degree, order_part, orthogonal_order_part, symplectic_order_part};
use crate::error::{Error, Result};
use crate::qpoly::QPoly;
use crate::symbols::{Family, FamilyTag, Symbol};

use Sign::{Eps as E, Minus as M, NegEps as NE, Plus as P};

/// Which Lusztig series a character belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Series {
    Unipotent,
    /// Series of an involution `s`.
    S,
    /// Series of an element `t` of order larger than 2.
    T,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Series::Unipotent => "unipotent",
            Series::S => "series s",
            Series::T => "series t",
        })
    }
}

/// A direct factor of a semisimple centraliser in the dual group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CentraliserFactor {
    /// `Sp_{2k}(q)`.
    Sp(u32),
    /// `SO^eps_{2k}(q)`.
    SO { eps: i64, k: u32 },
    /// `GL_1(q)`, a split torus of order `q - 1`.
    GL1,
    /// `GU_1(q)`, a non-split torus of order `q + 1`.
    GU1,
}

impl CentraliserFactor {
    pub fn order_part(self) -> QPoly {
        match self {
            CentraliserFactor::Sp(k) => symplectic_order_part(k),
            CentraliserFactor::SO { eps, k } => orthogonal_order_part(k, eps),
            CentraliserFactor::GL1 => QPoly::q_pow_plus(1, -1),
            CentraliserFactor::GU1 => QPoly::q_pow_plus(1, 1),
        }
    }
}

impl fmt::Display for CentraliserFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CentraliserFactor::Sp(k) => write!(f, "Sp_{}", 2 * k),
            CentraliserFactor::SO { eps, k } => {
                write!(f, "SO^{}_{}", if eps > 0 { "+" } else { "-" }, 2 * k)
            }
            CentraliserFactor::GL1 => f.write_str("GL_1"),
            CentraliserFactor::GU1 => f.write_str("GU_1"),
        }
    }
}

/// Centraliser of the semisimple label together with the unipotent
/// character of the centraliser that the entry corresponds to.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Centraliser {
    pub factors: Vec<CentraliserFactor>,
    /// Order of the component group (1 when connected).
    pub components: u32,
    /// Degree of the unipotent character of the centraliser.
    pub unipotent_degree: QPoly,
}

impl Centraliser {
    pub fn order_part(&self) -> QPoly {
        self.factors
            .iter()
            .map(|f| f.order_part())
            .product::<QPoly>()
            .scale(&BigRational::from_integer(self.components.into()))
    }

    /// Degree of the Jordan correspondent in the group of type `tag`.
    pub fn jordan_degree(&self, tag: FamilyTag) -> Result<QPoly> {
        jordan_degree(&order_part(tag)?, &self.order_part(), &self.unipotent_degree)
    }

    pub fn describe(&self) -> String {
        let mut s = self.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" x ");
        if self.components > 1 {
            s.push_str(&format!(" (component group of order {})", self.components));
        }
        s
    }
}

/// Number of characters `(q_coef * q + constant) / den` in a table row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Multiplicity {
    pub q_coef: i64,
    pub constant: i64,
    pub den: i64,
}

impl Multiplicity {
    pub const fn fixed(c: i64) -> Self {
        Multiplicity { q_coef: 0, constant: c, den: 1 }
    }

    pub const fn linear(q_coef: i64, constant: i64, den: i64) -> Self {
        Multiplicity { q_coef, constant, den }
    }

    /// Value at `q` as an exact rational.
    pub fn eval(&self, q: i64) -> BigRational {
        BigRational::new((self.q_coef * q + self.constant).into(), self.den.into())
    }

    /// Value at `q` if it is a non-negative integer.
    pub fn count(&self, q: i64) -> Option<u64> {
        let num = self.q_coef * q + self.constant;
        (num % self.den == 0 && num / self.den >= 0).then(|| (num / self.den) as u64)
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.q_coef, self.den) {
            (0, 1) => write!(f, "{}", self.constant),
            (0, d) => write!(f, "{}/{d}", self.constant),
            (k, d) => {
                let lead = if k == 1 { "q".to_string() } else { format!("{k}q") };
                let body = match self.constant {
                    0 => lead,
                    c if c > 0 => format!("{lead}+{c}"),
                    c => format!("{lead}{c}"),
                };
                if d == 1 {
                    f.write_str(&body)
                } else if self.constant == 0 {
                    write!(f, "{body}/{d}")
                } else {
                    write!(f, "({body})/{d}")
                }
            }
        }
    }
}

/// One row of the table of smallest characters.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharacterEntry {
    pub label: String,
    pub series: Series,
    /// Degree from the printed closed formula.
    pub degree: QPoly,
    /// Printed closed formula, for reports.
    pub formula: String,
    pub mult_odd_q: Multiplicity,
    pub mult_even_q: Multiplicity,
    /// Printed degree in `q`.
    pub deg_q: usize,
    /// Symbol of a unipotent entry.
    pub symbol: Option<Symbol>,
    /// Centraliser data of a non-unipotent entry.
    pub centraliser: Option<Centraliser>,
}

impl CharacterEntry {
    pub fn multiplicity(&self, q: i64) -> Multiplicity {
        if q % 2 == 0 {
            self.mult_even_q
        } else {
            self.mult_odd_q
        }
    }

    /// Degree recomputed independently: generic degree of the symbol for a
    /// unipotent entry, Jordan decomposition for the others.
    pub fn recomputed_degree(&self, tag: FamilyTag) -> Result<QPoly> {
        match (&self.symbol, &self.centraliser) {
            (Some(s), _) => generic_degree(s, tag),
            (None, Some(c)) => c.jordan_degree(tag),
            (None, None) => Err(Error::BadInput(format!("entry {} has no source data", self.label))),
        }
    }
}

struct EntryDef {
    label: &'static str,
    series: Series,
    /// Name of the unipotent table row, for unipotent entries.
    row: Option<&'static str>,
    formula: DegreeFormula,
    odd: Multiplicity,
    even: Multiplicity,
    deg_q: Lin,
    centraliser: fn(u32, i64) -> Option<Centraliser>,
}

fn none(_: u32, _: i64) -> Option<Centraliser> {
    None
}

fn cent(factors: Vec<CentraliserFactor>, components: u32, unip: QPoly) -> Option<Centraliser> {
    Some(Centraliser { factors, components, unipotent_degree: unip })
}

const ONE: DegreeFormula = DegreeFormula { num_coef: 1, den_coef: 1, q_pow: konst(0), num: &[], den: &[] };

const fn formula(
    num_coef: i64,
    den_coef: i64,
    q_pow: i32,
    num: &'static [super::formula::Factor],
    den: &'static [super::formula::Factor],
) -> DegreeFormula {
    DegreeFormula { num_coef, den_coef, q_pow: konst(q_pow), num, den }
}

const ALL: Multiplicity = Multiplicity::fixed(1);
const NONE: Multiplicity = Multiplicity::fixed(0);

fn bc_rows() -> Vec<EntryDef> {
    use CentraliserFactor::*;
    let unip = |label, row| EntryDef {
        label,
        series: Series::Unipotent,
        row: Some(row),
        formula: ONE,
        odd: ALL,
        even: ALL,
        deg_q: lin(2, -1),
        centraliser: none,
    };
    vec![
        EntryDef { deg_q: konst(0), ..unip("1_G", "1") },
        EntryDef {
            label: "rho_{s,1}",
            series: Series::S,
            row: None,
            formula: {
                const F: DegreeFormula = formula(1, 1, 0, &[fac(2, 0, M)], &[fac(0, 2, M)]);
                F
            },
            odd: ALL,
            even: NONE,
            deg_q: lin(2, -2),
            centraliser: |n, _| cent(vec![Sp(1), Sp(n - 1)], 1, QPoly::one()),
        },
        unip("rho_1", "rho_1"),
        unip("rho_2", "rho_2"),
        unip("rho_3", "rho_3"),
        unip("rho_4", "rho_4"),
        EntryDef {
            label: "rho_t^-",
            series: Series::T,
            row: None,
            formula: {
                const F: DegreeFormula = formula(1, 1, 0, &[fac(2, 0, M)], &[fac(0, 1, P)]);
                F
            },
            odd: Multiplicity::linear(1, -1, 2),
            even: Multiplicity::linear(1, 0, 2),
            deg_q: lin(2, -1),
            centraliser: |n, _| cent(vec![Sp(n - 1), GU1], 1, QPoly::one()),
        },
        EntryDef {
            label: "rho_{s,q}",
            series: Series::S,
            row: None,
            formula: {
                const F: DegreeFormula = formula(1, 1, 1, &[fac(2, 0, M)], &[fac(0, 2, M)]);
                F
            },
            odd: ALL,
            even: NONE,
            deg_q: lin(2, -1),
            // Steinberg character of the Sp_2 factor.
            centraliser: |n, _| cent(vec![Sp(1), Sp(n - 1)], 1, QPoly::q()),
        },
        EntryDef {
            label: "rho_t^+",
            series: Series::T,
            row: None,
            formula: {
                const F: DegreeFormula = formula(1, 1, 0, &[fac(2, 0, M)], &[fac(0, 1, M)]);
                F
            },
            odd: Multiplicity::linear(1, -3, 2),
            even: Multiplicity::linear(1, -2, 2),
            deg_q: lin(2, -1),
            centraliser: |n, _| cent(vec![Sp(n - 1), GL1], 1, QPoly::one()),
        },
    ]
}

fn d_rows() -> Vec<EntryDef> {
    use CentraliserFactor::*;
    vec![
        EntryDef {
            label: "1_G",
            series: Series::Unipotent,
            row: Some("1"),
            formula: ONE,
            odd: ALL,
            even: ALL,
            deg_q: konst(0),
            centraliser: none,
        },
        EntryDef {
            label: "rho_1",
            series: Series::Unipotent,
            row: Some("rho_1"),
            formula: {
                const F: DegreeFormula = formula(1, 1, 1, &[fac(1, 0, NE), fac(1, -2, E)], &[fac(0, 2, M)]);
                F
            },
            odd: ALL,
            even: ALL,
            deg_q: lin(2, -3),
            centraliser: none,
        },
        EntryDef {
            label: "rho_{s,a}^-, rho_{s,b}^-",
            series: Series::S,
            row: None,
            formula: {
                const F: DegreeFormula = formula(1, 2, 0, &[fac(1, 0, NE), fac(1, -1, NE)], &[fac(0, 1, P)]);
                F
            },
            odd: Multiplicity::fixed(2),
            even: NONE,
            deg_q: lin(2, -2),
            centraliser: |n, eps| cent(vec![SO { eps: -1, k: 1 }, SO { eps: -eps, k: n - 1 }], 2, QPoly::one()),
        },
        EntryDef {
            label: "rho_{s,a}^+, rho_{s,b}^+",
            series: Series::S,
            row: None,
            formula: {
                const F: DegreeFormula = formula(1, 2, 0, &[fac(1, 0, NE), fac(1, -1, E)], &[fac(0, 1, M)]);
                F
            },
            odd: Multiplicity::fixed(2),
            even: NONE,
            deg_q: lin(2, -2),
            centraliser: |n, eps| cent(vec![SO { eps: 1, k: 1 }, SO { eps, k: n - 1 }], 2, QPoly::one()),
        },
        EntryDef {
            label: "rho_t^-",
            series: Series::T,
            row: None,
            formula: {
                const F: DegreeFormula = formula(1, 1, 0, &[fac(1, 0, NE), fac(1, -1, NE)], &[fac(0, 1, P)]);
                F
            },
            odd: Multiplicity::linear(1, -1, 2),
            even: Multiplicity::linear(1, 0, 2),
            deg_q: lin(2, -2),
            centraliser: |n, eps| cent(vec![GU1, SO { eps: -eps, k: n - 1 }], 1, QPoly::one()),
        },
        EntryDef {
            label: "rho_2",
            series: Series::Unipotent,
            row: Some("rho_2"),
            formula: {
                const F: DegreeFormula = formula(1, 1, 2, &[fac(2, -2, M)], &[fac(0, 2, M)]);
                F
            },
            odd: ALL,
            even: ALL,
            deg_q: lin(2, -2),
            centraliser: none,
        },
        EntryDef {
            label: "rho_t^+",
            series: Series::T,
            row: None,
            formula: {
                const F: DegreeFormula = formula(1, 1, 0, &[fac(1, 0, NE), fac(1, -1, E)], &[fac(0, 1, M)]);
                F
            },
            odd: Multiplicity::linear(1, -3, 2),
            even: Multiplicity::linear(1, -2, 2),
            deg_q: lin(2, -2),
            centraliser: |n, eps| cent(vec![GL1, SO { eps, k: n - 1 }], 1, QPoly::one()),
        },
    ]
}

/// The table of smallest characters of the spin group of type `tag`
/// (`n >= 3` for B, `n >= 4` for D).
///
/// Degrees of unipotent rows of type B are taken from the unipotent table's
/// closed formulas; for type D they come from the printed formula of this
/// table, which is stated uniformly in `eps`.
pub fn family_table(tag: FamilyTag) -> Result<Vec<CharacterEntry>> {
    let n = tag.rank;
    let min = table_min_rank(tag.family);
    if n < min {
        return Err(Error::OutOfRange(format!("{tag}: table needs n >= {min}")));
    }
    let eps = tag.family.epsilon().unwrap_or(1);
    let defs = if tag.family == Family::BC { bc_rows() } else { d_rows() };
    defs.into_iter()
        .map(|def| {
            let row = def.row.map(|name| named_row(tag.family, name).expect("every named unipotent row exists"));
            let formula = match row {
                Some(r) if tag.family == Family::BC => r.degree,
                _ => def.formula,
            };
            Ok(CharacterEntry {
                label: def.label.to_string(),
                series: def.series,
                degree: formula.eval(n, eps)?,
                formula: formula.render(),
                mult_odd_q: def.odd,
                mult_even_q: def.even,
                deg_q: def.deg_q.exponent(n)?,
                symbol: row.map(|r| r.template.instantiate(n)).transpose()?,
                centraliser: (def.centraliser)(n, eps),
            })
        })
        .collect()
}

/// Look up an entry of [`family_table`] by label.
pub fn entry<'a>(table: &'a [CharacterEntry], label: &str) -> Result<&'a CharacterEntry> {
    table.iter().find(|e| e.label == label).ok_or_else(|| Error::BadInput(format!("no table entry labelled {label}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bc_n4_q7() {
        let t = family_table(FamilyTag::new(Family::BC, 4)).unwrap();
        let e = entry(&t, "rho_t^-").unwrap();
        assert_eq!(e.multiplicity(7).count(7), Some(3));
        assert_eq!(e.degree.eval_int(7), BigRational::from_integer(720600.into()));
        assert_eq!(entry(&t, "rho_{s,1}").unwrap().deg_q, 6);
    }

    #[test]
    fn jordan_matches_printed() {
        for family in Family::all() {
            for n in table_min_rank(family)..=9 {
                let tag = FamilyTag::new(family, n);
                for e in family_table(tag).unwrap() {
                    assert_eq!(e.recomputed_degree(tag).unwrap(), e.degree, "{tag} {}", e.label);
                    assert_eq!(e.degree.degree(), Some(e.deg_q), "{tag} {}", e.label);
                }
            }
        }
    }

    #[test]
    fn multiplicity_display() {
        assert_eq!(Multiplicity::linear(1, -3, 2).to_string(), "(q-3)/2");
        assert_eq!(Multiplicity::linear(1, 0, 2).to_string(), "q/2");
        assert_eq!(Multiplicity::fixed(2).to_string(), "2");
    }
}
