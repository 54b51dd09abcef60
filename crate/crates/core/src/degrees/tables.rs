//! Classification data: the small unipotent characters of types B/C, D and
//! twisted D, one row per symbol template with its closed degree formula.

use super::formula::{fac, konst, lin, Condition, DegreeFormula, Entry, Lin, NCond, QCond, Sign, SymbolTemplate};
use crate::symbols::Family;

use Entry::{Const as C, NPlus as N};
use Sign::{Minus as M, Plus as P};

/// One row of a small-unipotent-character table.
#[derive(Clone, Copy, Debug)]
pub struct TableRow {
    /// Short name used by the character tables of the full groups
    /// (empty when the row has none).
    pub name: &'static str,
    pub template: SymbolTemplate,
    pub degree: DegreeFormula,
    /// Printed degree in `q` of the degree polynomial.
    pub deg_q: Lin,
    pub condition: Condition,
    /// 2 for degenerate symbols carrying two characters.
    pub copies: u8,
}

const fn t(top: &'static [Entry], bottom: &'static [Entry]) -> SymbolTemplate {
    SymbolTemplate { top, bottom }
}

const fn deg(
    num_coef: i64,
    den_coef: i64,
    q_pow: i32,
    num: &'static [super::formula::Factor],
    den: &'static [super::formula::Factor],
) -> DegreeFormula {
    DegreeFormula { num_coef, den_coef, q_pow: konst(q_pow), num, den }
}

const ONE: DegreeFormula = deg(1, 1, 0, &[], &[]);

const fn row(
    name: &'static str,
    template: SymbolTemplate,
    degree: DegreeFormula,
    deg_q: Lin,
    condition: Condition,
) -> TableRow {
    TableRow { name, template, degree, deg_q, condition, copies: 1 }
}

const fn twice(mut r: TableRow) -> TableRow {
    r.copies = 2;
    r
}

const N_GT3: Condition = Condition(&[(NCond::Gt(3), QCond::Any)]);
const N_GT4: Condition = Condition(&[(NCond::Gt(4), QCond::Any)]);
const N_GT5: Condition = Condition(&[(NCond::Gt(5), QCond::Any)]);
const N_GT6: Condition = Condition(&[(NCond::Gt(6), QCond::Any)]);
const fn n_eq(k: u32) -> Condition {
    match k {
        3 => Condition(&[(NCond::Eq(3), QCond::Any)]),
        4 => Condition(&[(NCond::Eq(4), QCond::Any)]),
        6 => Condition(&[(NCond::Eq(6), QCond::Any)]),
        7 => Condition(&[(NCond::Eq(7), QCond::Any)]),
        8 => Condition(&[(NCond::Eq(8), QCond::Any)]),
        9 => Condition(&[(NCond::Eq(9), QCond::Any)]),
        _ => Condition(&[(NCond::Eq(5), QCond::Any)]),
    }
}

/// Types B_n and C_n, n >= 3.
pub static TABLE_BC: [TableRow; 15] = [
    row("1", t(&[N(0)], &[]), ONE, konst(0), Condition::ALWAYS),
    row(
        "rho_1",
        t(&[C(0), C(1), N(0)], &[]),
        deg(1, 2, 1, &[fac(1, 0, M), fac(1, -1, M)], &[fac(0, 1, P)]),
        lin(2, -1),
        Condition::ALWAYS,
    ),
    row(
        "rho_2",
        t(&[C(0), C(1)], &[N(0)]),
        deg(1, 2, 1, &[fac(1, 0, P), fac(1, -1, P)], &[fac(0, 1, P)]),
        lin(2, -1),
        Condition::ALWAYS,
    ),
    row(
        "rho_3",
        t(&[C(1), N(0)], &[C(0)]),
        deg(1, 2, 1, &[fac(1, 0, P), fac(1, -1, M)], &[fac(0, 1, M)]),
        lin(2, -1),
        Condition::ALWAYS,
    ),
    row(
        "rho_4",
        t(&[C(0), N(0)], &[C(1)]),
        deg(1, 2, 1, &[fac(1, 0, M), fac(1, -1, P)], &[fac(0, 1, M)]),
        lin(2, -1),
        Condition::ALWAYS,
    ),
    row(
        "",
        t(&[C(0), C(2), N(-1)], &[]),
        deg(1, 2, 2, &[fac(2, 0, M), fac(1, -1, M), fac(1, -3, M)], &[fac(0, 4, M)]),
        lin(4, -6),
        N_GT3,
    ),
    row(
        "",
        t(&[C(0), C(2)], &[N(-1)]),
        deg(1, 2, 2, &[fac(2, 0, M), fac(1, -1, P), fac(1, -3, P)], &[fac(0, 4, M)]),
        lin(4, -6),
        N_GT3,
    ),
    row(
        "",
        t(&[C(2), N(-1)], &[C(0)]),
        deg(1, 2, 2, &[fac(2, 0, M), fac(1, -1, P), fac(1, -3, M)], &[fac(0, 2, M), fac(0, 2, M)]),
        lin(4, -6),
        N_GT3,
    ),
    row(
        "",
        t(&[C(0), N(-1)], &[C(2)]),
        deg(1, 2, 2, &[fac(2, 0, M), fac(1, -1, M), fac(1, -3, P)], &[fac(0, 2, M), fac(0, 2, M)]),
        lin(4, -6),
        N_GT3,
    ),
    row(
        "",
        t(&[C(1), N(-1)], &[C(1)]),
        deg(1, 1, 3, &[fac(1, 0, P), fac(1, 0, M), fac(2, -4, M)], &[fac(0, 2, M), fac(0, 2, M)]),
        lin(4, -5),
        N_GT5,
    ),
    row(
        "",
        t(&[C(0), C(1), C(2), N(0)], &[C(1)]),
        deg(1, 2, 4, &[fac(1, 0, M), fac(2, -2, M), fac(1, -2, M)], &[fac(0, 4, M)]),
        lin(4, -4),
        Condition(&[(NCond::Gt(5), QCond::Any), (NCond::Eq(3), QCond::OneOf(&[2]))]),
    ),
    row(
        "",
        t(&[C(0), C(1), C(2)], &[C(1), N(0)]),
        deg(1, 2, 4, &[fac(1, 0, P), fac(2, -2, M), fac(1, -2, P)], &[fac(0, 4, M)]),
        lin(4, -4),
        N_GT5,
    ),
    row(
        "",
        t(&[C(1), C(2), N(0)], &[C(0), C(1)]),
        deg(1, 2, 4, &[fac(1, 0, P), fac(2, -2, M), fac(1, -2, M)], &[fac(0, 2, M), fac(0, 2, M)]),
        lin(4, -4),
        N_GT5,
    ),
    row(
        "",
        t(&[C(0), C(1), N(0)], &[C(1), C(2)]),
        deg(1, 2, 4, &[fac(1, 0, M), fac(2, -2, M), fac(1, -2, P)], &[fac(0, 2, M), fac(0, 2, M)]),
        lin(4, -4),
        N_GT5,
    ),
    row("", t(&[C(0), C(2)], &[C(2)]), deg(1, 1, 2, &[fac(0, 6, M)], &[fac(0, 2, M)]), konst(6), n_eq(3)),
];

/// Untwisted type D_n, n >= 4.
pub static TABLE_DPLUS: [TableRow; 19] = [
    row("1", t(&[N(0)], &[C(0)]), ONE, konst(0), Condition::ALWAYS),
    row(
        "rho_1",
        t(&[N(-1)], &[C(1)]),
        deg(1, 1, 1, &[fac(1, 0, M), fac(1, -2, P)], &[fac(0, 2, M)]),
        lin(2, -3),
        Condition::ALWAYS,
    ),
    row(
        "rho_2",
        t(&[C(1), N(0)], &[C(0), C(1)]),
        deg(1, 1, 2, &[fac(2, -2, M)], &[fac(0, 2, M)]),
        lin(2, -2),
        Condition::ALWAYS,
    ),
    row(
        "",
        t(&[N(-2)], &[C(2)]),
        deg(1, 1, 2, &[fac(1, 0, M), fac(2, -2, M), fac(1, -4, P)], &[fac(0, 2, M), fac(0, 4, M)]),
        lin(4, -10),
        N_GT4,
    ),
    row(
        "",
        t(&[C(0), C(1), C(2), N(-1)], &[]),
        deg(
            1,
            2,
            3,
            &[fac(1, 0, M), fac(1, -1, M), fac(1, -2, M), fac(1, -3, M)],
            &[fac(0, 1, P), fac(0, 1, P), fac(0, 2, P)],
        ),
        lin(4, -7),
        Condition::ALWAYS,
    ),
    row(
        "",
        t(&[C(0), N(-1)], &[C(1), C(2)]),
        deg(1, 2, 3, &[fac(1, 0, M), fac(1, -1, M), fac(1, -2, P), fac(1, -3, P)], &[fac(0, 2, M), fac(0, 2, M)]),
        lin(4, -7),
        Condition::ALWAYS,
    ),
    row(
        "",
        t(&[C(1), N(-1)], &[C(0), C(2)]),
        deg(
            1,
            2,
            3,
            &[fac(1, 0, M), fac(1, -1, P), fac(1, -2, M), fac(1, -3, P)],
            &[fac(0, 1, M), fac(0, 1, M), fac(0, 2, P)],
        ),
        lin(4, -7),
        Condition::ALWAYS,
    ),
    row(
        "",
        t(&[C(2), N(-1)], &[C(0), C(1)]),
        deg(1, 2, 3, &[fac(1, 0, M), fac(1, -1, P), fac(1, -2, P), fac(1, -3, M)], &[fac(0, 2, M), fac(0, 2, M)]),
        lin(4, -7),
        Condition::ALWAYS,
    ),
    row(
        "",
        t(&[C(1), C(2), N(0)], &[C(0), C(1), C(2)]),
        deg(1, 1, 6, &[fac(2, -2, M), fac(2, -4, M)], &[fac(0, 2, M), fac(0, 4, M)]),
        lin(4, -6),
        Condition::ALWAYS,
    ),
    row(
        "",
        t(&[N(-3)], &[C(3)]),
        deg(
            1,
            1,
            3,
            &[fac(1, 0, M), fac(2, -2, M), fac(2, -4, M), fac(1, -6, P)],
            &[fac(0, 2, M), fac(0, 4, M), fac(0, 6, M)],
        ),
        lin(6, -21),
        N_GT6,
    ),
    twice(row("", t(&[C(2)], &[C(2)]), deg(1, 1, 2, &[fac(0, 6, M)], &[fac(0, 2, M)]), konst(6), n_eq(4))),
    twice(row("", t(&[C(1), C(2)], &[C(1), C(2)]), deg(1, 1, 6, &[fac(0, 6, M)], &[fac(0, 2, M)]), konst(10), n_eq(4))),
    row(
        "",
        t(&[C(0), C(3)], &[C(1), C(3)]),
        deg(1, 1, 4, &[fac(0, 8, M), fac(0, 5, M)], &[fac(0, 1, M), fac(0, 2, M)]),
        konst(14),
        Condition(&[(NCond::Eq(5), QCond::Gt(2))]),
    ),
    row(
        "",
        t(&[C(0), C(1), C(2), C(3), C(4)], &[C(1)]),
        deg(1, 2, 7, &[fac(0, 5, M), fac(0, 3, M), fac(0, 1, M), fac(0, 1, M)], &[]),
        konst(17),
        Condition(&[(NCond::Eq(5), QCond::OneOf(&[2]))]),
    ),
    twice(row(
        "",
        t(&[C(3)], &[C(3)]),
        deg(1, 1, 3, &[fac(0, 4, P), fac(0, 10, M)], &[fac(0, 2, M)]),
        konst(15),
        n_eq(6),
    )),
    row(
        "",
        t(&[C(0), C(1), C(3), C(4)], &[]),
        deg(1, 2, 4, &[fac(0, 10, M), fac(0, 3, M), fac(0, 3, M), fac(0, 1, M)], &[fac(0, 1, P)]),
        konst(20),
        Condition(&[(NCond::Eq(6), QCond::OneOf(&[2, 3]))]),
    ),
    row(
        "",
        t(&[C(0), C(1), C(3), C(5)], &[]),
        deg(1, 2, 4, &[fac(0, 12, M), fac(0, 7, M), fac(0, 5, M), fac(0, 1, M)], &[fac(0, 3, P)]),
        konst(26),
        n_eq(7),
    ),
    twice(row(
        "",
        t(&[C(4)], &[C(4)]),
        deg(1, 1, 4, &[fac(0, 14, M), fac(0, 10, M), fac(0, 6, P)], &[fac(0, 2, M), fac(0, 4, M)]),
        konst(28),
        n_eq(8),
    )),
    row(
        "",
        t(&[C(5)], &[C(4)]),
        deg(1, 1, 4, &[fac(0, 9, M), fac(0, 8, P), fac(0, 14, M), fac(0, 6, P)], &[fac(0, 1, M), fac(0, 4, M)]),
        konst(36),
        Condition(&[(NCond::Eq(9), QCond::Gt(2))]),
    ),
];

/// Twisted type 2D_n, n >= 4.
pub static TABLE_DMINUS: [TableRow; 12] = [
    row("1", t(&[C(0), N(0)], &[]), ONE, konst(0), Condition::ALWAYS),
    row(
        "rho_1",
        t(&[C(1), N(-1)], &[]),
        deg(1, 1, 1, &[fac(1, 0, P), fac(1, -2, M)], &[fac(0, 2, M)]),
        lin(2, -3),
        Condition::ALWAYS,
    ),
    row(
        "rho_2",
        t(&[C(0), C(1), N(0)], &[C(1)]),
        deg(1, 1, 2, &[fac(2, -2, M)], &[fac(0, 2, M)]),
        lin(2, -2),
        Condition::ALWAYS,
    ),
    row(
        "",
        t(&[C(2), N(-2)], &[]),
        deg(1, 1, 2, &[fac(1, 0, P), fac(2, -2, M), fac(1, -4, M)], &[fac(0, 4, M), fac(0, 2, M)]),
        lin(4, -10),
        N_GT4,
    ),
    row(
        "",
        t(&[C(1), C(2), N(-1)], &[C(0)]),
        deg(1, 2, 3, &[fac(1, 0, P), fac(1, -1, P), fac(1, -2, M), fac(1, -3, M)], &[fac(0, 2, M), fac(0, 2, M)]),
        lin(4, -7),
        Condition::ALWAYS,
    ),
    row(
        "",
        t(&[C(0), C(2), N(-1)], &[C(1)]),
        deg(
            1,
            2,
            3,
            &[fac(1, 0, P), fac(1, -1, M), fac(1, -2, P), fac(1, -3, M)],
            &[fac(0, 1, M), fac(0, 1, M), fac(0, 2, P)],
        ),
        lin(4, -7),
        Condition::ALWAYS,
    ),
    row(
        "",
        t(&[C(0), C(1), N(-1)], &[C(2)]),
        deg(1, 2, 3, &[fac(1, 0, P), fac(1, -1, M), fac(1, -2, M), fac(1, -3, P)], &[fac(0, 2, M), fac(0, 2, M)]),
        lin(4, -7),
        Condition::ALWAYS,
    ),
    row(
        "",
        t(&[C(0), C(1), C(2)], &[N(-1)]),
        deg(
            1,
            2,
            3,
            &[fac(1, 0, P), fac(1, -1, P), fac(1, -2, P), fac(1, -3, P)],
            &[fac(0, 1, P), fac(0, 1, P), fac(0, 2, P)],
        ),
        lin(4, -7),
        Condition::ALWAYS,
    ),
    row(
        "",
        t(&[C(0), C(1), C(2), N(0)], &[C(1), C(2)]),
        deg(1, 1, 6, &[fac(2, -2, M), fac(2, -4, M)], &[fac(0, 2, M), fac(0, 4, M)]),
        lin(4, -6),
        Condition::ALWAYS,
    ),
    row(
        "",
        t(&[C(3), N(-3)], &[]),
        deg(
            1,
            1,
            3,
            &[fac(1, 0, P), fac(2, -2, M), fac(2, -4, M), fac(1, -6, M)],
            &[fac(0, 2, M), fac(0, 4, M), fac(0, 6, M)],
        ),
        lin(6, -21),
        N_GT6,
    ),
    row(
        "",
        t(&[C(4), C(5)], &[]),
        deg(
            1,
            1,
            4,
            &[fac(0, 9, P), fac(0, 8, P), fac(0, 14, M), fac(0, 6, P), fac(0, 1, M)],
            &[fac(0, 2, M), fac(0, 4, M)],
        ),
        konst(36),
        n_eq(9),
    ),
    row(
        "",
        t(&[C(0), C(1), C(3)], &[C(3)]),
        deg(1, 1, 4, &[fac(0, 8, M), fac(0, 5, P)], &[fac(0, 1, P), fac(0, 2, M)]),
        konst(14),
        n_eq(5),
    ),
];

/// The small-unipotent-character table for a family.
pub fn unipotent_table(family: Family) -> &'static [TableRow] {
    match family {
        Family::BC => &TABLE_BC,
        Family::DPlus => &TABLE_DPLUS,
        Family::DMinus => &TABLE_DMINUS,
    }
}

/// Smallest rank for which the table is stated.
pub fn table_min_rank(family: Family) -> u32 {
    match family {
        Family::BC => 3,
        _ => 4,
    }
}

/// The row with the given short name.
pub fn named_row(family: Family, name: &str) -> Option<&'static TableRow> {
    unipotent_table(family).iter().find(|r| r.name == name)
}
