//! Upper-bound fragments of decomposition matrices, stored as data with
//! entries depending on `k`, and their consistency checks.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::degrees::generic_degree;
use crate::degrees::tables::named_row;
use crate::error::{Error, Result};
use crate::qpoly::QPoly;
use crate::symbols::{Family, FamilyTag, Symbol};

/// Which fragment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FragmentKind {
    /// The series of the central involution `s` of the odd-dimensional spin
    /// group, rows labelled by tensor products of unipotent characters of
    /// `Sp_2 x Sp_{2n-2}`; `k = n - 3`.
    OddSpinInvolutionSeries,
    /// Unipotent blocks of the minus-type even-dimensional spin group, for
    /// primes dividing `q + 1`; `k = n - 6`.
    MinusTypeUnipotent,
}

impl FragmentKind {
    pub fn min_rank(self) -> u32 {
        match self {
            FragmentKind::OddSpinInvolutionSeries => 3,
            FragmentKind::MinusTypeUnipotent => 6,
        }
    }

    fn k_offset(self) -> u32 {
        self.min_rank()
    }
}

impl FromStr for FragmentKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bn" | "b" | "bn_series_s" | "odd-spin-involution-series" => Ok(FragmentKind::OddSpinInvolutionSeries),
            "dminus" | "d-" | "dminus_unipotent" | "minus-type-unipotent" => Ok(FragmentKind::MinusTypeUnipotent),
            _ => Err(Error::Parse(format!("unknown decomposition fragment {s:?}"))),
        }
    }
}

impl fmt::Display for FragmentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FragmentKind::OddSpinInvolutionSeries => "odd-spin-involution-series",
            FragmentKind::MinusTypeUnipotent => "minus-type-unipotent",
        })
    }
}

/// A table entry as a function of `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum KEntry {
    Const(u64),
    /// `k + c`
    KPlus(u64),
    /// `binom(k + c, 2)`
    Binom2(u64),
}

use KEntry::{Binom2, Const, KPlus};

const O: KEntry = Const(0);
const I: KEntry = Const(1);
const K: KEntry = KPlus(0);

impl KEntry {
    fn eval(self, k: u64) -> u64 {
        match self {
            Const(c) => c,
            KPlus(c) => k + c,
            Binom2(c) => (k + c) * (k + c).saturating_sub(1) / 2,
        }
    }
}

/// How a row's degree is obtained.
#[derive(Clone, Copy, Debug)]
enum RowSource {
    /// `index * q^e * rho(1)` with `rho` the unipotent row `name` of
    /// `Sp_{2n-2}` (empty name for the trivial character) and `index` the
    /// `q'`-part of `|G* : Sp_2 x Sp_{2n-2}|`.
    Tensor { st: bool, name: &'static str },
    /// A unipotent symbol `(top; bottom)` whose entries are `c` or `n - c`.
    Symbol { top: &'static [Ent], bottom: &'static [Ent] },
}

#[derive(Clone, Copy, Debug)]
enum Ent {
    C(u32),
    NMinus(u32),
}

struct RowDef {
    label: &'static str,
    a_value: usize,
    source: RowSource,
    entries: &'static [KEntry],
}

const fn tensor(
    label: &'static str,
    a_value: usize,
    st: bool,
    name: &'static str,
    entries: &'static [KEntry],
) -> RowDef {
    RowDef { label, a_value, source: RowSource::Tensor { st, name }, entries }
}

const fn sym(
    label: &'static str,
    a_value: usize,
    top: &'static [Ent],
    bottom: &'static [Ent],
    entries: &'static [KEntry],
) -> RowDef {
    RowDef { label, a_value, source: RowSource::Symbol { top, bottom }, entries }
}

static ODD_SPIN_ROWS: [RowDef; 10] = [
    tensor("1 x 1", 0, false, "", &[I]),
    tensor("St x 1", 1, true, "", &[O, I]),
    tensor("1 x rho_1", 1, false, "rho_1", &[O, O, I]),
    tensor("1 x rho_2", 1, false, "rho_2", &[O, O, O, I]),
    tensor("1 x rho_3", 1, false, "rho_3", &[KPlus(1), O, O, O, I]),
    tensor("1 x rho_4", 1, false, "rho_4", &[KPlus(1), O, O, O, O, I]),
    tensor("St x rho_1", 2, true, "rho_1", &[O, O, O, O, O, O, I]),
    tensor("St x rho_2", 2, true, "rho_2", &[O, O, O, O, O, O, O, I]),
    tensor("St x rho_3", 2, true, "rho_3", &[O, KPlus(1), O, O, O, O, O, O, I]),
    tensor("St x rho_4", 2, true, "rho_4", &[O, KPlus(1), O, O, O, O, O, O, O, I]),
];

use Ent::{NMinus, C as E};

static MINUS_TYPE_ROWS: [RowDef; 8] = [
    sym("(0,n;)", 0, &[E(0), NMinus(0)], &[], &[I]),
    sym("(1,n-1;)", 1, &[E(1), NMinus(1)], &[], &[K, I]),
    sym("(0,1,n;1)", 2, &[E(0), E(1), NMinus(0)], &[E(1)], &[K, I, I]),
    sym("(2,n-2;)", 2, &[E(2), NMinus(2)], &[], &[Binom2(0), K, O, I]),
    sym("(1,2,n-1;0)", 3, &[E(1), E(2), NMinus(1)], &[E(0)], &[Binom2(1), K, K, I, I]),
    sym("(0,2,n-1;1)", 3, &[E(0), E(2), NMinus(1)], &[E(1)], &[Binom2(0), Binom2(1), K, O, O, I]),
    sym("(0,1,n-1;2)", 3, &[E(0), E(1), NMinus(1)], &[E(2)], &[Binom2(1), K, K, I, O, O, I]),
    sym("(0,1,2;n-1)", 3, &[E(0), E(1), E(2)], &[NMinus(1)], &[O, O, I, O, O, O, O, I]),
];

/// Harish-Chandra series of the projective columns of the minus-type
/// fragment, as printed (opaque annotations).
pub const MINUS_TYPE_SERIES: [&str; 8] = ["ps", "ps", "ps", "ps", "A1", "ps", "ps", ".2"];

#[derive(Clone, Debug, Serialize)]
pub struct FragmentRow {
    pub label: String,
    pub a_value: usize,
    pub entries: Vec<u64>,
    pub degree: QPoly,
}

/// A decomposition-matrix fragment instantiated at rank `n`.
#[derive(Clone, Debug, Serialize)]
pub struct DecompTable {
    pub kind: FragmentKind,
    pub n: u32,
    pub k: u32,
    pub rows: Vec<FragmentRow>,
    pub column_series: Option<Vec<String>>,
}

impl DecompTable {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Entry at `row` (by label) and 1-based column.
    pub fn entry(&self, row: &str, column: usize) -> Result<u64> {
        let r = self.rows.iter().find(|r| r.label == row).ok_or_else(|| Error::BadInput(format!("no row {row:?}")))?;
        if column == 0 || column > self.size() {
            return Err(Error::OutOfRange(format!("column {column} outside 1..={}", self.size())));
        }
        Ok(r.entries[column - 1])
    }

    /// Square, unit diagonal, zero above the diagonal. Entries are unsigned,
    /// so non-negativity holds by construction.
    pub fn is_unitriangular(&self) -> bool {
        let m = self.size();
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.entries.len() == m && r.entries[i] == 1 && r.entries[i + 1..].iter().all(|&x| x == 0))
    }
}

fn index_part(n: u32) -> QPoly {
    // (q^{2n} - 1)/(q^2 - 1)
    QPoly::q_pow_plus(2 * n as usize, -1).divide_exact(&QPoly::q_pow_plus(2, -1)).expect("exact")
}

fn row_degree(source: RowSource, n: u32) -> Result<QPoly> {
    match source {
        RowSource::Tensor { st, name } => {
            let mut d = index_part(n);
            if st {
                d = d.shift(1);
            }
            if !name.is_empty() {
                let row =
                    named_row(Family::BC, name).ok_or_else(|| Error::BadInput(format!("no unipotent row {name}")))?;
                let small = FamilyTag::new(Family::BC, n - 1);
                d = d * generic_degree(&row.template.instantiate(n - 1)?, small)?;
            }
            Ok(d)
        }
        RowSource::Symbol { top, bottom } => {
            let ent = |e: &Ent| match *e {
                Ent::C(c) => c,
                Ent::NMinus(c) => n - c,
            };
            let s = Symbol::new(top.iter().map(ent).collect(), bottom.iter().map(ent).collect())?;
            generic_degree(&s, FamilyTag::new(Family::DMinus, n))
        }
    }
}

pub fn decomposition_table(kind: FragmentKind, n: u32) -> Result<DecompTable> {
    if n < kind.min_rank() {
        return Err(Error::OutOfRange(format!("{kind} fragment needs n >= {}", kind.min_rank())));
    }
    let k = n - kind.k_offset();
    let defs: &[RowDef] = match kind {
        FragmentKind::OddSpinInvolutionSeries => &ODD_SPIN_ROWS,
        FragmentKind::MinusTypeUnipotent => &MINUS_TYPE_ROWS,
    };
    let m = defs.len();
    let rows = defs
        .iter()
        .map(|s| {
            let mut entries: Vec<u64> = s.entries.iter().map(|e| e.eval(k as u64)).collect();
            entries.resize(m, 0);
            Ok(FragmentRow {
                label: s.label.to_string(),
                a_value: s.a_value,
                entries,
                degree: row_degree(s.source, n)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let column_series =
        (kind == FragmentKind::MinusTypeUnipotent).then(|| MINUS_TYPE_SERIES.iter().map(|s| s.to_string()).collect());
    Ok(DecompTable { kind, n, k, rows, column_series })
}

#[derive(Clone, Debug, Serialize)]
pub struct AValueCheck {
    pub label: String,
    pub a_value: usize,
    pub valuation: usize,
    pub passed: bool,
}

/// For each row, the exact power of `q` dividing the degree against the
/// table's a-value.
pub fn check_a_values(t: &DecompTable) -> Result<Vec<AValueCheck>> {
    t.rows
        .iter()
        .map(|r| {
            let valuation = r.degree.q_valuation()?;
            Ok(AValueCheck { label: r.label.clone(), a_value: r.a_value, valuation, passed: valuation == r.a_value })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_entries() {
        let t = decomposition_table(FragmentKind::OddSpinInvolutionSeries, 3).unwrap();
        assert_eq!(t.entry("1 x rho_3", 1).unwrap(), 1);
        assert_eq!(t.entry("St x rho_4", 2).unwrap(), 1);
        let t = decomposition_table(FragmentKind::OddSpinInvolutionSeries, 7).unwrap();
        assert_eq!(t.entry("1 x rho_4", 1).unwrap(), 5);
        let t = decomposition_table(FragmentKind::MinusTypeUnipotent, 6).unwrap();
        assert_eq!(t.entry("(2,n-2;)", 1).unwrap(), 0);
        let t = decomposition_table(FragmentKind::MinusTypeUnipotent, 9).unwrap();
        assert_eq!(t.entry("(1,2,n-1;0)", 1).unwrap(), 6);
        assert_eq!(t.entry("(0,2,n-1;1)", 2).unwrap(), 6);
        assert!(decomposition_table(FragmentKind::MinusTypeUnipotent, 5).is_err());
    }

    #[test]
    fn steinberg_tensor_trivial_degree() {
        let t = decomposition_table(FragmentKind::OddSpinInvolutionSeries, 5).unwrap();
        let expected = index_part(5).shift(1);
        assert_eq!(t.rows[1].degree, expected);
        assert_eq!(check_a_values(&t).unwrap()[1].valuation, 1);
    }
}
