//! Symbols `(X, Y)` parametrising unipotent characters of types B/C, D and
//! twisted D, with their rank, defect, equivalence and enumeration.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A pair of strictly increasing rows of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Symbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl Symbol {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        for (name, row) in [("top", &top), ("bottom", &bottom)] {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::BadInput(format!("{name} row {row:?} is not strictly increasing")));
            }
        }
        Ok(Symbol { top, bottom })
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// Total number of entries `|X| + |Y|`.
    pub fn len(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `sum X + sum Y - floor(((|X|+|Y|-1)/2)^2)`.
    pub fn rank(&self) -> i64 {
        let total: i64 = self.top.iter().chain(&self.bottom).map(|&x| x as i64).sum();
        total - rank_offset(self.len())
    }

    /// `| |X| - |Y| |`.
    pub fn defect(&self) -> usize {
        self.top.len().abs_diff(self.bottom.len())
    }

    /// Both rows equal (only possible at defect 0).
    pub fn is_degenerate(&self) -> bool {
        self.top == self.bottom
    }

    /// `({0} ∪ (X+1), {0} ∪ (Y+1))`.
    pub fn shift(&self) -> Symbol {
        let bump = |row: &[u32]| std::iter::once(0).chain(row.iter().map(|x| x + 1)).collect();
        Symbol { top: bump(&self.top), bottom: bump(&self.bottom) }
    }

    /// Undo shifts while both rows start with 0.
    pub fn reduce(&self) -> Symbol {
        let mut s = self.clone();
        while s.top.first() == Some(&0) && s.bottom.first() == Some(&0) {
            s.top = s.top[1..].iter().map(|x| x - 1).collect();
            s.bottom = s.bottom[1..].iter().map(|x| x - 1).collect();
        }
        s
    }

    pub fn swap(&self) -> Symbol {
        Symbol { top: self.bottom.clone(), bottom: self.top.clone() }
    }

    /// Reduced representative with the longer row on top, or at defect 0 the
    /// lexicographically smaller row on top.
    pub fn canonical(&self, family: Family) -> Result<Symbol> {
        let d = self.defect();
        if !family.admits_defect(d) {
            return Err(Error::WrongDefectParity { defect: d, family: family.to_string() });
        }
        Ok(self.canonical_unchecked())
    }

    fn canonical_unchecked(&self) -> Symbol {
        let s = self.reduce();
        let flip = match s.top.len().cmp(&s.bottom.len()) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => s.top > s.bottom,
        };
        if flip {
            s.swap()
        } else {
            s
        }
    }

    /// Same equivalence class (shift and row swap).
    pub fn equivalent(&self, other: &Symbol) -> bool {
        self.canonical_unchecked() == other.canonical_unchecked()
    }
}

fn rank_offset(len: usize) -> i64 {
    // floor(((len-1)/2)^2) = floor((len-1)^2 / 4)
    let m = len as i64 - 1;
    (m * m).div_euclid(4)
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |row: &[u32]| row.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{};{}", join(&self.top), join(&self.bottom))
    }
}

impl FromStr for Symbol {
    type Err = Error;

    /// Parses `"x1,x2,...;y1,y2,..."`; either row may be empty.
    fn from_str(s: &str) -> Result<Self> {
        let (top, bottom) =
            s.split_once(';').ok_or_else(|| Error::Parse(format!("symbol {s:?} has no ';' separator")))?;
        let row = |part: &str| -> Result<Vec<u32>> {
            part.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|e| Error::Parse(format!("entry {t:?}: {e}"))))
                .collect()
        };
        Symbol::new(row(top)?, row(bottom)?)
    }
}

/// Family of groups, selecting the admissible defects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Types B and C: odd defect.
    BC,
    /// Untwisted D: defect divisible by 4.
    DPlus,
    /// Twisted D: defect congruent to 2 mod 4.
    DMinus,
}

impl Family {
    pub fn admits_defect(self, d: usize) -> bool {
        match self {
            Family::BC => d % 2 == 1,
            Family::DPlus => d.is_multiple_of(4),
            Family::DMinus => d % 4 == 2,
        }
    }

    /// `+1` for untwisted D, `-1` for twisted D, `None` for B/C.
    pub fn epsilon(self) -> Option<i64> {
        match self {
            Family::BC => None,
            Family::DPlus => Some(1),
            Family::DMinus => Some(-1),
        }
    }

    pub fn is_orthogonal_even(self) -> bool {
        self != Family::BC
    }

    pub fn all() -> [Family; 3] {
        [Family::BC, Family::DPlus, Family::DMinus]
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::BC => "B",
            Family::DPlus => "D+",
            Family::DMinus => "D-",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "C" | "BC" | "b" | "bc" => Ok(Family::BC),
            "D+" | "Dplus" | "D" | "dplus" | "d+" => Ok(Family::DPlus),
            "D-" | "Dminus" | "2D" | "dminus" | "d-" => Ok(Family::DMinus),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// A family together with the rank `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyTag {
    pub family: Family,
    pub rank: u32,
}

impl FamilyTag {
    pub fn new(family: Family, rank: u32) -> Self {
        FamilyTag { family, rank }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.rank)
    }
}

/// Marker distinguishing the two characters attached to a degenerate symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DegenerateMark {
    Prime,
    DoublePrime,
}

impl fmt::Display for DegenerateMark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegenerateMark::Prime => "'",
            DegenerateMark::DoublePrime => "''",
        })
    }
}

/// One unipotent character label: a canonical symbol plus, for degenerate
/// symbols, which of the two copies.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SymbolLabel {
    pub symbol: Symbol,
    pub mark: Option<DegenerateMark>,
}

impl fmt::Display for SymbolLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mark {
            Some(m) => write!(f, "({}){m}", self.symbol),
            None => write!(f, "({})", self.symbol),
        }
    }
}

impl SymbolLabel {
    /// One label for a non-degenerate symbol, two for a degenerate one.
    pub fn expand(symbol: Symbol) -> Vec<SymbolLabel> {
        if symbol.is_degenerate() {
            vec![
                SymbolLabel { symbol: symbol.clone(), mark: Some(DegenerateMark::Prime) },
                SymbolLabel { symbol, mark: Some(DegenerateMark::DoublePrime) },
            ]
        } else {
            vec![SymbolLabel { symbol, mark: None }]
        }
    }
}

/// All canonical symbols of rank `n` with defect admissible for the family,
/// degenerate ones listed twice. Sorted.
pub fn enumerate_symbols(tag: FamilyTag) -> Result<Vec<SymbolLabel>> {
    let n = tag.rank;
    if n < 2 {
        return Err(Error::OutOfRange(format!("rank {n} < 2")));
    }
    let mut shapes = Vec::new();
    // Row sizes (a, b) with a - b = d >= 0. A reduced symbol with b > 0 has
    // entry sum at least C(a,2) + C(b,2) + b, which bounds b.
    for d in (0..).take_while(|d| rank_slack(n, *d, 0).is_some()) {
        if !tag.family.admits_defect(d) {
            continue;
        }
        for b in 0.. {
            let a = b + d;
            if a == 0 {
                continue;
            }
            let Some(slack) = rank_slack(n, d, b) else {
                break;
            };
            if b > 0 && slack < b as i64 {
                break;
            }
            shapes.push((a, b));
        }
    }
    let mut out: Vec<SymbolLabel> = shapes
        .par_iter()
        .flat_map_iter(|&(a, b)| symbols_of_shape(n, a, b))
        .flat_map_iter(SymbolLabel::expand)
        .collect();
    out.sort();
    Ok(out)
}

/// `target - C(a,2) - C(b,2)` where `target` is the entry sum forced by rank
/// `n`, or `None` when negative.
fn rank_slack(n: u32, d: usize, b: usize) -> Option<i64> {
    let a = b + d;
    let target = n as i64 + rank_offset(a + b);
    let min = choose2(a) + choose2(b);
    (target >= min).then_some(target - min)
}

fn choose2(k: usize) -> i64 {
    (k as i64) * (k as i64 - 1) / 2
}

fn symbols_of_shape(n: u32, a: usize, b: usize) -> Vec<Symbol> {
    let target = n as i64 + rank_offset(a + b);
    let target = target as u32;
    let mut out = Vec::new();
    let tops = rows_with_sum_at_most(a, target);
    for top in &tops {
        let top_sum: u32 = top.iter().sum();
        for bottom in rows_with_sum(b, target - top_sum) {
            if top.first() == Some(&0) && bottom.first() == Some(&0) {
                continue;
            }
            if a == b && *top > bottom {
                continue;
            }
            out.push(Symbol { top: top.clone(), bottom });
        }
    }
    out
}

fn rows_with_sum_at_most(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fill_rows(len, 0, max, None, &mut cur, &mut out);
    out
}

fn rows_with_sum(len: usize, sum: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fill_rows(len, 0, sum, Some(sum), &mut cur, &mut out);
    out
}

// Strictly increasing rows of length `len`, entries >= `min`, with total at
// most `budget` (exactly `exact` when given).
fn fill_rows(len: usize, min: u32, budget: u32, exact: Option<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if len == 0 {
        if exact.is_none_or(|_| budget == 0) {
            out.push(cur.clone());
        }
        return;
    }
    // Smallest completion from x: x + (x+1) + ... + (x+len-1).
    let tail = |x: u32| len as u32 * x + (len as u32 * (len as u32 - 1)) / 2;
    let mut x = min;
    while tail(x) <= budget {
        cur.push(x);
        fill_rows(len - 1, x + 1, budget - x, exact, cur, out);
        cur.pop();
        x += 1;
    }
}

/// Number of unipotent characters (degenerate symbols counted twice).
pub fn unipotent_count(tag: FamilyTag) -> Result<usize> {
    Ok(enumerate_symbols(tag)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> Symbol {
        s.parse().unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(sym("3;").rank(), 3);
        assert_eq!(sym("0,1,6;").rank(), 6);
        assert_eq!(sym("0,1,2;").rank(), 2);
    }

    #[test]
    fn defect_examples() {
        assert_eq!(sym("0,1,6;").defect(), 3);
        assert_eq!(sym("7;0").defect(), 0);
        assert_eq!(sym("0,1,7;1").defect(), 2);
    }

    #[test]
    fn reduce_strips_common_zeros() {
        let s = sym("0,1,2;0,3");
        assert_eq!(s.reduce(), sym("0,1;2"));
        assert_eq!(s.reduce().rank(), 2);
        assert_eq!(s.rank(), 2);
        let r = sym("0,1;2");
        assert_eq!(r.reduce(), r);
    }

    #[test]
    fn canonical_orientation() {
        // Defect 2, so this orientation example lives in twisted D.
        assert_eq!(sym("1;0,2,3").canonical(Family::DMinus).unwrap(), sym("0,2,3;1"));
        assert!(sym("1;0,2,3").canonical(Family::BC).is_err());
        assert_eq!(sym("1;0,2,3,4").canonical(Family::BC).unwrap(), sym("0,2,3,4;1"));
        assert_eq!(sym("2;2").canonical(Family::DPlus).unwrap(), sym("2;2"));
        assert_eq!(sym("4;1").canonical(Family::DPlus).unwrap(), sym("1;4"));
        assert!(matches!(sym("4;1").canonical(Family::BC), Err(Error::WrongDefectParity { defect: 0, .. })));
        assert!(sym("0,4;").canonical(Family::DPlus).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(sym("0,1,6;").to_string(), "0,1,6;");
        assert_eq!(sym(" 1, 2 ; 0 ").to_string(), "1,2;0");
        assert!("1,1;".parse::<Symbol>().is_err());
        assert!("1,2".parse::<Symbol>().is_err());
        assert!("a;".parse::<Symbol>().is_err());
    }

    #[test]
    fn small_counts() {
        let count = |f, n| unipotent_count(FamilyTag::new(f, n)).unwrap();
        assert_eq!(count(Family::BC, 2), 6);
        assert_eq!(count(Family::BC, 3), 12);
        assert_eq!(count(Family::DPlus, 4), 14);
        assert_eq!(count(Family::DMinus, 4), 10);
        assert_eq!(count(Family::DMinus, 5), 20);
    }

    #[test]
    fn d4_has_two_degenerate_pairs() {
        let all = enumerate_symbols(FamilyTag::new(Family::DPlus, 4)).unwrap();
        let degenerate: Vec<_> = all.iter().filter(|l| l.mark.is_some()).collect();
        assert_eq!(degenerate.len(), 4);
        assert!(all.iter().any(|l| l.symbol == sym("2;2")));
        assert!(all.iter().any(|l| l.symbol == sym("1,2;1,2")));
    }

    #[test]
    fn enumeration_is_canonical_and_of_rank_n() {
        for f in Family::all() {
            for n in 2..=7 {
                for l in enumerate_symbols(FamilyTag::new(f, n)).unwrap() {
                    assert_eq!(l.symbol.rank(), n as i64);
                    assert_eq!(l.symbol.canonical(f).unwrap(), l.symbol);
                }
            }
        }
    }

    #[test]
    fn rank_one_rejected() {
        assert!(enumerate_symbols(FamilyTag::new(Family::BC, 1)).is_err());
    }
}
