//! The modular layer: divisibility corrections, the degree lists of the
//! Brauer-character gap theorems with their hypotheses, the degree identities
//! behind the reductions of `rho_t`, and decomposition-matrix fragments.

pub mod decomp;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

pub use decomp::{check_a_values, decomposition_table, AValueCheck, DecompTable, FragmentKind};

use crate::arith::{is_prime, kappa, mult_order, prime_power};
use crate::degrees::family::{entry, family_table};
use crate::error::{Error, Result};
use crate::gapscan::{bound_for, Bound, QParity};
use crate::qpoly::{to_integer, QPoly};
use crate::symbols::{Family, FamilyTag};

/// A `kappa(ell, m)` correction with `m = q^e + c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Kappa {
    pub ell: u64,
    /// `m` in terms of `q`, e.g. `q^5-1`.
    pub argument: String,
    #[serde(serialize_with = "crate::serde_text::display")]
    pub modulus: BigInt,
    pub value: u8,
}

impl Kappa {
    fn new(ell: u64, q: u64, e: u32, c: i64) -> Result<Self> {
        let m = BigInt::from(q).pow(e) + c;
        let m128 = m.to_u128().ok_or_else(|| Error::OutOfRange(format!("q^{e}{c:+} does not fit in 128 bits")))?;
        let sign = if c < 0 { '-' } else { '+' };
        Ok(Kappa { ell, argument: format!("q^{e}{sign}{}", c.abs()), modulus: m, value: kappa(ell, m128) })
    }

    /// Provenance string, e.g. `kappa(11, q^5-1)`.
    pub fn provenance(&self) -> String {
        format!("kappa({}, {})", self.ell, self.argument)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ListedDegree {
    /// Name of the ordinary character the entry comes from.
    pub label: String,
    pub formula: String,
    pub polynomial: QPoly,
    #[serde(serialize_with = "crate::serde_text::display")]
    pub complex_degree: BigInt,
    pub kappa: Option<Kappa>,
    pub provenance: Option<String>,
    #[serde(serialize_with = "crate::serde_text::display")]
    pub degree: BigInt,
    pub below_bound: bool,
}

fn qp(k: u32, c: i64) -> QPoly {
    QPoly::q_pow_plus(k as usize, c)
}

fn ratio(coef_num: i64, coef_den: i64, num: &[QPoly], den: &[QPoly]) -> QPoly {
    let n = num.iter().fold(QPoly::constant_int(coef_num), |acc, p| acc * p.clone());
    let d = den.iter().fold(QPoly::constant_int(coef_den), |acc, p| acc * p.clone());
    n.divide_exact(&d).expect("listed degrees are polynomials")
}

struct Listed {
    label: &'static str,
    formula: String,
    poly: QPoly,
    /// `(e, c)` for a correction `kappa(ell, q^e + c)`.
    kappa: Option<(u32, i64)>,
}

/// The printed degree list as polynomials, before corrections.
fn printed_list(family: Family, n: u32) -> Vec<Listed> {
    let q = QPoly::q();
    let one = QPoly::one();
    let l = |label, formula: &str, poly, kappa| Listed { label, formula: formula.to_string(), poly, kappa };
    match family {
        Family::BC => vec![
            l("1_G", "1", one, None),
            l("rho_{s,1}", "(q^2n-1)/(q^2-1)", ratio(1, 1, &[qp(2 * n, -1)], &[qp(2, -1)]), None),
            l(
                "rho_1",
                "q(q^n-1)(q^(n-1)-1)/(2(q+1))",
                ratio(1, 2, &[q.clone(), qp(n, -1), qp(n - 1, -1)], &[qp(1, 1)]),
                None,
            ),
            l(
                "rho_2",
                "q(q^n+1)(q^(n-1)+1)/(2(q+1))",
                ratio(1, 2, &[q.clone(), qp(n, 1), qp(n - 1, 1)], &[qp(1, 1)]),
                None,
            ),
            l(
                "rho_3",
                "q(q^n+1)(q^(n-1)-1)/(2(q-1))",
                ratio(1, 2, &[q.clone(), qp(n, 1), qp(n - 1, -1)], &[qp(1, -1)]),
                Some((n, -1)),
            ),
            l(
                "rho_4",
                "q(q^n-1)(q^(n-1)+1)/(2(q-1))",
                ratio(1, 2, &[q.clone(), qp(n, -1), qp(n - 1, 1)], &[qp(1, -1)]),
                Some((n, 1)),
            ),
            l("rho_{s,q}", "q(q^2n-1)/(q^2-1)", ratio(1, 1, &[q, qp(2 * n, -1)], &[qp(2, -1)]), None),
            l("rho_t^-", "(q^2n-1)/(q+1)", ratio(1, 1, &[qp(2 * n, -1)], &[qp(1, 1)]), None),
            l("rho_t^+", "(q^2n-1)/(q-1)", ratio(1, 1, &[qp(2 * n, -1)], &[qp(1, -1)]), None),
        ],
        Family::DPlus | Family::DMinus => {
            let e = family.epsilon().expect("type D");
            let s = if e > 0 { "-" } else { "+" };
            let t = if e > 0 { "+" } else { "-" };
            vec![
                l("1_G", "1", one, None),
                l(
                    "rho_1",
                    &format!("q(q^n{s}1)(q^(n-2){t}1)/(q^2-1)"),
                    ratio(1, 1, &[q.clone(), qp(n, -e), qp(n - 2, e)], &[qp(2, -1)]),
                    Some((n - 1, e)),
                ),
                l(
                    "rho_2",
                    "q^2(q^(2n-2)-1)/(q^2-1)",
                    ratio(1, 1, &[q.clone() * q, qp(2 * n - 2, -1)], &[qp(2, -1)]),
                    Some((n, -e)),
                ),
                l(
                    "rho_{s,a}^-, rho_{s,b}^-",
                    &format!("(q^n{s}1)(q^(n-1){s}1)/(2(q+1))"),
                    ratio(1, 2, &[qp(n, -e), qp(n - 1, -e)], &[qp(1, 1)]),
                    None,
                ),
                l(
                    "rho_{s,a}^+, rho_{s,b}^+",
                    &format!("(q^n{s}1)(q^(n-1){t}1)/(2(q-1))"),
                    ratio(1, 2, &[qp(n, -e), qp(n - 1, e)], &[qp(1, -1)]),
                    None,
                ),
                l(
                    "rho_t^-",
                    &format!("(q^n{s}1)(q^(n-1){s}1)/(q+1)"),
                    ratio(1, 1, &[qp(n, -e), qp(n - 1, -e)], &[qp(1, 1)]),
                    None,
                ),
                l(
                    "rho_t^+",
                    &format!("(q^n{s}1)(q^(n-1){t}1)/(q-1)"),
                    ratio(1, 1, &[qp(n, -e), qp(n - 1, e)], &[qp(1, -1)]),
                    None,
                ),
            ]
        }
    }
}

/// The bound of the gap theorem for `family`.
pub fn theorem_bound(family: Family) -> Bound {
    match family {
        Family::BC => Bound::BrauerOdd,
        _ => Bound::BrauerEven,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GuardCondition {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GuardReport {
    pub family: Family,
    pub n: u32,
    pub q: u64,
    pub ell: u64,
    pub conditions: Vec<GuardCondition>,
    pub passed: bool,
}

impl GuardReport {
    pub fn failures(&self) -> Vec<String> {
        self.conditions.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect()
    }
}

/// Every side condition of the gap theorem for `family`, evaluated at
/// `(n, q, ell)`.
///
/// Type B: `q` odd, `n >= 5`, `ell >= 5` prime not dividing `q`, and the
/// order of `q` mod `ell` odd or above `n/2`; `ell = 5` at
/// `(n, q) = (4, 3), (5, 3)` is excluded. Type D: `q` odd, `ell >= 5` prime
/// not dividing `q`; plus type needs `n >= 5` and `ell` not dividing `q + 1`,
/// minus type needs `n >= 6`.
pub fn hypothesis_guard(family: Family, n: u32, q: u64, ell: u64) -> GuardReport {
    let mut conditions = Vec::new();
    let mut cond = |name, passed, detail: String| conditions.push(GuardCondition { name, passed, detail });
    let odd_pp = prime_power(q).is_some_and(|(p, _)| p != 2);
    cond("q is an odd prime power", odd_pp, format!("q = {q}"));
    let min_n = if family == Family::DMinus { 6 } else { 5 };
    cond("rank", n >= min_n, format!("n = {n}, need n >= {min_n}"));
    let prime = is_prime(ell);
    cond("ell is prime", prime, format!("ell = {ell}"));
    cond("ell >= 5", ell >= 5, format!("ell = {ell}"));
    let coprime = !q.is_multiple_of(ell);
    cond("ell does not divide q", coprime, format!("q mod ell = {}", q % ell));
    match family {
        Family::BC => {
            match mult_order(q, ell) {
                Ok(d) if prime => {
                    let ok = d % 2 == 1 || 2 * d > n as u64;
                    cond("order of q mod ell is odd or exceeds n/2", ok, format!("d_{ell}({q}) = {d}"));
                }
                _ => cond("order of q mod ell is odd or exceeds n/2", false, "order undefined".into()),
            }
            let excluded = ell == 5 && q == 3 && (n == 4 || n == 5);
            cond(
                "not an excluded small case",
                !excluded,
                if excluded {
                    format!("(n, q) = ({n}, {q}) with ell = 5 is excluded from the conclusion")
                } else {
                    "none".into()
                },
            );
        }
        Family::DPlus => {
            cond(
                "ell does not divide q + 1",
                !(q + 1).is_multiple_of(ell),
                format!("(q + 1) mod ell = {}", (q + 1) % ell),
            );
        }
        Family::DMinus => {}
    }
    let passed = conditions.iter().all(|c| c.passed);
    GuardReport { family, n, q, ell, conditions, passed }
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeList {
    pub family: Family,
    pub n: u32,
    pub q: u64,
    pub ell: u64,
    pub bound: Bound,
    #[serde(serialize_with = "crate::serde_text::display")]
    pub bound_value: BigInt,
    pub guard: GuardReport,
    pub entries: Vec<ListedDegree>,
    pub all_below: bool,
}

/// The Brauer degree list of the gap theorem at `(n, q, ell)`, with each
/// correction `kappa` evaluated.
pub fn brauer_degree_list(family: Family, n: u32, q: u64, ell: u64) -> Result<DegreeList> {
    let guard = hypothesis_guard(family, n, q, ell);
    if !guard.passed {
        return Err(Error::HypothesisViolated(format!(
            "{family} n={n} q={q} ell={ell}: {}",
            guard.failures().join("; ")
        )));
    }
    let bound = theorem_bound(family);
    let bound_value = to_integer(&bound_for(bound, n, QParity::Odd)?.eval_int(q as i64))
        .ok_or_else(|| Error::BadInput("bound is not integral".into()))?;
    let entries = printed_list(family, n)
        .into_iter()
        .map(|item| {
            let complex = to_integer(&item.poly.eval_int(q as i64)).expect("integral degree");
            let kappa = item.kappa.map(|(e, c)| Kappa::new(ell, q, e, c)).transpose()?;
            let degree = &complex - kappa.as_ref().map_or(0, |k| k.value);
            Ok(ListedDegree {
                label: item.label.to_string(),
                formula: item.formula,
                polynomial: item.poly,
                provenance: kappa.as_ref().map(Kappa::provenance),
                below_bound: degree < bound_value,
                complex_degree: complex,
                kappa,
                degree,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_below = entries.iter().all(|e| e.below_bound);
    Ok(DegreeList { family, n, q, ell, bound, bound_value, guard, entries, all_below })
}

/// Whether the printed degree list agrees, entry by entry, with the degrees
/// of the complex characters of the same name in the table of smallest
/// characters.
pub fn list_matches_table(family: Family, n: u32) -> Result<Vec<(String, bool)>> {
    let table = family_table(FamilyTag::new(family, n))?;
    printed_list(family, n)
        .into_iter()
        .map(|item| Ok((item.label.to_string(), entry(&table, item.label)?.degree == item.poly)))
        .collect()
}

/// A degree identity between characters of the table of smallest
/// characters, checked coefficient by coefficient.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub family: Family,
    pub n: u32,
    pub statement: String,
    pub lhs: QPoly,
    pub rhs: QPoly,
    pub holds: bool,
}

impl IdentityCheck {
    pub fn at(&self, q: i64) -> (BigInt, BigInt) {
        let v = |p: &QPoly| to_integer(&p.eval_int(q)).expect("integral degree");
        (v(&self.lhs), v(&self.rhs))
    }
}

/// `(coefficient, label)` combinations of table degrees plus a constant.
fn combination(
    table: &[crate::degrees::family::CharacterEntry],
    terms: &[(i64, &str)],
    constant: i64,
) -> Result<QPoly> {
    let mut out = QPoly::constant_int(constant);
    for &(c, label) in terms {
        out = out + entry(table, label)?.degree.scale(&BigInt::from(c).into());
    }
    Ok(out)
}

/// `(statement, lhs label, rhs terms, rhs constant)`. The table stores
/// `rho_{s,a}` and `rho_{s,b}` as one row of common degree.
type Identity = (&'static str, &'static str, Vec<(i64, &'static str)>, i64);

fn identity_specs(family: Family) -> Vec<Identity> {
    const SA_PLUS: &str = "rho_{s,a}^+, rho_{s,b}^+";
    const SA_MINUS: &str = "rho_{s,a}^-, rho_{s,b}^-";
    match family {
        Family::BC => vec![
            ("rho_t^- = rho_1 + rho_2 - 1", "rho_t^-", vec![(1, "rho_1"), (1, "rho_2")], -1),
            ("rho_t^+ = rho_3 + rho_4 + 1", "rho_t^+", vec![(1, "rho_3"), (1, "rho_4")], 1),
            ("rho_t^+ = rho_{s,q} + rho_{s,1}", "rho_t^+", vec![(1, "rho_{s,q}"), (1, "rho_{s,1}")], 0),
            ("rho_t^- = rho_{s,q} - rho_{s,1}", "rho_t^-", vec![(1, "rho_{s,q}"), (-1, "rho_{s,1}")], 0),
        ],
        Family::DPlus => vec![
            ("rho_t^+ = rho_1 + rho_2 + 1", "rho_t^+", vec![(1, "rho_1"), (1, "rho_2")], 1),
            ("rho_t^+ = rho_{s,a}^+ + rho_{s,b}^+", "rho_t^+", vec![(2, SA_PLUS)], 0),
            ("rho_t^- = rho_{s,a}^- + rho_{s,b}^-", "rho_t^-", vec![(2, SA_MINUS)], 0),
        ],
        Family::DMinus => vec![
            ("rho_t^- = -rho_1 + rho_2 + 1", "rho_t^-", vec![(-1, "rho_1"), (1, "rho_2")], 1),
            ("rho_t^+ = rho_{s,a}^+ + rho_{s,b}^+", "rho_t^+", vec![(2, SA_PLUS)], 0),
            ("rho_t^- = rho_{s,a}^- + rho_{s,b}^-", "rho_t^-", vec![(2, SA_MINUS)], 0),
        ],
    }
}

/// Readings of the reduction formulas that fail at the level of degrees:
/// the sum `rho_1 + rho_2 + 1` for the plus-type `rho_t` of type B, and the
/// sum `eps rho_1 + rho_2 + 1` paired with `rho_t^{-eps}` for type D.
fn rejected_specs(family: Family) -> Vec<Identity> {
    match family {
        Family::BC => vec![("rho_t^+ = rho_1 + rho_2 + 1", "rho_t^+", vec![(1, "rho_1"), (1, "rho_2")], 1)],
        Family::DPlus => vec![("rho_t^- = rho_1 + rho_2 + 1", "rho_t^-", vec![(1, "rho_1"), (1, "rho_2")], 1)],
        Family::DMinus => vec![("rho_t^+ = -rho_1 + rho_2 + 1", "rho_t^+", vec![(-1, "rho_1"), (1, "rho_2")], 1)],
    }
}

fn evaluate(tag: FamilyTag, specs: Vec<Identity>) -> Result<Vec<IdentityCheck>> {
    let table = family_table(tag)?;
    specs
        .into_iter()
        .map(|(statement, lhs_label, terms, constant)| {
            let lhs = entry(&table, lhs_label)?.degree.clone();
            let rhs = combination(&table, &terms, constant)?;
            Ok(IdentityCheck {
                family: tag.family,
                n: tag.rank,
                holds: lhs == rhs,
                statement: statement.to_string(),
                lhs,
                rhs,
            })
        })
        .collect()
}

/// The degree identities behind the reductions modulo `ell` of `rho_t^+`
/// and `rho_t^-`. Fails with `IdentityFailed` if any does not hold.
pub fn modular_identities(tag: FamilyTag) -> Result<Vec<IdentityCheck>> {
    let checks = evaluate(tag, identity_specs(tag.family))?;
    if let Some(bad) = checks.iter().find(|c| !c.holds) {
        return Err(Error::IdentityFailed(format!("{tag}: {}", bad.statement)));
    }
    Ok(checks)
}

/// The rejected readings, evaluated (each is expected not to hold).
pub fn rejected_identities(tag: FamilyTag) -> Result<Vec<IdentityCheck>> {
    evaluate(tag, rejected_specs(tag.family))
}

/// Grid used by [`verify_grid`] by default.
pub const GRID_Q: [u64; 6] = [3, 5, 7, 9, 11, 13];
pub const GRID_ELL: [u64; 4] = [5, 7, 11, 13];

#[derive(Clone, Debug, Default, Serialize)]
pub struct GridSummary {
    pub lists_checked: usize,
    pub entries_checked: usize,
    pub skipped_by_guard: usize,
    pub kappa_corrections: usize,
    pub failures: Vec<String>,
}

impl GridSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.lists_checked > 0
    }
}

/// Every degree list with a passing guard over `families x n <= max_n x qs x
/// ells` lies strictly below its bound.
pub fn verify_grid(max_n: u32, qs: &[u64], ells: &[u64]) -> GridSummary {
    let mut jobs = Vec::new();
    for family in Family::all() {
        for n in 3..=max_n {
            for &q in qs {
                for &ell in ells {
                    jobs.push((family, n, q, ell));
                }
            }
        }
    }
    let results: Vec<_> = jobs
        .par_iter()
        .map(|&(family, n, q, ell)| {
            if !hypothesis_guard(family, n, q, ell).passed {
                return None;
            }
            Some(brauer_degree_list(family, n, q, ell).map_err(|e| format!("{family} n={n} q={q} ell={ell}: {e}")))
        })
        .collect();
    let mut summary = GridSummary::default();
    for (r, &(family, n, q, ell)) in results.into_iter().zip(&jobs) {
        match r {
            None => summary.skipped_by_guard += 1,
            Some(Err(e)) => summary.failures.push(e),
            Some(Ok(list)) => {
                summary.lists_checked += 1;
                summary.entries_checked += list.entries.len();
                summary.kappa_corrections +=
                    list.entries.iter().filter(|e| e.kappa.as_ref().is_some_and(|k| k.value == 1)).count();
                for e in list.entries.iter().filter(|e| !e.below_bound) {
                    summary.failures.push(format!(
                        "{family} n={n} q={q} ell={ell}: {} = {} is not below {}",
                        e.label, e.degree, list.bound_value
                    ));
                }
                if list.entries.iter().any(|e| e.degree.is_zero()) {
                    summary.failures.push(format!("{family} n={n} q={q} ell={ell}: zero degree"));
                }
            }
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_spin_list_example() {
        let list = brauer_degree_list(Family::BC, 5, 3, 11).unwrap();
        let rho3 = list.entries.iter().find(|e| e.label == "rho_3").unwrap();
        assert_eq!(rho3.complex_degree, BigInt::from(14640));
        assert_eq!(rho3.degree, BigInt::from(14639));
        assert_eq!(rho3.provenance.as_deref(), Some("kappa(11, q^5-1)"));
        assert!(list.all_below);
    }

    #[test]
    fn guards() {
        let g = hypothesis_guard(Family::BC, 5, 3, 5);
        assert!(!g.passed);
        let failing: Vec<_> = g.conditions.iter().filter(|c| !c.passed).map(|c| c.name).collect();
        assert_eq!(failing, vec!["not an excluded small case"]);
        assert!(hypothesis_guard(Family::DPlus, 6, 5, 7).passed);
        assert!(!hypothesis_guard(Family::BC, 6, 4, 7).passed);
        assert!(!hypothesis_guard(Family::DPlus, 6, 5, 3).passed);
        assert!(!hypothesis_guard(Family::DPlus, 6, 4, 5).passed);
        assert!(matches!(brauer_degree_list(Family::BC, 5, 3, 5), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn identity_example() {
        let checks = modular_identities(FamilyTag::new(Family::BC, 4)).unwrap();
        let (l, r) = checks[0].at(3);
        assert_eq!((l, r), (BigInt::from(1640), BigInt::from(780 + 861 - 1)));
        let d = modular_identities(FamilyTag::new(Family::DPlus, 5)).unwrap();
        let expected = ratio(1, 1, &[qp(5, -1), qp(4, 1)], &[qp(1, -1)]);
        assert_eq!(d[0].lhs, expected);
    }

    #[test]
    fn rejected_readings_fail() {
        for family in Family::all() {
            for c in rejected_identities(FamilyTag::new(family, 6)).unwrap() {
                assert!(!c.holds, "{family} {}", c.statement);
            }
        }
    }
}
