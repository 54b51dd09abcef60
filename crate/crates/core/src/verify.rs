//! Batch verification: each suite runs one family of checks over a range of
//! parameters and reports the failing ones with the statement they belong to.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::brauer::{self, FragmentKind};
use crate::degrees::family::family_table;
use crate::degrees::generic_degree;
use crate::degrees::tables::{table_min_rank, unipotent_table};
use crate::error::{Error, Result};
use crate::finitegeom::{self, Method, OrbitClass, QuadSpace};
use crate::gapscan::{scan_unipotent, Bound, QPolicy};
use crate::symbols::{Family, FamilyTag};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Tables,
    Jordan,
    GapScan,
    Geometry,
    Rationality,
    Identities,
    Fragments,
    BrauerLists,
}

impl Suite {
    pub fn all() -> [Suite; 8] {
        use Suite::*;
        [Tables, Jordan, GapScan, Geometry, Rationality, Identities, Fragments, BrauerLists]
    }

    /// Acceptance criterion number.
    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn title(self) -> &'static str {
        match self {
            Suite::Tables => "unipotent table regression",
            Suite::Jordan => "Jordan decomposition regression",
            Suite::GapScan => "gap reproduction",
            Suite::Geometry => "finite-geometry oracle",
            Suite::Rationality => "cyclotomic rationality",
            Suite::Identities => "modular degree identities",
            Suite::Fragments => "decomposition-fragment consistency",
            Suite::BrauerLists => "Brauer degree list audit",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Tables => "tables",
            Suite::Jordan => "jordan",
            Suite::GapScan => "gap-scan",
            Suite::Geometry => "geometry",
            Suite::Rationality => "rationality",
            Suite::Identities => "identities",
            Suite::Fragments => "fragments",
            Suite::BrauerLists => "brauer-lists",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::all()
            .into_iter()
            .find(|x| x.to_string() == s || x.number().to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Every check passed except documented deviations of the source data.
    KnownDeviation,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::KnownDeviation => "DEVIATION",
        })
    }
}

/// One failed check, named by the statement it belongs to.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub anchor: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub number: u8,
    pub title: &'static str,
    pub status: Status,
    pub checks: usize,
    pub failures: Vec<Failure>,
    pub deviations: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, checks: usize, failures: Vec<Failure>, deviations: Vec<String>) -> Self {
        let status = if !failures.is_empty() || checks == 0 {
            Status::Fail
        } else if deviations.is_empty() {
            Status::Pass
        } else {
            Status::KnownDeviation
        };
        SuiteReport { suite, number: suite.number(), title: suite.title(), status, checks, failures, deviations }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyOptions {
    pub max_n: u32,
    /// Ranks scanned by the gap suite.
    pub gap_ranks: (u32, u32),
    pub policy: QPolicy,
    pub geom_budget: u128,
    pub brauer_q: Vec<u64>,
    pub brauer_ell: Vec<u64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 12,
            gap_ranks: (4, 10),
            policy: QPolicy::default(),
            geom_budget: finitegeom::DEFAULT_BUDGET,
            brauer_q: brauer::GRID_Q.to_vec(),
            brauer_ell: brauer::GRID_ELL.to_vec(),
        }
    }
}

impl VerifyOptions {
    pub fn with_max_n(max_n: u32) -> Self {
        VerifyOptions { max_n, gap_ranks: (4, max_n.min(10)), ..Default::default() }
    }
}

fn fail(anchor: impl Into<String>, detail: impl Into<String>) -> Failure {
    Failure { anchor: anchor.into(), detail: detail.into() }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    match suite {
        Suite::Tables => tables(opts),
        Suite::Jordan => jordan(opts),
        Suite::GapScan => gap_scan(opts),
        Suite::Geometry => geometry(opts),
        Suite::Rationality => rationality(opts),
        Suite::Identities => identities(opts),
        Suite::Fragments => fragments(opts),
        Suite::BrauerLists => brauer_lists(opts),
    }
}

pub fn run_all(opts: &VerifyOptions) -> Result<Vec<SuiteReport>> {
    Suite::all().iter().map(|&s| run_suite(s, opts)).collect()
}

fn tables(opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut checks = 0;
    let mut failures = Vec::new();
    for family in Family::all() {
        let eps = family.epsilon().unwrap_or(1);
        for row in unipotent_table(family) {
            for n in table_min_rank(family)..=opts.max_n {
                if !row.condition.holds_for_n(n) {
                    continue;
                }
                checks += 1;
                let anchor = format!("unipotent table {family}, row {}", row.template.render());
                let tag = FamilyTag::new(family, n);
                let s = row.template.instantiate(n)?;
                let expected = row.degree.eval(n, eps)?;
                let got = generic_degree(&s, tag)?;
                if got != expected {
                    failures.push(fail(anchor, format!("n={n}: generic degree {got} differs from {expected}")));
                } else if got.degree() != Some(row.deg_q.exponent(n)?) {
                    failures.push(fail(anchor, format!("n={n}: degree in q is {:?}", got.degree())));
                }
            }
        }
    }
    Ok(SuiteReport::new(Suite::Tables, checks, failures, vec![]))
}

fn jordan(opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut checks = 0;
    let mut failures = Vec::new();
    for family in Family::all() {
        for n in table_min_rank(family)..=opts.max_n {
            let tag = FamilyTag::new(family, n);
            for e in family_table(tag)? {
                checks += 1;
                let anchor = format!("smallest characters {family}, {}", e.label);
                let again = e.recomputed_degree(tag)?;
                if again != e.degree {
                    failures.push(fail(anchor, format!("n={n}: recomputed {again}, printed {}", e.degree)));
                } else if e.degree.degree() != Some(e.deg_q) {
                    failures.push(fail(
                        anchor,
                        format!("n={n}: degree column {} but polynomial degree {:?}", e.deg_q, e.degree.degree()),
                    ));
                }
            }
        }
    }
    Ok(SuiteReport::new(Suite::Jordan, checks, failures, vec![]))
}

fn gap_scan(opts: &VerifyOptions) -> Result<SuiteReport> {
    let (lo, hi) = opts.gap_ranks;
    let jobs: Vec<(Family, u32)> =
        Family::all().into_iter().flat_map(|f| (lo.max(table_min_rank(f))..=hi).map(move |n| (f, n))).collect();
    let reports = jobs
        .par_iter()
        .map(|&(family, n)| {
            let bound = if family == Family::BC { Bound::UnipotentBC } else { Bound::UnipotentD };
            scan_unipotent(FamilyTag::new(family, n), bound, &opts.policy)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    let mut deviations = Vec::new();
    for r in &reports {
        let anchor = format!("{} for {}", r.bound.anchor(), r.family);
        for m in &r.mismatches {
            failures.push(fail(&anchor, format!("q={:?}: missing {:?}, extra {:?}", m.q, m.missing, m.extra)));
        }
        for label in &r.inconclusive {
            failures.push(fail(&anchor, format!("{label}: domination inconclusive")));
        }
        for label in &r.spot_check_failures {
            failures.push(fail(&anchor, format!("{label}: spot check disagrees")));
        }
        // Group the over-listed labels by the set of q where they occur.
        let mut grouped: Vec<(String, Vec<String>)> = Vec::new();
        for m in &r.overlisted {
            let labels = m.missing.join(", ");
            let at = m.q.map_or("q > threshold".to_string(), |q| format!("q={q}"));
            match grouped.iter_mut().find(|(l, _)| *l == labels) {
                Some((_, qs)) => qs.push(at),
                None => grouped.push((labels, vec![at])),
            }
        }
        for (labels, qs) in grouped {
            deviations.push(format!("{}: listed but above the bound at {}: {labels}", r.family, qs.join(" ")));
        }
    }
    Ok(SuiteReport::new(Suite::GapScan, reports.len(), failures, deviations))
}

fn geometry(opts: &VerifyOptions) -> Result<SuiteReport> {
    let configs = finitegeom::default_configurations();
    let results = configs
        .par_iter()
        .map(|&(f, n, q)| finitegeom::verify_configuration(f, n, q, opts.geom_budget))
        .collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    let mut checks = 0;
    for c in &results {
        checks += 1;
        if !c.passed {
            let anchor = format!("orbit, trace and fixed-space counts for {} n={} q={}", c.family, c.n, c.q);
            failures.push(fail(
                anchor,
                format!(
                    "orbits {:?} vs {:?}, traces {:?} vs {:?}, fixed {:?} vs {:?}",
                    c.orbit_sizes,
                    c.expected_orbit_sizes,
                    c.root_traces,
                    c.expected_root_traces,
                    c.fixed_counts,
                    c.expected_fixed_counts
                ),
            ));
        }
    }
    for (family, n, mults) in [
        (Family::BC, 5, vec![1, 0, 0]),
        (Family::BC, 5, vec![2, 3, 1]),
        (Family::DPlus, 5, vec![1, 1]),
        (Family::DMinus, 6, vec![2, 0]),
    ] {
        checks += 1;
        let b = finitegeom::bookkeeping_identity(family, n, &mults)?;
        if !b.holds {
            failures
                .push(fail(format!("bookkeeping identity {family} n={n}"), format!("{} != {}", b.drop, b.expected)));
        }
    }
    Ok(SuiteReport::new(Suite::Geometry, checks, failures, vec![]))
}

fn rationality(opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut jobs = Vec::new();
    for (f, n, q) in finitegeom::default_configurations() {
        for c in OrbitClass::all() {
            for m in [Method::Naive, Method::Stratified] {
                jobs.push((f, n, q, c, m));
            }
        }
    }
    let results = jobs
        .par_iter()
        .map(|&(f, n, q, c, m)| {
            let space = QuadSpace::standard(f, n, q)?;
            Ok((f, n, q, c, m, finitegeom::trace_sum(&space, c, m, opts.geom_budget)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let failures = results
        .iter()
        .filter(|r| !r.5.is_rational())
        .map(|(f, n, q, c, m, z)| {
            fail(format!("character sum over the {c} class, {f} n={n} q={q}"), format!("{m:?}: {z}"))
        })
        .collect();
    Ok(SuiteReport::new(Suite::Rationality, results.len(), failures, vec![]))
}

fn identities(opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut checks = 0;
    let mut failures = Vec::new();
    for family in Family::all() {
        for n in table_min_rank(family)..=opts.max_n {
            let tag = FamilyTag::new(family, n);
            match brauer::modular_identities(tag) {
                Ok(list) => checks += list.len(),
                Err(e) => failures.push(fail(format!("reduction of rho_t for {tag}"), e.to_string())),
            }
        }
    }
    let checks_b4 = brauer::modular_identities(FamilyTag::new(Family::BC, 4))?;
    let (l, r) = checks_b4[0].at(3);
    checks += 1;
    if (l.clone(), r.clone()) != (BigInt::from(1640), BigInt::from(1640)) {
        failures.push(fail("reduction of rho_t^- for B_4 at q=3", format!("{l} vs {r}")));
    }
    Ok(SuiteReport::new(Suite::Identities, checks, failures, vec![]))
}

fn fragments(opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut checks = 0;
    let mut failures = Vec::new();
    for kind in [FragmentKind::OddSpinInvolutionSeries, FragmentKind::MinusTypeUnipotent] {
        for n in kind.min_rank()..=opts.max_n {
            let t = brauer::decomposition_table(kind, n)?;
            checks += 1;
            if !t.is_unitriangular() {
                failures.push(fail(format!("decomposition fragment {kind}"), format!("n={n}: not unitriangular")));
            }
            for a in brauer::check_a_values(&t)? {
                checks += 1;
                if !a.passed {
                    failures.push(fail(
                        format!("decomposition fragment {kind}, row {}", a.label),
                        format!("n={n}: a-value {} but q-valuation {}", a.a_value, a.valuation),
                    ));
                }
            }
        }
    }
    Ok(SuiteReport::new(Suite::Fragments, checks, failures, vec![]))
}

fn brauer_lists(opts: &VerifyOptions) -> Result<SuiteReport> {
    let grid = brauer::verify_grid(opts.max_n, &opts.brauer_q, &opts.brauer_ell);
    let mut failures: Vec<Failure> =
        grid.failures.iter().map(|d| fail("Brauer character gap theorem degree list", d.clone())).collect();
    let mut checks = grid.entries_checked;
    for family in Family::all() {
        for n in 5..=opts.max_n {
            for (label, ok) in brauer::list_matches_table(family, n)? {
                checks += 1;
                if !ok {
                    failures.push(fail(
                        format!("Brauer degree list {family}, {label}"),
                        format!("n={n}: differs from the complex character degree"),
                    ));
                }
            }
        }
    }
    Ok(SuiteReport::new(Suite::BrauerLists, checks, failures, vec![]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::all() {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
            assert_eq!(s.number().to_string().parse::<Suite>().unwrap(), s);
        }
    }

    #[test]
    fn small_run() {
        let opts = VerifyOptions::with_max_n(6);
        for s in [Suite::Tables, Suite::Jordan, Suite::Identities, Suite::Fragments, Suite::BrauerLists] {
            let r = run_suite(s, &opts).unwrap();
            assert_eq!(r.status, Status::Pass, "{s}: {:?}", r.failures);
        }
    }
}
