//! Randomised law checks shared by `properties.rs` and `acceptance.rs`.
//! Each suite returns the number of cases run, or the first failure.

use std::collections::HashMap;
use std::sync::Mutex;

use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use spinlow::degrees::generic_degree;
use spinlow::finitegeom::space::invert;
use spinlow::finitegeom::{value_histogram, Fq, Method, QuadSpace, DEFAULT_BUDGET};
use spinlow::symbols::enumerate_symbols;
use spinlow::{Family, FamilyTag, QPoly, Symbol};

pub const CASES: u32 = 10_000;

fn run<S: Strategy>(strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<u32, String> {
    let mut runner = TestRunner::new(Config {
        cases: CASES,
        max_global_rejects: 20 * CASES,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map(|_| CASES).map_err(|e| e.to_string())
}

fn poly() -> impl Strategy<Value = QPoly> {
    (prop::collection::vec(-20i64..=20, 0..7), 1i64..=4)
        .prop_map(|(c, d)| QPoly::from_int_coeffs(&c).scale(&BigRational::new(1.into(), d.into())))
}

pub fn qpoly_laws() -> Result<u32, String> {
    run((poly(), poly(), poly(), -6i64..=6, 0usize..4), |(a, b, c, x, k)| {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!((&a * &b).eval_int(x), a.eval_int(x) * b.eval_int(x));
        prop_assert_eq!((&a + &c).eval_int(x), a.eval_int(x) + c.eval_int(x));
        if !b.is_zero() {
            let (quot, rem) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&quot * &b) + &rem, a.clone());
            prop_assert!(rem.is_zero() || rem.degree() < b.degree());
            prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a.clone());
        }
        if !a.is_zero() {
            prop_assert_eq!(a.shift(k).q_valuation().unwrap(), a.q_valuation().unwrap() + k);
            prop_assert_eq!(a.shift(k), &a * &QPoly::monomial_int(1, k));
        }
        Ok(())
    })
}

fn family_of(s: &Symbol) -> Family {
    Family::all().into_iter().find(|f| f.admits_defect(s.defect())).expect("every defect has a family")
}

pub fn symbol_shift_invariance() -> Result<u32, String> {
    let row = || prop::collection::btree_set(0u32..9, 0..5);
    run((row(), row(), 1usize..3), |(top, bottom, shifts)| {
        let s = Symbol::new(top.into_iter().collect(), bottom.into_iter().collect()).unwrap();
        prop_assume!(!s.is_empty() && s.rank() >= 2);
        let tag = FamilyTag::new(family_of(&s), s.rank() as u32);
        let base = generic_degree(&s, tag).unwrap();
        let mut t = s.clone();
        for _ in 0..shifts {
            t = t.shift();
        }
        prop_assert_eq!(t.rank(), s.rank());
        prop_assert_eq!(t.defect(), s.defect());
        prop_assert!(t.equivalent(&s));
        prop_assert_eq!(generic_degree(&t, tag).unwrap(), base.clone());
        prop_assert_eq!(generic_degree(&t.swap(), tag).unwrap(), base);
        Ok(())
    })
}

/// Ordered bipartitions `bp[m]` of each `m <= max`.
fn bipartitions(max: usize) -> Vec<u64> {
    let mut p = vec![0u64; max + 1];
    p[0] = 1;
    for part in 1..=max {
        for m in part..=max {
            p[m] += p[m - part];
        }
    }
    (0..=max).map(|m| (0..=m).map(|k| p[k] * p[m - k]).sum()).collect()
}

/// Unipotent character count from the defect decomposition: ordered
/// bipartitions of `n - rank shift`, except that defect-0 symbols are
/// unordered pairs with equal rows counted twice.
fn count_by_bipartitions(family: Family, n: usize) -> u64 {
    let bp = bipartitions(n);
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] += p[m - part];
        }
    }
    let mut total = 0;
    for d in 0..=2 * n + 1 {
        if !family.admits_defect(d) {
            continue;
        }
        let shift = d * d / 4;
        if shift > n {
            break;
        }
        let m = n - shift;
        total += if d == 0 {
            let symmetric = if m.is_multiple_of(2) { p[m / 2] } else { 0 };
            (bp[m] - symmetric) / 2 + 2 * symmetric
        } else {
            bp[m]
        };
    }
    total
}

pub fn enumeration_counts() -> Result<u32, String> {
    let cache: Mutex<HashMap<(Family, u32), Vec<Symbol>>> = Mutex::new(HashMap::new());
    let family = prop::sample::select(Family::all().to_vec());
    run((family, 2u32..=10, any::<prop::sample::Index>()), |(family, n, pick)| {
        let tag = FamilyTag::new(family, n);
        let mut cache = cache.lock().unwrap();
        let symbols = cache
            .entry((family, n))
            .or_insert_with(|| enumerate_symbols(tag).unwrap().into_iter().map(|l| l.symbol).collect());
        prop_assert_eq!(symbols.len() as u64, count_by_bipartitions(family, n as usize));
        let s = pick.get(symbols);
        prop_assert_eq!(s.rank(), n as i64);
        prop_assert!(family.admits_defect(s.defect()));
        prop_assert_eq!(&s.canonical(family).unwrap(), s);
        Ok(())
    })
}

fn config() -> impl Strategy<Value = (Family, u32, u64)> {
    prop_oneof![
        (Just(Family::BC), 2u32..=3, prop::sample::select(vec![3u64, 5, 7, 9])),
        (
            prop::sample::select(vec![Family::DPlus, Family::DMinus]),
            3u32..=3,
            prop::sample::select(vec![3u64, 5, 7, 9])
        ),
        (prop::sample::select(vec![Family::DPlus, Family::DMinus]), 4u32..=4, prop::sample::select(vec![3u64, 5])),
    ]
}

/// Naive counts in a randomly changed basis agree with the stratified
/// counts in the standard basis.
pub fn stratified_vs_naive() -> Result<u32, String> {
    let reference: Mutex<HashMap<(Family, u32, u64), Vec<u64>>> = Mutex::new(HashMap::new());
    let strategy = config().prop_flat_map(|(f, n, q)| {
        let dim = if f == Family::BC { 2 * n - 1 } else { 2 * n - 2 } as usize;
        (Just((f, n, q)), prop::collection::vec(prop::collection::vec(0..q as u16, dim), dim))
    });
    run(strategy, |((family, n, q), basis)| {
        let field = Fq::new(q).unwrap();
        prop_assume!(invert(&field, &basis).is_some());
        let standard = QuadSpace::standard(family, n, q).unwrap();
        let expected = reference
            .lock()
            .unwrap()
            .entry((family, n, q))
            .or_insert_with(|| value_histogram(&standard, Method::Stratified, DEFAULT_BUDGET).unwrap().per_value)
            .clone();
        let g = standard.gram();
        let dim = g.len();
        let entry = |i: usize, j: usize| {
            let mut acc = 0;
            for (k, gk) in g.iter().enumerate() {
                for (l, &gkl) in gk.iter().enumerate() {
                    let t = field.mul(basis[i][k], field.mul(gkl, basis[j][l]));
                    acc = field.add(acc, t);
                }
            }
            acc
        };
        let gram = (0..dim).map(|i| (0..dim).map(|j| entry(i, j)).collect()).collect();
        let moved = QuadSpace::from_gram(family, n, field.clone(), gram).unwrap();
        let naive = value_histogram(&moved, Method::Naive, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(naive.per_value, expected);
        Ok(())
    })
}
