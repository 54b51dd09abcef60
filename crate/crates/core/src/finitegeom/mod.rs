//! Brute-force counts over quadratic spaces: vector classes by form value,
//! additive-character sums over classes of linear functionals, counts on the
//! fixed space of a Levi root element, and the resulting bookkeeping identity.

pub mod cyc;
pub mod field;
pub mod space;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

pub use cyc::CycInt;
pub use field::{Elem, Fq};
pub use space::{OrbitClass, QuadSpace};

use crate::error::{Error, Result};
use crate::qpoly::{to_i128, QPoly};
use crate::symbols::Family;

/// Default ceiling on the number of vectors enumerated in one call.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// How vectors are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Every vector of the space.
    Naive,
    /// Only the middle block; the hyperbolic pair of end coordinates is
    /// counted in closed form (`F = ac + F(mid)`).
    #[default]
    Stratified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SumDomain {
    All,
    Nonzero,
}

/// `sum phi(a)` with `phi(a) = zeta_p^{Tr(a)}` over `F_q` or `F_q^*`.
pub fn char_sum(domain: SumDomain, field: &Fq) -> CycInt {
    let mut z = CycInt::zero(field.p());
    for a in field.elements() {
        if domain == SumDomain::Nonzero && a == 0 {
            continue;
        }
        z.add_root_power(field.trace(a), 1);
    }
    z
}

fn checked_size(q: u64, exp: usize, budget: u128) -> Result<u128> {
    let size = (q as u128).checked_pow(exp as u32).unwrap_or(u128::MAX);
    if size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    Ok(size)
}

/// Calls `visit` on every assignment of the coordinates `free` of `v`.
fn for_each_assignment(q: u32, v: &mut [Elem], free: &[usize], mut visit: impl FnMut(&[Elem])) {
    free.iter().for_each(|&i| v[i] = 0);
    loop {
        visit(v);
        let mut k = 0;
        loop {
            if k == free.len() {
                return;
            }
            let i = free[k];
            v[i] += 1;
            if (v[i] as u32) < q {
                break;
            }
            v[i] = 0;
            k += 1;
        }
    }
}

/// `table[a][t]`: number of vectors (zero included) with first coordinate
/// `a` and form value `t`.
fn first_coordinate_table(space: &QuadSpace, method: Method, budget: u128) -> Result<Vec<Vec<u64>>> {
    let q = space.field().size();
    let dim = space.dim();
    match method {
        Method::Naive => {
            checked_size(q as u64, dim, budget)?;
            let free: Vec<usize> = (1..dim).collect();
            Ok((0..q as Elem)
                .into_par_iter()
                .map(|a| {
                    let mut row = vec![0u64; q as usize];
                    let mut v = vec![0; dim];
                    v[0] = a;
                    for_each_assignment(q, &mut v, &free, |v| row[space.form(v) as usize] += 1);
                    row
                })
                .collect())
        }
        Method::Stratified => {
            if !space.hyperbolic_ends() {
                return Err(Error::BadInput(
                    "stratified count needs the first and last coordinates to form a hyperbolic pair".into(),
                ));
            }
            checked_size(q as u64, dim - 2, budget)?;
            let mid = middle_histogram(space);
            let rest = (q as u64).pow(dim as u32 - 2);
            let mut table = vec![vec![rest; q as usize]; q as usize];
            // a = 0: F = F(mid) and the last coordinate is free.
            table[0] = mid.iter().map(|&h| h * q as u64).collect();
            // a != 0: each middle vector fixes the last coordinate uniquely.
            Ok(table)
        }
    }
}

/// Histogram of the form restricted to coordinates `1..dim-1`.
fn middle_histogram(space: &QuadSpace) -> Vec<u64> {
    let q = space.field().size();
    let dim = space.dim();
    let free: Vec<usize> = (1..dim - 1).collect();
    let mut hist = vec![0u64; q as usize];
    if free.is_empty() {
        hist[0] = 1;
        return hist;
    }
    // Split on the first middle coordinate for parallelism.
    let parts: Vec<Vec<u64>> = (0..q as Elem)
        .into_par_iter()
        .map(|b| {
            let mut h = vec![0u64; q as usize];
            let mut v = vec![0; dim];
            v[1] = b;
            for_each_assignment(q, &mut v, &free[1..], |v| h[space.form(v) as usize] += 1);
            h
        })
        .collect();
    for p in parts {
        hist.iter_mut().zip(p).for_each(|(h, c)| *h += c);
    }
    hist
}

/// Counts of vectors by class; `other` collects nonzero form values that are
/// not class representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub singular: u64,
    pub square: u64,
    pub nonsquare: u64,
    pub other: u64,
    pub total: u64,
}

impl ClassCounts {
    pub fn get(&self, class: OrbitClass) -> u64 {
        match class {
            OrbitClass::Singular => self.singular,
            OrbitClass::Square => self.square,
            OrbitClass::Nonsquare => self.nonsquare,
        }
    }

    fn from_values(space: &QuadSpace, per_value: &[u64]) -> Self {
        let rep = |c| per_value[space.class_value(c) as usize];
        let total: u64 = per_value.iter().sum();
        let (singular, square, nonsquare) = (per_value[0] - 1, rep(OrbitClass::Square), rep(OrbitClass::Nonsquare));
        ClassCounts { singular, square, nonsquare, other: total - 1 - singular - square - nonsquare, total }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValueHistogram {
    pub family: Family,
    pub n: u32,
    pub q: u64,
    pub dim: usize,
    pub method: Method,
    pub counts: ClassCounts,
    /// Count of vectors with form value `t`, indexed by the element index.
    pub per_value: Vec<u64>,
}

impl ValueHistogram {
    /// Whether every nonzero value has the count of the representative in
    /// its square class.
    pub fn classes_uniform(&self, space: &QuadSpace) -> bool {
        let f = space.field();
        let rep = space.class_value(OrbitClass::Square);
        let rep_inv = f.inv(rep).expect("nonzero representative");
        (1..f.size() as Elem).all(|t| {
            let expected = if f.is_square(f.mul(t, rep_inv)) { self.counts.square } else { self.counts.nonsquare };
            self.per_value[t as usize] == expected
        })
    }
}

pub fn value_histogram(space: &QuadSpace, method: Method, budget: u128) -> Result<ValueHistogram> {
    let table = first_coordinate_table(space, method, budget)?;
    let q = space.field().size() as usize;
    let per_value: Vec<u64> = (0..q).map(|t| table.iter().map(|row| row[t]).sum()).collect();
    Ok(ValueHistogram {
        family: space.family(),
        n: space.rank(),
        q: space.q(),
        dim: space.dim(),
        method,
        counts: ClassCounts::from_values(space, &per_value),
        per_value,
    })
}

/// `sum phi(t(x))` over nonzero functionals `t` in `class`, with `x` the
/// first basis vector; functionals are classified by the dual form.
pub fn trace_sum(space: &QuadSpace, class: OrbitClass, method: Method, budget: u128) -> Result<CycInt> {
    let dual = space.dual();
    let table = first_coordinate_table(&dual, method, budget)?;
    let f = space.field();
    let t = dual.class_value(class) as usize;
    let mut z = CycInt::zero(f.p());
    for (a, row) in table.iter().enumerate() {
        let mut count = row[t] as i128;
        if a == 0 && t == 0 {
            count -= 1;
        }
        z.add_root_power(f.trace(a as Elem), count);
    }
    Ok(z)
}

/// Character value on the long root element `x`; the sum must be rational.
pub fn trace_on_root_element(space: &QuadSpace, class: OrbitClass, method: Method, budget: u128) -> Result<i128> {
    let z = trace_sum(space, class, method, budget)?;
    z.to_integer().ok_or_else(|| {
        Error::NonRationalSum(format!("{} n={} q={} {class}: {z}", space.family(), space.rank(), space.q()))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedSpaceCounts {
    pub family: Family,
    pub n: u32,
    pub q: u64,
    pub u: Vec<Elem>,
    pub w: Vec<Elem>,
    pub subspace_dim: usize,
    pub counts: ClassCounts,
}

/// Counts on `U = <u, w>^perp` for a singular orthogonal pair, by default the
/// first two basis vectors.
pub fn fixed_space_counts(
    space: &QuadSpace,
    pair: Option<(&[Elem], &[Elem])>,
    budget: u128,
) -> Result<FixedSpaceCounts> {
    let dim = space.dim();
    if dim < 5 {
        return Err(Error::OutOfRange(format!("fixed-space counts need dimension at least 5, got {dim}")));
    }
    let f = space.field();
    let unit = |i: usize| (0..dim).map(|j| Elem::from(i == j)).collect::<Vec<_>>();
    let (u, w) = match pair {
        Some((u, w)) => (u.to_vec(), w.to_vec()),
        None => (unit(0), unit(1)),
    };
    if u.len() != dim || w.len() != dim || u.iter().chain(&w).any(|&x| x as u32 >= f.size()) {
        return Err(Error::BadPair("vectors do not lie in the space".into()));
    }
    if space.form(&u) != 0 || space.form(&w) != 0 {
        return Err(Error::BadPair("vectors are not singular".into()));
    }
    if space.bilinear(&u, &w) != 0 {
        return Err(Error::BadPair("vectors are not orthogonal".into()));
    }
    let rows: Vec<Vec<Elem>> =
        [&u, &w].iter().map(|x| (0..dim).map(|j| space.bilinear(x, &unit(j))).collect()).collect();
    let basis = space::nullspace(f, &rows, dim);
    if basis.len() != dim - 2 {
        return Err(Error::BadPair("vectors are linearly dependent".into()));
    }
    checked_size(space.q(), basis.len(), budget)?;
    let q = f.size();
    let k = basis.len();
    let combine = |coef: &[Elem]| -> Vec<Elem> {
        let mut v = vec![0; dim];
        for (c, b) in coef.iter().zip(&basis) {
            if *c != 0 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x = f.add(*x, f.mul(*c, *y));
                }
            }
        }
        v
    };
    let free: Vec<usize> = (1..k).collect();
    let parts: Vec<Vec<u64>> = (0..q as Elem)
        .into_par_iter()
        .map(|c0| {
            let mut h = vec![0u64; q as usize];
            let mut coef = vec![0; k];
            coef[0] = c0;
            for_each_assignment(q, &mut coef, &free, |c| h[space.form(&combine(c)) as usize] += 1);
            h
        })
        .collect();
    let mut per_value = vec![0u64; q as usize];
    for p in parts {
        per_value.iter_mut().zip(p).for_each(|(h, c)| *h += c);
    }
    Ok(FixedSpaceCounts {
        family: space.family(),
        n: space.rank(),
        q: space.q(),
        u,
        w,
        subspace_dim: k,
        counts: ClassCounts::from_values(space, &per_value),
    })
}

/// Closed forms in `q` for the counts, per class in the order singular,
/// square, nonsquare.
#[derive(Clone, Debug, Serialize)]
pub struct ClosedForms {
    pub family: Family,
    pub n: u32,
    pub orbit_sizes: [QPoly; 3],
    pub root_traces: [QPoly; 3],
    /// Only for dimension at least 5.
    pub fixed_counts: Option<[QPoly; 3]>,
}

fn qm(c: i64, k: u32) -> QPoly {
    QPoly::monomial_int(c, k as usize)
}

pub fn closed_forms(family: Family, n: u32) -> Result<ClosedForms> {
    let one = QPoly::one();
    match family {
        Family::BC => {
            if n < 2 {
                return Err(Error::OutOfRange(format!("rank {n} < 2")));
            }
            let top = qm(1, 2 * n - 2);
            let mid = qm(1, n - 1);
            let sizes = [&top - &one, &top + &mid, &top - &mid];
            let traces = [-one.clone(), mid.clone(), -mid.clone()];
            let fixed = (n >= 3).then(|| {
                let t = qm(1, 2 * n - 4);
                [&t - &one, &t + &mid, &t - &mid]
            });
            Ok(ClosedForms { family, n, orbit_sizes: sizes, root_traces: traces, fixed_counts: fixed })
        }
        Family::DPlus | Family::DMinus => {
            if n < 3 {
                return Err(Error::OutOfRange(format!("rank {n} < 3")));
            }
            let eps = family.epsilon().expect("type D");
            let sing = qm(eps, n - 1) - qm(eps, n - 2) - one.clone();
            let nonzero_trace = qm(-eps, n - 2);
            let sizes_top = qm(1, 2 * n - 3);
            let s0 = &sizes_top + &sing;
            let s1 = &sizes_top + &nonzero_trace;
            let fixed = (n >= 4).then(|| {
                let t = qm(1, 2 * n - 5);
                let nz = &t + &nonzero_trace;
                [&t + &sing, nz.clone(), nz]
            });
            Ok(ClosedForms {
                family,
                n,
                orbit_sizes: [s0, s1.clone(), s1],
                root_traces: [sing, nonzero_trace.clone(), nonzero_trace],
                fixed_counts: fixed,
            })
        }
    }
}

fn eval(p: &QPoly, q: u64) -> i128 {
    to_i128(&p.eval_int(q as i64)).expect("integral closed form")
}

/// Outcome of the bookkeeping step: with `phi(x) = phi(y)`, the drop
/// `chi^c(1) - chi^c(y)` equals `sum a_i (fix_i - trace_i)`.
#[derive(Clone, Debug, Serialize)]
pub struct Bookkeeping {
    pub family: Family,
    pub n: u32,
    pub multiplicities: Vec<u64>,
    pub drop: QPoly,
    pub expected: QPoly,
    pub holds: bool,
}

/// Multiplicities are `(a_0, a_+, a_-)` for type B and `(a_0, a_1)` for type
/// D, where `a_1` counts all nonzero-value classes.
pub fn bookkeeping_identity(family: Family, n: u32, multiplicities: &[u64]) -> Result<Bookkeeping> {
    let forms = closed_forms(family, n)?;
    let fixed = forms
        .fixed_counts
        .as_ref()
        .ok_or_else(|| Error::OutOfRange(format!("rank {n} too small for the Levi root element")))?;
    let classes: &[usize] = match family {
        Family::BC => &[0, 1, 2],
        _ => &[0, 1],
    };
    if multiplicities.len() != classes.len() {
        return Err(Error::BadInput(format!(
            "{family} takes {} multiplicities, got {}",
            classes.len(),
            multiplicities.len()
        )));
    }
    let mut drop = QPoly::zero();
    for (&i, &a) in classes.iter().zip(multiplicities) {
        let diff = &fixed[i] - &forms.root_traces[i];
        drop = drop + diff.scale(&BigRational::from_integer(a.into()));
    }
    let total: u64 = multiplicities.iter().sum();
    let k = if family == Family::BC { 2 * n - 4 } else { 2 * n - 5 };
    let expected = qm(total as i64, k);
    Ok(Bookkeeping { family, n, multiplicities: multiplicities.to_vec(), holds: drop == expected, drop, expected })
}

/// Brute-force counts at one `(family, n, q)` next to their closed forms.
#[derive(Clone, Debug, Serialize)]
pub struct GeomCheck {
    pub family: Family,
    pub n: u32,
    pub q: u64,
    pub orbit_sizes: [u64; 3],
    pub expected_orbit_sizes: [i128; 3],
    pub root_traces: [i128; 3],
    pub expected_root_traces: [i128; 3],
    pub fixed_counts: Option<[u64; 3]>,
    pub expected_fixed_counts: Option<[i128; 3]>,
    /// Naive and stratified enumeration agree (when the naive one fits the
    /// budget).
    pub methods_agree: Option<bool>,
    pub dual_agrees: bool,
    pub classes_uniform: bool,
    pub passed: bool,
}

pub fn verify_configuration(family: Family, n: u32, q: u64, budget: u128) -> Result<GeomCheck> {
    let space = QuadSpace::standard(family, n, q)?;
    let forms = closed_forms(family, n)?;
    let hist = value_histogram(&space, Method::Stratified, budget)?;
    let methods_agree = match value_histogram(&space, Method::Naive, budget) {
        Ok(naive) => {
            let mut agree = naive.per_value == hist.per_value;
            for c in OrbitClass::all() {
                agree &= trace_on_root_element(&space, c, Method::Naive, budget)?
                    == trace_on_root_element(&space, c, Method::Stratified, budget)?;
            }
            Some(agree)
        }
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let dual_agrees = value_histogram(&space.dual(), Method::Stratified, budget)?.per_value == hist.per_value
        && value_histogram(&space.reversed(), Method::Stratified, budget)?.per_value == hist.per_value;
    let classes_uniform = hist.classes_uniform(&space);
    let classes = OrbitClass::all();
    let orbit_sizes = classes.map(|c| hist.counts.get(c));
    let expected_orbit_sizes = [0, 1, 2].map(|i| eval(&forms.orbit_sizes[i], q));
    let mut root_traces = [0; 3];
    for (slot, c) in root_traces.iter_mut().zip(classes) {
        *slot = trace_on_root_element(&space, c, Method::Stratified, budget)?;
    }
    let expected_root_traces = [0, 1, 2].map(|i| eval(&forms.root_traces[i], q));
    let (fixed_counts, expected_fixed_counts) = match &forms.fixed_counts {
        Some(fc) if space.dim() >= 5 => {
            let got = fixed_space_counts(&space, None, budget)?;
            (Some(classes.map(|c| got.counts.get(c))), Some([0, 1, 2].map(|i| eval(&fc[i], q))))
        }
        _ => (None, None),
    };
    let passed = orbit_sizes.iter().zip(&expected_orbit_sizes).all(|(&a, &b)| a as i128 == b)
        && root_traces == expected_root_traces
        && match (&fixed_counts, &expected_fixed_counts) {
            (Some(a), Some(b)) => a.iter().zip(b).all(|(&x, &y)| x as i128 == y),
            _ => true,
        }
        && methods_agree != Some(false)
        && dual_agrees
        && classes_uniform;
    Ok(GeomCheck {
        family,
        n,
        q,
        orbit_sizes,
        expected_orbit_sizes,
        root_traces,
        expected_root_traces,
        fixed_counts,
        expected_fixed_counts,
        methods_agree,
        dual_agrees,
        classes_uniform,
        passed,
    })
}

/// The configurations checked by default: B with `n` in 2..=4 and `q` in
/// {3, 5, 7}; D of both types with `n` in {3, 4} and `q` in {3, 5}.
pub fn default_configurations() -> Vec<(Family, u32, u64)> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for q in [3, 5, 7] {
            out.push((Family::BC, n, q));
        }
    }
    for family in [Family::DPlus, Family::DMinus] {
        for n in 3..=4 {
            for q in [3, 5] {
                out.push((family, n, q));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn character_sums() {
        assert_eq!(char_sum(SumDomain::All, &Fq::new(5).unwrap()).to_integer(), Some(0));
        assert_eq!(char_sum(SumDomain::Nonzero, &Fq::new(5).unwrap()).to_integer(), Some(-1));
        assert_eq!(char_sum(SumDomain::All, &Fq::new(9).unwrap()).to_integer(), Some(0));
        assert_eq!(char_sum(SumDomain::Nonzero, &Fq::new(27).unwrap()).to_integer(), Some(-1));
    }

    #[test]
    fn histogram_examples() {
        let b = QuadSpace::standard(Family::BC, 3, 3).unwrap();
        let h = value_histogram(&b, Method::Naive, DEFAULT_BUDGET).unwrap();
        assert_eq!((h.counts.singular, h.counts.square, h.counts.nonsquare), (80, 90, 72));
        let d = QuadSpace::standard(Family::DPlus, 4, 3).unwrap();
        let h = value_histogram(&d, Method::Naive, DEFAULT_BUDGET).unwrap();
        assert_eq!((h.counts.singular, h.counts.square, h.counts.nonsquare), (260, 234, 234));
        let d = QuadSpace::standard(Family::DMinus, 4, 3).unwrap();
        let h = value_histogram(&d, Method::Stratified, DEFAULT_BUDGET).unwrap();
        assert_eq!((h.counts.singular, h.counts.square, h.counts.nonsquare), (224, 252, 252));
        assert_eq!(h.counts.total, 729);
    }

    #[test]
    fn trace_examples() {
        let b = QuadSpace::standard(Family::BC, 3, 3).unwrap();
        let t = |s: &QuadSpace, c| trace_on_root_element(s, c, Method::Naive, DEFAULT_BUDGET).unwrap();
        assert_eq!(t(&b, OrbitClass::Singular), -1);
        assert_eq!(t(&b, OrbitClass::Square), 9);
        assert_eq!(t(&b, OrbitClass::Nonsquare), -9);
        let d = QuadSpace::standard(Family::DMinus, 4, 3).unwrap();
        assert_eq!(t(&d, OrbitClass::Singular), -19);
    }

    #[test]
    fn fixed_space_examples() {
        let b = QuadSpace::standard(Family::BC, 4, 3).unwrap();
        let c = fixed_space_counts(&b, None, DEFAULT_BUDGET).unwrap().counts;
        assert_eq!((c.singular, c.square, c.nonsquare), (80, 108, 54));
        assert_eq!(c.total, 3u64.pow(5));
        let d = QuadSpace::standard(Family::DPlus, 4, 3).unwrap();
        assert_eq!(fixed_space_counts(&d, None, DEFAULT_BUDGET).unwrap().counts.square, 18);
        let small = QuadSpace::standard(Family::DPlus, 3, 3).unwrap();
        assert!(matches!(fixed_space_counts(&small, None, DEFAULT_BUDGET), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn bad_pairs_rejected() {
        let b = QuadSpace::standard(Family::BC, 3, 3).unwrap();
        let e = |i: usize| (0..5).map(|j| Elem::from(i == j)).collect::<Vec<_>>();
        // e_0 and e_4 are not orthogonal; e_2 is not singular.
        for (u, w) in [(e(0), e(4)), (e(0), e(2)), (e(0), e(0))] {
            assert!(matches!(fixed_space_counts(&b, Some((&u, &w)), DEFAULT_BUDGET), Err(Error::BadPair(_))));
        }
        // Another valid pair gives the same counts.
        let other = fixed_space_counts(&b, Some((&e(3), &e(4))), DEFAULT_BUDGET).unwrap();
        assert_eq!(other.counts, fixed_space_counts(&b, None, DEFAULT_BUDGET).unwrap().counts);
    }

    #[test]
    fn budget_is_enforced() {
        let b = QuadSpace::standard(Family::BC, 4, 7).unwrap();
        assert!(matches!(value_histogram(&b, Method::Naive, 1000), Err(Error::BudgetExceeded { .. })));
        assert!(value_histogram(&b, Method::Stratified, 1_000_000).is_ok());
    }

    #[test]
    fn bookkeeping_examples() {
        let r = bookkeeping_identity(Family::BC, 5, &[1, 0, 0]).unwrap();
        assert!(r.holds);
        assert_eq!(r.expected, QPoly::monomial_int(1, 6));
        let r = bookkeeping_identity(Family::BC, 5, &[2, 3, 1]).unwrap();
        assert!(r.holds);
        assert_eq!(r.expected, QPoly::monomial_int(6, 6));
        let r = bookkeeping_identity(Family::BC, 5, &[0, 0, 0]).unwrap();
        assert!(r.holds && r.expected.is_zero());
        for family in [Family::DPlus, Family::DMinus] {
            let r = bookkeeping_identity(family, 5, &[2, 1]).unwrap();
            assert!(r.holds);
            assert_eq!(r.expected, QPoly::monomial_int(3, 5));
        }
        assert!(bookkeeping_identity(Family::DPlus, 5, &[1, 1, 1]).is_err());
    }
}
