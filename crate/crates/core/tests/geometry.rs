use spinlow::finitegeom::{
    closed_forms, fixed_space_counts, trace_on_root_element, value_histogram, verify_configuration, Method, OrbitClass,
    QuadSpace, DEFAULT_BUDGET,
};
use spinlow::qpoly::to_i128;
use spinlow::Family;

/// Textbook count of nonzero singular vectors of a nondegenerate quadratic
/// space of dimension `dim` (Witt index and type read off the family).
fn singular_count(family: Family, dim: u32, q: i128) -> i128 {
    let m = dim / 2;
    match family {
        Family::BC => q.pow(2 * m) - 1,
        Family::DPlus => (q.pow(m) - 1) * (q.pow(m - 1) + 1),
        Family::DMinus => (q.pow(m) + 1) * (q.pow(m - 1) - 1),
    }
}

#[test]
fn singular_counts_match_textbook_formula() {
    for (family, n, q) in
        [(Family::BC, 3, 5), (Family::BC, 4, 3), (Family::DPlus, 4, 3), (Family::DMinus, 4, 3), (Family::DMinus, 3, 9)]
    {
        let space = QuadSpace::standard(family, n, q).unwrap();
        let h = value_histogram(&space, Method::Naive, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            h.counts.singular as i128,
            singular_count(family, space.dim() as u32, q as i128),
            "{family} n={n} q={q}"
        );
        assert_eq!(h.counts.total, q.pow(space.dim() as u32));
    }
}

#[test]
fn b3_over_f3() {
    let space = QuadSpace::standard(Family::BC, 3, 3).unwrap();
    let h = value_histogram(&space, Method::Stratified, DEFAULT_BUDGET).unwrap();
    assert_eq!([h.counts.singular, h.counts.square, h.counts.nonsquare], [80, 90, 72]);
    let traces: Vec<i128> = OrbitClass::all()
        .iter()
        .map(|&c| trace_on_root_element(&space, c, Method::Stratified, DEFAULT_BUDGET).unwrap())
        .collect();
    assert_eq!(traces, [-1, 9, -9]);
}

#[test]
fn closed_forms_evaluate_to_the_counts() {
    let forms = closed_forms(Family::DMinus, 4).unwrap();
    let space = QuadSpace::standard(Family::DMinus, 4, 5).unwrap();
    let fixed = fixed_space_counts(&space, None, DEFAULT_BUDGET).unwrap();
    let expected = forms.fixed_counts.unwrap();
    for (class, poly) in OrbitClass::all().into_iter().zip(&expected) {
        let value = to_i128(&poly.eval_int(5)).unwrap();
        assert_eq!(value, fixed.counts.get(class) as i128, "{class}");
    }
}

#[test]
fn extension_fields_pass() {
    for (family, n, q) in [(Family::BC, 3, 9), (Family::DPlus, 3, 25), (Family::DMinus, 3, 27)] {
        let c = verify_configuration(family, n, q, DEFAULT_BUDGET).unwrap();
        assert!(c.passed, "{c:?}");
    }
}

#[test]
fn budget_is_enforced() {
    let space = QuadSpace::standard(Family::BC, 6, 7).unwrap();
    assert!(value_histogram(&space, Method::Naive, 1000).is_err());
}
