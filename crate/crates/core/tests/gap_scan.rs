use spinlow::gapscan::{bound_for, known_overlisted, scan_unipotent, Bound, QParity, QPolicy};
use spinlow::{Family, FamilyTag};

#[test]
fn small_ranks_match_tables_exactly() {
    for (family, n) in [(Family::BC, 4), (Family::BC, 5), (Family::DPlus, 5), (Family::DMinus, 6)] {
        let bound = if family == Family::BC { Bound::UnipotentBC } else { Bound::UnipotentD };
        let r = scan_unipotent(FamilyTag::new(family, n), bound, &QPolicy::default()).unwrap();
        assert!(r.exact_match(), "{family} n={n}: {:?}", r.mismatches);
    }
}

#[test]
fn overlisted_rows_are_exactly_the_known_ones() {
    let tag = FamilyTag::new(Family::BC, 6);
    let r = scan_unipotent(tag, Bound::UnipotentBC, &QPolicy::default()).unwrap();
    assert!(r.passed() && !r.exact_match());
    for m in &r.overlisted {
        let mut got = m.missing.clone();
        let mut known: Vec<String> =
            known_overlisted(tag, Bound::UnipotentBC, m.q).iter().map(|s| s.to_string()).collect();
        got.sort();
        known.sort();
        assert_eq!(got, known);
    }
}

#[test]
fn every_scanned_row_is_below_the_bound_at_its_q() {
    let tag = FamilyTag::new(Family::DMinus, 7);
    let r = scan_unipotent(tag, Bound::UnipotentD, &QPolicy::up_to(13)).unwrap();
    for row in &r.below {
        for &q in &row.below_at {
            let b = bound_for(Bound::UnipotentD, 7, QParity::of(q)).unwrap();
            assert!(row.degree.eval_int(q as i64) < b.eval_int(q as i64), "{} at q={q}", row.label);
        }
    }
}
