mod props;

#[test]
fn qpoly_ring_eval_divide_valuation_laws() {
    props::qpoly_laws().unwrap();
}

#[test]
fn generic_degree_invariant_under_symbol_shift() {
    props::symbol_shift_invariance().unwrap();
}

#[test]
fn enumeration_matches_bipartition_counts() {
    props::enumeration_counts().unwrap();
}

#[test]
fn stratified_counts_match_naive_in_random_bases() {
    props::stratified_vs_naive().unwrap();
}
