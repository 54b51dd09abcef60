use spinlow::degrees::tables::table_min_rank;
use spinlow::degrees::{generic_degree, order_part, unipotent_characters, unipotent_table};
use spinlow::symbols::enumerate_symbols;
use spinlow::{Family, FamilyTag, QPoly, Symbol};

use num_rational::BigRational;
use num_traits::Signed;

/// Generic degree multiplied out term by term and divided once at the end,
/// with no cyclotomic bookkeeping.
fn degree_by_direct_product(s: &Symbol, tag: FamilyTag) -> QPoly {
    let qp = |k: u32, c: i64| QPoly::q_pow_plus(k as usize, c);
    let mut num = order_part(tag).unwrap();
    for row in [s.top(), s.bottom()] {
        for (i, &a) in row.iter().enumerate() {
            for &b in &row[i + 1..] {
                num = num * (QPoly::monomial_int(1, b as usize) - QPoly::monomial_int(1, a as usize));
            }
        }
    }
    for &a in s.top() {
        for &b in s.bottom() {
            num = num * (QPoly::monomial_int(1, a as usize) + QPoly::monomial_int(1, b as usize));
        }
    }
    let len = (s.top().len() + s.bottom().len()) as i64;
    let mut den = QPoly::constant_int(1i64 << ((len - 1) / 2));
    let mut qexp = 0;
    let mut m = len - 2;
    while m >= 2 {
        qexp += m * (m - 1) / 2;
        m -= 2;
    }
    den = den.shift(qexp as usize);
    for &v in s.top().iter().chain(s.bottom()) {
        for k in 1..=v {
            den = den * qp(2 * k, -1);
        }
    }
    if s.is_degenerate() {
        den = den * QPoly::constant_int(2);
    }
    num.divide_exact(&den).unwrap()
}

#[test]
fn table_rows_match_generic_degrees() {
    let mut checked = 0;
    for family in Family::all() {
        let eps = family.epsilon().unwrap_or(1);
        for row in unipotent_table(family) {
            for n in table_min_rank(family)..=12 {
                if !row.condition.holds_for_n(n) {
                    continue;
                }
                let tag = FamilyTag::new(family, n);
                let s = row.template.instantiate(n).unwrap();
                assert_eq!(s.is_degenerate(), row.copies == 2, "{tag} {}", row.template.render());
                let expected = row.degree.eval(n, eps).unwrap();
                let got = generic_degree(&s, tag).unwrap();
                assert_eq!(got, expected, "{tag} row {}", row.template.render());
                assert_eq!(got.degree(), Some(row.deg_q.exponent(n).unwrap()), "{tag} {}", row.template.render());
                checked += 1;
            }
        }
    }
    assert!(checked >= 100, "only {checked} instantiations");
}

#[test]
fn cyclotomic_route_matches_direct_product() {
    for family in Family::all() {
        for n in 2..=6 {
            let tag = FamilyTag::new(family, n);
            for label in enumerate_symbols(tag).unwrap() {
                assert_eq!(
                    generic_degree(&label.symbol, tag).unwrap(),
                    degree_by_direct_product(&label.symbol, tag),
                    "{tag} {label}"
                );
            }
        }
    }
}

#[test]
fn every_symbol_has_a_polynomial_degree() {
    for family in Family::all() {
        for n in 2..=10 {
            let tag = FamilyTag::new(family, n);
            for ch in unipotent_characters(tag).unwrap() {
                assert!(!ch.degree.is_zero(), "{tag} {}", ch.label);
                assert!(ch.degree.leading_coeff().is_positive(), "{tag} {}", ch.label);
                // Integral at every odd prime power.
                let v = ch.degree.eval_int(3);
                assert!(v.is_integer() && v > BigRational::from_integer(0.into()));
            }
        }
    }
}

#[test]
fn spec_examples() {
    let tag = FamilyTag::new(Family::DPlus, 4);
    let d = generic_degree(&"2;2".parse().unwrap(), tag).unwrap();
    let expected = QPoly::q().pow(2) * QPoly::q_pow_plus(6, -1).divide_exact(&QPoly::q_pow_plus(2, -1)).unwrap();
    assert_eq!(d, expected);
    let chars = unipotent_characters(tag).unwrap();
    assert_eq!(chars.iter().filter(|c| c.label.symbol.to_string() == "2;2").count(), 2);
    let d = generic_degree(&"5;0".parse().unwrap(), FamilyTag::new(Family::DPlus, 5)).unwrap();
    assert_eq!(d, QPoly::one());
}
