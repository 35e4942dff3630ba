//! Randomized invariants over small inputs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use qchar_core::characters::{CharacterCache, NVector};
use qchar_core::poly::{LaurentPoly, QPoly, SymPoly, WPoly};
use qchar_core::qtorus::{equivev_holds, NcLaurent, NcMonomial};
use qchar_core::symfun::{schur, schur_expand, KostkaTable, Partition};
use qchar_core::verify::{
    check_eigen, check_limits, check_order_independence, check_path_consistency, run_suite, SuiteOptions,
};

fn nvector(rank: usize, level: usize, max_entry: u32) -> impl Strategy<Value = NVector> {
    prop::collection::vec(prop::collection::vec(0..=max_entry, rank), level)
        .prop_map(move |levels| NVector::new(rank, levels).expect("shape matches"))
}

fn small_nvector() -> impl Strategy<Value = NVector> {
    prop_oneof![nvector(1, 1, 4), nvector(1, 2, 2), nvector(2, 1, 2), nvector(2, 2, 1), nvector(3, 1, 1)]
}

fn torus_element(rank: usize) -> impl Strategy<Value = NcLaurent> {
    let term = (
        prop::collection::vec(-2i32..=2, rank),
        prop::collection::vec(-2i32..=2, rank),
        prop::collection::vec((-3i64..=3, -3i64..=3), 1..=2),
    );
    prop::collection::vec(term, 1..=3).prop_map(move |terms| {
        let mut f = NcLaurent::zero(rank);
        for (a, b, c) in terms {
            let c = WPoly::from_terms(c.into_iter().map(|(e, k)| (e, BigInt::from(k))));
            f.add_term(NcMonomial { a, b }, &c);
        }
        f
    })
}

fn nonzero_torus_element(rank: usize) -> impl Strategy<Value = NcLaurent> {
    torus_element(rank).prop_filter("nonzero divisor", |f| !f.is_zero())
}

fn partition(nvars: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..=3, nvars).prop_map(|mut parts| {
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Partition::new(parts).expect("sorted parts")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn characters_have_the_expected_limits(n in small_nvector()) {
        let cache = CharacterCache::new(n.rank());
        let report = check_limits(&cache, &[n])?;
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn m_and_d_routes_agree(n in small_nvector()) {
        let cache = CharacterCache::new(n.rank());
        let report = check_path_consistency(&cache, std::slice::from_ref(&n))?;
        prop_assert!(report.passed(), "{}", report);
        let report = check_order_independence(&cache, &[n])?;
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn level_one_characters_are_eigenvectors(n in prop_oneof![nvector(1, 1, 5), nvector(2, 1, 3), nvector(3, 1, 2)]) {
        let cache = CharacterCache::new(n.rank());
        let report = check_eigen(&cache, &[n])?;
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn schur_coefficients_are_nonnegative(n in small_nvector()) {
        let ch = CharacterCache::new(n.rank()).graded_character(&n)?;
        for c in ch.schur.values() {
            prop_assert!(c.terms().all(|(_, k)| *k > BigInt::from(0)));
        }
    }

    #[test]
    fn torus_product_is_associative(
        f in torus_element(2), g in torus_element(2), h in torus_element(2),
    ) {
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
    }

    #[test]
    fn torus_division_inverts_products(f in torus_element(2), g in nonzero_torus_element(2)) {
        prop_assert_eq!(f.mul(&g).right_div(&g)?, f.clone());
        prop_assert_eq!(g.mul(&f).left_div(&g)?, f);
    }

    #[test]
    fn evaluation_identity(f in prop_oneof![torus_element(1), torus_element(2), torus_element(3)]) {
        prop_assert!(equivev_holds(&f));
    }

    #[test]
    fn schur_expansion_round_trips(
        nvars in 1usize..=3,
        entries in prop::collection::vec((any::<prop::sample::Index>(), -4i64..=4), 0..=4),
    ) {
        let shapes = qchar_core::symfun::partitions_bounded(3, nvars, 3);
        let mut expected = BTreeMap::new();
        for (i, c) in entries {
            if c != 0 {
                let shape = Partition::new(shapes[i.index(shapes.len())].clone()).expect("partition");
                expected.insert(shape, BigInt::from(c));
            }
        }
        let mut f = LaurentPoly::<BigInt>::zero(nvars);
        for (lambda, c) in &expected {
            f.add_assign(&schur::<BigInt>(lambda, nvars).scale(c));
        }
        prop_assert_eq!(schur_expand(&f)?, expected);
    }

    #[test]
    fn kostka_and_bialternant_schur_agree(lambda in partition(3)) {
        let kostka = KostkaTable::new(3);
        let mut single = BTreeMap::new();
        single.insert(lambda.padded(3), QPoly::power(0));
        let via_kostka: SymPoly<QPoly> = kostka.from_schur(&single);
        prop_assert_eq!(via_kostka.to_laurent(), schur::<QPoly>(&lambda, 3));
        prop_assert_eq!(kostka.to_schur(&via_kostka), single);
    }
}

#[test]
fn reports_are_deterministic() {
    let opts = SuiteOptions { rank: Some(2), bound: None, order: None };
    for suite in ["eigen", "qsystem"] {
        let render = |reports: Vec<qchar_core::verify::CheckReport>| {
            reports.iter().map(|r| format!("{}|{:?}", r, r.counterexample)).collect::<Vec<_>>()
        };
        let first = render(run_suite(suite, &opts).unwrap());
        let second = render(run_suite(suite, &opts).unwrap());
        assert_eq!(first, second);
    }
}
