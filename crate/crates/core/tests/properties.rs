use num_bigint::BigInt;
use proptest::prelude::*;

use skewtab::arith::{binomial, c_number, phi, stirling2};
use skewtab::characters::{chi_mn, chi_small, SmallSupport};
use skewtab::closed_forms::{skew_count_m2, skew_count_m3, M2Variant, M3Variant};
use skewtab::content::{content_power_sum, p_via_q, q_value, q_via_conjugate, QIndex};
use skewtab::oracles::{aitken_count, hook_count};
use skewtab::partition::{Partition, SkewShape};

/// Random partitions with up to 8 rows and parts up to 9.
fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=9, 1..=8).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(mu in partition()) {
        let c = mu.conjugate();
        prop_assert_eq!(c.conjugate(), mu.clone());
        prop_assert_eq!(c.size(), mu.size());
        prop_assert_eq!(c.height(), mu.first_row());
    }

    #[test]
    fn text_round_trip(mu in partition()) {
        prop_assert_eq!(mu.to_string().parse::<Partition>().unwrap(), mu);
    }

    #[test]
    fn pascal_rule(a in -30i64..30, b in -3i64..30) {
        prop_assert_eq!(binomial(a + 1, b + 1), binomial(a, b) + binomial(a, b + 1));
    }

    #[test]
    fn c_number_recurrence(r in 1usize..=12, t in 0usize..=12) {
        let down = if t == 0 { BigInt::from(0) } else { c_number(r - 1, t - 1) * t };
        prop_assert_eq!(c_number(r, t), down + c_number(r - 1, t) * (t + 1));
        prop_assert_eq!(c_number(r, t), skewtab::arith::factorial(t) * stirling2(r + 1, t + 1));
    }

    #[test]
    fn phi_is_symmetric(l in 0usize..=10, h in 0usize..=10, r in 0usize..=10, t in 0usize..=10) {
        prop_assume!(h <= l);
        prop_assert_eq!(phi(l, h, r, t).unwrap(), phi(l, l - h, t, r).unwrap());
    }

    #[test]
    fn q_statistics(mu in partition(), r in 0usize..=6, t in 0usize..=6) {
        let minus = q_value(&mu, QIndex::minus(r, t));
        prop_assert_eq!(&minus, &-q_value(&mu, QIndex::minus(t, r)));
        prop_assert_eq!(q_value(&mu, QIndex::plus(r, t)), q_value(&mu, QIndex::plus(t, r)));
        prop_assert_eq!(q_via_conjugate(&mu, QIndex::minus(r, t)), minus);
    }

    #[test]
    fn power_sums_through_q(mu in partition(), l in 0usize..=9) {
        prop_assert_eq!(p_via_q(&mu, l), content_power_sum(&mu, l as u32));
    }

    #[test]
    fn hook_formula_matches_determinant(mu in partition()) {
        prop_assert_eq!(hook_count(&mu), aitken_count(&SkewShape::straight(mu.clone())));
    }

    #[test]
    fn closed_forms_match_determinant(mu in partition()) {
        if mu.first_row() >= 2 {
            let truth = aitken_count(&SkewShape::new(mu.clone(), Partition::row(2)).unwrap());
            prop_assert_eq!(skew_count_m2(&mu, M2Variant::Schur).unwrap(), truth);
        }
        if mu.first_row() >= 3 {
            let truth = aitken_count(&SkewShape::new(mu.clone(), Partition::row(3)).unwrap());
            prop_assert_eq!(skew_count_m3(&mu, M3Variant::Expanded).unwrap(), truth);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn small_characters_on_larger_shapes(
        parts in prop::collection::vec(1usize..=5, 3..=5),
    ) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mu = Partition::new(parts).unwrap();
        let n = mu.size();
        for support in SmallSupport::ALL.into_iter().filter(|s| s.size() <= n) {
            prop_assert_eq!(
                chi_small(&mu, support).unwrap(),
                chi_mn(&mu, &support.cycle_type(n).unwrap()).unwrap()
            );
        }
    }
}
