use proptest::prelude::*;

use partfn::enumerate::{enumerate_partitions, ClassificationTable};
use partfn::formula::{a_beta_naive, alpha_cap, alpha_weight};
use partfn::verify::{verify_range_with, VerificationReport, VerifyConfig};
use partfn::{
    a1, a_beta_dp, a_value, gamma_weights, p_closed, p_euler, params_for, pentagonal_numbers_upto,
    BigCount, EulerCache, SMode,
};

/// Partitions of m with exactly two parts >= 2, by direct search.
fn two_big_parts(m: usize) -> u64 {
    let mut count = 0;
    for a in 2..=m {
        for b in 2..=a {
            if a + b <= m {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn a1_counts_partitions_with_two_big_parts() {
    for m in 1..=80 {
        assert_eq!(a1(m as i64), two_big_parts(m), "m={m}");
    }
}

#[test]
fn euler_matches_enumeration_and_counting() {
    let mut cache = EulerCache::new();
    let table = ClassificationTable::build(200);
    for n in 1..=200 {
        let p = p_euler(n, &mut cache);
        assert_eq!(p, table.row(n).unwrap().total(), "n={n}");
        if n <= 30 {
            assert_eq!(p, enumerate_partitions(n).unwrap().count() as u64);
        }
    }
}

#[test]
fn classification_shape() {
    let table = ClassificationTable::build(150);
    for row in table.rows() {
        assert_eq!(row.counts.len(), row.n / 2 + 1);
        assert_eq!(row.to_a_row().a.len(), partfn::top_beta(row.n) + 1);
    }
}

#[test]
fn report_json_round_trip() {
    for include_oracle in [false, true] {
        let rep = verify_range_with(
            5,
            40,
            VerifyConfig {
                include_oracle,
                s_mode: SMode::Nearest,
                ..Default::default()
            },
        )
        .unwrap();
        let back = VerificationReport::from_json(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
    }
}

#[test]
fn report_shape_is_stable() {
    let rep = verify_range_with(1, 3, VerifyConfig::default()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    for key in ["range", "config", "per_n", "first_divergence", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["per_n"][2]["p_euler"], "3");
}

proptest! {
    #[test]
    fn a1_is_monotone(m in 1i64..100_000) {
        prop_assert!(a1(m) <= a1(m + 1));
    }

    #[test]
    fn euler_is_nondecreasing(n in 1usize..400) {
        let mut c = EulerCache::new();
        let a = p_euler(n - 1, &mut c);
        let b = p_euler(n, &mut c);
        prop_assert!(a <= b);
    }

    #[test]
    fn pentagonals_are_exactly_the_generalized_ones(limit in 0usize..5000) {
        let got = pentagonal_numbers_upto(limit);
        prop_assert!(got.windows(2).all(|w| w[0].g < w[1].g));
        for p in &got {
            prop_assert!(p.g <= limit);
            prop_assert_eq!(p.g as i64, p.k * (3 * p.k - 1) / 2);
        }
        // the next one in the interleaved order is past the limit
        let next_k = match got.last() {
            None => 1,
            Some(p) if p.k > 0 => -p.k,
            Some(p) => -p.k + 1,
        };
        prop_assert!(((next_k * (3 * next_k - 1) / 2) as usize) > limit);
    }

    #[test]
    fn gamma_mass_is_conserved(beta in 2usize..8, s in 0usize..12) {
        let full: usize = (1..beta).map(|i| alpha_cap(i, s) * alpha_weight(i)).sum();
        let tuples: u64 = (1..beta).map(|i| alpha_cap(i, s) as u64 + 1).product();
        let w = gamma_weights(beta, s, full);
        prop_assert_eq!(w.total(), BigCount::from(tuples));
        prop_assert_eq!(w.get(0), BigCount::one());
        prop_assert!(w.get(1).is_zero() && w.get(2).is_zero());
    }

    #[test]
    fn naive_equals_dp(n in 1usize..70, beta_seed in 0usize..64) {
        let params = params_for(n).unwrap();
        prop_assume!(params.r >= 2);
        let beta = 2 + beta_seed % (params.r - 1);
        match a_beta_naive(n, beta, &params) {
            Ok(v) => prop_assert_eq!(v, a_beta_dp(n, beta, &params).unwrap()),
            Err(_) => prop_assume!(false),
        }
    }

    #[test]
    fn a_value_vanishes_past_r(n in 1usize..200, extra in 1usize..10) {
        let r = params_for(n).unwrap().r;
        prop_assert!(a_value(n, r + extra).is_zero());
    }

    #[test]
    fn closed_equals_euler(n in 1usize..250) {
        let mut c = EulerCache::new();
        prop_assert_eq!(p_closed(n).unwrap(), p_euler(n, &mut c));
    }
}
