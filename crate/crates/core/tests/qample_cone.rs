use flagcoh::qample::{
    chamber_map, q_ample_index, q_ample_index_oracle, OracleWindow, QAmpleIndex,
};
use flagcoh::root_system::{dominant_conjugate, Conjugate, Weight};
use itertools::Itertools;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn grid(rank: usize, radius: i64) -> impl Iterator<Item = Weight> {
    (0..rank)
        .map(|_| -radius..=radius)
        .multi_cartesian_product()
        .map(|c| Weight::new(c).unwrap())
}

#[test]
fn oracle_agrees_with_closed_form_rank_two() {
    let window = OracleWindow::default();
    for lambda in grid(2, 4) {
        assert_eq!(
            q_ample_index(&lambda),
            q_ample_index_oracle(&lambda, window).unwrap(),
            "{lambda}"
        );
    }
}

#[test]
fn oracle_agrees_with_closed_form_rank_three_sample() {
    let window = OracleWindow::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let coords: Vec<i64> = (0..3).map(|_| rng.random_range(-6..=6)).collect();
        let lambda = Weight::new(coords).unwrap();
        assert_eq!(
            q_ample_index(&lambda),
            q_ample_index_oracle(&lambda, window).unwrap(),
            "{lambda}"
        );
    }
}

#[test]
fn oracle_stable_under_wider_window() {
    let wide = OracleWindow::new(4, 12, 40).unwrap();
    for lambda in grid(2, 3) {
        assert_eq!(
            q_ample_index(&lambda),
            q_ample_index_oracle(&lambda, wide).unwrap()
        );
    }
}

#[test]
fn regular_chamber_law() {
    for lambda in grid(2, 5) {
        if let Conjugate::Regular { element, .. } = dominant_conjugate(&lambda) {
            // element sends λ into the dominant chamber, so λ lies in element^{-1}·C
            let chamber = element.inverse();
            assert!(chamber
                .inverse()
                .apply(&lambda)
                .unwrap()
                .is_strictly_dominant());
            assert_eq!(q_ample_index(&lambda).value(), chamber.length(), "{lambda}");
        }
    }
}

#[test]
fn ample_and_antiample_chambers_are_dual() {
    for lambda in grid(2, 5).chain(grid(3, 3)) {
        if !lambda.is_regular() {
            continue;
        }
        let n = lambda.root_system().num_positive_roots();
        let neg = -&lambda;
        assert_eq!(
            q_ample_index(&lambda).is_ample(),
            q_ample_index(&neg).value() == n
        );
    }
}

#[test]
fn extremes() {
    for r in 1..=5 {
        let n = r * (r + 1) / 2;
        assert_eq!(q_ample_index(&Weight::zero(r)), QAmpleIndex(n));
        assert_eq!(q_ample_index(&-&Weight::rho(r)), QAmpleIndex(n));
        assert_eq!(q_ample_index(&Weight::rho(r)), QAmpleIndex(0));
    }
}

#[test]
fn chamber_counts_are_symmetric() {
    for (r, range) in [(2, 6), (3, 3)] {
        let n = r * (r + 1) / 2;
        let map = chamber_map(r, range).unwrap();
        let mut hist = vec![0usize; n + 1];
        for rec in map.iter().filter(|rec| rec.regular) {
            assert_eq!(Some(rec.qmin.value()), rec.weyl_length);
            hist[rec.qmin.value()] += 1;
        }
        let mut rev = hist.clone();
        rev.reverse();
        assert_eq!(hist, rev, "rank {r}");
    }
}

proptest! {
    #[test]
    fn scale_invariance(coords in prop::collection::vec(-30i64..=30, 1..=6), m in 1i64..=50) {
        let lambda = Weight::new(coords).unwrap();
        prop_assert_eq!(q_ample_index(&lambda.scale(m)), q_ample_index(&lambda));
    }

    #[test]
    fn index_bounded_by_root_count(coords in prop::collection::vec(-30i64..=30, 1..=8)) {
        let lambda = Weight::new(coords).unwrap();
        let n = lambda.root_system().num_positive_roots();
        let q = q_ample_index(&lambda).value();
        prop_assert!(q <= n);
        prop_assert_eq!(q == 0, lambda.is_strictly_dominant());
    }
}
