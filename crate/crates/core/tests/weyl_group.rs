use flagcoh::root_system::{
    dominant_conjugate, enumerate_weyl_group, Conjugate, Weight, WeylElement,
};
use itertools::Itertools;
use proptest::prelude::*;

fn grid(rank: usize, radius: i64) -> impl Iterator<Item = Weight> {
    (0..rank)
        .map(|_| -radius..=radius)
        .multi_cartesian_product()
        .map(|c| Weight::new(c).unwrap())
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn group_order_and_palindromic_lengths() {
    for r in 1..=5 {
        let group = enumerate_weyl_group(r).unwrap();
        assert_eq!(group.len(), factorial(r + 1), "rank {r}");
        let top = r * (r + 1) / 2;
        let mut hist = vec![0usize; top + 1];
        for w in &group {
            hist[w.length()] += 1;
        }
        let mut rev = hist.clone();
        rev.reverse();
        assert_eq!(hist, rev, "rank {r}");
        assert_eq!(hist[0], 1);
        assert_eq!(hist[top], 1);
    }
}

/// Every `w` sending `μ` into the open dominant chamber, by trying the whole group.
fn exhaustive_conjugates(mu: &Weight, group: &[WeylElement]) -> Vec<(WeylElement, Weight)> {
    group
        .iter()
        .filter_map(|w| {
            let image = w.apply(mu).unwrap();
            image.is_strictly_dominant().then(|| (w.clone(), image))
        })
        .collect()
}

#[test]
fn dominant_conjugate_matches_exhaustive_search() {
    for r in 1..=3 {
        let group = enumerate_weyl_group(r).unwrap();
        for mu in grid(r, 4) {
            let found = exhaustive_conjugates(&mu, &group);
            match dominant_conjugate(&mu) {
                Conjugate::Singular => assert!(found.is_empty(), "{mu} has conjugates {found:?}"),
                Conjugate::Regular { element, dominant } => {
                    assert_eq!(found, vec![(element.clone(), dominant)], "{mu}");
                    let negatives = mu.pairings().iter().filter(|&&p| p < 0).count();
                    assert_eq!(element.length(), negatives, "{mu}");
                }
            }
        }
    }
}

#[test]
fn dot_group_law_on_generators() {
    for r in 1..=3 {
        let gens: Vec<_> = (1..=r)
            .map(|i| WeylElement::simple_reflection(r, i).unwrap())
            .chain([WeylElement::identity(r), WeylElement::longest(r)])
            .collect();
        for lambda in grid(r, 3) {
            for a in &gens {
                for b in &gens {
                    let lhs = a.dot(&b.dot(&lambda).unwrap()).unwrap();
                    let rhs = a.compose(b).unwrap().dot(&lambda).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn reflection_formula_with_simple_roots() {
    // s_i(λ) = λ - <λ, α_i^∨> α_i where α_i is the i-th Cartan row
    for r in 1..=4 {
        for lambda in grid(r, 2) {
            for i in 1..=r {
                let s = WeylElement::simple_reflection(r, i).unwrap();
                let mut expected = lambda.coords().to_vec();
                let a = lambda.coords()[i - 1];
                expected[i - 1] -= 2 * a;
                if i >= 2 {
                    expected[i - 2] += a;
                }
                if i < r {
                    expected[i] += a;
                }
                assert_eq!(s.apply(&lambda).unwrap().coords(), &expected[..]);
            }
        }
    }
}

#[test]
fn longest_element_maps_minus_rho_to_rho() {
    for r in 1..=6 {
        let w0 = WeylElement::longest(r);
        assert_eq!(w0.length(), r * (r + 1) / 2);
        assert_eq!(w0.apply(&(-&Weight::rho(r))).unwrap(), Weight::rho(r));
    }
}

fn weight_strategy(rank: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-20i64..=20, rank).prop_map(|c| Weight::new(c).unwrap())
}

fn element_strategy(rank: usize) -> impl Strategy<Value = WeylElement> {
    Just((1..=rank + 1).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|p| WeylElement::from_one_line(&p).unwrap())
}

proptest! {
    #[test]
    fn action_is_linear_and_permutes_pairings(
        (w, a, b) in (1usize..=6).prop_flat_map(|r| (element_strategy(r), weight_strategy(r), weight_strategy(r)))
    ) {
        let sum = w.apply(&(&a + &b)).unwrap();
        prop_assert_eq!(sum, &w.apply(&a).unwrap() + &w.apply(&b).unwrap());
        let sorted = |v: Vec<i64>| { let mut v: Vec<i64> = v.into_iter().map(i64::abs).collect(); v.sort(); v };
        prop_assert_eq!(sorted(w.apply(&a).unwrap().pairings()), sorted(a.pairings()));
    }

    #[test]
    fn compose_matches_sequential_action(
        (w, v, a) in (1usize..=6).prop_flat_map(|r| (element_strategy(r), element_strategy(r), weight_strategy(r)))
    ) {
        let wv = w.compose(&v).unwrap();
        prop_assert_eq!(wv.apply(&a).unwrap(), w.apply(&v.apply(&a).unwrap()).unwrap());
        prop_assert_eq!(wv.dot(&a).unwrap(), w.dot(&v.dot(&a).unwrap()).unwrap());
        prop_assert_eq!(w.inverse().length(), w.length());
    }

    #[test]
    fn conjugate_of_regular_image_is_consistent(
        (w, a) in (1usize..=8).prop_flat_map(|r| (element_strategy(r), weight_strategy(r)))
    ) {
        if let Conjugate::Regular { element, dominant } = dominant_conjugate(&a) {
            prop_assert_eq!(element.apply(&a).unwrap(), dominant.clone());
            let moved = w.apply(&a).unwrap();
            match dominant_conjugate(&moved) {
                Conjugate::Regular { dominant: d2, .. } => prop_assert_eq!(d2, dominant),
                Conjugate::Singular => prop_assert!(false, "image of a regular weight is singular"),
            }
        } else {
            prop_assert!(!a.is_regular());
        }
    }
}
