use flagcoh::bwb::{bwb_cohomology, euler_characteristic, weyl_dimension, CohomologyResult};
use flagcoh::root_system::Weight;
use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

fn grid(rank: usize, radius: i64) -> impl Iterator<Item = Weight> {
    (0..rank)
        .map(|_| -radius..=radius)
        .multi_cartesian_product()
        .map(|c| Weight::new(c).unwrap())
}

/// Number of semistandard tableaux of the given shape with entries `1..=max_entry`,
/// i.e. the sum of all weight multiplicities of the corresponding `GL` module.
fn count_ssyt(shape: &[usize], max_entry: usize) -> u64 {
    fn fill(
        max_entry: usize,
        cells: &[(usize, usize)],
        pos: usize,
        tab: &mut Vec<Vec<usize>>,
    ) -> u64 {
        if pos == cells.len() {
            return 1;
        }
        let (r, c) = cells[pos];
        let lo_row = if c > 0 { tab[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { tab[r - 1][c] + 1 } else { 1 };
        let lo = lo_row.max(lo_col);
        let mut total = 0;
        for v in lo..=max_entry {
            tab[r][c] = v;
            total += fill(max_entry, cells, pos + 1, tab);
        }
        total
    }
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut tab: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    fill(max_entry, &cells, 0, &mut tab)
}

fn partition_of(mu: &Weight) -> Vec<usize> {
    // rows a_1 + ... + a_r, a_2 + ... + a_r, ..., a_r
    mu.epsilon().iter().map(|&e| e as usize).collect()
}

#[test]
fn weyl_dimension_matches_tableau_count() {
    for r in 1..=3 {
        for coords in (0..r).map(|_| 0i64..=3).multi_cartesian_product() {
            let mu = Weight::new(coords).unwrap();
            let expected = count_ssyt(&partition_of(&mu), r + 1);
            assert_eq!(
                weyl_dimension(&mu).unwrap(),
                BigUint::from(expected),
                "{mu}"
            );
        }
    }
}

#[test]
fn tableau_oracle_sanity() {
    // standard module of SL_3, adjoint of SL_3, Sym^2 of C^4
    assert_eq!(count_ssyt(&[1, 0, 0], 3), 3);
    assert_eq!(count_ssyt(&[2, 1, 0], 3), 8);
    assert_eq!(count_ssyt(&[2, 0, 0, 0], 4), 10);
}

fn top_degree(r: usize) -> usize {
    r * (r + 1) / 2
}

#[test]
fn at_most_one_degree_and_bounds() {
    for r in 1..=3 {
        let n = top_degree(r);
        for lambda in grid(r, 5) {
            let res = bwb_cohomology(&lambda);
            let nonzero: Vec<usize> = (0..=n).filter(|&i| !res.h(i).is_zero()).collect();
            assert!(nonzero.len() <= 1);
            if let CohomologyResult::Nonvanishing {
                degree,
                highest_weight,
                dimension,
            } = &res
            {
                assert!(*degree <= n);
                assert!(highest_weight.is_dominant());
                assert!(*dimension >= BigUint::from(1u32));
                assert_eq!(*degree == 0, lambda.is_dominant(), "{lambda}");
                let shifted = &lambda + &Weight::rho(r);
                let anti = shifted.coords().iter().all(|&a| a < 0);
                assert_eq!(*degree == n, anti, "{lambda}");
            }
        }
    }
}

#[test]
fn serre_duality_on_flag_varieties() {
    for r in 1..=3 {
        let n = top_degree(r);
        let radius = if r == 3 { 3 } else { 5 };
        let canonical = Weight::new(vec![-2; r]).unwrap();
        for lambda in grid(r, radius) {
            let dual = &canonical - &lambda;
            let a = bwb_cohomology(&lambda);
            let b = bwb_cohomology(&dual);
            for i in 0..=n {
                assert_eq!(a.h(i), b.h(n - i), "{lambda} degree {i}");
            }
            assert_eq!(a.degree().map(|d| n - d), b.degree());
        }
    }
}

#[test]
fn euler_characteristic_matches_alternating_sum() {
    for r in 1..=3 {
        let n = top_degree(r);
        let radius = if r == 3 { 3 } else { 5 };
        for lambda in grid(r, radius) {
            let res = bwb_cohomology(&lambda);
            let alternating: BigInt = (0..=n)
                .map(|i| {
                    let h = BigInt::from(res.h(i));
                    if i % 2 == 0 {
                        h
                    } else {
                        -h
                    }
                })
                .sum();
            let chi = euler_characteristic(&lambda);
            assert_eq!(chi, alternating, "{lambda}");
            let shifted = &lambda + &Weight::rho(r);
            assert_eq!(chi.is_zero(), !shifted.is_regular(), "{lambda}");
        }
    }
}

#[test]
fn highest_weight_is_dot_image() {
    for lambda in grid(3, 3) {
        let (element, res) = flagcoh::bwb::bwb_with_element(&lambda);
        match (element, res) {
            (
                Some(w),
                CohomologyResult::Nonvanishing {
                    degree,
                    highest_weight,
                    ..
                },
            ) => {
                assert_eq!(w.length(), degree);
                assert_eq!(w.dot(&lambda).unwrap(), highest_weight);
            }
            (None, CohomologyResult::AllVanish) => {}
            other => panic!("inconsistent result for {lambda}: {other:?}"),
        }
    }
}
