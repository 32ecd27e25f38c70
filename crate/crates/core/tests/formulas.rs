use qtmac::macdonald::{
    mn_macdonald, modified_macdonald, modified_macdonald_via_h, series_factors,
    shifted_mn_macdonald,
};
use qtmac::oracle::hhl::{domino_subsets, hhl_cached};
use qtmac::oracle::llt::attacking_count;
use qtmac::oracle::ribbons_from_subset;
use qtmac::weyl::{contract_with_stats, step_bound, FactorList, Window};
use qtmac::{Composition, LaurentQT, Partition, Specialization};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn partitions_up_to(k: usize) -> Vec<Partition> {
    (1..=k).flat_map(Partition::all).collect()
}

#[test]
fn hmu_for_two_boxes() {
    // H~_2 = s_2 + q s_11
    let h = modified_macdonald(&p("2"), None).unwrap();
    assert_eq!(h.to_string(), "s[2] + q*s[1,1]");
    let h = modified_macdonald(&p("1,1"), None).unwrap();
    assert_eq!(h.to_string(), "s[2] + t*s[1,1]");
}

#[test]
fn hmu_for_three_boxes() {
    let h = modified_macdonald(&p("2,1"), None).unwrap();
    assert_eq!(h.to_string(), "s[3] + (t + q)*s[2,1] + q*t*s[1,1,1]");
}

#[test]
fn series_for_two_columns() {
    let f = series_factors(&"2,3".parse().unwrap(), 1, 1).unwrap();
    assert_eq!(f.l, 5);
    assert_eq!(f.base, vec![1; 5]);
    assert_eq!(FactorList::from_json(&f.to_json()).unwrap(), f);
    // one q denominator per positive root
    assert_eq!(
        f.factors
            .iter()
            .filter(|x| x.inverse && x.coeff == LaurentQT::q())
            .count(),
        10
    );
}

#[test]
fn every_column_order_gives_the_same_mn_polynomial() {
    for mu in partitions_up_to(4) {
        for (m, n) in [(1, 2), (1, 3)] {
            let base = mn_macdonald(&mu, m, n, None).unwrap();
            for beta in Composition::rearrangements(mu.transpose().parts()) {
                assert_eq!(
                    mn_macdonald(&mu, m, n, Some(&beta)).unwrap(),
                    base,
                    "{mu} {beta} ({m},{n})"
                );
            }
        }
    }
    for mu in partitions_up_to(3) {
        let base = mn_macdonald(&mu, 2, 1, None).unwrap();
        for beta in Composition::rearrangements(mu.transpose().parts()) {
            assert_eq!(
                mn_macdonald(&mu, 2, 1, Some(&beta)).unwrap(),
                base,
                "{mu} {beta}"
            );
        }
    }
}

#[test]
fn attacking_count_does_not_depend_on_the_domino_set() {
    for d in 1..=5 {
        for mu in Partition::all(d) {
            for beta in Composition::rearrangements(mu.transpose().parts()) {
                let a = attacking_count(&beta);
                for s in domino_subsets(&beta) {
                    let n = ribbons_from_subset(&beta, &s)
                        .unwrap()
                        .attacking_pairs()
                        .len();
                    assert_eq!(n, a, "{beta} {s:?}");
                }
            }
        }
    }
}

#[test]
fn root_steps_stay_within_the_potential_bound() {
    for mu in partitions_up_to(5) {
        let f = series_factors(&mu.transpose().as_composition(), 1, 1).unwrap();
        let (_, stats) = contract_with_stats(&f, Window::Weyl).unwrap();
        assert!(
            stats.max_steps as i64 <= step_bound(&f.base),
            "{mu}: {stats:?}"
        );
    }
}

#[test]
fn complete_homogeneous_route_agrees_with_the_oracle() {
    for mu in partitions_up_to(4) {
        assert_eq!(
            modified_macdonald_via_h(&mu, None).unwrap(),
            hhl_cached(&mu),
            "{mu}"
        );
    }
}

#[test]
fn one_one_layer_is_a_monomial_multiple_of_hmu() {
    for mu in partitions_up_to(4) {
        let scalar = LaurentQT::qt(mu.transpose().n_stat() as i32, mu.n_stat() as i32);
        let h = modified_macdonald(&mu, None).unwrap();
        assert_eq!(
            mn_macdonald(&mu, 1, 1, None).unwrap(),
            h.scale(&scalar),
            "{mu}"
        );
    }
}

#[test]
fn column_order_independence_up_to_five_boxes() {
    for mu in Partition::all(5) {
        for n in 1..=2 {
            let base = mn_macdonald(&mu, 1, n, None).unwrap();
            for beta in Composition::rearrangements(mu.transpose().parts()) {
                assert_eq!(
                    mn_macdonald(&mu, 1, n, Some(&beta)).unwrap(),
                    base,
                    "{mu} {beta} n={n}"
                );
            }
        }
    }
}

#[test]
fn qt_symmetry_with_n_three() {
    for mu in partitions_up_to(5) {
        let a = mn_macdonald(&mu, 1, 3, None).unwrap();
        let b = mn_macdonald(&mu.transpose(), 1, 3, None).unwrap();
        assert_eq!(a, b.specialize(Specialization::SwapQT).unwrap(), "{mu}");
    }
}

#[test]
fn stable_shift_from_two_three() {
    for mu in partitions_up_to(3) {
        assert_eq!(
            shifted_mn_macdonald(&mu, 2, 3, 1, None).unwrap(),
            mn_macdonald(&mu, 2, 5, None).unwrap(),
            "{mu}"
        );
    }
}
