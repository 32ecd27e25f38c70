use num_bigint::BigInt;
use proptest::prelude::*;

use qtmac::symfunc::schur_multiply;
use qtmac::weyl::{straighten, Straightened};
use qtmac::{FracQT, LaurentQT, Partition, SchurExpansion};

fn laurent() -> impl Strategy<Value = LaurentQT> {
    prop::collection::vec(((-3i32..=3, -3i32..=3), -4i64..=4), 0..5).prop_map(|terms| {
        LaurentQT::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c))))
    })
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentQT> {
    laurent().prop_filter("nonzero", |x| !x.is_zero())
}

fn expansion(degree: usize) -> impl Strategy<Value = SchurExpansion> {
    let parts = Partition::all(degree);
    let n = parts.len();
    prop::collection::vec((0..n, laurent()), 0..4).prop_map(move |terms| {
        let mut f = SchurExpansion::zero();
        for (k, c) in terms {
            f.add_term(parts[k].clone(), &c);
        }
        f
    })
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentQT::zero());
        prop_assert_eq!(&a * &LaurentQT::one(), a.clone());
    }

    #[test]
    fn laurent_text_round_trip(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<LaurentQT>().unwrap(), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
    }

    #[test]
    fn swaps_are_involutions(a in laurent()) {
        prop_assert_eq!(a.swap_qt().swap_qt(), a.clone());
        prop_assert_eq!(a.invert_t().invert_t(), a.clone());
        prop_assert_eq!(a.invert_q().invert_q(), a);
    }

    #[test]
    fn fractions_ignore_common_factors(a in laurent(), b in nonzero_laurent(), c in nonzero_laurent()) {
        let x = FracQT::new(a.clone(), b.clone()).unwrap();
        let y = FracQT::new(&a * &c, &b * &c).unwrap();
        prop_assert_eq!(&x, &y);
        prop_assert_eq!(FracQT::new(&a * &b, b).unwrap().to_laurent(), Some(a));
    }

    #[test]
    fn omega_is_an_involution(f in (1usize..=5).prop_flat_map(expansion)) {
        prop_assert_eq!(f.omega().omega(), f);
    }

    #[test]
    fn omega_is_multiplicative(f in (1usize..=3).prop_flat_map(expansion), g in (1usize..=3).prop_flat_map(expansion)) {
        prop_assert_eq!(schur_multiply(&f, &g).omega(), schur_multiply(&f.omega(), &g.omega()));
    }

    #[test]
    fn schur_json_round_trip(f in (1usize..=5).prop_flat_map(expansion)) {
        prop_assert_eq!(SchurExpansion::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn straightening_is_antisymmetric(gamma in prop::collection::vec(-3i32..=4, 2..=5), k in 0usize..4) {
        let l = gamma.len();
        let k = k % (l - 1);
        // s_k . gamma = s_k(gamma + rho) - rho
        let mut swapped = gamma.clone();
        swapped.swap(k, k + 1);
        swapped[k] -= 1;
        swapped[k + 1] += 1;
        match (straighten(&gamma), straighten(&swapped)) {
            (Straightened::Zero, Straightened::Zero) => {}
            (Straightened::Char { sign: a, nu: x }, Straightened::Char { sign: b, nu: y }) => {
                prop_assert_eq!(x, y);
                prop_assert_eq!(a, -b);
            }
            (x, y) => prop_assert!(false, "{:?} vs {:?}", x, y),
        }
    }
}
