use fjump::fjumping::{fflag, same_fsubmodule};
use fjump::properties::{
    flag_ascends, flag_shift, fjumping_p_power, fjumping_shift, random_local_polynomial, root_minimality,
};
use fjump::testideal::{tau_alpha, tau_minus_epsilon};
use fjump::{parse_ring, IterationPolicy, Polynomial, RationalExponent};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const RINGS: [&str; 3] = ["F2[x,y]", "F3[x,y]", "F5[x,y]"];

fn sample(k: usize, seed: u64, r: u64) -> (Polynomial, RationalExponent) {
    let ring = parse_ring(RINGS[k]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = random_local_polynomial(&ring, &mut rng, 3, 3);
    let p = ring.characteristic();
    let e = if p == 2 { 2 } else { 1 };
    let den = p.pow(e) - 1;
    (f, RationalExponent::new(1 + (r - 1) % den, e, p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn flag_is_ascending(k in 0usize..3, seed in any::<u64>(), r in 1u64..9) {
        let (f, alpha) = sample(k, seed, r);
        prop_assert!(flag_ascends(&f, &alpha, IterationPolicy::default()).unwrap());
    }

    #[test]
    fn flag_shifts_under_frobenius(k in 0usize..3, seed in any::<u64>(), r in 1u64..9) {
        let (f, alpha) = sample(k, seed, r);
        prop_assert!(flag_shift(&f, &alpha, 3, IterationPolicy::default()).unwrap());
    }

    #[test]
    fn jumping_ideal_p_power(k in 0usize..3, seed in any::<u64>(), r in 1u64..9) {
        let (f, alpha) = sample(k, seed, r);
        prop_assert!(fjumping_p_power(&f, &alpha, IterationPolicy::default()).unwrap());
    }

    #[test]
    fn jumping_ideal_integer_shift(k in 0usize..3, seed in any::<u64>(), r in 1u64..9, l in 1u64..=2) {
        let (f, alpha) = sample(k, seed, r);
        prop_assert!(fjumping_shift(&f, &alpha, l, IterationPolicy::default()).unwrap());
    }

    #[test]
    fn test_ideal_is_minimal_root(k in 0usize..3, seed in any::<u64>(), r in 1u64..9) {
        let (f, alpha) = sample(k, seed, r);
        prop_assert!(root_minimality(&f, &alpha, IterationPolicy::default()).unwrap());
    }

    #[test]
    fn same_submodule_matches_verdict(k in 0usize..3, seed in any::<u64>(), r in 1u64..9) {
        let (f, alpha) = sample(k, seed, r);
        let pol = IterationPolicy::default();
        let i = tau_alpha(&f, &alpha, pol).unwrap();
        let j = tau_minus_epsilon(&f, &alpha, pol).unwrap();
        let jumping = !fflag(&f, &alpha, pol).unwrap().limit().is_unit();
        let witness = same_fsubmodule(&i, &j, &f, &alpha, 6).unwrap();
        if jumping {
            prop_assert!(witness.is_none());
        } else {
            prop_assert!(witness.is_some());
        }
    }
}
