use std::sync::Arc;

use fjump::frobenius::{bracket_power, frobenius_root};
use fjump::oracles::{random_ideal, random_polynomial, FuzzConfig};
use fjump::properties::{monomial_root_agrees, random_monomial_ideal};
use fjump::{parse_ring, GaloisField, Ideal, Ring};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ring(text: &str) -> Arc<Ring> {
    parse_ring(text).unwrap()
}

const RINGS: [&str; 4] = ["F2[x,y,z]", "F3[x,y]", "F5[x,y]", "F3^2:i^2+1[x,y]"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_roots_invert_frobenius(k in 0usize..4, seed in any::<u64>()) {
        let fields = [
            GaloisField::prime(7).unwrap(),
            GaloisField::extension(3, &[1, 0, 1], "i").unwrap(),
            GaloisField::extension(2, &[1, 1, 0, 1], "t").unwrap(),
            GaloisField::extension(5, &[2, 0, 1], "w").unwrap(),
        ];
        let f = &fields[k];
        let a = (seed % f.size() as u64) as u32;
        prop_assert_eq!(f.frobenius(f.pth_root(a), 1), a);
        prop_assert_eq!(f.frobenius(f.root_iter(a, 3), 3), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn groebner_basis_is_canonical(k in 0usize..4, seed in any::<u64>()) {
        let r = ring(RINGS[k]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let config = FuzzConfig { max_degree: 4, ..FuzzConfig::default() };
        let i = random_ideal(&r, &mut rng, &config);
        for g in i.generators() {
            prop_assert!(i.contains(g));
        }
        let mut shuffled: Vec<_> = i.generators().iter().rev().cloned().collect();
        shuffled.push(i.generators()[0].mul(&random_polynomial(&r, &mut rng, 2, 3)));
        prop_assert_eq!(&Ideal::new(&r, shuffled), &i);
        prop_assert_eq!(&i.to_groebner(), &i);
    }

    #[test]
    fn intersection_and_colon(k in 0usize..3, seed in any::<u64>()) {
        let r = ring(RINGS[k]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let config = FuzzConfig { max_degree: 3, max_generators: 2, ..FuzzConfig::default() };
        let i = random_ideal(&r, &mut rng, &config);
        let j = random_ideal(&r, &mut rng, &config);
        let meet = i.intersection(&j).unwrap();
        prop_assert!(i.contains_ideal(&meet) && j.contains_ideal(&meet));
        prop_assert!(meet.contains_ideal(&i.product(&j)));
        let g = random_polynomial(&r, &mut rng, 3, 3);
        let colon = i.colon(&g).unwrap();
        prop_assert!(colon.contains_ideal(&i));
        prop_assert!(i.contains_ideal(&colon.scale(&g)));
    }

    #[test]
    fn frobenius_adjunction(k in 0usize..4, seed in any::<u64>()) {
        let r = ring(RINGS[k]);
        let p = r.characteristic();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = random_ideal(&r, &mut rng, &FuzzConfig::default());
        let j = random_ideal(&r, &mut rng, &FuzzConfig::default());
        for q in [p, p * p] {
            let lhs = bracket_power(&j, q).unwrap().contains_ideal(&i);
            let rhs = j.contains_ideal(&frobenius_root(&i, q).unwrap());
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(frobenius_root(&bracket_power(&j, q).unwrap(), q).unwrap(), j.clone());
            prop_assert!(bracket_power(&frobenius_root(&i, q).unwrap(), q).unwrap().contains_ideal(&i));
        }
        let twice = bracket_power(&bracket_power(&j, p).unwrap(), p).unwrap();
        prop_assert_eq!(twice, bracket_power(&j, p * p).unwrap());
    }

    #[test]
    fn monomial_roots_match_oracle(k in 0usize..3, seed in any::<u64>()) {
        let r = ring(RINGS[k]);
        let p = r.characteristic();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = random_monomial_ideal(&r, &mut rng, 3, 12);
        for q in [p, p * p] {
            prop_assert!(monomial_root_agrees(&i, q).unwrap());
        }
    }
}
