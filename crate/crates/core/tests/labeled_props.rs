use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thompson_core::fraction::random_forest;
use thompson_core::group::{Builtin, Group};
use thompson_core::labeled::{fraction_from_wreath, wreath_from_fraction, LabeledPair, WreathElement};
use thompson_core::suites::{random_labeled, random_wreath};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn group_strategy() -> impl Strategy<Value = Builtin> {
    prop_oneof![Just(Builtin::Integers), Just(Builtin::Cyclic(3)), Just(Builtin::Symmetric(3))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn wreath_fraction_round_trips(seed: u64, g in group_strategy()) {
        let mut r = rng(seed);
        let w = random_wreath(&mut r, 1, 6, &g).unwrap();
        let (num, den) = fraction_from_wreath(&w, &g);
        prop_assert_eq!(&wreath_from_fraction(&num, &den, &g).unwrap(), &w);
        prop_assert_eq!(&WreathElement::from_json(&w.to_json(&g), &g).unwrap(), &w);
        prop_assert_eq!(&WreathElement::parse(&w.format(&g), &g).unwrap(), &w);
    }

    #[test]
    fn wreath_normal_form_ignores_representative(seed: u64, g in group_strategy()) {
        let mut r = rng(seed);
        let n = r.random_range(1..=6);
        let lp = random_labeled(&mut r, n, &g, 0.5).unwrap();
        let k = r.random_range(1..=4);
        let big = lp.expand(&random_forest(&mut r, 2, n, k), &g).unwrap();
        prop_assert_eq!(big.to_wreath(&g).unwrap(), lp.to_wreath(&g).unwrap());
        prop_assert_eq!(LabeledPair::parse(&lp.format(&g), &g).unwrap(), lp);
    }

    #[test]
    fn semidirect_law_matches_fractions_on_z3(seed: u64) {
        let g = Builtin::Cyclic(3);
        let mut r = rng(seed);
        let u = random_wreath(&mut r, 1, 6, &g).unwrap();
        let w = random_wreath(&mut r, 1, 6, &g).unwrap();
        let frac = LabeledPair::multiply(&u.to_labeled_pair(&g), &w.to_labeled_pair(&g), &g).unwrap();
        prop_assert_eq!(frac.to_wreath(&g).unwrap(), WreathElement::multiply(&u, &w, &g).unwrap());
        prop_assert!(WreathElement::multiply(&u, &u.invert(&g), &g).unwrap().is_identity());
    }

    #[test]
    fn fractions_compose_labels_in_opposite_order(seed: u64) {
        let g = Builtin::Symmetric(3);
        let mut r = rng(seed);
        let u = random_wreath(&mut r, 1, 6, &g).unwrap();
        let w = random_wreath(&mut r, 1, 6, &g).unwrap();
        let frac = LabeledPair::multiply(&u.to_labeled_pair(&g), &w.to_labeled_pair(&g), &g).unwrap().to_wreath(&g).unwrap();
        let semi = WreathElement::multiply(&u.pointwise_inverse(&g), &w.pointwise_inverse(&g), &g).unwrap();
        prop_assert_eq!(frac.pointwise_inverse(&g), semi);
    }

    #[test]
    fn bernoulli_shift_is_an_action(seed: u64) {
        let g = Builtin::Symmetric(3);
        let mut r = rng(seed);
        let u = random_wreath(&mut r, 1, 5, &g).unwrap();
        let v = random_wreath(&mut r, 1, 5, &g).unwrap();
        let m = random_wreath(&mut r, 1, 5, &g).unwrap();
        let uv = u.vpart().multiply(v.vpart()).unwrap();
        let direct = WreathElement::shift(&uv, m.map(), &g);
        let nested = WreathElement::shift(u.vpart(), &WreathElement::shift(v.vpart(), m.map(), &g), &g);
        prop_assert_eq!(direct, nested);
        let none: BTreeMap<_, _> = BTreeMap::new();
        prop_assert!(WreathElement::shift(u.vpart(), &none, &g).is_empty());
    }

    #[test]
    fn wreath_group_laws(seed: u64, g in group_strategy()) {
        let mut r = rng(seed);
        let a = random_wreath(&mut r, 1, 5, &g).unwrap();
        let b = random_wreath(&mut r, 1, 5, &g).unwrap();
        let c = random_wreath(&mut r, 1, 5, &g).unwrap();
        let ab_c = WreathElement::multiply(&WreathElement::multiply(&a, &b, &g).unwrap(), &c, &g).unwrap();
        let a_bc = WreathElement::multiply(&a, &WreathElement::multiply(&b, &c, &g).unwrap(), &g).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let id = WreathElement::identity(2);
        prop_assert_eq!(&WreathElement::multiply(&id, &a, &g).unwrap(), &a);
        prop_assert!(WreathElement::multiply(&a.invert(&g), &a, &g).unwrap().is_identity());
        prop_assert!(g.is_identity(&g.op(&g.identity(), &g.identity())));
    }
}
