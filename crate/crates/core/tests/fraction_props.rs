use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thompson_core::fraction::{kadic_grid, random_forest, random_forest_pair};
use thompson_core::suites::random_element;
use thompson_core::{Forest, ElementClass, ForestPair, FractionV, GroupoidMorphism};

fn forest(r: &mut ChaCha8Rng, k: usize, roots: usize, carets: std::ops::Range<usize>) -> Forest {
    let c = r.random_range(carets);
    random_forest(r, k, roots, c)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn class_strategy() -> impl Strategy<Value = ElementClass> {
    prop_oneof![Just(ElementClass::F), Just(ElementClass::T), Just(ElementClass::V)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn group_laws_per_class(seed: u64, class in class_strategy()) {
        let mut r = rng(seed);
        let u = random_element(&mut r, 1, 7, class).unwrap();
        let v = random_element(&mut r, 1, 7, class).unwrap();
        let w = random_element(&mut r, 1, 7, class).unwrap();
        let id = FractionV::identity(2);
        prop_assert!(u.multiply(&v).unwrap().multiply(&w).unwrap().equals(&u.multiply(&v.multiply(&w).unwrap()).unwrap()));
        prop_assert!(id.multiply(&u).unwrap().equals(&u));
        prop_assert!(u.multiply(&id).unwrap().equals(&u));
        prop_assert!(u.multiply(&u.invert()).unwrap().is_identity());
        prop_assert!(u.invert().multiply(&u).unwrap().is_identity());
        // closure within the class
        let uv = u.multiply(&v).unwrap();
        prop_assert!(uv.classify() <= class);
    }

    #[test]
    fn equality_matches_pl_maps(seed: u64) {
        let mut r = rng(seed);
        let u = random_element(&mut r, 1, 10, ElementClass::V).unwrap();
        let v = if r.random_bool(0.5) {
            u.expand(&forest(&mut r, 2, u.leaves(), 0..4)).unwrap()
        } else {
            random_element(&mut r, 1, 10, ElementClass::V).unwrap()
        };
        prop_assert_eq!(u.equals(&v), u.pl_map() == v.pl_map());
    }

    #[test]
    fn reduce_is_confluent(seed: u64) {
        let mut r = rng(seed);
        let v = random_element(&mut r, 1, 9, ElementClass::V).unwrap();
        let k = r.random_range(0..6);
        let big = v.expand(&random_forest(&mut r, 2, v.leaves(), k)).unwrap();
        prop_assert_eq!(big.reduce(), v.reduce());
        prop_assert_eq!(big.classify(), v.classify());
    }

    #[test]
    fn pl_map_of_product_is_composition(seed: u64) {
        let mut r = rng(seed);
        let u = random_element(&mut r, 1, 6, ElementClass::V).unwrap();
        let v = random_element(&mut r, 1, 6, ElementClass::V).unwrap();
        let (pu, pv, puv) = (u.pl_map(), v.pl_map(), u.multiply(&v).unwrap().pl_map());
        for x in kadic_grid(2, 1, 6) {
            prop_assert_eq!(puv.apply(&x).unwrap(), pu.apply(&pv.apply(&x).unwrap()).unwrap());
        }
    }

    #[test]
    fn groupoid_composition_laws(seed: u64, k in 2usize..=3) {
        let mut r = rng(seed);
        let step = k - 1;
        let mut obj = || 1 + step * r.random_range(0..3usize);
        let (a, b, c) = (obj(), obj(), obj());
        let mut morph = |s: usize, t: usize| {
            let leaves = s.max(t) + step * r.random_range(0..3usize);
            GroupoidMorphism::from_pair(random_forest_pair(&mut r, k, s, t, leaves).unwrap())
        };
        let h = morph(a, b);
        let g = morph(b, c);
        let f = morph(c, a);
        let left = GroupoidMorphism::compose(&GroupoidMorphism::compose(&f, &g).unwrap(), &h).unwrap();
        let right = GroupoidMorphism::compose(&f, &GroupoidMorphism::compose(&g, &h).unwrap()).unwrap();
        prop_assert!(left.equals(&right));
        prop_assert_eq!((left.source(), left.target()), (a, a));
        prop_assert!(GroupoidMorphism::compose(&h.inverse(), &h).unwrap().equals(&GroupoidMorphism::identity(k, a)));
        prop_assert!(GroupoidMorphism::compose(&GroupoidMorphism::identity(k, b), &h).unwrap().equals(&h));
        let gh = GroupoidMorphism::compose(&g, &h).unwrap();
        prop_assert_eq!(gh.pl_map(), g.pl_map().compose(&h.pl_map()).unwrap());
    }

    #[test]
    fn literals_round_trip(seed: u64) {
        let mut r = rng(seed);
        let v = random_element(&mut r, 1, 9, ElementClass::V).unwrap();
        let text = v.to_string();
        prop_assert_eq!(text.parse::<FractionV>().unwrap(), v);
        let p = random_forest_pair(&mut r, 3, 1, 3, 5).unwrap();
        prop_assert_eq!(p.to_string().parse::<ForestPair>().unwrap(), p);
    }
}
