use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thompson_core::fraction::{random_binary_shape, random_forest};
use thompson_core::{Forest, Perm, Tree};

fn forest(r: &mut ChaCha8Rng, k: usize, roots: usize, carets: std::ops::Range<usize>) -> Forest {
    let c = r.random_range(carets);
    random_forest(r, k, roots, c)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_perm(r: &mut ChaCha8Rng, n: usize) -> Perm {
    use rand::seq::SliceRandom;
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(r);
    Perm::from_images(images).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn composition_is_associative_with_identities(seed: u64, k in 2usize..=4) {
        let mut r = rng(seed);
        let roots = r.random_range(1..=3);
        let c = forest(&mut r, k, roots, 0..4);
        let b = forest(&mut r, k, c.leaf_count(), 0..4);
        let a = forest(&mut r, k, b.leaf_count(), 0..4);
        let left = Forest::compose(&Forest::compose(&a, &b).unwrap(), &c).unwrap();
        let right = Forest::compose(&a, &Forest::compose(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(Forest::compose(&Forest::trivial(k, c.leaf_count()), &c).unwrap(), c.clone());
        prop_assert_eq!(Forest::compose(&c, &Forest::trivial(k, roots)).unwrap(), c);
        let internal: usize = left.trees().iter().map(|s| s.internal()).sum();
        prop_assert_eq!(internal, (left.leaf_count() - left.root_count()) / (k - 1));
    }

    #[test]
    fn exchange_law_matches_leaf_maps(seed: u64, k in 2usize..=4) {
        let mut r = rng(seed);
        let roots = r.random_range(1..=5);
        let p = forest(&mut r, k, roots, 0..6);
        let tau = random_perm(&mut r, roots);
        let sf = p.compose_perm(&tau).unwrap();
        let sizes: Vec<usize> = p.trees().iter().map(|s| s.leaves()).collect();
        let offset = |i: usize| sizes[..i].iter().sum::<usize>();
        // root i of the source carries tree p_{τ(i)}; its k-th leaf lands at offset(τ(i)) + k
        let mut pos = 0;
        for i in 0..roots {
            prop_assert_eq!(&sf.forest.trees()[i], &p.trees()[tau.apply(i)]);
            for kk in 0..sizes[tau.apply(i)] {
                prop_assert_eq!(sf.perm.apply(pos), offset(tau.apply(i)) + kk);
                pos += 1;
            }
        }
    }

    #[test]
    fn rooted_subtree_weights_sum_to_one(seed: u64, n in 1usize..=9, num in 1i64..50, den in 51i64..100) {
        let mut r = rng(seed);
        let t = Tree::new(2, random_binary_shape(&mut r, n)).unwrap();
        let x = BigRational::new(num.into(), den.into());
        let y = BigRational::one() - &x;
        let mut sum = BigRational::zero();
        for z in t.rooted_subtrees() {
            prop_assert_eq!(z.n + z.b + z.m, n);
            sum += num_traits::pow(x.clone(), z.n - 1) * num_traits::pow(y.clone(), z.b);
        }
        prop_assert!(sum.is_one());
    }

    #[test]
    fn join_is_a_common_expansion(seed: u64, k in 2usize..=3) {
        let mut r = rng(seed);
        let roots = r.random_range(1..=3);
        let a = forest(&mut r, k, roots, 0..5);
        let b = forest(&mut r, k, roots, 0..5);
        let (u, f, g) = a.join(&b).unwrap();
        prop_assert_eq!(&Forest::compose(&f, &a).unwrap(), &u);
        prop_assert_eq!(&Forest::compose(&g, &b).unwrap(), &u);
    }

    #[test]
    fn forest_literals_round_trip(seed: u64, k in 2usize..=4) {
        let mut r = rng(seed);
        let roots = r.random_range(1..=3);
        // a forest without carets does not determine its arity
        let f = forest(&mut r, k, roots, 1..5);
        let text = f.to_string();
        prop_assert_eq!(text.parse::<Forest>().unwrap(), f);
    }
}
