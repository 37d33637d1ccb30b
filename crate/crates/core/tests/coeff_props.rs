use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thompson_core::coeff::{
    check_matched_state_structure, decay_bound, domination_check, intermediate_bounds_check, pair_tally, path_bound_check, phi_alpha,
    vertex_classes, wreath_coefficient, wreath_coefficient_exact, CoeffPoly, MatchStrategy,
};
use thompson_core::fraction::{random_forest, random_forest_pair};
use thompson_core::group::{parse_pd, Builtin};
use thompson_core::labeled::WreathElement;
use thompson_core::linalg::gram_min_eigenvalue;
use thompson_core::oracle::{oracle_labeled_exact, oracle_phi};
use thompson_core::suites::{random_element, random_labeled, random_wreath};
use thompson_core::{ElementClass, FractionV, Tree};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `∼` straight from its definition: a shared equal-distance witness, then
/// transitive closure by repeated merging.
fn classes_by_definition(t: &Tree, u: &Tree, sigma: &thompson_core::Perm) -> Vec<Vec<bool>> {
    let n = t.leaves();
    let v = t.internal();
    let mut rel = vec![vec![false; v]; v];
    let mut witnesses: Vec<Vec<usize>> = vec![Vec::new(); v];
    for j in 1..=n {
        let p = t.leaf_path(j).unwrap().edges;
        let q = u.leaf_path(sigma.apply(j - 1) + 1).unwrap().edges;
        for (i, e) in p.iter().enumerate() {
            let d = p.len() - i;
            if d <= q.len() {
                witnesses[e.vertex].push(q[q.len() - d].vertex);
            }
        }
    }
    for a in 0..v {
        rel[a][a] = true;
        for b in 0..v {
            if witnesses[a].iter().any(|w| witnesses[b].contains(w)) {
                rel[a][b] = true;
            }
        }
    }
    for k in 0..v {
        for a in 0..v {
            for b in 0..v {
                if rel[a][k] && rel[k][b] {
                    rel[a][b] = true;
                }
            }
        }
    }
    rel
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matchers_agree(seed: u64) {
        let mut r = rng(seed);
        let v = random_element(&mut r, 1, 10, ElementClass::V).unwrap();
        let k = r.random_range(0..3);
        let big = v.expand(&random_forest(&mut r, 2, v.leaves(), k)).unwrap();
        prop_assert_eq!(pair_tally(big.pair(), MatchStrategy::Backtrack).unwrap(), pair_tally(big.pair(), MatchStrategy::HashJoin).unwrap());
        let (s, t) = (r.random_range(1..=3), r.random_range(1..=3));
        let p = random_forest_pair(&mut r, 2, s, t, 6).unwrap();
        prop_assert_eq!(pair_tally(&p, MatchStrategy::Backtrack).unwrap(), pair_tally(&p, MatchStrategy::HashJoin).unwrap());
    }

    #[test]
    fn vertex_classes_follow_the_definition(seed: u64) {
        let mut r = rng(seed);
        let v = random_element(&mut r, 1, 9, ElementClass::V).unwrap();
        let (t, u) = (v.num_tree(), v.den_tree());
        let c = vertex_classes(&t, &u, v.perm()).unwrap();
        let rel = classes_by_definition(&t, &u, v.perm());
        for a in 0..t.internal() {
            for b in 0..t.internal() {
                prop_assert_eq!(c.equivalent(a, b), rel[a][b]);
            }
        }
    }

    #[test]
    fn coefficients_ignore_the_representative(seed: u64) {
        let mut r = rng(seed);
        let v = random_element(&mut r, 1, 8, ElementClass::V).unwrap();
        let k = r.random_range(1..=4);
        prop_assert_eq!(phi_alpha(&v.expand(&random_forest(&mut r, 2, v.leaves(), k)).unwrap()).unwrap(), phi_alpha(&v).unwrap());
        let g = Builtin::Cyclic(3);
        let pd = parse_pd("rchar:1", &g).unwrap();
        let n = r.random_range(1..=7);
        let lp = random_labeled(&mut r, n, &g, 0.5).unwrap();
        let big = lp.expand(&random_forest(&mut r, 2, n, k), &g).unwrap();
        prop_assert_eq!(wreath_coefficient_exact(&big, &pd).unwrap(), wreath_coefficient_exact(&lp, &pd).unwrap());
    }

    #[test]
    fn endpoints_and_farley(seed: u64) {
        let mut r = rng(seed);
        let v = random_element(&mut r, 2, 10, ElementClass::V).unwrap();
        let p = phi_alpha(&v).unwrap();
        prop_assert!(p.eval_exact(&BigRational::zero()).is_zero());
        prop_assert!(p.eval_exact(&BigRational::one()).is_one());
        let t = random_element(&mut r, 1, 8, ElementClass::T).unwrap();
        prop_assert_eq!(phi_alpha(&t).unwrap(), CoeffPoly::x_power(t.leaves() - 1));
    }

    #[test]
    fn coefficients_are_hermitian(seed: u64, alpha in 0.05f64..0.95) {
        let mut r = rng(seed);
        let v = random_element(&mut r, 1, 10, ElementClass::V).unwrap();
        let (a, b) = (phi_alpha(&v).unwrap().eval(alpha * alpha), phi_alpha(&v.invert()).unwrap().eval(alpha * alpha));
        prop_assert!((a - b).abs() <= 1e-12);
        let g = Builtin::Cyclic(7);
        let pd = parse_pd("char:3", &g).unwrap();
        let w = random_wreath(&mut r, 1, 7, &g).unwrap();
        let x = wreath_coefficient(&w.to_labeled_pair(&g), &pd, alpha).unwrap();
        let y = wreath_coefficient(&w.invert(&g).to_labeled_pair(&g), &pd, alpha).unwrap();
        prop_assert!((x - y.conj()).norm() <= 1e-12);
    }

    #[test]
    fn structured_sums_equal_the_oracle(seed: u64) {
        let mut r = rng(seed);
        let v = random_element(&mut r, 1, 6, ElementClass::V).unwrap();
        prop_assert_eq!(phi_alpha(&v).unwrap().to_alpha_beta(), oracle_phi(&v).unwrap());
        let g = Builtin::Integers;
        let pd = parse_pd("zgeom:1/2", &g).unwrap();
        let n = r.random_range(1..=6);
        let lp = random_labeled(&mut r, n, &g, 0.6).unwrap();
        prop_assert_eq!(wreath_coefficient_exact(&lp, &pd).unwrap(), oracle_labeled_exact(&lp, &g, &pd).unwrap());
    }

    #[test]
    fn matched_states_respect_classes(seed: u64) {
        let mut r = rng(seed);
        let v = random_element(&mut r, 1, 10, ElementClass::V).unwrap();
        let rep = check_matched_state_structure(&v).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep.violations);
    }

    #[test]
    fn decay_chain_holds(seed: u64, n in 2usize..=14, alpha in prop_oneof![Just(0.5), Just(0.8), 0.05f64..0.95]) {
        let v = FractionV::random_reduced(n, ElementClass::V, seed).unwrap();
        let rep = intermediate_bounds_check(&v, alpha).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep.violations());
        prop_assert!(rep.value <= decay_bound(alpha, n).unwrap());
    }

    #[test]
    fn wreath_coefficients_are_dominated(seed: u64, alpha in 0.05f64..0.95) {
        let mut r = rng(seed);
        let g = Builtin::Integers;
        let pd = parse_pd("zgeom:3/4", &g).unwrap();
        let n = r.random_range(1..=8);
        let lp = random_labeled(&mut r, n, &g, 0.4).unwrap();
        prop_assert!(domination_check(&lp, &pd, alpha).unwrap().passed());
        prop_assert!(path_bound_check(&lp, &pd, alpha).unwrap().passed());
    }

    #[test]
    fn gram_matrices_are_psd(seed: u64, alpha in 0.05f64..0.95) {
        let mut r = rng(seed);
        let m = r.random_range(2..=8);
        let vs: Vec<FractionV> = (0..m).map(|_| random_element(&mut r, 1, 5, ElementClass::V).unwrap()).collect();
        let gram: Vec<Vec<Complex64>> = vs
            .iter()
            .map(|a| vs.iter().map(|b| Complex64::new(phi_alpha(&a.invert().multiply(b).unwrap()).unwrap().eval(alpha * alpha), 0.0)).collect())
            .collect();
        prop_assert!(gram_min_eigenvalue(&gram).unwrap() >= -1e-9);
        let g = Builtin::Cyclic(3);
        let pd = parse_pd("char:1", &g).unwrap();
        let ws: Vec<WreathElement<_>> = (0..m).map(|_| random_wreath(&mut r, 1, 4, &g).unwrap()).collect();
        let gram: Vec<Vec<Complex64>> = ws
            .iter()
            .map(|a| {
                let ai = a.invert(&g);
                ws.iter().map(|b| wreath_coefficient(&WreathElement::multiply(&ai, b, &g).unwrap().to_labeled_pair(&g), &pd, alpha).unwrap()).collect()
            })
            .collect();
        prop_assert!(gram_min_eigenvalue(&gram).unwrap() >= -1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn exact_results_ignore_thread_count(seed: u64, n in 12usize..=18) {
        let v = FractionV::random_reduced(n, ElementClass::V, seed).unwrap();
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let a = one.install(|| phi_alpha(&v).unwrap());
        let b = four.install(|| phi_alpha(&v).unwrap());
        prop_assert_eq!(a.bernstein(), b.bernstein());
        prop_assert_eq!(a.eval(0.3).to_bits(), b.eval(0.3).to_bits());
    }
}
