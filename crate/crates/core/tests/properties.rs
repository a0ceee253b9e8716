mod common;

use std::sync::Arc;

use fuzzaut::group::builtin_catalog;
use fuzzaut::hom::{is_fuzzy_homomorphism, lift_hom};
use fuzzaut::{FiniteGroup, FuzzyMap, FuzzyRelation, Grade, MuStrategy};
use proptest::prelude::*;

use common::*;

fn catalog() -> Vec<Arc<FiniteGroup>> {
    builtin_catalog(8).into_iter().map(Arc::new).collect()
}

fn grade() -> impl Strategy<Value = Grade> {
    prop_oneof![(0u32..5).prop_map(Grade::half_pow), Just(Grade::ZERO)]
}

fn below_one() -> impl Strategy<Value = Grade> {
    prop_oneof![(1u32..5).prop_map(Grade::half_pow), Just(Grade::ZERO)]
}

/// A fuzzy map on `g` with skeleton `sigma` and arbitrary grades below 1 elsewhere.
fn random_map(g: &Arc<FiniteGroup>, sigma: &[usize], noise: &[Grade]) -> FuzzyMap {
    let n = g.order();
    let rel = FuzzyRelation::from_fn(g.clone(), g.clone(), |x, y| {
        if sigma[x] == y { Grade::ONE } else { noise[(x * n + y) % noise.len()] }
    });
    FuzzyMap::new(rel).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_mu_is_a_pointed_normal_fuzzy_subgroup(idx in 0usize..64, seed in any::<u64>()) {
        let groups = catalog();
        let g = &groups[idx % groups.len()];
        let mu = MuStrategy::Random(seed).generate(g);
        prop_assert!(mu.is_pointed());
        prop_assert!(mu.subgroup_violation().is_none());
        prop_assert!(mu.normality_violation().is_none());
        let n = g.order();
        let maps: Vec<Matrix> = (0..n).map(|a| induced(g, &mu, a)).collect();
        for a in 0..n {
            prop_assert!(hom_holds(g, g, &maps[a]));
            for b in 0..n {
                prop_assert_eq!(compose(&maps[a], &maps[b]), maps[mul(g, b, a)].clone());
            }
        }
    }

    #[test]
    fn library_compose_matches_naive(
        idx in 0usize..64,
        perm_seed in any::<u64>(),
        noise_f in prop::collection::vec(below_one(), 1..40),
        noise_g in prop::collection::vec(below_one(), 1..40),
    ) {
        let groups = catalog();
        let g = &groups[idx % groups.len()];
        let n = g.order();
        let sigma: Vec<usize> = (0..n).map(|x| (x + perm_seed as usize) % n).collect();
        let tau: Vec<usize> = (0..n).map(|x| (n - 1 - x + (perm_seed >> 8) as usize) % n).collect();
        let f = random_map(g, &sigma, &noise_f);
        let h = random_map(g, &tau, &noise_g);
        let lib = f.after(&h).unwrap().relation().rows();
        prop_assert_eq!(lib, compose(&f.relation().rows(), &h.relation().rows()));
    }

    #[test]
    fn grade_lattice_laws(a in grade(), b in grade(), c in grade()) {
        prop_assert_eq!(a.meet(b), b.meet(a));
        prop_assert_eq!(a.join(b), b.join(a));
        prop_assert_eq!(a.meet(b.meet(c)), a.meet(b).meet(c));
        prop_assert_eq!(a.join(b.join(c)), a.join(b).join(c));
        prop_assert_eq!(a.meet(a.join(b)), a);
        prop_assert_eq!(a.join(a.meet(b)), a);
        prop_assert_eq!(a.meet(b.join(c)), a.meet(b).join(a.meet(c)));
        prop_assert_eq!(a.meet(Grade::ONE), a);
        prop_assert_eq!(a.join(Grade::ZERO), a);
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Grade>().unwrap(), a);
    }

    #[test]
    fn lift_skeleton_is_the_crisp_map(idx in 0usize..64, pick in any::<usize>(), seed in any::<u64>()) {
        let groups = catalog();
        let g = &groups[idx % groups.len()];
        let autos = g.crisp_automorphisms().unwrap();
        let sigma = &autos[pick % autos.len()];
        let mu = MuStrategy::Random(seed).generate(g);
        let f = lift_hom(g.clone(), sigma, &mu).unwrap();
        prop_assert_eq!(f.skeleton(), sigma.as_slice());
        prop_assert!(hom_holds(g, g, &f.relation().rows()));
        prop_assert!(is_fuzzy_homomorphism(&f).verdict);
    }

    #[test]
    fn hom_check_agrees_with_naive(
        idx in 0usize..64,
        pick in any::<usize>(),
        seed in any::<u64>(),
        flips in prop::collection::vec((any::<usize>(), below_one()), 0..3),
    ) {
        let groups = catalog();
        let g = &groups[idx % groups.len()];
        let autos = g.crisp_automorphisms().unwrap();
        let sigma = &autos[pick % autos.len()];
        let mu = MuStrategy::Random(seed).generate(g);
        let mut rows = lift_hom(g.clone(), sigma, &mu).unwrap().relation().rows();
        let n = g.order();
        for (cell, value) in flips {
            let (x, y) = ((cell / n) % n, cell % n);
            if sigma[x] != y {
                rows[x][y] = value;
            }
        }
        let f = FuzzyMap::new(FuzzyRelation::new(g.clone(), g.clone(), rows.clone()).unwrap()).unwrap();
        prop_assert_eq!(is_fuzzy_homomorphism(&f).verdict, hom_holds(g, g, &rows));
    }
}
