//! Pointed normal fuzzy subgroups: the generation strategies, level sets,
//! and the witnesses reported when a grade vector is not a fuzzy subgroup.

use std::sync::Arc;

use fuzzaut::subset::{gen_mu_chain, non_normal_chain_mu, normal_chain};
use fuzzaut::{builtin_group, FuzzySubset, Grade, MuStrategy};

fn grades(s: &[&str]) -> Vec<Grade> {
    s.iter().map(|x| x.parse().expect("grade")).collect()
}

fn main() {
    let q8 = Arc::new(builtin_group("quaternion8").unwrap());
    for strategy in [MuStrategy::Chain, MuStrategy::Class, MuStrategy::Random(7)] {
        let mu = strategy.generate(&q8);
        let shown: Vec<String> = mu.grades().iter().map(Grade::to_string).collect();
        println!("{:>9} on Q8: [{}]", strategy.token(), shown.join(", "));
        for t in mu.attained_grades() {
            println!("           level {t}: {:?}", mu.level_set(t));
        }
    }

    let chain = normal_chain(&q8);
    println!("normal chain used by the chain strategy: {chain:?}");
    let custom = gen_mu_chain(q8.clone(), &chain, &grades(&["1", "2/3", "1/5", "1/7"])).unwrap();
    println!("same chain, other grades: {:?}", custom.grades());

    let z4 = Arc::new(builtin_group("cyclic(4)").unwrap());
    let bad = FuzzySubset::new(z4, grades(&["1", "1/2", "1/4", "1/2"])).unwrap();
    println!("[1, 1/2, 1/4, 1/2] on Z4: {}", bad.subgroup_violation().map_or("fuzzy subgroup".into(), |w| w.to_string()));

    let s3 = Arc::new(builtin_group("symmetric(3)").unwrap());
    let skew = non_normal_chain_mu(&s3).unwrap();
    println!(
        "chain through a non-normal subgroup of S3: {:?}, fuzzy subgroup {}, normal {}, first normality witness {:?}",
        skew.grades(),
        skew.is_fuzzy_subgroup(),
        skew.is_normal_fuzzy_subgroup(),
        skew.normality_violation()
    );
}
