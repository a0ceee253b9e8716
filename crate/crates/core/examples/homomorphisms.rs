//! Fuzzy homomorphisms: the supremum condition with its witnesses, lifts of
//! crisp homomorphisms, kernels and the structural facts about images.

use std::sync::Arc;

use fuzzaut::hom::{check_kernel, check_structure, is_fuzzy_homomorphism, kernel, lift_hom};
use fuzzaut::{builtin_group, FuzzyMap, FuzzyRelation, FuzzySubset, Grade};

fn main() {
    let s3 = Arc::new(builtin_group("symmetric(3)").unwrap());
    let z2 = Arc::new(builtin_group("cyclic(2)").unwrap());
    let mu2 = FuzzySubset::new(z2.clone(), vec![Grade::ONE, "1/2".parse().unwrap()]).unwrap();

    let sign = lift_hom(s3.clone(), &fuzzaut::group::symmetric_sign(3), &mu2).unwrap();
    println!("sign lift S3 -> Z2: {:?}", sign.relation());
    println!("  homomorphism: {:?}", is_fuzzy_homomorphism(&sign));
    println!("  structure: {:?}", check_structure(&sign));
    println!("  kernel: {:?}", kernel(&sign).unwrap());
    println!("  kernel report: {:?}", check_kernel(&sign));

    // move one unit entry so that fuzzy images stop multiplying
    let mut rows = sign.relation().rows();
    rows[1].swap(0, 1);
    let broken = FuzzyMap::new(FuzzyRelation::new(s3.clone(), z2, rows).unwrap()).unwrap();
    let report = is_fuzzy_homomorphism(&broken);
    println!("corrupted sign lift: verdict {}, witness {}", report.verdict, report.witness.unwrap());

    let mu = fuzzaut::MuStrategy::Class.generate(&s3);
    let identity: Vec<usize> = s3.elements().collect();
    let ie = lift_hom(s3.clone(), &identity, &mu).unwrap();
    println!("lift of the identity with the class mu: {:?}", ie.relation());
}
