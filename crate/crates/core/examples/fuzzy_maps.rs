//! Fuzzy maps as grade matrices: validation, sup-min composition,
//! fuzzy-image equivalence and transposes.

use std::sync::Arc;

use fuzzaut::map::{compose, make_fuzzy_map};
use fuzzaut::{builtin_group, FuzzyMap, FuzzyRelation, Grade};

fn main() {
    let z3 = Arc::new(builtin_group("cyclic(3)").unwrap());
    let half: Grade = "1/2".parse().unwrap();
    let third: Grade = "1/3".parse().unwrap();

    // x ↦ -x with off-image grades depending on the distance
    let neg = FuzzyRelation::from_fn(z3.clone(), z3.clone(), |x, y| {
        if y == (3 - x) % 3 {
            Grade::ONE
        } else if y == x {
            half
        } else {
            third
        }
    });
    let f = make_fuzzy_map(neg).unwrap();
    println!("f = {:?}skeleton {:?}", f.relation(), f.skeleton());

    let g = FuzzyMap::crisp(z3.clone(), z3.clone(), &[0, 2, 1]);
    println!("g is the crisp indicator of the same permutation; f ≡ g: {}", f.equiv(&g).unwrap());
    println!("f == g pointwise: {}", f == g);

    let ff = compose(f.relation(), f.relation()).unwrap();
    println!("f ∘ f = {ff:?}");
    println!("fuzzy images of f ∘ f: {:?}", f.after(&f).unwrap().skeleton());

    let t = f.inverse_map().unwrap();
    println!("transpose of f: {:?}", t.relation());

    let two_units = FuzzyRelation::from_fn(z3.clone(), z3, |_, _| Grade::ONE);
    println!("all-ones matrix: {}", make_fuzzy_map(two_units).unwrap_err());
}
