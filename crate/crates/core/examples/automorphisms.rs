//! Fuzzy automorphisms: validation, composition, transposes as inverses,
//! inner automorphisms, conjugation, and the group of equivalence classes.

use std::sync::Arc;

use fuzzaut::aut::{
    class_group, compose_aut, conjugate_aut, distinct_classes, identity_aut, inverse_aut, is_class_preserving,
    is_inner, make_automorphism,
};
use fuzzaut::hom::lift_hom;
use fuzzaut::{builtin_group, MuStrategy};

fn main() {
    let d4 = Arc::new(builtin_group("dihedral(4)").unwrap());
    let mu = MuStrategy::Chain.generate(&d4);

    let autos: Vec<_> = d4
        .crisp_automorphisms()
        .unwrap()
        .iter()
        .map(|sigma| make_automorphism(lift_hom(d4.clone(), sigma, &mu).unwrap()).unwrap())
        .collect();
    println!("{} lifted fuzzy automorphisms of {}", autos.len(), d4.name());
    for f in &autos {
        println!(
            "  skeleton {:?}: inner by {:?}, class preserving {}",
            f.skeleton(),
            is_inner(f.map()),
            is_class_preserving(f.map())
        );
    }

    let (f, g) = (&autos[3], &autos[5]);
    let fg = compose_aut(f, g);
    println!("f ∘ g has skeleton {:?}", fg.skeleton());
    let inv = inverse_aut(f);
    println!("f⁻¹ ∘ f ≡ identity: {}", compose_aut(&inv, f).map().equiv(identity_aut(&d4).map()).unwrap());

    let inner = autos.iter().find(|a| is_inner(a.map()).is_some_and(|x| x != 0)).unwrap();
    let outer = autos.iter().find(|a| is_inner(a.map()).is_none()).unwrap();
    let conj = conjugate_aut(outer, inner).unwrap();
    println!("conjugating an inner automorphism by an outer one gives inner by {:?}", is_inner(conj.map()));

    let classes = distinct_classes(&autos);
    let table = class_group(&classes).unwrap();
    println!("{} classes form a group of order {}, abelian {}", classes.len(), table.order(), table.is_abelian());
}
