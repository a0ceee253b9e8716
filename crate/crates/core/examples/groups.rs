//! Builtin groups and their structure: centers, conjugacy classes,
//! normal subgroups, quotients and automorphisms.
//!
//! ```bash
//! cargo run --example groups -- dihedral(4)
//! ```

use fuzzaut::builtin_group;

fn main() {
    let token = std::env::args().nth(1).unwrap_or_else(|| "symmetric(3)".into());
    let g = builtin_group(&token).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2);
    });

    println!("{} has order {}", g.name(), g.order());
    for row in g.rows() {
        println!("  {row:?}");
    }
    println!("abelian: {}", g.is_abelian());
    println!("inverses: {:?}", g.inverses());
    println!("element orders: {:?}", g.elements().map(|x| g.element_order(x)).collect::<Vec<_>>());
    println!("center: {:?}", g.center());
    println!("conjugacy classes: {:?}", g.conjugacy_classes());

    println!("normal subgroups:");
    for n in g.normal_subgroups() {
        let q = g.quotient(&n).expect("normal");
        println!("  {n:?} with quotient of order {}", q.group.order());
    }

    match g.crisp_automorphisms() {
        Ok(auts) => {
            println!("{} automorphisms, {} of them inner", auts.len(), {
                let mut inner: Vec<Vec<usize>> = g.elements().map(|x| g.conjugation(x)).collect();
                inner.sort();
                inner.dedup();
                inner.len()
            });
        }
        Err(e) => println!("automorphisms not enumerated: {e}"),
    }
}
