//! Inner automorphisms induced by a pointed normal fuzzy subgroup:
//! the composition law, identity and inverses, the group they form, and
//! its comparison with G/Z(G) and with G.
//!
//! ```bash
//! cargo run --example induced_inner -- quaternion8 class
//! ```

use std::sync::Arc;

use fuzzaut::induced::{build_inn_group, compose_induced, identity_induced, inverse_induced, make_induced, theta, zeta};
use fuzzaut::{builtin_group, MuStrategy};

fn main() {
    let mut args = std::env::args().skip(1);
    let group = Arc::new(builtin_group(&args.next().unwrap_or_else(|| "quaternion8".into())).unwrap());
    let strategy = match args.next().as_deref() {
        Some("chain") => MuStrategy::Chain,
        _ => MuStrategy::Class,
    };
    let mu = Arc::new(strategy.generate(&group));
    println!("{} with {} mu {:?}", group.name(), strategy.token(), mu.grades());

    let g = group.order() - 1;
    let f = make_induced(g, &mu).unwrap();
    println!("f_{g}: {:?}", f.map().relation());

    let h = make_induced(1 % group.order(), &mu).unwrap();
    let fh = compose_induced(&f, &h).unwrap();
    println!("f_{} ∘ f_{} = f_{} pointwise", f.label(), h.label(), fh.label());
    println!("inverse of f_{g} is f_{}", inverse_induced(&f).unwrap().label());
    println!("I_e is a two-sided identity: {}", identity_induced(&mu).is_ok());

    let inn = build_inn_group(&mu).unwrap();
    println!("{} classes: {:?}", inn.classes().len(), inn.classes());
    for row in inn.table().rows() {
        println!("  {row:?}");
    }
    let z = zeta(&inn);
    println!("zeta: kernel {:?}, onto {}, G/Z(G) isomorphism {}", z.kernel, z.surjective, z.quotient_iso);
    let t = theta(&inn);
    println!(
        "theta: fuzzy homomorphism {}, kernel trivial {}, one-one {}, onto {}",
        t.homomorphism.verdict, t.kernel_is_trivial, t.one_one, t.onto
    );
}
