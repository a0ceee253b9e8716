//! Reading and writing groups, fuzzy subsets and fuzzy maps as JSON.

use std::sync::Arc;

use fuzzaut::files::{group_to_json, load_group, load_mu, map_to_json, mu_to_json, write_file};
use fuzzaut::induced::make_induced;
use fuzzaut::{builtin_group, MuStrategy};

fn main() {
    let dir = std::env::temp_dir().join(format!("fuzzaut-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let s3 = builtin_group("symmetric(3)").unwrap();
    let group_path = dir.join("s3.json");
    write_file(&group_path, &group_to_json(&s3)).unwrap();
    let s3 = Arc::new(load_group(&group_path).unwrap());
    println!("group file:\n{}", group_to_json(&s3));

    let mu = MuStrategy::Class.generate(&s3);
    let mu_path = dir.join("mu.json");
    write_file(&mu_path, &mu_to_json(&mu)).unwrap();
    let back = load_mu(&mu_path, &s3).unwrap();
    println!("mu file:\n{}round trip exact: {}", mu_to_json(&mu), back == mu);

    let f = make_induced(3, &Arc::new(back)).unwrap();
    println!("fuzzy map file:\n{}", map_to_json(f.map()));

    std::fs::remove_dir_all(&dir).unwrap();
}
