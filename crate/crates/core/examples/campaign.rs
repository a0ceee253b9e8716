//! A verification campaign over the default instance matrix, followed by
//! the two hypothesis ablations.
//!
//! ```bash
//! FUZZAUT_THREADS=4 cargo run --release --example campaign
//! ```

use std::sync::Arc;

use fuzzaut::builtin_group;
use fuzzaut::harness::{ablation, run_campaign, summarize, Campaign, Report};

fn main() {
    let campaign = Campaign::default_matrix();
    let results = run_campaign(&campaign).expect("default campaign is valid");
    let report = Report::new(&campaign, None, results);
    let s = report.summary();
    println!("default matrix: {} passed, {} failed", s.pass, s.fail);

    let mut small = Campaign::new(
        ["cyclic(2)", "symmetric(3)", "dihedral(4)"].iter().map(|t| Arc::new(builtin_group(t).unwrap())).collect(),
        campaign.mus.clone(),
    );
    small.seed = 1;
    for token in ["pointed", "normal-mu"] {
        let results = ablation(&small, token).unwrap();
        let s = summarize(&results);
        println!("ablate {token}: {} passed, {} expected failures, {} defects", s.pass, s.expected_fail, s.fail);
        for r in results.iter().filter(|r| !r.verdict).take(3) {
            println!("  {r}");
        }
    }
}
