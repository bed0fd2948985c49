//! k-weak bisection search and a conjecture sweep over a generated corpus.
//!
//! `cargo run --release --example bisection_hunt -- 10`

use beflow::bisection::{find_k_weak, hunt, Conjecture, HuntVerdict};
use beflow::generate::generate_range;
use beflow::named;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let p = named::petersen();
    for k in [3, 4, 5] {
        let found = find_k_weak(&p, k, true).expect("small graph");
        println!("Petersen orientable {k}-weak: {:?}", found.map(|b| b.colors().to_vec()));
    }
    let corpus = generate_range(2, max, true).expect("even range");
    for c in [Conjecture::Bl3, Conjecture::Simple414] {
        let report = hunt(&corpus, c).expect("small graphs");
        println!(
            "{}: {} graphs, {} hold, {} skipped, {} findings",
            c.tag(),
            corpus.len(),
            report.count(HuntVerdict::Holds),
            report.count(HuntVerdict::Skipped),
            report.count(HuntVerdict::Finding)
        );
    }
}
