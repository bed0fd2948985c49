//! Builds certified orientable 5-weak bisections for every cubic graph up to a size.
//!
//! `cargo run --release --example weak5 -- 12`

use std::time::Instant;

use beflow::generate::generate_cubic;
use beflow::weak5::{construct_orientable_5weak_with, verify_certificate, VerifyDepth, Weak5Options, Weak5Stats};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let opts = Weak5Options { depth: VerifyDepth::Debug, allow_fallback: false, ..Default::default() };
    for n in (2..=max).step_by(2) {
        let t = Instant::now();
        let mut stats = Weak5Stats::default();
        let graphs = generate_cubic(n, true).expect("even n");
        for g in &graphs {
            let cert = construct_orientable_5weak_with(g, &opts).expect("construction succeeds");
            verify_certificate(g, &cert).expect("certificate re-verifies");
            stats.absorb(&cert.stats);
        }
        println!(
            "n={n:>2}: {:>4} graphs, {:>4} pegs, {:>3} even removals, {:>3} interval checks, {:.2}s",
            graphs.len(),
            stats.pegs,
            stats.even_removals,
            stats.interval_checks,
            t.elapsed().as_secs_f64()
        );
    }
}
