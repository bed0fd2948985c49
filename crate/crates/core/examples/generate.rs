//! Counts connected cubic graphs by order, with and without parallel edges.
//!
//! `cargo run --release --example generate -- 12`

use std::time::Instant;

use beflow::generate::generate_cubic;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    println!("{:>3} {:>10} {:>8} {:>9}", "n", "multigraph", "simple", "seconds");
    for n in (2..=max).step_by(2) {
        let t = Instant::now();
        let multi = generate_cubic(n, true).expect("even n");
        let simple = generate_cubic(n, false).expect("even n");
        println!("{n:>3} {:>10} {:>8} {:>9.2}", multi.len(), simple.len(), t.elapsed().as_secs_f64());
    }
}
