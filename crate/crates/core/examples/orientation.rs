//! Orientability of bisections: a witness orientation or a set with `d(A) < Δ(A)`.
//!
//! `cargo run --release --example orientation`

use beflow::named;
use beflow::orientation::{check_orientable, enumerate_bisections, OrientabilityCertificate};

fn main() {
    for (name, g) in [("K4", named::k4()), ("Petersen", named::petersen()), ("bridged K4s", named::bridged_k4_pair())] {
        let all = enumerate_bisections(&g).expect("small graph");
        let mut orientable = 0;
        let mut example = None;
        for bis in &all {
            match check_orientable(&g, bis).expect("same size") {
                OrientabilityCertificate::Orientable(_) => orientable += 1,
                OrientabilityCertificate::Violating(a) => {
                    example.get_or_insert((bis.colors().to_vec(), a.to_vec()));
                }
            }
        }
        println!("{name}: {orientable} of {} bisection classes orientable", all.len());
        if let Some((colors, set)) = example {
            println!("  e.g. colors {colors:?} fail on set {set:?}");
        }
    }
}
