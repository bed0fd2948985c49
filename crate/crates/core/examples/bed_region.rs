//! Computes flow domains, prints their corners and traces, and draws one as SVG.
//!
//! `cargo run --release --example bed_region -- /tmp/petersen.svg`

use beflow::cli::svg::render;
use beflow::named;
use beflow::rational::fmt_rational;
use beflow::region::{bed_of_graph, urd, NamedRegion};
use beflow::flow::FlowPoint;

fn main() {
    for (name, g) in [
        ("theta", named::theta()),
        ("K4", named::k4()),
        ("K33", named::k33()),
        ("prism", named::prism(3)),
        ("Petersen", named::petersen()),
    ] {
        let bed = bed_of_graph(&g).expect("small graph");
        let corners: Vec<String> = bed
            .corners()
            .iter()
            .map(|(r, a)| format!("({}, {})", fmt_rational(r), fmt_rational(a)))
            .collect();
        let tr = bed.min_trace().map(|t| fmt_rational(&t)).unwrap_or_else(|e| e.to_string());
        let in_urd = urd(&FlowPoint::frac(7, 2, 1, 2)).expect("valid").is_subset_of(&bed);
        println!("{name:>9}: {}  min trace {tr}  contains urd(7/2,1/2): {in_urd}", corners.join(" "));
    }
    if let Some(path) = std::env::args().nth(1) {
        let bed = bed_of_graph(&named::petersen()).expect("small graph");
        let svg = render(&bed, &[NamedRegion::M(4), NamedRegion::M(5), NamedRegion::Urd(FlowPoint::frac(7, 2, 1, 2))]);
        std::fs::write(&path, svg).expect("writable path");
        println!("wrote {path}");
    }
}
