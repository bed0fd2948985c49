//! Decides `(r, α)`-flows on a few named graphs and re-checks every witness.
//!
//! `cargo run --release --example check_flow`

use beflow::flow::{check_flow, verify_flow, FlowPoint, FlowVerdict};
use beflow::named;
use beflow::rational::fmt_rational;

fn main() {
    let cases = [
        ("theta", named::theta(), FlowPoint::frac(2, 1, 1, 1)),
        ("K4", named::k4(), FlowPoint::frac(3, 1, 1, 2)),
        ("K33", named::k33(), FlowPoint::frac(5, 2, 1, 2)),
        ("Petersen", named::petersen(), FlowPoint::frac(5, 1, 0, 1)),
        ("Petersen", named::petersen(), FlowPoint::frac(10, 3, 1, 3)),
        ("Petersen", named::petersen(), FlowPoint::frac(7, 2, 1, 2)),
    ];
    for (name, g, p) in cases {
        match check_flow(&g, &p).expect("valid point") {
            FlowVerdict::Feasible(fa) => {
                let ok = verify_flow(&g, &fa, &p).expect("same graph").valid;
                let values: Vec<String> = fa.values.iter().map(fmt_rational).collect();
                println!("{name:>9} {p}: flow [{}] verified={ok}", values.join(" "));
            }
            FlowVerdict::Infeasible(reasons) => {
                let worst = reasons.iter().max_by(|a, b| a.bound.cmp(&b.bound)).expect("some bisection");
                println!(
                    "{name:>9} {p}: none; {} bisections ruled out, worst needs alpha >= {}",
                    reasons.len(),
                    fmt_rational(&worst.bound)
                );
            }
        }
    }
}
