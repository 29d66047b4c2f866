//! Scan the reduced Kronecker range for the dimension lower bound.
//!
//! For m >= 3 arrows and coprime (d, e) with d <= e <= m*d/2, the moduli
//! dimension m*d*e - d^2 - e^2 + 1 should never drop below m - 1, touching
//! it only at the projective space (d, e) = (1, 1). The scan parallelizes
//! over d; rerun with different thread counts to see identical reports.
//!
//! Run with: `cargo run --release --example kronecker_bounds`

use quiver_fano::families::kronecker_min_dim_check;

fn main() {
    for m in 3..=8 {
        let report = kronecker_min_dim_check(m, 64);
        println!(
            "m={m}: {} coprime pairs scanned; dim >= {} holds: {}; equality only at {:?}",
            report.pairs_checked,
            m - 1,
            report.pass,
            report.equality_cases
        );
        if !report.counterexamples.is_empty() {
            println!("  counterexamples: {:?}", report.counterexamples);
        }
    }
}
