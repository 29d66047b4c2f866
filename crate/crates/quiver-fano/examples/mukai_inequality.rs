//! Rank-times-index bound on thickened point-configuration moduli.
//!
//! The thickened family (m sources, k parallel arrows each, sink dimension
//! d) has Picard rank m and index k, so the general inequality
//! `rank * (index - 1) <= dim` becomes `m(k-1) <= (km-1-d)(d-1) + (k-1)m`,
//! with equality exactly at the degenerate ends d = 1 and d = km - 1 where
//! the moduli space is a product of projective spaces.
//!
//! Run with: `cargo run --example mukai_inequality`

use quiver_fano::families::{mukai_check, mukai_scan};

fn main() {
    let report = mukai_scan(8, 8);
    println!(
        "scanned {} coprime (m, k, d) triples with m, k <= 8: pass = {}",
        report.cases_checked, report.pass
    );
    assert!(report.violations.is_empty());
    assert!(report.equality_mismatches.is_empty());

    println!("\nboundary behaviour at m = 4, k = 3:");
    for d in 1..=11 {
        if quiver_fano::families::thickened_predict(4, 3, d).excluded {
            continue;
        }
        let c = mukai_check(4, 3, d);
        println!(
            "  d={d:2}  {} <= {}  {}",
            c.lhs,
            c.rhs,
            if c.equality { "equality (degenerate end)" } else { "strict" }
        );
    }
}
