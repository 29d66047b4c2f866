//! Enumerate toric Fano quiver moduli (all-ones dimension vector) and show
//! the bundled fixtures.
//!
//! Run with: `cargo run --example toric_catalog`

use quiver_fano::{
    enumerate_toric_fano, fixture, toric_fano_conditions, toric_invariants, DEFAULT_BUDGET,
    FIXTURE_NAMES,
};

fn main() -> quiver_fano::Result<()> {
    println!("named fixtures:");
    for name in FIXTURE_NAMES {
        let spec = fixture(name).expect("bundled");
        let inv = toric_invariants(&spec)?;
        let report = toric_fano_conditions(&spec);
        println!(
            "  {name:7} {spec}  dim={} rank={} index={}  conditions pass: {}",
            inv.dim, inv.rank, inv.index, report.pass
        );
    }

    for (n, max_arrows) in [(2, 6), (3, 5), (4, 6)] {
        let catalog = enumerate_toric_fano(n, max_arrows, DEFAULT_BUDGET)?;
        println!(
            "\nall specs on {n} vertices with at most {max_arrows} arrows ({} up to relabeling):",
            catalog.len()
        );
        for entry in catalog {
            println!(
                "  {}  dim={} rank={} index={}",
                entry.spec, entry.dim, entry.rank, entry.index
            );
        }
    }
    Ok(())
}
