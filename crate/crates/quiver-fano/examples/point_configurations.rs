//! Moduli of m-point configurations in projective (d-1)-space, presented as
//! quiver moduli: m one-dimensional sources feeding a d-dimensional sink.
//!
//! The family has closed-form predictions for every invariant, so this
//! example prints the prediction next to the live certificate for a grid of
//! parameters and flags any disagreement (there should never be one).
//!
//! Run with: `cargo run --example point_configurations`

use quiver_fano::families::{subspace_dim, subspace_predict, subspace_quiver};
use quiver_fano::{certify_fano, FanoStatus, DEFAULT_BUDGET};

fn main() -> quiver_fano::Result<()> {
    println!("{:>3} {:>3} {:>14} {:>5} {:>5} {:>6}   agreement", "m", "d", "status", "dim", "rank", "index");
    for m in 3..=8usize {
        for d in 1..=4i64 {
            let p = subspace_predict(m, d);
            let cert = certify_fano(&subspace_quiver(m), &subspace_dim(m, d), DEFAULT_BUDGET)?;
            let predicted_status = if !p.coprime_iff {
                FanoStatus::NotCoprime
            } else if p.certified_iff(d) {
                FanoStatus::Certified
            } else {
                FanoStatus::Inconclusive
            };
            let ok = predicted_status == cert.status
                && p.dim == cert.dimension
                && p.rank == cert.picard_rank
                && (cert.status != FanoStatus::Certified || p.index == cert.index);
            println!(
                "{:>3} {:>3} {:>14} {:>5} {:>5} {:>6}   {}",
                m,
                d,
                cert.status.to_string(),
                cert.dimension,
                cert.picard_rank,
                cert.index,
                if ok { "prediction matches" } else { "MISMATCH" }
            );
        }
    }
    Ok(())
}
