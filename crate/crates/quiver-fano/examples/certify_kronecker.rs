//! Certify moduli of representations of the m-arrow Kronecker quiver.
//!
//! For two vertices joined by `m` parallel arrows and dimension vector
//! `(d, e)`, the certifier computes the canonical stability weighting and
//! either certifies the moduli space as Fano or explains what stopped it:
//! a sub-dimension vector on which the weighting vanishes (`NotCoprime`),
//! or one where the sufficient inequality fails (`Inconclusive`).
//!
//! Run with: `cargo run --example certify_kronecker`

use quiver_fano::{certify_fano, DimVector, Quiver, DEFAULT_BUDGET};

fn main() -> quiver_fano::Result<()> {
    let cases = [
        (3, 2, 3), // the classic: dimension 6, index 3
        (4, 2, 3),
        (5, 2, 5),
        (2, 1, 1), // a projective line
        (4, 2, 2), // gcd(d, e) > 1: not coprime
        (3, 1, 3), // outside the reduced range: inconclusive
    ];
    for (m, d, e) in cases {
        let q = Quiver::new(2, &[(0, 1, m)])?;
        let dim = DimVector::new(vec![d, e])?;
        let cert = certify_fano(&q, &dim, DEFAULT_BUDGET)?;
        print!(
            "m={m} (d,e)=({d},{e})  theta={}  {}",
            cert.canonical_theta.theta(),
            cert.status
        );
        match cert.witness {
            Some(w) => println!("  witness e={w}"),
            None => println!(
                "  dim={} rank={} index={}",
                cert.dimension, cert.picard_rank, cert.index
            ),
        }
    }
    Ok(())
}
