//! Chamber geometry around a certified moduli space.
//!
//! A weighting that vanishes on `d` picks out a sign on every proper
//! nonzero sub-dimension vector; the chamber interior is where no sign is
//! zero, and two weightings define the same polarized moduli space when
//! their sign vectors agree everywhere. When the base weighting is coprime
//! and certified, any candidate whose retraction lands in the same chamber
//! interior yields an ample line bundle. The test is one-sided: `Unknown`
//! never asserts non-ampleness.
//!
//! Run with: `cargo run --example ample_cone`

use quiver_fano::{
    ample_check, canonical_stability, in_chamber_interior, same_chamber, section_a, sign_vector,
    DimVector, LinearForm, Quiver, Stability, DEFAULT_BUDGET,
};

fn main() -> quiver_fano::Result<()> {
    let q = Quiver::new(2, &[(0, 1, 3)])?;
    let d = DimVector::new(vec![2, 3])?;
    let base = canonical_stability(&q, &d)?;
    let a = section_a(&d)?;

    let signs = sign_vector(&base, DEFAULT_BUDGET)?;
    println!("base theta = {} on d = {d}", base.theta());
    println!("  sign runs over sub-dimension vectors: {:?}", signs.runs());
    println!(
        "  in chamber interior: {}",
        in_chamber_interior(&base, DEFAULT_BUDGET)?
    );

    // A proportional weighting sits in the same chamber; the reversed one
    // does not; a non-vanishing candidate is retracted first.
    let proportional = Stability::new(LinearForm::new(vec![3, -2]), d.clone())?;
    println!(
        "  (3,-2) same chamber: {}",
        same_chamber(&base, &proportional, DEFAULT_BUDGET)?
    );
    let reversed = Stability::new(LinearForm::new(vec![-3, 2]), d.clone())?;
    println!(
        "  (-3,2) same chamber: {}",
        same_chamber(&base, &reversed, DEFAULT_BUDGET)?
    );

    for candidate in [vec![3, -2], vec![1, 0], vec![0, 1], vec![-3, 2]] {
        let form = LinearForm::new(candidate);
        let verdict = ample_check(&q, &base, &form, &a, DEFAULT_BUDGET)?;
        println!("  candidate {form}: {verdict:?}");
    }
    Ok(())
}
