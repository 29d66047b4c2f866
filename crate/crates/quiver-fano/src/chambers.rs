//! Walls and chambers in the space of stability parameters.
//!
//! Fixing `d`, each proper nonzero `e <= d` cuts the wall `theta(e) = 0`.
//! The sign pattern of `theta` over all such `e` (in ascending lexicographic
//! order) locates `theta` among the walls: a nowhere-zero pattern means the
//! form lies in the interior of a chamber, and two forms lie in the same
//! chamber interior exactly when both patterns are nowhere zero and equal.

use crate::error::{Error, Result};
use crate::quiver::{dot, DimVector, LinearForm, Quiver};
use crate::stability::{
    ample_stability_criterion, ensure_budget, is_coprime, retraction, CriterionStatus, Stability,
    SubdimCursor,
};

/// Signs of `theta(e)` over all proper nonzero `e <= d` in ascending
/// lexicographic order, stored run-length encoded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignVector {
    d: DimVector,
    /// Canonical RLE: adjacent runs always carry different signs.
    runs: Vec<(i8, u64)>,
}

impl SignVector {
    pub fn dim_vector(&self) -> &DimVector {
        &self.d
    }

    /// `(sign, run_length)` pairs; signs are -1, 0, or 1.
    pub fn runs(&self) -> &[(i8, u64)] {
        &self.runs
    }

    pub fn has_zero(&self) -> bool {
        self.runs.iter().any(|&(s, _)| s == 0)
    }

    pub fn total_len(&self) -> u64 {
        self.runs.iter().map(|&(_, c)| c).sum()
    }

    fn push(&mut self, sign: i8) {
        match self.runs.last_mut() {
            Some((s, count)) if *s == sign => *count += 1,
            _ => self.runs.push((sign, 1)),
        }
    }
}

/// Computes the full sign vector of `theta` over its wall system.
pub fn sign_vector(theta: &Stability, budget: u64) -> Result<SignVector> {
    let d = theta.dim_vector();
    ensure_budget(d, budget)?;
    let mut out = SignVector {
        d: d.clone(),
        runs: Vec::new(),
    };
    let coeffs = theta.theta().entries();
    let mut cursor = SubdimCursor::new(d);
    while cursor.advance() {
        out.push(dot(coeffs, cursor.as_slice())?.signum() as i8);
    }
    Ok(out)
}

/// True when `theta` avoids every wall, i.e. its sign vector is nowhere
/// zero. Agrees exactly with coprimality (the zero-free scans coincide);
/// this route goes through the stored sign vector on purpose, so the two
/// implementations check each other.
pub fn in_chamber_interior(theta: &Stability, budget: u64) -> Result<bool> {
    Ok(!sign_vector(theta, budget)?.has_zero())
}

/// True when both forms lie in the interior of the same chamber for the
/// same `d`: both sign vectors nowhere zero and identical.
pub fn same_chamber(theta1: &Stability, theta2: &Stability, budget: u64) -> Result<bool> {
    if theta1.dim_vector() != theta2.dim_vector() {
        return Err(Error::DimVectorMismatch);
    }
    let d = theta1.dim_vector();
    ensure_budget(d, budget)?;
    let c1 = theta1.theta().entries();
    let c2 = theta2.theta().entries();
    let mut cursor = SubdimCursor::new(d);
    while cursor.advance() {
        let s1 = dot(c1, cursor.as_slice())?.signum();
        if s1 == 0 {
            return Ok(false);
        }
        let s2 = dot(c2, cursor.as_slice())?.signum();
        if s1 != s2 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ampleness {
    /// The candidate's retraction lies in the interior of the same chamber
    /// as a coprime, criterion-certified base: its line bundle is ample.
    Ample,
    /// Nothing is asserted (never a disproof).
    Unknown,
}

/// Sound one-sided ampleness test for the line bundle attached to
/// `candidate` (after retraction along `a` onto the forms vanishing on `d`).
///
/// Returns [`Ampleness::Ample`] only when the base stability is coprime and
/// ample-stability-certified and the retracted candidate shares its chamber
/// interior; every other outcome is [`Ampleness::Unknown`].
pub fn ample_check(
    q: &Quiver,
    base: &Stability,
    candidate: &LinearForm,
    a: &LinearForm,
    budget: u64,
) -> Result<Ampleness> {
    let d = base.dim_vector();
    if !is_coprime(base, budget)?.is_coprime {
        return Ok(Ampleness::Unknown);
    }
    if ample_stability_criterion(q, base, budget)?.status != CriterionStatus::Certified {
        return Ok(Ampleness::Unknown);
    }
    let retracted = retraction(d, a, candidate)?;
    if same_chamber(base, &retracted, budget)? {
        Ok(Ampleness::Ample)
    } else {
        Ok(Ampleness::Unknown)
    }
}
