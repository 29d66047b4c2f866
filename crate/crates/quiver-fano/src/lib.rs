//! Exact-arithmetic tools for deciding when a quiver moduli space is a
//! smooth Fano variety.
//!
//! The input data is an acyclic quiver (vertices plus arrow multiplicities)
//! and a dimension vector. From these the crate computes the canonical
//! stability weighting, the moduli dimension, the Picard rank, and the Fano
//! index, and runs a sufficient certification: when the dimension vector is
//! coprime for the canonical weighting and a finite family of Euler-form
//! inequalities holds, the moduli space is a smooth projective Fano variety.
//! The certifier never claims a negative — outcomes are `Certified`,
//! `NotCoprime`, or `Inconclusive`, each carrying a concrete witness where
//! one exists.
//!
//! All arithmetic is exact 64-bit integer arithmetic with explicit overflow
//! checks; enumerations over sub-dimension vectors are capped by an explicit
//! budget so worst-case costs are visible at the call site.
//!
//! # Modules
//!
//! - [`quiver`]: quivers, dimension vectors, Euler and antisymmetrized forms.
//! - [`stability`]: canonical stability, coprimality, the certification
//!   inequalities, sections and retractions onto the orthogonal complement.
//! - [`chambers`]: sign vectors over sub-dimension vectors, chamber-interior
//!   and same-chamber tests, one-sided ampleness checks.
//! - [`fano`]: the end-to-end certifier and its serializable certificate.
//! - [`families`]: point-configuration, Kronecker, and thickened families
//!   with closed-form invariant predictors and numeric bound scans.
//! - [`toric`]: all-ones dimension vectors, subset Fano conditions, and a
//!   deduplicating enumerator of toric Fano specs.
//!
//! # Example
//!
//! ```
//! use quiver_fano::{certify_fano, DimVector, FanoStatus, Quiver, DEFAULT_BUDGET};
//!
//! // Three parallel arrows, dimension vector (2, 3).
//! let q = Quiver::new(2, &[(0, 1, 3)]).unwrap();
//! let d = DimVector::new(vec![2, 3]).unwrap();
//! let cert = certify_fano(&q, &d, DEFAULT_BUDGET).unwrap();
//! assert_eq!(cert.status, FanoStatus::Certified);
//! assert_eq!((cert.dimension, cert.picard_rank, cert.index), (6, 1, 3));
//! ```

pub mod chambers;
pub mod error;
pub mod families;
pub mod fano;
pub mod quiver;
pub mod stability;
pub mod toric;

pub use chambers::{ample_check, in_chamber_interior, same_chamber, sign_vector, Ampleness, SignVector};
pub use error::{Error, Result};
pub use fano::{certify_fano, FanoCertificate, FanoStatus};
pub use quiver::{DimVector, LinearForm, Quiver};
pub use stability::{
    ample_stability_criterion, anticanonical_class, canonical_stability, det_tautological_class,
    is_coprime, retraction, section_a, subdim_count, subdim_vectors, AmpleStabilityVerdict,
    Coprimality, CriterionStatus, Stability, DEFAULT_BUDGET,
};
pub use toric::{
    enumerate_toric_fano, fixture, toric_fano_conditions, toric_invariants, CatalogEntry,
    ToricFanoReport, ToricInvariants, ToricQuiverSpec, FIXTURE_NAMES,
};
