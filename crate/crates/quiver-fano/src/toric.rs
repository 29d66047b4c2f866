//! Toric specializations: quivers taken with the all-ones dimension vector.
//!
//! With every vertex carrying dimension 1, the moduli space is a toric
//! variety and the Fano question reduces to a finite combinatorial test on
//! vertex subsets. This module provides that test, the resulting invariants,
//! a budget-capped enumerator of all such Fano specs up to relabeling, and a
//! handful of named fixtures realizing familiar smooth toric Fano varieties.

use itertools::Itertools;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::quiver::{add, gcd_form, sub, DimVector, LinearForm, Quiver};

/// An acyclic multiplicity pattern on vertices `0 < 1 < ... < n-1` where
/// every arrow points from a smaller to a larger vertex. Stored as the
/// flattened strict upper triangle in row-major order:
/// `(0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricQuiverSpec {
    n: usize,
    upper: Vec<i64>,
}

fn slot(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl ToricQuiverSpec {
    /// Builds a spec from `(src, dst, multiplicity)` triples. Every arrow
    /// must satisfy `src < dst` (upper-triangular orientation); duplicate
    /// pairs accumulate. At least one vertex is required, and at most 62
    /// (the subset conditions are scanned with vertex bitmasks).
    pub fn new(n: usize, arrows: &[(usize, usize, i64)]) -> Result<Self> {
        assert!(
            (1..=62).contains(&n),
            "toric specs support 1 through 62 vertices"
        );
        let mut upper = vec![0i64; n * (n - 1) / 2];
        let mut total = 0i64;
        for &(src, dst, m) in arrows {
            if src.max(dst) >= n {
                return Err(Error::VertexOutOfRange {
                    index: src.max(dst),
                    n,
                });
            }
            if src >= dst {
                return Err(Error::NotUpperTriangular { src, dst });
            }
            if m < 0 {
                return Err(Error::NegativeMultiplicity {
                    src,
                    dst,
                    value: m,
                });
            }
            let s = slot(n, src, dst);
            upper[s] = add(upper[s], m)?;
            // Keeping the grand total within i64 bounds every subset sum.
            total = add(total, m)?;
        }
        Ok(ToricQuiverSpec { n, upper })
    }

    fn from_upper(n: usize, upper: Vec<i64>) -> Self {
        debug_assert_eq!(upper.len(), n * (n - 1) / 2);
        ToricQuiverSpec { n, upper }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, src: usize, dst: usize) -> i64 {
        assert!(src < dst && dst < self.n);
        self.upper[slot(self.n, src, dst)]
    }

    /// The flattened strict upper triangle in row-major order.
    pub fn flattened_upper(&self) -> &[i64] {
        &self.upper
    }

    /// Arrows with positive multiplicity, in `(src, dst)` lexicographic
    /// order.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .zip(self.upper.iter())
            .filter(|(_, &m)| m > 0)
            .map(|((i, j), &m)| (i, j, m))
    }

    pub fn total_multiplicity(&self) -> i64 {
        // Bounded at construction, so plain summation cannot overflow.
        self.upper.iter().sum()
    }

    pub fn to_quiver(&self) -> Quiver {
        let arrows: Vec<_> = self.arrows().collect();
        Quiver::new(self.n, &arrows).expect("upper-triangular specs are acyclic")
    }

    /// The all-ones dimension vector on this spec's vertices.
    pub fn all_ones(&self) -> DimVector {
        DimVector::ones(self.n)
    }

    /// Vertex weights `out-multiplicity - in-multiplicity`; this is the
    /// canonical stability of the underlying quiver at the all-ones
    /// dimension vector.
    pub fn theta(&self) -> LinearForm {
        let mut weights = vec![0i64; self.n];
        for (i, j, m) in self.arrows() {
            // In-crate invariant: bounded by the validated total.
            weights[i] += m;
            weights[j] -= m;
        }
        LinearForm::new(weights)
    }
}

impl Serialize for ToricQuiverSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ToricQuiverSpec", 2)?;
        s.serialize_field("n", &self.n)?;
        let arrows: Vec<(usize, usize, i64)> = self.arrows().collect();
        s.serialize_field("arrows", &arrows)?;
        s.end()
    }
}

impl std::fmt::Display for ToricQuiverSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let noun = if self.n == 1 { "vertex" } else { "vertices" };
        write!(f, "{} {noun};", self.n)?;
        let mut any = false;
        for (i, j, m) in self.arrows() {
            write!(f, " {i}->{j}")?;
            if m > 1 {
                write!(f, " (x{m})")?;
            }
            any = true;
        }
        if !any {
            write!(f, " no arrows")?;
        }
        Ok(())
    }
}

/// A proper nonempty vertex subset on which the Fano conditions break down.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetFailure {
    /// Vertices of the failing subset, ascending.
    pub subset: Vec<usize>,
    /// Total multiplicity leaving the subset.
    pub forward: i64,
    /// Total multiplicity entering the subset.
    pub backward: i64,
}

/// Outcome of [`toric_fano_conditions`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToricFanoReport {
    pub pass: bool,
    /// First failing subset in ascending-bitmask order, if any. The recorded
    /// `forward`/`backward` totals show which condition broke: equal totals,
    /// or a maximum below 2.
    pub failure: Option<SubsetFailure>,
    pub subsets_checked: u64,
}

/// Decides whether the all-ones moduli space of `spec` is a smooth toric
/// Fano variety: for every proper nonempty vertex subset `K`, the arrow
/// multiplicities across the cut must differ (`forward != backward`) and the
/// larger of the two must be at least 2. Subsets are scanned in ascending
/// bitmask order and the first failure is reported.
pub fn toric_fano_conditions(spec: &ToricQuiverSpec) -> ToricFanoReport {
    let n = spec.vertex_count();
    let arrows: Vec<_> = spec.arrows().collect();
    let full: u64 = (1u64 << n) - 1;
    let mut checked = 0u64;
    for mask in 1..full {
        checked += 1;
        let mut forward = 0i64;
        let mut backward = 0i64;
        for &(i, j, m) in &arrows {
            match ((mask >> i) & 1, (mask >> j) & 1) {
                (1, 0) => forward += m,
                (0, 1) => backward += m,
                _ => {}
            }
        }
        if forward == backward || forward.max(backward) < 2 {
            let subset = (0..n).filter(|v| (mask >> v) & 1 == 1).collect();
            return ToricFanoReport {
                pass: false,
                failure: Some(SubsetFailure {
                    subset,
                    forward,
                    backward,
                }),
                subsets_checked: checked,
            };
        }
    }
    ToricFanoReport {
        pass: true,
        failure: None,
        subsets_checked: checked,
    }
}

/// Moduli invariants of a toric spec, computed in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ToricInvariants {
    /// `total multiplicity - n + 1`.
    pub dim: i64,
    /// `n - 1`.
    pub rank: i64,
    /// gcd of the vertex weights (0 when the weights vanish identically).
    pub index: i64,
}

pub fn toric_invariants(spec: &ToricQuiverSpec) -> Result<ToricInvariants> {
    let n = spec.vertex_count() as i64;
    Ok(ToricInvariants {
        dim: add(sub(spec.total_multiplicity(), n)?, 1)?,
        rank: n - 1,
        index: gcd_form(&spec.theta()),
    })
}

/// One enumerated Fano spec together with its invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub spec: ToricQuiverSpec,
    pub dim: i64,
    pub rank: i64,
    pub index: i64,
}

fn entry_for(spec: ToricQuiverSpec) -> CatalogEntry {
    let inv = toric_invariants(&spec).expect("enumerated multiplicities are desk-scale");
    CatalogEntry {
        spec,
        dim: inv.dim,
        rank: inv.rank,
        index: inv.index,
    }
}

/// Number of multiplicity assignments on `slots` slots with sum at most
/// `max_sum`: the binomial `C(max_sum + slots, slots)`, saturating.
fn assignment_count(slots: u64, max_sum: u64) -> u128 {
    let mut res: u128 = 1;
    for i in 1..=slots as u128 {
        res = match res.checked_mul(max_sum as u128 + i) {
            Some(v) => v / i,
            None => return u128::MAX,
        };
    }
    res
}

/// Lex-smallest flattened upper triangle over all relabelings that keep
/// every positive-multiplicity arrow pointing upward. Two specs describe
/// the same quiver exactly when their canonical triangles agree.
fn canonical_upper(n: usize, upper: &[i64]) -> Vec<i64> {
    let positive: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .zip(upper.iter())
        .filter(|(_, &m)| m > 0)
        .map(|(p, _)| p)
        .collect();
    let mut best: Option<Vec<i64>> = None;
    for perm in (0..n).permutations(n) {
        if positive.iter().any(|&(i, j)| perm[i] >= perm[j]) {
            continue;
        }
        let mut relabeled = vec![0i64; upper.len()];
        for &(i, j) in &positive {
            relabeled[slot(n, perm[i], perm[j])] = upper[slot(n, i, j)];
        }
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            best = Some(relabeled);
        }
    }
    best.expect("the identity relabeling is always valid")
}

/// All assignments of nonnegative values to `len` slots with total at most
/// `max_sum`, visited in ascending lexicographic order (first slot most
/// significant).
struct BoundedSumCursor {
    values: Vec<i64>,
    sum: i64,
    max_sum: i64,
    exhausted: bool,
}

impl BoundedSumCursor {
    fn new(len: usize, max_sum: i64) -> Self {
        BoundedSumCursor {
            values: vec![0; len],
            sum: 0,
            max_sum,
            exhausted: false,
        }
    }

    fn as_slice(&self) -> &[i64] {
        &self.values
    }

    /// Steps to the lexicographic successor; returns false once all
    /// assignments have been visited.
    fn advance(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        let k = self.values.len();
        if k == 0 {
            self.exhausted = true;
            return false;
        }
        if self.sum < self.max_sum {
            self.values[k - 1] += 1;
            self.sum += 1;
            return true;
        }
        // The tail past the last positive slot is all zeros; bumping the
        // slot before it is the smallest way to move an earlier coordinate.
        match self.values.iter().rposition(|&v| v > 0) {
            Some(0) | None => {
                self.exhausted = true;
                false
            }
            Some(t) => {
                for v in &mut self.values[t..] {
                    self.sum -= *v;
                    *v = 0;
                }
                self.values[t - 1] += 1;
                self.sum += 1;
                true
            }
        }
    }
}

/// Enumerates every toric Fano spec on `n` vertices with total multiplicity
/// at most `max_arrows`, one representative per relabeling class, in
/// ascending lexicographic order of the flattened upper triangle.
///
/// The number of raw assignments `C(max_arrows + n(n-1)/2, n(n-1)/2)` is
/// checked against `budget` up front. The scan is data-parallel over the
/// first slot value; output is identical under any thread count.
pub fn enumerate_toric_fano(
    n: usize,
    max_arrows: u32,
    budget: u64,
) -> Result<Vec<CatalogEntry>> {
    assert!(
        (1..=62).contains(&n),
        "toric specs support 1 through 62 vertices"
    );
    let slots = n * (n - 1) / 2;
    let required = assignment_count(slots as u64, max_arrows as u64);
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let max_sum = max_arrows as i64;
    if slots == 0 {
        let spec = ToricQuiverSpec::from_upper(n, Vec::new());
        let mut out = Vec::new();
        if toric_fano_conditions(&spec).pass {
            out.push(entry_for(spec));
        }
        return Ok(out);
    }
    let per_first: Vec<Vec<CatalogEntry>> = (0..=max_sum)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut rest = BoundedSumCursor::new(slots - 1, max_sum - first);
            loop {
                let mut upper = Vec::with_capacity(slots);
                upper.push(first);
                upper.extend_from_slice(rest.as_slice());
                let spec = ToricQuiverSpec::from_upper(n, upper);
                if toric_fano_conditions(&spec).pass
                    && canonical_upper(n, spec.flattened_upper()) == spec.upper
                {
                    out.push(entry_for(spec));
                }
                if !rest.advance() {
                    break;
                }
            }
            out
        })
        .collect();
    Ok(per_first.into_iter().flatten().collect())
}

/// Names of the bundled fixtures, each a spec whose all-ones moduli space
/// is the indicated smooth toric Fano surface or threefold.
pub const FIXTURE_NAMES: [&str; 7] = [
    "p1xp1", "bl1p2", "bl2p2", "bl3p2", "p1xp2", "blp_p3", "bll_p3",
];

/// Looks up a bundled spec by name; see [`FIXTURE_NAMES`].
pub fn fixture(name: &str) -> Option<ToricQuiverSpec> {
    let arrows: &[(usize, usize, i64)] = match name {
        // P^1 x P^1
        "p1xp1" => &[(0, 2, 2), (1, 2, 2)],
        // P^2 blown up in one point
        "bl1p2" => &[(0, 1, 1), (0, 2, 1), (1, 2, 2)],
        // P^2 blown up in two points
        "bl2p2" => &[(0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)],
        // P^2 blown up in three points (the degree-6 del Pezzo surface)
        "bl3p2" => &[
            (0, 3, 1),
            (0, 4, 1),
            (1, 3, 1),
            (1, 4, 1),
            (2, 3, 1),
            (2, 4, 1),
        ],
        // P^1 x P^2
        "p1xp2" => &[(0, 2, 2), (1, 2, 3)],
        // P^3 blown up in a point
        "blp_p3" => &[(0, 1, 1), (0, 2, 1), (1, 2, 3)],
        // P^3 blown up along a line
        "bll_p3" => &[(0, 1, 2), (0, 2, 2), (1, 2, 1)],
        _ => return None,
    };
    let n = 1 + arrows.iter().map(|&(_, j, _)| j).max().unwrap();
    Some(ToricQuiverSpec::new(n, arrows).expect("fixtures are valid"))
}
