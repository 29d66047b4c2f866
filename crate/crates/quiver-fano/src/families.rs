//! Example families: point configurations on a line, generalized Kronecker
//! quivers, and their thickenings.
//!
//! Each family ships a quiver generator plus a *predictor* for the moduli
//! invariants. Predictors are deliberately pure closed-form arithmetic in
//! the family parameters and never touch the enumerative machinery, so they
//! serve as an independent oracle for [`crate::certify_fano`] (and vice
//! versa). Formulas are evaluated in 128-bit arithmetic and panic on
//! conversion overflow instead of ever wrapping.

use serde::Serialize;

use rayon::prelude::*;

use crate::quiver::{gcd, DimVector, LinearForm, Quiver};

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("family parameters overflow 64-bit arithmetic")
}

/// `m` source vertices, one arrow each into a common sink (vertex `m`).
/// With dimension vector `(1, ..., 1, d)` the moduli space parametrizes
/// stable configurations of `m` points in a `(d-1)`-dimensional projective
/// space; `d = 2` gives point configurations on a line.
pub fn subspace_quiver(m: usize) -> Quiver {
    let arrows: Vec<_> = (0..m).map(|k| (k, m, 1)).collect();
    Quiver::new(m + 1, &arrows).expect("star quivers are acyclic")
}

/// The dimension vector `(1, ..., 1, d)` for [`subspace_quiver`].
pub fn subspace_dim(m: usize, d: i64) -> DimVector {
    let mut entries = vec![1i64; m];
    entries.push(d);
    DimVector::new(entries).expect("entries are nonnegative")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubspacePrediction {
    pub theta: LinearForm,
    /// `(d - 1)(m - d - 1)` (may be negative out of range; reported as-is).
    pub dim: i64,
    /// `m` (the number of vertices minus one).
    pub rank: i64,
    /// gcd of the predicted stability (equals `gcd(m, d)`).
    pub index: i64,
    /// Whether `gcd(m, d) = 1`.
    pub coprime_iff: bool,
    /// Whether `m - 1 > d` (non-emptiness of the stable locus).
    pub nonempty_iff: bool,
}

impl SubspacePrediction {
    /// Range in which the certifier is expected to say Certified:
    /// coprime, `d >= 2`, and `m - 1 > d`.
    pub fn certified_iff(&self, d: i64) -> bool {
        self.coprime_iff && self.nonempty_iff && d >= 2
    }
}

/// Closed-form invariants for the subspace family (no enumeration).
pub fn subspace_predict(m: usize, d: i64) -> SubspacePrediction {
    let mi = m as i128;
    let di = d as i128;
    let mut theta = vec![d; m];
    theta.push(narrow(-mi));
    SubspacePrediction {
        theta: LinearForm::new(theta),
        dim: narrow((di - 1) * (mi - di - 1)),
        rank: narrow(mi),
        index: gcd(d, narrow(mi)),
        coprime_iff: gcd(narrow(mi), d) == 1,
        nonempty_iff: mi - 1 > di,
    }
}

/// Two vertices, `m` parallel arrows.
pub fn kronecker_quiver(m: i64) -> Quiver {
    Quiver::new(2, &[(0, 1, m)]).expect("two-vertex quivers are acyclic")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KroneckerPrediction {
    /// `(m e, -m d)`.
    pub theta: LinearForm,
    /// `m d e - d^2 - e^2 + 1`.
    pub dim: i64,
    /// Always 1.
    pub rank: i64,
    /// `m * gcd(d, e)`.
    pub index: i64,
}

/// Closed-form invariants for Kronecker moduli (no enumeration).
pub fn kronecker_predict(m: i64, d: i64, e: i64) -> KroneckerPrediction {
    let (mi, di, ei) = (m as i128, d as i128, e as i128);
    KroneckerPrediction {
        theta: LinearForm::new(vec![narrow(mi * ei), narrow(-mi * di)]),
        dim: narrow(mi * di * ei - di * di - ei * ei + 1),
        rank: 1,
        index: narrow(mi * gcd(d, e) as i128),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinDimReport {
    pub m: i64,
    pub bound: i64,
    pub pass: bool,
    /// Coprime pairs in the reduced range whose moduli dimension drops
    /// below `m - 1` (expected empty).
    pub counterexamples: Vec<(i64, i64)>,
    /// Pairs attaining dimension exactly `m - 1` (expected exactly `(1,1)`).
    pub equality_cases: Vec<(i64, i64)>,
    pub pairs_checked: u64,
}

/// Scans coprime pairs `1 <= d <= e <= min(floor(m d / 2), bound)` with
/// `d <= bound` (the reduced range: every Kronecker moduli space is
/// isomorphic to one with such parameters) and checks
/// `m d e - d^2 - e^2 + 1 >= m - 1`, with equality only at `(1, 1)`.
/// Requires `m >= 3`.
///
/// The scan is data-parallel over `d` but the report is assembled in `d`
/// order, so the output is identical under any thread count.
pub fn kronecker_min_dim_check(m: i64, bound: i64) -> MinDimReport {
    assert!(m >= 3, "the minimal-dimension bound needs m >= 3");
    // Per-d slice of the scan: (pairs checked, counterexamples, equalities).
    type Slice = (u64, Vec<(i64, i64)>, Vec<(i64, i64)>);
    let per_d: Vec<Slice> = (1..=bound)
        .into_par_iter()
        .map(|d| {
            let mut checked = 0u64;
            let mut counterexamples = Vec::new();
            let mut equality_cases = Vec::new();
            let e_max = narrow((m as i128 * d as i128) / 2).min(bound);
            for e in d..=e_max {
                if gcd(d, e) != 1 {
                    continue;
                }
                checked += 1;
                let (mi, di, ei) = (m as i128, d as i128, e as i128);
                let dim = mi * di * ei - di * di - ei * ei + 1;
                if dim < mi - 1 {
                    counterexamples.push((d, e));
                } else if dim == mi - 1 {
                    equality_cases.push((d, e));
                }
            }
            (checked, counterexamples, equality_cases)
        })
        .collect();
    let mut report = MinDimReport {
        m,
        bound,
        pass: false,
        counterexamples: Vec::new(),
        equality_cases: Vec::new(),
        pairs_checked: 0,
    };
    for (checked, counterexamples, equality_cases) in per_d {
        report.pairs_checked += checked;
        report.counterexamples.extend(counterexamples);
        report.equality_cases.extend(equality_cases);
    }
    report.pass =
        report.counterexamples.is_empty() && report.equality_cases == vec![(1, 1)];
    report
}

/// Like [`subspace_quiver`] but with `k` parallel arrows per source.
pub fn thickened_quiver(m: usize, k: i64) -> Quiver {
    let arrows: Vec<_> = (0..m).map(|l| (l, m, k)).collect();
    Quiver::new(m + 1, &arrows).expect("star quivers are acyclic")
}

/// The dimension vector `(1, ..., 1, d)` for [`thickened_quiver`].
pub fn thickened_dim(m: usize, d: i64) -> DimVector {
    subspace_dim(m, d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThickenedPrediction {
    /// `k (d, ..., d, -m)`.
    pub theta: LinearForm,
    /// `(k m - 1 - d)(d - 1) + (k - 1) m`.
    pub dim: i64,
    /// `m`.
    pub rank: i64,
    /// `k` (for coprime `m`, `d`).
    pub index: i64,
    /// True when the sufficient existence condition `d <= k m` for a stable
    /// representation holds.
    pub stable_exists_if: bool,
    /// True when the side conditions fail. Requires `gcd(m, d) = 1` and
    /// `d <= k m - 1`; for `k = 1` the degenerate `d = 1` and `d = m - 1`
    /// are additionally excluded (their moduli collapse to points).
    pub excluded: bool,
}

/// Closed-form invariants for the thickened family (no enumeration).
pub fn thickened_predict(m: usize, k: i64, d: i64) -> ThickenedPrediction {
    let mi = m as i128;
    let (ki, di) = (k as i128, d as i128);
    let mut theta = vec![narrow(ki * di); m];
    theta.push(narrow(-ki * mi));
    let coprime = gcd(narrow(mi), d) == 1;
    let in_range = di < ki * mi;
    let k1_ok = k > 1 || (di >= 2 && di <= mi - 2);
    ThickenedPrediction {
        theta: LinearForm::new(theta),
        dim: narrow((ki * mi - 1 - di) * (di - 1) + (ki - 1) * mi),
        rank: narrow(mi),
        index: k,
        stable_exists_if: di <= ki * mi,
        excluded: !(coprime && in_range && k1_ok),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MukaiCheck {
    /// `m (k - 1)` — Picard rank times (index minus one).
    pub lhs: i64,
    /// The moduli dimension `(k m - 1 - d)(d - 1) + (k - 1) m`.
    pub rhs: i64,
    /// `lhs <= rhs`.
    pub holds: bool,
    /// `lhs == rhs`.
    pub equality: bool,
    /// Equality is expected exactly for `d = 1` or `d = k m - 1`, where the
    /// moduli space degenerates to a product of projective spaces.
    pub equality_expected: bool,
}

/// Numeric check of the rank/index/dimension inequality
/// `rank * (index - 1) <= dim` on the thickened family.
pub fn mukai_check(m: usize, k: i64, d: i64) -> MukaiCheck {
    let mi = m as i128;
    let (ki, di) = (k as i128, d as i128);
    let lhs = mi * (ki - 1);
    let rhs = (ki * mi - 1 - di) * (di - 1) + (ki - 1) * mi;
    MukaiCheck {
        lhs: narrow(lhs),
        rhs: narrow(rhs),
        holds: lhs <= rhs,
        equality: lhs == rhs,
        equality_expected: di == 1 || di == ki * mi - 1,
    }
}

/// Aggregate [`mukai_check`] over `1 <= m <= m_max`, `1 <= k <= k_max`,
/// `1 <= d <= k m - 1` with `gcd(m, d) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MukaiScanReport {
    pub m_max: i64,
    pub k_max: i64,
    pub pass: bool,
    pub cases_checked: u64,
    /// `(m, k, d)` with `lhs > rhs` (expected empty).
    pub violations: Vec<(i64, i64, i64)>,
    /// `(m, k, d)` where actual equality disagrees with the expectation
    /// (expected empty).
    pub equality_mismatches: Vec<(i64, i64, i64)>,
}

pub fn mukai_scan(m_max: i64, k_max: i64) -> MukaiScanReport {
    let mut report = MukaiScanReport {
        m_max,
        k_max,
        pass: false,
        cases_checked: 0,
        violations: Vec::new(),
        equality_mismatches: Vec::new(),
    };
    for m in 1..=m_max {
        for k in 1..=k_max {
            for d in 1..=(k * m - 1) {
                if gcd(m, d) != 1 {
                    continue;
                }
                report.cases_checked += 1;
                let check = mukai_check(m as usize, k, d);
                if !check.holds {
                    report.violations.push((m, k, d));
                }
                if check.equality != check.equality_expected {
                    report.equality_mismatches.push((m, k, d));
                }
            }
        }
    }
    report.pass = report.violations.is_empty() && report.equality_mismatches.is_empty();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fano::{certify_fano, FanoStatus};
    use crate::stability::{canonical_stability, DEFAULT_BUDGET};

    /// Closed-form identity `<e, d - e> = (e_j - |K|)(d - e_j)` for
    /// `e = 1_K + e_j * j` on the subspace quiver, checked exhaustively
    /// against the general Euler form.
    fn subspace_euler_identity_holds(m: usize, d: i64) -> bool {
        let q = subspace_quiver(m);
        let dvec = subspace_dim(m, d);
        for mask in 0u64..(1 << m) {
            for ej in 0..=d {
                let mut e = Vec::with_capacity(m + 1);
                for bit in 0..m {
                    e.push(((mask >> bit) & 1) as i64);
                }
                e.push(ej);
                let e = DimVector::new(e).unwrap();
                let complement: Vec<i64> = dvec
                    .entries()
                    .iter()
                    .zip(e.entries())
                    .map(|(x, y)| x - y)
                    .collect();
                let complement = DimVector::new(complement).unwrap();
                let closed = (ej - mask.count_ones() as i64) * (d - ej);
                if q.euler_form(&e, &complement).unwrap() != closed {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn subspace_predict_frozen_values() {
        let p = subspace_predict(7, 2);
        assert_eq!(p.dim, 4);
        assert_eq!(p.rank, 7);
        assert_eq!(p.index, 1);
        assert!(p.coprime_iff && p.nonempty_iff);

        let p = subspace_predict(7, 3);
        assert_eq!(p.dim, 6);
        assert_eq!(p.rank, 7);

        let p = subspace_predict(5, 2);
        assert_eq!((p.dim, p.rank, p.index), (2, 5, 1));
        assert_eq!(p.theta.entries(), &[2, 2, 2, 2, 2, -5]);

        let p = subspace_predict(6, 2);
        assert!(!p.coprime_iff);

        let p = subspace_predict(3, 2);
        assert!(p.coprime_iff);
        assert!(!p.nonempty_iff); // m - 1 = d: boundary case
    }

    #[test]
    fn kronecker_predict_frozen_values() {
        let p = kronecker_predict(3, 2, 3);
        assert_eq!(p.theta.entries(), &[9, -6]);
        assert_eq!(p.dim, 6);
        assert_eq!(p.rank, 1);
        assert_eq!(p.index, 3);

        assert_eq!(kronecker_predict(3, 1, 1).dim, 2);
        assert_eq!(kronecker_predict(2, 1, 1).dim, 1);
    }

    #[test]
    fn thickened_predict_frozen_values() {
        let p = thickened_predict(3, 2, 2);
        assert_eq!(p.theta.entries(), &[4, 4, 4, -6]);
        assert_eq!((p.dim, p.rank, p.index), (6, 3, 2));
        assert!(p.stable_exists_if);
        assert!(!p.excluded);

        // k = 1 degenerate cases are excluded.
        assert!(thickened_predict(3, 1, 2).excluded); // d = m - 1
        assert!(thickened_predict(5, 1, 1).excluded); // d = 1
        assert!(!thickened_predict(5, 1, 2).excluded);
        assert!(thickened_predict(4, 2, 2).excluded); // gcd(m, d) = 2
        assert!(thickened_predict(3, 2, 6).excluded); // d > km - 1
    }

    #[test]
    fn mukai_check_frozen_values() {
        let c = mukai_check(2, 3, 5); // d = km - 1
        assert_eq!((c.lhs, c.rhs), (4, 4));
        assert!(c.holds && c.equality && c.equality_expected);

        let c = mukai_check(3, 2, 2);
        assert_eq!((c.lhs, c.rhs), (3, 6));
        assert!(c.holds && !c.equality && !c.equality_expected);
    }

    #[test]
    fn predictors_match_live_certification() {
        // Subspace family across its side-condition boundary.
        for m in 1..=6usize {
            for d in 1..=6i64 {
                let p = subspace_predict(m, d);
                let cert =
                    certify_fano(&subspace_quiver(m), &subspace_dim(m, d), DEFAULT_BUDGET)
                        .unwrap();
                assert_eq!(
                    p.theta.entries(),
                    cert.canonical_theta.theta().entries(),
                    "theta mismatch at ({m}, {d})"
                );
                assert_eq!(p.dim, cert.dimension, "dim mismatch at ({m}, {d})");
                assert_eq!(p.rank, cert.picard_rank);
                assert_eq!(
                    p.coprime_iff,
                    cert.status != FanoStatus::NotCoprime,
                    "coprimality mismatch at ({m}, {d})"
                );
                assert_eq!(
                    p.certified_iff(d),
                    cert.status == FanoStatus::Certified,
                    "certification mismatch at ({m}, {d})"
                );
                if cert.status == FanoStatus::Certified {
                    assert_eq!(p.index, cert.index);
                }
            }
        }
    }

    #[test]
    fn thickened_certified_iff_not_excluded() {
        for m in 1..=4usize {
            for k in 1..=4i64 {
                for d in 1..=(k * m as i64) {
                    let p = thickened_predict(m, k, d);
                    let cert = certify_fano(
                        &thickened_quiver(m, k),
                        &thickened_dim(m, d),
                        DEFAULT_BUDGET,
                    )
                    .unwrap();
                    assert_eq!(
                        !p.excluded,
                        cert.status == FanoStatus::Certified,
                        "status mismatch at ({m}, {k}, {d}): {:?}",
                        cert.status
                    );
                    assert_eq!(p.theta.entries(), cert.canonical_theta.theta().entries());
                    if !p.excluded {
                        assert_eq!(p.dim, cert.dimension);
                        assert_eq!(p.rank, cert.picard_rank);
                        assert_eq!(p.index, cert.index);
                    }
                }
            }
        }
    }

    #[test]
    fn subspace_theta_is_canonical() {
        for m in 1..=7usize {
            for d in 1..=4i64 {
                let q = subspace_quiver(m);
                let dvec = subspace_dim(m, d);
                let theta = canonical_stability(&q, &dvec).unwrap();
                assert_eq!(
                    theta.theta(),
                    &subspace_predict(m, d).theta,
                    "at ({m}, {d})"
                );
            }
        }
    }

    #[test]
    fn euler_identity_on_subspace_family() {
        for m in 1..=7usize {
            for d in 1..=4i64 {
                assert!(
                    subspace_euler_identity_holds(m, d),
                    "identity failed for m={m}, d={d}"
                );
            }
        }
    }

    #[test]
    fn min_dim_check_passes_for_small_m() {
        for m in 3..=6 {
            let report = kronecker_min_dim_check(m, 12);
            assert!(report.pass, "failed for m={m}: {report:?}");
            assert_eq!(report.equality_cases, vec![(1, 1)]);
            assert!(report.pairs_checked > 0);
        }
    }

    #[test]
    fn min_dim_check_skips_out_of_range_pairs() {
        // (d, e) = (1, 3) at m = 3 has dim 0 < m - 1 = 2 but e > floor(m/2),
        // so the reduced range must not contain it.
        let report = kronecker_min_dim_check(3, 12);
        assert!(!report.counterexamples.contains(&(1, 3)));
        assert!(report.pass);
    }

    #[test]
    fn mukai_scan_passes() {
        let report = mukai_scan(5, 5);
        assert!(report.pass, "{report:?}");
        assert!(report.cases_checked > 0);
    }
}
