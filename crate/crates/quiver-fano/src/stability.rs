//! Stability parameters and the ample-stability criterion.
//!
//! A [`Stability`] is an integral linear form attached to a fixed dimension
//! vector `d` on which it vanishes. The canonical choice is
//! `theta_i = {d, unit_i}` (antisymmetrized Euler form), which always pairs
//! to zero with `d`.
//!
//! Scans over proper nonzero sub-dimension vectors `0 <= e <= d` run in
//! ascending lexicographic order and stop at the first relevant vector, so
//! reported witnesses are deterministic. Every scan takes an explicit budget
//! (an upper bound on how many vectors it may visit) and fails with
//! `BudgetExceeded` before starting if the box is too large.

use crate::error::{Error, Result};
use crate::quiver::{add, dot, ext_gcd, gcd, mul, sub, DimVector, LinearForm, Quiver};

/// Default cap on sub-dimension enumeration (and other combinatorial scans).
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A linear form together with the dimension vector it vanishes on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stability {
    theta: LinearForm,
    d: DimVector,
}

impl Stability {
    /// Checks `theta . d = 0` exactly.
    pub fn new(theta: LinearForm, d: DimVector) -> Result<Self> {
        let value = theta.evaluate(&d)?;
        if value != 0 {
            return Err(Error::NonVanishing { value });
        }
        Ok(Stability { theta, d })
    }

    pub fn theta(&self) -> &LinearForm {
        &self.theta
    }

    pub fn dim_vector(&self) -> &DimVector {
        &self.d
    }

    pub fn evaluate(&self, e: &DimVector) -> Result<i64> {
        self.theta.evaluate(e)
    }

    /// gcd of the coefficients (0 when the form vanishes identically).
    pub fn entry_gcd(&self) -> i64 {
        self.theta.entry_gcd()
    }
}

/// Canonical stability `theta_i = {d, unit_i}`.
///
/// By bilinearity it satisfies `theta . d = {d, d} = 0` for every `d`.
pub fn canonical_stability(q: &Quiver, d: &DimVector) -> Result<Stability> {
    if d.len() != q.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: q.vertex_count(),
            found: d.len(),
        });
    }
    let mut theta = Vec::with_capacity(q.vertex_count());
    for i in 0..q.vertex_count() {
        theta.push(q.antisym_form(d, &DimVector::unit(q.vertex_count(), i)?)?);
    }
    Stability::new(LinearForm::new(theta), d.clone())
}

/// Number of proper nonzero sub-dimension vectors of `d`, i.e.
/// `prod(d_i + 1) - 2` (saturating; never negative).
pub fn subdim_count(d: &DimVector) -> u128 {
    let mut prod: u128 = 1;
    for &x in d.entries() {
        prod = prod.saturating_mul(x as u128 + 1);
    }
    prod.saturating_sub(2)
}

pub(crate) fn ensure_budget(d: &DimVector, budget: u64) -> Result<()> {
    let required = subdim_count(d);
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// Allocation-free cursor over proper nonzero `e` with `0 <= e <= d`,
/// in ascending lexicographic order (leftmost entry most significant).
pub(crate) struct SubdimCursor<'a> {
    d: &'a [i64],
    current: Vec<i64>,
    done: bool,
}

impl<'a> SubdimCursor<'a> {
    pub(crate) fn new(d: &'a DimVector) -> Self {
        SubdimCursor {
            d: d.entries(),
            current: vec![0; d.len()],
            done: d.is_empty(),
        }
    }

    /// Advances to the next vector; returns false when exhausted.
    pub(crate) fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        // Odometer increment, last coordinate fastest.
        let mut pos = self.d.len();
        loop {
            if pos == 0 {
                self.done = true;
                return false;
            }
            pos -= 1;
            if self.current[pos] < self.d[pos] {
                self.current[pos] += 1;
                for later in self.current[pos + 1..].iter_mut() {
                    *later = 0;
                }
                break;
            }
        }
        // The all-d vector is the lexicographic maximum: reaching it means
        // the proper range is exhausted.
        if self.current == self.d {
            self.done = true;
            return false;
        }
        true
    }

    pub(crate) fn as_slice(&self) -> &[i64] {
        &self.current
    }

    pub(crate) fn to_dim_vector(&self) -> DimVector {
        DimVector::new(self.current.clone()).expect("entries bounded by d are nonnegative")
    }
}

/// Iterator over proper nonzero sub-dimension vectors of `d` in ascending
/// lexicographic order. Fails upfront if their number exceeds `budget`.
pub fn subdim_vectors(d: &DimVector, budget: u64) -> Result<SubdimVectors<'_>> {
    ensure_budget(d, budget)?;
    Ok(SubdimVectors {
        cursor: SubdimCursor::new(d),
    })
}

pub struct SubdimVectors<'a> {
    cursor: SubdimCursor<'a>,
}

impl Iterator for SubdimVectors<'_> {
    type Item = DimVector;

    fn next(&mut self) -> Option<DimVector> {
        if self.cursor.advance() {
            Some(self.cursor.to_dim_vector())
        } else {
            None
        }
    }
}

/// Outcome of a coprimality scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coprimality {
    pub is_coprime: bool,
    /// First (ascending lex) proper nonzero `e <= d` with `theta(e) = 0`.
    pub zero_witness: Option<DimVector>,
}

/// `theta`-coprimality of the attached `d`: no proper nonzero `e <= d` may
/// satisfy `theta(e) = 0`. The first zero in lexicographic order is returned
/// as witness.
pub fn is_coprime(theta: &Stability, budget: u64) -> Result<Coprimality> {
    ensure_budget(theta.dim_vector(), budget)?;
    let mut cursor = SubdimCursor::new(theta.dim_vector());
    while cursor.advance() {
        if dot(theta.theta().entries(), cursor.as_slice())? == 0 {
            return Ok(Coprimality {
                is_coprime: false,
                zero_witness: Some(cursor.to_dim_vector()),
            });
        }
    }
    Ok(Coprimality {
        is_coprime: true,
        zero_witness: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriterionStatus {
    /// Every proper nonzero `e <= d` with `theta(e) >= 0` has `<e, d-e> <= -2`.
    Certified,
    /// Some gated `e` has `<e, d-e> >= -1`; the criterion is sufficient
    /// only, so this asserts nothing in either direction.
    Inconclusive,
}

/// Result of the sufficient numeric test for ample stability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmpleStabilityVerdict {
    pub status: CriterionStatus,
    /// Present iff inconclusive: first failing `e` in ascending lex order.
    pub witness: Option<DimVector>,
    /// Number of sub-dimension vectors visited.
    pub scanned_count: u64,
}

/// Sufficient criterion for ample stability: for every proper nonzero
/// `e <= d` with `theta(e) >= 0` (note: weak inequality gates the scan),
/// require `<e, d - e> <= -2`. Stops at the first failure.
pub fn ample_stability_criterion(
    q: &Quiver,
    theta: &Stability,
    budget: u64,
) -> Result<AmpleStabilityVerdict> {
    let d = theta.dim_vector();
    if d.len() != q.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: q.vertex_count(),
            found: d.len(),
        });
    }
    ensure_budget(d, budget)?;
    let dv = d.entries();
    let mut cursor = SubdimCursor::new(d);
    let mut scanned_count = 0u64;
    let mut complement = vec![0i64; d.len()];
    while cursor.advance() {
        scanned_count += 1;
        let e = cursor.as_slice();
        if dot(theta.theta().entries(), e)? < 0 {
            continue;
        }
        for (c, (&de, &ee)) in complement.iter_mut().zip(dv.iter().zip(e)) {
            *c = de - ee;
        }
        if euler_slices(q, e, &complement)? >= -1 {
            return Ok(AmpleStabilityVerdict {
                status: CriterionStatus::Inconclusive,
                witness: Some(cursor.to_dim_vector()),
                scanned_count,
            });
        }
    }
    Ok(AmpleStabilityVerdict {
        status: CriterionStatus::Certified,
        witness: None,
        scanned_count,
    })
}

/// Euler form on raw slices (no allocation; used by inner scan loops).
pub(crate) fn euler_slices(q: &Quiver, d: &[i64], e: &[i64]) -> Result<i64> {
    let mut acc = 0i64;
    for (&a, &b) in d.iter().zip(e) {
        acc = add(acc, mul(a, b)?)?;
    }
    for (i, &di) in d.iter().enumerate() {
        if di == 0 {
            continue;
        }
        for (j, &ej) in e.iter().enumerate() {
            let m = q.multiplicity(i, j);
            if m != 0 {
                acc = sub(acc, mul(mul(m, di)?, ej)?)?;
            }
        }
    }
    Ok(acc)
}

/// A deterministic integer vector `a` with `a . d = 1`.
///
/// Requires `d` indivisible. Computed by folding the extended Euclidean
/// algorithm over the entries in vertex order, then greedily shrinking
/// `|a_i|` from the last vertex backwards (compensating within the prefix),
/// so the result is a function of `d` alone. Any vector pairing to 1 is
/// equally valid downstream; this is just a reproducible pick.
pub fn section_a(d: &DimVector) -> Result<LinearForm> {
    let g = d.entry_gcd();
    if g != 1 {
        return Err(Error::NotIndivisible { gcd: g });
    }
    let n = d.len();
    let dv = d.entries();

    // Fold: after step i, `a[..=i] . d[..=i] = prefix_gcd[i]`, and
    // `bezout[i]` snapshots those coefficients for later compensation.
    let mut a: Vec<i64> = Vec::with_capacity(n);
    let mut prefix_gcd: Vec<i64> = Vec::with_capacity(n);
    let mut bezout: Vec<Vec<i64>> = Vec::with_capacity(n);
    let mut g_acc = 0i64;
    for &di in dv {
        let (g_next, x, y) = ext_gcd(g_acc, di);
        for coeff in a.iter_mut() {
            *coeff = mul(*coeff, x)?;
        }
        a.push(y);
        g_acc = g_next;
        prefix_gcd.push(g_acc);
        bezout.push(a.clone());
    }
    debug_assert_eq!(g_acc, 1);

    // Backward reduction: entry i may move by multiples of
    // prefix_gcd[i-1] / gcd(prefix_gcd[i-1], d_i), compensated inside the
    // prefix via its Bezout coefficients. Pick the absolutely smallest
    // representative (positive on ties).
    for i in (1..n).rev() {
        if dv[i] == 0 {
            // a_i contributes nothing; the minimal choice is 0.
            a[i] = 0;
            continue;
        }
        let gp = prefix_gcd[i - 1];
        if gp == 0 {
            continue;
        }
        let period = gp / gcd(gp, dv[i]);
        if period <= 1 {
            let steps = a[i];
            if steps != 0 {
                a[i] = 0;
                apply_prefix_compensation(&mut a, &bezout[i - 1], steps, dv[i], gp)?;
            }
            continue;
        }
        // Representative of a_i mod period with minimal absolute value;
        // ties (|r| = period/2) resolve to the positive one.
        let mut r = a[i].rem_euclid(period);
        if r > period - r {
            r -= period;
        }
        let steps = sub(a[i], r)? / period;
        if steps != 0 {
            a[i] = r;
            apply_prefix_compensation(&mut a, &bezout[i - 1], mul(steps, period)?, dv[i], gp)?;
        }
    }

    let form = LinearForm::new(a);
    debug_assert_eq!(form.evaluate(d).unwrap(), 1);
    Ok(form)
}

/// Adds `removed * d_i / gp` copies of the prefix Bezout combination, so the
/// total pairing with `d` is unchanged after `a_i` dropped by `removed`.
fn apply_prefix_compensation(
    a: &mut [i64],
    prefix_bezout: &[i64],
    removed: i64,
    di: i64,
    gp: i64,
) -> Result<()> {
    let q = mul(removed, di)? / gp;
    for (coeff, &b) in a.iter_mut().zip(prefix_bezout) {
        *coeff = add(*coeff, mul(q, b)?)?;
    }
    Ok(())
}

/// Retraction onto the lattice of forms vanishing on `d`:
/// `r(theta) = theta - theta(d) * a`, where `a . d = 1`.
pub fn retraction(d: &DimVector, a: &LinearForm, theta: &LinearForm) -> Result<Stability> {
    let pairing = a.evaluate(d)?;
    if pairing != 1 {
        return Err(Error::InvalidSection { value: pairing });
    }
    let theta_d = theta.evaluate(d)?;
    let mut out = Vec::with_capacity(d.len());
    for (&t, &ai) in theta.entries().iter().zip(a.entries()) {
        out.push(sub(t, mul(theta_d, ai)?)?);
    }
    Stability::new(LinearForm::new(out), d.clone())
}

/// Class of the determinant of the `i`-th tautological bundle, expressed as
/// a stability parameter: `-r(unit_i) = d_i * a - unit_i`.
pub fn det_tautological_class(
    q: &Quiver,
    d: &DimVector,
    a: &LinearForm,
    i: usize,
) -> Result<Stability> {
    if i >= q.vertex_count() {
        return Err(Error::VertexOutOfRange { index: i, n: q.vertex_count() });
    }
    if d.len() != q.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: q.vertex_count(),
            found: d.len(),
        });
    }
    let pairing = a.evaluate(d)?;
    if pairing != 1 {
        return Err(Error::InvalidSection { value: pairing });
    }
    let di = d.entries()[i];
    let mut out = Vec::with_capacity(d.len());
    for (j, &aj) in a.entries().iter().enumerate() {
        let mut v = mul(di, aj)?;
        if j == i {
            v = sub(v, 1)?;
        }
        out.push(v);
    }
    Stability::new(LinearForm::new(out), d.clone())
}

/// Anticanonical class accumulated from first Chern data:
/// `sum_i ({unit_i, d}) * det_tautological_class(i)`.
///
/// For every valid section `a` this equals [`canonical_stability`]; the two
/// independent routes cross-check each other in the test suite.
pub fn anticanonical_class(q: &Quiver, d: &DimVector, a: &LinearForm) -> Result<Stability> {
    if d.len() != q.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: q.vertex_count(),
            found: d.len(),
        });
    }
    let pairing = a.evaluate(d)?;
    if pairing != 1 {
        return Err(Error::InvalidSection { value: pairing });
    }
    let n = q.vertex_count();
    let mut acc = vec![0i64; n];
    for i in 0..n {
        let coeff = q.antisym_form(&DimVector::unit(n, i)?, d)?;
        if coeff == 0 {
            continue;
        }
        let det_i = det_tautological_class(q, d, a, i)?;
        for (slot, &t) in acc.iter_mut().zip(det_i.theta().entries()) {
            *slot = add(*slot, mul(coeff, t)?)?;
        }
    }
    Stability::new(LinearForm::new(acc), d.clone())
}
