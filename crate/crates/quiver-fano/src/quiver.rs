//! Acyclic quivers, dimension vectors, linear forms, and the Euler form.
//!
//! Vertices are `0..n`. Arrows are stored as an `n x n` multiplicity matrix,
//! so parallel arrows are a single entry and the Euler form is a plain
//! double sum. Every operation uses checked 64-bit arithmetic and reports
//! [`Error::Overflow`] rather than wrapping.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// gcd(|a|, |b|), nonnegative; gcd(0, 0) = 0.
pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x as i64
}

/// Extended Euclid on nonnegative inputs: returns `(g, x, y)` with
/// `x*a + y*b = g = gcd(a, b)` and `g >= 0`. `ext_gcd(0, 0) = (0, 0, 0)`.
pub(crate) fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    debug_assert!(a >= 0 && b >= 0);
    if b == 0 {
        if a == 0 {
            return (0, 0, 0);
        }
        return (a, 1, 0);
    }
    let (g, x, y) = ext_gcd(b, a % b);
    // g = x*b + y*(a - (a/b)*b) = y*a + (x - (a/b)*y)*b
    (g, y, x - (a / b) * y)
}

/// Checked dot product of two equal-length slices.
pub(crate) fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    let mut acc = 0i64;
    for (&x, &y) in a.iter().zip(b) {
        acc = add(acc, mul(x, y)?)?;
    }
    Ok(acc)
}

/// A dimension vector: one nonnegative integer per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DimVector(Vec<i64>);

impl DimVector {
    /// Validates that every entry is nonnegative.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        for (index, &value) in entries.iter().enumerate() {
            if value < 0 {
                return Err(Error::NegativeEntry { index, value });
            }
        }
        Ok(DimVector(entries))
    }

    /// The all-ones vector on `n` vertices (the thin/toric dimension vector).
    pub fn ones(n: usize) -> Self {
        DimVector(vec![1; n])
    }

    /// The `i`-th unit vector on `n` vertices.
    pub fn unit(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::VertexOutOfRange { index: i, n });
        }
        let mut entries = vec![0; n];
        entries[i] = 1;
        Ok(DimVector(entries))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// gcd of all entries (0 for the zero vector).
    pub fn entry_gcd(&self) -> i64 {
        self.0.iter().fold(0, |g, &x| gcd(g, x))
    }

    /// True when the entries have gcd 1.
    pub fn is_indivisible(&self) -> bool {
        self.entry_gcd() == 1
    }
}

impl std::fmt::Display for DimVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// An integral linear form on dimension vectors (e.g. a stability parameter).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct LinearForm(Vec<i64>);

impl LinearForm {
    pub fn new(entries: Vec<i64>) -> Self {
        LinearForm(entries)
    }

    pub fn zero(n: usize) -> Self {
        LinearForm(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Checked evaluation against a dimension vector.
    pub fn evaluate(&self, e: &DimVector) -> Result<i64> {
        dot(&self.0, e.entries())
    }

    /// gcd of all coefficients (0 for the zero form).
    pub fn entry_gcd(&self) -> i64 {
        self.0.iter().fold(0, |g, &x| gcd(g, x))
    }
}

impl std::fmt::Display for LinearForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// gcd of the coefficients of a linear form; 0 when the form vanishes
/// identically (treated downstream as "index undefined").
pub fn gcd_form(theta: &LinearForm) -> i64 {
    theta.entry_gcd()
}

/// Wire format: `{"n": 3, "arrows": [[0, 2, 2], [1, 2, 2]]}`.
///
/// This is the single on-disk quiver format used by the CLI and the toric
/// catalog. Parallel arrows may be given either as one `[src, dst, mult]`
/// triple or as repeated triples; multiplicities accumulate.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct QuiverJson {
    n: usize,
    arrows: Vec<(usize, usize, i64)>,
}

impl From<Quiver> for QuiverJson {
    fn from(q: Quiver) -> Self {
        QuiverJson {
            n: q.n,
            arrows: q.arrows().collect(),
        }
    }
}

impl TryFrom<QuiverJson> for Quiver {
    type Error = Error;

    fn try_from(json: QuiverJson) -> Result<Self> {
        Quiver::new(json.n, &json.arrows)
    }
}

/// A finite acyclic quiver with arrow multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "QuiverJson", try_from = "QuiverJson")]
pub struct Quiver {
    n: usize,
    mult: Vec<Vec<i64>>,
}

impl Quiver {
    /// Builds a quiver from `(src, dst, multiplicity)` triples.
    ///
    /// Repeated `(src, dst)` pairs accumulate. Fails on out-of-range
    /// vertices, negative multiplicities, and directed cycles (acyclicity is
    /// a construction invariant, so downstream code never re-checks it).
    pub fn new(n: usize, arrows: &[(usize, usize, i64)]) -> Result<Self> {
        let mut mult = vec![vec![0i64; n]; n];
        for &(src, dst, m) in arrows {
            if src >= n {
                return Err(Error::VertexOutOfRange { index: src, n });
            }
            if dst >= n {
                return Err(Error::VertexOutOfRange { index: dst, n });
            }
            if m < 0 {
                return Err(Error::NegativeMultiplicity {
                    src,
                    dst,
                    value: m,
                });
            }
            mult[src][dst] = add(mult[src][dst], m)?;
        }
        let q = Quiver { n, mult };
        // Loops are cycles of length one, so this also rejects mult[i][i] > 0.
        q.topological_order_checked()?;
        Ok(q)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Multiplicity of arrows from `src` to `dst`.
    pub fn multiplicity(&self, src: usize, dst: usize) -> i64 {
        self.mult[src][dst]
    }

    /// All arrows with positive multiplicity, ordered by `(src, dst)`.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (0..self.n).flat_map(move |i| {
            (0..self.n).filter_map(move |j| {
                let m = self.mult[i][j];
                (m > 0).then_some((i, j, m))
            })
        })
    }

    /// Total arrow multiplicity.
    pub fn total_multiplicity(&self) -> Result<i64> {
        let mut total = 0i64;
        for (_, _, m) in self.arrows() {
            total = add(total, m)?;
        }
        Ok(total)
    }

    fn topological_order_checked(&self) -> Result<Vec<usize>> {
        // Kahn's algorithm; ties broken by smallest vertex index so the
        // order is a deterministic function of the quiver alone.
        let mut indegree = vec![0usize; self.n];
        for row in &self.mult {
            for (j, &m) in row.iter().enumerate() {
                if m > 0 {
                    indegree[j] += 1;
                }
            }
        }
        let mut ready: std::collections::BTreeSet<usize> = (0..self.n)
            .filter(|&v| indegree[v] == 0)
            .collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(&v) = ready.iter().next() {
            ready.remove(&v);
            order.push(v);
            for (j, &m) in self.mult[v].iter().enumerate() {
                if m > 0 {
                    indegree[j] -= 1;
                    if indegree[j] == 0 {
                        ready.insert(j);
                    }
                }
            }
        }
        if order.len() != self.n {
            return Err(Error::Cycle);
        }
        Ok(order)
    }

    /// A topological order of the vertices (smallest index first among ties).
    pub fn topological_order(&self) -> Vec<usize> {
        self.topological_order_checked()
            .expect("acyclicity is a construction invariant")
    }

    fn check_len(&self, v: usize) -> Result<()> {
        if v != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: v,
            });
        }
        Ok(())
    }

    /// Euler form `<d, e> = sum_i d_i e_i - sum_{arrows i->j} d_i e_j`.
    pub fn euler_form(&self, d: &DimVector, e: &DimVector) -> Result<i64> {
        self.check_len(d.len())?;
        self.check_len(e.len())?;
        let dv = d.entries();
        let ev = e.entries();
        let mut acc = 0i64;
        for (&a, &b) in dv.iter().zip(ev) {
            acc = add(acc, mul(a, b)?)?;
        }
        for (row, &di) in self.mult.iter().zip(dv) {
            if di == 0 {
                continue;
            }
            for (&m, &ej) in row.iter().zip(ev) {
                if m != 0 {
                    acc = sub(acc, mul(mul(m, di)?, ej)?)?;
                }
            }
        }
        Ok(acc)
    }

    /// Antisymmetrized Euler form `{d, e} = <d, e> - <e, d>`.
    pub fn antisym_form(&self, d: &DimVector, e: &DimVector) -> Result<i64> {
        sub(self.euler_form(d, e)?, self.euler_form(e, d)?)
    }

    /// Expected dimension of the moduli space: `1 - <d, d>`.
    pub fn moduli_dimension(&self, d: &DimVector) -> Result<i64> {
        sub(1, self.euler_form(d, d)?)
    }

    /// Parses the `{"n", "arrows"}` JSON wire format.
    pub fn from_json_str(text: &str) -> std::result::Result<Self, String> {
        let json: QuiverJson =
            serde_json::from_str(text).map_err(|e| format!("invalid quiver JSON: {e}"))?;
        Quiver::try_from(json).map_err(|e| format!("invalid quiver: {e}"))
    }
}
