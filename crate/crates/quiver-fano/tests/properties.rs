//! Generated-input invariants. The strategies build arbitrary acyclic
//! quivers (upper-triangular multiplicity patterns) and small dimension
//! vectors; every suite states a law the implementation must satisfy for
//! all of them. Case counts across the suites total well above 10,000.

use proptest::prelude::*;

use quiver_fano::{
    anticanonical_class, canonical_stability, enumerate_toric_fano, in_chamber_interior,
    is_coprime, retraction, same_chamber, section_a, sign_vector, subdim_count, subdim_vectors,
    DimVector, LinearForm, Quiver, Stability, DEFAULT_BUDGET,
};

use quiver_fano::families::kronecker_min_dim_check;

fn quiver_from_upper(n: usize, mults: &[i64]) -> Quiver {
    let mut arrows = Vec::new();
    let mut it = mults.iter();
    for i in 0..n {
        for j in i + 1..n {
            let m = *it.next().unwrap();
            if m > 0 {
                arrows.push((i, j, m));
            }
        }
    }
    Quiver::new(n, &arrows).unwrap()
}

fn quiver_with_n(n: usize, max_mult: i64) -> impl Strategy<Value = Quiver> {
    proptest::collection::vec(0..=max_mult, n * (n - 1) / 2)
        .prop_map(move |mults| quiver_from_upper(n, &mults))
}

fn dim_with_n(n: usize, max_entry: i64) -> impl Strategy<Value = DimVector> {
    proptest::collection::vec(0..=max_entry, n)
        .prop_map(|entries| DimVector::new(entries).unwrap())
}

/// Quiver plus three dimension vectors on the same vertices.
fn quiver_and_three_dims(
) -> impl Strategy<Value = (Quiver, DimVector, DimVector, DimVector)> {
    (1..=4usize).prop_flat_map(|n| {
        (
            quiver_with_n(n, 3),
            dim_with_n(n, 4),
            dim_with_n(n, 4),
            dim_with_n(n, 4),
        )
    })
}

fn quiver_and_dim() -> impl Strategy<Value = (Quiver, DimVector)> {
    (1..=4usize).prop_flat_map(|n| (quiver_with_n(n, 3), dim_with_n(n, 3)))
}

/// Nonzero indivisible dimension vector together with an arbitrary form.
fn indivisible_dim_and_form() -> impl Strategy<Value = (DimVector, LinearForm)> {
    (1..=4usize)
        .prop_flat_map(|n| {
            (
                proptest::collection::vec(0..=4i64, n),
                proptest::collection::vec(-3..=3i64, n),
            )
        })
        .prop_filter_map("indivisible", |(d, phi)| {
            let d = DimVector::new(d).unwrap();
            d.is_indivisible().then(|| (d, LinearForm::new(phi)))
        })
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Independent arrow-by-arrow evaluation of the Euler pairing in 128-bit
/// arithmetic.
fn euler_oracle(q: &Quiver, d: &DimVector, e: &DimVector) -> i128 {
    let (d, e) = (d.entries(), e.entries());
    let mut total: i128 = d.iter().zip(e).map(|(&a, &b)| a as i128 * b as i128).sum();
    for (i, j, m) in q.arrows() {
        total -= m as i128 * d[i] as i128 * e[j] as i128;
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2500))]

    #[test]
    fn euler_form_matches_arrow_by_arrow_oracle((q, x, y, _z) in quiver_and_three_dims()) {
        prop_assert_eq!(q.euler_form(&x, &y).unwrap() as i128, euler_oracle(&q, &x, &y));
    }

    #[test]
    fn euler_form_is_bilinear((q, x, y, z) in quiver_and_three_dims()) {
        let sum = DimVector::new(
            x.entries().iter().zip(y.entries()).map(|(a, b)| a + b).collect(),
        ).unwrap();
        prop_assert_eq!(
            q.euler_form(&sum, &z).unwrap(),
            q.euler_form(&x, &z).unwrap() + q.euler_form(&y, &z).unwrap()
        );
        prop_assert_eq!(
            q.euler_form(&z, &sum).unwrap(),
            q.euler_form(&z, &x).unwrap() + q.euler_form(&z, &y).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn antisymmetrized_form_flips_sign((q, x, y, _z) in quiver_and_three_dims()) {
        prop_assert_eq!(
            q.antisym_form(&x, &y).unwrap(),
            -q.antisym_form(&y, &x).unwrap()
        );
        prop_assert_eq!(q.antisym_form(&x, &x).unwrap(), 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1500))]

    #[test]
    fn coprimality_and_sign_vector_agree((q, d) in quiver_and_dim()) {
        prop_assume!(!d.is_zero());
        let theta = canonical_stability(&q, &d).unwrap();
        prop_assert_eq!(theta.evaluate(&d).unwrap(), 0);

        let coprime = is_coprime(&theta, DEFAULT_BUDGET).unwrap();
        // Coprimality forces indivisibility: d/gcd(d) would be a zero.
        prop_assert!(!coprime.is_coprime || d.is_indivisible());
        let signs = sign_vector(&theta, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(coprime.is_coprime, !signs.has_zero());
        prop_assert_eq!(
            coprime.is_coprime,
            in_chamber_interior(&theta, DEFAULT_BUDGET).unwrap()
        );
        prop_assert_eq!(signs.total_len() as u128, subdim_count(&d));
        if let Some(w) = coprime.zero_witness {
            prop_assert_eq!(theta.evaluate(&w).unwrap(), 0);
            prop_assert!(!w.is_zero());
            prop_assert!(w.entries().iter().zip(d.entries()).all(|(a, b)| a <= b));
            prop_assert!(w.entries() != d.entries());
        }
    }

    #[test]
    fn same_chamber_axioms((q, q2, d) in (1..=4usize).prop_flat_map(|n| {
        (quiver_with_n(n, 3), quiver_with_n(n, 3), dim_with_n(n, 3))
    })) {
        prop_assume!(!d.is_zero());
        let theta = canonical_stability(&q, &d).unwrap();
        let theta2 = canonical_stability(&q2, &d).unwrap();
        let interior = in_chamber_interior(&theta, DEFAULT_BUDGET).unwrap();

        // Reflexive on interiors, invariant under positive scaling,
        // violated by negation once there is any sub-dimension vector.
        prop_assert_eq!(same_chamber(&theta, &theta, DEFAULT_BUDGET).unwrap(), interior);
        let scaled = Stability::new(
            LinearForm::new(theta.theta().entries().iter().map(|&x| 3 * x).collect()),
            d.clone(),
        ).unwrap();
        prop_assert_eq!(same_chamber(&theta, &scaled, DEFAULT_BUDGET).unwrap(), interior);
        let negated = Stability::new(
            LinearForm::new(theta.theta().entries().iter().map(|&x| -x).collect()),
            d.clone(),
        ).unwrap();
        if interior && subdim_count(&d) > 0 {
            prop_assert!(!same_chamber(&theta, &negated, DEFAULT_BUDGET).unwrap());
        }

        // Symmetric and transitive across every sampled pair and triple.
        let forms = [&theta, &theta2, &scaled, &negated];
        let mut rel = [[false; 4]; 4];
        for (i, x) in forms.iter().enumerate() {
            for (j, y) in forms.iter().enumerate() {
                rel[i][j] = same_chamber(x, y, DEFAULT_BUDGET).unwrap();
            }
        }
        for i in 0..4 {
            for j in 0..4 {
                prop_assert_eq!(rel[i][j], rel[j][i]);
                for k in 0..4 {
                    if rel[i][j] && rel[j][k] {
                        prop_assert!(rel[i][k], "transitivity at ({}, {}, {})", i, j, k);
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn sections_and_retractions_behave((d, phi) in indivisible_dim_and_form()) {
        let a = section_a(&d).unwrap();
        prop_assert_eq!(dot(a.entries(), d.entries()), 1);

        // Retraction lands on forms vanishing on d and is idempotent.
        let r = retraction(&d, &a, &phi).unwrap();
        prop_assert_eq!(r.evaluate(&d).unwrap(), 0);
        let r2 = retraction(&d, &a, r.theta()).unwrap();
        prop_assert_eq!(r2.theta(), r.theta());

        // Forms already vanishing on d are fixed.
        if phi.evaluate(&d).unwrap() == 0 {
            prop_assert_eq!(r.theta(), &phi);
        }
    }

    #[test]
    fn anticanonical_class_is_section_independent(
        ((q, d), r) in (1..=4usize)
            .prop_flat_map(|n| {
                ((quiver_with_n(n, 3), dim_with_n(n, 3)), proptest::collection::vec(-2..=2i64, n))
            })
            .prop_filter("indivisible", |((_, d), _)| d.is_indivisible())
    ) {
        let a = section_a(&d).unwrap();
        // Any a + (r - r(d) a) is another valid section.
        let shift = dot(&r, d.entries());
        let other = LinearForm::new(
            a.entries().iter().zip(&r).map(|(&ai, &ri)| ai + ri - shift * ai).collect(),
        );
        prop_assert_eq!(dot(other.entries(), d.entries()), 1);

        let canonical = canonical_stability(&q, &d).unwrap();
        let first = anticanonical_class(&q, &d, &a).unwrap();
        let second = anticanonical_class(&q, &d, &other).unwrap();
        prop_assert_eq!(first.theta(), canonical.theta());
        prop_assert_eq!(second.theta(), canonical.theta());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn subdim_vectors_are_proper_ascending_and_complete(
        d in (1..=4usize).prop_flat_map(|n| dim_with_n(n, 3))
    ) {
        let all: Vec<DimVector> = subdim_vectors(&d, DEFAULT_BUDGET).unwrap().collect();
        prop_assert_eq!(all.len() as u128, subdim_count(&d));
        for e in &all {
            prop_assert!(!e.is_zero());
            prop_assert!(e.entries() != d.entries());
            prop_assert!(e.entries().iter().zip(d.entries()).all(|(a, b)| 0 <= *a && a <= b));
        }
        for pair in all.windows(2) {
            prop_assert!(pair[0].entries() < pair[1].entries(), "ascending lexicographic");
        }
    }

    #[test]
    fn topological_order_respects_arrows((q, _x, _y, _z) in quiver_and_three_dims()) {
        let order = q.topological_order();
        let n = q.vertex_count();
        prop_assert_eq!(order.len(), n);
        let mut position = vec![usize::MAX; n];
        for (pos, &v) in order.iter().enumerate() {
            prop_assert!(v < n && position[v] == usize::MAX, "a permutation");
            position[v] = pos;
        }
        for (i, j, _) in q.arrows() {
            prop_assert!(position[i] < position[j]);
        }
    }
}

/// Parallel scans must not depend on the worker count: identical inputs give
/// byte-identical serialized output under pools of 1, 4, and 8 threads.
#[test]
fn parallel_scans_are_deterministic() {
    let outputs: Vec<(String, String)> = [1usize, 4, 8]
        .iter()
        .map(|&threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| {
                    let catalog =
                        serde_json::to_string(&enumerate_toric_fano(3, 7, DEFAULT_BUDGET).unwrap())
                            .unwrap();
                    let report =
                        serde_json::to_string(&kronecker_min_dim_check(4, 24)).unwrap();
                    (catalog, report)
                })
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
}
