//! Randomized structural properties of the exterior algebra, the linear
//! algebra kernel, and the matroid/OS pipeline.

use num_rational::BigRational;
use num_traits::FromPrimitive;
use osalg::exterior::ExteriorElement;
use osalg::field::{PrimeField, Rationals};
use osalg::linalg::{Matrix, Subspace};
use osalg::matroid::{FlatLattice, Matroid};
use osalg::os::{nbc_sets, os_dims};
use osalg::subsets::{elements, subsets_of_size};
use proptest::prelude::*;

fn rat(v: i64) -> BigRational {
    BigRational::from_i64(v).expect("small integer")
}

/// Random exterior element of the given degree with small integer coeffs.
fn element_strategy(n: usize, degree: usize) -> impl Strategy<Value = ExteriorElement<Rationals>> {
    let dim = subsets_of_size(n, degree).len();
    proptest::collection::vec(-3i64..=3, dim).prop_map(move |ints| {
        ExteriorElement::from_coeffs(n, degree, ints.into_iter().map(rat).collect())
            .expect("matching coefficient count")
    })
}

/// (n, degree) pairs small enough to exercise quickly.
fn shape_strategy() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=6).prop_flat_map(|n| (Just(n), 0usize..=n))
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        .. ProptestConfig::default()
    })]

    #[test]
    fn boundary_squares_to_zero((n, d) in shape_strategy().prop_filter("degree ≥ 2", |&(_, d)| d >= 2),
                                seed in 0u64..1_000_000) {
        let q = Rationals;
        let e = element_from_seed(n, d, seed);
        let dd = e.boundary(&q).unwrap().boundary(&q).unwrap();
        prop_assert!(dd.is_zero(&q));
    }

    #[test]
    fn boundary_is_leibniz((n, da) in shape_strategy(), seed in 0u64..1_000_000) {
        let q = Rationals;
        prop_assume!(n >= 2 && da >= 1 && da < n);
        let db = 1;
        let a = element_from_seed(n, da, seed);
        let b = element_from_seed(n, db, seed.wrapping_add(1));
        let lhs = a.wedge(&q, &b).unwrap().boundary(&q).unwrap();
        let mut rhs = a.boundary(&q).unwrap().wedge(&q, &b).unwrap();
        let sign = if da % 2 == 0 { rat(1) } else { rat(-1) };
        let second = a.wedge(&q, &b.boundary(&q).unwrap()).unwrap().scale(&q, &sign);
        rhs = rhs.add(&q, &second).unwrap();
        prop_assert_eq!(lhs.coeffs(), rhs.coeffs());
    }

    #[test]
    fn wedge_graded_commutativity((n, da) in shape_strategy(), db in 0usize..=3, seed in 0u64..1_000_000) {
        let q = Rationals;
        prop_assume!(da + db <= n);
        let a = element_from_seed(n, da, seed);
        let b = element_from_seed(n, db, seed.wrapping_add(7));
        let ab = a.wedge(&q, &b).unwrap();
        let sign = if (da * db) % 2 == 0 { rat(1) } else { rat(-1) };
        let ba = b.wedge(&q, &a).unwrap().scale(&q, &sign);
        prop_assert_eq!(ab.coeffs(), ba.coeffs());
    }

    #[test]
    fn wedge_associativity(n in 3usize..=6, seed in 0u64..1_000_000) {
        let q = Rationals;
        let a = element_from_seed(n, 1, seed);
        let b = element_from_seed(n, 1, seed.wrapping_add(3));
        let c = element_from_seed(n, 1, seed.wrapping_add(5));
        let left = a.wedge(&q, &b).unwrap().wedge(&q, &c).unwrap();
        let right = a.wedge(&q, &b.wedge(&q, &c).unwrap()).unwrap();
        prop_assert_eq!(left.coeffs(), right.coeffs());
    }

    #[test]
    fn point_contracts_its_own_boundary(n in 1usize..=7, mask_seed in 1u32..128) {
        let q = Rationals;
        let mask = mask_seed & ((1u32 << n) - 1);
        prop_assume!(mask != 0);
        let e_s = ExteriorElement::<Rationals>::monomial(&q, n, mask).unwrap();
        let boundary = e_s.boundary(&q).unwrap();
        for i in elements(mask) {
            let e_i = ExteriorElement::<Rationals>::monomial(&q, n, 1 << i).unwrap();
            let back = e_i.wedge(&q, &boundary).unwrap();
            prop_assert_eq!(back.coeffs(), e_s.coeffs());
        }
    }

    #[test]
    fn echelon_basis_is_canonical(rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 5), 1..5),
                                  perm_seed in 0usize..24, scale in 1i64..=3) {
        let q = Rationals;
        let original: Vec<Vec<BigRational>> = rows.iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect();
        // A shuffled, rescaled spanning set of the same row space.
        let mut shuffled: Vec<Vec<BigRational>> = Vec::new();
        let k = original.len();
        for i in 0..k {
            let row = &original[(i + perm_seed) % k];
            shuffled.push(row.iter().map(|x| x * rat(scale)).collect());
        }
        if k >= 2 {
            let summed: Vec<BigRational> = original[0].iter().zip(&original[k - 1])
                .map(|(a, b)| a + b)
                .collect();
            shuffled.push(summed);
        }
        let s1 = Subspace::from_rows(&q, 5, original).unwrap();
        let s2 = Subspace::from_rows(&q, 5, shuffled).unwrap();
        prop_assert_eq!(s1, s2);
    }

    #[test]
    fn rank_agrees_with_transpose(entries in proptest::collection::vec(0u64..5, 12)) {
        let f = PrimeField::new(5).unwrap();
        let rows: Vec<Vec<u64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
        let m = Matrix::from_rows(4, rows).unwrap();
        prop_assert_eq!(m.rank(&f), m.transpose(&f).rank(&f));
    }

    #[test]
    fn realizable_matroid_satisfies_whitney(entries in proptest::collection::vec(-2i64..=2, 15)) {
        let q = Rationals;
        let rows: Vec<Vec<BigRational>> = entries.chunks(5)
            .map(|c| c.iter().map(|&v| rat(v)).collect())
            .collect();
        let mat = Matrix::from_rows(5, rows).unwrap();
        match Matroid::from_matrix(&mat, None) {
            Ok(m) => {
                let whitney = FlatLattice::new(&m).whitney_unsigned();
                prop_assert_eq!(os_dims(&m, &q).unwrap(), whitney.clone());
                let f3 = PrimeField::new(3).unwrap();
                prop_assert_eq!(os_dims(&m, &f3).unwrap(), whitney.clone());
                // nbc counts (length n+1, zero past the rank) are
                // order-independent and match as well.
                let order: Vec<usize> = (0..m.n()).rev().collect();
                let mut counts = nbc_sets(&m, &order).unwrap().counts();
                prop_assert!(counts[m.rank() + 1..].iter().all(|&c| c == 0));
                counts.truncate(m.rank() + 1);
                prop_assert_eq!(counts, whitney);
            }
            // Parallel elements or loops: not a simple matroid, skip.
            Err(_) => prop_assume!(false),
        }
    }
}

/// Deterministic pseudo-random element (keeps the strategies above simple).
fn element_from_seed(n: usize, degree: usize, seed: u64) -> ExteriorElement<Rationals> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let dim = subsets_of_size(n, degree).len();
    let coeffs: Vec<BigRational> = (0..dim).map(|_| rat(rng.gen_range(-3..=3))).collect();
    ExteriorElement::from_coeffs(n, degree, coeffs).expect("matching coefficient count")
}

/// The strategy-based constructor is exercised here so both paths stay alive.
#[test]
fn strategy_elements_have_requested_shape() {
    use proptest::strategy::{Strategy, ValueTree};
    use proptest::test_runner::TestRunner;
    let mut runner = TestRunner::deterministic();
    let tree = element_strategy(5, 2).new_tree(&mut runner).unwrap();
    let e = tree.current();
    assert_eq!(e.ground_set_size(), 5);
    assert_eq!(e.degree(), 2);
    assert_eq!(e.coeffs().len(), 10);
}

/// Brute-force dimension count over GF(2) agrees with the echelon rank.
#[test]
fn gf2_subspace_size_matches_rank() {
    let f = PrimeField::new(2).unwrap();
    let rows: Vec<Vec<u64>> = vec![
        vec![1, 0, 1, 1, 0],
        vec![0, 1, 1, 0, 1],
        vec![1, 1, 0, 1, 1],
    ];
    let s = Subspace::from_rows(&f, 5, rows.clone()).unwrap();
    // Enumerate all GF(2)-combinations of the generators.
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0u32..8 {
        let mut v = vec![0u64; 5];
        for (i, row) in rows.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (slot, &x) in v.iter_mut().zip(row) {
                    *slot = (*slot + x) % 2;
                }
            }
        }
        seen.insert(v);
    }
    assert_eq!(seen.len(), 1 << s.dim());
}
