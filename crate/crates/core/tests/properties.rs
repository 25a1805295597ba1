use geocomplexity::analysis::{compute_profile, correlation_matrix, pca, Measure, ProfileTable};
use geocomplexity::dataset::Class;
use geocomplexity::linprog::{
    build_smith_system, interpolated_test_set, l1_error_distance, l2_linear_error, l3_linear_nonlinearity, solve_lp,
};
use geocomplexity::neighbors::{
    minimum_spanning_tree, n1_boundary_fraction, n2_intra_inter_ratio, n3_loo_nn_error, n4_nn_nonlinearity,
};
use geocomplexity::synth::{gen_random_labeling, GeneratorSpec};
use geocomplexity::topology::{adherence_balls, t1_adherence_fraction, t2_points_per_dimension};
use geocomplexity::Dataset;
use proptest::prelude::*;

fn dataset() -> impl Strategy<Value = Dataset> {
    (1usize..4, 4usize..24).prop_flat_map(|(d, n)| {
        (
            proptest::collection::vec(-10.0f64..10.0, n * d),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(values, mut first)| {
                first[0] = true;
                first[1] = false;
                let labels: Vec<&str> = first.iter().map(|&f| if f { "p" } else { "q" }).collect();
                Dataset::from_flat("prop", d, values, labels).unwrap()
            })
    })
}

fn swapped(ds: &Dataset) -> Dataset {
    let labels: Vec<&str> = ds.labels().iter().map(|l| if l == "p" { "q" } else { "p" }).collect();
    Dataset::from_flat("swapped", ds.dim(), ds.values().to_vec(), labels).unwrap()
}

fn reversed(ds: &Dataset) -> Dataset {
    let order: Vec<usize> = (0..ds.len()).rev().collect();
    ds.select(&order).unwrap()
}

fn brute_force_n3(ds: &Dataset) -> f64 {
    let mut wrong = 0;
    for i in 0..ds.len() {
        let mut best = (f64::INFINITY, usize::MAX);
        for j in (0..ds.len()).filter(|&j| j != i) {
            let d: f64 = ds.point(i).iter().zip(ds.point(j)).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
            if d < best.0 {
                best = (d, j);
            }
        }
        if ds.class_of(best.1) != ds.class_of(i) {
            wrong += 1;
        }
    }
    wrong as f64 / ds.len() as f64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn measures_stay_in_range(ds in dataset(), seed in any::<u64>()) {
        let p = compute_profile(&ds, seed).unwrap();
        for m in [Measure::F2, Measure::F3, Measure::L2, Measure::L3, Measure::N1, Measure::N3, Measure::N4] {
            prop_assert!((0.0..=1.0).contains(&p.get(m)), "{} = {}", m, p.get(m));
        }
        prop_assert!(p.get(Measure::L1) >= 0.0);
        prop_assert!(p.get(Measure::F1) >= 0.0 && p.get(Measure::N2) >= 0.0);
        prop_assert!(p.get(Measure::T1) > 0.0 && p.get(Measure::T1) <= 1.0);
        prop_assert_eq!(p.get(Measure::T2) * ds.dim() as f64, ds.len() as f64);
    }

    #[test]
    fn profile_is_label_swap_invariant(ds in dataset(), seed in any::<u64>()) {
        let a = compute_profile(&ds, seed).unwrap();
        let b = compute_profile(&swapped(&ds), seed).unwrap();
        for m in [Measure::F1, Measure::F2, Measure::F3, Measure::N1, Measure::N2, Measure::N3, Measure::T1, Measure::T2] {
            prop_assert_eq!(a.get(m), b.get(m));
        }
        prop_assert!((a.get(Measure::L1) - b.get(Measure::L1)).abs() <= 1e-9);
    }

    #[test]
    fn point_order_does_not_matter(ds in dataset()) {
        let r = reversed(&ds);
        prop_assert_eq!(n1_boundary_fraction(&ds), n1_boundary_fraction(&r));
        prop_assert!((n2_intra_inter_ratio(&ds) - n2_intra_inter_ratio(&r)).abs() <= 1e-12);
        prop_assert_eq!(n3_loo_nn_error(&ds), n3_loo_nn_error(&r));
        prop_assert_eq!(t1_adherence_fraction(&ds), t1_adherence_fraction(&r));
        let (a, b) = (l1_error_distance(&ds).unwrap(), l1_error_distance(&r).unwrap());
        prop_assert!((a - b).abs() <= 1e-9 * a.max(1.0));
    }

    #[test]
    fn n3_matches_brute_force(ds in dataset()) {
        prop_assert_eq!(n3_loo_nn_error(&ds), brute_force_n3(&ds));
    }

    #[test]
    fn mst_is_a_spanning_tree(ds in dataset()) {
        let tree = minimum_spanning_tree(ds.points());
        prop_assert_eq!(tree.edges.len(), ds.len() - 1);
        let mut parent: Vec<usize> = (0..ds.len()).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        for e in &tree.edges {
            let (a, b) = (root(&mut parent, e.i), root(&mut parent, e.j));
            prop_assert_ne!(a, b);
            parent[a] = b;
        }
    }

    #[test]
    fn lp_solution_is_feasible(ds in dataset()) {
        let lp = build_smith_system(&ds);
        let sol = solve_lp(&lp).unwrap();
        for i in 0..lp.len() {
            let score: f64 = lp.column(i).iter().zip(&sol.w).map(|(z, w)| z * w).sum();
            prop_assert!(score + sol.t[i] >= 1.0 - 1e-9);
            prop_assert!(sol.t[i] >= 0.0);
        }
        prop_assert!((sol.t.iter().sum::<f64>() - sol.objective).abs() <= 1e-9 * sol.objective.max(1.0));
    }

    #[test]
    fn zero_l1_means_zero_l2(ds in dataset()) {
        if l1_error_distance(&ds).unwrap() <= 1e-12 {
            prop_assert_eq!(l2_linear_error(&ds).unwrap(), 0.0);
        }
    }

    #[test]
    fn interpolants_stay_in_class_range(ds in dataset(), seed in any::<u64>()) {
        let test = interpolated_test_set(&ds, ds.len(), seed);
        prop_assert_eq!(test.len(), ds.len());
        for k in 0..test.len() {
            let class = test.membership[k];
            for f in 0..ds.dim() {
                let column = (0..ds.len()).filter(|&i| ds.class_of(i) == class).map(|i| ds.point(i)[f]);
                let (lo, hi) = column.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
                let v = test.point(k)[f];
                prop_assert!(v >= lo - 1e-12 && v <= hi + 1e-12);
            }
        }
        prop_assert_eq!(l3_linear_nonlinearity(&ds, seed).unwrap(), l3_linear_nonlinearity(&ds, seed).unwrap());
        prop_assert_eq!(n4_nn_nonlinearity(&ds, seed), n4_nn_nonlinearity(&ds, seed));
    }

    #[test]
    fn retained_balls_are_not_contained(ds in dataset()) {
        let balls = adherence_balls(&ds);
        let dist = |a: usize, b: usize| -> f64 {
            ds.point(a).iter().zip(ds.point(b)).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
        };
        for (i, bi) in balls.iter().enumerate() {
            let enemy = (0..ds.len())
                .filter(|&j| ds.class_of(j) != ds.class_of(i))
                .map(|j| dist(i, j))
                .fold(f64::INFINITY, f64::min);
            prop_assert_eq!(bi.radius, enemy);
            let contained = balls.iter().enumerate().any(|(j, bj)| {
                j != i
                    && ds.class_of(j) == ds.class_of(i)
                    && bi.radius > 0.0
                    && dist(i, j) + bi.radius <= bj.radius
                    && (bj.radius > bi.radius || j < i)
            });
            if bi.radius > 0.0 {
                prop_assert_eq!(bi.retained, !contained);
            }
        }
        prop_assert_eq!(t2_points_per_dimension(&ds) * ds.dim() as f64, ds.len() as f64);
    }

    #[test]
    fn generators_are_pure_and_balanced(seed in any::<u64>(), n in 1usize..40, dim in 1usize..4) {
        for spec in [
            GeneratorSpec::RandomLabeling { dim, n_per_class: n, seed },
            GeneratorSpec::LinearMargin { dim, n_per_class: n, margin: 0.05, seed },
            GeneratorSpec::Checkerboard { cells_per_side: 3, n_per_class: n, seed },
            GeneratorSpec::Rings { n_per_class: n, r_inner: 1.0, r_outer: 2.0, gap: 0.5, seed },
        ] {
            let ds = spec.generate().unwrap();
            prop_assert_eq!(ds.class_sizes(), [n, n]);
            prop_assert_eq!(&ds, &spec.generate().unwrap());
        }
    }
}

fn random_profiles(count: u64) -> Vec<geocomplexity::analysis::ComplexityProfile> {
    (0..count)
        .map(|k| {
            let ds = gen_random_labeling(1 + (k % 3) as usize, 15 + (k % 7) as usize, k).unwrap();
            compute_profile(&ds, k).unwrap()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn pca_variance_ignores_row_order(shift in 0usize..20) {
        let rows = random_profiles(20);
        let mut rotated = rows.clone();
        rotated.rotate_left(shift);
        let a = pca(&ProfileTable::new(rows)).unwrap();
        let b = pca(&ProfileTable::new(rotated)).unwrap();
        prop_assert_eq!(a.explained.len(), b.explained.len());
        for (x, y) in a.explained.iter().zip(&b.explained) {
            prop_assert!((x - y).abs() <= 1e-9);
        }
    }

    #[test]
    fn correlation_is_symmetric_with_unit_diagonal(count in 5u64..20) {
        let c = correlation_matrix(&ProfileTable::new(random_profiles(count))).unwrap();
        for m in c.defined() {
            prop_assert!((c.get(m, m) - 1.0).abs() <= 1e-12);
        }
        for a in Measure::ALL {
            for b in Measure::ALL {
                let (x, y) = (c.get(a, b), c.get(b, a));
                prop_assert!(x == y || (x.is_nan() && y.is_nan()));
            }
        }
    }
}

#[test]
fn random_labeling_n3_concentrates_near_half() {
    let inside = (0..100u64)
        .filter(|&seed| (0.42..=0.58).contains(&n3_loo_nn_error(&gen_random_labeling(2, 200, seed).unwrap())))
        .count();
    assert!(inside >= 90, "{inside}/100 seeds inside [0.42, 0.58]");
}

#[test]
fn membership_matches_labels() {
    let ds = gen_random_labeling(2, 10, 1).unwrap();
    for i in 0..ds.len() {
        let expected = if ds.label(i) == ds.classes()[0] { Class::One } else { Class::Two };
        assert_eq!(ds.class_of(i), expected);
    }
}
