//! Overlap of per-feature value ranges between the two classes (F1, F2, F3).

use crate::dataset::{feature_stats, Class, Dataset, FeatureStats};

/// Extremes of one feature's class ranges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapBounds {
    pub min_max: f64,
    pub max_min: f64,
    pub max_max: f64,
    pub min_min: f64,
}

impl OverlapBounds {
    pub fn from_stats(stats: &FeatureStats) -> Vec<OverlapBounds> {
        stats
            .per_feature
            .iter()
            .map(|[a, b]| OverlapBounds {
                min_max: a.max.min(b.max),
                max_min: a.min.max(b.min),
                max_max: a.max.max(b.max),
                min_min: a.min.min(b.min),
            })
            .collect()
    }

    /// Fraction of the joint range covered by both classes; 1 for a feature
    /// that is constant over the whole dataset.
    pub fn overlap_ratio(&self) -> f64 {
        let span = self.max_max - self.min_min;
        if span == 0.0 {
            return 1.0;
        }
        (self.min_max - self.max_min).max(0.0) / span
    }

    /// True when `v` falls strictly outside the closed overlap interval.
    pub fn separates(&self, v: f64) -> bool {
        v < self.max_min || v > self.min_max
    }
}

fn fisher_ratio(stats: &FeatureStats, feature: usize) -> f64 {
    let a = stats.feature(feature, Class::One);
    let b = stats.feature(feature, Class::Two);
    let gap = (a.mean - b.mean).powi(2);
    let pooled = a.variance + b.variance;
    if pooled == 0.0 {
        return if gap == 0.0 { 0.0 } else { f64::INFINITY };
    }
    gap / pooled
}

/// F1: largest per-feature Fisher discriminant ratio. Infinite when some
/// feature is constant within each class but differs between them.
pub fn f1_max_fisher(ds: &Dataset) -> f64 {
    let stats = feature_stats(ds);
    (0..ds.dim())
        .map(|f| fisher_ratio(&stats, f))
        .fold(0.0, f64::max)
}

/// F2: product over features of the overlap ratio of the class ranges.
pub fn f2_overlap_volume(ds: &Dataset) -> f64 {
    OverlapBounds::from_stats(&feature_stats(ds))
        .iter()
        .map(OverlapBounds::overlap_ratio)
        .product()
}

/// F3: the best single feature's fraction of points lying outside the
/// overlap interval.
pub fn f3_max_feature_efficiency(ds: &Dataset) -> f64 {
    let bounds = OverlapBounds::from_stats(&feature_stats(ds));
    let n = ds.len() as f64;
    bounds
        .iter()
        .enumerate()
        .map(|(f, b)| ds.points().filter(|p| b.separates(p[f])).count() as f64 / n)
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::fixtures::{line, planar};
    use proptest::prelude::*;

    #[test]
    fn f1_examples() {
        assert_eq!(f1_max_fisher(&line(&[0.0, 2.0], &[4.0, 6.0])), 8.0);
        assert_eq!(f1_max_fisher(&line(&[0.0, 1.0], &[0.0, 1.0])), 0.0);
        // second feature has identical class distributions
        let ds = planar(&[[0.0, 0.0], [2.0, 1.0]], &[[4.0, 0.0], [6.0, 1.0]]);
        assert_eq!(f1_max_fisher(&ds), 8.0);
    }

    #[test]
    fn f1_infinite_when_classes_are_constant_and_distinct() {
        assert_eq!(f1_max_fisher(&line(&[1.0, 1.0], &[2.0])), f64::INFINITY);
        assert_eq!(f1_max_fisher(&line(&[1.0, 1.0], &[1.0])), 0.0);
    }

    #[test]
    fn f2_examples() {
        assert_eq!(f2_overlap_volume(&line(&[0.0, 1.0], &[2.0, 3.0])), 0.0);
        let third = f2_overlap_volume(&line(&[0.0, 2.0], &[1.0, 3.0]));
        assert!((third - 1.0 / 3.0).abs() < 1e-12);
        let ds = planar(&[[0.0, 0.0], [2.0, 2.0]], &[[1.0, 1.0], [3.0, 3.0]]);
        assert!((f2_overlap_volume(&ds) - 1.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn f2_constant_feature_contributes_one() {
        let ds = planar(&[[0.0, 5.0], [2.0, 5.0]], &[[1.0, 5.0], [3.0, 5.0]]);
        assert!((f2_overlap_volume(&ds) - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn f3_examples() {
        let ds = line(&[0.0, 0.5, 1.5], &[1.0, 2.0, 3.0]);
        assert!((f3_max_feature_efficiency(&ds) - 2.0 / 3.0).abs() < 1e-12);
        let disjoint = planar(&[[0.0, 0.0], [1.0, 9.0]], &[[2.0, 3.0], [3.0, 4.0]]);
        assert_eq!(f3_max_feature_efficiency(&disjoint), 1.0);
        assert_eq!(f3_max_feature_efficiency(&line(&[0.0, 1.0], &[0.0, 1.0])), 0.0);
    }

    #[test]
    fn bounds_are_ordered() {
        let ds = planar(&[[0.0, 4.0], [3.0, 1.0]], &[[1.0, 7.0], [2.0, -1.0]]);
        for b in OverlapBounds::from_stats(&feature_stats(&ds)) {
            assert!(b.min_min <= b.min_max && b.min_max <= b.max_max);
            assert!(b.min_min <= b.max_min && b.max_min <= b.max_max);
        }
    }

    fn dataset() -> impl Strategy<Value = Dataset> {
        (3usize..14, 1usize..4).prop_flat_map(|(n, d)| {
            (
                prop::collection::vec(prop::collection::vec(-10.0..10.0f64, d), n),
                prop::collection::vec(any::<bool>(), n - 2),
            )
                .prop_map(|(rows, coins)| {
                    let mut labels = vec!["p", "q"];
                    labels.extend(coins.into_iter().map(|c| if c { "p" } else { "q" }));
                    Dataset::new("prop", rows, labels).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn ranges_and_label_swap(ds in dataset()) {
            let f1 = f1_max_fisher(&ds);
            let f2 = f2_overlap_volume(&ds);
            let f3 = f3_max_feature_efficiency(&ds);
            prop_assert!(f1 >= 0.0);
            prop_assert!((0.0..=1.0).contains(&f2));
            prop_assert!((0.0..=1.0).contains(&f3));
            let swapped_labels: Vec<&str> = ds.labels().iter()
                .map(|l| if l == "p" { "q" } else { "p" }).collect();
            let rows: Vec<Vec<f64>> = ds.points().map(<[f64]>::to_vec).collect();
            let swapped = Dataset::new("s", rows, swapped_labels).unwrap();
            prop_assert_eq!(f1_max_fisher(&swapped), f1);
            prop_assert_eq!(f2_overlap_volume(&swapped), f2);
            prop_assert_eq!(f3_max_feature_efficiency(&swapped), f3);
        }

        #[test]
        fn duplicated_feature(ds in dataset()) {
            let widened = ds.map_points(|p| {
                let mut q = p.to_vec();
                q.push(p[0]);
                q
            }).unwrap();
            prop_assert_eq!(f2_overlap_volume(&widened) == 0.0, f2_overlap_volume(&ds) == 0.0);
            prop_assert!(f1_max_fisher(&widened) >= f1_max_fisher(&ds));
            prop_assert!(f3_max_feature_efficiency(&widened) >= f3_max_feature_efficiency(&ds));
        }
    }
}
