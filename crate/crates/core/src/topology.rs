//! Class-manifold density: retained adherence balls (T1) and points per
//! dimension (T2).

use rayon::prelude::*;

use crate::dataset::{distance, Dataset};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdherenceBall {
    pub center: usize,
    /// Distance from the center to its nearest opposite-class point.
    pub radius: f64,
    pub retained: bool,
}

/// Whether ball `i` lies inside same-class ball `j`. Equal balls are broken by
/// index so that exactly one of a duplicate pair survives. A zero-radius ball
/// (its center coincides with an enemy) only falls inside a ball at the same
/// location.
fn contained(ds: &Dataset, balls: &[AdherenceBall], i: usize, j: usize) -> bool {
    let (bi, bj) = (&balls[i], &balls[j]);
    let gap = distance(ds.point(i), ds.point(j));
    if bi.radius == 0.0 && gap != 0.0 {
        return false;
    }
    gap + bi.radius <= bj.radius && (bj.radius > bi.radius || j < i)
}

/// One ball per point, each marked retained unless it is contained in a
/// same-class ball. Containment is judged against the original radii.
pub fn adherence_balls(ds: &Dataset) -> Vec<AdherenceBall> {
    let radii: Vec<f64> = (0..ds.len())
        .into_par_iter()
        .map(|i| {
            (0..ds.len())
                .filter(|&j| ds.class_of(j) != ds.class_of(i))
                .map(|j| distance(ds.point(i), ds.point(j)))
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    let mut balls: Vec<AdherenceBall> = radii
        .into_iter()
        .enumerate()
        .map(|(center, radius)| AdherenceBall {
            center,
            radius,
            retained: true,
        })
        .collect();
    let removed: Vec<bool> = (0..ds.len())
        .into_par_iter()
        .map(|i| {
            (0..ds.len()).any(|j| {
                j != i && ds.class_of(j) == ds.class_of(i) && contained(ds, &balls, i, j)
            })
        })
        .collect();
    for (ball, gone) in balls.iter_mut().zip(removed) {
        ball.retained = !gone;
    }
    balls
}

/// T1: retained ball count over the number of points.
pub fn t1_adherence_fraction(ds: &Dataset) -> f64 {
    let kept = adherence_balls(ds).iter().filter(|b| b.retained).count();
    kept as f64 / ds.len() as f64
}

/// T2: points per feature dimension.
pub fn t2_points_per_dimension(ds: &Dataset) -> f64 {
    ds.len() as f64 / ds.dim() as f64
}
