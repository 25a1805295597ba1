//! Linear separability by Smith's error-distance linear program, and the
//! measures built on its solution (L1, L2, L3).
//!
//! For every point `x` with augmented form `x̃ = (x, 1)` the instance carries a
//! column `z = +x̃` (class one) or `z = -x̃` (class two) and solves
//!
//! ```text
//! minimize   Σ t_i
//! subject to z_i · w + t_i ≥ 1,   t ≥ 0,   w free
//! ```
//!
//! The optimum is zero exactly when some hyperplane puts every point on its
//! own side.

pub mod simplex;

use rand::RngExt;

use crate::dataset::{bounding_diagonal, Class, Dataset};
use crate::error::{Result, SolverError};
use crate::rng;
pub use simplex::{solve_standard, SimplexSolution, StandardForm};

/// Identifier of the solver, recorded in profile metadata.
pub const SOLVER_ID: &str = "dense-two-phase-simplex/normalized-dantzig+bland";

#[derive(Debug, Clone, PartialEq)]
pub struct LpInstance {
    /// Augmented dimension `d + 1`.
    pub dim_aug: usize,
    /// `n` signed augmented columns, stored back to back.
    pub z: Vec<f64>,
    /// Margin targets, all ones.
    pub b: Vec<f64>,
    /// Error costs, all ones.
    pub a: Vec<f64>,
}

impl LpInstance {
    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }

    pub fn column(&self, i: usize) -> &[f64] {
        &self.z[i * self.dim_aug..(i + 1) * self.dim_aug]
    }

    /// Equality standard form over `[w⁺, w⁻, t, s]`:
    /// `z_i·w⁺ − z_i·w⁻ + t_i − s_i = b_i`.
    pub fn to_standard_form(&self) -> StandardForm {
        let (n, k) = (self.len(), self.dim_aug);
        let cols = 2 * k + 2 * n;
        let mut a = vec![0.0; n * cols];
        for i in 0..n {
            let row = &mut a[i * cols..(i + 1) * cols];
            for (f, &v) in self.column(i).iter().enumerate() {
                row[f] = v;
                row[k + f] = -v;
            }
            row[2 * k + i] = 1.0;
            row[2 * k + n + i] = -1.0;
        }
        let mut c = vec![0.0; cols];
        c[2 * k..2 * k + n].copy_from_slice(&self.a);
        StandardForm {
            rows: n,
            cols,
            a,
            b: self.b.clone(),
            c,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    /// Hyperplane `(w_1..w_d, bias)`.
    pub w: Vec<f64>,
    /// Per-point error `max(0, 1 − z_i·w)`.
    pub t: Vec<f64>,
    pub objective: f64,
    pub iterations: usize,
}

pub fn build_smith_system(ds: &Dataset) -> LpInstance {
    let dim_aug = ds.dim() + 1;
    let mut z = Vec::with_capacity(ds.len() * dim_aug);
    for (i, p) in ds.points().enumerate() {
        let sign = match ds.class_of(i) {
            Class::One => 1.0,
            Class::Two => -1.0,
        };
        z.extend(p.iter().map(|v| sign * v));
        z.push(sign);
    }
    LpInstance {
        dim_aug,
        z,
        b: vec![1.0; ds.len()],
        a: vec![1.0; ds.len()],
    }
}

pub fn solve_lp(lp: &LpInstance) -> Result<LpSolution, SolverError> {
    if lp.z.len() != lp.len() * lp.dim_aug || lp.a.len() != lp.len() {
        return Err(SolverError::Malformed("inconsistent instance shape".into()));
    }
    let k = lp.dim_aug;
    let sol = solve_standard(&lp.to_standard_form())?;
    let w: Vec<f64> = (0..k).map(|f| sol.x[f] - sol.x[k + f]).collect();
    // errors recomputed from w are feasible by construction
    let t: Vec<f64> = (0..lp.len())
        .map(|i| {
            let margin: f64 = lp.column(i).iter().zip(&w).map(|(z, w)| z * w).sum();
            (lp.b[i] - margin).max(0.0)
        })
        .collect();
    let objective = t.iter().zip(&lp.a).map(|(t, a)| t * a).sum();
    Ok(LpSolution {
        w,
        t,
        objective,
        iterations: sol.iterations,
    })
}

/// Class one when `w·x̃ > 0`, class two otherwise (ties go to class two).
pub fn classify_linear(w: &[f64], x: &[f64]) -> Class {
    debug_assert_eq!(w.len(), x.len() + 1);
    let score: f64 = w.iter().zip(x).map(|(w, x)| w * x).sum::<f64>() + w[x.len()];
    if score > 0.0 {
        Class::One
    } else {
        Class::Two
    }
}

/// Points drawn on segments between random same-class pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct InterpolatedSet {
    pub dim: usize,
    pub values: Vec<f64>,
    pub membership: Vec<Class>,
}

impl InterpolatedSet {
    pub fn len(&self) -> usize {
        self.membership.len()
    }

    pub fn is_empty(&self) -> bool {
        self.membership.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.values[i * self.dim..(i + 1) * self.dim]
    }
}

/// Draws `m` interpolated points. A class is picked with probability
/// proportional to its size, then two of its points (with replacement), then
/// a coefficient uniform in `[0, 1)`.
pub fn interpolated_test_set(ds: &Dataset, m: usize, seed: u64) -> InterpolatedSet {
    let split = crate::dataset::split_classes(ds);
    let mut rng = rng::seeded(seed);
    let dim = ds.dim();
    let mut values = Vec::with_capacity(m * dim);
    let mut membership = Vec::with_capacity(m);
    for _ in 0..m {
        let class = ds.class_of(rng.random_range(0..ds.len()));
        let members = split.of(class);
        let p = ds.point(members[rng.random_range(0..members.len())]);
        let q = ds.point(members[rng.random_range(0..members.len())]);
        let alpha: f64 = rng.random();
        values.extend(p.iter().zip(q).map(|(a, b)| a + alpha * (b - a)));
        membership.push(class);
    }
    InterpolatedSet {
        dim,
        values,
        membership,
    }
}

/// The trained Smith hyperplane of a dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearFit {
    pub solution: LpSolution,
    pub diagonal: f64,
    n: usize,
}

impl LinearFit {
    pub fn train(ds: &Dataset) -> Result<LinearFit> {
        let solution = solve_lp(&build_smith_system(ds))?;
        Ok(LinearFit {
            solution,
            diagonal: bounding_diagonal(ds),
            n: ds.len(),
        })
    }

    /// True when the diagonal was zero and the normalization fell back to 1.
    pub fn degenerate_diagonal(&self) -> bool {
        self.diagonal == 0.0
    }

    pub fn l1(&self) -> f64 {
        let divisor = if self.diagonal == 0.0 { 1.0 } else { self.diagonal };
        self.solution.objective / self.n as f64 / divisor
    }

    pub fn l2(&self, ds: &Dataset) -> f64 {
        let errors = ds
            .points()
            .enumerate()
            .filter(|(i, p)| classify_linear(&self.solution.w, p) != ds.class_of(*i))
            .count();
        errors as f64 / ds.len() as f64
    }

    pub fn error_on(&self, test: &InterpolatedSet) -> f64 {
        if test.is_empty() {
            return 0.0;
        }
        let errors = (0..test.len())
            .filter(|&i| classify_linear(&self.solution.w, test.point(i)) != test.membership[i])
            .count();
        errors as f64 / test.len() as f64
    }
}

/// L1: optimal total error distance per point, divided by the bounding-box
/// diagonal (or by 1 if all points coincide).
pub fn l1_error_distance(ds: &Dataset) -> Result<f64> {
    Ok(LinearFit::train(ds)?.l1())
}

/// L2: training error of the L1 hyperplane.
pub fn l2_linear_error(ds: &Dataset) -> Result<f64> {
    Ok(LinearFit::train(ds)?.l2(ds))
}

/// L3: error of the L1 hyperplane on `n` interpolated points.
pub fn l3_linear_nonlinearity(ds: &Dataset, seed: u64) -> Result<f64> {
    let fit = LinearFit::train(ds)?;
    Ok(fit.error_on(&interpolated_test_set(ds, ds.len(), seed)))
}

/// Whether the training set is linearly separable, judged by L1 ≤ `tol`.
pub fn is_linearly_separable(ds: &Dataset, tol: f64) -> Result<bool> {
    Ok(l1_error_distance(ds)? <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::fixtures::line;

    #[test]
    fn smith_columns_follow_sign_rule() {
        let lp = build_smith_system(&line(&[0.0], &[1.0]));
        assert_eq!(lp.dim_aug, 2);
        assert_eq!(lp.column(0), &[0.0, 1.0]);
        assert_eq!(lp.column(1), &[-1.0, -1.0]);
        assert_eq!(lp.b, vec![1.0, 1.0]);
    }

    #[test]
    fn label_swap_negates_columns_and_keeps_objective() {
        let ds = line(&[0.0, 2.0, 2.5], &[1.0, 3.0]);
        let rows: Vec<Vec<f64>> = ds.points().map(<[f64]>::to_vec).collect();
        let swapped = Dataset::new("s", rows, vec!["B", "B", "B", "A", "A"]).unwrap();
        let a = build_smith_system(&ds);
        let b = build_smith_system(&swapped);
        assert!(a.z.iter().zip(&b.z).all(|(x, y)| *x == -y));
        let (sa, sb) = (solve_lp(&a).unwrap(), solve_lp(&b).unwrap());
        assert!((sa.objective - sb.objective).abs() < 1e-9);
    }

    #[test]
    fn separable_objective_is_zero() {
        let s = solve_lp(&build_smith_system(&line(&[0.0], &[1.0]))).unwrap();
        assert!(s.objective.abs() < 1e-12);
        assert_eq!(l1_error_distance(&line(&[0.0, 0.2], &[1.0, 3.0])).unwrap(), 0.0);
        assert_eq!(l2_linear_error(&line(&[0.0, 0.2], &[1.0, 3.0])).unwrap(), 0.0);
    }

    #[test]
    fn coincident_points() {
        let ds = line(&[0.5], &[0.5]);
        let s = solve_lp(&build_smith_system(&ds)).unwrap();
        assert!((s.objective - 2.0).abs() < 1e-12);
        assert!((l1_error_distance(&ds).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(l2_linear_error(&ds).unwrap(), 0.5);
    }

    #[test]
    fn interleaved_is_positive() {
        let ds = line(&[0.0, 2.0], &[1.0, 3.0]);
        assert!(l1_error_distance(&ds).unwrap() > 0.0);
    }

    #[test]
    fn classify_sign_rule() {
        let w = [1.0, -0.5];
        assert_eq!(classify_linear(&w, &[1.0]), Class::One);
        assert_eq!(classify_linear(&w, &[0.5]), Class::Two);
        assert_eq!(classify_linear(&w, &[0.0]), Class::Two);
        let neg = [-1.0, 0.5];
        assert_eq!(classify_linear(&neg, &[1.0]), Class::Two);
        assert_eq!(classify_linear(&neg, &[0.0]), Class::One);
    }

    #[test]
    fn interpolation_contracts() {
        let ds = line(&[4.0], &[0.0, 1.0, 3.0]);
        let set = interpolated_test_set(&ds, 200, 11);
        assert_eq!(set.len(), 200);
        for i in 0..set.len() {
            let v = set.point(i)[0];
            match set.membership[i] {
                Class::One => assert_eq!(v, 4.0),
                Class::Two => assert!((0.0..=3.0).contains(&v)),
            }
        }
        assert_eq!(set, interpolated_test_set(&ds, 200, 11));
        assert_ne!(set, interpolated_test_set(&ds, 200, 12));
    }

    #[test]
    fn l3_examples() {
        assert_eq!(l3_linear_nonlinearity(&line(&[0.0, 0.3], &[1.0, 2.0]), 5).unwrap(), 0.0);
        // every interpolant sits on the tie; class-one draws are all errors
        let many_a: Vec<f64> = vec![0.5; 50];
        let many_b: Vec<f64> = vec![0.5; 50];
        let l3 = l3_linear_nonlinearity(&line(&many_a, &many_b), 3).unwrap();
        assert!((l3 - 0.5).abs() < 0.2, "{l3}");
    }
}
