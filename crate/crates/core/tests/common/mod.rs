#![allow(dead_code, clippy::needless_range_loop)]

use geocomplexity::Dataset;
use nalgebra::{DMatrix, DVector};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Minimum of `sum(t)` over every basic feasible solution of
///
/// ```text
/// z_i . (w+ - w-) + t_i - s_i = 1,   w+, w-, t, s >= 0
/// ```
///
/// where `z_i = +(x_i, 1)` for the first class and `-(x_i, 1)` for the other.
/// Every `n`-column subset is tried as a basis.
pub fn smith_bfs_oracle(points: &[Vec<f64>], first_class: &[bool]) -> f64 {
    let n = points.len();
    let aug = points[0].len() + 1;
    let mut cols: Vec<(Vec<f64>, f64)> = Vec::new();
    for k in 0..aug {
        let z: Vec<f64> = (0..n)
            .map(|i| {
                let v = if k + 1 == aug { 1.0 } else { points[i][k] };
                if first_class[i] { v } else { -v }
            })
            .collect();
        cols.push((z.iter().map(|v| -v).collect(), 0.0));
        cols.push((z, 0.0));
    }
    for i in 0..n {
        let mut e = vec![0.0; n];
        e[i] = 1.0;
        cols.push((e.clone(), 1.0));
        e[i] = -1.0;
        cols.push((e, 0.0));
    }

    let b = DVector::from_element(n, 1.0);
    let mut best = f64::INFINITY;
    let mut pick: Vec<usize> = (0..n).collect();
    loop {
        let basis = DMatrix::from_fn(n, n, |r, c| cols[pick[c]].0[r]);
        let lu = basis.clone().lu();
        if let Some(x) = lu.solve(&b) {
            let residual = (&basis * &x - &b).amax();
            if residual < 1e-9 && x.iter().all(|&v| v >= -1e-10) {
                let obj: f64 = pick.iter().zip(x.iter()).map(|(&c, &v)| cols[c].1 * v).sum();
                best = best.min(obj);
            }
        }
        if !next_combination(&mut pick, cols.len()) {
            break;
        }
    }
    best
}

fn next_combination(pick: &mut [usize], total: usize) -> bool {
    let k = pick.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if pick[i] < total - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub struct LpCase {
    pub points: Vec<Vec<f64>>,
    pub first_class: Vec<bool>,
}

impl LpCase {
    pub fn dataset(&self) -> Dataset {
        let labels: Vec<&str> = self.first_class.iter().map(|&f| if f { "a" } else { "b" }).collect();
        Dataset::new("grid", self.points.clone(), labels).unwrap()
    }
}

fn labelings(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (1..(1u32 << n) - 1).map(move |mask| (0..n).map(|i| mask >> i & 1 == 1).collect())
}

/// Small integer-grid problems: every 1-D configuration of 2 to 4 points on
/// {0,1,2} with every two-class labeling, every 2-D configuration of 3 points
/// on {0,1}^2, and seeded draws of 5 and 6 points on {0,1,2}^2.
pub fn lp_family() -> Vec<LpCase> {
    let mut out = Vec::new();
    for n in 2..=4usize {
        for code in 0..3usize.pow(n as u32) {
            let points: Vec<Vec<f64>> = (0..n).map(|i| vec![(code / 3usize.pow(i as u32) % 3) as f64]).collect();
            for first_class in labelings(n) {
                out.push(LpCase { points: points.clone(), first_class });
            }
        }
    }
    for code in 0..64usize {
        let points: Vec<Vec<f64>> = (0..3)
            .map(|i| {
                let cell = code >> (2 * i) & 3;
                vec![(cell & 1) as f64, (cell >> 1) as f64]
            })
            .collect();
        for first_class in labelings(3) {
            out.push(LpCase { points: points.clone(), first_class });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for n in [5usize, 6] {
        let mut made = 0;
        while made < 120 {
            let points: Vec<Vec<f64>> = (0..n)
                .map(|_| vec![rng.random_range(0..3) as f64, rng.random_range(0..3) as f64])
                .collect();
            let first_class: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
            if first_class.iter().all(|&f| f) || first_class.iter().all(|&f| !f) {
                continue;
            }
            out.push(LpCase { points, first_class });
            made += 1;
        }
    }
    out
}

pub fn close_rel(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}
