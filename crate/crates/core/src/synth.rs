//! Seeded generators for the validation problem families: random labelings,
//! linearly separable problems with a margin, checkerboards and concentric
//! rings.
//!
//! Every generator is a pure function of its [`GeneratorSpec`]. Class labels
//! are `"c1"` and `"c2"`, and both classes always get exactly `n_per_class`
//! points.

use std::f64::consts::TAU;

use rand::seq::SliceRandom;
use rand::RngExt;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::rng::{self, Rng};

pub const CLASS_ONE: &str = "c1";
pub const CLASS_TWO: &str = "c2";

/// Margin generation gives up once this many draws have been made and more
/// than 99.9% of them were rejected.
const MARGIN_PROBE: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    RandomLabeling {
        dim: usize,
        n_per_class: usize,
        seed: u64,
    },
    LinearMargin {
        dim: usize,
        n_per_class: usize,
        margin: f64,
        seed: u64,
    },
    Checkerboard {
        cells_per_side: usize,
        n_per_class: usize,
        seed: u64,
    },
    Rings {
        n_per_class: usize,
        r_inner: f64,
        r_outer: f64,
        gap: f64,
        seed: u64,
    },
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Dataset> {
        match *self {
            GeneratorSpec::RandomLabeling {
                dim,
                n_per_class,
                seed,
            } => gen_random_labeling(dim, n_per_class, seed),
            GeneratorSpec::LinearMargin {
                dim,
                n_per_class,
                margin,
                seed,
            } => gen_linear_margin(dim, n_per_class, margin, seed),
            GeneratorSpec::Checkerboard {
                cells_per_side,
                n_per_class,
                seed,
            } => gen_checkerboard(cells_per_side, n_per_class, seed),
            GeneratorSpec::Rings {
                n_per_class,
                r_inner,
                r_outer,
                gap,
                seed,
            } => gen_rings(n_per_class, r_inner, r_outer, gap, seed),
        }
    }

    pub fn seed(&self) -> u64 {
        match *self {
            GeneratorSpec::RandomLabeling { seed, .. }
            | GeneratorSpec::LinearMargin { seed, .. }
            | GeneratorSpec::Checkerboard { seed, .. }
            | GeneratorSpec::Rings { seed, .. } => seed,
        }
    }

    /// Short descriptive name, used for generated problems without one.
    pub fn describe(&self) -> String {
        match self {
            GeneratorSpec::RandomLabeling { dim, n_per_class, seed } => {
                format!("random-d{dim}-n{n_per_class}-s{seed}")
            }
            GeneratorSpec::LinearMargin { dim, n_per_class, margin, seed } => {
                format!("linear-d{dim}-n{n_per_class}-m{margin}-s{seed}")
            }
            GeneratorSpec::Checkerboard { cells_per_side, n_per_class, seed } => {
                format!("checker-k{cells_per_side}-n{n_per_class}-s{seed}")
            }
            GeneratorSpec::Rings { n_per_class, r_inner, r_outer, gap, seed } => {
                format!("rings-n{n_per_class}-r{r_inner}-{r_outer}-g{gap}-s{seed}")
            }
        }
    }
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidArgument(what.to_owned()))
    }
}

fn uniform_point(rng: &mut Rng, dim: usize) -> Vec<f64> {
    (0..dim).map(|_| rng.random::<f64>()).collect()
}

fn assemble(name: String, ones: Vec<Vec<f64>>, twos: Vec<Vec<f64>>) -> Result<Dataset> {
    let labels: Vec<&str> = std::iter::repeat_n(CLASS_ONE, ones.len())
        .chain(std::iter::repeat_n(CLASS_TWO, twos.len()))
        .collect();
    let rows = ones.into_iter().chain(twos).collect();
    Dataset::new(name, rows, labels)
}

/// Rejection-samples labeled points until both classes hold `n_per_class`,
/// discarding further draws for a class that is already full.
fn fill_classes(
    rng: &mut Rng,
    n_per_class: usize,
    mut draw: impl FnMut(&mut Rng) -> Option<(Vec<f64>, bool)>,
) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let (mut ones, mut twos) = (Vec::with_capacity(n_per_class), Vec::with_capacity(n_per_class));
    while ones.len() < n_per_class || twos.len() < n_per_class {
        if let Some((p, first)) = draw(rng) {
            let bucket = if first { &mut ones } else { &mut twos };
            if bucket.len() < n_per_class {
                bucket.push(p);
            }
        }
    }
    (ones, twos)
}

/// Uniform points in the unit cube with fair-coin labels, rebalanced by
/// relabeling randomly chosen members of the larger class.
pub fn gen_random_labeling(dim: usize, n_per_class: usize, seed: u64) -> Result<Dataset> {
    require(dim >= 1, "dimension must be at least 1")?;
    require(n_per_class >= 1, "n_per_class must be at least 1")?;
    let mut rng = rng::seeded(seed);
    let n = 2 * n_per_class;
    let rows: Vec<Vec<f64>> = (0..n).map(|_| uniform_point(&mut rng, dim)).collect();
    let mut first: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
    let ones = first.iter().filter(|f| **f).count();
    if ones != n_per_class {
        let majority = ones > n_per_class;
        let mut pool: Vec<usize> = (0..n).filter(|&i| first[i] == majority).collect();
        pool.shuffle(&mut rng);
        for &i in pool.iter().take(ones.abs_diff(n_per_class)) {
            first[i] = !majority;
        }
    }
    let labels: Vec<&str> = first
        .iter()
        .map(|&f| if f { CLASS_ONE } else { CLASS_TWO })
        .collect();
    Dataset::new(format!("random-d{dim}-s{seed}"), rows, labels)
}

/// Uniform points in the unit cube split by a randomly oriented hyperplane
/// through the cube's center. Draws closer than `margin / 2` to the plane are
/// rejected.
pub fn gen_linear_margin(dim: usize, n_per_class: usize, margin: f64, seed: u64) -> Result<Dataset> {
    require(dim >= 1, "dimension must be at least 1")?;
    require(n_per_class >= 1, "n_per_class must be at least 1")?;
    require(margin >= 0.0 && margin.is_finite(), "margin must be a finite nonnegative number")?;
    let mut rng = rng::seeded(seed);
    let mut normal: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(&mut rng)).collect();
    let norm = normal.iter().map(|v| v * v).sum::<f64>().sqrt();
    normal.iter_mut().for_each(|v| *v /= norm);

    let (mut ones, mut twos) = (Vec::with_capacity(n_per_class), Vec::with_capacity(n_per_class));
    let (mut attempts, mut rejected) = (0u64, 0u64);
    while ones.len() < n_per_class || twos.len() < n_per_class {
        attempts += 1;
        let p = uniform_point(&mut rng, dim);
        let side: f64 = p.iter().zip(&normal).map(|(x, u)| (x - 0.5) * u).sum();
        if side.abs() < margin / 2.0 {
            rejected += 1;
            if attempts >= MARGIN_PROBE && rejected as f64 > 0.999 * attempts as f64 {
                return Err(Error::ImpossibleMargin {
                    margin,
                    attempts,
                    rejected,
                });
            }
            continue;
        }
        let bucket = if side > 0.0 { &mut ones } else { &mut twos };
        if bucket.len() < n_per_class {
            bucket.push(p);
        }
    }
    assemble(format!("linear-d{dim}-m{margin}-s{seed}"), ones, twos)
}

/// Class of a point in the unit square under a `cells × cells` checkerboard:
/// even cell-index parity is class one.
pub fn checker_cell_is_first(x: f64, y: f64, cells: usize) -> bool {
    let cell = |v: f64| ((v * cells as f64).floor() as usize).min(cells - 1);
    (cell(x) + cell(y)) % 2 == 0
}

pub fn gen_checkerboard(cells_per_side: usize, n_per_class: usize, seed: u64) -> Result<Dataset> {
    require(cells_per_side >= 2, "cells_per_side must be at least 2")?;
    require(n_per_class >= 1, "n_per_class must be at least 1")?;
    let mut rng = rng::seeded(seed);
    let (ones, twos) = fill_classes(&mut rng, n_per_class, |rng| {
        let p = uniform_point(rng, 2);
        let first = checker_cell_is_first(p[0], p[1], cells_per_side);
        Some((p, first))
    });
    assemble(format!("checker-k{cells_per_side}-s{seed}"), ones, twos)
}

/// Two concentric annuli around the origin. Class one has radii uniform in
/// `[r_inner / 2, r_inner]`, class two in `[r_inner + gap, r_outer]`; angles
/// are uniform.
pub fn gen_rings(n_per_class: usize, r_inner: f64, r_outer: f64, gap: f64, seed: u64) -> Result<Dataset> {
    require(n_per_class >= 1, "n_per_class must be at least 1")?;
    require(r_inner > 0.0 && r_inner.is_finite(), "r_inner must be positive")?;
    require(gap > 0.0, "gap must be positive")?;
    require(r_inner + gap < r_outer && r_outer.is_finite(), "r_inner + gap must be below r_outer")?;
    let mut rng = rng::seeded(seed);
    let mut ring = |lo: f64, hi: f64| -> Vec<Vec<f64>> {
        (0..n_per_class)
            .map(|_| {
                let r = lo + (hi - lo) * rng.random::<f64>();
                let a = TAU * rng.random::<f64>();
                vec![r * a.cos(), r * a.sin()]
            })
            .collect()
    };
    let ones = ring(r_inner / 2.0, r_inner);
    let twos = ring(r_inner + gap, r_outer);
    assemble(format!("rings-s{seed}"), ones, twos)
}
