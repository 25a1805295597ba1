//! Labeled two-class point sets and the geometry shared by every measure.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Which of the two classes a point belongs to.
///
/// `One` is always the lexicographically smaller label, so the orientation of
/// every measure is fixed by the label strings alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    One,
    Two,
}

impl Class {
    pub fn other(self) -> Class {
        match self {
            Class::One => Class::Two,
            Class::Two => Class::One,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Class::One => 0,
            Class::Two => 1,
        }
    }
}

/// An immutable, validated set of labeled points with exactly two classes.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    name: String,
    dim: usize,
    values: Vec<f64>,
    labels: Vec<String>,
    classes: [String; 2],
    membership: Vec<Class>,
}

impl Dataset {
    /// Validates rows and labels into a dataset.
    ///
    /// Every rejection names the offending row.
    pub fn new<S: Into<String>>(
        name: impl Into<String>,
        rows: Vec<Vec<f64>>,
        labels: Vec<S>,
    ) -> Result<Dataset> {
        let dim = rows.first().ok_or(Error::EmptyDataset)?.len();
        let mut values = Vec::with_capacity(rows.len() * dim);
        for (row, point) in rows.iter().enumerate() {
            if point.len() != dim {
                return Err(Error::RaggedRow {
                    row,
                    expected: dim,
                    found: point.len(),
                });
            }
            values.extend_from_slice(point);
        }
        Self::from_flat(name, dim, values, labels)
    }

    /// Like [`Dataset::new`] but takes row-major coordinates.
    pub fn from_flat<S: Into<String>>(
        name: impl Into<String>,
        dim: usize,
        values: Vec<f64>,
        labels: Vec<S>,
    ) -> Result<Dataset> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if values.is_empty() {
            return Err(Error::EmptyDataset);
        }
        if !values.len().is_multiple_of(dim) {
            return Err(Error::RaggedRow {
                row: values.len() / dim,
                expected: dim,
                found: values.len() % dim,
            });
        }
        let n = values.len() / dim;
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != n {
            return Err(Error::LengthMismatch {
                rows: n,
                labels: labels.len(),
                row: n.min(labels.len()),
            });
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                row: pos / dim,
                column: pos % dim,
            });
        }

        let mut distinct = BTreeSet::new();
        for (row, label) in labels.iter().enumerate() {
            if distinct.insert(label.as_str()) && distinct.len() > 2 {
                return Err(Error::ClassCount {
                    found: distinct.len(),
                    row,
                    label: label.clone(),
                });
            }
        }
        if distinct.len() < 2 {
            return Err(Error::ClassCount {
                found: distinct.len(),
                row: 0,
                label: labels[0].clone(),
            });
        }
        let classes = {
            let mut it = distinct.into_iter();
            [it.next().unwrap().to_owned(), it.next().unwrap().to_owned()]
        };
        let membership = labels
            .iter()
            .map(|l| if *l == classes[0] { Class::One } else { Class::Two })
            .collect();

        Ok(Dataset {
            name: name.into(),
            dim,
            values,
            labels,
            classes,
            membership,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Dataset {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.membership.len()
    }

    /// Always false for a validated dataset; present for API symmetry.
    pub fn is_empty(&self) -> bool {
        self.membership.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.values[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.values.chunks_exact(self.dim)
    }

    /// Row-major coordinates.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// The two label values, lexicographically ordered.
    pub fn classes(&self) -> &[String; 2] {
        &self.classes
    }

    pub fn class_name(&self, class: Class) -> &str {
        &self.classes[class.index()]
    }

    pub fn class_of(&self, i: usize) -> Class {
        self.membership[i]
    }

    pub fn membership(&self) -> &[Class] {
        &self.membership
    }

    pub fn class_sizes(&self) -> [usize; 2] {
        let ones = self.membership.iter().filter(|c| **c == Class::One).count();
        [ones, self.len() - ones]
    }

    /// Applies `f` to every point, keeping labels and name.
    pub fn map_points(&self, mut f: impl FnMut(&[f64]) -> Vec<f64>) -> Result<Dataset> {
        let rows = self.points().map(&mut f).collect();
        Dataset::new(self.name.clone(), rows, self.labels.clone())
    }

    /// Keeps the given rows in the given order.
    pub fn select(&self, indices: &[usize]) -> Result<Dataset> {
        let rows = indices.iter().map(|&i| self.point(i).to_vec()).collect();
        let labels = indices.iter().map(|&i| self.labels[i].clone()).collect();
        Dataset::new(self.name.clone(), rows, labels)
    }

    /// Per-feature z-scoring with population standard deviation. Constant
    /// features are only centered.
    pub fn standardized(&self) -> Dataset {
        let n = self.len() as f64;
        let mut values = self.values.clone();
        for f in 0..self.dim {
            let mean = self.points().map(|p| p[f]).sum::<f64>() / n;
            let var = self.points().map(|p| (p[f] - mean).powi(2)).sum::<f64>() / n;
            let sd = var.sqrt();
            for row in values.chunks_exact_mut(self.dim) {
                row[f] -= mean;
                if sd > 0.0 {
                    row[f] /= sd;
                }
            }
        }
        Dataset {
            values,
            ..self.clone()
        }
    }
}

/// Index partition of a dataset by class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSplit {
    pub class1: Vec<usize>,
    pub class2: Vec<usize>,
}

impl ClassSplit {
    pub fn n1(&self) -> usize {
        self.class1.len()
    }

    pub fn n2(&self) -> usize {
        self.class2.len()
    }

    pub fn of(&self, class: Class) -> &[usize] {
        match class {
            Class::One => &self.class1,
            Class::Two => &self.class2,
        }
    }
}

pub fn split_classes(ds: &Dataset) -> ClassSplit {
    let (class1, class2) = (0..ds.len()).partition(|&i| ds.class_of(i) == Class::One);
    ClassSplit { class1, class2 }
}

pub fn euclidean_distance(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    Ok(distance(p, q))
}

/// Unchecked Euclidean distance. Every measure goes through this one function
/// so that equal geometric distances compare equal bit-for-bit.
#[inline]
pub(crate) fn distance(p: &[f64], q: &[f64]) -> f64 {
    debug_assert_eq!(p.len(), q.len());
    p.iter()
        .zip(q)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

/// Length of the diagonal of the axis-aligned box enclosing all points.
pub fn bounding_diagonal(ds: &Dataset) -> f64 {
    (0..ds.dim())
        .map(|f| {
            let (lo, hi) = ds
                .points()
                .map(|p| p[f])
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                    (lo.min(v), hi.max(v))
                });
            (hi - lo).powi(2)
        })
        .sum::<f64>()
        .sqrt()
}

/// Per-class summary of a single feature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassFeature {
    pub mean: f64,
    /// Population variance (divides by the class count).
    pub variance: f64,
    pub min: f64,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeatureStats {
    /// `per_feature[i][c]` summarizes feature `i` over class `c`.
    pub per_feature: Vec<[ClassFeature; 2]>,
}

impl FeatureStats {
    pub fn feature(&self, i: usize, class: Class) -> &ClassFeature {
        &self.per_feature[i][class.index()]
    }
}

pub fn feature_stats(ds: &Dataset) -> FeatureStats {
    let split = split_classes(ds);
    let summarize = |f: usize, idx: &[usize]| {
        let count = idx.len() as f64;
        let mean = idx.iter().map(|&i| ds.point(i)[f]).sum::<f64>() / count;
        let variance = idx
            .iter()
            .map(|&i| (ds.point(i)[f] - mean).powi(2))
            .sum::<f64>()
            / count;
        let (min, max) = idx
            .iter()
            .map(|&i| ds.point(i)[f])
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(v), hi.max(v))
            });
        ClassFeature {
            mean,
            variance,
            min,
            max,
        }
    };
    let per_feature = (0..ds.dim())
        .map(|f| [summarize(f, &split.class1), summarize(f, &split.class2)])
        .collect();
    FeatureStats { per_feature }
}
