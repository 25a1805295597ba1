use serde::Serialize;

use super::profile::{Measure, ProfileTable};
use crate::error::{Error, Result};

/// Pearson correlation between every pair of measures.
///
/// Rows where either value of a pair is non-finite are left out of that pair
/// only. Entries with fewer than three usable rows, or with a constant column,
/// are NaN.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationMatrix {
    pub measures: Vec<Measure>,
    pub values: Vec<Vec<f64>>,
    /// Rows dropped from each pair because of a sentinel value.
    pub excluded: Vec<Vec<usize>>,
}

impl CorrelationMatrix {
    pub fn get(&self, a: Measure, b: Measure) -> f64 {
        self.values[a.index()][b.index()]
    }

    /// Measures whose diagonal entry is defined.
    pub fn defined(&self) -> Vec<Measure> {
        self.measures
            .iter()
            .copied()
            .filter(|m| !self.values[m.index()][m.index()].is_nan())
            .collect()
    }
}

pub fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (da, db) = (a - mx, b - my);
        sxy += da * db;
        sxx += da * da;
        syy += db * db;
    }
    if sxx == 0.0 || syy == 0.0 {
        return f64::NAN;
    }
    (sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0)
}

pub fn correlation_matrix(table: &ProfileTable) -> Result<CorrelationMatrix> {
    if table.len() < 3 {
        return Err(Error::InsufficientRows {
            needed: 3,
            found: table.len(),
        });
    }
    let columns: Vec<Vec<f64>> = Measure::ALL.iter().map(|&m| table.column(m)).collect();
    let k = Measure::ALL.len();
    let mut values = vec![vec![f64::NAN; k]; k];
    let mut excluded = vec![vec![0; k]; k];
    for a in 0..k {
        for b in a..k {
            let (xs, ys): (Vec<f64>, Vec<f64>) = columns[a]
                .iter()
                .zip(&columns[b])
                .filter(|(x, y)| x.is_finite() && y.is_finite())
                .map(|(x, y)| (*x, *y))
                .unzip();
            let dropped = table.len() - xs.len();
            let r = if xs.len() < 3 {
                f64::NAN
            } else if a == b {
                if pearson(&xs, &ys).is_nan() {
                    f64::NAN
                } else {
                    1.0
                }
            } else {
                pearson(&xs, &ys)
            };
            values[a][b] = r;
            values[b][a] = r;
            excluded[a][b] = dropped;
            excluded[b][a] = dropped;
        }
    }
    Ok(CorrelationMatrix {
        measures: Measure::ALL.to_vec(),
        values,
        excluded,
    })
}
