use serde::Serialize;

use super::jacobi::symmetric_eigen;
use super::profile::{ComplexityProfile, Measure, ProfileTable};
use crate::error::{Error, Result};

/// Below this many usable rows the decomposition is reported with a warning.
pub const RECOMMENDED_ROWS: usize = 13;

/// Principal components of the standardized measure space.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PcaResult {
    /// Measures that entered the decomposition, in column order.
    pub measures: Vec<Measure>,
    /// `loadings[c]` is component `c` as a unit vector over `measures`.
    pub loadings: Vec<Vec<f64>>,
    pub eigenvalues: Vec<f64>,
    /// Share of total variance per component; nonincreasing, sums to one.
    pub explained: Vec<f64>,
    pub means: Vec<f64>,
    pub std_devs: Vec<f64>,
    /// Always `"correlation"`: columns are z-scored before decomposition.
    pub form: String,
    pub rows_used: usize,
    pub excluded_rows: Vec<String>,
    pub excluded_measures: Vec<Measure>,
    pub warnings: Vec<String>,
}

impl PcaResult {
    /// Z-scores the included measures of a profile.
    pub fn standardize(&self, profile: &ComplexityProfile) -> Vec<f64> {
        self.measures
            .iter()
            .enumerate()
            .map(|(k, &m)| (profile.get(m) - self.means[k]) / self.std_devs[k])
            .collect()
    }

    pub fn project(&self, standardized: &[f64]) -> Vec<f64> {
        self.loadings
            .iter()
            .map(|c| c.iter().zip(standardized).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn reconstruct(&self, scores: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.measures.len()];
        for (c, s) in self.loadings.iter().zip(scores) {
            for (o, l) in out.iter_mut().zip(c) {
                *o += s * l;
            }
        }
        out
    }
}

pub fn pca(table: &ProfileTable) -> Result<PcaResult> {
    let (rows, skipped): (Vec<&ComplexityProfile>, Vec<&ComplexityProfile>) = table
        .rows
        .iter()
        .partition(|r| r.values().iter().all(|v| v.is_finite()));
    if rows.len() < 2 {
        return Err(Error::InsufficientRows {
            needed: 2,
            found: rows.len(),
        });
    }
    let n = rows.len() as f64;
    let mut warnings = Vec::new();
    if rows.len() < RECOMMENDED_ROWS {
        warnings.push(format!(
            "only {} usable rows; at least {RECOMMENDED_ROWS} are recommended",
            rows.len()
        ));
    }

    let mut measures = Vec::new();
    let mut excluded_measures = Vec::new();
    let mut means = Vec::new();
    let mut std_devs = Vec::new();
    for m in Measure::ALL {
        let col: Vec<f64> = rows.iter().map(|r| r.get(m)).collect();
        let mean = col.iter().sum::<f64>() / n;
        let var = col.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
        if var > 0.0 {
            measures.push(m);
            means.push(mean);
            std_devs.push(var.sqrt());
        } else {
            excluded_measures.push(m);
        }
    }
    if !excluded_measures.is_empty() {
        let names: Vec<&str> = excluded_measures.iter().map(|m| m.name()).collect();
        warnings.push(format!("constant measures excluded: {}", names.join(",")));
    }
    if measures.is_empty() {
        return Err(Error::InvalidArgument("every measure is constant".into()));
    }

    let k = measures.len();
    let z: Vec<Vec<f64>> = rows
        .iter()
        .map(|r| {
            measures
                .iter()
                .enumerate()
                .map(|(c, &m)| (r.get(m) - means[c]) / std_devs[c])
                .collect()
        })
        .collect();
    let mut corr = vec![vec![0.0; k]; k];
    for a in 0..k {
        for b in a..k {
            let s = z.iter().map(|row| row[a] * row[b]).sum::<f64>() / (n - 1.0);
            corr[a][b] = s;
            corr[b][a] = s;
        }
    }

    let eig = symmetric_eigen(&corr);
    let eigenvalues: Vec<f64> = eig.values.iter().map(|v| v.max(0.0)).collect();
    let total: f64 = eigenvalues.iter().sum();
    let explained = eigenvalues.iter().map(|v| v / total).collect();
    let loadings = eig
        .vectors
        .into_iter()
        .map(|mut v| {
            // largest-magnitude loading made positive; first one wins ties
            let pivot = v
                .iter()
                .enumerate()
                .fold(0, |best, (i, x)| if x.abs() > v[best].abs() { i } else { best });
            if v[pivot] < 0.0 {
                v.iter_mut().for_each(|x| *x = -*x);
            }
            v
        })
        .collect();

    Ok(PcaResult {
        measures,
        loadings,
        eigenvalues,
        explained,
        means,
        std_devs,
        form: "correlation".into(),
        rows_used: rows.len(),
        excluded_rows: skipped.iter().map(|r| r.name.clone()).collect(),
        excluded_measures,
        warnings,
    })
}
