//! Dense two-phase tableau simplex for `min c·x  s.t.  A x = b, x ≥ 0`.
//!
//! Entering variables are priced by reduced cost divided by the norm of the
//! original column, ties going to the lowest column index. After a run of
//! degenerate pivots pricing falls back to Bland's rule until the objective
//! moves again. Leaving rows are chosen by the minimum ratio, ties going to the
//! lowest basic variable index. The pivot sequence is therefore a pure
//! function of the input.

use crate::error::SolverError;

/// Reduced costs above `-OPTIMALITY_TOL * column_norm` count as nonnegative.
pub const OPTIMALITY_TOL: f64 = 1e-9;
/// Smallest tableau entry accepted in the ratio test.
pub const ELIGIBLE_PIVOT: f64 = 1e-9;
/// Pivots smaller than this abort the solve.
pub const MIN_PIVOT: f64 = 1e-12;
const FEASIBILITY_TOL: f64 = 1e-9;
const DEGENERATE_RUN: usize = 50;

/// An LP in equality standard form. `a` is row-major, `rows × cols`.
#[derive(Debug, Clone, PartialEq)]
pub struct StandardForm {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub c: Vec<f64>,
}

impl StandardForm {
    fn check(&self) -> Result<(), SolverError> {
        if self.a.len() != self.rows * self.cols {
            return Err(SolverError::Malformed(format!(
                "constraint matrix has {} entries, expected {}x{}",
                self.a.len(),
                self.rows,
                self.cols
            )));
        }
        if self.b.len() != self.rows || self.c.len() != self.cols {
            return Err(SolverError::Malformed(
                "right-hand side or cost vector has the wrong length".into(),
            ));
        }
        if self.a.iter().chain(&self.b).chain(&self.c).any(|v| !v.is_finite()) {
            return Err(SolverError::Malformed("non-finite coefficient".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimplexSolution {
    pub x: Vec<f64>,
    pub objective: f64,
    pub iterations: usize,
    /// Basic column per (non-redundant) row.
    pub basis: Vec<usize>,
}

struct Tableau {
    width: usize,
    // rows × (width + 1); the last entry of each row is the right-hand side
    cells: Vec<f64>,
    basis: Vec<usize>,
    norms: Vec<f64>,
    // columns allowed to enter the basis
    eligible: Vec<bool>,
    iterations: usize,
    limit: usize,
}

impl Tableau {
    fn rows(&self) -> usize {
        self.basis.len()
    }

    fn row(&self, r: usize) -> &[f64] {
        let stride = self.width + 1;
        &self.cells[r * stride..(r + 1) * stride]
    }

    fn at(&self, r: usize, j: usize) -> f64 {
        self.cells[r * (self.width + 1) + j]
    }

    fn rhs(&self, r: usize) -> f64 {
        self.at(r, self.width)
    }

    fn reduced_costs(&self, cost: &[f64]) -> Vec<f64> {
        let mut d = cost.to_vec();
        for r in 0..self.rows() {
            let cb = cost[self.basis[r]];
            if cb != 0.0 {
                for (dj, t) in d.iter_mut().zip(self.row(r)) {
                    *dj -= cb * t;
                }
            }
        }
        d
    }

    fn pivot(&mut self, p: usize, j: usize, d: &mut [f64]) -> Result<(), SolverError> {
        let stride = self.width + 1;
        let piv = self.at(p, j);
        if piv.abs() < MIN_PIVOT {
            return Err(SolverError::TinyPivot {
                magnitude: piv.abs(),
                iteration: self.iterations,
            });
        }
        let (before, rest) = self.cells.split_at_mut(p * stride);
        let (prow, after) = rest.split_at_mut(stride);
        prow.iter_mut().for_each(|v| *v /= piv);
        prow[j] = 1.0;
        let eliminate = |row: &mut [f64]| {
            let f = row[j];
            if f != 0.0 {
                for (v, pv) in row.iter_mut().zip(prow.iter()) {
                    *v -= f * pv;
                }
                row[j] = 0.0;
            }
        };
        before.chunks_exact_mut(stride).for_each(eliminate);
        after.chunks_exact_mut(stride).for_each(eliminate);
        let f = d[j];
        if f != 0.0 {
            for (dv, pv) in d.iter_mut().zip(prow.iter()) {
                *dv -= f * pv;
            }
            d[j] = 0.0;
        }
        self.basis[p] = j;
        Ok(())
    }

    fn choose_entering(&self, d: &[f64], bland: bool) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for j in 0..self.width {
            if !self.eligible[j] {
                continue;
            }
            let score = d[j] / self.norms[j];
            if score >= -OPTIMALITY_TOL {
                continue;
            }
            if bland {
                return Some(j);
            }
            if best.is_none_or(|(_, s)| score < s) {
                best = Some((j, score));
            }
        }
        best.map(|(j, _)| j)
    }

    fn choose_leaving(&self, j: usize) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for r in 0..self.rows() {
            let a = self.at(r, j);
            if a <= ELIGIBLE_PIVOT {
                continue;
            }
            let ratio = self.rhs(r).max(0.0) / a;
            best = match best {
                None => Some((r, ratio)),
                Some((br, bratio)) => {
                    let tie = (ratio - bratio).abs() <= 1e-12 * bratio.abs().max(1.0);
                    if (tie && self.basis[r] < self.basis[br]) || (!tie && ratio < bratio) {
                        Some((r, ratio))
                    } else {
                        Some((br, bratio))
                    }
                }
            };
        }
        best.map(|(r, _)| r)
    }

    /// Runs simplex iterations on `cost` until optimal.
    fn optimize(&mut self, cost: &[f64]) -> Result<(), SolverError> {
        let mut d = self.reduced_costs(cost);
        let mut degenerate = 0usize;
        loop {
            let Some(j) = self.choose_entering(&d, degenerate >= DEGENERATE_RUN) else {
                return Ok(());
            };
            let Some(p) = self.choose_leaving(j) else {
                return Err(SolverError::Unbounded);
            };
            if self.iterations >= self.limit {
                return Err(SolverError::IterationLimit { limit: self.limit });
            }
            self.iterations += 1;
            if self.rhs(p) <= FEASIBILITY_TOL {
                degenerate += 1;
            } else {
                degenerate = 0;
            }
            self.pivot(p, j, &mut d)?;
            // clamp roundoff below zero on the right-hand side
            let stride = self.width + 1;
            for r in 0..self.rows() {
                let v = &mut self.cells[r * stride + self.width];
                if *v < 0.0 && *v > -FEASIBILITY_TOL {
                    *v = 0.0;
                }
            }
        }
    }

    fn remove_row(&mut self, r: usize) {
        let stride = self.width + 1;
        self.cells.drain(r * stride..(r + 1) * stride);
        self.basis.remove(r);
    }
}

/// Solves a standard-form LP with the two-phase method.
///
/// Rows already carrying a positive singleton column start with that column
/// basic; the rest get an artificial variable and go through phase one.
pub fn solve_standard(lp: &StandardForm) -> Result<SimplexSolution, SolverError> {
    lp.check()?;
    let (m, n) = (lp.rows, lp.cols);

    let mut a = lp.a.clone();
    let mut b = lp.b.clone();
    for r in 0..m {
        if b[r] < 0.0 {
            b[r] = -b[r];
            a[r * n..(r + 1) * n].iter_mut().for_each(|v| *v = -*v);
        }
    }

    // positive singleton columns give a free starting basis
    let mut start: Vec<Option<(usize, f64)>> = vec![None; m];
    for j in 0..n {
        let mut nonzero = (0..m).filter(|&r| a[r * n + j] != 0.0);
        if let (Some(r), None) = (nonzero.next(), nonzero.next()) {
            let v = a[r * n + j];
            if v > 0.0 && start[r].is_none() {
                start[r] = Some((j, v));
            }
        }
    }
    let artificial_rows: Vec<usize> = (0..m).filter(|&r| start[r].is_none()).collect();
    let width = n + artificial_rows.len();
    let stride = width + 1;

    let mut cells = vec![0.0; m * stride];
    let mut basis = vec![0; m];
    for r in 0..m {
        let row = &mut cells[r * stride..(r + 1) * stride];
        row[..n].copy_from_slice(&a[r * n..(r + 1) * n]);
        row[width] = b[r];
        if let Some((j, v)) = start[r] {
            row.iter_mut().for_each(|x| *x /= v);
            basis[r] = j;
        }
    }
    for (k, &r) in artificial_rows.iter().enumerate() {
        cells[r * stride + n + k] = 1.0;
        basis[r] = n + k;
    }

    let mut norms: Vec<f64> = (0..n)
        .map(|j| (0..m).map(|r| a[r * n + j].powi(2)).sum::<f64>().sqrt())
        .collect();
    norms.resize(width, 1.0);
    for v in norms.iter_mut() {
        if *v == 0.0 {
            *v = 1.0;
        }
    }

    let mut tab = Tableau {
        width,
        cells,
        basis,
        norms,
        eligible: vec![true; width],
        iterations: 0,
        limit: 50 * (m + width) + 1000,
    };

    if !artificial_rows.is_empty() {
        let mut phase1 = vec![0.0; width];
        phase1[n..].iter_mut().for_each(|v| *v = 1.0);
        tab.optimize(&phase1)?;
        let infeasibility: f64 = (0..tab.rows())
            .filter(|&r| tab.basis[r] >= n)
            .map(|r| tab.rhs(r))
            .sum();
        let scale = b.iter().fold(1.0f64, |acc, v| acc.max(v.abs()));
        if infeasibility > FEASIBILITY_TOL * scale {
            return Err(SolverError::Infeasible);
        }
        // drive zero-level artificials out; drop rows that are redundant
        let mut r = 0;
        while r < tab.rows() {
            if tab.basis[r] >= n {
                let entering = (0..n).find(|&j| tab.at(r, j).abs() > ELIGIBLE_PIVOT);
                match entering {
                    Some(j) => {
                        let mut scratch = vec![0.0; width];
                        tab.pivot(r, j, &mut scratch)?;
                    }
                    None => {
                        tab.remove_row(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
        tab.eligible[n..].iter_mut().for_each(|e| *e = false);
    }

    let mut cost = lp.c.clone();
    cost.resize(width, 0.0);
    tab.optimize(&cost)?;

    let mut x = vec![0.0; n];
    for r in 0..tab.rows() {
        let j = tab.basis[r];
        if j < n {
            x[j] = tab.rhs(r).max(0.0);
        }
    }
    let objective = lp.c.iter().zip(&x).map(|(c, v)| c * v).sum();
    Ok(SimplexSolution {
        x,
        objective,
        iterations: tab.iterations,
        basis: tab.basis,
    })
}
