//! Distance-graph measures: MST boundary fraction (N1), intra/inter nearest
//! neighbor distance ratio (N2), leave-one-out 1NN error (N3) and 1NN
//! nonlinearity (N4).
//!
//! Everything is exact all-pairs work, O(n²) distance evaluations. Nearest
//! neighbor ties go to the lowest point index.

use rayon::prelude::*;

use crate::dataset::{distance, Dataset};
use crate::linprog::{interpolated_test_set, InterpolatedSet};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub weight: f64,
}

impl Edge {
    fn new(a: usize, b: usize, weight: f64) -> Edge {
        Edge {
            i: a.min(b),
            j: a.max(b),
            weight,
        }
    }

    fn key(&self) -> (usize, usize) {
        (self.i, self.j)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeList {
    pub nodes: usize,
    pub edges: Vec<Edge>,
}

impl EdgeList {
    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }
}

/// Prim's algorithm on the complete Euclidean graph, grown from point 0.
/// Among equal-weight candidate edges the lexicographically smaller `(i, j)`
/// wins.
pub fn minimum_spanning_tree<'a>(points: impl IntoIterator<Item = &'a [f64]>) -> EdgeList {
    let points: Vec<&[f64]> = points.into_iter().collect();
    let n = points.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    if n < 2 {
        return EdgeList { nodes: n, edges };
    }
    let mut in_tree = vec![false; n];
    let mut best: Vec<Edge> = (0..n).map(|v| Edge::new(0, v, distance(points[0], points[v]))).collect();
    in_tree[0] = true;
    for _ in 1..n {
        let next = (0..n)
            .filter(|&v| !in_tree[v])
            .min_by(|&a, &b| {
                best[a]
                    .weight
                    .total_cmp(&best[b].weight)
                    .then(best[a].key().cmp(&best[b].key()))
            })
            .expect("a vertex remains outside the tree");
        in_tree[next] = true;
        edges.push(best[next]);
        for u in 0..n {
            if in_tree[u] {
                continue;
            }
            let candidate = Edge::new(next, u, distance(points[next], points[u]));
            let current = best[u];
            if candidate.weight < current.weight
                || (candidate.weight == current.weight && candidate.key() < current.key())
            {
                best[u] = candidate;
            }
        }
    }
    EdgeList { nodes: n, edges }
}

/// N1: fraction of points touched by an MST edge joining the two classes.
pub fn n1_boundary_fraction(ds: &Dataset) -> f64 {
    let mst = minimum_spanning_tree(ds.points());
    let mut boundary = vec![false; ds.len()];
    for e in mst.edges.iter().filter(|e| ds.class_of(e.i) != ds.class_of(e.j)) {
        boundary[e.i] = true;
        boundary[e.j] = true;
    }
    boundary.iter().filter(|b| **b).count() as f64 / ds.len() as f64
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Neighbor {
    pub index: usize,
    pub distance: f64,
}

/// Nearest same-class and nearest opposite-class neighbor of every point.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborTable {
    /// `None` for a point whose class has no other member.
    pub intra: Vec<Option<Neighbor>>,
    pub inter: Vec<Neighbor>,
}

impl NeighborTable {
    pub fn build(ds: &Dataset) -> NeighborTable {
        let rows: Vec<(Option<Neighbor>, Neighbor)> = (0..ds.len())
            .into_par_iter()
            .map(|i| {
                let p = ds.point(i);
                let mut intra: Option<Neighbor> = None;
                let mut inter: Option<Neighbor> = None;
                for (j, q) in ds.points().enumerate() {
                    if j == i {
                        continue;
                    }
                    let d = distance(p, q);
                    let slot = if ds.class_of(j) == ds.class_of(i) {
                        &mut intra
                    } else {
                        &mut inter
                    };
                    if slot.is_none_or(|nb| d < nb.distance) {
                        *slot = Some(Neighbor { index: j, distance: d });
                    }
                }
                (intra, inter.expect("both classes are present"))
            })
            .collect();
        let (intra, inter) = rows.into_iter().unzip();
        NeighborTable { intra, inter }
    }

    /// Points left out of the intra average because their class is a singleton.
    pub fn singletons(&self) -> usize {
        self.intra.iter().filter(|n| n.is_none()).count()
    }

    /// Ratio of mean intra-class to mean inter-class NN distance. Singleton
    /// classes are skipped in the intra mean; a zero inter mean gives infinity.
    pub fn intra_inter_ratio(&self) -> f64 {
        let intra: Vec<f64> = self.intra.iter().flatten().map(|n| n.distance).collect();
        let intra_mean = if intra.is_empty() {
            0.0
        } else {
            intra.iter().sum::<f64>() / intra.len() as f64
        };
        let inter_mean =
            self.inter.iter().map(|n| n.distance).sum::<f64>() / self.inter.len() as f64;
        if inter_mean == 0.0 {
            f64::INFINITY
        } else {
            intra_mean / inter_mean
        }
    }

    /// Leave-one-out 1NN error.
    pub fn loo_error(&self) -> f64 {
        let errors = self
            .intra
            .iter()
            .zip(&self.inter)
            .filter(|(intra, inter)| match intra {
                None => true,
                Some(a) => {
                    inter.distance < a.distance
                        || (inter.distance == a.distance && inter.index < a.index)
                }
            })
            .count();
        errors as f64 / self.inter.len() as f64
    }
}

pub fn n2_intra_inter_ratio(ds: &Dataset) -> f64 {
    NeighborTable::build(ds).intra_inter_ratio()
}

pub fn n3_loo_nn_error(ds: &Dataset) -> f64 {
    NeighborTable::build(ds).loo_error()
}

fn nearest_point(ds: &Dataset, x: &[f64]) -> usize {
    let mut best = (0, distance(ds.point(0), x));
    for (i, p) in ds.points().enumerate().skip(1) {
        let d = distance(p, x);
        if d < best.1 {
            best = (i, d);
        }
    }
    best.0
}

/// N4: 1NN error on `n` interpolated points drawn with `seed`.
pub fn n4_nn_nonlinearity(ds: &Dataset, seed: u64) -> f64 {
    n4_on(ds, &interpolated_test_set(ds, ds.len(), seed))
}

/// 1NN error of `ds` on an already drawn test set.
pub fn n4_on(ds: &Dataset, test: &InterpolatedSet) -> f64 {
    if test.is_empty() {
        return 0.0;
    }
    let errors = (0..test.len())
        .into_par_iter()
        .filter(|&i| ds.class_of(nearest_point(ds, test.point(i))) != test.membership[i])
        .count();
    errors as f64 / test.len() as f64
}
