//! Per-vertex centrality measures and the combined feature record.

use std::collections::VecDeque;
use std::str::FromStr;

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{self, EnergyTriple};

pub const EIGEN_MAX_ITERATIONS: usize = 10_000;
pub const EIGEN_TOLERANCE: f64 = 1e-10;

pub fn degree(g: &Graph, v: usize) -> Result<usize> {
    g.check_vertex(v)?;
    Ok(g.degree(v))
}

/// Unnormalized shortest-path betweenness over unordered pairs, endpoints
/// excluded. Pairs in different components contribute nothing.
///
/// Brandes accumulation: one BFS per source, dependencies summed on the way
/// back. Every unordered pair is seen from both ends, hence the final halving.
pub fn betweenness_all(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut score = vec![0.0; n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![usize::MAX; n];
    let mut delta = vec![0.0f64; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::with_capacity(n);

    for s in 0..n {
        sigma.iter_mut().for_each(|x| *x = 0.0);
        dist.iter_mut().for_each(|x| *x = usize::MAX);
        delta.iter_mut().for_each(|x| *x = 0.0);
        order.clear();

        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[u] + 1 {
                    sigma[w] += sigma[u];
                }
            }
        }

        for &w in order.iter().rev() {
            for &u in g.neighbors(w) {
                // u is a predecessor of w on a shortest path from s
                if dist[u] != usize::MAX && dist[u] + 1 == dist[w] {
                    delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
                }
            }
            if w != s {
                score[w] += delta[w];
            }
        }
    }
    score.iter_mut().for_each(|x| *x /= 2.0);
    score
}

/// Mean distance from each vertex: the sum of distances to every vertex of
/// its own component (itself included at distance 0), divided by the total
/// vertex count. Unreachable vertices add nothing. Smaller means more
/// central.
pub fn closeness_all(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    (0..n)
        .map(|s| {
            dist.iter_mut().for_each(|x| *x = usize::MAX);
            dist[s] = 0;
            queue.push_back(s);
            let mut total = 0usize;
            while let Some(u) = queue.pop_front() {
                total += dist[u];
                for &w in g.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            total as f64 / n as f64
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClusteringVariant {
    /// Edges among the neighbors over `k(k-1)/2`.
    #[default]
    Standard,
    /// All egonet edges, spokes included, over `|G_i| (|G_i| - 1)` with
    /// `|G_i| = k + 1`. Never exceeds 1/2.
    Paper,
}

impl FromStr for ClusteringVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(ClusteringVariant::Standard),
            "paper" => Ok(ClusteringVariant::Paper),
            other => Err(Error::invalid(format!("unknown clustering variant {other:?}"))),
        }
    }
}

fn neighbor_links(g: &Graph, v: usize) -> usize {
    let nbrs = g.neighbors(v);
    nbrs.iter()
        .enumerate()
        .map(|(i, &a)| nbrs[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count())
        .sum()
}

/// Local clustering coefficient; zero when the degree is below 2.
pub fn clustering(g: &Graph, v: usize, variant: ClusteringVariant) -> Result<f64> {
    g.check_vertex(v)?;
    let k = g.degree(v);
    Ok(match variant {
        ClusteringVariant::Standard if k < 2 => 0.0,
        ClusteringVariant::Standard => neighbor_links(g, v) as f64 / (k * (k - 1) / 2) as f64,
        ClusteringVariant::Paper if k == 0 => 0.0,
        ClusteringVariant::Paper => (k + neighbor_links(g, v)) as f64 / ((k + 1) * k) as f64,
    })
}

/// Leading adjacency eigenvector, scaled to a maximum of 1 within each
/// connected component. Edgeless components get zeros.
///
/// Power iteration runs per component on `A + (1 + max_degree) I`, which is
/// positive definite and so converges on bipartite components too. A
/// component whose two leading eigenvalues are too close for the iteration
/// cap is solved densely instead.
pub fn eigencentrality_all(g: &Graph) -> Result<Vec<f64>> {
    let mut out = vec![0.0; g.order()];
    for comp in g.connected_components() {
        if comp.len() < 2 {
            continue;
        }
        let sub = g.induced_subgraph(&comp)?;
        let vec = match power_iteration(&sub) {
            Err(Error::PowerIterationFailure(_)) => dense_principal_eigenvector(&sub),
            other => other?,
        };
        for (local, &v) in comp.iter().enumerate() {
            out[v] = vec[local];
        }
    }
    Ok(out)
}

/// Max-normalized leading adjacency eigenvector of a connected graph by
/// shifted power iteration.
pub fn power_iteration(g: &Graph) -> Result<Vec<f64>> {
    let n = g.order();
    let shift = 1.0 + g.max_degree() as f64;
    let mut x = vec![1.0; n];
    let mut next = vec![0.0; n];
    for _ in 0..EIGEN_MAX_ITERATIONS {
        for v in 0..n {
            next[v] = shift * x[v] + g.neighbors(v).iter().map(|&w| x[w]).sum::<f64>();
        }
        let peak = next.iter().copied().fold(0.0, f64::max);
        next.iter_mut().for_each(|y| *y /= peak);
        let change = x.iter().zip(&next).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        std::mem::swap(&mut x, &mut next);
        if change < EIGEN_TOLERANCE {
            return Ok(x);
        }
    }
    Err(Error::PowerIterationFailure(EIGEN_MAX_ITERATIONS))
}

fn dense_principal_eigenvector(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let a = DMatrix::from_row_slice(n, n, spectral::adjacency_matrix(g).as_slice());
    let eig = a.symmetric_eigen();
    let top = eig.eigenvalues.imax();
    // Perron vector: one sign throughout
    let v: Vec<f64> = eig.eigenvectors.column(top).iter().map(|x| x.abs()).collect();
    let peak = v.iter().copied().fold(0.0, f64::max);
    v.into_iter().map(|x| x / peak).collect()
}

/// Everything computed for one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VertexFeatures {
    pub vertex: usize,
    pub degree: usize,
    pub betweenness: f64,
    /// Mean distance, see [`closeness_all`].
    pub closeness: f64,
    pub clustering: f64,
    pub eigencentrality: f64,
    pub energies: EnergyTriple,
}

impl VertexFeatures {
    /// Columns in [`crate::stats::FEATURE_LABELS`] order.
    pub fn columns(&self) -> [f64; 8] {
        [
            self.degree as f64,
            self.betweenness,
            self.closeness,
            self.clustering,
            self.eigencentrality,
            self.energies.graph_energy,
            self.energies.randic_energy,
            self.energies.laplacian_energy,
        ]
    }
}

/// Computes the full feature record of every vertex, ascending by id.
pub fn features_all(g: &Graph, variant: ClusteringVariant) -> Result<Vec<VertexFeatures>> {
    let betweenness = betweenness_all(g);
    let closeness = closeness_all(g);
    let eigen = eigencentrality_all(g)?;
    (0..g.order())
        .into_par_iter()
        .map(|v| {
            Ok(VertexFeatures {
                vertex: v,
                degree: g.degree(v),
                betweenness: betweenness[v],
                closeness: closeness[v],
                clustering: clustering(g, v, variant)?,
                eigencentrality: eigen[v],
                energies: spectral::ego_energies(g, v)?,
            })
        })
        .collect()
}
