//! Adjacency, Randić and Laplacian matrices and their energies.
//!
//! All matrices are built from degrees inside the graph they are given. For
//! egocentric networks that means induced-subgraph degrees, not degrees in
//! the parent network.

mod eigen;

use serde::{Deserialize, Serialize};

pub use eigen::{eigenvalues, eigenvalues_with, EigenMethod, JACOBI_CUTOFF, JACOBI_MAX_SWEEPS};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            entries: vec![0.0; order * order],
        }
    }

    /// Checks squareness, exact symmetry and finiteness.
    pub fn from_row_major(order: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != order * order {
            return Err(Error::invalid(format!(
                "{} entries cannot form a {order}x{order} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|x| !x.is_finite()) {
            return Err(Error::invalid("matrix entries must be finite"));
        }
        for i in 0..order {
            for j in i + 1..order {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(Error::invalid(format!("matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(SymMatrix { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.entries[i * self.order + j] = v;
        self.entries[j * self.order + i] = v;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }
}

/// Eigenvalues of a symmetric matrix, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub(crate) fn from_sorted(values: Vec<f64>) -> Self {
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// `sum |x - shift|` over the eigenvalues.
    pub fn energy_about(&self, shift: f64) -> f64 {
        self.values.iter().map(|x| (x - shift).abs()).sum()
    }

    pub fn energy(&self) -> f64 {
        self.energy_about(0.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct EnergyTriple {
    pub graph_energy: f64,
    pub randic_energy: f64,
    pub laplacian_energy: f64,
}

pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.order());
    for &(a, b) in g.edges() {
        m.set_sym(a, b, 1.0);
    }
    m
}

/// `1 / sqrt(d_i d_j)` on edges, zero elsewhere. Isolated vertices only ever
/// get zero rows since they have no edges.
pub fn randic_matrix(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.order());
    for &(a, b) in g.edges() {
        let w = 1.0 / ((g.degree(a) * g.degree(b)) as f64).sqrt();
        m.set_sym(a, b, w);
    }
    m
}

pub fn laplacian_matrix(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.order());
    for v in 0..g.order() {
        m.set_sym(v, v, g.degree(v) as f64);
    }
    for &(a, b) in g.edges() {
        m.set_sym(a, b, -1.0);
    }
    m
}

/// Mean degree `2m/n`, zero for the empty graph.
pub fn mean_degree(g: &Graph) -> f64 {
    if g.order() == 0 {
        0.0
    } else {
        2.0 * g.size() as f64 / g.order() as f64
    }
}

pub fn graph_energy(g: &Graph) -> Result<f64> {
    if g.size() == 0 {
        return Ok(0.0);
    }
    Ok(eigenvalues(&adjacency_matrix(g))?.energy())
}

pub fn randic_energy(g: &Graph) -> Result<f64> {
    if g.size() == 0 {
        return Ok(0.0);
    }
    Ok(eigenvalues(&randic_matrix(g))?.energy())
}

/// `sum |lambda_i - 2m/n|` over the Laplacian spectrum.
pub fn laplacian_energy(g: &Graph) -> Result<f64> {
    if g.size() == 0 {
        return Ok(0.0);
    }
    Ok(eigenvalues(&laplacian_matrix(g))?.energy_about(mean_degree(g)))
}

pub fn energies(g: &Graph) -> Result<EnergyTriple> {
    Ok(EnergyTriple {
        graph_energy: graph_energy(g)?,
        randic_energy: randic_energy(g)?,
        laplacian_energy: laplacian_energy(g)?,
    })
}

/// Energies of the egocentric network of `v`.
pub fn ego_energies(g: &Graph, v: usize) -> Result<EnergyTriple> {
    energies(&g.ego_network(v)?.subgraph)
}
