//! Pearson correlations between feature columns and entropy of energy
//! dispersion.

use serde::{Deserialize, Serialize};

use crate::centrality::VertexFeatures;
use crate::error::{Error, Result};

pub const FEATURE_LABELS: [&str; 8] = [
    "degree",
    "betweenness",
    "closeness_paper",
    "clustering",
    "eigencentrality",
    "graph_energy",
    "randic_energy",
    "laplacian_energy",
];

pub const DEFAULT_BINS: usize = 32;

/// Relative spread below which a column counts as constant. Egonet energies
/// of isomorphic but differently labeled egonets agree only to rounding, so
/// an exact comparison would turn solver noise into signal.
pub const CONSTANT_SPREAD: f64 = 1e-10;

fn is_constant(values: &[f64]) -> bool {
    let (lo, hi) = values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
        (lo.min(x), hi.max(x))
    });
    hi - lo <= CONSTANT_SPREAD * lo.abs().max(hi.abs()).max(1.0)
}

/// Sample Pearson correlation. `None` when either column is constant.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<Option<f64>> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.len() < 2 {
        return Err(Error::TooFewSamples(x.len()));
    }
    if is_constant(x) || is_constant(y) {
        return Ok(None);
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Ok(None);
    }
    Ok(Some((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0)))
}

/// Symmetric matrix of Pearson coefficients over the eight feature columns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationMatrix {
    values: Vec<Option<f64>>,
}

impl CorrelationMatrix {
    pub const SIZE: usize = FEATURE_LABELS.len();

    pub(crate) fn from_cells(values: Vec<Option<f64>>) -> Self {
        debug_assert_eq!(values.len(), Self::SIZE * Self::SIZE);
        CorrelationMatrix { values }
    }

    pub fn labels(&self) -> &'static [&'static str] {
        &FEATURE_LABELS
    }

    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        self.values[i * Self::SIZE + j]
    }

    /// Looks a cell up by feature labels.
    pub fn by_label(&self, a: &str, b: &str) -> Option<f64> {
        let i = label_index(a)?;
        let j = label_index(b)?;
        self.get(i, j)
    }

    /// Upper-triangle cells `(i, j, r)` with `i < j`, row by row.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, Option<f64>)> + '_ {
        (0..Self::SIZE)
            .flat_map(|i| (i + 1..Self::SIZE).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, self.get(i, j)))
    }
}

pub fn label_index(label: &str) -> Option<usize> {
    FEATURE_LABELS.iter().position(|&l| l == label)
}

/// `"a:b"` header names for the upper-triangle pairs, in [`CorrelationMatrix::pairs`] order.
pub fn pair_labels() -> Vec<String> {
    let k = FEATURE_LABELS.len();
    (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| format!("{}:{}", FEATURE_LABELS[i], FEATURE_LABELS[j])))
        .collect()
}

pub fn correlation_matrix(features: &[VertexFeatures]) -> Result<CorrelationMatrix> {
    const K: usize = CorrelationMatrix::SIZE;
    if features.len() < 2 {
        return Err(Error::TooFewSamples(features.len()));
    }
    let columns: Vec<Vec<f64>> = (0..K)
        .map(|c| features.iter().map(|f| f.columns()[c]).collect())
        .collect();
    let mut values = vec![None; K * K];
    for i in 0..K {
        values[i * K + i] = pearson(&columns[i], &columns[i])?.map(|_| 1.0);
        for j in i + 1..K {
            let r = pearson(&columns[i], &columns[j])?;
            values[i * K + j] = r;
            values[j * K + i] = r;
        }
    }
    Ok(CorrelationMatrix { values })
}

/// Shannon entropy (nats) of the histogram of `values` over `bins`
/// equal-width bins spanning `[min, max]`. Zero for a constant column.
pub fn shannon_entropy(values: &[f64], bins: usize) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    if bins == 0 {
        return Err(Error::invalid("bin count must be at least 1"));
    }
    if values.iter().any(|x| !x.is_finite()) {
        return Err(Error::invalid("entropy input must be finite"));
    }
    if is_constant(values) {
        return Ok(0.0);
    }
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let width = hi - lo;
    let mut counts = vec![0usize; bins];
    for &x in values {
        let b = (((x - lo) / width) * bins as f64) as usize;
        counts[b.min(bins - 1)] += 1;
    }
    let total = values.len() as f64;
    Ok(counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / total;
            -p * p.ln()
        })
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct EntropyTriple {
    pub h_graph: f64,
    pub h_randic: f64,
    pub h_laplacian: f64,
}

impl EntropyTriple {
    pub fn of_features(features: &[VertexFeatures], bins: usize) -> Result<Self> {
        let column = |f: fn(&VertexFeatures) -> f64| features.iter().map(f).collect::<Vec<_>>();
        Ok(EntropyTriple {
            h_graph: shannon_entropy(&column(|f| f.energies.graph_energy), bins)?,
            h_randic: shannon_entropy(&column(|f| f.energies.randic_energy), bins)?,
            h_laplacian: shannon_entropy(&column(|f| f.energies.laplacian_energy), bins)?,
        })
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.h_graph, self.h_randic, self.h_laplacian]
    }
}
