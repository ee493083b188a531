//! Python bindings: graphs, generators, egonet energies, per-vertex
//! features and the sweep protocol.

use std::collections::BTreeMap;

use egonet_core::graph::{parse_edge_list, write_edge_list};
use egonet_core::spectral::{self, EnergyTriple};
use egonet_core::stats::{self, FEATURE_LABELS};
use egonet_core::sweep::{self, default_sweep, uniform_grid, write_sweep};
use egonet_core::{features_all, ClusteringVariant, Error, GenSpec, Model, ModelParams};
use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Io(io) => PyOSError::new_err(io.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn clustering_variant(name: &str) -> PyResult<ClusteringVariant> {
    name.parse().map_err(py_err)
}

/// Undirected simple graph on vertices `0..n`.
#[pyclass(frozen, module = "egonet")]
struct Graph {
    inner: egonet_core::Graph,
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = egonet_core::Graph::new(n, edges).map_err(py_err)?;
        Ok(Graph { inner })
    }

    /// Parses the whitespace-separated edge-list format.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: parse_edge_list(text).map_err(py_err)?,
        })
    }

    fn to_edge_list(&self) -> PyResult<String> {
        let mut out = Vec::new();
        write_edge_list(&self.inner, &mut out).map_err(py_err)?;
        Ok(String::from_utf8(out).expect("edge lists are ASCII"))
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        check_vertex(&self.inner, v)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        check_vertex(&self.inner, v)?;
        Ok(self.inner.degree(v))
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    /// Members of the radius-1 egonet of `v`: the ego, then its neighbors.
    fn ego_members(&self, v: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.ego_network(v).map_err(py_err)?.members)
    }

    fn connected_components(&self) -> Vec<Vec<usize>> {
        self.inner.connected_components()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.order(), self.inner.size())
    }
}

fn check_vertex(g: &egonet_core::Graph, v: usize) -> PyResult<()> {
    if v < g.order() {
        Ok(())
    } else {
        Err(py_err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        }))
    }
}

fn triple(e: EnergyTriple) -> (f64, f64, f64) {
    (e.graph_energy, e.randic_energy, e.laplacian_energy)
}

#[allow(clippy::too_many_arguments)]
fn params_for(
    model: Model,
    p: Option<f64>,
    k: usize,
    m: usize,
    p_triangle: Option<f64>,
    alpha: Option<f64>,
    beta: f64,
) -> PyResult<ModelParams> {
    let need =
        |v: Option<f64>, name: &str| v.ok_or_else(|| PyValueError::new_err(format!("model {model} needs `{name}`")));
    Ok(match model {
        Model::ErdosRenyi => ModelParams::ErdosRenyi { p: need(p, "p")? },
        Model::WattsStrogatz => ModelParams::WattsStrogatz { k, p: need(p, "p")? },
        Model::HolmeKim => ModelParams::HolmeKim {
            m,
            p_triangle: need(p_triangle, "p_triangle")?,
        },
        Model::Waxman => ModelParams::Waxman {
            alpha: need(alpha, "alpha")?,
            beta,
        },
    })
}

/// Generates a seeded instance of `model` ("er", "ws", "hk" or "waxman").
#[pyfunction]
#[pyo3(signature = (model, n, seed = 0, *, p = None, k = 4, m = 2, p_triangle = None, alpha = None, beta = 0.1))]
#[allow(clippy::too_many_arguments)]
fn generate(
    model: &str,
    n: usize,
    seed: u64,
    p: Option<f64>,
    k: usize,
    m: usize,
    p_triangle: Option<f64>,
    alpha: Option<f64>,
    beta: f64,
) -> PyResult<Graph> {
    let model: Model = model.parse().map_err(py_err)?;
    let spec = GenSpec::new(n, params_for(model, p, k, m, p_triangle, alpha, beta)?, seed);
    Ok(Graph {
        inner: spec.generate().map_err(py_err)?,
    })
}

/// `(graph_energy, randic_energy, laplacian_energy)` of a whole graph.
#[pyfunction]
fn energies(g: &Graph) -> PyResult<(f64, f64, f64)> {
    spectral::energies(&g.inner).map(triple).map_err(py_err)
}

/// Energies of the radius-1 egonet of `v`.
#[pyfunction]
fn ego_energies(g: &Graph, v: usize) -> PyResult<(f64, f64, f64)> {
    spectral::ego_energies(&g.inner, v).map(triple).map_err(py_err)
}

/// Per-vertex feature records as dicts keyed by the CSV column names.
#[pyfunction]
#[pyo3(signature = (g, clustering = "standard"))]
fn features(py: Python<'_>, g: &Graph, clustering: &str) -> PyResult<Vec<BTreeMap<&'static str, f64>>> {
    let variant = clustering_variant(clustering)?;
    let rows = py.detach(|| features_all(&g.inner, variant)).map_err(py_err)?;
    Ok(rows
        .iter()
        .map(|f| {
            let mut row: BTreeMap<_, _> = FEATURE_LABELS.iter().copied().zip(f.columns()).collect();
            row.insert("vertex", f.vertex as f64);
            row
        })
        .collect())
}

/// Pearson correlation, `None` when either column is constant.
#[pyfunction]
fn pearson(x: Vec<f64>, y: Vec<f64>) -> PyResult<Option<f64>> {
    stats::pearson(&x, &y).map_err(py_err)
}

/// Shannon entropy in nats over equal-width bins spanning the data.
#[pyfunction]
#[pyo3(signature = (values, bins = stats::DEFAULT_BINS))]
fn shannon_entropy(values: Vec<f64>, bins: usize) -> PyResult<f64> {
    stats::shannon_entropy(&values, bins).map_err(py_err)
}

/// Correlations (keyed `"a:b"`), entropies and summary of one instance.
/// `spec` is a generator manifest as JSON text.
#[pyfunction]
#[pyo3(signature = (spec, bins = stats::DEFAULT_BINS, clustering = "standard"))]
fn run_instance(py: Python<'_>, spec: &str, bins: usize, clustering: &str) -> PyResult<Py<PyAny>> {
    let spec: GenSpec = serde_json::from_str(spec).map_err(|e| py_err(e.into()))?;
    let variant = clustering_variant(clustering)?;
    let res = py
        .detach(|| sweep::run_instance(&spec, bins, variant))
        .map_err(py_err)?;
    let correlations: BTreeMap<String, Option<f64>> = stats::pair_labels()
        .into_iter()
        .zip(res.correlations.pairs().map(|(_, _, r)| r))
        .collect();
    let entropy: BTreeMap<&str, f64> = ["h_graph", "h_randic", "h_laplacian"]
        .into_iter()
        .zip(res.entropy.as_array())
        .collect();
    let s = res.summary;
    let out = pyo3::types::PyDict::new(py);
    out.set_item("correlations", correlations)?;
    out.set_item("entropy", entropy)?;
    out.set_item("n", s.n)?;
    out.set_item("m", s.m)?;
    out.set_item("components", s.components)?;
    out.set_item("mean_degree", s.mean_degree)?;
    Ok(out.into_any().unbind())
}

/// Runs the default protocol for `model` with optional overrides and
/// returns the per-grid-point replicate means. Writes the CSV artifacts
/// when `outdir` is given.
#[pyfunction]
#[pyo3(signature = (model, *, steps = sweep::DEFAULT_STEPS, replicates = sweep::DEFAULT_REPLICATES,
                    n = sweep::DEFAULT_N, seed = sweep::DEFAULT_SEED, outdir = None))]
fn run_sweep(
    py: Python<'_>,
    model: &str,
    steps: usize,
    replicates: usize,
    n: usize,
    seed: u64,
    outdir: Option<std::path::PathBuf>,
) -> PyResult<Vec<BTreeMap<String, Option<f64>>>> {
    let model: Model = model.parse().map_err(py_err)?;
    let mut config = default_sweep(model);
    config.grid = uniform_grid(sweep::GRID_START, sweep::GRID_END, steps);
    config.replicates = replicates;
    config.n = n;
    config.base_seed = seed;
    let result = py.detach(|| sweep::run_sweep(&config)).map_err(py_err)?;
    if let Some(dir) = outdir {
        write_sweep(&result, dir).map_err(py_err)?;
    }
    let labels = stats::pair_labels();
    Ok(result
        .means
        .iter()
        .map(|m| {
            let mut row: BTreeMap<String, Option<f64>> = labels
                .iter()
                .cloned()
                .zip(m.correlations.pairs().map(|(_, _, r)| r))
                .collect();
            row.insert("param_value".into(), Some(m.param_value));
            for (name, h) in ["h_graph", "h_randic", "h_laplacian"].iter().zip(m.entropy) {
                row.insert(name.to_string(), h);
            }
            row
        })
        .collect())
}

#[pymodule]
fn egonet(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(energies, m)?)?;
    m.add_function(wrap_pyfunction!(ego_energies, m)?)?;
    m.add_function(wrap_pyfunction!(features, m)?)?;
    m.add_function(wrap_pyfunction!(pearson, m)?)?;
    m.add_function(wrap_pyfunction!(shannon_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(run_instance, m)?)?;
    m.add_function(wrap_pyfunction!(run_sweep, m)?)?;
    m.add("FEATURE_LABELS", FEATURE_LABELS.to_vec())?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
