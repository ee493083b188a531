//! Parameter sweeps over a generative model.
//!
//! A sweep varies one model parameter over a grid, generates several seeded
//! replicates per grid point, and for each instance records the correlation
//! matrix of the per-vertex features and the entropy of each energy column.
//! Instances are independent jobs; results are keyed by `(grid index,
//! replicate)` so any execution order yields the same output.

mod output;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use output::{format_real, write_sweep};

use crate::centrality::{features_all, ClusteringVariant};
use crate::error::{Error, Result};
use crate::generators::{GenSpec, Model, ModelParams};
use crate::graph::Graph;
use crate::spectral::mean_degree;
use crate::stats::{correlation_matrix, CorrelationMatrix, EntropyTriple, DEFAULT_BINS};

pub const DEFAULT_N: usize = 100;
pub const DEFAULT_REPLICATES: usize = 5;
pub const DEFAULT_STEPS: usize = 100;
pub const DEFAULT_SEED: u64 = 1;
pub const GRID_START: f64 = 0.01;
pub const GRID_END: f64 = 1.0;

/// The model parameter varied along a sweep grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweptParam {
    /// Edge probability (ER) or rewiring probability (WS).
    P,
    PTriangle,
    Alpha,
    Beta,
}

impl SweptParam {
    pub fn default_for(model: Model) -> Self {
        match model {
            Model::ErdosRenyi | Model::WattsStrogatz => SweptParam::P,
            Model::HolmeKim => SweptParam::PTriangle,
            Model::Waxman => SweptParam::Alpha,
        }
    }

    /// Returns `params` with this parameter set to `value`.
    pub fn apply(self, params: ModelParams, value: f64) -> Result<ModelParams> {
        use ModelParams::*;
        Ok(match (self, params) {
            (SweptParam::P, ErdosRenyi { .. }) => ErdosRenyi { p: value },
            (SweptParam::P, WattsStrogatz { k, .. }) => WattsStrogatz { k, p: value },
            (SweptParam::PTriangle, HolmeKim { m, .. }) => HolmeKim { m, p_triangle: value },
            (SweptParam::Alpha, Waxman { beta, .. }) => Waxman { alpha: value, beta },
            (SweptParam::Beta, Waxman { alpha, .. }) => Waxman { alpha, beta: value },
            (swept, params) => {
                return Err(Error::ConfigInvalid(format!(
                    "{swept:?} is not a parameter of model {}",
                    params.model()
                )))
            }
        })
    }
}

/// `steps` evenly spaced values from `start` to `end` inclusive, rounded to
/// 12 decimals so that e.g. the 0.01 grid holds 0.38 rather than
/// 0.38000000000000006.
pub fn uniform_grid(start: f64, end: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![start],
        _ => (0..steps)
            .map(|i| {
                if i == steps - 1 {
                    end
                } else {
                    let x = start + (end - start) * i as f64 / (steps - 1) as f64;
                    (x * 1e12).round() / 1e12
                }
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub n: usize,
    /// Fixed model parameters; the swept one is overwritten per grid point.
    pub params: ModelParams,
    pub swept_param: SweptParam,
    pub grid: Vec<f64>,
    pub replicates: usize,
    pub base_seed: u64,
    pub bins: usize,
    pub clustering: ClusteringVariant,
}

/// The default protocol for `model`: 100 grid points from 0.01 to 1.0,
/// n = 100, 5 replicates, 32 entropy bins. WS uses k = 4, HK m = 2 and
/// Waxman beta = 0.1.
pub fn default_sweep(model: Model) -> SweepConfig {
    let params = match model {
        Model::ErdosRenyi => ModelParams::ErdosRenyi { p: GRID_START },
        Model::WattsStrogatz => ModelParams::WattsStrogatz { k: 4, p: GRID_START },
        Model::HolmeKim => ModelParams::HolmeKim {
            m: 2,
            p_triangle: GRID_START,
        },
        Model::Waxman => ModelParams::Waxman {
            alpha: GRID_START,
            beta: 0.1,
        },
    };
    SweepConfig {
        n: DEFAULT_N,
        params,
        swept_param: SweptParam::default_for(model),
        grid: uniform_grid(GRID_START, GRID_END, DEFAULT_STEPS),
        replicates: DEFAULT_REPLICATES,
        base_seed: DEFAULT_SEED,
        bins: DEFAULT_BINS,
        clustering: ClusteringVariant::Standard,
    }
}

impl SweepConfig {
    pub fn model(&self) -> Model {
        self.params.model()
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid.is_empty() {
            return Err(Error::ConfigInvalid("grid is empty".into()));
        }
        if self
            .grid
            .windows(2)
            .any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less))
        {
            return Err(Error::ConfigInvalid("grid must be strictly increasing".into()));
        }
        if self.replicates == 0 {
            return Err(Error::ConfigInvalid("replicates must be at least 1".into()));
        }
        if self.bins == 0 {
            return Err(Error::ConfigInvalid("bins must be at least 1".into()));
        }
        if self.n < 2 {
            return Err(Error::ConfigInvalid("correlations need n >= 2".into()));
        }
        for &value in &self.grid {
            self.swept_param
                .apply(self.params, value)?
                .validate(self.n)
                .map_err(|e| Error::ConfigInvalid(format!("grid value {value}: {e}")))?;
        }
        Ok(())
    }

    /// The generator spec of one instance.
    pub fn spec(&self, grid_index: usize, replicate: usize) -> Result<GenSpec> {
        let value = self.grid[grid_index];
        Ok(GenSpec::new(
            self.n,
            self.swept_param.apply(self.params, value)?,
            instance_seed(self.base_seed, grid_index, replicate),
        ))
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of one instance. Depends only on its grid index and replicate, so
/// growing the grid or the replicate count leaves existing rows untouched.
pub fn instance_seed(base_seed: u64, grid_index: usize, replicate: usize) -> u64 {
    let key = ((grid_index as u64) << 32) | (replicate as u64 & 0xFFFF_FFFF);
    base_seed.wrapping_add(splitmix64(key))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub components: usize,
    pub mean_degree: f64,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        GraphSummary {
            n: g.order(),
            m: g.size(),
            components: g.connected_components().len(),
            mean_degree: mean_degree(g),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InstanceResult {
    pub correlations: CorrelationMatrix,
    pub entropy: EntropyTriple,
    pub summary: GraphSummary,
}

/// Generates one instance and evaluates it.
pub fn run_instance(spec: &GenSpec, bins: usize, clustering: ClusteringVariant) -> Result<InstanceResult> {
    let g = spec.generate()?;
    let features = features_all(&g, clustering)?;
    Ok(InstanceResult {
        correlations: correlation_matrix(&features)?,
        entropy: EntropyTriple::of_features(&features, bins)?,
        summary: GraphSummary::of(&g),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub grid_index: usize,
    pub replicate: usize,
    pub param_value: f64,
    pub spec: GenSpec,
    /// Failed instances keep their error message instead of aborting the sweep.
    pub outcome: std::result::Result<InstanceResult, String>,
}

/// Replicate means at one grid point. Undefined or failed cells are left
/// out of a mean; a mean with no contributions is undefined.
#[derive(Debug, Clone, PartialEq)]
pub struct GridMean {
    pub param_value: f64,
    pub succeeded: usize,
    pub correlations: CorrelationMatrix,
    pub entropy: [Option<f64>; 3],
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub config: SweepConfig,
    /// Grid-major, then replicate.
    pub rows: Vec<SweepRow>,
    pub means: Vec<GridMean>,
}

impl SweepResult {
    /// Replicate-mean correlation between two features at every grid point.
    pub fn mean_curve(&self, a: &str, b: &str) -> Vec<Option<f64>> {
        self.means.iter().map(|m| m.correlations.by_label(a, b)).collect()
    }

    /// Replicate-mean entropy curve; `energy` indexes (graph, randic, laplacian).
    pub fn entropy_curve(&self, energy: usize) -> Vec<Option<f64>> {
        self.means.iter().map(|m| m.entropy[energy]).collect()
    }

    pub fn failures(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| r.outcome.is_err())
    }
}

/// Runs the sweep on the global rayon pool.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepResult> {
    config.validate()?;
    let rows = collect_rows(config)?;
    Ok(aggregate(config, rows))
}

/// Runs the sweep on a dedicated pool of `jobs` worker threads.
pub fn run_sweep_with_jobs(config: &SweepConfig, jobs: usize) -> Result<SweepResult> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::ConfigInvalid(format!("cannot start worker pool: {e}")))?;
    let rows = pool.install(|| collect_rows(config))?;
    Ok(aggregate(config, rows))
}

fn collect_rows(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    let keys: Vec<(usize, usize)> = (0..config.grid.len())
        .flat_map(|g| (0..config.replicates).map(move |r| (g, r)))
        .collect();
    keys.into_par_iter()
        .map(|(grid_index, replicate)| {
            let spec = config.spec(grid_index, replicate)?;
            let outcome = run_instance(&spec, config.bins, config.clustering).map_err(|e| e.to_string());
            Ok(SweepRow {
                grid_index,
                replicate,
                param_value: config.grid[grid_index],
                spec,
                outcome,
            })
        })
        .collect()
}

fn mean(values: impl Iterator<Item = Option<f64>>) -> Option<f64> {
    let (sum, count) = values.flatten().fold((0.0, 0usize), |(s, c), x| (s + x, c + 1));
    (count > 0).then(|| sum / count as f64)
}

fn aggregate(config: &SweepConfig, rows: Vec<SweepRow>) -> SweepResult {
    const K: usize = CorrelationMatrix::SIZE;
    let means = rows
        .chunks(config.replicates)
        .map(|chunk| {
            let ok: Vec<&InstanceResult> = chunk.iter().filter_map(|r| r.outcome.as_ref().ok()).collect();
            let cells = (0..K * K)
                .map(|c| mean(ok.iter().map(|res| res.correlations.get(c / K, c % K))))
                .collect();
            let entropy = [0, 1, 2].map(|e| mean(ok.iter().map(|res| Some(res.entropy.as_array()[e]))));
            GridMean {
                param_value: chunk[0].param_value,
                succeeded: ok.len(),
                correlations: CorrelationMatrix::from_cells(cells),
                entropy,
            }
        })
        .collect();
    SweepResult {
        config: config.clone(),
        rows,
        means,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grids() {
        for model in Model::ALL {
            let cfg = default_sweep(model);
            assert_eq!(cfg.grid.len(), 100);
            assert_eq!(cfg.grid[0], 0.01);
            assert_eq!(cfg.grid[99], 1.0);
            assert!((cfg.grid[49] - 0.5).abs() < 1e-12);
            assert_eq!((cfg.n, cfg.replicates, cfg.bins), (100, 5, 32));
            cfg.validate().unwrap();
        }
        assert!(matches!(
            default_sweep(Model::Waxman).params,
            ModelParams::Waxman { beta, .. } if beta == 0.1
        ));
        assert!(matches!(
            default_sweep(Model::WattsStrogatz).params,
            ModelParams::WattsStrogatz { k: 4, .. }
        ));
        assert!(matches!(
            default_sweep(Model::HolmeKim).params,
            ModelParams::HolmeKim { m: 2, .. }
        ));
        assert_eq!(default_sweep(Model::HolmeKim).swept_param, SweptParam::PTriangle);
    }

    #[test]
    fn invalid_configs() {
        let mut cfg = default_sweep(Model::ErdosRenyi);
        cfg.grid = vec![0.5, 0.4];
        assert!(matches!(cfg.validate(), Err(Error::ConfigInvalid(_))));
        cfg.grid = vec![];
        assert!(cfg.validate().is_err());
        cfg.grid = vec![0.5, 1.5];
        assert!(cfg.validate().is_err());
        cfg.grid = vec![0.5];
        cfg.replicates = 0;
        assert!(cfg.validate().is_err());
        let mut cfg = default_sweep(Model::ErdosRenyi);
        cfg.swept_param = SweptParam::Alpha;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn seeds_are_stable_under_growth() {
        let a = instance_seed(7, 3, 1);
        assert_eq!(a, instance_seed(7, 3, 1));
        assert_ne!(a, instance_seed(7, 1, 3));
        assert_ne!(a, instance_seed(8, 3, 1));
    }

    #[test]
    fn single_point_bookkeeping() {
        let mut cfg = default_sweep(Model::ErdosRenyi);
        cfg.n = 20;
        cfg.grid = vec![0.5];
        cfg.replicates = 3;
        let res = run_sweep(&cfg).unwrap();
        assert_eq!(res.rows.len(), 3);
        assert_eq!(res.means.len(), 1);
        assert_eq!(res.means[0].succeeded, 3);
        let by_hand = res
            .rows
            .iter()
            .map(|r| r.outcome.as_ref().unwrap().entropy.h_graph)
            .sum::<f64>()
            / 3.0;
        assert!((res.means[0].entropy[0].unwrap() - by_hand).abs() < 1e-12);
    }

    #[test]
    fn complete_graph_instance_is_degenerate() {
        let spec = GenSpec::new(20, ModelParams::ErdosRenyi { p: 1.0 }, 99);
        let res = run_instance(&spec, 32, ClusteringVariant::Standard).unwrap();
        assert!(res.correlations.pairs().all(|(_, _, r)| r.is_none()));
        assert_eq!(res.entropy, EntropyTriple::default());
    }

    #[test]
    fn ring_lattice_entropies_vanish() {
        let spec = GenSpec::new(20, ModelParams::WattsStrogatz { k: 4, p: 0.0 }, 5);
        let res = run_instance(&spec, 32, ClusteringVariant::Standard).unwrap();
        assert_eq!(res.entropy, EntropyTriple::default());
    }
}
