//! Seeded generators for the four network models.
//!
//! Every generator draws from a [`ChaCha8Rng`] seeded with the 64-bit seed of
//! its [`GenSpec`] via `seed_from_u64`, consuming the stream in a fixed
//! visiting order, so a spec always reproduces the same edge list.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The generator behind every model: ChaCha with 8 rounds.
pub type ModelRng = ChaCha8Rng;

/// Redraws allowed when a Watts–Strogatz rewiring target is a self-loop or
/// duplicate; after that the original edge is kept.
pub const WS_MAX_REDRAWS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Model {
    #[serde(rename = "ER")]
    ErdosRenyi,
    #[serde(rename = "WS")]
    WattsStrogatz,
    #[serde(rename = "HK")]
    HolmeKim,
    #[serde(rename = "WAXMAN")]
    Waxman,
}

impl Model {
    pub const ALL: [Model; 4] = [Model::ErdosRenyi, Model::WattsStrogatz, Model::HolmeKim, Model::Waxman];

    /// Short tag used in manifests and CSV files.
    pub fn tag(self) -> &'static str {
        match self {
            Model::ErdosRenyi => "ER",
            Model::WattsStrogatz => "WS",
            Model::HolmeKim => "HK",
            Model::Waxman => "WAXMAN",
        }
    }
}

impl std::fmt::Display for Model {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "er" | "erdos-renyi" => Ok(Model::ErdosRenyi),
            "ws" | "watts-strogatz" => Ok(Model::WattsStrogatz),
            "hk" | "holme-kim" => Ok(Model::HolmeKim),
            "waxman" => Ok(Model::Waxman),
            other => Err(Error::invalid(format!("unknown model {other:?}"))),
        }
    }
}

/// Model-specific parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModelParams {
    WattsStrogatz { k: usize, p: f64 },
    HolmeKim { m: usize, p_triangle: f64 },
    Waxman { alpha: f64, beta: f64 },
    ErdosRenyi { p: f64 },
}

impl ModelParams {
    pub fn model(&self) -> Model {
        match self {
            ModelParams::ErdosRenyi { .. } => Model::ErdosRenyi,
            ModelParams::WattsStrogatz { .. } => Model::WattsStrogatz,
            ModelParams::HolmeKim { .. } => Model::HolmeKim,
            ModelParams::Waxman { .. } => Model::Waxman,
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        fn prob(name: &str, v: f64) -> Result<()> {
            if (0.0..=1.0).contains(&v) {
                Ok(())
            } else {
                Err(Error::invalid(format!("{name} must lie in [0, 1], got {v}")))
            }
        }
        match *self {
            ModelParams::ErdosRenyi { p } => prob("p", p),
            ModelParams::WattsStrogatz { k, p } => {
                prob("p", p)?;
                if k == 0 || k % 2 != 0 || k >= n {
                    return Err(Error::invalid(format!("k must be even with 0 < k < n (k={k}, n={n})")));
                }
                Ok(())
            }
            ModelParams::HolmeKim { m, p_triangle } => {
                prob("p_triangle", p_triangle)?;
                if m == 0 || m >= n {
                    return Err(Error::invalid(format!("m must satisfy 1 <= m < n (m={m}, n={n})")));
                }
                Ok(())
            }
            ModelParams::Waxman { alpha, beta } => {
                if !(alpha > 0.0 && alpha <= 1.0) {
                    return Err(Error::invalid(format!("alpha must lie in (0, 1], got {alpha}")));
                }
                if !(beta > 0.0 && beta.is_finite()) {
                    return Err(Error::invalid(format!("beta must be positive, got {beta}")));
                }
                Ok(())
            }
        }
    }
}

/// Everything needed to regenerate one network instance.
///
/// Serializes as `{"model": .., "n": .., "params": {..}, "seed": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct GenSpec {
    pub n: usize,
    pub params: ModelParams,
    pub seed: u64,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    model: Model,
    n: usize,
    params: ModelParams,
    seed: u64,
}

impl From<GenSpec> for RawSpec {
    fn from(s: GenSpec) -> Self {
        RawSpec {
            model: s.params.model(),
            n: s.n,
            params: s.params,
            seed: s.seed,
        }
    }
}

impl TryFrom<RawSpec> for GenSpec {
    type Error = String;

    fn try_from(raw: RawSpec) -> std::result::Result<Self, String> {
        if raw.params.model() != raw.model {
            return Err(format!("params {:?} do not belong to model {}", raw.params, raw.model));
        }
        let params = raw.params;
        Ok(GenSpec {
            n: raw.n,
            params,
            seed: raw.seed,
        })
    }
}

impl GenSpec {
    pub fn new(n: usize, params: ModelParams, seed: u64) -> Self {
        GenSpec { n, params, seed }
    }

    pub fn model(&self) -> Model {
        self.params.model()
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate(self.n)
    }

    /// Generates the graph; the Waxman layout is discarded.
    pub fn generate(&self) -> Result<Graph> {
        let GenSpec { n, params, seed } = *self;
        match params {
            ModelParams::ErdosRenyi { p } => gen_erdos_renyi(n, p, seed),
            ModelParams::WattsStrogatz { k, p } => gen_watts_strogatz(n, k, p, seed),
            ModelParams::HolmeKim { m, p_triangle } => gen_holme_kim(n, m, p_triangle, seed),
            ModelParams::Waxman { alpha, beta } => gen_waxman(n, alpha, beta, seed).map(|(g, _)| g),
        }
    }
}

/// G(n, p): each of the n(n-1)/2 pairs independently with probability `p`,
/// visited in lexicographic order.
pub fn gen_erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    ModelParams::ErdosRenyi { p }.validate(n)?;
    let mut rng = ModelRng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}

/// Ring lattice with `k/2` neighbors per side, then each lattice edge
/// `(i, i+j)` is rewired to `(i, w)` with probability `p`, `w` uniform.
///
/// Edges are visited by offset `j = 1..=k/2`, then by `i`. Self-loops and
/// duplicates are redrawn up to [`WS_MAX_REDRAWS`] times, so the edge count
/// is always `n*k/2`.
pub fn gen_watts_strogatz(n: usize, k: usize, p: f64, seed: u64) -> Result<Graph> {
    ModelParams::WattsStrogatz { k, p }.validate(n)?;
    let mut rng = ModelRng::seed_from_u64(seed);
    let mut adj = vec![BTreeSet::new(); n];
    for j in 1..=k / 2 {
        for i in 0..n {
            let u = (i + j) % n;
            adj[i].insert(u);
            adj[u].insert(i);
        }
    }
    for j in 1..=k / 2 {
        for i in 0..n {
            if !rng.random_bool(p) {
                continue;
            }
            let u = (i + j) % n;
            for _ in 0..WS_MAX_REDRAWS {
                let w = rng.random_range(0..n);
                if w == i || adj[i].contains(&w) {
                    continue;
                }
                adj[i].remove(&u);
                adj[u].remove(&i);
                adj[i].insert(w);
                adj[w].insert(i);
                break;
            }
        }
    }
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(a, set)| set.iter().filter(move |&&b| a < b).map(move |&b| (a, b)));
    Graph::new(n, edges)
}

/// Preferential attachment with triangle closure.
///
/// Starts from the complete graph on `m + 1` vertices. Each later vertex adds
/// `m` edges: the first goes to a degree-proportional target; each further
/// edge is, with probability `p_triangle`, closed onto a uniform neighbor of
/// the last preferentially chosen target (when one is still unconnected),
/// and otherwise is another preferential step.
pub fn gen_holme_kim(n: usize, m: usize, p_triangle: f64, seed: u64) -> Result<Graph> {
    ModelParams::HolmeKim { m, p_triangle }.validate(n)?;
    let mut rng = ModelRng::seed_from_u64(seed);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    // every edge endpoint once, so a uniform draw is degree-proportional
    let mut endpoints = Vec::new();

    for a in 0..=m {
        for b in a + 1..=m {
            adj[a].push(b);
            adj[b].push(a);
            edges.push((a, b));
            endpoints.extend([a, b]);
        }
    }

    let mut chosen = Vec::with_capacity(m);
    for v in m + 1..n {
        chosen.clear();
        let mut anchor = preferential_pick(&endpoints, &chosen, &mut rng);
        chosen.push(anchor);
        adj[anchor].push(v);

        while chosen.len() < m {
            if rng.random_bool(p_triangle) {
                let open: Vec<usize> = adj[anchor]
                    .iter()
                    .copied()
                    .filter(|&w| w != v && !chosen.contains(&w))
                    .collect();
                if !open.is_empty() {
                    let w = open[rng.random_range(0..open.len())];
                    chosen.push(w);
                    adj[w].push(v);
                    continue;
                }
            }
            anchor = preferential_pick(&endpoints, &chosen, &mut rng);
            chosen.push(anchor);
            adj[anchor].push(v);
        }

        for &t in &chosen {
            adj[v].push(t);
            edges.push((t, v));
            endpoints.extend([t, v]);
        }
    }
    Graph::new(n, edges)
}

fn preferential_pick(endpoints: &[usize], exclude: &[usize], rng: &mut ModelRng) -> usize {
    loop {
        let t = endpoints[rng.random_range(0..endpoints.len())];
        if !exclude.contains(&t) {
            return t;
        }
    }
}

/// Vertex positions of a Waxman instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WaxmanLayout {
    pub positions: Vec<(f64, f64)>,
    pub d_max: f64,
}

impl WaxmanLayout {
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        let (xi, yi) = self.positions[i];
        let (xj, yj) = self.positions[j];
        (xi - xj).hypot(yi - yj)
    }

    /// Connection probability `alpha * exp(-d_ij / (beta * d_max))`.
    /// Coincident layouts (`d_max = 0`) connect every pair with `alpha`.
    pub fn edge_probability(&self, i: usize, j: usize, alpha: f64, beta: f64) -> f64 {
        if self.d_max == 0.0 {
            return alpha;
        }
        alpha * (-self.distance(i, j) / (beta * self.d_max)).exp()
    }
}

/// Waxman geometric graph on the unit square. All positions are drawn first
/// (x then y per vertex), then pairs are visited in lexicographic order.
pub fn gen_waxman(n: usize, alpha: f64, beta: f64, seed: u64) -> Result<(Graph, WaxmanLayout)> {
    ModelParams::Waxman { alpha, beta }.validate(n)?;
    let mut rng = ModelRng::seed_from_u64(seed);
    let positions: Vec<(f64, f64)> = (0..n)
        .map(|_| {
            let x = rng.random::<f64>();
            let y = rng.random::<f64>();
            (x, y)
        })
        .collect();
    let mut layout = WaxmanLayout { positions, d_max: 0.0 };
    for i in 0..n {
        for j in i + 1..n {
            layout.d_max = layout.d_max.max(layout.distance(i, j));
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(layout.edge_probability(i, j, alpha, beta)) {
                edges.push((i, j));
            }
        }
    }
    Ok((Graph::new(n, edges)?, layout))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn er_extremes() {
        assert_eq!(gen_erdos_renyi(5, 0.0, 1).unwrap().size(), 0);
        assert_eq!(gen_erdos_renyi(5, 1.0, 1).unwrap().size(), 10);
        assert!(gen_erdos_renyi(5, 1.5, 1).is_err());
        assert!(gen_erdos_renyi(5, -0.1, 1).is_err());
    }

    #[test]
    fn ws_lattice_and_count_conservation() {
        let g = gen_watts_strogatz(10, 4, 0.0, 123).unwrap();
        assert_eq!(g.size(), 20);
        assert!((0..10).all(|v| g.degree(v) == 4));
        assert!(g.has_edge(0, 9) && g.has_edge(0, 8) && !g.has_edge(0, 7));
        assert_eq!(gen_watts_strogatz(10, 4, 1.0, 7).unwrap().size(), 20);
    }

    #[test]
    fn ws_validation() {
        assert!(gen_watts_strogatz(10, 3, 0.1, 0).is_err());
        assert!(gen_watts_strogatz(10, 0, 0.1, 0).is_err());
        assert!(gen_watts_strogatz(4, 4, 0.1, 0).is_err());
    }

    #[test]
    fn hk_m1_is_a_tree() {
        let g = gen_holme_kim(5, 1, 0.0, 99).unwrap();
        assert_eq!(g.size(), 4);
        assert_eq!(g.connected_components().len(), 1);
    }

    #[test]
    fn hk_edge_bookkeeping() {
        let g = gen_holme_kim(100, 2, 0.0, 11).unwrap();
        assert_eq!(g.size(), 3 + 2 * 97);
        let g = gen_holme_kim(100, 3, 1.0, 11).unwrap();
        assert_eq!(g.size(), 6 + 3 * 96);
        assert!((4..100).all(|v| g.degree(v) >= 3));
        assert!(gen_holme_kim(3, 3, 0.5, 0).is_err());
        assert!(gen_holme_kim(3, 0, 0.5, 0).is_err());
    }

    #[test]
    fn waxman_two_vertices_use_dmax() {
        let (_, layout) = gen_waxman(2, 1.0, 0.5, 3).unwrap();
        assert_eq!(layout.d_max, layout.distance(0, 1));
        let p = layout.edge_probability(0, 1, 1.0, 0.5);
        assert!((p - (-2.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn waxman_validation() {
        assert!(gen_waxman(5, 0.0, 0.1, 0).is_err());
        assert!(gen_waxman(5, 1.1, 0.1, 0).is_err());
        assert!(gen_waxman(5, 0.5, 0.0, 0).is_err());
        assert!(gen_waxman(1, 0.5, 0.1, 0).unwrap().0.size() == 0);
    }

    #[test]
    fn spec_json_shape() {
        let spec = GenSpec::new(100, ModelParams::HolmeKim { m: 2, p_triangle: 0.5 }, 42);
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(
            json,
            r#"{"model":"HK","n":100,"params":{"m":2,"p_triangle":0.5},"seed":42}"#
        );
        let er: GenSpec = serde_json::from_str(r#"{"model":"ER","n":10,"params":{"p":0.25},"seed":7}"#).unwrap();
        assert_eq!(er.params, ModelParams::ErdosRenyi { p: 0.25 });
        let bad = serde_json::from_str::<GenSpec>(r#"{"model":"WAXMAN","n":10,"params":{"p":0.25},"seed":7}"#);
        assert!(bad.is_err());
    }
}
