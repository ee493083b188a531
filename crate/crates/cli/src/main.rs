use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use egonet_core::graph::{read_edge_list, write_edge_list};
use egonet_core::spectral::ego_energies;
use egonet_core::sweep::{self, default_sweep, format_real, uniform_grid, write_sweep};
use egonet_core::{features_all, ClusteringVariant, Error, GenSpec, Graph, Model, ModelParams};

const EXIT_INVALID: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "egonet", version, about = "Matrix energies of egocentric networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a network and write it as an edge list plus manifest
    Generate(GenerateArgs),
    /// Compute per-vertex centralities and egonet energies as CSV
    Analyze(AnalyzeArgs),
    /// Run a parameter sweep and write plot-ready CSVs
    Sweep(SweepArgs),
    /// Print egonet energies of one or all vertices
    Energies(EnergiesArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Er,
    Ws,
    Hk,
    Waxman,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Er => Model::ErdosRenyi,
            ModelArg::Ws => Model::WattsStrogatz,
            ModelArg::Hk => Model::HolmeKim,
            ModelArg::Waxman => Model::Waxman,
        }
    }
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum ClusteringArg {
    #[default]
    Standard,
    Paper,
}

impl From<ClusteringArg> for ClusteringVariant {
    fn from(c: ClusteringArg) -> Self {
        match c {
            ClusteringArg::Standard => ClusteringVariant::Standard,
            ClusteringArg::Paper => ClusteringVariant::Paper,
        }
    }
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long)]
    n: usize,
    /// Edge probability (er) or rewiring probability (ws)
    #[arg(long)]
    p: Option<f64>,
    /// Lattice neighbors (ws)
    #[arg(long, default_value_t = 4)]
    k: usize,
    /// Edges per new vertex (hk)
    #[arg(long, default_value_t = 2)]
    m: usize,
    /// Triangle-closure probability (hk)
    #[arg(long)]
    p_triangle: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, default_value_t = 0.1)]
    beta: f64,
    #[arg(long, env = "EGONET_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Edge-list file
    input: PathBuf,
    /// Output CSV (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    clustering: ClusteringArg,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long)]
    outdir: PathBuf,
    /// Grid points between 0.01 and 1.0
    #[arg(long, default_value_t = sweep::DEFAULT_STEPS)]
    steps: usize,
    #[arg(long, default_value_t = sweep::DEFAULT_REPLICATES)]
    replicates: usize,
    #[arg(long, default_value_t = sweep::DEFAULT_N)]
    n: usize,
    #[arg(long, env = "EGONET_SEED", default_value_t = sweep::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = egonet_core::stats::DEFAULT_BINS)]
    bins: usize,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    jobs: Option<usize>,
    /// Fixed lattice neighbors (ws)
    #[arg(long)]
    k: Option<usize>,
    /// Fixed edges per new vertex (hk)
    #[arg(long)]
    m: Option<usize>,
    /// Fixed distance scale (waxman)
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long, value_enum, default_value_t)]
    clustering: ClusteringArg,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("which").required(true).args(["vertex", "all"]))]
struct EnergiesArgs {
    input: PathBuf,
    #[arg(long)]
    vertex: Option<usize>,
    #[arg(long)]
    all: bool,
}

/// A failure mapped onto the documented exit codes.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) => EXIT_IO,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_IO,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: message.into(),
    }
}

type CliResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(args) => generate(args),
        Command::Analyze(args) => analyze(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Energies(args) => energies(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("egonet: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn required(value: Option<f64>, flag: &str, model: &str) -> Result<f64, Failure> {
    value.ok_or_else(|| invalid(format!("--{flag} is required for model {model}")))
}

fn generate(args: GenerateArgs) -> CliResult {
    let params = match args.model {
        ModelArg::Er => ModelParams::ErdosRenyi {
            p: required(args.p, "p", "er")?,
        },
        ModelArg::Ws => ModelParams::WattsStrogatz {
            k: args.k,
            p: required(args.p, "p", "ws")?,
        },
        ModelArg::Hk => ModelParams::HolmeKim {
            m: args.m,
            p_triangle: required(args.p_triangle, "p-triangle", "hk")?,
        },
        ModelArg::Waxman => ModelParams::Waxman {
            alpha: required(args.alpha, "alpha", "waxman")?,
            beta: args.beta,
        },
    };
    let spec = GenSpec::new(args.n, params, args.seed);
    spec.validate()?;
    let graph = spec.generate()?;

    write_edge_list(&graph, BufWriter::new(File::create(&args.out)?))?;
    let mut manifest = serde_json::to_string_pretty(&spec).map_err(Error::from)?;
    manifest.push('\n');
    std::fs::write(manifest_path(&args.out), manifest)?;
    Ok(())
}

fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

fn load(path: &Path) -> Result<Graph, Failure> {
    read_edge_list(path).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn open_output(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn analyze(args: AnalyzeArgs) -> CliResult {
    let graph = load(&args.input)?;
    let features = features_all(&graph, args.clustering.into())?;
    let mut out = open_output(args.out.as_deref())?;
    writeln!(
        out,
        "vertex,degree,betweenness,closeness_paper,clustering,eigencentrality,graph_energy,randic_energy,laplacian_energy"
    )?;
    for f in &features {
        let e = f.energies;
        let reals = [
            f.betweenness,
            f.closeness,
            f.clustering,
            f.eigencentrality,
            e.graph_energy,
            e.randic_energy,
            e.laplacian_energy,
        ]
        .map(format_real);
        writeln!(out, "{},{},{}", f.vertex, f.degree, reals.join(","))?;
    }
    out.flush()?;
    Ok(())
}

fn run_sweep(args: SweepArgs) -> CliResult {
    let model = Model::from(args.model);
    let mut config = default_sweep(model);
    config.grid = uniform_grid(sweep::GRID_START, sweep::GRID_END, args.steps);
    config.replicates = args.replicates;
    config.n = args.n;
    config.base_seed = args.seed;
    config.bins = args.bins;
    config.clustering = args.clustering.into();
    config.params = match (config.params, args.k, args.m, args.beta) {
        (ModelParams::WattsStrogatz { p, .. }, Some(k), None, None) => ModelParams::WattsStrogatz { k, p },
        (ModelParams::HolmeKim { p_triangle, .. }, None, Some(m), None) => ModelParams::HolmeKim { m, p_triangle },
        (ModelParams::Waxman { alpha, .. }, None, None, Some(beta)) => ModelParams::Waxman { alpha, beta },
        (params, None, None, None) => params,
        _ => {
            return Err(invalid(format!(
                "--k/--m/--beta do not apply to model {model} as given"
            )))
        }
    };

    let result = match args.jobs {
        Some(0) => return Err(invalid("--jobs must be at least 1")),
        Some(jobs) => sweep::run_sweep_with_jobs(&config, jobs)?,
        None => sweep::run_sweep(&config)?,
    };
    write_sweep(&result, &args.outdir)?;
    let failed = result.failures().count();
    if failed > 0 {
        eprintln!("egonet: {failed} instance(s) failed; see manifest.json");
    }
    Ok(())
}

fn energies(args: EnergiesArgs) -> CliResult {
    let graph = load(&args.input)?;
    let vertices: Vec<usize> = match args.vertex {
        Some(v) if v >= graph.order() => {
            return Err(invalid(format!(
                "vertex {v} out of range for a graph with {} vertices",
                graph.order()
            )))
        }
        Some(v) => vec![v],
        None => (0..graph.order()).collect(),
    };
    let mut out = open_output(None)?;
    for v in vertices {
        let e = ego_energies(&graph, v)?;
        writeln!(
            out,
            "{v} {:.12} {:.12} {:.12}",
            e.graph_energy, e.randic_energy, e.laplacian_energy
        )?;
    }
    out.flush()?;
    Ok(())
}
