//! Command-line interface: graph ingestion, spectral analysis, centrality
//! scores, random-graph generation, batch experiments, and the coordination
//! game.
//!
//! Outputs go to `--output` when given, otherwise to `$LECNET_OUTPUT_DIR`
//! under a default file name, otherwise to stdout. Identical invocations
//! produce byte-identical files. Exit codes: 2 for usage errors (clap),
//! 1 for data errors with line-numbered diagnostics where available.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use lecnet::econ::{self, EconScenario, ThetaSpec};
use lecnet::export;
use lecnet::graph::{Graph, ParseOptions};
use lecnet::lec::{self, OrderPolicy, OrderRationale};
use lecnet::randnet::{self, GenSpec};
use lecnet::spectral::Spectrum;
use lecnet::stats::{self, MeasureSpec, SummarySpec};

const OUTPUT_DIR_ENV: &str = "LECNET_OUTPUT_DIR";

#[derive(Parser)]
#[command(
    name = "lecnet",
    version,
    about = "Laplacian eigenvector centrality and network analysis toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues and cumulative spectrum of the graph Laplacian
    Spectrum(SpectrumArgs),
    /// Laplacian eigenvector centrality scores
    Lec(LecArgs),
    /// Centrality measures as one wide table
    Centrality(CentralityArgs),
    /// Suggest an LEC order from the spectrum
    Order(OrderArgs),
    /// Generate seeded random graphs as edge-list files
    Gen(GenArgs),
    /// Equilibrium actions of the coordination game
    Equilibrium(EquilibriumArgs),
    /// Targeting gains and the optimal single-agent intervention
    Target(TargetArgs),
    /// Public-information disclosure set
    Disclose(DiscloseArgs),
    /// Batch experiments over generated graphs (long-format table)
    Experiment(ExperimentArgs),
    /// Bundled Florentine marriage network outputs
    FlorentineDemo(FlorentineDemoArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file (stdout when omitted and LECNET_OUTPUT_DIR is unset)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Input edge-list file
    #[arg(long)]
    input: PathBuf,
    /// Also dump the full eigenvector matrix (CSV) to this path
    #[arg(long)]
    eigenvectors: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct LecArgs {
    #[arg(long)]
    input: PathBuf,
    /// Explicit LEC order r
    #[arg(long, conflicts_with_all = ["pct", "threshold"])]
    order: Option<usize>,
    /// Proportional rule: order = ceil(pct/100 * n)
    #[arg(long, conflicts_with = "threshold")]
    pct: Option<f64>,
    /// Cumulative rule: smallest order reaching this eigenvalue fraction
    #[arg(long)]
    threshold: Option<f64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct CentralityArgs {
    #[arg(long)]
    input: PathBuf,
    /// Measures (repeatable), e.g. degree, eigenvector, eigenvector-mean1,
    /// katz:0.8, power:0.8, diffusion:7, plec:20, plec-cum:0.5, lec:3,
    /// closeness, betweenness, glec-degree. Default: the full bundle.
    #[arg(long = "measure")]
    measures: Vec<String>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct OrderArgs {
    #[arg(long)]
    input: PathBuf,
    /// largest_gap | cumulative:<threshold> | proportional:<pct>
    #[arg(long)]
    policy: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct GenArgs {
    /// er | ba | clustered | star | complete | path | core-periphery
    #[arg(long)]
    model: String,
    /// Node count
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// ER edge probability
    #[arg(long)]
    p: Option<f64>,
    /// BA edges per arriving node
    #[arg(long)]
    m: Option<usize>,
    /// Hub count for the core-periphery family
    #[arg(long)]
    k: Option<usize>,
    /// Clustered model: number of clusters
    #[arg(long, default_value_t = 5)]
    clusters: usize,
    /// Clustered model: nodes per cluster
    #[arg(long, default_value_t = 50)]
    n_per: usize,
    /// Clustered model: within-cluster edge probability
    #[arg(long, default_value_t = 0.1)]
    p_in: f64,
    /// Clustered model: rewire probability
    #[arg(long, default_value_t = 0.05)]
    rewire: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of graphs (seeds seed..seed+reps)
    #[arg(long, default_value_t = 1)]
    reps: usize,
    /// Output file (reps=1) or directory (reps>1)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EquilibriumArgs {
    #[arg(long)]
    input: PathBuf,
    /// Coordination strength
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// uniform | eigvec:<k> | unit:<i>
    #[arg(long, default_value = "uniform")]
    theta: String,
    /// Scenario JSON ({"beta":..,"theta":..,"beta_tilde":..,"targets":[..]});
    /// overrides --beta/--theta
    #[arg(long, conflicts_with_all = ["beta", "theta"])]
    scenario: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct TargetArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// Feasible target labels, comma-separated (default: all nodes)
    #[arg(long)]
    targets: Option<String>,
    /// Scenario JSON; its beta and target set override the flags
    #[arg(long, conflicts_with_all = ["beta", "targets"])]
    scenario: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct DiscloseArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    #[arg(long = "beta-tilde", default_value_t = 0.0)]
    beta_tilde: f64,
    /// Scenario JSON; its beta and beta_tilde override the flags
    #[arg(long, conflicts_with_all = ["beta", "beta_tilde"])]
    scenario: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ExperimentArgs {
    /// er | ba
    #[arg(long)]
    model: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of graphs (seeds seed..seed+reps)
    #[arg(long, default_value_t = 1)]
    reps: usize,
    /// Comma-separated measures (same grammar as `centrality --measure`)
    #[arg(long, default_value = "plec:20,degree")]
    measures: String,
    /// Comma-separated summaries: cumulative, percentile, corr-pearson,
    /// corr-spearman, corr-kendall
    #[arg(long, default_value = "cumulative,corr-kendall")]
    summaries: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct FlorentineDemoArgs {
    /// Output directory (default: LECNET_OUTPUT_DIR or the working directory)
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Lec(a) => cmd_lec(a),
        Command::Centrality(a) => cmd_centrality(a),
        Command::Order(a) => cmd_order(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Equilibrium(a) => cmd_equilibrium(a),
        Command::Target(a) => cmd_target(a),
        Command::Disclose(a) => cmd_disclose(a),
        Command::Experiment(a) => cmd_experiment(a),
        Command::FlorentineDemo(a) => cmd_florentine(a),
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading edge list {}", path.display()))?;
    Graph::parse_edge_list(&text, &ParseOptions::default())
        .with_context(|| format!("parsing {}", path.display()))
}

fn spectrum_of(g: &Graph) -> Result<Spectrum> {
    Spectrum::compute(&g.laplacian()).map_err(|e| anyhow!("eigendecomposition: {e}"))
}

/// Route content to --output, else $LECNET_OUTPUT_DIR/<default_name>, else
/// stdout.
fn emit(out: Option<&Path>, default_name: &str, content: &str) -> Result<()> {
    let target: Option<PathBuf> = match out {
        Some(p) => Some(p.to_path_buf()),
        None => std::env::var_os(OUTPUT_DIR_ENV).map(|dir| Path::new(&dir).join(default_name)),
    };
    match target {
        Some(path) => {
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    fs::create_dir_all(parent)
                        .with_context(|| format!("creating {}", parent.display()))?;
                }
            }
            fs::write(&path, content).with_context(|| format!("writing {}", path.display()))?;
            println!("{}", path.display());
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_spectrum(a: SpectrumArgs) -> Result<()> {
    let g = load_graph(&a.input)?;
    let s = spectrum_of(&g)?;
    let content = match a.out.format {
        Format::Csv => export::spectrum_csv(&s),
        Format::Json => export::spectrum_json(&s),
    };
    emit(a.out.output.as_deref(), "spectrum.csv", &content)?;
    if let Some(path) = a.eigenvectors {
        let dump = export::eigenvectors_csv(g.labels(), &s);
        fs::write(&path, dump).with_context(|| format!("writing {}", path.display()))?;
        println!("{}", path.display());
    }
    Ok(())
}

fn cmd_lec(a: LecArgs) -> Result<()> {
    let g = load_graph(&a.input)?;
    let s = spectrum_of(&g)?;
    let sv = match (a.order, a.pct, a.threshold) {
        (Some(r), None, None) => lec::lec(&s, r)?,
        (None, Some(pct), None) => lec::plec_proportional(&s, pct)?,
        (None, None, Some(t)) => lec::plec_cumulative(&s, t)?.1,
        (None, None, None) => bail!("one of --order, --pct, --threshold is required"),
        _ => unreachable!("clap conflicts prevent combinations"),
    };
    let content = match a.out.format {
        Format::Csv => export::score_csv(g.labels(), &sv),
        Format::Json => export::score_json(g.labels(), &sv),
    };
    emit(a.out.output.as_deref(), "lec.csv", &content)
}

/// The default wide bundle: LEC variants plus every classical measure with
/// the standard normalizations.
fn bundle_measures() -> Vec<MeasureSpec> {
    [
        "degree",
        "eigenvector",
        "eigenvector-mean1",
        "katz",
        "power",
        "diffusion:3",
        "diffusion:7",
        "diffusion:10",
        "closeness",
        "betweenness",
        "plec:20",
        "plec-cum:0.5",
        "glec-degree",
    ]
    .iter()
    .map(|t| MeasureSpec::parse(t).expect("bundle specs are valid"))
    .collect()
}

fn cmd_centrality(a: CentralityArgs) -> Result<()> {
    let g = load_graph(&a.input)?;
    let specs: Vec<MeasureSpec> = if a.measures.is_empty() {
        bundle_measures()
    } else {
        a.measures
            .iter()
            .map(|t| MeasureSpec::parse(t).map_err(|e| anyhow!("{e}")))
            .collect::<Result<_>>()?
    };
    let needs_spectrum = specs.iter().any(MeasureSpec::needs_spectrum);
    let spectrum = if needs_spectrum {
        Some(spectrum_of(&g)?)
    } else {
        None
    };
    let mut computed = Vec::new();
    for spec in &specs {
        let sv = spec
            .compute(&g, spectrum.as_ref())
            .map_err(|e| anyhow!("measure {}: {e}", spec.name()))?;
        computed.push((spec.name(), sv));
    }
    let columns: Vec<(String, &lecnet::ScoreVector)> =
        computed.iter().map(|(n, sv)| (n.clone(), sv)).collect();
    let content = match a.out.format {
        Format::Csv => export::scores_wide_csv(g.labels(), &columns),
        Format::Json => export::scores_wide_json(g.labels(), &columns),
    };
    emit(a.out.output.as_deref(), "centrality.csv", &content)
}

fn parse_policy(text: &str) -> Result<OrderPolicy> {
    if text == "largest_gap" {
        return Ok(OrderPolicy::LargestGap);
    }
    if let Some(t) = text.strip_prefix("cumulative:") {
        return Ok(OrderPolicy::Cumulative(t.parse()?));
    }
    if let Some(t) = text.strip_prefix("proportional:") {
        return Ok(OrderPolicy::Proportional(t.parse()?));
    }
    bail!("unknown policy `{text}` (largest_gap | cumulative:<t> | proportional:<pct>)")
}

fn cmd_order(a: OrderArgs) -> Result<()> {
    let g = load_graph(&a.input)?;
    let s = spectrum_of(&g)?;
    let suggestion = lec::suggest_order(&s, parse_policy(&a.policy)?)?;
    let (detail_key, detail_value) = match suggestion.rationale {
        OrderRationale::LargestGap { gap } => ("gap", gap),
        OrderRationale::Cumulative { fraction, .. } => ("fraction", fraction),
        OrderRationale::Proportional { pct } => ("pct", pct),
    };
    let content = match a.out.format {
        Format::Csv => {
            format!(
                "policy,order,{detail_key}\n{},{},{}\n",
                a.policy, suggestion.order, detail_value
            )
        }
        Format::Json => {
            serde_json::to_string_pretty(&serde_json::json!({
                "policy": a.policy,
                "order": suggestion.order,
                detail_key: detail_value,
            }))? + "\n"
        }
    };
    emit(a.out.output.as_deref(), "order.csv", &content)
}

fn cmd_gen(a: GenArgs) -> Result<()> {
    if a.reps == 0 {
        bail!("--reps must be at least 1");
    }
    let deterministic = matches!(
        a.model.as_str(),
        "star" | "complete" | "path" | "core-periphery"
    );
    if deterministic && a.reps != 1 {
        bail!("--reps applies to random models only");
    }
    let out_dir_env = std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from);
    for rep in 0..a.reps {
        let seed = a.seed + rep as u64;
        let (graph, stem) = match a.model.as_str() {
            "er" => {
                let p = a.p.context("--p is required for the er model")?;
                (
                    randnet::erdos_renyi(a.n, p, seed)?,
                    format!("er_n{}_p{}_seed{}", a.n, p, seed),
                )
            }
            "ba" => {
                let m = a.m.context("--m is required for the ba model")?;
                (
                    randnet::barabasi_albert(a.n, m, seed)?,
                    format!("ba_n{}_m{}_seed{}", a.n, m, seed),
                )
            }
            "clustered" => (
                randnet::clustered_er(a.clusters, a.n_per, a.p_in, a.rewire, seed)?,
                format!(
                    "clustered_k{}_n{}_p{}_r{}_seed{}",
                    a.clusters, a.n_per, a.p_in, a.rewire, seed
                ),
            ),
            "star" => (Graph::star(a.n)?, format!("star_n{}", a.n)),
            "complete" => (Graph::complete(a.n)?, format!("complete_n{}", a.n)),
            "path" => (Graph::path(a.n)?, format!("path_n{}", a.n)),
            "core-periphery" => {
                let k = a.k.context("--k is required for core-periphery")?;
                (
                    Graph::core_periphery(a.n, k)?,
                    format!("core_periphery_n{}_k{k}", a.n),
                )
            }
            other => bail!(
                "unknown model `{other}` (er | ba | clustered | star | complete | path | core-periphery)"
            ),
        };
        let content = graph.to_edge_list_string();
        let path = match (&a.output, a.reps) {
            (Some(p), 1) => p.clone(),
            (Some(dir), _) => dir.join(format!("{stem}.edges")),
            (None, _) => out_dir_env
                .clone()
                .unwrap_or_else(|| PathBuf::from("."))
                .join(format!("{stem}.edges")),
        };
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                fs::create_dir_all(parent)?;
            }
        }
        fs::write(&path, &content).with_context(|| format!("writing {}", path.display()))?;
        println!("{}", path.display());
    }
    Ok(())
}

fn cmd_equilibrium(a: EquilibriumArgs) -> Result<()> {
    let g = load_graph(&a.input)?;
    let scenario: EconScenario = match &a.scenario {
        Some(path) => load_scenario(path)?,
        None => EconScenario {
            beta: a.beta,
            theta: ThetaSpec::parse(&a.theta)
                .ok_or_else(|| anyhow!("unknown theta form `{}`", a.theta))?,
            beta_tilde: 0.0,
            targets: None,
        },
    };
    let needs_spectrum = matches!(scenario.theta, ThetaSpec::Eigvec(_));
    let spectrum = if needs_spectrum {
        Some(spectrum_of(&g)?)
    } else {
        None
    };
    let theta = scenario.theta.resolve(g.node_count(), spectrum.as_ref())?;
    let actions = econ::equilibrium(&g, scenario.beta, &theta)?;
    let loss = econ::quadratic_loss(&actions);
    let violation = econ::best_response_check(&g, scenario.beta, &actions, &theta)?;

    let content = match a.out.format {
        Format::Csv => {
            let mut out = format!(
                "# beta={} loss={loss} best_response_violation={violation:e}\n",
                scenario.beta
            );
            out.push_str("label,theta,action\n");
            for (i, label) in g.labels().iter().enumerate() {
                let _ = writeln!(out, "{label},{},{}", theta[i], actions[i]);
            }
            out
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = g
                .labels()
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    serde_json::json!({ "label": l, "theta": theta[i], "action": actions[i] })
                })
                .collect();
            serde_json::to_string_pretty(&serde_json::json!({
                "beta": scenario.beta,
                "loss": loss,
                "best_response_violation": violation,
                "actions": rows,
            }))? + "\n"
        }
    };
    emit(a.out.output.as_deref(), "equilibrium.csv", &content)
}

fn resolve_targets(g: &Graph, spec: Option<&str>) -> Result<Vec<usize>> {
    match spec {
        None => Ok((0..g.node_count()).collect()),
        Some(text) => text
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                g.index_of(t)
                    .ok_or_else(|| anyhow!("unknown node label `{t}`"))
            })
            .collect(),
    }
}

fn load_scenario(path: &Path) -> Result<EconScenario> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading scenario {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing scenario {}", path.display()))
}

fn cmd_target(a: TargetArgs) -> Result<()> {
    let g = load_graph(&a.input)?;
    let s = spectrum_of(&g)?;
    let (beta, targets) = match &a.scenario {
        Some(path) => {
            let scenario = load_scenario(path)?;
            let targets = scenario
                .targets
                .unwrap_or_else(|| (0..g.node_count()).collect());
            (scenario.beta, targets)
        }
        None => (a.beta, resolve_targets(&g, a.targets.as_deref())?),
    };
    let a = TargetArgs { beta, ..a };
    let phi = econ::targeting_scores(&s, a.beta)?;
    let best = econ::optimal_target(&s, a.beta, &targets)?;
    let n = g.node_count() as f64;

    let content = match a.out.format {
        Format::Csv => {
            let mut out = format!(
                "# beta={} optimal={} baseline_loss={n}\n",
                a.beta,
                g.label(best)
            );
            out.push_str("label,feasible,targeting_gain,loss_after_target\n");
            for (i, label) in g.labels().iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    label,
                    targets.contains(&i),
                    phi.scores[i],
                    n - 1.0 - phi.scores[i]
                );
            }
            out
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = g
                .labels()
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    serde_json::json!({
                        "label": l,
                        "feasible": targets.contains(&i),
                        "targeting_gain": phi.scores[i],
                        "loss_after_target": n - 1.0 - phi.scores[i],
                    })
                })
                .collect();
            serde_json::to_string_pretty(&serde_json::json!({
                "beta": a.beta,
                "optimal": g.label(best),
                "baseline_loss": n,
                "targets": rows,
            }))? + "\n"
        }
    };
    emit(a.out.output.as_deref(), "target.csv", &content)
}

fn cmd_disclose(a: DiscloseArgs) -> Result<()> {
    let g = load_graph(&a.input)?;
    let s = spectrum_of(&g)?;
    let a = match &a.scenario {
        Some(path) => {
            let scenario = load_scenario(path)?;
            DiscloseArgs {
                beta: scenario.beta,
                beta_tilde: scenario.beta_tilde,
                ..a
            }
        }
        None => a,
    };
    let disclosed = econ::disclosure_set(&s, a.beta, a.beta_tilde);
    let n = g.node_count() as f64;

    let content = match a.out.format {
        Format::Csv => {
            let mut out = format!(
                "# beta={} beta_tilde={} disclosed_count={}\n",
                a.beta,
                a.beta_tilde,
                disclosed.len()
            );
            out.push_str("statistic,eigenvalue,criterion_value,disclosed\n");
            for k in 0..g.node_count() {
                let lambda = s.lambda(k);
                let value = 1.0 / (2.0 * n) + a.beta * lambda / n;
                let _ = writeln!(out, "{k},{lambda},{value},{}", disclosed.contains(&k));
            }
            out
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = (0..g.node_count())
                .map(|k| {
                    let lambda = s.lambda(k);
                    serde_json::json!({
                        "statistic": k,
                        "eigenvalue": lambda,
                        "criterion_value": 1.0 / (2.0 * n) + a.beta * lambda / n,
                        "disclosed": disclosed.contains(&k),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&serde_json::json!({
                "beta": a.beta,
                "beta_tilde": a.beta_tilde,
                "disclosed": disclosed,
                "statistics": rows,
            }))? + "\n"
        }
    };
    emit(a.out.output.as_deref(), "disclose.csv", &content)
}

fn cmd_experiment(a: ExperimentArgs) -> Result<()> {
    if a.reps == 0 {
        bail!("--reps must be at least 1");
    }
    let specs: Vec<GenSpec> = (0..a.reps)
        .map(|rep| {
            let seed = a.seed + rep as u64;
            match a.model.as_str() {
                "er" => {
                    let p = a.p.context("--p is required for the er model")?;
                    Ok(GenSpec::ErdosRenyi { n: a.n, p, seed })
                }
                "ba" => {
                    let m = a.m.context("--m is required for the ba model")?;
                    Ok(GenSpec::BarabasiAlbert { n: a.n, m, seed })
                }
                other => bail!("unknown model `{other}` (er | ba)"),
            }
        })
        .collect::<Result<_>>()?;
    let measures: Vec<MeasureSpec> = a
        .measures
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| MeasureSpec::parse(t).map_err(|e| anyhow!("{e}")))
        .collect::<Result<_>>()?;
    let summaries: Vec<SummarySpec> = a
        .summaries
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| SummarySpec::parse(t).map_err(|e| anyhow!("{e}")))
        .collect::<Result<_>>()?;

    let rows = stats::batch_experiment(&specs, &measures, &summaries);
    let content = match a.out.format {
        Format::Csv => export::experiment_csv(&rows),
        Format::Json => export::experiment_json(&rows),
    };
    emit(a.out.output.as_deref(), "experiment.csv", &content)
}

/// LEC at the illustration orders plus the classical bundle for the bundled
/// Florentine network.
fn cmd_florentine(a: FlorentineDemoArgs) -> Result<()> {
    let dir = a
        .output
        .or_else(|| std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir)?;
    let g = Graph::florentine();
    let s = spectrum_of(&g)?;

    fs::write(dir.join("florentine.edges"), g.to_edge_list_string())?;

    let orders = [0usize, 1, 3, 6];
    let lec_columns: Vec<(String, lecnet::ScoreVector)> = orders
        .iter()
        .map(|&r| Ok((format!("lec_{r}"), lec::lec(&s, r)?)))
        .collect::<Result<_>>()?;
    let columns: Vec<(String, &lecnet::ScoreVector)> = lec_columns
        .iter()
        .map(|(name, sv)| (name.clone(), sv))
        .collect();
    fs::write(
        dir.join("florentine_lec.csv"),
        export::scores_wide_csv(g.labels(), &columns),
    )?;

    let mut classical = Vec::new();
    for spec in bundle_measures() {
        let sv = spec
            .compute(&g, Some(&s))
            .map_err(|e| anyhow!("measure {}: {e}", spec.name()))?;
        classical.push((spec.name(), sv));
    }
    let columns: Vec<(String, &lecnet::ScoreVector)> = classical
        .iter()
        .map(|(name, sv)| (name.clone(), sv))
        .collect();
    fs::write(
        dir.join("florentine_centrality.csv"),
        export::scores_wide_csv(g.labels(), &columns),
    )?;

    fs::write(
        dir.join("florentine_spectrum.csv"),
        export::spectrum_csv(&s),
    )?;

    for name in [
        "florentine.edges",
        "florentine_lec.csv",
        "florentine_centrality.csv",
        "florentine_spectrum.csv",
    ] {
        println!("{}", dir.join(name).display());
    }
    let medici = g.index_of("Medici").expect("bundled data");
    println!("# Medici lec_1 = {:.4}", lec::lec(&s, 1)?.scores[medici]);
    Ok(())
}
