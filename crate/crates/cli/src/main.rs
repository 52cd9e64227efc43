//! `dpm`: construct, certify, dualize and color discrete pseudomanifolds.
//!
//! Graphs travel as canonical JSON on stdin/stdout so commands compose in
//! pipelines. Exit status is 0 on success, 1 when a check comes out
//! negative, and 2 on malformed input or usage.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dpm_core::arithmetic::{
    barycentric_refinement, cartesian_simplex_product, cross_polytope, product_dimension_report,
    sphere_chromatic_prediction, sphere_from_spec, suspension, zykov_join, SphereSpec,
};
use dpm_core::coloring::{
    check_bounds, chromatic_number_exact, dsatur_coloring, forest_coloring, greedy_coloring, table1_report,
    verify_coloring, Chromatic, ChromaticValue, Coloring, Decomposition, SolverOptions,
};
use dpm_core::duality::{classify_complementary_dual, complementary_dual, dual_graph, fisk_join_check, fisk_variety};
use dpm_core::graph::cliques::clique_number;
use dpm_core::graph::families;
use dpm_core::recognition::{certify, is_pseudomanifold};
use dpm_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BUDGET_VAR: &str = "PM_TIME_BUDGET_SECS";
const DEFAULT_BUDGET_SECS: f64 = 30.0;

#[derive(Parser)]
#[command(name = "dpm", version, about = "Discrete pseudomanifold toolkit")]
struct Cli {
    /// Write the primary output here instead of standard output.
    #[arg(short, long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    /// Worker threads for library calls.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Reproduce sequential witnesses exactly in parallel searches.
    #[arg(long, global = true, default_value_t = true, action = clap::ArgAction::Set, value_name = "BOOL")]
    deterministic: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph.
    #[command(subcommand)]
    Construct(Construct),
    /// Zykov join of two graphs.
    Join { left: PathBuf, right: PathBuf },
    /// Cartesian simplex product of two graphs.
    Product { left: PathBuf, right: PathBuf },
    /// Barycentric refinement.
    Refine(Input),
    /// Join with two fresh isolated vertices.
    Suspend(Input),
    /// Certify as a pseudomanifold.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Dimension to test; defaults to the clique dimension.
        #[arg(long, allow_hyphen_values = true)]
        dim: Option<i32>,
    },
    /// Chromatic number.
    Chromatic {
        #[command(flatten)]
        input: Input,
        /// Run the exact solver instead of reporting clique and greedy bounds.
        #[arg(long)]
        exact: bool,
    },
    /// Produce a proper coloring.
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
    },
    /// Facet adjacency graph of a pure graph.
    Dual(Input),
    /// Common neighborhood of a vertex set.
    Codual {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertex labels.
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<String>,
        /// Emit the classification instead of the graph.
        #[arg(long)]
        classify: bool,
    },
    /// Odd part of a pseudomanifold.
    Fisk {
        #[command(flatten)]
        input: Input,
        /// Compare the odd part of a join against the join formula.
        #[arg(long, value_name = "OTHER")]
        join_check: Option<PathBuf>,
    },
    /// Evaluate the chromatic bounds that apply.
    Bounds {
        #[command(flatten)]
        input: Input,
        /// Sphere factor as comma-separated cycle lengths.
        #[arg(long, value_name = "CYCLES", requires = "remainder")]
        sphere_spec: Option<String>,
        /// Suspensions applied to the sphere factor.
        #[arg(long, default_value_t = 0, requires = "sphere_spec")]
        suspend: usize,
        /// Graph joined to the sphere factor.
        #[arg(long, value_name = "FILE", requires = "sphere_spec")]
        remainder: Option<PathBuf>,
    },
    /// Tabulated reports.
    #[command(subcommand)]
    Report(Report),
}

#[derive(Args)]
struct Input {
    /// Graph file in JSON or edge-list form; `-` or absent reads stdin.
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Construct {
    /// Join of cycles, suspended `--suspend` times.
    Sphere {
        #[arg(long, value_delimiter = ',', value_name = "N,...")]
        cycles: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        suspend: usize,
    },
    /// Join of `k + 1` copies of two points.
    CrossPolytope {
        #[arg(long, allow_hyphen_values = true)]
        k: i32,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    /// Cycle of length `n` coned off by a hub.
    Wheel {
        #[arg(long)]
        n: usize,
    },
    Hypercube {
        #[arg(long)]
        q: usize,
    },
    /// Erdős–Rényi graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum Report {
    /// Sphere-join chromatic table with recomputed entries.
    Table1,
    /// Closed-form sphere chromatic number against the exact value.
    Sphere {
        #[arg(long, value_delimiter = ',', value_name = "N,...")]
        cycles: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        suspend: usize,
    },
    /// Measured dimension of a simplex product.
    Product { left: PathBuf, right: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Greedy,
    Forest,
}

/// Failure modes mapped onto the exit-code contract.
enum Failure {
    Input(String),
    Negative,
}

impl From<dpm_core::Error> for Failure {
    fn from(e: dpm_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    output: Option<PathBuf>,
    opts: SolverOptions,
}

impl Ctx {
    /// Graph-producing commands emit only the canonical JSON.
    fn emit_graph(&self, g: &Graph) -> Outcome {
        self.emit(&g.to_json())
    }

    fn emit(&self, text: &str) -> Outcome {
        match &self.output {
            Some(path) => fs::write(path, text)?,
            None => io::stdout().write_all(text.as_bytes())?,
        }
        Ok(())
    }

    /// Analysis commands: JSON to the output file, or ahead of the summary
    /// on stdout when there is none.
    fn emit_analysis(&self, json: &str, summary: &[String]) -> Outcome {
        let mut json = json.trim_end().to_string();
        json.push('\n');
        let mut out = io::stdout().lock();
        match &self.output {
            Some(path) => fs::write(path, json)?,
            None => out.write_all(json.as_bytes())?,
        }
        for line in summary {
            writeln!(out, "{line}")?;
        }
        Ok(())
    }
}

fn read_graph(path: Option<&Path>) -> Result<Graph, Failure> {
    let text = match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?
        }
        _ => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    Ok(Graph::parse(&text)?)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("value serializes")
}

fn budget_from_env() -> Result<Duration, Failure> {
    match std::env::var(BUDGET_VAR) {
        Err(_) => Ok(Duration::from_secs_f64(DEFAULT_BUDGET_SECS)),
        Ok(raw) => raw
            .trim()
            .parse::<f64>()
            .ok()
            .and_then(|s| Duration::try_from_secs_f64(s).ok())
            .ok_or_else(|| {
                Failure::Input(format!(
                    "{BUDGET_VAR} must be a nonnegative number of seconds, got {raw:?}"
                ))
            }),
    }
}

fn configure_jobs(jobs: Option<usize>) -> Outcome {
    let Some(n) = jobs else {
        return Ok(());
    };
    if n == 0 {
        return Err(Failure::Input("--jobs must be at least 1".into()));
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Input(e.to_string()))?;
    Ok(())
}

fn construct(which: Construct) -> Result<Graph, Failure> {
    Ok(match which {
        Construct::Sphere { cycles, suspend } => sphere_from_spec(&SphereSpec::new(cycles, suspend)?),
        Construct::CrossPolytope { k } => cross_polytope(k)?,
        Construct::Cycle { n } => families::cycle(n)?,
        Construct::Complete { n } => families::complete(n),
        Construct::Path { n } => families::path(n),
        Construct::Wheel { n } => families::wheel(n)?,
        Construct::Hypercube { q } => families::hypercube(q),
        Construct::Random { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Failure::Input(format!("--p must lie in [0, 1], got {p}")));
            }
            random_graph(n, p, seed)
        }
    })
}

fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels = families::default_labels(n);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    Graph::build(labels, edges).expect("distinct default labels")
}

fn chromatic_text(x: &Chromatic) -> String {
    match x {
        Chromatic::Exact { value, .. } => value.to_string(),
        Chromatic::Bounded { lower, upper, .. } => format!("{lower}..{upper}"),
    }
}

fn coloring_summary(g: &Graph, c: &Coloring) -> Vec<String> {
    vec![format!(
        "colors: {}, proper: {}",
        c.distinct_colors(),
        verify_coloring(g, c)
    )]
}

fn run(cli: Cli) -> Outcome {
    configure_jobs(cli.jobs)?;
    let mut opts = SolverOptions::with_budget(budget_from_env()?);
    opts.deterministic = cli.deterministic;
    let ctx = Ctx {
        output: cli.output,
        opts,
    };
    match cli.command {
        Command::Construct(which) => ctx.emit_graph(&construct(which)?),
        Command::Join { left, right } => {
            let (g, h) = (read_graph(Some(&left))?, read_graph(Some(&right))?);
            ctx.emit_graph(&zykov_join(&g, &h))
        }
        Command::Product { left, right } => {
            let (g, h) = (read_graph(Some(&left))?, read_graph(Some(&right))?);
            ctx.emit_graph(&cartesian_simplex_product(&g, &h)?)
        }
        Command::Refine(input) => ctx.emit_graph(&barycentric_refinement(&read_graph(input.input.as_deref())?)?),
        Command::Suspend(input) => ctx.emit_graph(&suspension(&read_graph(input.input.as_deref())?)),
        Command::Verify { input, dim } => {
            let g = read_graph(input.input.as_deref())?;
            let cert = match dim {
                Some(d) => is_pseudomanifold(&g, d),
                None => certify(&g),
            };
            let mut summary = cert.explain(&g);
            if let Some(w) = &cert.witness {
                summary.push(format!("witness path: [{}], reason: {}", w.path.join(", "), w.reason));
            }
            ctx.emit_analysis(&cert.to_json(), &summary)?;
            if cert.is_accept() {
                Ok(())
            } else {
                Err(Failure::Negative)
            }
        }
        Command::Chromatic { input, exact } => {
            let g = read_graph(input.input.as_deref())?;
            let x = if exact {
                chromatic_number_exact(&g, &ctx.opts)
            } else {
                let witness = dsatur_coloring(&g);
                let (lower, upper) = (clique_number(&g), witness.distinct_colors());
                if lower == upper {
                    Chromatic::Exact { value: lower, witness }
                } else {
                    Chromatic::Bounded { lower, upper, witness }
                }
            };
            if let Some(path) = &ctx.output {
                fs::write(path, to_json(&x) + "\n")?;
            }
            println!("{}", chromatic_text(&x));
            if exact && x.exact().is_none() {
                eprintln!("time budget exhausted; value lies in the printed interval");
            }
            Ok(())
        }
        Command::Color { input, method } => {
            let g = read_graph(input.input.as_deref())?;
            let c = match method {
                Method::Exact => chromatic_number_exact(&g, &ctx.opts).witness().clone(),
                Method::Greedy => greedy_coloring(&g, g.labels())?,
                Method::Forest => {
                    let cert = certify(&g);
                    if !cert.is_accept() {
                        for line in cert.explain(&g) {
                            println!("{line}");
                        }
                        return Err(Failure::Negative);
                    }
                    forest_coloring(&g, &cert)?
                }
            };
            ctx.emit_analysis(&c.to_json(), &coloring_summary(&g, &c))
        }
        Command::Dual(input) => ctx.emit_graph(&dual_graph(&read_graph(input.input.as_deref())?)?.to_graph()),
        Command::Codual {
            input,
            vertices,
            classify,
        } => {
            let g = read_graph(input.input.as_deref())?;
            if !classify {
                return ctx.emit_graph(&complementary_dual(&g, &vertices)?);
            }
            let c = classify_complementary_dual(&g, &vertices)?;
            let summary = vec![
                format!("class: {}", to_json(&c.class)),
                format!("vertices: {}", c.dual.len()),
            ];
            ctx.emit_analysis(&to_json(&c), &summary)
        }
        Command::Fisk { input, join_check } => {
            let g = read_graph(input.input.as_deref())?;
            match join_check {
                None => {
                    let rec = fisk_variety(&g)?;
                    let summary = vec![format!(
                        "odd simplices: {}, odd part: {} vertices, {} edges",
                        rec.odd_simplices.len(),
                        rec.subgraph.len(),
                        rec.subgraph.edge_count()
                    )];
                    ctx.emit_analysis(&to_json(&rec), &summary)
                }
                Some(other) => {
                    let h = read_graph(Some(&other))?;
                    let check = fisk_join_check(&g, &h)?;
                    let summary = vec![
                        format!("odd part of the join: {} vertices", check.join_variety.subgraph.len()),
                        format!("formula side: {} vertices", check.formula_side.len()),
                        format!("sides equal: {}", check.sides_equal),
                    ];
                    // both readings are shown; a mismatch is not a failure
                    ctx.emit_analysis(&to_json(&check), &summary)
                }
            }
        }
        Command::Bounds {
            input,
            sphere_spec,
            suspend,
            remainder,
        } => {
            let decomposition = match (sphere_spec, remainder) {
                (Some(cycles), Some(rem)) => Some(Decomposition {
                    sphere: SphereSpec::parse(&cycles, suspend)?,
                    remainder: read_graph(Some(&rem))?,
                }),
                _ => None,
            };
            let g = match (&decomposition, &input.input) {
                (Some(dec), None) => zykov_join(&sphere_from_spec(&dec.sphere), &dec.remainder),
                _ => read_graph(input.input.as_deref())?,
            };
            let report = check_bounds(&g, decomposition.as_ref(), &ctx.opts)?;
            let value = match report.chromatic {
                ChromaticValue::Exact(x) => x.to_string(),
                ChromaticValue::Interval { lower, upper } => format!("{lower}..{upper}"),
            };
            let mut summary = vec![format!("dimension: {}, chromatic number: {value}", report.dimension)];
            for b in &report.applicable_bounds {
                let status = match b.holds {
                    Some(true) => "holds",
                    Some(false) => "VIOLATED",
                    None => "undecided",
                };
                summary.push(format!(
                    "{} ({}) {}: {status}",
                    b.name,
                    to_json(&b.kind).trim_matches('"'),
                    b.value
                ));
            }
            ctx.emit_analysis(&report.to_json(), &summary)?;
            if report.any_violated() {
                Err(Failure::Negative)
            } else {
                Ok(())
            }
        }
        Command::Report(Report::Table1) => {
            let report = table1_report(&ctx.opts);
            if let Some(path) = &ctx.output {
                fs::write(path, report.to_json() + "\n")?;
            }
            print!("{}", report.render_text());
            Ok(())
        }
        Command::Report(Report::Sphere { cycles, suspend }) => {
            let spec = SphereSpec::new(cycles, suspend)?;
            let pred = sphere_chromatic_prediction(&spec);
            let exact = chromatic_number_exact(&sphere_from_spec(&spec), &ctx.opts);
            let fmt = |v: Option<usize>| v.map_or("none".to_string(), |x| x.to_string());
            let summary = vec![
                format!("{spec}: dimension {}", pred.dimension),
                format!(
                    "closed form: {}, coloring argument: {}, exact: {}",
                    fmt(pred.printed),
                    fmt(pred.proof_trace),
                    chromatic_text(&exact)
                ),
                format!("divergent: {}", pred.divergent),
            ];
            ctx.emit_analysis(&to_json(&pred), &summary)
        }
        Command::Report(Report::Product { left, right }) => {
            let (g, h) = (read_graph(Some(&left))?, read_graph(Some(&right))?);
            let r = product_dimension_report(&g, &h)?;
            let summary = vec![
                format!(
                    "factors of dimension {} and {}, product has {} vertices",
                    r.left_dimension, r.right_dimension, r.vertices
                ),
                format!(
                    "measured dimension {}, certified at {}",
                    r.measured_dimension,
                    r.certified_dimension.map_or("none".to_string(), |d| d.to_string())
                ),
                format!(
                    "matches sum: {}, matches sum plus one: {}",
                    r.matches_sum, r.matches_sum_plus_one
                ),
            ];
            ctx.emit_analysis(&to_json(&r), &summary)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("dpm: {msg}");
            ExitCode::from(2)
        }
    }
}
