use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mesp::structure::ClassHint;
use mesp::structure::{
    gamma_from_layering, gen_cycle, gen_path, gen_random_chordal, gen_random_connected,
    gen_random_dh, gen_random_tree, hyperbolicity_x2, is_chordal, select_gamma, DhOpMix,
    HYPERBOLICITY_MAX_N,
};
use mesp::{
    all_pairs, is_distance_hereditary, metric_report, parse_edge_list, solve, write_edge_list,
    EnumerationBudget, Error, GammaChoice, LabeledGraph, Scope, SolveResult, SolverConfig,
    Strategy,
};
use serde_json::{json, Value};

/// Minimum eccentricity shortest paths.
#[derive(Parser, Debug)]
#[command(name = "mesp", version)]
struct Cli {
    /// Edge list to read; standard input when omitted.
    #[arg(long, global = true)]
    input: Option<String>,
    /// Worker threads. Results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report metric and class information about a graph.
    Analyze,
    /// Find a shortest path of minimum (or bounded) eccentricity.
    Solve {
        #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
        algorithm: Algorithm,
        /// Window parameter for `dp`: a non-negative integer or `auto`.
        #[arg(long)]
        gamma: Option<Gamma>,
        /// Restrict `dp` or `oracle` to paths starting at this label.
        #[arg(long)]
        source: Option<String>,
    },
    /// Print a generated graph as an edge list.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Attachment density for `chordal`, edge probability for `random`.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algorithm {
    Auto,
    Dh,
    Dp,
    Approx,
    Oracle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Tree,
    Chordal,
    Dh,
    Random,
}

#[derive(Clone, Copy, Debug)]
enum Gamma {
    Auto,
    Fixed(u32),
}

impl std::str::FromStr for Gamma {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "auto" {
            return Ok(Gamma::Auto);
        }
        s.parse()
            .map(Gamma::Fixed)
            .map_err(|_| format!("expected a non-negative integer or `auto`, got `{s}`"))
    }
}

/// Exit status 1: the input was fine but the request cannot be met.
/// Exit status 2: the input or the invocation is malformed.
enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. }
            | Error::WindowBudgetExceeded { .. }
            | Error::NotDistanceHereditary { .. }
            | Error::NotChordal(_)
            | Error::InvariantViolation(_) => Failure::Domain(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.max(1))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => return report(Failure::Usage(e.to_string())),
    };
    match pool.install(|| run(&cli)) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => report(f),
    }
}

fn report(f: Failure) -> ExitCode {
    let (msg, code) = match f {
        Failure::Domain(m) => (m, 1),
        Failure::Usage(m) => (m, 2),
    };
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Generate {
            family,
            n,
            seed,
            density,
        } => generate(*family, *n, *seed, *density),
        Command::Analyze => {
            let lg = read_graph(cli.input.as_deref())?;
            Ok(to_json(analyze(&lg)?))
        }
        Command::Solve {
            algorithm,
            gamma,
            source,
        } => {
            let lg = read_graph(cli.input.as_deref())?;
            Ok(to_json(solve_command(
                &lg,
                *algorithm,
                *gamma,
                source.as_deref(),
            )?))
        }
    }
}

fn to_json(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn read_graph(path: Option<&str>) -> Result<LabeledGraph, Failure> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{p}: {e}")))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
            s
        }
    };
    Ok(parse_edge_list(&text)?)
}

fn budget_override() -> Result<Option<u64>, Failure> {
    match std::env::var("MESP_BUDGET") {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(b) if b > 0 => Ok(Some(b)),
            _ => Err(Failure::Usage(format!(
                "MESP_BUDGET must be a positive integer, got `{v}`"
            ))),
        },
    }
}

fn analyze(lg: &LabeledGraph) -> Result<Value, Failure> {
    let g = &lg.graph;
    let d = all_pairs(g);
    let report = metric_report(&d);
    let (x, y) = report.diametral_pair;
    let hyperbolicity = (g.vertex_count() <= HYPERBOLICITY_MAX_N).then(|| hyperbolicity_x2(&d));
    let gamma = select_gamma(g, &d, ClassHint::Auto)?;
    Ok(json!({
        "command": "analyze",
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "diameter": report.diameter,
        "diametral_pair": [lg.label(x), lg.label(y)],
        "chordal": is_chordal(g).is_chordal(),
        "distance_hereditary": is_distance_hereditary(g, &d),
        "hyperbolicity_x2": hyperbolicity,
        "gamma_layering": gamma_from_layering(g, &d).value,
        "gamma_selected": gamma.value,
        "gamma_method": gamma.method.as_str(),
    }))
}

fn solve_command(
    lg: &LabeledGraph,
    algorithm: Algorithm,
    gamma: Option<Gamma>,
    source: Option<&str>,
) -> Result<Value, Failure> {
    let g = &lg.graph;
    let strategy = match (algorithm, gamma) {
        (Algorithm::Dp, Some(Gamma::Fixed(v))) => Strategy::Dp(GammaChoice::Fixed(v)),
        (Algorithm::Dp, Some(Gamma::Auto) | None) => {
            Strategy::Dp(GammaChoice::Select(ClassHint::Auto))
        }
        (_, Some(_)) => {
            return Err(Failure::Usage(
                "--gamma applies only to --algorithm dp".into(),
            ))
        }
        (Algorithm::Auto, None) => Strategy::Auto,
        (Algorithm::Dh, None) => Strategy::Dh,
        (Algorithm::Approx, None) => Strategy::Approx,
        (Algorithm::Oracle, None) => Strategy::Oracle,
    };
    let source = match source {
        None => None,
        Some(label) => Some(
            lg.id_of(label)
                .ok_or_else(|| Failure::Usage(format!("unknown source vertex `{label}`")))?,
        ),
    };
    let mut config = SolverConfig {
        source,
        ..SolverConfig::default()
    };
    if let Some(b) = budget_override()? {
        config.window_budget = b;
        config.oracle_budget = EnumerationBudget::new(b, b)?;
    }
    let d = all_pairs(g);
    let result = solve(g, &d, strategy, &config)?;
    Ok(result_json(lg, &result))
}

fn result_json(lg: &LabeledGraph, r: &SolveResult) -> Value {
    let label = |v: usize| lg.label(v).to_string();
    let c = &r.certificate;
    let scope = match c.scope {
        Scope::Global => json!({ "kind": "global" }),
        Scope::Pair(s, t) => json!({ "kind": "pair", "source": label(s), "target": label(t) }),
        Scope::Source(s) => json!({ "kind": "source", "source": label(s) }),
    };
    let trace = c.trace.as_ref().map(|t| {
        json!({
            "sweeps": t.sweeps.iter().map(|&(v, e)| json!({ "vertex": label(v), "eccentricity": e })).collect::<Vec<_>>(),
            "pair": [label(t.pair.0), label(t.pair.1)],
            "distance": t.distance,
        })
    });
    json!({
        "command": "solve",
        "n": lg.graph.vertex_count(),
        "m": lg.graph.edge_count(),
        "algorithm": r.algorithm.as_str(),
        "eccentricity": r.eccentricity,
        "path": r.path.vertices().iter().map(|&v| label(v)).collect::<Vec<_>>(),
        "guarantee": c.guarantee.describe(),
        "scope": scope,
        "gamma": c.gamma.map(|e| json!({ "value": e.value, "method": e.method.as_str() })),
        "diametral_pair": c.diametral_pair.map(|(x, y)| [label(x), label(y)]),
        "trace": trace,
        "fallback": c.fallback.map(|f| json!({ "estimated_windows": f.estimated_windows, "budget": f.budget })),
    })
}

fn generate(family: Family, n: usize, seed: u64, density: f64) -> Result<String, Failure> {
    let g = match family {
        Family::Path => gen_path(n),
        Family::Cycle => gen_cycle(n),
        Family::Tree => gen_random_tree(n, seed),
        Family::Chordal => gen_random_chordal(n, density, seed),
        Family::Dh => gen_random_dh(n, DhOpMix::default(), seed),
        Family::Random => gen_random_connected(n, density, seed),
    }?;
    Ok(write_edge_list(&g, None))
}
