mod input;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ortho_core::claims::{self, ClaimReport, ClaimSpec, Mode};
use ortho_core::mapping::{self, LinearMap, Sampler};
use ortho_core::{hh_values, relations, solvers, Error, NormSpec, RelationId, Tolerance, Vector};
use serde_json::json;

use input::{check_eps, parse_norm, read_matrix, vector_pair};

#[derive(Parser)]
#[command(name = "ortho", version, about = "Hermite-Hadamard integral orthogonality toolkit")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, env = "ORTHO_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true)]
    abs_tol: Option<f64>,
    #[arg(long, global = true)]
    rel_tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an orthogonality relation; exit 0 if it holds, 3 if not.
    Eval {
        relation: String,
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        eps: Option<f64>,
    },
    /// Both HH integrals with their gap and total.
    Hh {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Profile a linear map and check the quantitative conditions at ε.
    Map {
        /// JSON array of rows or CSV.
        #[arg(long)]
        matrix: PathBuf,
        /// Domain norm.
        #[arg(long, default_value = "lp:2")]
        norm: String,
        /// Codomain norm (defaults to the domain norm).
        #[arg(long)]
        codomain: Option<String>,
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long, default_value_t = 4096)]
        samples: usize,
        /// Evaluation budget for the smallest preserving ε.
        #[arg(long, default_value_t = 2048)]
        budget: usize,
    },
    #[command(subcommand)]
    Claims(ClaimsCommand),
    #[command(subcommand)]
    Solve(SolveCommand),
}

#[derive(Args)]
struct PairArgs {
    #[arg(long, default_value = "lp:2")]
    norm: String,
    /// JSON array, e.g. [1,0].
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// JSON file holding {"x": [...], "y": [...]}.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ClaimsCommand {
    /// Run registered claims. Reports go to stdout, a summary table to stderr.
    Run {
        ids: Vec<String>,
        #[arg(long)]
        all: bool,
        /// Override the registered trial count.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List registered claims with their statements.
    List,
}

#[derive(Subcommand)]
enum SolveCommand {
    /// `s` with `x` HH-I orthogonal to `y + s·x`.
    Pencil {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// min over β > 0 of ‖x/β‖² + ‖βy‖².
    Beta {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// min over t of ‖x + t·y‖.
    LineMin {
        #[command(flatten)]
        pair: PairArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Sample,
    Optimize,
    Both,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Markdown,
    Csv,
}

enum Failure {
    Invalid(Error),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonConvergence(_) => Failure::Internal(e.to_string()),
            e => Failure::Invalid(e),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

type Outcome = std::result::Result<ExitCode, Failure>;

fn tolerance(cli: &Cli) -> Result<Tolerance, Error> {
    let d = Tolerance::default();
    Tolerance::new(cli.abs_tol.unwrap_or(d.abs_tol), cli.rel_tol.unwrap_or(d.rel_tol))
}

fn load_pair(p: &PairArgs) -> Result<(NormSpec, Vector, Vector), Error> {
    let norm = parse_norm(&p.norm)?;
    let (x, y) = vector_pair(p.x.as_deref(), p.y.as_deref(), p.file.as_deref())?;
    Ok((norm, x, y))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn eval(cli: &Cli, relation: &str, pair: &PairArgs, eps: Option<f64>) -> Outcome {
    let rel: RelationId = relation.parse()?;
    let eps = eps.map(check_eps).transpose()?;
    let (norm, x, y) = load_pair(pair)?;
    let verdict = relations::evaluate(rel, &norm, &x, &y, eps, tolerance(cli)?)?;
    print_json(&verdict)?;
    Ok(if verdict.holds { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

fn map(
    cli: &Cli,
    matrix: &Path,
    norm: &str,
    codomain: Option<&str>,
    eps: Option<f64>,
    samples: usize,
    budget: usize,
) -> Outcome {
    let eps = eps.map(check_eps).transpose()?;
    let domain = parse_norm(norm)?;
    let codomain = codomain.map(parse_norm).transpose()?.unwrap_or_else(|| domain.clone());
    let g = LinearMap::new(read_matrix(matrix)?, domain, codomain)?;
    let profile = mapping::profile_with(&g, cli.seed)?;
    let preserving = mapping::min_eps_condition_11(&g, budget)?;
    let mut out = json!({
        "profile": profile,
        "min_eps_condition_14": mapping::min_eps_condition_14(&g)?,
        "min_eps_condition_11": preserving,
    });
    if let Some(eps) = eps {
        let sampler = Sampler::new(samples, cli.seed);
        let bounds = mapping::check_bounds_12(&g, eps, &sampler)?;
        let pair = mapping::check_condition_17(&g, eps, &sampler)?;
        for r in [&bounds, &pair] {
            eprintln!("{} at eps {}: {}", r.condition, eps, if r.passes { "PASS" } else { "FAIL" });
        }
        out["bounds"] = serde_json::to_value(&bounds)?;
        out["pair_ratio"] = serde_json::to_value(&pair)?;
    }
    print_json(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn claims_run(cli: &Cli, ids: &[String], all: bool, trials: Option<usize>, mode: ModeArg, format: Format) -> Outcome {
    let ids: Vec<String> = match (all, ids.is_empty()) {
        (true, _) | (false, true) => claims::claim_ids().into_iter().map(String::from).collect(),
        (false, false) => ids.to_vec(),
    };
    let mode = match mode {
        ModeArg::Sample => Mode::Sample,
        ModeArg::Optimize => Mode::Optimize,
        ModeArg::Both => Mode::Both,
    };
    // validate every id before spending time on any of them
    let specs = ids
        .iter()
        .map(|id| {
            let mut s = ClaimSpec::new(id)?.with_seed(cli.seed);
            s.mode = mode;
            Ok(match trials {
                Some(t) => s.with_trials(t),
                None => s,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let mut reports: Vec<ClaimReport> = Vec::new();
    for spec in &specs {
        let r = claims::run_claim(spec)?;
        if format == Format::Json {
            print_json(&r)?;
        }
        reports.push(r);
    }
    let table = claims::render_markdown(&reports);
    match format {
        Format::Json => eprint!("{table}"),
        Format::Markdown => print!("{table}"),
        Format::Csv => print!("{}", claims::render_csv(&reports)),
    }
    Ok(ExitCode::SUCCESS)
}

fn claims_list() -> Outcome {
    for spec in claims::registry_specs() {
        println!("{}\t{}\t{}", spec.id, spec.trials, spec.statement);
    }
    Ok(ExitCode::SUCCESS)
}

fn solve(cli: &Cli, cmd: &SolveCommand) -> Outcome {
    match cmd {
        SolveCommand::Pencil { pair } => {
            let (norm, x, y) = load_pair(pair)?;
            let root = solvers::hh_orthogonal_in_pencil(&norm, &x, &y, tolerance(cli)?)?;
            let w = y.axpy(root.location, &x);
            print_json(&json!({ "root": root, "w": w }))?;
        }
        SolveCommand::Beta { pair } => {
            let (norm, x, y) = load_pair(pair)?;
            let numeric = solvers::beta_functional_numeric(&norm, &x, &y)?;
            let closed_form = solvers::beta_functional_min(&norm, &x, &y)?;
            print_json(&json!({ "numeric": numeric, "closed_form": closed_form }))?;
        }
        SolveCommand::LineMin { pair } => {
            let (norm, x, y) = load_pair(pair)?;
            print_json(&solvers::minimize_norm_on_line(&norm, &x, &y)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Eval { relation, pair, eps } => eval(cli, relation, pair, *eps),
        Command::Hh { pair } => {
            let (norm, x, y) = load_pair(pair)?;
            print_json(&hh_values(&norm, &x, &y, tolerance(cli)?)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Map { matrix, norm, codomain, eps, samples, budget } => {
            map(cli, matrix, norm, codomain.as_deref(), *eps, *samples, *budget)
        }
        Command::Claims(ClaimsCommand::Run { ids, all, trials, mode, format }) => {
            claims_run(cli, ids, *all, *trials, *mode, *format)
        }
        Command::Claims(ClaimsCommand::List) => claims_list(),
        Command::Solve(cmd) => solve(cli, cmd),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
