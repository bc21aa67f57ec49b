mod input;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use cupstack::certificate::{check_certificate, prove_strongly_nonstackable, Certificate};
use cupstack::construct::{
    biwheel_partition, solve_bipartite_paths, solve_power, solve_via_hamilton, tree_path_partition, Plan,
    SolveError,
};
use cupstack::graph::{
    bipartition, find_hamilton_path, graph_power, DEFAULT_VERTEX_BUDGET, MAX_HAMILTON_VERTICES,
};
use cupstack::search::{
    align_supergraph, census_stackable_nonhamiltonian, decide_stackable, decide_t_stackable,
    find_alternating_chain, min_weight, weight_table, Classification, SearchOptions, Status, WeightOutcome,
    DEFAULT_DECIDE_BUDGET, DEFAULT_WEIGHT_BUDGET, MAX_SEARCH_VERTICES,
};
use cupstack::{all_pairs_distances, verify_sequence, Family, MoveSequence, Verdict};

use input::{load_file_or_spec, parse_partition, FamilyParams, GraphInput, Loaded};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_ERROR: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "cupstack",
    version,
    about = "Cup stacking on graphs: solve, decide, certify"
)]
struct Cli {
    /// State budget for searches (per target); defaults depend on the command.
    #[arg(long, global = true, env = "CUPSTACK_BUDGET")]
    budget: Option<u64>,
    /// Largest graph power `solve --method power` will build.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_BUDGET)]
    vertex_budget: usize,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Also write results (and witnesses, plans) into this directory.
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    /// Single worker; output is byte-identical across runs.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a family graph as an edge list.
    Gen {
        /// Family name with named parameters, or a full descriptor.
        #[arg(long)]
        family: String,
        #[command(flatten)]
        params: FamilyParams,
        /// Output file (default: stdout).
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Also write a DOT rendering here.
        #[arg(long)]
        emit_dot: Option<PathBuf>,
    },
    /// Find a winning sequence onto one target.
    Solve {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        target: usize,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Paths as `0,1,2;3,4,5` (bipartite-paths, power).
        #[arg(long)]
        partition: Option<String>,
        /// Base graph for `power`, as a file or descriptor.
        #[arg(long)]
        base: Option<String>,
        /// Exponent for `power`.
        #[arg(long)]
        r: Option<usize>,
        /// Write a DOT rendering with the target highlighted.
        #[arg(long)]
        emit_dot: Option<PathBuf>,
    },
    /// Exhaustive search for one or all targets.
    Decide {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        target: Option<usize>,
        /// Search one target per automorphism class.
        #[arg(long)]
        symmetry: bool,
    },
    /// Minimum total weight of a winning sequence.
    Minweight {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, conflicts_with = "all_targets")]
        target: Option<usize>,
        /// Every target (the default).
        #[arg(long)]
        all_targets: bool,
        /// Print the results JSON instead of a CSV row.
        #[arg(long)]
        json: bool,
    },
    /// Stackable graphs without a Hamilton path, up to `max-n` vertices.
    Census {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Edges of `super` added to `base` so that stackability alternates.
    Chain {
        #[arg(long)]
        base: String,
        #[arg(long = "super")]
        sup: String,
        #[arg(long)]
        length: usize,
    },
    /// Non-stackability certificates, or re-check a saved one.
    Certify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        target: Option<usize>,
        /// Certificate JSON (one object or an array) to validate.
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Check a move sequence against the rules.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        target: usize,
        /// JSON array of moves.
        #[arg(long)]
        moves: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Auto,
    Hamilton,
    BipartitePaths,
    Power,
    Search,
}

struct Ctx {
    budget: Option<u64>,
    vertex_budget: usize,
    out_dir: Option<PathBuf>,
}

impl Ctx {
    fn decide_budget(&self) -> u64 {
        self.budget.unwrap_or(DEFAULT_DECIDE_BUDGET)
    }

    fn weight_budget(&self) -> u64 {
        self.budget.unwrap_or(DEFAULT_WEIGHT_BUDGET)
    }

    fn write(&self, name: &str, contents: &str) -> Result<Option<PathBuf>> {
        let Some(dir) = &self.out_dir else { return Ok(None) };
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let path = dir.join(name);
        fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
        Ok(Some(path))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let workers = if cli.deterministic { Some(1) } else { cli.workers };
    if let Some(w) = workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_ERROR);
        }
    }
    let ctx = Ctx {
        budget: cli.budget,
        vertex_budget: cli.vertex_budget,
        out_dir: cli.out_dir,
    };
    match run(&ctx, cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(value: &impl Serialize) -> Result<String> {
    let text = serde_json::to_string_pretty(value)?;
    emit(&format!("{text}\n"));
    Ok(text)
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::Stackable => EXIT_YES,
        Status::Not => EXIT_NO,
        Status::Unknown => EXIT_UNKNOWN,
    }
}

fn run(ctx: &Ctx, command: Command) -> Result<u8> {
    match command {
        Command::Gen {
            family,
            params,
            out,
            emit_dot,
        } => {
            let spec = params.descriptor(&family)?;
            let family: Family = spec.parse()?;
            let g = cupstack::build_family(&family)?;
            let text = g.to_edge_list();
            match out {
                Some(path) => {
                    fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?
                }
                None => emit(&text),
            }
            if let Some(path) = emit_dot {
                fs::write(&path, g.to_dot(&[]))?;
            }
            Ok(EXIT_YES)
        }
        Command::Solve {
            input,
            target,
            method,
            partition,
            base,
            r,
            emit_dot,
        } => solve(
            ctx,
            &input,
            target,
            method,
            partition.as_deref(),
            base.as_deref(),
            r,
            emit_dot,
        ),
        Command::Decide {
            input,
            target,
            symmetry,
        } => {
            let loaded = input.load()?;
            let g = &loaded.graph;
            match target {
                Some(t) => {
                    let out = decide_t_stackable(g, t, ctx.decide_budget())?;
                    let verdict = verdict_json(ctx, out.target, out.status, None, out.witness.as_ref())?;
                    let text = print_json(&json!({
                        "graph": loaded.name,
                        "explored": out.explored,
                        "memo_hits": out.memo_hits,
                        "verdicts": [verdict],
                    }))?;
                    ctx.write("decide.json", &text)?;
                    Ok(status_code(out.status))
                }
                None => {
                    let options = SearchOptions {
                        budget: ctx.decide_budget(),
                        symmetry,
                    };
                    let res = decide_stackable(g, options)?;
                    let verdicts = res
                        .verdicts
                        .iter()
                        .map(|v| verdict_json(ctx, v.target, v.status, None, v.witness.as_ref()))
                        .collect::<Result<Vec<_>>>()?;
                    let text = print_json(&json!({
                        "graph": loaded.name,
                        "classification": res.classification,
                        "explored": res.explored,
                        "memo_hits": res.memo_hits,
                        "verdicts": verdicts,
                    }))?;
                    ctx.write("decide.json", &text)?;
                    Ok(match res.classification {
                        Classification::Stackable => EXIT_YES,
                        Classification::NonStackable | Classification::StronglyNonStackable => EXIT_NO,
                        Classification::Unknown => EXIT_UNKNOWN,
                    })
                }
            }
        }
        Command::Minweight {
            input,
            target,
            all_targets: _,
            json,
        } => {
            let loaded = input.load()?;
            let rows: Vec<WeightOutcome> = match target {
                Some(t) => vec![min_weight(&loaded.graph, t, ctx.weight_budget())?],
                None => weight_table(&loaded.graph, ctx.weight_budget())?.rows,
            };
            let table = cupstack::search::WeightTable { rows };
            let csv = format!("{}\n", table.csv_row());
            ctx.write("minweight.csv", &csv)?;
            if json {
                let verdicts = table
                    .rows
                    .iter()
                    .map(|r| verdict_json(ctx, r.target, r.status, r.mu, r.witness.as_ref()))
                    .collect::<Result<Vec<_>>>()?;
                let text = print_json(&json!({ "graph": loaded.name, "verdicts": verdicts }))?;
                ctx.write("minweight.json", &text)?;
            } else {
                emit(&csv);
            }
            let worst = table
                .rows
                .iter()
                .map(|r| status_code(r.status))
                .max()
                .unwrap_or(EXIT_YES);
            Ok(worst)
        }
        Command::Census { max_n } => {
            let options = SearchOptions {
                budget: ctx.decide_budget(),
                symmetry: false,
            };
            let census = census_stackable_nonhamiltonian(max_n, options)?;
            let text = print_json(&census)?;
            ctx.write("census.json", &text)?;
            Ok(if census.found.is_empty() {
                EXIT_NO
            } else {
                EXIT_YES
            })
        }
        Command::Chain { base, sup, length } => {
            let base = load_file_or_spec(&base)?;
            let sup = load_file_or_spec(&sup)?;
            let aligned = align_supergraph(&base.graph, &sup.graph)
                .with_context(|| format!("{} does not embed in {}", base.name, sup.name))?;
            let relabeled = !base.graph.is_subgraph_of(&sup.graph);
            let options = SearchOptions {
                budget: ctx.decide_budget(),
                symmetry: false,
            };
            let chain = find_alternating_chain(&base.graph, &aligned, length, options)?;
            let text = print_json(&json!({
                "base": base.name,
                "super": sup.name,
                "super_relabeled": relabeled,
                "super_edges": aligned.edges().collect::<Vec<_>>(),
                "chain": chain,
            }))?;
            ctx.write("chain.json", &text)?;
            Ok(if chain.is_some() { EXIT_YES } else { EXIT_NO })
        }
        Command::Certify { input, target, check } => {
            let loaded = input.load()?;
            let g = &loaded.graph;
            if let Some(path) = check {
                let text =
                    fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                let value: Value = serde_json::from_str(&text)?;
                let certs: Vec<Certificate> = match value {
                    Value::Array(_) => serde_json::from_value(value)?,
                    Value::Object(ref map) if map.contains_key("certificates") => {
                        serde_json::from_value::<Vec<Option<Certificate>>>(map["certificates"].clone())?
                            .into_iter()
                            .flatten()
                            .collect()
                    }
                    _ => vec![serde_json::from_value(value)?],
                };
                let results: Vec<Value> = certs
                    .iter()
                    .map(|c| json!({ "target": c.target(), "valid": check_certificate(g, c) }))
                    .collect();
                let all_valid = !certs.is_empty() && certs.iter().all(|c| check_certificate(g, c));
                print_json(&json!({ "graph": loaded.name, "valid": all_valid, "results": results }))?;
                return Ok(if all_valid { EXIT_YES } else { EXIT_NO });
            }
            let map = prove_strongly_nonstackable(g)?;
            let (covered, certificates): (bool, Value) = match target {
                Some(t) => {
                    let c = map
                        .certificates
                        .get(t)
                        .with_context(|| format!("target {t} out of range"))?;
                    (c.is_some(), json!([c]))
                }
                None => (map.is_complete(), serde_json::to_value(&map.certificates)?),
            };
            let text = print_json(&json!({
                "graph": loaded.name,
                "strongly_non_stackable": map.is_complete(),
                "covered": map.covered(),
                "certificates": certificates,
            }))?;
            ctx.write("certificates.json", &text)?;
            Ok(if covered { EXIT_YES } else { EXIT_NO })
        }
        Command::Verify { input, target, moves } => {
            let loaded = input.load()?;
            let text = fs::read_to_string(&moves).with_context(|| format!("reading {}", moves.display()))?;
            let seq = MoveSequence::from_json(&text).context("parsing moves")?;
            let verdict = verify_sequence(&loaded.graph, target, &seq);
            let failure = match &verdict {
                Verdict::Valid => Value::Null,
                Verdict::Invalid(f) => json!({ "message": f.to_string(), "detail": f }),
            };
            print_json(
                &json!({ "graph": loaded.name, "target": target, "valid": verdict.is_valid(), "failure": failure }),
            )?;
            Ok(if verdict.is_valid() { EXIT_YES } else { EXIT_NO })
        }
    }
}

/// One entry of the results array; with `--out-dir` the witness is written
/// to a file and referenced by path.
fn verdict_json(
    ctx: &Ctx,
    target: usize,
    status: Status,
    mu: Option<u64>,
    witness: Option<&MoveSequence>,
) -> Result<Value> {
    let witness = match witness {
        None => Value::Null,
        Some(w) => match ctx.write(&format!("witness-{target}.json"), &w.to_json())? {
            Some(path) => json!(path.display().to_string()),
            None => serde_json::to_value(w)?,
        },
    };
    Ok(json!({ "target": target, "status": status, "mu": mu, "witness": witness }))
}

#[allow(clippy::too_many_arguments)]
fn solve(
    ctx: &Ctx,
    input: &GraphInput,
    target: usize,
    method: Method,
    partition: Option<&str>,
    base: Option<&str>,
    r: Option<usize>,
    emit_dot: Option<PathBuf>,
) -> Result<u8> {
    let (name, g, outcome) = if method == Method::Power {
        let base = load_file_or_spec(base.context("--method power needs --base")?)?;
        let r = r.context("--method power needs --r")?;
        let pp = match partition {
            Some(text) => parse_partition(&base.graph, text)?,
            None => default_partition(&base)?.context("--method power needs --partition")?,
        };
        let outcome = attempt(solve_power(&base.graph, r, &pp, target, ctx.vertex_budget));
        let g = graph_power(&base.graph, r, ctx.vertex_budget)?;
        (format!("{}^{r}", base.name), g, outcome)
    } else {
        let loaded = input.load()?;
        let outcome = solve_on(ctx, &loaded, target, method, partition)?;
        (loaded.name, loaded.graph, outcome)
    };
    if let Some(path) = emit_dot {
        fs::write(&path, g.to_dot(&[target]))?;
    }
    let (status, moves, plan, method_used, note) = outcome;
    if let Some(m) = &moves {
        if !verify_sequence(&g, target, m).is_valid() {
            bail!("internal error: produced sequence does not verify");
        }
    }
    let text = print_json(&json!({
        "graph": name,
        "target": target,
        "method": method_used,
        "status": status,
        "weight": moves.as_ref().map(MoveSequence::weight),
        "moves": moves,
        "note": note,
    }))?;
    ctx.write("solution.json", &text)?;
    if let Some(plan) = plan {
        ctx.write("plan.json", &serde_json::to_string_pretty(&plan)?)?;
    }
    Ok(status_code(status))
}

type Outcome = (
    Status,
    Option<MoveSequence>,
    Option<Plan>,
    &'static str,
    Option<String>,
);

/// Constructive failures are not proofs of impossibility.
fn attempt(res: Result<cupstack::construct::Solution, SolveError>) -> Outcome {
    match res {
        Ok(sol) => (
            Status::Stackable,
            Some(sol.moves),
            Some(sol.plan.clone()),
            sol.plan.method,
            None,
        ),
        Err(SolveError::ChunkingFailed { grid }) => (
            Status::Unknown,
            None,
            None,
            "power-grids",
            Some(format!("chunking failed for grid {grid:?}")),
        ),
        Err(e) => (Status::Unknown, None, None, "construct", Some(e.to_string())),
    }
}

fn default_partition(loaded: &Loaded) -> Result<Option<cupstack::PathPartition>> {
    if loaded.graph.is_tree() {
        return Ok(Some(tree_path_partition(&loaded.graph)?));
    }
    Ok(None)
}

fn solve_on(
    ctx: &Ctx,
    loaded: &Loaded,
    target: usize,
    method: Method,
    partition: Option<&str>,
) -> Result<Outcome> {
    let g = &loaded.graph;
    if target >= g.n() {
        bail!("target {target} out of range for {} vertices", g.n());
    }
    let d = all_pairs_distances(g);
    let hamilton = |path: Option<Vec<usize>>| -> Result<Outcome> {
        match solve_via_hamilton(g, &d, target, path.as_deref(), MAX_HAMILTON_VERTICES) {
            Ok(moves) => Ok((Status::Stackable, Some(moves), None, "hamilton", None)),
            Err(SolveError::NoHamiltonPath) => Ok((
                Status::Unknown,
                None,
                None,
                "hamilton",
                Some("no Hamilton path".into()),
            )),
            Err(e) => Err(e.into()),
        }
    };
    let search = || -> Result<Outcome> {
        let out = decide_t_stackable(g, target, ctx.decide_budget())?;
        Ok((out.status, out.witness, None, "search", None))
    };
    let bipartite = || -> Result<Outcome> {
        let pp = match (partition, &loaded.family) {
            (Some(text), _) => parse_partition(g, text)?,
            (None, Some(Family::Biwheel { l, removed })) => biwheel_partition(*l, removed, target)?,
            (None, _) if g.is_tree() => tree_path_partition(g)?,
            _ => bail!("--method bipartite-paths needs --partition"),
        };
        match solve_bipartite_paths(g, &d, &pp, target)? {
            Some(sol) => Ok((
                Status::Stackable,
                Some(sol.moves),
                Some(sol.plan),
                "bipartite-paths",
                None,
            )),
            None => Ok((
                Status::Unknown,
                None,
                None,
                "bipartite-paths",
                Some("a path could not be chunked".into()),
            )),
        }
    };
    match method {
        Method::Hamilton => hamilton(loaded.family.as_ref().and_then(Family::known_hamilton_path)),
        Method::Search => search(),
        Method::BipartitePaths => bipartite(),
        Method::Power => unreachable!("handled by the caller"),
        Method::Auto => {
            if let Some(path) = loaded.family.as_ref().and_then(Family::known_hamilton_path) {
                return hamilton(Some(path));
            }
            if g.n() <= MAX_HAMILTON_VERTICES {
                if let Some(path) = find_hamilton_path(g, MAX_HAMILTON_VERTICES)? {
                    return hamilton(Some(path));
                }
            }
            let structured =
                partition.is_some() || matches!(loaded.family, Some(Family::Biwheel { .. })) || g.is_tree();
            if structured && bipartition(g).is_some() {
                let out = bipartite()?;
                if out.0 == Status::Stackable {
                    return Ok(out);
                }
            }
            if g.n() <= MAX_SEARCH_VERTICES {
                return search();
            }
            Ok((
                Status::Unknown,
                None,
                None,
                "auto",
                Some("no constructive method applies and the graph is too large to search".into()),
            ))
        }
    }
}
