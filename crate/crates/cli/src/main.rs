//! `multirel`: evaluate multirelation expressions, compute fixpoints, check
//! and hunt laws, replay stored counterexamples and check finite algebras.
//!
//! Exit codes: 0 success or verdict as expected, 1 refutation or mismatch,
//! 2 usage error, 3 engine failure.

use std::collections::HashMap;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use multirel::fixpoint::{FixOp, FixpointError};
use multirel::laws::{
    self, check_algebra, check_law, hunt, parse_law_text, parse_term, AxiomSet, CheckError, Expected, FiniteAlgebra,
    Law, LawModel, RelModel, Verdict,
};
use multirel::space::{SearchMode, DEFAULT_SEED};
use multirel::{MultiRelation, RelationJson, Universe};

#[derive(Parser)]
#[command(name = "multirel", version, about = "Finite multirelations and their laws")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression over bound multirelations.
    Eval(EvalArgs),
    /// Compute a least or greatest fixpoint.
    Fixpoint(FixpointArgs),
    /// Check a catalog law, an ad-hoc law, or the whole catalog.
    Check(CheckArgs),
    /// Search for a counterexample on growing universes.
    Hunt(HuntArgs),
    /// List the law catalog.
    Catalog(CatalogArgs),
    /// Replay the stored counterexamples.
    Repro(ReproArgs),
    /// Check a finite algebra given by operation tables.
    Algebra(AlgebraArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Literal,
}

#[derive(Args)]
struct EvalArgs {
    /// Comma-separated element labels, e.g. `a,b`.
    #[arg(long)]
    universe: Option<String>,
    #[arg(long)]
    expr: String,
    /// `name=VALUE` where VALUE is a literal such as `<{(a,{})}>` or a file.
    #[arg(long = "bind", value_name = "NAME=VALUE")]
    bindings: Vec<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct FixpointArgs {
    #[arg(long, value_parser = ["star", "omega", "infinity", "nabla", "star_binary", "omega_binary"])]
    op: String,
    #[arg(long)]
    universe: Option<String>,
    /// Literal or file.
    #[arg(long)]
    input: String,
    /// Second argument of the binary operators.
    #[arg(long)]
    rhs: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Enumerate when the space allows, otherwise sample.
    Auto,
    Exhaustive,
    Sampled,
}

#[derive(Args)]
struct CheckArgs {
    /// Name of a catalog law.
    #[arg(long, conflicts_with_all = ["expr", "all"])]
    law: Option<String>,
    /// Law text such as `z || z <= z => (x || y).z = (x.z) || (y.z)`.
    #[arg(long, conflicts_with = "all")]
    expr: Option<String>,
    /// Run the whole catalog.
    #[arg(long)]
    all: bool,
    /// Only catalog laws whose name starts with this prefix (with --all).
    #[arg(long, requires = "all")]
    filter: Option<String>,
    /// Largest universe size; every size from 1 up is searched.
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, value_enum, default_value = "auto")]
    mode: Mode,
    #[arg(long, default_value_t = laws::check::DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct HuntArgs {
    #[arg(long, conflicts_with = "expr")]
    law: Option<String>,
    #[arg(long)]
    expr: Option<String>,
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    #[arg(long, default_value_t = laws::check::DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct CatalogArgs {
    /// One JSON object per line instead of text.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    filter: Option<String>,
}

#[derive(Args)]
struct ReproArgs {
    #[arg(long, conflicts_with = "name")]
    all: bool,
    #[arg(long)]
    name: Option<String>,
    /// Print each check, not just the outcome.
    #[arg(long, short)]
    verbose: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Axioms {
    CMonoid,
    CTrioid,
}

#[derive(Args)]
struct AlgebraArgs {
    /// JSON tables; the builtin 4-element algebra when omitted.
    #[arg(long)]
    file: Option<String>,
    #[arg(long, value_enum, default_value = "c-trioid")]
    axioms: Axioms,
    /// Print the algebra as JSON and exit.
    #[arg(long)]
    print: bool,
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure { code: 2, message: message.to_string() }
}

fn engine(message: impl ToString) -> Failure {
    Failure { code: 3, message: message.to_string() }
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Self {
        match e {
            CheckError::TooLarge { .. } => usage(e),
            CheckError::Eval(laws::EvalError::Rel(_)) | CheckError::Rel(_) => engine(e),
            CheckError::Eval(_) => usage(e),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Fixpoint(a) => cmd_fixpoint(a),
        Command::Check(a) => cmd_check(a),
        Command::Hunt(a) => cmd_hunt(a),
        Command::Catalog(a) => cmd_catalog(a),
        Command::Repro(a) => cmd_repro(a),
        Command::Algebra(a) => cmd_algebra(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_universe(labels: &str) -> Result<Universe, Failure> {
    Universe::new(labels.split(',').map(str::trim)).map_err(usage)
}

fn is_literal(value: &str) -> bool {
    let v = value.trim_start();
    v.starts_with('<') || v.starts_with('{') || v.starts_with('∅')
}

/// Reads a literal or a file holding a literal or relation JSON. A JSON file
/// carries its own universe, which must agree with `universe` if given.
fn read_relation(value: &str, universe: Option<&Universe>) -> Result<MultiRelation, Failure> {
    let text = if is_literal(value) {
        value.to_string()
    } else {
        fs::read_to_string(value).map_err(|e| usage(format!("cannot read `{value}`: {e}")))?
    };
    if text.trim_start().starts_with("{\"") || text.trim_start().starts_with("{ \"") {
        let json: RelationJson = serde_json::from_str(&text).map_err(|e| usage(format!("`{value}`: {e}")))?;
        return match universe {
            Some(u) => json.into_relation_over(u),
            None => json.into_relation(),
        }
        .map_err(usage);
    }
    let u = universe.ok_or_else(|| usage(format!("`{value}` is a literal; pass --universe")))?;
    MultiRelation::parse_literal(u, text.trim()).map_err(usage)
}

/// Universe from the flag, else from the first JSON file among `values`.
fn resolve_universe(flag: Option<&str>, values: &[&str]) -> Result<Universe, Failure> {
    if let Some(labels) = flag {
        return parse_universe(labels);
    }
    for v in values {
        if !is_literal(v) {
            return Ok(read_relation(v, None)?.universe().clone());
        }
    }
    Err(usage("no universe: pass --universe or bind a JSON file"))
}

fn print_relation(r: &MultiRelation, format: Format) {
    match format {
        Format::Json => println!("{}", r.to_json_string()),
        Format::Literal => println!("{r}"),
    }
}

fn cmd_eval(a: EvalArgs) -> Result<u8, Failure> {
    let term = parse_term(&a.expr).map_err(usage)?;
    let mut pairs = Vec::new();
    for b in &a.bindings {
        let (name, value) = b.split_once('=').ok_or_else(|| usage(format!("binding `{b}` is not NAME=VALUE")))?;
        pairs.push((name.trim().to_string(), value.to_string()));
    }
    let values: Vec<&str> = pairs.iter().map(|(_, v)| v.as_str()).collect();
    let u = resolve_universe(a.universe.as_deref(), &values)?;
    let mut env = HashMap::new();
    for (name, value) in &pairs {
        env.insert(name.clone(), read_relation(value, Some(&u))?);
    }
    let out = laws::eval_term(&term, &u, &env).map_err(|e| match e {
        laws::EvalError::Rel(multirel::RelError::UniverseMismatch) => usage(e),
        laws::EvalError::Rel(_) => engine(e),
        _ => usage(e),
    })?;
    print_relation(&out, a.format);
    Ok(0)
}

fn cmd_fixpoint(a: FixpointArgs) -> Result<u8, Failure> {
    let op = FixOp::from_name(&a.op).ok_or_else(|| usage(format!("unknown operator `{}`", a.op)))?;
    if op.is_binary() != a.rhs.is_some() {
        return Err(usage(if op.is_binary() { "--rhs is required for binary operators" } else { "--rhs is only for binary operators" }));
    }
    let mut values = vec![a.input.as_str()];
    values.extend(a.rhs.as_deref());
    let u = resolve_universe(a.universe.as_deref(), &values)?;
    let r = read_relation(&a.input, Some(&u))?;
    let s = a.rhs.as_deref().map(|v| read_relation(v, Some(&u))).transpose()?;
    let result = op.run(&r, s.as_ref()).map_err(|e| match e {
        FixpointError::Rel(_) | FixpointError::Space(_) => usage(e),
        _ => engine(e),
    })?;
    println!("{}", serde_json::to_string(&result).expect("result serializes"));
    Ok(0)
}

fn law_from(name: Option<&str>, expr: Option<&str>) -> Result<Law, Failure> {
    match (name, expr) {
        (Some(n), None) => laws::find_law(n).ok_or_else(|| usage(format!("no catalog law named `{n}`"))),
        (None, Some(text)) => {
            let (hypotheses, conclusion) = parse_law_text(text).map_err(usage)?;
            Ok(Law {
                name: "expr".into(),
                hypotheses,
                conclusion,
                expected: Expected::Valid,
                anchor: String::new(),
                model: LawModel::Relations,
            })
        }
        _ => Err(usage("pass exactly one of --law or --expr")),
    }
}

fn mode_at(law: &Law, n: usize, a: &CheckArgs) -> Result<SearchMode, Failure> {
    let sampled = SearchMode::Sampled { samples: a.samples, seed: a.seed };
    Ok(match a.mode {
        _ if n == 1 => SearchMode::Exhaustive,
        Mode::Exhaustive => SearchMode::Exhaustive,
        Mode::Sampled => sampled,
        Mode::Auto => {
            let m = RelModel::of_size(n).map_err(usage)?;
            if laws::check::assignment_count(law, &m)? <= laws::check::EXHAUSTIVE_LIMIT {
                SearchMode::Exhaustive
            } else {
                sampled
            }
        }
    })
}

fn cmd_check(a: CheckArgs) -> Result<u8, Failure> {
    if a.all {
        let opts = laws::SuiteOptions {
            n: a.n,
            exhaustive: !matches!(a.mode, Mode::Sampled),
            samples: a.samples,
            seed: a.seed,
            filter: a.filter.clone(),
            ..laws::SuiteOptions::default()
        };
        let mut mismatches = 0;
        for law in laws::catalog().iter().filter(|l| opts.filter.as_deref().is_none_or(|p| l.name.starts_with(p))) {
            let entry = laws::run_law(law, &opts)?;
            mismatches += usize::from(entry.mismatch);
            println!("{}", entry.line());
        }
        println!("seed {} mismatches {mismatches}", a.seed);
        return Ok(u8::from(mismatches > 0));
    }
    let law = law_from(a.law.as_deref(), a.expr.as_deref())?;
    if a.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let mut verdicts = Vec::new();
    if law.model.covers_algebra() {
        verdicts.push(check_law(&law, &FiniteAlgebra::builtin(), SearchMode::Exhaustive)?);
    }
    if law.model.covers_relations() {
        for n in 1..=a.n {
            let mode = mode_at(&law, n, &a)?;
            let v = check_law(&law, &RelModel::of_size(n).map_err(usage)?, mode)?;
            let stop = v.is_refuted();
            verdicts.push(v);
            if stop {
                break;
            }
        }
    }
    let verdict = verdicts.iter().find(|v| v.is_refuted()).or(verdicts.last()).expect("some model checked");
    println!("{}", verdict.line(&law.name));
    if let Verdict::Inconclusive(space) | Verdict::Holds(space) = verdict {
        eprintln!(
            "{}: {} assignments, {} admitted{}",
            space.model,
            space.assignments,
            space.admitted,
            space.seed.map(|s| format!(", seed {s}")).unwrap_or_default()
        );
    }
    let as_expected = match law.expected {
        Expected::Valid => !verdict.is_refuted(),
        Expected::Refuted => verdict.is_refuted(),
    };
    // ad-hoc expressions are expected to hold, so a refutation exits 1 either way
    Ok(u8::from(!as_expected))
}

fn cmd_hunt(a: HuntArgs) -> Result<u8, Failure> {
    let law = law_from(a.law.as_deref(), a.expr.as_deref())?;
    let result = hunt(&law, a.max_n, a.samples, a.seed)?;
    println!("{}", result.verdict.line(&law.name));
    eprintln!("searched up to n={}, seed {}", result.n, a.seed);
    Ok(u8::from(result.verdict.is_refuted()))
}

fn cmd_catalog(a: CatalogArgs) -> Result<u8, Failure> {
    for law in laws::catalog().iter().filter(|l| a.filter.as_deref().is_none_or(|p| l.name.starts_with(p))) {
        if a.json {
            println!("{}", serde_json::to_string(&law.to_json()).expect("law serializes"));
        } else {
            let expected = match law.expected {
                Expected::Valid => "valid",
                Expected::Refuted => "refuted",
            };
            println!("{:<24} {:<8} {}", law.name, expected, law.text());
        }
    }
    Ok(0)
}

fn cmd_repro(a: ReproArgs) -> Result<u8, Failure> {
    let items = match (a.all, a.name) {
        (true, None) => laws::repro_all(),
        (false, Some(n)) => laws::repro_item(&n).map(|i| vec![i]),
        _ => return Err(usage("pass --all or --name")),
    }
    .map_err(|e| match e {
        laws::ReproError::Unknown(_) => usage(e),
        _ => engine(e),
    })?;
    let mut passed = 0;
    for item in &items {
        let lines = item.lines();
        if a.verbose {
            lines.iter().for_each(|l| println!("{l}"));
        } else {
            println!("{}", lines[0]);
        }
        passed += usize::from(item.outcome() == laws::ReproOutcome::Pass);
    }
    println!("{passed}/{} passed", items.len());
    Ok(u8::from(passed != items.len()))
}

fn cmd_algebra(a: AlgebraArgs) -> Result<u8, Failure> {
    let alg = match &a.file {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read `{path}`: {e}")))?;
            FiniteAlgebra::from_json_str(&text).map_err(usage)?
        }
        None => FiniteAlgebra::builtin(),
    };
    if a.print {
        println!("{}", serde_json::to_string_pretty(&alg.to_json()).expect("algebra serializes"));
        return Ok(0);
    }
    let axioms = match a.axioms {
        Axioms::CMonoid => AxiomSet::CMonoid,
        Axioms::CTrioid => AxiomSet::CTrioid,
    };
    let report = check_algebra(&alg, axioms)?;
    for (name, v) in &report.axioms {
        println!("{}", v.line(name));
    }
    for (name, v) in &report.refutations {
        println!("{}", v.line(name));
    }
    let holds = report.axioms.iter().all(|(_, v)| v.holds());
    println!("{} {}", if holds { "AXIOMS HOLD" } else { "AXIOMS FAIL" }, report.algebra);
    Ok(u8::from(!holds))
}
