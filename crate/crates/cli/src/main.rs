//! `movdom`: compute domination invariants, build join/corona products and
//! run the claim harness from the command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 the requested invariant
//! does not exist for the graph, 3 at least one claim failed validation.

mod render;

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use movdom::harness::{Budget, Claim, Harness};
use movdom::{corona, edgelist, gamma, gamma_m1, gamma_m2, join, make_family, Graph, ReplacementMode, SolverResult};

const EXIT_USAGE: u8 = 1;
const EXIT_NOT_EXISTS: u8 = 2;
const EXIT_CLAIM_FAILED: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "movdom", version, about = "Exact domination and movable domination numbers of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute gamma, gamma-m1 or gamma-m2 with an optimal witness.
    Compute(ComputeArgs),
    /// Build a join or corona product and write it as an edge list.
    Build(BuildArgs),
    /// Check whether a given set is dominating, 1-movable or 2-movable.
    Check(CheckArgs),
    /// Validate the closed-form claims over the default instance pools.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Named family, e.g. path:4, cycle:5, complete:3, star:4, complete_bipartite:2,3.
    #[arg(long)]
    family: Option<String>,
    /// Edge-list file ("-" reads standard input).
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Invariant {
    Gamma,
    GammaM1,
    GammaM2,
}

impl Invariant {
    fn name(self) -> &'static str {
        match self {
            Invariant::Gamma => "gamma",
            Invariant::GammaM1 => "gamma-m1",
            Invariant::GammaM2 => "gamma-m2",
        }
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Mode {
    #[default]
    Literal,
    Distinct,
}

impl From<Mode> for ReplacementMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Literal => ReplacementMode::Literal,
            Mode::Distinct => ReplacementMode::Distinct,
        }
    }
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[arg(value_enum)]
    invariant: Invariant,
    #[command(flatten)]
    source: Source,
    /// Whether the two replacement vertices of a pair swap may coincide.
    #[arg(long, value_enum, default_value_t)]
    mode: Mode,
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Product {
    Join,
    Corona,
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[arg(value_enum)]
    product: Product,
    /// Left factor: family:<spec> or an edge-list path.
    #[arg(long)]
    left: String,
    /// Right factor: family:<spec> or an edge-list path.
    #[arg(long)]
    right: String,
    /// Edge-list destination; without it the product goes to standard output
    /// with the layout as a comment line.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Layout sidecar path (default: <output>.layout.json).
    #[arg(long, requires = "output")]
    layout: Option<PathBuf>,
    /// Emit Graphviz DOT instead of an edge list.
    #[arg(long)]
    dot: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    Dominating,
    OneMovable,
    TwoMovable,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(value_enum)]
    property: Property,
    #[command(flatten)]
    source: Source,
    /// Comma-separated vertex indices.
    #[arg(long, value_delimiter = ',', required = true)]
    set: Vec<usize>,
    #[arg(long, value_enum, default_value_t)]
    mode: Mode,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Run every claim (the default when no --claim is given).
    #[arg(long, conflicts_with = "claim")]
    all: bool,
    /// Claim identifier, e.g. theorem-3.3; repeatable.
    #[arg(long)]
    claim: Vec<String>,
    /// Largest factor / enumerated graph order in the pools.
    #[arg(long, default_value_t = Budget::default().max_order)]
    max_order: usize,
    /// Largest product order solved by the product claims.
    #[arg(long, default_value_t = Budget::default().max_product_order)]
    max_product_order: usize,
    /// Dominating sets sampled per corona.
    #[arg(long, default_value_t = Budget::default().samples)]
    samples: usize,
    /// 2-movable sets sampled per corona and mode.
    #[arg(long, default_value_t = Budget::default().movable_samples)]
    movable_samples: usize,
    #[arg(long, default_value_t = Budget::default().seed)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

/// An error that maps onto exit code 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn read_edge_list(path: &Path) -> Result<Graph, Failure> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?
    };
    edgelist::parse(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load(source: &Source) -> Result<Graph, Failure> {
    match (&source.family, &source.input) {
        (Some(spec), _) => Ok(make_family(spec)?),
        (None, Some(path)) => read_edge_list(path),
        (None, None) => Err(Failure("one of --family or --input is required".into())),
    }
}

/// `family:<spec>` or a path.
fn load_factor(source: &str) -> Result<Graph, Failure> {
    match source.strip_prefix("family:") {
        Some(spec) => Ok(make_family(spec)?),
        None => read_edge_list(Path::new(source)),
    }
}

fn compute(args: &ComputeArgs) -> Result<u8, Failure> {
    let g = load(&args.source)?;
    let mode = ReplacementMode::from(args.mode);
    let result = match args.invariant {
        Invariant::Gamma => gamma(&g)?,
        Invariant::GammaM1 => gamma_m1(&g)?,
        Invariant::GammaM2 => gamma_m2(&g, mode)?,
    };
    let mode = (args.invariant == Invariant::GammaM2).then_some(mode);
    if args.json {
        println!("{}", render::compute_json(args.invariant.name(), mode, &g, &result));
    } else {
        print!("{}", render::compute_text(args.invariant.name(), mode, &g, &result));
    }
    Ok(match result {
        SolverResult::Found { .. } => 0,
        SolverResult::NotExists => EXIT_NOT_EXISTS,
    })
}

fn build(args: &BuildArgs) -> Result<u8, Failure> {
    let left = load_factor(&args.left)?;
    let right = load_factor(&args.right)?;
    let (product, layout) = match args.product {
        Product::Join => {
            let (g, layout) = join(&left, &right)?;
            (g, render::Layout::Join(layout))
        }
        Product::Corona => {
            let (g, layout) = corona(&left, &right)?;
            (g, render::Layout::Corona(layout))
        }
    };
    let kind = match args.product {
        Product::Join => "join",
        Product::Corona => "corona",
    };
    let sidecar = render::layout_json(kind, &args.left, &args.right, &product, &layout);
    let body = if args.dot {
        product.to_dot()
    } else if args.output.is_some() {
        edgelist::write(&product, &[format!("{kind} of {} and {}", args.left, args.right)])
    } else {
        edgelist::write(
            &product,
            &[format!("{kind} of {} and {}", args.left, args.right), format!("layout: {sidecar}")],
        )
    };
    match &args.output {
        Some(path) => {
            fs::write(path, body).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            let layout_path = args.layout.clone().unwrap_or_else(|| {
                let mut p = path.clone().into_os_string();
                p.push(".layout.json");
                PathBuf::from(p)
            });
            fs::write(&layout_path, format!("{sidecar}\n"))
                .map_err(|e| Failure(format!("{}: {e}", layout_path.display())))?;
        }
        None => print!("{body}"),
    }
    Ok(0)
}

fn check(args: &CheckArgs) -> Result<u8, Failure> {
    let g = load(&args.source)?;
    let set: movdom::VertexSet = args.set.iter().copied().collect();
    if let Some(&v) = args.set.iter().find(|&&v| v >= g.order()) {
        return Err(Failure(format!("vertex {v} is out of range for {} vertices", g.order())));
    }
    let mode = ReplacementMode::from(args.mode);
    let verdict = match args.property {
        Property::Dominating => None,
        Property::OneMovable => Some(movdom::is_1movable_dominating(&g, set)?),
        Property::TwoMovable => Some(movdom::is_2movable_dominating(&g, set, mode)?),
    };
    let holds = match &verdict {
        None => movdom::is_dominating(&g, set),
        Some(v) => v.is_certified(),
    };
    let name = match args.property {
        Property::Dominating => "dominating",
        Property::OneMovable => "1-movable",
        Property::TwoMovable => "2-movable",
    };
    let mode = (args.property == Property::TwoMovable).then_some(mode);
    if args.json {
        println!("{}", render::check_json(name, mode, set, holds, verdict.as_ref()));
    } else {
        print!("{}", render::check_text(name, mode, set, holds, verdict.as_ref()));
    }
    Ok(if holds { 0 } else { EXIT_NOT_EXISTS })
}

fn verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let claims: Vec<Claim> = if args.claim.is_empty() {
        Claim::ALL.to_vec()
    } else {
        args.claim.iter().map(|c| c.parse::<Claim>()).collect::<Result<_, _>>()?
    };
    let budget = Budget {
        max_order: args.max_order,
        max_product_order: args.max_product_order,
        samples: args.samples,
        movable_samples: args.movable_samples,
        seed: args.seed,
    };
    let harness = Harness::default();
    let reports: Vec<_> = claims.iter().map(|&c| harness.run_claim(c, &budget)).collect();
    if args.json {
        println!("{}", render::verify_json(&budget, &reports));
    } else {
        print!("{}", render::verify_text(&reports));
    }
    Ok(if reports.iter().all(|r| r.passed()) { 0 } else { EXIT_CLAIM_FAILED })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let outcome = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Build(a) => build(a),
        Command::Check(a) => check(a),
        Command::Verify(a) => verify(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
