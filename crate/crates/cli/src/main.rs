use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::json;

use glm_core::bramble::{bramble_order, check_bramble, verify_certificate, BrambleDoc, DEFAULT_EXACT_LIMIT};
use glm_core::dot::{glm_to_dot, model_to_dot};
use glm_core::graph::{generators, io};
use glm_core::gridlike::{find_glm_with, verify_glm, GlmError, GlmParams, GridLikeMinor};
use glm_core::product::{product_complete_minor, ProductError};
use glm_core::transversal::{
    self, counterexample_graph, random_bichromatic, ColouredGraph, Resampled, Transversal,
};
use glm_core::{crosses_bramble, verify_minor_model, DegeneracyBound, Graph, MinorModel};

const VERIFY_FAILED: u8 = 1;
const PRECONDITION: u8 = 2;
const RETRYABLE: u8 = 3;
const USAGE: u8 = 64;
const MALFORMED: u8 = 65;

#[derive(Parser)]
#[command(name = "glm", version, about = "Grid-like-minors, brambles, transversals and product minors")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, env = "GLM_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance.
    #[command(subcommand)]
    Gen(Gen),
    /// Extract a grid-like-minor from a bramble.
    FindGlm(FindGlm),
    /// Check a certificate.
    #[command(subcommand)]
    Verify(Verify),
    /// K_l model in G x K2 from a grid-like-minor.
    ProductMinor(ProductMinor),
    /// Compute an independent transversal of a coloured graph.
    Transversal(Solve),
    /// Resampling and greedy success across class sizes, as CSV.
    TransversalSweep(Sweep),
}

#[derive(Args)]
struct Out {
    /// Output file; stdout when absent.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Gen {
    /// The l x l grid as an edge list.
    Grid {
        #[arg(long)]
        l: usize,
        #[command(flatten)]
        out: Out,
    },
    /// The crosses bramble of the l x l grid.
    Crosses {
        #[arg(long)]
        l: usize,
        /// Attach an order certificate.
        #[arg(long)]
        certify: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Coloured graph with no independent transversal.
    Counterexample {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// G(n, p) as an edge list.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Args)]
struct FindGlm {
    /// Bramble JSON; its host graph is used.
    #[arg(long)]
    bramble: PathBuf,
    /// Optional graph file that must match the bramble's host.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    l: usize,
    /// Link family size; the threshold from the degeneracy bound when absent.
    #[arg(long)]
    k: Option<usize>,
    /// mader, scaled:C or explicit:D.
    #[arg(long, default_value = "mader")]
    dbound: DegeneracyBound,
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    exact_limit: usize,
    #[arg(long)]
    max_rounds: Option<u64>,
    /// Also write Graphviz output here.
    #[arg(long)]
    dot: Option<PathBuf>,
    #[command(flatten)]
    out: Out,
}

#[derive(Subcommand)]
enum Verify {
    Glm { file: PathBuf },
    Bramble { file: PathBuf },
    MinorModel { file: PathBuf },
    /// A coloured graph and a transversal of it.
    Transversal { coloured: PathBuf, transversal: PathBuf },
}

#[derive(Args)]
struct ProductMinor {
    #[arg(long)]
    glm: PathBuf,
    /// Optional graph file that must match the grid-like-minor's host.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
    #[command(flatten)]
    out: Out,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Method {
    Lll,
    Greedy,
    General,
}

#[derive(Args)]
struct Solve {
    /// Coloured graph JSON.
    coloured: PathBuf,
    #[arg(long, value_enum, default_value = "lll")]
    method: Method,
    /// Degeneracy bound for `lll`.
    #[arg(long, default_value_t = 1)]
    d: usize,
    /// Edge density bound for `general`.
    #[arg(long, default_value_t = 1.0)]
    t: f64,
    #[arg(long)]
    max_rounds: Option<u64>,
    #[command(flatten)]
    out: Out,
}

#[derive(Args)]
struct Sweep {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 1)]
    nmin: usize,
    #[arg(long)]
    nmax: usize,
    #[arg(long, default_value_t = 10)]
    trials: u64,
    #[command(flatten)]
    out: Out,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("glm: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let seed = cli.seed;
    match cli.command {
        Command::Gen(g) => gen(g, seed),
        Command::FindGlm(f) => find(f, seed),
        Command::Verify(v) => verify(v),
        Command::ProductMinor(p) => product(p),
        Command::Transversal(s) => solve(s, seed),
        Command::TransversalSweep(s) => sweep(s, seed),
    }
}

fn read(path: &FsPath) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(USAGE, format!("{}: {e}", path.display())))
}

fn read_json<T: DeserializeOwned>(path: &FsPath) -> Result<T, Failure> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| Failure::new(MALFORMED, format!("{}: {e}", path.display())))
}

fn read_graph(path: &FsPath) -> Result<Graph, Failure> {
    io::parse_any(&read(path)?).map_err(|e| Failure::new(MALFORMED, format!("{}: {e}", path.display())))
}

fn check_host(path: Option<&PathBuf>, host: &Graph) -> Outcome {
    if let Some(p) = path {
        if &read_graph(p)? != host {
            return Err(Failure::new(
                PRECONDITION,
                format!("{} differs from the certificate's host graph", p.display()),
            ));
        }
    }
    Ok(())
}

fn write(out: &Out, text: &str) -> Outcome {
    match &out.out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::new(USAGE, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_file(path: &FsPath, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::new(USAGE, format!("{}: {e}", path.display())))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn gen(g: Gen, seed: u64) -> Outcome {
    match g {
        Gen::Grid { l, out } => write(&out, &io::write_edge_list(&generators::grid(l))),
        Gen::Crosses { l, certify, out } => {
            if l == 0 {
                return Err(Failure::new(USAGE, "--l must be positive"));
            }
            let b = crosses_bramble(l);
            let cert = certify.then(|| bramble_order(&b, DEFAULT_EXACT_LIMIT));
            write(&out, &to_json(&b.to_doc(cert)))
        }
        Gen::Counterexample { r, d, n, out } => {
            let cg = counterexample_graph(r, d, n).map_err(|e| Failure::new(USAGE, e))?;
            write(&out, &to_json(&cg))
        }
        Gen::Random { n, p, out } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Failure::new(USAGE, "--p must lie in [0, 1]"));
            }
            write(&out, &io::write_edge_list(&generators::random_gnp(n, p, seed)))
        }
    }
}

fn glm_code(e: &GlmError) -> u8 {
    if e.is_retryable() {
        RETRYABLE
    } else if e.is_precondition() || matches!(e, GlmError::Minor(_)) {
        PRECONDITION
    } else {
        VERIFY_FAILED
    }
}

fn find(f: FindGlm, seed: u64) -> Outcome {
    let doc: BrambleDoc = read_json(&f.bramble)?;
    let b = doc.bramble().map_err(|e| {
        let code = if e.is_input_error() { MALFORMED } else { PRECONDITION };
        Failure::new(code, format!("bramble: {e}"))
    })?;
    check_host(f.graph.as_ref(), b.graph())?;
    let params = GlmParams {
        k_override: f.k,
        seed,
        exact_limit: f.exact_limit,
        max_rounds: f.max_rounds,
        ..GlmParams::default()
    };
    let run = find_glm_with(&b, f.l, f.dbound, &params)
        .map_err(|e| Failure::new(glm_code(&e), e.to_string()))?;
    verify_glm(&run.glm).map_err(|e| Failure::new(VERIFY_FAILED, e.to_string()))?;
    if let Some(dot) = &f.dot {
        write_file(dot, &glm_to_dot(&run.glm))?;
    }
    eprintln!("k = {}, {}", run.k, serde_json::to_string(&run.branch).expect("serializable"));
    write(&f.out, &to_json(&run.glm))
}

/// Prints the machine report on stdout and the reason on stderr.
fn report(kind: &str, result: Result<(), String>) -> Outcome {
    let valid = result.is_ok();
    let reason = result.as_ref().err().cloned();
    println!("{}", json!({ "kind": kind, "valid": valid, "reason": reason }));
    match result {
        Ok(()) => Ok(()),
        Err(reason) => Err(Failure::new(VERIFY_FAILED, format!("{kind} invalid: {reason}"))),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TransversalDoc {
    General { resampled: Resampled },
    Resampled(Resampled),
    Plain(Transversal),
}

fn verify(v: Verify) -> Outcome {
    match v {
        Verify::Glm { file } => {
            let glm: GridLikeMinor = read_json(&file)?;
            report("glm", verify_glm(&glm).map_err(|e| e.to_string()))
        }
        Verify::Bramble { file } => {
            let doc: BrambleDoc = read_json(&file)?;
            let g = doc.graph().map_err(|e| Failure::new(MALFORMED, e.to_string()))?;
            let result = match check_bramble(&g, &doc.elements) {
                Err(e) if e.is_input_error() => return Err(Failure::new(MALFORMED, e.to_string())),
                Err(e) => Err(e.to_string()),
                Ok(()) => match (&doc.certificate, doc.bramble()) {
                    (Some(cert), Ok(b)) => verify_certificate(&b, cert).map_err(|e| e.to_string()),
                    (_, Err(e)) => Err(e.to_string()),
                    (None, Ok(_)) => Ok(()),
                },
            };
            report("bramble", result)
        }
        Verify::MinorModel { file } => {
            let m: MinorModel = read_json(&file)?;
            report("minor-model", verify_minor_model(&m).map_err(|e| e.to_string()))
        }
        Verify::Transversal { coloured, transversal } => {
            let cg: ColouredGraph = read_json(&coloured)?;
            let t = match read_json::<TransversalDoc>(&transversal)? {
                TransversalDoc::General { resampled: r } | TransversalDoc::Resampled(r) => r.transversal,
                TransversalDoc::Plain(t) => t,
            };
            report("transversal", transversal::verify_transversal(&cg, &t).map_err(|e| e.to_string()))
        }
    }
}

fn product(p: ProductMinor) -> Outcome {
    let glm: GridLikeMinor = read_json(&p.glm)?;
    check_host(p.graph.as_ref(), &glm.graph)?;
    let model = product_complete_minor(&glm).map_err(|e| {
        let code = match e {
            ProductError::InvalidGlm(_) => VERIFY_FAILED,
            _ => PRECONDITION,
        };
        Failure::new(code, e.to_string())
    })?;
    if let Some(dot) = &p.dot {
        write_file(dot, &model_to_dot(&model))?;
    }
    write(&p.out, &to_json(&model))
}

fn solve(s: Solve, seed: u64) -> Outcome {
    let cg: ColouredGraph = read_json(&s.coloured)?;
    let rounds = s.max_rounds.unwrap_or_else(|| transversal::default_max_rounds(&cg));
    let fail = |e: transversal::TransversalError| {
        let code = if e.is_retryable() { RETRYABLE } else { PRECONDITION };
        Failure::new(code, e.to_string())
    };
    let text = match s.method {
        Method::Lll => to_json(&transversal::transversal_lll(&cg, s.d, seed, rounds).map_err(fail)?),
        Method::General => to_json(&transversal::transversal_general(&cg, s.t, seed, rounds).map_err(fail)?),
        Method::Greedy => match transversal::transversal_greedy(&cg) {
            Some(t) => to_json(&t),
            None => return Err(Failure::new(PRECONDITION, "greedy found no transversal")),
        },
    };
    write(&s.out, &text)
}

fn sweep(s: Sweep, seed: u64) -> Outcome {
    if s.nmin > s.nmax {
        return Err(Failure::new(USAGE, "--nmin exceeds --nmax"));
    }
    let mut csv = String::from("r,d,n,seed,algorithm,rounds,found\n");
    for n in s.nmin.max(1)..=s.nmax {
        for trial in 0..s.trials {
            let trial_seed = seed.wrapping_add(trial);
            let cg = random_bichromatic(s.r, n, s.d, trial_seed);
            let max_rounds = transversal::default_max_rounds(&cg);
            let (rounds, found) = match transversal::resample(&cg, trial_seed, max_rounds) {
                Some((_, rounds)) => (rounds, true),
                None => (max_rounds, false),
            };
            csv.push_str(&format!("{},{},{n},{trial_seed},lll,{rounds},{found}\n", s.r, s.d));
            let found = transversal::transversal_greedy(&cg).is_some();
            csv.push_str(&format!("{},{},{n},{trial_seed},greedy,0,{found}\n", s.r, s.d));
        }
    }
    write(&s.out, &csv)
}
