//! Command-line surface over the workbench library.
//!
//! Exit codes: 0 = affirmative answer, 1 = negative answer with a
//! certificate (not a polymorphism, no colouring, no witness), 2 = usage or
//! file-format error, 3 = resource guard tripped. All structured output is
//! JSON on stdout; `--format text` switches to one-line summaries.
//! Identical invocations produce byte-identical output.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nae_core::avoid::{
    avoided_colours, direct_certificate, find_1_avoiding, inductive_step, sel, AvoidanceCertificate,
};
use nae_core::bits;
use nae_core::chain::{consistency_witness, verify_chain, ChainCheck, MinorChain};
use nae_core::graph::{chromatic_number, clique, exponential, hom_exists, kneser, tensor, Graph};
use nae_core::nae::{hyper_colour, random_hypergraph, verify_hyper_colouring, Hypergraph};
use nae_core::poly::{
    enumerate_polymorphisms, is_polymorphism, make_generator, minor, Generator, MinorMap,
    Polymorphism, Verdict,
};
use nae_core::{Error as CoreError, Limits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Configuration assembled from defaults, `NAE_*` environment variables and
/// command-line flags, in increasing precedence.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub format: Format,
    pub jobs: usize,
    pub seed: u64,
    pub max_check_arity: u32,
    pub enumeration_budget: u64,
    pub solver_vertex_guard: usize,
    pub threshold_override: Option<u64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let limits = Limits::default();
        RunConfig {
            format: Format::Json,
            jobs: 1,
            seed: 0,
            max_check_arity: limits.max_check_arity,
            enumeration_budget: limits.enumeration_budget,
            solver_vertex_guard: limits.solver_vertex_guard,
            threshold_override: None,
        }
    }
}

impl RunConfig {
    fn from_env() -> Result<Self, String> {
        let mut cfg = RunConfig::default();
        fn parse<T: std::str::FromStr>(name: &str) -> Result<Option<T>, String> {
            match std::env::var(name) {
                Ok(s) => s
                    .parse()
                    .map(Some)
                    .map_err(|_| format!("cannot parse {name}={s}")),
                Err(_) => Ok(None),
            }
        }
        if let Ok(s) = std::env::var("NAE_FORMAT") {
            cfg.format = match s.as_str() {
                "json" => Format::Json,
                "text" => Format::Text,
                other => return Err(format!("NAE_FORMAT must be json or text, got {other}")),
            };
        }
        if let Some(v) = parse("NAE_JOBS")? {
            cfg.jobs = v;
        }
        if let Some(v) = parse("NAE_SEED")? {
            cfg.seed = v;
        }
        if let Some(v) = parse("NAE_MAX_CHECK_ARITY")? {
            cfg.max_check_arity = v;
        }
        if let Some(v) = parse("NAE_ENUMERATION_BUDGET")? {
            cfg.enumeration_budget = v;
        }
        if let Some(v) = parse("NAE_SOLVER_VERTEX_GUARD")? {
            cfg.solver_vertex_guard = v;
        }
        if let Some(v) = parse("NAE_THRESHOLD_OVERRIDE")? {
            cfg.threshold_override = Some(v);
        }
        if cfg.jobs == 0
            || cfg.max_check_arity == 0
            || cfg.enumeration_budget == 0
            || cfg.solver_vertex_guard == 0
        {
            return Err("guards and job counts must be positive".to_string());
        }
        Ok(cfg)
    }

    fn limits(&self) -> Limits {
        Limits {
            max_check_arity: self.max_check_arity,
            enumeration_budget: self.enumeration_budget,
            solver_vertex_guard: self.solver_vertex_guard,
            ..Limits::default()
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "nae", version, about = "Promise hypergraph colouring workbench")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker count; all current operations are sequential and output never
    /// depends on it
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized subcommands
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Override the sel(f) fallback threshold (c+1)c^t + c
    #[arg(long, global = true)]
    threshold_override: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Polymorphism tables: check, enumerate, minors, generators
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Avoiding sets: avoided colours, extraction, amplification, selection
    #[command(subcommand)]
    Avoid(AvoidCmd),
    /// Chains of minors: verification and the consistency witness
    #[command(subcommand)]
    Chain(ChainCmd),
    /// Graph substrate: constructions, chromatic number, homomorphisms
    #[command(subcommand)]
    Graph(GraphCmd),
    /// 3-uniform hypergraphs: colouring and generation
    #[command(subcommand)]
    Hyper(HyperCmd),
}

#[derive(Subcommand, Debug)]
enum PolyCmd {
    /// NAE-preservation check; exit 1 with the least violating triple if not
    Check { file: PathBuf },
    /// Stream all NAE-preserving tables of a shape, one JSON object per line
    Enumerate {
        #[arg(long)]
        arity: u32,
        #[arg(long)]
        colors: u8,
    },
    /// Apply a coordinate map to a table
    Minor { file: PathBuf, map: PathBuf },
    /// Build a generator-family table
    #[command(subcommand)]
    Generate(GenerateCmd),
}

#[derive(Subcommand, Debug)]
enum GenerateCmd {
    /// f(x) = sigma(x_coord)
    Dictator {
        #[arg(long)]
        arity: u32,
        #[arg(long)]
        colors: u8,
        #[arg(long)]
        coord: usize,
        /// sigma(0),sigma(1)
        #[arg(long, value_delimiter = ',')]
        sigma: Vec<u8>,
    },
    /// f(x) = iota(x restricted to coords)
    Junta {
        #[arg(long)]
        arity: u32,
        #[arg(long)]
        colors: u8,
        #[arg(long, value_delimiter = ',')]
        coords: Vec<usize>,
        /// 2^|coords| colours, pattern-indexed (bit k = value of coords[k])
        #[arg(long, value_delimiter = ',')]
        iota: Vec<u8>,
    },
    /// Post-compose a table with an injective colour map
    Recolour {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        colors: u8,
        /// new colour of old colour b at position b
        #[arg(long, value_delimiter = ',')]
        map: Vec<u8>,
    },
}

#[derive(Subcommand, Debug)]
enum AvoidCmd {
    /// Avoided colours of a caller-supplied coordinate set
    Colors {
        file: PathBuf,
        /// 1-based coordinates, comma-separated
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
    },
    /// Extract a 1-avoiding set of size at most c
    Find1 { file: PathBuf },
    /// One amplification step from c+1 disjoint C-avoiding sets
    Step {
        file: PathBuf,
        /// Repeatable: one disjoint set per occurrence
        #[arg(long = "sets", action = clap::ArgAction::Append)]
        sets: Vec<String>,
        /// The avoided colour set C
        #[arg(long, value_delimiter = ',')]
        avoided: Vec<u8>,
    },
    /// t(f), the greedy family and sel(f)
    Sel { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ChainCmd {
    /// Check every link and audit every function
    Verify { file: PathBuf },
    /// Lex-least (i, j, coordinate) consistency witness
    Witness { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum GraphCmd {
    /// Kneser graph KG(n, k)
    Kneser { n: usize, k: usize },
    /// Complete graph K_n
    Clique { n: usize },
    /// Tensor (categorical) product of two graph files
    Tensor { left: PathBuf, right: PathBuf },
    /// Exponential graph K_n^{K_m}
    Expo { n: usize, m: usize },
    /// Exact chromatic number with refutation certificate
    Chi { file: PathBuf },
    /// Homomorphism from the first graph to the second
    Hom { from: PathBuf, to: PathBuf },
}

#[derive(Subcommand, Debug)]
enum HyperCmd {
    /// Lexicographically least valid k-colouring, if any
    Color {
        file: PathBuf,
        #[arg(long)]
        k: u8,
    },
    /// Seeded random hypergraph with m distinct edges
    Random {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: usize,
    },
    /// Check a colouring file against a hypergraph file
    Verify { file: PathBuf, colouring: PathBuf },
}

/// Everything `main` needs: what to print and how to exit.
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn ok(out: String) -> Outcome {
    Outcome {
        exit_code: 0,
        stdout: out,
        stderr: String::new(),
    }
}

fn negative(out: String) -> Outcome {
    Outcome {
        exit_code: 1,
        stdout: out,
        stderr: String::new(),
    }
}

fn usage_error(msg: String) -> Outcome {
    Outcome {
        exit_code: 2,
        stdout: String::new(),
        stderr: msg,
    }
}

fn core_error(err: CoreError) -> Outcome {
    match err {
        CoreError::Guard { .. } => Outcome {
            exit_code: 3,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        },
        // a negative mathematical answer: emit the refutation as a certificate
        CoreError::NoMonochromaticPair { weight, candidates, colours } => {
            let refutation = serde_json::json!({
                "refutation": "no_monochromatic_disjoint_pair",
                "weight": weight,
                "candidates": candidates,
                "colours": colours,
            });
            Outcome {
                exit_code: 1,
                stdout: format!("{refutation}\n"),
                stderr: String::new(),
            }
        }
        _ => Outcome {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        },
    }
}

/// Parse the argument vector and run one subcommand.
pub fn dispatch<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ok(rendered)
                }
                _ => usage_error(rendered),
            };
        }
    };
    let mut cfg = match RunConfig::from_env() {
        Ok(cfg) => cfg,
        Err(msg) => return usage_error(format!("error: {msg}\n")),
    };
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if let Some(j) = cli.jobs {
        if j == 0 {
            return usage_error("error: --jobs must be positive\n".to_string());
        }
        cfg.jobs = j;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(t) = cli.threshold_override {
        cfg.threshold_override = Some(t);
    }
    match run(cli.command, &cfg) {
        Ok(outcome) => outcome,
        Err(err) => core_error(err),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Outcome> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage_error(format!("error: cannot read {}: {e}\n", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| usage_error(format!("error: {}: {e}\n", path.display())))
}

fn emit<T: Serialize>(cfg: &RunConfig, value: &T, text: String) -> String {
    match cfg.format {
        Format::Json => {
            let mut s = serde_json::to_string(value).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut t = text;
            t.push('\n');
            t
        }
    }
}

#[derive(Serialize)]
struct CheckOut {
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessOut>,
}

#[derive(Serialize)]
struct WitnessOut {
    u: u32,
    v: u32,
    w: u32,
    color: u8,
}

#[derive(Serialize)]
struct ChiOut {
    chi: usize,
    colouring: Vec<u8>,
    refuted: usize,
}

#[derive(Serialize)]
struct HomOut {
    hom: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct ColourOut {
    k: u8,
    assignment: Option<Vec<u8>>,
}

#[derive(Serialize)]
struct VerifyOut {
    valid: bool,
}

#[derive(Serialize)]
struct ChainVerifyOut {
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    link: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mismatch: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    function: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessOut>,
}

fn run(command: Command, cfg: &RunConfig) -> Result<Outcome, CoreError> {
    let limits = cfg.limits();
    match command {
        Command::Poly(cmd) => run_poly(cmd, cfg, &limits),
        Command::Avoid(cmd) => run_avoid(cmd, cfg, &limits),
        Command::Chain(cmd) => run_chain(cmd, cfg, &limits),
        Command::Graph(cmd) => run_graph(cmd, cfg, &limits),
        Command::Hyper(cmd) => run_hyper(cmd, cfg, &limits),
    }
}

fn run_poly(cmd: PolyCmd, cfg: &RunConfig, limits: &Limits) -> Result<Outcome, CoreError> {
    match cmd {
        PolyCmd::Check { file } => {
            let f: Polymorphism = match read_json(&file) {
                Ok(f) => f,
                Err(out) => return Ok(out),
            };
            match is_polymorphism(&f, limits)? {
                Verdict::Preserves => {
                    let out = emit(cfg, &CheckOut { status: "ok", witness: None }, "ok".to_string());
                    Ok(ok(out))
                }
                Verdict::Violation(v) => {
                    let w = WitnessOut { u: v.u, v: v.v, w: v.w, color: v.colour };
                    let text = format!(
                        "not a polymorphism: rows {} {} {} all map to colour {}",
                        v.u, v.v, v.w, v.colour
                    );
                    let out = emit(cfg, &CheckOut { status: "violation", witness: Some(w) }, text);
                    Ok(negative(out))
                }
            }
        }
        PolyCmd::Enumerate { arity, colors } => {
            let stream = enumerate_polymorphisms(arity, colors, limits)?;
            let mut out = String::new();
            let mut count = 0usize;
            for f in stream {
                count += 1;
                match cfg.format {
                    Format::Json => {
                        out.push_str(&serde_json::to_string(&f).expect("serializable"));
                        out.push('\n');
                    }
                    Format::Text => {
                        let digits: Vec<String> = f.table().iter().map(|t| t.to_string()).collect();
                        out.push_str(&digits.join(""));
                        out.push('\n');
                    }
                }
            }
            if cfg.format == Format::Text {
                out.push_str(&format!("{count} polymorphisms\n"));
            }
            Ok(ok(out))
        }
        PolyCmd::Minor { file, map } => {
            let f: Polymorphism = match read_json(&file) {
                Ok(f) => f,
                Err(out) => return Ok(out),
            };
            let pi: MinorMap = match read_json(&map) {
                Ok(pi) => pi,
                Err(out) => return Ok(out),
            };
            let g = minor(&f, &pi)?;
            let text = format!("minor of arity {} over {} colours", g.arity(), g.colors());
            Ok(ok(emit(cfg, &g, text)))
        }
        PolyCmd::Generate(gen) => {
            let spec = match gen {
                GenerateCmd::Dictator { arity, colors, coord, sigma } => {
                    if sigma.len() != 2 {
                        return Err(CoreError::Argument(
                            "--sigma needs exactly two colours".to_string(),
                        ));
                    }
                    Generator::Dictator { arity, colors, coord, sigma: [sigma[0], sigma[1]] }
                }
                GenerateCmd::Junta { arity, colors, coords, iota } => {
                    Generator::InjectiveJunta { arity, colors, coords, iota }
                }
                GenerateCmd::Recolour { input, colors, map } => {
                    let inner: Polymorphism = match read_json(&input) {
                        Ok(f) => f,
                        Err(out) => return Ok(out),
                    };
                    Generator::Recolour { inner: Box::new(inner), colors, map }
                }
            };
            let f = make_generator(&spec, limits)?;
            let text = format!("generated arity {} over {} colours", f.arity(), f.colors());
            Ok(ok(emit(cfg, &f, text)))
        }
    }
}

fn run_avoid(cmd: AvoidCmd, cfg: &RunConfig, limits: &Limits) -> Result<Outcome, CoreError> {
    match cmd {
        AvoidCmd::Colors { file, set } => {
            let f: Polymorphism = match read_json(&file) {
                Ok(f) => f,
                Err(out) => return Ok(out),
            };
            let mask = bits::coords_to_mask(&set, f.arity()).ok_or_else(|| {
                CoreError::Argument(format!(
                    "--set must be distinct coordinates in [1, {}]",
                    f.arity()
                ))
            })?;
            let avoided = avoided_colours(&f, mask, limits)?;
            let cert = direct_certificate(&f, mask, limits)?;
            let text = format!(
                "set {:?} avoids colours {:?}",
                bits::mask_to_coords(mask),
                bits::mask_to_colours(avoided)
            );
            Ok(ok(emit(cfg, &cert, text)))
        }
        AvoidCmd::Find1 { file } => {
            let f: Polymorphism = match read_json(&file) {
                Ok(f) => f,
                Err(out) => return Ok(out),
            };
            let cert = find_1_avoiding(&f, limits)?;
            Ok(certificate_outcome(cfg, cert))
        }
        AvoidCmd::Step { file, sets, avoided } => {
            let f: Polymorphism = match read_json(&file) {
                Ok(f) => f,
                Err(out) => return Ok(out),
            };
            let mut masks = Vec::new();
            for s in &sets {
                let coords: Vec<usize> = s
                    .split(',')
                    .map(|p| p.trim().parse())
                    .collect::<Result<_, _>>()
                    .map_err(|_| CoreError::Argument(format!("cannot parse --sets {s}")))?;
                masks.push(bits::coords_to_mask(&coords, f.arity()).ok_or_else(|| {
                    CoreError::Argument(format!("--sets {s} outside [1, {}]", f.arity()))
                })?);
            }
            let colour_mask = bits::colours_to_mask(&avoided, f.colors()).ok_or_else(|| {
                CoreError::Argument(format!("--avoided must be colours in [1, {}]", f.colors()))
            })?;
            let cert = inductive_step(&f, &masks, colour_mask, limits)?;
            Ok(certificate_outcome(cfg, cert))
        }
        AvoidCmd::Sel { file } => {
            let f: Polymorphism = match read_json(&file) {
                Ok(f) => f,
                Err(out) => return Ok(out),
            };
            let result = sel(&f, cfg.threshold_override, limits)?;
            let text = format!(
                "t = {}, sel = {:?}{}",
                result.t,
                result.union_coords(),
                if result.fallback_used { " (fallback)" } else { "" }
            );
            Ok(ok(emit(cfg, &result, text)))
        }
    }
}

fn certificate_outcome(cfg: &RunConfig, cert: AvoidanceCertificate) -> Outcome {
    let text = format!(
        "set {:?} avoids {:?} ({:?}, verified = {})",
        cert.set_coords(),
        cert.avoided_colours(),
        cert.method,
        cert.verified
    );
    let out = emit(cfg, &cert, text);
    if cert.verified {
        ok(out)
    } else {
        negative(out)
    }
}

fn run_chain(cmd: ChainCmd, cfg: &RunConfig, limits: &Limits) -> Result<Outcome, CoreError> {
    match cmd {
        ChainCmd::Verify { file } => {
            let chain: MinorChain = match read_json(&file) {
                Ok(c) => c,
                Err(out) => return Ok(out),
            };
            match verify_chain(&chain, limits)? {
                ChainCheck::Valid => {
                    let out = emit(
                        cfg,
                        &ChainVerifyOut {
                            status: "ok",
                            link: None,
                            mismatch: None,
                            function: None,
                            witness: None,
                        },
                        "ok".to_string(),
                    );
                    Ok(ok(out))
                }
                ChainCheck::BrokenLink { link, mismatch } => {
                    let out = emit(
                        cfg,
                        &ChainVerifyOut {
                            status: "broken_link",
                            link: Some(link),
                            mismatch: Some(mismatch),
                            function: None,
                            witness: None,
                        },
                        format!("link {link} broken at table index {mismatch}"),
                    );
                    Ok(negative(out))
                }
                ChainCheck::NotPolymorphism { index, violation } => {
                    let out = emit(
                        cfg,
                        &ChainVerifyOut {
                            status: "not_polymorphism",
                            link: None,
                            mismatch: None,
                            function: Some(index),
                            witness: Some(WitnessOut {
                                u: violation.u,
                                v: violation.v,
                                w: violation.w,
                                color: violation.colour,
                            }),
                        },
                        format!("function {index} is not a polymorphism"),
                    );
                    Ok(negative(out))
                }
            }
        }
        ChainCmd::Witness { file } => {
            let chain: MinorChain = match read_json(&file) {
                Ok(c) => c,
                Err(out) => return Ok(out),
            };
            match consistency_witness(&chain, cfg.threshold_override, limits)? {
                Some(w) => {
                    let text = format!(
                        "t(f_{}) = t(f_{}) = {}, coordinate {} carried across",
                        w.i, w.j, w.t, w.coordinate
                    );
                    Ok(ok(emit(cfg, &w, text)))
                }
                None => {
                    let out = emit(
                        cfg,
                        &serde_json::json!({ "witness": null }),
                        "no consistency witness".to_string(),
                    );
                    Ok(negative(out))
                }
            }
        }
    }
}

fn run_graph(cmd: GraphCmd, cfg: &RunConfig, limits: &Limits) -> Result<Outcome, CoreError> {
    match cmd {
        GraphCmd::Kneser { n, k } => {
            let g = kneser(n, k)?;
            let text = format!("KG({n},{k}): {} vertices, {} edges", g.n(), g.edge_count());
            Ok(ok(emit(cfg, &g, text)))
        }
        GraphCmd::Clique { n } => {
            let g = clique(n)?;
            let text = format!("K_{n}: {} edges", g.edge_count());
            Ok(ok(emit(cfg, &g, text)))
        }
        GraphCmd::Tensor { left, right } => {
            let a: Graph = match read_json(&left) {
                Ok(g) => g,
                Err(out) => return Ok(out),
            };
            let b: Graph = match read_json(&right) {
                Ok(g) => g,
                Err(out) => return Ok(out),
            };
            let g = tensor(&a, &b)?;
            let text = format!("tensor: {} vertices, {} edges", g.n(), g.edge_count());
            Ok(ok(emit(cfg, &g, text)))
        }
        GraphCmd::Expo { n, m } => {
            let g = exponential(n, m, limits)?;
            let text = format!("K_{n}^(K_{m}): {} vertices, {} edges", g.n(), g.edge_count());
            Ok(ok(emit(cfg, &g, text)))
        }
        GraphCmd::Chi { file } => {
            let g: Graph = match read_json(&file) {
                Ok(g) => g,
                Err(out) => return Ok(out),
            };
            let cert = chromatic_number(&g, limits)?;
            let out = ChiOut {
                chi: cert.chi,
                colouring: cert.colouring.clone(),
                refuted: cert.refutation.colours,
            };
            let text = format!("chi = {} ({} colours refuted)", cert.chi, cert.refutation.colours);
            Ok(ok(emit(cfg, &out, text)))
        }
        GraphCmd::Hom { from, to } => {
            let a: Graph = match read_json(&from) {
                Ok(g) => g,
                Err(out) => return Ok(out),
            };
            let b: Graph = match read_json(&to) {
                Ok(g) => g,
                Err(out) => return Ok(out),
            };
            match hom_exists(&a, &b, limits)? {
                Some(map) => {
                    let external: Vec<usize> = map.iter().map(|&v| v + 1).collect();
                    let text = format!("homomorphism: {external:?}");
                    Ok(ok(emit(cfg, &HomOut { hom: Some(external) }, text)))
                }
                None => Ok(negative(emit(
                    cfg,
                    &HomOut { hom: None },
                    "no homomorphism".to_string(),
                ))),
            }
        }
    }
}

fn run_hyper(cmd: HyperCmd, cfg: &RunConfig, limits: &Limits) -> Result<Outcome, CoreError> {
    match cmd {
        HyperCmd::Color { file, k } => {
            let h: Hypergraph = match read_json(&file) {
                Ok(h) => h,
                Err(out) => return Ok(out),
            };
            match hyper_colour(&h, k, limits)? {
                Some(col) => {
                    let text = format!("colouring: {:?}", col.assignment);
                    Ok(ok(emit(cfg, &ColourOut { k, assignment: Some(col.assignment) }, text)))
                }
                None => Ok(negative(emit(
                    cfg,
                    &ColourOut { k, assignment: None },
                    format!("no {k}-colouring"),
                ))),
            }
        }
        HyperCmd::Random { vertices, edges } => {
            let h = random_hypergraph(vertices, edges, cfg.seed)?;
            let text = format!("{} vertices, {} edges", h.vertices(), h.edges().len());
            Ok(ok(emit(cfg, &h, text)))
        }
        HyperCmd::Verify { file, colouring } => {
            let h: Hypergraph = match read_json(&file) {
                Ok(h) => h,
                Err(out) => return Ok(out),
            };
            let col: nae_core::nae::HyperColouring = match read_json(&colouring) {
                Ok(c) => c,
                Err(out) => return Ok(out),
            };
            let valid = verify_hyper_colouring(&h, &col.assignment, col.k)?;
            let out = emit(cfg, &VerifyOut { valid }, format!("valid = {valid}"));
            if valid {
                Ok(ok(out))
            } else {
                Ok(negative(out))
            }
        }
    }
}
