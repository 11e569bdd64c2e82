//! `tdmsd`: compute subdivision invariants, run theorem sweeps, and work with
//! the sd_γt = 3 tree family from the command line.
//!
//! Exit codes: 0 success, 1 theorem violated, 2 usage or parse error,
//! 3 precondition violated.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tdmsd::characterization::{characterize, predicts_sd_one};
use tdmsd::domination::{gamma, gamma_t};
use tdmsd::enumerate::{enumerate_connected_graphs, enumerate_trees};
use tdmsd::family::{generate_family, FamilyIndex};
use tdmsd::graph::named;
use tdmsd::io::{parse_graphs, to_edge_list, to_graph6};
use tdmsd::subdivision::{
    msd_gamma_t_with, msd_gamma_with, sd_gamma_t_with, sd_gamma_with, Parameter, SubdivisionResult,
    ValueCache, DEFAULT_MSD_CAP,
};
use tdmsd::verify::{sweep, sweep_graphs, Theorem};
use tdmsd::{Error, Graph};

const CACHE_ENV: &str = "TDMSD_CACHE_DIR";
const CACHE_FILE: &str = "values.tsv";

#[derive(Parser)]
#[command(name = "tdmsd", version, about = "Total domination subdivision numbers of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an invariant for every graph in the input.
    Compute {
        /// File of graphs (edge list or graph6), or a single graph6 line.
        /// Reads stdin when omitted.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum)]
        invariant: InvariantArg,
        /// Search bound: subdivisions per edge for msd, edges for sd.
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Sweep a theorem over all graphs or trees up to an order.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n_max: Option<usize>,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
        /// Check these graphs instead of the generated ones.
        #[arg(long)]
        input: Option<String>,
        /// Print one record per graph before the summary.
        #[arg(long, short)]
        verbose: bool,
        /// Leave out the timing field so reports compare byte for byte.
        #[arg(long)]
        no_elapsed: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Generate or test membership in the sd_γt = 3 tree family.
    Family {
        #[command(subcommand)]
        action: FamilyAction,
    },
    /// Report which branch of the sd_γt = 1 characterization fires.
    Characterize {
        #[arg(long)]
        input: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Enumerate non-isomorphic trees or connected graphs.
    Enum {
        #[arg(value_enum)]
        kind: EnumKind,
        #[arg(long)]
        n_max: usize,
        /// Smallest order; defaults to `--n-max`.
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long, value_enum, default_value_t = FormatArg::Graph6)]
        format: FormatArg,
        #[command(flatten)]
        out: Output,
    },
    /// Write the K4 and G* fixtures.
    Fixtures {
        /// Directory to write into; prints to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FamilyAction {
    Generate {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::EdgeList)]
        format: FormatArg,
        #[command(flatten)]
        out: Output,
    },
    Test {
        #[arg(long)]
        input: Option<String>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum InvariantArg {
    Gamma,
    GammaT,
    Sd,
    Msd,
    SdT,
    MsdT,
}

impl InvariantArg {
    fn name(self) -> &'static str {
        match self {
            InvariantArg::Gamma => "gamma",
            InvariantArg::GammaT => "gamma_t",
            InvariantArg::Sd => "sd",
            InvariantArg::Msd => "msd",
            InvariantArg::SdT => "sd_t",
            InvariantArg::MsdT => "msd_t",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    Trees,
    Connected,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    EdgeList,
    Graph6,
}

/// Failure carrying its exit code.
struct Fail {
    code: u8,
    msg: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MalformedInput(_) | Error::UnknownTheorem(_) | Error::OutOfRange { .. } => 2,
            _ => 3,
        };
        Fail {
            code,
            msg: e.to_string(),
        }
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Self {
        Fail {
            code: 2,
            msg: e.to_string(),
        }
    }
}

type Run = Result<u8, Fail>;

fn read_input(input: Option<&str>) -> Result<Vec<Graph>, Fail> {
    let text = match input {
        Some(s) if Path::new(s).exists() => fs::read_to_string(s)?,
        Some(s) => s.to_string(),
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    let graphs = parse_graphs(&text)?;
    if graphs.is_empty() {
        return Err(Error::MalformedInput("no graphs in input".into()).into());
    }
    Ok(graphs)
}

/// Collects output lines and writes them to `--out` or stdout.
struct Sink {
    buf: String,
}

impl Sink {
    fn new() -> Self {
        Sink { buf: String::new() }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.buf.push_str(s.as_ref());
        self.buf.push('\n');
    }

    fn json(&mut self, v: &Value) {
        self.line(v.to_string());
    }

    fn finish(self, out: &Output) -> io::Result<()> {
        match &out.out {
            Some(p) => fs::write(p, self.buf),
            None => io::stdout().lock().write_all(self.buf.as_bytes()),
        }
    }
}

fn load_cache() -> ValueCache {
    let mut cache = ValueCache::new();
    let Some(dir) = std::env::var_os(CACHE_ENV) else {
        return cache;
    };
    let Ok(text) = fs::read_to_string(Path::new(&dir).join(CACHE_FILE)) else {
        return cache;
    };
    for line in text.lines() {
        let mut f = line.split('\t');
        let (Some(p), Some(code), Some(v)) = (f.next(), f.next(), f.next()) else {
            continue;
        };
        let param = match p {
            "gamma" => Parameter::Gamma,
            "gamma_t" => Parameter::GammaT,
            _ => continue,
        };
        if let (Some(code), Ok(v)) = (unhex(code), v.parse()) {
            cache.insert(param, code, v);
        }
    }
    cache
}

fn save_cache(cache: &ValueCache) -> io::Result<()> {
    let Some(dir) = std::env::var_os(CACHE_ENV) else {
        return Ok(());
    };
    fs::create_dir_all(&dir)?;
    let mut lines: Vec<String> = cache
        .entries()
        .map(|(p, code, v)| {
            let p = match p {
                Parameter::Gamma => "gamma",
                Parameter::GammaT => "gamma_t",
            };
            format!("{p}\t{}\t{v}", hex(code))
        })
        .collect();
    lines.sort();
    let path = Path::new(&dir).join(CACHE_FILE);
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, lines.join("\n") + "\n")?;
    fs::rename(tmp, path)
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn unhex(s: &str) -> Option<Vec<u8>> {
    if s.len() % 2 != 0 {
        return None;
    }
    (0..s.len())
        .step_by(2)
        .map(|i| u8::from_str_radix(s.get(i..i + 2)?, 16).ok())
        .collect()
}

fn subdivision_json(graph6: &str, name: &str, r: &SubdivisionResult) -> Value {
    let plan: Vec<Value> = r
        .witness_edges
        .iter()
        .zip(&r.witness_t)
        .map(|(e, t)| json!({"edge": [e.u, e.v], "t": t}))
        .collect();
    json!({
        "graph6": graph6,
        "invariant": name,
        "value": r.value,
        "witness": plan,
        "base_value": r.base_value,
        "cap": r.cap,
    })
}

fn compute(input: Option<&str>, inv: InvariantArg, cap: Option<usize>, out: &Output) -> Run {
    let graphs = read_input(input)?;
    let mut cache = load_cache();
    let mut sink = Sink::new();
    for g in &graphs {
        let g6 = to_graph6(g)?;
        let name = inv.name();
        let record = match inv {
            InvariantArg::Gamma => {
                let c = gamma(g);
                json!({"graph6": g6, "invariant": name, "value": c.value, "witness": c.witness, "base_value": null})
            }
            InvariantArg::GammaT => {
                let c = gamma_t(g)?;
                json!({"graph6": g6, "invariant": name, "value": c.value, "witness": c.witness, "base_value": null})
            }
            InvariantArg::Msd => subdivision_json(&g6, name, &msd_gamma_with(g, cap.unwrap_or(DEFAULT_MSD_CAP), &mut cache)?),
            InvariantArg::MsdT => {
                subdivision_json(&g6, name, &msd_gamma_t_with(g, cap.unwrap_or(DEFAULT_MSD_CAP), &mut cache)?)
            }
            InvariantArg::Sd => subdivision_json(&g6, name, &sd_gamma_with(g, cap.unwrap_or(g.m()), &mut cache)?),
            InvariantArg::SdT => subdivision_json(&g6, name, &sd_gamma_t_with(g, cap.unwrap_or(g.m()), &mut cache)?),
        };
        sink.json(&record);
    }
    save_cache(&cache)?;
    sink.finish(out)?;
    Ok(0)
}

fn verify(
    theorem: &str,
    n_max: Option<usize>,
    jobs: Option<usize>,
    input: Option<&str>,
    verbose: bool,
    no_elapsed: bool,
    out: &Output,
) -> Run {
    let theorem: Theorem = theorem.parse()?;
    let mut result = match input {
        Some(_) => sweep_graphs(theorem, &read_input(input)?, jobs)?,
        None => sweep(theorem, n_max.unwrap_or(theorem.default_n_max()), jobs)?,
    };
    if no_elapsed {
        result.report.elapsed = None;
    }
    let mut sink = Sink::new();
    if verbose {
        for o in &result.outcomes {
            sink.json(&serde_json::to_value(o).expect("outcome serializes"));
        }
    }
    sink.json(&serde_json::to_value(&result.report).expect("report serializes"));
    sink.finish(out)?;
    Ok(if result.report.passed() { 0 } else { 1 })
}

fn family_generate(n_max: usize, format: FormatArg, out: &Output) -> Run {
    let mut sink = Sink::new();
    for t in generate_family(n_max) {
        match format {
            FormatArg::EdgeList => sink.line(format!("{t}\n")),
            FormatArg::Graph6 => sink.line(to_graph6(&t.tree)?),
        }
    }
    sink.finish(out)?;
    Ok(0)
}

fn family_test(input: Option<&str>, out: &Output) -> Run {
    let graphs = read_input(input)?;
    let n_max = graphs.iter().map(Graph::n).max().unwrap_or(6).max(6);
    let index = FamilyIndex::new(n_max);
    let mut sink = Sink::new();
    for g in &graphs {
        sink.json(&json!({"graph6": to_graph6(g)?, "in_family": index.contains(g)?}));
    }
    sink.finish(out)?;
    Ok(0)
}

fn characterize_cmd(input: Option<&str>, out: &Output) -> Run {
    let graphs = read_input(input)?;
    let mut cache = load_cache();
    let mut sink = Sink::new();
    for t in &graphs {
        let branch = characterize(t)?;
        let sd = sd_gamma_t_with(t, t.m(), &mut cache)?.value;
        sink.json(&json!({
            "graph6": to_graph6(t)?,
            "fired": branch,
            "predicts_sd_one": predicts_sd_one(t)?,
            "sd_t": sd,
        }));
    }
    save_cache(&cache)?;
    sink.finish(out)?;
    Ok(0)
}

fn enumerate(kind: EnumKind, n_min: usize, n_max: usize, format: FormatArg, out: &Output) -> Run {
    let mut sink = Sink::new();
    for n in n_min..=n_max {
        let stream = match kind {
            EnumKind::Trees => enumerate_trees(n)?,
            EnumKind::Connected => enumerate_connected_graphs(n)?,
        };
        for g in stream {
            match format {
                FormatArg::Graph6 => sink.line(to_graph6(&g)?),
                FormatArg::EdgeList => sink.line(to_edge_list(&g)),
            }
        }
    }
    sink.finish(out)?;
    Ok(0)
}

fn fixtures(dir: Option<&Path>) -> Run {
    let files = [
        ("k4.edges", "# K4: msd_t = 2, sd_t = 3", named::complete(4)),
        ("gstar.edges", "# G*: msd_t = 3, sd_t = 2", named::gstar()),
    ];
    for (name, header, g) in files {
        let text = format!("{header}\n{}", to_edge_list(&g));
        match dir {
            Some(d) => {
                fs::create_dir_all(d)?;
                fs::write(d.join(name), text)?;
            }
            None => print!("{text}\n"),
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Compute {
            input,
            invariant,
            cap,
            out,
        } => compute(input.as_deref(), invariant, cap, &out),
        Command::Verify {
            theorem,
            n_max,
            jobs,
            input,
            verbose,
            no_elapsed,
            out,
        } => verify(&theorem, n_max, jobs, input.as_deref(), verbose, no_elapsed, &out),
        Command::Family { action } => match action {
            FamilyAction::Generate { n_max, format, out } => family_generate(n_max, format, &out),
            FamilyAction::Test { input, out } => family_test(input.as_deref(), &out),
        },
        Command::Characterize { input, out } => characterize_cmd(input.as_deref(), &out),
        Command::Enum {
            kind,
            n_max,
            n_min,
            format,
            out,
        } => enumerate(kind, n_min.unwrap_or(n_max), n_max, format, &out),
        Command::Fixtures { out } => fixtures(out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("tdmsd: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
