use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use scarfness::catalog::{canonical_graph6, enumerate_graphs, parse_graph6};
use scarfness::scarf::{is_generic, is_taylor, scarf_complex, scarf_obstruction};
use scarfness::verify::{analyze_graph, run_verification, summarize, write_report, Family, RunConfig};
use scarfness::{EngineConfig, Error, FieldSpec, MonomialIdeal, Result, SimpleGraph};

/// Scarf complexes of monomial ideals and graph ideals.
#[derive(Parser)]
#[command(name = "scarfness", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Single monomial ideals.
    #[command(subcommand)]
    Ideal(IdealCommand),
    /// Single graphs.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Sweep the graph catalog, comparing predictions with the oracle.
    Verify(VerifyArgs),
    /// Decode graph6 lines from the arguments or stdin into edge lists.
    DecodeG6 { lines: Vec<String> },
    #[command(subcommand)]
    Explore(ExploreCommand),
}

#[derive(Subcommand)]
enum IdealCommand {
    /// Scarf complex and Scarfness of an ideal such as `(x^2*y, y*z, x*z)`.
    Scarf {
        ideal: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Every family on one graph, given as graph6 or an edge-list file.
    Analyze {
        graph: String,
        #[arg(long, env = "SCARFNESS_N_MIN", default_value_t = 1)]
        n_min: usize,
        #[arg(long, env = "SCARFNESS_N_MAX", default_value_t = 3)]
        n_max: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum ExploreCommand {
    /// Scarfness of powers of cover ideals over the catalog. Reports only.
    CoverPowers {
        #[arg(long, env = "SCARFNESS_MAX_VERTICES", default_value_t = 5)]
        max_vertices: usize,
        #[arg(long, env = "SCARFNESS_N_MIN", default_value_t = 2)]
        n_min: usize,
        #[arg(long, env = "SCARFNESS_N_MAX", default_value_t = 3)]
        n_max: usize,
        #[arg(long, env = "SCARFNESS_OUT")]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Coefficient field: `q`, `gf2`, or `gf<p>` for another prime.
    #[arg(long, env = "SCARFNESS_FIELD", default_value = "q", value_parser = parse_field)]
    field: FieldSpec,
    /// Largest generator count handed to the Scarf engine.
    #[arg(long, env = "SCARFNESS_GEN_CAP")]
    gen_cap: Option<usize>,
}

impl Common {
    fn engine(&self) -> EngineConfig {
        let mut cfg = EngineConfig::default();
        if let Some(cap) = self.gen_cap {
            cfg.scarf_cap = cap;
        }
        cfg
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest graphs swept; defaults differ per family.
    #[arg(long, env = "SCARFNESS_MAX_VERTICES")]
    max_vertices: Option<usize>,
    #[arg(long, env = "SCARFNESS_N_MIN", default_value_t = 2)]
    n_min: usize,
    #[arg(long, env = "SCARFNESS_N_MAX")]
    n_max: Option<usize>,
    #[arg(long, env = "SCARFNESS_FAMILIES", value_delimiter = ',', default_values = ["sqfree", "symbolic", "ordinary", "cover"])]
    families: Vec<FamilyArg>,
    /// Report path; counterexamples go to `<out>.counterexamples.jsonl`.
    /// Without it the report goes to stdout.
    #[arg(long, env = "SCARFNESS_OUT")]
    out: Option<PathBuf>,
    #[arg(long, env = "SCARFNESS_JOBS", default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Sqfree,
    Symbolic,
    Ordinary,
    Cover,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Sqfree => Family::Sqfree,
            FamilyArg::Symbolic => Family::Symbolic,
            FamilyArg::Ordinary => Family::Ordinary,
            FamilyArg::Cover => Family::Cover,
        }
    }
}

fn parse_field(s: &str) -> std::result::Result<FieldSpec, String> {
    match s {
        "q" | "Q" | "0" => Ok(FieldSpec::Rationals),
        _ => {
            let p = s
                .strip_prefix("gf")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| format!("expected q or gf<p>, got `{s}`"))?;
            FieldSpec::from_characteristic(p).map_err(|e| e.to_string())
        }
    }
}

/// graph6 text, or a file holding either graph6 or an edge list.
fn read_graph(input: &str) -> Result<SimpleGraph> {
    let path = std::path::Path::new(input);
    if !path.is_file() {
        return parse_graph6(input.as_bytes());
    }
    let text = std::fs::read_to_string(path)?;
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if lines.len() == 1 && !lines[0].trim().contains(' ') {
        parse_graph6(lines[0].trim().as_bytes())
    } else {
        SimpleGraph::parse_edge_list(&text)
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(std::io::stdout().lock(), "{text}")?;
    Ok(())
}

#[derive(Serialize)]
struct IdealReport {
    ideal: String,
    generators: usize,
    field_characteristic: u64,
    scarf: bool,
    taylor: Option<bool>,
    generic: bool,
    obstruction: Option<String>,
    scarf_faces: Vec<FaceReport>,
}

#[derive(Serialize)]
struct FaceReport {
    members: Vec<usize>,
    label: String,
}

fn ideal_scarf(text: &str, common: &Common) -> Result<ExitCode> {
    let ideal = MonomialIdeal::parse_infer(text)?;
    let engine = common.engine();
    let complex = scarf_complex(&ideal, &engine)?;
    let obstruction = scarf_obstruction(&ideal, common.field, &engine)?;
    let report = IdealReport {
        ideal: ideal.to_string(),
        generators: ideal.len(),
        field_characteristic: common.field.characteristic(),
        scarf: obstruction.is_none(),
        taylor: is_taylor(&ideal, &engine).ok(),
        generic: is_generic(&ideal),
        obstruction: obstruction.map(|m| m.display(ideal.vars()).to_string()),
        scarf_faces: complex
            .faces()
            .iter()
            .map(|f| FaceReport {
                members: f.members.clone(),
                label: f.label.display(ideal.vars()).to_string(),
            })
            .collect(),
    };
    print_json(&report)?;
    Ok(ExitCode::SUCCESS)
}

fn graph_analyze(graph: &str, n_min: usize, n_max: usize, common: &Common) -> Result<ExitCode> {
    let g = read_graph(graph)?;
    let analysis = analyze_graph(&g, n_min, n_max, common.field, &common.engine())?;
    let disagreement = analysis
        .rows
        .iter()
        .any(|r| matches!((r.oracle, r.predicted), (Some(a), Some(b)) if a != b));
    print_json(&analysis)?;
    Ok(if disagreement { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn verify(args: &VerifyArgs) -> Result<ExitCode> {
    let cfg = RunConfig {
        max_vertices: args.max_vertices,
        n_min: args.n_min,
        n_max: args.n_max,
        field: args.common.field,
        families: args.families.iter().map(|&f| f.into()).collect(),
        generator_cap: args.common.engine().scarf_cap,
        output_path: args.out.clone(),
        parallelism: args.jobs,
    };
    let run = run_verification(&cfg)?;
    if args.out.is_none() {
        let mut out = std::io::stdout().lock();
        write_report(&run.records, &mut out)?;
        for c in &run.counterexamples {
            let line = serde_json::to_string(c).map_err(|e| Error::Io(e.to_string()))?;
            eprintln!("counterexample: {line}");
        }
    } else {
        let s = summarize(&run.records);
        eprintln!(
            "{} rows, {} disagreements, {} errors",
            s.total, s.disagreements, s.errors
        );
    }
    Ok(ExitCode::from(run.exit_code() as u8))
}

fn decode_g6(lines: &[String]) -> Result<ExitCode> {
    let input: Vec<String> = if lines.is_empty() {
        std::io::stdin().lines().collect::<std::io::Result<_>>()?
    } else {
        lines.to_vec()
    };
    let mut out = std::io::stdout().lock();
    for line in input.iter().filter(|l| !l.trim().is_empty()) {
        let g = parse_graph6(line.as_bytes())?;
        writeln!(out, "{}", g.to_edge_list())?;
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CoverPowerRow {
    graph_id: String,
    n: usize,
    generators: usize,
    scarf: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn explore_cover_powers(
    max_vertices: usize,
    n_min: usize,
    n_max: usize,
    out: Option<&PathBuf>,
    common: &Common,
) -> Result<ExitCode> {
    let engine = common.engine();
    let mut sink: Box<dyn Write> = match out {
        Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p)?)),
        None => Box::new(std::io::stdout().lock()),
    };
    for g in enumerate_graphs(max_vertices)? {
        let graph_id = canonical_graph6(&g)?;
        for n in n_min.max(1)..=n_max {
            let ideal = g.cover_ideal().power(n as u32)?;
            let verdict = scarf_obstruction(&ideal, common.field, &engine).map(|o| o.is_none());
            let row = CoverPowerRow {
                graph_id: graph_id.clone(),
                n,
                generators: ideal.len(),
                scarf: verdict.as_ref().ok().copied(),
                error: verdict.err().map(|e| e.to_string()),
            };
            let line = serde_json::to_string(&row).map_err(|e| Error::Io(e.to_string()))?;
            writeln!(sink, "{line}")?;
        }
    }
    sink.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Ideal(IdealCommand::Scarf { ideal, common }) => ideal_scarf(&ideal, &common),
        Command::Graph(GraphCommand::Analyze { graph, n_min, n_max, common }) => {
            graph_analyze(&graph, n_min, n_max, &common)
        }
        Command::Verify(args) => verify(&args),
        Command::DecodeG6 { lines } => decode_g6(&lines),
        Command::Explore(ExploreCommand::CoverPowers { max_vertices, n_min, n_max, out, common }) => {
            explore_cover_powers(max_vertices, n_min, n_max, out.as_ref(), &common)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        // A closed pipe (`| head`) is not a failure.
        Err(Error::Io(msg)) if msg.contains("Broken pipe") => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

