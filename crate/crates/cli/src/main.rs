use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use spack_core::census::{classify, ingest_graph6, persist, pin_class, run_census, verify_theorem, IngestOptions};
use spack_core::critical::is_vertex_critical;
use spack_core::families::from_spec;
use spack_core::families::registry::{EntryClass, RegistryEntry, SporadicRegistry};
use spack_core::graph::{all_pairs_distances, parse_graph6, to_graph6, Graph};
use spack_core::packing::{NamedClass, PackingSequence};
use spack_core::solver::{chi_s, first_conflict, Coloring};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact S-packing colorings, vertex-criticality and small-graph census.
#[derive(Parser, Debug)]
#[command(name = "spack", version)]
struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print chi_S and an optimal coloring
    Chi(GraphSeq),
    /// Check a coloring, e.g. "1 2 1 3 1 4"
    Check {
        #[command(flatten)]
        input: GraphSeq,
        coloring: String,
    },
    /// Decide vertex-criticality and print chi_S(G - v) for every v
    Critical(GraphSeq),
    /// Classify all connected graphs up to --cap (or the graphs in --file)
    Census {
        /// Order cap for the built-in enumeration
        #[arg(long, default_value_t = 7)]
        cap: usize,
        /// Sequence to solve under; repeat for a grid
        #[arg(short, long = "seq", required = true)]
        seqs: Vec<String>,
        /// graph6 file to classify instead of enumerating
        #[arg(short, long)]
        file: Option<PathBuf>,
        /// Stop at the first malformed graph6 line
        #[arg(long)]
        fail_fast: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare a class census with the registry; exit 0 iff they agree
    Verify {
        #[arg(long)]
        class: String,
        #[arg(long)]
        s4: Option<u32>,
        #[arg(long, default_value_t = 8)]
        cap: usize,
        /// Also write the JSON summary here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild registry rows from a census
    Pin {
        /// Only this class (default: all three)
        #[arg(long)]
        class: Option<String>,
        #[arg(long, default_value_t = 8)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct GraphSeq {
    /// graph6 string or constructor: C:n, P:n, K:n, G2K:k
    #[arg(short, long, conflicts_with = "file", required_unless_present = "file")]
    graph: Option<String>,
    /// graph6 file, one graph per line
    #[arg(short, long)]
    file: Option<PathBuf>,
    #[arg(long)]
    fail_fast: bool,
    /// Sequence such as 1,3^2+ (trailing + repeats the last value)
    #[arg(short, long)]
    seq: String,
}

#[derive(Debug)]
enum Failure {
    /// bad input or configuration
    Usage(String),
    /// the command ran but the answer is negative
    Negative,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// `println!` that exits quietly when stdout is closed, e.g. piped into `head`.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let mut out = std::io::stdout().lock();
        if let Err(e) = writeln!(out, $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("writing to stdout: {e}");
        }
    }};
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(EXIT_FAIL),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Chi(input) => cmd_chi(&input),
        Command::Check { input, coloring } => cmd_check(&input, &coloring),
        Command::Critical(input) => cmd_critical(&input),
        Command::Census {
            cap,
            seqs,
            file,
            fail_fast,
            out,
        } => cmd_census(cap, &seqs, file.as_deref(), fail_fast, &out),
        Command::Verify { class, s4, cap, out } => cmd_verify(&class, s4, cap, out.as_deref()),
        Command::Pin { class, cap, out } => cmd_pin(class.as_deref(), cap, out.as_deref()),
    }
}

fn parse_graph(text: &str) -> Result<Graph, Failure> {
    if text.contains(':') {
        Ok(from_spec(text)?)
    } else {
        Ok(parse_graph6(text)?)
    }
}

fn graphs(input: &GraphSeq) -> Result<Vec<Graph>, Failure> {
    if let Some(text) = &input.graph {
        return Ok(vec![parse_graph(text.trim())?]);
    }
    let path = input.file.as_deref().expect("clap requires a graph source");
    read_graph_file(path, input.fail_fast)
}

fn read_graph_file(path: &Path, fail_fast: bool) -> Result<Vec<Graph>, Failure> {
    let opts = IngestOptions {
        fail_fast,
        ..Default::default()
    };
    let ingested = ingest_graph6(path, &opts)?;
    for d in &ingested.diagnostics {
        eprintln!("warning: {}:{}: {}", path.display(), d.line, d.message);
    }
    Ok(ingested.graphs)
}

fn sequence(text: &str) -> Result<PackingSequence, Failure> {
    Ok(text.parse()?)
}

/// With several graphs each line is prefixed by the graph's graph6.
fn prefix(g: &Graph, many: bool) -> String {
    if many {
        format!("{} ", to_graph6(g).unwrap_or_default())
    } else {
        String::new()
    }
}

fn cmd_chi(input: &GraphSeq) -> Outcome {
    let s = sequence(&input.seq)?;
    let gs = graphs(input)?;
    for g in &gs {
        let r = chi_s(g, &s);
        say!("{}{}: {}", prefix(g, gs.len() > 1), r.chi, r.witness);
    }
    Ok(())
}

fn cmd_check(input: &GraphSeq, coloring: &str) -> Outcome {
    let s = sequence(&input.seq)?;
    let c: Coloring = coloring.parse()?;
    let gs = graphs(input)?;
    let mut all_valid = true;
    for g in &gs {
        let p = prefix(g, gs.len() > 1);
        if c.len() != g.order() {
            return Err(Failure::Usage(format!(
                "coloring has {} entries but the graph has {} vertices",
                c.len(),
                g.order()
            )));
        }
        let dist = all_pairs_distances(g);
        match first_conflict(&dist, &s, &c) {
            None => say!("{p}valid"),
            Some((u, v)) => {
                all_valid = false;
                let color = c.color(u);
                say!(
                    "{p}invalid: vertices {u} and {v} both have color {color} at distance {}, need more than {}",
                    dist.get(u, v),
                    s.value_at(color as usize)
                );
            }
        }
    }
    if all_valid {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn cmd_critical(input: &GraphSeq) -> Outcome {
    let s = sequence(&input.seq)?;
    let gs = graphs(input)?;
    for g in &gs {
        let v = is_vertex_critical(g, &s);
        let p = prefix(g, gs.len() > 1);
        say!(
            "{p}{}: chi {} witness {}",
            if v.is_critical { "critical" } else { "not critical" },
            v.chi,
            v.witness
        );
        say!("{p}vertex  chi(G-v)  coloring of G-v");
        for cert in &v.per_vertex {
            say!("{p}{:>6}  {:>8}  {}", cert.vertex, cert.chi, cert.witness);
        }
    }
    Ok(())
}

fn cmd_census(cap: usize, seqs: &[String], file: Option<&Path>, fail_fast: bool, out: &Path) -> Outcome {
    let sequences = seqs.iter().map(|t| sequence(t)).collect::<Result<Vec<_>, _>>()?;
    match file {
        Some(path) => {
            let gs = read_graph_file(path, fail_fast)?;
            let records = classify(&gs, &sequences);
            persist(out, &records)?;
            say!("records: {}", records.len());
        }
        None => {
            let summary = run_census(cap, &sequences, out)?;
            say!("records: {} (resumed {})", summary.records, summary.resumed);
            let per: Vec<String> = summary.per_order.iter().map(ToString::to_string).collect();
            say!("per order: {}", per.join(" "));
        }
    }
    Ok(())
}

fn cmd_verify(class: &str, s4: Option<u32>, cap: usize, out: Option<&Path>) -> Outcome {
    let class: NamedClass = class.parse()?;
    let registry = SporadicRegistry::from_env()?;
    let report = verify_theorem(&registry, class, s4, cap)?;
    say!("{report}");
    if let Some(path) = out {
        fs::write(path, report.summary_json() + "\n")?;
    }
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn cmd_pin(class: Option<&str>, cap: usize, out: Option<&Path>) -> Outcome {
    let known = SporadicRegistry::from_env()?;
    let classes = match class {
        Some(c) => vec![c.parse::<NamedClass>()?],
        None => NamedClass::ALL.to_vec(),
    };
    let mut entries: Vec<RegistryEntry> = Vec::new();
    for c in classes {
        entries.extend(pin_class(&known, c, cap)?);
    }
    entries.extend(
        known
            .entries()
            .iter()
            .filter(|e| e.class == EntryClass::Witness)
            .cloned(),
    );
    let text = SporadicRegistry::new(entries)?.to_text();
    match out {
        Some(path) => fs::write(path, text)?,
        None => say!("{}", text.trim_end()),
    }
    Ok(())
}
