use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gklab::catalog;
use gklab::group::{cap_from_env, GroupHandle};
use gklab::prime_graph::{classify, gk_graph, GraphClass, PrimeGraph};
use gklab::report::analysis_report;
use gklab::spec_file::{GroupSpecFile, SpecError};
use gklab::suites;
use gklab::GroupError;

const EXIT_SUITE_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "gklab", version, about = "Prime graphs of cut and rational groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the groups of a JSON specification file.
    Analyze {
        spec: PathBuf,
        /// Write the report here instead of standard output.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Print the prime graph of a catalog group or of the groups in a spec file.
    Graph {
        name_or_path: String,
        /// Emit DOT, to FILE if given.
        #[arg(long, num_args = 0..=1, default_missing_value = "-")]
        dot: Option<String>,
    },
    /// Run a named verification suite.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 2000)]
        max_order: usize,
    },
    /// Classify a graph literal such as "2-3,5".
    Classify {
        graph: String,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Figure3,
    Twofrobenius,
    FrobeniusFamilies,
    Invariants,
    Classifier,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Cut,
    Rational,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        Failure {
            code: if e.is_cap() { EXIT_CAP } else { EXIT_INPUT },
            message: e.to_string(),
        }
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Failure {
            code: if matches!(e, GroupError::CapExceeded { .. }) {
                EXIT_CAP
            } else {
                EXIT_INPUT
            },
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    }
}

fn load_spec(path: &Path) -> Result<Vec<(String, GroupHandle)>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    Ok(GroupSpecFile::parse(&text)?.build(cap_from_env())?)
}

fn write_output(target: Option<&Path>, text: &str) -> Result<(), Failure> {
    match target {
        Some(p) => fs::write(p, text).map_err(|e| io_failure(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn analyze(spec: &Path, out: Option<&Path>) -> Result<u8, Failure> {
    let groups = load_spec(spec)?;
    let config = BTreeMap::from([
        ("max_order".to_string(), cap_from_env().to_string()),
        ("spec".to_string(), spec.display().to_string()),
    ]);
    write_output(out, &analysis_report(&groups, config).to_json())?;
    Ok(0)
}

fn graph(name_or_path: &str, dot: Option<&str>) -> Result<u8, Failure> {
    let path = Path::new(name_or_path);
    let groups = if path.is_file() {
        load_spec(path)?
    } else {
        let g = catalog::resolve(name_or_path).map_err(|e| Failure {
            code: EXIT_INPUT,
            message: format!("unknown group {name_or_path:?}: {e}"),
        })?;
        let cap = cap_from_env();
        if g.order() > cap {
            return Err(GroupError::CapExceeded { cap }.into());
        }
        vec![(name_or_path.to_string(), g)]
    };
    let graphs: Vec<PrimeGraph> = groups.iter().map(|(_, g)| gk_graph(g)).collect();
    match dot {
        Some(target) => {
            let text: String = graphs.iter().map(|g| g.to_dot()).collect();
            let target = (target != "-").then(|| Path::new(target));
            write_output(target, &text)?;
        }
        None => {
            for ((name, _), g) in groups.iter().zip(&graphs) {
                println!("{name}: {g}");
            }
        }
    }
    Ok(0)
}

fn verify(suite: Suite, seed: u64, count: usize, max_order: usize) -> u8 {
    let result = match suite {
        Suite::Figure3 => suites::figure3(),
        Suite::Twofrobenius => suites::two_frobenius(),
        Suite::FrobeniusFamilies => suites::frobenius_families(),
        Suite::Classifier => suites::classifier(),
        Suite::Invariants => suites::invariants(seed, count, max_order),
    };
    print!("{}", result.table());
    if result.passed() {
        0
    } else {
        EXIT_SUITE_FAILED
    }
}

fn classify_cmd(literal: &str, class: ClassArg) -> Result<u8, Failure> {
    let g = PrimeGraph::parse_literal(literal)?;
    let class = match class {
        ClassArg::Cut => GraphClass::SolvableCut,
        ClassArg::Rational => GraphClass::SolvableRational,
    };
    let v = classify(&g, class)?;
    let status = match v.status {
        gklab::prime_graph::Status::Realized => "realized",
        gklab::prime_graph::Status::Forbidden => "forbidden",
        gklab::prime_graph::Status::Open => "open",
    };
    println!("{status}: {}", v.citation);
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Analyze { spec, out } => analyze(spec, out.as_deref()),
        Command::Graph { name_or_path, dot } => graph(name_or_path, dot.as_deref()),
        Command::Verify {
            suite,
            seed,
            count,
            max_order,
        } => Ok(verify(*suite, *seed, *count, *max_order)),
        Command::Classify { graph, class } => classify_cmd(graph, *class),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("gklab: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
