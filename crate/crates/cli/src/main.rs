use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ptdfa::workload::{self, Algorithm, Cell, GenerateParams, Grid};
use ptdfa::{hopcroft, minimize, oracle, MinimizeStats, PtDfa};

/// Minimize deterministic automata with partial transition functions.
#[derive(Parser)]
#[command(name = "ptdfa", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Read an automaton and write its minimal equivalent in canonical form.
    Minimize {
        /// Input file, or `-` for standard input.
        #[arg(long = "in", default_value = "-")]
        input: String,
        /// Output file, or `-` for standard output.
        #[arg(long, default_value = "-")]
        out: String,
        #[arg(long, value_enum, default_value_t = Algo::Valmari)]
        algo: Algo,
        /// Print counters as key=value lines on standard error.
        #[arg(long)]
        stats: bool,
    },
    /// Write a random automaton.
    Generate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        states: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        alphabet: u64,
        /// Fraction of all state/symbol pairs that get a transition, in (0, 1].
        #[arg(long, value_parser = parse_density)]
        density: f64,
        /// Number of final states; defaults to half the states.
        #[arg(long)]
        finals: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Compare two automata; exit 0 if the relation holds and 3 if not.
    Check(CheckArgs),
    /// Run a benchmark sweep and write CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CheckArgs {
    /// Same accepted language.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    equiv: Option<Vec<String>>,
    /// Same automaton up to renaming states.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    isomorphic: Option<Vec<String>>,
}

#[derive(Args)]
struct BenchArgs {
    /// TOML grid file.
    #[arg(long, conflicts_with = "cell", required_unless_present = "cell")]
    grid: Option<PathBuf>,
    /// A cell `states,alphabet,density`; may be repeated.
    #[arg(long, value_parser = parse_cell)]
    cell: Vec<Cell>,
    /// Seeds 0..K per cell; overrides the grid file.
    #[arg(long)]
    seeds: Option<u64>,
    /// Comma-separated algorithms; overrides the grid file.
    #[arg(long, value_enum, value_delimiter = ',')]
    algo: Vec<Algo>,
    #[arg(long, default_value = "-")]
    csv: String,
    /// Rows run concurrently; 1 keeps timings free of interference.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Report the baseline as out of memory beyond this estimated size.
    #[arg(long)]
    mem_limit_mb: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Valmari,
    Hopcroft,
    Oracle,
}

impl From<Algo> for Algorithm {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Valmari => Algorithm::Valmari,
            Algo::Hopcroft => Algorithm::Hopcroft,
            Algo::Oracle => Algorithm::Oracle,
        }
    }
}

fn parse_density(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if p > 0.0 && p <= 1.0 {
        Ok(p)
    } else {
        Err(format!("density must be in (0, 1], got {p}"))
    }
}

fn parse_cell(s: &str) -> Result<Cell, String> {
    s.parse().map_err(|e: workload::GridError| e.to_string())
}

enum Failure {
    /// Unreadable or invalid input; exit 1.
    Data(String),
    /// Flags that parse but make no sense together; exit 2.
    Usage(String),
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure::Data(format!("{path}: {e}")))?;
    Ok(text)
}

fn write_output(path: &str, bytes: &[u8]) -> Result<(), Failure> {
    let result = if path == "-" {
        let mut out = io::stdout().lock();
        out.write_all(bytes).and_then(|_| out.flush())
    } else {
        fs::write(path, bytes)
    };
    result.map_err(|e| Failure::Data(format!("{path}: {e}")))
}

fn load(path: &str) -> Result<PtDfa, Failure> {
    ptdfa::parse(&read_input(path)?).map_err(|e| Failure::Data(format!("{path}: {e}")))
}

fn run_minimize(input: &str, out: &str, algo: Algo, stats: bool) -> Result<(), Failure> {
    let d = load(input)?;
    let (m, s) = match algo {
        Algo::Valmari => minimize(&d),
        Algo::Hopcroft => hopcroft::hopcroft_minimize(&d),
        Algo::Oracle => {
            let m = oracle::oracle_minimize(&d);
            let s = MinimizeStats {
                states_in: d.states(),
                transitions_in: d.transition_count(),
                alphabet: d.alphabet(),
                states_out: m.states(),
                transitions_out: m.transition_count(),
                ..Default::default()
            };
            (m, s)
        }
    };
    write_output(out, ptdfa::serialize(&m).as_bytes())?;
    if stats {
        eprint!("{}", s.to_key_values());
    }
    Ok(())
}

fn run_generate(
    states: usize,
    alphabet: usize,
    density: f64,
    finals: Option<usize>,
    seed: u64,
    out: &str,
) -> Result<(), Failure> {
    let params = GenerateParams {
        states,
        alphabet,
        density,
        finals: finals.unwrap_or(states / 2),
        seed,
    };
    let d = workload::generate(&params).map_err(|e| Failure::Usage(e.to_string()))?;
    write_output(out, ptdfa::serialize(&d).as_bytes())
}

fn run_check(args: &CheckArgs) -> Result<bool, Failure> {
    if let Some(files) = &args.equiv {
        let (a, b) = (load(&files[0])?, load(&files[1])?);
        return oracle::language_equal(&a, &b).map_err(|e| Failure::Data(e.to_string()));
    }
    let files = args.isomorphic.as_ref().expect("clap requires one relation");
    let (a, b) = (load(&files[0])?, load(&files[1])?);
    ptdfa::is_isomorphic(&a, &b).map_err(|e| Failure::Data(e.to_string()))
}

fn run_bench(args: &BenchArgs) -> Result<(), Failure> {
    let mut grid = match &args.grid {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
            Grid::from_toml_str(&text).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?
        }
        None => Grid::new(args.cell.clone()),
    };
    if let Some(k) = args.seeds {
        if k == 0 {
            return Err(Failure::Usage("--seeds must be at least 1".into()));
        }
        grid.seeds = k;
    }
    if !args.algo.is_empty() {
        grid.algorithms = args.algo.iter().map(|&a| a.into()).collect();
    }
    if let Some(mb) = args.mem_limit_mb {
        grid.memory_limit = Some(mb.saturating_mul(1 << 20));
    }
    let rows = workload::run_bench(&grid, args.jobs);
    let mut buf = Vec::new();
    workload::write_csv(&rows, &mut buf).map_err(|e| Failure::Data(e.to_string()))?;
    write_output(&args.csv, &buf)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Minimize {
            input,
            out,
            algo,
            stats,
        } => run_minimize(input, out, *algo, *stats),
        Command::Generate {
            states,
            alphabet,
            density,
            finals,
            seed,
            out,
        } => run_generate(*states as usize, *alphabet as usize, *density, *finals, *seed, out),
        Command::Check(args) => match run_check(args) {
            Ok(true) => Ok(()),
            Ok(false) => return ExitCode::from(3),
            Err(e) => Err(e),
        },
        Command::Bench(args) => run_bench(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Data(msg)) => {
            eprintln!("ptdfa: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("ptdfa: {msg}");
            ExitCode::from(2)
        }
    }
}
