use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bottleneck_steiner::exact::{solve_exact_with, ExactConfig, ExactError, DEFAULT_WORK_BOUND};
use bottleneck_steiner::io::generate::{Family, GenSpec, DEFAULT_REGION};
use bottleneck_steiner::io::{generate, generate_instance, parse_instance, render_svg, report};
use bottleneck_steiner::verify::{compare, CompareError};
use bottleneck_steiner::{solve, Instance, Method, SolveError};

const EXIT_PARSE: u8 = 1;
const EXIT_INFEASIBLE: u8 = 2;
const EXIT_WORK_BOUND: u8 = 3;
const EXIT_VIOLATION: u8 = 4;

#[derive(Parser)]
#[command(name = "kbst", version, about = "k-bottleneck Steiner tree solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Sweep,
    Bisect,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Sweep => Method::Sweep,
            MethodArg::Bisect => Method::Bisect,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Uniform,
    Clustered,
    Grid,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Uniform => Family::Uniform,
            FamilyArg::Clustered => Family::Clustered,
            FamilyArg::Grid => Family::Grid,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the 2-approximation on an instance file.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "sweep")]
        method: MethodArg,
        /// Write an SVG drawing of the tree.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Compute the optimum by exhaustive search.
    Exact {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_WORK_BOUND)]
        work_bound: u128,
    },
    /// Run the approximation and the exact solver and check the guarantee.
    Compare {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_WORK_BOUND)]
        work_bound: u128,
    },
    /// Write a seeded random instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value = "uniform")]
        family: FamilyArg,
        #[arg(long, default_value_t = DEFAULT_REGION)]
        region: f64,
        /// Output file; stdout if omitted.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Median solve time per instance size (n = size/4, m = size - n, k = n/5).
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        seeds: Vec<u64>,
        #[arg(long, value_enum, default_value = "bisect")]
        method: MethodArg,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_PARSE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}

fn run(command: Command) -> Result<(), u8> {
    match command {
        Command::Solve {
            file,
            method,
            svg,
            json,
            timing,
        } => {
            let inst = load(&file)?;
            let report = solve(&inst, method.into()).map_err(solve_failed)?;
            if let Some(path) = svg {
                write_file(&path, &render_svg(&inst, &report.tree))?;
            }
            if json {
                print!("{}", report::solve_json(&report, timing));
            } else {
                print!("{}", report::solve_text(&report, timing));
            }
            Ok(())
        }
        Command::Exact { file, work_bound } => {
            let inst = load(&file)?;
            let result =
                solve_exact_with(&inst, &ExactConfig { work_bound }).map_err(exact_failed)?;
            print!("{}", report::exact_text(&result));
            Ok(())
        }
        Command::Compare { files, work_bound } => {
            let config = ExactConfig { work_bound };
            let many = files.len() > 1;
            let mut first_error = None;
            let mut violated = 0usize;
            for file in &files {
                if many {
                    println!("file {}", file.display());
                }
                let outcome = load(file).and_then(|inst| {
                    compare(&inst, &config).map_err(|e| match e {
                        CompareError::Solve(e) => solve_failed(e),
                        CompareError::Exact(e) => exact_failed(e),
                    })
                });
                match outcome {
                    Ok(cmp) => {
                        print!("{}", report::compare_text(&cmp));
                        if !cmp.passed() {
                            violated += 1;
                        }
                    }
                    Err(code) => {
                        first_error.get_or_insert(code);
                    }
                }
            }
            if many {
                println!("instances {} violations {violated}", files.len());
            }
            if violated > 0 {
                Err(EXIT_VIOLATION)
            } else {
                first_error.map_or(Ok(()), Err)
            }
        }
        Command::Gen {
            n,
            m,
            k,
            seed,
            family,
            region,
            output,
        } => {
            let spec = GenSpec {
                n,
                m,
                k,
                seed,
                region,
                family: family.into(),
            };
            let text = generate(&spec).map_err(|e| {
                eprintln!("error: {e}");
                EXIT_PARSE
            })?;
            match output {
                Some(path) => write_file(&path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            }
        }
        Command::Bench {
            sizes,
            seeds,
            method,
        } => bench(&sizes, &seeds, method.into()),
    }
}

fn bench(sizes: &[usize], seeds: &[u64], method: Method) -> Result<(), u8> {
    println!(
        "{:>6} {:>5} {:>5} {:>4} {:>12} {:>8}",
        "size", "n", "m", "k", "median_ms", "probes"
    );
    for &size in sizes {
        let n = (size / 4).max(1);
        let m = size.saturating_sub(n);
        let k = (n / 5).min(m);
        let mut times = Vec::with_capacity(seeds.len());
        let mut probes = 0;
        for &seed in seeds {
            let inst = generate_instance(&GenSpec::uniform(n, m, k, seed)).map_err(|e| {
                eprintln!("error: {e}");
                EXIT_PARSE
            })?;
            let report = solve(&inst, method).map_err(solve_failed)?;
            times.push(report.elapsed.as_secs_f64() * 1e3);
            probes += report.probes;
        }
        times.sort_by(f64::total_cmp);
        let median = times.get(times.len() / 2).copied().unwrap_or(f64::NAN);
        println!(
            "{size:>6} {n:>5} {m:>5} {k:>4} {median:>12.3} {:>8.1}",
            probes as f64 / seeds.len().max(1) as f64
        );
    }
    Ok(())
}

fn load(path: &Path) -> Result<Instance, u8> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        EXIT_PARSE
    })?;
    parse_instance(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        EXIT_PARSE
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), u8> {
    fs::write(path, contents).map_err(|e| {
        eprintln!("error: cannot write {}: {e}", path.display());
        EXIT_PARSE
    })
}

fn solve_failed(e: SolveError) -> u8 {
    eprintln!("error: {e}");
    EXIT_INFEASIBLE
}

fn exact_failed(e: ExactError) -> u8 {
    eprintln!("error: {e}");
    EXIT_WORK_BOUND
}
