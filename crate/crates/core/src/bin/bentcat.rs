use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use bentcat::cli::{cmd_analyze, cmd_construct, cmd_verify, Report};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bentcat", version, about = "Analyse, construct and verify bent concatenations")]
struct Args {
    #[command(subcommand)]
    command: Command,
    /// Node budget for every M-subspace search.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum, degree, dual, M-subspace dimension and M# verdict of one function.
    Analyze {
        #[arg(long)]
        input: PathBuf,
    },
    /// Build the function described by a recipe file.
    Construct {
        #[arg(long)]
        recipe: PathBuf,
        #[arg(long)]
        seed: u64,
        /// Directory receiving the truth tables and provenance.
        #[arg(long, default_value = ".")]
        fixture_dir: PathBuf,
    },
    /// Compare a structural condition with direct search.
    Verify {
        /// thm1, cor1, thm3, cor2, insideMMgh, rind-bound, dual-sum or korsakova-class.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        seed: u64,
        /// Function files; seeded samples are used when absent.
        #[arg(long)]
        input: Vec<PathBuf>,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let start = Instant::now();
    let report: Result<Report, _> = match &args.command {
        Command::Analyze { input } => cmd_analyze(input, args.budget),
        Command::Construct {
            recipe,
            seed,
            fixture_dir,
        } => cmd_construct(recipe, *seed, args.budget, fixture_dir),
        Command::Verify { theorem, seed, input } => cmd_verify(theorem, input, *seed, args.budget),
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let json = report.to_json();
    match &args.json_out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{json}"),
    }
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    for f in &report.failures {
        eprintln!("FAILURE: {f}");
    }
    if report.budget.exceeded {
        eprintln!("budget of {} nodes exceeded", report.budget.budget);
    }
    if report.success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
