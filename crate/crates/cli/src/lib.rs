//! `zerosum` command-line front end. [`run`] is the whole program minus
//! process plumbing, so tests can drive it with in-memory buffers.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use zerosum_core::adversarial;
use zerosum_core::axioms::{audit_mixture_axioms, Lens};
use zerosum_core::format::{self, DetectionJson, EquilibriaJson, MinimaxJson, MvJson};
use zerosum_core::gen::{self, Family, GenSpec};
use zerosum_core::harness::{self, BenchConfig};
use zerosum_core::rational::to_ratio_string;
use zerosum_core::{mv, solvers, BimatrixGame, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "zerosum", version, about = "Detect, normalize and solve strictly competitive two-player games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the game's mixed extension is strictly competitive.
    Check { file: PathBuf },
    /// Rescale the first player's payoffs so the game is zero-sum.
    Normalize {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Detect, normalize and solve by linear programming.
    Solve { file: PathBuf },
    /// Sample the mixture-space axioms for the induced preference.
    AuditAxioms {
        file: PathBuf,
        #[arg(long, default_value = "neg-u1")]
        lens: Lens,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Look for a strategically equivalent zero-sum decomposition.
    MvCheck { file: PathBuf },
    /// List equilibria found by support enumeration.
    Equilibria {
        file: PathBuf,
        #[arg(long, default_value_t = solvers::DEFAULT_MAX_DIM)]
        max_dim: usize,
    },
    /// Generate a seeded game.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        bound: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time detection, LP and enumeration over generated games; write CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "disguised-zero-sum,ordinal-not-affine,strategic-zero-sum,uniform")]
        families: Vec<Family>,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5,10,20", value_parser = harness::parse_size)]
        sizes: Vec<(usize, usize)>,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
        seeds: Vec<u64>,
        #[arg(long, default_value_t = solvers::DEFAULT_MAX_DIM)]
        enum_cap: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Serialize)]
struct SolveJson {
    detection: DetectionJson,
    value: String,
    u1_value: String,
    row_strategy: Vec<String>,
    col_strategy: Vec<String>,
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => f.write_str(e),
        }
    }
}

fn read_game(path: &Path) -> Result<BimatrixGame, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    format::parse_game(&text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| CliError::Io(e.to_string()))
}

fn verdict(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Check { file } => {
            let g = read_game(&file)?;
            let r = adversarial::detect_affine(&g);
            emit(out, &DetectionJson::from(&r))?;
            Ok(verdict(r.is_adversarial()))
        }
        Command::Normalize { file, out: target } => {
            let g = read_game(&file)?;
            let r = adversarial::detect_affine(&g);
            let Some(t) = r.transform() else {
                emit(out, &DetectionJson::from(&r))?;
                return Ok(EXIT_NEGATIVE);
            };
            let text = format::game_to_json(&adversarial::to_zero_sum(&g, t));
            match target {
                Some(path) => write_file(&path, &(text + "\n"))?,
                None => writeln!(out, "{text}").map_err(|e| CliError::Io(e.to_string()))?,
            }
            Ok(EXIT_OK)
        }
        Command::Solve { file } => {
            let g = read_game(&file)?;
            let r = adversarial::detect_affine(&g);
            let Some(t) = r.transform() else {
                emit(out, &DetectionJson::from(&r))?;
                return Ok(EXIT_NEGATIVE);
            };
            let solution = solvers::minimax_solve(&adversarial::to_zero_sum(&g, t))?;
            let lp = MinimaxJson::from(&solution);
            emit(
                out,
                &SolveJson {
                    detection: DetectionJson::from(&r),
                    value: lp.value,
                    u1_value: to_ratio_string(&adversarial::to_original_scale(t, &solution.value)),
                    row_strategy: lp.row_strategy,
                    col_strategy: lp.col_strategy,
                },
            )?;
            Ok(EXIT_OK)
        }
        Command::AuditAxioms { file, lens, samples, seed } => {
            if samples == 0 {
                return Err(CliError::Io("--samples must be at least 1".into()));
            }
            let g = read_game(&file)?;
            let report = audit_mixture_axioms(&g, lens, samples, seed);
            emit(out, &report)?;
            Ok(verdict(report.pass))
        }
        Command::MvCheck { file } => {
            let g = read_game(&file)?;
            let d = mv::strategically_zero_sum_detect(&g);
            emit(out, &MvJson::from(d.as_ref()))?;
            Ok(verdict(d.is_some()))
        }
        Command::Equilibria { file, max_dim } => {
            let g = read_game(&file)?;
            let set = solvers::support_enumeration(&g, max_dim)?;
            emit(out, &EquilibriaJson::from(&set))?;
            Ok(EXIT_OK)
        }
        Command::Gen { family, rows, cols, seed, bound, out: target } => {
            let mut spec = GenSpec::new(family, rows, cols, seed);
            spec.value_bound = bound;
            let text = format::game_to_json(&gen::gen(&spec)?);
            match target {
                Some(path) => write_file(&path, &(text + "\n"))?,
                None => writeln!(out, "{text}").map_err(|e| CliError::Io(e.to_string()))?,
            }
            Ok(EXIT_OK)
        }
        Command::Bench { families, sizes, seeds, enum_cap, out: target } => {
            let mut config = BenchConfig::new(families, sizes, seeds);
            config.enum_cap = enum_cap;
            let records = harness::run_bench(&config)?;
            let file = fs::File::create(&target).map_err(|e| CliError::Io(format!("{}: {e}", target.display())))?;
            harness::write_csv(&records, file)?;
            let all_agree = records.iter().filter_map(|r| r.agree).all(|a| a);
            Ok(verdict(all_agree))
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code: 0 positive result, 1 negative result, 2 error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
