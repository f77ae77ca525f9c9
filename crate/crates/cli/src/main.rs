//! `ginv`: exact generalized-inverse computations and theorem verification
//! on complex-rational matrices.
//!
//! Exit codes are part of the interface: 0 success/pass, 1 infrastructure
//! error (I/O, malformed files, bad usage), 2 violated mathematical
//! precondition, 3 check failure, 4 violated law hypothesis.

mod format;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use ginv_core::engine::{self, EngineError};
use ginv_core::suite::{self, CheckResult, GenSpec, PairKind, Verdict};
use ginv_core::{Matrix, MatrixError};

use format::{
    build_report, check_result_repr, read_matrix, write_json, write_matrix, BlocksFile, FileError,
    ReportMeta,
};

const EXIT_INFRA: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_FAIL: u8 = 3;
const EXIT_HYPOTHESIS: u8 = 4;

#[derive(Parser)]
#[command(
    name = "ginv",
    version,
    about = "Exact computation and verification of generalized inverses over complex-rational matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ComputeKind {
    /// Moore–Penrose inverse
    Mp,
    /// Group inverse (index at most 1)
    Group,
    /// Drazin inverse
    Drazin,
    /// Core-EP inverse
    Coreep,
    /// Weak group inverse
    Wg,
    /// m-weak group inverse (requires --m)
    Mwg,
    /// GG inverse
    Gg,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a generalized inverse and write it as a matrix file
    Compute {
        kind: ComputeKind,
        /// Order of the m-weak group inverse (mwg only)
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Run a named checker and print its result as JSON
    Verify {
        /// One of: def11, decomposition, relaxed, polar, additive-law, product-law, blocks
        check: String,
        #[arg(long)]
        input: PathBuf,
        /// Second matrix where the checker needs one (candidate inverse,
        /// decomposition x-part, or law partner)
        #[arg(long)]
        x: Option<PathBuf>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
    },
    /// Split a matrix into its group-invertible and nilpotent parts
    Decompose {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long = "output-x")]
        output_x: PathBuf,
        #[arg(long = "output-y")]
        output_y: PathBuf,
    },
    /// Write the projector block form (p, t, s, n and the c-sequence)
    Blocks {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long)]
        output: PathBuf,
    },
    /// Run the generated-instance verification suite and write a JSON report
    Harness {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
        #[arg(long = "dim-max", value_parser = clap::value_parser!(u64).range(1..=8))]
        dim_max: u64,
        #[arg(long = "index-max")]
        index_max: u64,
        /// Comma-separated list of m values, e.g. --m 1,2,3
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u32).range(1..))]
        m: Vec<u32>,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        report: PathBuf,
        /// Magnitude cap for generated numerators and denominators
        #[arg(long = "entry-bound", default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        entry_bound: u32,
    },
}

enum CliError {
    File(FileError),
    Math(String),
    Usage(String),
}

impl From<FileError> for CliError {
    fn from(e: FileError) -> Self {
        CliError::File(e)
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        CliError::Math(e.to_string())
    }
}

impl From<MatrixError> for CliError {
    fn from(e: MatrixError) -> Self {
        CliError::Math(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_INFRA,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::File(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INFRA)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INFRA)
        }
        Err(CliError::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_PRECONDITION)
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Compute { kind, m, input, output } => cmd_compute(kind, m, &input, &output),
        Command::Verify { check, input, x, m } => cmd_verify(&check, &input, x.as_deref(), m),
        Command::Decompose { input, m, output_x, output_y } => {
            cmd_decompose(&input, m, &output_x, &output_y)
        }
        Command::Blocks { input, m, output } => cmd_blocks(&input, m, &output),
        Command::Harness { trials, dim_max, index_max, m, seed, report, entry_bound } => {
            cmd_harness(trials, dim_max as usize, index_max as usize, &m, seed, &report, entry_bound)
        }
    }
}

fn cmd_compute(
    kind: ComputeKind,
    m: Option<u32>,
    input: &Path,
    output: &Path,
) -> Result<u8, CliError> {
    let a = read_matrix(input)?;
    let (result, gate): (Matrix, CheckResult) = match kind {
        ComputeKind::Mp => {
            let x = engine::moore_penrose(&a);
            let gate = suite::check_penrose(&a, &x);
            (x, gate)
        }
        ComputeKind::Group => {
            let x = engine::group_inverse(&a)?;
            let gate = suite::check_group_gate(&a, &x);
            (x, gate)
        }
        ComputeKind::Drazin => {
            let x = engine::drazin(&a)?;
            let gate = suite::check_drazin_gate(&a, &x);
            (x, gate)
        }
        ComputeKind::Coreep => {
            let x = engine::core_ep(&a)?;
            let gate = suite::check_core_ep_gate(&a, &x);
            (x, gate)
        }
        ComputeKind::Wg => {
            let x = engine::weak_group(&a)?;
            let gate = suite::check_weak_group_gate(&a, &x);
            (x, gate)
        }
        ComputeKind::Mwg => {
            let m = m.ok_or_else(|| CliError::Usage("compute mwg requires --m".into()))?;
            if m == 0 {
                return Err(CliError::Usage("--m must be at least 1".into()));
            }
            let x = engine::m_weak_group(&a, m)?;
            let gate = suite::check_def11(&a, &x, m);
            (x, gate)
        }
        ComputeKind::Gg => {
            let x = engine::gg_inverse(&a)?;
            let gate = suite::check_gg_gate(&a, &x);
            (x, gate)
        }
    };
    write_matrix(output, &result)?;
    print_verdict(&gate);
    Ok(if gate.passed() { 0 } else { EXIT_FAIL })
}

fn print_verdict(r: &CheckResult) {
    let verdict = match r.verdict {
        Verdict::Pass => "pass",
        Verdict::Fail(_) => "FAIL",
        Verdict::HypothesisViolated(_) => "hypothesis violated",
    };
    println!("definitional check {} [{}]: {}", r.check_name, r.paper_ref, verdict);
}

const CHECK_NAMES: &[&str] = &[
    "def11",
    "decomposition",
    "relaxed",
    "polar",
    "additive-law",
    "product-law",
    "blocks",
];

fn cmd_verify(check: &str, input: &Path, x: Option<&Path>, m: u32) -> Result<u8, CliError> {
    let a = read_matrix(input)?;
    let second = |x: Option<&Path>| -> Result<Matrix, CliError> {
        match x {
            Some(p) => Ok(read_matrix(p)?),
            None => Err(CliError::Usage(format!("verify {check} requires --x"))),
        }
    };
    let result = match check {
        "def11" => {
            let candidate = match x {
                Some(p) => read_matrix(p)?,
                None => engine::m_weak_group(&a, m)?,
            };
            suite::check_def11(&a, &candidate, m)
        }
        "decomposition" => {
            let x_part = second(x)?;
            let y_part = a.checked_sub(&x_part)?;
            let d = ginv_core::MwgDecomposition { m, x: x_part, y: y_part };
            suite::check_decomposition(&a, &d)
        }
        "relaxed" => suite::check_relaxed_systems(&a, m),
        "polar" => suite::check_polar(&a, m),
        "additive-law" => suite::check_laws(PairKind::Additive, &a, &second(x)?, m),
        "product-law" => suite::check_laws(PairKind::Product, &a, &second(x)?, m),
        "blocks" => suite::check_blocks_and_commutation(&a, m, m + 1),
        other => {
            return Err(CliError::Usage(format!(
                "unknown check `{other}`; valid checks: {}",
                CHECK_NAMES.join(", ")
            )))
        }
    };
    let repr = check_result_repr(&result);
    println!("{}", serde_json::to_string_pretty(&repr).expect("serializable"));
    Ok(match result.verdict {
        Verdict::Pass => 0,
        Verdict::Fail(_) => EXIT_FAIL,
        Verdict::HypothesisViolated(_) => EXIT_HYPOTHESIS,
    })
}

fn cmd_decompose(input: &Path, m: u32, output_x: &Path, output_y: &Path) -> Result<u8, CliError> {
    let a = read_matrix(input)?;
    let d = engine::mwg_decompose(&a, m)?;
    write_matrix(output_x, &d.x)?;
    write_matrix(output_y, &d.y)?;
    let gate = suite::check_decomposition(&a, &d);
    print_verdict(&gate);
    Ok(if gate.passed() { 0 } else { EXIT_FAIL })
}

fn cmd_blocks(input: &Path, m: u32, output: &Path) -> Result<u8, CliError> {
    let a = read_matrix(input)?;
    let blocks = engine::pierce_blocks(&a, m)?;
    let file = BlocksFile {
        p: format::matrix_to_file(&blocks.p),
        t: format::matrix_to_file(&blocks.t),
        s: format::matrix_to_file(&blocks.s),
        n: format::matrix_to_file(&blocks.block_n),
        c: blocks.c_seq.iter().map(format::matrix_to_file).collect(),
    };
    write_json(output, &file)?;
    println!("wrote projector blocks and c_1..c_{m}");
    Ok(0)
}

fn cmd_harness(
    trials: u32,
    dim_max: usize,
    index_max: usize,
    m_list: &[u32],
    seed: u64,
    report_path: &Path,
    entry_bound: u32,
) -> Result<u8, CliError> {
    let spec = GenSpec { dim: dim_max, index: index_max.min(dim_max), entry_bound, seed };
    let results = suite::run_suite(&spec, trials, m_list)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let meta = ReportMeta {
        seed,
        trials,
        dims: dim_max,
        index_max: spec.index,
        entry_bound,
        m_list: m_list.to_vec(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    };
    let report = build_report(meta, &results);
    write_json(report_path, &report)?;
    println!(
        "{} checks: {} passed, {} failed, {} hypothesis-violated",
        report.summary.total,
        report.summary.passed,
        report.summary.failed,
        report.summary.hypothesis_violated
    );
    Ok(if report.summary.failed == 0 { 0 } else { EXIT_FAIL })
}
