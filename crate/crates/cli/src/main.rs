//! Command-line driver: verification suites, dimension and branching
//! reports, bracket evaluation on element files, and exact exports of
//! structure constants and root coordinates.
//!
//! Reports go to standard output as JSON; wall times go to standard error
//! so that output bytes stay identical across same-seed reruns.  Exit
//! codes: 0 on success, 1 when a verification suite finds a failure, 2 for
//! usage, parse, or invariant errors.

use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;
use zornlie::algebra::Algebra;
use zornlie::roots;
use zornlie::schema::{table_to_dto, ElementDto};
use zornlie::structure;
use zornlie::verify::{run_verify, Mode};

#[derive(Parser)]
#[command(
    name = "zornlie",
    version,
    about = "Exact block-matrix models of the exceptional Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

fn parse_algebra(s: &str) -> Result<Algebra, String> {
    Algebra::from_name(s).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sampled,
}

impl ModeArg {
    fn to_mode(self) -> Mode {
        match self {
            ModeArg::Exhaustive => Mode::Exhaustive,
            ModeArg::Sampled => Mode::Sampled,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the verification suite for one algebra and print the report
    Verify {
        #[arg(long, value_parser = parse_algebra)]
        algebra: Algebra,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        /// Lower bound on the sampled checks, where sampling applies
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Time budget deciding exhaustive-versus-sampled fallbacks
        #[arg(long, default_value_t = 3600)]
        budget_secs: u64,
    },
    /// Print every algebra's dimension, computed from its constructed basis
    Dims,
    /// Print the block decomposition of one algebra
    Branching {
        #[arg(long, value_parser = parse_algebra)]
        algebra: Algebra,
    },
    /// Bracket two element files and print the resulting element
    Bracket {
        #[arg(long, value_parser = parse_algebra)]
        algebra: Algebra,
        #[arg(long)]
        lhs: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
    },
    /// Export the sparse structure-constant table
    StructureConstants {
        #[arg(long, value_parser = parse_algebra)]
        algebra: Algebra,
        /// Output file (standard output if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export root or weight coordinates (available for g2 and e6)
    Roots {
        #[arg(long, value_parser = parse_algebra)]
        algebra: Algebra,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Output file (standard output if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    /// A suite ran and found failures; the report already went to stdout.
    Verification,
    /// Bad input: arguments, files, or invariants.
    Usage(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    // die quietly when the read end of a pipe goes away (e.g. `| head`)
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Verify { algebra, mode, samples, seed, budget_secs } => {
            let start = Instant::now();
            let report = run_verify(algebra, mode.to_mode(), samples, seed, budget_secs);
            println!("{}", serde_json::to_string_pretty(&report).map_err(usage)?);
            eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Cmd::Dims => {
            let mut map = serde_json::Map::new();
            for algebra in Algebra::ALL {
                let dim = algebra.basis().len();
                map.insert(algebra.name().to_string(), dim.into());
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::Value::Object(map)).map_err(usage)?
            );
            Ok(())
        }
        Cmd::Branching { algebra } => {
            let parts: Vec<serde_json::Value> = algebra
                .branching()
                .iter()
                .map(|(label, dim)| serde_json::json!({ "label": label, "dim": dim }))
                .collect();
            let total: usize = algebra.branching().iter().map(|p| p.1).sum();
            let doc = serde_json::json!({
                "algebra": algebra.name(),
                "parts": parts,
                "total": total,
            });
            println!("{}", serde_json::to_string_pretty(&doc).map_err(usage)?);
            Ok(())
        }
        Cmd::Bracket { algebra, lhs, rhs } => {
            let x = load_element(&lhs, algebra)?;
            let y = load_element(&rhs, algebra)?;
            let result = ElementDto::from_element(&x.bracket(&y));
            println!("{}", serde_json::to_string_pretty(&result).map_err(usage)?);
            Ok(())
        }
        Cmd::StructureConstants { algebra, out } => {
            let start = Instant::now();
            let build = structure::build_with_report(algebra);
            let problems: Vec<&String> = build
                .antisymmetry_failures
                .iter()
                .chain(&build.closure_failures)
                .chain(&build.invariant_failures)
                .collect();
            if !problems.is_empty() {
                for p in problems {
                    eprintln!("{p}");
                }
                return Err(Failure::Verification);
            }
            let text =
                serde_json::to_string_pretty(&table_to_dto(&build.table)).map_err(usage)?;
            emit(out.as_deref(), &text)?;
            eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
            Ok(())
        }
        Cmd::Roots { algebra, format, out } => {
            let csv = match algebra {
                Algebra::G2 => roots::g2_weights_csv().map_err(usage)?,
                Algebra::E6 => roots::e6_roots_csv(),
                other => {
                    return Err(Failure::Usage(format!(
                        "root export is available for g2 and e6, not {}",
                        other.name()
                    )))
                }
            };
            let text = match format {
                FormatArg::Csv => csv,
                FormatArg::Json => {
                    let mut lines = csv.lines();
                    let header: Vec<&str> =
                        lines.next().unwrap_or("").split(',').collect();
                    let rows: Vec<Vec<&str>> = lines
                        .filter(|l| !l.is_empty())
                        .map(|l| l.split(',').collect())
                        .collect();
                    let doc = serde_json::json!({
                        "algebra": algebra.name(),
                        "header": header,
                        "rows": rows,
                    });
                    serde_json::to_string_pretty(&doc).map_err(usage)?
                }
            };
            emit(out.as_deref(), text.trim_end())?;
            Ok(())
        }
    }
}

fn load_element(path: &Path, algebra: Algebra) -> Result<zornlie::algebra::AlgebraElement, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("reading {}: {e}", path.display())))?;
    let dto: ElementDto = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("parsing {}: {e}", path.display())))?;
    if dto.algebra() != algebra {
        return Err(Failure::Usage(format!(
            "{} holds a {} element, expected {}",
            path.display(),
            dto.algebra().name(),
            algebra.name()
        )));
    }
    dto.to_element()
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::Usage(format!("writing {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}
