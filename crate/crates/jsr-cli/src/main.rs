//! `jsr`: exact joint spectral radius toolkit.
//!
//! Subcommands: `bounds`, `reduce to-integer|to-binary|to-pair`, `certify`,
//! `census`, `stability`. Input is a JSON matrix-set document with exact
//! rational entries; output is JSON (reports, reduced sets) or CSV (census).
//! Exit codes: 0 on success, 1 on input errors, 2 when the product budget
//! is exhausted.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use jsr_core::bounds::{bounds_report, BoundsOptions, NormKind};
use jsr_core::census::{bracket_pair, census_dim3_pairs, run_census};
use jsr_core::doc::{
    binary_expansion_json, bounds_report_json, census_csv, census_summary_json,
    dim3_bracket_row, format_word, pair_lift_json, parse_word, scale_result_json,
    stability_json, value_json, MatrixSetDocument,
};
use jsr_core::finiteness::semi_decide_stability;
use jsr_core::matrix::MatrixSet;
use jsr_core::reductions::{integer_to_binary, scale_to_integer, set_to_pair};
use jsr_core::value::{compare_values, ValueOrdering};
use jsr_core::Error as CoreError;

#[derive(Parser)]
#[command(name = "jsr", version, about = "Exact joint spectral radius toolkit")]
struct Cli {
    /// Cap on exact matrix products per run (default: JSR_PRODUCT_BUDGET or 10^7)
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-depth lower/upper bracketing report for a matrix set
    Bounds {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 8)]
        depth: u32,
        /// Norm for the upper bounds: row-sum or col-sum
        #[arg(long, default_value = "row-sum")]
        norm: String,
        /// Disable duplicate merging and domination pruning
        #[arg(long)]
        no_prune: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Structure-preserving reductions
    Reduce {
        #[command(subcommand)]
        what: ReduceCommand,
    },
    /// Re-validate a certificate word against a set
    Certify {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated member indices, leftmost factor first
        #[arg(long)]
        word: String,
        /// Bracketing depth for the cross-check (default: the word length)
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Classify all pairs of 2x2 binary matrices (CSV); dim 3 emits
    /// bracketing rows only, under an explicit budget
    Census {
        #[arg(long, default_value_t = 2)]
        dim: u32,
        #[arg(long, default_value_t = 20)]
        depth: u32,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Worker threads for the embarrassingly parallel pair loop
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Pair cap for the exploratory dim-3 census
        #[arg(long, default_value_t = 100)]
        limit: usize,
    },
    /// Norm/spectral-radius stability semi-decider
    Stability {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 20)]
        max_depth: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

// variants deliberately share the prefix: they surface as to-integer,
// to-binary, to-pair
#[derive(Subcommand)]
#[allow(clippy::enum_variant_names)]
enum ReduceCommand {
    /// Clear denominators: alpha * set is an integer set
    ToInteger {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Expand an integer set to a binary (or signed-binary) set
    ToBinary {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Lift an m-matrix set to a pair of block matrices
    ToPair {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

enum CliError {
    Core(CoreError),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{}", e),
            CliError::Io(path, e) => write!(f, "{}: {}", path.display(), e),
            CliError::Usage(msg) => write!(f, "{}", msg),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(CoreError::ResourceBudget { .. }) => 2,
            _ => 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code())
        }
    }
}

fn read_set(path: &Path) -> Result<(MatrixSetDocument, MatrixSet), CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    let doc = MatrixSetDocument::parse_json(&bytes)?;
    let set = doc.to_set()?;
    Ok((doc, set))
}

fn emit(output: Option<&Path>, content: &str) -> Result<(), CliError> {
    match output {
        Some(path) => {
            fs::write(path, content).map_err(|e| CliError::Io(path.to_path_buf(), e))
        }
        None => {
            if content.ends_with('\n') {
                print!("{}", content);
            } else {
                println!("{}", content);
            }
            Ok(())
        }
    }
}

fn budget_from(cli_budget: Option<u64>) -> Result<u64, CliError> {
    if let Some(b) = cli_budget {
        return Ok(b);
    }
    match std::env::var("JSR_PRODUCT_BUDGET") {
        Ok(s) => s.parse().map_err(|_| {
            CliError::Usage(format!("JSR_PRODUCT_BUDGET={:?} is not a valid budget", s))
        }),
        Err(_) => Ok(BoundsOptions::default().budget),
    }
}

fn parse_norm(s: &str) -> Result<NormKind, CliError> {
    match s {
        "row-sum" => Ok(NormKind::RowSum),
        "col-sum" => Ok(NormKind::ColSum),
        other => Err(CliError::Usage(format!(
            "unknown norm {:?}; expected row-sum or col-sum",
            other
        ))),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let budget = budget_from(cli.budget)?;
    match cli.command {
        Command::Bounds { input, depth, norm, no_prune, output } => {
            let (doc, set) = read_set(&input)?;
            let opts = BoundsOptions { norm: parse_norm(&norm)?, prune: !no_prune, budget };
            let report = bounds_report(&set, depth, &opts)?;
            let json = bounds_report_json(&report, doc.name.as_deref());
            emit(output.as_deref(), &serde_json::to_string_pretty(&json).expect("valid JSON"))
        }
        Command::Reduce { what } => match what {
            ReduceCommand::ToInteger { input, output } => {
                let (doc, set) = read_set(&input)?;
                let r = scale_to_integer(&set);
                let json = scale_result_json(&r, doc.name.as_deref());
                emit(output.as_deref(), &serde_json::to_string_pretty(&json).expect("valid JSON"))
            }
            ReduceCommand::ToBinary { input, output } => {
                let (doc, set) = read_set(&input)?;
                let exp = integer_to_binary(&set)?;
                let json = binary_expansion_json(&exp, doc.name.as_deref());
                emit(output.as_deref(), &serde_json::to_string_pretty(&json).expect("valid JSON"))
            }
            ReduceCommand::ToPair { input, output } => {
                let (doc, set) = read_set(&input)?;
                let lift = set_to_pair(&set);
                let json = pair_lift_json(&lift, doc.name.as_deref());
                emit(output.as_deref(), &serde_json::to_string_pretty(&json).expect("valid JSON"))
            }
        },
        Command::Certify { input, word, depth, output } => {
            let (doc, set) = read_set(&input)?;
            let word = parse_word(&word)?;
            word.validate(&set)?;
            let product = jsr_core::matrix::evaluate_word(&set, &word)?;
            let value = if set.dim() == 2 {
                let rho = jsr_core::value::spectral_radius_exact_2x2(&product)?;
                jsr_core::value::AlgebraicValue::nth_root_of_surd(
                    rho.as_surd_base().expect("2x2 radius is a surd").clone(),
                    word.len() as u32,
                )
            } else {
                jsr_core::value::AlgebraicValue::nth_root_of_radius(product, word.len() as u32)
            };
            let depth = depth.unwrap_or(word.len() as u32);
            let opts = BoundsOptions { budget, ..BoundsOptions::default() };
            let report = bounds_report(&set, depth, &opts)?;
            let matches_best_lower =
                compare_values(&value, &report.best_lower.value) == ValueOrdering::Equal;
            let json = serde_json::json!({
                "set": doc.name,
                "word": format_word(&word),
                "length": word.len(),
                "value": value_json(&value),
                "depth_checked": depth,
                "matches_best_lower": matches_best_lower,
                "best_lower": {
                    "witness": format_word(&report.best_lower.witness),
                    "value": value_json(&report.best_lower.value),
                },
                "upper_at_depth": value_json(&report.upper_per_t.last().expect("depth >= 1").value),
            });
            emit(output.as_deref(), &serde_json::to_string_pretty(&json).expect("valid JSON"))
        }
        Command::Census { dim, depth, output, jobs, limit } => {
            let opts = BoundsOptions { budget, ..BoundsOptions::default() };
            match dim {
                2 => {
                    let (records, summary) = run_census(depth, &opts, jobs)?;
                    let csv = census_csv(&records);
                    match output.as_deref() {
                        Some(path) => {
                            fs::write(path, &csv)
                                .map_err(|e| CliError::Io(path.to_path_buf(), e))?;
                            let json = census_summary_json(&summary);
                            println!(
                                "{}",
                                serde_json::to_string_pretty(&json).expect("valid JSON")
                            );
                        }
                        None => {
                            print!("{}", csv);
                            eprintln!(
                                "{}",
                                serde_json::to_string(&census_summary_json(&summary))
                                    .expect("valid JSON")
                            );
                        }
                    }
                    Ok(())
                }
                3 => {
                    let csv = dim3_census(depth, limit, &opts)?;
                    emit(output.as_deref(), &csv)
                }
                other => Err(CliError::Usage(format!(
                    "census supports --dim 2 (full classification) and --dim 3 \
                     (bracketing only); got {}",
                    other
                ))),
            }
        }
        Command::Stability { input, max_depth, output } => {
            let (_, set) = read_set(&input)?;
            let opts = BoundsOptions { budget, ..BoundsOptions::default() };
            let verdict = semi_decide_stability(&set, max_depth, &opts)?;
            let json = stability_json(&verdict);
            emit(output.as_deref(), &serde_json::to_string_pretty(&json).expect("valid JSON"))
        }
    }
}

/// Exploratory bracketing census for 3x3 binary pairs: no classification,
/// no correctness claims beyond the per-pair brackets.
fn dim3_census(depth: u32, limit: usize, opts: &BoundsOptions) -> Result<String, CliError> {
    let mut out =
        String::from("member0,member1,lower_exact,lower_decimal,upper_decimal,gap_decimal\n");
    for pair in census_dim3_pairs(limit) {
        let report = bracket_pair(&pair, depth, opts)?;
        out.push_str(&dim3_bracket_row(&pair, &report));
        out.push('\n');
    }
    Ok(out)
}
